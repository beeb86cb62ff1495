# Image metrics on toy inputs with known answers.

import numpy as np

from magkit.metrics import fid, psnr, ssim

rng = np.random.default_rng(0)

# PSNR: every pixel off by 5 grey levels on the 8-bit scale.

a = rng.integers(5, 250, (3, 32, 32)).astype(float)
print("PSNR, |diff| = 5:", round(psnr(a, a + 5, 255), 2), "dB")
print("PSNR, identical:", psnr(a, a, 255), "dB (saturated)")

# SSIM of two flat images: only the luminance term is left.

print("SSIM 0.2 vs 0.4:", round(ssim(np.full((8, 8), 0.2), np.full((8, 8), 0.4)), 4))

# Windowed SSIM reacts to local structure.

img = rng.random((3, 48, 48))
noisy = np.clip(img + rng.normal(0, 0.1, img.shape), 0, 1)
print("windowed SSIM with noise:", round(ssim(img, noisy, mode="windowed"), 3))

# FID between Gaussian fits. Shifting a unit-variance 1-D set by 3 costs 3^2.

z = rng.normal(size=2000)
z = (z - z.mean()) / z.std(ddof=1)
print("FID 1-D shift by 3:", round(fid(z[:, None], z[:, None] + 3), 6))
