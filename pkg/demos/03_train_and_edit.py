# A short training run on synthetic faces, then an edit grid.
#
# Tiny widths and a few hundred steps: the point is the workflow, not the
# quality. Expect a few minutes on one CPU core.

import numpy as np
import torch
from PIL import Image

from magkit.data import ArrayDataset, SynthSpec, split_spec, synth_generate, to_uint8
from magkit.evaluate import evaluate_generator, train_classifier
from magkit.train import TrainConfig, train

torch.set_num_threads(1)

cfg = TrainConfig(resolution=64, g_base_channels=8, g_max_multiplier=8, d_base_channels=8, n_critic=1,
                  num_train=2000, total_steps=300, eval_every=300, out_dir="runs/demo")
trainer = train(cfg, log_every=50)

# A held-out classifier judges whether the edits worked.

spec = SynthSpec(64)
clf = train_classifier(ArrayDataset.synthetic(split_spec(spec, "classifier"), 2000), steps=600)
test = ArrayDataset.synthetic(split_spec(spec, "test"), 64)
report = evaluate_generator(trainer.gen, clf, test, trainer.rel, with_fid=False)["all"]
print({k: v for k, v in report.to_flat().items() if k in ("Avg Acc", "MRE", "PSNR", "SSIM")})

# One row per face: input, then each single-attribute reversal.

gen = trainer.gen.eval()
rows = []
for s in synth_generate(split_spec(spec, "test"), 4):
    x = torch.from_numpy(s.image)[None]
    parts = torch.from_numpy(s.parts)[None]
    cols = [s.image]
    for i in range(len(s.att_s)):
        d = torch.zeros(1, len(s.att_s))
        d[0, i] = 1.0 - 2.0 * s.att_s[i]
        with torch.no_grad():
            cols.append(gen(x, d, parts)[0].numpy())
    rows.append(np.concatenate(cols, axis=2))
Image.fromarray(to_uint8(np.concatenate(rows, axis=1)).transpose(1, 2, 0)).save("edits.png")
print("wrote edits.png")
