# Where may an edit touch the face?
#
# Each attribute is tied to a handful of semantic parts, separately for
# switching it on and switching it off. Combined with soft part masks this
# gives, per pixel, the probability that the pixel has to stay put.

import numpy as np
from PIL import Image

from magkit.data import SynthSpec, synth_sample, to_uint8
from magkit.masks import compute_ar_star, default_relations, influence_region, preserved_mask

rel = default_relations()
print("attributes:", rel.attribute_names)
print("parts:     ", rel.part_names)

# A single synthetic face with its soft part masks.

sample = synth_sample(SynthSpec(resolution=64, seed=1), 3)
print("source attributes:", dict(zip(rel.attribute_names, sample.att_s.tolist())))

# Which parts are editable when Bald is switched on and Eyeglasses off?

d = np.zeros(rel.num_attributes)
d[rel.attribute_names.index("Bald")] = 1
d[rel.attribute_names.index("Eyeglasses")] = -1
star = compute_ar_star(d, rel)
print("editable parts:", [p for p, s in zip(rel.part_names, star) if s])

# The preserved mask is one where nothing may change.

keep = preserved_mask(d, sample.parts, rel)
print("fraction of pixels fully preserved: %.2f" % (keep == 1).mean())

# Influence regions for single flips, side by side with the face.

tiles = [to_uint8(sample.image).transpose(1, 2, 0)]
for name in rel.attribute_names:
    i = rel.attribute_names.index(name)
    direction = "weaken" if sample.att_s[i] else "strengthen"
    region = influence_region(i, direction, sample.parts, rel)
    tiles.append(np.repeat((region * 255).astype(np.uint8)[..., None], 3, axis=2))

Image.fromarray(np.concatenate(tiles, axis=1)).save("influence_regions.png")
print("wrote influence_regions.png: face, then one region per attribute flip")
