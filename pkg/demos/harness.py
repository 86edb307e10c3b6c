# The equivalence harness: every continuous surjection between small connected
# images, plus seeded random ones, checked against the class relations.

import time

from digicover.harness import exhaustive_images, run_equivalence_harness
from digicover.report import harness_text

imgs = exhaustive_images(4)
print(len(imgs), "connected images with at most 4 points")

t = time.perf_counter()
summary = run_equivalence_harness(max_points=4, samples=500, seed=1)
print("\n".join(harness_text(summary)))
print(f"{time.perf_counter() - t:.1f}s")

# coverings, local isos and Han pseudo-coverings always come out equal
for k, n in summary.class_counts.items():
    print(f"{k:12s}{n:6d} / {summary.instances}")
