# Six morphism classes on a handful of small maps.

from digicover import DigitalMap, classify, gen_cycle, gen_interval
from digicover.image import CU, DigitalImage
from digicover.paper_suite import build_doubling_map, build_window_map

C4 = gen_cycle(4)
maps = {
    "doubling C8 -> C4": build_doubling_map(4),
    "window [0,8] -> C4": build_window_map(4, 2),
    "fold [0,2] -> [0,1]": DigitalMap(gen_interval(0, 2), gen_interval(0, 1),
                                     {(0,): (0,), (1,): (1,), (2,): (0,)}),
    "constant [0,3] -> point": DigitalMap(gen_interval(0, 3), DigitalImage([(0, 0)], CU(2)),
                                          {(z,): (0, 0) for z in range(4)}),
}

# a square under 8-adjacency is a complete graph; folding it onto an edge
sq = DigitalImage([(0, 0), (0, 1), (1, 0), (1, 1)], CU(2))
maps["K4 -> K2"] = DigitalMap(sq, gen_interval(0, 1), {(0, 0): (0,), (0, 1): (1,), (1, 0): (1,), (1, 1): (0,)})

for name, p in maps.items():
    v = classify(p)
    marks = "  ".join(f"{k.value}={'y' if r.holds else 'n'}" for k, r in v.items())
    print(f"{name:26s} {marks}")

# a failing verdict says which condition broke and where
v = classify(maps["window [0,8] -> C4"])
for k, r in v.items():
    if not r.holds:
        print(k.value, r.violation)
