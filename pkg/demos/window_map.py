# The window map p(z) = c_{z mod n} from [0, q*n] onto the cycle C_n,
# walked through one check at a time.

from digicover import paper_suite as ps
from digicover.classifiers import check_covering, check_pak_pseudocover, check_wl_iso, replay
from digicover.lifting import enumerate_lifts

n, q = 4, 3
p = ps.build_window_map(n, q)
E, B = p.source, p.target
print("source:", len(E), "points, tagged cut points", sorted(x for (x,) in E.boundary))
print("p(5) =", B.label(p((5,))), " p(12) =", B.label(p((12,))))

# fiber neighborhoods against the preimage of N(b), one row per base point
rep = ps.check_assertion_3_10(n, q)
for row in rep.rows:
    print(B.label(row.base), "diff", sorted(x for (x,) in row.diff),
          "equal" if row.equal else "UNEQUAL", "(tainted)" if row.boundary_tainted else "")
print("verdict:", rep.verdict)

# 0 sits over c0, next to c3, but no point of the c3 fiber is next to 0
print("0 in p^-1(N(c3)):", (0,) in rep.rows[3].rhs, " 0 in union:", (0,) in rep.rows[3].lhs)

# not a covering, though every neighborhood maps isomorphically onto its image
cov = check_covering(p)
print("covering:", cov.holds, "condition", cov.violation.condition, "at", E.label(cov.violation.point))
print("replayed:", replay(p, cov))
print("wl-iso:", check_wl_iso(p).holds)

# the path c0 -> c3 has no lift from 0
print("lifts of (c0, c3) from 0:", enumerate_lifts(p, [(0,), (3,)], (0,)))
print("lifts of (c0, c3) from 4:", [L.lift for L in enumerate_lifts(p, [(0,), (3,)], (4,))])

# Pakdaman's weaker definition accepts it
pak = check_pak_pseudocover(p, exhaustive=True)
print("pak-pseudo:", pak.holds, [[E.label(e) for e in s.sheets] for s in pak.decomposition])

c = ps.verify_corollary_3_11(n, q)
print("WL-iso surjection that is not a Han pseudo-covering:", c.reproduced)
