# Low-genus relations and reduction to the basis
#
# In genus 1 and 2 some generators are redundant.  reduce_to_basis rewrites
# them; relation_check confirms each relation pairs to zero with every curve.

from tautdiv import SurfaceType, TautClass, reduce_to_basis, relation_check
from tautdiv.divisors import relation_candidates

S = SurfaceType(2, 2)
print("delta_irr on M_{2,2}  =", reduce_to_basis(TautClass.delta_irr(S)))

T = SurfaceType(1, 3)
for t in T.points:
    print(f"psi_{t} on M_{{1,3}} =", reduce_to_basis(TautClass.psi(T, t)))

for surface in (SurfaceType(1, 4), SurfaceType(2, 3)):
    for name, rel in relation_candidates(surface):
        report = relation_check(rel)
        print(f"{surface}: {name:6s} curves={len(report.values):3d} relation={report.is_relation}")

# lambda vanishes on every curve but is not a relation.
report = relation_check(TautClass.lam(SurfaceType(3, 0)))
print("lambda:", report.passed, report.is_relation)
