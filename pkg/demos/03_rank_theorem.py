# Linear independence of the canonical basis, witnessed by exact ranks
#
# The pairing matrix has one row per test curve plus the formal lambda row,
# and one column per basis class.  Full column rank means the basis classes
# are numerically independent.

from tautdiv import SurfaceType, build_matrix, independence_certificate, rank_table

m = build_matrix(SurfaceType(3, 0))
print("columns:", m.column_labels)
for label, row in zip(m.row_labels, m.entries):
    print(f"  {label:14s}", [int(x) for x in row])

cert = independence_certificate(m)
print("witness rows:", cert.row_labels, "determinant:", cert.determinant)

# Dropping the lambda row leaves lambda in the kernel.
print(independence_certificate(m.without_axiom(), ["lambda"]).kernel)

print()
print("g,n,upsilon,rank,expected,match")
for r in rank_table(4, 4):
    print(",".join(str(r[k]) for k in ("g", "n", "upsilon", "rank", "expected", "match")))
