# Test curves and their degree functionals
#
# Four families of rational curves with known degrees on every generator.
# Print each curve on M_{3,1}-bar with its nonzero degrees.

from tautdiv import IRR, LAMBDA, Psi, SurfaceType, enumerate_upsilon_bar, generate_all

S = SurfaceType(3, 1)
symbols = [LAMBDA, Psi(1), IRR] + list(enumerate_upsilon_bar(S))
print("symbols:", ", ".join(s.encode() for s in symbols))
for curve in generate_all(S):
    degrees = {s.encode(): curve.degree(s) for s in symbols if curve.degree(s)}
    print(f"{curve.encode():20s} {degrees}")

# No test curve sees lambda.
print(all(c.degree(LAMBDA) == 0 for c in generate_all(SurfaceType(4, 2))))
