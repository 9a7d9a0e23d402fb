# Boundary divisors of M_{g,n}-bar
#
# Every boundary divisor except the irreducible one is labelled by a splitting
# of the genus and of the marked points into two sides.  Each unordered pair
# is stored once, through the side of smaller genus.

from tautdiv import SurfaceType, canonicalize, enumerate_upsilon_bar, enumerate_upsilon_bar_ext

# M_{0,4}: the three ways to split four points two-and-two.
for b in enumerate_upsilon_bar(SurfaceType(0, 4)):
    print(b.encode(), "   ", b)

# The same unordered pair, entered from either side, gives one label.
S = SurfaceType(3, 0)
print(canonicalize((2, ()), S) == canonicalize((1, ()), S))

# Point classes [0,{t}] are formal: they stand for -psi_t.
print([x.encode() for x in enumerate_upsilon_bar_ext(SurfaceType(1, 2))])

# How many boundary classes are there?
print()
print("  g\\n " + "".join(f"{n:5d}" for n in range(7)))
for g in range(6):
    row = []
    for n in range(7):
        row.append(f"{len(enumerate_upsilon_bar(SurfaceType(g, n))):5d}" if 2 * g - 2 + n > 0 else "    -")
    print(f"{g:5d} " + "".join(row))
