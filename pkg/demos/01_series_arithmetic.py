"""Sparse series on a poset: convolution, the identity, and inversion.

Walks through the basic arithmetic of interval functions on the diamond
order — products of matrix units, the zeta function, and its convolution
inverse (whose strict values are the classical inclusion-exclusion
coefficients of the order).
"""

from fialg import FinSeries, RATIONALS, validate_poset

diamond = validate_poset(
    ["bot", "l", "r", "top"],
    [("bot", "l"), ("bot", "r"), ("l", "top"), ("r", "top")],
)

# The unit e_xy is supported on a single comparable pair.  Units compose
# exactly like matrix units: e_xy e_uv survives only when y = u.
e_bl = FinSeries.unit(diamond, RATIONALS, "bot", "l")
e_lt = FinSeries.unit(diamond, RATIONALS, "l", "top")
print("e_bl * e_lt =", list((e_bl * e_lt).entries()))
print("e_lt * e_bl =", list((e_lt * e_bl).entries()), "(empty: the ends mismatch)")

# zeta is 1 on every comparable pair; squaring it counts interval sizes.
zeta = FinSeries.zeta(diamond, RATIONALS)
zz = zeta * zeta
print("\n(zeta * zeta)(bot, top) =", zz.get("bot", "top"),
      "= |[bot, top]| =", len(diamond.interval("bot", "top")))

# zeta has unit diagonal, so it is invertible; its inverse alternates signs
# along the order and satisfies zeta * mu = delta exactly.
mu = zeta.inverse()
print("\nmu entries:")
for x, y, value in mu.entries():
    print(f"  mu({x}, {y}) = {value}")
assert zeta * mu == FinSeries.delta(diamond, RATIONALS)
assert mu * zeta == FinSeries.delta(diamond, RATIONALS)
print("zeta * mu == delta == mu * zeta  (exact)")

# Every series splits into a diagonal part and a strictly-increasing part;
# the split respects multiplication on the diagonal side.
f = zeta + e_bl.scale(3)
f_diag, f_strict = f.split_diag()
print("\ndiagonal part:", list(f_diag.entries()))
print("strict part:  ", list(f_strict.entries()))
assert f_diag + f_strict == f
