"""
Polynomial rings shared by the change of variables and the symmetric-function machinery
"""
from typing import List, Optional

from sympy.polys.domains import QQ
from sympy.polys.ring_series import rs_exp, rs_mul, rs_pow, rs_trunc
from sympy.polys.rings import PolyElement, ring

from errors import InvalidInputError

# z-series after t = z e^(-m(m+1)z), x = (1+u) e^(-mzu); x survives only between the two substitutions
ZRING, Z, ZX, U, ZY = ring("z,x,u,y", QQ)

# Coefficients of a z-series: polynomials (or fractions) in u and y
URING, UU, UY = ring("u,y", QQ)

# Phi tables: z-series whose coefficients are polynomials in v and y
VRING, VZ, V, VY = ring("z,v,y", QQ)

# m = 2 root arithmetic through u = (s^2 - 1)/4, so that sqrt(1 + 4u) = s
SRING, S, SZ, SY = ring("s,z,y", QQ)


def gen_named(ring_, name: str) -> PolyElement:
    """Generator of ring_ called name"""
    names = [str(s) for s in ring_.symbols]
    if name not in names:
        raise InvalidInputError(f"ring {ring_} has no generator {name}")
    return ring_.gens[names.index(name)]


def z_gen(poly: PolyElement) -> PolyElement:
    """The generator z of the ring holding poly"""
    return gen_named(poly.ring, "z")


def zmul(a: PolyElement, b: PolyElement, prec: int) -> PolyElement:
    """Product truncated below z^prec"""
    return rs_mul(a, b, z_gen(a), prec)


def zexp(arg: PolyElement, prec: int) -> PolyElement:
    """exp(arg) truncated below z^prec; arg must vanish at z = 0"""
    if not arg:
        return arg.ring.one
    return rs_exp(arg, z_gen(arg), prec)


def ztrunc(poly: PolyElement, prec: int) -> PolyElement:
    """Drop the terms of z-degree >= prec"""
    return rs_trunc(poly, z_gen(poly), prec)


def zpow(base: PolyElement, k: int, prec: int) -> PolyElement:
    """base^k truncated below z^prec"""
    if k == 0:
        return ztrunc(base.ring.one, prec)
    return rs_pow(base, k, z_gen(base), prec)


def z_coefficients(poly: PolyElement, prec: int) -> List[PolyElement]:
    """[z^0]poly .. [z^(prec-1)]poly, each still in the ring of poly"""
    gen = z_gen(poly)
    return [poly.coeff_wrt(gen, n) for n in range(prec)]


def move(poly: PolyElement, target) -> PolyElement:
    """Re-home a polynomial in another ring, matching generators by name"""
    return poly.set_ring(target)


def z_valuation(poly: PolyElement) -> Optional[int]:
    """Lowest power of z present, None for zero"""
    if not poly:
        return None
    index = poly.ring.gens.index(z_gen(poly))
    return min(monom[index] for monom in poly.itermonoms())
