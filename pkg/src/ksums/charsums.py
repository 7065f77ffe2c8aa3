"""Character sums over GF(2^r).

m-dimensional Kloosterman sums and their power moments by direct
enumeration (the oracle side of every moment identity in this package),
Kloosterman sums for GL(t,q) by three independent routes, and verification
helpers for the classical identities relating them.

All sums are exact Python ints. Enumerations carry hard budgets and raise
BudgetError instead of degrading.
"""

from fractions import Fraction
from functools import lru_cache
from itertools import combinations_with_replacement, product

from ksums import combinat, field, matgf
from ksums.errors import BudgetError, ConsistencyError
from ksums.field import FieldParams

ENUM_BUDGET = 1 << 24  # max tuples enumerated by one m-dimensional sum
GL_BRUTE_BUDGET = 10 ** 6  # max |GL(t,q)| for the brute-force route

GL_METHODS = ("recursion", "closed_form", "brute_force")


def _scaled_char_table(fp, c):
    lam = field.char_table(fp)
    if c == 1:
        return lam
    return tuple(lam[field.mul(fp, c, y)] for y in field.elements(fp))


def kloosterman(fp: FieldParams, a: int, m: int = 1, c: int = 1) -> int:
    """m-dimensional Kloosterman sum for psi = lambda(c .) at parameter a.

    Direct sum of psi(a1 + ... + am + a/(a1...am)) over (F_q^*)^m.
    """
    field.check_element(fp, a)
    field.check_element(fp, c)
    if a == 0 or c == 0:
        raise ValueError("kloosterman sum needs a != 0 and c != 0")
    if m < 1:
        raise ValueError(f"dimension m must be >= 1, got {m}")
    if fp.q ** m > ENUM_BUDGET:
        raise BudgetError(f"q^m = {fp.q ** m} exceeds enumeration budget {ENUM_BUDGET}")
    lamc = _scaled_char_table(fp, c)
    invt = field.inv_table(fp)
    mt = field.mul_table(fp)
    us = field.units(fp)
    if m == 1:
        row = mt[a]
        return sum(lamc[x ^ row[invt[x]]] for x in us)
    total = 0
    for head in product(us, repeat=m - 1):
        s = 0
        p = a
        for x in head:
            s ^= x
            p = mt[p][invt[x]]
        row = mt[p]
        for x in us:
            total += lamc[s ^ x ^ row[invt[x]]]
    return total


@lru_cache(maxsize=None)
def kloosterman_values(fp: FieldParams, m: int = 1, c: int = 1) -> tuple:
    """Tuple indexed by a with K_m(lambda(c .); a) for a in F_q^*; slot 0 is None."""
    return (None,) + tuple(kloosterman(fp, a, m, c) for a in field.units(fp))


def moment(fp: FieldParams, m: int, h: int, c: int = 1) -> int:
    """Brute-force power moment: sum of K_m(psi;a)^h over a in F_q^*."""
    if h < 0:
        raise ValueError(f"moment exponent must be >= 0, got {h}")
    vals = kloosterman_values(fp, m, c)
    return sum(v ** h for v in vals[1:])


def _kloosterman_gl_recursion(fp, t, k1):
    q = fp.q
    prev, cur = 1, k1  # t = 0, 1
    if t == 0:
        return prev
    for s in range(2, t + 1):
        prev, cur = cur, q ** (s - 1) * cur * k1 + q ** (2 * s - 2) * (q ** (s - 1) - 1) * prev
    return cur


def _kloosterman_gl_closed_form(fp, t, k1):
    # sum over l of q^l K^(t+2-2l) times a sum over weakly decreasing integer
    # tuples j_1 >= ... >= j_(l-1) with 2l-1 <= j_(l-1) and j_1 <= t+1; the
    # inner sum is 1 when l = 1
    if t == 0:
        return 1
    q = fp.q
    total = 0
    for l in range(1, (t + 2) // 2 + 1):
        inner = 0
        for asc in combinations_with_replacement(range(2 * l - 1, t + 2), l - 1):
            js = asc[::-1]
            term = 1
            for nu, j in enumerate(js, start=1):
                term *= q ** (j - 2 * nu) - 1
            inner += term
        total += q ** l * k1 ** (t + 2 - 2 * l) * inner
    value = Fraction(q) ** ((t - 2) * (t + 1) // 2) * total
    assert value.denominator == 1, (fp, t, k1, value)
    return int(value)


@lru_cache(maxsize=None)
def _gl_trace_pairs(fp, t):
    """(Tr w, Tr w^-1) over GL(t,q); enumerated once, reused for every a and c."""
    return tuple((matgf.mat_trace(m), matgf.mat_trace(minv))
                 for m, minv in matgf.gl_matrices(fp, t))


def _kloosterman_gl_brute(fp, t, a, c):
    order = combinat.gl_order(t, fp.q)
    if order > GL_BRUTE_BUDGET:
        raise BudgetError(f"|GL({t},{fp.q})| = {order} exceeds brute-force budget {GL_BRUTE_BUDGET}")
    if t == 0:
        return 1
    lamc = _scaled_char_table(fp, c)
    row = field.mul_table(fp)[a]
    return sum(lamc[tr ^ row[trinv]] for tr, trinv in _gl_trace_pairs(fp, t))


def kloosterman_gl(fp: FieldParams, t: int, a: int, method: str = "all", c: int = 1) -> int:
    """Kloosterman sum for GL(t,q): sum of psi(Tr w + a Tr w^-1) over GL(t,q).

    method selects the recursion, the closed form, or direct enumeration;
    "all" runs every route available at this size and insists they agree.
    K_GL(0) = 1 by convention; t = 1 is the plain Kloosterman sum.
    """
    field.check_element(fp, a)
    field.check_element(fp, c)
    if a == 0 or c == 0:
        raise ValueError("kloosterman_gl needs a != 0 and c != 0")
    if t < 0:
        raise ValueError(f"t must be >= 0, got {t}")
    if method not in GL_METHODS + ("all",):
        raise ValueError(f"unknown method {method!r}")
    # psi = lambda(c .) turns K_GL(psi; a) into K_GL(lambda; c^2 a)
    eff_a = field.mul(fp, field.mul(fp, c, c), a)
    k1 = kloosterman(fp, eff_a)
    if method == "recursion":
        return _kloosterman_gl_recursion(fp, t, k1)
    if method == "closed_form":
        return _kloosterman_gl_closed_form(fp, t, k1)
    if method == "brute_force":
        return _kloosterman_gl_brute(fp, t, a, c)
    got = {
        "recursion": _kloosterman_gl_recursion(fp, t, k1),
        "closed_form": _kloosterman_gl_closed_form(fp, t, k1),
    }
    if combinat.gl_order(t, fp.q) <= GL_BRUTE_BUDGET:
        got["brute_force"] = _kloosterman_gl_brute(fp, t, a, c)
    if len(set(got.values())) != 1:
        raise ConsistencyError("kloosterman_gl methods disagree",
                               t=t, a=a, q=fp.q, **got)
    return got["recursion"]


def verify_carlitz(fp: FieldParams, a: int) -> dict:
    """Check K_2(lambda;a) = K(lambda;a)^2 - q, both sides brute force."""
    if a == 0:
        raise ValueError("needs a != 0")
    k2 = kloosterman_values(fp, 2)[a]
    k1 = kloosterman_values(fp)[a]
    rhs = k1 ** 2 - fp.q
    return {"a": a, "k2": k2, "k1_squared_minus_q": rhs, "ok": k2 == rhs}


def verify_power_invariance(fp: FieldParams, a: int, s: int) -> dict:
    """Check K(lambda; a^(2^s)) = K(lambda; a)."""
    if s < 0:
        raise ValueError(f"s must be >= 0, got {s}")
    if a == 0:
        raise ValueError("needs a != 0")
    vals = kloosterman_values(fp)
    lhs = vals[field.power(fp, a, 2 ** s)]
    rhs = vals[a]
    return {"a": a, "s": s, "lhs": lhs, "rhs": rhs, "ok": lhs == rhs}


def verify_theta_identities(fp: FieldParams, beta: int, b: int | None = None) -> dict:
    """Evaluate the Artin-Schreier denominator sums against Kloosterman sums.

    Part (a): sum over alpha outside {0,1} of lambda(beta/(alpha^2+alpha))
    equals K(lambda;beta) - 1. Part (b), for b outside the Artin-Schreier
    image (so x^2+x+b is irreducible): summing over all alpha with
    denominator alpha^2+alpha+b gives -K(lambda;beta) - 1.
    """
    field.check_element(fp, beta)
    if beta == 0:
        raise ValueError("beta must be nonzero")
    lam = field.char_table(fp)
    invt = field.inv_table(fp)
    k1 = kloosterman_values(fp)[beta]
    out = {"beta": beta, "k1": k1}
    lhs_a = 0
    for alpha in field.elements(fp):
        if alpha in (0, 1):
            continue
        d = field.mul(fp, alpha, alpha) ^ alpha
        lhs_a += lam[field.mul(fp, beta, invt[d])]
    out["part_a"] = {"lhs": lhs_a, "rhs": k1 - 1, "ok": lhs_a == k1 - 1}
    if b is not None:
        field.check_element(fp, b)
        if b in field.artin_schreier_image(fp):
            raise ValueError(f"b = {b} is of the form alpha^2 + alpha; "
                             "x^2 + x + b is not irreducible")
        lhs_b = 0
        for alpha in field.elements(fp):
            d = field.mul(fp, alpha, alpha) ^ alpha ^ b
            lhs_b += lam[field.mul(fp, beta, invt[d])]
        out["part_b"] = {"lhs": lhs_b, "rhs": -k1 - 1, "ok": lhs_b == -k1 - 1}
    out["ok"] = all(part["ok"] for key, part in out.items() if key.startswith("part_"))
    return out


def verify_twisted_sum(fp: FieldParams, beta: int, m: int) -> dict:
    """Check sum over a != 0 of lambda(a beta) K_m(lambda;a) against its closed form.

    The closed form is q K_(m-1)(lambda; 1/beta) + (-1)^(m+1) for beta != 0
    and (-1)^(m+1) for beta = 0, where K_0(lambda; x) means lambda(x).
    (-a beta = a beta in characteristic 2.)
    """
    field.check_element(fp, beta)
    if m < 1:
        raise ValueError(f"m must be >= 1, got {m}")
    lam = field.char_table(fp)
    vals = kloosterman_values(fp, m)
    lhs = sum(lam[field.mul(fp, a, beta)] * vals[a] for a in field.units(fp))
    if beta == 0:
        rhs = (-1) ** (m + 1)
    else:
        binv = field.inv(fp, beta)
        km1 = lam[binv] if m == 1 else kloosterman(fp, binv, m - 1)
        rhs = fp.q * km1 + (-1) ** (m + 1)
    return {"beta": beta, "m": m, "lhs": lhs, "rhs": rhs, "ok": lhs == rhs}


def kloosterman_range(fp: FieldParams) -> set:
    """Values K(lambda; .) takes on F_q^*: integers t = -1 (mod 4), t^2 < 4q.

    Only valid for r >= 2 (for q = 2 the single value is +1, outside this
    description).
    """
    if fp.r < 2:
        raise ValueError("kloosterman_range needs r >= 2")
    q = fp.q
    bound = 1
    while (bound + 1) ** 2 < 4 * q:
        bound += 1
    return {t for t in range(-bound, bound + 1) if t % 4 == 3 and t * t < 4 * q}
