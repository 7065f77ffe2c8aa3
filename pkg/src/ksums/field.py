"""Exact GF(2^r) arithmetic in a fixed polynomial basis, 1 <= r <= 8.

Field elements are plain ints in [0, 2^r): bit k holds the coefficient of
x^k, so 0 and 1 are the additive and multiplicative identities and addition
is xor. A `FieldParams` value pins the basis via its irreducible modulus;
the same int means the same element only under the same modulus.

The default modulus per degree is a fixed low-weight irreducible (see
DEFAULT_MODULI), so serialized tables are bit-exact reproducible. Elements
serialize as lowercase hex of their int value.

The degree cap exists because everything downstream enumerates F_q or F_q^*
exhaustively; a too-large r is rejected loudly, never truncated.
"""

from dataclasses import dataclass
from functools import lru_cache

MAX_DEGREE = 8

# x, x^2+x+1, x^3+x+1, x^4+x+1, x^5+x^2+1, x^6+x+1, x^7+x+1, x^8+x^4+x^3+x+1
DEFAULT_MODULI = {
    1: 0b10,
    2: 0b111,
    3: 0b1011,
    4: 0b10011,
    5: 0b100101,
    6: 0b1000011,
    7: 0b10000011,
    8: 0b100011011,
}


@dataclass(frozen=True)
class FieldParams:
    r: int
    q: int
    modulus: int

    def __repr__(self):
        return f"FieldParams(r={self.r}, modulus={self.modulus:#x})"


def _poly_mod2(a: int, b: int) -> int:
    """Remainder of GF(2)[x] division of a by b (bitmask polynomials)."""
    db = b.bit_length() - 1
    while a.bit_length() - 1 >= db and a:
        a ^= b << (a.bit_length() - 1 - db)
    return a


def _is_irreducible(p: int, r: int) -> bool:
    # exhaustive factor scan: p of degree r is reducible iff some divisor of
    # degree 1..r//2 divides it
    for d in range(1, r // 2 + 1):
        for g in range(1 << d, 1 << (d + 1)):
            if _poly_mod2(p, g) == 0:
                return False
    return True


def binary_field(r: int, modulus: int | None = None) -> FieldParams:
    """Construct FieldParams for GF(2^r), verifying the modulus.

    Raises ValueError for r outside 1..8 or a non-irreducible/wrong-degree
    modulus.
    """
    if not isinstance(r, int) or not 1 <= r <= MAX_DEGREE:
        raise ValueError(f"r out of supported range 1..{MAX_DEGREE}: {r!r}")
    if modulus is None:
        modulus = DEFAULT_MODULI[r]
    if modulus.bit_length() - 1 != r:
        raise ValueError(f"modulus {modulus:#x} does not have degree {r}")
    if not _is_irreducible(modulus, r):
        raise ValueError(f"modulus {modulus:#x} is reducible over GF(2)")
    return FieldParams(r=r, q=1 << r, modulus=modulus)


def check_element(fp: FieldParams, x: int) -> int:
    """Validate that x encodes an element of fp's field."""
    if not isinstance(x, int) or not 0 <= x < fp.q:
        raise ValueError(f"{x!r} is not an element of GF(2^{fp.r})")
    return x


def elements(fp: FieldParams) -> range:
    return range(fp.q)


def units(fp: FieldParams) -> range:
    return range(1, fp.q)


def add(fp: FieldParams, x: int, y: int) -> int:
    """x + y (= x - y in characteristic 2)."""
    check_element(fp, x)
    check_element(fp, y)
    return x ^ y


def mul(fp: FieldParams, x: int, y: int) -> int:
    """Carryless multiply reduced by the field modulus."""
    check_element(fp, x)
    check_element(fp, y)
    q, modulus = fp.q, fp.modulus
    acc = 0
    while y:
        if y & 1:
            acc ^= x
        y >>= 1
        x <<= 1
        if x & q:
            x ^= modulus
    return acc


def power(fp: FieldParams, x: int, e: int) -> int:
    """x^e by square-and-multiply; negative e allowed for x != 0."""
    check_element(fp, x)
    if x == 0:
        if e < 0:
            raise ZeroDivisionError("0 has no negative powers")
        return 1 if e == 0 else 0
    e %= fp.q - 1
    out = 1
    while e:
        if e & 1:
            out = mul(fp, out, x)
        x = mul(fp, x, x)
        e >>= 1
    return out


def inv(fp: FieldParams, x: int) -> int:
    """Multiplicative inverse; inverting 0 is a domain error."""
    check_element(fp, x)
    if x == 0:
        raise ZeroDivisionError(f"0 is not invertible in GF(2^{fp.r})")
    return inv_table(fp)[x]


def trace(fp: FieldParams, x: int) -> int:
    """Absolute trace x + x^2 + ... + x^(2^(r-1)), a bit in {0, 1}."""
    check_element(fp, x)
    return trace_table(fp)[x]


def additive_char(fp: FieldParams, x: int) -> int:
    """Canonical additive character (-1)^trace(x), valued in {+1, -1}."""
    return 1 - 2 * trace(fp, x)


def artin_schreier_image(fp: FieldParams) -> frozenset:
    """Image of x -> x^2 + x; an index-2 subgroup of (F_q, +)."""
    return frozenset(mul(fp, a, a) ^ a for a in elements(fp))


@lru_cache(maxsize=None)
def trace_table(fp: FieldParams) -> tuple:
    out = []
    for x in elements(fp):
        acc = t = x
        for _ in range(fp.r - 1):
            t = mul(fp, t, t)
            acc ^= t
        assert acc in (0, 1), (fp, x, acc)
        out.append(acc)
    return tuple(out)


@lru_cache(maxsize=None)
def char_table(fp: FieldParams) -> tuple:
    """additive_char as a lookup table over all of F_q."""
    return tuple(1 - 2 * t for t in trace_table(fp))


@lru_cache(maxsize=None)
def mul_table(fp: FieldParams) -> tuple:
    """Full q x q multiplication table; at most 64K entries at r = 8."""
    rows = []
    for x in elements(fp):
        rows.append(tuple(mul(fp, x, y) for y in elements(fp)))
    return tuple(rows)


@lru_cache(maxsize=None)
def inv_table(fp: FieldParams) -> tuple:
    out = [0] * fp.q
    for x in units(fp):
        if out[x]:
            continue
        y = 1
        t = x
        e = fp.q - 2
        while e:
            if e & 1:
                y = mul(fp, y, t)
            t = mul(fp, t, t)
            e >>= 1
        out[x] = y
        out[y] = x
    return tuple(out)


def element_hex(fp: FieldParams, x: int) -> str:
    check_element(fp, x)
    return format(x, "x")


def parse_element(fp: FieldParams, text: str) -> int:
    try:
        x = int(text, 16)
    except ValueError:
        raise ValueError(f"not a hex field element: {text!r}") from None
    return check_element(fp, x)
