"""Binary trace codes cut out by double cosets of O+(2n,q).

Four families of cells are singled out: the ones at index n-1 and n-2
(codimension 1 and 2 below the top), with sign label '+' for even n and '-'
for odd n. Each family carries a pair of exact constants (scale, cofactor)
with scale * cofactor = |cell|: the cell's character sum at parameter a is
scale * K(lambda;a) for codimension 1 and scale * (K(lambda;a)^2 + q^2 - q)
for codimension 2. The cofactor is an exact Fraction; for some n it picks up
a 1/q (e.g. codim 1, n = 3), while the scale and every downstream count stay
integral.

The code of a family is the set of binary vectors orthogonal (over F_q) to
the vector of element traces in canonical cell order; its dual is the q
vectors (tr(a Tr g_1), ..., tr(a Tr g_N)). Everything about the code is a
function of the trace multiplicity map beta -> #{w in cell : Tr w = beta},
which has both a closed form and an enumeration route.

The weight distribution is computed by a DP over (count, partial F_q-sum)
states. Since nu repetitions of beta contribute nu*beta = (nu mod 2)*beta in
characteristic 2, each beta's binomial choices split into even/odd
generating polynomials and the unbounded multinomial sum collapses to
O(q * N) truncated polynomial updates.
"""

import math
from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from ksums import charsums, combinat, field, orthogroup
from ksums.combinat import binom, stirling2
from ksums.errors import BudgetError, ConsistencyError
from ksums.field import FieldParams

FULL_DISTRIBUTION_CAP = 10 ** 4  # single-coefficient queries stay available above

FAMILY_LABELS = ("dc1+", "dc1-", "dc2+", "dc2-")


@dataclass(frozen=True)
class DoubleCosetFamily:
    """One of the four cell families P+ s_(n-codim) P+ with parity-tied sign."""

    codim: int  # 1 or 2
    sign: str  # '+' iff n even
    n: int
    fp: FieldParams

    def __post_init__(self):
        if self.codim not in (1, 2):
            raise ValueError(f"codim must be 1 or 2, got {self.codim}")
        if self.sign not in "+-":
            raise ValueError(f"sign must be '+' or '-', got {self.sign!r}")
        even = self.n % 2 == 0
        if self.sign == "+" and (not even or self.n < 2):
            raise ValueError(f"'+' families need even n >= 2, got n={self.n}")
        if self.sign == "-" and even:
            raise ValueError(f"'-' families need odd n, got n={self.n}")
        if self.sign == "-" and self.codim == 1 and self.n < 1:
            raise ValueError(f"dc1- needs n >= 1, got n={self.n}")
        if self.sign == "-" and self.codim == 2 and self.n < 3:
            raise ValueError(f"dc2- needs n >= 3, got n={self.n}")

    @property
    def cell_index(self) -> int:
        return self.n - self.codim

    @property
    def label(self) -> str:
        return f"dc{self.codim}{self.sign}"

    def __repr__(self):
        return f"DoubleCosetFamily({self.label}, n={self.n}, q={self.fp.q})"


def parse_family(label: str, n: int, fp: FieldParams) -> DoubleCosetFamily:
    if label not in FAMILY_LABELS:
        raise ValueError(f"unknown family {label!r}; expected one of {FAMILY_LABELS}")
    return DoubleCosetFamily(codim=int(label[2]), sign=label[3], n=n, fp=fp)


@dataclass(frozen=True)
class FamilyConstants:
    scale: int  # multiplier of the Kloosterman term in the cell character sum
    cofactor: Fraction  # scale * cofactor = size; may carry a 1/q power
    size: int


def _qpow(q: int, num: int) -> Fraction:
    return Fraction(q) ** num


@lru_cache(maxsize=None)
def family_constants(f: DoubleCosetFamily) -> FamilyConstants:
    q, n = f.fp.q, f.n
    if f.codim == 1:
        qb = combinat.q_binomial(n, 1, q)
        if f.sign == "+":
            a = _qpow(q, (5 * n * n - 6 * n) // 4) * qb
            b = _qpow(q, (n - 2) ** 2 // 4)
            for j in range(1, n // 2 + 1):
                a *= q ** (2 * j - 1) - 1
                b *= q ** (2 * j) - 1
        else:
            a = _qpow(q, (5 * n * n - 4 * n - 1) // 4) * qb
            b = _qpow(q, (n * n - 6 * n + 5) // 4) * (q ** n - 1)
            for j in range(1, (n - 1) // 2 + 1):
                a *= q ** (2 * j - 1) - 1
                b *= q ** (2 * j) - 1
    else:
        qb = combinat.q_binomial(n, 2, q)
        if f.sign == "+":
            a = _qpow(q, (5 * n * n - 6 * n) // 4) * qb
            b = _qpow(q, (n * n - 8 * n + 12) // 4) * (q ** (n - 1) - 1) * (q ** n - 1)
            for j in range(1, (n - 2) // 2 + 1):
                a *= q ** (2 * j - 1) - 1
                b *= q ** (2 * j) - 1
        else:
            a = _qpow(q, (5 * n * n - 8 * n + 3) // 4) * qb
            b = _qpow(q, (n - 3) ** 2 // 4) * (q ** n - 1)
            for j in range(1, (n - 1) // 2 + 1):
                a *= q ** (2 * j - 1) - 1
                b *= q ** (2 * j) - 1
    size = a * b
    if a.denominator != 1 or size.denominator != 1:
        raise ConsistencyError("family constants must multiply to an integer",
                               family=f.label, n=n, q=q, a=a, b=b)
    return FamilyConstants(scale=int(a), cofactor=b, size=int(size))


def enumerable(f: DoubleCosetFamily) -> bool:
    size = orthogroup.parabolic_order(f.n, f.fp.q)
    return size * size <= orthogroup.PRODUCT_BUDGET


def family_cell(f: DoubleCosetFamily) -> orthogroup.BruhatCell:
    return orthogroup.bruhat_cell(f.fp, f.n, f.cell_index)


def trace_multiplicities(f: DoubleCosetFamily, mode: str = "formula") -> dict:
    """Map beta -> #{w in the cell : Tr w = beta}, over all beta in F_q.

    Formula mode evaluates the closed form driven by tr(1/beta) (codim 1) or
    K(lambda; 1/beta) (codim 2); brute_force mode histograms the materialized
    cell. Zero counts are kept explicit.
    """
    fp = f.fp
    if mode == "brute_force":
        hist = orthogroup.cell_trace_histogram(fp, f.n, f.cell_index)
        return {beta: hist.get(beta, 0) for beta in field.elements(fp)}
    if mode != "formula":
        raise ValueError(f"unknown mode {mode!r}")
    consts = family_constants(f)
    q = fp.q
    out = {}
    for beta in field.elements(fp):
        if f.codim == 1:
            if beta == 0:
                adj = 1
            elif field.trace(fp, field.inv(fp, beta)) == 0:
                adj = q + 1
            else:
                adj = 1 - q
        else:
            if beta == 0:
                adj = q ** 3 - q ** 2 - 1
            else:
                adj = q * charsums.kloosterman_values(fp)[field.inv(fp, beta)] - q ** 2 - 1
        num = consts.size + consts.scale * adj
        cnt, rem = divmod(num, q)
        if rem or cnt < 0:
            raise ConsistencyError("trace multiplicity must be a nonnegative integer",
                                   family=f.label, n=f.n, q=q, beta=beta, num=num)
        out[beta] = cnt
    return out


@lru_cache(maxsize=None)
def ordered_traces(f: DoubleCosetFamily) -> tuple:
    """Tr g_j for the cell elements in canonical (packed-key) order."""
    cell = family_cell(f)
    fp = f.fp
    n2 = 2 * f.n
    mask = fp.q - 1
    shifts = [fp.r * (n2 * n2 - 1 - i * (n2 + 1)) for i in range(n2)]
    out = []
    for key in cell.elements:
        tr = 0
        for sh in shifts:
            tr ^= (key >> sh) & mask
        out.append(tr)
    return tuple(out)


def dual_codeword(f: DoubleCosetFamily, a: int) -> tuple:
    """The bit vector (tr(a Tr g_1), ..., tr(a Tr g_N)); additive in a."""
    fp = f.fp
    field.check_element(fp, a)
    trt = field.trace_table(fp)
    return tuple(trt[field.mul(fp, a, t)] for t in ordered_traces(f))


def dual_kernel(f: DoubleCosetFamily) -> frozenset:
    """All a with c(a) = 0: those with tr(a beta) = 0 on the trace support."""
    fp = f.fp
    support = [beta for beta, cnt in trace_multiplicities(f).items() if cnt]
    return frozenset(a for a in field.elements(fp)
                     if all(field.trace(fp, field.mul(fp, a, beta)) == 0
                            for beta in support))


def dual_weight(f: DoubleCosetFamily, a: int, mode: str = "formula") -> int:
    """Hamming weight of the dual codeword at a != 0.

    direct mode counts ones in the materialized vector; formula mode
    evaluates (size - scale*K)/2 for codim 1 and, for codim 2, both the
    K^2 form and the 2-dimensional-Kloosterman form, insisting they agree.
    """
    fp = f.fp
    field.check_element(fp, a)
    if a == 0:
        raise ValueError("dual weights are defined for a != 0")
    if mode == "direct":
        return sum(dual_codeword(f, a))
    if mode != "formula":
        raise ValueError(f"unknown mode {mode!r}")
    consts = family_constants(f)
    q = fp.q
    k1 = charsums.kloosterman_values(fp)[a]
    if f.codim == 1:
        num = consts.size - consts.scale * k1
    else:
        num = consts.size - consts.scale * (q * q - q + k1 * k1)
        k2 = charsums.kloosterman_values(fp, 2)[a]
        alt = consts.size - consts.scale * (q * q + k2)
        if num != alt:
            raise ConsistencyError("codim-2 weight forms disagree",
                                   family=f.label, a=a, k_form=num, k2_form=alt)
    w, rem = divmod(num, 2)
    if rem or w < 0:
        raise ConsistencyError("dual weight must be a nonnegative integer",
                               family=f.label, a=a, num=num)
    return w


def _poly_mul(p, s, cap):
    out = [0] * (min(len(p) + len(s) - 1, cap + 1))
    for i, pi in enumerate(p):
        if not pi:
            continue
        for j, sj in enumerate(s):
            if i + j > cap:
                break
            if sj:
                out[i + j] += pi * sj
    return out


def weight_distribution(counts, j_max: int | None = None) -> list:
    """Weight distribution of the code determined by a trace multiplicity map.

    Entry j counts binary vectors that pick nu_beta ones among the count(beta)
    positions of each beta with sum of nu_beta equal to j and sum of
    nu_beta * beta zero in F_q. Truncate with j_max for single-coefficient
    queries on astronomically long codes.
    """
    total = sum(counts.values())
    if any(c < 0 for c in counts.values()):
        raise ValueError("multiplicities must be nonnegative")
    if j_max is None:
        if total > FULL_DISTRIBUTION_CAP:
            raise BudgetError(
                f"full distribution of length {total} exceeds cap {FULL_DISTRIBUTION_CAP}; "
                "query single coefficients via j_max")
        cap = total
    else:
        if j_max < 0:
            raise ValueError(f"j_max must be >= 0, got {j_max}")
        cap = min(j_max, total)
    state = {0: [1]}
    for beta, cnt in sorted(counts.items()):
        if cnt == 0:
            continue
        top = min(cnt, cap)
        even = [binom(cnt, v) if v % 2 == 0 else 0 for v in range(top + 1)]
        odd = [binom(cnt, v) if v % 2 == 1 else 0 for v in range(top + 1)]
        new = {}
        for s, poly in state.items():
            for shift, part in ((0, even), (beta, odd)):
                dest = s ^ shift
                prod = _poly_mul(poly, part, cap)
                if dest in new:
                    acc = new[dest]
                    if len(acc) < len(prod):
                        acc.extend([0] * (len(prod) - len(acc)))
                    for i, v in enumerate(prod):
                        acc[i] += v
                else:
                    new[dest] = prod
        state = new
    out = state.get(0, [0])
    out = list(out) + [0] * (cap + 1 - len(out))
    return out[:cap + 1]


def weight_distribution_macwilliams(f: DoubleCosetFamily) -> list:
    """Full weight distribution via the transform of the dual enumerator.

    Sums Krawtchouk values over all q parameters a (weight 0 at a = 0); the
    division by q is exact whether or not a -> c(a) is injective, because a
    kernel of size 2 double-counts a dual code of half the size.
    """
    consts = family_constants(f)
    n = consts.size
    if n > FULL_DISTRIBUTION_CAP:
        raise BudgetError(f"length {n} exceeds cap {FULL_DISTRIBUTION_CAP}")
    fp = f.fp
    weights = Counter({0: 1})
    for a in field.units(fp):
        weights[dual_weight(f, a, "formula")] += 1
    out = []
    for j in range(n + 1):
        acc = 0
        for w, mult in weights.items():
            acc += mult * sum((-1) ** i * binom(w, i) * binom(n - w, j - i)
                              for i in range(min(w, j) + 1))
        cj, rem = divmod(acc, fp.q)
        if rem or cj < 0:
            raise ConsistencyError("transform coefficient must be a nonnegative integer",
                                   family=f.label, j=j, acc=acc)
        out.append(cj)
    return out


def dual_weight_distribution(f: DoubleCosetFamily) -> list:
    """Codeword-weight histogram of the dual code {c(a)}; needs injectivity."""
    if dual_kernel(f) != frozenset({0}):
        raise ValueError(f"{f.label}(n={f.n}, q={f.fp.q}): a -> c(a) is not injective")
    consts = family_constants(f)
    out = [0] * (consts.size + 1)
    out[0] = 1
    for a in field.units(f.fp):
        out[dual_weight(f, a, "formula")] += 1
    return out


def pless_check(code_weights, dual_weights, k: int, h: int) -> dict:
    """Power-moment identity for a binary [n, k] code against its dual.

    code_weights[j] counts codewords of weight j in the code, dual_weights[j]
    in the dual; both lists have length n+1. Returns both exact sides.
    """
    if len(code_weights) != len(dual_weights):
        raise ValueError("code and dual weight lists must have equal length")
    if h < 0:
        raise ValueError(f"h must be >= 0, got {h}")
    n = len(code_weights) - 1
    lhs = sum(j ** h * bj for j, bj in enumerate(code_weights))
    rhs = Fraction(0)
    for j in range(min(n, h) + 1):
        if not dual_weights[j]:
            continue
        inner = Fraction(0)
        for t in range(j, h + 1):
            inner += (math.factorial(t) * stirling2(h, t)
                      * binom(n - j, n - t) * Fraction(2) ** (k - t))
        rhs += (-1) ** j * dual_weights[j] * inner
    ok = rhs.denominator == 1 and lhs == int(rhs)
    return {"h": h, "lhs": lhs, "rhs": rhs if rhs.denominator != 1 else int(rhs), "ok": ok}
