"""One-shot cross-validation matrix over all desk-scale instances.

Every check pits a closed form against an independent route (enumeration,
brute-force summation, or a second formula) and records exact expected and
actual values as decimal strings. The set of checks is a deterministic
function of (max_r, max_n, h_max); report rows are sorted by check name.
"""

from dataclasses import dataclass, field as dc_field

from ksums import charsums, coset_codes, field, moments, orthogroup
from ksums.coset_codes import parse_family

# second irreducible of each degree, for basis-independence checks
ALT_MODULI = {3: 0b1101, 4: 0b11001, 5: 0b101001, 6: 0b1011011, 7: 0b10001001, 8: 0b101001101}


@dataclass
class Check:
    name: str
    params: dict
    expected: str
    actual: str
    passed: bool


@dataclass
class Report:
    checks: list = dc_field(default_factory=list)

    def add(self, name, params, expected, actual):
        expected, actual = str(expected), str(actual)
        self.checks.append(Check(name, params, expected, actual, expected == actual))

    def summary(self):
        passed = sum(1 for c in self.checks if c.passed)
        return {"total": len(self.checks), "passed": passed,
                "failed": len(self.checks) - passed}

    def as_dict(self):
        rows = sorted(self.checks, key=lambda c: (c.name, sorted(c.params.items())))
        return {
            "checks": [{"name": c.name, "params": c.params, "expected": c.expected,
                        "actual": c.actual, "pass": c.passed} for c in rows],
            "summary": self.summary(),
        }


def _field_checks(rep, fps):
    for fp in fps:
        q = fp.q
        bad = [c for c in field.elements(fp)
               if sum(field.additive_char(fp, field.mul(fp, c, x)) for x in field.elements(fp))
               != (q if c == 0 else 0)]
        rep.add("field.char_orthogonality", {"r": fp.r}, "[]", bad)
        rep.add("field.trace_onto_count", {"r": fp.r}, q // 2,
                sum(field.trace_table(fp)))
        image = field.artin_schreier_image(fp)
        zeros = frozenset(x for x in field.elements(fp) if field.trace(fp, x) == 0)
        rep.add("field.artin_schreier_is_trace_kernel", {"r": fp.r},
                sorted(zeros), sorted(image))
        if fp.r in ALT_MODULI:
            alt = field.binary_field(fp.r, ALT_MODULI[fp.r])
            rep.add("field.basis_independent_kloosterman", {"r": fp.r},
                    sorted(charsums.kloosterman_values(fp)[1:]),
                    sorted(charsums.kloosterman_values(alt)[1:]))


def _charsum_checks(rep, fps, h_max):
    for fp in fps:
        q = fp.q
        vals = charsums.kloosterman_values(fp)[1:]
        rep.add("charsums.weil_bound", {"r": fp.r}, "[]",
                [v for v in vals if v * v >= 4 * q])
        rep.add("charsums.carlitz", {"r": fp.r}, "[]",
                [a for a in field.units(fp) if not charsums.verify_carlitz(fp, a)["ok"]])
        rep.add("charsums.power_invariance", {"r": fp.r}, "[]",
                [(a, s) for a in field.units(fp) for s in range(4)
                 if not charsums.verify_power_invariance(fp, a, s)["ok"]])
        bad_theta = [b for b in field.units(fp)
                     if not charsums.verify_theta_identities(fp, b)["ok"]]
        outside = min(set(field.elements(fp)) - set(field.artin_schreier_image(fp)))
        bad_theta += [(b, outside) for b in field.units(fp)
                      if not charsums.verify_theta_identities(fp, b, outside)["ok"]]
        rep.add("charsums.theta_identities", {"r": fp.r}, "[]", bad_theta)
        rep.add("charsums.twisted_sum", {"r": fp.r}, "[]",
                [(b, m) for b in field.elements(fp) for m in (1, 2)
                 if not charsums.verify_twisted_sum(fp, b, m)["ok"]])
        if fp.r >= 2:
            rep.add("charsums.value_range", {"r": fp.r},
                    sorted(charsums.kloosterman_range(fp)), sorted(set(vals)))
        tmax = 3 if q == 2 else 2
        for t in range(tmax + 1):
            for a in field.units(fp):
                rep.add("charsums.gl_methods_agree", {"r": fp.r, "t": t, "a": a},
                        charsums.kloosterman_gl(fp, t, a, "recursion"),
                        charsums.kloosterman_gl(fp, t, a, "all"))
        for t in range(4, 7):
            rep.add("charsums.gl_closed_form", {"r": fp.r, "t": t}, "[]",
                    [a for a in field.units(fp)
                     if charsums.kloosterman_gl(fp, t, a, "recursion")
                     != charsums.kloosterman_gl(fp, t, a, "closed_form")])
        if q > 2:
            c = 2
            rep.add("charsums.moment_scale_invariance", {"r": fp.r}, "[]",
                    [(m, h) for m in (1, 2) for h in range(h_max + 1)
                     if charsums.moment(fp, m, h, c=c) != charsums.moment(fp, m, h)])


def _enumerable(fp, n):
    size = orthogroup.parabolic_order(n, fp.q)
    return size * size <= orthogroup.PRODUCT_BUDGET


def _group_checks(rep, fps, max_n):
    for fp in fps:
        q = fp.q
        for n in range(1, max_n + 1):
            counts = orthogroup.group_counts(n, q)
            rep.add("group.order_closed_form_vs_cells", {"n": n, "q": q},
                    counts["group_order"], sum(counts["cell_orders"]))
            if not _enumerable(fp, n):
                continue
            pkeys = orthogroup.enumerate_parabolic(fp, n)
            rep.add("group.parabolic_order", {"n": n, "q": q},
                    counts["parabolic_order"], len(pkeys))
            rep.add("group.parabolic_in_group", {"n": n, "q": q}, "[]",
                    [k for k, m in zip(pkeys, orthogroup.parabolic_matrices(fp, n))
                     if not orthogroup.is_in_oplus(fp, m)])
            union = set()
            for r in range(n + 1):
                cell = orthogroup.bruhat_cell(fp, n, r)
                rep.add("group.cell_order", {"n": n, "q": q, "cell": r},
                        counts["cell_orders"][r], len(cell))
                rep.add("group.cell_disjoint_from_lower", {"n": n, "q": q, "cell": r},
                        0, len(union & set(cell.elements)))
                union |= set(cell.elements)
                rep.add("group.a_r_order", {"n": n, "q": q, "cell": r},
                        counts["a_r_orders"][r], len(orthogroup.a_r_subgroup(fp, n, r)))
                for c in field.units(fp):
                    rep.add("group.cell_character_sum", {"n": n, "q": q, "cell": r, "c": c},
                            orthogroup.exp_sum_cell(fp, n, r, c, "formula"),
                            orthogroup.exp_sum_cell(fp, n, r, c, "brute"))
            rep.add("group.union_is_group_order", {"n": n, "q": q},
                    counts["group_order"], len(union))
            for c in field.units(fp):
                rep.add("group.gauss_sum", {"n": n, "q": q, "c": c},
                        orthogroup.gauss_sum_oplus(fp, n, c, "formula"),
                        orthogroup.gauss_sum_oplus(fp, n, c, "brute"))


def _families(fps, max_n):
    for fp in fps:
        for n in range(1, max_n + 1):
            for label in coset_codes.FAMILY_LABELS:
                try:
                    yield parse_family(label, n, fp)
                except ValueError:
                    continue


def _code_checks(rep, fps, max_n):
    for f in _families(fps, max_n):
        fp, q = f.fp, f.fp.q
        params = {"family": f.label, "n": f.n, "q": q}
        consts = coset_codes.family_constants(f)
        rep.add("codes.size_matches_cell_formula", params,
                orthogroup.cell_order(f.n, f.cell_index, q), consts.size)
        counts = coset_codes.trace_multiplicities(f, "formula")
        rep.add("codes.multiplicities_total", params, consts.size, sum(counts.values()))
        weighted = 0
        for beta, cnt in counts.items():
            if cnt % 2:
                weighted ^= beta
        rep.add("codes.multiplicities_weighted_sum", params, 0, weighted)
        if coset_codes.enumerable(f):
            rep.add("codes.multiplicities_formula_vs_enumeration", params,
                    sorted(counts.items()),
                    sorted(coset_codes.trace_multiplicities(f, "brute_force").items()))
            rep.add("codes.dual_weights_direct_vs_formula", params, "[]",
                    [a for a in field.units(fp)
                     if coset_codes.dual_weight(f, a, "direct")
                     != coset_codes.dual_weight(f, a, "formula")])
            cell = coset_codes.family_cell(f)
            lam = field.char_table(fp)
            bad = []
            for beta in field.elements(fp):
                rhs = len(cell) + sum(
                    lam[field.mul(fp, a, beta)] * orthogroup.exp_sum_cell(fp, f.n, f.cell_index, a)
                    for a in field.units(fp))
                if q * counts[beta] != rhs:
                    bad.append(beta)
            rep.add("codes.membership_count_identity", params, "[]", bad)
        if consts.size <= 40:
            dist = coset_codes.weight_distribution(counts)
            rep.add("codes.distribution_symmetric", params, dist, dist[::-1])
            kern = coset_codes.dual_kernel(f)
            rep.add("codes.distribution_mass", params,
                    2 ** (consts.size - fp.r + len(kern).bit_length() - 1), sum(dist))
            rep.add("codes.distribution_macwilliams", params, dist,
                    coset_codes.weight_distribution_macwilliams(f))


def _moment_checks(rep, fps, max_n, h_max):
    for f in _families(fps, max_n):
        fp = f.fp
        params = {"family": f.label, "n": f.n, "q": fp.q}
        if f.codim == 1:
            try:
                moments.mk_recursive(f, 0)
            except ValueError:
                continue
            rep.add("moments.recursion_vs_oracle", params,
                    [charsums.moment(fp, 1, h) for h in range(h_max + 1)],
                    [moments.mk_recursive(f, h) for h in range(h_max + 1)])
        else:
            try:
                moments.mk2_recursive(f, 0)
            except ValueError:
                continue
            rep.add("moments.two_dimensional_recursion_vs_oracle", params,
                    [charsums.moment(fp, 2, h) for h in range(h_max + 1)],
                    [moments.mk2_recursive(f, h) for h in range(h_max + 1)])
            rep.add("moments.even_recursion_vs_oracle", params,
                    [charsums.moment(fp, 1, 2 * h) for h in range(h_max + 1)],
                    [moments.mk_even_recursive(f, h) for h in range(h_max + 1)])
        rep.add("moments.weight_power_sum_expansion", params, "[]",
                [h for h in range(h_max + 1) if not moments.verify_lhs_expansion(f, h)["ok"]])


def run_checks(max_r: int = 2, max_n: int = 2, h_max: int = 5) -> dict:
    """Run the full matrix up to field degree max_r and Witt index max_n."""
    if not 1 <= max_r <= field.MAX_DEGREE:
        raise ValueError(f"max_r out of range 1..{field.MAX_DEGREE}: {max_r}")
    if max_n < 1:
        raise ValueError(f"max_n must be >= 1, got {max_n}")
    fps = [field.binary_field(r) for r in range(1, max_r + 1)]
    rep = Report()
    _field_checks(rep, fps)
    _charsum_checks(rep, fps, h_max)
    _group_checks(rep, fps, max_n)
    _code_checks(rep, fps, max_n)
    _moment_checks(rep, fps, max_n, h_max)
    return rep.as_dict()
