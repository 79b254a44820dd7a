"""Scripted verification sweeps over every construction family.

This module bundles the package's checks into eleven numbered criteria so
that one call rebuilds the reference codes, enumerates them, and compares
the results against the closed-form predictions. Each criterion reports a
list of fine-grained check results rather than a single flag, which keeps
failures localized: a wrong weight at one instance cannot hide the other
instances.

Checks whose outcome is known to contradict a published closed-form claim
carry ``paper_discrepancy=True``. The sweep never patches an expectation
to make such a check pass; the check fails, and the flag tells the reader
the failure is understood rather than a regression. The same flag also
marks a few passing, purely informational notes where the enumerated
value disagrees with a published one that the sweep does not assert.

Reports are deterministic: two runs over the same configuration produce
byte-identical JSON. Timings are intentionally excluded from reports.
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass
from fractions import Fraction
from importlib import resources
from itertools import combinations
from pathlib import Path
from typing import Callable, Iterable, Optional

import numpy as np

from .analysis import ab_condition, has_full_value_property, is_minimal_code
from .codes import (DEFAULT_BUDGET, LinearCode, coeff_blocks, dual_code,
                    from_generator, min_max_weight, random_code,
                    weight_distribution)
from .constructions import (cf_code, cg_code, comb0, extended, first, lift,
                            predicted_dprime_weights, predicted_first_params,
                            predicted_second_bound, predicted_ws, second,
                            tensor_product, weight_s)
from .errors import BadParams, BudgetExceeded, PreconditionFailed
from .field import build_field
from .matrix import GFMatrix
from .sss import (SssScheme, deal, minimal_authorized_sets,
                  perfectness_check, reconstruct)

FIRST_INSTANCES = ((2, 2), (2, 3), (3, 3), (3, 4), (3, 5),
                   (4, 3), (4, 4), (5, 4), (5, 5))
SECOND_INSTANCES = ((4, 3, 2), (4, 3, 3), (5, 3, 2), (5, 4, 2))
WEIGHT_INSTANCES = ((3, 2, 2), (4, 2, 2), (4, 2, 3), (4, 3, 2), (5, 2, 2))
EXTENDED_INSTANCES = ((3, 3), (3, 4), (4, 3))

# first-family instances where the weight ratio is asserted to fall below
# the sufficiency threshold, and those where it provably exceeds it
AB_STRICT = {(4, 3), (4, 4), (5, 4), (5, 5)}
AB_COUNTER = {(2, 2), (2, 3), (3, 3)}


@dataclass(frozen=True)
class CheckResult:
    """One fine-grained pass/fail fact established by a sweep."""

    criterion: int
    instance: str
    check: str
    passed: bool
    detail: str
    paper_discrepancy: bool = False

    def as_dict(self) -> dict:
        return {
            "instance": self.instance,
            "check": self.check,
            "passed": self.passed,
            "paper_discrepancy": self.paper_discrepancy,
            "detail": self.detail,
        }


@dataclass(frozen=True)
class CriterionResult:
    """All checks of one numbered criterion."""

    number: int
    name: str
    checks: tuple[CheckResult, ...]

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def line(self) -> str:
        """One-line human summary, used by the sweep table."""
        npass = sum(1 for c in self.checks if c.passed)
        mark = "PASS" if self.passed else "FAIL"
        flag = " *" if any(c.paper_discrepancy for c in self.checks) else ""
        return (f"criterion {self.number:2d}  {self.name:<28s} {mark}"
                f"  ({npass}/{len(self.checks)} checks){flag}")

    def as_dict(self) -> dict:
        return {
            "id": self.number,
            "name": self.name,
            "passed": self.passed,
            "checks": [c.as_dict() for c in self.checks],
        }


class CodeRegistry:
    """Codes built during a sweep, keyed by a human-readable label.

    The final consistency criterion re-reads everything registered here,
    so every runner registers each code it constructs. ``obtain`` builds
    a code at most once per label, letting criteria share instances.
    """

    def __init__(self):
        self._codes: dict[str, LinearCode] = {}

    def obtain(self, label: str, build: Callable[[], LinearCode]) -> LinearCode:
        if label not in self._codes:
            self._codes[label] = build()
        return self._codes[label]

    def items(self) -> list[tuple[str, LinearCode]]:
        return list(self._codes.items())

    def __len__(self) -> int:
        return len(self._codes)


def _instance_guard(checks: list, criterion: int, instance: str,
                    body: Callable[[], None]) -> None:
    """Run one instance body; a budget overrun becomes a failed check."""
    try:
        body()
    except BudgetExceeded as exc:
        checks.append(CheckResult(criterion, instance, "budget", False,
                                  str(exc)))


def _stratified_weights(code: LinearCode, budget: int) -> dict[int, set[int]]:
    """Map each coefficient weight s to the codeword weights it attains."""
    out: dict[int, set[int]] = {}
    for block in coeff_blocks(code, budget):
        values = code.field.matmul(block, code.gen.data)
        cw = np.count_nonzero(block, axis=1)
        w = np.count_nonzero(values, axis=1)
        for s in np.unique(cw):
            out.setdefault(int(s), set()).update(
                int(x) for x in np.unique(w[cw == s]))
    return out


def _fmt_counts(counts: dict[int, int]) -> str:
    return "{" + ", ".join(f"{w}: {counts[w]}" for w in sorted(counts)) + "}"


def _witness_detail(rep) -> str:
    covered, covering = rep.witness
    return (f"covering pair: support {covered.support} of coeffs "
            f"{covered.coeffs} sits inside support {covering.support} "
            f"of coeffs {covering.coeffs}")


def _run_first_params(instances, budget, registry) -> list[CheckResult]:
    checks: list[CheckResult] = []
    for t, q in instances:
        label = f"first({t},{q})"

        def body():
            code = registry.obtain(label, lambda: first(t, q))
            pred = predicted_first_params(t, q)
            d, _ = min_max_weight(code, budget)
            got = (code.n, code.k, d)
            want = (pred.n, pred.k, pred.d)
            checks.append(CheckResult(
                1, label, "params", got == want,
                f"[n,k,d] = {list(got)}, predicted {list(want)}"))
            strata = _stratified_weights(code, budget)
            want_strata: dict[int, set[int]] = {0: {0}}
            for s in range(1, t + 1):
                want_strata[s] = {predicted_ws(s, t, q)}
            ok = strata == want_strata
            checks.append(CheckResult(
                1, label, "stratified-weights", ok,
                "every combination of s rows has weight w_s, s = 1..t"
                if ok else f"got {strata}, predicted {want_strata}"))
            single = all(len(strata.get(s, ())) == 1 for s in range(1, t + 1))
            if single:
                ws = [0] + [next(iter(strata[s])) for s in range(1, t + 1)]
                bad = [s for s in range(1, t + 1)
                       if ws[s] - ws[s - 1] != -t + (t - s) * q + 2]
                checks.append(CheckResult(
                    1, label, "step-identity", not bad,
                    "w_s - w_(s-1) = -t + (t-s)q + 2 for s = 1..t"
                    if not bad else f"identity fails at s in {bad}"))
            else:
                checks.append(CheckResult(
                    1, label, "step-identity", False,
                    "per-s weights are not single-valued"))

        _instance_guard(checks, 1, label, body)
    return checks


def _run_first_minimality(instances, budget, registry) -> list[CheckResult]:
    checks: list[CheckResult] = []
    for t, q in instances:
        label = f"first({t},{q})"

        def body():
            code = registry.obtain(label, lambda: first(t, q))
            rep = is_minimal_code(code, budget)
            checks.append(CheckResult(
                2, label, "is-minimal", rep.is_minimal,
                f"exhaustive check over {rep.classes} scalar classes"
                if rep.is_minimal else _witness_detail(rep)))
            ab = ab_condition(code, budget)
            want = Fraction(
                1 + (t - 1) * (q - 1),
                (t - 1) + comb0(t - 1, 2) * (q - 2) + (t - 1) * (q - 1))
            checks.append(CheckResult(
                2, label, "ratio-formula", ab.ratio == want,
                f"w_min/w_max = {ab.ratio}" if ab.ratio == want
                else f"w_min/w_max = {ab.ratio}, predicted {want}"))
            if (t, q) in AB_STRICT:
                ok = ab.ratio < ab.threshold and not ab.sufficient
                checks.append(CheckResult(
                    2, label, "ratio-below-threshold", ok,
                    f"{ab.ratio} < {ab.threshold}: minimal although the "
                    "weight-ratio bound is inconclusive" if ok else
                    f"expected {ab.ratio} < {ab.threshold}"))
            if (t, q) in AB_COUNTER:
                checks.append(CheckResult(
                    2, label, "ratio-exceeds-threshold", ab.sufficient,
                    f"{ab.ratio} > {ab.threshold}: the weight-ratio bound "
                    "applies here although a published claim places this "
                    "instance outside it" if ab.sufficient else
                    f"expected {ab.ratio} > {ab.threshold}",
                    paper_discrepancy=True))

        _instance_guard(checks, 2, label, body)
    return checks


def _run_first_counts(instances, budget, registry) -> list[CheckResult]:
    checks: list[CheckResult] = []
    for t, q in instances:
        label = f"first({t},{q})"

        def body():
            code = registry.obtain(label, lambda: first(t, q))
            dist = weight_distribution(code, budget)
            want: dict[int, int] = {0: 1}
            for s in range(1, t + 1):
                w = predicted_ws(s, t, q)
                want[w] = want.get(w, 0) + comb0(t, s) * (q - 1) ** s
            ok = dist.counts == want
            checks.append(CheckResult(
                3, label, "weight-counts", ok,
                f"counts {_fmt_counts(dist.counts)}" if ok else
                f"counts {_fmt_counts(dist.counts)}, "
                f"predicted {_fmt_counts(want)}"))

        _instance_guard(checks, 3, label, body)
    if instances:
        checks.append(CheckResult(
            3, "(all instances)", "count-formula-note", True,
            "the census at weight w_s is C(t,s)(q-1)^s; a published count "
            "omits the binomial factor", paper_discrepancy=True))
    return checks


def _run_second(instances, budget, registry) -> list[CheckResult]:
    checks: list[CheckResult] = []
    for t, k, q in instances:
        label = f"second({t},{k},{q})"

        def body():
            code = registry.obtain(label, lambda: second(t, k, q))
            bound = predicted_second_bound(t, k, q)
            checks.append(CheckResult(
                4, label, "params",
                (code.n, code.k) == (bound.n, bound.dim),
                f"[n,k] = [{code.n},{code.k}], "
                f"predicted [{bound.n},{bound.dim}]"))
            d, _ = min_max_weight(code, budget)
            row = code.codeword([1] + [0] * (t - 1))
            ok = d <= bound.d_upper and row.weight == bound.d_upper
            checks.append(CheckResult(
                4, label, "distance-bound", ok,
                f"d = {d} <= {bound.d_upper}, first row attains the bound"
                if ok else f"d = {d}, bound {bound.d_upper}, "
                f"first row weight {row.weight}"))
            rep = is_minimal_code(code, budget)
            checks.append(CheckResult(
                4, label, "is-minimal", rep.is_minimal,
                f"exhaustive check over {rep.classes} scalar classes"
                if rep.is_minimal else _witness_detail(rep),
                paper_discrepancy=not rep.is_minimal))

        _instance_guard(checks, 4, label, body)
    return checks


def _run_weight_family(instances, budget, registry) -> list[CheckResult]:
    checks: list[CheckResult] = []
    for t, s, q in instances:
        label = f"weight_s({s},{t},{q})"

        def body():
            code = registry.obtain(label, lambda: weight_s(s, t, q))
            pred = dict(predicted_dprime_weights(t, s, q))
            strata = _stratified_weights(code, budget)
            want = {r: {pred[r]} for r in range(t + 1)}
            ok = strata == want
            checks.append(CheckResult(
                5, label, "stratified-weights", ok,
                f"weights by coefficient weight r = 0..t: "
                f"{[pred[r] for r in range(t + 1)]}"
                if ok else f"got {strata}, predicted {want}"))
            rep = is_minimal_code(code, budget)
            checks.append(CheckResult(
                5, label, "is-minimal", rep.is_minimal,
                f"exhaustive check over {rep.classes} scalar classes"
                if rep.is_minimal else _witness_detail(rep),
                paper_discrepancy=not rep.is_minimal))
            if s * s <= 3 * t:
                nonzero = {r: w for r, w in pred.items() if r >= 1}
                best = min(nonzero.values())
                attained = nonzero[s] == best
                checks.append(CheckResult(
                    5, label, "minimum-at-r-equals-s", attained,
                    f"weights for r = 1..t are "
                    f"{[nonzero[r] for r in range(1, t + 1)]}; minimum "
                    f"{best} " + ("attained at r = s" if attained else
                                  f"not attained at r = {s}"),
                    paper_discrepancy=not attained))

        _instance_guard(checks, 5, label, body)
    return checks


def _extended_case_counterexample(code, t, q, budget):
    """First codeword violating the split weight formula, or None.

    The formula under test assigns w_s to a combination of s rows whose
    first coefficient is zero and w_s + (q-1) otherwise.
    """
    for block in coeff_blocks(code, budget):
        values = code.field.matmul(block, code.gen.data)
        w = np.count_nonzero(values, axis=1)
        cw = np.count_nonzero(block, axis=1)
        for u, got, s in zip(block, w, cw):
            if s == 0:
                continue
            want = predicted_ws(int(s), t, q) + (q - 1 if u[0] else 0)
            if int(got) != want:
                return tuple(int(x) for x in u), int(got), want
    return None


def _run_extended(instances, budget, registry) -> list[CheckResult]:
    checks: list[CheckResult] = []
    for t, q in instances:
        label = f"extended({t},{q})"

        def body():
            code = registry.obtain(label, lambda: extended(t, q))
            want_n = comb0(t, 2) * (q - 1) + t + q - 2
            checks.append(CheckResult(
                6, label, "params", (code.n, code.k) == (want_n, t),
                f"[n,k] = [{code.n},{code.k}], predicted [{want_n},{t}]"))
            rep = is_minimal_code(code, budget)
            checks.append(CheckResult(
                6, label, "is-minimal", rep.is_minimal,
                f"exhaustive check over {rep.classes} scalar classes"
                if rep.is_minimal else _witness_detail(rep)))
            fv = has_full_value_property(code, budget)
            checks.append(CheckResult(
                6, label, "full-value", fv.holds,
                "every nonzero codeword takes all field values" if fv.holds
                else f"witness values {sorted(fv.witness_values)}"))
            bad = _extended_case_counterexample(code, t, q, budget)
            checks.append(CheckResult(
                6, label, "case-weights", bad is None,
                "weights split as w_s and w_s + (q-1) by the first "
                "coefficient" if bad is None else
                f"coeffs {bad[0]} have weight {bad[1]}, the split formula "
                f"predicts {bad[2]}; the enumerated offset for a nonzero "
                "first coefficient is q-2, not q-1",
                paper_discrepancy=bad is not None))

        _instance_guard(checks, 6, label, body)
    return checks


def _lift_bases() -> tuple[tuple[str, LinearCode], ...]:
    plain = from_generator(GFMatrix(build_field(2), np.array([[1, 0]])))
    return (("gen(1,0)", plain),
            ("extended(3,3)", extended(3, 3)),
            ("extended(3,4)", extended(3, 4)))


def _run_lift(instances, budget, registry) -> list[CheckResult]:
    checks: list[CheckResult] = []
    for base_label, base in _lift_bases():
        registry.obtain(base_label, lambda: base)
        for s in (1, 2):
            inst = f"lift({base_label},{s})"

            def body():
                lifted = registry.obtain(inst, lambda: lift(base, s, budget))
                want = ((s + 1) * base.n, s + base.k)
                checks.append(CheckResult(
                    7, inst, "params", (lifted.n, lifted.k) == want,
                    f"[n,k] = [{lifted.n},{lifted.k}], "
                    f"predicted {list(want)}"))
                rep = is_minimal_code(lifted, budget)
                checks.append(CheckResult(
                    7, inst, "is-minimal", rep.is_minimal,
                    f"exhaustive check over {rep.classes} scalar classes"
                    if rep.is_minimal else _witness_detail(rep),
                    paper_discrepancy=not rep.is_minimal))
                fv = has_full_value_property(lifted, budget)
                checks.append(CheckResult(
                    7, inst, "full-value", fv.holds,
                    "every nonzero codeword takes all field values"
                    if fv.holds else
                    f"witness values {sorted(fv.witness_values)} on "
                    f"coeffs {fv.witness.coeffs}",
                    paper_discrepancy=not fv.holds))

            _instance_guard(checks, 7, inst, body)
        inst = f"lift(lift({base_label},1),1)"

        def compose_body():
            try:
                twice = registry.obtain(
                    inst, lambda: lift(lift(base, 1, budget), 1, budget))
            except PreconditionFailed as exc:
                checks.append(CheckResult(
                    7, inst, "compose", False,
                    f"second lift rejected: {exc}",
                    paper_discrepancy=True))
                return
            rep = is_minimal_code(twice, budget)
            fv = has_full_value_property(twice, budget)
            ok = rep.is_minimal and fv.holds
            checks.append(CheckResult(
                7, inst, "compose", ok,
                f"[{twice.n},{twice.k}] is minimal and full-valued" if ok
                else f"minimal = {rep.is_minimal}, full-value = {fv.holds}",
                paper_discrepancy=not ok))

        _instance_guard(checks, 7, inst, compose_body)
    return checks


def _run_function_codes(instances, budget, registry) -> list[CheckResult]:
    checks: list[CheckResult] = []

    def cg_body():
        label = "cg(2,2,2)"
        code = registry.obtain(label, lambda: cg_code(2, 2, 2, budget))
        checks.append(CheckResult(
            8, label, "params", (code.n, code.k) == (15, 5),
            f"[n,k] = [{code.n},{code.k}], predicted [15,5]"))
        fv = has_full_value_property(code, budget)
        checks.append(CheckResult(
            8, label, "full-value", fv.holds,
            "every nonzero codeword takes all field values" if fv.holds
            else f"witness values {sorted(fv.witness_values)}"))
        rep = is_minimal_code(code, budget)
        checks.append(CheckResult(
            8, label, "is-minimal", rep.is_minimal,
            f"exhaustive check over {rep.classes} scalar classes"
            if rep.is_minimal else _witness_detail(rep)))

    _instance_guard(checks, 8, "cg(2,2,2)", cg_body)

    def cf_body():
        label = "cf(4,2,3;1,2)"
        code = registry.obtain(label,
                               lambda: cf_code(4, 2, 3, (1, 2), budget))
        checks.append(CheckResult(
            8, label, "params", code.n == 80 and code.k <= 5,
            f"[n,k] = [{code.n},{code.k}], n = 80 and k <= 5 expected"))
        rep = is_minimal_code(code, budget)
        checks.append(CheckResult(
            8, label, "is-minimal", rep.is_minimal,
            f"exhaustive check over {rep.classes} scalar classes"
            if rep.is_minimal else _witness_detail(rep)))
        fv = has_full_value_property(code, budget)
        checks.append(CheckResult(
            8, label, "full-value-report", True,
            f"holds = {fv.holds} with alphas (1, 2) covering every nonzero "
            "field value; the published sufficiency condition needs k >= q "
            "and does not apply at k = 2, q = 3"))
        variant_label = "cf(4,2,3;1,1)"
        variant = registry.obtain(variant_label,
                                  lambda: cf_code(4, 2, 3, (1, 1), budget))
        fv2 = has_full_value_property(variant, budget)
        checks.append(CheckResult(
            8, variant_label, "full-value-report", True,
            f"holds = {fv2.holds} with repeated alphas (1, 1)" +
            ("" if fv2.holds else
             f"; witness values {sorted(fv2.witness_values)}")))

    _instance_guard(checks, 8, "cf(4,2,3;1,2)", cf_body)
    return checks


def _run_tensor(instances, budget, registry) -> list[CheckResult]:
    checks: list[CheckResult] = []
    cases = ((2, 2, (9, 4, 4)), (2, 3, (16, 4, 9)))
    for t, q, want in cases:
        inst = f"first({t},{q}) x first({t},{q})"

        def body():
            base = registry.obtain(f"first({t},{q})", lambda: first(t, q))
            prod = registry.obtain(inst,
                                   lambda: tensor_product(base, base))
            d, _ = min_max_weight(prod, budget)
            ok = (prod.n, prod.k, d) == want
            checks.append(CheckResult(
                9, inst, "params", ok,
                f"[n,k,d] = [{prod.n},{prod.k},{d}], "
                f"predicted {list(want)}"))
            d1, _ = min_max_weight(base, budget)
            checks.append(CheckResult(
                9, inst, "distance-product", d == d1 * d1,
                f"d = {d} = {d1}*{d1}" if d == d1 * d1 else
                f"d = {d}, factors have d = {d1}"))
            rep = is_minimal_code(prod, budget)
            checks.append(CheckResult(
                9, inst, "is-minimal", rep.is_minimal,
                f"exhaustive check over {rep.classes} scalar classes"
                if rep.is_minimal else _witness_detail(rep)))

        _instance_guard(checks, 9, inst, body)
    return checks


def _run_sss(instances, budget, registry) -> list[CheckResult]:
    checks: list[CheckResult] = []
    specs = (("first(2,2)", lambda: first(2, 2), True),
             ("first(3,3)", lambda: first(3, 3), True),
             ("random(5,3,3;seed=7)",
              lambda: random_code(5, 3, 3, seed=7), False))
    for label, build, small in specs:

        def body():
            code = registry.obtain(label, build)
            registry.obtain(f"dual({label})", lambda: dual_code(code))
            scheme = SssScheme(code)
            dual_sets = minimal_authorized_sets(scheme, method="dual",
                                                budget=budget)
            search_sets = minimal_authorized_sets(scheme, method="search",
                                                  budget=budget)
            checks.append(CheckResult(
                10, label, "structure-agreement", dual_sets == search_sets,
                f"{len(dual_sets)} minimal authorized sets from both the "
                "dual scan and the direct search" if
                dual_sets == search_sets else
                f"dual found {len(dual_sets)}, search {len(search_sets)}"))
            q = code.q
            trials = 0
            mismatches = 0
            for aset in dual_sets:
                for secret in range(q):
                    for seed in range(10):
                        sv = deal(scheme, secret, seed)
                        got = reconstruct(
                            scheme, aset.indices,
                            [sv.shares[i] for i in aset.indices])
                        trials += 1
                        if got != secret:
                            mismatches += 1
            checks.append(CheckResult(
                10, label, "round-trip", trials > 0 and mismatches == 0,
                f"{trials} reconstructions over {len(dual_sets)} minimal "
                f"sets, {q} secrets, 10 seeds" +
                ("" if mismatches == 0 else f"; {mismatches} mismatches")))
            if small:
                failing = []
                total = 0
                for size in range(len(scheme.participants) + 1):
                    for subset in combinations(scheme.participants, size):
                        total += 1
                        if not perfectness_check(scheme, subset, budget).ok:
                            failing.append(subset)
                checks.append(CheckResult(
                    10, label, "perfectness", not failing,
                    f"all {total} participant subsets pass" if not failing
                    else f"failing coalitions: {failing}"))

        _instance_guard(checks, 10, label, body)
    return checks


def _run_consistency(instances, budget, registry) -> list[CheckResult]:
    checks: list[CheckResult] = []
    sufficient = 0
    vacuous = 0
    for label, code in registry.items():
        ab = ab_condition(code, budget)
        if not ab.sufficient:
            vacuous += 1
            continue
        sufficient += 1
        rep = is_minimal_code(code, budget)
        checks.append(CheckResult(
            11, label, "sufficient-implies-minimal", rep.is_minimal,
            f"w_min/w_max = {ab.ratio} > {ab.threshold} and the exhaustive "
            "check agrees" if rep.is_minimal else
            f"ratio {ab.ratio} is sufficient yet " + _witness_detail(rep)))
    checks.append(CheckResult(
        11, "(registry)", "coverage", True,
        f"{len(registry)} codes registered; {sufficient} met the ratio "
        f"bound, {vacuous} were inconclusive"))
    return checks


@dataclass(frozen=True)
class _CriterionSpec:
    number: int
    name: str
    instances: Optional[tuple]
    arity: Optional[int]
    runner: Callable


_CRITERIA: dict[int, _CriterionSpec] = {
    1: _CriterionSpec(1, "first-family-parameters",
                      FIRST_INSTANCES, 2, _run_first_params),
    2: _CriterionSpec(2, "first-family-minimality",
                      FIRST_INSTANCES, 2, _run_first_minimality),
    3: _CriterionSpec(3, "first-family-weight-counts",
                      FIRST_INSTANCES, 2, _run_first_counts),
    4: _CriterionSpec(4, "second-family",
                      SECOND_INSTANCES, 3, _run_second),
    5: _CriterionSpec(5, "weight-bounded-family",
                      WEIGHT_INSTANCES, 3, _run_weight_family),
    6: _CriterionSpec(6, "extended-family",
                      EXTENDED_INSTANCES, 2, _run_extended),
    7: _CriterionSpec(7, "lift", None, None, _run_lift),
    8: _CriterionSpec(8, "function-codes", None, None, _run_function_codes),
    9: _CriterionSpec(9, "tensor-products", None, None, _run_tensor),
    10: _CriterionSpec(10, "secret-sharing", None, None, _run_sss),
    11: _CriterionSpec(11, "ratio-bound-consistency",
                       None, None, _run_consistency),
}


def default_instances(number: int) -> Optional[tuple]:
    """The default instance list of a criterion, None when fixed."""
    spec = _CRITERIA.get(number)
    if spec is None:
        raise BadParams(f"unknown criterion {number}; valid ids are 1..11")
    return spec.instances


def run_criterion(number: int, instances: Optional[Iterable] = None,
                  budget: int = DEFAULT_BUDGET,
                  registry: Optional[CodeRegistry] = None) -> CriterionResult:
    """Run one numbered criterion and collect its checks.

    Criterion 11 audits every code in the registry; when called with an
    empty registry it first rebuilds the full default corpus of criteria
    1 to 10, so that the consistency audit always has codes to read.
    """
    spec = _CRITERIA.get(number)
    if spec is None:
        raise BadParams(f"unknown criterion {number}; valid ids are 1..11")
    if instances is not None:
        if spec.instances is None:
            raise BadParams(f"criterion {number} does not take instances")
        cleaned = []
        for item in instances:
            item = tuple(item)
            if (len(item) != spec.arity
                    or not all(isinstance(x, int) for x in item)):
                raise BadParams(
                    f"criterion {number} instances must be length-"
                    f"{spec.arity} integer tuples, got {item!r}")
            cleaned.append(item)
        use: Optional[tuple] = tuple(cleaned)
    else:
        use = spec.instances
    if registry is None:
        registry = CodeRegistry()
    if number == 11 and not len(registry):
        for m in range(1, 11):
            prior = _CRITERIA[m]
            prior.runner(prior.instances, budget, registry)
    checks = spec.runner(use, budget, registry)
    return CriterionResult(number=number, name=spec.name,
                           checks=tuple(checks))


@dataclass
class SweepReport:
    """Results of one sweep run plus the codes it built."""

    results: list[CriterionResult]
    budget: int
    registry: CodeRegistry

    @property
    def passed(self) -> bool:
        return all(r.passed for r in self.results)

    def failures(self) -> list[CheckResult]:
        return [c for r in self.results for c in r.checks if not c.passed]

    def as_dict(self) -> dict:
        checks = [c for r in self.results for c in r.checks]
        return {
            "version": 1,
            "budget": self.budget,
            "criteria": [r.as_dict() for r in self.results],
            "summary": {
                "criteria_passed": sum(1 for r in self.results if r.passed),
                "criteria_total": len(self.results),
                "checks_passed": sum(1 for c in checks if c.passed),
                "checks_total": len(checks),
                "flagged": sum(1 for c in checks if c.paper_discrepancy),
            },
        }

    def to_json(self) -> str:
        return json.dumps(self.as_dict(), indent=2) + "\n"

    def table(self) -> str:
        if not self.results:
            return "no criteria configured\n"
        lines = [r.line() for r in self.results]
        ok = sum(1 for r in self.results if r.passed)
        lines.append(f"{ok}/{len(self.results)} criteria passed")
        if any(c.paper_discrepancy for r in self.results for c in r.checks):
            lines.append("* includes checks flagged paper_discrepancy: "
                         "enumeration disagrees with a published "
                         "closed-form claim")
        return "\n".join(lines) + "\n"


def load_config(path=None) -> dict:
    """Read a sweep configuration, the packaged default when path is None."""
    if path is None:
        text = (resources.files("mincodes") / "data" /
                "sweep_default.json").read_text(encoding="utf-8")
    else:
        text = Path(path).read_text(encoding="utf-8")
    try:
        cfg = json.loads(text)
    except json.JSONDecodeError as exc:
        raise BadParams(f"sweep config is not valid JSON: {exc}") from None
    return validate_config(cfg)


def validate_config(cfg) -> dict:
    """Normalize a parsed sweep config, raising BadParams on bad shape."""
    if not isinstance(cfg, dict) or not isinstance(cfg.get("criteria"), list):
        raise BadParams("sweep config must be an object with a "
                        "'criteria' list")
    entries = []
    for entry in cfg["criteria"]:
        if isinstance(entry, int):
            entry = {"id": entry}
        if not isinstance(entry, dict) or not isinstance(entry.get("id"), int):
            raise BadParams(f"bad criteria entry: {entry!r}")
        number = entry["id"]
        spec = _CRITERIA.get(number)
        if spec is None:
            raise BadParams(f"unknown criterion {number}; "
                            "valid ids are 1..11")
        instances = entry.get("instances")
        if instances is not None:
            if spec.instances is None:
                raise BadParams(
                    f"criterion {number} does not take instances")
            cleaned = []
            for item in instances:
                if (not isinstance(item, (list, tuple))
                        or len(item) != spec.arity
                        or not all(isinstance(x, int) for x in item)):
                    raise BadParams(
                        f"criterion {number} instances must be length-"
                        f"{spec.arity} integer lists")
                cleaned.append(tuple(item))
            instances = tuple(cleaned)
        entries.append({"id": number, "instances": instances})
    return {"version": int(cfg.get("version", 1)), "criteria": entries}


def run_sweep(config: Optional[dict] = None, budget: int = DEFAULT_BUDGET,
              strict: bool = False) -> SweepReport:
    """Run the configured criteria; the packaged default runs all eleven.

    Criteria share one code registry, so the consistency criterion audits
    exactly the codes the earlier criteria touched. An empty 'criteria'
    list yields an empty passing report. With strict=True the sweep stops
    after the first criterion that has a failing check.
    """
    if config is None:
        config = load_config()
    else:
        config = validate_config(config)
    registry = CodeRegistry()
    results = []
    for entry in config["criteria"]:
        res = run_criterion(entry["id"], entry["instances"], budget, registry)
        results.append(res)
        if strict and not res.passed:
            break
    return SweepReport(results=results, budget=budget, registry=registry)


def _slug(label: str) -> str:
    squashed = re.sub(r"[^A-Za-z0-9]+", "_", label).strip("_")
    return squashed or "code"


def write_distribution_csvs(report: SweepReport, out_dir) -> list[Path]:
    """Write one weight-distribution CSV per registered code."""
    out = Path(out_dir)
    out.mkdir(parents=True, exist_ok=True)
    paths = []
    for label, code in report.registry.items():
        dist = weight_distribution(code, report.budget)
        path = out / f"dist_{_slug(label)}.csv"
        path.write_text(dist.to_csv(), encoding="utf-8")
        paths.append(path)
    return paths
