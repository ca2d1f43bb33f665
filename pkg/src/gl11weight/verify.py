"""Verification suites shared by the command line and the test suite."""

from __future__ import annotations

import itertools
import time
from dataclasses import dataclass, field
from math import comb
from typing import Callable, Iterator

from . import conway, oracle, repring
from .diagrams import (
    ChordDiagram, DiagramSum, eight_term_templates, enumerate_diagrams, four_term_instances,
    free_positions, render, s_operator,
)
from .poly import Y
from .superalg import GL11, SPECS, AlgebraSpec
from .weights import (
    coefficient_checks, deframe_by_substitution, eval_sum, eval_weight,
    eval_weight_multiplicative, eval_weight_with_pivot, psi_sum,
)

SUITES = ("4T", "8T", "oracle", "tensor-identities", "deframing", "conway", "repring", "structure")
DEFAULT_ORDER = {"4T": 5, "8T": 2, "oracle": 4, "deframing": 5, "conway": 6, "repring": 6, "structure": 6}


@dataclass
class Check:
    suite: str
    name: str
    passed: bool
    seconds: float
    detail: str = ""
    reproducer: str = ""

    def to_json(self) -> dict:
        out = {"suite": self.suite, "name": self.name, "status": "pass" if self.passed else "fail",
               "seconds": round(self.seconds, 4)}
        if self.detail:
            out["detail"] = self.detail
        if not self.passed:
            out["reproducer"] = self.reproducer
        return out


@dataclass
class RunReport:
    command: str
    checks: list[Check] = field(default_factory=list)
    seconds: float = 0.0
    conway_sigma: int | None = None
    notes: dict = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def to_json(self) -> dict:
        return {
            "command": self.command,
            "passed": self.passed,
            "seconds": round(self.seconds, 4),
            "conway_sigma": self.conway_sigma,
            "notes": self.notes,
            "checks": [c.to_json() for c in self.checks],
        }


def sum_text(s: DiagramSum) -> str:
    return " ".join(f"{k:+d}[{render(d)}]" for d, k in s) or "0"


class _Runner:
    def __init__(self, report: RunReport, suite: str):
        self.report = report
        self.suite = suite

    def check(self, name: str, fn: Callable[[], tuple[bool, str, str]]) -> Check:
        """``fn`` returns (passed, detail, reproducer)."""
        t0 = time.perf_counter()
        try:
            ok, detail, repro = fn()
        except Exception as exc:  # a crash inside a check is a failed check
            ok, detail, repro = False, f"{type(exc).__name__}: {exc}", name
        c = Check(self.suite, name, ok, time.perf_counter() - t0, detail, repro)
        self.report.checks.append(c)
        return c


def _first_failure(items, pred: Callable, show: Callable[[object], str]) -> tuple[bool, str, str]:
    count = 0
    for item in items:
        count += 1
        if not pred(item):
            return False, f"failed after {count} cases", show(item)
    return True, f"{count} cases", ""


def _diagrams_upto(n: int) -> Iterator[ChordDiagram]:
    for k in range(n + 1):
        yield from enumerate_diagrams(k)


def hidden_chord_sets(template: int, max_hidden: int) -> Iterator[list[tuple[int, int]]]:
    free = free_positions(template)

    def matchings(pts):
        if not pts:
            yield []
            return
        for j in range(1, len(pts)):
            for rest in matchings(pts[1:j] + pts[j + 1:]):
                yield [(pts[0], pts[j])] + rest

    for k in range(max_hidden + 1):
        for pts in itertools.combinations(free, 2 * k):
            yield from matchings(list(pts))


# suites

def suite_4t(r: _Runner, max_order: int) -> None:
    for n in range(2, max_order + 1):
        inst = four_term_instances(n)
        r.check(f"W kills 4T, order {n}", lambda: _first_failure(inst, lambda s: eval_sum(s).is_zero(), sum_text))
        r.check(
            f"Conway kills 4T, order {n}",
            lambda: _first_failure(
                inst, lambda s: sum(k * conway.conway_weight(d) for d, k in s.terms.items()) == 0, sum_text
            ),
        )


def suite_8t(r: _Runner, max_hidden: int) -> None:
    for i in range(4):
        def run(i=i):
            def ok(h):
                (rel, lin), = eight_term_templates(h, [i])
                return eval_sum(rel) == Y * eval_sum(lin)
            return _first_failure(hidden_chord_sets(i, max_hidden), ok, lambda h: f"template {i + 1}, hidden {h}")
        r.check(f"W(R{i + 1}) = y W(S{i + 1}), up to {max_hidden} hidden chords", run)


def suite_oracle(r: _Runner, max_order: int, spec: AlgebraSpec, samples: int = 20) -> None:
    r.check(
        f"oracle = recursion, all diagrams of order <= {max_order} ({spec.name})",
        lambda: _first_failure(_diagrams_upto(max_order), lambda d: oracle.oracle_weight(d, spec) == eval_weight(d), render),
    )
    if samples and max_order < 5:
        sample = oracle.sample_diagrams(5, samples, seed=5)
        r.check(
            f"oracle = recursion, {samples} sampled order-5 diagrams ({spec.name})",
            lambda: _first_failure(sample, lambda d: oracle.oracle_weight(d, spec) == eval_weight(d), render),
        )
    small = list(_diagrams_upto(min(max_order, 3)))
    r.check(
        f"diagram images are central ({spec.name})",
        lambda: _first_failure(
            small, lambda d: oracle.centrality_check(oracle.project_to_uea(oracle.diagram_tensor(d, spec))), render
        ),
    )

    def cut_independent(d: ChordDiagram) -> bool:
        values = {oracle.oracle_weight(d.rotate(k), spec) for k in range(d.size)}
        return len(values) <= 1

    r.check(f"cut point independence ({spec.name})", lambda: _first_failure(small, cut_independent, render))


def suite_tensor(r: _Runner, spec: AlgebraSpec) -> None:
    for name, ok in oracle.tensor_identity_suite(spec).items():
        r.check(f"{name} ({spec.name})", lambda ok=ok: (ok, "", f"tensor identity {name}"))
    if spec is GL11:
        for m in range(1, 5):
            def run(m=m):
                got = oracle.invariant_dimension(m, spec)
                want = comb(2 * m - 2, m - 1)
                return got == want, f"{got} (expected {want})", f"invariant_dimension({m})"
            r.check(f"invariant tensors in L^{m}", run)


def suite_deframing(r: _Runner, max_order: int) -> None:
    ds = list(_diagrams_upto(max_order))
    r.check("psi deframing = substitution c=0",
            lambda: _first_failure(ds, lambda d: psi_sum(d) == deframe_by_substitution(d), render))
    iso = [d for d in ds if d.has_isolated_chord()]
    r.check("deframing vanishes with an isolated chord",
            lambda: _first_failure(iso, lambda d: deframe_by_substitution(d).is_zero() and psi_sum(d).is_zero(), render))
    r.check("W(s(D)) = dW/dc",
            lambda: _first_failure(ds, lambda d: eval_sum(s_operator(d)) == eval_weight(d).ddc(), render))


def suite_conway(r: _Runner, max_order: int, report: RunReport) -> None:
    example = ChordDiagram([(0, 6), (2, 10), (4, 8)])
    r.check("worked example: 2 boundary components, Conway 0",
            lambda: (conway.boundary_components(example) == 2 and conway.conway_weight(example) == 0, "", render(example)))

    def calibrate():
        cal = conway.calibrate_specialization(max(max_order, 4))
        report.conway_sigma = cal.sigma
        report.notes["conway_calibration"] = cal.to_json()
        return True, f"sigma = {cal.sigma:+d}", ""

    r.check(f"unique specialization sign, order <= {max(max_order, 4)}", calibrate)
    ds = list(_diagrams_upto(max_order))
    r.check("boundary count parity b = n+1 mod 2",
            lambda: _first_failure(ds, lambda d: (conway.boundary_components(d) - d.n - 1) % 2 == 0, render))
    r.check("Conway vanishes with an isolated chord",
            lambda: _first_failure([d for d in ds if d.has_isolated_chord()], lambda d: conway.conway_weight(d) == 0, render))
    pairs = [(d, a) for d in _diagrams_upto(min(max_order, 5)) for a in d.chords]
    r.check("chord removal criterion for connected boundary",
            lambda: _first_failure(pairs, lambda p: conway.lemma2_check(*p), lambda p: f"{render(p[0])} chord {p[1]}"))


def suite_repring(r: _Runner, max_n: int) -> None:
    for n in range(1, max_n + 1):
        r.check(f"adjoint power {n}: closed formula = iterated tensoring",
                lambda n=n: (repring.adjoint_power(n) == repring.iterated_power(n), "", f"adjoint_power({n})"))
        def inv(n=n):
            got = repring.inv_dim(repring.adjoint_power(n))
            return got == comb(2 * n - 2, n - 1), str(got), f"inv_dim(adjoint_power({n}))"
        r.check(f"adjoint power {n}: invariant count", inv)

    def s2l2():
        m = repring.sym_square(repring.alt_square(repring.III(1, repring.ODD)))
        got = repring.inv_dim(m)
        return got == 2, f"{m} -> {got}", "sym_square(alt_square(III_1^odd))"

    r.check("invariants in S^2 of the exterior square of L", s2l2)


def suite_structure(r: _Runner, max_order: int) -> None:
    ds = list(_diagrams_upto(max_order))

    def coeffs(d):
        w = eval_weight(d)
        lead, sub = coefficient_checks(d)
        return w.is_homogeneous(d.n) and lead == 1 and sub == -d.crossing_count()

    r.check(f"homogeneity and leading coefficients, order <= {max_order}", lambda: _first_failure(ds, coeffs, render))
    small = list(_diagrams_upto(min(max_order, 5)))
    r.check("multiplicative over connected sums",
            lambda: _first_failure(small, lambda d: eval_weight_multiplicative(d) == eval_weight(d), render))
    r.check("independent of the pivot chord",
            lambda: _first_failure(
                small, lambda d: all(eval_weight_with_pivot(d, a) == eval_weight(d) for a in d.chords), render))

    def mirror():
        asym = [render(d) for d in small if eval_weight(d.mirror()) != eval_weight(d)]
        r.report.notes["mirror_asymmetric_diagrams"] = asym
        return True, f"{len(asym)} diagrams with W(D) != W(mirror D)", ""

    r.check("mirror symmetry survey (informational)", mirror)


def run_suites(names: list[str], max_order: int | None = None, algebra: str = "gl11", command: str = "") -> RunReport:
    spec = SPECS[algebra]
    report = RunReport(command or f"verify {' '.join(names)}")
    t0 = time.perf_counter()
    for name in names:
        r = _Runner(report, name)
        order = DEFAULT_ORDER.get(name) if max_order is None else max_order
        if name == "4T":
            suite_4t(r, order)
        elif name == "8T":
            # here the order bound is the number of hidden chords (at most 3 fit)
            suite_8t(r, min(order, 3))
        elif name == "oracle":
            if max_order is None and spec is not GL11:
                order = 3
            suite_oracle(r, order, spec, samples=20 if spec is GL11 else 0)
        elif name == "tensor-identities":
            suite_tensor(r, spec)
        elif name == "deframing":
            suite_deframing(r, order)
        elif name == "conway":
            suite_conway(r, order, report)
        elif name == "repring":
            suite_repring(r, order)
        elif name == "structure":
            suite_structure(r, order)
        else:
            raise ValueError(f"unknown suite {name!r}")
    report.seconds = time.perf_counter() - t0
    return report
