"""Exhaustive law verification over enumerated interval collections.

Every suite produces a :class:`LawReport`: one entry per law with a
pass/fail status, how many instances were evaluated, and — on failure —
the first witness in enumeration order.  Checks whose hypothesis is not
met (e.g. distributivity suites over a non-distributive carrier) are still
evaluated but recorded as not asserted; they never fail a run.

Loops are exhaustive while the instance count fits the budget (default
10^7); beyond that a seeded deterministic sample is drawn and the check is
marked accordingly.
"""

from __future__ import annotations

import itertools
import json
import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Iterable, Sequence

from .errors import GradeSetInvalid
from .fuzzysets import GRADE_ONE, GRADE_ZERO, FuzzySet, as_grade, format_grade
from .fuzzyintervals import FuzzyInterval, meet_family as fi_meet_family
from .intervals import CrispInterval
from .lattice import FiniteLattice, format_element, is_distributive, iter_bits

DEFAULT_BUDGET = 10_000_000
SAMPLE_SIZE = 50_000  # instances drawn when a loop would exceed the budget
DEFAULT_SEED = 0


# -- reports ----------------------------------------------------------------


@dataclass
class LawCheck:
    law: str
    status: str                 # "pass" | "fail"
    checked: int
    witness: object = None      # JSON-ready description of the first failure
    asserted: bool = True       # non-asserted checks never fail a report
    note: str = ""
    mode: str = "exhaustive"

    def as_json(self) -> dict:
        out: dict = {"law": self.law, "status": self.status, "checked": self.checked,
                     "asserted": self.asserted}
        if self.witness is not None:
            out["witness"] = self.witness
        if self.note:
            out["note"] = self.note
        if self.mode != "exhaustive":
            out["mode"] = self.mode
        return out


@dataclass
class LawReport:
    suite: str
    lattice: str
    grades: tuple = ()
    checks: list = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(c.status == "pass" for c in self.checks if c.asserted)

    def as_json(self) -> dict:
        return {"suite": self.suite, "lattice": self.lattice,
                "grades": [format_grade(g) for g in self.grades],
                "passed": self.passed,
                "checks": [c.as_json() for c in self.checks]}

    def to_text(self) -> str:
        lines = [f"suite: {self.suite}", f"lattice: {self.lattice}"]
        if self.grades:
            lines.append("grades: " + ", ".join(format_grade(g) for g in self.grades))
        flagged = False
        for c in self.checks:
            tag = ("PASS" if c.status == "pass" else "FAIL") + ("" if c.asserted else "*")
            flagged = flagged or not c.asserted
            line = f"  {tag:<6} {c.law:<34} checked={c.checked}"
            if c.mode != "exhaustive":
                line += f" [{c.mode}]"
            lines.append(line)
            if c.witness is not None:
                lines.append(f"         witness: {json.dumps(c.witness, sort_keys=True)}")
            if c.note:
                lines.append(f"         note: {c.note}")
        if flagged:
            lines.append("  (* = evaluated but not asserted)")
        lines.append(f"result: {'PASS' if self.passed else 'FAIL'}")
        return "\n".join(lines)


def render_operand(value):
    """JSON-ready rendering of a witness operand."""
    if isinstance(value, CrispInterval):
        return value.render(ascii_only=True)
    if isinstance(value, FuzzyInterval):
        value = value.fuzzy
    if isinstance(value, FuzzySet):
        return {format_element(e): format_grade(g)
                for e, g in zip(value.lattice.elements, value.values)}
    return str(value)


# -- enumeration ------------------------------------------------------------


def validate_grades(grades) -> tuple[Fraction, ...]:
    """Sorted distinct grades; must contain both 0 and 1."""
    try:
        chain = tuple(sorted({as_grade(g) for g in grades}))
    except Exception as exc:
        raise GradeSetInvalid(str(exc)) from exc
    if not chain or chain[0] != GRADE_ZERO or chain[-1] != GRADE_ONE:
        raise GradeSetInvalid("the grade set must contain 0 and 1")
    return chain


def enumerate_intervals(lattice: FiniteLattice) -> list[CrispInterval]:
    """Every crisp interval: the empty one first, then [lo, hi] pairs in
    canonical element order."""
    out = [CrispInterval.empty(lattice)]
    n = len(lattice.elements)
    for i in range(n):
        for j in range(n):
            if lattice.leq_index(i, j):
                out.append(CrispInterval._from_indices(lattice, i, j))
    return out


def enumerate_fuzzy_sets(lattice: FiniteLattice, grades) -> list[FuzzySet]:
    """All |grades|^n grade-valued fuzzy sets (the filter oracle's search space)."""
    chain = validate_grades(grades)
    return [FuzzySet.from_values(lattice, values)
            for values in itertools.product(chain, repeat=len(lattice.elements))]


def enumerate_fuzzy_intervals(lattice: FiniteLattice, grades) -> list[FuzzyInterval]:
    """All fuzzy intervals with values in ``grades``.

    Generated as antitone interval chains: one crisp interval per positive
    grade, each containing the next; the membership of an element is the
    largest grade whose interval contains it.  Cuts of the result at the
    chosen grades recover exactly the chain, so the construction is a
    bijection onto the grade-valued fuzzy intervals.
    """
    chain = validate_grades(grades)
    positive = [g for g in chain if g > GRADE_ZERO]
    intervals = enumerate_intervals(lattice)
    masks = [iv.members_mask() for iv in intervals]
    contained = [[j for j, inner in enumerate(intervals) if inner.issubset(outer)]
                 for outer in intervals]

    out: list[FuzzyInterval] = []
    stack: list[int] = []

    def extend(level: int, prev: int) -> None:
        if level == len(positive):
            values = [GRADE_ZERO] * len(lattice.elements)
            for grade, idx in zip(positive, stack):  # ascending: last write wins
                for b in iter_bits(masks[idx]):
                    values[b] = grade
            out.append(FuzzyInterval(FuzzySet.from_values(lattice, values)))
            return
        for idx in (contained[prev] if level else range(len(intervals))):
            stack.append(idx)
            extend(level + 1, idx)
            stack.pop()

    extend(0, -1)
    return out


def enumerate_fuzzy_intervals_by_filter(lattice: FiniteLattice, grades) -> list[FuzzyInterval]:
    """Independent oracle: filter every grade-valued fuzzy set through the
    interval predicate (all implementation routes)."""
    from .fuzzyintervals import is_fuzzy_interval
    return [FuzzyInterval(m) for m in enumerate_fuzzy_sets(lattice, grades)
            if is_fuzzy_interval(m)]


# -- instance planning -------------------------------------------------------


def _plan(count: int, arity: int, budget: int, seed: int):
    """(iterator of index tuples, mode string) — exhaustive within budget,
    otherwise a seeded deterministic sample."""
    total = count ** arity
    if total <= budget:
        return itertools.product(range(count), repeat=arity), "exhaustive"
    rng = random.Random(seed)
    draws = min(budget, SAMPLE_SIZE)

    def sample():
        for _ in range(draws):
            yield tuple(rng.randrange(count) for _ in range(arity))

    return sample(), f"sampled({draws} of {total}, seed={seed})"


def _run_law(report: LawReport, items: Sequence, law: str, arity: int,
             probe: Callable, *, budget: int, seed: int,
             asserted: bool = True, note: str = "") -> None:
    """Evaluate ``probe`` over index tuples; record the first failure.

    ``probe`` returns None for a pass and a detail (possibly "") for a fail.
    """
    instances, mode = _plan(len(items), arity, budget, seed)
    witness = None
    checked = 0
    for tup in instances:
        checked += 1
        detail = probe(*tup)
        if detail is not None:
            witness = {"indices": list(tup),
                       "operands": [render_operand(items[i]) for i in tup]}
            if detail:
                witness["detail"] = detail
            break
    status = "pass" if witness is None else "fail"
    report.checks.append(LawCheck(law, status, checked, witness, asserted, note, mode))


# -- op tables ---------------------------------------------------------------


class _OpTables:
    """Materialized join/meet tables over collection indices.

    Results outside the collection are stored as -1; the first such pair
    per op is kept as the closure witness.  ``leq_rows`` are upper-bound
    bitmask rows built from the independent order predicate.
    """

    def __init__(self, items, join_op, meet_op, leq_op):
        n = len(items)
        pool: dict = {}
        for i, item in enumerate(items):
            pool.setdefault(item, i)
        self.items = items
        self.n = n
        self.join_t = jt = [0] * (n * n)
        self.meet_t = mt = [0] * (n * n)
        self.closure_join = None
        self.closure_meet = None
        for i in range(n):
            a = items[i]
            row = i * n
            for j in range(n):
                b = items[j]
                k = pool.get(join_op(a, b), -1)
                jt[row + j] = k
                if k < 0 and self.closure_join is None:
                    self.closure_join = (i, j)
                k = pool.get(meet_op(a, b), -1)
                mt[row + j] = k
                if k < 0 and self.closure_meet is None:
                    self.closure_meet = (i, j)
        self.leq_rows = rows = [0] * n
        if leq_op is not None:
            for i in range(n):
                mask = 0
                for j in range(n):
                    if leq_op(items[i], items[j]):
                        mask |= 1 << j
                rows[i] = mask


def check_lattice_axioms(collection, join_op, meet_op, leq_op=None, *,
                         suite: str = "axioms", lattice_name: str = "",
                         grades: tuple = (), budget: int = DEFAULT_BUDGET,
                         seed: int = DEFAULT_SEED,
                         definitional_join_oracle: bool = True) -> LawReport:
    """Verify the lattice axioms for a collection closed under both ops.

    Checks closure, commutativity, idempotence, associativity, absorption,
    consistency of the independent order with the ops, the least-upper- /
    greatest-lower-bound property against the collection itself, and
    (optionally) agreement of the join with its definitional oracle — the
    meet-fold over all common upper bounds.
    """
    items = list(collection)
    if leq_op is None:
        leq_op = lambda a, b: meet_op(a, b) == a  # noqa: E731
    report = LawReport(suite, lattice_name, tuple(grades))
    tabs = _OpTables(items, join_op, meet_op, leq_op)
    n, jt, mt, leq_rows = tabs.n, tabs.join_t, tabs.meet_t, tabs.leq_rows

    def closure_check(law, first_bad):
        witness = None
        if first_bad is not None:
            i, j = first_bad
            witness = {"indices": [i, j],
                       "operands": [render_operand(items[i]), render_operand(items[j])]}
        report.checks.append(LawCheck(law, "pass" if witness is None else "fail",
                                      n * n, witness))

    closure_check("closure-join", tabs.closure_join)
    closure_check("closure-meet", tabs.closure_meet)
    run = lambda law, arity, probe: _run_law(report, items, law, arity, probe,  # noqa: E731
                                             budget=budget, seed=seed)

    run("commutativity-join", 2, lambda i, j: None if (
        jt[i * n + j] == jt[j * n + i] if jt[i * n + j] >= 0 and jt[j * n + i] >= 0
        else join_op(items[i], items[j]) == join_op(items[j], items[i])) else "")
    run("commutativity-meet", 2, lambda i, j: None if (
        mt[i * n + j] == mt[j * n + i] if mt[i * n + j] >= 0 and mt[j * n + i] >= 0
        else meet_op(items[i], items[j]) == meet_op(items[j], items[i])) else "")
    run("idempotence-join", 1, lambda i: None if jt[i * n + i] == i else "")
    run("idempotence-meet", 1, lambda i: None if mt[i * n + i] == i else "")

    def assoc(table, op):
        def probe(i, j, k):
            bc = table[j * n + k]
            ab = table[i * n + j]
            if bc >= 0 and ab >= 0:
                lhs = table[i * n + bc]
                rhs = table[ab * n + k]
                if lhs >= 0 and rhs >= 0:
                    return None if lhs == rhs else ""
            lhs_obj = op(items[i], op(items[j], items[k]))
            rhs_obj = op(op(items[i], items[j]), items[k])
            return None if lhs_obj == rhs_obj else ""
        return probe

    run("associativity-join", 3, assoc(jt, join_op))
    run("associativity-meet", 3, assoc(mt, meet_op))

    def absorption(outer_t, inner_t, outer_op, inner_op):
        def probe(i, j):
            inner = inner_t[i * n + j]
            if inner >= 0:
                res = outer_t[i * n + inner]
                return None if res == i else ""
            res_obj = outer_op(items[i], inner_op(items[i], items[j]))
            return None if res_obj == items[i] else ""
        return probe

    run("absorption-meet-join", 2, absorption(mt, jt, meet_op, join_op))
    run("absorption-join-meet", 2, absorption(jt, mt, join_op, meet_op))

    def order_consistency(i, j):
        ordered = leq_rows[i] >> j & 1 == 1
        ok = ordered == (mt[i * n + j] == i) == (jt[i * n + j] == j)
        return None if ok else ""

    run("order-consistency", 2, order_consistency)

    def join_lub(i, j):
        common = leq_rows[i] & leq_rows[j]
        jj = jt[i * n + j]
        if jj < 0 or not common >> jj & 1:
            return "join is not a common upper bound"
        if common & ~leq_rows[jj]:
            return "a smaller common upper bound exists"
        return None

    run("join-least-upper-bound", 2, join_lub)

    def meet_glb(i, j):
        lowers_i = 0  # rows give upper bounds; collect lower bounds by column scan
        for k in range(n):
            if leq_rows[k] >> i & 1 and leq_rows[k] >> j & 1:
                lowers_i |= 1 << k
        mm = mt[i * n + j]
        if mm < 0 or not lowers_i >> mm & 1:
            return "meet is not a common lower bound"
        if lowers_i & ~_column_mask(leq_rows, mm, n):
            return "a greater common lower bound exists"
        return None

    run("meet-greatest-lower-bound", 2, meet_glb)

    if definitional_join_oracle:
        def join_oracle(i, j):
            common = leq_rows[i] & leq_rows[j]
            acc = -1
            for b in iter_bits(common):
                acc = b if acc < 0 else mt[acc * n + b]
                if acc < 0:
                    return "meet-fold left the collection"
            if acc < 0:
                return "no common upper bound in the collection"
            return None if acc == jt[i * n + j] else "fold of upper bounds differs from join"

        run("join-definitional-oracle", 2, join_oracle)

    return report


def _column_mask(leq_rows, j, n):
    # elements below items[j]: rows whose bit j is set
    mask = 0
    for k in range(n):
        if leq_rows[k] >> j & 1:
            mask |= 1 << k
    return mask


def check_distributivity(collection, join_op, meet_op, *, asserted: bool = True,
                         suite: str = "distributivity", lattice_name: str = "",
                         grades: tuple = (), budget: int = DEFAULT_BUDGET,
                         seed: int = DEFAULT_SEED) -> LawReport:
    """Evaluate both distributive laws over all (budgeted) triples.

    With ``asserted=False`` failures are recorded as findings only — the
    report still passes; use this when the reference lattice itself is not
    distributive and the laws are not implied.
    """
    items = list(collection)
    note = ("" if asserted else
            "hypothesis not met (reference lattice not distributive); finding only")
    report = LawReport(suite, lattice_name, tuple(grades))
    tabs = _OpTables(items, join_op, meet_op, None)
    n, jt, mt = tabs.n, tabs.join_t, tabs.meet_t

    def law(outer_t, inner_t, outer_op, inner_op):
        # outer(a, inner(b, c)) == inner(outer(a, b), outer(a, c))
        def probe(i, j, k):
            bc = inner_t[j * n + k]
            ab = outer_t[i * n + j]
            ac = outer_t[i * n + k]
            if bc >= 0 and ab >= 0 and ac >= 0:
                lhs = outer_t[i * n + bc]
                rhs = inner_t[ab * n + ac]
                if lhs >= 0 and rhs >= 0:
                    return None if lhs == rhs else ""
            lhs_obj = outer_op(items[i], inner_op(items[j], items[k]))
            rhs_obj = inner_op(outer_op(items[i], items[j]), outer_op(items[i], items[k]))
            return None if lhs_obj == rhs_obj else ""
        return probe

    for name, probe in (("meet-over-join", law(mt, jt, meet_op, join_op)),
                        ("join-over-meet", law(jt, mt, join_op, meet_op))):
        _run_law(report, items, name, 3, probe, budget=budget, seed=seed,
                 asserted=asserted, note=note)
    return report


# -- cut identities ----------------------------------------------------------


def check_cut_identities(lattice: FiniteLattice, grades, *,
                         budget: int = DEFAULT_BUDGET,
                         seed: int = DEFAULT_SEED) -> LawReport:
    """Cutwise characterization of the fuzzy-interval ops.

    For every pair and every threshold of the union of threshold sets, the
    cut of the meet is the intersection of the cuts and the cut of the
    join is the hull of the cuts; both per-grade families are antitone,
    start at the whole carrier, and intersect down to their largest index.
    """
    chain = validate_grades(grades)
    fis = enumerate_fuzzy_intervals(lattice, chain)
    report = LawReport("cut-identities", lattice.name, chain)
    full = lattice.all_mask

    def pair_thresholds(a: FuzzyInterval, b: FuzzyInterval):
        return sorted({*a.thresholds(), *b.thresholds()})

    def family(a, b, p, op):
        return op(a.cut_interval(p), b.cut_interval(p)).members_mask()

    def identity(op_name):
        def probe(i, j):
            a, b = fis[i], fis[j]
            combined = a.meet(b) if op_name == "meet" else a.join(b)
            op = CrispInterval.intersection if op_name == "meet" else CrispInterval.hull
            for p in pair_thresholds(a, b):
                if combined.fuzzy.cut_mask(p) != family(a, b, p, op):
                    return f"threshold {format_grade(p)}"
            return None
        return probe

    def family_laws(op_name):
        op = CrispInterval.intersection if op_name == "meet" else CrispInterval.hull

        def antitone(i, j):
            a, b = fis[i], fis[j]
            ps = pair_thresholds(a, b)
            masks = [family(a, b, p, op) for p in ps]
            for lower, higher in zip(masks, masks[1:]):
                if higher & ~lower:
                    return "family grows with the threshold"
            return None

        def at_zero(i, j):
            return None if family(fis[i], fis[j], GRADE_ZERO, op) == full else ""

        def closed_under_intersection(i, j):
            a, b = fis[i], fis[j]
            ps = pair_thresholds(a, b)
            masks = {p: family(a, b, p, op) for p in ps}
            for size in range(1, len(ps) + 1):
                for subset in itertools.combinations(ps, size):
                    acc = full
                    for p in subset:
                        acc &= masks[p]
                    if acc != masks[max(subset)]:
                        return "P = {" + ", ".join(format_grade(p) for p in subset) + "}"
            return None

        return antitone, at_zero, closed_under_intersection

    run = lambda law, probe: _run_law(report, fis, law, 2, probe,  # noqa: E731
                                      budget=budget, seed=seed)
    run("meet-cut-identity", identity("meet"))
    run("join-cut-identity", identity("join"))
    for op_name in ("meet", "join"):
        antitone, at_zero, closed = family_laws(op_name)
        run(f"{op_name}-cut-family-antitone", antitone)
        run(f"{op_name}-cut-family-at-zero", at_zero)
        run(f"{op_name}-cut-family-intersection", closed)
    return report


# -- endpoint lemmas ----------------------------------------------------------


def check_endpoint_lemmas(lattice: FiniteLattice, grades, *,
                          budget: int = DEFAULT_BUDGET,
                          seed: int = DEFAULT_SEED) -> LawReport:
    """Finite-supremum identities for cut endpoints.

    For P a nonempty set of thresholds: the join of the lower endpoints
    over P is the lower endpoint at max P, and dually for upper endpoints;
    the same holds for the paired functions lower₁(p) ⊓ lower₂(p) and
    upper₁(p) ⊔ upper₂(p).  The paired identities are only guaranteed on a
    distributive carrier, so on other lattices the whole suite is
    evaluated but not asserted.
    """
    chain = validate_grades(grades)
    distributive, _ = is_distributive(lattice)
    note = ("" if distributive else
            "reference lattice is not distributive: hypothesis not met, lemma not asserted")
    fis = enumerate_fuzzy_intervals(lattice, chain)
    report = LawReport("endpoints", lattice.name, chain)
    top_i = lattice.index(lattice.top)
    bottom_i = lattice.index(lattice.bottom)

    def endpoint_indices(fi: FuzzyInterval, p) -> tuple[int, int]:
        mask = fi.fuzzy.cut_mask(p)
        if not mask:
            return top_i, bottom_i
        bits = list(iter_bits(mask))
        return lattice.meet_indices(bits), lattice.join_indices(bits)

    def subsets(ps):
        for size in range(1, len(ps) + 1):
            yield from itertools.combinations(ps, size)

    def single(selector, fold):
        def probe(i):
            fi = fis[i]
            ps = fi.thresholds()
            ends = {p: selector(endpoint_indices(fi, p)) for p in ps}
            for subset in subsets(ps):
                if fold(ends[p] for p in subset) != ends[max(subset)]:
                    return "P = {" + ", ".join(format_grade(p) for p in subset) + "}"
            return None
        return probe

    def paired(selector, inner, fold):
        def probe(i, j):
            a, b = fis[i], fis[j]
            ps = sorted({*a.thresholds(), *b.thresholds()})
            combined = {p: inner(selector(endpoint_indices(a, p)),
                                 selector(endpoint_indices(b, p))) for p in ps}
            for subset in subsets(ps):
                if fold(combined[p] for p in subset) != combined[max(subset)]:
                    return "P = {" + ", ".join(format_grade(p) for p in subset) + "}"
            return None
        return probe

    lower = lambda pair: pair[0]  # noqa: E731
    upper = lambda pair: pair[1]  # noqa: E731
    laws = [
        ("lower-endpoint-supremum", 1, single(lower, lattice.join_indices)),
        ("upper-endpoint-infimum", 1, single(upper, lattice.meet_indices)),
        ("paired-lower-meet-supremum", 2, paired(lower, lattice.meet_index, lattice.join_indices)),
        ("paired-upper-join-infimum", 2, paired(upper, lattice.join_index, lattice.meet_indices)),
    ]
    for law, arity, probe in laws:
        _run_law(report, fis, law, arity, probe, budget=budget, seed=seed,
                 asserted=distributive, note=note)
    return report


# -- structural identities ----------------------------------------------------


def check_interval_structure(lattice: FiniteLattice, grades, *,
                             budget: int = DEFAULT_BUDGET,
                             seed: int = DEFAULT_SEED) -> LawReport:
    """Per-cut boundary-grade identities for fuzzy intervals.

    At every threshold with a nonempty cut: the meet of the boundary
    grades M(⊓cut) ∧ M(⊔cut) equals the minimum grade over the cut, and
    cutting again at that minimum recovers the same cut.
    """
    chain = validate_grades(grades)
    fis = enumerate_fuzzy_intervals(lattice, chain)
    report = LawReport("structure", lattice.name, chain)

    def boundary_meet(i):
        fi = fis[i]
        vals = fi.values
        for p in fi.thresholds():
            mask = fi.fuzzy.cut_mask(p)
            if not mask:
                continue
            bits = list(iter_bits(mask))
            boundary = min(vals[lattice.meet_indices(bits)], vals[lattice.join_indices(bits)])
            if boundary != min(vals[b] for b in bits):
                return f"threshold {format_grade(p)}"
        return None

    def cut_recovery(i):
        fi = fis[i]
        vals = fi.values
        for p in fi.thresholds():
            mask = fi.fuzzy.cut_mask(p)
            if not mask:
                continue
            bits = list(iter_bits(mask))
            boundary = min(vals[lattice.meet_indices(bits)], vals[lattice.join_indices(bits)])
            if fi.fuzzy.cut_mask(boundary) != mask:
                return f"threshold {format_grade(p)}"
        return None

    _run_law(report, fis, "cut-boundary-grade-meet", 1, boundary_meet,
             budget=budget, seed=seed)
    _run_law(report, fis, "cut-recovery-from-boundary-grades", 1, cut_recovery,
             budget=budget, seed=seed)
    return report


# -- brute-force join oracle ---------------------------------------------------


def oracle_join(collection: Iterable[FuzzyInterval], m: FuzzyInterval,
                n: FuzzyInterval) -> FuzzyInterval:
    """Definitional join: pointwise infimum of every collection member that
    dominates both operands.

    ``collection`` must be the full enumeration for the operands' lattice
    and grade set (then the constant-1 member guarantees an upper bound).
    """
    uppers = [fi for fi in collection if m.leq(fi) and n.leq(fi)]
    if not uppers:
        raise ValueError("the collection contains no common upper bound")
    return fi_meet_family(m.lattice, uppers)


# -- suite registry ------------------------------------------------------------


SUITES = ("axioms", "distributivity", "cut-identities", "endpoints", "structure",
          "crisp-axioms", "crisp-distributivity")


def run_suite(name: str, lattice: FiniteLattice, grades=(0, Fraction(1, 2), 1), *,
              budget: int = DEFAULT_BUDGET, seed: int = DEFAULT_SEED) -> list[LawReport]:
    """Run one named suite (or ``all``) and return its reports."""
    if name == "all":
        reports = []
        for suite in SUITES:
            reports.extend(run_suite(suite, lattice, grades, budget=budget, seed=seed))
        return reports
    if name not in SUITES:
        raise ValueError(f"unknown suite {name!r}; choose from {', '.join(SUITES + ('all',))}")

    chain = validate_grades(grades)
    label = lattice.name or f"<{len(lattice.elements)} elements>"
    if name == "axioms":
        fis = enumerate_fuzzy_intervals(lattice, chain)
        return [check_lattice_axioms(
            fis, FuzzyInterval.join, FuzzyInterval.meet, FuzzyInterval.leq,
            suite="axioms", lattice_name=label, grades=chain, budget=budget, seed=seed)]
    if name == "distributivity":
        fis = enumerate_fuzzy_intervals(lattice, chain)
        return [check_distributivity(
            fis, FuzzyInterval.join, FuzzyInterval.meet,
            asserted=is_distributive(lattice)[0], suite="distributivity",
            lattice_name=label, grades=chain, budget=budget, seed=seed)]
    if name == "cut-identities":
        return [check_cut_identities(lattice, chain, budget=budget, seed=seed)]
    if name == "endpoints":
        return [check_endpoint_lemmas(lattice, chain, budget=budget, seed=seed)]
    if name == "structure":
        return [check_interval_structure(lattice, chain, budget=budget, seed=seed)]
    if name == "crisp-axioms":
        ivs = enumerate_intervals(lattice)
        return [check_lattice_axioms(
            ivs, CrispInterval.hull, CrispInterval.intersection, CrispInterval.issubset,
            suite="crisp-axioms", lattice_name=label, budget=budget, seed=seed)]
    ivs = enumerate_intervals(lattice)
    return [check_distributivity(
        ivs, CrispInterval.hull, CrispInterval.intersection,
        asserted=is_distributive(lattice)[0], suite="crisp-distributivity",
        lattice_name=label, budget=budget, seed=seed)]
