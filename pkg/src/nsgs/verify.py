"""Exhaustive checks of the theorems against brute-force recomputation.

Each registry entry walks every in-scope instance inside an
:class:`~nsgs.enumeration.EnumBound`, compares the closed-form claim with a
direct computation, and collects every mismatch instead of stopping at the
first one.
"""

from __future__ import annotations

import json
from collections import defaultdict
from dataclasses import dataclass, field
from typing import Callable, Iterable, Iterator

from nsgs.enumeration import (
    BoundMode,
    EnumBound,
    enumerate_numerical_sets,
    enumerate_pseudo_symmetric,
    enumerate_semigroups,
    enumerate_symmetric,
)
from nsgs.errors import ExcludedCase, UnknownTheorem
from nsgs.numset import NumericalSet, is_semigroup, minimal_generators
from nsgs.sums import C, D, E, O, SumKind, predicted_gaps, set_sum
from nsgs.symmetry import (
    _pseudo_symmetric_by_definition,
    _symmetric_by_definition,
    decompose_pseudo_symmetric,
    decompose_symmetric,
    dual,
    dual_sum_is_semigroup,
)
from nsgs.young import column_hook_sets, is_semigroup_via_hooks

MAX_SERIALIZED_FAILURES = 100


@dataclass(frozen=True)
class Failure:
    input: str
    kind: str | None
    expected: str
    got: str

    def to_dict(self) -> dict:
        return {"input": self.input, "kind": self.kind, "expected": self.expected, "got": self.got}


@dataclass
class VerificationReport:
    theorem: str
    bound: EnumBound
    instances_checked: int = 0
    failures: list[Failure] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.failures

    def fail(self, S: NumericalSet | str, kind: SumKind | None, expected, got) -> None:
        self.failures.append(
            Failure(str(S), None if kind is None else kind.value, str(expected), str(got))
        )

    def to_dict(self, max_failures: int = MAX_SERIALIZED_FAILURES) -> dict:
        return {
            "theorem": self.theorem,
            "mode": self.bound.mode.value,
            "limit": self.bound.limit,
            "checked": self.instances_checked,
            "failure_count": len(self.failures),
            "failures": [f.to_dict() for f in self.failures[:max_failures]],
        }

    def to_json(self, **kwargs) -> str:
        return json.dumps(self.to_dict(), **kwargs)

    def summary(self) -> str:
        status = "PASS" if self.passed else f"FAIL ({len(self.failures)} failures)"
        return f"{self.theorem} [{self.bound}]: {self.instances_checked} instances, {status}"


REPORT_SCHEMA = {
    "type": "object",
    "required": ["theorem", "mode", "limit", "checked", "failures"],
    "properties": {
        "theorem": {"type": "string"},
        "mode": {"enum": ["genus", "frobenius"]},
        "limit": {"type": "integer"},
        "checked": {"type": "integer"},
        "failure_count": {"type": "integer"},
        "failures": {
            "type": "array",
            "items": {
                "type": "object",
                "required": ["input", "kind", "expected", "got"],
                "properties": {
                    "input": {"type": "string"},
                    "kind": {"type": ["string", "null"]},
                    "expected": {"type": "string"},
                    "got": {"type": "string"},
                },
            },
        },
    },
}

ZERO_TWO = NumericalSet((0,), 2)
ZERO_THREE = NumericalSet((0,), 3)
KINDS = (D, E, C, O)


# ---------------------------------------------------------------- instance sources


def numerical_sets_in(bound: EnumBound) -> Iterator[NumericalSet]:
    """Numerical sets for the set-level checks.

    A genus bound has no finite set of numerical sets behind it, so it is
    read as ``genus <= N`` together with ``F <= 2N - 1``, the window holding
    every semigroup of genus at most ``N``.
    """
    if bound.mode is BoundMode.FROBENIUS:
        yield from enumerate_numerical_sets(bound.limit)
    else:
        for S in enumerate_numerical_sets(2 * bound.limit - 1):
            if S.genus <= bound.limit:
                yield S


def _semigroups(bound: EnumBound) -> list[NumericalSet]:
    return list(enumerate_semigroups(bound))


# ---------------------------------------------------------------- checks


def _check_hook_criterion(report: VerificationReport) -> None:
    for S in numerical_sets_in(report.bound):
        report.instances_checked += 1
        tops = [max(col) for col in column_hook_sets(S)]
        want = [S.frobenius - s for s in S.small_elements]
        if tops != want:
            report.fail(S, None, f"top hooks {want}", f"top hooks {tops}")
        hooks, direct = is_semigroup_via_hooks(S), is_semigroup(S)
        if hooks != direct:
            report.fail(S, None, f"semigroup={direct}", f"hook criterion={hooks}")


def _check_gap_prediction(report: VerificationReport) -> None:
    sets = list(numerical_sets_in(report.bound))
    shift = {D: 2, E: 1, C: 0, O: -1}
    for S in sets:
        for T in sets:
            for kind in KINDS:
                report.instances_checked += 1
                R = set_sum(S, T, kind)
                want = predicted_gaps(S, T, kind)
                label = f"{S} | {T}"
                if R.gaps != want:
                    report.fail(label, kind, list(want), list(R.gaps))
                if R.frobenius != S.frobenius + T.frobenius + shift[kind]:
                    report.fail(
                        label, kind, f"F={S.frobenius + T.frobenius + shift[kind]}",
                        f"F={R.frobenius}",
                    )


def _check_self_sums(report: VerificationReport) -> None:
    for S in _semigroups(report.bound):
        report.instances_checked += 1
        if S.conductor in minimal_generators(S):
            continue
        for kind in (C, D):
            if is_semigroup(set_sum(S, S, kind)):
                report.fail(S, kind, "S+S not a semigroup", "S+S is a semigroup")


def _check_genus_criteria(report: VerificationReport) -> None:
    for S in _semigroups(report.bound):
        report.instances_checked += 1
        g, F = S.genus, S.frobenius
        sym, by_genus = _symmetric_by_definition(S), 2 * g == F + 1
        if sym != by_genus:
            report.fail(S, None, f"symmetric={sym}", f"g=(F+1)/2 is {by_genus}")
        psym, by_genus = _pseudo_symmetric_by_definition(S), 2 * g == F + 2
        if psym != by_genus:
            report.fail(S, None, f"pseudo-symmetric={psym}", f"g=(F+2)/2 is {by_genus}")


def _check_dual_genus(report: VerificationReport) -> None:
    for S in _semigroups(report.bound):
        report.instances_checked += 1
        n, sn = len(S.small_elements), S.conductor
        if S.genus != sn - n:
            report.fail(S, None, f"g(S)={sn - n}", f"g(S)={S.genus}")
        Sd = dual(S)
        if Sd.genus != n:
            report.fail(S, None, f"g(S*)={n}", f"g(S*)={Sd.genus}")
        for kind, want in ((E, sn), (O, sn - 1), (D, sn + 1), (C, sn)):
            got = set_sum(S, Sd, kind).genus
            if got != want:
                report.fail(S, kind, f"genus {want}", f"genus {got}")


def _check_self_dual(report: VerificationReport) -> None:
    for S in _semigroups(report.bound):
        report.instances_checked += 1
        sym, self_dual = _symmetric_by_definition(S), dual(S) == S
        if sym != self_dual:
            report.fail(S, None, f"self-dual={sym}", f"self-dual={self_dual}")


def _decomposition_index(
    max_conductor: int, kinds: Iterable[SumKind]
) -> dict[NumericalSet, list[tuple[NumericalSet, SumKind]]]:
    """Map every ``T (+k) T*`` to the pairs ``(T, k)`` producing it.

    Every semigroup ``T`` whose sum could land at conductor ``<= max_conductor``
    is tried: the result's conductor is ``C(T) + C(T*)`` shifted by at least
    ``-2``, so ``C(T) <= max_conductor / 2 + 1`` covers every candidate.
    """
    index: dict[NumericalSet, list[tuple[NumericalSet, SumKind]]] = defaultdict(list)
    f_max = max_conductor // 2
    if f_max < 1:
        return index
    for T in enumerate_semigroups(EnumBound.frobenius(f_max)):
        Td = dual(T)
        for kind in kinds:
            R = set_sum(T, Td, kind)
            if R.conductor <= max_conductor:
                index[R].append((T, kind))
    return index


def _fmt_pairs(pairs: list[tuple[NumericalSet, SumKind]]) -> str:
    return "; ".join(f"T={T} ({kind})" for T, kind in pairs) or "none"


def _check_symmetric_split(report: VerificationReport) -> None:
    targets = list(enumerate_symmetric(report.bound))
    if not targets:
        return
    index = _decomposition_index(max(S.conductor for S in targets), (E, O))
    for S in targets:
        report.instances_checked += 1
        dec = decompose_symmetric(S)
        T = dec.summand
        if not is_semigroup(T):
            report.fail(S, dec.kind, "T is a semigroup", f"T={T} is not")
        if dec.recompose() != S:
            report.fail(S, dec.kind, str(S), f"T+T*={dec.recompose()}")
        # literal uniqueness: exactly one semigroup T (either kind) gives S
        matches = index.get(S, [])
        if matches != [(T, dec.kind)]:
            report.fail(S, None, f"unique T={T} ({dec.kind})", _fmt_pairs(matches))


def _check_conductor_not_generator(report: VerificationReport) -> None:
    for S in enumerate_symmetric(report.bound):
        if S == ZERO_TWO:
            continue
        report.instances_checked += 1
        if S.conductor in minimal_generators(S):
            report.fail(S, None, "conductor not a minimal generator", "minimal generator")


def _check_symmetric_dual_sums(report: VerificationReport) -> None:
    for S in enumerate_symmetric(report.bound):
        if S == ZERO_TWO:
            continue
        report.instances_checked += 1
        Sd = dual(S)
        for kind in (C, D):
            R = set_sum(S, Sd, kind)
            if is_semigroup(R):
                report.fail(S, kind, "not a semigroup", f"{R} is a semigroup")


def _check_pseudo_symmetric_split(report: VerificationReport) -> None:
    targets = list(enumerate_pseudo_symmetric(report.bound))
    if not targets:
        return
    index = _decomposition_index(max(S.conductor for S in targets), (C, D))
    for S in targets:
        report.instances_checked += 1
        if S == ZERO_THREE:
            try:
                dec = decompose_pseudo_symmetric(S)
            except ExcludedCase:
                continue
            report.fail(S, dec.kind, "ExcludedCase", f"T={dec.summand}")
            continue
        dec = decompose_pseudo_symmetric(S)
        T = dec.summand
        if not is_semigroup(T):
            report.fail(S, dec.kind, "T is a semigroup", f"T={T} is not")
        elif _symmetric_by_definition(T):
            report.fail(S, dec.kind, "T not symmetric", f"T={T} is symmetric")
        if dec.recompose() != S:
            report.fail(S, dec.kind, str(S), f"T+T*={dec.recompose()}")
        # literal uniqueness among non-symmetric semigroups T, either kind
        matches = [(U, k) for U, k in index.get(S, []) if not _symmetric_by_definition(U)]
        if matches != [(T, dec.kind)]:
            report.fail(S, None, f"unique T={T} ({dec.kind})", _fmt_pairs(matches))


def _check_closure_criterion(report: VerificationReport) -> None:
    for S in _semigroups(report.bound):
        Sd = dual(S)
        for kind in KINDS:
            report.instances_checked += 1
            brute = is_semigroup(set_sum(S, Sd, kind))
            crit = dual_sum_is_semigroup(S, kind)
            if crit != brute:
                report.fail(S, kind, f"semigroup={brute}", f"criterion={crit}")


def _check_closed_sum_class(report: VerificationReport) -> None:
    for S in _semigroups(report.bound):
        Sd = dual(S)
        for kind in KINDS:
            report.instances_checked += 1
            if not dual_sum_is_semigroup(S, kind):
                continue
            R = set_sum(S, Sd, kind)
            if not is_semigroup(R):
                report.fail(S, kind, "semigroup", f"{R} is not a semigroup")
            elif kind in (E, O) and not _symmetric_by_definition(R):
                report.fail(S, kind, "symmetric", f"{R} is not symmetric")
            elif kind in (C, D) and not _pseudo_symmetric_by_definition(R):
                report.fail(S, kind, "pseudo-symmetric", f"{R} is not pseudo-symmetric")


THEOREMS: dict[str, Callable[[VerificationReport], None]] = {
    "prop24": _check_hook_criterion,
    "lemma310": _check_gap_prediction,
    "prop311": _check_self_sums,
    "prop42": _check_genus_criteria,
    "lemma44": _check_dual_genus,
    "remark45": _check_self_dual,
    "thm47": _check_symmetric_split,
    "lemma49": _check_conductor_not_generator,
    "cor410": _check_symmetric_dual_sums,
    "thm412": _check_pseudo_symmetric_split,
    "thm416": _check_closure_criterion,
    "cor417": _check_closed_sum_class,
}

# bounds used when a caller does not choose one
DEFAULT_BOUNDS: dict[str, EnumBound] = {
    "prop24": EnumBound.frobenius(12),
    "lemma310": EnumBound.frobenius(8),
    "prop311": EnumBound.genus(12),
    "prop42": EnumBound.genus(12),
    "lemma44": EnumBound.genus(12),
    "remark45": EnumBound.genus(12),
    "thm47": EnumBound.frobenius(27),
    "lemma49": EnumBound.frobenius(27),
    "cor410": EnumBound.frobenius(27),
    "thm412": EnumBound.frobenius(27),
    "thm416": EnumBound.genus(12),
    "cor417": EnumBound.genus(12),
}


def verify_theorem(theorem: str, bound: EnumBound | None = None) -> VerificationReport:
    try:
        check = THEOREMS[theorem]
    except KeyError:
        raise UnknownTheorem(
            f"unknown theorem {theorem!r}; known: {', '.join(THEOREMS)}"
        ) from None
    report = VerificationReport(theorem, bound or DEFAULT_BOUNDS[theorem])
    check(report)
    return report
