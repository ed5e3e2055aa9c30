"""Catalog of the printed two- and four-variable special cases.

The printed tables group the 28 two-parameter slices of parameter space
into seven clusters (I..VII) that share one inequality form, plus three
four-parameter cases (grouped here under the synthetic id ``Q``). Each
cluster row carries the inequality in two normalizations -- the earlier
``ref8`` scaling (``Tr t^2 <= 2/3`` style) and the ``this_work`` scaling
(``... <= 1``) -- and closed forms for the vector squares.

Printed formulas are transcribed verbatim, typos included, and kept
strictly separate from the normative matrix-path computation; the errata
report is the only bridge between the two. Inequality rows are probed on
every pair of their cluster (the clustering claims exactly that
uniformity), component rows on the canonical first-listed pair, and the
per-group component rows of the second-inequality cluster-VI table on
every pair of their group. Two printed rows that disagree with the
matrix path beyond the five tracked mismatches are documented in
:data:`TRANSCRIPTION_NOTES` instead of being probed.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from typing import Callable, Iterable, Sequence

from .bloch import bloch_triple, u_vector, v_vector
from .errors import ArityMismatchError, InvalidParameterError, NoPrintedFormError
from .physicality import TOLERANCE, physicality_report
from .state_core import ParamVector, build_t, power_traces

SQRT6 = math.sqrt(6.0)
SQRT2 = math.sqrt(2.0)
SQRT3 = math.sqrt(3.0)
SQRT2_3 = math.sqrt(2.0 / 3.0)
#: Coefficient 3*sqrt(3)/sqrt(2) of the cubic terms in the printed forms.
K32 = 3.0 * SQRT3 / SQRT2

CLUSTER_IDS = ("I", "II", "III", "IV", "V", "VI", "VII", "Q")

REF8 = "ref8"
THIS_WORK = "this_work"


@dataclass(frozen=True, slots=True)
class ClusterCase:
    """One printed sub-case: an ordered assignment of slots to parameters.

    ``slots`` maps the slot order (s, t) or (s, t, p, q) positionally to
    parameter field names; unlisted parameters are zero.
    """

    cluster_id: str
    sub_case: str
    slots: tuple[str, ...]

    @property
    def arity(self) -> int:
        return len(self.slots)


def _case(cluster_id: str, slots: tuple[str, ...]) -> ClusterCase:
    return ClusterCase(cluster_id=cluster_id, sub_case="(" + ",".join(slots) + ")", slots=slots)


_PAIRS: dict[str, tuple[tuple[str, ...], ...]] = {
    "I": (("x", "y"),),
    "II": (("y", "alpha2"), ("y", "beta2")),
    "III": (("a", "alpha2"), ("beta1", "alpha2")),
    "IV": (("b", "alpha2"), ("alpha1", "alpha2")),
    "V": (("y", "a"), ("y", "b"), ("y", "alpha1"), ("y", "beta1")),
    "VI": (
        ("a", "b"),
        ("a", "alpha1"),
        ("a", "beta1"),
        ("a", "beta2"),
        ("b", "alpha1"),
        ("b", "beta1"),
        ("b", "beta2"),
        ("alpha1", "beta1"),
        ("alpha1", "beta2"),
        ("beta1", "beta2"),
        ("alpha2", "beta2"),
    ),
    "VII": (
        ("x", "a"),
        ("x", "b"),
        ("x", "alpha1"),
        ("x", "beta1"),
        ("x", "alpha2"),
        ("x", "beta2"),
    ),
    "Q": (
        ("x", "y", "alpha1", "beta1"),
        ("a", "b", "alpha2", "beta2"),
        ("a", "b", "alpha1", "beta1"),
    ),
}

#: Sub-groupings of cluster VI in the second-inequality table, sharing
#: component forms (third row read as three pairs; see TRANSCRIPTION_NOTES).
VI_GROUPS: tuple[tuple[tuple[str, str], ...], ...] = (
    (("a", "b"), ("a", "beta1"), ("b", "alpha1")),
    (("a", "alpha1"), ("b", "beta1")),
    (("a", "beta2"), ("b", "beta2"), ("alpha1", "beta2")),
    (("alpha1", "beta1"),),
    (("alpha2", "beta2"),),
    (("beta1", "beta2"),),
)

TRANSCRIPTION_NOTES: tuple[str, ...] = (
    "The four-variable table is headed '1st inequality' but its rows define "
    "second-inequality objects (F functions / v squares); they are stored "
    "here as second-inequality component forms.",
    "The cluster-VI component row '(a, beta2), (b, beta2), alpha1, beta2' is "
    "read as the three pairs (a,beta2), (b,beta2), (alpha1,beta2); a "
    "parenthesis is missing in print.",
    "The cluster-VI component row '(beta1, beta2)' repeats the values of the "
    "'(a, beta2) ...' group row; both are transcribed as printed.",
    "Cluster V components are printed 'Same as cluster II', which the matrix "
    "path contradicts already at (y, a); the row is outside the tracked "
    "mismatch set and is not probed.",
    "The cluster-VII second-inequality component row prints F3 = -s t^2/sqrt(2) "
    "where the matrix path has an additional -s^3/(2 sqrt(2)) term; the row is "
    "outside the tracked mismatch set and is not probed.",
)


def catalog() -> tuple[ClusterCase, ...]:
    """The full fixed catalog: 28 pairs across clusters I..VII plus the
    three four-variable cases under the synthetic id ``Q``."""
    return tuple(_case(cid, slots) for cid in CLUSTER_IDS for slots in _PAIRS[cid])


def cluster_cases(cluster_id: str) -> tuple[ClusterCase, ...]:
    """All sub-cases of one cluster, in printed order."""
    if cluster_id not in _PAIRS:
        raise InvalidParameterError(f"unknown cluster {cluster_id!r}; expected one of {CLUSTER_IDS}")
    return tuple(_case(cluster_id, slots) for slots in _PAIRS[cluster_id])


def lookup(cluster_id: str, sub_case: str | None = None) -> ClusterCase:
    """Find a case by cluster id and optional sub-case name.

    Without ``sub_case`` the first-listed (canonical) pair is returned.
    Sub-case names are matched ignoring whitespace.
    """
    cases = cluster_cases(cluster_id)
    if sub_case is None:
        return cases[0]
    wanted = sub_case.replace(" ", "")
    for case in cases:
        if case.sub_case == wanted:
            return case
    raise InvalidParameterError(
        f"cluster {cluster_id} has no sub-case {sub_case!r}; "
        f"choose from {[c.sub_case for c in cases]}"
    )


def instantiate(case: ClusterCase, values: Sequence[float]) -> ParamVector:
    """Fill the case's slots with values; every other parameter is zero."""
    if len(values) != case.arity:
        raise ArityMismatchError(
            f"case {case.sub_case} takes {case.arity} slot values, got {len(values)}"
        )
    return ParamVector.from_mapping(dict(zip(case.slots, values)))


# --------------------------------------------------------------------------
# Printed inequality forms
# --------------------------------------------------------------------------


@dataclass(frozen=True, slots=True)
class PaperForm:
    """One printed inequality form, evaluable verbatim on slot values.

    ``direction`` and ``bound`` express the printed comparison
    (``lhs <= bound`` or ``lhs >= bound``); :meth:`admissible` applies it.
    """

    inequality_index: int
    normalization: str
    printed_text: str
    bound: float
    direction: str  # "le" | "ge"
    evaluate: Callable[[float, float], float]

    def admissible(self, s: float, t: float) -> bool:
        value = self.evaluate(s, t)
        return value <= self.bound if self.direction == "le" else value >= self.bound


def _forms() -> dict[tuple[str, int, str], PaperForm]:
    two_thirds = 2.0 / 3.0

    def le(index: int, norm: str, text: str, bound: float, fn) -> PaperForm:
        return PaperForm(index, norm, text, bound, "le", fn)

    def ge0(index: int, text: str, fn) -> PaperForm:
        return PaperForm(index, REF8, text, 0.0, "ge", fn)

    forms: dict[tuple[str, int, str], PaperForm] = {}

    # --- first inequality ---------------------------------------------------
    forms["I", 1, REF8] = le(1, REF8, "s^2 + t^2 <= 2/3", two_thirds, lambda s, t: s * s + t * t)
    forms["I", 1, THIS_WORK] = le(
        1, THIS_WORK, "(3/2)(s^2 + t^2) <= 1", 1.0, lambda s, t: 1.5 * (s * s + t * t)
    )
    forms["II", 1, REF8] = le(
        1, REF8, "s^2 + 2 t^2 <= 2/3", two_thirds, lambda s, t: s * s + 2.0 * t * t
    )
    forms["II", 1, THIS_WORK] = le(
        1, THIS_WORK, "(3/2)(s^2 + 2 t^2) <= 1", 1.0, lambda s, t: 1.5 * (s * s + 2.0 * t * t)
    )
    forms["III", 1, REF8] = le(
        1, REF8, "2(s^2 + t^2) <= 2/3", two_thirds, lambda s, t: 2.0 * (s * s + t * t)
    )
    forms["III", 1, THIS_WORK] = le(
        1, THIS_WORK, "3(s^2 + t^2) <= 1", 1.0, lambda s, t: 3.0 * (s * s + t * t)
    )
    forms["VI", 1, REF8] = forms["III", 1, REF8]
    forms["VI", 1, THIS_WORK] = forms["III", 1, THIS_WORK]
    # printed as "Same as cluster III" / "Same as cluster II"
    forms["IV", 1, REF8] = forms["III", 1, REF8]
    forms["IV", 1, THIS_WORK] = forms["III", 1, THIS_WORK]
    forms["V", 1, REF8] = forms["II", 1, REF8]
    forms["V", 1, THIS_WORK] = forms["II", 1, THIS_WORK]
    forms["VII", 1, REF8] = forms["II", 1, REF8]
    forms["VII", 1, THIS_WORK] = forms["II", 1, THIS_WORK]

    # --- second inequality ----------------------------------------------------
    forms["I", 2, REF8] = ge0(
        2,
        "1/9 - (1/2)(s^2 + t^2) + (t/sqrt(6))(3 s^2 - t^2) >= 0",
        lambda s, t: 1.0 / 9.0 - 0.5 * (s * s + t * t) + (t / SQRT6) * (3.0 * s * s - t * t),
    )
    forms["I", 2, THIS_WORK] = le(
        2,
        THIS_WORK,
        "(9/2)(s^2 + t^2) - (3 sqrt(3)/sqrt(2))(3 s^2 - t^2) t <= 1",
        1.0,
        lambda s, t: 4.5 * (s * s + t * t) - K32 * (3.0 * s * s - t * t) * t,
    )
    forms["II", 2, REF8] = ge0(
        2,
        "1/9 - (s^2/2 + t^2) + (s/sqrt(6))(6 t^2 - s^2) >= 0",
        lambda s, t: 1.0 / 9.0 - (s * s / 2.0 + t * t) + (s / SQRT6) * (6.0 * t * t - s * s),
    )
    # quadratic part misprinted: 9((s^2+t^2)/2) instead of 9(s^2/2 + t^2)
    forms["II", 2, THIS_WORK] = le(
        2,
        THIS_WORK,
        "9((s^2 + t^2)/2) - (3 sqrt(3)/sqrt(2))(6 t^2 - s^2) s <= 1",
        1.0,
        lambda s, t: 9.0 * (s * s + t * t) / 2.0 - K32 * (6.0 * t * t - s * s) * s,
    )
    forms["III", 2, REF8] = ge0(
        2,
        "1/9 - (s^2 + t^2) + 3 s^2 t >= 0",
        lambda s, t: 1.0 / 9.0 - (s * s + t * t) + 3.0 * s * s * t,
    )
    forms["III", 2, THIS_WORK] = le(
        2,
        THIS_WORK,
        "9(s^2 + t^2) - 27 s^2 t <= 1",
        1.0,
        lambda s, t: 9.0 * (s * s + t * t) - 27.0 * s * s * t,
    )
    forms["IV", 2, REF8] = ge0(
        2,
        "1/9 - (s^2 + t^2) - 3 s^2 t >= 0",
        lambda s, t: 1.0 / 9.0 - (s * s + t * t) - 3.0 * s * s * t,
    )
    forms["IV", 2, THIS_WORK] = le(
        2,
        THIS_WORK,
        "9(s^2 + t^2) + 27 s^2 t <= 1",
        1.0,
        lambda s, t: 9.0 * (s * s + t * t) + 27.0 * s * s * t,
    )
    forms["V", 2, REF8] = ge0(
        2,
        "1/9 - (s^2/2 + t^2) - (s/sqrt(6))(3 t^2 + s^2) >= 0",
        lambda s, t: 1.0 / 9.0 - (s * s / 2.0 + t * t) - (s / SQRT6) * (3.0 * t * t + s * s),
    )
    forms["V", 2, THIS_WORK] = le(
        2,
        THIS_WORK,
        "9(s^2/2 + t^2) + (3 sqrt(3)/sqrt(2))(3 t^2 + s^2) s <= 1",
        1.0,
        lambda s, t: 9.0 * (s * s / 2.0 + t * t) + K32 * (3.0 * t * t + s * s) * s,
    )
    forms["VI", 2, REF8] = ge0(
        2, "1/9 - (s^2 + t^2) >= 0", lambda s, t: 1.0 / 9.0 - (s * s + t * t)
    )
    forms["VI", 2, THIS_WORK] = le(
        2, THIS_WORK, "9(s^2 + t^2) <= 1", 1.0, lambda s, t: 9.0 * (s * s + t * t)
    )
    forms["VII", 2, REF8] = ge0(
        2, "1/9 - (s^2/2 + t^2) >= 0", lambda s, t: 1.0 / 9.0 - (s * s / 2.0 + t * t)
    )
    forms["VII", 2, THIS_WORK] = le(
        2, THIS_WORK, "9(s^2/2 + t^2) <= 1", 1.0, lambda s, t: 9.0 * (s * s / 2.0 + t * t)
    )
    return forms


_INEQ_FORMS = _forms()


def paper_form(cluster_id: str, inequality_index: int, normalization: str) -> PaperForm:
    """Look up the printed form for (cluster, inequality, normalization)."""
    try:
        return _INEQ_FORMS[cluster_id, inequality_index, normalization]
    except KeyError:
        raise NoPrintedFormError(
            f"no printed inequality form for cluster {cluster_id!r}, "
            f"inequality {inequality_index}, normalization {normalization!r}"
        ) from None


def paper_lhs(case: ClusterCase, form: PaperForm, values: Sequence[float]) -> float:
    """Evaluate a printed inequality LHS verbatim at the given slot values."""
    if len(values) != 2 or case.arity != 2:
        raise ArityMismatchError("printed inequality forms are two-variable")
    return form.evaluate(values[0], values[1])


# --------------------------------------------------------------------------
# Printed component forms (transcribed for the errata report)
# --------------------------------------------------------------------------


def _u_components_I(s: float, t: float) -> tuple[float, float, float]:
    cross = (SQRT3 / 2.0) * s * t
    return (0.75 * s * s + 0.25 * t * t + cross, t * t, 0.75 * s * s + 0.25 * t * t - cross)


def _u_components_II(s: float, t: float) -> tuple[float, float, float]:
    # u3^2 printed with a minus sign; kept verbatim
    return (0.25 * s * s + 1.5 * t * t, s * s, 0.25 * s * s - 1.5 * t * t)


def _u_components_III(s: float, t: float) -> tuple[float, float, float]:
    return (0.75 * s * s + 1.5 * t * t, 1.5 * s * s, 0.75 * s * s + 1.5 * t * t)


def _u_components_VI(s: float, t: float) -> tuple[float, float, float]:
    return (0.75 * (s * s + t * t), 1.5 * (s * s + t * t), 0.75 * (s * s + t * t))


def _f_components_I(s: float, t: float) -> tuple[float, float, float]:
    f1 = (3.0 * s * s + t * t) / 12.0 - t * (9.0 * s * s + t * t) / (6.0 * SQRT6)
    f2 = (t * t / 3.0) * (1.0 + 2.0 * SQRT2_3 * t)
    f3 = (s / (2.0 * SQRT2)) * (SQRT2_3 * t - (s * s + t * t))
    return (f1, f2, f3)


def _f_components_II(s: float, t: float) -> tuple[float, float, float]:
    f1 = s * s / 12.0 - s**3 / (6.0 * SQRT6) + (1.0 - SQRT6 * s) * t * t / 2.0
    f2 = (s * s / 3.0) * (1.0 + 2.0 * SQRT2_3 * s)
    return (f1, f2, 0.0)


def _f_components_V(s: float, t: float) -> tuple[float, float, float]:
    f1 = s * s / 12.0 - s**3 / (6.0 * SQRT6) + t * t / 4.0
    f2 = (s * s / 3.0) * (1.0 + 2.0 * SQRT2_3 * s) + (1.0 + SQRT6 * s) * t * t / 2.0
    return (f1, f2, 0.0)


def _f_q1(s: float, t: float, p: float, q: float) -> tuple[float, float, float]:
    pq = p * p + q * q
    f1 = (3.0 * s * s + t * t) / 12.0 - t * (9.0 * s * s + t * t) / (6.0 * SQRT6) + pq / 4.0
    f2 = (t * t / 3.0) * (1.0 + 2.0 * SQRT2_3 * t) + (pq / 2.0) * (1.0 + SQRT6 * t)
    f3 = (s / (2.0 * SQRT2)) * (SQRT2_3 * t - (s * s + t * t) - 2.0 * pq)
    return (f1, f2, f3)


def _f_q2(s: float, t: float, p: float, q: float) -> tuple[float, float, float]:
    shift = (s * s - t * t) * p + 2.0 * s * t * q
    return ((s * s + t * t) / 4.0 + (p * p + q * q) / 2.0 - shift, (s * s + t * t) / 2.0 - shift, 0.0)


def _f_q3(s: float, t: float, p: float, q: float) -> tuple[float, float, float]:
    a2 = s * s + t * t + p * p + q * q
    c2 = s * p + t * q
    return (a2 / 4.0, a2 / 2.0, c2 / 2.0)


# --------------------------------------------------------------------------
# Errata report
# --------------------------------------------------------------------------


@dataclass(frozen=True, slots=True)
class ErrataEntry:
    """Verdict for one printed row against the normative matrix path."""

    table: str
    row: str
    printed_expression: str
    discrepancy: float
    verdict: str  # "match" | "mismatch"


#: A printed row counts as mismatching beyond this probe discrepancy.
MISMATCH_TOL = 1e-9

#: Probe values avoid zeros, equal magnitudes and symmetry, so sign and
#: coefficient errors cannot cancel.
PROBE_VALUES = (-0.2, 0.1, 0.25)


def _probe_points(arity: int) -> tuple[tuple[float, ...], ...]:
    return tuple(itertools.product(PROBE_VALUES, repeat=arity))


def _norm_trace2(p: ParamVector) -> float:
    return power_traces(build_t(p))[0]


def _norm_lhs1(p: ParamVector) -> float:
    return 1.5 * _norm_trace2(p)


def _norm_lhs2(p: ParamVector) -> float:
    trace2, trace3 = power_traces(build_t(p))
    return 9.0 * (trace2 / 2.0 - trace3)


def _norm_f(p: ParamVector) -> tuple[float, float, float]:
    v = v_vector(p).squares
    return ((v[0] + v[2]) / 18.0, v[1] / 9.0, (v[0] - v[2]) / 18.0)


def _normative_value(kind: str, p: ParamVector):
    if kind == "ineq1_ref8":
        return _norm_trace2(p)
    if kind == "ineq1_this":
        return _norm_lhs1(p)
    if kind == "ineq2_ref8":
        return 1.0 / 9.0 - _norm_lhs2(p) / 9.0
    if kind == "ineq2_this":
        return _norm_lhs2(p)
    if kind.startswith("u"):
        squares = u_vector(p).squares
        return squares if kind == "u_all" else squares[int(kind[1]) - 1]
    squares = _norm_f(p)
    return squares if kind == "F_all" else squares[int(kind[1]) - 1]


@dataclass(frozen=True, slots=True)
class _ProbeRow:
    table: str
    row: str
    printed_expression: str
    kind: str
    printed: Callable[..., float | tuple[float, float, float]]
    cases: tuple[ClusterCase, ...]


def _rows() -> tuple[_ProbeRow, ...]:
    def all_pairs(cid: str) -> tuple[ClusterCase, ...]:
        return cluster_cases(cid)

    def canonical(cid: str) -> tuple[ClusterCase, ...]:
        return (lookup(cid),)

    def group_cases(group: Iterable[tuple[str, str]]) -> tuple[ClusterCase, ...]:
        return tuple(_case("VI", slots) for slots in group)

    def ineq_rows(table: str, cid: str, index: int, label: str | None = None) -> list[_ProbeRow]:
        name = label or f"cluster {cid}"
        out = []
        for norm, kind_suffix in ((REF8, "ref8"), (THIS_WORK, "this")):
            form = paper_form(cid, index, norm)
            out.append(
                _ProbeRow(
                    table=table,
                    row=f"{name}, inequality {index} ({norm})",
                    printed_expression=form.printed_text,
                    kind=f"ineq{index}_{kind_suffix}",
                    printed=form.evaluate,
                    cases=all_pairs(cid),
                )
            )
        return out

    rows: list[_ProbeRow] = []

    # ----- first-inequality table -----
    rows += ineq_rows("5", "I", 1)
    rows.append(
        _ProbeRow(
            "5",
            "cluster I, u components",
            "u1^2 = (3/4)s^2 + (1/4)t^2 + (sqrt(3)/2)st; u2^2 = t^2; "
            "u3^2 = (3/4)s^2 + (1/4)t^2 - (sqrt(3)/2)st",
            "u_all",
            _u_components_I,
            canonical("I"),
        )
    )
    rows += ineq_rows("5", "II", 1)
    rows.append(
        _ProbeRow("5", "cluster II, u1^2", "(1/4)s^2 + (3/2)t^2", "u1",
                  lambda s, t: 0.25 * s * s + 1.5 * t * t, canonical("II"))
    )
    rows.append(
        _ProbeRow("5", "cluster II, u2^2", "s^2", "u2", lambda s, t: s * s, canonical("II"))
    )
    rows.append(
        _ProbeRow("5", "cluster II, u3^2", "(1/4)s^2 - (3/2)t^2", "u3",
                  lambda s, t: 0.25 * s * s - 1.5 * t * t, canonical("II"))
    )
    rows += ineq_rows("5", "III", 1)
    rows.append(
        _ProbeRow(
            "5",
            "cluster III, u components",
            "u1^2 = (3/4)s^2 + (3/2)t^2; u2^2 = (3/2)s^2; u3^2 = (3/4)s^2 + (3/2)t^2",
            "u_all",
            _u_components_III,
            canonical("III"),
        )
    )
    rows += ineq_rows("5", "IV", 1, "cluster IV (same as cluster III)")
    rows.append(
        _ProbeRow(
            "5",
            "cluster IV, u components (same as cluster III)",
            "u1^2 = (3/4)s^2 + (3/2)t^2; u2^2 = (3/2)s^2; u3^2 = (3/4)s^2 + (3/2)t^2",
            "u_all",
            _u_components_III,
            canonical("IV"),
        )
    )
    rows += ineq_rows("5", "V", 1, "cluster V (same as cluster II)")
    rows += ineq_rows("5", "VI", 1)
    rows.append(
        _ProbeRow(
            "5",
            "cluster VI, u components",
            "u1^2 = (3/4)s^2 + (3/4)t^2; u2^2 = (3/2)s^2 + (3/2)t^2; u3^2 = (3/4)s^2 + (3/4)t^2",
            "u_all",
            _u_components_VI,
            canonical("VI"),
        )
    )
    rows += ineq_rows("5", "VII", 1, "cluster VII (same as cluster II)")
    rows.append(
        _ProbeRow(
            "5",
            "cluster VII, u components (same as cluster II)",
            "u1^2 = (1/4)s^2 + (3/2)t^2; u2^2 = s^2; u3^2 = (1/4)s^2 - (3/2)t^2",
            "u_all",
            _u_components_II,
            canonical("VII"),
        )
    )

    # ----- second-inequality table -----
    rows += ineq_rows("5.2a", "I", 2)
    rows.append(
        _ProbeRow(
            "5.2a",
            "cluster I, F components",
            "F1 = (3s^2+t^2)/12 - t(9s^2+t^2)/(6 sqrt(6)); "
            "F2 = (t^2/3)(1 + 2 sqrt(2/3) t); "
            "F3 = (s/(2 sqrt(2)))(sqrt(2/3) t - (s^2+t^2))",
            "F_all",
            _f_components_I,
            canonical("I"),
        )
    )
    rows += ineq_rows("5.2a", "II", 2)
    rows.append(
        _ProbeRow(
            "5.2a",
            "cluster II, F components",
            "F1 = s^2/12 - s^3/(6 sqrt(6)) + (1 - sqrt(6) s) t^2/2; "
            "F2 = (s^2/3)(1 + 2 sqrt(2/3) s); F3 = 0",
            "F_all",
            _f_components_II,
            canonical("II"),
        )
    )
    rows += ineq_rows("5.2a", "III", 2)
    rows.append(
        _ProbeRow("5.2a", "cluster III, F1", "(s^2 + 2 t^2)/4 - s^2 t", "F1",
                  lambda s, t: (s * s + 2.0 * t * t) / 4.0 - s * s * t, canonical("III"))
    )
    rows.append(
        _ProbeRow("5.2a", "cluster III, F2", "-s^2 t", "F2",
                  lambda s, t: -(s * s) * t, canonical("III"))
    )
    rows += ineq_rows("5.2a", "IV", 2)
    rows.append(
        _ProbeRow("5.2a", "cluster IV, F1", "s^2/4 + t^2 (1/2 + s^2)", "F1",
                  lambda s, t: s * s / 4.0 + t * t * (0.5 + s * s), canonical("IV"))
    )
    rows.append(
        _ProbeRow("5.2a", "cluster IV, F2", "s^2 (1/2 + t)", "F2",
                  lambda s, t: s * s * (0.5 + t), canonical("IV"))
    )
    rows += ineq_rows("5.2a", "V", 2)
    rows.append(
        _ProbeRow(
            "5.2a",
            "cluster V, F components",
            "F1 = s^2/12 - s^3/(6 sqrt(6)) + t^2/4; "
            "F2 = (s^2/3)(1 + 2 sqrt(2/3) s) + (1 + sqrt(6) s) t^2/2; F3 = 0",
            "F_all",
            _f_components_V,
            canonical("V"),
        )
    )
    rows += ineq_rows("5.2a", "VII", 2)

    # ----- cluster VI second-inequality table -----
    rows += [r for r in ineq_rows("5.2b", "VI", 2)]
    group_forms: tuple[tuple[str, Callable[[float, float], tuple[float, float, float]]], ...] = (
        ("F1 = (s^2+t^2)/4, F2 = (s^2+t^2)/2, F3 = 0",
         lambda s, t: ((s * s + t * t) / 4.0, (s * s + t * t) / 2.0, 0.0)),
        ("F1 = (s^2+t^2)/4, F2 = (s^2+t^2)/2, F3 = st/2",
         lambda s, t: ((s * s + t * t) / 4.0, (s * s + t * t) / 2.0, s * t / 2.0)),
        ("F1 = (s^2+2t^2)/4, F2 = s^2/2, F3 = 0",
         lambda s, t: ((s * s + 2.0 * t * t) / 4.0, s * s / 2.0, 0.0)),
        ("F1 = (s^2+t^2)/4, F2 = (s^2+t^2)/2, F3 = 0",
         lambda s, t: ((s * s + t * t) / 4.0, (s * s + t * t) / 2.0, 0.0)),
        ("F1 = (s^2+t^2)/2, F2 = 0, F3 = 0",
         lambda s, t: ((s * s + t * t) / 2.0, 0.0, 0.0)),
        ("F1 = (s^2+2t^2)/4, F2 = s^2/2, F3 = 0",
         lambda s, t: ((s * s + 2.0 * t * t) / 4.0, s * s / 2.0, 0.0)),
    )
    for group, (text, fn) in zip(VI_GROUPS, group_forms):
        names = ",".join("(" + ",".join(p) + ")" for p in group)
        rows.append(
            _ProbeRow("5.2b", f"cluster VI group {names}, F components", text, "F_all", fn,
                      group_cases(group))
        )

    # ----- four-variable table -----
    quad_texts = (
        "F1 = (3s^2+t^2)/12 - t(9s^2+t^2)/(6 sqrt(6)) + (p^2+q^2)/4; "
        "F2 = (t^2/3)(1 + 2 sqrt(2/3) t) + ((p^2+q^2)/2)(1 + sqrt(6) t); "
        "F3 = (s/(2 sqrt(2)))(sqrt(2/3) t - (s^2+t^2) - 2(p^2+q^2))",
        "F1 = (s^2+t^2)/4 + (p^2+q^2)/2 - (s^2-t^2) p - 2 s t q; "
        "F2 = (s^2+t^2)/2 - (s^2-t^2) p - 2 s t q; F3 = 0",
        "F1 = A^2/4, F2 = A^2/2, F3 = C^2/2 with A^2 = s^2+t^2+p^2+q^2, C^2 = s p + t q",
    )
    for case, text, fn in zip(cluster_cases("Q"), quad_texts, (_f_q1, _f_q2, _f_q3)):
        rows.append(
            _ProbeRow("5.3", f"four-variable case {case.sub_case}, F components", text,
                      "F_all", fn, (case,))
        )

    return tuple(rows)


_PROBE_ROWS = _rows()


def errata_report() -> tuple[ErrataEntry, ...]:
    """Compare every cataloged printed row against the matrix path.

    Each row is evaluated on the fixed probe grid over all of its probe
    cases; the entry records the maximum absolute deviation and a
    match/mismatch verdict at :data:`MISMATCH_TOL`.
    """
    entries = []
    for row in _PROBE_ROWS:
        discrepancy = 0.0
        for case in row.cases:
            for point in _probe_points(case.arity):
                printed = row.printed(*point)
                normative = _normative_value(row.kind, instantiate(case, point))
                if isinstance(printed, tuple):
                    delta = max(abs(pv - nv) for pv, nv in zip(printed, normative))
                else:
                    delta = abs(printed - normative)
                discrepancy = max(discrepancy, delta)
        entries.append(
            ErrataEntry(
                table=row.table,
                row=row.row,
                printed_expression=row.printed_expression,
                discrepancy=discrepancy,
                verdict="mismatch" if discrepancy > MISMATCH_TOL else "match",
            )
        )
    return tuple(entries)


# --------------------------------------------------------------------------
# Region scanning
# --------------------------------------------------------------------------


@dataclass(frozen=True, slots=True)
class RegionCell:
    """One scanned grid point with its inequality values and vector squares."""

    s: float
    t: float
    lhs1: float
    lhs2: float
    physical: bool
    u_squares: tuple[float, float, float]
    v_squares: tuple[float, float, float]
    w_squares: tuple[float, float, float]


@dataclass(frozen=True, slots=True)
class RegionGrid:
    """A deterministic s-major scan of one case's admissible region."""

    case: ClusterCase
    s_values: tuple[float, ...]
    t_values: tuple[float, ...]
    step: float
    fixed: tuple[tuple[str, float], ...]
    cells: tuple[RegionCell, ...]


def _axis(lo: float, hi: float, step: float) -> tuple[float, ...]:
    if not (math.isfinite(lo) and math.isfinite(hi)) or hi < lo:
        raise InvalidParameterError(f"invalid axis range [{lo}, {hi}]")
    if not (math.isfinite(step) and step > 0.0):
        raise InvalidParameterError(f"step must be positive and finite, got {step}")
    n = int(math.floor((hi - lo) / step + 1e-9)) + 1
    return tuple(lo + i * step for i in range(n))


def scan_region(
    case: ClusterCase,
    s_range: tuple[float, float],
    t_range: tuple[float, float],
    step: float,
    fixed: dict[str, float] | None = None,
) -> RegionGrid:
    """Scan a 2D slice on a regular grid via the normative modules.

    For four-slot cases the last two slots are clamped to the values in
    ``fixed`` (keys ``"p"`` and ``"q"``, default 0.0); two-slot cases
    reject ``fixed``. Cells are emitted s-major then t, and the output is
    a pure function of the inputs.
    """
    fixed = dict(fixed or {})
    if case.arity == 2:
        if fixed:
            raise InvalidParameterError(f"case {case.sub_case} has no fixable slots")
        tail: tuple[float, ...] = ()
        fixed_record: tuple[tuple[str, float], ...] = ()
    else:
        unknown = set(fixed) - {"p", "q"}
        if unknown:
            raise InvalidParameterError(f"unknown fixed slots {sorted(unknown)}; expected 'p'/'q'")
        tail = (float(fixed.get("p", 0.0)), float(fixed.get("q", 0.0)))
        fixed_record = (("p", tail[0]), ("q", tail[1]))

    s_values = _axis(s_range[0], s_range[1], step)
    t_values = _axis(t_range[0], t_range[1], step)
    cells = []
    for s in s_values:
        for t in t_values:
            params = instantiate(case, (s, t, *tail))
            report = physicality_report(params)
            triple = bloch_triple(params)
            cells.append(
                RegionCell(
                    s=s,
                    t=t,
                    lhs1=report.ineq1.lhs_direct,
                    lhs2=report.ineq2.lhs_direct,
                    physical=report.physical,
                    u_squares=triple.u.squares,
                    v_squares=triple.v.squares,
                    w_squares=triple.w.squares,
                )
            )
    return RegionGrid(
        case=case,
        s_values=s_values,
        t_values=t_values,
        step=float(step),
        fixed=fixed_record,
        cells=tuple(cells),
    )


CSV_HEADER = "s,t,lhs1,lhs2,physical,u1sq,u2sq,u3sq,v1sq,v2sq,v3sq,w1sq,w2sq,w3sq"


def _fmt(value: float) -> str:
    return "0" if value == 0.0 else format(value, ".17g")


def region_to_csv(grid: RegionGrid) -> str:
    """Serialize a grid to CSV: fixed header, 17 significant digits,
    ``physical`` as 0/1, rows in cell order."""
    lines = [CSV_HEADER]
    for c in grid.cells:
        fields = [
            _fmt(c.s),
            _fmt(c.t),
            _fmt(c.lhs1),
            _fmt(c.lhs2),
            "1" if c.physical else "0",
            *(_fmt(v) for v in c.u_squares),
            *(_fmt(v) for v in c.v_squares),
            *(_fmt(v) for v in c.w_squares),
        ]
        lines.append(",".join(fields))
    return "\n".join(lines) + "\n"


#: Cell fill colors: physical / fails only the second inequality / fails the first.
SVG_COLORS = ("#2a9d8f", "#e9c46a", "#e76f51")


def region_to_svg(grid: RegionGrid, cell_px: int = 14) -> str:
    """Render the verdict raster as a minimal SVG (one rect per cell).

    s runs along the horizontal axis, t upward; colors distinguish
    physical cells, cells failing only the second inequality (the
    negative-determinant shell), and cells failing the first.
    """
    ns, nt = len(grid.s_values), len(grid.t_values)
    width, height = ns * cell_px, nt * cell_px
    parts = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{height}" '
        f'viewBox="0 0 {width} {height}">',
        f"<title>cluster {grid.case.cluster_id} {grid.case.sub_case}</title>",
    ]
    for idx, cell in enumerate(grid.cells):
        i, j = divmod(idx, nt)
        if cell.physical:
            color = SVG_COLORS[0]
        elif cell.lhs1 <= 1.0 + TOLERANCE:
            color = SVG_COLORS[1]
        else:
            color = SVG_COLORS[2]
        x = i * cell_px
        y = (nt - 1 - j) * cell_px
        parts.append(f'<rect x="{x}" y="{y}" width="{cell_px}" height="{cell_px}" fill="{color}"/>')
    parts.append("</svg>")
    return "\n".join(parts) + "\n"
