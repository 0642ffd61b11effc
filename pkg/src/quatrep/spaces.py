"""Quaternion-Kaehler symmetric spaces and integrability verdicts.

The only computed ingredient of a verdict is the dimension inequality
``minimal quaternionic real dimension <= manifold dimension + 4``. Positive
answers for the model geometries (flat space, quaternionic hyperbolic
space, quaternionic projective space) are recorded facts, not derived.
"""

from __future__ import annotations

import enum
import re
from dataclasses import dataclass, field
from typing import Optional

from .minrep import MinRepResult, minimal_quaternionic_rep
from .reftables import BERGER_E7_5, QK_ROWS, BergerRow, SpaceRow
from .realforms import Catalog, RealForm, default_catalog, family_instance, normalize_name
from .rootsys import algebra_real_dim


class Curvature(enum.Enum):
    FLAT = "Flat"
    COMPACT = "Compact"
    NONCOMPACT = "NonCompact"


class Outcome(enum.Enum):
    INTEGRABLE = "Integrable"
    NOT_INTEGRABLE = "NotIntegrable"
    KNOWN_INTEGRABLE = "BoundSatisfiedKnownIntegrable"
    UNRESOLVED = "BoundSatisfiedUnresolved"


LOW_DIM_WARNING = (
    "dimension 4: an almost quaternionic structure is a conformal structure here; "
    "the integrability criterion is meant for dimension 4n with n >= 2"
)


@dataclass(frozen=True)
class Verdict:
    outcome: Outcome
    bound_lhs: Optional[int]
    bound_rhs: Optional[int]
    witness: Optional[MinRepResult] = None
    warnings: tuple[str, ...] = ()
    note: str = ""
    # set when the question is handed to another check, e.g. "riemannian"
    deferred: Optional[str] = None

    @property
    def integrable(self) -> bool:
        return self.outcome in (Outcome.INTEGRABLE, Outcome.KNOWN_INTEGRABLE)

    @property
    def inequality(self) -> str:
        if self.bound_lhs is None:
            return ""
        op = ">" if self.bound_lhs > self.bound_rhs else "<="
        return f"{self.bound_lhs} {op} {self.bound_rhs}"


# ---------------------------------------------------------------------------
# algebra dimensions from names

_COMPACT_CLASSICAL = {
    "su": lambda m: m * m - 1,
    "u": lambda m: m * m,
    "so": lambda m: m * (m - 1) // 2,
    "sp": lambda m: m * (2 * m + 1),
}
_BARE_EXCEPTIONAL = {"e6": 78, "e7": 133, "e8": 248, "f4": 52, "g2": 14}


def algebra_dim(name: str, catalog: Optional[Catalog] = None) -> int:
    """Real dimension of a summand such as ``so(12)``, ``sp(1)``, ``R``, ``e7`` or ``so*(12)``."""
    key = normalize_name(name)
    if key == "r":
        return 1
    if key in _BARE_EXCEPTIONAL:
        return _BARE_EXCEPTIONAL[key]
    m = re.fullmatch(r"(su|u|so|sp)\((\d+)\)", key)
    if m:
        return _COMPACT_CLASSICAL[m[1]](int(m[2]))
    form = (catalog or default_catalog()).lookup(name)
    return algebra_real_dim(form.complex_type)


def sum_dim(expr: str, catalog: Optional[Catalog] = None) -> int:
    return sum(algebra_dim(part, catalog) for part in split_sum(expr))


def split_sum(expr: str) -> list[str]:
    return [p for p in re.split(r"\s*(?:\+|⊕)\s*", expr.strip()) if p]


# ---------------------------------------------------------------------------
# catalog of spaces


@dataclass(frozen=True)
class SymmetricSpace:
    g: Optional[RealForm]
    g_display: str
    k_name: str
    k_dim: int
    dim_gk: int
    sigma_type: str
    curvature_class: Curvature
    row: Optional[SpaceRow] = field(default=None, compare=False, repr=False)
    param: Optional[int] = None
    model: Optional[str] = None  # "flat", "hyperbolic" or "projective"

    @property
    def label(self) -> str:
        return f"{self.g_display}/({self.k_name})"


def _is_hyperbolic(f: RealForm) -> bool:
    return (f.family_key == "sp" and f.parameters[1] == 1) or f.name == "so(4,1)"


def compact_form(f: RealForm, catalog: Optional[Catalog] = None) -> RealForm:
    catalog = catalog or default_catalog()
    for g in catalog.forms:
        if g.complex_type == f.complex_type and g.is_compact:
            return g
    t = f.complex_type
    name = {"A": f"su({t.rank + 1})", "B": f"so({2 * t.rank + 1})",
            "C": f"sp({t.rank})", "D": f"so({2 * t.rank})"}[t.family]
    return family_instance(name)


def noncompact_space(row: SpaceRow, n: int, catalog: Optional[Catalog] = None) -> SymmetricSpace:
    catalog = catalog or default_catalog()
    g = catalog.lookup(row.form_name(n))
    k_name = row.k_name(n)
    return SymmetricSpace(
        g, row.display_name(n), k_name, sum_dim(k_name, catalog) + row.k_center, row.dim(n), row.sigma,
        Curvature.NONCOMPACT, row, n, "hyperbolic" if _is_hyperbolic(g) else None,
    )


def compact_dual(s: SymmetricSpace, catalog: Optional[Catalog] = None) -> SymmetricSpace:
    g = compact_form(s.g, catalog)
    model = "projective" if s.model == "hyperbolic" else None
    return SymmetricSpace(g, g.name, s.k_name, s.k_dim, s.dim_gk, s.sigma_type, Curvature.COMPACT,
                          s.row, s.param, model)


def flat_space(n: int) -> SymmetricSpace:
    if n < 1:
        raise ValueError(f"flat model needs n >= 1, got {n}")
    return SymmetricSpace(None, f"H^{n}", f"sp({n})+sp(1)", algebra_dim(f"sp({n})") + 3, 4 * n, "",
                          Curvature.FLAT, None, n, "flat")


def qk_catalog(catalog: Optional[Catalog] = None) -> list[SymmetricSpace]:
    """Every tabulated row at its instances, each compact dual, and H^1..H^3."""
    out = []
    for row in QK_ROWS:
        for n in row.params:
            s = noncompact_space(row, n, catalog)
            out.append(s)
            out.append(compact_dual(s, catalog))
    out.extend(flat_space(n) for n in (1, 2, 3))
    return out


def space_for_form(name: str, catalog: Optional[Catalog] = None) -> SymmetricSpace:
    """The non-compact space whose isometry algebra is the named form, at any rank."""
    catalog = catalog or default_catalog()
    f = catalog.lookup(name)
    for row in QK_ROWS:
        if row.param_min is None:
            candidates = row.params
        else:
            candidates = (f.rank,) if f.rank >= row.param_min else ()
        for n in candidates:
            if row.form_name(n) == f.name:
                return noncompact_space(row, n, catalog)
    raise LookupError(f"{f.name} is not the isometry algebra of a tabulated quaternion-Kaehler symmetric space")


# ---------------------------------------------------------------------------
# verdicts


def _bound(f: RealForm, manifold_dim: int) -> Verdict:
    res = minimal_quaternionic_rep(f)
    lhs, rhs = res.real_dim, manifold_dim + 4
    outcome = Outcome.NOT_INTEGRABLE if lhs > rhs else Outcome.UNRESOLVED
    warnings = (LOW_DIM_WARNING,) if manifold_dim == 4 else ()
    return Verdict(outcome, lhs, rhs, res, warnings)


def check_bound(f: RealForm, manifold_dim: int) -> Verdict:
    if not isinstance(manifold_dim, int) or manifold_dim < 4 or manifold_dim % 4:
        raise ValueError(f"manifold dimension must be a positive multiple of 4, got {manifold_dim!r}")
    return _bound(f, manifold_dim)


def check_qk_symmetric(s: SymmetricSpace) -> Verdict:
    if s.curvature_class is Curvature.FLAT:
        return Verdict(Outcome.INTEGRABLE, None, None, note="flat quaternionic space")
    v = _bound(s.g, s.dim_gk)
    if s.curvature_class is Curvature.COMPACT:
        if s.model == "projective":
            return Verdict(Outcome.INTEGRABLE, v.bound_lhs, v.bound_rhs, v.witness, v.warnings,
                           "compact case: quaternionic projective space")
        return Verdict(Outcome.NOT_INTEGRABLE, v.bound_lhs, v.bound_rhs, v.witness, v.warnings,
                       "compact case: not quaternionic projective space")
    if v.outcome is Outcome.UNRESOLVED and s.model == "hyperbolic":
        return Verdict(Outcome.KNOWN_INTEGRABLE, v.bound_lhs, v.bound_rhs, v.witness, v.warnings,
                       "quaternionic hyperbolic space")
    note = "dimension bound violated" if v.outcome is Outcome.NOT_INTEGRABLE else "dimension bound satisfied"
    return Verdict(v.outcome, v.bound_lhs, v.bound_rhs, v.witness, v.warnings, note)


EXCEPTIONAL_TRANSITIVE = (("E", 6), ("E", 8), ("F", 4), ("G", 2))


def check_exceptional_transitive(f: RealForm) -> Verdict:
    """Bound for a transitive action, where the manifold dimension is at most dim g."""
    t = f.complex_type
    if (t.family, t.rank) not in EXCEPTIONAL_TRANSITIVE:
        raise ValueError(f"{f.name} is of type {t}; expected one of E6, E8, F4, G2")
    v = _bound(f, algebra_real_dim(t))
    return Verdict(v.outcome, v.bound_lhs, v.bound_rhs, v.witness, (), "transitive action: dim M <= dim g")


class UnknownSubalgebra(ValueError):
    pass


def _sum_key(expr: str) -> tuple[str, ...]:
    return tuple(normalize_name(p) for p in split_sum(expr))


def berger_row(h_name: str) -> BergerRow:
    key = _sum_key(h_name)
    for row in BERGER_E7_5:
        if _sum_key(row.h) == key:
            return row
    known = ", ".join(r.h for r in BERGER_E7_5)
    raise UnknownSubalgebra(f"unknown subalgebra {h_name!r} of e7(-5); known: {known}")


def check_affine_e7(h_name: Optional[str] = None, form: str = "e7(-5)",
                    catalog: Optional[Catalog] = None) -> Verdict:
    catalog = catalog or default_catalog()
    g = catalog.lookup(form)
    t = g.complex_type
    if (t.family, t.rank) != ("E", 7):
        raise ValueError(f"{g.name} is not a real form of E7")
    total = algebra_real_dim(t)
    if g.name == "e7(-133)":
        v = _bound(g, total)
        return Verdict(v.outcome, v.bound_lhs, v.bound_rhs, v.witness, (),
                       "compact group: every affine symmetric space is Riemannian", deferred="riemannian")
    if g.name != "e7(-5)":
        v = _bound(g, total)
        return Verdict(v.outcome, v.bound_lhs, v.bound_rhs, v.witness, (),
                       "bound with dim h = 0, valid for every subalgebra h")
    if h_name is None:
        raise UnknownSubalgebra("e7(-5) needs a subalgebra name")
    row = berger_row(h_name)
    if row.riemannian:
        v = check_qk_symmetric(space_for_form("e7(-5)", catalog))
        return Verdict(v.outcome, v.bound_lhs, v.bound_rhs, v.witness, v.warnings,
                       "Riemannian pair, decided by the symmetric space check", deferred="riemannian")
    h_dim = sum(algebra_dim(p, catalog) for p in row.parts)
    # total - h_dim need not be a multiple of 4, so the raw inequality is used
    v = _bound(g, total - h_dim)
    return Verdict(v.outcome, v.bound_lhs, v.bound_rhs, v.witness, (),
                   f"dim g/h = {total} - {h_dim}")
