"""Real / quaternionic / not-self-conjugate classification of irreducibles."""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Iterable, Optional

from .realforms import RealForm, index_classification
from .rootsys import DominantWeight, build_root_system, weyl_dim


class RepClass(enum.Enum):
    REAL = "Real"
    NOT_SELF_CONJUGATE = "NotSelfConjugate"
    QUATERNIONIC = "Quaternionic"

    @property
    def epsilon(self) -> Optional[int]:
        """+1, -1, or None when the indicator is undefined."""
        return {"Real": 1, "Quaternionic": -1}.get(self.value)

    @classmethod
    def from_epsilon(cls, eps: Optional[int]) -> "RepClass":
        if eps is None:
            return cls.NOT_SELF_CONJUGATE
        return cls.REAL if eps == 1 else cls.QUATERNIONIC


class HRepKind(enum.Enum):
    QUATERNIONIC_IRREDUCIBLE = "QuaternionicIrreducible"
    DOUBLED_IRREDUCIBLE = "DoubledIrreducible"


def _weight(f: RealForm, weight) -> DominantWeight:
    w = weight if isinstance(weight, DominantWeight) else DominantWeight(tuple(weight))
    if w.rank != f.rank:
        raise ValueError(f"{f.name} has rank {f.rank}, weight {w} has {w.rank} coordinates")
    return w


def galois_conjugate_weight(f: RealForm, weight) -> DominantWeight:
    w = _weight(f, weight)
    out = [0] * f.rank
    for i, c in enumerate(w.coords, start=1):
        out[f.t(i) - 1] = c
    return DominantWeight(tuple(out))


@dataclass(frozen=True)
class Classification:
    rep_class: RepClass
    reason: str


def explain_irrep(f: RealForm, weight) -> Classification:
    """Classification together with the clause of the criterion that fired."""
    w = _weight(f, weight)
    idx = index_classification(f)
    lam = w.coords
    moved = [i for i in sorted(idx.c_set) if lam[i - 1] != lam[f.t(i) - 1]]
    if moved:
        i = moved[0]
        return Classification(
            RepClass.NOT_SELF_CONJUGATE,
            f"coefficient {lam[i - 1]} at node {i} differs from {lam[f.t(i) - 1]} at its conjugate node {f.t(i)}",
        )
    total = sum(lam[i - 1] for i in idx.q_set)
    nodes = ",".join(map(str, sorted(idx.q_set))) or "none"
    if total % 2:
        return Classification(RepClass.QUATERNIONIC, f"self-conjugate; sum over quaternionic nodes {{{nodes}}} is {total}, odd")
    return Classification(RepClass.REAL, f"self-conjugate; sum over quaternionic nodes {{{nodes}}} is {total}, even")


def classify_irrep(f: RealForm, weight) -> RepClass:
    return explain_irrep(f, weight).rep_class


def combine(classes: Iterable[RepClass]) -> RepClass:
    eps = 1
    for c in classes:
        if c.epsilon is None:
            return RepClass.NOT_SELF_CONJUGATE
        eps *= c.epsilon
    return RepClass.from_epsilon(eps)


def classify_product(factors) -> RepClass:
    """Class of an outer tensor product of irreducibles of a product of simple forms."""
    factors = list(factors)
    if not factors:
        raise ValueError("classify_product needs at least one factor")
    # evaluate every factor so malformed weights are reported even after an absorbing one
    return combine([classify_irrep(f, w) for f, w in factors])


def canonical_key(weight: DominantWeight) -> tuple[int, ...]:
    """Sort key for weights: a larger coefficient on an earlier node sorts first.

    So w1 sorts before w3, and a doubled descriptor for su(3,1) is stored
    under w1 with w3 as its conjugate.
    """
    return tuple(-c for c in weight.coords)


@dataclass(frozen=True)
class HRepDescriptor:
    kind: HRepKind
    weight: DominantWeight
    real_dim: int
    conjugate: DominantWeight

    @property
    def nodes(self) -> frozenset[int]:
        return frozenset(self.weight.support()) | frozenset(self.conjugate.support())

    def label(self) -> str:
        if self.kind is HRepKind.QUATERNIONIC_IRREDUCIBLE:
            return f"rho({self.weight})"
        return f"rho({self.weight})+conj"


def irreducible_hrep(f: RealForm, weight) -> HRepDescriptor:
    w = _weight(f, weight)
    dim = weyl_dim(build_root_system(f.complex_type), w)
    if classify_irrep(f, w) is RepClass.QUATERNIONIC:
        return HRepDescriptor(HRepKind.QUATERNIONIC_IRREDUCIBLE, w, 2 * dim, w)
    partner = galois_conjugate_weight(f, w)
    first, second = sorted((w, partner), key=canonical_key)
    return HRepDescriptor(HRepKind.DOUBLED_IRREDUCIBLE, first, 4 * dim, second)
