"""Explicit antiinvolutions for small representations, in exact arithmetic.

A complex vector space C^N is handled through its real doubling R^{2N}
(real parts first, then imaginary parts). A complex matrix X + iY becomes
[[X, -Y], [Y, X]] and an antilinear map v -> C conj(v) with C = A + iB
becomes [[A, B], [B, -A]]. All entries are ``Fraction``.

Supported: rank-1 forms on any sl2 module of dimension <= 20 (the
irreducible J when one exists, otherwise doubled), and the two 3-dimensional
modules of the rank-2 forms sl(3,R), su(3), su(2,1) (doubled only).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import factorial

from .classify import RepClass, classify_irrep
from .realforms import RealForm
from .rootsys import DominantWeight, build_root_system, weyl_dim

MAX_WITNESS_DIM = 20

Matrix = tuple[tuple[Fraction, ...], ...]


class WitnessUnsupported(ValueError):
    pass


def _zeros(n, m=None):
    return [[Fraction(0)] * (n if m is None else m) for _ in range(n)]


def _freeze(rows) -> Matrix:
    return tuple(tuple(Fraction(x) for x in row) for row in rows)


def identity(n: int) -> Matrix:
    return _freeze([[int(i == j) for j in range(n)] for i in range(n)])


def matmul(a: Matrix, b: Matrix) -> Matrix:
    cols = list(zip(*b))
    return tuple(tuple(sum((x * y for x, y in zip(row, col)), Fraction(0)) for col in cols) for row in a)


def neg(a: Matrix) -> Matrix:
    return tuple(tuple(-x for x in row) for row in a)


def _blocks(tl, tr, bl, br) -> Matrix:
    return _freeze([list(a) + list(b) for a, b in zip(tl, tr)] + [list(a) + list(b) for a, b in zip(bl, br)])


def realify_linear(re_part, im_part) -> Matrix:
    return _blocks(re_part, neg(im_part), im_part, re_part)


def realify_antilinear(re_part, im_part) -> Matrix:
    return _blocks(re_part, im_part, im_part, neg(re_part))


@dataclass(frozen=True)
class ComplexMatrix:
    re: Matrix
    im: Matrix

    def times_i(self) -> "ComplexMatrix":
        return ComplexMatrix(neg(self.im), self.re)

    def conj(self) -> "ComplexMatrix":
        return ComplexMatrix(self.re, neg(self.im))


def _add(a, b):
    return tuple(tuple(x + y for x, y in zip(r, s)) for r, s in zip(a, b))


def _real(m) -> ComplexMatrix:
    m = _freeze(m)
    return ComplexMatrix(m, _freeze(_zeros(len(m))))


def _sum(*ms: ComplexMatrix) -> ComplexMatrix:
    out = ms[0]
    for m in ms[1:]:
        out = ComplexMatrix(_add(out.re, m.re), _add(out.im, m.im))
    return out


def _scale(m: ComplexMatrix, c) -> ComplexMatrix:
    c = Fraction(c)
    return ComplexMatrix(tuple(tuple(c * x for x in r) for r in m.re), tuple(tuple(c * x for x in r) for r in m.im))


def _block_diag(a: ComplexMatrix, b: ComplexMatrix) -> ComplexMatrix:
    n, m = len(a.re), len(b.re)
    z1, z2 = _freeze(_zeros(n, m)), _freeze(_zeros(m, n))
    return ComplexMatrix(_blocks(a.re, z1, z2, b.re), _blocks(a.im, z1, z2, b.im))


# ---------------------------------------------------------------------------
# representations


def sl2_module(m: int) -> tuple[ComplexMatrix, ComplexMatrix, ComplexMatrix]:
    """H, E, F on the module of highest weight m, basis v_0..v_m (v_k of weight m-2k)."""
    n = m + 1
    h, e, f = _zeros(n), _zeros(n), _zeros(n)
    for k in range(n):
        h[k][k] = Fraction(m - 2 * k)
        if k + 1 < n:
            f[k + 1][k] = Fraction(1)
        if k > 0:
            e[k - 1][k] = Fraction(k * (m - k + 1))
    return _real(h), _real(e), _real(f)


def _real_basis_rank1(name: str, h, e, f) -> list[ComplexMatrix]:
    if name == "su(2)":
        return [h.times_i(), _sum(e, _scale(f, -1)), _sum(e, f).times_i()]
    if name == "su(1,1)":
        return [h.times_i(), _sum(e, f), _sum(e, _scale(f, -1)).times_i()]
    if name == "sl(2,R)":
        return [h, e, f]
    raise WitnessUnsupported(f"no explicit basis for rank-1 form {name}")


def _unit(n, i, j):
    m = _zeros(n)
    m[i][j] = Fraction(1)
    return _real(m)


def _sl3_real_basis(name: str) -> list[ComplexMatrix]:
    """Real basis of the form inside gl(3,C), defining representation."""
    n = 3
    diag = [_sum(_unit(n, 0, 0), _scale(_unit(n, 1, 1), -1)), _sum(_unit(n, 1, 1), _scale(_unit(n, 2, 2), -1))]
    off = [(i, j) for i in range(n) for j in range(n) if i < j]
    if name == "sl(3,R)":
        return diag + [_unit(n, i, j) for i, j in off] + [_unit(n, j, i) for i, j in off]
    if name in ("su(3)", "su(2,1)"):
        # X^dagger S + S X = 0 with S = diag(1, 1, s)
        s = 1 if name == "su(3)" else -1
        out = [d.times_i() for d in diag]
        for i, j in off:
            sign = s if j == 2 else 1
            out.append(_sum(_unit(n, i, j), _scale(_unit(n, j, i), -sign)))
            out.append(_sum(_unit(n, i, j), _scale(_unit(n, j, i), sign)).times_i())
        return out
    raise WitnessUnsupported(f"no explicit basis for rank-2 form {name}")


def _dual(m: ComplexMatrix) -> ComplexMatrix:
    return ComplexMatrix(neg(tuple(zip(*m.re))), neg(tuple(zip(*m.im))))


# ---------------------------------------------------------------------------
# witnesses


@dataclass(frozen=True)
class AntiinvolutionWitness:
    rep_matrices: tuple[Matrix, ...]
    j_matrix: Matrix
    i_matrix: Matrix
    kind: str  # "first" or "second"
    construction: str  # "irreducible" or "doubled"

    def checks(self) -> dict[str, bool]:
        n = len(self.j_matrix)
        sign = 1 if self.kind == "first" else -1
        target = identity(n) if sign == 1 else neg(identity(n))
        j, i = self.j_matrix, self.i_matrix
        return {
            "square": matmul(j, j) == target,
            "antilinear": matmul(j, i) == neg(matmul(i, j)),
            "equivariant": all(matmul(j, r) == matmul(r, j) for r in self.rep_matrices),
        }

    def holds(self) -> bool:
        return all(self.checks().values())


def _irreducible_sl2_j(name: str, m: int) -> ComplexMatrix:
    n = m + 1
    if name == "sl(2,R)":
        # the weight basis is already a real structure
        return _real(identity(n))
    # J v_k = s^k k!/(m-k)! v_{m-k}: s = -1 gives J^2 = (-1)^m for su(2),
    # s = +1 gives J^2 = 1 for su(1,1)
    s = -1 if name == "su(2)" else 1
    c = _zeros(n)
    for k in range(n):
        c[m - k][k] = Fraction(s ** k * factorial(k), factorial(m - k))
    return _real(c)


def _witness(rep: list[ComplexMatrix], j: ComplexMatrix, kind: str, construction: str) -> AntiinvolutionWitness:
    n = len(j.re)
    zero = _freeze(_zeros(n))
    return AntiinvolutionWitness(
        tuple(realify_linear(r.re, r.im) for r in rep),
        realify_antilinear(j.re, j.im),
        realify_linear(zero, identity(n)),
        kind,
        construction,
    )


def build_antiinvolution_witness(f: RealForm, weight, kind: str, doubled: bool | None = None) -> AntiinvolutionWitness:
    """Antiinvolution of the requested kind ("first" or "second").

    With ``doubled=None`` the irreducible module is used when its class
    matches the kind (real for first, quaternionic for second) and the
    doubled module V + conj(V) otherwise.
    """
    if kind not in ("first", "second"):
        raise ValueError(f"kind must be 'first' or 'second', got {kind!r}")
    w = weight if isinstance(weight, DominantWeight) else DominantWeight(tuple(weight))
    if f.rank not in (1, 2):
        raise WitnessUnsupported(f"witnesses are limited to rank 1 and rank 2 forms, {f.name} has rank {f.rank}")
    dim = weyl_dim(build_root_system(f.complex_type), w)
    if dim > MAX_WITNESS_DIM:
        raise WitnessUnsupported(f"witnesses are limited to dimension <= {MAX_WITNESS_DIM}, got {dim}")

    if f.rank == 1:
        h, e, fm = sl2_module(w.coords[0])
        rep = _real_basis_rank1(f.name, h, e, fm)
    else:
        if f.complex_type.family != "A" or w.coords not in ((1, 0), (0, 1)):
            raise WitnessUnsupported(
                f"rank-2 witnesses cover the 3-dimensional modules of A2 forms only, got {f.name} {w}")
        rep = _sl3_real_basis(f.name)
        if w.coords == (0, 1):
            rep = [_dual(r) for r in rep]

    cls = classify_irrep(f, w)
    matching = cls is (RepClass.REAL if kind == "first" else RepClass.QUATERNIONIC)
    if doubled is None:
        doubled = not (matching and f.rank == 1)
    if not doubled:
        if not matching:
            raise WitnessUnsupported(f"rho({w}) of {f.name} is {cls.value}; no antiinvolution of the {kind} kind on it")
        if f.rank != 1:
            raise WitnessUnsupported("irreducible witnesses are only built for rank 1 forms")
        return _witness(rep, _irreducible_sl2_j(f.name, w.coords[0]), kind, "irreducible")

    # V + conj(V) in coordinates where the second block carries conjugated entries
    rep2 = [_block_diag(r, r.conj()) for r in rep]
    n = dim
    z, one = _freeze(_zeros(n)), identity(n)
    swap_top = neg(one) if kind == "second" else one
    j = ComplexMatrix(_blocks(z, swap_top, one, z), _freeze(_zeros(2 * n)))
    return _witness(rep2, j, kind, "doubled")
