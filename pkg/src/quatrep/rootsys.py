"""Root data of simple complex Lie algebras and the Weyl dimension formula.

Nodes follow the Bourbaki numbering and are 1-based in every public
signature that talks about nodes; coordinate tuples are 0-based as usual.
The Cartan matrix convention is ``a[i][j] = <alpha_i^vee, alpha_j>``.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from math import gcd

FAMILIES = "ABCDEFG"


class LieTypeError(ValueError):
    pass


@dataclass(frozen=True, order=True)
class LieType:
    family: str
    rank: int

    def __post_init__(self):
        if self.family not in FAMILIES:
            raise LieTypeError(f"unknown family {self.family!r}; expected one of {FAMILIES}")
        if not isinstance(self.rank, int) or self.rank < 1:
            raise LieTypeError(f"rank must be a positive integer, got {self.rank!r}")
        if self.family == "D" and self.rank < 3:
            raise LieTypeError(f"D{self.rank}: family D requires rank >= 3")
        if self.family == "E" and self.rank not in (6, 7, 8):
            raise LieTypeError(f"E{self.rank}: family E requires rank 6, 7 or 8")
        if self.family == "F" and self.rank != 4:
            raise LieTypeError(f"F{self.rank}: family F requires rank 4")
        if self.family == "G" and self.rank != 2:
            raise LieTypeError(f"G{self.rank}: family G requires rank 2")

    def __str__(self):
        return f"{self.family}{self.rank}"

    @classmethod
    def parse(cls, text: str) -> "LieType":
        m = re.fullmatch(r"\s*([A-Ga-g])_?(\d+)\s*", text)
        if not m:
            raise LieTypeError(f"cannot parse Lie type {text!r}")
        return cls(m.group(1).upper(), int(m.group(2)))


@dataclass(frozen=True)
class DominantWeight:
    coords: tuple[int, ...]

    def __post_init__(self):
        coords = tuple(self.coords)
        if any((not isinstance(c, int)) or c < 0 for c in coords):
            raise ValueError(f"dominant weight needs nonnegative integer coordinates, got {coords}")
        object.__setattr__(self, "coords", coords)

    @classmethod
    def fundamental(cls, rank: int, node: int) -> "DominantWeight":
        if not 1 <= node <= rank:
            raise ValueError(f"node {node} out of range 1..{rank}")
        return cls(tuple(int(i == node - 1) for i in range(rank)))

    @classmethod
    def zero(cls, rank: int) -> "DominantWeight":
        return cls((0,) * rank)

    @property
    def rank(self) -> int:
        return len(self.coords)

    def support(self) -> tuple[int, ...]:
        """1-based nodes with nonzero coefficient."""
        return tuple(i + 1 for i, c in enumerate(self.coords) if c)

    def __add__(self, other: "DominantWeight") -> "DominantWeight":
        if self.rank != other.rank:
            raise ValueError("rank mismatch")
        return DominantWeight(tuple(a + b for a, b in zip(self.coords, other.coords)))

    def __str__(self):
        if not any(self.coords):
            return "0"
        terms = []
        for i, c in enumerate(self.coords):
            if c == 1:
                terms.append(f"w{i + 1}")
            elif c:
                terms.append(f"{c}w{i + 1}")
        return "+".join(terms)


def _cartan_matrix(t: LieType) -> tuple[tuple[int, ...], ...]:
    n = t.rank
    a = [[0] * n for _ in range(n)]
    for i in range(n):
        a[i][i] = 2

    def link(i, j, aij=-1, aji=-1):
        # 1-based nodes
        a[i - 1][j - 1] = aij
        a[j - 1][i - 1] = aji

    f = t.family
    if f in "ABCD":
        chain = n if f != "D" else n - 1
        for i in range(1, chain):
            link(i, i + 1)
        if f == "B" and n >= 2:
            # alpha_n short
            a[n - 2][n - 1], a[n - 1][n - 2] = -1, -2
        elif f == "C" and n >= 2:
            # alpha_n long
            a[n - 2][n - 1], a[n - 1][n - 2] = -2, -1
        elif f == "D":
            link(n - 2, n)
    elif f == "E":
        link(1, 3)
        link(3, 4)
        link(2, 4)
        for i in range(4, n):
            link(i, i + 1)
    elif f == "F":
        link(1, 2)
        link(3, 4)
        # alpha_1, alpha_2 long; alpha_3, alpha_4 short
        a[1][2], a[2][1] = -1, -2
    elif f == "G":
        # alpha_1 short, alpha_2 long
        a[0][1], a[1][0] = -3, -1
    return tuple(tuple(row) for row in a)


def _symmetrizer(a) -> tuple[int, ...]:
    """Smallest positive integers d with d_i * a_ij symmetric."""
    n = len(a)
    d: list[Fraction | None] = [None] * n
    d[0] = Fraction(1)
    stack = [0]
    while stack:
        i = stack.pop()
        for j in range(n):
            if j != i and a[i][j] != 0 and d[j] is None:
                # d_i a_ij = d_j a_ji
                d[j] = d[i] * a[i][j] / a[j][i]
                stack.append(j)
    if any(x is None for x in d):
        raise LieTypeError("Cartan matrix is not connected")
    denom = 1
    for x in d:
        denom = denom * x.denominator // gcd(denom, x.denominator)
    ints = [int(x * denom) for x in d]
    g = 0
    for x in ints:
        g = gcd(g, x)
    return tuple(x // g for x in ints)


def _positive_roots(a) -> tuple[tuple[int, ...], ...]:
    """Closure of the simple roots under simple-root addition, by height.

    For a positive root beta and simple alpha_i, beta + alpha_i is a root
    iff q > 0 where p - q = <beta, alpha_i^vee> and p is the length of the
    downward alpha_i-string from beta.
    """
    n = len(a)
    simple = [tuple(int(i == j) for j in range(n)) for i in range(n)]
    roots = set(simple)
    layer = list(simple)
    ordered = list(simple)
    while layer:
        nxt = []
        for beta in layer:
            for i in range(n):
                pairing = sum(beta[j] * a[i][j] for j in range(n))
                p = 0
                down = list(beta)
                while True:
                    down[i] -= 1
                    if tuple(down) in roots:
                        p += 1
                    else:
                        break
                if p - pairing > 0:
                    up = list(beta)
                    up[i] += 1
                    up = tuple(up)
                    if up not in roots:
                        roots.add(up)
                        nxt.append(up)
        nxt.sort(key=lambda r: (-sum(r), tuple(-x for x in r)))
        ordered.extend(nxt)
        layer = nxt
    return tuple(ordered)


@dataclass(frozen=True)
class RootSystem:
    lie_type: LieType
    cartan_matrix: tuple[tuple[int, ...], ...]
    positive_roots: tuple[tuple[int, ...], ...]
    symmetrizer: tuple[Fraction, ...]
    # (delta, alpha) for each positive root, in symmetrizer units
    _delta_pairings: tuple[int, ...] = field(repr=False, compare=False, default=())

    @property
    def rank(self) -> int:
        return self.lie_type.rank

    def pairing(self, coords, root) -> int:
        """(lambda, alpha) in symmetrizer units, lambda in fundamental-weight coordinates."""
        d = self.symmetrizer
        return int(sum(root[k] * d[k] * coords[k] for k in range(self.rank)))

    def root_norm(self, root) -> int:
        """(beta, beta) in symmetrizer units, beta in simple-root coordinates."""
        a, d = self.cartan_matrix, self.symmetrizer
        n = self.rank
        return int(sum(root[i] * d[i] * a[i][j] * root[j] for i in range(n) for j in range(n)))


@lru_cache(maxsize=None)
def build_root_system(t: LieType) -> RootSystem:
    if not isinstance(t, LieType):
        raise LieTypeError(f"expected LieType, got {t!r}")
    a = _cartan_matrix(t)
    d = _symmetrizer(a)
    roots = _positive_roots(a)
    delta = tuple(sum(r[k] * d[k] for k in range(t.rank)) for r in roots)
    return RootSystem(t, a, roots, tuple(Fraction(x) for x in d), delta)


def root_system(spec) -> RootSystem:
    """Accept a RootSystem, LieType or string such as ``"E7"``."""
    if isinstance(spec, RootSystem):
        return spec
    if isinstance(spec, str):
        spec = LieType.parse(spec)
    return build_root_system(spec)


def _coords(rs: RootSystem, weight) -> tuple[int, ...]:
    coords = weight.coords if isinstance(weight, DominantWeight) else tuple(weight)
    if len(coords) != rs.rank:
        raise ValueError(
            f"weight has {len(coords)} coordinates but {rs.lie_type} has rank {rs.rank}")
    if any(c < 0 for c in coords):
        raise ValueError(f"weight {coords} is not dominant")
    return coords


def weyl_dim(rs, weight) -> int:
    """Complex dimension of the irreducible module of the given highest weight.

    Evaluated as one exact fraction: the numerators and denominators over all
    positive roots are multiplied out in integers and divided once.
    """
    rs = root_system(rs)
    lam = _coords(rs, weight)
    d = [int(x) for x in rs.symmetrizer]
    num = den = 1
    for root, base in zip(rs.positive_roots, rs._delta_pairings):
        num *= base + sum(root[k] * d[k] * lam[k] for k in range(rs.rank))
        den *= base
    q, r = divmod(num, den)
    if r:
        raise ArithmeticError("Weyl dimension formula produced a non-integer")
    return q


def algebra_real_dim(t) -> int:
    rs = root_system(t)
    return 2 * len(rs.positive_roots) + rs.rank


def diagram_automorphisms(t) -> list[tuple[int, ...]]:
    """Nontrivial Dynkin diagram automorphisms as 1-based node permutations.

    ``perm[i-1]`` is the image of node ``i``.
    """
    t = root_system(t).lie_type
    n, f = t.rank, t.family
    out = []
    if f == "A" and n > 1:
        out.append(tuple(n + 1 - i for i in range(1, n + 1)))
    elif f == "D":
        swap = list(range(1, n + 1))
        swap[n - 2], swap[n - 1] = n, n - 1
        out.append(tuple(swap))
        if n == 4:
            # triality: 1 -> 3 -> 4 -> 1
            out.append((3, 2, 4, 1))
            out.append((4, 2, 1, 3))
            out.append((1, 2, 4, 3))
            out.append((3, 2, 1, 4))
            out.append((4, 2, 3, 1))
            out = list(dict.fromkeys(out))
    elif f == "E" and n == 6:
        out.append((6, 2, 5, 4, 3, 1))
    return out


def opposition_involution(t) -> tuple[int, ...]:
    """The permutation of nodes induced by -w0."""
    t = root_system(t).lie_type
    n, f = t.rank, t.family
    if (f == "A" and n > 1) or (f == "E" and n == 6) or (f == "D" and n % 2 == 1):
        return diagram_automorphisms(t)[0]
    return tuple(range(1, n + 1))


# Printed node labels -> Bourbaki nodes, keyed by dimension checks rather than
# by any drawing convention: E6 and E8 follow the labelled diagrams, E7 is the
# reversed labelling whose node 1 carries the 56-dimensional module, F4 is
# reversed so that node 1 carries the 26-dimensional module.
PRINTED_TO_BOURBAKI: dict[tuple[str, int], dict[int, int]] = {
    ("E", 6): {1: 1, 6: 2, 2: 3, 3: 4, 4: 5, 5: 6},
    ("E", 7): {6: 1, 7: 2, 5: 3, 4: 4, 3: 5, 2: 6, 1: 7},
    ("E", 8): {7: 1, 8: 2, 6: 3, 5: 4, 4: 5, 3: 6, 2: 7, 1: 8},
    ("F", 4): {1: 4, 2: 3, 3: 2, 4: 1},
}


def printed_to_bourbaki(t, node: int) -> int:
    t = root_system(t).lie_type
    table = PRINTED_TO_BOURBAKI.get((t.family, t.rank))
    if table is None:
        return node
    return table[node]


def bourbaki_to_printed(t, node: int) -> int:
    t = root_system(t).lie_type
    table = PRINTED_TO_BOURBAKI.get((t.family, t.rank))
    if table is None:
        return node
    return {b: p for p, b in table.items()}[node]


def translate_printed_weight(t, coords) -> tuple[int, ...]:
    """Reorder coordinates given in printed labels into Bourbaki order."""
    t = root_system(t).lie_type
    out = [0] * t.rank
    for p, c in enumerate(coords, start=1):
        out[printed_to_bourbaki(t, p) - 1] = c
    return tuple(out)
