"""Real forms of simple complex Lie algebras as Satake-Tits data.

A real form is stored as its complex type, the twisted Galois involution
``t`` on the nodes (a 1-based permutation), the compact (black) nodes, the
Satake arrows for display, and the set of nodes whose fundamental
representation is quaternionic.

Classical forms come from family rules; exceptional forms are fixed data.
The shipped catalog file ``data/realforms.tsv`` is generated from both and
is what lookups consult first. Names outside the file are still accepted
when they parse as a valid family instance.

Catalog file format: UTF-8, tab separated, ``#`` lines are comments, the
first line must be ``#catalog-version: 1``. Then one header line followed by
one record per form with the columns

    name  family  rank  involution  compact  q  arrows  provenance

``family`` is a Lie type such as ``E7``. ``involution`` and ``arrows`` are
cycle lists such as ``(1 6)(3 5)``, with ``()`` for none. ``compact`` and
``q`` are comma separated node lists, ``-`` when empty. ``provenance`` is
``paper`` when the quaternionic index set comes from the transcribed
table and ``standard-tables`` otherwise.
"""

from __future__ import annotations

import difflib
import re
from dataclasses import dataclass, field
from functools import lru_cache
from importlib import resources
from pathlib import Path
from typing import Iterable, Optional

from .reftables import QUAT_INDEX_ROWS
from .rootsys import LieType, printed_to_bourbaki

CATALOG_VERSION = 1
CATALOG_COLUMNS = ("name", "family", "rank", "involution", "compact", "q", "arrows", "provenance")
CLASSICAL_MAX_RANK = 8


class RealFormError(ValueError):
    pass


class UnknownRealForm(RealFormError):
    def __init__(self, name: str, suggestions: tuple[str, ...] = ()):
        self.name = name
        self.suggestions = suggestions
        msg = f"unknown real form {name!r}"
        if suggestions:
            msg += f"; did you mean {', '.join(suggestions)}?"
        super().__init__(msg)


class FamilyConstraintError(RealFormError):
    pass


@dataclass(frozen=True)
class RealForm:
    name: str
    complex_type: LieType
    galois_involution: tuple[int, ...]
    q_set: frozenset[int]
    compact_nodes: frozenset[int] = frozenset()
    arrows: tuple[tuple[int, int], ...] = ()
    family_key: str = ""
    parameters: tuple[int, ...] = ()
    provenance: str = "standard-tables"

    def __post_init__(self):
        n = self.complex_type.rank
        t = self.galois_involution
        if sorted(t) != list(range(1, n + 1)):
            raise RealFormError(f"{self.name}: involution {t} is not a permutation of 1..{n}")
        if any(t[t[i] - 1] != i + 1 for i in range(n)):
            raise RealFormError(f"{self.name}: involution {t} does not square to the identity")
        bad = [i for i in self.q_set if not 1 <= i <= n or t[i - 1] != i]
        if bad:
            raise RealFormError(f"{self.name}: quaternionic nodes {sorted(bad)} are not fixed by the involution")
        if any(not 1 <= i <= n for i in self.compact_nodes):
            raise RealFormError(f"{self.name}: compact nodes out of range")

    @property
    def rank(self) -> int:
        return self.complex_type.rank

    @property
    def is_compact(self) -> bool:
        return len(self.compact_nodes) == self.rank

    def t(self, node: int) -> int:
        return self.galois_involution[node - 1]


@dataclass(frozen=True)
class IndexClassification:
    r_set: frozenset[int]
    c_set: frozenset[int]
    q_set: frozenset[int]


def index_classification(f: RealForm) -> IndexClassification:
    nodes = range(1, f.rank + 1)
    c = frozenset(i for i in nodes if f.t(i) != i)
    r = frozenset(i for i in nodes if i not in c and i not in f.q_set)
    return IndexClassification(r, c, frozenset(f.q_set))


# ---------------------------------------------------------------------------
# family rules


def _identity(n):
    return tuple(range(1, n + 1))


def _flip(n):
    return tuple(n + 1 - i for i in range(1, n + 1))


def _d_swap(n):
    perm = list(range(1, n + 1))
    perm[n - 2], perm[n - 1] = n, n - 1
    return tuple(perm)


def _pairs(perm, nodes=None):
    """Non-trivial 2-cycles of ``perm``, optionally restricted to ``nodes``."""
    out = []
    for i, j in enumerate(perm, start=1):
        if i < j and (nodes is None or (i in nodes and j in nodes)):
            out.append((i, j))
    return tuple(out)


def _quaternionic_nodes(family: str, n: int, params: tuple) -> tuple[frozenset[int], str]:
    for row in QUAT_INDEX_ROWS:
        if row.family == family and row.applies(n, params):
            nodes = row.q_nodes(n)
            if row.labels == "printed":
                nodes = tuple(printed_to_bourbaki(LieType("E", n), i) for i in nodes)
            return frozenset(nodes), "paper"
    return frozenset(), "standard-tables"


def _make(name, family, lie, t, compact, arrows, params):
    q, prov = _quaternionic_nodes(family, lie.rank, params)
    return RealForm(name, lie, t, q, frozenset(compact), arrows, family, tuple(params), prov)


def _su(p: int, q: int) -> RealForm:
    if p < q:
        p, q = q, p
    if q < 0:
        raise FamilyConstraintError(f"su(p,q) requires p, q >= 0, got su({p},{q})")
    n = p + q - 1
    if n < 1:
        raise FamilyConstraintError(f"su(p,q) requires p + q >= 2, got su({p},{q})")
    name = f"su({p})" if q == 0 else f"su({p},{q})"
    white = set(range(1, q + 1)) | set(range(n + 1 - q, n + 1))
    compact = set(range(1, n + 1)) - white
    t = _flip(n)
    return _make(name, "su", LieType("A", n), t, compact, _pairs(t, white), (p, q))


def _sl_real(k: int) -> RealForm:
    if k < 2:
        raise FamilyConstraintError(f"sl(n,R) requires n >= 2, got sl({k},R)")
    n = k - 1
    return _make(f"sl({k},R)", "sl_R", LieType("A", n), _identity(n), (), (), (k,))


def _sl_quat(m: int) -> RealForm:
    if m < 2:
        raise FamilyConstraintError(
            f"sl_m(H) requires m >= 2 (sl_1(H) is su(2)), got sl_{m}(H)")
    n = 2 * m - 1
    return _make(f"sl_{m}(H)", "sl_H", LieType("A", n), _identity(n), range(1, n + 1, 2), (), (m,))


def _so(p: int, q: int) -> RealForm:
    if p < q:
        p, q = q, p
    if q < 0:
        raise FamilyConstraintError(f"so(p,q) requires p, q >= 0, got so({p},{q})")
    total = p + q
    name = f"so({p})" if q == 0 else f"so({p},{q})"
    if total % 2:
        n = (total - 1) // 2
        if n < 2:
            raise FamilyConstraintError(
                f"so(p,q) with p + q odd requires p + q >= 5 (type B_n, n >= 2), got {name}")
        return _make(name, "so_B", LieType("B", n), _identity(n), range(q + 1, n + 1), (), (p, q))
    n = total // 2
    if n < 4:
        raise FamilyConstraintError(
            f"so(p,q) with p + q even requires p + q >= 8 (type D_n, n >= 4), got {name}")
    r = q
    if n % 2 == 0:
        t = _identity(n) if r % 2 == 0 else _d_swap(n)
    else:
        t = _d_swap(n) if r % 2 == 0 else _identity(n)
    if r <= n - 2:
        compact = range(r + 1, n + 1)
        arrows = ()
    else:
        compact = ()
        arrows = ((n - 1, n),) if r == n - 1 else ()
    return _make(name, "so_D", LieType("D", n), t, compact, arrows, (p, q))


def _sp(p: int, q: int) -> RealForm:
    if p < q:
        p, q = q, p
    if q < 0:
        raise FamilyConstraintError(f"sp(p,q) requires p, q >= 0, got sp({p},{q})")
    n = p + q
    name = f"sp({p})" if q == 0 else f"sp({p},{q})"
    if n < 2:
        raise FamilyConstraintError(f"sp(p,q) requires p + q >= 2 (type C_n, n >= 2), got {name}")
    white = set(range(2, 2 * q + 1, 2))
    compact = set(range(1, n + 1)) - white
    return _make(name, "sp", LieType("C", n), _identity(n), compact, (), (p, q))


def _sp_real(n: int) -> RealForm:
    if n < 2:
        raise FamilyConstraintError(f"sp(n,R) requires n >= 2, got sp({n},R)")
    return _make(f"sp({n},R)", "sp_R", LieType("C", n), _identity(n), (), (), (n,))


def _so_star(two_n: int) -> RealForm:
    if two_n % 2:
        raise FamilyConstraintError(f"so*(2n) requires an even argument, got so*({two_n})")
    n = two_n // 2
    if n < 5:
        raise FamilyConstraintError(
            f"so*(2n) is catalogued for n >= 5 (smaller cases coincide with other families), got so*({two_n})")
    if n % 2 == 0:
        return _make(f"so*({two_n})", "so_star", LieType("D", n), _identity(n),
                     range(1, n, 2), (), (n,))
    return _make(f"so*({two_n})", "so_star", LieType("D", n), _d_swap(n),
                 range(1, n - 1, 2), ((n - 1, n),), (n,))


# Exceptional forms: name -> (type, involution is -w0 composed with outer?,
# compact nodes, Satake arrows). Nodes are Bourbaki labels.
_E6_FLIP = (6, 2, 5, 4, 3, 1)
_EXCEPTIONAL: dict[str, tuple[LieType, tuple[int, ...], tuple[int, ...], tuple]] = {
    "e6(6)": (LieType("E", 6), _identity(6), (), ()),
    "e6(2)": (LieType("E", 6), _E6_FLIP, (), ((1, 6), (3, 5))),
    "e6(-14)": (LieType("E", 6), _E6_FLIP, (3, 4, 5), ((1, 6),)),
    "e6(-26)": (LieType("E", 6), _identity(6), (2, 3, 4, 5), ()),
    "e6(-78)": (LieType("E", 6), _E6_FLIP, tuple(range(1, 7)), ()),
    "e7(7)": (LieType("E", 7), _identity(7), (), ()),
    "e7(-5)": (LieType("E", 7), _identity(7), (2, 5, 7), ()),
    "e7(-25)": (LieType("E", 7), _identity(7), (2, 3, 4, 5), ()),
    "e7(-133)": (LieType("E", 7), _identity(7), tuple(range(1, 8)), ()),
    "e8(8)": (LieType("E", 8), _identity(8), (), ()),
    "e8(-24)": (LieType("E", 8), _identity(8), (2, 3, 4, 5), ()),
    "e8(-248)": (LieType("E", 8), _identity(8), tuple(range(1, 9)), ()),
    "f4(4)": (LieType("F", 4), _identity(4), (), ()),
    "f4(-20)": (LieType("F", 4), _identity(4), (1, 2, 3), ()),
    "f4(-52)": (LieType("F", 4), _identity(4), (1, 2, 3, 4), ()),
    "g2(2)": (LieType("G", 2), _identity(2), (), ()),
    "g2(-14)": (LieType("G", 2), _identity(2), (1, 2), ()),
}


def _exceptional(name: str) -> RealForm:
    lie, t, compact, arrows = _EXCEPTIONAL[name]
    return _make(name, name, lie, t, compact, arrows, ())


# ---------------------------------------------------------------------------
# name parsing

_NAME_PATTERNS = (
    (re.compile(r"su\((\d+)(?:,(\d+))?\)"), lambda m: _su(int(m[1]), int(m[2] or 0))),
    (re.compile(r"sl\((\d+),r\)"), lambda m: _sl_real(int(m[1]))),
    (re.compile(r"sl_?\{?(\d+)\}?\(h\)|sl\((\d+),h\)"), lambda m: _sl_quat(int(m[1] or m[2]))),
    (re.compile(r"so\((\d+)(?:,(\d+))?\)"), lambda m: _so(int(m[1]), int(m[2] or 0))),
    (re.compile(r"sp\((\d+),r\)"), lambda m: _sp_real(int(m[1]))),
    (re.compile(r"sp\((\d+)(?:,(\d+))?\)"), lambda m: _sp(int(m[1]), int(m[2] or 0))),
    (re.compile(r"so\*_?\{?\(?(\d+)\)?\}?"), lambda m: _so_star(int(m[1]))),
)


def normalize_name(name: str) -> str:
    text = name.strip().replace("−", "-").replace("_{", "_").replace("}", "")
    return re.sub(r"\s+", "", text).lower()


def family_instance(name: str) -> RealForm:
    """Build a form from the family rules, ignoring any catalog file."""
    key = normalize_name(name)
    if key in _EXCEPTIONAL:
        return _exceptional(key)
    for pattern, build in _NAME_PATTERNS:
        m = pattern.fullmatch(key)
        if m:
            return build(m)
    raise UnknownRealForm(name)


def generated_forms(max_rank: int = CLASSICAL_MAX_RANK) -> list[RealForm]:
    """All classical forms up to ``max_rank`` plus every exceptional form."""
    forms = []
    for n in range(1, max_rank + 1):
        k = n + 1
        forms += [_su(k - q, q) for q in range(0, k // 2 + 1)]
        forms.append(_sl_real(k))
        if n >= 3 and n % 2:
            forms.append(_sl_quat(k // 2))
    for n in range(2, max_rank + 1):
        forms += [_so(2 * n + 1 - r, r) for r in range(0, n + 1)]
    for n in range(2, max_rank + 1):
        forms += [_sp(n - q, q) for q in range(0, n // 2 + 1)]
        forms.append(_sp_real(n))
    for n in range(4, max_rank + 1):
        forms += [_so(2 * n - r, r) for r in range(0, n + 1)]
        if n >= 5:
            forms.append(_so_star(2 * n))
    forms += [_exceptional(name) for name in _EXCEPTIONAL]
    return forms


# ---------------------------------------------------------------------------
# catalog file


def _cycles(pairs: Iterable[tuple[int, int]]) -> str:
    return "".join(f"({i} {j})" for i, j in pairs) or "()"


def _nodes(nodes: Iterable[int]) -> str:
    return ",".join(str(i) for i in sorted(nodes)) or "-"


def _parse_cycles(text: str, n: int, where: str) -> tuple[tuple[int, int], ...]:
    if text == "()":
        return ()
    if not re.fullmatch(r"(\(\d+ \d+\))+", text):
        raise RealFormError(f"{where}: bad cycle list {text!r}")
    pairs = tuple((int(a), int(b)) for a, b in re.findall(r"\((\d+) (\d+)\)", text))
    for a, b in pairs:
        if not (1 <= a <= n and 1 <= b <= n) or a == b:
            raise RealFormError(f"{where}: bad cycle ({a} {b}) for rank {n}")
    return pairs


def _parse_nodes(text: str, where: str) -> frozenset[int]:
    if text == "-":
        return frozenset()
    try:
        return frozenset(int(x) for x in text.split(","))
    except ValueError:
        raise RealFormError(f"{where}: bad node list {text!r}") from None


def format_catalog(forms: Iterable[RealForm]) -> str:
    lines = [f"#catalog-version: {CATALOG_VERSION}", "\t".join(CATALOG_COLUMNS)]
    for f in forms:
        lines.append("\t".join((
            f.name,
            str(f.complex_type),
            str(f.rank),
            _cycles(_pairs(f.galois_involution)),
            _nodes(f.compact_nodes),
            _nodes(f.q_set),
            _cycles(f.arrows),
            f.provenance,
        )))
    return "\n".join(lines) + "\n"


def parse_catalog(text: str, source: str = "<catalog>") -> list[RealForm]:
    lines = text.splitlines()
    if not lines or lines[0].strip() != f"#catalog-version: {CATALOG_VERSION}":
        raise RealFormError(f"{source}: first line must be '#catalog-version: {CATALOG_VERSION}'")
    body = [(no, line) for no, line in enumerate(lines[1:], start=2)
            if line.strip() and not line.startswith("#")]
    if not body or tuple(body[0][1].split("\t")) != CATALOG_COLUMNS:
        raise RealFormError(f"{source}: missing header line {chr(9).join(CATALOG_COLUMNS)!r}")
    forms = []
    seen = set()
    for no, line in body[1:]:
        where = f"{source}:{no}"
        cols = line.split("\t")
        if len(cols) != len(CATALOG_COLUMNS):
            raise RealFormError(f"{where}: expected {len(CATALOG_COLUMNS)} columns, got {len(cols)}")
        name, fam, rank, invol, compact, q, arrows, prov = cols
        try:
            lie = LieType.parse(fam)
        except ValueError as exc:
            raise RealFormError(f"{where}: {exc}") from None
        if str(lie.rank) != rank:
            raise RealFormError(f"{where}: rank column {rank!r} disagrees with {fam}")
        if prov not in ("paper", "standard-tables"):
            raise RealFormError(f"{where}: unknown provenance {prov!r}")
        perm = list(range(1, lie.rank + 1))
        for a, b in _parse_cycles(invol, lie.rank, where):
            perm[a - 1], perm[b - 1] = b, a
        try:
            base = family_instance(name)
            family_key, params = base.family_key, base.parameters
        except RealFormError:
            family_key, params = "", ()
        form = RealForm(name, lie, tuple(perm), _parse_nodes(q, where), _parse_nodes(compact, where),
                        _parse_cycles(arrows, lie.rank, where), family_key, params, prov)
        if name in seen:
            raise RealFormError(f"{where}: duplicate form {name!r}")
        seen.add(name)
        forms.append(form)
    return forms


@dataclass(frozen=True)
class Catalog:
    forms: tuple[RealForm, ...]
    source: str = "<generated>"
    _by_name: dict = field(default=None, repr=False, compare=False)

    def __post_init__(self):
        object.__setattr__(self, "_by_name", {f.name: f for f in self.forms})

    def names(self) -> list[str]:
        return [f.name for f in self.forms]

    def lookup(self, name: str) -> RealForm:
        if name in self._by_name:
            return self._by_name[name]
        key = normalize_name(name)
        try:
            form = family_instance(key)
        except UnknownRealForm:
            raise UnknownRealForm(name, self.suggest(name)) from None
        return self._by_name.get(form.name, form)

    def suggest(self, name: str, limit: int = 3) -> tuple[str, ...]:
        return tuple(difflib.get_close_matches(normalize_name(name), self.names(), n=limit, cutoff=0.5))


def load_catalog(path: Optional[str | Path] = None) -> Catalog:
    if path is None:
        text = resources.files(__package__).joinpath("data/realforms.tsv").read_text(encoding="utf-8")
        source = "realforms.tsv"
    else:
        text = Path(path).read_text(encoding="utf-8")
        source = str(path)
    return Catalog(tuple(parse_catalog(text, source)), source)


@lru_cache(maxsize=1)
def default_catalog() -> Catalog:
    return load_catalog()


def lookup_real_form(name: str, catalog: Optional[Catalog] = None) -> RealForm:
    return (catalog or default_catalog()).lookup(name)
