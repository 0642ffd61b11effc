"""Transcribed reference tables.

Three tables are held here as plain records: quaternion-Kaehler symmetric
spaces of non-compact type, real forms with quaternionic fundamental
representations, and minimal quaternionic representations. Text columns
keep the printed spelling (including the printed node labels, which for
E6/E7/E8/F4 are not Bourbaki labels). Each parameterized row also knows
how to instantiate itself.

Nothing in this module is used as a computation input for dimensions or
verdicts. The quaternionic-index rows are the one exception: they are the
catalog source for the index sets of real forms.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable, Optional

# ---------------------------------------------------------------------------
# Quaternionic fundamental representations (catalog source for Q sets)


@dataclass(frozen=True)
class QuatIndexRow:
    g_c: str
    g: str
    condition: str
    diagram: str
    q_text: str
    family: str  # realforms family key
    applies: Callable[[int, tuple], bool] = field(repr=False, compare=False)
    q_nodes: Callable[[int], tuple[int, ...]] = field(repr=False, compare=False)
    labels: str = "bourbaki"  # "printed" when q_nodes returns printed labels


def _odd(n):
    return tuple(range(1, n + 1, 2))


QUAT_INDEX_ROWS: tuple[QuatIndexRow, ...] = (
    QuatIndexRow(
        "A_n", "su(n+1-r,r)", "n odd, 0<=r<=(n+1)/2, (n+1)/2+r odd",
        "o.o*.*o.o, 1<->n, r<->n-r+1", "(n+1)/2", "su",
        lambda n, pq: n % 2 == 1 and ((n + 1) // 2 + pq[1]) % 2 == 1,
        lambda n: ((n + 1) // 2,)),
    QuatIndexRow(
        "A_n", "sl_{(n+1)/2}(H)", "n>=3 odd",
        "*o*.o*", "i odd", "sl_H",
        lambda n, pq: n >= 3 and n % 2 == 1,
        _odd),
    QuatIndexRow(
        "B_n", "so(2n+1-r,r)", "0<=r<=n, n-r = 1 or 2 mod 4",
        "o.o*.**", "n", "so_B",
        lambda n, pq: (n - pq[1]) % 4 in (1, 2),
        lambda n: (n,)),
    QuatIndexRow(
        "C_n", "sp(n-r,r)", "0<=r<n/2",
        "*o*.o*.**", "i odd", "sp",
        lambda n, pq: 2 * pq[1] < n,
        _odd),
    QuatIndexRow(
        "C_n", "sp(n/2,n/2)", "n even",
        "*o*.o*o", "i odd", "sp",
        lambda n, pq: 2 * pq[1] == n,
        _odd),
    QuatIndexRow(
        "D_n", "so(2n-r,r)", "0<=r<=n, n-r = 2 mod 4",
        "oo.o*.***", "n-1, n", "so_D",
        lambda n, pq: (n - pq[1]) % 4 == 2,
        lambda n: (n - 1, n)),
    QuatIndexRow(
        "D_n", "so*_{2n}", "n>=6 even",
        "*o*.*o*o", "i odd", "so_star",
        lambda n, pq: n >= 6 and n % 2 == 0,
        _odd),
    QuatIndexRow(
        "D_n", "so*_{2n}", "n>=5 odd",
        "*o*.o*oo, n-1<->n", "i!=n odd", "so_star",
        lambda n, pq: n >= 5 and n % 2 == 1,
        lambda n: tuple(i for i in _odd(n) if i != n)),
    QuatIndexRow(
        "E_7", "e7(-5)", "",
        "o*oo*o*", "1,3,7", "e7(-5)",
        lambda n, pq: True,
        lambda n: (1, 3, 7), labels="printed"),
    QuatIndexRow(
        "E_7", "e7(-133)", "",
        "*******", "1,3,7", "e7(-133)",
        lambda n, pq: True,
        lambda n: (1, 3, 7), labels="printed"),
)


# ---------------------------------------------------------------------------
# Quaternion-Kaehler symmetric spaces of non-compact type


@dataclass(frozen=True)
class SpaceRow:
    g_c: str
    g: str
    k: str
    diagram: str
    sigma: str
    dim_text: str
    # parameter values to instantiate (a single value for fixed rows)
    params: tuple[int, ...]
    form_name: Callable[[int], str] = field(repr=False, compare=False)
    display_name: Callable[[int], str] = field(repr=False, compare=False)
    k_name: Callable[[int], str] = field(repr=False, compare=False)
    dim: Callable[[int], int] = field(repr=False, compare=False)
    # u(1) summands of the isotropy algebra omitted from the printed k column
    k_center: int = 0
    # family applicable to any n (for on-demand instantiation)
    param_min: Optional[int] = None


def _const(value):
    return lambda n: value


QK_ROWS: tuple[SpaceRow, ...] = (
    SpaceRow("A_2", "su(1,2)", "su(1)+su(2)", "oo, 1<->2", "BC_1", "4", (2,),
             _const("su(2,1)"), _const("su(1,2)"), _const("su(1)+su(2)"), _const(4), k_center=1),
    SpaceRow("A_3", "su(2,2)", "su(2)+su(2)", "ooo, 1<->3", "B_2", "8", (3,),
             _const("su(2,2)"), _const("su(2,2)"), _const("su(2)+su(2)"), _const(8), k_center=1),
    SpaceRow("A_4", "su(3,2)", "su(3)+su(2)", "oooo, 1<->4, 2<->3", "BC_2", "12", (4,),
             _const("su(3,2)"), _const("su(3,2)"), _const("su(3)+su(2)"), _const(12), k_center=1),
    SpaceRow("A_n, n>4", "su(n-1,2)", "su(n-1)+su(2)", "oo*.*oo, 1<->n, 2<->n-1", "BC_2", "4(n-1)",
             (5, 6, 7),
             lambda n: f"su({n - 1},2)", lambda n: f"su({n - 1},2)",
             lambda n: f"su({n - 1})+su(2)", lambda n: 4 * (n - 1), k_center=1, param_min=5),
    SpaceRow("B_2", "so(1,4)", "so(1)+so(4)", "o*", "A_1", "4", (2,),
             _const("so(4,1)"), _const("so(1,4)"), _const("so(1)+so(4)"), _const(4)),
    SpaceRow("B_3", "so(3,4)", "so(3)+so(4)", "ooo", "B_3", "12", (3,),
             _const("so(4,3)"), _const("so(3,4)"), _const("so(3)+so(4)"), _const(12)),
    SpaceRow("B_4", "so(5,4)", "so(5)+so(4)", "oooo", "B_4", "20", (4,),
             _const("so(5,4)"), _const("so(5,4)"), _const("so(5)+so(4)"), _const(20)),
    SpaceRow("B_n, n>4", "so(2n-3,4)", "so(2n-3)+so(4)", "oooo*.**", "B_4", "4(2n-3)",
             (5, 6, 7),
             lambda n: f"so({2 * n - 3},4)", lambda n: f"so({2 * n - 3},4)",
             lambda n: f"so({2 * n - 3})+so(4)", lambda n: 4 * (2 * n - 3), param_min=5),
    SpaceRow("C_3", "sp(2,1)", "sp(2)+sp(1)", "*o*", "BC_1", "8", (3,),
             _const("sp(2,1)"), _const("sp(2,1)"), _const("sp(2)+sp(1)"), _const(8)),
    SpaceRow("C_n, n>3", "sp(n-1,1)", "sp(n-1)+sp(1)", "*o*.**", "BC_1", "4(n-1)",
             (4, 5, 6),
             lambda n: f"sp({n - 1},1)", lambda n: f"sp({n - 1},1)",
             lambda n: f"sp({n - 1})+sp(1)", lambda n: 4 * (n - 1), param_min=4),
    SpaceRow("D_4", "so(4,4)", "so(4)+so(4)", "oooo", "D_4", "16", (4,),
             _const("so(4,4)"), _const("so(4,4)"), _const("so(4)+so(4)"), _const(16)),
    SpaceRow("D_5", "so(6,4)", "so(6)+so(4)", "ooooo, 4<->5", "B_4", "24", (5,),
             _const("so(6,4)"), _const("so(6,4)"), _const("so(6)+so(4)"), _const(24)),
    SpaceRow("D_6", "so(8,4)", "so(8)+so(4)", "oooo**", "B_4", "32", (6,),
             _const("so(8,4)"), _const("so(8,4)"), _const("so(8)+so(4)"), _const(32)),
    SpaceRow("D_n, n>6", "so(2n-4,4)", "so(2n-4)+so(4)", "oooo*.***", "B_4", "4(2n-4)",
             (7, 8, 9),
             lambda n: f"so({2 * n - 4},4)", lambda n: f"so({2 * n - 4},4)",
             lambda n: f"so({2 * n - 4})+so(4)", lambda n: 4 * (2 * n - 4), param_min=7),
    SpaceRow("E_6", "e6(2)", "su(6)+su(2)", "oooooo, 1<->6, 3<->5", "F_4", "40", (6,),
             _const("e6(2)"), _const("e6(2)"), _const("su(6)+su(2)"), _const(40)),
    SpaceRow("E_7", "e7(-5)", "so(12)+su(2)", "o*oo*o*", "F_4", "64", (7,),
             _const("e7(-5)"), _const("e7(-5)"), _const("so(12)+su(2)"), _const(64)),
    SpaceRow("E_8", "e8(-24)", "e7+su(2)", "o****ooo", "F_4", "112", (8,),
             _const("e8(-24)"), _const("e8(-24)"), _const("e7+su(2)"), _const(112)),
    SpaceRow("F_4", "f4(4)", "sp(3)+su(2)", "oooo", "F_4", "28", (4,),
             _const("f4(4)"), _const("f4(4)"), _const("sp(3)+su(2)"), _const(28)),
    SpaceRow("G_2", "g2(2)", "su(2)+su(2)", "oo", "G_2", "8", (2,),
             _const("g2(2)"), _const("g2(2)"), _const("su(2)+su(2)"), _const(8)),
)


# ---------------------------------------------------------------------------
# Minimal quaternionic representations


@dataclass(frozen=True)
class MinRepRow:
    g_c: str
    dim_g_text: str
    g: str
    rho_text: str
    dim_rho_text: str
    family: str  # LieType family letter
    params: tuple[int, ...]  # ranks to instantiate
    matches: Callable[[object], bool] = field(repr=False, compare=False)
    dim_rho: Callable[[int], int] = field(repr=False, compare=False)
    # printed node labels of the minimizers, as a function of the rank
    printed_nodes: Callable[[int], tuple[int, ...]] = field(repr=False, compare=False)


def _fam(form):
    return form.family_key


MINREP_ROWS: tuple[MinRepRow, ...] = (
    MinRepRow("A_1", "3", "su(2)", "rho_1", "4", "A", (1,),
              lambda f: f.name == "su(2)", _const(4), _const((1,))),
    MinRepRow("A_3", "15", "su(3,1)", "rho_2", "12", "A", (3,),
              lambda f: f.name == "su(3,1)", _const(12), _const((2,))),
    MinRepRow("A_n, n>=3 odd", "n^2+2n", "sl_{(n+1)/2}(H)", "rho_1, rho_n", "2(n+1)", "A", (3, 5, 7),
              lambda f: _fam(f) == "sl_H", lambda n: 2 * (n + 1), lambda n: (1, n)),
    MinRepRow("A_n", "n^2+2n", "any other g", "rho_1+conj(rho_1), rho_n+conj(rho_n)", "4(n+1)", "A",
              (1, 2, 3),
              lambda f: _fam(f) in ("su", "sl_R") and f.name not in ("su(2)", "su(3,1)"),
              lambda n: 4 * (n + 1), lambda n: tuple(sorted({1, n}))),
    MinRepRow("B_2", "10", "so(4,1)", "rho_2", "8", "B", (2,),
              lambda f: f.name == "so(4,1)", _const(8), _const((2,))),
    MinRepRow("B_2", "10", "so(5)", "rho_2", "8", "B", (2,),
              lambda f: f.name == "so(5)", _const(8), _const((2,))),
    MinRepRow("B_3", "21", "so(5,2)", "rho_3", "16", "B", (3,),
              lambda f: f.name == "so(5,2)", _const(16), _const((3,))),
    MinRepRow("B_3", "21", "so(6,1)", "rho_3", "16", "B", (3,),
              lambda f: f.name == "so(6,1)", _const(16), _const((3,))),
    MinRepRow("B_4", "36", "so(6,3)", "rho_4", "32", "B", (4,),
              lambda f: f.name == "so(6,3)", _const(32), _const((4,))),
    MinRepRow("B_4", "36", "so(7,2)", "rho_4", "32", "B", (4,),
              lambda f: f.name == "so(7,2)", _const(32), _const((4,))),
    # B2 is excluded from the instances: so(3,2) ~ sp(2,R) falls under the C_n row
    MinRepRow("B_n", "2n^2+n", "any other g", "rho_1+rho_1", "4(2n+1)", "B", (3, 4, 5),
              lambda f: _fam(f) == "so_B" and f.name not in (
                  "so(4,1)", "so(5)", "so(5,2)", "so(6,1)", "so(6,3)", "so(7,2)"),
              lambda n: 4 * (2 * n + 1), _const((1,))),
    MinRepRow("C_n", "2n^2+n", "sp(n-r,r) for 0<=r<=n/2", "rho_1", "4n", "C", (3, 4, 5),
              lambda f: _fam(f) == "sp", lambda n: 4 * n, _const((1,))),
    MinRepRow("C_n", "2n^2+n", "any other g", "rho_1+rho_1", "8n", "C", (2, 3, 4),
              lambda f: _fam(f) == "sp_R", lambda n: 8 * n, _const((1,))),
    MinRepRow("D_4", "28", "so(6,2)", "rho_3, rho_4", "16", "D", (4,),
              lambda f: f.name == "so(6,2)", _const(16), _const((3, 4))),
    MinRepRow("D_5", "45", "so(7,3)", "rho_4, rho_5", "32", "D", (5,),
              lambda f: f.name == "so(7,3)", _const(32), _const((4, 5))),
    MinRepRow("D_n, n>=5", "2n^2-n", "so*_{2n}", "rho_1", "4n", "D", (5, 6, 7),
              lambda f: _fam(f) == "so_star", lambda n: 4 * n, _const((1,))),
    # D4 is excluded from the instances: triality adds rho_3, rho_4 as tied minimizers
    MinRepRow("D_n", "2n^2-n", "any other g", "rho_1+rho_1", "8n", "D", (5, 6, 7),
              lambda f: _fam(f) == "so_D" and f.name not in ("so(6,2)", "so(7,3)"),
              lambda n: 8 * n, _const((1,))),
    MinRepRow("E_6", "78", "any g", "rho_1+rho_1, rho_5+rho_5", "108", "E", (6,),
              lambda f: f.complex_type.family == "E" and f.complex_type.rank == 6,
              _const(108), _const((1, 5))),
    MinRepRow("E_7", "133", "e7(-5)", "rho_1", "112", "E", (7,),
              lambda f: f.name == "e7(-5)", _const(112), _const((1,))),
    MinRepRow("E_7", "133", "e7(-133)", "rho_1", "112", "E", (7,),
              lambda f: f.name == "e7(-133)", _const(112), _const((1,))),
    MinRepRow("E_7", "133", "any other g", "rho_1+rho_1", "224", "E", (7,),
              lambda f: f.complex_type.family == "E" and f.complex_type.rank == 7
              and f.name not in ("e7(-5)", "e7(-133)"),
              _const(224), _const((1,))),
    MinRepRow("E_8", "248", "any g", "rho_1+rho_1", "992", "E", (8,),
              lambda f: f.complex_type.family == "E" and f.complex_type.rank == 8,
              _const(992), _const((1,))),
    MinRepRow("F_4", "52", "any g", "rho_1+rho_1", "104", "F", (4,),
              lambda f: f.complex_type.family == "F", _const(104), _const((1,))),
    MinRepRow("G_2", "14", "any g", "rho_1+rho_1", "28", "G", (2,),
              lambda f: f.complex_type.family == "G", _const(28), _const((1,))),
)


# ---------------------------------------------------------------------------
# Affine symmetric spaces of e7(-5) with the printed right-hand sides


@dataclass(frozen=True)
class BergerRow:
    h: str
    parts: tuple[str, ...]  # real form names, or "R" for an abelian summand
    riemannian: bool
    printed: str  # the printed inequality, kept for provenance


BERGER_E7_5: tuple[BergerRow, ...] = (
    BergerRow("so(12)+sp(1)", ("so(12)", "sp(1)"), True, "(g,h) is Riemannian"),
    BergerRow("e6(-14)+R", ("e6(-14)", "R"), False, "112>133-78-1+4=58"),
    BergerRow("so(8,4)+su(2)", ("so(8,4)", "su(2)"), False, "112>133-66-3+4=68"),
    BergerRow("su(4,4)", ("su(4,4)",), False, "112>133-63+4=74"),
    BergerRow("su(6,2)", ("su(6,2)",), False, "112>133-63+4=74"),
    BergerRow("e6(2)+R", ("e6(2)", "R"), False, "112>133-78-1+4=58"),
    BergerRow("so*(12)+sl(2,R)", ("so*(12)", "sl(2,R)"), False, "112>133-66-3+4=68"),
)
