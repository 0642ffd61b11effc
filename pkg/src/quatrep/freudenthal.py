"""Freudenthal's multiplicity recursion, used only as a dimension oracle.

Weights of the module are tracked as ``lambda - beta`` with ``beta`` a
nonnegative integer vector over the simple roots, and visited in order of
increasing height of ``beta``. This shares nothing with ``weyl_dim`` apart
from the root data.
"""

from __future__ import annotations

from .rootsys import DominantWeight, root_system, weyl_dim

MAX_RANK = 4
MAX_DIM = 10**4


class OracleGuardError(ValueError):
    pass


def weight_multiplicities(rs, weight) -> dict[tuple[int, ...], int]:
    """Multiplicities keyed by ``beta``, the depth below the highest weight."""
    rs = root_system(rs)
    lam = weight.coords if isinstance(weight, DominantWeight) else tuple(weight)
    n = rs.rank
    if len(lam) != n:
        raise ValueError(f"weight has {len(lam)} coordinates, expected {n}")
    if n > MAX_RANK:
        raise OracleGuardError(f"Freudenthal oracle is limited to rank <= {MAX_RANK}, got {rs.lie_type}")
    if weyl_dim(rs, lam) > MAX_DIM:
        raise OracleGuardError(f"Freudenthal oracle is limited to dimension <= {MAX_DIM}")

    d = [int(x) for x in rs.symmetrizer]
    a = rs.cartan_matrix
    roots = rs.positive_roots

    def form(x, y):
        # (x, y) for x, y in simple-root coordinates
        return sum(x[i] * d[i] * a[i][j] * y[j] for i in range(n) for j in range(n) if x[i] and y[j])

    lam_dot = [sum(r[k] * d[k] * lam[k] for k in range(n)) for r in roots]
    rho_lam = [d[k] * (lam[k] + 1) for k in range(n)]  # (lambda + delta, alpha_k)

    mult: dict[tuple[int, ...], int] = {(0,) * n: 1}
    # string_sum[(beta, r)] = sum_{k>=1} m(mu + k alpha) (mu + k alpha, alpha), mu = lambda - beta
    string_sum: dict[tuple[tuple[int, ...], int], int] = {}

    def string(beta, r):
        root = roots[r]
        path = []
        cur = beta
        while (cur, r) not in string_sum:
            up = tuple(c - x for c, x in zip(cur, root))
            if min(up) < 0:
                string_sum[(cur, r)] = 0
                break
            path.append((cur, up))
            cur = up
        # every weight above beta has lower height, so its multiplicity is final
        for lower, upper in reversed(path):
            pair = lam_dot[r] - form(upper, root)
            string_sum[(lower, r)] = string_sum[(upper, r)] + mult.get(upper, 0) * pair
        return string_sum[(beta, r)]

    layer = [(0,) * n]
    while layer:
        candidates = set()
        for beta in layer:
            for i in range(n):
                nb = list(beta)
                nb[i] += 1
                candidates.add(tuple(nb))
        nxt = []
        for beta in sorted(candidates):
            denom = 2 * sum(beta[k] * rho_lam[k] for k in range(n)) - form(beta, beta)
            numer = 2 * sum(string(beta, r) for r in range(len(roots)))
            if denom == 0:
                if numer != 0:
                    raise ArithmeticError(f"inconsistent Freudenthal data at depth {beta}")
                continue
            m, rem = divmod(numer, denom)
            if rem:
                raise ArithmeticError(f"non-integer multiplicity at depth {beta}")
            if m < 0:
                raise ArithmeticError(f"negative multiplicity at depth {beta}")
            if m:
                mult[beta] = m
                nxt.append(beta)
        layer = nxt
    return mult


def freudenthal_dim(rs, weight) -> int:
    """Dimension as the sum of all weight multiplicities."""
    return sum(weight_multiplicities(rs, weight).values())
