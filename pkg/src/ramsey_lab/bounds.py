"""Closed-form Ramsey values and bounds; exact integer/rational arithmetic only."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import comb, isqrt

from .graph_core import SimpleGraph, is_connected


@dataclass(frozen=True)
class BoundReport:
    name: str
    inputs: dict
    value: int | Fraction | None
    applicable: dict[str, bool] = field(default_factory=dict)

    def to_json(self) -> dict:
        v = self.value
        return {
            "name": self.name,
            "inputs": {k: str(x) if isinstance(x, Fraction) else x for k, x in self.inputs.items()},
            "value": str(v) if isinstance(v, Fraction) else v,
            "applicable": self.applicable,
        }


def _require(cond: bool, msg: str) -> None:
    if not cond:
        raise ValueError(msg)


def goodness_value(n: int, m: int, t: int) -> int:
    """(n-1)(m-1)+t, the tK_m-goodness value for a connected G of order n."""
    _require(n >= 1 and m >= 1 and t >= 1, "need n, m, t >= 1")
    return (n - 1) * (m - 1) + t


def chvatal_tree_value(n: int, m: int) -> int:
    _require(n >= 1 and m >= 1, "need n, m >= 1")
    return (n - 1) * (m - 1) + 1


def upper_Km(ell: int, m: int) -> int:
    """floor((2*ell+1)^((m-1)/2)), computed exactly.

    For integer x, floor(x^(p/2)) = isqrt(x^p).
    """
    _require(m >= 3, "the K_m upper bound needs m >= 3")
    _require(ell >= 1, "need at least one edge")
    base = 2 * ell + 1
    if (m - 1) % 2 == 0:
        return base ** ((m - 1) // 2)
    return isqrt(base ** (m - 1))


def upper_tKm(ell: int, m: int, t: int) -> int:
    _require(t >= 1, "need t >= 1")
    return upper_Km(ell, m) + m * (t - 1)


def triangle_bound(ell: int) -> int:
    _require(ell >= 1, "need at least one edge")
    return 2 * ell + 1


def turan_bound(n: int, r: int) -> Fraction:
    """(1 - 1/r) n^2 / 2, an upper bound on ex(n, K_{r+1})."""
    _require(r >= 1 and n >= 0, "need r >= 1 and n >= 0")
    return Fraction((r - 1) * n * n, 2 * r)


def chvatal_harary_value(g: SimpleGraph) -> int:
    """r(G, 2K_2): n+2 for complete G, n+1 otherwise."""
    _require(g.n >= 1 and min(g.degrees()) > 0, "G must have no isolated vertices")
    return g.n + 2 if g.is_complete() else g.n + 1


def mequals2_budget(t: int) -> tuple[Fraction, int]:
    """(c, n_min) for the m = 2 case: c = 1/(t+2) for t <= 2, else 1/(4t-5);
    n_min = 3 * binom(1/c, 2)."""
    _require(t >= 1, "need t >= 1")
    c = Fraction(1, t + 2) if t <= 2 else Fraction(1, 4 * t - 5)
    return c, 3 * comb(c.denominator, 2)


def suspended_path_threshold(m: int, t: int) -> int:
    """q = (m-1) t (mt-1) + 2t."""
    _require(m >= 2 and t >= 1, "need m >= 2 and t >= 1")
    return (m - 1) * t * (m * t - 1) + 2 * t


def main_budget(m: int, t: int, epsilon: Fraction) -> tuple[Fraction, int]:
    """(c(m, t), q) with c = min{epsilon/t, 1/(4t), 1/(3(2q-3))}.

    ``epsilon`` is the caller's value for the t = 1 constant; there is no default.
    """
    epsilon = Fraction(epsilon)
    _require(epsilon > 0, "epsilon must be positive")
    q = suspended_path_threshold(m, t)
    c = min(epsilon / t, Fraction(1, 4 * t), Fraction(1, 3 * (2 * q - 3)))
    return c, q


def trichotomy_alpha(q: int, ell: int, k: int) -> int:
    return (q - 2) * (2 * ell + 3 * k - 8) + 1


def bounds_table(g: SimpleGraph, m: int, t: int, epsilon: Fraction | None = None) -> list[BoundReport]:
    """Every applicable formula for (G, tK_m) as reports."""
    n, ell = g.n, g.edge_count()
    connected = is_connected(g)
    no_isolated = n >= 1 and min(g.degrees()) > 0
    k = g.excess_k()
    rows = [
        BoundReport(
            "goodness_value",
            {"n": n, "m": m, "t": t},
            goodness_value(n, m, t),
            {"connected": connected, "n>=t": n >= t},
        ),
        BoundReport(
            "burr_lower_bound",
            {"n": n, "chi": m, "s": t},
            goodness_value(n, m, t),
            {"connected": connected, "n>=s": n >= t},
        ),
        BoundReport("chvatal_tree_value", {"n": n, "m": m}, chvatal_tree_value(n, m), {"tree": connected and k == 1}),
    ]
    if m >= 3 and ell >= 1:
        rows.append(BoundReport("upper_Km", {"ell": ell, "m": m}, upper_Km(ell, m), {"no_isolated": no_isolated}))
        rows.append(
            BoundReport("upper_tKm", {"ell": ell, "m": m, "t": t}, upper_tKm(ell, m, t), {"no_isolated": no_isolated})
        )
    if m == 3 and ell >= 1 and t == 1:
        rows.append(BoundReport("triangle_bound", {"ell": ell}, triangle_bound(ell), {"no_isolated": no_isolated}))
    if m == 2 and t == 2 and no_isolated:
        rows.append(BoundReport("chvatal_harary_value", {"n": n}, chvatal_harary_value(g), {"no_isolated": True}))
    if m == 2:
        c, n_min = mequals2_budget(t)
        rows.append(
            BoundReport(
                "mequals2_budget",
                {"t": t},
                c,
                {"k<=c*n^2": 1 <= k and k <= c * n * n, "n>=n_min": n >= n_min, "n_min": n_min},
            )
        )
    if m >= 2:
        q = suspended_path_threshold(m, t)
        if epsilon is not None:
            c, _ = main_budget(m, t, epsilon)
            rows.append(BoundReport("main_budget", {"m": m, "t": t, "epsilon": Fraction(epsilon)}, c, {"q": q}))
        rows.append(
            BoundReport(
                "trichotomy_alpha",
                {"q": q, "ell": 2 * t, "k": k},
                trichotomy_alpha(q, 2 * t, k),
                {"non_degenerate": 4 * t + 3 * k - 8 >= 1},
            )
        )
    return rows
