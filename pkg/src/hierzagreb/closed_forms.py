"""Closed-form EM1 evaluators for products and the chemical families.

Evaluators take precomputed statistics rather than graphs so that each
formula can be compared against the brute-force index and against the
other formulas it is supposed to reduce to. All arithmetic is exact.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Callable

from .invariants import GraphStats, UAggregates

INT64_MAX = 2**63 - 1


class FormulaRangeError(ValueError):
    """Parameters fall outside the range where a family formula holds."""


def _checked(value):
    if abs(value) > INT64_MAX:
        raise OverflowError("formula value exceeds the signed 64-bit range")
    return value


def em1_hier_t1(gs: GraphStats, hs: GraphStats, ua: UAggregates, u_size: int) -> int:
    """EM1 of the generalized hierarchical product ``G Π H(U)``."""
    return _checked(
        gs.n * hs.em1
        + u_size * gs.em1
        + 5 * gs.m1 * ua.sigma1
        + 8 * gs.m * ua.sigma2
        + 2 * gs.m1 * ua.epsilon
        + 4 * gs.m * ua.nu
        - 16 * gs.m * ua.sigma1
    )


def em1_cart_t2(gs: GraphStats, hs: GraphStats) -> int:
    """EM1 of the Cartesian product."""
    return _checked(
        gs.n * hs.em1
        + hs.n * gs.em1
        + 12 * gs.m * hs.m1
        + 12 * hs.m * gs.m1
        - 32 * gs.m * hs.m
    )


def em1_cluster_t3(gs: GraphStats, h_em1: int, root_degree: int, root_nbr_deg_sum: int) -> int:
    """EM1 of the rooted product ``G{H}`` with the root of ``H`` given by its
    degree and the degree sum of its neighbours."""
    return _checked(
        gs.n * h_em1
        + gs.em1
        + 5 * root_degree * gs.m1
        + 8 * gs.m * root_degree**2
        + 4 * gs.m * root_nbr_deg_sum
        - 16 * gs.m * root_degree
    )


def em1_p2_hier_c1(h_em1: int, ua: UAggregates) -> int:
    return _checked(2 * h_em1 + 8 * ua.sigma2 - 6 * ua.sigma1 + 4 * ua.epsilon + 4 * ua.nu)


def em1_cluster_regular_c2(r: int, s: int, nG: int, nH: int) -> int:
    """EM1 of ``G{H}`` for an ``r``-regular ``G`` and ``s``-regular ``H``."""
    if r < 0 or s < 0:
        raise FormulaRangeError("regularity degrees must be non-negative")
    return _checked(
        nG * (2 * s * (s - 1) ** 2 * nH + 2 * r * (r - 1) ** 2 + 5 * r * r * s + 6 * r * s * s - 8 * r * s)
    )


def em1_thorn_c3(em1_g: int, m1_g: int, n: int, m: int, t: int) -> int:
    if t < 0:
        raise FormulaRangeError(f"thorn count must be non-negative, got {t}")
    return _checked(em1_g + 5 * t * m1_g + n * t * (t - 1) ** 2 + 8 * m * t * t - 12 * m * t)


def em1_pendant_c4(em1_g: int, m1_g: int, m: int) -> int:
    return _checked(em1_g + 5 * m1_g - 4 * m)


# -- family formulas -----------------------------------------------------


@dataclass(frozen=True)
class FormulaPair:
    """A family formula as printed next to its oracle-validated version.

    ``paper_value`` is a ``Fraction`` only when the printed expression is
    not an integer for the given parameters.
    """

    paper_value: int | Fraction
    corrected_value: int

    @property
    def agrees(self) -> bool:
        return self.paper_value == self.corrected_value


def _exact(num, den=1):
    q = Fraction(num, den)
    return int(q) if q.denominator == 1 else q


def _require(cond, family, message):
    if not cond:
        raise FormulaRangeError(f"{family}: {message}")


def _hexchain(n):
    _require(n >= 1, "hexchain", "n >= 1 required")
    v = 52 * n - 28
    return v, v


def _polyhex(n):
    _require(n >= 2, "polyhex", "n >= 2 required")
    return 52 * n, 52 * n


def _phenylene(n):
    _require(n >= 1, "phenylene", "n >= 1 required")
    return 96 * n - 72, 100 * n - 76


def _dendron(p, r):
    _require(p >= 2 and r >= 2, "dendron", "p >= 2 and r >= 2 required")
    v = _exact(p * (p ** (r + 2) + 3 * p ** (r + 1) - 8 * p * p + 5 * p - 1), p - 1)
    return v, v


def _dendrimer(p, r):
    _require(p >= 2 and r >= 2, "dendrimer", "p >= 2 and r >= 2 required")
    printed = _exact(2 * p * p * (p ** (r + 1) - 3 * p**r - 2 * p - 2), p - 1)
    corrected = _exact(2 * p * p * (p ** (r + 1) + 3 * p**r - 2 * p - 2), p - 1)
    return printed, corrected


def _sun(m, n):
    _require(m >= 3 and n >= 2, "sun", "m >= 3 and n >= 2 required")
    v = 2 * m * (2 * n + 9)
    return v, v


def _comb(n):
    _require(n >= 3, "comb", "n >= 3 required")
    return 8 * n * n + 10 * n - 38, 4 * n * n + 14 * n - 40


def _cluster_cycles(n, m):
    _require(n >= 3 and m >= 3, "cluster-cycles", "n >= 3 and m >= 3 required")
    v = 4 * n * (m + 15)
    return v, v


def _cluster_completes(n, m):
    _require(n >= 1 and m >= 1, "cluster-completes", "n >= 1 and m >= 1 required")
    a, b = n - 1, m - 1
    printed = n * (
        2 * m * (n - 1) * (n - 2) ** 2
        + 2 * (m - 1) * (m - 2) ** 2
        + 5 * a * a * b
        + 6 * a * b * b
        - 8 * a * b
    )
    return printed, em1_cluster_regular_c2(a, b, n, m)


FAMILY_FORMULAS: dict[str, Callable[..., tuple]] = {
    "hexchain": _hexchain,
    "polyhex": _polyhex,
    "phenylene": _phenylene,
    "dendron": _dendron,
    "dendrimer": _dendrimer,
    "sun": _sun,
    "comb": _comb,
    "cluster-cycles": _cluster_cycles,
    "cluster-completes": _cluster_completes,
}


def family_formula(family: str, *params: int) -> FormulaPair:
    """Evaluate a family's printed and corrected EM1 formulas.

    >>> family_formula("comb", 3)
    FormulaPair(paper_value=64, corrected_value=38)
    """
    try:
        fn = FAMILY_FORMULAS[family]
    except KeyError:
        raise FormulaRangeError(f"unknown family {family!r}") from None
    printed, corrected = fn(*params)
    return FormulaPair(printed, corrected)
