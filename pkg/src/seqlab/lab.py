"""Prime-divisor experiments over windows of primes.

Gamma(X) denotes the set of admissible primes dividing some term of the
sequence carried by X.  This module sweeps such sets over a window of
primes — either the first K odd primes or the odd primes below a bound —
and packages the bookkeeping the experiments need: the six-way partition of
Gamma(X**2), the cubic three-way partition of Gamma(S), and the
even/odd-part independence reports whose published reference densities are
kept in TABLE3_ROWS.

Densities come in two conventions, because "share of the first 1200 primes"
can count the window primes outside the admissible set in the denominator
("all") or drop them ("pi_t"); both are computed everywhere.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from multiprocessing import Pool
from typing import Dict, List, Optional, Sequence, Tuple

from .errors import DegenerateParameterError
from .rational import format_rational, is_rational_square
from .ring import ParamPair, RationalLike, _frac
from .transforms import classify_cyclotomic, is_simple
from .group import GroupElement, class_c, class_w, class_v
from .modp import in_admissible_set, is_divisor
from .primes import first_odd_primes, odd_primes_below

CONVENTIONS = ("pi_t", "all")

CSV_HEADER = (
    "T", "Q", "x0", "x1",
    "density_X", "density_WX", "density_intersection", "density_product",
    "window_mode", "window_size", "convention",
)

# (T, Q, x0, x1) rows with reference densities (|G_X|, |G_WX|, |G_X & G_WX|,
# product) as published for the first 1200 primes.
TABLE3_ROWS: Tuple[Tuple[int, int, int, int, Tuple[float, float, float, float]], ...] = (
    (5, 3, 17, 11, (0.356, 0.356, 0.126, 0.127)),
    (4, 11, 3, 8, (0.328, 0.334, 0.111, 0.110)),
    (3, 7, 2, 5, (0.357, 0.355, 0.123, 0.127)),
    (3, -2, 4, 15, (0.353, 0.340, 0.116, 0.120)),
    (7, 11, 3, 2, (0.340, 0.340, 0.115, 0.116)),
    (2, -5, 3, 14, (0.343, 0.339, 0.111, 0.116)),
)


@dataclass(frozen=True)
class PrimeWindow:
    """A window of odd primes: the first `size` of them, or those below `size`."""

    mode: str = "first"
    size: int = 1200

    def __post_init__(self) -> None:
        if self.mode not in ("first", "below"):
            raise ValueError("window mode must be 'first' or 'below', got %r" % self.mode)
        if self.size < 1:
            raise ValueError("window size must be positive")

    @classmethod
    def parse(cls, text: str) -> "PrimeWindow":
        """Parse "first:K", "below:B" or a bare count "K"."""
        text = text.strip()
        if ":" in text:
            mode, _, num = text.partition(":")
            return cls(mode=mode.strip(), size=int(num))
        return cls(mode="first", size=int(text))

    def primes(self) -> List[int]:
        if self.mode == "first":
            return first_odd_primes(self.size)
        return odd_primes_below(self.size)

    def to_dict(self) -> dict:
        return {"mode": self.mode, "size": self.size}


def window_split(t: RationalLike, window: PrimeWindow) -> Tuple[List[int], List[int]]:
    """Split the window into (admissible, excluded) primes for t."""
    t = _frac(t)
    eligible, excluded = [], []
    for p in window.primes():
        (eligible if in_admissible_set(t, p) else excluded).append(p)
    return eligible, excluded


def _flags_chunk(args: Tuple[Tuple[GroupElement, ...], Sequence[int]]) -> List[Tuple[bool, ...]]:
    elements, primes = args
    return [tuple(is_divisor(x, p) for x in elements) for p in primes]


def divisor_flags(
    elements: Sequence[GroupElement],
    primes: Sequence[int],
    processes: Optional[int] = None,
) -> List[Tuple[bool, ...]]:
    """Per-prime divisor membership for each element, in window order.

    With `processes` the prime list is chunked across a pool; chunk results
    are merged in order, so the output is identical to the serial run.
    """
    elements = tuple(elements)
    if not processes or processes <= 1 or len(primes) < 64:
        return _flags_chunk((elements, primes))
    chunk = max(32, len(primes) // (4 * processes))
    jobs = [(elements, primes[i : i + chunk]) for i in range(0, len(primes), chunk)]
    with Pool(processes) as pool:
        parts = pool.map(_flags_chunk, jobs)
    return [row for part in parts for row in part]


def _one_param_t_of(x: GroupElement) -> Fraction:
    if not x.ctx.is_one_param:
        raise DegenerateParameterError("divisor sweeps take one-parameter classes")
    return x.ctx.T


def gamma(x: GroupElement, window: PrimeWindow, processes: Optional[int] = None) -> Tuple[int, ...]:
    """The divisor set of x restricted to the window's admissible primes."""
    eligible, _ = window_split(_one_param_t_of(x), window)
    flags = divisor_flags([x], eligible, processes)
    return tuple(p for p, (hit,) in zip(eligible, flags) if hit)


# ---------------------------------------------------------------------------
# partitions
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class SixPartition:
    """The six pairwise intersections partitioning Gamma(X**2).

    Keys pair up the four translates X, CX, WX, VX; each admissible window
    prime dividing X**2 lands in exactly one cell.
    """

    t: Fraction
    window: PrimeWindow
    eligible_count: int
    excluded: Tuple[int, ...]
    cells: Dict[str, Tuple[int, ...]]
    gamma_square: Tuple[int, ...]

    def to_dict(self) -> dict:
        return {
            "t": format_rational(self.t),
            "window": self.window.to_dict(),
            "eligible": self.eligible_count,
            "excluded": list(self.excluded),
            "cells": {k: list(v) for k, v in self.cells.items()},
            "gamma_square": list(self.gamma_square),
            "cell_counts": {k: len(v) for k, v in self.cells.items()},
        }


_SIX_CELLS = (
    ("x_cx", 0, 1), ("x_wx", 0, 2), ("x_vx", 0, 3),
    ("wx_vx", 2, 3), ("cx_wx", 1, 2), ("cx_vx", 1, 3),
)


def partition_six(x: GroupElement, window: PrimeWindow, processes: Optional[int] = None) -> SixPartition:
    """Partition Gamma(X**2) into the six translate intersections.

    Verifies, prime by prime, that the cells are disjoint, that they cover
    Gamma(X**2), and that the three cells avoiding X land inside the
    matching basis divisor sets (wx_vx in Gamma(C), cx_wx in Gamma(V),
    cx_vx in Gamma(W)); any violation is a genuine arithmetic failure.
    """
    t = _one_param_t_of(x)
    ctx = x.ctx
    c, w, v = class_c(ctx), class_w(t), class_v(t)
    elements = [x, c * x, w * x, v * x, x * x, c, w, v]
    eligible, excluded = window_split(t, window)
    flags = divisor_flags(elements, eligible, processes)

    cells: Dict[str, List[int]] = {name: [] for name, _, _ in _SIX_CELLS}
    gamma_sq: List[int] = []
    guards = {"wx_vx": 5, "cx_wx": 7, "cx_vx": 6}  # C, V, W flag columns
    for p, row in zip(eligible, flags):
        hits = [name for name, i, j in _SIX_CELLS if row[i] and row[j]]
        in_sq = row[4]
        if in_sq:
            gamma_sq.append(p)
        if len(hits) > 1:
            raise ArithmeticError("partition cells overlap at p = %d: %s" % (p, hits))
        if bool(hits) != in_sq:
            raise ArithmeticError("partition does not match Gamma(X^2) at p = %d" % p)
        if hits:
            cells[hits[0]].append(p)
            guard = guards.get(hits[0])
            if guard is not None and not row[guard]:
                raise ArithmeticError("subset relation fails at p = %d for cell %s" % (p, hits[0]))
    return SixPartition(
        t=t, window=window, eligible_count=len(eligible), excluded=tuple(excluded),
        cells={k: tuple(vv) for k, vv in cells.items()}, gamma_square=tuple(gamma_sq),
    )


@dataclass(frozen=True)
class CubicPartition:
    """Gamma(S) split into Gamma(WS), Gamma(Y) and Gamma(WY) for cubic t."""

    t: Fraction
    window: PrimeWindow
    eligible_count: int
    excluded: Tuple[int, ...]
    cells: Dict[str, Tuple[int, ...]]
    gamma_s: Tuple[int, ...]

    def to_dict(self) -> dict:
        return {
            "t": format_rational(self.t),
            "window": self.window.to_dict(),
            "eligible": self.eligible_count,
            "excluded": list(self.excluded),
            "cells": {k: list(v) for k, v in self.cells.items()},
            "gamma_s": list(self.gamma_s),
            "cell_counts": {k: len(v) for k, v in self.cells.items()},
        }


def cubic_partition(t: RationalLike, window: PrimeWindow, processes: Optional[int] = None) -> CubicPartition:
    """For cubic t, partition Gamma(S) into Gamma(WS), Gamma(Y), Gamma(WY).

    S = [2, t+f] is an order-3 class, so Gamma(S**2) = Gamma(S); the C/W/V
    translate partition collapses to three cells.  C*S falls in the class of
    Z = Y^{-1}, whose divisor set equals Gamma(Y); the partition is built
    from Y directly and cross-checked against C*S prime by prime.
    """
    t = _frac(t)
    cls = classify_cyclotomic(t)
    if cls.kind != "cubic":
        raise DegenerateParameterError("t = %s is not cubic" % t)
    ctx = ParamPair.one_param(t)
    f = cls.f
    s = GroupElement.from_pair(ctx, 2, t + f)
    y = GroupElement.from_pair(ctx, 2, t + 3 * f)
    w = class_w(t)
    c = class_c(ctx)
    elements = [s, w * s, y, w * y, c * s]
    eligible, excluded = window_split(t, window)
    flags = divisor_flags(elements, eligible, processes)

    cells: Dict[str, List[int]] = {"ws": [], "y": [], "wy": []}
    gamma_s: List[int] = []
    for p, row in zip(eligible, flags):
        in_s, in_ws, in_y, in_wy, in_cs = row
        if in_y != in_cs:
            raise ArithmeticError("Gamma(CS) differs from Gamma(Y) at p = %d" % p)
        if in_s:
            gamma_s.append(p)
        hits = [name for name, flag in (("ws", in_ws), ("y", in_y), ("wy", in_wy)) if flag]
        if len(hits) > 1:
            raise ArithmeticError("cubic partition cells overlap at p = %d: %s" % (p, hits))
        if bool(hits) != in_s:
            raise ArithmeticError("cubic partition does not match Gamma(S) at p = %d" % p)
        if hits:
            cells[hits[0]].append(p)
    return CubicPartition(
        t=t, window=window, eligible_count=len(eligible), excluded=tuple(excluded),
        cells={k: tuple(vv) for k, vv in cells.items()}, gamma_s=tuple(gamma_s),
    )


# ---------------------------------------------------------------------------
# independence reports
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class DensityReport:
    """Divisor densities of the even/odd parts of a (T, Q)-sequence.

    The sequence [x0, x1] over a simple pair (T, Q) splits into the class
    X = [Q*x0, x2] over t = T**2/Q - 2; Gamma(X) collects the primes
    dividing some even-indexed term, Gamma(WX) the odd-indexed ones.  The
    heuristic under test is the independence |G_X & G_WX| ~ |G_X|*|G_WX|.
    """

    T: int
    Q: int
    x0: int
    x1: int
    t: Fraction
    window: PrimeWindow
    total_primes: int
    eligible_count: int
    excluded: Tuple[int, ...]
    count_x: int
    count_wx: int
    count_both: int
    det_part: Fraction
    det_part_square: bool
    q_square: bool
    qdet_square: bool
    reference: Optional[Tuple[float, float, float, float]] = None
    members_x: Optional[Tuple[int, ...]] = None
    members_wx: Optional[Tuple[int, ...]] = None

    def _denominator(self, convention: str) -> int:
        if convention == "pi_t":
            return self.eligible_count
        if convention == "all":
            return self.total_primes
        raise ValueError("unknown convention %r" % convention)

    def densities(self, convention: str) -> Dict[str, float]:
        d = self._denominator(convention)
        dx, dwx = self.count_x / d, self.count_wx / d
        return {
            "x": dx,
            "wx": dwx,
            "intersection": self.count_both / d,
            "product": dx * dwx,
        }

    def csv_row(self, convention: str) -> List[str]:
        dens = self.densities(convention)
        return [
            str(self.T), str(self.Q), str(self.x0), str(self.x1),
            "%.6f" % dens["x"], "%.6f" % dens["wx"],
            "%.6f" % dens["intersection"], "%.6f" % dens["product"],
            self.window.mode, str(self.window.size), convention,
        ]

    def to_dict(self) -> dict:
        out = {
            "T": self.T, "Q": self.Q, "x": [self.x0, self.x1],
            "t": format_rational(self.t),
            "window": self.window.to_dict(),
            "total_primes": self.total_primes,
            "eligible": self.eligible_count,
            "excluded": list(self.excluded),
            "counts": {"x": self.count_x, "wx": self.count_wx, "both": self.count_both},
            "densities": {conv: self.densities(conv) for conv in CONVENTIONS},
            "qr_ceilings": {
                "det_part": format_rational(self.det_part),
                "det_part_square": self.det_part_square,
                "q_square": self.q_square,
                "qdet_square": self.qdet_square,
                "gamma_x_ceiling": None if self.det_part_square else 0.5,
                "gamma_wx_ceiling": None if self.q_square else 0.5,
                "intersection_ceiling": None if self.det_part_square or self.q_square else 0.25,
            },
        }
        if self.reference is not None:
            out["reference"] = list(self.reference)
        if self.members_x is not None:
            out["members"] = {"x": list(self.members_x), "wx": list(self.members_wx or ())}
        return out


def independence_report(
    T: int,
    Q: int,
    x0: int,
    x1: int,
    window: PrimeWindow = PrimeWindow(),
    processes: Optional[int] = None,
    full: bool = False,
    reference: Optional[Tuple[float, float, float, float]] = None,
) -> DensityReport:
    """Measure the independence of even- and odd-part divisor sets.

    (T, Q) must be a simple pair (reduce with simple_reduce first); [x0, x1]
    is an integer seed with nonvanishing determinant.
    """
    for name, val in (("T", T), ("Q", Q), ("x0", x0), ("x1", x1)):
        if val != int(val):
            raise DegenerateParameterError("%s must be an integer, got %r" % (name, val))
    T, Q, x0, x1 = int(T), int(Q), int(x0), int(x1)
    if not is_simple(T, Q):
        raise DegenerateParameterError(
            "(%d, %d) is not a simple pair; reduce it first (simple_reduce)" % (T, Q)
        )
    t = Fraction(T * T, Q) - 2
    ctx = ParamPair.one_param(t)
    x2 = T * x1 - Q * x0
    x = GroupElement.from_pair(ctx, Q * x0, x2)
    wx = class_w(t) * x
    eligible, excluded = window_split(t, window)
    flags = divisor_flags([x, wx], eligible, processes)
    hits_x = [p for p, row in zip(eligible, flags) if row[0]]
    hits_wx = [p for p, row in zip(eligible, flags) if row[1]]
    both = [p for p, row in zip(eligible, flags) if row[0] and row[1]]
    det_part = Fraction(x1 * x1 - T * x0 * x1 + Q * x0 * x0)
    return DensityReport(
        T=T, Q=Q, x0=x0, x1=x1, t=t, window=window,
        total_primes=len(eligible) + len(excluded),
        eligible_count=len(eligible), excluded=tuple(excluded),
        count_x=len(hits_x), count_wx=len(hits_wx), count_both=len(both),
        det_part=det_part,
        det_part_square=is_rational_square(det_part),
        q_square=is_rational_square(Fraction(Q)),
        qdet_square=is_rational_square(Fraction(Q) * det_part),
        reference=reference,
        members_x=tuple(hits_x) if full else None,
        members_wx=tuple(hits_wx) if full else None,
    )


def table3(
    window: PrimeWindow = PrimeWindow(),
    processes: Optional[int] = None,
    full: bool = False,
) -> List[DensityReport]:
    """Rerun all published independence rows over the given window."""
    return [
        independence_report(T, Q, x0, x1, window, processes, full, reference=ref)
        for (T, Q, x0, x1, ref) in TABLE3_ROWS
    ]


def best_reference_deviation(report: DensityReport) -> Tuple[str, float]:
    """The convention minimizing the max density deviation from the reference."""
    if report.reference is None:
        raise ValueError("report has no reference densities")
    best: Tuple[str, float] = ("", float("inf"))
    for conv in CONVENTIONS:
        dens = report.densities(conv)
        dev = max(
            abs(dens["x"] - report.reference[0]),
            abs(dens["wx"] - report.reference[1]),
            abs(dens["intersection"] - report.reference[2]),
            abs(dens["product"] - report.reference[3]),
        )
        if dev < best[1]:
            best = (conv, dev)
    return best
