"""Closed-form model of partial-diffusion amplitude amplification.

The state after ``q`` oracle + diffusion rounds is described by three
amplitudes (see :class:`~qjunta.statevec.AmplitudeTriple`). With ``r = M/N``:

    mean_q = (1 - r) * a_{q-1} + r * c_{q-1}
    a_q = 2 * mean_q - a_{q-1}
    b_q = 2 * mean_q - c_{q-1}
    c_q = -b_{q-1}

seeded at q = 0 with the uniform state ``a = b = 1/sqrt(N)``, ``c = 0``.
The success probability after ``q`` rounds is

    P_s(q) = (1 - cos t) * (sin^2((q+1) t) + sin^2(q t)) / sin^2(t)

with ``cos t = 1 - M/N``, and the iteration count is ``floor(pi / (2 t))``.
"""

from __future__ import annotations

import csv
import math
from dataclasses import dataclass
from pathlib import Path
from typing import Iterable, Iterator

from .statevec import AmplitudeTriple


@dataclass(frozen=True)
class SearchParams:
    N: int
    M: int

    def __post_init__(self):
        if self.N < 1:
            raise ValueError("N must be positive")
        if not 0 <= self.M <= self.N:
            raise ValueError(f"M={self.M} outside [0, {self.N}]")

    @classmethod
    def for_width(cls, n: int, M: int) -> "SearchParams":
        return cls(1 << n, M)

    @property
    def theta(self) -> float:
        """Angle with ``cos(theta) = 1 - M/N``; exactly pi/2 when M = N."""
        self._require_matches()
        if self.M == self.N:
            return math.pi / 2
        return math.acos(1.0 - self.M / self.N)

    def _require_matches(self) -> None:
        if self.M == 0:
            raise ValueError("M = 0: no matches, the amplification model is undefined")


def initial_triple(p: SearchParams) -> AmplitudeTriple:
    amp = 1.0 / math.sqrt(p.N)
    return AmplitudeTriple(a=amp, b=amp, c=0.0, q=0)


def recurrence_step(t: AmplitudeTriple, p: SearchParams) -> AmplitudeTriple:
    p._require_matches()
    ratio = p.M / p.N
    mean = (1.0 - ratio) * t.a + ratio * t.c
    return AmplitudeTriple(
        a=2.0 * mean - t.a,
        b=2.0 * mean - t.c,
        c=-t.b,
        q=t.q + 1,
    )


def trajectory(p: SearchParams, q_max: int) -> list[AmplitudeTriple]:
    """Triples for q = 0..q_max, starting from :func:`initial_triple`."""
    out = [initial_triple(p)]
    for _ in range(q_max):
        out.append(recurrence_step(out[-1], p))
    return out


def success_probability(p: SearchParams, q: int) -> float:
    theta = p.theta
    s2 = math.sin(theta) ** 2
    return (1.0 - math.cos(theta)) * (
        math.sin((q + 1) * theta) ** 2 / s2 + math.sin(q * theta) ** 2 / s2
    )


def iteration_count(p: SearchParams) -> int:
    return math.floor(math.pi / (2.0 * p.theta))


def iteration_bound(p: SearchParams) -> float:
    """``(pi / (2 sqrt 2)) * sqrt(N / M)``."""
    p._require_matches()
    return math.pi / (2.0 * math.sqrt(2.0)) * math.sqrt(p.N / p.M)


# ---------------------------------------------------------------------------
# Validation grid and golden file
# ---------------------------------------------------------------------------

GRID_COLUMNS = ("n", "M", "q", "a", "b", "c", "P_s")


def grid_match_counts(n: int) -> list[int]:
    """M in {1, 2, N/4, N/2, 3N/4, N-1, N}, deduplicated, for N = 2**n."""
    N = 1 << n
    values = {1, 2, N // 4, N // 2, 3 * N // 4, N - 1, N}
    return sorted(m for m in values if 1 <= m <= N)


def grid_points(n_min: int = 2, n_max: int = 8) -> Iterator[tuple[int, int]]:
    for n in range(n_min, n_max + 1):
        for M in grid_match_counts(n):
            yield n, M


@dataclass(frozen=True)
class GridRow:
    n: int
    M: int
    q: int
    a: float
    b: float
    c: float
    P_s: float


def grid_rows(n_min: int = 2, n_max: int = 8) -> list[GridRow]:
    """Recurrence triples and P_s for q = 0..2q* at every grid point."""
    rows = []
    for n, M in grid_points(n_min, n_max):
        p = SearchParams.for_width(n, M)
        for t in trajectory(p, 2 * iteration_count(p)):
            rows.append(
                GridRow(n, M, t.q, t.a, t.b, t.c, success_probability(p, t.q))
            )
    return rows


def write_golden(rows: Iterable[GridRow], path) -> None:
    with open(path, "w", newline="") as fh:
        writer = csv.writer(fh, lineterminator="\n")
        writer.writerow(GRID_COLUMNS)
        for r in rows:
            writer.writerow(
                [r.n, r.M, r.q] + [f"{v:.15g}" for v in (r.a, r.b, r.c, r.P_s)]
            )


def read_golden(path) -> list[GridRow]:
    with open(path, newline="") as fh:
        reader = csv.DictReader(fh)
        if tuple(reader.fieldnames or ()) != GRID_COLUMNS:
            raise ValueError(f"{path}: unexpected header {reader.fieldnames}")
        return [
            GridRow(
                int(r["n"]), int(r["M"]), int(r["q"]),
                float(r["a"]), float(r["b"]), float(r["c"]), float(r["P_s"]),
            )
            for r in reader
        ]


def default_golden_path() -> Path:
    return Path(__file__).with_name("data") / "analytic_grid.csv"
