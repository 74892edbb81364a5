"""Dense state-vector simulation of an n-qubit input register plus one ancilla.

Layout: amplitude index ``2 * x + anc`` holds basis state ``|x>|anc>``, so a
state reshaped to ``(2**n, 2)`` has the ancilla in the last column.

The only operators the search needs are the uniform preparation, the
bit-flip oracle ``|x>|b> -> |x>|b ^ g(x)>`` and the partial diffusion
operator ``Y = (H^n x I)(2|0><0| - I)(H^n x I)``. They are applied as
specialized transforms; explicit matrices are built only for small ``n`` to
check those transforms.
"""

from __future__ import annotations

from dataclasses import dataclass
from pathlib import Path

import numpy as np

from .boolfn import ArityError, CapacityError, TruthTable

#: Largest input-register width the simulator accepts.
SIM_ARITY_CAP = 14
#: Largest width for which explicit operator matrices are built.
MATRIX_ARITY_CAP = 6

NORM_TOL = 1e-10


@dataclass
class QuantumState:
    """Amplitudes over ``n`` input qubits and one ancilla."""

    n: int
    amplitudes: np.ndarray

    def __post_init__(self):
        if not 1 <= self.n <= SIM_ARITY_CAP:
            raise CapacityError(
                f"register width {self.n} outside 1..{SIM_ARITY_CAP}"
            )
        self.amplitudes = np.asarray(self.amplitudes, dtype=np.complex128)
        if self.amplitudes.shape != (2 << self.n,):
            raise ArityError(
                f"expected {2 << self.n} amplitudes for n={self.n}, "
                f"got {self.amplitudes.size}"
            )

    @property
    def grid(self) -> np.ndarray:
        """View of the amplitudes as ``(2**n, 2)``; column is the ancilla."""
        return self.amplitudes.reshape(-1, 2)

    def norm(self) -> float:
        return float(np.vdot(self.amplitudes, self.amplitudes).real)

    def copy(self) -> "QuantumState":
        return QuantumState(self.n, self.amplitudes.copy())


@dataclass(frozen=True)
class AmplitudeTriple:
    """Amplitudes of the three groups after ``q`` iterations.

    ``a``: undesired inputs, ancilla 0; ``b``: desired inputs, ancilla 0;
    ``c``: desired inputs, ancilla 1.
    """

    a: float
    b: float
    c: float
    q: int = 0

    def norm(self, N: int, M: int) -> float:
        return (N - M) * self.a**2 + M * self.b**2 + M * self.c**2


def _oracle_mask(g, n: int) -> np.ndarray:
    if isinstance(g, TruthTable):
        if g.arity != n:
            raise ArityError(f"oracle arity {g.arity} does not match register width {n}")
        return g.bits.astype(bool)
    mask = np.asarray(g, dtype=bool)
    if mask.shape != (1 << n,):
        raise ArityError(f"oracle table length {mask.size} does not match 2**{n}")
    return mask


def uniform_superposition(n: int) -> QuantumState:
    if not 1 <= n <= SIM_ARITY_CAP:
        raise CapacityError(f"register width {n} outside 1..{SIM_ARITY_CAP}")
    amps = np.zeros(2 << n, dtype=np.complex128)
    amps[0::2] = 1.0 / np.sqrt(1 << n)
    return QuantumState(n, amps)


def apply_oracle(s: QuantumState, g, inplace: bool = False) -> QuantumState:
    """Flip the ancilla on every input with ``g(x) = 1``.

    ``g`` is a :class:`TruthTable` of arity ``s.n`` or a boolean mask.
    """
    mask = _oracle_mask(g, s.n)
    out = s if inplace else s.copy()
    grid = out.grid
    grid[mask] = grid[mask][:, ::-1]
    return out


def apply_partial_diffusion(s: QuantumState, inplace: bool = False) -> QuantumState:
    """Inversion about the mean on the ancilla-0 subspace; ancilla-1 negated.

    ``Y`` equals ``2|u,0><u,0| - I`` with ``|u>`` the uniform input state,
    which is what this computes in O(2**n).
    """
    out = s if inplace else s.copy()
    grid = out.grid
    mean = grid[:, 0].mean()
    grid[:, 0] = 2.0 * mean - grid[:, 0]
    grid[:, 1] *= -1.0
    return out


def measure_input(s: QuantumState, rng: np.random.Generator) -> int:
    """Sample the input register; consumes exactly one ``rng.random()``.

    The state is left untouched.
    """
    probs = exact_distribution(s)
    cdf = np.cumsum(probs)
    u = rng.random() * cdf[-1]
    return int(min(np.searchsorted(cdf, u, side="right"), probs.size - 1))


def exact_distribution(s: QuantumState) -> np.ndarray:
    """Marginal probability of each input ``x``, summed over the ancilla."""
    return (np.abs(s.grid) ** 2).sum(axis=1)


def group_amplitudes(s: QuantumState, g, q: int = 0, tol: float = 1e-10) -> AmplitudeTriple:
    """Collapse a state into its (a, b, c) groups relative to ``g``.

    Raises ``ValueError`` if amplitudes inside a group differ by more than
    ``tol`` or undesired inputs carry ancilla-1 weight. An empty group
    reports 0.
    """
    mask = _oracle_mask(g, s.n)
    grid = s.grid
    if np.max(np.abs(grid.imag), initial=0.0) > 1e-12:
        raise ValueError("state has non-negligible imaginary parts")
    if np.any(np.abs(grid[~mask, 1]) > tol):
        raise ValueError("undesired inputs have ancilla-1 amplitude")

    def _group(values: np.ndarray) -> float:
        if values.size == 0:
            return 0.0
        if np.ptp(values) > tol:
            raise ValueError("amplitudes within a group are not equal")
        return float(values[0])

    return AmplitudeTriple(
        a=_group(grid[~mask, 0].real),
        b=_group(grid[mask, 0].real),
        c=_group(grid[mask, 1].real),
        q=q,
    )


def fidelity(s1: QuantumState, s2: QuantumState) -> float:
    """``|<s1|s2>|``; equals 1 iff the states agree up to a global phase."""
    return float(abs(np.vdot(s1.amplitudes, s2.amplitudes)))


def equal_up_to_phase(s1: QuantumState, s2: QuantumState, tol: float = 1e-10) -> bool:
    if s1.n != s2.n:
        return False
    return abs(1.0 - fidelity(s1, s2)) < tol


# ---------------------------------------------------------------------------
# Explicit matrices (small n only)
# ---------------------------------------------------------------------------

_H = np.array([[1.0, 1.0], [1.0, -1.0]]) / np.sqrt(2.0)


def _check_matrix_cap(n: int) -> None:
    if not 1 <= n <= MATRIX_ARITY_CAP:
        raise CapacityError(f"explicit matrices are limited to 1 <= n <= {MATRIX_ARITY_CAP}")


def hadamard_inputs_matrix(n: int) -> np.ndarray:
    """``H^n x I`` in the ``2*x + anc`` layout (ancilla is the fastest index)."""
    _check_matrix_cap(n)
    hn = np.ones((1, 1))
    for _ in range(n):
        hn = np.kron(hn, _H)
    return np.kron(hn, np.eye(2)).astype(np.complex128)


def partial_diffusion_matrix(n: int) -> np.ndarray:
    """Build ``Y`` literally from the Hadamard sandwich around ``2|0><0| - I``."""
    dim = 2 << n
    reflect = -np.eye(dim, dtype=np.complex128)
    reflect[0, 0] = 1.0
    h = hadamard_inputs_matrix(n)
    return h @ reflect @ h


def oracle_matrix(g, n: int) -> np.ndarray:
    _check_matrix_cap(n)
    mask = _oracle_mask(g, n)
    dim = 2 << n
    u = np.zeros((dim, dim), dtype=np.complex128)
    for x in range(1 << n):
        for anc in (0, 1):
            u[2 * x + (anc ^ int(mask[x])), 2 * x + anc] = 1.0
    return u


def dump_matrix(matrix: np.ndarray, path) -> None:
    """Write a square complex matrix as text: a header line with the
    dimension, then one row per line of ``re im`` pairs.
    """
    matrix = np.asarray(matrix, dtype=np.complex128)
    rows, cols = matrix.shape
    lines = [f"{rows} {cols}"]
    for row in matrix:
        lines.append(" ".join(f"{z.real:.17g} {z.imag:.17g}" for z in row))
    Path(path).write_text("\n".join(lines) + "\n")


def load_matrix(path) -> np.ndarray:
    lines = Path(path).read_text().split("\n")
    rows, cols = (int(v) for v in lines[0].split())
    out = np.empty((rows, cols), dtype=np.complex128)
    for r in range(rows):
        vals = np.array(lines[1 + r].split(), dtype=float)
        if vals.size != 2 * cols:
            raise ValueError(f"row {r} has {vals.size // 2} entries, expected {cols}")
        out[r] = vals[0::2] + 1j * vals[1::2]
    return out
