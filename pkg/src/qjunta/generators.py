"""Seeded fixture families of Boolean functions."""

from __future__ import annotations

import numpy as np

from .boolfn import AnfFunction, TruthTable, _check_var, flip_variable_bits, to_truth_table


def random_table(n: int, rng: np.random.Generator) -> TruthTable:
    return TruthTable(n, rng.integers(0, 2, size=1 << n, dtype=np.uint8))


def random_junta(n: int, variable: int, rng: np.random.Generator) -> TruthTable:
    """Uniformly random function that ignores ``x_variable``."""
    _check_var(n, variable)
    bits = rng.integers(0, 2, size=1 << n, dtype=np.uint8)
    # copy the x_variable = 0 half onto the x_variable = 1 half
    view = bits.reshape(-1, 2, 1 << variable)
    view[:, 1, :] = view[:, 0, :]
    return TruthTable(n, bits)


def random_affine(n: int, rng: np.random.Generator, include: int | None = None) -> AnfFunction:
    """``c_0 x_0 ^ ... ^ c_{n-1} x_{n-1} ^ c_n`` with random coefficients.

    ``include`` forces that variable's coefficient to 1.
    """
    coeffs = rng.integers(0, 2, size=n + 1)
    if include is not None:
        _check_var(n, include)
        coeffs[include] = 1
    terms = [1 << j for j in range(n) if coeffs[j]]
    if coeffs[n]:
        terms.append(0)
    return AnfFunction.from_terms(n, terms)


def single_term(
    n: int,
    m: int,
    rng: np.random.Generator | None = None,
    include: int | None = None,
) -> AnfFunction:
    """A single product of ``m`` distinct variables.

    Without ``rng`` the term is ``x_0 ... x_{m-1}``; with ``rng`` the
    variables are a random subset, always containing ``include`` if given.
    """
    if not 0 <= m <= n:
        raise ValueError(f"term width {m} outside [0, {n}]")
    if include is not None:
        _check_var(n, include)
        if m == 0:
            raise ValueError("a term of width 0 cannot include a variable")
    if rng is None:
        if include is None:
            chosen = list(range(m))
        else:
            chosen = [include] + [j for j in range(n) if j != include][: m - 1]
    else:
        pool = [j for j in range(n) if j != include]
        picked = rng.choice(pool, size=m - (include is not None), replace=False)
        chosen = [int(j) for j in picked] + ([include] if include is not None else [])
    mask = 0
    for j in chosen:
        mask |= 1 << j
    return AnfFunction(n, (mask,))


def random_multi_term(
    n: int,
    rng: np.random.Generator,
    terms: int | None = None,
    include: int | None = None,
) -> AnfFunction:
    """XOR of random product terms of degree >= 2.

    With ``include`` the result is resampled until ``x_include`` is
    relevant.
    """
    while True:
        k = terms if terms is not None else int(rng.integers(2, n + 2))
        masks = []
        for _ in range(k):
            width = int(rng.integers(2, n + 1))
            picked = rng.choice(n, size=width, replace=False)
            masks.append(int(sum(1 << int(j) for j in picked)))
        f = AnfFunction.from_terms(n, masks)
        if include is None:
            return f
        t = to_truth_table(f)
        if np.any(t.bits != flip_variable_bits(t.bits, n, include)):
            return f


def majority(n: int = 3) -> TruthTable:
    x = np.arange(1 << n)
    weights = np.array([bin(v).count("1") for v in x])
    return TruthTable(n, (2 * weights > n).astype(np.uint8))


GENERATORS = ("random", "affine-random", "single-term-m", "majority", "junta")


def generate(
    name: str,
    n: int,
    rng: np.random.Generator,
    m: int | None = None,
    variable: int = 0,
) -> TruthTable:
    """Named generator front end used by the command line."""
    if name == "random":
        return random_table(n, rng)
    if name == "affine-random":
        return to_truth_table(random_affine(n, rng))
    if name == "single-term-m":
        return to_truth_table(single_term(n, n if m is None else m, rng))
    if name == "majority":
        return majority(n)
    if name == "junta":
        return random_junta(n, variable, rng)
    raise ValueError(f"unknown generator {name!r}; choose from {', '.join(GENERATORS)}")
