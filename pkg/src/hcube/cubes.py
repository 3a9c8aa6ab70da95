"""Class-2 Hadamard cubes from conference matrices, the Paley cube, and Yang's product cube."""
from __future__ import annotations

import itertools
from typing import Sequence

import numpy as np

from .conference import NEITHER, ConferenceMatrix, character_table, paley_conference, _check_odd_prime
from .core import PM1, Hypercube, InputError, is_hadamard_matrix
from .triples import trivial_labels
from .twographs import triple_products

PALEY_COEFFS = (-1, 1, 1, 1, 1, -1)


def _check_coeffs(a: Sequence[int]) -> tuple[int, ...]:
    a = tuple(int(v) for v in a)
    if len(a) != 6 or any(v not in (-1, 1) for v in a):
        raise InputError(f"coefficients must be six values in {{-1, +1}}, got {a}")
    return a


def coefficients_valid(a: Sequence[int]) -> bool:
    a0, a1, a2, a3, a4, a5 = _check_coeffs(a)
    return a0 * a1 * a2 * a3 == -1 and a4 * a5 == -1


def all_coefficient_tuples():
    return list(itertools.product((-1, 1), repeat=6))


def cube_labels(C: ConferenceMatrix) -> np.ndarray:
    """Class index 0..5 of every cell: diagonal patterns, then triple product -1 / +1."""
    lab = trivial_labels(C.order)
    P = triple_products(C.array)
    dist = lab == -1
    lab[dist & (P == -1)] = 4
    lab[dist & (P == 1)] = 5
    return lab


def cube_from_conference(C: ConferenceMatrix, a: Sequence[int]) -> Hypercube:
    """Order-n ``pm1`` cube taking value ``a[i]`` on cells of class ``i``.

    This only builds the cube; whether it is Hadamard is left to the verifier.
    """
    a = _check_coeffs(a)
    if C.kind == NEITHER:
        raise InputError("conference matrix must be symmetric or skew-symmetric")
    return Hypercube(np.asarray(a, dtype=np.int64)[cube_labels(C)], PM1)


def paley_cube(q: int) -> Hypercube:
    """The order ``q+1`` Paley cube; the point at infinity is index ``q``."""
    _check_odd_prime(q)
    chi = character_table(q)
    n = q + 1
    inf = q
    H = np.empty((n, n, n), dtype=np.int64)
    for x, y, z in itertools.product(range(n), repeat=3):
        size = len({x, y, z})
        if size == 1:
            H[x, y, z] = -1
        elif size == 2:
            H[x, y, z] = 1
        elif x == inf:
            H[x, y, z] = chi[(z - y) % q]
        elif y == inf:
            H[x, y, z] = chi[(x - z) % q]
        elif z == inf:
            H[x, y, z] = chi[(y - x) % q]
        else:
            H[x, y, z] = chi[((x - y) * (y - z) * (z - x)) % q]
    return Hypercube(H, PM1)


def smallest_nonresidue(q: int) -> int:
    chi = character_table(q)
    return int(np.flatnonzero(chi == -1)[0])


def paley_identification(q: int, scale: int | None = None) -> np.ndarray:
    """Map from Paley-cube indices to conference-matrix indices.

    Infinity goes to the border index 0 and the field element ``t`` goes to
    ``(scale * t mod q) + 1``. The default scale is the smallest quadratic
    non-residue, which is the relabelling under which the two constructions
    agree with the coefficients ``(-1, 1, 1, 1, 1, -1)``.
    """
    if scale is None:
        scale = smallest_nonresidue(q)
    perm = np.empty(q + 1, dtype=np.int64)
    perm[q] = 0
    perm[:q] = (scale * np.arange(q)) % q + 1
    return perm


def paley_cube_equals_theorem_construction(q: int, scale: int | None = None) -> bool:
    P = paley_cube(q).array
    T = cube_from_conference(paley_conference(q), PALEY_COEFFS).array
    perm = paley_identification(q, scale)
    return bool(np.array_equal(P, T[np.ix_(perm, perm, perm)]))


def yang_cube(A: Hypercube, d: int) -> Hypercube:
    """``H(i_1..i_d) = prod_{j<k} A(i_j, i_k)``, a class-1 Hadamard hypercube."""
    if d < 2:
        raise InputError(f"dimension must be >= 2, got {d}")
    if not is_hadamard_matrix(A):
        raise InputError("yang_cube needs a Hadamard matrix")
    a = A.array
    n = A.order
    H = np.ones((n,) * d, dtype=np.int64)
    for j, k in itertools.combinations(range(d), 2):
        shape = [1] * d
        shape[j] = shape[k] = n
        H = H * a.reshape(shape)
    return Hypercube(H, PM1)
