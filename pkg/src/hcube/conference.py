"""Paley conference matrices over prime fields, verification and sign normalization."""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np
from sympy import isprime

from .core import PMZ, Hypercube, InputError, Verdict, as_array

SYMMETRIC = "SYMMETRIC"
SKEW = "SKEW"
NEITHER = "NEITHER"


def _check_odd_prime(q: int) -> None:
    if q < 3 or not isprime(q):
        raise InputError(f"q={q} is not an odd prime (prime powers are import-only)")


def quadratic_character(a: int, q: int) -> int:
    """Legendre symbol of ``a`` modulo the odd prime ``q``."""
    _check_odd_prime(q)
    if not 0 <= a < q:
        raise InputError(f"{a} is not a residue in 0..{q - 1}")
    if a == 0:
        return 0
    return 1 if pow(a, (q - 1) // 2, q) == 1 else -1


def character_table(q: int) -> np.ndarray:
    """``chi[a]`` for ``a`` in ``0..q-1``."""
    _check_odd_prime(q)
    chi = -np.ones(q, dtype=np.int64)
    chi[0] = 0
    chi[np.unique(np.arange(1, q) ** 2 % q)] = 1
    return chi


@dataclass(frozen=True)
class ConferenceMatrix:
    matrix: Hypercube
    kind: str

    def __post_init__(self):
        report = verify_conference(self.matrix)
        if not report:
            raise InputError(f"not a conference matrix: {report.message}")
        if self.kind != report.info["kind"]:
            raise InputError(f"declared kind {self.kind} but matrix is {report.info['kind']}")

    @property
    def order(self) -> int:
        return self.matrix.order

    @property
    def array(self) -> np.ndarray:
        return self.matrix.array

    @classmethod
    def from_matrix(cls, M) -> "ConferenceMatrix":
        cube = M if isinstance(M, Hypercube) else Hypercube(np.asarray(M), PMZ)
        report = verify_conference(cube)
        if not report:
            raise InputError(f"not a conference matrix: {report.message}")
        return cls(cube, report.info["kind"])


def paley_conference(q: int) -> ConferenceMatrix:
    """Order ``q+1`` Paley conference matrix.

    Index 0 is the border; index ``t+1`` is the field element ``t``. The core
    entry in row ``x`` and column ``y`` is ``chi(x - y)``. The border row is
    all +1 and the border column is +1 for ``q = 1 mod 4`` (symmetric) and
    -1 for ``q = 3 mod 4`` (skew).
    """
    _check_odd_prime(q)
    chi = character_table(q)
    t = np.arange(q)
    C = np.zeros((q + 1, q + 1), dtype=np.int64)
    C[1:, 1:] = chi[(t[:, None] - t[None, :]) % q]
    C[0, 1:] = 1
    C[1:, 0] = 1 if q % 4 == 1 else -1
    return ConferenceMatrix(Hypercube(C, PMZ), SYMMETRIC if q % 4 == 1 else SKEW)


def verify_conference(M) -> Verdict:
    """Check the conference-matrix axioms exactly and classify the matrix.

    ``info["kind"]`` is SYMMETRIC, SKEW or NEITHER on success.
    """
    C = as_array(M)
    if C.ndim != 2 or C.shape[0] != C.shape[1]:
        raise InputError(f"expected a square matrix, got shape {C.shape}")
    n = C.shape[0]
    diag = np.flatnonzero(np.diag(C))
    if diag.size:
        i = int(diag[0])
        return Verdict(False, f"entry=({i},{i}) value={C[i, i]} (diagonal must be 0)", (i, i))
    off = ~np.eye(n, dtype=bool)
    bad = np.argwhere(off & ~np.isin(C, (-1, 1)))
    if bad.size:
        i, j = map(int, bad[0])
        return Verdict(False, f"entry=({i},{j}) value={C[i, j]} (off-diagonal must be +-1)", (i, j))
    gram = C @ C.T
    bad = np.argwhere(np.triu(gram, k=1) != 0)
    if bad.size:
        i, j = map(int, bad[0])
        return Verdict(False, f"rows={i},{j} dot={gram[i, j]}", (i, j))
    if np.array_equal(C, C.T):
        kind = SYMMETRIC
    elif np.array_equal(C, -C.T):
        kind = SKEW
    else:
        kind = NEITHER
    return Verdict(True, f"n={n} kind={kind}", info={"kind": kind})


def diagonal_normalize(C: ConferenceMatrix) -> ConferenceMatrix:
    """``D C D`` with ``D = diag(1, C[0,1], ..., C[0,n-1])``; first row becomes all +1."""
    a = C.array
    D = a[0].copy()
    D[0] = 1
    return ConferenceMatrix(Hypercube(D[:, None] * a * D[None, :], PMZ), C.kind)


def sign_switch(C: ConferenceMatrix, rows) -> ConferenceMatrix:
    """Negate the given rows and the matching columns."""
    D = np.ones(C.order, dtype=np.int64)
    D[list(rows)] = -1
    return ConferenceMatrix(Hypercube(D[:, None] * C.array * D[None, :], PMZ), C.kind)
