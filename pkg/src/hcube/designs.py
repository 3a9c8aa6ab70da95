"""Block Hadamard matrices built from a Latin square and the symmetric design hypercubes they give.

With ``C_l(i, j) = H(l, i) H(l, j)`` for a Hadamard ``H`` of order ``n``, the
block matrix with ``(i, j)`` block ``A(i, j) C_{L(i, j)}`` is Hadamard of
order ``n**2``. When ``H`` is normalized and ``A`` is +1 on the cells where
``L`` holds symbol 0, ``(J - M)/2`` is a symmetric
``(n**2, n(n-1)/2, n(n-2)/4)`` design.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass

import numpy as np

from .core import BIN, PM1, Hypercube, InputError, LayerSpec, Verdict, as_array, is_hadamard_matrix, unravel, verify_hadamard_hypercube
from .families import ConstructionError, family_from_hadamard
from .latin import LatinHypercube, modular_latin

DESIGNATED_SYMBOL = 0


def _hadamard(H) -> np.ndarray:
    if not is_hadamard_matrix(H):
        raise InputError("input is not a Hadamard matrix")
    return as_array(H)


def c_matrices(H) -> np.ndarray:
    """Stack of ``C_l = outer(H[l], H[l])``."""
    h = _hadamard(H)
    return h[:, :, None] * h[:, None, :]


def cmat_identities(H) -> Verdict:
    """Check ``C_l^2 = n C_l``, ``C_l C_l' = 0`` for ``l != l'``, and ``sum_l C_l = n I``."""
    C = c_matrices(H)
    n = C.shape[0]
    P = np.einsum("aij,bjk->abik", C, C)
    for a, b in itertools.product(range(n), repeat=2):
        want = n * C[a] if a == b else 0
        if not np.array_equal(P[a, b], np.broadcast_to(want, P[a, b].shape)):
            rule = "C^2=nC" if a == b else "C_l C_l'=0"
            return Verdict(False, f"{rule} fails at l={a} l'={b}", (a, b))
    if not np.array_equal(C.sum(axis=0), n * np.eye(n, dtype=np.int64)):
        return Verdict(False, "sum of C_l is not nI")
    return Verdict(True, f"n={n}")


def _square(x, what: str) -> np.ndarray:
    a = as_array(x.cube if isinstance(x, LatinHypercube) else x)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise InputError(f"{what} must be a square matrix, got shape {a.shape}")
    return a


def is_one_compatible(A, L) -> bool:
    """True iff ``A`` is +1 wherever ``L`` holds the designated symbol 0."""
    a, lat = _square(A, "A"), _square(L, "L")
    if a.shape != lat.shape:
        raise InputError(f"shape mismatch {a.shape} vs {lat.shape}")
    return bool((a[lat == DESIGNATED_SYMBOL] == 1).all())


def kharaghani_block_matrix(H, L, A) -> Hypercube:
    """Order ``n**2`` matrix whose ``(i, j)`` block is ``A(i, j) C_{L(i, j)}``."""
    C = c_matrices(H)
    n = C.shape[0]
    lat, a = _square(L, "L"), _square(A, "A")
    if lat.shape != (n, n) or a.shape != (n, n):
        raise InputError(f"L and A must have order {n}")
    if not np.isin(a, (-1, 1)).all():
        raise InputError("A must be a pm1 matrix")
    for rows in (lat, lat.T):
        if not (np.sort(rows, axis=1) == np.arange(n)).all():
            raise InputError("L is not a Latin square on symbols 0..n-1")
    blocks = a[:, :, None, None] * C[lat]
    return Hypercube(blocks.transpose(0, 2, 1, 3).reshape(n * n, n * n), PM1)


def is_normalized(H) -> bool:
    h = as_array(H)
    return bool((h[0] == 1).all() and (h[:, 0] == 1).all())


def normalize_hadamard(H) -> Hypercube:
    """Negate rows, then columns, whose first entry is -1."""
    h = _hadamard(H)
    h = h * h[:, :1]
    h = h * h[:1, :]
    return Hypercube(h, PM1)


@dataclass(frozen=True)
class DesignWitness:
    layer: LayerSpec
    free: tuple[int, int]
    check: str
    index: tuple[int, ...]
    value: int
    expected: int

    def __str__(self):
        where = str(self.layer) if self.layer.fixed_positions else "layer=all"
        idx = ",".join(map(str, self.index))
        return (f"{where} free={self.free[0]},{self.free[1]} {self.check} "
                f"at={idx} value={self.value} expected={self.expected}")


def _two_layers(arr: np.ndarray):
    """Yield ``(fixed, free, stack)`` with ``stack[g]`` the 2-layer for value vector ``g``."""
    d = arr.ndim
    v = arr.shape[0]
    for free in itertools.combinations(range(d), 2):
        fixed = tuple(ax for ax in range(d) if ax not in free)
        yield fixed, free, np.transpose(arr, fixed + free).reshape(-1, v, v)


def _layer_checks(stack: np.ndarray, k: int, lam: int):
    v = stack.shape[1]
    gram_target = (k - lam) * np.eye(v, dtype=np.int64) + lam
    yield "rowsum", stack.sum(axis=2), k
    yield "colsum", stack.sum(axis=1), k
    yield "MMt", np.einsum("gij,gkj->gik", stack, stack) - gram_target, None
    yield "MtM", np.einsum("gji,gjk->gik", stack, stack) - gram_target, None


def verify_symmetric_design_hypercube(K: Hypercube, k: int, lam: int) -> Verdict:
    """Every 2-layer must be the incidence matrix of a symmetric ``(v, k, lam)`` design."""
    if K.alphabet != BIN:
        raise InputError("design verification needs a bin hypercube")
    if K.dim < 2:
        raise InputError("design hypercubes have dimension >= 2")
    v = K.order
    gram_target = (k - lam) * np.eye(v, dtype=np.int64) + lam
    for fixed, free, stack in _two_layers(K.array):
        for check, values, expected in _layer_checks(stack, k, lam):
            bad = np.argwhere(values != (expected if expected is not None else 0))
            if bad.size:
                g, *index = map(int, bad[0])
                layer = LayerSpec(fixed, unravel(g, v, len(fixed)))
                if expected is None:
                    want = int(gram_target[index[0], index[1]])
                    got = int(values[(g, *index)]) + want
                else:
                    want, got = expected, int(values[(g, *index)])
                w = DesignWitness(layer, free, check, tuple(index), got, want)
                return Verdict(False, str(w), w)
    return Verdict(True, f"v={v} d={K.dim} k={k} lambda={lam}")


def design_certificate(K: Hypercube, k: int, lam: int) -> str:
    """One line per 2-layer stating whether it is a symmetric ``(v, k, lam)`` design."""
    if K.alphabet != BIN:
        raise InputError("design verification needs a bin hypercube")
    v = K.order
    lines = [f"symmetric design check v={v} d={K.dim} k={k} lambda={lam}"]
    ok = True
    for fixed, free, stack in _two_layers(K.array):
        good = np.ones(stack.shape[0], dtype=bool)
        for _, values, expected in _layer_checks(stack, k, lam):
            good &= (values == (expected if expected is not None else 0)).reshape(len(good), -1).all(axis=1)
        for g in range(stack.shape[0]):
            layer = LayerSpec(fixed, unravel(g, v, len(fixed)))
            where = str(layer) if fixed else "layer=all"
            lines.append(f"{where} free={free[0]},{free[1]} {'PASS' if good[g] else 'FAIL'}")
        ok &= bool(good.all())
    lines.append("PASS" if ok else "FAIL")
    return "\n".join(lines) + "\n"


def design_parameters(n: int) -> tuple[int, int, int]:
    """``(v, k, lambda) = (n**2, n(n-1)/2, n(n-2)/4)``."""
    return n * n, n * (n - 1) // 2, n * (n - 2) // 4


@dataclass(frozen=True)
class DesignHypercube:
    incidence: Hypercube
    params: tuple[int, int, int]

    def __post_init__(self):
        v, k, lam = self.params
        if self.incidence.order != v:
            raise InputError(f"incidence order {self.incidence.order} is not v={v}")
        report = verify_symmetric_design_hypercube(self.incidence, k, lam)
        if not report:
            raise InputError(f"not a symmetric design hypercube: {report.message}")


def design_hypercube(H, d: int) -> tuple[Hypercube, DesignHypercube]:
    """Order ``n**2`` cube ``N`` of class 1 and the design ``K = (J - N)/2``.

    Coordinates split as ``x = (x // n) * n + x % n``; the high digit addresses
    the modular Latin hypercube ``R`` and the low digit the product cube
    ``D_l(y) = prod_t H(l, y_t)``, so ``N(x) = D_{R(x // n)}(x % n)``.
    """
    h = _hadamard(H)
    n = h.shape[0]
    if n < 2:
        raise InputError(f"need Hadamard order >= 2, got {n}")
    if d < 2:
        raise InputError(f"dimension must be >= 2, got {d}")
    if not is_normalized(h):
        raise InputError("H must be normalized (first row and column all +1); see normalize_hadamard")
    D = np.stack([M.array for M in family_from_hadamard(Hypercube(h, PM1), d).members])
    R = modular_latin(n, d).array
    idx = np.indices((n * n,) * d)
    N = Hypercube(D[(R[tuple(idx // n)],) + tuple(idx % n)], PM1)
    report = verify_hadamard_hypercube(N, 1)
    if not report:
        raise ConstructionError(f"design cube is not class 1: {report.message}")
    K = Hypercube((1 - N.array) // 2, BIN)
    return N, DesignHypercube(K, design_parameters(n))
