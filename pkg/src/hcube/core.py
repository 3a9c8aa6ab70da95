"""Dense hypercubes: layers, dot products, axis permutations, ternary product.

Coordinates and symbols are 0-based everywhere. Entries are stored row-major
with the last coordinate varying fastest, which is numpy's C order.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Any, Sequence

import numpy as np


class InputError(ValueError):
    """An argument violates an operation's preconditions."""


@dataclass(frozen=True)
class Alphabet:
    kind: str
    k: int = 0

    def __post_init__(self):
        if self.kind not in ("pm1", "bin", "pmz", "sym"):
            raise InputError(f"unknown alphabet {self.kind!r}")
        if self.kind == "sym" and self.k < 1:
            raise InputError("sym alphabet needs k >= 1")

    @property
    def symbols(self) -> tuple[int, ...]:
        if self.kind == "pm1":
            return (-1, 1)
        if self.kind == "bin":
            return (0, 1)
        if self.kind == "pmz":
            return (-1, 0, 1)
        return tuple(range(self.k))

    @property
    def numeric(self) -> bool:
        return self.kind != "sym"

    def contains(self, values: np.ndarray) -> bool:
        return bool(np.isin(values, self.symbols).all())

    def __str__(self):
        return f"sym:{self.k}" if self.kind == "sym" else self.kind

    @classmethod
    def parse(cls, text: str) -> "Alphabet":
        if text.startswith("sym:"):
            try:
                return cls("sym", int(text[4:]))
            except ValueError:
                raise InputError(f"bad alphabet {text!r}") from None
        return cls(text)


PM1 = Alphabet("pm1")
BIN = Alphabet("bin")
PMZ = Alphabet("pmz")


def SYM(k: int) -> Alphabet:
    return Alphabet("sym", k)


@dataclass(frozen=True, eq=False)
class Hypercube:
    """An order-``n`` dimension-``d`` array over a small alphabet.

    The underlying array is read-only; every operation returns a new cube.
    """

    array: np.ndarray
    alphabet: Alphabet

    def __post_init__(self):
        arr = np.array(self.array, dtype=np.int64, copy=True)
        if arr.ndim < 1:
            raise InputError("a hypercube needs at least one dimension")
        n = arr.shape[0]
        if n < 1 or any(s != n for s in arr.shape):
            raise InputError(f"array shape {arr.shape} is not a hypercube")
        if not self.alphabet.contains(arr):
            raise InputError(f"entries outside alphabet {self.alphabet}")
        arr.flags.writeable = False
        object.__setattr__(self, "array", arr)

    @property
    def order(self) -> int:
        return self.array.shape[0]

    @property
    def dim(self) -> int:
        return self.array.ndim

    @property
    def entries(self) -> np.ndarray:
        return self.array.reshape(-1)

    def __getitem__(self, idx):
        return self.array[idx]

    def __eq__(self, other):
        if not isinstance(other, Hypercube):
            return NotImplemented
        return (self.alphabet == other.alphabet
                and self.array.shape == other.array.shape
                and bool(np.array_equal(self.array, other.array)))

    def __hash__(self):
        return hash((self.alphabet, self.array.shape, self.array.tobytes()))

    def __repr__(self):
        return f"Hypercube(n={self.order}, d={self.dim}, alphabet={self.alphabet})"

    def with_entry(self, index: Sequence[int], value: int) -> "Hypercube":
        """Copy with one cell replaced (used by corruption harnesses)."""
        arr = self.array.copy()
        arr[tuple(index)] = value
        return Hypercube(arr, self.alphabet)

    @classmethod
    def from_function(cls, n: int, d: int, fn, alphabet: Alphabet) -> "Hypercube":
        arr = np.empty((n,) * d, dtype=np.int64)
        for idx in itertools.product(range(n), repeat=d):
            arr[idx] = fn(*idx)
        return cls(arr, alphabet)


def ones(n: int, d: int) -> Hypercube:
    return Hypercube(np.ones((n,) * d, dtype=np.int64), PM1)


def as_array(x) -> np.ndarray:
    return x.array if isinstance(x, Hypercube) else np.asarray(x, dtype=np.int64)


@dataclass(frozen=True)
class LayerSpec:
    fixed_positions: tuple[int, ...]
    fixed_values: tuple[int, ...]

    def __init__(self, fixed_positions: Sequence[int], fixed_values: Sequence[int]):
        object.__setattr__(self, "fixed_positions", tuple(int(p) for p in fixed_positions))
        object.__setattr__(self, "fixed_values", tuple(int(v) for v in fixed_values))

    def check(self, n: int, d: int) -> None:
        pos, vals = self.fixed_positions, self.fixed_values
        if len(pos) != len(vals):
            raise InputError("fixed_positions and fixed_values differ in length")
        if any(b <= a for a, b in zip(pos, pos[1:])):
            raise InputError(f"positions {pos} are not strictly increasing")
        if any(p < 0 or p >= d for p in pos):
            raise InputError(f"position out of range for dimension {d}: {pos}")
        if any(v < 0 or v >= n for v in vals):
            raise InputError(f"value out of range for order {n}: {vals}")

    def __str__(self):
        return (f"axis={','.join(map(str, self.fixed_positions))} "
                f"a={','.join(map(str, self.fixed_values))}")


def layer(H: Hypercube, spec: LayerSpec) -> Hypercube:
    spec.check(H.order, H.dim)
    if len(spec.fixed_positions) >= H.dim:
        raise InputError("fixing every coordinate selects a cell, not a layer")
    index: list[Any] = [slice(None)] * H.dim
    for p, v in zip(spec.fixed_positions, spec.fixed_values):
        index[p] = v
    return Hypercube(H.array[tuple(index)], H.alphabet)


def dot(A: Hypercube, B: Hypercube) -> int:
    if A.array.shape != B.array.shape:
        raise InputError(f"shape mismatch {A.array.shape} vs {B.array.shape}")
    if not (A.alphabet.numeric and B.alphabet.numeric):
        raise InputError("dot product needs numeric alphabets")
    return int(np.sum(A.array * B.array))


def _check_perm(sigma: Sequence[int], d: int) -> tuple[int, ...]:
    sigma = tuple(int(s) for s in sigma)
    if sorted(sigma) != list(range(d)):
        raise InputError(f"{sigma} is not a permutation of {d} symbols")
    return sigma


def permute_axes(A: Hypercube, sigma: Sequence[int]) -> Hypercube:
    """Return ``A^sigma`` with ``A^sigma(x) = A(x[sigma[0]], ..., x[sigma[d-1]])``."""
    sigma = _check_perm(sigma, A.dim)
    inverse = np.argsort(sigma)
    return Hypercube(np.transpose(A.array, inverse), A.alphabet)


def compose(sigma: Sequence[int], tau: Sequence[int]) -> tuple[int, ...]:
    """Permutation ``rho`` with ``(A^sigma)^tau == A^rho``."""
    return tuple(tau[s] for s in sigma)


def ternary_product(A, B, C) -> np.ndarray:
    """``D(x,y,z) = sum_w A(w,y,z) B(x,w,z) C(x,y,w)`` as an integer tensor."""
    a, b, c = as_array(A), as_array(B), as_array(C)
    if a.ndim != 3 or a.shape != b.shape or a.shape != c.shape:
        raise InputError("ternary product needs three order-n cubes of dimension 3")
    return np.einsum("wyz,xwz,xyw->xyz", a, b, c)


@dataclass(frozen=True)
class Verdict:
    """Outcome of a verifier. Truthy iff the check passed."""

    passed: bool
    message: str = ""
    witness: Any = None
    info: dict = field(default_factory=dict)

    def __bool__(self):
        return self.passed

    def __str__(self):
        if self.passed:
            return f"PASS {self.message}".rstrip()
        return f"FAIL {self.message}".rstrip()


PASS = Verdict(True)


@dataclass(frozen=True)
class LayerPairWitness:
    first: LayerSpec
    second: LayerSpec
    dot: int

    def __str__(self):
        pos = ",".join(map(str, self.first.fixed_positions))
        a = ",".join(map(str, self.first.fixed_values))
        b = ",".join(map(str, self.second.fixed_values))
        return f"axis={pos} a={a} b={b} dot={self.dot}"


def flatten_layers(arr: np.ndarray, fixed: Sequence[int]) -> np.ndarray:
    """Rows are the layers fixing ``fixed`` in lexicographic value order."""
    free = [ax for ax in range(arr.ndim) if ax not in fixed]
    moved = np.transpose(arr, list(fixed) + free)
    n = arr.shape[0]
    return moved.reshape(n ** len(fixed), n ** len(free))


def unravel(flat: int, n: int, length: int) -> tuple[int, ...]:
    return tuple(int(v) for v in np.unravel_index(flat, (n,) * length)) if length else ()


def _first_pair(pairs: np.ndarray) -> tuple[int, int]:
    """Lexicographically smallest ``(a, b)`` among rows of flat layer indices."""
    k = np.lexsort((pairs[:, 1], pairs[:, 0]))[0]
    return int(pairs[k, 0]), int(pairs[k, 1])


def _adjacent_failures(arr: np.ndarray, fixed: tuple[int, ...]) -> tuple[np.ndarray, np.ndarray]:
    """Non-orthogonal pairs of layers whose fixed values differ in one position.

    Returns flat indices ``(a, b)`` with ``a < b`` into the ``n**len(fixed)``
    value vectors, plus the matching dot products.
    """
    n = arr.shape[0]
    f = len(fixed)
    free = [ax for ax in range(arr.ndim) if ax not in fixed]
    found_pairs, found_dots = [], []
    for slot, p in enumerate(fixed):
        others = [q for q in fixed if q != p]
        M = np.transpose(arr, others + [p] + free).reshape(n ** (f - 1), n, -1)
        G = np.einsum("gaf,gbf->gab", M, M)
        g, al, be = np.nonzero(np.triu(G, k=1))
        if not g.size:
            continue
        rest = np.stack(np.unravel_index(g, (n,) * (f - 1)), axis=1) if f > 1 else np.zeros((g.size, 0), int)
        a = np.insert(rest, slot, al, axis=1)
        b = np.insert(rest, slot, be, axis=1)
        found_pairs.append(np.stack([np.ravel_multi_index(a.T, (n,) * f),
                                     np.ravel_multi_index(b.T, (n,) * f)], axis=1))
        found_dots.append(G[g, al, be])
    if not found_pairs:
        return np.zeros((0, 2), dtype=np.int64), np.zeros(0, dtype=np.int64)
    return np.concatenate(found_pairs), np.concatenate(found_dots)


def verify_hadamard_hypercube(H: Hypercube, cls: int, *, strict: bool = False) -> Verdict:
    """Check that parallel ``cls``-layers of ``H`` are pairwise orthogonal.

    Parallel layers fix the same coordinate positions. By default a pair is
    compared when the fixed values differ in exactly one position, i.e. when
    both layers lie in a common ``(cls+1)``-layer; this is the reading under
    which Yang's product cubes and the stacked order-2 cube have class 1.
    ``strict=True`` compares every pair of distinct value vectors, which can
    only succeed when ``n**(d-cls) <= n**cls``. For ``cls = d-1`` both agree.

    The witness on failure is the lexicographically first non-orthogonal pair:
    positions are scanned in combination order, then value vectors ``a < b``.
    """
    if H.alphabet != PM1:
        raise InputError("Hadamard verification needs a pm1 hypercube")
    if not 1 <= cls <= H.dim - 1:
        raise InputError(f"class {cls} out of range 1..{H.dim - 1}")
    n = H.order
    f = H.dim - cls
    for fixed in itertools.combinations(range(H.dim), f):
        if strict or f == 1:
            M = flatten_layers(H.array, fixed)
            gram = M @ M.T
            i, j = np.nonzero(np.triu(gram, k=1))
            pairs, dots = np.stack([i, j], axis=1), gram[i, j]
        else:
            pairs, dots = _adjacent_failures(H.array, fixed)
        if pairs.size:
            i, j = _first_pair(pairs)
            dot_value = int(dots[(pairs[:, 0] == i) & (pairs[:, 1] == j)][0])
            w = LayerPairWitness(
                LayerSpec(fixed, unravel(i, n, f)),
                LayerSpec(fixed, unravel(j, n, f)),
                dot_value,
            )
            return Verdict(False, str(w), w)
    return Verdict(True, f"n={n} d={H.dim} class={cls}")


def is_hadamard_matrix(A) -> bool:
    a = as_array(A)
    if a.ndim != 2 or a.shape[0] != a.shape[1] or not np.isin(a, (-1, 1)).all():
        return False
    n = a.shape[0]
    return bool(np.array_equal(a @ a.T, n * np.eye(n, dtype=np.int64)))


def sylvester(order: int) -> Hypercube:
    """Sylvester Hadamard matrix of a power-of-two order."""
    if order < 1 or order & (order - 1):
        raise InputError(f"Sylvester order must be a power of two, got {order}")
    h = np.ones((1, 1), dtype=np.int64)
    while h.shape[0] < order:
        h = np.block([[h, h], [h, -h]])
    return Hypercube(h, PM1)
