"""Association schemes on triples (ASTs) with six classes.

Classes 0..3 are the diagonal patterns ``xxx``, ``xyy``, ``xyx``, ``xxy``.
Class 4 is the coherent (or oriented) class and class 5 its complement.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Any, Optional

import numpy as np

from .core import SYM, Hypercube, InputError, as_array, ternary_product
from .twographs import (
    SkewTwoGraph,
    TwoGraph,
    is_regular_skew_two_graph,
    is_regular_two_graph,
)

DEFAULT_MAX_ORDER = 20

# p-values that must vanish for a scheme to come from a regular (skew) two-graph
SYMMETRIC_ZEROS = ((4, 4, 4, 5), (4, 4, 5, 4), (4, 5, 5, 5), (5, 5, 5, 4))
SKEW_ZEROS = ((4, 4, 4, 4), (4, 4, 5, 5), (4, 5, 5, 4), (5, 5, 5, 5))

S3 = tuple(itertools.permutations(range(3)))
CYCLE = (1, 2, 0)
TRANSPOSITION = (1, 0, 2)


def trivial_labels(n: int) -> np.ndarray:
    """Labels 0..3 on the diagonal patterns and -1 on pairwise-distinct triples."""
    x, y, z = np.indices((n, n, n))
    lab = np.full((n, n, n), -1, dtype=np.int64)
    lab[(y == z) & (x != y)] = 1
    lab[(x == z) & (x != y)] = 2
    lab[(x == y) & (x != z)] = 3
    lab[(x == y) & (y == z)] = 0
    return lab


def distinct_mask(n: int) -> np.ndarray:
    return trivial_labels(n) == -1


def labels_symmetric(lab: np.ndarray) -> bool:
    """Every non-trivial class is fixed by all of S3."""
    upper = np.where(lab >= 4, lab, -1)
    return all(np.array_equal(np.transpose(upper, s), upper) for s in S3)


def labels_skew(lab: np.ndarray) -> bool:
    """Classes 4 and 5 are fixed by rotation and swapped by ``(12)``."""
    rotated = np.transpose(lab, CYCLE)
    swapped = np.transpose(lab, TRANSPOSITION)
    four, five = lab == 4, lab == 5
    return (np.array_equal(rotated == 4, four) and np.array_equal(rotated == 5, five)
            and np.array_equal(swapped == 5, four))


@dataclass(frozen=True, eq=False)
class TripleScheme:
    labeling: Hypercube
    p: np.ndarray
    valencies: np.ndarray

    @property
    def n(self) -> int:
        return self.labeling.order

    @property
    def m(self) -> int:
        return self.labeling.alphabet.k - 1

    def adjacency(self, i: int) -> np.ndarray:
        return (self.labeling.array == i).astype(np.int64)

    def is_symmetric(self) -> bool:
        return labels_symmetric(self.labeling.array)

    def is_skew(self) -> bool:
        return self.m == 5 and labels_skew(self.labeling.array)

    def kind(self) -> str:
        if self.is_symmetric():
            return "symmetric"
        if self.is_skew():
            return "skew-symmetric"
        return "general"

    def pvalue(self, i: int, j: int, k: int, l: int) -> int:
        return int(self.p[i, j, k, l])


@dataclass(frozen=True)
class ASTReport:
    passed: bool
    axiom: Optional[str] = None
    witness: Any = None
    message: str = ""
    scheme: Optional[TripleScheme] = None

    def __bool__(self):
        return self.passed

    def __str__(self):
        if self.passed:
            return f"PASS n={self.scheme.n} m={self.scheme.m} kind={self.scheme.kind()}"
        return f"FAIL axiom={self.axiom} {self.message}"


def _as_labeling(labeling) -> Hypercube:
    if isinstance(labeling, Hypercube):
        return labeling
    arr = as_array(labeling)
    return Hypercube(arr, SYM(int(arr.max()) + 1))


def check_trivial_classes(labeling: Hypercube) -> None:
    lab = labeling.array
    if lab.ndim != 3:
        raise InputError(f"an AST labeling has dimension 3, got {lab.ndim}")
    if labeling.alphabet.kind != "sym" or labeling.alphabet.k < 4:
        raise InputError("an AST labeling needs a sym alphabet with at least 4 classes")
    triv = trivial_labels(labeling.order)
    diag = triv >= 0
    if not np.array_equal(lab[diag], triv[diag]) or (lab[~diag] < 4).any():
        bad = np.argwhere((diag & (lab != triv)) | (~diag & (lab < 4)))[0]
        raise InputError(f"classes 0..3 are not the trivial relations at {tuple(map(int, bad))}")


def valency_table(lab: np.ndarray, classes: int) -> tuple[np.ndarray, Optional[tuple]]:
    """``n_i^(j)`` for j = 1, 2, 3, or the first pair where the count is not constant."""
    n = lab.shape[0]
    off = ~np.eye(n, dtype=bool)
    table = np.zeros((classes, 3), dtype=np.int64)
    for i in range(classes):
        onehot = (lab == i).astype(np.int64)
        for axis in range(3):
            counts = onehot.sum(axis=axis)
            vals = counts[off]
            if not np.all(vals == vals[0]):
                pair = np.argwhere(off & (counts != vals[0]))[0]
                return table, (i, axis + 1, tuple(map(int, pair)))
            table[i, axis] = vals[0]
    return table, None


def verify_ast(labeling, *, max_order: int = DEFAULT_MAX_ORDER, force: bool = False) -> ASTReport:
    """Check axioms (I)-(IV) and compute the intersection tensor.

    Every ``p[i][j][k][l]`` is read off one representative of class ``l`` and
    then confirmed constant over the whole class.
    """
    labeling = _as_labeling(labeling)
    check_trivial_classes(labeling)
    n = labeling.order
    if n > max_order and not force:
        raise InputError(f"order {n} exceeds the limit {max_order}; pass force=True to run anyway")
    lab = labeling.array
    classes = labeling.alphabet.k
    present = [i for i in range(classes) if (lab == i).any()]
    if len(present) != classes:
        missing = sorted(set(range(classes)) - set(present))
        return ASTReport(False, "partition", missing, f"empty classes {missing}")

    # (II): each permutation maps classes onto classes
    for sigma in S3:
        image = np.transpose(lab, np.argsort(sigma))
        for i in range(classes):
            targets = np.unique(image[lab == i])
            if targets.size > 1:
                cells = np.argwhere(lab == i)
                a = next(c for c in cells if image[tuple(c)] == targets[0])
                b = next(c for c in cells if image[tuple(c)] == targets[1])
                w = (sigma, i, tuple(map(int, a)), tuple(map(int, b)))
                return ASTReport(False, "II", w,
                                 f"sigma={sigma} class={i} triples={w[2]},{w[3]} map to "
                                 f"classes {int(targets[0])},{int(targets[1])}")

    # (III)
    table, bad = valency_table(lab, classes)
    if bad is not None:
        i, j, pair = bad
        return ASTReport(False, "III", bad, f"class={i} coordinate={j} pair={pair} count differs")

    # (IV)
    adj = [(lab == i).astype(np.int64) for i in range(classes)]
    reps = [tuple(np.argwhere(lab == l)[0]) for l in range(classes)]
    p = np.zeros((classes,) * 4, dtype=np.int64)
    for i, j, k in itertools.product(range(classes), repeat=3):
        D = ternary_product(adj[i], adj[j], adj[k])
        for l in range(classes):
            value = D[reps[l]]
            mask = lab == l
            if not np.all(D[mask] == value):
                other = tuple(map(int, np.argwhere(mask & (D != value))[0]))
                w = (i, j, k, l, tuple(map(int, reps[l])), other)
                return ASTReport(False, "IV", w,
                                 f"p[{i}][{j}][{k}][{l}] is {int(value)} at {w[4]} "
                                 f"but {int(D[other])} at {other}")
            p[i, j, k, l] = value
    scheme = TripleScheme(labeling, p, table)
    return ASTReport(True, scheme=scheme)


def build_scheme(labeling, **kwargs) -> TripleScheme:
    report = verify_ast(labeling, **kwargs)
    if not report:
        raise InputError(f"not an AST: {report}")
    return report.scheme


def lincomb_residual(scheme: TripleScheme) -> int:
    """Largest ``|A_i A_j A_k - sum_l p_ijk^l A_l|`` entry over all ``i, j, k``."""
    classes = scheme.m + 1
    adj = np.stack([scheme.adjacency(i) for i in range(classes)])
    worst = 0
    for i, j, k in itertools.product(range(classes), repeat=3):
        lhs = ternary_product(adj[i], adj[j], adj[k])
        rhs = np.tensordot(scheme.p[i, j, k], adj, axes=1)
        worst = max(worst, int(np.abs(lhs - rhs).max()))
    return worst


def jja_residual(scheme: TripleScheme) -> int:
    """Check ``J J A_k = (d_k0 + (n-1) d_k3)(A_0 + A_3) + n_k^(3) (J - A_0 - A_3)``."""
    n = scheme.n
    J = np.ones((n,) * 3, dtype=np.int64)
    diag = scheme.adjacency(0) + scheme.adjacency(3)
    worst = 0
    for k in range(scheme.m + 1):
        lhs = ternary_product(J, J, scheme.adjacency(k))
        coef = (k == 0) + (n - 1) * (k == 3)
        rhs = coef * diag + scheme.valencies[k, 2] * (J - diag)
        worst = max(worst, int(np.abs(lhs - rhs).max()))
    return worst


def _labeling_from_distinct(n: int, four: np.ndarray) -> Hypercube:
    lab = trivial_labels(n)
    dist = lab == -1
    lab[dist & (four == 1)] = 4
    lab[dist & (four == 0)] = 5
    return Hypercube(lab, SYM(6))


def _require_regular(report, what: str) -> None:
    if not report:
        raise InputError(f"{what} is not regular: pairs {report.witness} have different degrees")


def labeling_from_two_graph(T: TwoGraph) -> Hypercube:
    return _labeling_from_distinct(T.n, T.indicator())


def labeling_from_skew_two_graph(S: SkewTwoGraph) -> Hypercube:
    return _labeling_from_distinct(S.n, S.indicator())


def ast_from_two_graph(T: TwoGraph, **kwargs) -> TripleScheme:
    """Symmetric AST whose class 4 holds the orderings of coherent triples."""
    _require_regular(is_regular_two_graph(T), "two-graph")
    return build_scheme(labeling_from_two_graph(T), **kwargs)


def ast_from_skew_two_graph(S: SkewTwoGraph, **kwargs) -> TripleScheme:
    """Skew-symmetric AST whose class 4 holds the triples ``(x,y,z)`` with ``(x y z)`` oriented."""
    _require_regular(is_regular_skew_two_graph(S), "skew two-graph")
    return build_scheme(labeling_from_skew_two_graph(S), **kwargs)


def zero_violation(labeling, zeros) -> Optional[tuple]:
    """First ``(i, j, k, l, triple, count)`` where a required-zero count is positive.

    Counts are taken pointwise over every triple of class ``l``, so this is
    meaningful for partitions that are not (yet) known to be ASTs.
    """
    lab = as_array(labeling)
    for i, j, k, l in zeros:
        D = ternary_product(lab == i, lab == j, lab == k)
        hits = np.argwhere((lab == l) & (D != 0))
        if hits.size:
            t = tuple(map(int, hits[0]))
            return (i, j, k, l, t, int(D[t]))
    return None


def _reject_nonzero(labeling, zeros) -> None:
    bad = zero_violation(labeling, zeros)
    if bad is not None:
        i, j, k, l, t, v = bad
        raise InputError(f"p[{i}][{j}][{k}][{l}]={v} at {t} must be 0")


def _six_class(scheme) -> Hypercube:
    labeling = scheme.labeling if isinstance(scheme, TripleScheme) else _as_labeling(scheme)
    check_trivial_classes(labeling)
    if labeling.alphabet.k != 6:
        raise InputError(f"expected six classes, got {labeling.alphabet.k}")
    return labeling


def two_graph_from_ast(scheme, **kwargs) -> TwoGraph:
    """Inverse of :func:`ast_from_two_graph`.

    Accepts a verified scheme or a raw labeling. The vanishing p-values are
    checked first, pointwise, so a corrupted labeling is rejected by naming
    the offending value; the remaining AST axioms are then verified.
    """
    labeling = _six_class(scheme)
    if not labels_symmetric(labeling.array):
        raise InputError("expected a symmetric six-class scheme")
    _reject_nonzero(labeling, SYMMETRIC_ZEROS)
    if not isinstance(scheme, TripleScheme):
        build_scheme(labeling, **kwargs)
    return TwoGraph.from_indicator(labeling.array == 4)


def skew_two_graph_from_ast(scheme, **kwargs) -> SkewTwoGraph:
    """Inverse of :func:`ast_from_skew_two_graph`; same checking order as :func:`two_graph_from_ast`."""
    labeling = _six_class(scheme)
    if not labels_skew(labeling.array):
        raise InputError("expected a skew-symmetric six-class scheme")
    _reject_nonzero(labeling, SKEW_ZEROS)
    if not isinstance(scheme, TripleScheme):
        build_scheme(labeling, **kwargs)
    return SkewTwoGraph.from_indicator(labeling.array == 4)


def local_count(labeling, i: int, j: int, k: int, triple) -> int:
    """Number of ``w`` with ``(w,y,z)`` in R_i, ``(x,w,z)`` in R_j, ``(x,y,w)`` in R_k."""
    lab = as_array(labeling)
    x, y, z = triple
    return int(np.sum((lab[:, y, z] == i) & (lab[x, :, z] == j) & (lab[x, y, :] == k)))


def p_report(scheme: TripleScheme) -> str:
    """Text export: one ``p[i][j][k][l]=v`` line per entry, lexicographic."""
    lines = [f"p[{i}][{j}][{k}][{l}]={int(v)}" for (i, j, k, l), v in np.ndenumerate(scheme.p)]
    return "\n".join(lines) + "\n"
