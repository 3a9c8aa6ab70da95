"""Acceptance criteria, one group per criterion, each with its runtime bound.

The per-criterion PASS/FAIL lines are printed by the terminal summary hook in
conftest.py.
"""
import itertools
import re
import time
from contextlib import contextmanager

import numpy as np
import pytest

import oracles
from hcube.conference import SKEW, SYMMETRIC, paley_conference, verify_conference
from hcube.core import PM1, SYM, Hypercube, InputError, sylvester, verify_hadamard_hypercube
from hcube.cubes import all_coefficient_tuples, coefficients_valid, cube_from_conference, paley_cube, paley_cube_equals_theorem_construction
from hcube.designs import cmat_identities, design_hypercube, verify_symmetric_design_hypercube
from hcube.families import family_from_hadamard, family_from_hypercube, recursive_hypercube, replace, verify_orthogonal_family
from hcube.latin import line_rainbow_latin, modular_latin, verify_latin, verify_line_rainbow
from hcube.triples import (
    SKEW_ZEROS,
    SYMMETRIC_ZEROS,
    ast_from_skew_two_graph,
    ast_from_two_graph,
    lincomb_residual,
    skew_two_graph_from_ast,
    two_graph_from_ast,
    verify_ast,
)
from hcube.twographs import skew_two_graph_from_conference, two_graph_from_conference


@contextmanager
def budget(seconds):
    start = time.perf_counter()
    yield
    elapsed = time.perf_counter() - start
    assert elapsed < seconds, f"took {elapsed:.2f}s, bound {seconds}s"


HADAMARD_WITNESS = re.compile(r"FAIL axis=\d+(,\d+)* a=\d+(,\d+)* b=\d+(,\d+)* dot=-?[1-9]\d*")


# 1 ---------------------------------------------------------------------------

@pytest.mark.criterion(1)
def test_paley_conference_kinds_and_gram():
    with budget(1.0):
        for q in (5, 13, 17, 3, 7, 11):
            C = paley_conference(q)
            report = verify_conference(C.matrix)
            assert report, report
            want = SYMMETRIC if q % 4 == 1 else SKEW
            assert report.info["kind"] == want and C.kind == want
            assert np.array_equal(C.array @ C.array.T, q * np.eye(q + 1, dtype=np.int64))
    for q in (3, 5, 7):
        assert paley_conference(q).array.tolist() == oracles.paley_conference_rows(q)


# 2 ---------------------------------------------------------------------------

@pytest.mark.criterion(2)
@pytest.mark.parametrize("q", [3, 5, 7, 11, 13])
def test_paley_cube_is_class_two(q):
    with budget(1.0):
        H = paley_cube(q)
        report = verify_hadamard_hypercube(H, 2)
    assert report, report
    assert H.order == q + 1 and H.dim == 3


@pytest.mark.criterion(2)
@pytest.mark.parametrize("q", [3, 5])
def test_paley_cube_class_two_by_enumeration(q):
    assert oracles.is_hadamard_cube(paley_cube(q).array, 2)


# 3 ---------------------------------------------------------------------------

def _passing_tuples(q):
    C = paley_conference(q)
    return {a for a in all_coefficient_tuples() if verify_hadamard_hypercube(cube_from_conference(C, a), 2)}


VALID = {a for a in itertools.product((-1, 1), repeat=6) if a[0] * a[1] * a[2] * a[3] == -1 and a[4] * a[5] == -1}


@pytest.mark.criterion(3)
@pytest.mark.parametrize("q", [5, 3])
def test_valid_coefficients_pass(q):
    assert len(VALID) == 16
    with budget(5.0):
        passing = _passing_tuples(q)
    assert VALID <= passing


@pytest.mark.criterion(3)
@pytest.mark.parametrize("q", [5, 3])
def test_invalid_coefficients_fail(q):
    with budget(5.0):
        passing = _passing_tuples(q)
    extras = sorted(passing - VALID)
    assert not extras, f"{len(extras)} tuples outside the valid 16 also give class-2 cubes at q={q}: {extras}"


# 4 ---------------------------------------------------------------------------

@pytest.mark.criterion(4)
def test_paley_cube_matches_coefficient_construction():
    with budget(1.0):
        for q in (3, 5, 13):
            assert paley_cube_equals_theorem_construction(q), q


# 5 ---------------------------------------------------------------------------

def _schemes():
    sym6 = ast_from_two_graph(two_graph_from_conference(paley_conference(5)))
    skew4 = ast_from_skew_two_graph(skew_two_graph_from_conference(paley_conference(3)))
    skew8 = ast_from_skew_two_graph(skew_two_graph_from_conference(paley_conference(7)))
    return sym6, skew4, skew8


def _nonzero(p):
    return {tuple(map(int, idx)): int(v) for idx, v in np.ndenumerate(p) if v}


@pytest.mark.criterion(5)
def test_ast_schemes_and_closed_forms():
    with budget(10.0):
        sym6, skew4, skew8 = _schemes()
        for scheme in (sym6, skew4, skew8):
            assert verify_ast(scheme.labeling)
        assert sym6.kind() == "symmetric"
        assert skew4.kind() == skew8.kind() == "skew-symmetric"
        assert _nonzero(sym6.p) == oracles.p_closed_form_symmetric(6)
        assert _nonzero(skew4.p) == oracles.p_closed_form_skew(4)
        assert _nonzero(skew8.p) == oracles.p_closed_form_skew(8)
        for i, j, k, l in SYMMETRIC_ZEROS:
            assert sym6.p[i, j, k, l] == 0
        for scheme in (skew4, skew8):
            for i, j, k, l in SKEW_ZEROS:
                assert scheme.p[i, j, k, l] == 0
        assert lincomb_residual(skew4) == 0
        assert lincomb_residual(sym6) == 0


@pytest.mark.criterion(5)
def test_ast_p_tensor_by_counting_order_four():
    _, skew4, _ = _schemes()
    lab = skew4.labeling.array.tolist()
    for i, j, k, l in itertools.product(range(6), repeat=4):
        assert oracles.p_by_counting(lab, i, j, k, l) == skew4.p[i, j, k, l]


# 6 ---------------------------------------------------------------------------

def _flip_orbit(labeling, triple):
    """Swap classes 4 and 5 on every ordering of one triple."""
    lab = labeling.array.copy()
    for perm in itertools.permutations(triple):
        lab[perm] = 9 - lab[perm]
    return Hypercube(lab, SYM(6))


@pytest.mark.criterion(6)
def test_converse_round_trips():
    with budget(5.0):
        T = two_graph_from_conference(paley_conference(5))
        assert two_graph_from_ast(ast_from_two_graph(T)) == T
        for q in (3, 7):
            S = skew_two_graph_from_conference(paley_conference(q))
            assert skew_two_graph_from_ast(ast_from_skew_two_graph(S)) == S


@pytest.mark.criterion(6)
def test_corrupted_orbit_is_rejected():
    with budget(5.0):
        sym6, skew4, skew8 = _schemes()
        cases = [(sym6, two_graph_from_ast), (skew4, skew_two_graph_from_ast), (skew8, skew_two_graph_from_ast)]
        for scheme, inverse in cases:
            bad = _flip_orbit(scheme.labeling, (0, 1, 2))
            with pytest.raises(InputError, match=r"p\[[45]\]\[[45]\]\[[45]\]\[[45]\]=[1-9]\d* at .* must be 0"):
                inverse(bad)


# 7 ---------------------------------------------------------------------------

@pytest.mark.criterion(7)
def test_latin_hypercubes():
    with budget(5.0):
        for n, d in itertools.product((2, 3, 4), (2, 3, 4)):
            for r in range(1, d):
                L = line_rainbow_latin(n, d, r)
                assert verify_latin(L, r, 1), (n, d, r)
                assert verify_line_rainbow(L), (n, d, r)
        for n, d in itertools.product((1, 2, 3, 4), (2, 3, 4)):
            assert verify_latin(modular_latin(n, d), 1, d - 1), (n, d)


@pytest.mark.criterion(7)
def test_latin_hypercubes_by_enumeration():
    for n, d in itertools.product((2, 3), (2, 3)):
        for r in range(1, d):
            L = line_rainbow_latin(n, d, r).array
            assert oracles.is_latin(L, n, d, r, 1) and oracles.lines_rainbow(L, n, d)
        assert oracles.is_latin(modular_latin(n, d).array, n, d, 1, d - 1)


# 8 ---------------------------------------------------------------------------

@pytest.mark.criterion(8)
def test_families_and_recursion():
    with budget(30.0):
        for order, d in itertools.product((2, 4, 8), (2, 3)):
            assert verify_orthogonal_family(family_from_hadamard(sylvester(order), d))
        for q in (3, 5):
            assert verify_orthogonal_family(family_from_hypercube(paley_cube(q), 2))
        out = recursive_hypercube(sylvester(2), 2, 1, 3)
        assert (out.order, out.dim) == (4, 3) and verify_hadamard_hypercube(out, 2)
        out = recursive_hypercube(sylvester(4), 2, 2, 3)
        assert (out.order, out.dim) == (8, 3) and verify_hadamard_hypercube(out, 2)
        out = recursive_hypercube(paley_cube(3), 2, 2, 2)
        assert (out.order, out.dim) == (8, 4) and verify_hadamard_hypercube(out, 3)
        M = replace(line_rainbow_latin(2, 2, 1), family_from_hadamard(sylvester(2), 2))
        assert M.array.shape == (4, 4)
        assert np.array_equal(M.array @ M.array.T, 4 * np.eye(4, dtype=np.int64))


# 9 ---------------------------------------------------------------------------

@pytest.mark.criterion(9)
def test_design_hypercubes():
    with budget(10.0):
        for n, (k, lam) in ((4, (6, 2)), (2, (1, 0))):
            for d in (2, 3):
                N, K = design_hypercube(sylvester(n), d)
                assert (N.order, N.dim) == (n * n, d)
                assert verify_hadamard_hypercube(N, 1)
                assert K.params == (n * n, k, lam)
                assert verify_symmetric_design_hypercube(K.incidence, k, lam)
        for n in (2, 4, 8):
            assert cmat_identities(sylvester(n))


# 10 --------------------------------------------------------------------------

def _every_cell(cube):
    return itertools.product(range(cube.order), repeat=cube.dim)


@pytest.mark.criterion(10)
def test_single_cell_corruption_is_detected():
    with budget(5.0):
        # Hadamard cube
        H = paley_cube(5)
        for idx in _every_cell(H):
            bad = H.with_entry(idx, -H[idx])
            report = verify_hadamard_hypercube(bad, 2)
            assert not report and HADAMARD_WITNESS.fullmatch(str(report)), idx
            w = report.witness
            assert oracles.layer_dot(bad.array, w.first.fixed_positions, w.first.fixed_values,
                                     w.second.fixed_values) == w.dot != 0

        # conference matrix
        C = paley_conference(5).matrix
        for i, j in itertools.product(range(C.order), repeat=2):
            bad = C.with_entry((i, j), 1 if i == j else -C[i, j])
            assert re.fullmatch(r"FAIL (rows=\d+,\d+ dot=-?[1-9]\d*|entry=\(\d+,\d+\) value=.*)",
                                str(verify_conference(bad)))

        # Latin hypercube
        L = line_rainbow_latin(3, 3, 2).cube
        k = L.alphabet.k
        for idx in _every_cell(L):
            bad = L.with_entry(idx, (L[idx] + 1) % k)
            report = verify_latin(bad, 2, 1)
            assert re.fullmatch(r"FAIL axis=\d a=\d symbol=\d+ count=\d+ expected=1", str(report)), idx

        # orthogonal family
        fam = list(family_from_hadamard(sylvester(4), 2).members)
        for idx in _every_cell(fam[0]):
            members = [fam[0].with_entry(idx, -fam[0][idx])] + fam[1:]
            report = verify_orthogonal_family(members)
            assert re.fullmatch(r"FAIL (O1 members=\d+,\d+ axis=\d a=\d b=\d dot|O2 axis=\d a=\d b=\d sum)=-?[1-9]\d*",
                                str(report)), idx

        # design hypercube
        _, K = design_hypercube(sylvester(2), 3)
        for idx in _every_cell(K.incidence):
            bad = K.incidence.with_entry(idx, 1 - K.incidence[idx])
            report = verify_symmetric_design_hypercube(bad, 1, 0)
            assert re.fullmatch(r"FAIL axis=\d a=\d free=\d,\d (rowsum|colsum|MMt|MtM) at=\d+(,\d+)? "
                                r"value=-?\d+ expected=-?\d+", str(report)), idx

        # association scheme on triples
        sym6, skew4, _ = _schemes()
        for scheme in (sym6, skew4):
            lab = scheme.labeling
            for idx in _every_cell(lab):
                if lab[idx] < 4:
                    continue
                bad = lab.with_entry(idx, 9 - lab[idx])
                report = verify_ast(bad)
                assert re.fullmatch(r"FAIL axiom=(II|III|IV) .+", str(report)), idx
