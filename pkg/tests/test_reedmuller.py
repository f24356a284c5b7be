"""Reed-Muller constructors: dimensions, known enumerators, orderings."""

import pytest

from conftest import seeded
from wenum.codes import enumerate_weights, rank
from wenum.errors import DomainError
from wenum.fields import GF
from wenum.reedmuller import (
    projective_points,
    projective_reed_muller,
    reed_muller,
)


def rm2_1_closed_form(m):
    n = 2**m
    cs = [0] * (n + 1)
    cs[n] = 1
    cs[0] = 1
    cs[n // 2] = 2 * (2**m - 1)
    return tuple(cs)


def test_rm2_1_3_closed_form():
    code = reed_muller(2, 1, 3)
    assert (code.n, code.k) == (8, 4)
    assert enumerate_weights(code).coeffs == rm2_1_closed_form(3)


def test_rm_degree_zero_is_repetition():
    for q, m in ((2, 3), (3, 2), (5, 1)):
        code = reed_muller(q, 0, m)
        assert (code.n, code.k) == (q**m, 1)
        assert all(v == 1 for v in code.generator[0])


def test_rm4_2_2_dimension():
    code = reed_muller(4, 2, 2)
    assert (code.n, code.k) == (16, 6)
    # dimension equals the count of exponent pairs with i+j <= 2
    assert code.k == len([(i, j) for i in range(3) for j in range(3) if i + j <= 2])


def test_rm_monotone_in_r():
    f = GF(3)
    prev = reed_muller(3, 0, 2)
    for r in range(1, 5):
        cur = reed_muller(3, r, 2)
        stacked = list(prev.generator) + list(cur.generator)
        assert rank(f, __import__("numpy").array(stacked)) == cur.k
        prev = cur


def test_prm5_3_2_shape():
    code = projective_reed_muller(5, 3, 2)
    assert (code.n, code.k) == (31, 10)


def test_projective_points_normalized():
    pts = projective_points(3, 2)
    assert len(pts) == 13
    for p in pts:
        nz = [x for x in p if x]
        assert nz[0] == 1
    assert pts == sorted(pts)
    # no two representatives are scalar multiples
    f = GF(3)
    reps = set()
    for p in pts:
        orbit = frozenset(tuple(f.mul(s, x) for x in p) for s in range(1, 3))
        assert orbit not in reps
        reps.add(orbit)


def test_prm_alternative_representatives_same_enumerator():
    # scaling each representative by a random unit gives an equivalent code
    import numpy as np

    rng = seeded("prm-reps")
    q, r, m = 3, 2, 2
    code = projective_reed_muller(q, r, m)
    f = GF(q)
    gen = np.array(code.generator, copy=True)
    for j in range(code.n):
        gen[:, j] = f.mul_table[rng.randrange(1, q), gen[:, j]]
    from wenum.codes import LinearCode

    other = LinearCode(f, gen)
    assert enumerate_weights(other) == enumerate_weights(code)


def test_parameter_validation():
    with pytest.raises(DomainError):
        reed_muller(2, -1, 3)
    with pytest.raises(DomainError):
        projective_reed_muller(5, 0, 2)
    with pytest.raises(DomainError):
        reed_muller(2, 1, 25)
