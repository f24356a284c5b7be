"""Enumeration against the naive oracle, duals, direct sums, case (c)."""

import numpy as np
import pytest

from conftest import monomial_transform, oracle_weight_coeffs, random_code, seeded
from wenum.codes import (
    LinearCode,
    WeightEnumerator,
    codewords_of_weight,
    decompose_case_c,
    direct_sum,
    dual,
    enumerate_weights,
    pair_sum_enumerator,
    zero_code_enumerator,
)
from wenum.errors import (
    ClassificationError,
    DomainError,
    EnumerationBudgetError,
    FieldMismatchError,
)
from wenum.fields import GF


def test_zero_code_length5():
    c = LinearCode(GF(3), [], n=5)
    assert enumerate_weights(c) == zero_code_enumerator(5)


def test_pair_over_gf3():
    c = LinearCode(GF(3), [[1, 1]])
    assert enumerate_weights(c).coeffs == (2, 0, 1)  # x^2 + 2


def test_random_codes_match_oracle():
    rng = seeded("oracle")
    for q in (2, 3, 4, 5):
        for _ in range(6):
            n = rng.randrange(3, 9)
            k = rng.randrange(1, min(n, 5) + 1)
            code = random_code(rng, q, n, k)
            assert enumerate_weights(code).coeffs == oracle_weight_coeffs(code)


def test_enumeration_totals():
    rng = seeded("totals")
    for q in (2, 4, 5):
        code = random_code(rng, q, 8, 4)
        w = enumerate_weights(code)
        assert sum(w.coeffs) == q**4
        assert w.coeffs[-1] == 1


def test_workers_agree_with_single_thread():
    rng = seeded("workers")
    code = random_code(rng, 3, 10, 7)
    assert enumerate_weights(code) == enumerate_weights(code, workers=4)


def test_budget_rejected():
    code = LinearCode(GF(2), np.eye(12, dtype=np.uint8))
    with pytest.raises(EnumerationBudgetError) as err:
        enumerate_weights(code, budget=1000)
    assert "4096" in str(err.value)


def test_monomial_invariance():
    rng = seeded("monomial")
    for q in (2, 3, 4, 5):
        code = random_code(rng, q, 7, 3)
        w = enumerate_weights(code)
        for _ in range(3):
            assert enumerate_weights(monomial_transform(rng, code)) == w


def test_direct_sum_multiplies_enumerators():
    f3 = GF(3)
    pair = LinearCode(f3, [[1, 1]])
    s = direct_sum(pair, pair)
    w = enumerate_weights(pair)
    assert enumerate_weights(s) == w * w
    assert enumerate_weights(s) == pair_sum_enumerator(4, 3)


def test_direct_sum_with_zero_code_gains_factor_x():
    f3 = GF(3)
    pair = LinearCode(f3, [[1, 1]])
    z1 = LinearCode(f3, [], n=1)
    w = enumerate_weights(direct_sum(pair, z1))
    assert w == enumerate_weights(pair) * zero_code_enumerator(1)


def test_direct_sum_random_codes():
    rng = seeded("dsum")
    a = random_code(rng, 4, 5, 2)
    b = random_code(rng, 4, 6, 3)
    assert enumerate_weights(direct_sum(a, b)) == (
        enumerate_weights(a) * enumerate_weights(b)
    )


def test_direct_sum_field_mismatch():
    with pytest.raises(FieldMismatchError):
        direct_sum(LinearCode(GF(2), [[1, 1]]), LinearCode(GF(3), [[1, 1]]))


def test_dual_of_full_space_is_zero():
    c = LinearCode(GF(4), np.eye(3, dtype=np.uint8))
    d = dual(c)
    assert d.k == 0
    assert enumerate_weights(d) == zero_code_enumerator(3)


def test_dual_self_dual_pair_gf2():
    c = LinearCode(GF(2), [[1, 1]])
    assert dual(c).row_space_equal(c)


def test_dual_dimension_and_orthogonality():
    rng = seeded("dual")
    for q in (2, 3, 5):
        code = random_code(rng, q, 9, 4)
        d = dual(code)
        assert d.k == code.n - code.k
        f = code.field
        for v in d.generator:
            for c in code.generator:
                acc = 0
                for x, y in zip(v, c):
                    acc = f.add(acc, f.mul(int(x), int(y)))
                assert acc == 0
        assert dual(d).row_space_equal(code)


def test_codewords_of_weight():
    c = LinearCode(GF(3), [[1, 1]])
    words = codewords_of_weight(c, 2)
    assert len(words) == 2
    assert all(np.count_nonzero(w) == 2 for w in words)


def test_decompose_blocks():
    f4 = GF(4)
    pair = LinearCode(f4, [[1, 1]])
    code = direct_sum(pair, pair)
    assert decompose_case_c(code) == ((0, 1), (2, 3))


def test_decompose_tracks_permutation():
    # same code with columns 2 and 3 (1-based) swapped
    f4 = GF(4)
    code = LinearCode(f4, [[1, 0, 1, 0], [0, 1, 0, 1]])
    assert decompose_case_c(code) == ((0, 2), (1, 3))


def test_decompose_random_monomial_transform():
    rng = seeded("case-c")
    f5 = GF(5)
    pair = LinearCode(f5, [[1, 1]])
    code = direct_sum(direct_sum(pair, pair), pair)
    for _ in range(5):
        t = monomial_transform(rng, code)
        pairs = decompose_case_c(t)
        assert len(pairs) == 3
        flat = sorted(i for p in pairs for i in p)
        assert flat == list(range(6))
        for i, j in pairs:
            words = codewords_of_weight(t, 2)
            supports = {tuple(np.nonzero(w)[0]) for w in words}
            assert (i, j) in supports


def test_decompose_refuses_binary():
    f2 = GF(2)
    code = LinearCode(f2, [[1, 1]])
    with pytest.raises(ClassificationError):
        decompose_case_c(code)


def test_decompose_refuses_wrong_shape():
    code = LinearCode(GF(4), [[1, 0], [0, 1]])
    with pytest.raises(ClassificationError):
        decompose_case_c(code)


def test_generator_rank_validated():
    with pytest.raises(DomainError):
        LinearCode(GF(2), [[1, 1], [1, 1]])


def test_generator_entries_validated():
    with pytest.raises(DomainError):
        LinearCode(GF(4), [[1, 5]])


def test_weight_enumerator_display():
    w = WeightEnumerator((1, 0, 0, 0, 14, 0, 0, 0, 1))
    assert w.poly_string() == "x^8 + 14*x^4*y^4 + y^8"
    assert w.evaluate(1, 1) == 16
