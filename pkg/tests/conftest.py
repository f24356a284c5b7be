"""Shared test helpers: independent oracles and random code generation."""

import random
from itertools import product

import numpy as np

from wenum.codes import LinearCode
from wenum.fields import GF


def oracle_weight_coeffs(code):
    """Weight enumerator by the naive double loop: every message vector,
    codeword built with scalar field ops, weights recounted from scratch.
    Deliberately shares no code with the fast enumeration path."""
    f = code.field
    gen = code.generator
    counts = [0] * (code.n + 1)
    for msg in product(range(f.q), repeat=code.k):
        word = [0] * code.n
        for m, row in zip(msg, gen):
            for i in range(code.n):
                word[i] = f.add(word[i], f.mul(m, int(row[i])))
        counts[sum(1 for x in word if x)] += 1
    return tuple(counts[code.n - i] for i in range(code.n + 1))


def random_code(rng, q, n, k):
    """Random [n, k] code over GF(q) (rejection sampling for full rank)."""
    f = GF(q)
    while True:
        gen = np.array(
            [[rng.randrange(q) for _ in range(n)] for _ in range(k)],
            dtype=np.uint8,
        )
        try:
            return LinearCode(f, gen)
        except Exception:
            continue


def monomial_transform(rng, code):
    """Random column permutation plus nonzero column scaling of a code."""
    f = code.field
    perm = list(range(code.n))
    rng.shuffle(perm)
    scales = [rng.randrange(1, f.q) for _ in range(code.n)]
    gen = np.zeros_like(code.generator)
    for j in range(code.n):
        gen[:, perm[j]] = f.mul_table[scales[j], code.generator[:, j]]
    return LinearCode(f, gen)


def seeded(name):
    return random.Random(f"wenum:{name}")
