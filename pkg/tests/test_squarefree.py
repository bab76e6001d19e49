"""Bitmask ideals, alpha vectors, and the two depth routes.

The alpha oracle below enumerates variable subsets with itertools instead
of scanning masks, and ideal membership is re-derived from set inclusion.
"""

import itertools
import random

import pytest

from hilbertdepth import (
    GenerationFailedError,
    InvalidQuotientError,
    ParseError,
    SquarefreeIdeal,
    SquarefreeQuotient,
    TooManyVariablesError,
    alpha_vector,
    beta,
    check_qdepth_match,
    from_table,
    m_module,
    qdepth_quotient,
    random_quotient,
    reconstruct,
)
from hilbertdepth.combinatorics import binomial
from hilbertdepth.squarefree import format_ideal, format_monomial, minimalize, parse_ideal


def subsets_oracle(n):
    for r in range(n + 1):
        for combo in itertools.combinations(range(1, n + 1), r):
            yield frozenset(combo)


def mask_to_set(mask):
    return frozenset(i + 1 for i in range(mask.bit_length()) if mask >> i & 1)


def alpha_oracle(q):
    """Degree counts via subset enumeration and set-inclusion divisibility."""
    upper = [mask_to_set(g) for g in q.upper.generators]
    lower = [mask_to_set(g) for g in q.lower.generators]
    counts = [0] * (q.n + 1)
    for subset in subsets_oracle(q.n):
        in_upper = any(g <= subset for g in upper)
        in_lower = any(g <= subset for g in lower)
        if in_upper and not in_lower:
            counts[len(subset)] += 1
    return counts


def test_contains():
    zero = SquarefreeIdeal.zero(3)
    unit = SquarefreeIdeal.unit(3)
    principal = parse_ideal("x1", 2)
    assert not zero.contains(0b101)
    assert unit.contains(0) and unit.contains(0b111)
    assert principal.contains(0b11)  # x1*x2 is a multiple of x1
    assert not principal.contains(0b10)


def test_membership_monotone():
    ideal = parse_ideal("x1*x3, x2", 4)
    for mask in range(1 << 4):
        if ideal.contains(mask):
            for sup in range(1 << 4):
                if sup & mask == mask:
                    assert ideal.contains(sup)


def test_minimalize():
    masks = [0b1, 0b11, 0b101, 0b110]
    reduced = minimalize(masks)
    assert reduced == frozenset({0b1, 0b110})
    assert minimalize(reduced) == reduced
    rng = random.Random(2)
    for _ in range(30):
        sample = [rng.randrange(1, 1 << 5) for _ in range(rng.randint(1, 6))]
        shuffled = sample[:]
        rng.shuffle(shuffled)
        assert minimalize(sample) == minimalize(shuffled)
    assert minimalize([0, 0b1, 0b10]) == frozenset({0})


def test_alpha_vector_examples():
    q = SquarefreeQuotient(2, parse_ideal("x1", 2), parse_ideal("0", 2))
    assert alpha_vector(q) == [0, 1, 1]
    q = SquarefreeQuotient(3, parse_ideal("x1*x2", 3), parse_ideal("x1*x2*x3", 3))
    assert alpha_vector(q) == [0, 0, 1, 0]
    q = SquarefreeQuotient(3, parse_ideal("1", 3), parse_ideal("0", 3))
    assert alpha_vector(q) == [1, 3, 3, 1]


def test_alpha_vector_against_oracle():
    rng = random.Random(13)
    for case in range(60):
        n = rng.randint(1, 6)
        try:
            q = random_quotient(n, rng.randrange(2**31), rng.randint(1, 3), rng.randint(0, 2))
        except GenerationFailedError:
            continue
        assert alpha_vector(q) == alpha_oracle(q)


def test_alpha_bounds_and_mass():
    rng = random.Random(17)
    for case in range(40):
        n = rng.randint(1, 7)
        try:
            q = random_quotient(n, rng.randrange(2**31), rng.randint(1, 4), rng.randint(0, 3))
        except GenerationFailedError:
            continue
        alpha = alpha_vector(q)
        assert all(0 <= alpha[k] <= binomial(n, k) for k in range(n + 1))
        direct = sum(
            1
            for mask in range(1 << n)
            if q.upper.contains(mask) and not q.lower.contains(mask)
        )
        assert sum(alpha) == direct > 0


def test_quotient_validation():
    with pytest.raises(InvalidQuotientError):
        SquarefreeQuotient(3, parse_ideal("x1*x2", 3), parse_ideal("x3", 3))
    with pytest.raises(InvalidQuotientError):
        SquarefreeQuotient(2, parse_ideal("x1", 2), parse_ideal("x1", 2))
    with pytest.raises(InvalidQuotientError):
        SquarefreeQuotient(2, parse_ideal("0", 2), parse_ideal("0", 2))


def test_qdepth_quotient_examples():
    q = SquarefreeQuotient(2, parse_ideal("x1", 2), parse_ideal("0", 2))
    result = qdepth_quotient(q)
    assert result.qdepth == 2
    assert result.certificate.values == (0, 1, 0)
    q = SquarefreeQuotient(3, parse_ideal("1", 3), parse_ideal("0", 3))
    assert qdepth_quotient(q).qdepth == 3
    q = SquarefreeQuotient(3, parse_ideal("x1*x2", 3), parse_ideal("x1*x2*x3", 3))
    assert qdepth_quotient(q).qdepth == 2


def test_m_module():
    q = SquarefreeQuotient(2, parse_ideal("x1", 2), parse_ideal("0", 2))
    assert m_module(q) == from_table({1: 1, 2: 1})
    q = SquarefreeQuotient(1, parse_ideal("x1", 1), parse_ideal("0", 1))
    assert m_module(q) == from_table({1: 1})
    q = SquarefreeQuotient(3, parse_ideal("1", 3), parse_ideal("0", 3))
    assert m_module(q) == from_table({0: 1, 1: 3, 2: 3, 3: 1})


def test_beta_consistency_between_routes():
    rng = random.Random(29)
    from hilbertdepth.squarefree import _beta_from_alpha

    for case in range(30):
        n = rng.randint(1, 6)
        try:
            q = random_quotient(n, rng.randrange(2**31), rng.randint(1, 3), rng.randint(0, 2))
        except GenerationFailedError:
            continue
        alpha = alpha_vector(q)
        h = m_module(q)
        for d in range(n + 1):
            for k in range(d + 1):
                direct = _beta_from_alpha(alpha, d, k)
                if k < h.k0:
                    assert direct == 0
                else:
                    assert direct == beta(h, d, k)


def test_depth_routes_match():
    q = SquarefreeQuotient(2, parse_ideal("x1", 2), parse_ideal("0", 2))
    assert check_qdepth_match(q)
    q = SquarefreeQuotient(3, parse_ideal("1", 3), parse_ideal("0", 3))
    assert check_qdepth_match(q)
    rng = random.Random(37)
    produced = 0
    while produced < 120:
        n = rng.randint(1, 8)
        try:
            q = random_quotient(n, rng.randrange(2**31), rng.randint(1, 4), rng.randint(0, 3))
        except GenerationFailedError:
            continue
        produced += 1
        assert check_qdepth_match(q), (q.n, format_ideal(q.upper), format_ideal(q.lower))
        result = qdepth_quotient(q)
        assert result.qdepth <= m_module(q).kf <= q.n
        # certificates reconstruct the alpha entries
        alpha = alpha_vector(q)
        for k in range(result.certificate.start_k, result.qdepth + 1):
            assert reconstruct(result.certificate, k) == alpha[k]


def test_random_quotient_determinism_and_shape():
    assert random_quotient(3, 42, 2, 1) == random_quotient(3, 42, 2, 1)
    q = random_quotient(1, 5, 1, 0)
    assert format_ideal(q.upper) == "x1" and format_ideal(q.lower) == "0"
    for seed in range(25):
        q = random_quotient(4, seed, 2, 2)
        # invariants re-checked by the constructor; reaching here is the test
        assert isinstance(q, SquarefreeQuotient)


def test_random_quotient_failure():
    # one variable and a forced inner generator can never nest strictly
    with pytest.raises(GenerationFailedError):
        random_quotient(1, 3, 1, 1)
    with pytest.raises(GenerationFailedError):
        random_quotient(2, 3, 0, 0)


def test_variable_cap():
    big = SquarefreeQuotient(21, parse_ideal("x1", 21), parse_ideal("0", 21))
    with pytest.raises(TooManyVariablesError):
        alpha_vector(big)
    assert alpha_vector(big, max_vars=22)[1] == 1
    with pytest.raises(TooManyVariablesError):
        alpha_vector(
            SquarefreeQuotient(29, parse_ideal("x1", 29), parse_ideal("0", 29)),
            max_vars=29,
        )


def test_parse_and_format():
    ideal = parse_ideal(" x1*x3 , x2 ", 3)
    assert ideal.generators == frozenset({0b101, 0b010})
    assert format_ideal(ideal) == "x2, x1*x3"
    assert format_monomial(0) == "1"
    assert parse_ideal("0", 3).is_zero
    assert parse_ideal("1", 3).is_unit
    with pytest.raises(ParseError):
        parse_ideal("x0", 3)
    with pytest.raises(ParseError):
        parse_ideal("x4", 3)
    with pytest.raises(ParseError):
        parse_ideal("x1*x1", 3)
    with pytest.raises(ParseError):
        parse_ideal("y2", 3)
    with pytest.raises(ParseError):
        parse_ideal("x1,,x2", 3)
