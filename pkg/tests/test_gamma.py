"""Gamma generators, cyclic hulls, density, the torsion images in Q/Z, and
the quasicyclic relation chain."""

import random
from fractions import Fraction

import pytest

from conftest import SMALL_PRIMES, random_q
from tatedual.errors import DomainError, PrecisionError
from tatedual.gamma import (
    CyclicSubgroupQ,
    PruferElement,
    contains,
    contains_one_report,
    cyclic_hull,
    density_witness,
    gamma_generators,
    gamma_group,
    hull_with_coefficients,
    parse_prufer,
    prufer_add,
    prufer_image,
    prufer_relations_check,
    supernatural_limit,
)
from tatedual.padic import padic_from_integer
from tatedual.supernatural import INF


def F(*args):
    return Fraction(*args)


# --- generators -----------------------------------------------------------

def test_generators_for_q_equals_p():
    for p in SMALL_PRIMES:
        gens = gamma_generators(padic_from_integer(p, p, 4))
        assert gens == [F(0), F(1, p), F(1, p * p), F(1, p ** 3)]


def test_generators_zero_and_12():
    assert gamma_generators(padic_from_integer(0, 5, 3)) == [F(0)] * 3
    gens = gamma_generators(padic_from_integer(12, 3, 3))
    assert gens == [F(0), F(1, 3), F(4, 9)]
    assert all(0 <= g < 1 for g in gens)


# --- cyclic hull ----------------------------------------------------------

def test_hull_brute_force_example():
    # smallest positive integer combination of 1/2 and 1/3
    combos = {
        a * F(1, 2) + b * F(1, 3)
        for a in range(-10, 11)
        for b in range(-10, 11)
    }
    best = min(c for c in combos if c > 0)
    assert best == F(1, 6)
    assert cyclic_hull([F(1, 2), F(1, 3)]).generator == F(1, 6)


def test_hull_trivial_cases():
    assert cyclic_hull([]).generator == 0
    assert cyclic_hull([F(0)]).generator == 0
    assert cyclic_hull([F(0), F(1, 3), F(4, 9)]).generator == F(1, 9)


def test_hull_certificate_on_random_sets():
    rng = random.Random(11)
    for _ in range(100):
        gens = [
            F(rng.randint(-30, 30), rng.randint(1, 30))
            for _ in range(rng.randint(1, 6))
        ]
        group, coeffs = hull_with_coefficients(gens)
        g = group.generator
        assert sum(c * x for c, x in zip(coeffs, gens)) == g
        for x in gens:
            assert contains(group, x)
            if g:
                assert (x / g).denominator == 1


def test_gamma_group_examples():
    for p in SMALL_PRIMES:
        assert gamma_group(padic_from_integer(p, p, 5)).generator == F(1, p ** 4)
    assert gamma_group(padic_from_integer(0, 3, 4)).generator == 0
    assert gamma_group(padic_from_integer(6, 3, 3)).generator == F(2, 9)


def test_contains_examples():
    sixth = CyclicSubgroupQ(F(1, 6))
    assert contains(sixth, F(5, 6))
    assert not contains(sixth, F(1, 4))
    assert contains(CyclicSubgroupQ(F(1, 9)), F(1))
    assert not contains(CyclicSubgroupQ(F(0)), F(1, 2))
    assert contains(CyclicSubgroupQ(F(0)), F(0))


# --- integer containment --------------------------------------------------

def test_contains_one_for_q_equals_p():
    for p in SMALL_PRIMES:
        report = contains_one_report(padic_from_integer(p, p, 4))
        assert report.contains_one and report.content == 1


def test_contains_one_deviation_record_q6():
    # every nonzero numerator of the q=6 generators shares the factor 2,
    # so no integer combination reaches 1; kept as a regression pin
    for n in range(3, 9):
        report = contains_one_report(padic_from_integer(6, 3, n))
        assert report.contains_one is False
        assert report.content == 2


def test_contains_one_q12():
    report = contains_one_report(padic_from_integer(12, 3, 3))
    assert report.contains_one and report.content == 1


def test_contains_one_rejects_zero():
    with pytest.raises(DomainError, match="trivial"):
        contains_one_report(padic_from_integer(0, 3, 4))


# --- density --------------------------------------------------------------

def test_density_witness_examples():
    w = density_witness(padic_from_integer(3, 3, 4), F(1, 2), F(1, 9))
    assert (w.witness, w.distance) == (F(13, 27), F(1, 54))

    w = density_witness(padic_from_integer(2, 2, 5), F(1, 3), F(1, 10))
    assert (w.witness, w.distance) == (F(5, 16), F(1, 48))

    # a target already inside comes back exactly
    w = density_witness(padic_from_integer(2, 2, 5), F(3, 16), F(1, 10))
    assert (w.witness, w.distance) == (F(3, 16), F(0))


def test_density_witness_matches_nearest_multiple_oracle():
    rng = random.Random(23)
    for _ in range(60):
        p = rng.choice(SMALL_PRIMES)
        q = random_q(rng, p, 10, min_valuation=1)
        g = gamma_group(q).generator
        target = F(rng.randint(0, 100), rng.randint(1, 100))
        if g == 0 or g > F(1, 50):
            continue
        w = density_witness(q, target, F(1, 50))
        k = target.numerator * g.denominator // (target.denominator * g.numerator)
        best = min(abs(k * g - target), abs((k + 1) * g - target))
        assert w.distance == best
        assert w.distance < F(1, 50)
        assert contains(gamma_group(q), w.witness)


def test_density_insufficient_precision_reports_estimate():
    q = padic_from_integer(3, 3, 3)  # hull generator 1/9
    with pytest.raises(PrecisionError) as exc:
        density_witness(q, F(1, 2), F(1, 100))
    needed = exc.value.required_precision
    assert needed is not None
    digits = q.digits + (0,) * (needed - q.precision)
    from tatedual.padic import PAdicInt

    w = density_witness(PAdicInt(3, digits), F(1, 2), F(1, 100))
    assert w.distance < F(1, 100)


def test_density_rejects_bad_epsilon_and_zero():
    with pytest.raises(DomainError):
        density_witness(padic_from_integer(3, 3, 4), F(1, 2), F(0))
    with pytest.raises(DomainError):
        density_witness(padic_from_integer(0, 3, 4), F(1, 2), F(1, 9))


# --- torsion images -------------------------------------------------------

def test_prufer_image_examples():
    assert prufer_image(F(4, 9), 3) == PruferElement(3, 2, 4)
    assert prufer_image(F(6, 9), 3) == PruferElement(3, 1, 2)
    assert prufer_image(F(7, 3), 3) == PruferElement(3, 1, 1)
    assert prufer_image(F(5), 3) == PruferElement(3, 0, 0)
    assert prufer_image(F(-1, 3), 3) == PruferElement(3, 1, 2)


def test_prufer_image_rejects_foreign_denominator():
    with pytest.raises(DomainError, match="prime factor"):
        prufer_image(F(1, 6), 3)


def test_prufer_element_validation_and_order():
    with pytest.raises(DomainError):
        PruferElement(3, 1, 3)  # not reduced
    with pytest.raises(DomainError):
        PruferElement(3, 0, 1)
    x = PruferElement(3, 2, 4)
    assert x.order == 9
    assert str(x) == "4/3^2"
    assert prufer_add(x, PruferElement(3, 2, 5)) == PruferElement(3, 0, 0)


def test_parse_prufer_forms():
    assert parse_prufer("3/2^3", 2) == PruferElement(2, 3, 3)
    assert parse_prufer("1/8", 2) == PruferElement(2, 3, 1)
    assert parse_prufer("7", 5) == PruferElement(5, 0, 0)
    with pytest.raises(DomainError):
        parse_prufer("1/6", 3)
    with pytest.raises(DomainError):
        parse_prufer("x/y", 3)


# --- relation chain -------------------------------------------------------

def test_relations_q2_discrepancies_are_digits():
    q = padic_from_integer(2, 2, 5)
    report = prufer_relations_check(q)
    assert report.p_gamma1_zero
    assert report.all_hold
    assert [r.discrepancy for r in report.relations] == list(q.digits[1:])
    assert report.unbounded_order


def test_relations_q12_and_q6():
    report = prufer_relations_check(padic_from_integer(12, 3, 3))
    assert report.all_hold
    report = prufer_relations_check(padic_from_integer(6, 3, 3))
    assert report.all_hold  # the chain holds even though 1 is not inside


def test_relations_reject_units_and_zero():
    with pytest.raises(DomainError, match="valuation"):
        prufer_relations_check(padic_from_integer(1, 3, 4))
    with pytest.raises(DomainError):
        prufer_relations_check(padic_from_integer(0, 3, 4))


def test_relation_chain_exact_on_random_q():
    rng = random.Random(37)
    for _ in range(60):
        p = rng.choice(SMALL_PRIMES)
        q = random_q(rng, p, 12, min_valuation=1)
        gens = gamma_generators(q)
        assert (p * gens[0]) % 1 == 0
        for n in range(len(gens) - 1):
            diff = p * gens[n + 1] - gens[n]
            assert diff.denominator == 1
            assert int(diff) == q.digits[n + 1]
        assert prufer_relations_check(q).all_hold


def test_prufer_order_signature():
    rng = random.Random(41)
    for _ in range(40):
        p = rng.choice(SMALL_PRIMES)
        q = random_q(rng, p, 10, min_valuation=1)
        v = q.valuation()
        gens = gamma_generators(q)
        for n in range(v + 1, len(gens) + 1):
            assert prufer_image(gens[n - 1], p).order == p ** (n - v)


# --- truncations ----------------------------------------------------------

def test_truncation_monotonicity_and_shrink():
    rng = random.Random(43)
    for _ in range(50):
        p = rng.choice(SMALL_PRIMES)
        q = random_q(rng, p, 12, min_valuation=1)
        prev = None
        for n in range(1, q.precision + 1):
            g = gamma_group(q.truncate(n)).generator
            if prev not in (None, Fraction(0)) and g != 0:
                assert (prev / g).denominator == 1  # divides exactly
                assert g <= prev
            if g != 0:
                prev = g
        v = q.valuation()
        content = contains_one_report(q).content
        assert gamma_group(q).generator == Fraction(content, p ** (q.precision - v))


def test_supernatural_limit_examples():
    for p in SMALL_PRIMES:
        limit = supernatural_limit(padic_from_integer(p, p, 6))
        assert limit.sn.exponents == {p: INF}
        assert limit.scale == 1
        assert limit.stabilized

    limit = supernatural_limit(padic_from_integer(6, 3, 6))
    assert limit.sn.exponents == {3: INF}
    assert limit.scale == 2
    assert limit.stabilized

    limit = supernatural_limit(padic_from_integer(12, 3, 6))
    assert limit.scale == 1


def test_supernatural_limit_rejections():
    with pytest.raises(DomainError):
        supernatural_limit(padic_from_integer(0, 3, 4))
    with pytest.raises(DomainError, match="valuation"):
        supernatural_limit(padic_from_integer(2, 3, 4))
