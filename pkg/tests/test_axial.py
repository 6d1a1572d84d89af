"""Radial operators, the Vekua residual, and axial evaluation."""

import random
from fractions import Fraction

import pytest

from cliffex.axial import (
    AxialPolynomial,
    BivariatePoly,
    apply_radial_powers,
    evaluate,
    format_rational,
    radial_lower_even,
    radial_lower_odd,
    text_form,
    vekua_residual,
)
from cliffex.clifford import Paravector


def poly(terms):
    return BivariatePoly(terms)


def test_radial_lower_even_examples():
    assert radial_lower_even(poly({(0, 4): 1})) == poly({(0, 2): 4})
    assert radial_lower_even(poly({(2, 0): 1})).is_zero
    assert radial_lower_even(poly({(0, 2): 1, (1, 2): -3})) == poly({(0, 0): 2, (1, 0): -6})


def test_radial_lower_even_rejects_odd_degree():
    with pytest.raises(ValueError):
        radial_lower_even(poly({(0, 3): 1}))


def test_radial_lower_odd_examples():
    assert radial_lower_odd(poly({(0, 3): 1})) == poly({(0, 1): 2})
    assert radial_lower_odd(poly({(0, 1): 1})).is_zero
    assert radial_lower_odd(poly({(1, 5): 1})) == poly({(1, 3): 4})


def test_radial_lower_odd_rejects_even_degree():
    with pytest.raises(ValueError):
        radial_lower_odd(poly({(0, 2): 1}))


def test_apply_radial_powers_n3():
    F = apply_radial_powers((poly({(0, 2): 1}), BivariatePoly.zero()), 3)
    assert F.A == poly({(0, 0): 2})
    assert F.B.is_zero
    G = apply_radial_powers((BivariatePoly.zero(), poly({(0, 3): 1})), 3)
    assert G.A.is_zero
    assert G.B == poly({(0, 1): 2})


def test_apply_radial_powers_annihilates_low_degrees():
    F = apply_radial_powers((poly({(0, 2): 1}), poly({(0, 1): 1})), 5)
    assert F.is_zero


def test_apply_radial_powers_rejects_even_n():
    with pytest.raises(ValueError):
        apply_radial_powers((BivariatePoly.zero(), BivariatePoly.zero()), 4)


def test_apply_radial_powers_preserves_parity_on_random_input():
    rng = random.Random(23)
    for _ in range(25):
        n = rng.choice((3, 5, 7))
        u = poly(
            {
                (rng.randrange(4), 2 * rng.randrange(6)): Fraction(rng.randrange(-4, 5))
                for _ in range(4)
            }
        )
        v = poly(
            {
                (rng.randrange(4), 2 * rng.randrange(6) + 1): Fraction(rng.randrange(-4, 5))
                for _ in range(4)
            }
        )
        F = apply_radial_powers((u, v), n)
        assert F.A.is_even_in_r()
        assert F.B.is_odd_in_r()


def test_parity_invariants_enforced_by_constructor():
    with pytest.raises(ValueError):
        AxialPolynomial(poly({(0, 1): 1}), BivariatePoly.zero(), 3)
    with pytest.raises(ValueError):
        AxialPolynomial(BivariatePoly.zero(), poly({(0, 2): 1}), 3)


def test_vekua_residual_of_constants():
    F = AxialPolynomial.constant(1, 3)
    first, second = vekua_residual(F)
    assert first.is_zero and second.is_zero


def test_vekua_residual_of_degree_one_appell():
    # x0 + (1/3) r w: 1 - 1/3 - 2 * (1/3) = 0
    F = AxialPolynomial(poly({(1, 0): 1}), poly({(0, 1): Fraction(1, 3)}), 3)
    first, second = vekua_residual(F)
    assert first.is_zero and second.is_zero


def test_vekua_residual_flags_the_naive_z_analogue():
    # x0 + r w is NOT monogenic for n = 3: the residual is the constant -2
    F = AxialPolynomial(poly({(1, 0): 1}), poly({(0, 1): 1}), 3)
    first, second = vekua_residual(F)
    assert first == poly({(0, 0): -2})
    assert second.is_zero


def test_evaluate_at_one_and_at_e1():
    F = AxialPolynomial(poly({(1, 0): 1}), poly({(0, 1): Fraction(1, 3)}), 3)
    at_one = evaluate(F, Paravector(1, (0, 0, 0)))
    assert at_one.scalar_part() == 1 and at_one.vector_part() == (0, 0, 0)
    at_e1 = evaluate(F, Paravector(0, (1, 0, 0)))
    assert at_e1.scalar_part() == 0
    assert at_e1.vector_part() == (Fraction(1, 3), 0, 0)


def test_evaluate_even_part_squared_radius():
    F = AxialPolynomial(poly({(0, 2): 1}), BivariatePoly.zero(), 3)
    value = evaluate(F, Paravector(0.0, (1.0, 1.0, 0.0)), mode="float")
    assert abs(value.scalar_part() - 2.0) < 1e-15


def test_evaluate_exact_matches_float_on_random_points():
    rng = random.Random(31)
    F = AxialPolynomial(
        poly({(2, 0): Fraction(1), (0, 2): Fraction(-1, 3), (1, 2): Fraction(2, 7)}),
        poly({(1, 1): Fraction(2, 3), (0, 3): Fraction(-1, 5)}),
        3,
    )
    for _ in range(30):
        x = Paravector(
            Fraction(rng.randrange(-6, 7), rng.randrange(1, 5)),
            tuple(Fraction(rng.randrange(-6, 7), rng.randrange(1, 5)) for _ in range(3)),
        )
        exact = evaluate(F, x, mode="exact")
        approx = evaluate(F, x, mode="float")
        for mask in range(8):
            e = float(exact.coefficient(mask))
            a = float(approx.coefficient(mask))
            assert abs(e - a) <= 1e-12 * max(1.0, abs(e))


def test_evaluate_handles_zero_vector_part():
    F = AxialPolynomial(poly({(1, 0): 1}), poly({(0, 1): 1}), 3)
    value = evaluate(F, Paravector(Fraction(5), (0, 0, 0)))
    assert value.scalar_part() == 5
    assert value.vector_part() == (0, 0, 0)
    value_f = evaluate(F, Paravector(5.0, (0.0, 0.0, 0.0)), mode="float")
    assert value_f.scalar_part() == 5.0


def test_evaluate_rejects_bad_mode_and_dimension():
    F = AxialPolynomial.constant(1, 3)
    with pytest.raises(ValueError):
        evaluate(F, Paravector(0, (1, 0, 0)), mode="symbolic")
    with pytest.raises(ValueError):
        evaluate(F, Paravector(0, (1, 0, 0, 0, 0)))


def test_text_form_ordering_and_signs():
    F = AxialPolynomial(
        poly({(2, 0): 1, (0, 2): Fraction(-1, 3)}),
        poly({(1, 1): Fraction(2, 3)}),
        3,
    )
    assert text_form(F) == "x0^2 + 2/3 x0 r w - 1/3 r^2"
    assert text_form(AxialPolynomial.zero(3)) == "0"
    assert text_form(AxialPolynomial.constant(Fraction(-5, 2), 3)) == "-5/2"


def test_text_form_unit_coefficients():
    F = AxialPolynomial(poly({(1, 0): 1}), poly({(0, 1): -1}), 3)
    assert text_form(F) == "x0 - r w"


def test_format_rational():
    assert format_rational(Fraction(-1, 6)) == "-1/6"
    assert format_rational(Fraction(4, 2)) == "2"
    assert format_rational(0.5) == "0.5"


def test_divide_r_requires_divisibility():
    with pytest.raises(ValueError):
        poly({(0, 0): 1}).divide_r()
    assert poly({(1, 3): 6}).divide_r() == poly({(1, 2): 6})
