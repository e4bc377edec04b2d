import random

import pytest
import sympy

from brunnian import (
    CharPolynomial,
    SymplecticMatrix,
    TwistWord,
    casson_bleiler,
    charpoly,
    rho,
    rho_mod,
    transvection,
)
from brunnian.errors import PreconditionError
from brunnian.homology import CHAIN_CLASSES, J, intersection

import oracles

INVOLUTION = TwistWord((1, 2, 3, 4, 5, 5, 4, 3, 2, 1))


def nested_commutator():
    """[d1^6, [d2^6, [d3^6, [d4^6, d5^6]]]] expanded."""
    word = TwistWord((5,) * 6)
    for i in (4, 3, 2, 1):
        block = TwistWord((i,) * 6)
        word = block * word * block.invert() * word.invert()
    return word


# Frozen from an independent matrix-product run (sympy re-derives it below).
NESTED_COMMUTATOR_RHO = (
    (2742744063745, -457133808384, -76187335104, -444426121440),
    (-470184984576, 78365843713, 13060694016, 76187381760),
    (-76187381760, 12698169120, 2116316161, 12345177600),
    (13060694016, -2176828992, -362797056, -2116316159),
)
NESTED_COMMUTATOR_CHARPOLY = (1, -2821109907460, 5642219814918, -2821109907460, 1)


def random_twist(rng, max_len):
    return TwistWord.from_letters(
        oracles.random_letters(rng, 5, rng.randint(0, max_len)))


class TestChainClasses:
    def test_adjacent_intersections(self):
        for i in range(4):
            assert intersection(CHAIN_CLASSES[i], CHAIN_CLASSES[i + 1]) in (1, -1)

    def test_distant_intersections_vanish(self):
        for i in range(5):
            for j in range(5):
                if abs(i - j) >= 2:
                    assert intersection(CHAIN_CLASSES[i], CHAIN_CLASSES[j]) == 0

    def test_form_is_antisymmetric(self):
        rng = random.Random(201)
        for _ in range(50):
            x = [rng.randint(-3, 3) for _ in range(4)]
            y = [rng.randint(-3, 3) for _ in range(4)]
            assert intersection(x, y) == -intersection(y, x)


class TestTransvection:
    def test_fixes_its_own_class(self):
        for c in CHAIN_CLASSES:
            assert transvection(c).apply(c) == c

    def test_b1_image_under_a1_twist(self):
        # <b1, a1> = -1 with this form, so b1 maps to b1 - a1.
        t = transvection(CHAIN_CLASSES[0])
        assert t.apply((0, 1, 0, 0)) == (-1, 1, 0, 0)

    def test_symplectic(self):
        for c in CHAIN_CLASSES:
            for sign in (1, -1):
                assert transvection(c, sign).is_symplectic()

    def test_nilpotency_and_sixth_power(self):
        ident = SymplecticMatrix.identity()
        for c in CHAIN_CLASSES:
            t = transvection(c)
            n = [[t.rows[i][j] - ident.rows[i][j] for j in range(4)]
                 for i in range(4)]
            n_squared = [[sum(n[i][k] * n[k][j] for k in range(4))
                          for j in range(4)] for i in range(4)]
            assert all(x == 0 for row in n_squared for x in row)
            sixth = t
            for _ in range(5):
                sixth = sixth.mul(t)
            expected = SymplecticMatrix(tuple(
                tuple(ident.rows[i][j] + 6 * n[i][j] for j in range(4))
                for i in range(4)))
            assert sixth == expected

    def test_zero_vector_rejected(self):
        with pytest.raises(PreconditionError):
            transvection((0, 0, 0, 0))


class TestRho:
    def test_empty_word(self):
        assert rho(TwistWord.identity()).is_identity

    def test_involution_acts_as_minus_identity(self):
        assert rho(INVOLUTION).is_neg_identity
        assert rho(INVOLUTION.power(2)).is_identity

    def test_sixth_power_of_generator_product(self):
        assert rho(TwistWord((1, 2, 3, 4, 5)).power(6)).is_identity

    def test_homomorphism(self):
        rng = random.Random(202)
        for _ in range(200):
            u = random_twist(rng, 12)
            v = random_twist(rng, 12)
            assert rho(u * v) == rho(u).mul(rho(v))

    def test_braid_relations(self):
        for i in range(1, 5):
            assert rho(TwistWord((i, i + 1, i))) == rho(TwistWord((i + 1, i, i + 1)))
        for i in range(1, 6):
            for j in range(1, 6):
                if abs(i - j) >= 2:
                    assert rho(TwistWord((i, j))) == rho(TwistWord((j, i)))

    def test_outputs_symplectic_with_unit_determinant(self):
        rng = random.Random(203)
        for _ in range(200):
            m = rho(random_twist(rng, 20))
            assert m.is_symplectic()
            assert m.det() == 1

    def test_mod_reduction_compatibility(self):
        rng = random.Random(204)
        for _ in range(200):
            w = random_twist(rng, 16)
            assert rho_mod(w, 3).rows == rho(w).mod(3).rows

    def test_generator_sixth_powers_die_mod_3(self):
        for i in range(1, 6):
            assert rho_mod(TwistWord((i,) * 6), 3).is_identity

    def test_involution_nontrivial_mod_3(self):
        assert not rho_mod(INVOLUTION, 3).is_identity

    def test_nested_commutator_matrix(self):
        w = nested_commutator()
        m = rho(w)
        assert m.rows == NESTED_COMMUTATOR_RHO
        assert not m.is_identity and not m.is_neg_identity
        assert rho_mod(w, 3).is_identity

    def test_nested_commutator_matrix_against_sympy(self):
        twists = {i: sympy.Matrix(transvection(CHAIN_CLASSES[i - 1]).rows)
                  for i in range(1, 6)}
        product = sympy.eye(4)
        for a in nested_commutator().letters:
            product = product * (twists[a] if a > 0 else twists[-a].inv())
        assert tuple(map(tuple, product.tolist())) == NESTED_COMMUTATOR_RHO

    def test_letters_validated(self):
        with pytest.raises(PreconditionError):
            rho([7])

    def test_non_prime_modulus_rejected(self):
        with pytest.raises(PreconditionError):
            rho_mod(TwistWord((1,)), 4)
        with pytest.raises(PreconditionError):
            rho_mod(TwistWord((1,)), 1)


class TestCharPolynomial:
    def test_identity(self):
        assert charpoly(SymplecticMatrix.identity()).coefficients == (1, -4, 6, -4, 1)

    def test_minus_identity(self):
        m = rho(INVOLUTION)
        assert charpoly(m).coefficients == (1, 4, 6, 4, 1)

    def test_nested_commutator_coefficients(self):
        assert (charpoly(rho(nested_commutator())).coefficients
                == NESTED_COMMUTATOR_CHARPOLY)

    def test_point_values_match_leibniz_determinant(self):
        rng = random.Random(205)
        for _ in range(100):
            m = rho(random_twist(rng, 14))
            q = charpoly(m)
            for t in (-2, -1, 0, 1, 2):
                assert q.evaluate(t) == oracles.charpoly_value(m, t)

    def test_rho_charpolys_palindromic(self):
        rng = random.Random(206)
        for _ in range(200):
            assert charpoly(rho(random_twist(rng, 16))).is_palindromic


class TestCassonBleiler:
    def test_fully_reducible_inconclusive(self):
        assert casson_bleiler(CharPolynomial((1, -4, 6, -4, 1))) == "inconclusive"

    def test_cyclotomic_inconclusive(self):
        assert casson_bleiler(CharPolynomial((1, 0, -1, 0, 1))) == "inconclusive"
        assert casson_bleiler(CharPolynomial((1, 1, 1, 1, 1))) == "inconclusive"
        assert casson_bleiler(CharPolynomial((1, 0, 0, 0, 1))) == "inconclusive"
        assert casson_bleiler(CharPolynomial((1, -1, 1, -1, 1))) == "inconclusive"

    def test_polynomial_in_x_squared_inconclusive(self):
        # Irreducible but a polynomial in x^2.
        q = CharPolynomial((1, 0, -3, 0, 1))
        assert casson_bleiler(q) == "inconclusive"

    def test_certified_example(self):
        assert casson_bleiler(CharPolynomial((1, -1, -1, -1, 1))) == "pa_certified"

    def test_twist_pair_word_certified(self):
        # d1 d2^-1 d3 d4^-1 has irreducible non-cyclotomic polynomial.
        q = charpoly(rho(TwistWord((1, -2, 3, -4))))
        assert q.coefficients == (1, -7, 13, -7, 1)
        assert casson_bleiler(q) == "pa_certified"

    def test_nested_commutator_is_inconclusive(self):
        # (x-1)^2 divides it, so the homology criterion cannot certify it.
        q = CharPolynomial(NESTED_COMMUTATOR_CHARPOLY)
        assert casson_bleiler(q) == "inconclusive"
        assert q.evaluate(1) == 0

    def test_agrees_with_sympy_irreducibility(self):
        rng = random.Random(207)
        x = sympy.symbols("x")
        for _ in range(150):
            q = charpoly(rho(random_twist(rng, 12)))
            poly = sum(c * x ** (4 - i) for i, c in enumerate(q.coefficients))
            irreducible = sympy.Poly(poly, x).is_irreducible
            verdict = casson_bleiler(q)
            if verdict == "pa_certified":
                assert irreducible
            if not irreducible:
                assert verdict == "inconclusive"

    def test_certified_excludes_roots_of_unity(self):
        rng = random.Random(208)
        seen = 0
        candidates = [CharPolynomial((1, -1, -1, -1, 1)),
                      charpoly(rho(TwistWord((1, -2, 3, -4))))]
        for _ in range(200):
            candidates.append(charpoly(rho(random_twist(rng, 10))))
        for q in candidates:
            if casson_bleiler(q) == "pa_certified":
                seen += 1
                for m in range(1, 25):
                    assert not oracles.divides_x_power_minus_one(q.coefficients, m)
        assert seen >= 2

    def test_non_monic_rejected(self):
        with pytest.raises(PreconditionError):
            casson_bleiler(CharPolynomial((2, 0, 0, 0, 1)))
