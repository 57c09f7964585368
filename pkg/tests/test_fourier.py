"""Fourier side: sectors, skeleton integrals, chi and J.

Frozen values below were computed by hand from the vertex-factor
product 1/(i Xi_v) and cross-checked through the degree-2 shuffle
relation chi(ab) + chi(ba) = chi(a) chi(b).
"""

from fractions import Fraction
import random

import pytest

from foresthopf.coeffs import GaussianRational, GR_ONE, GR_I, FreqExp
from foresthopf.errors import (ParseError, MagnitudeTieError,
                               SingularAtomError)
from foresthopf.words import Word, all_words
from foresthopf.perms import Perm, all_perms, shuffles
from foresthopf.forests import OrderedForest, linear_extensions, act
from foresthopf.hopf import sh_product
from foresthopf.fourier import (
    TrigPath, FourierAtom, AtomMeasure, word_measure, sector_of,
    split_measure, skeleton_value, e18_closed_form, phi_measure,
    chi_measure, chi, j_convolution, j_character, rough_path_J,
    phi_multiplicativity_check, e28_check, e22_check, musigma_check,
    converse_check, random_measure, sector_sweep, GR_MINUS_I,
)


PATH_TEXT = "1: 1@1\n2: 1@2"


@pytest.fixture(scope="module")
def path():
    return TrigPath.parse(PATH_TEXT)


def freq_term(var, xi, re, im=0):
    return FreqExp.exponential(var, Fraction(xi),
                               GaussianRational(Fraction(re), Fraction(im)))


class TestTrigPath:
    def test_parse(self, path):
        assert path.d == 2
        assert path.component(1) == ((Fraction(1), GR_ONE),)

    def test_amp_forms(self):
        p = TrigPath.parse("1: -i@2, 1/2+3/4*i@-3")
        entries = dict(p.component(1))
        assert entries[Fraction(2)] == GR_MINUS_I
        assert entries[Fraction(-3)] == GaussianRational(
            Fraction(1, 2), Fraction(3, 4))

    def test_repeated_frequency(self):
        with pytest.raises(ParseError):
            TrigPath.parse("1: 1@1, 2@1")

    def test_missing_at(self):
        with pytest.raises(ParseError):
            TrigPath.parse("1: 1")

    def test_bad_indices(self):
        with pytest.raises(ParseError):
            TrigPath.parse("2: 1@1")
        with pytest.raises(ParseError):
            TrigPath.parse("1: 1@1\n1: 1@2")

    def test_component_bounds(self, path):
        with pytest.raises(ParseError):
            path.component(3)


class TestMeasures:
    def test_word_measure_single_atom(self, path):
        nu = word_measure(path, Word((1, 2)))
        assert nu.atoms == (FourierAtom((Fraction(1), Fraction(2))),)

    def test_word_measure_expands(self):
        p = TrigPath.parse("1: 1@1, 1@3")
        nu = word_measure(p, Word((1, 1)))
        assert len(nu.atoms) == 4

    def test_amps_merge(self):
        a = AtomMeasure(2, [FourierAtom((Fraction(1), Fraction(2)))])
        b = AtomMeasure(2, [FourierAtom((Fraction(1), Fraction(2)),
                                        -GR_ONE)])
        assert (a + b).atoms == ()

    def test_compose_permutes_coordinates(self):
        atom = FourierAtom((Fraction(5), Fraction(7)))
        assert atom.compose(Perm((2, 1))).freq == (Fraction(7), Fraction(5))


class TestSectors:
    def test_sector_of(self):
        assert sector_of((Fraction(3), Fraction(1), Fraction(2))) \
            == Perm((2, 3, 1))
        assert sector_of((Fraction(-2), Fraction(1))) == Perm((2, 1))

    def test_repeated_frequency_is_stable(self):
        assert sector_of((Fraction(1), Fraction(1))) == Perm((1, 2))

    def test_magnitude_tie(self):
        with pytest.raises(MagnitudeTieError):
            sector_of((Fraction(1), Fraction(-1)))

    def test_split_reassemble(self):
        mu = AtomMeasure(2, [
            FourierAtom((Fraction(3), Fraction(1))),
            FourierAtom((Fraction(1), Fraction(2)), GR_I),
        ])
        assert split_measure(mu).reassemble() == mu

    def test_sorted_pieces(self):
        mu = AtomMeasure(2, [FourierAtom((Fraction(3), Fraction(1)))])
        split = split_measure(mu)
        piece = split.piece(Perm((2, 1)))
        assert piece.atoms[0].freq == (Fraction(1), Fraction(3))
        assert split.piece(Perm((1, 2))).atoms == ()


class TestSkeleton:
    def test_dot(self):
        got = skeleton_value(OrderedForest.parse("1"), (Fraction(1),))
        assert got == freq_term("t", 1, 0, -1)

    def test_ladder(self):
        got = skeleton_value(OrderedForest.parse("1[2]"),
                             (Fraction(1), Fraction(2)))
        assert got == freq_term("t", 3, Fraction(-1, 6))

    def test_cherry(self):
        got = skeleton_value(OrderedForest.parse("1[2,3]"),
                             (Fraction(1), Fraction(2), Fraction(3)))
        assert got == freq_term("t", 6, 0, Fraction(1, 36))

    def test_forest_multiplies(self):
        got = skeleton_value(OrderedForest.parse("1|2"),
                             (Fraction(1), Fraction(2)))
        assert got == freq_term("t", 3, Fraction(-1, 2))

    def test_singular_vertex(self):
        with pytest.raises(SingularAtomError):
            skeleton_value(OrderedForest.parse("1[2]"),
                           (Fraction(1), Fraction(-1)))

    def test_closed_form_ratio(self):
        # the closed form drops every factor of 1/i
        freqs = {1: (Fraction(2),), 2: (Fraction(2), Fraction(5))}
        for text in ["1", "1[2]", "1|2"]:
            f = OrderedForest.parse(text)
            n = f.n
            atom = FourierAtom(freqs[n])
            scale = GR_MINUS_I ** n
            assert skeleton_value(f, atom.freq) \
                == scale * e18_closed_form(f, atom)


class TestChi:
    def test_frozen_values(self, path):
        assert str(chi(path, Word.parse("a"))) == "(-i)·exp(i(1·t))"
        assert str(chi(path, Word.parse("b"))) == "(-1/2*i)·exp(i(2·t))"
        assert str(chi(path, Word.parse("ab"))) == "(-1/6)·exp(i(3·t))"
        assert str(chi(path, Word.parse("ba"))) == "(-1/3)·exp(i(3·t))"
        assert str(chi(path, Word.parse("aa"))) == "(-1/2)·exp(i(2·t))"

    def test_empty_word(self, path):
        assert chi(path, Word(())) == FreqExp.one()

    def test_shuffle_character(self, path):
        # chi(w1 shuffle w2) = chi(w1) chi(w2)
        for w1 in all_words(1, 2):
            for w2 in all_words(2, 2):
                lhs = FreqExp.zero()
                for w, c in sh_product(w1, w2).items():
                    lhs = lhs + c * chi(path, w)
                assert lhs == chi(path, w1) * chi(path, w2)

    def test_repeated_letter_word(self, path):
        # (1,1) hits the stable-sector branch; value must still satisfy
        # 2 chi(aa) = chi(a)^2
        two = chi(path, Word((1, 1))) + chi(path, Word((1, 1)))
        assert two == chi(path, Word((1,))) * chi(path, Word((1,)))


class TestJ:
    def test_routes_agree(self, path):
        for text in ["a", "ab", "ba", "aab", "aba", "abb"]:
            char, conv = rough_path_J(path, Word.parse(text))
            assert char == conv

    def test_frozen_value(self, path):
        got = j_character(path, Word.parse("ab"))
        assert str(got) == ("(-1/3)·exp(i(3·s))+(1/2)·exp(i(1·t+2·s))"
                            + "+(-1/6)·exp(i(3·t))")

    def test_vanishes_at_equal_times(self, path):
        # setting s = t merges each (a, 0, c) key into a + c
        got = j_character(path, Word.parse("ab"))
        merged = {}
        for (et, eu, es), c in got.terms.items():
            assert eu == 0
            key = et + es
            merged[key] = merged.get(key, GaussianRational(0)) + c
        assert all(not v for v in merged.values())

    def test_chen(self, path):
        for text in ["ab", "ba", "aba"]:
            w = Word.parse(text)
            lhs = j_character(path, w, "t", "s")
            rhs = FreqExp.zero()
            for k in range(len(w) + 1):
                left = j_character(path, Word(w.letters[:k]), "t", "u")
                right = j_character(path, Word(w.letters[k:]), "u", "s")
                rhs = rhs + left * right
            assert lhs == rhs

    def test_empty_word(self, path):
        assert j_convolution(path, Word(())) == FreqExp.one()

    def test_singular_atom(self):
        p = TrigPath.parse("1: 1@1\n2: 1@2\n3: 1@-3")
        with pytest.raises(SingularAtomError):
            chi(p, Word((1, 2, 3)))


class TestIdentities:
    MU1 = AtomMeasure(1, [FourierAtom((Fraction(2),))])
    MU2 = AtomMeasure(2, [
        FourierAtom((Fraction(1), Fraction(3))),
        FourierAtom((Fraction(7), Fraction(5)), GR_I),
    ])

    def test_phi_multiplicative(self):
        f1 = OrderedForest.parse("1")
        f2 = OrderedForest.parse("1[2]")
        assert phi_multiplicativity_check(f1, self.MU1, f2, self.MU2) is None

    def test_e22(self):
        for eps in all_perms(2):
            assert e22_check(self.MU2, eps) is None

    def test_musigma(self):
        assert musigma_check(self.MU1, self.MU2) is None

    def test_e28(self):
        f = OrderedForest.parse("1:1[2:2]|3:1")
        mu = AtomMeasure(3, [FourierAtom(
            (Fraction(1), Fraction(2), Fraction(4)))])
        for sigma in linear_extensions(f):
            assert e28_check(f, mu, sigma) is None

    def test_converse(self):
        assert converse_check(self.MU1, self.MU2) is None

    def test_random_sweep(self):
        assert sector_sweep(cases=25, max_n=3, seed=20260816) == []

    def test_random_measures_have_distinct_magnitudes(self):
        rng = random.Random(5)
        for _ in range(20):
            mu = random_measure(rng, 3)
            for atom in mu.atoms:
                mags = [abs(x) for x in atom.freq]
                assert len(set(mags)) == len(mags)
