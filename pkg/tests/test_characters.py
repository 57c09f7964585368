"""Exact iterated integrals of polynomial paths.

Expected polynomials below were integrated by hand (and cross-checked
via the degree-2 Chen identity I(ab)+I(ba) = I(a)I(b)) before being
frozen here.
"""

import pytest

from foresthopf.coeffs import MultiPoly, LinComb
from foresthopf.errors import ParseError
from foresthopf.words import Word, all_words
from foresthopf.perms import Perm, all_perms
from foresthopf.forests import PlainForest
from foresthopf.hopf import Shuffle, CKForests, get_structure
from foresthopf.characters import (
    Character, unit_character, convolve, char_inverse, validate_character,
    PolyPath, iter_int_word, iter_int_tree, iter_int_char, tree_int_char,
    tree_integral_factorization_check, chen_check,
    fubini_tsigma, fubini_matches_t_sigma,
)


PATH_TEXT = "1: 1\n2: 2x"


@pytest.fixture(scope="module")
def path():
    return PolyPath.parse(PATH_TEXT)


class TestPolyParsing:
    def test_terms(self):
        p = PolyPath.parse("1: 1/2*x^3 - x + 2")
        assert str(p.derivative(1)) == "1/2*x^3-x+2"

    def test_compact_forms(self):
        p = PolyPath.parse("1: 2x\n2: x^2\n3: -x")
        assert str(p.derivative(1)) == "2*x"
        assert str(p.derivative(2)) == "x^2"
        assert str(p.derivative(3)) == "-x"

    def test_comments_and_blanks(self):
        p = PolyPath.parse("# driving path\n\n1: x\n")
        assert p.d == 1

    def test_bad_index(self):
        with pytest.raises(ParseError):
            PolyPath.parse("2: x")
        with pytest.raises(ParseError):
            PolyPath.parse("1: x\n1: x")
        with pytest.raises(ParseError):
            PolyPath.parse("one: x")

    def test_bad_term(self):
        with pytest.raises(ParseError):
            PolyPath.parse("1: x + y")
        with pytest.raises(ParseError):
            PolyPath.parse("1: ")

    def test_letter_out_of_range(self, path):
        with pytest.raises(ParseError):
            path.derivative(3)


class TestWordIntegrals:
    def test_degree_one(self, path):
        assert str(iter_int_word(path, Word((1,)))) == "t-s"
        assert str(iter_int_word(path, Word((2,)))) == "t^2-s^2"

    def test_degree_two(self, path):
        assert str(iter_int_word(path, Word((1, 2)))) \
            == "1/3*t^3-t*s^2+2/3*s^3"
        assert str(iter_int_word(path, Word((2, 1)))) \
            == "2/3*t^3-t^2*s+1/3*s^3"
        assert str(iter_int_word(path, Word((1, 1)))) \
            == "1/2*t^2-t*s+1/2*s^2"

    def test_empty_word(self, path):
        assert iter_int_word(path, Word(())) == MultiPoly.one(("t", "s"))

    def test_vanishes_at_coincident_times(self, path):
        for w in all_words(3, 2):
            poly = iter_int_word(path, w)
            at = poly.eval({"t": 1, "s": 1})
            assert at == 0

    def test_shuffle_character(self, path):
        I = iter_int_char(path, Shuffle(2))
        assert validate_character(I, 3) == []

    def test_chen(self, path):
        for w in ["12", "21", "112", "1221"]:
            assert chen_check(path, Word.parse(w)) is None

    def test_convolution_unit(self, path):
        H = Shuffle(2)
        I = iter_int_char(path, H)
        eta = unit_character(H, I.one)
        both = convolve(char_inverse(I), I)
        for n in range(3):
            for w in all_words(n, 2):
                assert both(w) == eta(w)


class TestTreeIntegrals:
    def test_ladder_equals_word(self, path):
        f = PlainForest.parse("1[2]")
        assert iter_int_tree(path, f) == iter_int_word(path, Word((1, 2)))

    def test_cherry_value(self, path):
        f = PlainForest.parse("1[2,2]")
        assert str(iter_int_tree(path, f)) \
            == "1/5*t^5-2/3*t^3*s^2+t*s^4-8/15*s^5"

    def test_forest_multiplies(self, path):
        f = PlainForest.parse("1|2")
        assert iter_int_tree(path, f) == (
            iter_int_word(path, Word((1,))) * iter_int_word(path, Word((2,))))

    def test_factorization(self, path):
        for n in range(5):
            for f in PlainForestPool.get(n):
                assert tree_integral_factorization_check(path, f) is None

    def test_tree_character_multiplicative(self, path):
        Itree = tree_int_char(path, CKForests(2))
        assert validate_character(Itree, 3) == []


class PlainForestPool:
    _cache = {}

    @classmethod
    def get(cls, n):
        if n not in cls._cache:
            from foresthopf.forests import enumerate_plain_forests
            cls._cache[n] = enumerate_plain_forests(n, 2)
        return cls._cache[n]


class TestFubini:
    def test_worked_example(self):
        lc = fubini_tsigma(Perm.parse("231"), (1, 2, 3))
        assert lc.render() == "-1[2,3]+1[2]|3"

    def test_matches_inverse_elements(self):
        for sigma in all_perms(3):
            assert fubini_matches_t_sigma(sigma, (1, 2, 3)) is None
            assert fubini_matches_t_sigma(sigma, (2, 1, 2)) is None

    def test_spot_degree_four(self):
        sigma = Perm.parse("2413")
        assert fubini_matches_t_sigma(sigma, (1, 2, 1, 2)) is None

    def test_length_mismatch(self):
        with pytest.raises(ValueError):
            fubini_tsigma(Perm.parse("21"), (1,))


class TestCharacterPlumbing:
    def test_cache(self, path):
        calls = []

        def fn(w):
            calls.append(w)
            return iter_int_word(path, w)

        phi = Character(Shuffle(2), fn, MultiPoly.one(("t", "s")))
        w = Word((1, 2))
        phi(w)
        phi(w)
        assert len(calls) == 1

    def test_eval_lin(self, path):
        I = iter_int_char(path, Shuffle(2))
        lc = LinComb([(Word((1,)), 2), (Word((2,)), -1)])
        assert I.eval_lin(lc) == 2 * I(Word((1,))) - I(Word((2,)))

    def test_mismatched_convolution(self, path):
        from foresthopf.errors import StructureMismatchError
        a = iter_int_char(path, Shuffle(2))
        b = iter_int_char(path, Shuffle(3))
        with pytest.raises(StructureMismatchError):
            convolve(a, b)
