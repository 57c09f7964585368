"""Characters on the Hopf structures and exact iterated integrals.

A character is an algebra map from one structure into a commutative
value algebra (exact polynomials or trigonometric sums). Convolution
and inverse go through the coproduct and antipode of the structure.

Iterated integrals of polynomial paths are computed symbolically in
the endpoint variables; the tree version integrates children jointly.
"""

from __future__ import annotations

import re
from fractions import Fraction

from .coeffs import LinComb, MultiPoly
from .errors import ParseError, StructureMismatchError
from .words import Word
from .perms import Perm
from .forests import PlainForest, PlainTree
from .morphisms import theta_small, t_sigma_decorated


class Character:
    """Linear character of a Hopf structure with values in a
    commutative algebra; fn maps basis elements to values."""

    def __init__(self, structure, fn, one, name="chi"):
        self.structure = structure
        self.fn = fn
        self.one = one
        self.zero = one - one
        self.name = name
        self._cache = {}

    def __call__(self, b):
        if b not in self._cache:
            self._cache[b] = self.fn(b)
        return self._cache[b]

    def eval_lin(self, lc):
        total = self.zero
        for b, c in lc.items():
            total = total + c * self(b)
        return total


def unit_character(structure, one, name="eta"):
    def fn(b):
        if structure.degree(b) == 0:
            return one
        return one - one
    return Character(structure, fn, one, name=name)


def convolve(phi, psi, name=None):
    """(phi * psi)(x) = sum phi(x') psi(x'') over the coproduct."""
    if not phi.structure.same_structure(psi.structure):
        raise StructureMismatchError(
            f"cannot convolve over {phi.structure!r} and {psi.structure!r}")
    H = phi.structure

    def fn(b):
        total = phi.zero
        for (x, y), c in H.coproduct(b).items():
            total = total + c * (phi(x) * psi(y))
        return total

    return Character(H, fn, phi.one,
                     name=name or f"{phi.name}*{psi.name}")


def char_inverse(phi, name=None):
    """Convolution inverse phi o S."""
    H = phi.structure

    def fn(b):
        return phi.eval_lin(H.antipode(b))

    return Character(H, fn, phi.one, name=name or f"{phi.name}^-1")


def validate_character(phi, max_degree):
    """Exhaustively check multiplicativity up to a total degree.

    Returns the list of failures (empty when the character law holds).
    """
    H = phi.structure
    failures = []
    if phi(H.unit()) != phi.one:
        failures.append("unit is not sent to 1")
    layers = {n: H.basis(n) for n in range(1, max_degree + 1)}
    for n1 in range(1, max_degree):
        for n2 in range(1, max_degree - n1 + 1):
            for b1 in layers[n1]:
                for b2 in layers[n2]:
                    lhs = phi(b1) * phi(b2)
                    rhs = phi.eval_lin(H.product(b1, b2))
                    if lhs != rhs:
                        failures.append(
                            f"{phi.name}({b1}){phi.name}({b2}) != "
                            f"{phi.name}({b1}.{b2})")
    return failures


# ---------------------------------------------------------------------------
# Polynomial driving paths
# ---------------------------------------------------------------------------

_TERM_RE = re.compile(
    r"^(?P<coeff>[+-]?\d+(?:/\d+)?|[+-])?(?:(?<=\d)\*)?"
    r"(?P<var>x(?:\^(?P<exp>\d+))?)?$")


def _parse_poly(text):
    """One polynomial in x with rational coefficients, e.g. 1 - 2*x + x^2."""
    chunks = re.findall(r"[+-]?[^+-]+", text.replace(" ", ""))
    if not chunks:
        raise ParseError(f"empty polynomial in {text!r}")
    poly = MultiPoly.zero(("x",))
    x = MultiPoly.var(("x",), "x")
    for chunk in chunks:
        m = _TERM_RE.match(chunk)
        if not m or (m.group("coeff") is None and m.group("var") is None):
            raise ParseError(f"bad polynomial term {chunk!r}")
        coeff = m.group("coeff")
        if coeff in (None, "+", "-"):
            c = Fraction((coeff or "") + "1")
        else:
            c = Fraction(coeff)
        term = MultiPoly.const(("x",), c)
        if m.group("var"):
            term = term * x ** int(m.group("exp") or 1)
        poly = poly + term
    return poly


class PolyPath:
    """Derivative components of a polynomial path, one per letter."""

    def __init__(self, components):
        self.components = tuple(components)
        if not self.components:
            raise ParseError("a path needs at least one component")

    @property
    def d(self):
        return len(self.components)

    def derivative(self, letter):
        if not 1 <= letter <= self.d:
            raise ParseError(f"letter {letter} outside 1..{self.d}")
        return self.components[letter - 1]

    @classmethod
    def parse(cls, text):
        """Lines of the form 'i: polynomial in x'."""
        found = {}
        for raw in text.splitlines():
            line = raw.strip()
            if not line or line.startswith("#"):
                continue
            if ":" not in line:
                raise ParseError(f"missing ':' in path line {line!r}")
            head, _, body = line.partition(":")
            try:
                idx = int(head)
            except ValueError:
                raise ParseError(f"bad component index {head!r}") from None
            if idx in found:
                raise ParseError(f"component {idx} given twice")
            found[idx] = _parse_poly(body)
        if sorted(found) != list(range(1, len(found) + 1)):
            raise ParseError("component indices must be 1..d")
        return cls(found[i] for i in range(1, len(found) + 1))


def _retime(poly_ts, hi, lo, vars=("t", "s")):
    """Move a polynomial in (t, s) into the given variables, reading
    t as hi and s as lo."""
    ih, il = vars.index(hi), vars.index(lo)
    pairs = []
    for (et, es), c in poly_ts.terms.items():
        exp = [0] * len(vars)
        exp[ih] += et
        exp[il] += es
        pairs.append((tuple(exp), c))
    return MultiPoly(vars, pairs)


def iter_int_word(path, word):
    """Iterated integral of the path along a word, in variables (t, s).

    Innermost letter is the last one; each step multiplies by the
    derivative of the next component outward and integrates from s."""
    inner = MultiPoly.one(("x", "s"))
    for letter in reversed(word.letters):
        gamma = path.derivative(letter).with_vars(("x", "s"))
        h = (gamma * inner).antiderivative("x")
        inner = h - h.subst_var("x", "s")
    return inner.rename_var("x", "t")


def iter_int_tree(path, forest):
    """Skeleton integral of a plain forest: children integrate jointly
    below their parent. Values in (t, s)."""

    def tree_factor(tree):
        # value as a polynomial in (x, s): integral up to parent time x
        gamma = path.derivative(tree.dec).with_vars(("x", "s"))
        inner = MultiPoly.one(("x", "s"))
        for child in tree.children:
            inner = inner * tree_factor(child)
        h = (gamma * inner).antiderivative("x")
        return h - h.subst_var("x", "s")

    total = MultiPoly.one(("x", "s"))
    for tree in forest.trees:
        total = total * tree_factor(tree)
    return total.rename_var("x", "t")


def iter_int_char(path, structure):
    """The iterated-integral character on the shuffle structure."""
    return Character(structure, lambda w: iter_int_word(path, w),
                     MultiPoly.one(("t", "s")), name="I")


def tree_int_char(path, structure):
    """The skeleton-integral character on the forest structure."""
    return Character(structure, lambda f: iter_int_tree(path, f),
                     MultiPoly.one(("t", "s")), name="Itree")


def tree_integral_factorization_check(path, forest):
    """Itree(F) must equal I(theta_small(F))."""
    lhs = iter_int_tree(path, forest)
    rhs = MultiPoly.zero(("t", "s"))
    for w, c in theta_small(forest).items():
        rhs = rhs + c * iter_int_word(path, w)
    if lhs != rhs:
        return f"tree integral does not factor through words on {forest}"
    return None


def chen_check(path, word):
    """I^{(t,s)}(w) = sum_k I^{(t,u)}(w_1) I^{(u,s)}(w_2), trivariate."""
    tus = ("t", "u", "s")
    lhs = _retime(iter_int_word(path, word), "t", "s", tus)
    rhs = MultiPoly.zero(tus)
    for k in range(len(word) + 1):
        left = _retime(iter_int_word(path, Word(word.letters[:k])),
                       "t", "u", tus)
        right = _retime(iter_int_word(path, Word(word.letters[k:])),
                        "u", "s", tus)
        rhs = rhs + left * right
    if lhs != rhs:
        return f"Chen identity fails on {word}"
    return None


# ---------------------------------------------------------------------------
# The Fubini rewriting of a simplex integral into trees
# ---------------------------------------------------------------------------

def fubini_tsigma(sigma, letters):
    """Expand the simplex integral along sigma into decorated forests.

    Integration goes from the outermost variable inward; the domain of
    variable x_i is bounded by the already placed variables closest in
    the order sigma, and each lower bound above s splits the integral
    into two. Choices of upper bounds are exactly parent assignments.
    """
    letters = tuple(letters)
    n = sigma.n
    if len(letters) != n:
        raise ValueError("decoration length must match the permutation size")
    options = []
    for i in range(1, n + 1):
        upper = None
        lower = None
        for k in range(1, i):
            if sigma(k) < sigma(i) and (upper is None or
                                        sigma(k) > sigma(upper)):
                upper = k
            if sigma(k) > sigma(i) and (lower is None or
                                        sigma(k) < sigma(lower)):
                lower = k
        opts = [(upper or 0, 1)]
        if lower is not None:
            opts.append((lower, -1))
        options.append(opts)

    out = LinComb.zero()

    def expand(i, parent, sign):
        nonlocal out
        if i > n:
            from .forests import OrderedForest
            f = OrderedForest(tuple(parent), letters)
            out = out + LinComb.of(f.to_plain(), sign)
            return
        for p, s in options[i - 1]:
            expand(i + 1, parent + [p], sign * s)

    expand(1, [], 1)
    return out


def fubini_matches_t_sigma(sigma, letters):
    lhs = fubini_tsigma(sigma, letters)
    rhs = t_sigma_decorated(sigma, letters)
    if lhs != rhs:
        return f"Fubini expansion disagrees with T^{sigma} on {letters}"
    return None
