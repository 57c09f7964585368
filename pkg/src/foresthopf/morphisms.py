"""The Hopf morphism theta into FQSym and its inverse elements.

theta sends a heap-ordered forest to the sum of its linear extensions,
read as permutation words; the decorated variant carries decorations
into the bottom row. Restricted to degree n the map is invertible:
m(F) = max S_F is a bijection onto the symmetric group and tau in S_F
implies tau <= m(F), so the matrix of theta is unipotent triangular in
that order. T^sigma denotes theta^{-1}(sigma^{-1}); its decorated
projection to plain forests recovers single words under the small map.
"""

from __future__ import annotations

import json
from math import factorial

from .coeffs import LinComb
from .errors import BoundExceededError
from .words import Word
from .perms import Perm, DecoratedPerm, all_perms, standardize, shuffles
from .fqsym import unique_factorization
from .forests import (
    OrderedForest, PlainForest, act, linear_extensions,
    heap_order_lifts, enumerate_heap_ordered,
)
from .hopf import ho_product, ho_coproduct

DEFAULT_BOUND = 6


def theta(forest):
    """Sum of the linear extensions of a heap-ordered forest."""
    return LinComb([(sigma, 1) for sigma in linear_extensions(forest)])


def theta_dec(forest):
    """Decorated version: bottom row lists the decorations by value."""
    return LinComb([(DecoratedPerm.from_ell(sigma, forest.dec), 1)
                    for sigma in linear_extensions(forest)])


def pi_ho(forest):
    """Forget the order of an ordered forest."""
    return forest.to_plain()


def pi_sigma(dp):
    """Forget the permutation, keep the decoration word."""
    return Word(dp.bottom)


def theta_small(forest):
    """Words of decorations along linear extensions of a plain forest.

    Computed through one heap-order lift; the answer does not depend
    on the lift chosen.
    """
    if forest.n == 0:
        return LinComb.of(Word(()))
    lift = heap_order_lifts(forest)[0]
    out = []
    for sigma in linear_extensions(lift):
        out.append((Word(tuple(lift.dec[sigma(i) - 1]
                               for i in range(1, lift.n + 1))), 1))
    return LinComb(out)


class ThetaMatrix:
    """theta in degree n as a 0/1 matrix, with its exact inverse.

    Rows are indexed by permutations in lexicographic order, columns by
    heap-ordered forests in text order. Columns of the inverse are the
    elements T^sigma; they are solved by back substitution along the
    bijection F -> max S_F, which exhibits the matrix as unipotent
    triangular up to that permutation of the columns.
    """

    def __init__(self, n):
        self.n = n
        self.perms = all_perms(n)
        self.forests = enumerate_heap_ordered(n)
        self._extensions = {f: linear_extensions(f) for f in self.forests}
        self._by_max = {}
        for f, exts in self._extensions.items():
            self._by_max[max(e.word for e in exts)] = f
        if len(self._by_max) != factorial(n):
            raise AssertionError(f"max extension not bijective at n={n}")
        self._inverse_columns = {}

    def extensions(self, forest):
        return self._extensions[forest]

    def forest_with_max(self, sigma):
        """The unique heap-ordered forest whose top extension is sigma."""
        return self._by_max[sigma.word]

    def matrix(self):
        """Row sigma, column F: 1 when sigma is an extension of F."""
        members = {f: set(self._extensions[f]) for f in self.forests}
        return [[1 if sigma in members[f] else 0 for f in self.forests]
                for sigma in self.perms]

    def inverse_column(self, sigma):
        """theta^{-1}(sigma) as a LinComb of heap-ordered forests."""
        cached = self._inverse_columns.get(sigma)
        if cached is not None:
            return cached
        residual = {sigma: 1}
        result = []
        for tau in sorted(self.perms, key=lambda p: p.word, reverse=True):
            c = residual.pop(tau, 0)
            if not c:
                continue
            f = self._by_max[tau.word]
            result.append((f, c))
            for other in self._extensions[f]:
                if other != tau:
                    residual[other] = residual.get(other, 0) - c
        if any(residual.values()):
            raise AssertionError("back substitution left a residual")
        lc = LinComb(result)
        self._inverse_columns[sigma] = lc
        return lc

    def inverse_matrix(self):
        """Row F, column sigma: coefficient of F in theta^{-1}(sigma)."""
        cols = {sigma: self.inverse_column(sigma) for sigma in self.perms}
        return [[cols[sigma].coeff(f) for sigma in self.perms]
                for f in self.forests]

    def to_json(self):
        return json.dumps({
            "n": self.n,
            "perms": [str(p) for p in self.perms],
            "forests": [str(f) for f in self.forests],
            "matrix": self.matrix(),
            "inverse": [[str(c) for c in row] for row in self.inverse_matrix()],
        }, indent=2)


_MATRIX_CACHE = {}


def theta_inverse_table(n, bound=DEFAULT_BOUND):
    if n > bound:
        raise BoundExceededError(
            f"degree {n} exceeds bound {bound}; raise the bound explicitly")
    if n not in _MATRIX_CACHE:
        _MATRIX_CACHE[n] = ThetaMatrix(n)
    return _MATRIX_CACHE[n]


def t_sigma(sigma, bound=DEFAULT_BOUND):
    """T^sigma = theta^{-1}(sigma^{-1}), a LinComb of heap forests."""
    table = theta_inverse_table(sigma.n, bound)
    return table.inverse_column(sigma.inverse())


def t_sigma_decorated(sigma, letters, bound=DEFAULT_BOUND):
    """Decorate T^sigma with letters by order index, then forget orders."""
    letters = tuple(letters)
    if len(letters) != sigma.n:
        raise ValueError("decoration length must match the permutation size")
    out = []
    for f, c in t_sigma(sigma, bound).items():
        out.append((OrderedForest(f.parent, letters).to_plain(), c))
    return LinComb(out)


# ---------------------------------------------------------------------------
# Identities around theta (each returns None or a counterexample string)
# ---------------------------------------------------------------------------

def t_sigma_product_identity(sigma, tau, bound=DEFAULT_BOUND):
    """T^sigma T^tau = sum over (k,l)-shuffles zeta of T^{zeta^{-1}(sigma x tau)}."""
    k, l = sigma.n, tau.n
    lhs = LinComb.zero()
    for f1, c1 in t_sigma(sigma, bound).items():
        for f2, c2 in t_sigma(tau, bound).items():
            lhs = lhs + LinComb.of(ho_product(f1, f2), c1 * c2)
    rhs = LinComb.zero()
    st = sigma.tensor(tau)
    for zeta in shuffles(k, l):
        rhs = rhs + t_sigma(zeta.inverse() @ st, bound)
    if lhs != rhs:
        return f"product identity fails for {sigma}, {tau}"
    return None


def t_sigma_coproduct_identity(sigma, bound=DEFAULT_BOUND):
    """Delta T^sigma = sum_k T^{sigma_1} x T^{sigma_2} along the
    factorizations of sigma^{-1}."""
    lhs = LinComb.zero()
    for f, c in t_sigma(sigma, bound).items():
        lhs = lhs + c * ho_coproduct(f)
    inv = sigma.inverse()
    rhs = LinComb.zero()
    for k in range(sigma.n + 1):
        s1 = Perm(standardize(inv.word[:k])).inverse()
        s2 = Perm(standardize(inv.word[k:])).inverse()
        for f1, c1 in t_sigma(s1, bound).items():
            for f2, c2 in t_sigma(s2, bound).items():
                rhs = rhs + LinComb.of((f1, f2), c1 * c2)
    if lhs != rhs:
        return f"coproduct identity fails for {sigma}"
    return None


def twisted_product_identity(sigma, tau, eps, bound=DEFAULT_BOUND):
    """eps^{-1}.(T^sigma T^tau) = sum_zeta T^{zeta^{-1}(sigma x tau)eps}."""
    k, l = sigma.n, tau.n
    if eps.n != k + l or not eps.is_shuffle(k):
        raise ValueError(f"{eps} is not a ({k},{l})-shuffle")
    eps_inv = eps.inverse()
    lhs = LinComb.zero()
    for f1, c1 in t_sigma(sigma, bound).items():
        for f2, c2 in t_sigma(tau, bound).items():
            lhs = lhs + LinComb.of(act(eps_inv, ho_product(f1, f2)), c1 * c2)
    rhs = LinComb.zero()
    st = sigma.tensor(tau)
    for zeta in shuffles(k, l):
        rhs = rhs + t_sigma(zeta.inverse() @ st @ eps, bound)
    if lhs != rhs:
        return f"twisted product identity fails for {sigma}, {tau}, {eps}"
    return None


def theta_morphism_product_check(f1, f2):
    """theta(F G) = theta(F) theta(G) in FQSym."""
    from .fqsym import fq_product
    lhs = theta(ho_product(f1, f2))
    rhs = LinComb.zero()
    for p1, c1 in theta(f1).items():
        for p2, c2 in theta(f2).items():
            rhs = rhs + (c1 * c2) * fq_product(p1, p2)
    if lhs != rhs:
        return f"theta not multiplicative on {f1}, {f2}"
    return None


def theta_morphism_coproduct_check(f):
    """(theta x theta) Delta = Delta theta."""
    from .fqsym import fq_coproduct
    lhs = LinComb.zero()
    for (roo, lea), c in ho_coproduct(f).items():
        for p1, c1 in theta(roo).items():
            for p2, c2 in theta(lea).items():
                lhs = lhs + LinComb.of((p1, p2), c * c1 * c2)
    rhs = LinComb.zero()
    for sigma, c in theta(f).items():
        rhs = rhs + c * fq_coproduct(sigma)
    if lhs != rhs:
        return f"theta not comultiplicative on {f}"
    return None


def square_check(forest):
    """pi_Sigma theta_dec = theta_small pi_ho on a heap-ordered forest."""
    lhs = LinComb.zero()
    for dp, c in theta_dec(forest).items():
        lhs = lhs + LinComb.of(pi_sigma(dp), c)
    rhs = theta_small(pi_ho(forest))
    if lhs != rhs:
        return f"square fails on {forest}"
    return None
