"""The graded Hopf algebra structures and brute-force axiom checks.

Every structure acts on LinComb over its own basis type: words for the
shuffle algebra, plain forests for the Connes-Kreimer algebra, ordered
and heap-ordered forests, and (decorated) permutations for FQSym.
Tensors are plain Python pairs (triples for the coassociativity check).

Antipodes: the shuffle algebra has its closed reversal formula and the
forest algebra the cut recursion; everything else uses the generic
graded-connected recursion S(x) = -x - sum S(x')x'' over proper cuts.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import combinations

from .coeffs import LinComb
from .errors import StructureMismatchError
from .words import Word, EMPTY_WORD, all_words
from .perms import Perm, DecoratedPerm, all_perms
from . import fqsym
from .forests import (
    PlainForest, OrderedForest, EMPTY_PLAIN, EMPTY_ORDERED,
    ordered_cuts, plain_cuts,
    enumerate_plain_forests, enumerate_ordered, enumerate_heap_ordered,
)


# ---------------------------------------------------------------------------
# Basis operations
# ---------------------------------------------------------------------------

def sh_product(w1, w2):
    """Shuffle product: all interleavings, equal words merged."""
    k, l = len(w1), len(w2)
    terms = []
    for positions in combinations(range(k + l), k):
        pos = set(positions)
        out = []
        a = b = 0
        for i in range(k + l):
            if i in pos:
                out.append(w1[a])
                a += 1
            else:
                out.append(w2[b])
                b += 1
        terms.append((Word(out), 1))
    return LinComb(terms)


def sh_coproduct(w):
    """Deconcatenation."""
    letters = w.letters
    return LinComb([((Word(letters[:i]), Word(letters[i:])), 1)
                    for i in range(len(letters) + 1)])


def sh_antipode(w):
    """(a_1...a_n) -> (-1)^n (a_n...a_1)."""
    return LinComb.of(w.reverse(), (-1) ** len(w))


def ck_product(f1, f2):
    """Disjoint union of plain forests (canonical, commutative)."""
    return f1 * f2


def ck_coproduct(f):
    """Sum over admissible cuts, Roo tensor Lea."""
    return LinComb([((cut.roo, cut.lea), 1) for cut in plain_cuts(f)])


_CK_ANTIPODE_MEMO = {}


def ck_antipode(f):
    """The cut recursion S(F) = -F - sum_proper Roo * S(Lea), memoized."""
    if f.n == 0:
        return LinComb.of(f)
    cached = _CK_ANTIPODE_MEMO.get(f)
    if cached is not None:
        return cached
    total = LinComb.of(f, -1)
    for cut in plain_cuts(f):
        if cut.roo.n == 0 or cut.lea.n == 0:
            continue
        total = total - ck_antipode(cut.lea).map_basis(
            lambda lea_part, roo=cut.roo: roo * lea_part)
    _CK_ANTIPODE_MEMO[f] = total
    return total


def ho_product(f1, f2):
    """Order-shifting concatenation of ordered forests."""
    return f1 * f2


def ho_coproduct(f):
    """Cuts with both parts carrying the standardized induced order."""
    return LinComb([((cut.roo, cut.lea), 1) for cut in ordered_cuts(f)])


# ---------------------------------------------------------------------------
# Structure objects
# ---------------------------------------------------------------------------

class HopfStructure:
    """Product/coproduct/antipode bundle over one basis type."""

    name = "?"

    def __init__(self, d=1):
        self.d = d
        self._antipode_memo = {}
        self._coproduct_memo = {}

    def unit(self):
        raise NotImplementedError

    def degree(self, b):
        raise NotImplementedError

    def product(self, b1, b2):
        raise NotImplementedError

    def _coproduct(self, b):
        raise NotImplementedError

    def coproduct(self, b):
        cached = self._coproduct_memo.get(b)
        if cached is None:
            cached = self._coproduct_memo[b] = self._coproduct(b)
        return cached

    def basis(self, n):
        raise NotImplementedError

    def counit(self, b):
        return Fraction(1) if self.degree(b) == 0 else Fraction(0)

    def antipode(self, b):
        """Generic graded-connected recursion, memoized per structure."""
        if self.degree(b) == 0:
            return LinComb.of(b)
        cached = self._antipode_memo.get(b)
        if cached is not None:
            return cached
        total = LinComb.of(b, -1)
        for (x1, x2), c in self.coproduct(b).items():
            if self.degree(x1) == 0 or self.degree(x2) == 0:
                continue
            total = total - c * self.product_lin(self.antipode(x1),
                                                 LinComb.of(x2))
        self._antipode_memo[b] = total
        return total

    # -- linear extensions of the basis maps ---------------------------------

    def product_lin(self, a, b):
        out = []
        for x, cx in a.items():
            for y, cy in b.items():
                for z, cz in self.product(x, y).items():
                    out.append((z, cx * cy * cz))
        return LinComb(out)

    def coproduct_lin(self, a):
        out = []
        for x, cx in a.items():
            for pair, c in self.coproduct(x).items():
                out.append((pair, cx * c))
        return LinComb(out)

    def antipode_lin(self, a):
        total = LinComb.zero()
        for x, cx in a.items():
            total = total + cx * self.antipode(x)
        return total

    def tensor_mul(self, t1, t2):
        """Componentwise product on LinComb over basis pairs."""
        out = []
        for (a, b), c1 in t1.items():
            for (x, y), c2 in t2.items():
                for p, cp in self.product(a, x).items():
                    for q, cq in self.product(b, y).items():
                        out.append(((p, q), c1 * c2 * cp * cq))
        return LinComb(out)

    def same_structure(self, other):
        return type(self) is type(other) and self.d == other.d

    def __repr__(self):
        return f"{type(self).__name__}(d={self.d})"


class Shuffle(HopfStructure):
    name = "shuffle"

    def unit(self):
        return EMPTY_WORD

    def degree(self, b):
        return len(b)

    def product(self, b1, b2):
        return sh_product(b1, b2)

    def _coproduct(self, b):
        return sh_coproduct(b)

    def antipode(self, b):
        return sh_antipode(b)

    def basis(self, n):
        return all_words(n, self.d)


class CKForests(HopfStructure):
    name = "ck"

    def unit(self):
        return EMPTY_PLAIN

    def degree(self, b):
        return b.n

    def product(self, b1, b2):
        return LinComb.of(ck_product(b1, b2))

    def _coproduct(self, b):
        return ck_coproduct(b)

    def antipode(self, b):
        return ck_antipode(b)

    def basis(self, n):
        return enumerate_plain_forests(n, self.d)


class Ordered(HopfStructure):
    name = "ordered"

    def unit(self):
        return EMPTY_ORDERED

    def degree(self, b):
        return b.n

    def product(self, b1, b2):
        return LinComb.of(ho_product(b1, b2))

    def _coproduct(self, b):
        return ho_coproduct(b)

    def basis(self, n):
        return enumerate_ordered(n, self.d)


class HeapOrdered(Ordered):
    name = "heap"

    def basis(self, n):
        return enumerate_heap_ordered(n, self.d)


class FQSym(HopfStructure):
    name = "fqsym"

    def unit(self):
        return Perm(())

    def degree(self, b):
        return b.n

    def product(self, b1, b2):
        return fqsym.fq_product(b1, b2)

    def _coproduct(self, b):
        return fqsym.fq_coproduct(b)

    def basis(self, n):
        return all_perms(n)


class FQSymDec(HopfStructure):
    name = "fqsym-dec"

    def unit(self):
        return DecoratedPerm((), ())

    def degree(self, b):
        return b.n

    def product(self, b1, b2):
        return fqsym.fq_product_dec(b1, b2)

    def _coproduct(self, b):
        return fqsym.fq_coproduct_dec(b)

    def basis(self, n):
        out = []
        for p in all_perms(n):
            for w in all_words(n, self.d):
                out.append(DecoratedPerm(p, w.letters))
        return out


STRUCTURES = {
    "shuffle": Shuffle,
    "ck": CKForests,
    "ordered": Ordered,
    "heap": HeapOrdered,
    "fqsym": FQSym,
    "fqsym-dec": FQSymDec,
}


def get_structure(name, d=1):
    if name not in STRUCTURES:
        raise StructureMismatchError(f"unknown structure {name!r}")
    return STRUCTURES[name](d)


# ---------------------------------------------------------------------------
# Axiom checks (each returns None or a counterexample string)
# ---------------------------------------------------------------------------

def check_coassoc(H, b):
    """(Delta x id) Delta = (id x Delta) Delta on a basis element."""
    delta = H.coproduct(b)
    left = []
    right = []
    for (x, y), c in delta.items():
        for (u, v), c2 in H.coproduct(x).items():
            left.append(((u, v, y), c * c2))
        for (u, v), c2 in H.coproduct(y).items():
            right.append(((x, u, v), c * c2))
    if LinComb(left) != LinComb(right):
        return f"coassociativity fails on {b}"
    return None


def check_delta_mult(H, b1, b2):
    """Delta(xy) = Delta(x)Delta(y)."""
    lhs = H.coproduct_lin(H.product(b1, b2))
    rhs = H.tensor_mul(H.coproduct(b1), H.coproduct(b2))
    if lhs != rhs:
        return f"Delta not multiplicative on {b1}, {b2}"
    return None


def check_antipode(H, b):
    """m(S x id)Delta = unit counit = m(id x S)Delta."""
    target = LinComb.of(H.unit(), H.counit(b))
    left = LinComb.zero()
    right = LinComb.zero()
    for (x, y), c in H.coproduct(b).items():
        left = left + c * H.product_lin(H.antipode(x), LinComb.of(y))
        right = right + c * H.product_lin(LinComb.of(x), H.antipode(y))
    if left != target:
        return f"antipode axiom (S x id) fails on {b}"
    if right != target:
        return f"antipode axiom (id x S) fails on {b}"
    return None


def check_counit(H, b):
    lhs = LinComb.zero()
    rhs = LinComb.zero()
    for (x, y), c in H.coproduct(b).items():
        lhs = lhs + LinComb.of(y, c * H.counit(x))
        rhs = rhs + LinComb.of(x, c * H.counit(y))
    if lhs != LinComb.of(b) or rhs != LinComb.of(b):
        return f"counit axiom fails on {b}"
    return None


def hopf_axiom_sweep(H, max_degree):
    """Exhaustive axiom check up to a degree; returns list of failures."""
    failures = []
    layers = {n: H.basis(n) for n in range(max_degree + 1)}
    for n in range(max_degree + 1):
        for b in layers[n]:
            for check in (check_coassoc, check_counit, check_antipode):
                bad = check(H, b)
                if bad:
                    failures.append(bad)
    for n1 in range(1, max_degree):
        for n2 in range(1, max_degree - n1 + 1):
            for b1 in layers[n1]:
                for b2 in layers[n2]:
                    bad = check_delta_mult(H, b1, b2)
                    if bad:
                        failures.append(bad)
    return failures
