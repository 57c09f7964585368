"""Formal rough paths over trigonometric polynomials.

A path component is a finite sum of amplitudes at frequencies; a word
of letters then carries an atom measure, one atom per choice of
frequency in each component. Each atom is split into its magnitude
sector: the permutation that sorts coordinates by increasing absolute
frequency. Ties between distinct frequencies of equal magnitude stay
outside the theory and raise; repeats of one frequency sort stably by
position, which leaves every sector value unchanged.

Characters are evaluated on heap-ordered forests through skeleton
integrals: each vertex contributes 1/(i Xi_v) where Xi_v sums all
frequencies at and above the vertex. The degree-n character chi comes
out of the sector decomposition through the inverse elements T^sigma,
and the two-endpoint object J is assembled either from chi by
convolution or directly from the forest antipode; both routes agree.
"""

from __future__ import annotations

import random
from fractions import Fraction

from .coeffs import GaussianRational, GR_ONE, GR_I, FreqExp, parse_gaussian
from .errors import ParseError, SingularAtomError, MagnitudeTieError
from .words import Word
from .perms import Perm, all_perms, shuffles
from .forests import OrderedForest, act, antichains, lea_vertices
from .morphisms import t_sigma, DEFAULT_BOUND

GR_MINUS_I = GaussianRational(0, -1)


# ---------------------------------------------------------------------------
# Trigonometric paths and atom measures
# ---------------------------------------------------------------------------

class TrigPath:
    """Derivative components as finite frequency/amplitude sums."""

    def __init__(self, components):
        comps = []
        for comp in components:
            entries = tuple((Fraction(f), a if isinstance(a, GaussianRational)
                             else GaussianRational(a)) for f, a in comp)
            if len({f for f, _ in entries}) != len(entries):
                raise ParseError("repeated frequency inside one component")
            comps.append(entries)
        self.components = tuple(comps)
        if not self.components:
            raise ParseError("a path needs at least one component")

    @property
    def d(self):
        return len(self.components)

    def component(self, letter):
        if not 1 <= letter <= self.d:
            raise ParseError(f"letter {letter} outside 1..{self.d}")
        return self.components[letter - 1]

    @classmethod
    def parse(cls, text):
        """Lines 'i: amp@freq, amp@freq, ...'."""
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
            entries = []
            for piece in body.split(","):
                piece = piece.strip()
                if "@" not in piece:
                    raise ParseError(f"expected amp@freq, got {piece!r}")
                amp_text, _, freq_text = piece.partition("@")
                try:
                    freq = Fraction(freq_text.strip())
                except ValueError:
                    raise ParseError(f"bad frequency {freq_text!r}") from None
                entries.append((freq, parse_gaussian(amp_text.strip())))
            found[idx] = entries
        if sorted(found) != list(range(1, len(found) + 1)):
            raise ParseError("component indices must be 1..d")
        return cls(found[i] for i in range(1, len(found) + 1))


class FourierAtom:
    """One frequency vector with a Gaussian rational amplitude."""

    __slots__ = ("freq", "amp")

    def __init__(self, freq, amp=GR_ONE):
        object.__setattr__(self, "freq", tuple(Fraction(f) for f in freq))
        object.__setattr__(self, "amp",
                           amp if isinstance(amp, GaussianRational)
                           else GaussianRational(amp))

    def __setattr__(self, name, value):
        raise AttributeError("FourierAtom is immutable")

    @property
    def n(self):
        return len(self.freq)

    def compose(self, eps):
        """Coordinates xi o eps: position j reads xi_{eps(j)}."""
        return FourierAtom(tuple(self.freq[eps(j) - 1]
                                 for j in range(1, self.n + 1)), self.amp)

    def tensor(self, other):
        return FourierAtom(self.freq + other.freq, self.amp * other.amp)

    def __eq__(self, other):
        return (isinstance(other, FourierAtom) and self.freq == other.freq
                and self.amp == other.amp)

    def __hash__(self):
        return hash((self.freq, self.amp))

    def __repr__(self):
        return f"FourierAtom({self.freq}, {self.amp})"


class AtomMeasure:
    """Finite sum of atoms of one arity, merged by frequency vector."""

    def __init__(self, n, atoms=()):
        self.n = n
        terms = {}
        for atom in atoms:
            if atom.n != n:
                raise ValueError("mixed arities inside one measure")
            if atom.amp:
                cur = terms.get(atom.freq)
                new = atom.amp if cur is None else cur + atom.amp
                if new:
                    terms[atom.freq] = new
                elif cur is not None:
                    del terms[atom.freq]
        self.terms = terms

    @property
    def atoms(self):
        return tuple(FourierAtom(f, a)
                     for f, a in sorted(self.terms.items()))

    def compose(self, eps):
        return AtomMeasure(self.n, (a.compose(eps) for a in self.atoms))

    def tensor(self, other):
        return AtomMeasure(self.n + other.n,
                           (a.tensor(b) for a in self.atoms
                            for b in other.atoms))

    def __add__(self, other):
        if self.n != other.n:
            raise ValueError("mixed arities inside one measure")
        return AtomMeasure(self.n, self.atoms + other.atoms)

    def __eq__(self, other):
        return (isinstance(other, AtomMeasure) and self.n == other.n
                and self.terms == other.terms)

    def __hash__(self):
        return hash((self.n, tuple(sorted(self.terms.items()))))

    def __repr__(self):
        return f"AtomMeasure({self.n}, {self.atoms})"


def word_measure(path, word):
    """Product measure of the path components along a word."""
    atoms = [FourierAtom((), GR_ONE)]
    for letter in word.letters:
        atoms = [a.tensor(FourierAtom((f,), amp))
                 for a in atoms for f, amp in path.component(letter)]
    return AtomMeasure(len(word), atoms)


# ---------------------------------------------------------------------------
# Sector decomposition
# ---------------------------------------------------------------------------

def sector_of(freq):
    """The permutation sorting coordinates by increasing magnitude.

    Equal magnitudes are admitted only for equal frequencies (sorted
    stably by position, which cannot change any downstream value);
    distinct frequencies of equal magnitude raise MagnitudeTieError.
    """
    order = sorted(range(1, len(freq) + 1),
                   key=lambda p: (abs(freq[p - 1]), p))
    for a, b in zip(order, order[1:]):
        fa, fb = freq[a - 1], freq[b - 1]
        if abs(fa) == abs(fb) and fa != fb:
            raise MagnitudeTieError(
                f"frequencies {fa} and {fb} share a magnitude")
    return Perm(tuple(order))


class SectorSplit:
    """Measure split by sector: piece sigma holds sorted coordinates."""

    def __init__(self, n, pieces):
        self.n = n
        self.pieces = {s: m for s, m in pieces.items() if m.terms}

    def piece(self, sigma):
        return self.pieces.get(sigma, AtomMeasure(self.n))

    def reassemble(self):
        total = AtomMeasure(self.n)
        for sigma, piece in self.pieces.items():
            total = total + piece.compose(sigma.inverse())
        return total


def split_measure(mu):
    pieces = {}
    for atom in mu.atoms:
        sigma = sector_of(atom.freq)
        piece = AtomMeasure(mu.n, [atom.compose(sigma)])
        if sigma in pieces:
            pieces[sigma] = pieces[sigma] + piece
        else:
            pieces[sigma] = piece
    return SectorSplit(mu.n, pieces)


# ---------------------------------------------------------------------------
# Skeleton integrals
# ---------------------------------------------------------------------------

def _skeleton_coeff(forest, freq):
    """Product over vertices of 1/(i Xi_v); raises on a vanishing sum."""
    coeff = GR_ONE

    def sub(v):
        nonlocal coeff
        total = freq[v - 1]
        for child in forest.children[v]:
            total += sub(child)
        if total == 0:
            raise SingularAtomError(
                f"frequency sum vanishes at vertex {v} of {forest}")
        coeff = coeff * GaussianRational(0, Fraction(-1) / total)
        return total

    for root in forest.roots:
        sub(root)
    return coeff


def skeleton_value(forest, freq, var="t"):
    """exp(i sum(freq) var) times the product of vertex factors."""
    freq = tuple(freq)
    if len(freq) != forest.n:
        raise ValueError("frequency vector must match the forest size")
    coeff = _skeleton_coeff(forest, freq)
    return FreqExp.exponential(var, sum(freq, Fraction(0)), coeff)


def skeleton_tree(forest, atom, var="t"):
    """phi of one forest against one atom."""
    return atom.amp * skeleton_value(forest, atom.freq, var)


def phi_measure(forest, measure, var="t"):
    total = FreqExp.zero()
    for atom in measure.atoms:
        total = total + skeleton_tree(forest, atom, var)
    return total


def e18_closed_form(forest, atom, var="t"):
    """Closed form: amp exp(i sum var) / prod Xi_v, computed from the
    partial order alone. Differs from the skeleton recursion by a
    factor i^{-n}; kept as an independent cross-check route."""
    denom = Fraction(1)
    for v in range(1, forest.n + 1):
        xi = atom.freq[v - 1]
        for w in forest.strictly_above(v):
            xi += atom.freq[w - 1]
        if xi == 0:
            raise SingularAtomError(
                f"frequency sum vanishes at vertex {v} of {forest}")
        denom *= xi
    return FreqExp.exponential(var, sum(atom.freq, Fraction(0)),
                               atom.amp / denom)


def phi_lin(lc, measure, var="t"):
    """Evaluate a LinComb of heap forests against a measure."""
    total = FreqExp.zero()
    for f, c in lc.items():
        total = total + c * phi_measure(f, measure, var)
    return total


# ---------------------------------------------------------------------------
# The characters chi and the two-endpoint object J
# ---------------------------------------------------------------------------

def chi_measure(nu, var="t", bound=DEFAULT_BOUND):
    """chi against an explicit measure: sector split through T^sigma."""
    if nu.n == 0:
        total = FreqExp.zero()
        for atom in nu.atoms:
            total = total + atom.amp * FreqExp.one()
        return total
    total = FreqExp.zero()
    split = split_measure(nu)
    for sigma, piece in split.pieces.items():
        total = total + phi_lin(t_sigma(sigma, bound), piece, var)
    return total


def chi(path, word, var="t", bound=DEFAULT_BOUND):
    """The degree-n character of the path along a word."""
    return chi_measure(word_measure(path, word), var, bound)


_SBAR_MEMO = {}


def sbar_eval(forest, freq, var, bound=DEFAULT_BOUND):
    """phi of the forest antipode, coordinates riding on the vertices:
    S(F) = -F - sum over proper cuts Roo S(Lea)."""
    freq = tuple(freq)
    if forest.n == 0:
        return FreqExp.one()
    key = (forest, freq, var)
    cached = _SBAR_MEMO.get(key)
    if cached is not None:
        return cached
    total = -skeleton_value(forest, freq, var)
    vertices = frozenset(range(1, forest.n + 1))
    for vbar in antichains(forest):
        if not vbar:
            continue
        lea = lea_vertices(forest, vbar)
        roo = vertices - lea
        if not roo:
            continue
        roo_sorted = sorted(roo)
        lea_sorted = sorted(lea)
        roo_val = skeleton_value(forest.restrict(roo),
                                 tuple(freq[v - 1] for v in roo_sorted), var)
        lea_val = sbar_eval(forest.restrict(lea),
                            tuple(freq[v - 1] for v in lea_sorted), var)
        total = total - roo_val * lea_val
    _SBAR_MEMO[key] = total
    return total


def j_convolution(path, word, hi="t", lo="s", bound=DEFAULT_BOUND):
    """J along the forest route: per sector, phi^hi on Roo and the
    antipode evaluation phi^lo on Lea, summed over cuts of T^sigma."""
    if len(word) == 0:
        return FreqExp.one()
    nu = word_measure(path, word)
    total = FreqExp.zero()
    for sigma, piece in split_measure(nu).pieces.items():
        for atom in piece.atoms:
            vertices = frozenset(range(1, atom.n + 1))
            atom_total = FreqExp.zero()
            for f, c in t_sigma(sigma, bound).items():
                for vbar in antichains(f):
                    lea = lea_vertices(f, vbar)
                    roo = vertices - lea
                    roo_val = skeleton_value(
                        f.restrict(roo),
                        tuple(atom.freq[v - 1] for v in sorted(roo)), hi)
                    lea_val = sbar_eval(
                        f.restrict(lea),
                        tuple(atom.freq[v - 1] for v in sorted(lea)), lo,
                        bound)
                    atom_total = atom_total + c * (roo_val * lea_val)
            total = total + atom.amp * atom_total
    return total


def j_character(path, word, hi="t", lo="s", bound=DEFAULT_BOUND):
    """J along the word route: chi^hi convolved with chi^lo o S."""
    n = len(word)
    total = FreqExp.zero()
    for k in range(n + 1):
        left = chi(path, Word(word.letters[:k]), hi, bound)
        right = chi(path, Word(word.letters[k:]).reverse(), lo, bound)
        sign = GR_ONE if (n - k) % 2 == 0 else -GR_ONE
        total = total + sign * (left * right)
    return total


def rough_path_J(path, word, hi="t", lo="s", bound=DEFAULT_BOUND):
    """Both routes to J; returns (character route, forest route)."""
    return (j_character(path, word, hi, lo, bound),
            j_convolution(path, word, hi, lo, bound))


# ---------------------------------------------------------------------------
# Identity checks (None or a counterexample string)
# ---------------------------------------------------------------------------

def phi_multiplicativity_check(f1, mu1, f2, mu2, var="t"):
    """phi_{mu1}(F1) phi_{mu2}(F2) = phi_{mu1 x mu2}(F1 F2)."""
    lhs = phi_measure(f1, mu1, var) * phi_measure(f2, mu2, var)
    rhs = phi_measure(f1 * f2, mu1.tensor(mu2), var)
    if lhs != rhs:
        return f"phi not multiplicative on {f1}, {f2}"
    return None


def e28_check(forest, measure, sigma, var="t"):
    """phi_mu(F) = phi_{mu o sigma}(sigma^{-1}.F) for sigma in S_F."""
    lhs = phi_measure(forest, measure, var)
    rhs = phi_measure(act(sigma.inverse(), forest),
                      measure.compose(sigma), var)
    if lhs != rhs:
        return f"relabeling invariance fails on {forest} with {sigma}"
    return None


def e22_check(mu, eps):
    """(mu o eps)^sigma = mu^{eps sigma} for every sigma."""
    left = split_measure(mu.compose(eps))
    right = split_measure(mu)
    for sigma in all_perms(mu.n):
        if left.piece(sigma) != right.piece(eps @ sigma):
            return f"sector identity fails at sigma={sigma}, eps={eps}"
    return None


def musigma_check(mu1, mu2):
    """mu1^{s1} x mu2^{s2} = sum over shuffles eps of
    (mu1 x mu2)^{(s1 x s2) eps} o eps^{-1}."""
    n1, n2 = mu1.n, mu2.n
    split1 = split_measure(mu1)
    split2 = split_measure(mu2)
    split12 = split_measure(mu1.tensor(mu2))
    for s1 in all_perms(n1):
        for s2 in all_perms(n2):
            lhs = split1.piece(s1).tensor(split2.piece(s2))
            rhs = AtomMeasure(n1 + n2)
            st = s1.tensor(s2)
            for eps in shuffles(n1, n2):
                rhs = rhs + split12.piece(st @ eps).compose(eps.inverse())
            if lhs != rhs:
                return f"tensor sector identity fails at {s1}, {s2}"
    return None


def converse_check(mu1, mu2, var="t", bound=DEFAULT_BOUND):
    """chi(mu1) chi(mu2) = sum over shuffles zeta of
    chi((mu1 x mu2) o zeta), provided no magnitude of mu1 collides
    with one of mu2.  The left side is also recomputed through the
    order-shift product of the inverse elements as a third route."""
    from .hopf import ho_product
    direct = chi_measure(mu1, var, bound) * chi_measure(mu2, var, bound)
    nu = mu1.tensor(mu2)
    shuffled = FreqExp.zero()
    for zeta in shuffles(mu1.n, mu2.n):
        shuffled = shuffled + chi_measure(nu.compose(zeta), var, bound)
    if direct != shuffled:
        return "chi extension fails on the shuffled tensor measure"
    product = FreqExp.zero()
    split1 = split_measure(mu1)
    split2 = split_measure(mu2)
    for s1, p1 in split1.pieces.items():
        for s2, p2 in split2.pieces.items():
            for f1, c1 in t_sigma(s1, bound).items():
                for f2, c2 in t_sigma(s2, bound).items():
                    product = product + (c1 * c2) * phi_measure(
                        ho_product(f1, f2), p1.tensor(p2), var)
    if direct != product:
        return "product reading disagrees with the sector expansion"
    return None


# ---------------------------------------------------------------------------
# Randomized sweeps
# ---------------------------------------------------------------------------

def _distinct_magnitudes(rng, count):
    mags = set()
    while len(mags) < count:
        mags.add(Fraction(rng.randint(1, 40), rng.randint(1, 4)))
    return sorted(mags)


def random_atom(rng, n, pool=None):
    """Atom with pairwise distinct magnitudes and a nonzero amplitude.

    Passing a shared pool keeps magnitudes distinct across atoms that
    will later be tensored together."""
    if pool is None:
        pool = _distinct_magnitudes(rng, n)
    mags = rng.sample(pool, n)
    freq = tuple(m if rng.random() < 0.5 else -m for m in mags)
    amp = GaussianRational(0)
    while not amp:
        amp = GaussianRational(rng.randint(-3, 3), rng.randint(-3, 3))
    return FourierAtom(freq, amp)


def random_measure(rng, n, max_atoms=3, pool=None):
    return AtomMeasure(n, [random_atom(rng, n, pool)
                           for _ in range(rng.randint(1, max_atoms))])


def random_shuffle(rng, n):
    k = rng.randint(0, n)
    return rng.choice(shuffles(k, n - k))


def sector_sweep(cases=100, max_n=4, seed=20260816):
    """Randomized check of the sector identities; list of failures."""
    rng = random.Random(seed)
    failures = []
    for i in range(cases):
        n = rng.randint(1, max_n)
        mu = random_measure(rng, n)
        if split_measure(mu).reassemble() != mu:
            failures.append(f"case {i}: reassembly fails")
        eps = Perm(tuple(rng.sample(range(1, n + 1), n)))
        bad = e22_check(mu, eps)
        if bad:
            failures.append(f"case {i}: {bad}")
        n1 = rng.randint(1, max(1, n - 1))
        n2 = max(1, n - n1)
        # the tensor in the check must stay free of magnitude ties, so
        # the two measures draw from disjoint pools
        pool = _distinct_magnitudes(rng, n1 + n2 + 2)
        bad = musigma_check(random_measure(rng, n1, pool=pool[:n1 + 1]),
                            random_measure(rng, n2, pool=pool[n1 + 1:]))
        if bad:
            failures.append(f"case {i}: {bad}")
    return failures
