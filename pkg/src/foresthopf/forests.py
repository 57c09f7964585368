"""Rooted forests: plain (canonical, decorated), ordered, heap-ordered.

Conventions used throughout:

* Vertices of an OrderedForest ARE their order indices 1..n; parent(i) = 0
  marks a root.  Heap-ordered means parent(i) < i for every i.
* "v is above w" means w lies on the path from v to its root, v != w;
  roots are lowest.  Lea parts of a cut are upward(leafward)-closed.
* PlainForest is the quotient by forest isomorphism: children are kept
  sorted by a recursive (decoration, children-keys) encoding, so equal
  canonical forms mean isomorphic decorated forests.

Text grammar (whitespace-insensitive):
    plain tree   := DEC [ '[' tree (',' tree)* ']' ]      e.g. "1[2,3]"
    ordered tree := ORD ':' DEC [ '[' ... ']' ]           e.g. "1:5[3:2,2:7]"
    forest       := tree ('|' tree)*                      empty forest: "e"
DEC accepts an integer or a letter (a = 1).
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product as _iproduct

from .errors import ParseError
from .perms import Perm


# ---------------------------------------------------------------------------
# Plain forests (canonical decorated rooted forests)
# ---------------------------------------------------------------------------

class PlainTree:
    __slots__ = ("dec", "children", "n", "key")

    def __init__(self, dec, children=()):
        dec = int(dec)
        if dec < 1:
            raise ValueError("decoration out of range")
        children = tuple(sorted(children, key=lambda t: t.key))
        object.__setattr__(self, "dec", dec)
        object.__setattr__(self, "children", children)
        object.__setattr__(self, "n", 1 + sum(c.n for c in children))
        object.__setattr__(self, "key",
                           (dec, tuple(c.key for c in children)))

    def __setattr__(self, name, value):
        raise AttributeError("PlainTree is immutable")

    def __eq__(self, other):
        return isinstance(other, PlainTree) and self.key == other.key

    def __hash__(self):
        return hash(("PlainTree", self.key))

    def __str__(self):
        if not self.children:
            return str(self.dec)
        return f"{self.dec}[{','.join(str(c) for c in self.children)}]"

    def __repr__(self):
        return f"PlainTree.parse({str(self)!r})"

    @staticmethod
    def parse(text):
        forest = PlainForest.parse(text)
        if len(forest.trees) != 1:
            raise ParseError(f"expected a single tree, got {text!r}")
        return forest.trees[0]


class PlainForest:
    """Canonical multiset of decorated rooted trees; the H^d basis."""

    __slots__ = ("trees", "n", "key")

    def __init__(self, trees=()):
        trees = tuple(sorted(trees, key=lambda t: t.key))
        object.__setattr__(self, "trees", trees)
        object.__setattr__(self, "n", sum(t.n for t in trees))
        object.__setattr__(self, "key", tuple(t.key for t in trees))

    def __setattr__(self, name, value):
        raise AttributeError("PlainForest is immutable")

    @classmethod
    def parse(cls, text):
        text = "".join(text.split())
        if text in ("", "e"):
            return cls(())
        trees = []
        for part in _split_top(text, "|"):
            tree, rest = _parse_plain_tree(part)
            if rest:
                raise ParseError(f"trailing input {rest!r} in {text!r}")
            trees.append(tree)
        return cls(trees)

    def __mul__(self, other):
        return PlainForest(self.trees + other.trees)

    def max_dec(self):
        def walk(t):
            return max([t.dec] + [walk(c) for c in t.children])
        return max((walk(t) for t in self.trees), default=0)

    def __eq__(self, other):
        return isinstance(other, PlainForest) and self.key == other.key

    def __hash__(self):
        return hash(("PlainForest", self.key))

    def sort_key(self):
        return (self.n, str(self))

    def __str__(self):
        if not self.trees:
            return "e"
        return "|".join(str(t) for t in self.trees)

    def __repr__(self):
        return f"PlainForest.parse({str(self)!r})"


EMPTY_PLAIN = PlainForest(())


def _split_top(text, sep):
    """Split on sep outside brackets."""
    parts = []
    depth = 0
    start = 0
    for i, ch in enumerate(text):
        if ch == "[":
            depth += 1
        elif ch == "]":
            depth -= 1
            if depth < 0:
                raise ParseError(f"unbalanced ']' in {text!r}")
        elif ch == sep and depth == 0:
            parts.append(text[start:i])
            start = i + 1
    if depth:
        raise ParseError(f"unbalanced '[' in {text!r}")
    parts.append(text[start:])
    return parts


def _parse_token(text):
    """Read one integer or letter token; returns (value, rest)."""
    if not text:
        raise ParseError("empty token")
    if text[0].isdigit():
        i = 0
        while i < len(text) and text[i].isdigit():
            i += 1
        v = int(text[:i])
        if v < 1:
            raise ParseError(f"value must be >= 1 in {text!r}")
        return v, text[i:]
    if "a" <= text[0] <= "z":
        return ord(text[0]) - ord("a") + 1, text[1:]
    raise ParseError(f"expected number or letter at {text!r}")


def _parse_plain_tree(text):
    dec, rest = _parse_token(text)
    children = []
    if rest.startswith("["):
        body, rest = _take_bracketed(rest)
        for part in _split_top(body, ","):
            child, tail = _parse_plain_tree(part)
            if tail:
                raise ParseError(f"trailing input {tail!r}")
            children.append(child)
    return PlainTree(dec, children), rest


def _take_bracketed(text):
    """text starts with '['; return (inside, rest-after-matching-bracket)."""
    depth = 0
    for i, ch in enumerate(text):
        if ch == "[":
            depth += 1
        elif ch == "]":
            depth -= 1
            if depth == 0:
                return text[1:i], text[i + 1:]
    raise ParseError(f"unbalanced '[' in {text!r}")


# ---------------------------------------------------------------------------
# Ordered forests
# ---------------------------------------------------------------------------

class OrderedForest:
    """A rooted forest whose vertex set is {1..n}, the total order.

    parent[i-1] is the parent of vertex i (0 for roots); dec[i-1] its
    decoration.  Equality is literal: the order matters.
    """

    __slots__ = ("parent", "dec", "n", "children")

    def __init__(self, parent, dec=None):
        parent = tuple(int(p) for p in parent)
        n = len(parent)
        if dec is None:
            dec = (1,) * n
        dec = tuple(int(x) for x in dec)
        if len(dec) != n:
            raise ValueError("decoration length mismatch")
        if any(x < 1 for x in dec):
            raise ValueError("decoration out of range")
        children = [[] for _ in range(n + 1)]
        for i, p in enumerate(parent, start=1):
            if p < 0 or p > n or p == i:
                raise ValueError(f"bad parent {p} for vertex {i}")
            children[p].append(i)
        # reject cycles: every vertex must reach 0
        for i in range(1, n + 1):
            seen = set()
            v = i
            while v:
                if v in seen:
                    raise ValueError(f"parent relation has a cycle at {i}")
                seen.add(v)
                v = parent[v - 1]
        object.__setattr__(self, "parent", parent)
        object.__setattr__(self, "dec", dec)
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "children",
                           tuple(tuple(c) for c in children))

    def __setattr__(self, name, value):
        raise AttributeError("OrderedForest is immutable")

    @classmethod
    def parse(cls, text):
        text = "".join(text.split())
        if text in ("", "e"):
            return cls((), ())
        nodes = {}

        def walk(part, par):
            ordv, rest = _parse_token(part)
            if rest.startswith(":"):
                decv, rest = _parse_token(rest[1:])
            else:
                decv = 1
            if ordv in nodes:
                raise ParseError(f"duplicate order index {ordv}")
            nodes[ordv] = (par, decv)
            if rest.startswith("["):
                body, rest = _take_bracketed(rest)
                for sub in _split_top(body, ","):
                    tail = walk(sub, ordv)
                    if tail:
                        raise ParseError(f"trailing input {tail!r}")
            return rest

        for part in _split_top(text, "|"):
            tail = walk(part, 0)
            if tail:
                raise ParseError(f"trailing input {tail!r} in {text!r}")
        n = len(nodes)
        if sorted(nodes) != list(range(1, n + 1)):
            raise ParseError(f"order indices must be 1..{n} in {text!r}")
        parent = [nodes[i][0] for i in range(1, n + 1)]
        dec = [nodes[i][1] for i in range(1, n + 1)]
        try:
            return cls(parent, dec)
        except ValueError as exc:
            raise ParseError(str(exc)) from exc

    # -- structure ----------------------------------------------------------

    @property
    def roots(self):
        return self.children[0]

    def is_heap_ordered(self):
        return all(p < i for i, p in enumerate(self.parent, start=1))

    def strictly_above(self, v):
        """All vertices in the subtree of v, excluding v itself."""
        out = []
        stack = list(self.children[v])
        while stack:
            w = stack.pop()
            out.append(w)
            stack.extend(self.children[w])
        return set(out)

    def __mul__(self, other):
        k = self.n
        parent = self.parent + tuple(p + k if p else 0 for p in other.parent)
        return OrderedForest(parent, self.dec + other.dec)

    def restrict(self, vertices):
        """Induced ordered forest on a vertex subset, standardized.

        A vertex whose parent is outside the subset becomes a root; this
        matches cut parts, where subsets are up- or downward closed.
        """
        vs = sorted(vertices)
        rank = {v: i for i, v in enumerate(vs, start=1)}
        parent = [rank.get(self.parent[v - 1], 0) for v in vs]
        dec = [self.dec[v - 1] for v in vs]
        return OrderedForest(parent, dec)

    def relabel(self, sigma):
        """Vertex ordered i becomes ordered sigma(i); structure rides along."""
        if len(sigma) != self.n:
            raise ValueError("size mismatch in relabeling")
        parent = [0] * self.n
        dec = [0] * self.n
        for i in range(1, self.n + 1):
            p = self.parent[i - 1]
            parent[sigma(i) - 1] = sigma(p) if p else 0
            dec[sigma(i) - 1] = self.dec[i - 1]
        return OrderedForest(parent, dec)

    def to_plain(self):
        def build(v):
            return PlainTree(self.dec[v - 1],
                             [build(c) for c in self.children[v]])
        return PlainForest([build(r) for r in self.roots])

    def max_dec(self):
        return max(self.dec, default=0)

    # -- identity -----------------------------------------------------------

    def __eq__(self, other):
        return (isinstance(other, OrderedForest)
                and self.parent == other.parent and self.dec == other.dec)

    def __hash__(self):
        return hash(("OrderedForest", self.parent, self.dec))

    def sort_key(self):
        return (self.n, str(self))

    def __str__(self):
        if not self.n:
            return "e"

        def render(v):
            head = f"{v}:{self.dec[v - 1]}"
            if self.children[v]:
                head += "[" + ",".join(render(c) for c in self.children[v]) + "]"
            return head

        return "|".join(render(r) for r in self.roots)

    def __repr__(self):
        return f"OrderedForest.parse({str(self)!r})"


EMPTY_ORDERED = OrderedForest((), ())


def act(sigma, forest):
    """The symmetric-group action: order i becomes sigma(i)."""
    return forest.relabel(sigma)


# ---------------------------------------------------------------------------
# Admissible cuts
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class Cut:
    vbar: frozenset
    roo: object
    lea: object


def antichains(forest):
    """All totally disconnected vertex subsets of an OrderedForest.

    Includes the empty set (Lea empty) and the set of all roots (Roo
    empty); every subset appears exactly once.
    """
    verts = list(range(1, forest.n + 1))
    above = {v: forest.strictly_above(v) for v in verts}
    out = []

    def compatible(v, chosen):
        for w in chosen:
            if v in above[w] or w in above[v]:
                return False
        return True

    def extend(idx, chosen):
        if idx == len(verts):
            out.append(frozenset(chosen))
            return
        v = verts[idx]
        extend(idx + 1, chosen)
        if compatible(v, chosen):
            chosen.append(v)
            extend(idx + 1, chosen)
            chosen.pop()

    extend(0, [])
    return out


def lea_vertices(forest, vbar):
    """Vertices weakly above the antichain: the Lea part of the cut."""
    lea = set()
    for v in vbar:
        lea.add(v)
        lea |= forest.strictly_above(v)
    return lea


def ordered_cuts(forest):
    """Admissible cuts of an OrderedForest, parts standardized."""
    cuts = []
    all_vs = set(range(1, forest.n + 1))
    for vbar in antichains(forest):
        lea = lea_vertices(forest, vbar)
        roo = all_vs - lea
        cuts.append(Cut(vbar, forest.restrict(roo), forest.restrict(lea)))
    return cuts


def plain_cuts(forest):
    """Admissible cuts of a PlainForest, via an arbitrary heap lift.

    The lift only names the vertices; the resulting (Roo, Lea) multiset
    of plain parts does not depend on the choice.
    """
    lift = heap_order_lifts(forest)[0] if forest.n else EMPTY_ORDERED
    cuts = []
    all_vs = set(range(1, lift.n + 1))
    for vbar in antichains(lift):
        lea = lea_vertices(lift, vbar)
        roo = all_vs - lea
        cuts.append(Cut(vbar,
                        lift.restrict(roo).to_plain(),
                        lift.restrict(lea).to_plain()))
    return cuts


# ---------------------------------------------------------------------------
# Linear extensions and heap-order lifts
# ---------------------------------------------------------------------------

def linear_extensions(forest):
    """The forest-order-preserving symmetries S_F, as permutation words.

    sigma lists the vertices with every parent before its children, so
    sigma is in S_F iff whenever i is above j, i occurs later.  Output is
    in lexicographic word order.
    """
    n = forest.n
    out = []
    word = []
    placed = [False] * (n + 1)

    def step():
        if len(word) == n:
            out.append(Perm(word))
            return
        for v in range(1, n + 1):
            if placed[v]:
                continue
            p = forest.parent[v - 1]
            if p and not placed[p]:
                continue
            placed[v] = True
            word.append(v)
            step()
            word.pop()
            placed[v] = False

    step()
    return out


def extension_count(forest):
    """|S_F| by the subtree-size product formula, n!/prod |subtree(v)|."""
    n = forest.n
    total = 1
    for k in range(2, n + 1):
        total *= k
    for v in range(1, n + 1):
        total //= 1 + len(forest.strictly_above(v))
    return total


def heap_order_lifts(forest):
    """All heap orders on a PlainForest's concrete vertices.

    Returned as a list of OrderedForest, one per order assignment; when
    the forest has coinciding subtrees, distinct assignments can yield
    equal ordered objects, and both are listed.
    """
    # name concrete vertices by preorder over the canonical tree tuple
    nodes = []     # (parent index or 0, decoration)

    def walk(tree, par):
        idx = len(nodes) + 1
        nodes.append((par, tree.dec))
        for child in tree.children:
            walk(child, idx)

    for tree in forest.trees:
        walk(tree, 0)
    n = len(nodes)
    lifts = []
    order = [0] * (n + 1)      # node -> assigned order index; order[0] = 0

    def assign(step_no):
        if step_no > n:
            parent = [0] * n
            dec = [0] * n
            for node in range(1, n + 1):
                par, decv = nodes[node - 1]
                parent[order[node] - 1] = order[par] if par else 0
                dec[order[node] - 1] = decv
            lifts.append(OrderedForest(parent, dec))
            return
        for node in range(1, n + 1):
            par = nodes[node - 1][0]
            if order[node] == 0 and (par == 0 or order[par] != 0):
                order[node] = step_no
                assign(step_no + 1)
                order[node] = 0

    assign(1)
    return lifts


# ---------------------------------------------------------------------------
# Enumeration
# ---------------------------------------------------------------------------

def enumerate_heap_ordered(n, d=1):
    """All heap-ordered forests with n vertices and decorations in 1..d.

    parent(i) ranges over {0..i-1} independently, which is exactly the
    heap-order condition; for d = 1 this gives n! forests.
    """
    if n < 0:
        raise ValueError("n must be >= 0")
    out = []
    for parent in _iproduct(*[range(i) for i in range(1, n + 1)]):
        for dec in _iproduct(*[range(1, d + 1)] * n):
            out.append(OrderedForest(parent, dec))
    return out


def enumerate_ordered(n, d=1):
    """All ordered forests with n vertices and decorations in 1..d."""
    if n < 0:
        raise ValueError("n must be >= 0")
    out = []
    for parent in _iproduct(*[[p for p in range(n + 1) if p != i]
                              for i in range(1, n + 1)]):
        # acyclicity
        ok = True
        for i in range(1, n + 1):
            seen = set()
            v = i
            while v and ok:
                if v in seen:
                    ok = False
                seen.add(v)
                v = parent[v - 1]
        if not ok:
            continue
        for dec in _iproduct(*[range(1, d + 1)] * n):
            out.append(OrderedForest(parent, dec))
    return out


def enumerate_plain_trees(n, d=1):
    """All canonical decorated rooted trees with n vertices."""
    if n < 1:
        return []
    trees = []
    for dec in range(1, d + 1):
        for forest in enumerate_plain_forests(n - 1, d):
            trees.append(PlainTree(dec, forest.trees))
    return trees


def enumerate_plain_forests(n, d=1):
    """All canonical decorated rooted forests with n vertices."""
    if n < 0:
        raise ValueError("n must be >= 0")
    if n == 0:
        return [EMPTY_PLAIN]
    pool = []
    for k in range(1, n + 1):
        pool.extend(enumerate_plain_trees(k, d))
    pool.sort(key=lambda t: (t.n, t.key))
    out = []

    def pick(remaining, start, acc):
        if remaining == 0:
            out.append(PlainForest(acc))
            return
        for i in range(start, len(pool)):
            t = pool[i]
            if t.n <= remaining:
                acc.append(t)
                pick(remaining - t.n, i, acc)
                acc.pop()

    pick(n, 0, [])
    return out
