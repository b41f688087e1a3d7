"""
Permutations, planar binary trees and subsets of [n-1].

Permutations are plain tuples in one-line notation, ``sigma[k-1]`` being the
value at position ``k``.  Positions and values are 1-based throughout, matching
the usual conventions for S_n.  Trees are nested tuples: ``LEAF == ()`` is the
tree with one leaf and no internal node, and ``(left, right)`` is the grafting
of two trees under a new root.
"""
from __future__ import annotations

import functools
import itertools
from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

Permutation = tuple  # tuple[int, ...]
Tree = tuple  # () or (Tree, Tree)

LEAF: Tree = ()
Y: Tree = (LEAF, LEAF)


class InvalidInput(ValueError):
    pass


# -- permutations ------------------------------------------------------------

def check_permutation(values: Iterable[int]) -> Permutation:
    """
    Validate one-line notation and return it as a tuple.

    >>> check_permutation([2, 3, 1])
    (2, 3, 1)
    """
    values = tuple(values)
    if sorted(values) != list(range(1, len(values) + 1)):
        raise InvalidInput(f"{values} is not a permutation of [{len(values)}]")
    return values


def identity(n: int) -> Permutation:
    return tuple(range(1, n + 1))


def permutations(n: int) -> list[Permutation]:
    """All of S_n in lexicographic order of one-line notation."""
    return list(itertools.permutations(range(1, n + 1)))


@functools.lru_cache(maxsize=None)
def inverse(sigma: Permutation) -> Permutation:
    inv = [0] * len(sigma)
    for pos, val in enumerate(sigma, 1):
        inv[val - 1] = pos
    return tuple(inv)


def standardize(a: Sequence[int]) -> Permutation:
    """
    The permutation order-isomorphic to a sequence of distinct integers.

    >>> standardize((5, 11, 2, 4))
    (3, 4, 1, 2)
    """
    a = tuple(a)
    if len(set(a)) != len(a):
        raise InvalidInput(f"standardize needs distinct entries, got {a}")
    rank = {v: r for r, v in enumerate(sorted(a), 1)}
    return tuple(rank[v] for v in a)


def realize(pattern: Sequence[int], values: Iterable[int]) -> tuple[int, ...]:
    """Inverse of standardization: the sequence with underlying set ``values``
    whose standardization is ``pattern``."""
    ordered = sorted(values)
    if len(ordered) != len(pattern):
        raise InvalidInput("pattern and value set differ in size")
    return tuple(ordered[p - 1] for p in pattern)


def inversion_set(sigma: Permutation) -> frozenset[tuple[int, int]]:
    n = len(sigma)
    return frozenset(
        (i + 1, j + 1)
        for i in range(n) for j in range(i + 1, n)
        if sigma[i] > sigma[j]
    )


@functools.lru_cache(maxsize=None)
def inversion_mask(sigma: Permutation) -> int:
    """Inversion set packed into an int, one bit per position pair."""
    n = len(sigma)
    mask = 0
    bit = 0
    for i in range(n):
        si = sigma[i]
        for j in range(i + 1, n):
            if si > sigma[j]:
                mask |= 1 << bit
            bit += 1
    return mask


def group_product(a: Permutation, b: Permutation) -> Permutation:
    """Composition ``(a.b)(k) = a(b(k))``."""
    if len(a) != len(b):
        raise InvalidInput(f"degree mismatch: {len(a)} vs {len(b)}")
    return tuple(a[v - 1] for v in b)


def descents(sigma: Permutation) -> SubsetLabel:
    n = len(sigma)
    return SubsetLabel(n, tuple(p for p in range(1, n) if sigma[p - 1] > sigma[p]))


def global_descents(sigma: Permutation) -> SubsetLabel:
    # p is global iff min of the prefix exceeds max of the suffix, i.e. the
    # prefix of length p holds exactly the values n-p+1..n
    n = len(sigma)
    out = []
    low = n + 1
    for p in range(1, n):
        low = min(low, sigma[p - 1])
        if low == n - p + 1:
            out.append(p)
    return SubsetLabel(n, tuple(out))


def is_closed(sigma: Permutation) -> bool:
    return descents(sigma) == global_descents(sigma)


def is_132_avoiding(sigma: Permutation) -> bool:
    n = len(sigma)
    # for each middle position j, look for a smaller value before it and a
    # value strictly between them after it
    for j in range(1, n - 1):
        low = min(sigma[:j])
        if low > sigma[j]:
            continue
        if any(low < sigma[k] < sigma[j] for k in range(j + 1, n)):
            return False
    return True


def is_eventual_identity(sigma: Permutation) -> bool:
    """True iff sigma ends with the block 1, 2, ..., k for some k >= 1."""
    if not sigma:
        return False
    p = sigma.index(1)
    return sigma[p:] == tuple(range(1, len(sigma) - p + 1))


def over(sigma: Permutation, tau: Permutation) -> Permutation:
    """``sigma/tau``: tau shifted up and placed to the right of sigma."""
    n = len(sigma)
    return tuple(sigma) + tuple(t + n for t in tau)


def under(sigma: Permutation, tau: Permutation) -> Permutation:
    """``sigma\\tau``: sigma shifted up, followed by tau."""
    m = len(tau)
    return tuple(s + m for s in sigma) + tuple(tau)


def shuffles(n: int, m: int) -> list[Permutation]:
    """The (n, m)-shuffles, increasing on positions 1..n and n+1..n+m."""
    out = []
    for first in itertools.combinations(range(1, n + m + 1), n):
        rest = tuple(v for v in range(1, n + m + 1) if v not in first)
        out.append(first + rest)
    return sorted(out)


def z_max(n: int, m: int) -> Permutation:
    return under(identity(n), identity(m))


# -- subsets, compositions, binary strings -----------------------------------

@dataclass(frozen=True, order=True)
class SubsetLabel:
    """A subset of [n-1], remembered together with n."""

    n: int
    members: tuple[int, ...] = ()

    def __post_init__(self):
        members = tuple(sorted(set(self.members)))
        if self.n < 1:
            raise InvalidInput(f"degree must be positive, got {self.n}")
        if any(not 1 <= s <= self.n - 1 for s in members):
            raise InvalidInput(f"{members} is not a subset of [{self.n - 1}]")
        object.__setattr__(self, "members", members)

    def __len__(self):
        return len(self.members)

    def __iter__(self):
        return iter(self.members)

    def __contains__(self, item):
        return item in self.members

    @property
    def mask(self) -> int:
        return sum(1 << (s - 1) for s in self.members)

    def issubset(self, other: SubsetLabel) -> bool:
        return self.n == other.n and set(self.members) <= set(other.members)

    def __repr__(self):
        return f"SubsetLabel({self.n}, {set(self.members) or '{}'})"


def subsets(n: int) -> list[SubsetLabel]:
    """All subsets of [n-1], sorted by member tuple."""
    pool = range(1, n)
    out = [SubsetLabel(n, c) for k in range(n) for c in itertools.combinations(pool, k)]
    return sorted(out)


def subset_to_composition(s: SubsetLabel) -> tuple[int, ...]:
    """
    >>> subset_to_composition(SubsetLabel(4, (2, 3)))
    (2, 1, 1)
    """
    cuts = (0,) + s.members + (s.n,)
    return tuple(b - a for a, b in zip(cuts, cuts[1:]))


def composition_to_subset(alpha: Sequence[int]) -> SubsetLabel:
    alpha = tuple(alpha)
    if not alpha or any(a < 1 for a in alpha):
        raise InvalidInput(f"{alpha} is not a composition")
    partial = tuple(itertools.accumulate(alpha))
    return SubsetLabel(partial[-1], partial[:-1])


def subset_to_binary(s: SubsetLabel) -> str:
    return "".join("+" if k in s.members else "-" for k in range(1, s.n))


def binary_to_subset(bits: str) -> SubsetLabel:
    if any(c not in "+-" for c in bits):
        raise InvalidInput(f"binary strings use '+' and '-', got {bits!r}")
    return SubsetLabel(len(bits) + 1, tuple(k for k, c in enumerate(bits, 1) if c == "+"))


# -- planar binary trees -----------------------------------------------------

def node(left: Tree, right: Tree) -> Tree:
    return (left, right)


@functools.lru_cache(maxsize=None)
def tree_degree(t: Tree) -> int:
    if t == LEAF:
        return 0
    return tree_degree(t[0]) + tree_degree(t[1]) + 1


@functools.lru_cache(maxsize=None)
def trees(n: int) -> tuple[Tree, ...]:
    """All trees with n internal nodes, ordered recursively left to right."""
    if n == 0:
        return (LEAF,)
    out = []
    for p in range(n):
        for left in trees(p):
            for right in trees(n - 1 - p):
                out.append((left, right))
    return tuple(out)


def graft(s: Tree, t: Tree) -> Tree:
    """``s v t``: a new root with s on the left and t on the right."""
    return (s, t)


def over_tree(s: Tree, t: Tree) -> Tree:
    """``s/t``: the root of s glued onto the leftmost leaf of t."""
    if t == LEAF:
        return s
    return (over_tree(s, t[0]), t[1])


def under_tree(s: Tree, t: Tree) -> Tree:
    """``s\\t``: the root of t glued onto the rightmost leaf of s."""
    if s == LEAF:
        return t
    return (s[0], under_tree(s[1], t))


@functools.lru_cache(maxsize=None)
def lambda_tree(sigma: Permutation) -> Tree:
    """Split at the position of the maximum, recurse on both sides."""
    if not sigma:
        return LEAF
    j = sigma.index(len(sigma))
    left = lambda_tree(standardize(sigma[:j])) if j else LEAF
    right = lambda_tree(standardize(sigma[j + 1:])) if j + 1 < len(sigma) else LEAF
    return (left, right)


def _leaf_sides(t: Tree, side: str, out: list) -> None:
    if t == LEAF:
        out.append(side)
        return
    _leaf_sides(t[0], "L", out)
    _leaf_sides(t[1], "R", out)


def leaf_label_set(t: Tree) -> SubsetLabel:
    """
    Labels of the interior leaves that are left children.

    Leaves are read left to right; the two outermost ones are skipped and the
    rest get labels 1..n-1.

    >>> leaf_label_set(lambda_tree((2, 1)))
    SubsetLabel(2, {1})
    """
    n = tree_degree(t)
    if n < 1:
        raise InvalidInput("leaf labels need a tree of degree >= 1")
    sides: list[str] = []
    _leaf_sides(t, "L", sides)
    return SubsetLabel(n, tuple(k for k in range(1, n) if sides[k] == "L"))


def tree_to_str(t: Tree) -> str:
    """
    >>> tree_to_str(((), ((), ())))
    '(o (o o))'
    """
    if t == LEAF:
        return "o"
    return f"({tree_to_str(t[0])} {tree_to_str(t[1])})"


def parse_tree(text: str) -> Tree:
    tokens = text.replace("(", " ( ").replace(")", " ) ").split()
    pos = 0

    def parse() -> Tree:
        nonlocal pos
        if pos >= len(tokens):
            raise InvalidInput(f"truncated tree {text!r}")
        tok = tokens[pos]
        pos += 1
        if tok == "o":
            return LEAF
        if tok != "(":
            raise InvalidInput(f"unexpected token {tok!r} in {text!r}")
        left = parse()
        right = parse()
        if pos >= len(tokens) or tokens[pos] != ")":
            raise InvalidInput(f"expected ')' in {text!r}")
        pos += 1
        return (left, right)

    t = parse()
    if pos != len(tokens):
        raise InvalidInput(f"trailing input in {text!r}")
    return t


# -- words -------------------------------------------------------------------

Word = tuple  # tuple[int, ...] of letter indices


def act_on_word(x, word: Sequence[int]) -> dict[Word, int]:
    """
    Left action of the group algebra on tensor monomials,
    ``F_sigma . v_1...v_n = v_{sigma^-1(1)} ... v_{sigma^-1(n)}``.

    ``x`` is anything with ``items()`` yielding (permutation, coefficient).
    """
    word = tuple(word)
    out: dict[Word, int] = {}
    for sigma, c in x.items():
        if len(sigma) != len(word):
            raise InvalidInput(f"degree mismatch: {len(sigma)} vs word of length {len(word)}")
        w = tuple(word[k - 1] for k in inverse(sigma))
        out[w] = out.get(w, 0) + c
    return {w: c for w, c in out.items() if c}


def iter_pairs(max_total: int, min_degree: int = 1) -> Iterator[tuple[int, int, int]]:
    """(n, m, i) with n, m >= min_degree, n + m - 1 <= max_total, 1 <= i <= n."""
    for total in range(1, max_total + 1):
        for n in range(min_degree, total + 1):
            m = total + 1 - n
            if m < min_degree:
                continue
            for i in range(1, n + 1):
                yield n, m, i
