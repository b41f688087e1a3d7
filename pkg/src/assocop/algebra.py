"""
Finitely supported linear combinations over the F and M bases.

A :class:`LinearCombo` carries a family tag ('S' permutations, 'Q' subsets,
'Y' trees) and a basis tag ('F' or 'M'); its terms map basis indices to exact
coefficients (ints, or Fractions where something divides).
"""
from __future__ import annotations

import json
import math
from fractions import Fraction
from typing import Iterable, Mapping

from . import combinatorics as cb
from .order import poset

FAMILIES = ("S", "Q", "Y")
BASES = ("F", "M")


def index_degree(family: str, index) -> int:
    if family == "S":
        return len(index)
    if family == "Q":
        return index.n
    if family == "Y":
        return cb.tree_degree(index)
    raise ValueError(f"unknown family {family!r}")


def sort_key(family: str, index):
    if family == "S":
        return (len(index), index)
    if family == "Q":
        return (index.n, index.members)
    return (cb.tree_degree(index), index)


def infer_family(index) -> str:
    if isinstance(index, cb.SubsetLabel):
        return "Q"
    if isinstance(index, tuple) and index and isinstance(index[0], int):
        return "S"
    if isinstance(index, tuple) and len(index) == 2:
        return "Y"
    raise ValueError(f"cannot tell the family of {index!r}")


class LinearCombo:
    __slots__ = ("family", "basis", "_terms")

    def __init__(self, family: str, basis: str, terms: Mapping | Iterable = ()):
        if family not in FAMILIES:
            raise ValueError(f"unknown family {family!r}")
        if basis not in BASES:
            raise ValueError(f"unknown basis {basis!r}")
        self.family = family
        self.basis = basis
        acc: dict = {}
        items = terms.items() if isinstance(terms, Mapping) else terms
        for idx, c in items:
            acc[idx] = acc.get(idx, 0) + c
        self._terms = {k: v for k, v in acc.items() if v != 0}

    @classmethod
    def single(cls, family: str, basis: str, index, coeff=1) -> LinearCombo:
        return cls(family, basis, {index: coeff})

    @classmethod
    def zero_like(cls, other: LinearCombo) -> LinearCombo:
        return cls(other.family, other.basis)

    def items(self):
        return self._terms.items()

    def sorted_items(self) -> list:
        return sorted(self._terms.items(), key=lambda kv: sort_key(self.family, kv[0]))

    def support(self) -> list:
        return [k for k, _ in self.sorted_items()]

    def coefficient_of(self, index):
        return self._terms.get(index, 0)

    def degrees(self) -> set[int]:
        return {index_degree(self.family, k) for k in self._terms}

    @property
    def degree(self) -> int | None:
        """The common degree of the support; None for the zero element."""
        ds = self.degrees()
        if not ds:
            return None
        if len(ds) > 1:
            raise ValueError(f"inhomogeneous combination with degrees {sorted(ds)}")
        return ds.pop()

    def _check_compatible(self, other: LinearCombo) -> None:
        if (self.family, self.basis) != (other.family, other.basis):
            raise ValueError(
                f"cannot mix {self.family}/{self.basis} with {other.family}/{other.basis}"
            )

    def __add__(self, other: LinearCombo) -> LinearCombo:
        if isinstance(other, int) and other == 0:
            return self
        self._check_compatible(other)
        out = dict(self._terms)
        for k, v in other.items():
            out[k] = out.get(k, 0) + v
        return LinearCombo(self.family, self.basis, out)

    __radd__ = __add__

    def __neg__(self) -> LinearCombo:
        return LinearCombo(self.family, self.basis, {k: -v for k, v in self.items()})

    def __sub__(self, other: LinearCombo) -> LinearCombo:
        return self + (-other)

    def __mul__(self, scalar) -> LinearCombo:
        if not isinstance(scalar, (int, Fraction)):
            return NotImplemented
        return LinearCombo(self.family, self.basis, {k: scalar * v for k, v in self.items()})

    __rmul__ = __mul__

    def __eq__(self, other) -> bool:
        if not isinstance(other, LinearCombo):
            return NotImplemented
        return (self.family, self.basis, self._terms) == (other.family, other.basis, other._terms)

    def __bool__(self):
        return bool(self._terms)

    def __len__(self):
        return len(self._terms)

    def __repr__(self):
        if not self._terms:
            return f"0[{self.family}/{self.basis}]"
        parts = []
        for k, c in self.sorted_items():
            label = f"{self.basis}_{format_index(self.family, k)}"
            parts.append(label if c == 1 else "-" + label if c == -1 else f"{c}*{label}")
        return " + ".join(parts).replace("+ -", "- ")


def F(index, family: str | None = None) -> LinearCombo:
    return LinearCombo.single(family or infer_family(index), "F", index)


def M(index, family: str | None = None) -> LinearCombo:
    return LinearCombo.single(family or infer_family(index), "M", index)


def format_index(family: str, index) -> str:
    if family == "S":
        return "(" + ",".join(map(str, index)) + ")"
    if family == "Q":
        return "{" + ",".join(map(str, index.members)) + "}"
    return cb.tree_to_str(index)


# -- basis change ------------------------------------------------------------

def to_m_basis(x: LinearCombo) -> LinearCombo:
    """F -> M: ``F_x = sum_{x <= y} M_y``."""
    if x.basis == "M":
        return x
    x.degree  # homogeneity check
    out: dict = {}
    for idx, c in x.items():
        P = poset(x.family, index_degree(x.family, idx))
        for y in P.up_set(idx):
            out[y] = out.get(y, 0) + c
    return LinearCombo(x.family, "M", out)


def to_f_basis(x: LinearCombo) -> LinearCombo:
    """M -> F: ``M_x = sum_{x <= y} mu(x, y) F_y``."""
    if x.basis == "F":
        return x
    x.degree
    out: dict = {}
    for idx, c in x.items():
        P = poset(x.family, index_degree(x.family, idx))
        for y, mu in P.mobius_row(idx).items():
            out[y] = out.get(y, 0) + c * mu
    return LinearCombo(x.family, "F", out)


def to_basis(x: LinearCombo, basis: str) -> LinearCombo:
    return to_m_basis(x) if basis == "M" else to_f_basis(x)


# -- group algebra -----------------------------------------------------------

def convolve(x: LinearCombo, y: LinearCombo) -> LinearCombo:
    """Product in Z[S_n], extending ``F_a * F_b = F_{a.b}`` bilinearly."""
    if x.family != "S" or y.family != "S":
        raise ValueError("convolution is defined on the permutation family")
    x, y = to_f_basis(x), to_f_basis(y)
    out: dict = {}
    for a, ca in x.items():
        for b, cb_ in y.items():
            ab = cb.group_product(a, b)
            out[ab] = out.get(ab, 0) + ca * cb_
    return LinearCombo("S", "F", out)


# -- JSON --------------------------------------------------------------------

def _index_to_json(family: str, index):
    if family == "S":
        return list(index)
    if family == "Q":
        return list(index.members)
    return cb.tree_to_str(index)


def _index_from_json(family: str, degree: int, value):
    if family == "S":
        return cb.check_permutation(value)
    if family == "Q":
        return cb.SubsetLabel(degree, tuple(value))
    return cb.parse_tree(value)


def _coeff_to_json(c):
    if isinstance(c, Fraction):
        return str(c) if c.denominator != 1 else c.numerator
    return c


def to_json(x: LinearCombo) -> dict:
    degs = x.degrees()
    return {
        "family": x.family,
        "basis": x.basis,
        "degree": degs.pop() if len(degs) == 1 else None,
        "terms": [{"index": _index_to_json(x.family, k), "coeff": _coeff_to_json(c)}
                  for k, c in x.sorted_items()],
    }


def from_json(data: dict) -> LinearCombo:
    family, basis, degree = data["family"], data["basis"], data.get("degree")
    terms = []
    for t in data["terms"]:
        c = t["coeff"]
        c = Fraction(c) if isinstance(c, str) else c
        if family == "Q" and degree is None:
            raise ValueError("subset combinations need an explicit degree")
        terms.append((_index_from_json(family, degree, t["index"]), c))
    x = LinearCombo(family, basis, terms)
    if degree is not None and x and x.degree != degree:
        raise ValueError(f"declared degree {degree} does not match the terms")
    return x


def dumps(x: LinearCombo) -> str:
    return json.dumps(to_json(x), sort_keys=True)


def loads(text: str) -> LinearCombo:
    return from_json(json.loads(text))


# -- exact span bookkeeping --------------------------------------------------

class EchelonBasis:
    """Integer row-reduced basis of a span of sparse vectors (dicts key -> int).

    Rows are kept primitive (content 1) and reduced at every other row's pivot,
    so membership is a single pass of eliminations.
    """

    def __init__(self, key=None):
        self.key = key or (lambda k: k)
        self.rows: dict = {}  # pivot -> row

    def __len__(self):
        return len(self.rows)

    @staticmethod
    def _primitive(v: dict) -> dict:
        g = 0
        for c in v.values():
            g = math.gcd(g, c)
        if g > 1:
            v = {k: c // g for k, c in v.items()}
        return v

    def reduce(self, vec: Mapping) -> dict:
        v = {k: c for k, c in vec.items() if c}
        for p, row in self.rows.items():
            c = v.get(p)
            if not c:
                continue
            rp = row[p]
            out = {k: rp * x for k, x in v.items()}
            for k, x in row.items():
                out[k] = out.get(k, 0) - c * x
            v = self._primitive({k: x for k, x in out.items() if x})
        return v

    def add(self, vec: Mapping) -> bool:
        """Insert vec; True if it enlarged the span."""
        v = self.reduce(vec)
        if not v:
            return False
        p = min(v, key=self.key)
        if v[p] < 0:
            v = {k: -x for k, x in v.items()}
        for q, row in list(self.rows.items()):
            c = row.get(p)
            if c:
                out = {k: v[p] * x for k, x in row.items()}
                for k, x in v.items():
                    out[k] = out.get(k, 0) - c * x
                self.rows[q] = self._primitive({k: x for k, x in out.items() if x})
        self.rows[p] = v
        return True

    def contains(self, vec: Mapping) -> bool:
        return not self.reduce(vec)


def rank(vectors: Iterable[Mapping], key=None) -> int:
    basis = EchelonBasis(key)
    for v in vectors:
        basis.add(v)
    return len(basis)
