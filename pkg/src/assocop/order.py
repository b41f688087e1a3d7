"""
Finite posets: weak order on S_n, Boolean poset Q_n, Tamari order on Y_n.

Every poset here is stored through an order embedding into a Boolean lattice:
each element gets an int bitmask ``code`` and ``x <= y`` iff
``code(x) & ~code(y) == 0``.  For the weak order the code is the inversion
set, for Q_n the subset itself, and for Y_n the down-set computed from
rotation covers.  Strict containment raises the popcount, so sorting by
popcount gives a linear extension for free.
"""
from __future__ import annotations

import json
import os
import threading
from typing import Callable, Hashable, Sequence

from . import combinatorics as cb
from .config import LIMITS


class IncomparableError(ValueError):
    pass


class FinitePoset:
    def __init__(self, name: str, elements: Sequence[Hashable], codes: Sequence[int],
                 label: Callable[[Hashable], str] = str):
        self.name = name
        self.elements = list(elements)
        self.codes = list(codes)
        self.label = label
        self.index = {x: k for k, x in enumerate(self.elements)}
        self._rank = [c.bit_count() for c in self.codes]
        self._up: dict[int, int] = {}
        self._down: dict[int, int] = {}
        self._mobius: dict[int, dict[int, int]] = {}
        self._lock = threading.Lock()

    def __len__(self):
        return len(self.elements)

    def __contains__(self, x):
        return x in self.index

    def __repr__(self):
        return f"<FinitePoset {self.name} with {len(self)} elements>"

    def _idx(self, x) -> int:
        try:
            return self.index[x]
        except KeyError:
            raise ValueError(f"{x!r} is not an element of {self.name}") from None

    def leq(self, x, y) -> bool:
        cx, cy = self.codes[self._idx(x)], self.codes[self._idx(y)]
        return cx & ~cy == 0

    def lt(self, x, y) -> bool:
        return x != y and self.leq(x, y)

    # up/down sets as bitmasks over element indices

    def up_mask(self, x) -> int:
        k = self._idx(x)
        mask = self._up.get(k)
        if mask is None:
            cx = self.codes[k]
            mask = 0
            for j, c in enumerate(self.codes):
                if cx & ~c == 0:
                    mask |= 1 << j
            self._up[k] = mask
        return mask

    def down_mask(self, y) -> int:
        k = self._idx(y)
        mask = self._down.get(k)
        if mask is None:
            cy = self.codes[k]
            mask = 0
            for j, c in enumerate(self.codes):
                if c & ~cy == 0:
                    mask |= 1 << j
            self._down[k] = mask
        return mask

    def _from_mask(self, mask: int) -> list:
        out = []
        j = 0
        while mask:
            if mask & 1:
                out.append(self.elements[j])
            mask >>= 1
            j += 1
        return out

    def up_set(self, x) -> list:
        return self._from_mask(self.up_mask(x))

    def down_set(self, y) -> list:
        return self._from_mask(self.down_mask(y))

    def interval(self, x, y) -> list:
        if not self.leq(x, y):
            raise IncomparableError(f"{x!r} is not <= {y!r} in {self.name}")
        return self._from_mask(self.up_mask(x) & self.down_mask(y))

    # Moebius function

    def mobius_row(self, x) -> dict:
        """Nonzero values ``mu(x, y)``, keyed by y, from the defining recursion."""
        k = self._idx(x)
        row = self._mobius.get(k)
        if row is None:
            row = self._compute_row(k)
            with self._lock:
                self._mobius.setdefault(k, row)
        return {self.elements[j]: v for j, v in row.items()}

    def _compute_row(self, k: int) -> dict[int, int]:
        up = self.up_mask(self.elements[k])
        members = [j for j in range(len(self.elements)) if up >> j & 1]
        members.sort(key=lambda j: self._rank[j])
        codes = self.codes
        nonzero: list[tuple[int, int]] = []
        for y in members:
            if y == k:
                nonzero.append((y, 1))
                continue
            cy = codes[y]
            # sum of mu(x, z) over x <= z < y; z == y never appears here yet
            total = sum(v for z, v in nonzero if codes[z] & ~cy == 0)
            if total:
                nonzero.append((y, -total))
        return dict(nonzero)

    def mobius(self, x, y) -> int:
        if not self.leq(x, y):
            raise IncomparableError(f"{x!r} is not <= {y!r} in {self.name}")
        return self.mobius_row(x).get(y, 0)

    def hasse_covers(self) -> list[tuple]:
        """Covering pairs (x, y), x < y with nothing strictly between."""
        edges = []
        for k, x in enumerate(self.elements):
            strict = self.up_mask(x) & ~(1 << k)
            above = 0
            rest = strict
            j = 0
            while rest:
                if rest & 1:
                    above |= self.up_mask(self.elements[j]) & ~(1 << j)
                rest >>= 1
                j += 1
            edges.extend((x, y) for y in self._from_mask(strict & ~above))
        return edges

    # serialization of computed Moebius rows

    def export_mobius(self) -> dict:
        return {
            "poset": self.name,
            "size": len(self),
            "rows": {str(k): sorted(row.items()) for k, row in sorted(self._mobius.items())},
        }

    def import_mobius(self, data: dict) -> None:
        if data.get("poset") != self.name or data.get("size") != len(self):
            raise ValueError(f"table is for {data.get('poset')}, not {self.name}")
        with self._lock:
            for k, row in data["rows"].items():
                self._mobius.setdefault(int(k), {int(j): int(v) for j, v in row})


# -- concrete orders ---------------------------------------------------------

def weak_leq(sigma, tau) -> bool:
    if len(sigma) != len(tau):
        raise ValueError(f"degree mismatch: {len(sigma)} vs {len(tau)}")
    return cb.inversion_mask(sigma) & ~cb.inversion_mask(tau) == 0


def boolean_leq(s: cb.SubsetLabel, t: cb.SubsetLabel) -> bool:
    if s.n != t.n:
        raise ValueError(f"degree mismatch: {s.n} vs {t.n}")
    return s.mask & ~t.mask == 0


def tamari_leq(s, t) -> bool:
    n = cb.tree_degree(s)
    if n != cb.tree_degree(t):
        raise ValueError("degree mismatch between trees")
    return tamari_order(n).leq(s, t)


def right_rotations(t) -> list:
    """Trees one right rotation ``((a, b), c) -> (a, (b, c))`` above t."""
    if t == cb.LEAF:
        return []
    left, right = t
    out = []
    if left != cb.LEAF:
        a, b = left
        out.append((a, (b, right)))
    out.extend((l2, right) for l2 in right_rotations(left))
    out.extend((left, r2) for r2 in right_rotations(right))
    return out


def _tamari_codes(elements) -> list[int]:
    index = {t: k for k, t in enumerate(elements)}
    up: list[int] = [0] * len(elements)
    for k, t in enumerate(elements):
        seen = {k}
        stack = [t]
        while stack:
            for s in right_rotations(stack.pop()):
                j = index[s]
                if j not in seen:
                    seen.add(j)
                    stack.append(s)
        up[k] = sum(1 << j for j in seen)
    down = [0] * len(elements)
    for k, mask in enumerate(up):
        for j in range(len(elements)):
            if mask >> j & 1:
                down[j] |= 1 << k
    return down


_POSETS: dict[tuple[str, int], FinitePoset] = {}
_POSET_LOCK = threading.Lock()


def _build(family: str, n: int) -> FinitePoset:
    if family == "S":
        els = cb.permutations(n)
        return FinitePoset(f"S{n}", els, [cb.inversion_mask(s) for s in els],
                           label=lambda s: "".join(map(str, s)) if n < 10 else ",".join(map(str, s)))
    if family == "Q":
        els = cb.subsets(n)
        return FinitePoset(f"Q{n}", els, [s.mask for s in els],
                           label=lambda s: "{" + ",".join(map(str, s.members)) + "}")
    if family == "Y":
        els = list(cb.trees(n))
        return FinitePoset(f"Y{n}", els, _tamari_codes(els), label=cb.tree_to_str)
    raise ValueError(f"unknown family {family!r}")


def poset(family: str, n: int) -> FinitePoset:
    """The cached order for a family ('S' weak, 'Q' Boolean, 'Y' Tamari) and degree."""
    key = (family, n)
    P = _POSETS.get(key)
    if P is not None:
        return P
    LIMITS.check(n)
    with _POSET_LOCK:
        P = _POSETS.get(key)
        if P is None:
            P = _build(family, n)
            _load_cached_table(P)
            _POSETS[key] = P
    return P


def weak_order(n: int) -> FinitePoset:
    return poset("S", n)


def boolean_order(n: int) -> FinitePoset:
    return poset("Q", n)


def tamari_order(n: int) -> FinitePoset:
    return poset("Y", n)


def _table_path(P: FinitePoset) -> str | None:
    if not LIMITS.cache_dir:
        return None
    return os.path.join(LIMITS.cache_dir, f"mobius-{P.name}.json")


def _load_cached_table(P: FinitePoset) -> None:
    path = _table_path(P)
    if path and os.path.exists(path):
        with open(path) as fh:
            P.import_mobius(json.load(fh))


def save_cached_tables() -> list[str]:
    """Write every computed Moebius table into the cache directory."""
    written = []
    for P in list(_POSETS.values()):
        path = _table_path(P)
        if path is None or not P._mobius:
            continue
        os.makedirs(os.path.dirname(path), exist_ok=True)
        with open(path, "w") as fh:
            json.dump(P.export_mobius(), fh)
        written.append(path)
    return written
