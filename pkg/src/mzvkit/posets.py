"""Labeled 2-posets and the linear-extension word map.

A 2-poset is a finite strict partial order whose vertices carry a letter
from {x, y}.  ``w_map`` sends a poset to the sum over its linear
extensions of the word read off along the extension; it is the unique
algebra homomorphism into the shuffle algebra that is the plain word on
chains and splits non-comparable pairs.  The zig-zag posets built by
:func:`x_star` encode the star-value integrals: one y-rooted x-chain per
index entry, with the previous chain's root hung below the next chain's
top.

``w_map`` runs a DP over subsets: W(S) for a remaining vertex set S is
assembled from W(S - v) over the minimal vertices v of S, on dense
per-size word vectors, memoised on the subset bitmask.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from math import comb
from typing import Iterable, Sequence

import numpy as np

from .indexes import weak_compositions_upto
from .words import NcPoly

Index = tuple[int, ...]


class TwoPoset:
    """Immutable 2-poset: labels per vertex plus a strict order closure.

    ``below[v]`` is the bitmask of vertices strictly below v.  Relations
    passed to the constructor may be any generating set; the transitive
    closure is taken and cycles are rejected.
    """

    __slots__ = ("n", "labels", "below")

    def __init__(self, labels: Sequence[str], relations: Iterable[tuple[int, int]] = ()):
        if any(l not in ("x", "y") for l in labels):
            raise ValueError("labels must be 'x' or 'y'")
        self.n = len(labels)
        self.labels = tuple(labels)
        below = [0] * self.n
        for lo, hi in relations:
            below[hi] |= 1 << lo
        changed = True
        while changed:
            changed = False
            for v in range(self.n):
                acc = below[v]
                rest = acc
                while rest:
                    u = (rest & -rest).bit_length() - 1
                    rest &= rest - 1
                    acc |= below[u]
                if acc != below[v]:
                    below[v] = acc
                    changed = True
        for v in range(self.n):
            if (below[v] >> v) & 1:
                raise ValueError("relations contain a cycle")
        self.below = tuple(below)

    # -- structure ----------------------------------------------------

    def minimal(self) -> list[int]:
        return [v for v in range(self.n) if self.below[v] == 0]

    def maximal(self) -> list[int]:
        above = [False] * self.n
        for v in range(self.n):
            rest = self.below[v]
            while rest:
                u = (rest & -rest).bit_length() - 1
                rest &= rest - 1
                above[u] = True
        return [v for v in range(self.n) if not above[v]]

    def comparable(self, a: int, b: int) -> bool:
        return bool((self.below[a] >> b) & 1 or (self.below[b] >> a) & 1)

    def covers(self) -> list[tuple[int, int]]:
        """Cover pairs (u, v), u directly below v, in sorted order."""
        out = []
        for v in range(self.n):
            for u in range(self.n):
                if (self.below[v] >> u) & 1:
                    between = self.below[v] & ~self.below[u] & ~(1 << u)
                    strict = False
                    rest = between
                    while rest and not strict:
                        w = (rest & -rest).bit_length() - 1
                        rest &= rest - 1
                        strict = bool((self.below[w] >> u) & 1)
                    if not strict:
                        out.append((u, v))
        return sorted(out)

    def with_relation(self, lo: int, hi: int) -> "TwoPoset":
        rels = [(u, v) for v in range(self.n) for u in range(self.n) if (self.below[v] >> u) & 1]
        rels.append((lo, hi))
        return TwoPoset(self.labels, rels)

    def relabeled_union(self, other: "TwoPoset") -> "TwoPoset":
        rels = [(u, v) for v in range(self.n) for u in range(self.n) if (self.below[v] >> u) & 1]
        off = self.n
        rels += [
            (u + off, v + off)
            for v in range(other.n)
            for u in range(other.n)
            if (other.below[v] >> u) & 1
        ]
        return TwoPoset(self.labels + other.labels, rels)

    def describe(self) -> str:
        """Deterministic debug form: labels then cover pairs."""
        lab = "".join(self.labels)
        cov = ",".join(f"{u}<{v}" for u, v in self.covers())
        return f"[{lab}|{cov}]"

    def __repr__(self) -> str:
        return f"TwoPoset{self.describe()}"


def is_admissible(p: TwoPoset) -> bool:
    """True iff every maximal vertex is an x and every minimal one a y."""
    return all(p.labels[v] == "x" for v in p.maximal()) and all(
        p.labels[v] == "y" for v in p.minimal()
    )


def disjoint_union(p: TwoPoset, q: TwoPoset) -> TwoPoset:
    return p.relabeled_union(q)


_MAX_WMAP_VERTICES = 20  # linear-extension counts stay inside int64


def w_map(p: TwoPoset) -> NcPoly:
    """Sum over linear extensions of the read-off word."""
    n = p.n
    if n == 0:
        return NcPoly.one()
    if n > _MAX_WMAP_VERTICES:
        raise ValueError(f"poset too large for w_map ({n} vertices)")
    below = p.below
    ybit = [1 if l == "y" else 0 for l in p.labels]
    vbits = [1 << v for v in range(n)]
    memo: dict[int, np.ndarray] = {0: np.ones(1, dtype=np.int64)}

    def rec(S: int) -> np.ndarray:
        got = memo.get(S)
        if got is not None:
            return got
        m = S.bit_count()
        half = 1 << (m - 1)
        vec = np.zeros(2 * half, dtype=np.int64)
        rest = S
        while rest:
            v = (rest & -rest).bit_length() - 1
            rest &= rest - 1
            if below[v] & S:
                continue  # not minimal in S
            sub = rec(S & ~vbits[v])
            if ybit[v]:
                vec[half:] += sub
            else:
                vec[:half] += sub
        memo[S] = vec
        return vec

    vec = rec((1 << n) - 1)
    sentinel = 1 << n
    return NcPoly({sentinel | int(b): int(vec[b]) for b in np.flatnonzero(vec)})


def x_star(k: Index) -> TwoPoset:
    """Zig-zag poset of an index: per entry k_i a chain of one y below
    k_i - 1 x's, with the previous entry's y hung below this chain's top."""
    labels: list[str] = []
    rels: list[tuple[int, int]] = []
    tops: list[int] = []
    roots: list[int] = []
    for part in k:
        b = len(labels)
        labels.append("y")
        prev = b
        for _ in range(part - 1):
            c = len(labels)
            labels.append("x")
            rels.append((prev, c))
            prev = c
        roots.append(b)
        tops.append(prev)
    for i in range(1, len(k)):
        rels.append((roots[i - 1], tops[i]))
    return TwoPoset(labels, rels)


@dataclass
class PosetSeries:
    """Truncated power series in t with 2-poset combinations as coefficients.

    Posets are kept exactly as constructed (no isomorphism collapsing);
    downstream consumers compare their w_map images.
    """

    order: int
    coeffs: dict[int, list[tuple[object, TwoPoset]]]

    def w_image(self):
        """Coefficientwise w_map, as a tseries.WordSeries."""
        from .tseries import WordSeries

        out: dict[int, NcPoly] = {}
        for e, combos in self.coeffs.items():
            acc = NcPoly.zero()
            for c, poset in combos:
                acc = acc + c * w_map(poset)
            if acc:
                out[e] = acc
        return WordSeries(self.order, out)


def x_star_hat(k: Index, t_order: int) -> PosetSeries:
    """The two-sided poset combination behind the t-adic star values:
    alternating-sign prefix posets joined with binomially shifted reversed
    suffix posets, truncated at total t-power t_order."""
    if t_order < 0:
        raise ValueError("t_order must be >= 0")
    r = len(k)
    coeffs: dict[int, list[tuple[object, TwoPoset]]] = {}
    for i in range(r + 1):
        head = x_star(k[:i])
        suffix = k[i:]
        sign = -1 if sum(suffix) & 1 else 1
        for ls in weak_compositions_upto(t_order, len(suffix)):
            c = sign
            for kj, lj in zip(suffix, ls):
                c *= comb(kj + lj - 1, lj)
            shifted = tuple(kj + lj for kj, lj in zip(suffix, ls))[::-1]
            poset = disjoint_union(head, x_star(shifted))
            coeffs.setdefault(sum(ls), []).append((c, poset))
    return PosetSeries(t_order, coeffs)


def random_2poset(rng: random.Random, n_min: int = 1, n_max: int = 8, admissible: bool = False) -> TwoPoset:
    """Random 2-poset; with admissible=True, labels are forced so that
    maxima are x and minima are y (resampling when a vertex is isolated)."""
    for _ in range(1000):
        n = rng.randint(n_min, n_max)
        rels = [(i, j) for i in range(n) for j in range(i + 1, n) if rng.random() < 0.45]
        p = TwoPoset(["x"] * n, rels)
        mins, maxs = set(p.minimal()), set(p.maximal())
        if admissible and (mins & maxs):
            continue  # an isolated vertex cannot satisfy both constraints
        labels = []
        for v in range(n):
            if admissible and v in maxs:
                labels.append("x")
            elif admissible and v in mins:
                labels.append("y")
            else:
                labels.append("y" if rng.random() < 0.5 else "x")
        return TwoPoset(labels, rels)
    raise RuntimeError("could not sample an admissible poset")
