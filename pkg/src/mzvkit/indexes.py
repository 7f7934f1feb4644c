"""The formal Q-vector space on indices and its cyclic machinery.

An index is a tuple of positive ints.  ``IndexCombo`` is a finite
rational-linear combination of indices; summing a function over a combo
means extending it linearly, so overlapping rotations are counted with
multiplicity.  This module also builds the cyclic equivalence classes of
compositions, the signed comma/plus contraction sums (star expansion and
its inversion), the cyclic contraction sums ``s_m``, and exact verifiers
for the index-level identities used to reduce the cyclic sum formula of
the t-adic values to its star form.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from math import comb
from typing import Callable, Iterable, Iterator

Index = tuple[int, ...]


def check_index(k: Iterable[int]) -> Index:
    k = tuple(k)
    if any((not isinstance(p, int)) or p < 1 for p in k):
        raise ValueError(f"not an index: {k}")
    return k


class IndexCombo:
    """Sparse linear combination of indices with exact coefficients."""

    __slots__ = ("terms",)

    def __init__(self, terms: dict[Index, object] | None = None):
        self.terms = {k: c for k, c in (terms or {}).items() if c != 0}

    @classmethod
    def of(cls, k: Index, c=1) -> "IndexCombo":
        return cls({tuple(k): c})

    @classmethod
    def zero(cls) -> "IndexCombo":
        return cls({})

    def __add__(self, other: "IndexCombo") -> "IndexCombo":
        out = dict(self.terms)
        for k, c in other.terms.items():
            nc = out.get(k, 0) + c
            if nc:
                out[k] = nc
            else:
                out.pop(k, None)
        return IndexCombo(out)

    def __sub__(self, other: "IndexCombo") -> "IndexCombo":
        return self + (-1) * other

    def __rmul__(self, scalar) -> "IndexCombo":
        if scalar == 0:
            return IndexCombo.zero()
        return IndexCombo({k: scalar * c for k, c in self.terms.items()})

    def __neg__(self) -> "IndexCombo":
        return (-1) * self

    def __eq__(self, other) -> bool:
        return isinstance(other, IndexCombo) and self.terms == other.terms

    __hash__ = None

    def __bool__(self) -> bool:
        return bool(self.terms)

    def map_linear(self, f: Callable[[Index], "IndexCombo"]) -> "IndexCombo":
        """Linear extension: sum of c * f(k) over the combo's terms."""
        out = IndexCombo.zero()
        for k, c in self.terms.items():
            out = out + c * f(k)
        return out

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        keys = sorted(self.terms, key=lambda k: (sum(k), len(k), k))
        return "+".join(f"{self.terms[k]}*({','.join(map(str, k))})" for k in keys)

    def __repr__(self) -> str:
        return f"IndexCombo({self})"


def _contract(k: Index, plus_mask: int) -> Index:
    """Merge adjacent parts of k at the slots set in plus_mask (r-1 slots)."""
    out = [k[0]]
    for i in range(1, len(k)):
        if (plus_mask >> (i - 1)) & 1:
            out[-1] += k[i]
        else:
            out.append(k[i])
    return tuple(out)


def star_expand(k: Index) -> IndexCombo:
    """Sum of the 2^(r-1) comma/plus contractions of k; () expands to ()."""
    k = check_index(k)
    if not k:
        return IndexCombo.of(())
    out: dict[Index, int] = {}
    for mask in range(1 << (len(k) - 1)):
        idx = _contract(k, mask)
        out[idx] = out.get(idx, 0) + 1
    return IndexCombo(out)


def star_invert(k: Index) -> IndexCombo:
    """Signed contraction sum whose star expansion collapses back to k."""
    k = check_index(k)
    if not k:
        raise ValueError("star inversion needs a non-empty index")
    out: dict[Index, int] = {}
    for mask in range(1 << (len(k) - 1)):
        sign = -1 if mask.bit_count() & 1 else 1
        idx = _contract(k, mask)
        nc = out.get(idx, 0) + sign
        if nc:
            out[idx] = nc
        else:
            out.pop(idx, None)
    return IndexCombo(out)


def rotations(k: Index) -> Iterator[Index]:
    for i in range(len(k)):
        yield k[i:] + k[:i]


@dataclass(frozen=True)
class CyclicClass:
    """Rotation orbit of an index; members lists each distinct rotation once."""

    representative: Index
    members: tuple[Index, ...]

    @classmethod
    def of(cls, k: Index) -> "CyclicClass":
        k = check_index(k)
        rots = sorted(set(rotations(k)))
        return cls(representative=rots[0], members=tuple(rots))

    @property
    def depth(self) -> int:
        return len(self.representative)

    @property
    def weight(self) -> int:
        return sum(self.representative)

    def __str__(self) -> str:
        return f"[({','.join(map(str, self.representative))})]"


def weak_compositions_upto(total: int, parts: int) -> Iterator[tuple[int, ...]]:
    """All tuples of `parts` non-negative ints with sum <= total."""
    if parts == 0:
        yield ()
        return
    for first in range(total + 1):
        for rest in weak_compositions_upto(total - first, parts - 1):
            yield (first,) + rest


def compositions(k: int, r: int) -> Iterator[Index]:
    """All compositions of k into exactly r positive parts."""
    if r == 0:
        if k == 0:
            yield ()
        return
    for cut in itertools.combinations(range(1, k), r - 1):
        parts = []
        prev = 0
        for c in cut + (k,):
            parts.append(c - prev)
            prev = c
        yield tuple(parts)


def cyclic_classes(k: int, r: int) -> list[CyclicClass]:
    """Partition of the weight-k depth-r compositions into rotation classes."""
    if not (1 <= r <= k):
        raise ValueError(f"need 1 <= depth <= weight, got depth={r} weight={k}")
    seen: set[Index] = set()
    out: list[CyclicClass] = []
    for idx in compositions(k, r):
        if idx in seen:
            continue
        cls = CyclicClass.of(idx)
        seen.update(cls.members)
        out.append(cls)
    out.sort(key=lambda c: c.representative)
    return out


def _plus_masks(r: int, m: int) -> Iterator[tuple[int, ...]]:
    """All 0/1 vectors of length r with exactly m ones."""
    for ones in itertools.combinations(range(r), m):
        v = [0] * r
        for i in ones:
            v[i] = 1
        yield tuple(v)


def s_m(k: Index, m: int, policy: str = "first") -> IndexCombo:
    """Cyclic contraction sum: fill the r boxes of (k_1 [] ... k_r []) with
    exactly m pluses, cut the necklace at a comma box and read it off.

    Box i sits after k_i (box r wraps to k_1).  The cut position j is the
    first comma box under the default policy, the last under
    ``policy="last"``; sums that are later cyclically symmetrised do not
    depend on this choice.  Every resulting index has depth r - m.
    """
    k = check_index(k)
    r = len(k)
    if not k:
        raise ValueError("s_m needs a non-empty index")
    if not 0 <= m <= r - 1:
        raise ValueError(f"need 0 <= m <= depth-1, got m={m}")
    out: dict[Index, int] = {}
    for boxes in _plus_masks(r, m):
        commas = [j for j in range(r) if boxes[j] == 0]
        j = commas[0] if policy == "first" else commas[-1]
        # linear sequence after cutting at box j (0-based: box j follows k_{j+1})
        seq = k[j + 1 :] + k[: j + 1]
        seq_boxes = boxes[j + 1 :] + boxes[: j]  # boxes between consecutive entries
        idx = [seq[0]]
        for i in range(1, r):
            if seq_boxes[i - 1]:
                idx[-1] += seq[i]
            else:
                idx.append(seq[i])
        key = tuple(idx)
        out[key] = out.get(key, 0) + 1
    return IndexCombo(out)


def _rot(l: Index, i: int) -> Index:
    """(l_{i+1}, ..., l_s, l_1, ..., l_i) for 1 <= i <= s."""
    return l[i:] + l[:i]


@dataclass
class IdentityReport:
    """Outcome of one exact index-space identity check."""

    name: str
    index: Index
    params: dict
    equal: bool
    lhs: object
    rhs: object


def _cyclic_split_lhs(k: Index, j: int) -> IndexCombo:
    """Sum over i of (j+1+k_i, rot) + (j+1, k_i, rot) used on the plain side."""
    r = len(k)
    out = IndexCombo.zero()
    for i in range(1, r + 1):
        head = k[i:] + k[: i - 1]  # k_{i+1}, ..., k_r, k_1, ..., k_{i-1}
        out = out + IndexCombo.of((j + 1 + k[i - 1],) + head)
        out = out + IndexCombo.of((j + 1, k[i - 1]) + head)
    return out


def _star_over_sm(k: Index, f: Callable[[Index, int], IndexCombo]) -> IndexCombo:
    """Alternating sum over m and S_m(k) of the star-expanded image of f."""
    r = len(k)
    out = IndexCombo.zero()
    for m in range(r):
        sign = -1 if m & 1 else 1
        for l, mult in s_m(k, m).terms.items():
            out = out + (sign * mult) * f(l, r - m)
    return out


def cyclic_symmetrized_s_m(k: Index, m: int, policy: str = "first") -> IndexCombo:
    """Sum of all rotations of every index in s_m(k); this combination is
    independent of the cut policy."""
    out = IndexCombo.zero()
    for l, mult in s_m(k, m, policy).terms.items():
        for i in range(1, len(l) + 1):
            out = out + mult * IndexCombo.of(_rot(l, i))
    return out


def _lemma112_once(k: Index, m: int) -> tuple[IndexCombo, IndexCombo]:
    r = len(k)
    lhs = cyclic_symmetrized_s_m(k, m)
    rhs = IndexCombo.zero()
    for i in range(1, r + 1):
        rot = _rot(k, i)
        for mask in _plus_masks(r - 1, m):
            idx = [rot[0]]
            for s in range(1, r):
                if mask[s - 1]:
                    idx[-1] += rot[s]
                else:
                    idx.append(rot[s])
            rhs = rhs + IndexCombo.of(tuple(idx))
    return lhs, rhs


def verify_index_identity(
    name: str, k: Index, j: int = 0, m: int | None = None, t_order: int = 2
) -> IdentityReport:
    """Exact check of one of the index-space identities.

    ``lemma112``: the cyclic symmetrisation of s_m(k) equals the full
    rotation/contraction double sum (all m, or a single one if given).
    ``prop1`` .. ``prop3``: the three reduction identities between plain
    rotation sums and star-expanded s_m sums; prop1 takes j.
    ``csf_reduction``: the full cyclic-sum combination for the t-adic
    symbols equals the alternating s_m sum of its star form, as formal
    sums of (index, t-power) symbols truncated at t_order.
    """
    k = check_index(k)
    if not k:
        raise ValueError("identities need a non-empty index")
    r = len(k)

    if name == "lemma112":
        ms = [m] if m is not None else list(range(r))
        if any(not 0 <= mm <= r - 1 for mm in ms):
            raise ValueError(f"lemma112 needs 0 <= m <= {r - 1}")
        lhs = {}
        rhs = {}
        for mm in ms:
            lhs[mm], rhs[mm] = _lemma112_once(k, mm)
        return IdentityReport(name, k, {"m": m}, lhs == rhs, lhs, rhs)

    if name == "prop1":
        lhs = _cyclic_split_lhs(k, j)
        rhs = _star_over_sm(
            k,
            lambda l, s: sum(
                (star_expand((j + 1,) + _rot(l, i)) for i in range(1, s + 1)),
                IndexCombo.zero(),
            ),
        )
        return IdentityReport(name, k, {"j": j}, lhs == rhs, lhs, rhs)

    if name == "prop2":
        def inner(l: Index, s: int) -> IndexCombo:
            out = IndexCombo.zero()
            for i in range(1, s + 1):
                mid = l[i:] + l[: i - 1]
                for jj in range(l[i - 1]):
                    out = out + star_expand((jj + 1,) + mid + (l[i - 1] - jj,))
            return out

        lhs = _star_over_sm(k, inner)
        wt = sum(k)
        rhs = IndexCombo.zero()
        for i in range(1, r + 1):
            mid = k[i:] + k[: i - 1]
            for jj in range(k[i - 1]):
                rhs = rhs + IndexCombo.of((jj + 1,) + mid + (k[i - 1] - jj,))
        sign = -1 if r & 1 else 1
        rhs = rhs - (sign * wt) * star_expand((wt + 1,))
        return IdentityReport(name, k, {}, lhs == rhs, lhs, rhs)

    if name == "prop3":
        def inner(l: Index, s: int) -> IndexCombo:
            out = IndexCombo.zero()
            for i in range(1, s + 1):
                out = out + star_expand(_rot(l, i - 1) + (1,))
            return out

        lhs = _star_over_sm(k, inner)
        rhs = IndexCombo.zero()
        for i in range(1, r + 1):
            rhs = rhs + IndexCombo.of(_rot(k, i) + (1,))
            rhs = rhs + IndexCombo.of(k[i:] + k[: i - 1] + (k[i - 1] + 1,))
        return IdentityReport(name, k, {}, lhs == rhs, lhs, rhs)

    if name == "csf_reduction":
        lhs = _csf_symbols(k, t_order)
        rhs: dict = {}
        for m in range(r):
            sign = -1 if m & 1 else 1
            for l, mult in s_m(k, m).terms.items():
                _acc_scaled(rhs, _csf_star_symbols(l, sum(k), t_order), sign * mult)
        equal = lhs == rhs
        return IdentityReport(name, k, {"t_order": t_order}, equal, lhs, rhs)

    raise ValueError(f"unknown identity {name!r}")


def _acc_scaled(acc: dict, other: dict, c) -> None:
    for key, v in other.items():
        nv = acc.get(key, 0) + c * v
        if nv:
            acc[key] = nv
        else:
            acc.pop(key, None)


def _csf_symbols(k: Index, t_order: int) -> dict:
    """The cyclic-sum combination of plain t-adic symbols, as
    {(index, t-power): coeff}: inner splittings minus the two infinite
    rotation sums minus the shifted rotation sum."""
    r = len(k)
    out: dict = {}
    for i in range(1, r + 1):
        head = k[i:] + k[: i - 1]
        for j in range(k[i - 1] - 1):
            _acc_scaled(out, {((j + 1,) + head + (k[i - 1] - j,), 0): 1}, 1)
        for j in range(t_order + 1):
            _acc_scaled(out, {((k[i - 1] + j + 1,) + head, j): 1}, -1)
            _acc_scaled(out, {((j + 1,) + head + (k[i - 1],), j): 1}, -1)
        _acc_scaled(out, {(head + (k[i - 1] + 1,), 0): 1}, -1)
    return out


def _csf_star_symbols(l: Index, wt: int, t_order: int) -> dict:
    """Star form of the cyclic-sum combination for one index, expanded to
    plain symbols through the comma/plus contraction sum."""
    s = len(l)
    out: dict = {}

    def star(idx: Index, tpow: int, c: int) -> None:
        for kk, mult in star_expand(idx).terms.items():
            _acc_scaled(out, {(kk, tpow): mult}, c)

    for i in range(1, s + 1):
        mid = l[i:] + l[: i - 1]
        for j in range(l[i - 1] - 1):
            star((j + 1,) + mid + (l[i - 1] - j,), 0, 1)
        for j in range(t_order + 1):
            star((j + 1,) + mid + (l[i - 1],), j, -1)
    star((wt + 1,), 0, -wt)
    return out


def indices_up_to(max_weight: int, min_weight: int = 1) -> list[Index]:
    """All indices of the given weights, ordered by weight, depth, lex."""
    out: list[Index] = []
    for w in range(min_weight, max_weight + 1):
        for r in range(1, w + 1):
            out.extend(sorted(compositions(w, r)))
    return out


def all_cyclic_classes(max_weight: int) -> list[CyclicClass]:
    out: list[CyclicClass] = []
    for w in range(1, max_weight + 1):
        for r in range(1, w + 1):
            out.extend(cyclic_classes(w, r))
    return out
