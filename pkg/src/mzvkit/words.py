"""Words over the two-letter alphabet {x, y} and the two products on them.

A word is packed into a single int: letters are read most-significant-bit
first with x = 0 and y = 1, behind a sentinel 1 bit that fixes the length.
So the empty word is ``1``, "x" is ``0b10``, "y" is ``0b11`` and "yxx" is
``0b1100``.  Two properties make this encoding convenient:

* ints are cheap dict keys, which is what a sparse polynomial needs;
* sorting keys numerically sorts words by weight and then
  lexicographically with x < y, the display order used everywhere.

``NcPoly`` is a finite rational-linear combination of words.  The span of
words that are empty or start with y is called H1 here, and H0 is the
subspace of words that also end with x; H0 words are exactly the images of
admissible indices under :func:`word_of_index`.

The shuffle product is computed by a vectorised interleaving DP working on
dense per-weight coefficient vectors (see :func:`_shuffle_dense`); the
harmonic (quasi-shuffle) product works on the z-word factorisation, i.e.
on index tuples.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import comb
from typing import Iterator

import numpy as np

X = 0
Y = 1
EMPTY_WORD = 1


def word(s: str) -> int:
    """Parse a string over {x, y} into a packed word."""
    w = 1
    for ch in s:
        if ch == "x":
            w = w << 1
        elif ch == "y":
            w = (w << 1) | 1
        else:
            raise ValueError(f"invalid letter {ch!r} in word {s!r}")
    return w


def word_str(w: int) -> str:
    """Inverse of :func:`word`; the empty word prints as ''."""
    n = weight(w)
    return "".join("y" if (w >> (n - 1 - i)) & 1 else "x" for i in range(n))


def weight(w: int) -> int:
    return w.bit_length() - 1


def concat(a: int, b: int) -> int:
    nb = weight(b)
    return (a << nb) | (b ^ (1 << nb))


def letters(w: int) -> Iterator[int]:
    n = weight(w)
    for i in range(n - 1, -1, -1):
        yield (w >> i) & 1


def first_letter(w: int) -> int:
    return (w >> (weight(w) - 1)) & 1


def in_h1(w: int) -> bool:
    return w == EMPTY_WORD or first_letter(w) == Y


def in_h0(w: int) -> bool:
    return w == EMPTY_WORD or (first_letter(w) == Y and (w & 1) == X)


def z_word(k: int) -> int:
    """The word z_k = y x^(k-1), packed."""
    if k < 1:
        raise ValueError("z_k needs k >= 1")
    return 3 << (k - 1)


def word_of_index(k: tuple[int, ...]) -> int:
    """z_{k_1} ... z_{k_r}; the empty index gives the empty word."""
    w = EMPTY_WORD
    for part in k:
        w = concat(w, z_word(part))
    return w


def index_of_word(w: int) -> tuple[int, ...]:
    """The unique index whose z-word is w.  Raises for words outside H1."""
    if w == EMPTY_WORD:
        return ()
    if first_letter(w) != Y:
        raise ValueError(f"word {word_str(w)!r} starts with x, not in H1")
    parts: list[int] = []
    for bit in letters(w):
        if bit == Y:
            parts.append(1)
        else:
            parts[-1] += 1
    return tuple(parts)


class NcPoly:
    """Sparse noncommutative polynomial: dict word -> nonzero coefficient.

    Coefficients are ints or Fractions.  Instances are treated as
    immutable; all operations build new objects.  ``p * q`` is the
    concatenation product of the free algebra, ``c * p`` rescales.
    """

    __slots__ = ("terms",)

    def __init__(self, terms: dict | None = None):
        self.terms = {w: c for w, c in (terms or {}).items() if c != 0}

    # -- constructors ------------------------------------------------

    @classmethod
    def zero(cls) -> "NcPoly":
        return cls({})

    @classmethod
    def one(cls) -> "NcPoly":
        return cls({EMPTY_WORD: 1})

    @classmethod
    def from_word(cls, w: int, c=1) -> "NcPoly":
        return cls({w: c})

    @classmethod
    def from_str(cls, s: str, c=1) -> "NcPoly":
        return cls({word(s): c})

    @classmethod
    def from_index(cls, k: tuple[int, ...], c=1) -> "NcPoly":
        return cls({word_of_index(k): c})

    # -- ring structure ----------------------------------------------

    def __add__(self, other: "NcPoly") -> "NcPoly":
        out = dict(self.terms)
        for w, c in other.terms.items():
            nc = out.get(w, 0) + c
            if nc:
                out[w] = nc
            else:
                out.pop(w, None)
        return NcPoly.__new_raw(out)

    def __sub__(self, other: "NcPoly") -> "NcPoly":
        out = dict(self.terms)
        for w, c in other.terms.items():
            nc = out.get(w, 0) - c
            if nc:
                out[w] = nc
            else:
                out.pop(w, None)
        return NcPoly.__new_raw(out)

    def __neg__(self) -> "NcPoly":
        return NcPoly.__new_raw({w: -c for w, c in self.terms.items()})

    def __rmul__(self, scalar) -> "NcPoly":
        if scalar == 0:
            return NcPoly.zero()
        return NcPoly.__new_raw({w: scalar * c for w, c in self.terms.items()})

    def __mul__(self, other) -> "NcPoly":
        if not isinstance(other, NcPoly):
            return self.__rmul__(other)
        out: dict = {}
        for wa, ca in self.terms.items():
            for wb, cb in other.terms.items():
                w = concat(wa, wb)
                nc = out.get(w, 0) + ca * cb
                if nc:
                    out[w] = nc
                else:
                    out.pop(w, None)
        return NcPoly.__new_raw(out)

    def __truediv__(self, scalar) -> "NcPoly":
        return self.__rmul__(Fraction(1) / scalar)

    def __eq__(self, other) -> bool:
        return isinstance(other, NcPoly) and self.terms == other.terms

    __hash__ = None  # mutable dict inside

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __len__(self) -> int:
        return len(self.terms)

    # -- inspection --------------------------------------------------

    def is_h1(self) -> bool:
        return all(in_h1(w) for w in self.terms)

    def is_h0(self) -> bool:
        return all(in_h0(w) for w in self.terms)

    def max_weight(self) -> int:
        return max((weight(w) for w in self.terms), default=0)

    def homogeneous_parts(self) -> dict[int, dict]:
        """Split into weight -> {bits-without-sentinel: coeff}."""
        parts: dict[int, dict] = {}
        for w, c in self.terms.items():
            n = weight(w)
            parts.setdefault(n, {})[w ^ (1 << n)] = c
        return parts

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        bits = []
        for w in sorted(self.terms):
            c = self.terms[w]
            s = word_str(w) or "1"
            if c == 1:
                term = s
            elif c == -1:
                term = f"-{s}"
            else:
                term = f"{c}*{s}"
            bits.append(term)
        out = bits[0]
        for term in bits[1:]:
            out += f" - {term[1:]}" if term.startswith("-") else f" + {term}"
        return out

    def __repr__(self) -> str:
        return f"NcPoly({self})"

    @staticmethod
    def __new_raw(terms: dict) -> "NcPoly":
        p = NcPoly.__new__(NcPoly)
        p.terms = terms
        return p


def _dense(part: dict, n: int, dtype) -> np.ndarray:
    v = np.zeros(1 << n, dtype=dtype)
    for bits, c in part.items():
        v[bits] = c
    return v


def _shuffle_dense(A: np.ndarray, p: int, B: np.ndarray, q: int) -> np.ndarray:
    """Shuffle product of dense weight-p and weight-q coefficient vectors.

    Interleaving DP over output positions.  The state after k output
    letters is, per count i of consumed left letters, an array of shape
    (2^k, 2^(p-i), 2^(q-k+i)) whose [w, s, t] entry accumulates
    A[u.s] * B[v.t] over all splits of the emitted word w into a left
    prefix u and right prefix v.  Consuming a letter from either side
    peels the leading axis bit of that side's remaining block and merges
    it into the word axis.  Exact in int64 / object arithmetic.
    """
    if p == 0:
        return B * A[0]
    if q == 0:
        return A * B[0]
    state = {0: np.multiply.outer(A, B).reshape(1, 1 << p, 1 << q)}
    for k in range(p + q):
        new: dict[int, np.ndarray] = {}
        for i, S in state.items():
            j = k - i
            if j < q:
                Xr = S.reshape(1 << k, 1 << (p - i), 2, 1 << (q - j - 1))
                Xr = np.moveaxis(Xr, 2, 1).reshape(1 << (k + 1), 1 << (p - i), 1 << (q - j - 1))
                if i in new:
                    new[i] = new[i] + Xr
                else:
                    new[i] = Xr
            if i < p:
                Xr = S.reshape(1 << (k + 1), 1 << (p - i - 1), 1 << (q - j))
                if i + 1 in new:
                    new[i + 1] = new[i + 1] + Xr
                else:
                    new[i + 1] = Xr
        state = new
    return state[p].reshape(-1)


_INT64_SAFE = 1 << 62


def shuffle(a: NcPoly, b: NcPoly) -> NcPoly:
    """Shuffle product, bilinear over all weight pairs."""
    out: dict = {}
    pa, pb = a.homogeneous_parts(), b.homogeneous_parts()
    for p, ap in pa.items():
        for q, bp in pb.items():
            exact = all(isinstance(c, int) for c in ap.values()) and all(
                isinstance(c, int) for c in bp.values()
            )
            bound = (
                sum(abs(c) for c in ap.values())
                * sum(abs(c) for c in bp.values())
                * comb(p + q, min(p, q))
            )
            dtype = np.int64 if exact and bound < _INT64_SAFE else object
            vec = _shuffle_dense(_dense(ap, p, dtype), p, _dense(bp, q, dtype), q)
            sentinel = 1 << (p + q)
            for bits in np.flatnonzero(vec):
                w = sentinel | int(bits)
                c = vec[bits]
                c = int(c) if dtype is np.int64 else c
                nc = out.get(w, 0) + c
                if nc:
                    out[w] = nc
                else:
                    out.pop(w, None)
    return NcPoly(out)


@lru_cache(maxsize=None)
def _stuffle(u: tuple[int, ...], v: tuple[int, ...]) -> tuple[tuple[tuple[int, ...], int], ...]:
    """Quasi-shuffle of two index tuples, as ((index, multiplicity), ...)."""
    if not u:
        return ((v, 1),)
    if not v:
        return ((u, 1),)
    out: dict[tuple[int, ...], int] = {}
    for idx, m in _stuffle(u[:-1], v):
        key = idx + (u[-1],)
        out[key] = out.get(key, 0) + m
    for idx, m in _stuffle(u, v[:-1]):
        key = idx + (v[-1],)
        out[key] = out.get(key, 0) + m
    for idx, m in _stuffle(u[:-1], v[:-1]):
        key = idx + (u[-1] + v[-1],)
        out[key] = out.get(key, 0) + m
    return tuple(out.items())


def harmonic(a: NcPoly, b: NcPoly) -> NcPoly:
    """Harmonic (quasi-shuffle) product.  Inputs must lie in H1."""
    out: dict = {}
    for wa, ca in a.terms.items():
        ka = index_of_word(wa)
        for wb, cb in b.terms.items():
            kb = index_of_word(wb)
            c = ca * cb
            for idx, m in _stuffle(ka, kb):
                w = word_of_index(idx)
                nc = out.get(w, 0) + c * m
                if nc:
                    out[w] = nc
                else:
                    out.pop(w, None)
    return NcPoly(out)


def _sigma_word(w: int) -> dict[int, int]:
    """Expand sigma on a single word: x -> x, y -> x + y."""
    acc = [EMPTY_WORD]
    for bit in letters(w):
        if bit == X:
            acc = [(v << 1) for v in acc]
        else:
            acc = [(v << 1) for v in acc] + [((v << 1) | 1) for v in acc]
    return {v: 1 for v in acc}  # distinct y-subsets give distinct words


def sigma(p: NcPoly) -> NcPoly:
    """The ring automorphism with sigma(x) = x, sigma(y) = x + y."""
    out: dict = {}
    for w, c in p.terms.items():
        for v in _sigma_word(w):
            nc = out.get(v, 0) + c
            if nc:
                out[v] = nc
            else:
                out.pop(v, None)
    return NcPoly(out)


def s_map(p: NcPoly) -> NcPoly:
    """Linear map with 1 -> 1 and y*w -> y*sigma(w); defined on H1.

    On z-words this produces the sum over all comma/plus contractions of
    the index, the word-level expansion behind the star values.
    """
    out: dict = {}
    for w, c in p.terms.items():
        if w == EMPTY_WORD:
            out[w] = out.get(w, 0) + c
            continue
        if first_letter(w) != Y:
            raise ValueError(f"word {word_str(w)!r} not in H1")
        n = weight(w)
        tail = (w & ((1 << (n - 1)) - 1)) | (1 << (n - 1))  # strip leading y
        for v in _sigma_word(tail):
            nw = concat(0b11, v)  # prepend y
            nc = out.get(nw, 0) + c
            if nc:
                out[nw] = nc
            else:
                out.pop(nw, None)
    return NcPoly(out)


def y_power(n: int) -> int:
    """The word y^n."""
    return (1 << (n + 1)) - 1


@lru_cache(maxsize=None)
def harmonic_power_z1(n: int) -> "NcPoly":
    """z_1 harmonic-multiplied with itself n times."""
    if n == 0:
        return NcPoly.one()
    return harmonic(harmonic_power_z1(n - 1), NcPoly.from_index((1,)))


def random_word(rng, max_weight: int = 8, h1: bool = False, h0: bool = False) -> int:
    """A uniform-ish random word, optionally constrained to H1 or H0."""
    lo = 2 if h0 else (1 if h1 else 0)
    n = rng.randint(lo, max(lo, max_weight))
    if n == 0:
        return EMPTY_WORD
    w = (1 << n) | rng.getrandbits(n)
    if h1 or h0:
        w |= 1 << (n - 1)  # starts with y
    if h0:
        w &= ~1  # ends with x
    return w


def random_ncpoly(rng, max_weight: int = 8, max_terms: int = 4, h1: bool = False) -> NcPoly:
    """Random small polynomial for law testing (words up to max_weight)."""
    terms: dict = {}
    for _ in range(rng.randint(1, max_terms)):
        w = random_word(rng, max_weight, h1=h1)
        terms[w] = terms.get(w, 0) + rng.randint(-3, 3)
    return NcPoly(terms)
