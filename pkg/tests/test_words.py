"""Word algebra: products against independent oracles, algebraic laws."""

import itertools
import random
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from mzvkit.indexes import compositions, star_expand
from mzvkit.words import (
    EMPTY_WORD,
    NcPoly,
    harmonic,
    in_h0,
    in_h1,
    index_of_word,
    random_ncpoly,
    s_map,
    shuffle,
    sigma,
    weight,
    word,
    word_of_index,
    word_str,
)


# -- independent oracles -------------------------------------------------


def shuffle_oracle(u: str, v: str) -> dict[str, int]:
    """All interleavings by explicit position choice."""
    p, q = len(u), len(v)
    out: dict[str, int] = {}
    for pos in itertools.combinations(range(p + q), p):
        w = [""] * (p + q)
        iu, iv = iter(u), iter(v)
        ps = set(pos)
        for i in range(p + q):
            w[i] = next(iu) if i in ps else next(iv)
        key = "".join(w)
        out[key] = out.get(key, 0) + 1
    return out


def stuffle_oracle(a: tuple, b: tuple) -> dict[tuple, int]:
    """Quasi-shuffle by walking the grid: at each step take the next part
    from a, from b, or merge both (diagonal step)."""
    out: dict[tuple, int] = {}

    def walk(i, j, acc):
        if i == len(a) and j == len(b):
            out[acc] = out.get(acc, 0) + 1
            return
        if i < len(a):
            walk(i + 1, j, acc + (a[i],))
        if j < len(b):
            walk(i, j + 1, acc + (b[j],))
        if i < len(a) and j < len(b):
            walk(i + 1, j + 1, acc + (a[i] + b[j],))

    walk(0, 0, ())
    return out


def poly_from_strs(d: dict[str, object]) -> NcPoly:
    return NcPoly({word(s): c for s, c in d.items()})


# -- encoding ------------------------------------------------------------


def test_word_encoding_round_trip():
    for s in ("", "x", "y", "yx", "xy", "yyxxy", "xxxx"):
        assert word_str(word(s)) == s
        assert weight(word(s)) == len(s)


def test_word_rejects_bad_letters():
    with pytest.raises(ValueError):
        word("yz")


def test_graded_lex_order_is_int_order():
    ws = ["", "x", "y", "xx", "xy", "yx", "yy", "xxx"]
    assert sorted(word(s) for s in ws) == [word(s) for s in ws]


def test_membership_flags():
    assert in_h1(EMPTY_WORD) and in_h0(EMPTY_WORD)
    assert in_h1(word("yx")) and in_h0(word("yx"))
    assert in_h1(word("yy")) and not in_h0(word("yy"))
    assert not in_h1(word("xy"))


def test_word_of_index_examples():
    assert word_of_index((2,)) == word("yx")
    assert word_of_index((1, 2)) == word("yyx")
    assert word_of_index(()) == EMPTY_WORD


def test_index_of_word_examples():
    assert index_of_word(word("yx")) == (2,)
    assert index_of_word(word("yyx")) == (1, 2)
    with pytest.raises(ValueError):
        index_of_word(word("xy"))


def test_index_word_round_trip():
    for n in range(0, 8):
        for k in compositions(n, 2) if n >= 2 else [()]:
            assert index_of_word(word_of_index(k)) == k


# -- shuffle -------------------------------------------------------------


def test_shuffle_spec_examples():
    assert shuffle(NcPoly.from_str("x"), NcPoly.from_str("y")) == poly_from_strs(
        {"xy": 1, "yx": 1}
    )
    assert shuffle(NcPoly.from_str("yx"), NcPoly.from_str("yx")) == poly_from_strs(
        {"yxyx": 2, "yyxx": 4}
    )
    w = NcPoly.from_str("xyx")
    assert shuffle(w, NcPoly.one()) == w
    assert shuffle(NcPoly.one(), w) == w


@pytest.mark.parametrize("seed", range(6))
def test_shuffle_matches_oracle(seed):
    rng = random.Random(seed)
    for _ in range(40):
        u = "".join(rng.choice("xy") for _ in range(rng.randint(0, 6)))
        v = "".join(rng.choice("xy") for _ in range(rng.randint(0, 6)))
        got = shuffle(NcPoly.from_str(u) if u else NcPoly.one(),
                      NcPoly.from_str(v) if v else NcPoly.one())
        assert got == poly_from_strs(shuffle_oracle(u, v)), (u, v)


def test_shuffle_weight_additivity():
    rng = random.Random(3)
    for _ in range(30):
        a = random_ncpoly(rng, 5)
        b = random_ncpoly(rng, 5)
        prod = shuffle(a, b)
        weights = {weight(w) for w in prod.terms}
        allowed = {
            weight(wa) + weight(wb) for wa in a.terms for wb in b.terms
        }
        assert weights <= allowed


def test_shuffle_fraction_coefficients_exact():
    a = NcPoly({word("yx"): Fraction(1, 3)})
    b = NcPoly({word("y"): Fraction(3, 5)})
    got = shuffle(a, b)
    assert got.terms[word("yyx")] == Fraction(2, 5)  # two interleavings put y first


# -- harmonic ------------------------------------------------------------


def test_harmonic_spec_examples():
    z = NcPoly.from_index
    assert harmonic(z((2,)), z((3,))) == z((2, 3)) + z((3, 2)) + z((5,))
    assert harmonic(z((1,)), z((1,))) == 2 * z((1, 1)) + z((2,))
    w = z((1, 2))
    assert harmonic(NcPoly.one(), w) == w


@pytest.mark.parametrize("seed", range(4))
def test_harmonic_matches_grid_oracle(seed):
    rng = random.Random(100 + seed)
    for _ in range(30):
        a = tuple(rng.randint(1, 3) for _ in range(rng.randint(0, 4)))
        b = tuple(rng.randint(1, 3) for _ in range(rng.randint(0, 4)))
        got = harmonic(NcPoly.from_index(a), NcPoly.from_index(b))
        want = NcPoly.zero()
        for idx, c in stuffle_oracle(a, b).items():
            want = want + c * NcPoly.from_index(idx)
        assert got == want, (a, b)


def test_harmonic_rejects_non_h1():
    with pytest.raises(ValueError):
        harmonic(NcPoly.from_str("xy"), NcPoly.from_str("y"))


# -- algebraic laws (property style) --------------------------------------


@st.composite
def ncpolys(draw, max_weight=8, h1=True):
    n_terms = draw(st.integers(1, 3))
    terms = {}
    for _ in range(n_terms):
        n = draw(st.integers(1 if h1 else 0, max_weight))
        bits = draw(st.integers(0, (1 << n) - 1)) if n else 0
        w = (1 << n) | bits
        if h1 and n:
            w |= 1 << (n - 1)
        terms[w] = draw(st.integers(-3, 3))
    return NcPoly(terms)


@settings(max_examples=40, deadline=None)
@given(ncpolys(), ncpolys())
def test_products_commutative(a, b):
    assert shuffle(a, b) == shuffle(b, a)
    assert harmonic(a, b) == harmonic(b, a)


@settings(max_examples=25, deadline=None)
@given(ncpolys(max_weight=5), ncpolys(max_weight=5), ncpolys(max_weight=5))
def test_products_associative(a, b, c):
    assert shuffle(shuffle(a, b), c) == shuffle(a, shuffle(b, c))
    assert harmonic(harmonic(a, b), c) == harmonic(a, harmonic(b, c))


@settings(max_examples=25, deadline=None)
@given(ncpolys(), ncpolys(), ncpolys())
def test_products_bilinear(a, b, c):
    assert shuffle(a, b + c) == shuffle(a, b) + shuffle(a, c)
    assert harmonic(a, b + c) == harmonic(a, b) + harmonic(a, c)
    assert shuffle(3 * a, b) == 3 * shuffle(a, b)


def test_closure_h0_h1():
    rng = random.Random(11)
    from mzvkit.words import random_word

    for _ in range(50):
        a = NcPoly.from_word(random_word(rng, 6, h0=True))
        b = NcPoly.from_word(random_word(rng, 6, h0=True))
        assert shuffle(a, b).is_h0()
        c = random_ncpoly(rng, 6, h1=True)
        d = random_ncpoly(rng, 6, h1=True)
        assert harmonic(c, d).is_h1()


# -- sigma and the contraction map ----------------------------------------


def test_sigma_spec_examples():
    assert sigma(NcPoly.from_str("y")) == poly_from_strs({"x": 1, "y": 1})
    assert sigma(NcPoly.from_str("xy")) == poly_from_strs({"xx": 1, "xy": 1})
    assert sigma(NcPoly.one()) == NcPoly.one()


def test_sigma_is_ring_hom():
    rng = random.Random(5)
    for _ in range(30):
        a = random_ncpoly(rng, 4)
        b = random_ncpoly(rng, 4)
        assert sigma(a * b) == sigma(a) * sigma(b)


def test_s_map_spec_examples():
    z = NcPoly.from_index
    assert s_map(NcPoly.from_str("yyx")) == z((3,)) + z((1, 2))
    assert s_map(NcPoly.from_str("yx")) == NcPoly.from_str("yx")
    assert s_map(NcPoly.one()) == NcPoly.one()
    with pytest.raises(ValueError):
        s_map(NcPoly.from_str("xy"))


def test_s_map_is_contraction_sum():
    # the z-word image of s_map must match the index-level star expansion
    for n in range(1, 8):
        for r in range(1, n + 1):
            for k in compositions(n, r):
                want = NcPoly.zero()
                for idx, c in star_expand(k).terms.items():
                    want = want + c * NcPoly.from_index(idx)
                assert s_map(NcPoly.from_index(k)) == want, k


def test_s_map_weight_preserving_and_unitriangular():
    # on each weight-graded piece the matrix of s_map over z-words is
    # unitriangular when compositions are ordered by decreasing depth
    for n in range(1, 7):
        basis = sorted(
            (k for r in range(1, n + 1) for k in compositions(n, r)),
            key=lambda k: (-len(k), k),
        )
        pos = {k: i for i, k in enumerate(basis)}
        for k in basis:
            img = s_map(NcPoly.from_index(k))
            assert {weight(w) for w in img.terms} == {n}
            for w, c in img.terms.items():
                kk = index_of_word(w)
                if kk == k:
                    assert c == 1
                else:
                    assert pos[kk] > pos[k], (k, kk)


def test_concatenation_product():
    assert NcPoly.from_str("yx") * NcPoly.from_str("y") == NcPoly.from_str("yxy")
    a = NcPoly.from_str("x") + NcPoly.from_str("y")
    assert a * a == poly_from_strs({"xx": 1, "xy": 1, "yx": 1, "yy": 1})


def test_str_display_deterministic():
    p = 2 * NcPoly.from_str("yxyx") + 4 * NcPoly.from_str("yyxx")
    assert str(p) == "2*yxyx + 4*yyxx"
    assert str(NcPoly.zero()) == "0"
    assert str(NcPoly.one()) == "1"
