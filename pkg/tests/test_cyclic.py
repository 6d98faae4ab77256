"""Cyclic and Reed-Solomon codes, spectra, dual coordinate maps, and the
rectangle bound."""
import random

import pytest

from qproduct.code import distance_at_least, find_low_weight_word, min_distance
from qproduct.cyclic import (CyclicCode, bch_rectangle_bound, cyclic_from_roots,
                             dual_generator_poly, dual_support_map, flat_to_grid,
                             poly_eval, product_spectrum_support, rs_code,
                             rs_product_dual_certificate, rs_product_params, spectrum_2d,
                             x_n_minus_1)
from qproduct.galois import GF
from qproduct.matrix import InnerProductKind

E = InnerProductKind.EUCLIDEAN
H = InnerProductKind.HERMITIAN


def test_cyclic_from_roots_basic():
    c = cyclic_from_roots(8, 7, [0, 1, 2])
    assert (c.n, c.k) == (7, 4)
    c_full = cyclic_from_roots(8, 7, [])
    assert c_full.k == 7 and c_full.gen_poly == (1,)


def test_cyclic_from_roots_rejects_bad_length():
    with pytest.raises(ValueError):
        cyclic_from_roots(4, 5, [0])


def test_cyclic_from_roots_rejects_duplicates():
    with pytest.raises(ValueError):
        cyclic_from_roots(8, 7, [1, 1])


def test_rs_parameters():
    c = rs_code(5, 3)
    assert (c.n, c.k) == (4, 2)
    assert min_distance(c.code).value == 3
    c2 = rs_code(4, 2)
    assert (c2.n, c2.k) == (3, 2)
    assert min_distance(c2.code).value == 2


def test_rs_rejects_bad_delta():
    with pytest.raises(ValueError):
        rs_code(5, 1)
    with pytest.raises(ValueError):
        rs_code(5, 5)


@pytest.mark.parametrize("q", [4, 5, 7, 8])
def test_rs_is_mds(q):
    for delta in range(2, q):
        code = rs_code(q, delta).code
        assert code.k == q - delta
        assert min_distance(code).value == delta


@pytest.mark.parametrize("q,n", [(8, 7), (5, 4), (4, 3), (9, 8), (9, 4)])
def test_dual_generator_poly_matches_kernel(q, n):
    spec = GF(q)
    rng = random.Random(q * n)
    alpha = spec.root_of_unity(n)
    for _ in range(6):
        exps = sorted(rng.sample(range(n), rng.randint(0, n - 1)))
        code = cyclic_from_roots(spec, n, exps)
        h = dual_generator_poly(spec, code.gen_poly, n)
        assert CyclicCode(spec, n, h).code == code.code.dual(E)
        # involution
        assert dual_generator_poly(spec, h, n) == code.gen_poly


def test_dual_generator_poly_extremes():
    spec = GF(8)
    assert dual_generator_poly(spec, x_n_minus_1(spec, 7), 7) == (1,)
    full = dual_generator_poly(spec, (1,), 7)
    assert full == tuple(x_n_minus_1(spec, 7))


def test_dual_generator_poly_requires_divisor():
    spec = GF(8)
    # X^2 + X + 1 has no roots in GF(8), while X^7 - 1 splits there
    with pytest.raises(ValueError):
        dual_generator_poly(spec, (1, 1, 1), 7)


def test_spectrum_zero_and_impulse():
    spec = GF(8)
    a = spec.root_of_unity(7)
    zero = [[0] * 7 for _ in range(7)]
    sp = spectrum_2d(spec, zero, a, a)
    assert all(v == 0 for row in sp.grid for v in row)
    impulse = [[0] * 7 for _ in range(7)]
    impulse[0][0] = 1
    sp = spectrum_2d(spec, impulse, a, a)
    assert all(v == 1 for row in sp.grid for v in row)


@pytest.mark.parametrize("q,n1,n2", [(8, 7, 7), (5, 4, 4), (9, 8, 4)])
def test_spectrum_roundtrip(q, n1, n2):
    spec = GF(q)
    rng = random.Random(q + n1)
    a = spec.root_of_unity(n1)
    b = spec.root_of_unity(n2)
    for _ in range(5):
        word = [[rng.randrange(q) for _ in range(n2)] for _ in range(n1)]
        sp = spectrum_2d(spec, word, a, b)
        assert sp.inverse() == tuple(tuple(r) for r in word)


def test_spectrum_rejects_wrong_order():
    spec = GF(8)
    with pytest.raises(ValueError):
        spectrum_2d(spec, [[0] * 7 for _ in range(7)], 1, spec.root_of_unity(7))


@pytest.mark.parametrize("q,d1,d2", [(5, 2, 3), (8, 3, 4)])
def test_spectral_membership_characterization(q, d1, d2):
    """A word lies in the bicyclic product iff its spectrum vanishes on
    the stripes of both factors (tested in both directions)."""
    spec = GF(q)
    c1, c2 = rs_code(spec, d1), rs_code(spec, d2)
    n1 = n2 = q - 1
    from qproduct.product import product

    prod = product(c1.code, c2.code)
    a = spec.root_of_unity(n1)
    b = spec.root_of_unity(n2)
    mask = product_spectrum_support(c1, c2)

    def vanishes_on_stripes(word_flat):
        sp = spectrum_2d(spec, flat_to_grid(word_flat, n1, n2), a, b)
        return all(sp.grid[i][j] == 0
                   for i in range(n1) for j in range(n2) if mask[i][j])

    rng = random.Random(q)
    for row in prod.generator.rows:
        assert vanishes_on_stripes(row)
    inside = 0
    while inside < 5:
        coeffs = [rng.randrange(q) for _ in range(prod.k)]
        word = [0] * prod.n
        for c, row in zip(coeffs, prod.generator.rows):
            if c:
                for i, v in enumerate(row):
                    if v:
                        word[i] = spec.add(word[i], spec.mul(c, v))
        assert vanishes_on_stripes(word)
        inside += 1
    outside = 0
    while outside < 5:
        word = [rng.randrange(q) for _ in range(prod.n)]
        if prod.contains(word):
            continue
        assert not vanishes_on_stripes(word)
        outside += 1


def test_dual_support_map_values():
    assert dual_support_map(0, 7, E) == 0
    assert dual_support_map(1, 7, E) == 6
    assert dual_support_map(3, 7, E) == 4
    assert dual_support_map(1, 5, H, frob_power=2) == 3


def test_dual_support_map_requires_frobenius_power():
    with pytest.raises(ValueError):
        dual_support_map(1, 5, H)


@pytest.mark.parametrize("delta", range(2, 8))
def test_dual_spectrum_is_mapped_complement(delta):
    """The dual's generator roots sit exactly at the coordinate-mapped
    complement of the primal root positions."""
    spec = GF(8)
    n = 7
    alpha = spec.root_of_unity(n)
    code = rs_code(spec, delta)
    h = dual_generator_poly(spec, code.gen_poly, n)
    primal_zero = {i for i in range(n)
                   if poly_eval(spec, code.gen_poly, spec.power(alpha, i)) == 0}
    dual_zero = {i for i in range(n) if poly_eval(spec, h, spec.power(alpha, i)) == 0}
    mapped = {dual_support_map(i, n, E) for i in range(n) if i not in primal_zero}
    assert dual_zero == mapped


def test_bch_rectangle_bound_values():
    assert bch_rectangle_bound(0, 0) == 1
    assert bch_rectangle_bound(2, 2) == 3
    assert bch_rectangle_bound(1, 5) == 2
    with pytest.raises(ValueError):
        bch_rectangle_bound(-1, 0)


def test_rectangle_bound_16_12_dual():
    """Dual of the [16,4] product of two [4,2,3] codes: the 2x2 zero
    rectangle gives bound 3, and the distance is certified to be exactly 3."""
    from qproduct.product import product

    c = rs_code(5, 3)
    dual = product(c.code, c.code).dual(E)
    assert (dual.n, dual.k) == (16, 12)
    mu = 5 - 3
    assert bch_rectangle_bound(mu, mu) == 3
    assert distance_at_least(dual, 3)
    witness = find_low_weight_word(dual, max_w=3)
    assert witness is not None and sum(1 for v in witness if v) == 3


def test_rectangle_bound_9_8_dual_exhaustive():
    """Dual of the [9,1] product of two [3,1,3] codes over GF(4): bound 2
    and full enumeration of the 4^8 words agrees."""
    from qproduct.product import product

    c = rs_code(4, 3)
    dual = product(c.code, c.code).dual(E)
    assert (dual.n, dual.k) == (9, 8)
    assert bch_rectangle_bound(1, 1) == 2
    cert = min_distance(dual)
    assert cert.lower_method == "exhaustive" and cert.value == 2


def test_rectangle_bound_never_exceeds_enumerated_distance():
    from qproduct.product import product

    for q in (4, 5):
        spec = GF(q)
        for d1 in range(2, q):
            for d2 in range(2, q):
                dual = product(rs_code(spec, d1).code, rs_code(spec, d2).code).dual(E)
                if dual.k == 0 or dual.size() > 1 << 20:
                    continue
                bound = bch_rectangle_bound(q - d1, q - d2)
                assert bound <= min_distance(dual).value


def test_rs_product_params_q5():
    rep = rs_product_params(5, 3, 3)
    assert (rep.length, rep.dimension, rep.distance) == (16, 4, 9)
    assert rep.dual_dimension == 12 == rep.length - rep.dimension
    assert rep.stated_dual_distance == 2
    assert rep.expected_dual_distance == 3


def test_rs_product_params_q4():
    rep = rs_product_params(4, 2, 2)
    assert (rep.length, rep.dimension, rep.distance) == (9, 4, 4)
    assert rep.dual_dimension == 5


def test_rs_product_dimension_identity():
    for q in (4, 5, 7, 8):
        for d1 in range(2, q):
            for d2 in range(2, q):
                rep = rs_product_params(q, d1, d2)
                assert rep.dual_dimension + rep.dimension == (q - 1) ** 2


def test_rs_product_params_range_check():
    with pytest.raises(ValueError):
        rs_product_params(5, 1, 3)


def test_rs_product_dual_certificate_small_field_is_exhaustive():
    cert = rs_product_dual_certificate(4, 3, 3)
    assert cert.lower_method == "exhaustive" and cert.value == 2


def test_rs_product_dual_certificate_rectangle_method():
    cert = rs_product_dual_certificate(5, 3, 3)
    assert cert.lower_method == "bch-rectangle"
    assert cert.exact and cert.value == 3


def test_rs_product_dual_certificate_beyond_small_support():
    # mu = (3, 3) over GF(8): the rectangle bound reaches 4, and the
    # witness search confirms it exactly
    cert = rs_product_dual_certificate(8, 5, 5)
    assert cert.lower_method == "bch-rectangle"
    assert cert.exact and cert.value == 4
