import pytest
from hypothesis import given, strategies as st

from ksums import matgf
from ksums.field import binary_field

GF2 = binary_field(1)
GF4 = binary_field(2)


def test_identity_and_transpose():
    i3 = matgf.mat_identity(3)
    assert matgf.mat_transpose(i3) == i3
    m = ((1, 2), (3, 0))
    assert matgf.mat_transpose(m) == ((1, 3), (2, 0))
    assert matgf.mat_trace(m) == 1
    assert matgf.mat_add(m, m) == ((0, 0), (0, 0))


def test_mul_small_example():
    # over GF(4): [[w,0],[0,w]] * [[w,1],[1,0]] = [[w^2,w],[w,0]]
    w, w2 = 0b10, 0b11
    a = ((w, 0), (0, w))
    b = ((w, 1), (1, 0))
    assert matgf.mat_mul(GF4, a, b) == ((w2, w), (w, 0))


def test_mul_identity_neutral():
    m = ((1, 2, 3), (0, 1, 2), (3, 3, 1))
    i3 = matgf.mat_identity(3)
    assert matgf.mat_mul(GF4, m, i3) == m
    assert matgf.mat_mul(GF4, i3, m) == m


def test_inverse_round_trip_full_gl():
    for fp, n in [(GF2, 2), (GF4, 2), (GF2, 3)]:
        count = 0
        for m, minv in matgf.gl_matrices(fp, n):
            assert matgf.mat_mul(fp, m, minv) == matgf.mat_identity(n)
            count += 1
        assert count > 0


def test_singular_raises():
    with pytest.raises(ZeroDivisionError):
        matgf.mat_inv(GF4, ((1, 1), (1, 1)))
    with pytest.raises(ZeroDivisionError):
        matgf.mat_inv(GF2, ((0, 0), (0, 0)))


def test_alternating_detector():
    assert matgf.mat_is_alternating(((0, 1), (1, 0)))
    assert not matgf.mat_is_alternating(((1, 1), (1, 0)))  # nonzero diagonal
    assert not matgf.mat_is_alternating(((0, 1), (0, 0)))  # not symmetric
    assert matgf.mat_is_alternating(matgf.mat_identity(2)[:0])  # empty


def test_pack_round_trip_and_ordering():
    mats = list(matgf.all_matrices(GF4, 2))
    keys = [matgf.pack_mat(GF4, m) for m in mats]
    hexes = [matgf.mat_hex(GF4, m) for m in mats]
    for m, k in zip(mats, keys):
        assert matgf.unpack_mat(GF4, 2, k) == m
    assert sorted(range(len(mats)), key=lambda i: keys[i]) == sorted(
        range(len(mats)), key=lambda i: hexes[i])
    assert len(set(keys)) == len(mats) == 4 ** 4


def test_hex_width_two_digit_entries():
    fp = binary_field(5)
    m = ((17, 0), (1, 31))
    assert matgf.mat_hex(fp, m) == "1100011f"
    assert matgf.unpack_mat(fp, 2, matgf.pack_mat(fp, m)) == m


@given(st.sampled_from([GF2, GF4]), st.integers(1, 3), st.data())
def test_mul_associative(fp, n, data):
    el = st.integers(0, fp.q - 1)
    draw_mat = st.tuples(*[st.tuples(*[el] * n)] * n)
    a, b, c = data.draw(draw_mat), data.draw(draw_mat), data.draw(draw_mat)
    lhs = matgf.mat_mul(fp, matgf.mat_mul(fp, a, b), c)
    assert lhs == matgf.mat_mul(fp, a, matgf.mat_mul(fp, b, c))


@given(st.sampled_from([GF2, GF4]), st.data())
def test_transpose_antihomomorphism(fp, data):
    el = st.integers(0, fp.q - 1)
    draw_mat = st.tuples(st.tuples(el, el), st.tuples(el, el))
    a, b = data.draw(draw_mat), data.draw(draw_mat)
    assert (matgf.mat_transpose(matgf.mat_mul(fp, a, b))
            == matgf.mat_mul(fp, matgf.mat_transpose(b), matgf.mat_transpose(a)))
