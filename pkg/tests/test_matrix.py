"""Linear algebra over GF(q): rref, spans, nullspaces, Kronecker, text I/O."""

import numpy as np
import pytest

from mincodes import (
    BadParams,
    DimensionMismatch,
    FieldMismatch,
    NotPrimePower,
    build_field,
)
from mincodes.matrix import (
    GFMatrix,
    dumps_matrix,
    in_span,
    kronecker,
    loads_matrix,
    nullspace,
    rank,
    read_matrix,
    rref,
    write_matrix,
)


def gfm(q, rows):
    return GFMatrix(build_field(q), rows)


def test_identity_rref_fixed_point():
    m = GFMatrix.identity(build_field(3), 3)
    red, rk = rref(m)
    assert rk == 3
    assert red == m


def test_rref_gf2_hand_case():
    m = gfm(2, [[1, 1, 1], [0, 1, 1]])
    red, rk = rref(m)
    assert rk == 2
    assert red.data.tolist() == [[1, 0, 0], [0, 1, 1]]


def test_rref_scales_pivots_to_one():
    m = gfm(5, [[2, 1], [4, 2]])
    red, rk = rref(m)
    assert rk == 1
    assert red.data.tolist() == [[1, 3], [0, 0]]  # 2^-1 = 3 mod 5


def test_rref_rank_matches_row_space_size():
    # rank r  <=>  row space has q^r distinct vectors
    f = build_field(3)
    m = gfm(3, [[1, 2, 0, 1], [2, 1, 1, 0], [0, 0, 1, 1]])
    _, rk = rref(m)
    words = set()
    for a in range(3):
        for b in range(3):
            for c in range(3):
                u = np.array([[a, b, c]])
                words.add(tuple(f.matmul(u, m.data)[0].tolist()))
    assert len(words) == 3**rk


def test_in_span_hand_case():
    f = build_field(2)
    x = in_span(f, [1, 0], [[1, 1], [0, 1]])
    assert x.tolist() == [1, 1]  # (1,1)+(0,1) = (1,0)


def test_in_span_absent():
    f = build_field(2)
    assert in_span(f, [1, 0, 0], [[1, 1, 0], [0, 0, 1]]) is None


def test_in_span_returns_zero_free_solution():
    f = build_field(3)
    vecs = [[1, 0], [2, 0], [0, 1]]  # first two are dependent
    x = in_span(f, [2, 2], vecs)
    assert x.tolist() == [2, 0, 2]
    # and the coefficients really reproduce the target
    acc = np.zeros(2, dtype=int)
    for c, v in zip(x, vecs):
        acc = f.add_table[acc, f.mul_table[c, np.array(v)]]
    assert acc.tolist() == [2, 2]


def test_in_span_empty_family():
    f = build_field(3)
    assert in_span(f, [0, 0], []).tolist() == []
    assert in_span(f, [1, 0], []) is None


def test_nullspace_hand_case():
    m = gfm(2, [[1, 1, 1]])
    ns = nullspace(m)
    assert ns.data.tolist() == [[1, 1, 0], [1, 0, 1]]


def test_nullspace_orthogonality_and_rank():
    for q in [2, 3, 4, 5]:
        f = build_field(q)
        rng = np.random.default_rng(q)
        m = GFMatrix(f, rng.integers(0, q, size=(3, 7)))
        ns = nullspace(m)
        _, rk = rref(m)
        assert ns.rows == 7 - rk
        prod = f.matmul(m.data, ns.data.T)
        assert not prod.any()
        _, ns_rank = rref(ns)
        assert ns_rank == ns.rows


def test_nullspace_full_rank_empty():
    ns = nullspace(GFMatrix.identity(build_field(3), 2))
    assert ns.rows == 0 and ns.cols == 2


def test_kronecker_hand_case_gf3():
    a = gfm(3, [[1, 1], [0, 1]])
    b = gfm(3, [[1, 2]])
    k = kronecker(a, b)
    assert k.data.tolist() == [[1, 2, 1, 2], [0, 0, 1, 2]]


def test_kronecker_extension_field_uses_field_mul():
    f = build_field(4)
    a = GFMatrix(f, [[2]])
    b = GFMatrix(f, [[2, 3]])
    k = kronecker(a, b)
    assert k.data.tolist() == [[3, 1]]  # 2*2=3, 2*3=1 in GF(4)


def test_kronecker_field_mismatch():
    with pytest.raises(FieldMismatch):
        kronecker(gfm(2, [[1]]), gfm(3, [[1]]))


def test_matrix_validation():
    with pytest.raises(ValueError):
        gfm(3, [[0, 3]])
    with pytest.raises(DimensionMismatch):
        gfm(3, [1, 2])
    with pytest.raises(DimensionMismatch):
        gfm(3, [[1, 2]]).hstack(gfm(3, [[1], [2]]))


def test_matrix_immutable():
    m = gfm(3, [[1, 2]])
    with pytest.raises(ValueError):
        m.data[0, 0] = 0


def test_text_roundtrip(tmp_path):
    m = gfm(4, [[0, 1, 2], [3, 2, 1]])
    path = tmp_path / "m.txt"
    write_matrix(m, path, comment="demo matrix")
    back = read_matrix(path)
    assert back == m
    text = path.read_text()
    assert text.startswith("# demo matrix\n4 2 3\n")


def test_text_whitespace_and_comment_tolerance():
    m = loads_matrix("# c\n 3   2 2 \n1 2\n\n0 # trailing\n1\n")
    assert m.field.q == 3
    assert m.data.tolist() == [[1, 2], [0, 1]]


def test_text_errors():
    with pytest.raises(BadParams):
        loads_matrix("3 2 2\n1 2 0\n")  # wrong entry count
    with pytest.raises(BadParams):
        loads_matrix("3 2 2\n1 2 0 x\n")
    with pytest.raises(BadParams):
        loads_matrix("3 1 1\n7\n")  # entry out of range
    with pytest.raises(NotPrimePower):
        loads_matrix("6 1 1\n1\n")
    with pytest.raises(BadParams):
        loads_matrix("")


def test_dumps_deterministic():
    m = gfm(3, [[1, 2], [0, 1]])
    assert dumps_matrix(m) == dumps_matrix(m) == "3 2 2\n1 2\n0 1\n"
