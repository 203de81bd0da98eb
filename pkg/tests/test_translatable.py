import pytest

from quadlat import (
    CayleyTable,
    LinearSpec,
    SearchCapExceeded,
    all_valid_k,
    build_idempotent_k_translatable,
    check_identity,
    feasible_k_idempotent_quadratical,
    find_translatable_ordering,
    gcd_quasigroup_property_test,
    idempotent_first_row,
    is_quadratical,
    k_translatable_check,
    linear_table,
    quadratical_over_zm,
    relabel,
    translatability_report,
)
from quadlat.fixtures import order5_translatable_examples


def additive_table(n):
    return CayleyTable.from_function(n, lambda x, y: (x + y) % n)


def test_additive_group_shift():
    for n in (3, 5, 8):
        t = additive_table(n)
        assert k_translatable_check(t, range(n), n - 1)
        assert all_valid_k(t) == {n - 1}


def test_order5_examples_four_translatable():
    for t in order5_translatable_examples():
        assert k_translatable_check(t, range(5), 4)
        assert check_identity(t, "latin-square") is None


def test_q2_not_translatable_natural(q2):
    assert all_valid_k(q2) == set()


def test_check_rejects_bad_k(q2):
    with pytest.raises(ValueError):
        k_translatable_check(q2, range(9), 0)
    with pytest.raises(ValueError):
        k_translatable_check(q2, range(9), 9)
    with pytest.raises(ValueError):
        k_translatable_check(q2, [0] * 9, 2)


def test_all_valid_k_trivial():
    one = CayleyTable.from_rows([[0]])
    assert all_valid_k(one) == set()
    t = linear_table(LinearSpec(5, 2, 4, 0))
    assert all_valid_k(t) == {2}


def test_report_first_row():
    t = linear_table(LinearSpec(5, 2, 4, 0))
    rep = translatability_report(t, range(5))
    assert rep.first_row == (0, 4, 3, 2, 1)
    assert rep.valid_ks == frozenset({2})


def test_find_ordering_q1(q1):
    # presented as a, b, ab, ba, aba there is no translatable sequence...
    q1p = relabel(q1, [0, 3, 1, 2, 4])
    assert all_valid_k(q1p) == set()
    # ...but a reordering makes it 3-translatable
    found = find_translatable_ordering(q1p)
    assert found is not None
    ordering, k = found
    assert k == 3
    assert ordering == (0, 1, 2, 4, 3)
    assert k_translatable_check(q1p, ordering, k)


def test_find_ordering_q1_dual(q1_dual):
    q1dp = relabel(q1_dual, [0, 3, 1, 2, 4])
    found = find_translatable_ordering(q1dp)
    assert found is not None
    assert found[1] == 2
    assert k_translatable_check(q1dp, found[0], 2)


def test_find_ordering_q2_none(q2):
    assert find_translatable_ordering(q2) is None


def test_find_ordering_cap(q3):
    with pytest.raises(SearchCapExceeded):
        find_translatable_ordering(q3)
    # a raised cap is honoured (cheap case: restrict shifts)
    assert find_translatable_ordering(q3, max_order=13, ks=(5,)) is not None


def test_explicit_orderings_order13_17(q3, q3_dual, q4, q4_dual):
    # shift pairs of dual tables sum to the order
    assert k_translatable_check(q3, [0, 3, 12, 1, 7, 8, 11, 4, 10, 5, 6, 2, 9], 5)
    assert k_translatable_check(q3_dual, [0, 3, 9, 2, 5, 6, 11, 4, 10, 7, 8, 1, 12], 8)
    assert k_translatable_check(
        q4, [0, 3, 7, 8, 15, 9, 13, 1, 11, 4, 10, 2, 16, 12, 14, 5, 6], 13)
    assert k_translatable_check(
        q4_dual, [0, 3, 5, 6, 16, 12, 14, 2, 11, 4, 10, 1, 15, 9, 13, 7, 8], 4)


def test_no_m_minus_1_translatable_quadratical(q1, q1_dual, q2):
    # exhaustive over orderings for the order-5 and order-9 tables
    assert find_translatable_ordering(q1, ks=(4,)) is None
    assert find_translatable_ordering(q1_dual, ks=(4,)) is None
    assert find_translatable_ordering(q2, ks=(8,)) is None


def test_first_row_examples():
    assert idempotent_first_row(7, 3) == [0, 3, 6, 2, 5, 1, 4]
    assert idempotent_first_row(7, 4) == [0, 2, 4, 6, 1, 3, 5]
    assert idempotent_first_row(5, 2) == [0, 4, 3, 2, 1]
    # cross-check against the linear quadratical table
    assert tuple(idempotent_first_row(5, 2)) == quadratical_over_zm(5, 2).entries[0]


def test_first_row_rejections():
    with pytest.raises(ValueError):
        idempotent_first_row(6, 5)  # even order
    with pytest.raises(ValueError):
        idempotent_first_row(9, 3)  # gcd(n, k) > 1
    with pytest.raises(ValueError):
        idempotent_first_row(9, 4)  # gcd(n, k-1) > 1
    with pytest.raises(ValueError):
        idempotent_first_row(7, 1)
    with pytest.raises(ValueError):
        idempotent_first_row(7, 7)


def test_build_idempotent():
    t = build_idempotent_k_translatable(5, 2)
    assert t.entries == quadratical_over_zm(5, 2).entries
    t7 = build_idempotent_k_translatable(7, 3)
    assert check_identity(t7, "idempotency") is None
    assert check_identity(t7, "latin-square") is None
    assert not is_quadratical(t7)
    assert k_translatable_check(t7, range(7), 3)


def test_build_idempotent_rebuild_from_rows():
    t = build_idempotent_k_translatable(11, 4)
    n, k = 11, 4
    for r in range(n):
        rebuilt = [
            tuple(t.entries[r][(j - q * k) % n] for j in range(n)) for q in range(n)
        ]
        assert rebuilt == [t.entries[(r + q) % n] for q in range(n)]


def test_order9_no_idempotent_translatable_quadratical():
    for k in range(2, 9):
        try:
            t = build_idempotent_k_translatable(9, k)
        except ValueError:
            continue
        assert not is_quadratical(t)


def test_feasible_sets():
    assert feasible_k_idempotent_quadratical(25) == {7, 18}
    assert feasible_k_idempotent_quadratical(9) == set()
    assert feasible_k_idempotent_quadratical(21) == set()
    assert feasible_k_idempotent_quadratical(5) == {2, 3}
    with pytest.raises(ValueError):
        feasible_k_idempotent_quadratical(8)


def test_gcd_property():
    assert gcd_quasigroup_property_test([1, 0, 2, 3, 4, 5], 2) == (True, False)
    assert gcd_quasigroup_property_test([0, 4, 3, 2, 1], 2) == (True, True)
    assert gcd_quasigroup_property_test(list(range(9)), 3) == (True, False)
    assert gcd_quasigroup_property_test([0, 0, 1], 2) == (False, False)
