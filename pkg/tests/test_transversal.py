import pytest

from balpack.bounds import corollary_bound
from balpack.core import (
    PreconditionViolated,
    make_packing,
    max_pairwise_intersection,
    verify,
)
from balpack.transversal import (
    TransversalDesign,
    augment_34,
    augment_34_char2,
    augment_generic,
    check_td,
    construct_td,
    construct_td_sum,
    label_groups,
)


def test_td_two_groups_is_all_pairs():
    td = construct_td(2, 2, 2)
    assert td.blocks == ((0, 2), (0, 3), (1, 2), (1, 3))


@pytest.mark.parametrize("t,k,q", [(2, 2, 2), (2, 3, 3), (3, 4, 4), (2, 4, 5), (3, 3, 5)])
def test_polynomial_td_is_a_td(t, k, q):
    td = construct_td(t, k, q)
    assert len(td.blocks) == q**t
    assert check_td(td)


def test_td_of_order_four_has_64_blocks():
    assert len(construct_td(3, 4, 4).blocks) == 64


@pytest.mark.parametrize("t,m", [(1, 3), (2, 4), (3, 2), (3, 4), (3, 6)])
def test_sum_td_is_a_td(t, m):
    td = construct_td_sum(t, m)
    assert len(td.blocks) == m**t
    assert td.k == t + 1
    assert check_td(td)


def test_td_type_rejects_non_transverse_blocks():
    with pytest.raises(PreconditionViolated):
        TransversalDesign(2, 2, 2, ((0, 1),))  # both points in group 0


def test_td_preconditions():
    with pytest.raises(PreconditionViolated):
        construct_td(2, 4, 3)  # k > q
    with pytest.raises(PreconditionViolated):
        construct_td(2, 3, 6)  # not a prime power
    with pytest.raises(PreconditionViolated):
        construct_td(0, 2, 3)


def test_label_groups_split():
    td = construct_td(2, 3, 3)
    lab = label_groups(td)
    assert lab.signs == (1,) * 6 + (-1,) * 3
    p = make_packing(td.v, td.t, td.k, lab.signs, td.blocks)
    rep = verify(p)
    assert rep.passed
    assert set(rep.discrepancies) == {1}  # odd k

    even = construct_td(3, 4, 4)
    q = make_packing(even.v, even.t, even.k, label_groups(even).signs, even.blocks)
    rep = verify(q)
    assert rep.passed
    assert set(rep.discrepancies) == {0}


def test_augment_generic_grows_the_family():
    td = construct_td(4, 6, 7)
    lab = label_groups(td)
    added = augment_generic(td, lab, 4)
    assert len(added) == 9  # one block per (positive, negative) group pair
    combined = make_packing(td.v, 4, td.k, lab.signs, td.blocks + added)
    assert combined.n_blocks == 7**4 + 9
    assert verify(combined).passed
    assert max_pairwise_intersection(combined.blocks) <= 3


def test_augment_generic_preconditions():
    td = construct_td(3, 4, 5)
    lab = label_groups(td)
    with pytest.raises(PreconditionViolated):
        augment_generic(td, lab, 2)  # t not above k/2 and 2
    odd = construct_td(3, 3, 5)
    with pytest.raises(PreconditionViolated):
        augment_generic(odd, label_groups(odd), 4)  # odd k
    strong = construct_td(4, 4, 5)
    with pytest.raises(PreconditionViolated):
        augment_generic(strong, label_groups(strong), 3)  # below the design's t
    # labeling must be constant per group
    broken = list(lab.signs)
    broken[0] = -1
    from balpack.core import Labeling

    with pytest.raises(PreconditionViolated):
        augment_generic(td, Labeling(tuple(broken)), 4)


def test_augment_34_smallest_case_meets_bound():
    p = augment_34(2)
    assert p.n_blocks == 12 == corollary_bound(3, 4, 8)
    rep = verify(p)
    assert rep.passed
    assert set(rep.discrepancies) == {0}


def test_augment_34_main_case():
    p = augment_34(4)
    assert (p.t, p.k, p.v) == (3, 4, 16)
    assert p.n_blocks == 112 == corollary_bound(3, 4, 16)
    assert verify(p).passed
    # 64 transverse blocks plus 48 added ones
    td = construct_td_sum(3, 4)
    assert len(set(td.blocks) & set(p.blocks)) == 64
    assert p.n_blocks - 64 == 48


@pytest.mark.parametrize("m", [2, 4, 6, 8])
def test_augment_34_extremal_for_even_m(m):
    p = augment_34(m)
    assert p.n_blocks == m**3 + m * m * (m - 1) == corollary_bound(3, 4, 4 * m)
    assert verify(p).passed


def test_augment_34_accepts_polynomial_td():
    td = construct_td(3, 4, 4)
    p = augment_34(4, td)
    assert p.n_blocks == 112
    assert verify(p).passed


def test_augment_34_preconditions():
    with pytest.raises(PreconditionViolated):
        augment_34(3)
    with pytest.raises(PreconditionViolated):
        augment_34(0)
    with pytest.raises(PreconditionViolated):
        augment_34(4, construct_td_sum(3, 6))  # group size mismatch


@pytest.mark.parametrize("m,count", [(2, 12), (4, 112), (8, 960)])
def test_char2_variant_counts(m, count):
    p = augment_34_char2(m)
    assert p.n_blocks == count == corollary_bound(3, 4, 4 * m)
    rep = verify(p)
    assert rep.passed
    assert set(rep.discrepancies) == {0}
    assert all(len(set(b)) == 4 for b in p.blocks)


def test_char2_matches_augment_34_cardinality():
    for m in (2, 4, 8):
        assert augment_34_char2(m).n_blocks == augment_34(m).n_blocks


def test_char2_requires_power_of_two():
    with pytest.raises(PreconditionViolated):
        augment_34_char2(6)
    with pytest.raises(PreconditionViolated):
        augment_34_char2(1)
