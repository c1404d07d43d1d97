import itertools
from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from loop_schubert import alcove as L
from loop_schubert.alcove import AffineTransform

RANK_LE_3 = ["A2", "B2", "C2", "G2", "A3", "B3", "C3"]


def words(rank, max_len=8):
    return st.lists(st.integers(0, rank), max_size=max_len)


def bfs_lengths(rs, max_length):
    """Word length by breadth-first search on the Cayley graph (no geometry)."""
    gens = [L.simple_reflection(rs, i) for i in range(rs.rank + 1)]
    dist = {AffineTransform.identity(rs.rank): 0}
    frontier = list(dist)
    for d in range(1, max_length + 1):
        nxt = []
        for x in frontier:
            for g in gens:
                y = x * g
                if y not in dist:
                    dist[y] = d
                    nxt.append(y)
        frontier = nxt
    return dist


def test_cartan_conventions():
    assert L.cartan_matrix("B2") == ((2, -1), (-2, 2))
    assert L.cartan_matrix("C2") == ((2, -2), (-1, 2))
    assert L.cartan_matrix("G2") == ((2, -3), (-1, 2))
    assert L.cartan_matrix("F4")[1][2] == -2
    assert L.cartan_matrix("[[2,-1],[-1,2]]") == L.cartan_matrix("A2")
    for bad in ("Z3", "B1", "D3", "E5", "A0"):
        with pytest.raises(ValueError):
            L.cartan_matrix(bad)


@pytest.mark.parametrize(
    "kind,npos,index",
    [("A1", 1, 2), ("A4", 10, 5), ("B3", 9, 2), ("C4", 16, 2), ("D4", 12, 4), ("D5", 20, 4),
     ("E6", 36, 3), ("E7", 63, 2), ("E8", 120, 1), ("F4", 24, 1), ("G2", 6, 1)],
)
def test_root_counts(kind, npos, index):
    rs = L.root_system(kind)
    assert len(rs.positive_roots) == npos
    assert rs.index_connection() == index
    # the highest root pairs nonnegatively with every simple coroot direction
    assert all(c > 0 for c in rs.theta)


@pytest.mark.parametrize("kind,order", [("A2", 6), ("B2", 8), ("G2", 12), ("A3", 24), ("B3", 48), ("C3", 48), ("D4", 192)])
def test_weyl_group_orders(kind, order):
    assert L.root_system(kind).weyl_order() == order


def test_c2_highest_root():
    rs = L.root_system("C2")
    assert rs.theta == (2, 1)
    assert rs.theta_coroot == (1, 0)


@pytest.mark.parametrize("kind", RANK_LE_3 + ["D4"])
def test_coxeter_relations(kind):
    rs = L.root_system(kind)
    a = rs.cartan
    n = rs.rank
    gens = [L.simple_reflection(rs, i) for i in range(n + 1)]
    one = AffineTransform.identity(n)
    for g in gens:
        assert g * g == one
    order = {0: 2, 1: 3, 2: 4, 3: 6}
    for i, j in itertools.combinations(range(1, n + 1), 2):
        m = order[a[i - 1][j - 1] * a[j - 1][i - 1]]
        prod = gens[i] * gens[j]
        p = one
        for _ in range(m):
            p = p * prod
        assert p == one


def test_a2_worked_example():
    rs = L.root_system("A2")
    x = L.word_to_transform([1, 0], rs)
    for e in [L.alcove_barycenter(rs), (Fraction(1, 7), Fraction(1, 5))]:
        assert x.inverse()(e) == (1 - e[0] - e[1], 1 + e[0])
    f = L.max_antidominant_factor(x, rs)
    assert f.lam == (0, 1)
    assert L.length_by_separation(x, rs) == 2
    assert L.box_membership(x.inverse(), rs) == (0, 1)


def test_c2_worked_example():
    rs = L.root_system("C2")
    x = L.word_to_transform([0, 1, 0], rs)
    e = (Fraction(1, 9), Fraction(1, 11))
    assert x.inverse()(e) == (e[0], 2 - 2 * e[0] - e[1])
    assert L.max_antidominant_factor(x, rs).lam == (0, 1)


@pytest.mark.parametrize("kind", RANK_LE_3)
def test_length_is_word_distance(kind):
    rs = L.root_system(kind)
    for x, d in bfs_lengths(rs, 6).items():
        assert L.length_by_separation(x, rs) == d


@pytest.mark.parametrize("kind", RANK_LE_3)
def test_lusztig_formula(kind):
    rs = L.root_system(kind)
    for lam in itertools.product(range(3), repeat=rs.rank):
        t = AffineTransform.translation(lam)
        expected = sum(rs.pair(alpha, lam) for alpha in rs.positive_roots)
        assert L.length_by_separation(t, rs) == L.translation_length(lam, rs) == expected


@pytest.mark.parametrize("kind", ["A2", "C2", "G2", "B3"])
def test_reduced_word_transform(kind):
    rs = L.root_system(kind)

    @given(words(rs.rank))
    def check(word):
        x = L.word_to_transform(word, rs)
        w, rest = L.reduced_word_transform(x, rs)
        assert len(w) == L.length_by_separation(x, rs)
        assert L.word_to_transform(w, rs) * rest == x
        assert rest == AffineTransform.identity(rs.rank)

    check()


def test_length_zero_part_of_extended_element():
    rs = L.root_system("A2")
    x = AffineTransform.translation((1, 0))
    w, rest = L.reduced_word_transform(x, rs)
    assert len(w) == 2 and L.length_by_separation(rest, rs) == 0
    assert rest != AffineTransform.identity(2)


@pytest.mark.parametrize("kind", RANK_LE_3)
def test_max_factor_matches_brute_force(kind):
    rs = L.root_system(kind)
    checked = 0
    for x, _ in L.alcoves_by_length(rs, 6):
        if not L.is_min_in_coset(x, rs):
            with pytest.raises(L.PreconditionError):
                L.max_antidominant_factor(x, rs)
            continue
        f = L.max_antidominant_factor(x, rs)
        assert L.brute_force_max_factor(x, rs) == [f.lam]
        assert f.length_x == f.length_y + f.length_t
        assert x == f.cofactor * AffineTransform.translation(tuple(-v for v in f.lam))
        checked += 1
    assert checked > 5


@pytest.mark.parametrize("kind", ["A2", "A3", "B2", "C2", "G2", "B3", "C3"])
def test_closed_form(kind):
    """x = w t_{-mu}: lambda = mu minus the fundamental coweights of {i : w(alpha_i) < 0}."""
    rs = L.root_system(kind)
    for w in L.finite_weyl_group(rs):
        for mu in itertools.product(range(3), repeat=rs.rank):
            x = w * AffineTransform.translation(tuple(-v for v in mu))
            guess = L.closed_form_lambda(w, mu, rs)
            if L.is_min_in_coset(x, rs):
                assert L.max_antidominant_factor(x, rs).lam == guess
            else:
                assert not L.is_dominant(guess)


@pytest.mark.parametrize("kind,depth", [("A2", 6), ("B2", 6), ("C2", 6), ("G2", 10), ("A3", 8), ("B3", 15), ("C3", 15)])
def test_box_partition(kind, depth):
    rs = L.root_system(kind)
    p = L.alcove_barycenter(rs)
    in_box_zero = 0
    for y, _ in L.alcoves_by_length(rs, depth):
        q = y(p)
        # never on a wall of a box, so exactly one box contains y A_0
        assert all(Fraction(v).denominator != 1 for v in q)
        lam = L.box_membership(y, rs)
        assert all(lam[i] < q[i] < lam[i] + 1 for i in range(rs.rank))
        if all(v > 0 for v in q):
            assert L.is_dominant(lam)
        in_box_zero += lam == (0,) * rs.rank
    assert in_box_zero == L.alcoves_per_box(rs)


@pytest.mark.parametrize("kind", ["A2", "B2", "C2", "G2", "A3", "B3", "C3"])
def test_box_order_criterion(kind):
    """For y A_0 in the dominant chamber: t_lam <=_R y iff lam <= box(y) coordinatewise."""
    rs = L.root_system(kind)
    for y, _ in L.alcoves_by_length(rs, 6):
        if not all(v > 0 for v in y(L.alcove_barycenter(rs))):
            continue
        box = L.box_membership(y, rs)
        for lam in L.dominant_coweights_up_to(rs, L.length_by_separation(y, rs)):
            below = L.right_weak_leq(AffineTransform.translation(lam), y, rs)
            assert below == all(a <= b for a, b in zip(lam, box))


@pytest.mark.parametrize("kind", ["A2", "B2", "G2", "A3", "B3", "C3"])
def test_weak_order_inversion_sets(kind):
    rs = L.root_system(kind)
    group = list(L.finite_weyl_group(rs))
    for y in group:
        for w in group:
            additive = L.length_by_separation(w * y.inverse(), rs) + L.length_by_separation(y, rs) == L.length_by_separation(w, rs)
            assert additive == (L.inversion_set(y, rs) <= L.inversion_set(w, rs))


def test_box_membership_examples():
    rs = L.root_system("B3")
    assert L.box_membership(AffineTransform.identity(3), rs) == (0, 0, 0)
    for lam in [(1, 0, 2), (0, 3, 1)]:
        assert L.box_membership(AffineTransform.translation(lam), rs) == lam


def test_parse_affine_word():
    assert L.parse_affine_word("s0 s1*s2") == [0, 1, 2]
    with pytest.raises(ValueError):
        L.parse_affine_word("t1")
