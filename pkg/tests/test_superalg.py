import itertools
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from gl11weight import linalg
from gl11weight.superalg import (
    BOSONIC, DIM, GL11, G, H, QM, QP, SPECS, SUPERTRACE_PRODUCTS, SuperTensor, adjoint_action,
    format_tensor, is_invariant, jacobi_violations, koszul_permute, metric_invariance_violations,
    skew_violations, tensor_B, tensor_C, tensor_F, tensor_K, tensor_M, tensor_N,
)


def T(spec, *terms):
    """Build a tensor from (coeff, letters...) tuples."""
    out = SuperTensor(spec, len(terms[0]) - 1)
    for k, *w in terms:
        out = out + SuperTensor.word(spec, *w, coeff=k)
    return out


def test_brackets():
    assert GL11.br(G, QP) == {QP: 1}
    assert GL11.br(G, QM) == {QM: -1}
    assert GL11.br(QP, QM) == {H: 1}
    assert GL11.br(QM, QP) == {H: 1}  # symmetric for two odd elements
    assert GL11.br(H, G) == {} and GL11.br(QP, QP) == {}
    assert GL11.parity == (0, 0, 1, 1) and BOSONIC.parity == (0, 0, 0, 0)


def test_metric_and_dual():
    m = GL11.metric
    assert m[H][G] == m[G][H] == 1 and m[G][G] == 0
    assert m[QP][QM] == 1 and m[QM][QP] == -1
    for i, j in itertools.product(range(DIM), repeat=2):
        assert sum(GL11.metric[i][k] * GL11.dual[k][j] for k in range(DIM)) == (i == j)


def test_supertrace_products_documented():
    assert set(SUPERTRACE_PRODUCTS.values()) == {-1}


@pytest.mark.parametrize("spec", SPECS.values(), ids=list(SPECS))
def test_structure_checks(spec):
    assert jacobi_violations(spec) == []
    assert skew_violations(spec) == []
    assert metric_invariance_violations(spec) == []


# Koszul permutation

def test_koszul_examples():
    qq = SuperTensor.word(GL11, QP, QM)
    assert koszul_permute(qq, (1, 0)) == SuperTensor.word(GL11, QM, QP, coeff=-1)
    assert koszul_permute(SuperTensor.word(GL11, H, G), (1, 0)) == SuperTensor.word(GL11, G, H)
    t = SuperTensor.word(GL11, QP, QM, H)
    assert koszul_permute(t, (1, 2, 0)) == SuperTensor.word(GL11, H, QP, QM)
    assert koszul_permute(qq, (1, 0)) != koszul_permute(SuperTensor.word(BOSONIC, QP, QM), (1, 0))


def test_koszul_rejects_bad_permutation():
    with pytest.raises(ValueError):
        koszul_permute(SuperTensor.word(GL11, H, G), (0, 0))


words3 = st.lists(st.integers(0, 3), min_size=4, max_size=4).map(tuple)
perms4 = st.permutations(range(4)).map(tuple)


@given(words3, perms4, perms4)
def test_koszul_is_a_group_action(w, s1, s2):
    t = SuperTensor.word(GL11, *w)
    composed = tuple(s2[s1[i]] for i in range(4))
    assert koszul_permute(koszul_permute(t, s1), s2) == koszul_permute(t, composed)


@given(words3, perms4)
def test_adjoint_action_commutes_with_permutation(w, s):
    t = SuperTensor.word(GL11, *w)
    for x in range(DIM):
        assert adjoint_action(x, koszul_permute(t, s)) == koszul_permute(adjoint_action(x, t), s)


# adjoint action

def test_adjoint_examples():
    assert adjoint_action(G, SuperTensor.word(GL11, QP, QM)).is_zero()
    for w in itertools.product(range(DIM), repeat=2):
        assert adjoint_action(H, SuperTensor.word(GL11, *w)).is_zero()
    assert adjoint_action(QP, tensor_C(GL11)).is_zero()
    # Q+ passes an odd factor before acting on the second slot
    got = adjoint_action(QP, SuperTensor.word(GL11, QP, QM))
    assert got == SuperTensor.word(GL11, QP, H, coeff=-1)


# fixed tensors

def test_C_matches_the_four_term_formula():
    want = T(GL11, (1, G, H), (1, H, G), (1, QM, QP), (-1, QP, QM))
    assert tensor_C(GL11) == want


def test_B_values():
    assert tensor_B(GL11) == SuperTensor.word(GL11, H, H, coeff=-2)
    assert tensor_B(BOSONIC) == SuperTensor.word(BOSONIC, H, H, coeff=2)


def test_F_expansion():
    want = T(GL11, (-1, H, QP, QM), (-1, H, QM, QP), (1, QP, H, QM), (-1, QP, QM, H),
             (1, QM, H, QP), (-1, QM, QP, H))
    assert tensor_F(GL11) == want


def test_flipping_the_q_first_terms_breaks_invariance():
    # the same six words with the Q-first signs reversed are not invariant
    flipped = T(GL11, (-1, H, QP, QM), (-1, H, QM, QP), (-1, QP, H, QM), (1, QP, QM, H),
                (-1, QM, H, QP), (1, QM, QP, H))
    assert not is_invariant(flipped)


def test_order_three_invariants_span():
    h3 = SuperTensor.word(GL11, H, H, H)
    c = tensor_C(GL11)
    hc = SuperTensor.word(GL11, H) @ c
    ch = c @ SuperTensor.word(GL11, H)
    mid = koszul_permute(hc, (1, 0, 2))
    big_t = T(GL11, (1, G, G, H), (1, G, H, G), (1, H, G, G), (1, G, QM, QP), (-1, G, QP, QM),
              (1, QM, G, QP), (1, QM, QP, G), (-1, QP, G, QM), (-1, QP, QM, G))
    six = [h3, mid, hc, ch, tensor_F(GL11), big_t]
    assert all(is_invariant(t) for t in six)
    assert linalg.rank([dict(t.terms) for t in six]) == 6


@pytest.mark.parametrize("spec", SPECS.values(), ids=list(SPECS))
def test_small_tensors_invariant(spec):
    for make in (tensor_C, tensor_F, tensor_B, tensor_K, tensor_M, tensor_N):
        assert is_invariant(make(spec)), make.__name__


def test_ladder_relation():
    assert tensor_K(GL11) == tensor_M(GL11) * Fraction(1, 2)
    assert tensor_K(BOSONIC) == tensor_M(BOSONIC) * Fraction(-1, 2)
    assert not tensor_N(GL11).is_zero()


def test_M_by_hand():
    # with B = -2 HH, M = -2 (H_1 H_3 C_24 + C_13 H_2 H_4 - C_14 H_2 H_3 - H_1 H_4 C_23)
    b, c = tensor_B(GL11), tensor_C(GL11)
    terms = {}
    for (i, j), x in b:
        for (k, l), y in c:
            for slots, sign in (((0, 2, 1, 3), 1), ((1, 3, 0, 2), 1), ((1, 2, 0, 3), -1), ((0, 3, 1, 2), -1)):
                w = [0] * 4
                w[slots[0]], w[slots[1]], w[slots[2]], w[slots[3]] = i, j, k, l
                # H is even, so only the C legs can pick up a sign, and they never swap
                terms[tuple(w)] = terms.get(tuple(w), 0) + sign * x * y
    assert tensor_M(GL11) == SuperTensor(GL11, 4, terms)


def test_tensor_arithmetic():
    a = SuperTensor.word(GL11, H, G)
    assert (a - a).is_zero()
    assert (a @ SuperTensor.word(GL11, QP)).arity == 3
    with pytest.raises(ValueError):
        a + SuperTensor.word(GL11, H)
    assert format_tensor(SuperTensor(GL11, 2)) == "0"
