from __future__ import annotations

import itertools

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

import biprod.construction as construction
from biprod.construction import (
    biproduct,
    c_map,
    canonical_mixed_map,
    hom_add,
    idempotents,
    star_map,
    t_inverse,
    t_map,
    verify_biproduct,
    verify_interchange,
    verify_intertwining,
    verify_semiadditive,
    y_map,
    zero_map,
    zero_object,
)
from biprod.errors import DomainMismatch, NoNullaryStructure
from biprod.instances import finrel, mat_semiring, z_chain
from biprod.kernel import check_inverse_pair, compose, equal, identity
from biprod.monoidal import DistributorWitnesses

REL = finrel(3)
NAT = mat_semiring("mat-nat", 3)

T11_PERMUTATION = (
    (1, 0, 0, 0),
    (0, 0, 1, 0),
    (0, 1, 0, 0),
    (0, 0, 0, 1),
)

T12_PERMUTATION = (
    (1, 0, 0, 0, 0, 0),
    (0, 0, 1, 0, 0, 0),
    (0, 0, 0, 1, 0, 0),
    (0, 1, 0, 0, 0, 0),
    (0, 0, 0, 0, 1, 0),
    (0, 0, 0, 0, 0, 1),
)


def to_bool(m):
    return tuple(tuple(bool(v) for v in row) for row in m)


def test_zero_object_sits_between_terminal_and_initial():
    zw = zero_object(REL)
    assert zw.obj.data == 0
    assert zw.one_to_zero.dom == REL.terminal.obj
    assert zw.one_to_zero.cod == REL.initial.obj


def test_zero_map_is_empty_relation():
    z = zero_map(REL.obj(1), REL.obj(2))
    assert z.payload == ((False,), (False,))


def test_zero_map_needs_nullary_structure():
    ch = z_chain(-2, 2)
    with pytest.raises(NoNullaryStructure):
        zero_map(ch.obj(0), ch.obj(1))


def test_star_frozen_on_singletons():
    one = NAT.obj(1)
    s = star_map(one, one, one, one)
    assert s.payload == T11_PERMUTATION
    assert s.dom.data == 4 and s.cod.data == 4


def test_star_type_on_mixed_dimensions():
    s = star_map(REL.obj(1), REL.obj(2), REL.obj(1), REL.obj(2))
    assert s.dom.data == 9
    assert s.cod.data == 9


def test_y_is_certified_and_equals_star():
    quad = (NAT.obj(1), NAT.obj(2), NAT.obj(1), NAT.obj(2))
    y = y_map(*quad)
    assert check_inverse_pair(y.fwd, y.bwd).passed
    assert equal(y.fwd, star_map(*quad))


def test_interchange_over_small_universe():
    objs = REL.objects(1)
    for quad in itertools.product(objs, repeat=4):
        assert verify_interchange(*quad).passed


def test_interchange_reports_broken_distributor():
    broken = finrel(2)
    real = broken.distributors

    def shifted(a, b, c):
        m = real.prod_inv(a, b, c)
        if len(m.payload) < 2:
            return m
        return broken.mor(m.dom, m.cod, m.payload[1:] + m.payload[:1])

    broken.distributors = DistributorWitnesses(
        prod_inv=shifted,
        coprod_inv=real.coprod_inv,
        nullary_prod_inv=real.nullary_prod_inv,
        nullary_coprod_inv=real.nullary_coprod_inv,
    )
    res = verify_interchange(
        broken.obj(1), broken.obj(1), broken.obj(2), broken.obj(2)
    )
    assert not res.passed
    first = res.failures()[0]
    assert "dist_prod" in (first.label + first.note)


def test_t_frozen_on_singletons():
    one = NAT.obj(1)
    assert t_map(one, one).payload == T11_PERMUTATION


def test_t_frozen_on_one_two():
    t = t_map(REL.obj(1), REL.obj(2))
    assert t.payload == to_bool(T12_PERMUTATION)


def test_t_inverse_is_transposed_permutation():
    ti = t_inverse(REL.obj(1), REL.obj(2))
    assert equal(ti.fwd, t_map(REL.obj(1), REL.obj(2)))
    assert ti.bwd.payload == tuple(zip(*ti.fwd.payload))
    assert check_inverse_pair(ti.fwd, ti.bwd).passed


def test_t_inverse_cached():
    a, b = NAT.obj(2), NAT.obj(3)
    assert t_inverse(a, b) is t_inverse(a, b)


def test_idempotents_frozen_on_singletons():
    e, e_prime = idempotents(NAT.obj(1), NAT.obj(1))
    diag_14 = (
        (1, 0, 0, 0),
        (0, 0, 0, 0),
        (0, 0, 0, 0),
        (0, 0, 0, 1),
    )
    assert e.payload == diag_14
    assert e_prime.payload == diag_14


def test_idempotents_square_to_themselves():
    e, e_prime = idempotents(REL.obj(2), REL.obj(3))
    assert equal(compose(e, e), e)
    assert equal(compose(e_prime, e_prime), e_prime)


def test_intertwining_holds():
    assert verify_intertwining(REL.obj(1), REL.obj(2)).passed
    assert verify_intertwining(NAT.obj(2), NAT.obj(3)).passed


def test_intertwining_detects_wrong_zero(monkeypatch):
    real = construction.zero_map

    def fake(a, b):
        if a == b:
            return identity(a)
        return real(a, b)

    monkeypatch.setattr(construction, "zero_map", fake)
    res = construction.verify_intertwining(REL.obj(1), REL.obj(2))
    assert not res.passed
    labels = [chk.label for chk in res.failures()]
    assert any("[1,2]" in lab or "[2,1]" in lab for lab in labels)


def test_canonical_mixed_map_is_identity_block_matrix():
    c = canonical_mixed_map(NAT.obj(2), NAT.obj(3))
    eye5 = tuple(tuple(1 if i == j else 0 for j in range(5)) for i in range(5))
    assert c.payload == eye5


def test_c_map_matches_canonical():
    ip = c_map(REL.obj(1), REL.obj(1))
    assert ip.fwd.payload == to_bool(((1, 0), (0, 1)))
    assert equal(ip.fwd, canonical_mixed_map(REL.obj(1), REL.obj(1)))


def test_biproduct_witness_equations():
    a, b = NAT.obj(2), NAT.obj(3)
    w = biproduct(a, b)
    assert w.apex == NAT.coproduct(a, b).apex
    assert equal(compose(w.pr1, w.in1), identity(a))
    assert equal(compose(w.pr1, w.in2), zero_map(b, a))
    assert equal(compose(w.pr2, w.in1), zero_map(a, b))
    assert equal(compose(w.pr2, w.in2), identity(b))
    assert verify_biproduct(a, b).passed


def test_hom_add_frozen_on_naturals():
    one = NAT.obj(1)
    f = NAT.mor(one, one, ((2,),))
    g = NAT.mor(one, one, ((3,),))
    assert hom_add(f, g).payload == ((5,),)


def test_hom_add_rejects_non_parallel():
    f = REL.mor(REL.obj(1), REL.obj(2), ((True,), (False,)))
    g = REL.mor(REL.obj(2), REL.obj(1), ((True, False),))
    with pytest.raises(DomainMismatch):
        hom_add(f, g)


@st.composite
def parallel_pair(draw, max_dim=3):
    a = draw(st.integers(0, max_dim))
    b = draw(st.integers(0, max_dim))

    def payload():
        return tuple(
            tuple(draw(st.booleans()) for _ in range(a)) for _ in range(b)
        )

    x, y = REL.obj(a), REL.obj(b)
    return REL.mor(x, y, payload()), REL.mor(x, y, payload())


@settings(max_examples=100, deadline=None)
@given(parallel_pair())
def test_hom_add_is_relational_union(fg):
    f, g = fg
    assert equal(hom_add(f, g), REL.native_add(f, g))


def test_semiadditive_vacuous_on_empty_sample():
    assert verify_semiadditive([]).passed


def test_semiadditive_exhaustive_small():
    one, two = REL.obj(1), REL.obj(2)
    sample = REL.enumerate_homset(one, one) + REL.enumerate_homset(one, two)
    res = verify_semiadditive(sample)
    assert res.passed
    labels = [chk.label for chk in res.details]
    assert any(lab.startswith("assoc[") for lab in labels)
    assert any(lab.startswith("post-linear[") for lab in labels)
    assert any(lab.startswith("pre-linear[") for lab in labels)


def test_semiadditive_propagates_missing_zero():
    ch = z_chain(-2, 2)
    sample = [ch.hom(ch.obj(0), ch.obj(1))]
    with pytest.raises(NoNullaryStructure):
        verify_semiadditive(sample)
