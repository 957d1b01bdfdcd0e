import numpy as np
import pytest

from kcomplete.errors import CapacityError, ParameterError
from kcomplete.families import (
    FamilyParams,
    build,
    build_f_plus,
    build_f_star,
    build_scaled,
    closed_eval,
    closed_eval_plus,
    closed_eval_star,
    closed_table,
    family_m,
    parse_descriptor,
    rewritten_parameters,
)
from kcomplete.groups import relationship_lhs
from kcomplete.poly import SparsePoly, evaluate, value_table
from kcomplete.verify import sweep_triples


def test_family_m_examples():
    assert family_m(5, 2) == 5
    assert family_m(7, 2) == 7
    assert family_m(3, 3) == 12


@pytest.mark.parametrize("q,n", [(3, 2), (3, 5), (9, 3), (25, 2), (7, 4), (11, 3)])
def test_family_m_relations(q, n):
    m = family_m(q, n)
    p = min(d for d in range(2, q + 1) if q % d == 0)
    assert m == (q ** n - 1) // (q - 1) - 1
    assert (m + 1) * (q - 1) == q ** n - 1
    assert m % p == 0


def test_family_m_bounds():
    with pytest.raises(ParameterError):
        family_m(2, 3)
    with pytest.raises(ParameterError):
        family_m(5, 1)


def test_build_examples():
    f = build_f_plus(FamilyParams("plus", 5, 1, 2, 2))
    assert f.terms == {1: 1, 4: 2, 8: 2, 12: 2, 16: 2, 20: 2}
    assert build_f_plus(FamilyParams("plus", 5, 1, 2, 0)) == SparsePoly.x(f.field)
    assert build_f_plus(FamilyParams("plus", 3, 1, 2, 1)).terms == {1: 1, 2: 1, 4: 1, 6: 1}
    s = build_f_star(FamilyParams("star", 5, 1, 2, 4))
    assert s.terms == {1: 1, 5: 4, 9: 4, 13: 4, 17: 4, 21: 4}
    s = build_f_star(FamilyParams("star", 7, 1, 2, 6))
    assert s.terms == {1: 1, **{e: 6 for e in (7, 13, 19, 25, 31, 37, 43)}}
    assert build_f_star(FamilyParams("star", 7, 1, 2, 0)).terms == {1: 1}


def test_flavor_mismatch():
    with pytest.raises(ParameterError):
        build_f_plus(FamilyParams("star", 3, 1, 2, 1))
    with pytest.raises(ParameterError):
        build_f_star(FamilyParams("plus", 3, 1, 2, 1))


@pytest.mark.parametrize(
    "kwargs",
    [
        dict(flavor="plus", p=2, s=1, n=3),
        dict(flavor="plus", p=9, s=1, n=2),
        dict(flavor="plus", p=3, s=1, n=1),
        dict(flavor="plus", p=3, s=0, n=2),
        dict(flavor="minus", p=3, s=1, n=2),
        dict(flavor="plus", p=3, s=1, n=2, c=3),  # t is outside GF(3)
        dict(flavor="plus", p=3, s=1, n=2, c=9),  # not an element
        dict(flavor="plus", p=3, s=1, n=2, b=0),
    ],
)
def test_invalid_params(kwargs):
    with pytest.raises(ParameterError):
        FamilyParams(**kwargs)


def test_capacity_for_families():
    with pytest.raises(CapacityError):
        FamilyParams("plus", 3, 1, 13)


def test_closed_eval_examples(f9):
    params = FamilyParams("plus", 3, 1, 2, 1)
    assert closed_eval_plus(params, 2) == 2
    assert closed_eval_plus(params, 3) == 5
    zero = FamilyParams("plus", 3, 1, 2, 0)
    assert all(closed_eval_plus(zero, a) == a for a in f9.elements())
    s2 = FamilyParams("star", 3, 1, 2, 2)
    assert closed_eval_star(s2, 3) == 6
    for c in range(3):
        assert closed_eval_star(FamilyParams("star", 3, 1, 2, c), 0) == 0
    s1 = FamilyParams("star", 3, 1, 2, 1)
    assert [closed_eval_star(s1, a) for a in range(3, 9)] == [0] * 6


@pytest.mark.parametrize("p,s,n", [t for t in sweep_triples(729)])
def test_closed_form_equals_polynomial(p, s, n):
    f = FamilyParams("plus", p, s, n).field
    for c in f.subfield(s):
        for flavor in ("plus", "star"):
            params = FamilyParams(flavor, p, s, n, c)
            assert np.array_equal(value_table(build(params)), closed_table(params))


def test_scalar_closed_eval_equals_scalar_poly_eval():
    # Scalar route on both sides: per-element square-and-multiply vs. per-element case split.
    for p, s, n in [(3, 1, 2), (3, 1, 3), (5, 1, 2), (3, 2, 2)]:
        f = FamilyParams("plus", p, s, n).field
        for c in f.subfield(s):
            for flavor, closed in (("plus", closed_eval_plus), ("star", closed_eval_star)):
                params = FamilyParams(flavor, p, s, n, c)
                poly = build(params)
                assert all(evaluate(poly, a) == closed(params, a) for a in f.elements())


@pytest.mark.parametrize("p,s,n", [t for t in sweep_triples(2401)])
def test_geometric_sum(p, s, n):
    f = FamilyParams("plus", p, s, n).field
    q = p ** s
    geo = value_table(SparsePoly(f, {j * (q - 1): 1 for j in range(1, family_m(q, n) + 1)}))
    inside = set(f.subfield(s))
    minus_one = f.neg(1)
    for a in range(1, f.order):
        assert geo[a] == (0 if a in inside else minus_one)


@pytest.mark.parametrize("p,s,n", [t for t in sweep_triples(2401)])
def test_relationship_and_degree(p, s, n):
    f = FamilyParams("plus", p, s, n).field
    q = p ** s
    m = family_m(q, n)
    for c in f.subfield(s):
        fp = build_f_plus(FamilyParams("plus", p, s, n, c))
        fs = build_f_star(FamilyParams("star", p, s, n, c))
        assert relationship_lhs(fp) == fs
        if c:
            assert fp.degree == m * (q - 1) > 1
            assert fs.degree == m * (q - 1) + 1


def test_build_scaled_flags(f81):
    plain = FamilyParams("plus", 3, 1, 2, 1)
    assert build_scaled(plain).poly == build(plain)
    assert not build_scaled(FamilyParams("plus", 3, 1, 2, 1, b=2)).hypothesis_met
    tbar = next(b for b in f81.subfield(2) if not f81.in_subfield(b, 1))
    member = build_scaled(FamilyParams("plus", 3, 2, 2, 1, b=tbar))
    assert member.hypothesis_met and member.maximality_guaranteed
    assert member.poly == build_f_plus(FamilyParams("plus", 3, 2, 2, 1)).scale(tbar)


def test_star_scaled_guarantee_excludes_degenerate_rewrites(f81):
    # b f_c* + k x = (b+k) f_c'* with c' = bc/(b+k); c' = 1 exactly when c = 1 + k/b.
    tbar = next(b for b in f81.subfield(2) if not f81.in_subfield(b, 1))
    bad = {f81.add(1, f81.div(k, tbar)) for k in (1, 2)}
    for c in f81.subfield(2):
        if c == 1:
            continue
        member = build_scaled(FamilyParams("star", 3, 2, 2, c, b=tbar))
        assert member.hypothesis_met
        assert member.maximality_guaranteed == (c not in bad)
        assert (1 in [cp for _, cp in rewritten_parameters(member.params)]) == (c in bad)


def test_scale_outside_base_is_not_guaranteed():
    # b in the middle subfield GF(9) but base GF(3): c' = bc/(b+k) leaves the base.
    f = FamilyParams("plus", 3, 1, 4).field
    tbar = next(b for b in f.subfield(2) if not f.in_subfield(b, 1))
    member = build_scaled(FamilyParams("plus", 3, 1, 4, 1, b=tbar))
    assert member.hypothesis_met and not member.maximality_guaranteed


def test_closed_eval_scaled(f81):
    tbar = next(b for b in f81.subfield(2) if not f81.in_subfield(b, 1))
    c = f81.subfield(2)[-1]
    params = FamilyParams("star", 3, 2, 2, c, b=tbar)
    table = value_table(build(params))
    assert np.array_equal(table, closed_table(params))
    assert all(table[a] == closed_eval(params, a) for a in range(0, 81, 7))


def test_descriptor_roundtrip():
    params = parse_descriptor("star:p=7,s=1,n=2,c=6,b=1")
    assert params == FamilyParams("star", 7, 1, 2, 6)
    assert params.descriptor() == "star:p=7,s=1,n=2,c=6"
    c = FamilyParams("plus", 3, 2, 2).field.subfield(2)[-1]
    assert parse_descriptor(FamilyParams("plus", 3, 2, 2, c, b=c).descriptor()).b == c
    for bad in ("plus", "plus:p=5,s=1", "plus:p=5,s=1,n=2,c=x", "plus:p=5,s=1,n=2,z=1", "plus:p=5,p=5,s=1,n=2"):
        with pytest.raises(ParameterError):
            parse_descriptor(bad)


def test_explicit_modulus_changes_indices_not_structure():
    # GF(9) via x^2 + x + 2 instead of x^2 + 1.
    params = FamilyParams("plus", 3, 1, 2, 1, irr=(2, 1, 1))
    assert params.field.irr == (2, 1, 1)
    table = value_table(build(params))
    assert np.array_equal(table, closed_table(params))
    assert sorted(table.tolist()) == list(range(9))
