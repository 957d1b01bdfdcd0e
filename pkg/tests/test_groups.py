import itertools

import numpy as np
import pytest

from kcomplete.errors import CapacityError, ParameterError
from kcomplete.families import FamilyParams, build
from kcomplete.gf import make_field
from kcomplete.groups import (
    literal_inverse_report,
    star_op,
    verify_additive_group,
    verify_multiplicative_group,
    verify_relationship,
    verify_star_lemma,
)
from kcomplete.poly import compose_tables, identity_table, value_table
from kcomplete.verify import sweep_triples


def test_additive_examples(f9, f25):
    rep = verify_additive_group(f9, 1)
    assert rep.law_holds and rep.iso_verified and rep.checked_pairs == 9 and rep.counterexample is None
    rep = verify_additive_group(f25, 1)
    assert rep.law_holds and rep.checked_pairs == 25
    ident = value_table(build(FamilyParams("plus", 3, 1, 2, 0)))
    assert np.array_equal(compose_tables(ident, ident), identity_table(f9))


def test_multiplicative_examples(f9):
    rep = verify_multiplicative_group(f9, 1)
    assert rep.law_holds and rep.iso_verified and rep.checked_pairs == 4
    assert star_op(f9, 2, 2) == 0
    assert f9.div(2, f9.sub(2, 1)) == 2
    s0 = value_table(build(FamilyParams("star", 3, 1, 2, 0)))
    for d in (0, 2):
        sd = value_table(build(FamilyParams("star", 3, 1, 2, d)))
        assert np.array_equal(compose_tables(s0, sd), sd)


@pytest.mark.parametrize("p,s,n", sweep_triples(729))
def test_groups_across_fields(p, s, n):
    f = make_field(p, s * n)
    assert verify_additive_group(f, s).iso_verified
    assert verify_multiplicative_group(f, s).iso_verified
    assert verify_relationship(f, s)


def test_additive_isomorphism_by_relabeling(f25):
    # The composition table of {f_c+}, relabeled through c -> table, is addition in GF(5).
    base = f25.subfield(1)
    tables = {c: value_table(build(FamilyParams("plus", 5, 1, 2, c))) for c in base}
    label = {tables[c].tobytes(): c for c in base}
    for c, d in itertools.product(base, repeat=2):
        assert label[compose_tables(tables[c], tables[d]).tobytes()] == f25.add(c, d)


def test_star_parameter_never_reaches_one():
    for p, m in [(3, 2), (5, 2), (7, 2), (3, 3)]:
        f = make_field(p, m)
        others = [c for c in f.elements() if c != 1]
        assert all(star_op(f, c, d) != 1 for c in others for d in others)


def test_family_restricted_to_base_is_identity():
    for p, s, n in sweep_triples(729):
        f = make_field(p, s * n)
        base = f.subfield(s)
        for c in base:
            for flavor in ("plus", "star"):
                if flavor == "star" and c == 1:
                    continue
                t = value_table(build(FamilyParams(flavor, p, s, n, c)))
                assert t[base].tolist() == base


@pytest.mark.parametrize("q", [3, 5, 7, 9, 25, 27, 49])
def test_star_lemma(q):
    assert verify_star_lemma(q)


def test_star_lemma_neutral_element(f9):
    assert all(star_op(f9, a, 0) == a for a in f9.elements())


def test_star_lemma_bounds():
    with pytest.raises(ParameterError):
        verify_star_lemma(12)
    with pytest.raises(CapacityError):
        verify_star_lemma(3 ** 8)


def test_relationship_examples(f25):
    assert verify_relationship(make_field(3, 2), 1)
    assert verify_relationship(f25, 1)


def test_literal_inverse_reading_fails(f25, f49):
    rep = literal_inverse_report(f25, 1)
    assert not rep.law_holds
    c, mult, i = rep.counterexample
    # It does work for c = -1 only.
    assert c != f25.neg(1)
    rep = literal_inverse_report(make_field(3, 2), 1)
    assert rep.law_holds  # GF(3): the only c outside {0, 1} is 2 = -1


def test_bad_base_degree(f9):
    with pytest.raises(ParameterError):
        verify_additive_group(f9, 2)
    with pytest.raises(ParameterError):
        verify_relationship(f9, 3)


def test_report_serialization(f9):
    d = verify_additive_group(f9, 1).to_dict()
    assert list(d) == ["law", "base_field", "pairs_checked", "holds", "iso_verified", "counterexample"]


def test_corrupted_member_yields_counterexample(f9, monkeypatch):
    import kcomplete.groups as groups

    real = groups.value_table

    def corrupted(poly):
        t = real(poly).copy()
        if poly.coeff(2) == 2:  # f_2+ only
            t[[3, 4]] = t[[4, 3]]
        return t

    monkeypatch.setattr(groups, "value_table", corrupted)
    rep = verify_additive_group(f9, 1)
    assert not rep.law_holds and not rep.iso_verified
    c, d, i = rep.counterexample
    tables = {e: corrupted(build(FamilyParams("plus", 3, 1, 2, e))) for e in range(3)}
    assert compose_tables(tables[c], tables[d])[i] != tables[f9.add(c, d)][i]
