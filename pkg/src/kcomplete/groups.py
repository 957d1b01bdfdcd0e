"""Composition-group checks for the plus and star families.

All laws are checked on value tables, i.e. as identities of functions on
the big field.  The only coefficient-level check is the plus/star
relationship ``x * (f_c+(x) - x + 1) = f_c*(x)``.
"""

from dataclasses import dataclass

import numpy as np

from .errors import CapacityError, ParameterError
from .families import FamilyParams, build_f_plus, build_f_star
from .gf import make_field, prime_power
from .poly import SparsePoly, compose_tables, identity_table, value_table

STAR_LEMMA_MAX = 1 << 12


@dataclass
class GroupCheckReport:
    law: str
    base_field: str
    law_holds: bool
    checked_pairs: int
    iso_verified: bool
    counterexample: tuple = None

    def to_dict(self):
        return {
            "law": self.law,
            "base_field": self.base_field,
            "pairs_checked": self.checked_pairs,
            "holds": self.law_holds,
            "iso_verified": self.iso_verified,
            "counterexample": list(self.counterexample) if self.counterexample else None,
        }


def _family(field, s, flavor, c):
    if field.m % s or field.m // s < 2:
        raise ParameterError(f"GF({field.p}^{s}) is not a proper base subfield of {field}")
    return FamilyParams(flavor, field.p, s, field.m // s, c, irr=field.irr)


def _tables(field, s, flavor, cs):
    build = build_f_plus if flavor == "plus" else build_f_star
    return {c: value_table(build(_family(field, s, flavor, c))) for c in cs}


def _first_mismatch(a, b):
    diff = np.flatnonzero(a != b)
    return int(diff[0]) if diff.size else None


def _base_name(field, s):
    return f"GF({field.p}^{s}) in {field}"


def verify_additive_group(field, s):
    """``f_c+ o f_d+ = f_(c+d)+`` for all base ``c, d``; ``c -> f_c+`` injective with ``f_0+ = id``."""
    base = field.subfield(s)
    tables = _tables(field, s, "plus", base)
    holds, witness, pairs = True, None, 0
    for c in base:
        for d in base:
            pairs += 1
            i = _first_mismatch(compose_tables(tables[c], tables[d]), tables[field.add(c, d)])
            if i is not None and holds:
                holds, witness = False, (c, d, i)
    distinct = len({t.tobytes() for t in tables.values()}) == len(base)
    neutral = np.array_equal(tables[0], identity_table(field))
    return GroupCheckReport("additive", _base_name(field, s), holds, pairs, holds and distinct and neutral, witness)


def star_op(field, a, b):
    """``a * b = a + b - ab``."""
    return field.sub(field.add(a, b), field.mul(a, b))


def verify_multiplicative_group(field, s):
    """``f_c* o f_d* = f_(c+d-cd)*`` on base minus ``{1}``, inverses ``f_(c/(c-1))*``, neutral ``f_0*``.

    A ``None`` element index in the counterexample means the composed
    parameter left the set (``c + d - cd = 1``) or the inverse failed.
    """
    base = [c for c in field.subfield(s) if c != 1]
    tables = _tables(field, s, "star", base)
    ident = identity_table(field)
    holds, witness, pairs = True, None, 0
    for c in base:
        for d in base:
            pairs += 1
            e = star_op(field, c, d)
            if e == 1:
                i = None
            else:
                i = _first_mismatch(compose_tables(tables[c], tables[d]), tables[e])
                if i is None:
                    continue
            if holds:
                holds, witness = False, (c, d, i)
    for c in base:
        inv_c = field.div(c, field.sub(c, 1))
        if inv_c not in tables or not np.array_equal(compose_tables(tables[inv_c], tables[c]), ident):
            if holds:
                holds, witness = False, (c, inv_c, None)
    distinct = len({t.tobytes() for t in tables.values()}) == len(base)
    neutral = np.array_equal(tables[0], ident)
    # c -> 1 - c carries (base minus {1}, *) onto the nonzero base elements.
    image = sorted(field.sub(1, c) for c in base)
    onto = image == [a for a in field.subfield(s) if a != 0]
    return GroupCheckReport(
        "multiplicative", _base_name(field, s), holds, pairs, holds and distinct and neutral and onto, witness
    )


def literal_inverse_report(field, s):
    """Test the map ``x -> c x / (c - 1)`` off the base subfield as an inverse of ``f_c*``.

    Kept to document that reading: it is not an inverse in general (the
    multiplier ``c/(c-1)`` equals ``1/(1-c)`` only for ``c = -1``).
    """
    base_all = field.subfield(s)
    base = [c for c in base_all if c not in (0, 1)]
    tables = _tables(field, s, "star", base)
    in_base = np.zeros(field.order, dtype=bool)
    in_base[base_all] = True
    xs = identity_table(field)
    holds, witness = True, None
    for c in base:
        mult = field.div(c, field.sub(c, 1))
        literal = np.where(in_base, xs, field.vscale(mult, xs))
        i = _first_mismatch(compose_tables(literal, tables[c]), xs)
        if i is not None and holds:
            holds, witness = False, (c, mult, i)
    return GroupCheckReport("literal-inverse-map", _base_name(field, s), holds, len(base), False, witness)


def verify_star_lemma(q):
    """``(K minus {1}, a*b = a+b-ab)`` is a group and ``a -> 1 - a`` maps it isomorphically onto ``K^*``."""
    if q > STAR_LEMMA_MAX:
        raise CapacityError(f"star lemma check is quadratic in q; q = {q} > {STAR_LEMMA_MAX}")
    p, m = prime_power(q)
    field = make_field(p, m)
    els = np.array([a for a in field.elements() if a != 1], dtype=np.int64)
    n = len(els)
    A, B = np.meshgrid(els, els, indexing="ij")
    op = field.vsub(field.vadd(A, B), field.vmul(A, B))
    pos = np.full(field.order, -1, dtype=np.int64)
    pos[els] = np.arange(n)
    if (pos[op] < 0).any():
        return False  # not closed
    T = pos[op]  # T[i, j] = position of els[i] * els[j]
    idx = np.arange(n)
    zero = int(pos[0])
    if not (np.array_equal(T[zero], idx) and np.array_equal(T[:, zero], idx)):
        return False
    if not (T == zero).any(axis=1).all():
        return False  # some element lacks an inverse
    for i in range(n):
        # (a_i * a_j) * a_k == a_i * (a_j * a_k) for all j, k
        if not np.array_equal(T[T[i]], T[i][T]):
            return False
    phi = field.vsub(np.ones(n, dtype=np.int64), els)
    if sorted(phi.tolist()) != list(range(1, field.order)):
        return False
    lhs = phi[T]
    rhs = field.vmul(phi[:, None], phi[None, :])
    return bool(np.array_equal(lhs, rhs))


def relationship_lhs(f_plus):
    """Coefficients of ``x * (f(x) - x + 1)``."""
    field = f_plus.field
    x = SparsePoly.x(field)
    return x * (f_plus - x + SparsePoly.constant(field, 1))


def verify_relationship(field, s):
    """Exact coefficient identity ``x (f_c+ - x + 1) = f_c*`` for every base ``c``."""
    for c in field.subfield(s):
        lhs = relationship_lhs(build_f_plus(_family(field, s, "plus", c)))
        if lhs != build_f_star(_family(field, s, "star", c)):
            return False
    return True
