"""Sparse polynomials over GF(p^m) and their value tables.

A polynomial is a map exponent -> nonzero coefficient index.  Functions on
the field are represented by value tables: numpy int64 arrays of length Q
whose entry ``i`` is the index of ``f(i)``.  Composition and functional
equality are always decided on tables.
"""

import numpy as np

from .errors import ParameterError
from .gf import Field


class SparsePoly:
    """Polynomial over a ``Field`` stored as ``{exponent: coefficient index}``."""

    __slots__ = ("field", "terms")

    def __init__(self, field, terms=None):
        if not isinstance(field, Field):
            raise ParameterError("SparsePoly needs a Field")
        self.field = field
        clean = {}
        for e, c in (terms or {}).items():
            if not isinstance(e, (int, np.integer)) or e < 0:
                raise ParameterError(f"exponent {e!r} must be a non-negative integer")
            c = field.check(c)
            if c:
                clean[int(e)] = c
        self.terms = clean

    @classmethod
    def x(cls, field):
        return cls(field, {1: 1})

    @classmethod
    def constant(cls, field, c):
        return cls(field, {0: c})

    @classmethod
    def monomial(cls, field, e, c=1):
        return cls(field, {e: c})

    @property
    def degree(self):
        """Largest exponent; -1 for the zero polynomial."""
        return max(self.terms, default=-1)

    def __len__(self):
        return len(self.terms)

    def __bool__(self):
        return bool(self.terms)

    def coeff(self, e):
        return self.terms.get(e, 0)

    def _same_field(self, other):
        if other.field != self.field:
            raise ParameterError("polynomials over different fields")

    def __eq__(self, other):
        if not isinstance(other, SparsePoly):
            return NotImplemented
        return self.field == other.field and self.terms == other.terms

    def __hash__(self):
        return hash((self.field, tuple(sorted(self.terms.items()))))

    def __add__(self, other):
        if not isinstance(other, SparsePoly):
            return NotImplemented
        self._same_field(other)
        f = self.field
        terms = dict(self.terms)
        for e, c in other.terms.items():
            terms[e] = f.add(terms.get(e, 0), c)
        return SparsePoly(f, terms)

    def __neg__(self):
        f = self.field
        return SparsePoly(f, {e: f.neg(c) for e, c in self.terms.items()})

    def __sub__(self, other):
        if not isinstance(other, SparsePoly):
            return NotImplemented
        return self + (-other)

    def __mul__(self, other):
        f = self.field
        if isinstance(other, SparsePoly):
            self._same_field(other)
            terms = {}
            for e1, c1 in self.terms.items():
                for e2, c2 in other.terms.items():
                    e = e1 + e2
                    terms[e] = f.add(terms.get(e, 0), f.mul(c1, c2))
            return SparsePoly(f, terms)
        return self.scale(other)

    __rmul__ = __mul__

    def scale(self, c):
        """Multiply every coefficient by the element ``c`` (an index or FieldElement)."""
        f = self.field
        c = f.check(c)
        return SparsePoly(f, {e: f.mul(c, v) for e, v in self.terms.items()})

    def __call__(self, a):
        return evaluate(self, a)

    def items(self):
        """Terms by descending exponent."""
        return sorted(self.terms.items(), reverse=True)

    def to_text(self):
        """``"exp:coeff,..."`` with exponents descending; the zero polynomial is ``""``."""
        return ",".join(f"{e}:{c}" for e, c in self.items())

    @classmethod
    def from_text(cls, field, text):
        terms = {}
        text = text.strip()
        if not text:
            return cls(field)
        for part in text.split(","):
            try:
                e_s, c_s = part.split(":")
                e, c = int(e_s), int(c_s)
            except ValueError:
                raise ParameterError(f"malformed term {part!r}; expected 'exp:coeffIndex'") from None
            if e in terms:
                raise ParameterError(f"exponent {e} listed twice")
            terms[e] = c
        return cls(field, terms)

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for e, c in self.items():
            coeff = "" if c == 1 and e else str(c)
            if e == 0:
                parts.append(str(c))
            elif e == 1:
                parts.append(f"{coeff}x")
            else:
                parts.append(f"{coeff}x^{e}")
        return " + ".join(parts)

    def __repr__(self):
        return f"SparsePoly({self.field!r}, '{self.to_text()}')"


def evaluate(f, a):
    """``f(a)``, term by term with square-and-multiply powers."""
    field = f.field
    a = field.check(a)
    acc = 0
    for e, c in f.terms.items():
        acc = field.add(acc, field.mul(c, field.pow(a, e)))
    return acc


def linear_mix(b, f, k):
    """Coefficients of ``b*f(x) + k*x`` for field elements ``b``, ``k``."""
    field = f.field
    b = _scalar(field, b)
    k = _scalar(field, k)
    terms = {e: field.mul(b, c) for e, c in f.terms.items()}
    terms[1] = field.add(terms.get(1, 0), k)
    return SparsePoly(field, terms)


def _scalar(field, v):
    # Integers 0..p-1 are their own indices, so integer multiples need no separate path.
    return field.check(v)


def value_table(f):
    """Images of every field element, as an int64 array indexed by element."""
    field = f.field
    xs = np.arange(field.order, dtype=np.int64)
    acc = np.zeros((field.order, field.m), dtype=np.int64)
    for e, c in f.terms.items():
        vals = field.vpow(xs, e)
        if c != 1:
            vals = field.vscale(c, vals)
        acc += field.digits(vals)
    return field.undigits(acc)


def mix_table(field, table, b, k):
    """Table of ``b*g(x) + k*x`` given the table of ``g``; matches ``value_table(linear_mix(b, g, k))``."""
    b = _scalar(field, b)
    k = _scalar(field, k)
    xs = np.arange(field.order, dtype=np.int64)
    scaled = table if b == 1 else field.vscale(b, table)
    if k == 0:
        return np.asarray(scaled, dtype=np.int64)
    return field.vadd(scaled, field.vscale(k, xs))


def identity_table(field):
    return np.arange(field.order, dtype=np.int64)


def compose_tables(f, g):
    """Table of ``f o g``: apply ``g`` first, then ``f``."""
    f = np.asarray(f, dtype=np.int64)
    g = np.asarray(g, dtype=np.int64)
    if f.shape != g.shape or f.ndim != 1:
        raise ParameterError(f"cannot compose tables of lengths {len(f)} and {len(g)}")
    return f[g]


def inverse_table(table):
    table = np.asarray(table, dtype=np.int64)
    inv = np.empty_like(table)
    inv[table] = np.arange(len(table), dtype=np.int64)
    return inv


def reduce_exponents(f):
    """Fold exponents ``e >= Q`` to ``(e-1) % (Q-1) + 1`` using ``x^Q = x`` on GF(Q)."""
    field = f.field
    q = field.order
    terms = {}
    for e, c in f.terms.items():
        if e >= q:
            e = (e - 1) % (q - 1) + 1
        terms[e] = field.add(terms.get(e, 0), c)
    return SparsePoly(field, terms)
