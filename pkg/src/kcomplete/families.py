"""The two polynomial families over GF(q^n) and their scaled variants.

For ``q = p^s`` and ``m = q + q^2 + ... + q^(n-1)``:

* plus:  ``f_c+(x) = x + c * sum_{j=1..m} x^(j(q-1))``
* star:  ``f_c*(x) = x + c * sum_{j=1..m} x^(j(q-1)+1)``

with ``c`` in the base subfield GF(q).  Both are the identity on GF(q);
off it, ``f_c+`` translates by ``-c`` and ``f_c*`` multiplies by ``1 - c``.
The big field is a single ``Field`` of degree ``s*n``; the base subfield is
recognised by ``a^q = a``.
"""

from dataclasses import dataclass, replace

import numpy as np

from .errors import ParameterError
from .gf import make_field
from .poly import SparsePoly, linear_mix

FLAVORS = ("plus", "star")


def family_m(q, n):
    """``q + q^2 + ... + q^(n-1)``, so that ``(m+1)(q-1) = q^n - 1``."""
    if q < 3 or n < 2:
        raise ParameterError(f"need q >= 3 and n >= 2, got q={q}, n={n}")
    return sum(q ** i for i in range(1, n))


@dataclass(frozen=True)
class FamilyParams:
    """One member of a family: ``b * f_c(flavor)`` over GF(p^(s*n)).

    ``c`` and ``b`` are element indices of the big field.  ``irr`` pins the
    big field's modulus (default: the smallest irreducible).
    """

    flavor: str
    p: int
    s: int
    n: int
    c: int = 0
    b: int = 1
    irr: tuple = None

    def __post_init__(self):
        if self.flavor not in FLAVORS:
            raise ParameterError(f"flavor must be one of {FLAVORS}, got {self.flavor!r}")
        for name in ("p", "s", "n", "c", "b"):
            v = getattr(self, name)
            if not isinstance(v, (int, np.integer)) or isinstance(v, bool):
                raise ParameterError(f"{name} must be an integer, got {v!r}")
        if self.p == 2:
            raise ParameterError("characteristic 2 is not supported; the families need odd p")
        if self.s < 1:
            raise ParameterError(f"base degree s must be >= 1, got {self.s}")
        if self.n < 2:
            raise ParameterError(f"extension degree n must be >= 2, got {self.n}")
        if self.irr is not None:
            object.__setattr__(self, "irr", tuple(int(v) for v in self.irr))
        f = self.field  # validates p and the size budget
        f.check(self.c)
        f.check(self.b)
        if not f.in_subfield(self.c, self.s):
            raise ParameterError(f"c = {self.c} is not in the base subfield GF({self.p}^{self.s})")
        if self.b == 0:
            raise ParameterError("scale b must be nonzero")

    @property
    def field(self):
        return make_field(self.p, self.s * self.n, self.irr)

    @property
    def q(self):
        return self.p ** self.s

    @property
    def m(self):
        return family_m(self.q, self.n)

    @property
    def order(self):
        return self.q ** self.n

    def with_(self, **changes):
        return replace(self, **changes)

    def descriptor(self):
        s = f"{self.flavor}:p={self.p},s={self.s},n={self.n},c={self.c}"
        if self.b != 1:
            s += f",b={self.b}"
        return s

    def __str__(self):
        return self.descriptor()


def parse_descriptor(text, irr=None):
    """Parse ``"plus:p=5,s=1,n=2,c=2"`` (optionally ``,b=...``)."""
    flavor, sep, rest = text.strip().partition(":")
    if not sep:
        raise ParameterError(f"malformed family descriptor {text!r}; expected 'plus:p=..,s=..,n=..,c=..'")
    values = {}
    for part in rest.split(","):
        key, eq, val = part.partition("=")
        key = key.strip()
        if not eq or key not in ("p", "s", "n", "c", "b") or key in values:
            raise ParameterError(f"malformed descriptor field {part!r} in {text!r}")
        try:
            values[key] = int(val)
        except ValueError:
            raise ParameterError(f"descriptor value {val!r} is not an integer") from None
    missing = {"p", "s", "n"} - values.keys()
    if missing:
        raise ParameterError(f"descriptor {text!r} is missing {sorted(missing)}")
    return FamilyParams(flavor.strip(), irr=irr, **values)


def _sum_terms(params, shift):
    q, m, c = params.q, params.m, params.c
    terms = {1: 1}
    if c:
        for j in range(1, m + 1):
            terms[j * (q - 1) + shift] = c
    return SparsePoly(params.field, terms)


def build_f_plus(params):
    """``x + c * sum_j x^(j(q-1))`` (unscaled)."""
    if params.flavor != "plus":
        raise ParameterError("build_f_plus needs flavor 'plus'")
    return _sum_terms(params, 0)


def build_f_star(params):
    """``x + c * sum_j x^(j(q-1)+1)`` (unscaled); ``c = 1`` builds but is not a permutation."""
    if params.flavor != "star":
        raise ParameterError("build_f_star needs flavor 'star'")
    return _sum_terms(params, 1)


def build_unscaled(params):
    return build_f_plus(params) if params.flavor == "plus" else build_f_star(params)


@dataclass(frozen=True)
class ScaledMember:
    """``b * f_c`` plus what is known about its maximal completeness.

    ``hypothesis_met``: ``b`` lies in a middle subfield (proper, not prime)
    and outside the prime subfield.  ``maximality_guaranteed``: in addition,
    for every ``k = 1..p-1`` the rewrite ``b f_c + kx = (b+k) f_c'`` with
    ``c' = bc/(b+k)`` lands on a permutation member (``c'`` in the base
    subfield, and ``c' != 1`` for star).
    """

    poly: SparsePoly
    params: FamilyParams
    hypothesis_met: bool
    maximality_guaranteed: bool


def middle_subfield_degrees(field):
    return [d for d in field.subfield_degrees() if 1 < d < field.m]


def in_middle_subfield(field, b):
    return any(field.in_subfield(b, d) for d in middle_subfield_degrees(field))


def rewritten_parameters(params):
    """``[(k, c')]`` with ``c' = bc/(b+k)`` for ``k = 1..p-1``; ``c'`` is ``None`` when ``b + k = 0``."""
    f = params.field
    bc = f.mul(params.b, params.c)
    out = []
    for k in range(1, params.p):
        denom = f.add(params.b, k)
        out.append((k, None if denom == 0 else f.div(bc, denom)))
    return out


def build_scaled(params):
    """``b * f_c`` as a ``ScaledMember``."""
    f = params.field
    poly = linear_mix(params.b, build_unscaled(params), 0)
    hypothesis = in_middle_subfield(f, params.b) and not f.in_subfield(params.b, 1)
    guaranteed = hypothesis
    if guaranteed:
        for _, cp in rewritten_parameters(params):
            if cp is None or not f.in_subfield(cp, params.s) or (params.flavor == "star" and cp == 1):
                guaranteed = False
                break
    return ScaledMember(poly, params, hypothesis, guaranteed)


def build(params):
    """The polynomial ``b * f_c`` for any flavor (``b = 1`` gives the plain member)."""
    poly = build_unscaled(params)
    return poly if params.b == 1 else linear_mix(params.b, poly, 0)


def closed_eval_plus(params, a):
    """``a`` on the base subfield, ``a - c`` elsewhere."""
    f = params.field
    if f.in_subfield(a, params.s):
        return f.check(a)
    return f.sub(a, params.c)


def closed_eval_star(params, a):
    """``a`` on the base subfield, ``(1 - c) a`` elsewhere."""
    f = params.field
    if f.in_subfield(a, params.s):
        return f.check(a)
    return f.mul(f.sub(1, params.c), a)


def closed_eval(params, a):
    """Closed form of ``b * f_c`` at ``a``."""
    f = params.field
    v = closed_eval_plus(params, a) if params.flavor == "plus" else closed_eval_star(params, a)
    return f.mul(params.b, v)


def base_mask(params):
    """Boolean array over all indices: True on the base subfield."""
    f = params.field
    mask = np.zeros(f.order, dtype=bool)
    mask[f.subfield(params.s)] = True
    return mask


def closed_table(params):
    """Value table of the closed form of ``b * f_c`` over the whole big field."""
    f = params.field
    xs = np.arange(f.order, dtype=np.int64)
    if params.flavor == "plus":
        outside = f.vsub(xs, np.full_like(xs, params.c))
    else:
        outside = f.vscale(f.sub(1, params.c), xs)
    v = np.where(base_mask(params), xs, outside)
    return v if params.b == 1 else f.vscale(params.b, v)
