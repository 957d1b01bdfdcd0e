"""Exact arithmetic in GF(p^m) over a polynomial basis.

Elements are handled as canonical integer indices: the element
``c_0 + c_1 t + ... + c_{m-1} t^{m-1}`` (``t`` a root of the modulus) has
index ``sum(c_i * p**i)``.  Scalar operations take and return indices; the
``v*`` methods do the same over whole numpy index arrays and are what the
exhaustive analyses run on.

For fields of order at most ``TABLE_ORDER`` a discrete-log table is built on
first vectorized use and then also serves scalar multiplication.  Results
are identical to the plain polynomial-basis path (see ``poly_mul``).
"""

from dataclasses import dataclass
from functools import lru_cache, total_ordering
import math
import threading

import numpy as np

from . import fpoly
from .errors import CapacityError, FieldArithmeticError, ParameterError, ReducibleModulusError

MAX_ORDER = 1 << 20
TABLE_ORDER = 1 << 16


def is_prime(n):
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


def factorize(n):
    """Prime factorization of a positive integer as ``{prime: exponent}``."""
    out = {}
    f = 2
    while f * f <= n:
        while n % f == 0:
            out[f] = out.get(f, 0) + 1
            n //= f
        f += 1 if f == 2 else 2
    if n > 1:
        out[n] = out.get(n, 0) + 1
    return out


def prime_power(q):
    """Split a prime power ``q`` into ``(p, m)``; raises ParameterError otherwise."""
    fs = factorize(q) if q > 1 else {}
    if len(fs) != 1:
        raise ParameterError(f"{q} is not a prime power")
    ((p, m),) = fs.items()
    return p, m


def _check_prime(p):
    if not isinstance(p, int) or not is_prime(p):
        raise ParameterError(f"characteristic {p!r} is not prime")


def irreducibility_failure(irr, p):
    """Return ``None`` if the monic ``irr`` is irreducible over GF(p), else a reason.

    Uses a root screen, then Rabin's test: ``x^(p^m) = x mod irr`` and
    ``gcd(x^(p^(m/r)) - x, irr) = 1`` for each prime ``r | m``.  The reason
    is a ``(message, factor)`` pair; ``factor`` is a nontrivial monic factor
    when one was exposed.
    """
    irr = fpoly.trim(irr)
    m = fpoly.degree(irr)
    if m < 1:
        return ("modulus has degree < 1", None)
    if m == 1:
        return None
    rs = fpoly.roots(irr, p)
    if rs:
        factor = [(-rs[0]) % p, 1]
        return (f"has root {rs[0]}, factor {fpoly.to_str(factor)}", factor)
    x = [0, 1]
    frob = [x]
    for _ in range(m):
        frob.append(fpoly.powmod(frob[-1], p, irr, p))
    for r in factorize(m):
        h = fpoly.sub(frob[m // r], x, p)
        g = fpoly.gcd(h, irr, p)
        if fpoly.degree(g) > 0:
            return (f"gcd(x^(p^{m // r}) - x, modulus) = {fpoly.to_str(g)}", g)
    if fpoly.sub(frob[m], x, p):
        return (f"x^(p^{m}) != x modulo the modulus", None)
    return None


def find_irreducible(p, m):
    """Smallest monic irreducible of degree ``m`` over GF(p).

    Candidates are ordered by the integer ``sum(a_i p^i)`` of their
    non-leading coefficients.  Returned constant-term first, leading 1 last.
    """
    _check_prime(p)
    if not isinstance(m, int) or m < 1:
        raise ParameterError(f"degree must be a positive integer, got {m!r}")
    for v in range(p ** m):
        coeffs = []
        for _ in range(m):
            v, r = divmod(v, p)
            coeffs.append(r)
        coeffs.append(1)
        if irreducibility_failure(coeffs, p) is None:
            return tuple(coeffs)
    raise AssertionError("no irreducible polynomial found")  # unreachable


@dataclass(frozen=True)
class FieldSpec:
    """Description of GF(p^m); ``irr`` of ``None`` means the default modulus."""

    p: int
    m: int
    irr: tuple = None

    def __str__(self):
        s = f"{self.p}^{self.m}"
        if self.irr is not None:
            s += ":" + ",".join(map(str, self.irr))
        return s


def parse_field_spec(text):
    """Parse ``"p^m"`` or ``"p^m:a0,a1,...,am"``."""
    text = text.strip()
    head, _, tail = text.partition(":")
    try:
        p_s, m_s = head.split("^")
        p, m = int(p_s), int(m_s)
        irr = tuple(int(v) for v in tail.split(",")) if tail else None
    except ValueError:
        raise ParameterError(f"malformed field spec {text!r}; expected 'p^m' or 'p^m:a0,...,am'") from None
    return FieldSpec(p, m, irr)


@dataclass(frozen=True)
class _Tables:
    exp: np.ndarray  # exp[i] = g^i, i in [0, Q-2]
    log: np.ndarray  # log[a] = i with g^i = a; log[0] = -1
    generator: int


class Field:
    """GF(p^m) with a fixed monic irreducible modulus.

    Immutable after construction; the lazily built log table is guarded
    by a lock so one instance can be shared between threads.
    """

    def __init__(self, p, m, irr=None):
        _check_prime(p)
        if not isinstance(m, int) or m < 1:
            raise ParameterError(f"degree must be a positive integer, got {m!r}")
        if p ** m > MAX_ORDER:
            raise CapacityError(f"GF({p}^{m}) has order {p ** m} > {MAX_ORDER}; exhaustive analysis budget exceeded")
        if irr is None:
            irr = find_irreducible(p, m)
        irr = tuple(int(v) for v in irr)
        if len(irr) != m + 1:
            raise ParameterError(f"modulus must have {m + 1} coefficients, got {len(irr)}")
        if any(not 0 <= v < p for v in irr):
            raise ParameterError(f"modulus coefficients must lie in [0, {p - 1}]")
        if irr[-1] != 1:
            raise ParameterError("modulus must be monic (last coefficient 1)")
        why = irreducibility_failure(list(irr), p)
        if why is not None:
            raise ReducibleModulusError(f"modulus {fpoly.to_str(list(irr))} is reducible over GF({p}): {why[0]}", why[1])
        self.p = p
        self.m = m
        self.irr = irr
        self.order = p ** m
        self._weights = tuple(p ** i for i in range(m))
        self._np_weights = np.array(self._weights, dtype=np.int64)
        self._lock = threading.Lock()
        self._tables = None
        self._order_factors = tuple(sorted(factorize(self.order - 1))) if self.order > 2 else ()

    # -- identity, display -------------------------------------------------

    @property
    def spec(self):
        return FieldSpec(self.p, self.m, self.irr)

    def __repr__(self):
        return f"Field({self.spec})"

    def __str__(self):
        return f"GF({self.p}^{self.m})"

    def __eq__(self, other):
        return isinstance(other, Field) and (self.p, self.m, self.irr) == (other.p, other.m, other.irr)

    def __hash__(self):
        return hash((self.p, self.m, self.irr))

    def __len__(self):
        return self.order

    def elements(self):
        return range(self.order)

    # -- encoding ------------------------------------------------------------

    def coeffs(self, a):
        a = self.check(a)
        out = []
        for _ in range(self.m):
            a, r = divmod(a, self.p)
            out.append(r)
        return tuple(out)

    def element(self, coeffs):
        coeffs = list(coeffs)
        if len(coeffs) > self.m:
            raise ParameterError(f"expected at most {self.m} coefficients")
        return sum((int(c) % self.p) * w for c, w in zip(coeffs, self._weights))

    def embed(self, k):
        """Image of the integer ``k`` in the prime subfield."""
        return int(k) % self.p

    def check(self, a):
        if isinstance(a, FieldElement):
            if a.field != self:
                raise ParameterError(f"element of {a.field!r} used in {self!r}")
            return a.index
        if isinstance(a, (int, np.integer)) and not isinstance(a, bool) and 0 <= a < self.order:
            return int(a)
        raise ParameterError(f"{a!r} is not an element index of {self!r}")

    def __call__(self, a):
        """Wrap an index (or coefficient sequence) as a ``FieldElement``."""
        if isinstance(a, (list, tuple)):
            a = self.element(a)
        return FieldElement(self, self.check(a))

    # -- scalar arithmetic ---------------------------------------------------

    def add(self, a, b):
        a, b = self.check(a), self.check(b)
        p, out, w = self.p, 0, 1
        while a or b:
            a, x = divmod(a, p)
            b, y = divmod(b, p)
            out += ((x + y) % p) * w
            w *= p
        return out

    def neg(self, a):
        a = self.check(a)
        p, out, w = self.p, 0, 1
        while a:
            a, x = divmod(a, p)
            out += (-x % p) * w
            w *= p
        return out

    def sub(self, a, b):
        return self.add(a, self.neg(b))

    def poly_mul(self, a, b):
        """Multiplication by schoolbook product and reduction modulo ``irr``."""
        ca, cb = self.coeffs(a), self.coeffs(b)
        p, m, irr = self.p, self.m, self.irr
        prod = [0] * (2 * m - 1)
        for i, x in enumerate(ca):
            if x:
                for j, y in enumerate(cb):
                    prod[i + j] += x * y
        for d in range(2 * m - 2, m - 1, -1):
            c = prod[d] % p
            if c:
                for i in range(m):
                    prod[d - m + i] -= c * irr[i]
            prod[d] = 0
        return sum((v % p) * w for v, w in zip(prod, self._weights))

    def mul(self, a, b):
        t = self._tables
        if t is None:
            return self.poly_mul(a, b)
        a, b = self.check(a), self.check(b)
        if a == 0 or b == 0:
            return 0
        return int(t.exp[(t.log[a] + t.log[b]) % (self.order - 1)])

    def pow(self, a, e):
        """``a**e`` by square-and-multiply; negative ``e`` allowed for nonzero ``a``."""
        a = self.check(a)
        e = int(e)
        if a == 0:
            if e < 0:
                raise FieldArithmeticError("zero has no inverse")
            return 1 if e == 0 else 0
        if e < 0:
            a, e = self.inv(a), -e
        if e == 0:
            return 1
        e = (e - 1) % (self.order - 1) + 1
        result = 1
        while e:
            if e & 1:
                result = self.mul(result, a)
            e >>= 1
            if e:
                a = self.mul(a, a)
        return result

    def inv(self, a):
        a = self.check(a)
        if a == 0:
            raise FieldArithmeticError("zero has no inverse")
        return self.pow(a, self.order - 2) if self.order > 2 else 1

    def div(self, a, b):
        return self.mul(a, self.inv(b))

    def arith(self, kind, a, b=None):
        """Dispatch one of add|sub|mul|div|neg|inv|pow by name."""
        if kind in ("neg", "inv"):
            return getattr(self, kind)(a)
        if kind == "pow":
            return self.pow(a, b)
        if kind in ("add", "sub", "mul", "div"):
            return getattr(self, kind)(a, b)
        raise ParameterError(f"unknown operation {kind!r}")

    # -- structure -----------------------------------------------------------

    def frobenius(self, a, e=1):
        """``a**(p**e)``."""
        if e < 0:
            raise ParameterError("Frobenius exponent must be non-negative")
        return self.pow(a, self.p ** (e % self.m))

    def _check_divisor(self, d):
        if not isinstance(d, int) or d < 1 or self.m % d:
            raise ParameterError(f"GF({self.p}^{self.m}) has no subfield of degree {d!r}")

    def in_subfield(self, a, d):
        """True iff ``a`` lies in the subfield GF(p^d)."""
        self._check_divisor(d)
        return self.frobenius(a, d) == self.check(a)

    def subfield(self, d):
        """Elements of GF(p^d), ascending by index."""
        self._check_divisor(d)
        if d == self.m:
            return list(range(self.order))
        if self.order <= TABLE_ORDER:
            allx = np.arange(self.order, dtype=np.int64)
            return [int(v) for v in np.flatnonzero(self.vpow(allx, self.p ** d) == allx)]
        return [a for a in range(self.order) if self.in_subfield(a, d)]

    def subfield_degrees(self):
        return [d for d in range(1, self.m + 1) if self.m % d == 0]

    def multiplicative_order(self, a):
        a = self.check(a)
        if a == 0:
            raise ParameterError("zero has no multiplicative order")
        n = self.order - 1
        for r in reversed(self._order_factors):
            while n % r == 0 and self.pow(a, n // r) == 1:
                n //= r
        return n

    def primitive_element(self):
        """Smallest-index generator of the multiplicative group."""
        if self._tables is not None:
            return self._tables.generator
        for a in range(1, self.order):
            if self.multiplicative_order(a) == self.order - 1:
                return a
        raise AssertionError("multiplicative group is cyclic")  # unreachable

    # -- tables and vectorized arithmetic -----------------------------------

    def tables(self):
        """Build (once) the discrete-log tables; ``None`` above ``TABLE_ORDER``."""
        if self.order > TABLE_ORDER:
            return None
        if self._tables is None:
            with self._lock:
                if self._tables is None:
                    self._tables = self._build_tables()
        return self._tables

    def _build_tables(self):
        n = self.order - 1
        g = self.primitive_element()
        exp = np.empty(max(n, 1), dtype=np.int64)
        log = np.full(self.order, -1, dtype=np.int64)
        cur = 1
        for i in range(n):
            exp[i] = cur
            log[cur] = i
            cur = self.poly_mul(cur, g)
        if cur != 1 or (log[1:] < 0).any():
            raise AssertionError(f"{g} is not a generator of {self!r}")
        exp.setflags(write=False)
        log.setflags(write=False)
        return _Tables(exp, log, g)

    def digits(self, arr):
        """Coefficient matrix (len(arr), m) of an index array."""
        arr = np.asarray(arr, dtype=np.int64)
        return (arr[..., None] // self._np_weights) % self.p

    def undigits(self, d):
        return (np.asarray(d, dtype=np.int64) % self.p) @ self._np_weights

    def vadd(self, a, b):
        return self.undigits(self.digits(a) + self.digits(b))

    def vneg(self, a):
        return self.undigits(-self.digits(a))

    def vsub(self, a, b):
        return self.undigits(self.digits(a) - self.digits(b))

    def vmul(self, a, b):
        a = np.asarray(a, dtype=np.int64)
        b = np.asarray(b, dtype=np.int64)
        t = self.tables()
        if t is None:
            return self._vpoly_mul(a, b)
        a, b = np.broadcast_arrays(a, b)
        out = t.exp[(t.log[a] + t.log[b]) % (self.order - 1)]
        return np.where((a == 0) | (b == 0), 0, out)

    def _vpoly_mul(self, a, b):
        a, b = np.broadcast_arrays(a, b)
        da, db = self.digits(a), self.digits(b)
        m, p = self.m, self.p
        prod = np.zeros(a.shape + (2 * m - 1,), dtype=np.int64)
        for i in range(m):
            for j in range(m):
                prod[..., i + j] += da[..., i] * db[..., j]
        prod %= p
        irr = np.array(self.irr[:m], dtype=np.int64)
        for d in range(2 * m - 2, m - 1, -1):
            c = prod[..., d]
            prod[..., d - m:d] -= c[..., None] * irr
            prod[..., d - m:d] %= p
        return self.undigits(prod[..., :m])

    def vpow(self, a, e):
        """Elementwise ``a**e`` for ``e >= 0`` (with ``0**0 = 1``)."""
        a = np.asarray(a, dtype=np.int64)
        e = int(e)
        if e < 0:
            raise ParameterError("vectorized power needs a non-negative exponent")
        if e == 0:
            return np.ones_like(a)
        e = (e - 1) % (self.order - 1) + 1
        t = self.tables()
        if t is not None:
            out = t.exp[(t.log[a] * e) % (self.order - 1)]
            return np.where(a == 0, 0, out)
        result = np.ones_like(a)
        base = a
        while e:
            if e & 1:
                result = self._vpoly_mul(result, base)
            e >>= 1
            if e:
                base = self._vpoly_mul(base, base)
        return result

    def vscale(self, c, a):
        return self.vmul(np.full(np.shape(a), self.check(c), dtype=np.int64), a)


@lru_cache(maxsize=None)
def _cached_field(p, m, irr):
    return Field(p, m, irr)


def make_field(spec, m=None, irr=None):
    """Build (or fetch the cached) field from a FieldSpec, a spec string, or ``(p, m[, irr])``."""
    if isinstance(spec, str):
        spec = parse_field_spec(spec)
    if isinstance(spec, FieldSpec):
        p, m, irr = spec.p, spec.m, spec.irr
    else:
        p = spec
    if m is None:
        raise ParameterError("field degree missing")
    _check_prime(p)
    if isinstance(m, int) and m >= 1 and p ** m > MAX_ORDER:
        raise CapacityError(f"GF({p}^{m}) has order {p ** m} > {MAX_ORDER}; exhaustive analysis budget exceeded")
    if irr is None:
        irr = find_irreducible(p, m)
    return _cached_field(p, m, tuple(int(v) for v in irr))


@total_ordering
class FieldElement:
    """An element bound to its field, with operator overloading.

    Plain ints in arithmetic are read as prime-subfield integers.
    """

    __slots__ = ("field", "index")

    def __init__(self, field, index):
        self.field = field
        self.index = field.check(index)

    def _other(self, other):
        if isinstance(other, FieldElement):
            if other.field != self.field:
                raise ParameterError("operands belong to different fields")
            return other.index
        if isinstance(other, int):
            return self.field.embed(other)
        return NotImplemented

    def _wrap(self, i):
        return FieldElement(self.field, i)

    def __add__(self, other):
        o = self._other(other)
        return NotImplemented if o is NotImplemented else self._wrap(self.field.add(self.index, o))

    __radd__ = __add__

    def __sub__(self, other):
        o = self._other(other)
        return NotImplemented if o is NotImplemented else self._wrap(self.field.sub(self.index, o))

    def __rsub__(self, other):
        o = self._other(other)
        return NotImplemented if o is NotImplemented else self._wrap(self.field.sub(o, self.index))

    def __mul__(self, other):
        o = self._other(other)
        return NotImplemented if o is NotImplemented else self._wrap(self.field.mul(self.index, o))

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._other(other)
        return NotImplemented if o is NotImplemented else self._wrap(self.field.div(self.index, o))

    def __rtruediv__(self, other):
        o = self._other(other)
        return NotImplemented if o is NotImplemented else self._wrap(self.field.div(o, self.index))

    def __neg__(self):
        return self._wrap(self.field.neg(self.index))

    def __pow__(self, e):
        return self._wrap(self.field.pow(self.index, e))

    def inverse(self):
        return self._wrap(self.field.inv(self.index))

    def __eq__(self, other):
        if isinstance(other, FieldElement):
            return self.field == other.field and self.index == other.index
        if isinstance(other, int):
            return self.index == other
        return NotImplemented

    def __lt__(self, other):
        return self.index < self._other(other)

    def __hash__(self):
        return hash(self.index)

    def __int__(self):
        return self.index

    __index__ = __int__

    @property
    def coeffs(self):
        return self.field.coeffs(self.index)

    def __repr__(self):
        return f"{self.field}({self.index})"


def arith(kind, a, b=None):
    """Field arithmetic on FieldElements by operation name."""
    if not isinstance(a, FieldElement):
        raise ParameterError("arith expects FieldElement operands")
    f = a.field
    if isinstance(b, FieldElement):
        if b.field != f:
            raise ParameterError("operands belong to different fields")
        b = b.index
    return FieldElement(f, f.arith(kind, a.index, b))


def lcm(values):
    out = 1
    for v in values:
        out = out * v // math.gcd(out, v)
    return out
