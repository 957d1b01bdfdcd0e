"""Dense polynomials over the prime field GF(p).

Polynomials are lists of residues, constant term first, with no trailing
zeros (the zero polynomial is ``[]``).  Only what the modulus search and
the irreducibility test need lives here.
"""


def trim(a):
    a = list(a)
    while a and a[-1] == 0:
        a.pop()
    return a


def degree(a):
    return len(a) - 1


def sub(a, b, p):
    n = max(len(a), len(b))
    out = [0] * n
    for i, v in enumerate(a):
        out[i] = v
    for i, v in enumerate(b):
        out[i] = (out[i] - v) % p
    return trim(out)


def mul(a, b, p):
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return trim([v % p for v in out])


def divmod_(a, b, p):
    """Quotient and remainder of ``a / b``; ``b`` must be nonzero."""
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    a = trim(a)
    db = degree(b)
    lead_inv = pow(b[-1], -1, p)
    q = [0] * max(len(a) - db, 0)
    while len(a) - 1 >= db and a:
        shift = len(a) - 1 - db
        factor = a[-1] * lead_inv % p
        q[shift] = factor
        for i, v in enumerate(b):
            a[i + shift] = (a[i + shift] - factor * v) % p
        a = trim(a)
    return trim(q), a


def mod(a, b, p):
    return divmod_(a, b, p)[1]


def monic(a, p):
    if not a:
        return []
    inv = pow(a[-1], -1, p)
    return [v * inv % p for v in a]


def gcd(a, b, p):
    a, b = trim(a), trim(b)
    while b:
        a, b = b, mod(a, b, p)
    return monic(a, p)


def powmod(base, e, modulus, p):
    result = [1]
    base = mod(base, modulus, p)
    while e:
        if e & 1:
            result = mod(mul(result, base, p), modulus, p)
        e >>= 1
        if e:
            base = mod(mul(base, base, p), modulus, p)
    return result


def roots(a, p):
    """Roots of ``a`` in GF(p), by exhaustion (only used for tiny p or as a quick screen)."""
    found = []
    for r in range(p):
        acc = 0
        for v in reversed(a):
            acc = (acc * r + v) % p
        if acc == 0:
            found.append(r)
    return found


def to_str(a, var="x"):
    if not a:
        return "0"
    parts = []
    for e in range(len(a) - 1, -1, -1):
        c = a[e]
        if not c:
            continue
        if e == 0:
            parts.append(str(c))
        elif e == 1:
            parts.append(var if c == 1 else f"{c}{var}")
        else:
            parts.append(f"{var}^{e}" if c == 1 else f"{c}{var}^{e}")
    return " + ".join(parts)
