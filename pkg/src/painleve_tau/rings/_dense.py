# Dense univariate arithmetic on ascending coefficient tuples.
#
# Coefficients are Fractions or NFScalars; every function returns a trimmed
# tuple (no trailing zeros, zero polynomial == ()).

import math
from fractions import Fraction

from ..errors import IntegrityError

ZERO = Fraction(0)
ONE = Fraction(1)


def trim(coeffs):
    n = len(coeffs)
    while n and not coeffs[n - 1]:
        n -= 1
    return tuple(coeffs[:n])


def add(a, b):
    if len(a) < len(b):
        a, b = b, a
    out = list(a)
    for i, c in enumerate(b):
        if c:
            out[i] = out[i] + c
    return trim(out)


def sub(a, b):
    out = list(a) + [ZERO] * (len(b) - len(a))
    for i, c in enumerate(b):
        if c:
            out[i] = out[i] - c
    return trim(out)


def neg(a):
    return tuple(-c for c in a)


def scale(a, s):
    if not s:
        return ()
    return trim([c * s for c in a])


def mul(a, b):
    if not a or not b:
        return ()
    if len(a) * len(b) > 16 and all(type(c) is Fraction for c in a + b):
        return _int_mul(a, b)
    if len(a) < len(b):
        a, b = b, a
    out = [ZERO] * (len(a) + len(b) - 1)
    bnz = [(j, c) for j, c in enumerate(b) if c]
    for i, x in enumerate(a):
        if not x:
            continue
        for j, y in bnz:
            out[i + j] += x * y
    return trim(out)


def _as_ints(a):
    den = 1
    for c in a:
        den = den * c.denominator // math.gcd(den, c.denominator)
    return [c.numerator * (den // c.denominator) for c in a], den


def _int_mul(a, b):
    # convolve integer numerators over a common denominator
    ia, da = _as_ints(a)
    ib, db = _as_ints(b)
    out = [0] * (len(ia) + len(ib) - 1)
    bnz = [(j, c) for j, c in enumerate(ib) if c]
    for i, x in enumerate(ia):
        if x:
            for j, y in bnz:
                out[i + j] += x * y
    den = da * db
    return trim([Fraction(c, den) for c in out])


def deriv(a):
    return trim([a[i] * i for i in range(1, len(a))])


def divmod_(a, b):
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    if len(a) < len(b):
        return (), a
    r = list(a)
    db = len(b) - 1
    inv = 1 / b[-1]
    q = [ZERO] * (len(a) - db)
    for k in range(len(a) - 1, db - 1, -1):
        c = r[k]
        if not c:
            continue
        c = c * inv
        q[k - db] = c
        for j, bj in enumerate(b):
            if bj:
                r[k - db + j] -= c * bj
    return trim(q), trim(r[:db])


def exquo(a, b):
    q, r = divmod_(a, b)
    if r:
        raise IntegrityError("non-exact polynomial division")
    return q


def monic(a):
    if not a:
        return a
    lc = a[-1]
    if lc == 1:
        return a
    inv = 1 / lc
    return tuple(c * inv for c in a)


def gcd(a, b):
    """Monic gcd; Fraction inputs take the integer route, other scalars plain Euclid."""
    if a and b and all(type(c) is Fraction for c in a + b):
        return _rational_gcd(a, b)
    a, b = monic(a), monic(b)
    while b:
        _, r = divmod_(a, b)
        a, b = b, monic(r)
    return a


# a prime well above any coefficient we meet; only used to detect coprime inputs
_PRIME = (1 << 61) - 1


def _primitive_int(a):
    ints, _ = _as_ints(a)
    g = 0
    for c in ints:
        g = math.gcd(g, c)
    return [c // g for c in ints]


def _degree_mod_p(a, b, p):
    a = [c % p for c in a]
    b = [c % p for c in b]
    while b and b[-1] == 0:
        b.pop()
    while b:
        inv = pow(b[-1], -1, p)
        while len(a) >= len(b):
            c = a[-1] * inv % p
            shift = len(a) - len(b)
            for j, bj in enumerate(b):
                a[shift + j] = (a[shift + j] - c * bj) % p
            while a and a[-1] == 0:
                a.pop()
            if not a:
                break
        a, b = b, a
    return len(a) - 1


def _prem(a, b):
    # pseudo-remainder of integer polynomials
    r = list(a)
    lb, db = b[-1], len(b) - 1
    while len(r) - 1 >= db and r:
        c = r[-1]
        shift = len(r) - 1 - db
        r = [x * lb for x in r]
        for j, bj in enumerate(b):
            r[shift + j] -= c * bj
        while r and r[-1] == 0:
            r.pop()
    return r


def _rational_gcd(a, b):
    A, B = _primitive_int(a), _primitive_int(b)
    if A[-1] % _PRIME and B[-1] % _PRIME and _degree_mod_p(A, B, _PRIME) == 0:
        return (ONE,)
    if len(A) < len(B):
        A, B = B, A
    while B:
        r = _prem(A, B)
        if r:
            g = 0
            for c in r:
                g = math.gcd(g, c)
            r = [c // g for c in r]
        A, B = B, r
    lc = A[-1]
    return tuple(Fraction(c, lc) for c in A)


def evaluate(a, x):
    acc = ZERO
    for c in reversed(a):
        acc = acc * x + c
    return acc
