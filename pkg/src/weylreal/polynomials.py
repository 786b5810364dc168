"""Dense univariate polynomials with exact coefficients.

A polynomial is a tuple of coefficients in ascending degree order; the zero
polynomial is the empty tuple.  Integer polynomials use ``int`` coefficients,
rational ones ``Fraction``.  All helpers return stripped tuples.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import List, Optional, Sequence, Tuple

Poly = Tuple


def strip(p: Sequence) -> Poly:
    p = list(p)
    while p and p[-1] == 0:
        p.pop()
    return tuple(p)


def degree(p: Sequence) -> int:
    """Degree of a stripped polynomial; -1 for zero."""
    return len(p) - 1


def leading(p: Sequence):
    return p[-1]


def add(p: Sequence, q: Sequence) -> Poly:
    if len(p) < len(q):
        p, q = q, p
    out = list(p)
    for i, c in enumerate(q):
        out[i] += c
    return strip(out)


def sub(p: Sequence, q: Sequence) -> Poly:
    return add(p, tuple(-c for c in q))


def scale(p: Sequence, k) -> Poly:
    return strip(c * k for c in p)


def mul(p: Sequence, q: Sequence) -> Poly:
    if not p or not q:
        return ()
    out = [0] * (len(p) + len(q) - 1)
    for i, a in enumerate(p):
        if a == 0:
            continue
        for j, b in enumerate(q):
            out[i + j] += a * b
    return strip(out)


def power(p: Sequence, k: int) -> Poly:
    out: Poly = (1,)
    for _ in range(k):
        out = mul(out, p)
    return out


def divmod_poly(p: Sequence, q: Sequence) -> Tuple[Poly, Poly]:
    """Quotient and remainder.

    Stays in the integers when ``q`` is monic (or +-1-leading); otherwise the
    arithmetic is carried out over the rationals.
    """
    q = strip(q)
    if not q:
        raise ZeroDivisionError("polynomial division by zero")
    r = list(strip(p))
    dq = len(q) - 1
    lc = q[-1]
    unit = lc in (1, -1) and all(isinstance(c, int) for c in r)
    if len(r) - 1 < dq:
        return (), tuple(r)
    quot = [0] * (len(r) - dq)
    for k in range(len(r) - 1, dq - 1, -1):
        c = r[k]
        if c == 0:
            continue
        f = c * lc if unit else Fraction(c) / lc
        quot[k - dq] = f
        for j in range(dq + 1):
            r[k - dq + j] -= f * q[j]
    return strip(quot), strip(r)


def exact_quotient(p: Sequence, q: Sequence) -> Optional[Poly]:
    """``p / q`` when ``q`` divides ``p`` exactly, else ``None``."""
    quot, rem = divmod_poly(p, q)
    return None if rem else quot


def derivative(p: Sequence) -> Poly:
    return strip(i * c for i, c in enumerate(p) if i > 0)


def evaluate(p: Sequence, x):
    acc = 0
    for c in reversed(p):
        acc = acc * x + c
    return acc


def monic(p: Sequence) -> Poly:
    lc = Fraction(p[-1])
    return tuple(Fraction(c) / lc for c in p)


def gcd(p: Sequence, q: Sequence) -> Poly:
    """Monic gcd over the rationals."""
    a, b = strip(p), strip(q)
    while b:
        _, r = divmod_poly(a, b)
        a, b = b, r
    if not a:
        return ()
    return monic(a)


def squarefree_part(p: Sequence) -> Poly:
    p = strip(p)
    g = gcd(p, derivative(p))
    if len(g) <= 1:
        return p
    quot, _ = divmod_poly(p, g)
    return quot


def is_reciprocal(p: Sequence) -> bool:
    """Palindromic or anti-palindromic coefficient list."""
    p = strip(p)
    rev = p[::-1]
    return p == rev or p == tuple(-c for c in rev)


def to_int_poly(p: Sequence) -> Poly:
    out = []
    for c in p:
        c = Fraction(c)
        if c.denominator != 1:
            raise ValueError(f"non-integral coefficient {c}")
        out.append(int(c))
    return strip(out)


def to_string(p: Sequence, var: str = "t") -> str:
    p = strip(p)
    if not p:
        return "0"
    parts: List[str] = []
    for k in range(len(p) - 1, -1, -1):
        c = p[k]
        if c == 0:
            continue
        mag = abs(c)
        if k == 0:
            body = f"{mag}"
        else:
            mono = var if k == 1 else f"{var}^{k}"
            body = mono if mag == 1 else f"{mag}*{mono}"
        sign = "-" if c < 0 else "+"
        if not parts:
            parts.append(body if c > 0 else f"-{body}")
        else:
            parts.append(f"{sign} {body}")
    return " ".join(parts)


# -- cyclotomic polynomials -------------------------------------------------


def _divisors(k: int) -> List[int]:
    return [d for d in range(1, k + 1) if k % d == 0]


def euler_phi(k: int) -> int:
    result, m, p = k, k, 2
    while p * p <= m:
        if m % p == 0:
            while m % p == 0:
                m //= p
            result -= result // p
        p += 1
    if m > 1:
        result -= result // m
    return result


@lru_cache(maxsize=None)
def cyclotomic(k: int) -> Poly:
    """Phi_k via t^k - 1 = prod_{d | k} Phi_d."""
    if k < 1:
        raise ValueError("cyclotomic order must be positive")
    num: Poly = (-1,) + (0,) * (k - 1) + (1,)
    for d in _divisors(k)[:-1]:
        num, rem = divmod_poly(num, cyclotomic(d))
        assert not rem
    return num


# -- Sturm sequences and real roots ------------------------------------------


def sturm_sequence(p: Sequence) -> List[Poly]:
    p = tuple(Fraction(c) for c in strip(p))
    seq = [p, derivative(p)]
    while seq[-1]:
        _, r = divmod_poly(seq[-2], seq[-1])
        seq.append(tuple(-c for c in r))
    seq.pop()
    return seq


def _variations(signs: Sequence[int]) -> int:
    nz = [s for s in signs if s != 0]
    return sum(1 for a, b in zip(nz, nz[1:]) if a != b)


def _sign(x) -> int:
    return (x > 0) - (x < 0)


def variations_at(seq: Sequence[Poly], x) -> int:
    return _variations([_sign(evaluate(q, x)) for q in seq])


def variations_at_infinity(seq: Sequence[Poly], positive: bool = True) -> int:
    signs = []
    for q in seq:
        s = _sign(q[-1])
        if not positive and (len(q) - 1) % 2 == 1:
            s = -s
        signs.append(s)
    return _variations(signs)


def count_real_roots(p: Sequence, lo=None, hi=None) -> int:
    """Distinct real roots of ``p`` in the half-open interval (lo, hi].

    ``None`` stands for -infinity / +infinity respectively.
    """
    seq = sturm_sequence(squarefree_part(p))
    v_lo = variations_at_infinity(seq, positive=False) if lo is None else variations_at(seq, Fraction(lo))
    v_hi = variations_at_infinity(seq, positive=True) if hi is None else variations_at(seq, Fraction(hi))
    return v_lo - v_hi


def cauchy_bound(p: Sequence) -> Fraction:
    p = strip(p)
    lc = abs(Fraction(p[-1]))
    return 1 + max(abs(Fraction(c)) for c in p[:-1]) / lc if len(p) > 1 else Fraction(1)


@dataclass(frozen=True)
class IsolatingInterval:
    """Rational interval [lo, hi] containing exactly one root of ``poly``."""

    poly: Poly
    lo: Fraction
    hi: Fraction

    @property
    def width(self) -> Fraction:
        return self.hi - self.lo

    @property
    def midpoint(self) -> Fraction:
        return (self.lo + self.hi) / 2

    def contains(self, x) -> bool:
        return self.lo <= x <= self.hi

    def overlaps(self, other: "IsolatingInterval") -> bool:
        return self.lo <= other.hi and other.lo <= self.hi

    def strictly_above(self, other: "IsolatingInterval") -> bool:
        return self.lo > other.hi

    def root_count(self) -> int:
        """Sturm count of roots in [lo, hi] (closed)."""
        p = self.poly
        extra = 1 if evaluate(p, self.lo) == 0 else 0
        return count_real_roots(p, self.lo, self.hi) + extra

    def refine(self, width) -> "IsolatingInterval":
        """Bisect until the interval is no wider than ``width``."""
        width = Fraction(width)
        p = squarefree_part(self.poly)
        lo, hi = self.lo, self.hi
        if lo == hi:
            return self
        s_hi = _sign(evaluate(p, hi))
        if s_hi == 0:
            return IsolatingInterval(self.poly, hi, hi)
        while hi - lo > width:
            mid = (lo + hi) / 2
            s_mid = _sign(evaluate(p, mid))
            if s_mid == 0:
                return IsolatingInterval(self.poly, mid, mid)
            if s_mid == s_hi:
                hi = mid
            else:
                lo = mid
        return IsolatingInterval(self.poly, lo, hi)

    def decimal(self, digits: int = 10) -> str:
        """Decimal string whose every printed digit is certified by the interval.

        Digits are dropped until rounding both endpoints gives the same string.
        """
        for d in range(digits, -1, -1):
            a = _round_fraction(self.lo, d, sig=True)
            b = _round_fraction(self.hi, d, sig=True)
            if a == b:
                return a
        return _round_fraction(self.midpoint, 0, sig=False)

    def to_json(self) -> List[str]:
        return [str(self.lo), str(self.hi)]


def _round_fraction(x: Fraction, digits: int, sig: bool) -> str:
    """Truncate (not round) ``x`` to ``digits`` significant digits."""
    if x == 0:
        return "0"
    neg = x < 0
    x = abs(x)
    ip = int(x)
    int_digits = len(str(ip)) if ip > 0 else 0
    frac_digits = max(digits - int_digits, 0) if sig else digits
    scaled = int(x * 10**frac_digits)
    s = str(scaled).rjust(frac_digits + 1, "0")
    body = s[: len(s) - frac_digits] + ("." + s[len(s) - frac_digits:] if frac_digits else "")
    return ("-" if neg else "") + body


def isolate_largest_real_root(p: Sequence, above=1, width=Fraction(1, 10**12)) -> Optional[IsolatingInterval]:
    """Isolate the greatest real root of ``p`` strictly greater than ``above``.

    Returns ``None`` when there is no such root.  The result has width at most
    ``width`` and Sturm count exactly one.
    """
    p = strip(p)
    if len(p) <= 1:
        return None
    sf = squarefree_part(p)
    seq = sturm_sequence(sf)
    above = Fraction(above)
    v_above = variations_at(seq, above)
    hi = cauchy_bound(sf)
    if hi <= above:
        return None
    v_hi = variations_at(seq, hi)
    if v_above - v_hi == 0:
        return None
    lo = above
    # keep exactly one root (the largest) in (lo, hi]
    while v_above - v_hi > 1 or hi - lo > 1:
        mid = (lo + hi) / 2
        v_mid = variations_at(seq, mid)
        if v_mid - v_hi >= 1:
            lo, v_above = mid, v_mid
        else:
            hi = mid
    if evaluate(sf, hi) == 0:
        return IsolatingInterval(p, hi, hi)
    return IsolatingInterval(p, lo, hi).refine(width)
