"""Integer polynomials and rational generating functions in one variable x.

Polynomials are tuples of integer coefficients in ascending powers of x,
trailing zeros removed; the zero polynomial is ``()``.

Generating functions built from cycle indices only ever have denominators
that are products of ``1 - x^L``, i.e. of cyclotomic polynomials. The
``CyclotomicSum`` accumulator exploits this: it keeps a common denominator as
an exponent per cyclotomic factor and reduces the final fraction by trial
division, which is an exact gcd computation for such denominators.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache, reduce
from math import gcd, lcm
from typing import Iterable, Sequence

Poly = tuple  # tuple[int, ...]


def poly(coeffs: Iterable[int]) -> Poly:
    c = list(coeffs)
    while c and c[-1] == 0:
        c.pop()
    return tuple(c)


def monomial(degree: int, coeff: int = 1) -> Poly:
    return poly([0] * degree + [coeff])


def padd(a: Poly, b: Poly) -> Poly:
    if len(a) < len(b):
        a, b = b, a
    out = list(a)
    for i, x in enumerate(b):
        out[i] += x
    return poly(out)


def pneg(a: Poly) -> Poly:
    return tuple(-x for x in a)


def psub(a: Poly, b: Poly) -> Poly:
    return padd(a, pneg(b))


def pscale(a: Poly, k: int) -> Poly:
    return poly(x * k for x in a) if k else ()


def pmul(a: Poly, b: Poly) -> Poly:
    if not a or not b:
        return ()
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return poly(out)


def ppow(a: Poly, k: int) -> Poly:
    out: Poly = (1,)
    for _ in range(k):
        out = pmul(out, a)
    return out


def pdivmod(a: Poly, b: Poly) -> tuple[Poly, Poly]:
    """Integer division; the leading coefficient of ``b`` must divide every step."""
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    rem = list(a)
    lead = b[-1]
    q = [0] * max(len(a) - len(b) + 1, 0)
    for i in range(len(q) - 1, -1, -1):
        c = rem[i + len(b) - 1]
        if c == 0:
            continue
        if c % lead:
            raise ValueError("inexact integer polynomial division")
        c //= lead
        q[i] = c
        for j, y in enumerate(b):
            rem[i + j] -= c * y
    return poly(q), poly(rem)


def pexact_div(a: Poly, b: Poly) -> Poly | None:
    """``a / b`` if the division leaves no remainder, else None."""
    try:
        q, r = pdivmod(a, b)
    except ValueError:
        return None
    return None if r else q


def content(a: Poly) -> int:
    return reduce(gcd, a, 0)


def _primitive(a: Poly) -> Poly:
    c = content(a)
    return tuple(x // c for x in a) if c > 1 else a


def pgcd(a: Poly, b: Poly) -> Poly:
    """Primitive gcd over the integers (pseudo-remainder Euclid), positive leading term."""
    a, b = _primitive(a), _primitive(b)
    while b:
        # pseudo-remainder keeps everything integral
        r = list(a)
        while len(r) >= len(b) and any(r):
            r = [x * b[-1] for x in r]
            k = r[-1] // b[-1]
            shift = len(r) - len(b)
            for j, y in enumerate(b):
                r[shift + j] -= k * y
            r = list(poly(r))
        a, b = b, _primitive(poly(r))
    if a and a[-1] < 0:
        a = pneg(a)
    return a or (1,)


def series_of(num: Poly, den: Poly, n_terms: int) -> list[int]:
    if not den or den[0] == 0:
        raise ValueError("denominator needs a nonzero constant term")
    d0 = den[0]
    out: list[int] = []
    for n in range(n_terms):
        s = num[n] if n < len(num) else 0
        for j in range(1, min(n, len(den) - 1) + 1):
            s -= den[j] * out[n - j]
        if s % d0:
            raise ValueError("series coefficients are not integers")
        out.append(s // d0)
    return out


def poly_str(a: Poly, var: str = "x") -> str:
    if not a:
        return "0"
    parts = []
    for i, c in enumerate(a):
        if not c:
            continue
        mag = abs(c)
        if i == 0:
            body = str(mag)
        else:
            pw = var if i == 1 else f"{var}^{i}"
            body = pw if mag == 1 else f"{mag}*{pw}"
        sign = "-" if c < 0 else "+"
        parts.append((sign, body))
    first_sign, first_body = parts[0]
    text = ("-" if first_sign == "-" else "") + first_body
    for sign, body in parts[1:]:
        text += sign + body
    return text


# ---------------------------------------------------------------------------
# cyclotomic factors, with the first one written as 1 - x


def _divisors(n: int) -> list[int]:
    return [d for d in range(1, n + 1) if n % d == 0]


@lru_cache(maxsize=None)
def cyclotomic(n: int) -> Poly:
    """Phi_n for n >= 2; for n = 1 returns 1 - x so every factor has constant term 1."""
    if n == 1:
        return (1, -1)
    num = poly([1] + [0] * (n - 1) + [-1])  # 1 - x^n
    for d in _divisors(n)[:-1]:
        num, r = pdivmod(num, cyclotomic(d))
        assert not r
    return num


def one_minus_power_factors(length: int) -> list[int]:
    """``1 - x^L`` is the product of these cyclotomic factors."""
    return _divisors(length)


@dataclass(frozen=True)
class RationalGF:
    """``numerator / denominator`` in lowest terms, denominator constant term positive.

    ``factors`` optionally records the denominator as cyclotomic orders with
    exponents, which only affects printing.
    """

    numerator: Poly
    denominator: Poly
    factors: tuple[tuple[int, int], ...] = field(default=(), compare=False)

    def __post_init__(self):
        if not self.denominator or self.denominator[0] == 0:
            raise ValueError("denominator needs a nonzero constant term")

    @classmethod
    def of(cls, numerator: Sequence[int], denominator: Sequence[int] = (1,)) -> RationalGF:
        num, den = poly(numerator), poly(denominator)
        if not den:
            raise ZeroDivisionError("zero denominator")
        if not num:
            return cls((), (1,))
        g = pgcd(num, den)
        if len(g) > 1:
            num = pdivmod(num, g)[0]
            den = pdivmod(den, g)[0]
        c = gcd(content(num), content(den))
        if c > 1:
            num = tuple(x // c for x in num)
            den = tuple(x // c for x in den)
        if den[0] < 0:
            num, den = pneg(num), pneg(den)
        return cls(num, den)

    @classmethod
    def from_factors(cls, numerator: Poly, exps: dict[int, int]) -> RationalGF:
        """Reduce ``numerator / prod cyclotomic(d)^e`` by cancelling common factors."""
        num = poly(numerator)
        if not num:
            return cls((), (1,))
        exps = {d: e for d, e in exps.items() if e > 0}
        for d in sorted(exps):
            while exps[d] > 0:
                q = pexact_div(num, cyclotomic(d))
                if q is None:
                    break
                num = q
                exps[d] -= 1
        den: Poly = (1,)
        for d, e in sorted(exps.items()):
            den = pmul(den, ppow(cyclotomic(d), e))
        return cls(num, den, tuple((d, e) for d, e in sorted(exps.items()) if e > 0))

    def series(self, n_terms: int) -> list[int]:
        return series_of(self.numerator, self.denominator, n_terms)

    def __add__(self, other: RationalGF) -> RationalGF:
        return RationalGF.of(
            padd(pmul(self.numerator, other.denominator), pmul(other.numerator, self.denominator)),
            pmul(self.denominator, other.denominator),
        )

    def __mul__(self, other: RationalGF) -> RationalGF:
        return RationalGF.of(pmul(self.numerator, other.numerator), pmul(self.denominator, other.denominator))

    def __str__(self) -> str:
        return format_gf(self)


def series_expand(f: RationalGF, n_terms: int) -> list[int]:
    """First ``n_terms`` Taylor coefficients of ``f``."""
    return f.series(n_terms)


def format_gf(f: RationalGF) -> str:
    """Readable form: power of x pulled out of the numerator, denominator factored when known."""
    num = f.numerator
    if not num:
        return "0"
    shift = next(i for i, c in enumerate(num) if c)
    rest = num[shift:]
    xpart = "" if shift == 0 else ("x" if shift == 1 else f"x^{shift}")
    if rest == (1,):
        top = xpart or "1"
    elif rest == (-1,):
        top = "-" + (xpart or "1")
    elif xpart:
        top = f"{xpart}*({poly_str(rest)})"
    else:
        top = poly_str(rest) if len([c for c in rest if c]) == 1 else f"({poly_str(rest)})"
    if f.factors:
        pieces = []
        for d, e in f.factors:
            base = f"({poly_str(cyclotomic(d))})"
            pieces.append(base if e == 1 else f"{base}^{e}")
        bottom = "*".join(pieces)
        if len(pieces) > 1:
            bottom = f"({bottom})"
    elif f.denominator == (1,):
        return top
    else:
        bottom = f"({poly_str(f.denominator)})"
    return f"{top}/{bottom}"


class CyclotomicSum:
    """Accumulates ``c * p(x) / prod (1 - x^L)`` terms with rational ``c``."""

    def __init__(self):
        self._groups: dict[tuple[int, ...], dict[int, Fraction]] = {}

    def add(self, coeff: Fraction | int, numerator: Poly, lengths: Iterable[int]) -> None:
        key = tuple(sorted(lengths))
        bucket = self._groups.setdefault(key, {})
        for i, c in enumerate(numerator):
            if c:
                bucket[i] = bucket.get(i, Fraction(0)) + Fraction(coeff) * c

    def result(self) -> RationalGF:
        groups = []
        for lengths, bucket in sorted(self._groups.items()):
            exps: dict[int, int] = {}
            for length in lengths:
                for d in one_minus_power_factors(length):
                    exps[d] = exps.get(d, 0) + 1
            groups.append((exps, bucket))
        common: dict[int, int] = {}
        for exps, _ in groups:
            for d, e in exps.items():
                common[d] = max(common.get(d, 0), e)
        scale = lcm(1, *(c.denominator for _, b in groups for c in b.values()))
        total: Poly = ()
        for exps, bucket in groups:
            top = poly(
                int(bucket.get(i, 0) * scale) for i in range(max(bucket, default=-1) + 1)
            )
            for d, e in common.items():
                extra = e - exps.get(d, 0)
                if extra:
                    top = pmul(top, ppow(cyclotomic(d), extra))
            total = padd(total, top)
        if content(total) % scale:
            # the sum need not have integral coefficients in general
            f = RationalGF.from_factors(total, common)
            return RationalGF.of(f.numerator, pscale(f.denominator, scale))
        total = tuple(x // scale for x in total)
        return RationalGF.from_factors(total, common)
