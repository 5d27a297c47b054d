"""Exact arithmetic for the delta constants and certification of the
inequalities they must satisfy.

Expressions live in the ring generated by ``t = delta**(1/64)`` with
coefficients ``q * r**(1/k)``: q rational, r a k-th-power-free positive
integer, k in {1, 2, 4, 8}.  That is closed under everything the constant
chain needs (products, integer powers, roots of monomials) and every sign
question reduces to integer comparisons or rational interval bounds.
"""
from __future__ import annotations

import re
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from math import gcd
from typing import Iterable, Sequence

EXP_DEN = 64
MAX_INDEX = 8
DELTA_MAX = Fraction(1, 36) ** 8
C_PRIME = Fraction(3**7, 2**11)

Rad = tuple[int, int]  # (r, k) meaning r**(1/k)
Key = tuple[int, int, int]  # (exponent in 1/64 units, r, k)


# -- integer helpers -----------------------------------------------------------

def iroot(x: int, k: int) -> int:
    """Floor of the real k-th root of a non-negative integer."""
    if x < 0:
        raise ValueError("negative radicand")
    if x < 2 or k == 1:
        return x
    y = 1 << -(-x.bit_length() // k)
    while True:
        z = ((k - 1) * y + x // y ** (k - 1)) // k
        if z >= y:
            return y
        y = z


def iroot_ceil(x: int, k: int) -> int:
    r = iroot(x, k)
    return r if r**k == x else r + 1


def _exact_root(q: Fraction, k: int) -> Fraction | None:
    """q**(1/k) when it is rational, else None (q >= 0)."""
    a, b = iroot(q.numerator, k), iroot(q.denominator, k)
    if a**k == q.numerator and b**k == q.denominator:
        return Fraction(a, b)
    return None


@lru_cache(maxsize=None)
def _factor(n: int) -> tuple[tuple[int, int], ...]:
    out = []
    p = 2
    while p * p <= n and p < 100_000:
        if n % p == 0:
            e = 0
            while n % p == 0:
                n //= p
                e += 1
            out.append((p, e))
        p += 1 if p == 2 else 2
    if n > 1:
        out.append((n, 1))
    return tuple(out)


def _normalize(q: Fraction, r: Fraction, k: int) -> tuple[Fraction, int, int]:
    """Canonical (q', r', k') with q * r**(1/k) == q' * r'**(1/k')."""
    if r <= 0:
        raise ValueError("radicand must be positive")
    if k not in (1, 2, 4, 8):
        raise ValueError(f"radical index {k} not supported")
    if k == 1:
        return q * r, 1, 1
    # (a/b)^(1/k) = (a b^(k-1))^(1/k) / b
    a, b = r.numerator, r.denominator
    q = q / b
    m = a * b ** (k - 1)
    inner, outer = 1, 1
    for p, e in _factor(m):
        outer *= p ** (e // k)
        inner *= p ** (e % k)
    q *= outer
    # lower the index while the radicand is a perfect square
    while k > 1:
        s = iroot(inner, 2)
        if s * s != inner:
            break
        inner, k = s, k // 2
    if inner == 1:
        k = 1
    return q, inner, k


def _rad_mul(x: Rad, y: Rad) -> tuple[Fraction, Rad]:
    k = max(x[1], y[1])
    r = x[0] ** (k // x[1]) * y[0] ** (k // y[1])
    q, r2, k2 = _normalize(Fraction(1), Fraction(r), k)
    return q, (r2, k2)


# -- expressions ---------------------------------------------------------------------

class DeltaExpr:
    """Finite sum of ``q * r**(1/k) * t**e`` with ``t = delta**(1/64)``.

    Canonical: like terms merged, zero terms dropped, terms sorted by
    (exponent, index, radicand).
    """

    __slots__ = ("_terms",)

    def __init__(self, terms: dict[Key, Fraction] | None = None):
        self._terms: dict[Key, Fraction] = {k: v for k, v in sorted((terms or {}).items()) if v}

    # construction
    @classmethod
    def from_terms(cls, terms: Iterable[tuple]) -> "DeltaExpr":
        """Terms as ``(q, r, k, e)``; r may be any positive rational."""
        acc: dict[Key, Fraction] = {}
        for q, r, k, e in terms:
            if e < 0 or int(e) != e:
                raise ValueError("exponents are non-negative multiples of 1/64")
            cq, cr, ck = _normalize(Fraction(q), Fraction(r), int(k))
            key = (int(e), cr, ck)
            acc[key] = acc.get(key, Fraction(0)) + cq
        return cls(acc)

    @classmethod
    def const(cls, q) -> "DeltaExpr":
        return cls.from_terms([(q, 1, 1, 0)])

    @classmethod
    def t(cls, e: int = 1) -> "DeltaExpr":
        return cls.from_terms([(1, 1, 1, e)])

    @classmethod
    def delta(cls, power=1) -> "DeltaExpr":
        """``delta**power`` for power a multiple of 1/64."""
        e = Fraction(power) * EXP_DEN
        if e.denominator != 1:
            raise ValueError("delta exponent must be a multiple of 1/64")
        return cls.t(int(e))

    @classmethod
    def radical(cls, r, k: int, q=1) -> "DeltaExpr":
        return cls.from_terms([(q, r, k, 0)])

    # inspection
    def terms(self) -> list[tuple[Fraction, int, int, int]]:
        return [(q, r, k, e) for (e, r, k), q in self._terms.items()]

    def is_zero(self) -> bool:
        return not self._terms

    def is_monomial(self) -> bool:
        return len(self._terms) == 1

    def exponents(self) -> list[int]:
        return sorted({e for e, _, _ in self._terms})

    def coefficient(self, e: int) -> "DeltaExpr":
        return DeltaExpr({(0, r, k): q for (ee, r, k), q in self._terms.items() if ee == e})

    def __eq__(self, other: object) -> bool:
        if isinstance(other, (int, Fraction)):
            other = DeltaExpr.const(other)
        if not isinstance(other, DeltaExpr):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        return hash(tuple(self._terms.items()))

    # arithmetic
    @staticmethod
    def _lift(x) -> "DeltaExpr":
        if isinstance(x, DeltaExpr):
            return x
        if isinstance(x, (int, Fraction)):
            return DeltaExpr.const(x)
        raise TypeError(f"cannot combine DeltaExpr with {type(x).__name__}")

    def __add__(self, other) -> "DeltaExpr":
        o = self._lift(other)
        acc = dict(self._terms)
        for key, q in o._terms.items():
            acc[key] = acc.get(key, Fraction(0)) + q
        return DeltaExpr(acc)

    __radd__ = __add__

    def __neg__(self) -> "DeltaExpr":
        return DeltaExpr({k: -q for k, q in self._terms.items()})

    def __sub__(self, other) -> "DeltaExpr":
        return self + (-self._lift(other))

    def __rsub__(self, other) -> "DeltaExpr":
        return self._lift(other) - self

    def __mul__(self, other) -> "DeltaExpr":
        o = self._lift(other)
        acc: dict[Key, Fraction] = {}
        for (e1, r1, k1), q1 in self._terms.items():
            for (e2, r2, k2), q2 in o._terms.items():
                c, (r, k) = _rad_mul((r1, k1), (r2, k2))
                key = (e1 + e2, r, k)
                acc[key] = acc.get(key, Fraction(0)) + q1 * q2 * c
        return DeltaExpr(acc)

    __rmul__ = __mul__

    def __pow__(self, m: int) -> "DeltaExpr":
        if not isinstance(m, int) or m < 0:
            raise ValueError("only non-negative integer powers")
        out = DeltaExpr.const(1)
        base = self
        while m:
            if m & 1:
                out = out * base
            base = base * base
            m >>= 1
        return out

    def __truediv__(self, other) -> "DeltaExpr":
        if isinstance(other, (int, Fraction)):
            return self * (Fraction(1) / Fraction(other))
        o = self._lift(other)
        if not o.is_monomial():
            raise ValueError("can only divide by a monomial")
        (e, r, k), q = next(iter(o._terms.items()))
        # 1 / (q r^(1/k)) = r^((k-1)/k) / (q r)
        inv_q, inv_r, inv_k = _normalize(Fraction(1) / (q * r), Fraction(r ** (k - 1)), k) if k > 1 \
            else (Fraction(1) / q, 1, 1)
        acc: dict[Key, Fraction] = {}
        for (e1, r1, k1), q1 in self._terms.items():
            if e1 < e:
                raise ValueError("division would create a negative exponent")
            c, (rr, kk) = _rad_mul((r1, k1), (inv_r, inv_k))
            key = (e1 - e, rr, kk)
            acc[key] = acc.get(key, Fraction(0)) + q1 * inv_q * c
        return DeltaExpr(acc)

    def root(self, j: int) -> "DeltaExpr":
        """Principal j-th root of a positive monomial."""
        if not self.is_monomial():
            raise ValueError("roots are only taken of monomials")
        (e, r, k), q = next(iter(self._terms.items()))
        if q <= 0:
            raise ValueError("root of a non-positive coefficient")
        if e % j:
            raise ValueError("resulting exponent leaves the 1/64 lattice")
        # (q r^(1/k))^(1/j) = (q^k r)^(1/(k j))
        if k * j > MAX_INDEX:
            raise ValueError(f"radical index {k * j} exceeds {MAX_INDEX}")
        cq, cr, ck = _normalize(Fraction(1), q**k * r, k * j)
        return DeltaExpr({(e // j, cr, ck): cq})

    # text form
    def __str__(self) -> str:
        if not self._terms:
            return "0"
        parts = []
        for (e, r, k), q in self._terms.items():
            bits = [str(q)]
            if k > 1:
                bits.append(f"{r}^(1/{k})")
            if e:
                bits.append(f"t^{e}")
            parts.append("*".join(bits))
        return " + ".join(parts).replace("+ -", "- ")

    def __repr__(self) -> str:
        return f"DeltaExpr({self})"

    @classmethod
    def parse(cls, text: str) -> "DeltaExpr":
        """Inverse of ``str``; also accepts ``delta^(a/b)`` and decimals."""
        s = text.replace(" ", "")
        if not s:
            raise ValueError("empty expression")
        chunks, depth, start = [], 0, 0
        for i, ch in enumerate(s):
            depth += (ch == "(") - (ch == ")")
            if ch in "+-" and depth == 0 and i > start and s[i - 1] not in "+-*":
                chunks.append(s[start:i])
                start = i
        chunks.append(s[start:])
        out = cls()
        for ch in chunks:
            out = out + cls._parse_term(ch)
        return out

    @classmethod
    def _parse_term(cls, tok: str) -> "DeltaExpr":
        body = tok.lstrip("+-")
        sign = (-1) ** tok[: len(tok) - len(body)].count("-")
        tok = body
        val = cls.const(sign)
        for f in tok.split("*"):
            m = re.fullmatch(r"\(?([0-9./]+)\)?\^\(1/([0-9]+)\)", f)
            if m:
                val = val * cls.radical(Fraction(m.group(1)), int(m.group(2)))
                continue
            m = re.fullmatch(r"t(?:\^([0-9]+))?", f)
            if m:
                val = val * cls.t(int(m.group(1) or 1))
                continue
            m = re.fullmatch(r"delta(?:\^\(?([0-9/]+)\)?)?", f)
            if m:
                val = val * cls.delta(Fraction(m.group(1) or 1))
                continue
            try:
                val = val * Fraction(f)
            except (ValueError, ZeroDivisionError):
                raise ValueError(f"bad factor {f!r}") from None
        return val


# -- enclosures ------------------------------------------------------------------------

def _scaled_root_bounds(num: int, den: int, k: int, bits: int) -> tuple[int, int]:
    """lo, hi with lo/2^bits <= (num/den)^(1/k) <= hi/2^bits."""
    top = num << (k * bits)
    lo = iroot(top // den, k)
    hi = iroot_ceil(-(-top // den), k)
    return lo, hi


def _rad_interval(r: int, k: int, bits: int) -> tuple[Fraction, Fraction]:
    if k == 1:
        return Fraction(r), Fraction(r)
    lo, hi = _scaled_root_bounds(r, 1, k, bits)
    return Fraction(lo, 1 << bits), Fraction(hi, 1 << bits)


def _delta_pow_interval(delta: Fraction, e: int, bits: int) -> tuple[Fraction, Fraction]:
    """Enclosure of delta**(e/64)."""
    if e == 0:
        return Fraction(1), Fraction(1)
    p = Fraction(e, EXP_DEN)
    a, b = delta.numerator ** p.numerator, delta.denominator ** p.numerator
    k = p.denominator
    if k == 1:
        v = Fraction(a, b)
        return v, v
    exact = _exact_root(Fraction(a, b), k)
    if exact is not None:
        return exact, exact
    lo, hi = _scaled_root_bounds(a, b, k, bits)
    return Fraction(lo, 1 << bits), Fraction(hi, 1 << bits)


def _imul(x: tuple[Fraction, Fraction], y: tuple[Fraction, Fraction]) -> tuple[Fraction, Fraction]:
    ps = (x[0] * y[0], x[0] * y[1], x[1] * y[0], x[1] * y[1])
    return min(ps), max(ps)


def _enclose(expr: DeltaExpr, delta: Fraction, bits: int) -> tuple[Fraction, Fraction]:
    lo = hi = Fraction(0)
    for q, r, k, e in expr.terms():
        iv = _imul(_rad_interval(r, k, bits), _delta_pow_interval(delta, e, bits))
        a, b = q * iv[0], q * iv[1]
        lo += min(a, b)
        hi += max(a, b)
    return lo, hi


def numeric_eval(expr: DeltaExpr, delta, precision_bits: int = 53) -> tuple[Fraction, Fraction]:
    """Rational enclosure of ``expr`` at ``delta`` with relative width at
    most ``2**(1 - precision_bits)`` (outward rounded)."""
    d = Fraction(delta)
    if not 0 < d < 1:
        raise ValueError("delta must lie in (0, 1)")
    if expr.is_zero():
        return Fraction(0), Fraction(0)
    tol = Fraction(2) ** (1 - precision_bits)
    bits = precision_bits + 16
    for _ in range(12):
        lo, hi = _enclose(expr, d, bits)
        mag = min(abs(lo), abs(hi)) if lo * hi > 0 else Fraction(0)
        if hi - lo <= tol * mag or lo == hi:
            return lo, hi
        bits *= 2
    return lo, hi


def coefficient_interval(expr: DeltaExpr, bits: int = 128) -> tuple[Fraction, Fraction]:
    """Enclosure of a t-free expression (sum of radicals)."""
    if any(e for _, _, _, e in expr.terms()):
        raise ValueError("expression depends on delta")
    return _enclose(expr, Fraction(1, 2), bits)


def constant_sign(expr: DeltaExpr) -> int:
    """Exact sign of a t-free sum of radicals.

    One or two terms are decided by cross-powering over the integers; longer
    sums by enclosure refinement (distinct canonical radicals are linearly
    independent over Q, so a nonzero sum is eventually separated from 0).
    """
    ts = expr.terms()
    if not ts:
        return 0
    if any(e for *_, e in ts):
        raise ValueError("expression depends on delta")
    if len(ts) == 1:
        return 1 if ts[0][0] > 0 else -1
    if len(ts) == 2:
        (q1, r1, k1, _), (q2, r2, k2, _) = ts
        # q1 r1^(1/k1) + q2 r2^(1/k2): compare |terms| when signs differ
        if (q1 > 0) == (q2 > 0):
            return 1 if q1 > 0 else -1
        x = q1**8 * Fraction(r1) ** (8 // k1)
        y = q2**8 * Fraction(r2) ** (8 // k2)
        if x == y:
            return 0
        bigger_first = x > y
        return (1 if q1 > 0 else -1) if bigger_first else (1 if q2 > 0 else -1)
    bits = 64
    while bits <= 1 << 16:
        lo, hi = coefficient_interval(expr, bits)
        if lo > 0:
            return 1
        if hi < 0:
            return -1
        bits *= 2
    raise ArithmeticError("could not separate radical sum from zero")


def compare_constants(lhs: DeltaExpr, rhs: DeltaExpr, delta_interval=None) -> int:
    """Exact ordering (-1, 0, 1) of two single-term expressions.

    Equal delta-exponents compare by cross-raising coefficients to the 8th
    power.  Unequal exponents need ``delta_interval = (lo, hi)``; the order
    must then be the same across the whole interval.
    """
    for side in (lhs, rhs):
        if not side.is_monomial() and not side.is_zero():
            raise ValueError("compare_constants takes single terms")
    el = lhs.exponents() or [0]
    er = rhs.exponents() or [0]
    if el == er or lhs.is_zero() or rhs.is_zero():
        diff = lhs - rhs
        if diff.is_zero():
            return 0
        e = diff.exponents()[0]
        return constant_sign(diff.coefficient(e))
    if delta_interval is None:
        raise ValueError("monomials with different delta-exponents are incomparable without an interval")
    lo, hi = (Fraction(x) for x in delta_interval)
    diff = lhs - rhs
    signs = set()
    for d in (lo, hi):
        if d > 0:
            a, b = numeric_eval(diff, d, 64)
            signs.add(1 if a > 0 else -1 if b < 0 else 0)
        else:
            # near zero the lower power of delta dominates
            signs.add(constant_sign(diff.coefficient(diff.exponents()[0])))
    # a two-monomial difference has at most one sign change on (0, inf)
    if len(signs) == 1 and 0 not in signs:
        return signs.pop()
    raise ValueError("ordering changes inside the interval")


# -- polynomials and Sturm sequences -------------------------------------------------

def _trim(p: list[Fraction]) -> list[Fraction]:
    while p and p[-1] == 0:
        p.pop()
    return p


def poly_eval(p: Sequence[Fraction], x: Fraction) -> Fraction:
    acc = Fraction(0)
    for c in reversed(p):
        acc = acc * x + c
    return acc


def poly_deriv(p: Sequence[Fraction]) -> list[Fraction]:
    return _trim([i * c for i, c in enumerate(p)][1:])


def poly_rem(a: Sequence[Fraction], b: Sequence[Fraction]) -> list[Fraction]:
    r = list(a)
    db = len(b) - 1
    while len(_trim(r)) - 1 >= db and r:
        shift = len(r) - 1 - db
        f = r[-1] / b[-1]
        for i, c in enumerate(b):
            r[i + shift] -= f * c
        r.pop()
    return _trim(r)


def sturm_chain(p: Sequence[Fraction]) -> list[list[Fraction]]:
    chain = [_trim(list(p)), poly_deriv(p)]
    while chain[-1]:
        r = poly_rem(chain[-2], chain[-1])
        if not r:
            break
        chain.append([-c for c in r])
    return [c for c in chain if c]


def _variations(chain, x: Fraction) -> int:
    signs = [s for s in (poly_eval(c, x) for c in chain) if s != 0]
    return sum(1 for a, b in zip(signs, signs[1:]) if (a > 0) != (b > 0))


def count_roots(p: Sequence[Fraction], a: Fraction, b: Fraction) -> int:
    """Distinct real roots of p in (a, b]; p(a) must be nonzero."""
    chain = sturm_chain(p)
    return _variations(chain, a) - _variations(chain, b)


def isolate_roots(p: Sequence[Fraction], a: Fraction, b: Fraction, width: Fraction) -> list[tuple[Fraction, Fraction]]:
    chain = sturm_chain(p)
    out = []
    stack = [(a, b)]
    while stack:
        lo, hi = stack.pop()
        n = _variations(chain, lo) - _variations(chain, hi)
        if n == 0:
            continue
        if n == 1 and hi - lo <= width:
            out.append((lo, hi))
            continue
        mid = (lo + hi) / 2
        if poly_eval(p, mid) == 0:
            out.append((mid, mid))
            stack.append((lo, mid - width / 4))
            stack.append((mid, hi))
            continue
        stack.extend([(mid, hi), (lo, mid)])
    return sorted(out)


# -- the delta chain ---------------------------------------------------------------------

def delta_chain() -> dict[int, DeltaExpr]:
    """delta_1 .. delta_11 as exact expressions in t = delta^(1/64)."""
    delta = DeltaExpr.delta()
    d: dict[int, DeltaExpr] = {}
    d[1] = Fraction(5, 3) * delta.root(2)
    d[2] = delta.root(2)
    d[3] = d[1].root(2)
    d[4] = d[1].root(2)
    d[5] = 6 * d[3]
    d[6] = 18 * d[1].root(2)
    d[7] = DeltaExpr.radical(260, 2) * DeltaExpr.delta(Fraction(1, 8))
    d[8] = 90 * d[1].root(4)
    d[9] = 417 * DeltaExpr.delta(Fraction(1, 8))
    d[10] = 9 * d[3]
    d[11] = Fraction(27, 64) * (2 * d[9] / C_PRIME).root(8)
    return d


def final_identity() -> tuple[DeltaExpr, DeltaExpr]:
    """(2*delta_11)^8 and (9/16)^8 * (3^2 * 2^4 * 139) * delta^(1/8)."""
    d11 = delta_chain()[11]
    lhs = (2 * d11) ** 8
    rhs = Fraction(9, 16) ** 8 * (3**2 * 2**4 * 139) * DeltaExpr.delta(Fraction(1, 8))
    return lhs, rhs


# -- certification --------------------------------------------------------------------------

METHODS = ("monomial-cross-power", "dominance", "root-isolation")


@dataclass(frozen=True)
class Claim:
    id: str
    expr: DeltaExpr
    strict: bool
    statement: str
    guards: tuple[str, ...] = ()
    asymptotic: bool = False


@dataclass
class ClaimResult:
    id: str
    holds: bool
    method: str
    margin: tuple[Fraction, Fraction]
    statement: str
    strict: bool
    guards: tuple[str, ...] = ()
    asymptotic: bool = False
    witness_delta: Fraction | None = None
    note: str = ""

    def to_json(self) -> dict:
        return {
            "id": self.id,
            "holds": self.holds,
            "method": self.method,
            "margin": [str(self.margin[0]), str(self.margin[1])],
            "marginApprox": [float(self.margin[0]), float(self.margin[1])],
            "statement": self.statement,
            "strict": self.strict,
            "guards": list(self.guards),
            "asymptotic": self.asymptotic,
            "witnessDelta": None if self.witness_delta is None else str(self.witness_delta),
            "note": self.note,
        }


@dataclass
class ChainReport:
    delta_max: Fraction
    results: dict[str, ClaimResult] = field(default_factory=dict)

    @property
    def in_theorem_range(self) -> bool:
        return 0 < self.delta_max <= DELTA_MAX

    @property
    def all_hold(self) -> bool:
        return all(r.holds for r in self.results.values())

    @property
    def certified(self) -> bool:
        return self.in_theorem_range and self.all_hold

    def to_json(self) -> dict:
        return {
            "deltaMax": str(self.delta_max),
            "inTheoremRange": self.in_theorem_range,
            "certified": self.certified,
            "results": [r.to_json() for r in self.results.values()],
        }

    def table(self) -> str:
        lines = [f"{'ID':<14}{'holds':<7}{'method':<22}{'margin (lo)':>16}  statement"]
        for r in self.results.values():
            lines.append(
                f"{r.id:<14}{str(r.holds).lower():<7}{r.method:<22}{float(r.margin[0]):>16.6g}  {r.statement}"
            )
        lines.append(f"delta_max = {self.delta_max}  certified = {str(self.certified).lower()}")
        return "\n".join(lines)


def chain_claims() -> list[Claim]:
    """Every named inequality step, each as ``expr >= 0`` (or ``> 0``)."""
    d = delta_chain()
    one = DeltaExpr.const(1)
    delta = DeltaExpr.delta()
    q4 = DeltaExpr.delta(Fraction(1, 4))
    e8 = DeltaExpr.delta(Fraction(1, 8))
    s = d[1].root(2)  # delta_1^(1/2)
    x = 45 * s
    F = Fraction
    return [
        Claim("LH1", one - 2 * delta - 3 * d[2] * (one - d[1]) - (one - d[2]) ** 3, True,
              "1 - 2d - 3d2(1 - d1) > (1 - d2)^3"),
        Claim("LH2", -2 * delta + 3 * d[1] * d[2] - 3 * d[2] ** 2 + d[2] ** 3, True,
              "-2d + 3d1d2 - 3d2^2 + d2^3 > 0 (reduces to d^(3/2) > 0)"),
        Claim("GUARD400", F(1, 400) - delta, True, "d < 1/400"),
        Claim("DENSITY", F(3, 20) - F(3, 4) * delta - F(9, 4) * d[2], False,
              "3/4 - 3d/4 - 9d^(1/2)/4 >= 0.6 (edge density after peeling)", ("GUARD400",), True),
        Claim("CHUNGLU", F(3, 5) - (3 + DeltaExpr.radical(17, 2)) / 12, True,
              "0.6 > (3 + sqrt 17)/12 (tetrahedron density threshold)"),
        Claim("LH5", -d[1] + 2 * d[3] * d[4] - d[4] ** 2, False,
              "-d1 + 2d3d4 - d4^2 >= 0 (exactly 0)"),
        Claim("TURAN", F(1, 12) - d[3], True, "d3 < 1/12"),
        Claim("E3", (F(3, 2) * (one - d[3]) - 1) - (one - 3 * d[3]) / 2, False,
              "e3 >= (1 - 3d3) n2^2 / 2", ("TURAN",)),
        Claim("A6", (6 * (one - d[3]) - 5) - (one - 6 * d[3]), False,
              "a6 >= (1 - 6d3) n2 + 2"),
        Claim("PP1", (one - d[1]) * F(3, 2) - 3 * d[4] - 4 * d[5] - (F(3, 2) - F(59, 2) * s), False,
              "(3/2)n1^2 - 29.5 d1^(1/2) n2^2 <= (1 - d1)(3/2)n1^2 - 3d4 n1^2 - 4d5 n2^2", (), True),
        Claim("MROOT_DISC", x - F(177, 4) * s, False,
              "sqrt(1 - 44.25 d1^(1/2)) >= sqrt(1 - 45 d1^(1/2))"),
        Claim("MROOT_GUARD", F(1, 81) - s, False, "d1^(1/2) <= 1/81 (so 45 d1^(1/2) <= 5/9)"),
        Claim("MROOT", (one - x) - (one - F(3, 5) * x) ** 2, False,
              "sqrt(1 - x) >= 1 - 3x/5 at x = 45 d1^(1/2), giving m >= (n1/2)(1 - 18 d1^(1/2)) + 1",
              ("MROOT_GUARD",)),
        Claim("N1N4", 128 * q4 - (3 * s + 4 * d[5] + 4 * d[6]), False,
              "(3d1^(1/2) + 4d5 + 4d6) n1^2 <= 128 d^(1/4) n1^2"),
        Claim("EPRIME_GUARD", F(4, 5) - q4, True, "d < 4^4/5^4"),
        Claim("EPRIME", 130 * q4 - (F(3, 2) * d[1] + 128 * q4), False,
              "(3/2)d1 + 128 d^(1/4) <= 130 d^(1/4)", ("EPRIME_GUARD",)),
        Claim("E258", 258 * q4 - (130 * q4 + 128 * q4), False, "|E'| + 128 d^(1/4) n1^2 <= 258 d^(1/4) n1^2"),
        Claim("N4", (one - d[5]) * (one - s) - 18 * s - (one - 25 * s), False,
              "n4 >= n1 - 25 d1^(1/2) n1", (), True),
        Claim("SIZEA", 9 * e8 - F(25, 2) * s - d[7] / 2, False, "|A| >= n1/2 - 9 d^(1/8) n1"),
        Claim("QUARTER", F(1, 4) - 9 * e8, False, "n1/2 - 9 d^(1/8) n1 >= n1/4"),
        Claim("BX_D7", 17 * d[1].root(4) - d[7], False, "sqrt(260) d^(1/8) <= 17 d1^(1/4)"),
        Claim("BX_72", 72 * d[1].root(4) - 72 * s, False, "72 d1^(1/2) <= 72 d1^(1/4)"),
        Claim("BX_CHAIN", 90 * d[1].root(4) - (27 * s + 89 * d[1].root(4)), False,
              "(27 d1^(1/4) + 89) d1^(1/4) <= 90 d1^(1/4)"),
        Claim("BX", 90 * d[1].root(4) - (3 * d[3] + 4 * d[5] + 4 * d[6] + d[7]), False,
              "(3d3 + 4d5 + 4d6 + d7) n1 <= 90 d1^(1/4) n1"),
        Claim("DELTA9", d[9] - (258 * q4 + 4 * d[8]), False,
              "258 d^(1/4) + 4 d8 <= 417 d^(1/8)"),
        Claim("CASE2_EDGES", (one - d[3]) * F(3, 2) - 4 * d[10] - (F(3, 2) - 38 * s), False,
              "(1 - d3)(3/2)n2^2 - 4 d10 n2^2 - 12 n2 >= (3/2 - 38 d1^(1/2)) n2^2", (), True),
        Claim("CASE2", (F(3, 2) - 38 * s) - F(1, 2), True,
              "(3/2 - 38 d1^(1/2)) > 1/2, i.e. d1 < (1/38)^2"),
        Claim("SHRINK", d[11] * (one - DeltaExpr.radical(F(1, 2), 8)) - F(3, 8) * d[2], False,
              "d11 n1^3 - 3 d2 n^3 / 8 >= d11 n1^3 / 2^(1/8)", (), True),
        Claim("COPIES", DeltaExpr.const(16 * F(27, 64) ** 8 * F(4, 3) ** 22 - 1), False,
              "(27/64)^8 d9 n1^24 / |A'|^18 >= d9 n1^2 |A'|^4 / 16 for |A'| <= 3n1/4"),
        Claim("DELTA11", F(97, 50) * DeltaExpr.t() - d[11], True, "d11 < 1.94 d^(1/64)"),
        Claim("FINAL", F(97, 50) * DeltaExpr.t() - 2 * d[11], True,
              "2 d11 = (9/16)(3^2 2^4 139)^(1/8) d^(1/64) < 1.94 d^(1/64)"),
    ]


def _u_bound(delta_max: Fraction, g: int) -> tuple[Fraction, bool]:
    """Upper bound on t_max**g = delta_max**(g/64) and whether it is exact."""
    p = Fraction(g, EXP_DEN)
    val = delta_max ** p.numerator
    exact = _exact_root(val, p.denominator)
    if exact is not None:
        return exact, True
    _, hi = _scaled_root_bounds(val.numerator, val.denominator, p.denominator, 96)
    return Fraction(hi, 1 << 96), False


def _find_counterexample(expr: DeltaExpr, delta_max: Fraction, strict: bool) -> Fraction | None:
    probes = [delta_max * Fraction(2**j - 1, 2**j) for j in range(1, 12)]
    probes += [delta_max / 2**j for j in range(1, 200, 3)]
    for dl in probes:
        if not 0 < dl < 1:
            continue
        lo, hi = numeric_eval(expr, dl, 64)
        if hi < 0 or (strict and hi <= 0 and lo == hi):
            return dl
    return None


def certify(expr: DeltaExpr, delta_max, strict: bool = False) -> ClaimResult:
    """Decide ``expr > 0`` (strict) or ``expr >= 0`` for all delta in (0, delta_max)."""
    dmax = Fraction(delta_max)
    res = ClaimResult("", False, METHODS[0], (Fraction(0), Fraction(0)), "", strict)
    if expr.is_zero():
        res.holds = not strict
        res.note = "identically zero"
        if strict:
            res.witness_delta = dmax / 2
        return res
    exps = expr.exponents()
    e0 = exps[0]
    lead = expr.coefficient(e0)
    lead_sign = constant_sign(lead)
    if len(exps) == 1:
        res.margin = coefficient_interval(lead)
        res.holds = lead_sign > 0
        if not res.holds:
            res.witness_delta = dmax / 2
        return res
    if lead_sign < 0:
        res.method = METHODS[1]
        res.margin = coefficient_interval(lead)
        res.witness_delta = _find_counterexample(expr, dmax, strict)
        res.note = "negative leading coefficient"
        return res
    g = 0
    for e in exps[1:]:
        g = gcd(g, e - e0)
    U, _ = _u_bound(dmax, g)
    coeffs = {(e - e0) // g: expr.coefficient(e) for e in exps}
    bits = 128
    while bits <= 2048:
        ivs = {i: coefficient_interval(c, bits) for i, c in coeffs.items()}
        lower = ivs[0][0] + sum(min(Fraction(0), iv[0]) * U**i for i, iv in ivs.items() if i)
        upper = ivs[0][1] + sum(max(Fraction(0), iv[1]) * U**i for i, iv in ivs.items() if i)
        if lower >= 0 and ivs[0][0] > 0:
            res.method = METHODS[1]
            res.margin = (lower, upper)
            res.holds = True
            return res
        bits *= 2
    # Sturm fallback on a rational polynomial bounding expr / t^e0 from below
    res.method = METHODS[2]
    deg = max(coeffs)
    poly = [Fraction(0)] * (deg + 1)
    for i, iv in ivs.items():
        poly[i] = iv[0]
    if poly[0] <= 0:
        res.witness_delta = _find_counterexample(expr, dmax, strict)
        res.note = "leading coefficient not separated from zero"
        return res
    roots = count_roots(poly, Fraction(0), U)
    res.margin = (Fraction(0), upper)
    if roots == 0:
        res.holds = True
        res.note = f"lower polynomial root-free on (0, {U}]"
        return res
    res.witness_delta = _find_counterexample(expr, dmax, strict)
    res.note = f"lower polynomial has {roots} root(s) in (0, {U}]"
    return res


def verify_inequalities(delta_max=DELTA_MAX) -> ChainReport:
    dmax = Fraction(delta_max)
    if not 0 < dmax < 1:
        raise ValueError("delta_max must lie in (0, 1)")
    report = ChainReport(dmax)
    for c in chain_claims():
        r = certify(c.expr, dmax, c.strict)
        r.id, r.statement, r.guards, r.asymptotic = c.id, c.statement, c.guards, c.asymptotic
        report.results[c.id] = r
    for r in report.results.values():
        failed = [gid for gid in r.guards if not report.results[gid].holds]
        if failed and r.holds:
            r.holds = False
            r.note = f"guard(s) failed: {', '.join(failed)}"
    return report
