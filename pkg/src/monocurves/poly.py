"""Sparse multivariate polynomials over Q, division with recorded quotients."""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Mapping, Sequence

from .orders import MonomialOrder


# ---- exponent vector helpers (plain tuples of nonnegative ints) --------

def exp_add(u, v):
    return tuple(a + b for a, b in zip(u, v))


def exp_sub(u, v):
    return tuple(a - b for a, b in zip(u, v))


def exp_lcm(u, v):
    return tuple(a if a > b else b for a, b in zip(u, v))


def exp_divides(u, v):
    """True when the monomial with exponents u divides the one with v."""
    return all(a <= b for a, b in zip(u, v))


def exp_coprime(u, v):
    return all(a == 0 or b == 0 for a, b in zip(u, v))


def weighted_degree(u, weights) -> int:
    return sum(a * w for a, w in zip(u, weights))


class Polynomial:
    """Immutable sum of (rational coefficient, exponent vector) terms.

    ``variables`` names the ambient ring; two polynomials interoperate only
    when their ambients coincide.  The term map never stores zeros, so
    structural equality of the maps is polynomial equality.
    """

    __slots__ = ("variables", "terms")

    def __init__(self, variables: Sequence[str], terms: Mapping | None = None):
        variables = tuple(variables)
        clean: dict[tuple, Fraction] = {}
        n = len(variables)
        for exp, c in (terms or {}).items():
            exp = tuple(exp)
            if len(exp) != n or any(e < 0 or not isinstance(e, int) for e in exp):
                raise ValueError(f"bad exponent vector {exp} for {n} variables")
            c = Fraction(c)
            if c:
                clean[exp] = clean.get(exp, Fraction(0)) + c
                if not clean[exp]:
                    del clean[exp]
        object.__setattr__(self, "variables", variables)
        object.__setattr__(self, "terms", clean)

    @classmethod
    def _raw(cls, variables, terms: dict) -> "Polynomial":
        # internal fast path: caller guarantees canonical terms
        self = object.__new__(cls)
        object.__setattr__(self, "variables", variables)
        object.__setattr__(self, "terms", terms)
        return self

    def __setattr__(self, name, value):
        raise AttributeError("Polynomial is immutable")

    # ---- constructors --------------------------------------------------

    @classmethod
    def zero(cls, variables) -> "Polynomial":
        return cls._raw(tuple(variables), {})

    @classmethod
    def constant(cls, variables, c) -> "Polynomial":
        variables = tuple(variables)
        c = Fraction(c)
        return cls._raw(variables, {(0,) * len(variables): c} if c else {})

    @classmethod
    def variable(cls, variables, i: int) -> "Polynomial":
        variables = tuple(variables)
        exp = tuple(1 if k == i else 0 for k in range(len(variables)))
        return cls._raw(variables, {exp: Fraction(1)})

    @classmethod
    def monomial(cls, variables, exp, coeff=1) -> "Polynomial":
        return cls(variables, {tuple(exp): coeff})

    # ---- basics ---------------------------------------------------------

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        return (isinstance(other, Polynomial) and self.variables == other.variables
                and self.terms == other.terms)

    def __hash__(self):
        return hash((self.variables, frozenset(self.terms.items())))

    def __repr__(self):
        return poly_to_str(self)

    __str__ = __repr__

    def _check_ambient(self, other: "Polynomial"):
        if self.variables != other.variables:
            raise ValueError(f"ambient mismatch: {self.variables} vs {other.variables}")

    # ---- arithmetic ------------------------------------------------------

    def __add__(self, other):
        if not isinstance(other, Polynomial):
            return NotImplemented
        self._check_ambient(other)
        res = dict(self.terms)
        for exp, c in other.terms.items():
            s = res.get(exp, 0) + c
            if s:
                res[exp] = s
            elif exp in res:
                del res[exp]
        return Polynomial._raw(self.variables, res)

    def __sub__(self, other):
        if not isinstance(other, Polynomial):
            return NotImplemented
        self._check_ambient(other)
        res = dict(self.terms)
        for exp, c in other.terms.items():
            s = res.get(exp, 0) - c
            if s:
                res[exp] = s
            elif exp in res:
                del res[exp]
        return Polynomial._raw(self.variables, res)

    def __neg__(self):
        return Polynomial._raw(self.variables, {e: -c for e, c in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        if not isinstance(other, Polynomial):
            return NotImplemented
        self._check_ambient(other)
        res: dict[tuple, Fraction] = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = exp_add(e1, e2)
                s = res.get(e, 0) + c1 * c2
                if s:
                    res[e] = s
                elif e in res:
                    del res[e]
        return Polynomial._raw(self.variables, res)

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        return NotImplemented

    def __pow__(self, e: int):
        if e < 0:
            raise ValueError("negative exponent")
        result = Polynomial.constant(self.variables, 1)
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base if e > 1 else base
            e >>= 1
        return result

    def scale(self, c) -> "Polynomial":
        c = Fraction(c)
        if not c:
            return Polynomial.zero(self.variables)
        return Polynomial._raw(self.variables, {e: c * v for e, v in self.terms.items()})

    def times_term(self, coeff, exp) -> "Polynomial":
        """Multiply by a single term coeff * x^exp."""
        coeff = Fraction(coeff)
        if not coeff:
            return Polynomial.zero(self.variables)
        exp = tuple(exp)
        return Polynomial._raw(self.variables,
                               {exp_add(e, exp): coeff * c for e, c in self.terms.items()})

    def substitute(self, images: Sequence["Polynomial"]) -> "Polynomial":
        """Ring map sending variable i to images[i]; images share one ambient."""
        if len(images) != len(self.variables):
            raise ValueError("need one image per variable")
        target = images[0].variables
        for im in images:
            if im.variables != target:
                raise ValueError("images live in different ambients")
        powers: dict[tuple[int, int], Polynomial] = {}

        def power(i, e):
            if (i, e) not in powers:
                powers[(i, e)] = images[i] ** e
            return powers[(i, e)]

        total = Polynomial.zero(target)
        for exp, c in self.terms.items():
            term = Polynomial.constant(target, c)
            for i, e in enumerate(exp):
                if e:
                    term = term * power(i, e)
            total = total + term
        return total

    # ---- order-dependent views ------------------------------------------

    def leading(self, order: MonomialOrder):
        """(leading exponent vector, leading coefficient) under order."""
        if not self.terms:
            raise ValueError("zero polynomial has no leading term")
        if order.nvars != len(self.variables):
            raise ValueError("order arity does not match ambient")
        exp = max(self.terms, key=order.key)
        return exp, self.terms[exp]

    def leading_data(self, order: MonomialOrder):
        """(Lm exponents, Lc, Lt) where Lt is the one-term polynomial Lc*Lm."""
        exp, c = self.leading(order)
        return exp, c, Polynomial._raw(self.variables, {exp: c})

    def monic(self, order: MonomialOrder) -> "Polynomial":
        _, c = self.leading(order)
        return self if c == 1 else self.scale(Fraction(1) / c)

    # ---- degrees ----------------------------------------------------------

    def total_degree(self) -> int:
        if not self.terms:
            return -1
        return max(sum(e) for e in self.terms)

    def weighted_degree(self, weights) -> int:
        if not self.terms:
            return -1
        return max(weighted_degree(e, weights) for e in self.terms)

    def is_weighted_homogeneous(self, weights) -> bool:
        degs = {weighted_degree(e, weights) for e in self.terms}
        return len(degs) <= 1

    def sort_key(self):
        """Deterministic comparison key, independent of any monomial order."""
        return tuple(sorted((e, (c.numerator, c.denominator))
                            for e, c in self.terms.items()))


# ---- division with transcript -------------------------------------------

@dataclass(frozen=True)
class DivisionRecord:
    """Quotients and remainder of one multivariate division.

    Satisfies dividend = sum(quotients[i] * divisor[i]) + remainder with no
    remainder monomial divisible by a divisor leading monomial, and
    Lm(quotients[i] * divisor[i]) <= Lm(dividend) whenever the product is
    nonzero.  Transcripts flagged ``via_coprime_criterion`` come from the
    closed-form rewriting of an S-pair with coprime leading monomials
    instead of an actual division run.
    """

    quotients: tuple[Polynomial, ...]
    remainder: Polynomial
    divisor_ids: tuple[int, ...]
    via_coprime_criterion: bool = False

    def check(self, dividend: Polynomial, divisors: Sequence[Polynomial],
              order: MonomialOrder) -> bool:
        total = self.remainder
        for q, g in zip(self.quotients, divisors):
            total = total + q * g
        if total != dividend:
            return False
        if not dividend:
            return True
        top = order.key(dividend.leading(order)[0])
        for q, g in zip(self.quotients, divisors):
            prod = q * g
            if prod and order.key(prod.leading(order)[0]) > top:
                return False
        return True


def divide(f: Polynomial, divisors: Sequence[Polynomial], order: MonomialOrder,
           divisor_ids: tuple[int, ...] | None = None) -> DivisionRecord:
    """Multivariate division of f by an ordered divisor list.

    Deterministic: each step reduces by the first divisor whose leading
    monomial divides the current one.
    """
    divisors = list(divisors)
    if any(not g for g in divisors):
        raise ValueError("zero divisor")
    for g in divisors:
        if g.variables != f.variables:
            raise ValueError("divisor ambient mismatch")
    leads = [g.leading(order) for g in divisors]
    key = order.key
    p = dict(f.terms)
    quots: list[dict] = [{} for _ in divisors]
    rem: dict[tuple, Fraction] = {}
    while p:
        lm = max(p, key=key)
        lc = p[lm]
        for k, (gexp, gc) in enumerate(leads):
            if exp_divides(gexp, lm):
                qexp = exp_sub(lm, gexp)
                qc = lc / gc
                quots[k][qexp] = quots[k].get(qexp, 0) + qc
                for mexp, mc in divisors[k].terms.items():
                    t = exp_add(qexp, mexp)
                    s = p.get(t, 0) - qc * mc
                    if s:
                        p[t] = s
                    elif t in p:
                        del p[t]
                break
        else:
            rem[lm] = lc
            del p[lm]
    if divisor_ids is None:
        divisor_ids = tuple(range(len(divisors)))
    return DivisionRecord(
        tuple(Polynomial._raw(f.variables, {e: c for e, c in q.items() if c})
              for q in quots),
        Polynomial._raw(f.variables, rem),
        divisor_ids,
    )


def s_polynomial(f: Polynomial, g: Polynomial, order: MonomialOrder) -> Polynomial:
    """lcm(Lm f, Lm g)/Lt(f) * f - lcm(Lm f, Lm g)/Lt(g) * g."""
    if not f or not g:
        raise ValueError("S-polynomial of a zero polynomial")
    f._check_ambient(g)
    fexp, fc = f.leading(order)
    gexp, gc = g.leading(order)
    lcm = exp_lcm(fexp, gexp)
    return (f.times_term(Fraction(1) / fc, exp_sub(lcm, fexp))
            - g.times_term(Fraction(1) / gc, exp_sub(lcm, gexp)))


# ---- text form -------------------------------------------------------------

def poly_to_str(f: Polynomial) -> str:
    """Canonical text form; round-trips exactly through parse_polynomial."""
    if not f.terms:
        return "0"
    parts = []
    for exp in sorted(f.terms, reverse=True):
        c = f.terms[exp]
        mon = "*".join(f"{name}^{e}" if e > 1 else name
                       for name, e in zip(f.variables, exp) if e)
        mag = abs(c)
        if not mon:
            body = str(mag)
        elif mag == 1:
            body = mon
        else:
            body = f"{mag}*{mon}"
        if not parts:
            parts.append(body if c > 0 else f"-{body}")
        else:
            parts.append(f" + {body}" if c > 0 else f" - {body}")
    return "".join(parts)


_TOKEN = re.compile(r"\s*(\d+|[A-Za-z]+\d*|\^|\*|\+|-|/)")


def _tokenize(text: str) -> list[str]:
    out = []
    pos = 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m:
            if text[pos:].strip():
                raise ValueError(f"cannot tokenize {text[pos:]!r}")
            break
        out.append(m.group(1))
        pos = m.end()
    return out


def parse_polynomial(text: str, variables: Sequence[str]) -> Polynomial:
    """Parse the grammar emitted by poly_to_str.

    Terms are signed products of factors; a factor is a rational number
    (``3``, ``3/4``) or a variable with optional ``^`` power; ``*`` between
    factors is optional.
    """
    variables = tuple(variables)
    index = {name: i for i, name in enumerate(variables)}
    toks = _tokenize(text)
    n = len(variables)
    terms: dict[tuple, Fraction] = {}
    pos = 0

    def peek():
        return toks[pos] if pos < len(toks) else None

    def take():
        nonlocal pos
        tok = toks[pos]
        pos += 1
        return tok

    def parse_int() -> int:
        tok = take()
        if not tok.isdigit():
            raise ValueError(f"expected integer, got {tok!r}")
        return int(tok)

    if not toks:
        raise ValueError("empty polynomial text")
    while pos < len(toks):
        sign = 1
        while peek() in ("+", "-"):
            if take() == "-":
                sign = -sign
        coeff = Fraction(sign)
        exp = [0] * n
        saw_factor = False
        while True:
            tok = peek()
            if tok is None or tok in ("+", "-"):
                break
            if tok == "*":
                take()
                continue
            if tok.isdigit():
                num = parse_int()
                if peek() == "/":
                    take()
                    coeff = coeff * Fraction(num, parse_int())
                else:
                    coeff = coeff * num
            else:
                take()
                if tok not in index:
                    raise ValueError(f"unknown variable {tok!r}")
                e = 1
                if peek() == "^":
                    take()
                    e = parse_int()
                exp[index[tok]] += e
            saw_factor = True
        if not saw_factor:
            raise ValueError("dangling sign in polynomial text")
        key = tuple(exp)
        s = terms.get(key, 0) + coeff
        if s:
            terms[key] = s
        elif key in terms:
            del terms[key]
    return Polynomial._raw(variables, {e: Fraction(c) for e, c in terms.items()})
