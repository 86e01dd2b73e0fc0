"""Sparse multivariate polynomials over exact fields, plus ring presentations.

A `RingPresentation` is an ambient polynomial ring k[x1..xr] with per-variable
weights, a term order, and an optional quotient ideal Q; the presented ring is
k[x1..xr]/Q.  Polynomials store a dict from exponent tuples to nonzero
coefficients and are immutable by convention.  Arithmetic is always ambient:
reduction modulo Q happens only through an explicit `ring.reduce` call, never
silently inside `+` or `*`.
"""

from __future__ import annotations

import math
from fractions import Fraction

from .coeff import QQ, RationalField
from .errors import ResourceLimitError, StructureError
from .orders import TermOrder, make_order

# exponents are machine-width by design; growth past this aborts loudly
MAX_EXPONENT = 1 << 20

NEG_INF = -math.inf


def mono_mul(a, b):
    out = tuple(x + y for x, y in zip(a, b))
    if out and max(out) > MAX_EXPONENT:
        raise ResourceLimitError(f"monomial exponent exceeds {MAX_EXPONENT}")
    return out


def mono_divides(a, b):
    """True when monomial a divides monomial b."""
    return all(x <= y for x, y in zip(a, b))


def mono_div(a, b):
    """Exponent vector a - b, or None when b does not divide a."""
    out = tuple(x - y for x, y in zip(a, b))
    if any(e < 0 for e in out):
        return None
    return out


def mono_lcm(a, b):
    return tuple(max(x, y) for x, y in zip(a, b))


class RingPresentation:
    """An ambient weighted polynomial ring modulo an optional quotient ideal."""

    __slots__ = ("field", "variables", "weights", "order", "quotient",
                 "ambient", "_qgb", "_hash")

    def __init__(self, field, variables, weights=None, order="grevlex",
                 quotient=()):
        variables = tuple(variables)
        if not variables:
            raise StructureError("a ring needs at least one variable")
        if len(set(variables)) != len(variables):
            raise StructureError(f"duplicate variable names in {variables}")
        if weights is None:
            weights = (1,) * len(variables)
        weights = tuple(int(w) for w in weights)
        if len(weights) != len(variables):
            raise StructureError("one weight per variable required")
        if any(w < 1 for w in weights):
            raise StructureError("weights must be >= 1")
        if isinstance(order, str):
            order = make_order(order, weights)
        if order.nvars != len(variables):
            raise StructureError("order arity does not match variable count")
        self.field = field
        self.variables = variables
        self.weights = weights
        self.order = order
        if quotient:
            self.ambient = RingPresentation(field, variables, weights, order)
            qs = []
            for q in quotient:
                if not isinstance(q, Polynomial):
                    raise StructureError("quotient generators must be polynomials")
                q = q.retag(self.ambient)
                if not q.is_zero:
                    qs.append(q)
            self.quotient = tuple(qs)
        else:
            self.ambient = self
            self.quotient = ()
        self._qgb = None
        self._hash = None

    # -- construction helpers -------------------------------------------------

    @property
    def nvars(self) -> int:
        return len(self.variables)

    @property
    def is_quotient(self) -> bool:
        return bool(self.quotient)

    def with_quotient(self, polys) -> "RingPresentation":
        """The same presentation with quotient generators adjoined."""
        return RingPresentation(self.field, self.variables, self.weights,
                                self.order, tuple(self.quotient) + tuple(polys))

    def var(self, name: str) -> "Polynomial":
        try:
            i = self.variables.index(name)
        except ValueError:
            raise StructureError(f"no variable {name!r} in {self!r}") from None
        e = tuple(1 if j == i else 0 for j in range(self.nvars))
        return Polynomial(self, {e: self.field.one}, _clean=True)

    def gens(self):
        return tuple(self.var(v) for v in self.variables)

    def const(self, c) -> "Polynomial":
        c = self.field.coerce(c)
        if not c:
            return self.zero()
        return Polynomial(self, {(0,) * self.nvars: c}, _clean=True)

    def one(self) -> "Polynomial":
        return self.const(1)

    def zero(self) -> "Polynomial":
        return Polynomial(self, {}, _clean=True)

    def from_terms(self, terms) -> "Polynomial":
        """Build from {exponent tuple: coefficient}; zeros dropped, coeffs coerced."""
        clean = {}
        for e, c in dict(terms).items():
            e = tuple(int(x) for x in e)
            if len(e) != self.nvars:
                raise StructureError(f"exponent {e} has wrong arity for {self!r}")
            if any(x < 0 for x in e):
                raise StructureError(f"negative exponent in {e}")
            c = self.field.coerce(c)
            if c:
                clean[e] = clean.get(e, self.field.zero) + c
                if not clean[e]:
                    del clean[e]
        return Polynomial(self, clean, _clean=True)

    def weighted_degree_of(self, expts) -> int:
        return sum(w * e for w, e in zip(self.weights, expts))

    # -- quotient handling -----------------------------------------------------

    def quotient_basis(self):
        """Cached reduced Groebner basis of the quotient ideal (ambient)."""
        if self._qgb is None:
            from .groebner import buchberger
            self._qgb = buchberger(list(self.quotient), ring=self.ambient)
        return self._qgb

    def reduce(self, f: "Polynomial") -> "Polynomial":
        """Canonical representative of f modulo the quotient ideal."""
        f = f.retag(self.ambient)
        if not self.quotient:
            return f.retag(self)
        return self.quotient_basis().normal_form(f).retag(self)

    # -- identity ----------------------------------------------------------------

    def _signature(self):
        return (self.field, self.variables, self.weights, self.order,
                tuple(frozenset(q._terms.items()) for q in self.quotient))

    def __eq__(self, other):
        if self is other:
            return True
        return (isinstance(other, RingPresentation)
                and self._signature() == other._signature())

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(self._signature())
        return self._hash

    def __repr__(self):
        head = f"{self.field}[{','.join(self.variables)}]"
        if self.quotient:
            head += "/(" + ", ".join(str(q) for q in self.quotient) + ")"
        if set(self.weights) != {1}:
            head += f" w={self.weights}"
        return head


class Polynomial:
    """Canonical sparse polynomial: exponent tuple -> nonzero coefficient."""

    __slots__ = ("ring", "_terms", "_ordered")

    def __init__(self, ring: RingPresentation, terms: dict, _clean=False):
        if not _clean:
            terms = ring.from_terms(terms)._terms
        self.ring = ring
        self._terms = terms
        self._ordered = None

    # -- inspection --------------------------------------------------------------

    @property
    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self):
        return bool(self._terms)

    def __len__(self):
        return len(self._terms)

    def terms(self):
        """Terms as ((exponents, coefficient), ...) strictly descending."""
        if self._ordered is None:
            key = self.ring.order.key
            self._ordered = tuple(
                (m, self._terms[m])
                for m in sorted(self._terms, key=key, reverse=True))
        return self._ordered

    def leading_monomial(self):
        if not self._terms:
            raise StructureError("zero polynomial has no leading monomial")
        return self.terms()[0][0]

    def leading_coeff(self):
        if not self._terms:
            raise StructureError("zero polynomial has no leading coefficient")
        return self.terms()[0][1]

    def coeff_of(self, expts):
        return self._terms.get(tuple(expts), self.ring.field.zero)

    def weighted_degree(self):
        """Max weighted degree of a term; -inf for the zero polynomial."""
        if not self._terms:
            return NEG_INF
        w = self.ring.weights
        return max(sum(wi * ei for wi, ei in zip(w, e)) for e in self._terms)

    def total_degree(self):
        if not self._terms:
            return NEG_INF
        return max(sum(e) for e in self._terms)

    def is_homogeneous(self) -> bool:
        """All terms share one weighted degree (vacuously true for 0)."""
        w = self.ring.weights
        degs = {sum(wi * ei for wi, ei in zip(w, e)) for e in self._terms}
        return len(degs) <= 1

    # -- arithmetic ----------------------------------------------------------------

    def _coerce_operand(self, other):
        if isinstance(other, Polynomial):
            if other.ring != self.ring:
                raise StructureError(
                    f"mixed rings: {self.ring!r} vs {other.ring!r}")
            return other
        return self.ring.const(other)

    def __add__(self, other):
        other = self._coerce_operand(other)
        big, small = self._terms, other._terms
        if len(big) < len(small):
            big, small = small, big
        out = dict(big)
        for e, c in small.items():
            s = out.get(e)
            if s is None:
                out[e] = c
            else:
                s = s + c
                if s:
                    out[e] = s
                else:
                    del out[e]
        return Polynomial(self.ring, out, _clean=True)

    __radd__ = __add__

    def __neg__(self):
        return Polynomial(self.ring, {e: -c for e, c in self._terms.items()},
                          _clean=True)

    def __sub__(self, other):
        return self + (-self._coerce_operand(other))

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if not isinstance(other, Polynomial):
            c = self.ring.field.coerce(other)
            if not c:
                return self.ring.zero()
            return Polynomial(
                self.ring, {e: c * v for e, v in self._terms.items()}, _clean=True)
        other = self._coerce_operand(other)
        out = {}
        for e1, c1 in self._terms.items():
            for e2, c2 in other._terms.items():
                e = mono_mul(e1, e2)
                c = c1 * c2
                s = out.get(e)
                if s is None:
                    out[e] = c
                else:
                    s = s + c
                    if s:
                        out[e] = s
                    else:
                        del out[e]
        return Polynomial(self.ring, out, _clean=True)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            raise StructureError("negative polynomial power")
        result = self.ring.one()
        base = self
        while n:
            if n & 1:
                result = result * base
            base_needed = n >> 1
            if base_needed:
                base = base * base
            n = base_needed
        return result

    def mul_term(self, coeff, expts) -> "Polynomial":
        """Multiply by the single term coeff * x^expts."""
        coeff = self.ring.field.coerce(coeff)
        if not coeff:
            return self.ring.zero()
        expts = tuple(expts)
        return Polynomial(
            self.ring,
            {mono_mul(e, expts): c * coeff for e, c in self._terms.items()},
            _clean=True)

    def monic(self) -> "Polynomial":
        if not self._terms:
            return self
        inv = self.ring.field.invert(self.leading_coeff())
        return self * inv

    def primitive(self) -> "Polynomial":
        """Clear denominators and content over QQ (positive leading coefficient);
        over a prime field this is `monic`."""
        if not self._terms:
            return self
        if not isinstance(self.ring.field, RationalField):
            return self.monic()
        den = 1
        for c in self._terms.values():
            den = den * c.denominator // math.gcd(den, c.denominator)
        nums = [c.numerator * (den // c.denominator) for c in self._terms.values()]
        g = 0
        for n in nums:
            g = math.gcd(g, n)
        scale = Fraction(den, g)
        if self.leading_coeff() < 0:
            scale = -scale
        return self * scale

    def exact_div(self, divisor: "Polynomial") -> "Polynomial":
        """Quotient self/divisor when divisor divides self exactly (ambient)."""
        divisor = self._coerce_operand(divisor)
        if divisor.is_zero:
            raise ZeroDivisionError("polynomial division by zero")
        rem = self
        q = {}
        dlm, dlc = divisor.leading_monomial(), divisor.leading_coeff()
        while rem._terms:
            shift = mono_div(rem.leading_monomial(), dlm)
            if shift is None:
                raise ArithmeticError(
                    "internal consistency error: expected exact divisibility")
            c = rem.leading_coeff() / dlc
            q[shift] = c
            rem = rem - divisor.mul_term(c, shift)
        return Polynomial(self.ring, q, _clean=True)

    # -- plumbing ----------------------------------------------------------------

    def retag(self, ring: RingPresentation) -> "Polynomial":
        """The same term data viewed in a structurally compatible presentation."""
        if ring is self.ring:
            return self
        if ring.nvars != self.ring.nvars or ring.field != self.ring.field:
            raise StructureError(
                f"cannot retag between {self.ring!r} and {ring!r}")
        return Polynomial(ring, self._terms, _clean=True)

    def lift(self) -> "Polynomial":
        """The polynomial viewed in the ambient (quotient-free) presentation."""
        return self.retag(self.ring.ambient)

    def __eq__(self, other):
        if isinstance(other, Polynomial):
            return other.ring == self.ring and other._terms == self._terms
        if isinstance(other, (int, Fraction)):
            return self == self.ring.const(other)
        return NotImplemented

    def __hash__(self):
        return hash((self.ring, frozenset(self._terms.items())))

    def __str__(self):
        if not self._terms:
            return "0"
        parts = []
        for i, (e, c) in enumerate(self.terms()):
            factors = []
            for name, exp in zip(self.ring.variables, e):
                if exp == 1:
                    factors.append(name)
                elif exp > 1:
                    factors.append(f"{name}^{exp}")
            body = "*".join(factors)
            cs = str(c)
            neg = cs.startswith("-")
            mag = cs[1:] if neg else cs
            if body and mag == "1":
                piece = body
            elif body:
                piece = f"{mag}*{body}"
            else:
                piece = mag
            if i == 0:
                parts.append(("-" if neg else "") + piece)
            else:
                parts.append(("- " if neg else "+ ") + piece)
        return " ".join(parts)

    def __repr__(self):
        return f"<{self} over {self.ring!r}>"
