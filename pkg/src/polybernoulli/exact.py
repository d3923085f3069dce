"""Exact coefficient arithmetic: rational scalars and sparse multivariate polynomials.

The scalar type is :class:`fractions.Fraction`, re-exported as ``Rational``.
It already keeps every value in the canonical form the package relies on:
reduced, positive denominator, zero stored as 0/1.

``MultiPoly`` is a sparse polynomial over ``Rational`` in the four fixed
indeterminates ``X``, ``La``, ``Lb``, ``Lc``.  ``La``, ``Lb``, ``Lc`` stand
for the formal logarithms of three positive parameters a, b, c, kept symbolic
so identities can be checked exactly; ``X`` is the polynomial argument.
Terms live in a map from exponent vectors ``(eX, eLa, eLb, eLc)`` to nonzero
coefficients, so equality is plain map equality and zero is the empty map.

Everything here is immutable; operations return new objects, and values can
be shared freely across threads.
"""

from __future__ import annotations

import re
from fractions import Fraction
from typing import Iterator, Mapping, Union

__all__ = [
    "Rational",
    "MultiPoly",
    "VARIABLES",
    "X",
    "LA",
    "LB",
    "LC",
    "as_poly",
    "rat_arith",
    "poly_arith",
    "poly_substitute",
    "poly_eval",
    "homogeneous_substitute",
    "format_rational",
    "parse_rational",
    "format_poly",
    "parse_poly",
]

Rational = Fraction

Scalar = Union[int, Fraction]
PolyLike = Union["MultiPoly", int, Fraction]

VARIABLES = ("X", "La", "Lb", "Lc")
_VAR_INDEX = {name: i for i, name in enumerate(VARIABLES)}
_ZERO_EXPS = (0, 0, 0, 0)
_F0 = Fraction(0)
_F1 = Fraction(1)


def rat_arith(op: str, p: Scalar, q: Scalar) -> Fraction:
    """Dispatch one exact rational operation.

    ``op`` is one of ``add``, ``sub``, ``mul``, ``div``; dividing by zero
    raises :class:`ZeroDivisionError` before any work is done.
    """
    p, q = Fraction(p), Fraction(q)
    if op == "add":
        return p + q
    if op == "sub":
        return p - q
    if op == "mul":
        return p * q
    if op == "div":
        if q == 0:
            raise ZeroDivisionError("rational division by zero")
        return p / q
    raise ValueError(f"unknown rational operation: {op!r}")


class MultiPoly:
    """Immutable sparse polynomial in X, La, Lb, Lc over Rational."""

    __slots__ = ("_terms",)

    def __init__(self, terms: Mapping[tuple, Scalar] | None = None):
        clean: dict[tuple, Fraction] = {}
        for exps, coeff in (terms or {}).items():
            key = tuple(exps)
            if len(key) != 4 or any(not isinstance(e, int) or e < 0 for e in key):
                raise ValueError(f"bad exponent vector: {exps!r}")
            c = Fraction(coeff)
            if c:
                clean[key] = c
        self._terms = clean

    @classmethod
    def _from_clean(cls, terms: dict[tuple, Fraction]) -> "MultiPoly":
        # internal fast path: terms must already be validated and zero-free
        obj = object.__new__(cls)
        obj._terms = terms
        return obj

    @classmethod
    def constant(cls, value: Scalar) -> "MultiPoly":
        c = Fraction(value)
        return cls._from_clean({_ZERO_EXPS: c} if c else {})

    @classmethod
    def variable(cls, name: str) -> "MultiPoly":
        idx = _VAR_INDEX.get(name)
        if idx is None:
            raise ValueError(f"unknown indeterminate: {name}")
        exps = tuple(1 if i == idx else 0 for i in range(4))
        return cls._from_clean({exps: _F1})

    @classmethod
    def monomial(cls, exps: tuple, coeff: Scalar = 1) -> "MultiPoly":
        return cls({tuple(exps): coeff})

    # -- structure ---------------------------------------------------------

    def items(self) -> Iterator[tuple[tuple, Fraction]]:
        return iter(self._terms.items())

    def is_zero(self) -> bool:
        return not self._terms

    def is_constant(self) -> bool:
        return not self._terms or set(self._terms) == {_ZERO_EXPS}

    def constant_value(self) -> Fraction:
        """The value of a constant polynomial; raises ValueError otherwise."""
        if not self._terms:
            return _F0
        if set(self._terms) == {_ZERO_EXPS}:
            return self._terms[_ZERO_EXPS]
        raise ValueError("not a constant polynomial")

    def constant_term(self) -> Fraction:
        return self._terms.get(_ZERO_EXPS, _F0)

    def degree(self, name: str) -> int:
        """Largest exponent of ``name`` appearing in any term (0 for the zero poly)."""
        idx = _VAR_INDEX[name]
        return max((e[idx] for e in self._terms), default=0)

    def total_degree(self) -> int:
        return max((sum(e) for e in self._terms), default=0)

    def coefficient(self, exps: tuple) -> Fraction:
        return self._terms.get(tuple(exps), _F0)

    def split_by(self, name: str) -> dict[int, "MultiPoly"]:
        """Decompose as a polynomial in ``name``: power -> coefficient poly.

        The returned coefficient polynomials do not involve ``name``.
        """
        idx = _VAR_INDEX[name]
        buckets: dict[int, dict[tuple, Fraction]] = {}
        for exps, c in self._terms.items():
            stripped = tuple(0 if i == idx else e for i, e in enumerate(exps))
            buckets.setdefault(exps[idx], {})[stripped] = c
        return {d: MultiPoly._from_clean(t) for d, t in buckets.items()}

    # -- ring operations ---------------------------------------------------

    @staticmethod
    def _coerce(value):
        if isinstance(value, MultiPoly):
            return value
        if isinstance(value, (int, Fraction)):
            return MultiPoly.constant(value)
        return None

    def __add__(self, other):
        other = MultiPoly._coerce(other)
        if other is None:
            return NotImplemented
        out = dict(self._terms)
        for exps, c in other._terms.items():
            s = out.get(exps, _F0) + c
            if s:
                out[exps] = s
            else:
                out.pop(exps, None)
        return MultiPoly._from_clean(out)

    __radd__ = __add__

    def __neg__(self):
        return MultiPoly._from_clean({e: -c for e, c in self._terms.items()})

    def __sub__(self, other):
        other = MultiPoly._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = MultiPoly._coerce(other)
        if other is None:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        other = MultiPoly._coerce(other)
        if other is None:
            return NotImplemented
        out: dict[tuple, Fraction] = {}
        for e1, c1 in self._terms.items():
            for e2, c2 in other._terms.items():
                key = (e1[0] + e2[0], e1[1] + e2[1], e1[2] + e2[2], e1[3] + e2[3])
                s = out.get(key, _F0) + c1 * c2
                if s:
                    out[key] = s
                else:
                    out.pop(key, None)
        return MultiPoly._from_clean(out)

    __rmul__ = __mul__

    def __pow__(self, exponent: int):
        if not isinstance(exponent, int) or exponent < 0:
            raise ValueError("polynomial exponent must be a non-negative integer")
        result = MultiPoly.constant(1)
        base = self
        e = exponent
        while e:
            if e & 1:
                result = result * base
            base = base * base if e > 1 else base
            e >>= 1
        return result

    def __eq__(self, other):
        if isinstance(other, MultiPoly):
            return self._terms == other._terms
        if isinstance(other, (int, Fraction)):
            c = Fraction(other)
            if c == 0:
                return not self._terms
            return self._terms == {_ZERO_EXPS: c}
        return NotImplemented

    def __hash__(self):
        if self.is_constant():
            return hash(self.constant_term())
        return hash(frozenset(self._terms.items()))

    def __bool__(self):
        return bool(self._terms)

    # -- substitution and evaluation --------------------------------------

    def substitute(self, bindings: Mapping[str, PolyLike]) -> "MultiPoly":
        """Replace indeterminates by polynomials (or scalars).

        Unbound indeterminates pass through untouched.  Binding values may be
        ``MultiPoly``, ``int`` or ``Rational``.
        """
        for name in bindings:
            if name not in _VAR_INDEX:
                raise ValueError(f"unknown indeterminate: {name}")
        bound = {_VAR_INDEX[name]: as_poly(v) for name, v in bindings.items()}
        powers: dict[tuple[int, int], MultiPoly] = {}

        def power(idx, e):
            key = (idx, e)
            if key not in powers:
                powers[key] = bound[idx] ** e
            return powers[key]

        total = MultiPoly.constant(0)
        for exps, coeff in self._terms.items():
            residual = tuple(0 if i in bound else e for i, e in enumerate(exps))
            term = MultiPoly._from_clean({residual: coeff})
            for idx in bound:
                if exps[idx]:
                    term = term * power(idx, exps[idx])
            total = total + term
        return total

    def eval(self, point: Mapping[str, Scalar]) -> Fraction:
        """Evaluate at an all-rational point.

        Every indeterminate that actually occurs must be bound; a missing one
        raises ValueError naming it.
        """
        total = _F0
        for exps, coeff in self._terms.items():
            v = coeff
            for name, idx in _VAR_INDEX.items():
                e = exps[idx]
                if e:
                    if name not in point:
                        raise ValueError(f"unbound indeterminate: {name}")
                    v *= Fraction(point[name]) ** e
            total += v
        return total

    def __repr__(self):
        return f"MultiPoly({format_poly(self)!r})"

    def __str__(self):
        return format_poly(self)


X = MultiPoly.variable("X")
LA = MultiPoly.variable("La")
LB = MultiPoly.variable("Lb")
LC = MultiPoly.variable("Lc")


def as_poly(value: PolyLike) -> MultiPoly:
    """Coerce an int or Rational to a constant polynomial; pass polynomials through."""
    p = MultiPoly._coerce(value)
    if p is None:
        raise TypeError(f"cannot interpret {value!r} as a polynomial")
    return p


def poly_arith(op: str, p: PolyLike, q: PolyLike) -> MultiPoly:
    """Dispatch one polynomial ring operation (``add``, ``sub``, ``mul``)."""
    p, q = as_poly(p), as_poly(q)
    if op == "add":
        return p + q
    if op == "sub":
        return p - q
    if op == "mul":
        return p * q
    raise ValueError(f"unknown polynomial operation: {op!r}")


def poly_substitute(p: MultiPoly, bindings: Mapping[str, PolyLike]) -> MultiPoly:
    return p.substitute(bindings)


def poly_eval(p: MultiPoly, point: Mapping[str, Scalar]) -> Fraction:
    return p.eval(point)


def homogeneous_substitute(
    p: MultiPoly,
    name: str,
    numerator: PolyLike,
    complement: PolyLike,
    degree: int,
) -> MultiPoly:
    """Substitute ``name`` by a formal quotient with denominators cleared.

    Reading ``p`` as a polynomial of degree at most ``degree`` in ``name``,
    replace ``name`` by ``numerator / complement`` and multiply through by
    ``complement ** degree``: each piece ``q_d * name^d`` becomes
    ``q_d * numerator^d * complement^(degree - d)``.  No rational-function
    arithmetic is involved at any point.
    """
    parts = p.split_by(name)
    if parts and degree < max(parts):
        raise ValueError(
            f"homogeneous substitution degree {degree} below actual degree {max(parts)}"
        )
    num = as_poly(numerator)
    comp = as_poly(complement)
    acc = MultiPoly.constant(0)
    for d, q in parts.items():
        acc = acc + q * num**d * comp ** (degree - d)
    return acc


# -- text round-trip -------------------------------------------------------

_RATIONAL_RE = re.compile(r"^[+-]?\d+(?:/[1-9]\d*)?$")
_FACTOR_RE = re.compile(r"^(X|La|Lb|Lc)(?:\^([1-9]\d*))?$")

CANONICAL_NAMES = {name: name for name in VARIABLES}


def format_rational(q: Scalar) -> str:
    """Canonical text form: ``p/q``, or just ``p`` when the denominator is 1."""
    return str(Fraction(q))


def parse_rational(text: str) -> Fraction:
    t = text.strip()
    if not _RATIONAL_RE.match(t):
        raise ValueError(f"not a rational literal: {text!r}")
    return Fraction(t)


def _term_sort_key(exps):
    return (sum(exps), exps)


def format_poly(
    p: MultiPoly,
    names: Mapping[str, str] | None = None,
    var_order: tuple = VARIABLES,
) -> str:
    """Render a polynomial as a sorted sum of terms.

    Terms are ordered by total degree, then lexicographically on the exponent
    vector (X before La before Lb before Lc), highest first, so the output is
    canonical.  ``names`` and ``var_order`` only affect how each term is
    spelled, not the term order.
    """
    names = CANONICAL_NAMES if names is None else names
    if p.is_zero():
        return "0"
    parts = []
    for exps in sorted(p._terms, key=_term_sort_key, reverse=True):
        coeff = p._terms[exps]
        factors = []
        for var in var_order:
            e = exps[_VAR_INDEX[var]]
            if e == 1:
                factors.append(names[var])
            elif e > 1:
                factors.append(f"{names[var]}^{e}")
        mag = abs(coeff)
        if not factors:
            body = str(mag)
        elif mag == 1:
            body = "*".join(factors)
        else:
            body = "*".join([str(mag), *factors])
        if not parts:
            parts.append(body if coeff > 0 else f"-{body}")
        else:
            parts.append(f" + {body}" if coeff > 0 else f" - {body}")
    return "".join(parts)


def parse_poly(text: str) -> MultiPoly:
    """Parse the canonical `format_poly` output (X/La/Lb/Lc names) back."""
    t = text.strip()
    if not t:
        raise ValueError("empty polynomial text")
    if t == "0":
        return MultiPoly.constant(0)
    terms: dict[tuple, Fraction] = {}
    for chunk in t.replace(" - ", " + -").split(" + "):
        chunk = chunk.strip()
        if not chunk:
            raise ValueError(f"malformed polynomial text: {text!r}")
        sign = 1
        if chunk.startswith("-"):
            sign, chunk = -1, chunk[1:]
        coeff = _F1
        exps = [0, 0, 0, 0]
        saw_factor = False
        for factor in chunk.split("*"):
            m = _FACTOR_RE.match(factor)
            if m:
                exps[_VAR_INDEX[m.group(1)]] += int(m.group(2) or 1)
                saw_factor = True
            elif _RATIONAL_RE.match(factor):
                coeff *= Fraction(factor)
                saw_factor = True
            else:
                raise ValueError(f"malformed term factor: {factor!r}")
        if not saw_factor:
            raise ValueError(f"malformed polynomial text: {text!r}")
        key = tuple(exps)
        terms[key] = terms.get(key, _F0) + sign * coeff
    return MultiPoly(terms)
