"""Graded-commutative arithmetic in B (x) LW.

B is a finite-dimensional graded algebra given by structure constants and
LW is the free graded-commutative algebra on a list of generators: even
generators are polynomial, odd ones exterior. An element is stored as a
dict mapping ``(base_index, exponent_tuple)`` to a nonzero Fraction; the
exponent tuple follows generator declaration order.

Sign convention, fixed everywhere::

    (b (x) m) * (b' (x) m') = (-1)^(|m| |b'|) (b b') (x) (m m')

where ``m m'`` is reordered into declaration order with one sign per
transposition of two odd generators.
"""

from __future__ import annotations

import enum
import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Mapping, Sequence

from .errors import SpecError

_NAME_RE = re.compile(r"^[A-Za-z0-9_][A-Za-z0-9_.']*$")


def to_fraction(value) -> Fraction:
    """Exact rational from an int, Fraction or ``"p/q"`` string. Floats are refused."""
    if isinstance(value, bool) or isinstance(value, float):
        raise SpecError(f"coefficient {value!r} is not an exact rational")
    if isinstance(value, (int, Fraction)):
        return Fraction(value)
    if isinstance(value, str):
        text = value.strip()
        if not re.fullmatch(r"[+-]?\d+(/\d+)?", text):
            raise SpecError(f"coefficient {value!r} is not of the form p/q")
        try:
            return Fraction(text)
        except ZeroDivisionError:
            raise SpecError(f"coefficient {value!r} has zero denominator") from None
    raise SpecError(f"coefficient {value!r} has unsupported type {type(value).__name__}")


def format_fraction(q: Fraction) -> str:
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"


def _check_name(name) -> None:
    if not isinstance(name, str) or not _NAME_RE.match(name):
        raise SpecError(f"invalid symbol name {name!r}")


@dataclass(frozen=True)
class GeneratorSpec:
    name: str
    degree: int

    def __post_init__(self):
        _check_name(self.name)
        if not isinstance(self.degree, int) or isinstance(self.degree, bool):
            raise SpecError(f"generator {self.name}: degree must be an integer")
        if self.degree < 1:
            raise SpecError(f"generator {self.name}: degree {self.degree} < 1")

    @property
    def is_odd(self) -> bool:
        return self.degree % 2 == 1


class BaseAlgebraSpec:
    """A finite-dimensional graded algebra given by a multiplication table.

    ``products`` maps a pair of basis names to a linear combination, given
    either as a ``{name: coeff}`` mapping or an iterable of ``(coeff, name)``.
    Products with the unit are implied. If only one of ``(a, b)`` and
    ``(b, a)`` is given the other is filled in by graded commutativity;
    pairs given in neither order are zero.
    """

    def __init__(self, basis: Sequence[tuple[str, int]], unit: str, products=None):
        names = []
        degrees = []
        for name, degree in basis:
            _check_name(name)
            if not isinstance(degree, int) or isinstance(degree, bool) or degree < 0:
                raise SpecError(f"base element {name}: invalid degree {degree!r}")
            names.append(name)
            degrees.append(degree)
        if len(set(names)) != len(names):
            dup = sorted({n for n in names if names.count(n) > 1})
            raise SpecError(f"duplicate base element(s): {', '.join(dup)}")
        self.names = tuple(names)
        self.degrees = tuple(degrees)
        self.index = {n: i for i, n in enumerate(names)}
        if unit not in self.index:
            raise SpecError(f"unit {unit!r} is not a basis element")
        self.unit = unit
        self.unit_index = self.index[unit]

        given: dict[tuple[int, int], dict[int, Fraction]] = {}
        for (left, right), value in (products or {}).items():
            for s in (left, right):
                if s not in self.index:
                    raise SpecError(f"product table mentions unknown base element {s!r}")
            given[self.index[left], self.index[right]] = self._combination(value)

        n = len(names)
        u = self.unit_index
        table = {}
        for i in range(n):
            for j in range(n):
                if (i, j) in given:
                    table[i, j] = given[i, j]
                elif (j, i) in given and u not in (i, j):
                    sign = -1 if degrees[i] * degrees[j] % 2 else 1
                    table[i, j] = {k: sign * c for k, c in given[j, i].items()}
                elif i == u:
                    table[i, j] = {j: Fraction(1)}
                elif j == u:
                    table[i, j] = {i: Fraction(1)}
                else:
                    table[i, j] = {}
        self._table = {key: tuple(sorted(val.items())) for key, val in table.items()}
        self.check()

    def _combination(self, value) -> dict[int, Fraction]:
        out: dict[int, Fraction] = {}
        items = value.items() if isinstance(value, Mapping) else ((n, c) for c, n in value)
        for name, coeff in items:
            if name not in self.index:
                raise SpecError(f"product table mentions unknown base element {name!r}")
            k = self.index[name]
            out[k] = out.get(k, Fraction(0)) + to_fraction(coeff)
        return {k: c for k, c in out.items() if c}

    @classmethod
    def trivial(cls) -> BaseAlgebraSpec:
        """The ground field, concentrated in degree 0."""
        return cls([("1", 0)], "1")

    def __len__(self):
        return len(self.names)

    def product(self, i: int, j: int) -> tuple[tuple[int, Fraction], ...]:
        return self._table[i, j]

    def products_by_name(self) -> dict[tuple[str, str], dict[str, Fraction]]:
        """All nonzero products not involving the unit."""
        out = {}
        for (i, j), val in sorted(self._table.items()):
            if self.unit_index in (i, j) or not val:
                continue
            out[self.names[i], self.names[j]] = {self.names[k]: c for k, c in val}
        return out

    def _mul_vec(self, x: dict[int, Fraction], y: dict[int, Fraction]) -> dict[int, Fraction]:
        out: dict[int, Fraction] = {}
        for i, a in x.items():
            for j, b in y.items():
                for k, c in self._table[i, j]:
                    out[k] = out.get(k, 0) + a * b * c
        return {k: c for k, c in out.items() if c}

    def check(self) -> None:
        """Raise SpecError unless the table is a unital, associative,
        degree-additive, graded-commutative algebra."""
        deg = self.degrees
        zero_deg = [self.names[i] for i, d in enumerate(deg) if d == 0]
        if zero_deg != [self.unit]:
            raise SpecError(
                f"base must have exactly one degree-0 element, the unit; found {zero_deg}"
            )
        n = len(deg)
        for (i, j), val in self._table.items():
            for k, _ in val:
                if deg[k] != deg[i] + deg[j]:
                    raise SpecError(
                        f"product {self.names[i]}*{self.names[j]} has a term "
                        f"{self.names[k]} of degree {deg[k]} != {deg[i] + deg[j]}"
                    )
        u = self.unit_index
        for i in range(n):
            if self._table[u, i] != ((i, Fraction(1)),) or self._table[i, u] != ((i, Fraction(1)),):
                raise SpecError(f"unit law fails for {self.names[i]}")
        for i in range(n):
            for j in range(i, n):
                sign = -1 if deg[i] * deg[j] % 2 else 1
                lhs = dict(self._table[i, j])
                rhs = {k: sign * c for k, c in self._table[j, i]}
                if lhs != rhs:
                    raise SpecError(
                        f"graded commutativity fails for {self.names[i]}, {self.names[j]}"
                    )
        for i in range(n):
            for j in range(n):
                for k in range(n):
                    left = self._mul_vec(dict(self._table[i, j]), {k: Fraction(1)})
                    right = self._mul_vec({i: Fraction(1)}, dict(self._table[j, k]))
                    if left != right:
                        raise SpecError(
                            "associativity fails for "
                            f"({self.names[i]}, {self.names[j]}, {self.names[k]})"
                        )

    def __eq__(self, other):
        if not isinstance(other, BaseAlgebraSpec):
            return NotImplemented
        return (
            self.names == other.names
            and self.degrees == other.degrees
            and self.unit == other.unit
            and self._table == other._table
        )

    def __hash__(self):
        return hash((self.names, self.degrees, self.unit))

    def __repr__(self):
        basis = ", ".join(f"{n}:{d}" for n, d in zip(self.names, self.degrees))
        return f"BaseAlgebraSpec([{basis}])"


class DegreeMarker(enum.Enum):
    ANY = "any"
    INHOMOGENEOUS = "inhomogeneous"


Monomial = tuple  # exponent vector in generator declaration order


class GradedAlgebra:
    """The algebra B (x) LW in which Elements live."""

    def __init__(self, base: BaseAlgebraSpec, generators: Iterable[GeneratorSpec | tuple] = ()):
        gens = tuple(g if isinstance(g, GeneratorSpec) else GeneratorSpec(*g) for g in generators)
        names = [g.name for g in gens]
        clash = sorted({n for n in names if names.count(n) > 1} | (set(names) & set(base.names)))
        if clash:
            raise SpecError(f"duplicate symbol(s): {', '.join(clash)}")
        self.base = base
        self.generators = gens
        self.gen_index = {g.name: i for i, g in enumerate(gens)}
        self.gen_degrees = tuple(g.degree for g in gens)
        self.gen_odd = tuple(g.is_odd for g in gens)
        self.unit_monomial: Monomial = (0,) * len(gens)
        self._mono_mul_cache: dict = {}

    # -- structure -----------------------------------------------------

    def __eq__(self, other):
        if not isinstance(other, GradedAlgebra):
            return NotImplemented
        return self is other or (self.base == other.base and self.generators == other.generators)

    def __hash__(self):
        return hash((self.base, self.generators))

    def __repr__(self):
        gens = ", ".join(f"{g.name}:{g.degree}" for g in self.generators)
        return f"GradedAlgebra({self.base!r}, [{gens}])"

    def extend(self, generators: Iterable[GeneratorSpec | tuple]) -> GradedAlgebra:
        """Same base, extra generators appended after the existing ones."""
        return GradedAlgebra(self.base, self.generators + tuple(generators))

    def embed(self, a: Element) -> Element:
        """Image of an element of a sub-algebra whose generators are a prefix of ours."""
        src = a.algebra
        k = len(src.generators)
        if src.base != self.base or src.generators != self.generators[:k]:
            raise SpecError("cannot embed: generator list is not a prefix")
        pad = (0,) * (len(self.generators) - k)
        return Element(self, {(b, m + pad): c for (b, m), c in a._terms.items()})

    def symbol_degree(self, name: str) -> int:
        if name in self.gen_index:
            return self.gen_degrees[self.gen_index[name]]
        if name in self.base.index:
            return self.base.degrees[self.base.index[name]]
        raise SpecError(f"symbol {name!r} not found")

    # -- monomials -----------------------------------------------------

    def monomial(self, exponents: Mapping[str, int] | None = None) -> Monomial:
        exps = [0] * len(self.generators)
        for name, e in (exponents or {}).items():
            if name not in self.gen_index:
                raise SpecError(f"symbol {name!r} not found")
            if not isinstance(e, int) or isinstance(e, bool) or e < 0:
                raise SpecError(f"exponent of {name} must be a nonnegative integer")
            i = self.gen_index[name]
            if self.gen_odd[i] and e > 1:
                return None  # odd generator squared
            exps[i] = e
        return tuple(exps)

    def monomial_dict(self, m: Monomial) -> dict[str, int]:
        return {self.generators[i].name: e for i, e in enumerate(m) if e}

    def mono_degree(self, m: Monomial) -> int:
        return sum(e * d for e, d in zip(m, self.gen_degrees))

    def key_degree(self, key) -> int:
        b, m = key
        return self.base.degrees[b] + self.mono_degree(m)

    def _odd_mask(self, m: Monomial) -> int:
        mask = 0
        for i, e in enumerate(m):
            if e and self.gen_odd[i]:
                mask |= 1 << i
        return mask

    def mono_mul(self, m1: Monomial, m2: Monomial):
        """``(sign, m1*m2)`` or None when an odd generator repeats."""
        key = (m1, m2)
        hit = self._mono_mul_cache.get(key)
        if hit is not None or key in self._mono_mul_cache:
            return hit
        o1, o2 = self._odd_mask(m1), self._odd_mask(m2)
        if o1 & o2:
            result = None
        else:
            swaps = 0
            j = 0
            rest = o2
            while rest:
                if rest & 1:
                    swaps += bin(o1 >> (j + 1)).count("1")
                rest >>= 1
                j += 1
            result = (-1 if swaps % 2 else 1, tuple(a + b for a, b in zip(m1, m2)))
        self._mono_mul_cache[key] = result
        return result

    # -- element constructors ------------------------------------------

    def element(self, terms: Iterable) -> Element:
        """Element from ``(coeff, base_name, {generator: exponent})`` triples."""
        return normalize(self, terms)

    def zero(self) -> Element:
        return Element(self, {})

    def one(self) -> Element:
        return Element(self, {(self.base.unit_index, self.unit_monomial): Fraction(1)})

    def gen(self, name: str) -> Element:
        if name not in self.gen_index:
            raise SpecError(f"symbol {name!r} not found")
        m = list(self.unit_monomial)
        m[self.gen_index[name]] = 1
        return Element(self, {(self.base.unit_index, tuple(m)): Fraction(1)})

    def base_element(self, name: str) -> Element:
        if name not in self.base.index:
            raise SpecError(f"symbol {name!r} not found")
        return Element(self, {(self.base.index[name], self.unit_monomial): Fraction(1)})

    def symbol(self, name: str) -> Element:
        """A generator or base basis element, looked up by name."""
        if name in self.gen_index:
            return self.gen(name)
        return self.base_element(name)

    def term(self, key, coeff=1) -> Element:
        c = to_fraction(coeff)
        return Element(self, {key: c} if c else {})

    # -- raw term arithmetic -------------------------------------------

    def _mul_terms(self, x: dict, y: dict) -> dict:
        out: dict = {}
        base = self.base
        bdeg = base.degrees
        for (b1, m1), c1 in x.items():
            dm1 = self.mono_degree(m1)
            for (b2, m2), c2 in y.items():
                mm = self.mono_mul(m1, m2)
                if mm is None:
                    continue
                sign, m = mm
                if dm1 * bdeg[b2] % 2:
                    sign = -sign
                coeff = sign * c1 * c2
                for k, s in base.product(b1, b2):
                    key = (k, m)
                    out[key] = out.get(key, 0) + coeff * s
        return {k: v for k, v in out.items() if v}


class Element:
    """Immutable sparse Q-linear combination of (base, monomial) terms."""

    __slots__ = ("algebra", "_terms")

    def __init__(self, algebra: GradedAlgebra, terms: dict):
        self.algebra = algebra
        self._terms = terms

    def _coerce(self, other) -> Element:
        if isinstance(other, Element):
            if other.algebra != self.algebra:
                raise SpecError("elements belong to different algebras")
            return other
        c = to_fraction(other)
        return self.algebra.one() * c if c else self.algebra.zero()

    def items(self):
        """``((base_index, monomial), coeff)`` pairs in canonical order."""
        return sorted(self._terms.items())

    def terms(self) -> list[tuple[Fraction, str, dict[str, int]]]:
        alg = self.algebra
        return [(c, alg.base.names[b], alg.monomial_dict(m)) for (b, m), c in self.items()]

    def coefficient(self, base: str, exponents: Mapping[str, int] | None = None) -> Fraction:
        key = (self.algebra.base.index[base], self.algebra.monomial(exponents))
        return self._terms.get(key, Fraction(0))

    @property
    def degree(self):
        return degree_of(self)

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self):
        return bool(self._terms)

    def __len__(self):
        return len(self._terms)

    def __eq__(self, other):
        if isinstance(other, Element):
            return self.algebra == other.algebra and self._terms == other._terms
        if isinstance(other, (int, Fraction)):
            return self == self._coerce(other)
        return NotImplemented

    def __hash__(self):
        return hash(frozenset(self._terms.items()))

    def __add__(self, other):
        return add(self, self._coerce(other))

    __radd__ = __add__

    def __neg__(self):
        return Element(self.algebra, {k: -c for k, c in self._terms.items()})

    def __sub__(self, other):
        return add(self, -self._coerce(other))

    def __rsub__(self, other):
        return add(-self, self._coerce(other))

    def __mul__(self, other):
        if isinstance(other, Element):
            return multiply(self, other)
        c = to_fraction(other)
        if not c:
            return self.algebra.zero()
        return Element(self.algebra, {k: c * v for k, v in self._terms.items()})

    def __rmul__(self, other):
        # scalars are central
        return self.__mul__(other)

    def __pow__(self, n: int):
        out = self.algebra.one()
        for _ in range(n):
            out = out * self
        return out

    def __str__(self):
        if not self._terms:
            return "0"
        alg = self.algebra
        parts = []
        for (b, m), c in self.items():
            factors = []
            if b != alg.base.unit_index:
                factors.append(alg.base.names[b])
            for i, e in enumerate(m):
                if e:
                    name = alg.generators[i].name
                    factors.append(name if e == 1 else f"{name}^{e}")
            body = "*".join(factors) or "1"
            mag = abs(c)
            text = body if mag == 1 else (f"{format_fraction(mag)}" if body == "1" else f"{format_fraction(mag)}*{body}")
            parts.append(("-" if c < 0 else "+", text))
        sign, first = parts[0]
        out = ("-" if sign == "-" else "") + first
        for sign, text in parts[1:]:
            out += f" {sign} {text}"
        return out

    def __repr__(self):
        return f"Element({self})"


def normalize(algebra: GradedAlgebra, terms: Iterable) -> Element:
    """Canonical Element from raw ``(coeff, base, monomial)`` triples.

    ``base`` may be a name or index, ``monomial`` an exponent mapping or an
    exponent tuple. Duplicates merge, zeros drop, odd squares vanish.
    """
    out: dict = {}
    for coeff, base, mono in terms:
        c = to_fraction(coeff)
        if isinstance(base, str):
            if base not in algebra.base.index:
                raise SpecError(f"symbol {base!r} not found")
            b = algebra.base.index[base]
        else:
            b = base
        if isinstance(mono, Mapping):
            m = algebra.monomial(mono)
            if m is None:
                continue
        else:
            m = tuple(mono)
            if any(e > 1 and odd for e, odd in zip(m, algebra.gen_odd)):
                continue
        out[b, m] = out.get((b, m), 0) + c
    return Element(algebra, {k: v for k, v in out.items() if v})


def multiply(a: Element, b: Element) -> Element:
    b = a._coerce(b)
    return Element(a.algebra, a.algebra._mul_terms(a._terms, b._terms))


def add(a: Element, b: Element) -> Element:
    b = a._coerce(b)
    out = dict(a._terms)
    for k, c in b._terms.items():
        v = out.get(k, 0) + c
        if v:
            out[k] = v
        else:
            out.pop(k, None)
    return Element(a.algebra, out)


def degree_of(a: Element):
    """Common total degree of the terms, DegreeMarker.ANY for zero, or
    DegreeMarker.INHOMOGENEOUS."""
    degrees = {a.algebra.key_degree(k) for k in a._terms}
    if not degrees:
        return DegreeMarker.ANY
    if len(degrees) > 1:
        return DegreeMarker.INHOMOGENEOUS
    return degrees.pop()
