"""Complexes (B (x) LW, d) and the Leibniz extension of d.

The differential is given on multiplicative generators only: every base
basis element and every generator gets an assigned value (zero if absent).
Everything else follows from linearity and

    d(uv) = d(u) v + (-1)^|u| u d(v).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Mapping

from .errors import SpecError, UnvalidatedSpecError, ValidationError
from .graded import DegreeMarker, Element, GradedAlgebra, degree_of


class ComplexSpec:
    """A graded algebra with a differential and a truncation degree.

    Treat instances as immutable. Cohomology routines refuse specs that have
    not been through :meth:`validate`.
    """

    def __init__(
        self,
        algebra: GradedAlgebra,
        differential: Mapping[str, Element] | None = None,
        max_degree: int = 10,
    ):
        if not isinstance(max_degree, int) or max_degree < 1:
            raise SpecError(f"max_degree must be a positive integer, got {max_degree!r}")
        self.algebra = algebra
        self.max_degree = max_degree
        d_base = [algebra.zero()] * len(algebra.base)
        d_gen = [algebra.zero()] * len(algebra.generators)
        for name, value in (differential or {}).items():
            if not isinstance(value, Element) or value.algebra != algebra:
                raise SpecError(f"d({name}) is not an element of this algebra")
            if name in algebra.gen_index:
                d_gen[algebra.gen_index[name]] = value
            elif name in algebra.base.index:
                d_base[algebra.base.index[name]] = value
            else:
                raise SpecError(f"symbol {name!r} not found")
        self.d_base = tuple(d_base)
        self.d_gen = tuple(d_gen)
        self.validated = False
        self._cache: dict = {}

    @property
    def base(self):
        return self.algebra.base

    @property
    def generators(self):
        return self.algebra.generators

    @property
    def differential(self) -> dict[str, Element]:
        """Assignments on every symbol, base elements first."""
        out = dict(zip(self.base.names, self.d_base))
        out.update((g.name, v) for g, v in zip(self.generators, self.d_gen))
        return out

    def validate(self) -> ComplexSpec:
        report = check_differential(self)
        if not report.ok:
            raise ValidationError(report)
        self.validated = True
        return self

    def with_max_degree(self, max_degree: int) -> ComplexSpec:
        out = ComplexSpec(self.algebra, self.differential, max_degree)
        out.validated = self.validated
        return out

    def __eq__(self, other):
        if not isinstance(other, ComplexSpec):
            return NotImplemented
        return (
            self.algebra == other.algebra
            and self.d_base == other.d_base
            and self.d_gen == other.d_gen
            and self.max_degree == other.max_degree
        )

    __hash__ = object.__hash__

    def __repr__(self):
        nonzero = ", ".join(f"d{k} = {v}" for k, v in self.differential.items() if v)
        return f"ComplexSpec({self.algebra!r}, {{{nonzero}}}, max_degree={self.max_degree})"


def _d_key(spec: ComplexSpec, key) -> dict:
    """d of a single basis term ``(b, m)``, as a raw term dict (cached)."""
    cache = spec._cache.setdefault("d", {})
    hit = cache.get(key)
    if hit is not None:
        return hit
    alg = spec.algebra
    b, m = key
    unit = alg.base.unit_index
    out: dict = {}

    def acc(terms, coeff):
        for k, c in terms.items():
            v = out.get(k, 0) + coeff * c
            if v:
                out[k] = v
            else:
                out.pop(k, None)

    # d(b (x) m) = d(b) m + (-1)^|b| b d(m)
    if spec.d_base[b]:
        acc(alg._mul_terms(spec.d_base[b]._terms, {(unit, m): 1}), 1)
    if any(m):
        bsign = -1 if alg.base.degrees[b] % 2 else 1
        prefix_deg = 0
        n = len(m)
        for i, e in enumerate(m):
            if not e:
                continue
            dg = spec.d_gen[i]
            if dg:
                left = m[:i] + (e - 1,) + (0,) * (n - i - 1)
                right = (0,) * (i + 1) + m[i + 1:]
                sign = -1 if prefix_deg % 2 else 1
                t = alg._mul_terms({(b, left): 1}, dg._terms)
                t = alg._mul_terms(t, {(unit, right): 1})
                acc(t, bsign * sign * e)
            prefix_deg += e * alg.gen_degrees[i]
    cache[key] = out
    return out


def _apply(spec: ComplexSpec, a: Element) -> Element:
    out: dict = {}
    for key, c in a._terms.items():
        for k, v in _d_key(spec, key).items():
            s = out.get(k, 0) + c * v
            if s:
                out[k] = s
            else:
                out.pop(k, None)
    return Element(spec.algebra, out)


def apply_d(spec: ComplexSpec, a: Element) -> Element:
    """The differential of ``a``: linear, Leibniz on each term."""
    if not spec.validated:
        raise UnvalidatedSpecError("spec has not been validated; call spec.validate()")
    if a.algebra != spec.algebra:
        raise SpecError("element does not belong to this complex")
    return _apply(spec, a)


@dataclass(frozen=True)
class Violation:
    kind: str  # "homogeneity", "d_squared" or "leibniz"
    symbol: str
    detail: str

    def __str__(self):
        return f"{self.kind}: {self.symbol}: {self.detail}"


@dataclass
class ValidationReport:
    violations: list[Violation] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations

    def symbols(self, kind: str | None = None) -> set[str]:
        return {v.symbol for v in self.violations if kind is None or v.kind == kind}

    def __str__(self):
        if self.ok:
            return "valid"
        return "\n".join(str(v) for v in self.violations)


def check_differential(spec: ComplexSpec) -> ValidationReport:
    """Check homogeneity, d^2 = 0 on generators and base, and that the
    base assignments respect the multiplication table."""
    alg = spec.algebra
    report = ValidationReport()
    symbols = [(n, d, v) for n, d, v in zip(alg.base.names, alg.base.degrees, spec.d_base)]
    symbols += [(g.name, g.degree, v) for g, v in zip(alg.generators, spec.d_gen)]

    for name, deg, value in symbols:
        got = degree_of(value)
        if got is DegreeMarker.ANY or got == deg + 1:
            continue
        what = "inhomogeneous" if got is DegreeMarker.INHOMOGENEOUS else f"degree {got}"
        report.violations.append(
            Violation("homogeneity", name, f"d({name}) = {value} is {what}, expected degree {deg + 1}")
        )

    for name, deg, value in symbols:
        dd = _apply(spec, value)
        if dd:
            report.violations.append(Violation("d_squared", name, f"d(d({name})) = {dd} != 0"))

    base = alg.base
    unit_m = alg.unit_monomial
    n = len(base)
    for i in range(n):
        for j in range(n):
            prod = {(k, unit_m): c for k, c in base.product(i, j)}
            lhs = _apply(spec, Element(alg, prod))
            bi = alg.term((i, unit_m))
            bj = alg.term((j, unit_m))
            sign = -1 if base.degrees[i] % 2 else 1
            rhs = spec.d_base[i] * bj + sign * (bi * spec.d_base[j])
            if lhs != rhs:
                report.violations.append(
                    Violation(
                        "leibniz",
                        f"{base.names[i]}*{base.names[j]}",
                        f"d({base.names[i]}*{base.names[j]}) = {lhs} but Leibniz gives {rhs}",
                    )
                )
    return report
