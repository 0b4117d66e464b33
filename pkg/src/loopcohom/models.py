"""Constructors for the complexes attached to bundles, plus named fixtures.

All bundle models share one assembly: take a base complex, append one new
generator per characteristic class ``c`` with degree ``deg c - 1`` and set
``d(new) = c``. They differ only in what they accept:

* GHV principal-bundle model: ``deg c`` even, so the new generators are odd.
* loop-bundle models: ``deg c`` odd and at least 3, new generators even.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Iterable, Mapping, Sequence

from .differential import ComplexSpec, apply_d
from .errors import SpecError
from .graded import BaseAlgebraSpec, DegreeMarker, Element, GeneratorSpec, GradedAlgebra, degree_of

DEFAULT_TRUNCATION = 20


def make_complex(
    base: BaseAlgebraSpec,
    generators: Iterable = (),
    differential: Mapping | None = None,
    max_degree: int = DEFAULT_TRUNCATION,
) -> ComplexSpec:
    """Build and validate a complex.

    ``differential`` maps a symbol to an Element or to raw
    ``(coeff, base_name, {generator: exponent})`` triples.
    """
    alg = GradedAlgebra(base, generators)
    d = {}
    for name, value in (differential or {}).items():
        d[name] = value if isinstance(value, Element) else alg.element(value)
    return ComplexSpec(alg, d, max_degree).validate()


def trivial_base() -> ComplexSpec:
    return make_complex(BaseAlgebraSpec.trivial(), max_degree=1)


@dataclass(frozen=True)
class CharacteristicData:
    """Characteristic class representatives ``c_i`` in a base complex.

    ``pairs`` holds ``(deg c_i, c_i)``; the degree is explicit so that a
    zero class still determines its generator. ``c_i`` may be None or 0 for
    the zero class. ``names`` optionally fixes the new generator names.
    """

    pairs: tuple
    names: tuple | None = None

    def __post_init__(self):
        object.__setattr__(self, "pairs", tuple(self.pairs))
        if self.names is not None:
            object.__setattr__(self, "names", tuple(self.names))
            if len(self.names) != len(self.pairs):
                raise SpecError("one name per characteristic class required")


def _fresh_name(stem: str, taken: set[str]) -> str:
    if stem not in taken:
        return stem
    k = 2
    while f"{stem}_{k}" in taken:
        k += 1
    return f"{stem}_{k}"


def _assemble(base: ComplexSpec, data: CharacteristicData, truncation: int, prefix: str, parity_ok) -> ComplexSpec:
    if not base.validated:
        base.validate()
    balg = base.algebra
    taken = set(balg.base.names) | set(balg.gen_index)
    new_gens = []
    values = []
    for k, (deg, c) in enumerate(data.pairs):
        if not isinstance(deg, int) or not parity_ok(deg):
            raise SpecError(f"characteristic class {k}: degree {deg!r} not allowed here")
        if c is None or (not isinstance(c, Element) and c == 0):
            c = balg.zero()
        if not isinstance(c, Element) or c.algebra != balg:
            raise SpecError(f"characteristic class {k} is not an element of the base")
        got = degree_of(c)
        if got is not DegreeMarker.ANY and got != deg:
            raise SpecError(f"characteristic class {k}: {c} does not have degree {deg}")
        if apply_d(base, c):
            raise SpecError(f"characteristic class {k}: {c} is not closed")
        name = data.names[k] if data.names else _fresh_name(f"{prefix}{deg - 1}", taken)
        if name in taken:
            raise SpecError(f"duplicate symbol {name!r}")
        taken.add(name)
        new_gens.append(GeneratorSpec(name, deg - 1))
        values.append(c)
    alg = balg.extend(new_gens)
    d = {name: alg.embed(v) for name, v in base.differential.items()}
    for g, c in zip(new_gens, values):
        d[g.name] = alg.embed(c)
    return ComplexSpec(alg, d, truncation).validate()


def ghv_bundle_model(base: ComplexSpec, data: CharacteristicData, truncation: int) -> ComplexSpec:
    """Principal G-bundle model: odd fiber generators z with d z = c, deg c even."""
    return _assemble(base, data, truncation, "z", lambda d: d >= 2 and d % 2 == 0)


def loop_bundle_model(base: ComplexSpec, data: CharacteristicData, truncation: int) -> ComplexSpec:
    """Loop-group bundle model B[y_1, ..., y_r] with d y_i = c_i, deg c_i odd >= 3."""
    return _assemble(base, data, truncation, "y", lambda d: d >= 3 and d % 2 == 1)


def formal_loop_bundle_model(cohomology_base: ComplexSpec, data: CharacteristicData, truncation: int) -> ComplexSpec:
    """As loop_bundle_model, over a cohomology ring with zero differential."""
    nonzero = [name for name, v in cohomology_base.differential.items() if v]
    if nonzero:
        raise SpecError(f"formal model needs a zero base differential; d is nonzero on {', '.join(nonzero)}")
    return loop_bundle_model(cohomology_base, data, truncation)


def equivariant_loop_bundle_model(
    cartan_base: ComplexSpec,
    data: CharacteristicData,
    truncation: int,
    polynomial_generators: Sequence[str] | None = None,
) -> ComplexSpec:
    """Equivariant loop-bundle model over a Cartan-type base.

    The base is a finite-dimensional part tensored with even polynomial
    generators ``u_j`` (``d u_j = 0``); the equivariant differential is
    whatever the base assignments say. The ``u_j`` must be the base's
    generators.
    """
    if not cartan_base.validated:
        cartan_base.validate()
    alg = cartan_base.algebra
    names = [g.name for g in alg.generators] if polynomial_generators is None else list(polynomial_generators)
    if sorted(names) != sorted(g.name for g in alg.generators):
        raise SpecError("polynomial generators must be exactly the generators of the Cartan base")
    for name in names:
        g = alg.generators[alg.gen_index[name]]
        if g.is_odd:
            raise SpecError(f"polynomial generator {name} has odd degree {g.degree}")
        if cartan_base.d_gen[alg.gen_index[name]]:
            raise SpecError(f"polynomial generator {name} must have zero differential")
    return loop_bundle_model(cartan_base, data, truncation)


def _check_group_degrees(degrees: Sequence[int]):
    for d in degrees:
        if not isinstance(d, int) or d < 3 or d % 2 == 0:
            raise SpecError(f"generator degree {d!r} of H*(G) must be odd and >= 3")


def contractible_model(degrees: Sequence[int], truncation: int = DEFAULT_TRUNCATION) -> ComplexSpec:
    """L(x_i, y_i) with deg y_i = deg x_i - 1 and d y_i = x_i; acyclic."""
    _check_group_degrees(degrees)
    taken: set[str] = set()
    xs, ys = [], []
    for stem, out in (("x", xs), ("y", ys)):
        for d in degrees:
            name = _fresh_name(f"{stem}{d if stem == 'x' else d - 1}", taken)
            taken.add(name)
            out.append(name)
    gens = [(x, d) for x, d in zip(xs, degrees)] + [(y, d - 1) for y, d in zip(ys, degrees)]
    diff = {y: [(1, "1", {x: 1})] for x, y in zip(xs, ys)}
    return make_complex(BaseAlgebraSpec.trivial(), gens, diff, truncation)


def loop_space_model(degrees: Sequence[int], truncation: int = DEFAULT_TRUNCATION) -> ComplexSpec:
    """(R[y_i], 0) with deg y_i = d_i - 1."""
    _check_group_degrees(degrees)
    data = CharacteristicData([(d, None) for d in degrees])
    return loop_bundle_model(trivial_base(), data, truncation)


def su3_so3_base() -> ComplexSpec:
    """H*(SU(3)/SO(3)) = R[x5]/(x5^2) with zero differential."""
    return make_complex(BaseAlgebraSpec([("1", 0), ("x5", 5)], "1"), max_degree=DEFAULT_TRUNCATION)


def su3_so3_example(truncation: int = DEFAULT_TRUNCATION, scale=1) -> ComplexSpec:
    """H*(M)[y2, y4] with d y2 = 0 (pullback of eta_3) and d y4 = scale * x5."""
    if truncation < 2:
        raise SpecError("truncation must be at least 2")
    base = su3_so3_base()
    x5 = base.algebra.base_element("x5")
    data = CharacteristicData([(3, None), (5, scale * x5)], names=("y2", "y4"))
    return formal_loop_bundle_model(base, data, truncation)


def equivariant_point_su2(truncation: int = DEFAULT_TRUNCATION) -> ComplexSpec:
    """Point with trivial SU(2) action: R[u4][y2], zero differential."""
    base = make_complex(BaseAlgebraSpec.trivial(), [("u4", 4)])
    return equivariant_loop_bundle_model(base, CharacteristicData([(3, None)], names=("y2",)), truncation)


def conjugation_gg(truncation: int = DEFAULT_TRUNCATION) -> ComplexSpec:
    """SU(2) acting on itself by conjugation: L(x3) (x) R[u4] with zero
    differential, as an equivariant model with no loop generators."""
    base = make_complex(BaseAlgebraSpec([("1", 0), ("x3", 3)], "1"), [("u4", 4)])
    return equivariant_loop_bundle_model(base, CharacteristicData([]), truncation)


FIXTURES: dict[str, Callable[[int], ComplexSpec]] = {
    "su3-so3": su3_so3_example,
    "loop-su2": lambda t=DEFAULT_TRUNCATION: loop_space_model([3], t),
    "loop-su3": lambda t=DEFAULT_TRUNCATION: loop_space_model([3, 5], t),
    "koszul-su3": lambda t=DEFAULT_TRUNCATION: contractible_model([3, 5], t),
    "equivariant-point-su2": equivariant_point_su2,
    "conjugation-gg": conjugation_gg,
}


def fixture(name: str, truncation: int = DEFAULT_TRUNCATION) -> ComplexSpec:
    if name not in FIXTURES:
        raise KeyError(f"unknown fixture {name!r}; known: {', '.join(sorted(FIXTURES))}")
    return FIXTURES[name](truncation)
