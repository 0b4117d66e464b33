"""Seeded random valid complexes for oracle comparisons.

Bases are monomial quotients of a small free graded-commutative algebra
(rescaled by random rationals), optionally plus acyclic square-zero pairs
``d e = mu f`` so that the base differential is not always zero. Each new
generator is sent to a random cocycle of the complex built so far, which
makes d^2 = 0 automatic.
"""

from __future__ import annotations

import random
from fractions import Fraction

from .differential import ComplexSpec
from .engine import _basis, _matrix
from .linalg import kernel_basis
from .graded import BaseAlgebraSpec, Element, GradedAlgebra


def _coeff(rng: random.Random) -> Fraction:
    num = rng.choice([1, 1, 2, 3, -1, -2, 5, -3])
    den = rng.choice([1, 1, 1, 2, 3])
    return Fraction(num, den)


def monomial_quotient(gen_degrees, monomials, names, scale=None):
    """Basis and product table of the quotient of the free graded-commutative
    algebra on ``gen_degrees`` spanned by ``monomials`` (an order ideal
    containing the unit first). Basis element k is ``scale[k]`` times
    monomial k.
    """
    n = len(gen_degrees)
    scale = scale or [Fraction(1)] * len(monomials)
    odd = [d % 2 for d in gen_degrees]
    where = {m: k for k, m in enumerate(monomials)}
    basis = [(names[k], sum(e * d for e, d in zip(m, gen_degrees))) for k, m in enumerate(monomials)]
    products = {}
    for a, ma in enumerate(monomials):
        for b, mb in enumerate(monomials):
            if a == 0 or b == 0:
                continue
            mc = tuple(x + y for x, y in zip(ma, mb))
            if mc not in where or any(odd[i] and ma[i] and mb[i] for i in range(n)):
                continue
            # odd generators of mb move left past larger-index odd generators of ma
            swaps = sum(ma[i] * mb[j] * odd[i] * odd[j] for i in range(n) for j in range(i))
            c = where[mc]
            products[names[a], names[b]] = {names[c]: (-1) ** swaps * scale[a] * scale[b] / scale[c]}
    return basis, products


def random_base(rng: random.Random, max_dim: int = 4) -> tuple[BaseAlgebraSpec, dict]:
    """A random base algebra and its differential as ``{name: {name: coeff}}``."""
    n_gens = rng.randint(0, 2)
    gdeg = [rng.randint(1, 5) for _ in range(n_gens)]
    pairs = rng.randint(0, 1) if max_dim >= 3 else 0
    room = max_dim - 2 * pairs

    chosen = [(0,) * n_gens]
    for _ in range(room * 3):
        if len(chosen) >= room:
            break
        parent = rng.choice(chosen)
        if not n_gens:
            break
        i = rng.randrange(n_gens)
        m = list(parent)
        m[i] += 1
        m = tuple(m)
        if m in chosen or (gdeg[i] % 2 and m[i] > 1):
            continue
        # order ideal: every one-step divisor must already be present
        if all(m[j] == 0 or tuple(m[k] - (k == j) for k in range(n_gens)) in chosen for j in range(n_gens)):
            chosen.append(m)

    names = ["1"] + [f"b{k}" for k in range(1, len(chosen))]
    scale = [Fraction(1)] + [_coeff(rng) for _ in chosen[1:]]
    basis, products = monomial_quotient(gdeg, chosen, names, scale)

    diff = {}
    for p in range(pairs):
        k = rng.randint(1, 5)
        e, f = f"e{p}", f"f{p}"
        basis += [(e, k), (f, k + 1)]
        diff[e] = {f: _coeff(rng)}
    return BaseAlgebraSpec(basis, "1", products), diff


def _cocycles(spec: ComplexSpec, n: int) -> list[Element]:
    basis = _basis(spec, n)
    return [
        Element(spec.algebra, {basis.entries[i]: c for i, c in enumerate(v) if c})
        for v in kernel_basis(_matrix(spec, n))
    ]


def random_spec(
    seed: int,
    max_generators: int = 4,
    max_generator_degree: int = 6,
    max_base_dim: int = 4,
    truncation: int = 10,
) -> ComplexSpec:
    rng = random.Random(seed)
    base, base_diff = random_base(rng, max_base_dim)
    alg = GradedAlgebra(base)
    diff = {
        name: alg.element((c, target, {}) for target, c in value.items())
        for name, value in base_diff.items()
    }
    spec = ComplexSpec(alg, diff, truncation).validate()
    for k in range(rng.randint(1, max_generators)):
        deg = rng.randint(1, max_generator_degree)
        target_deg = deg + 1
        probe = spec.with_max_degree(max(target_deg, 1))
        cocycles = _cocycles(probe, target_deg)
        value = None
        if cocycles and rng.random() < 0.8:
            value = sum((_coeff(rng) * z for z in rng.sample(cocycles, min(len(cocycles), 2))), probe.algebra.zero())
        new_alg = spec.algebra.extend([(f"g{k}", deg)])
        new_diff = {name: new_alg.embed(v) for name, v in spec.differential.items()}
        if value is not None:
            new_diff[f"g{k}"] = new_alg.embed(value)
        spec = ComplexSpec(new_alg, new_diff, truncation).validate()
    return spec
