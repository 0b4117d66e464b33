"""The JSON problem document: parsing, serialization, model blocks.

Raw form::

    {"base": {"basis": [{"name": "1", "degree": 0}, ...], "unit": "1",
              "products": [{"left": "a", "right": "b", "result": [["1/2", "c"]]}]},
     "generators": [{"name": "y2", "degree": 2}],
     "differential": [{"on": "y4", "value": [{"coeff": "1", "base": "x5", "exponents": {}}]}],
     "max_degree": 20}

Model form replaces ``generators`` and ``differential`` (and ``base``) with
a ``model`` block; see :func:`_build_model`.
"""

from __future__ import annotations

import json
from fractions import Fraction
from typing import Any

from .differential import ComplexSpec
from .errors import ParseError, SpecError
from .graded import BaseAlgebraSpec, Element, GradedAlgebra, format_fraction, to_fraction
from . import models

RAW_KEYS = {"base", "generators", "differential"}
TOP_KEYS = RAW_KEYS | {"max_degree", "model"}


def _expect(cond, message):
    if not cond:
        raise ParseError(message)


def _coeff(value, where) -> Fraction:
    _expect(isinstance(value, (int, str)) and not isinstance(value, bool), f"{where}: coefficient must be an integer or a \"p/q\" string")
    try:
        return to_fraction(value)
    except SpecError as exc:
        raise ParseError(f"{where}: {exc}") from None


def _int(value, where) -> int:
    _expect(isinstance(value, int) and not isinstance(value, bool), f"{where}: expected an integer")
    return value


def _name(value, where) -> str:
    _expect(isinstance(value, str) and value, f"{where}: expected a symbol name")
    return value


def _parse_base(doc, where="base") -> BaseAlgebraSpec:
    _expect(isinstance(doc, dict), f"{where}: expected an object")
    _expect("basis" in doc and "unit" in doc, f"{where}: needs 'basis' and 'unit'")
    basis = []
    seen = set()
    for k, item in enumerate(doc["basis"]):
        w = f"{where}.basis[{k}]"
        _expect(isinstance(item, dict), f"{w}: expected an object")
        name = _name(item.get("name"), f"{w}.name")
        _expect(name not in seen, f"duplicate symbol {name!r}")
        seen.add(name)
        basis.append((name, _int(item.get("degree"), f"{w}.degree")))
    products = {}
    for k, item in enumerate(doc.get("products", [])):
        w = f"{where}.products[{k}]"
        _expect(isinstance(item, dict), f"{w}: expected an object")
        left = _name(item.get("left"), f"{w}.left")
        right = _name(item.get("right"), f"{w}.right")
        _expect((left, right) not in products, f"{w}: product {left}*{right} given twice")
        result = []
        for t, term in enumerate(item.get("result", [])):
            _expect(isinstance(term, list) and len(term) == 2, f"{w}.result[{t}]: expected [coeff, name]")
            result.append((_coeff(term[0], f"{w}.result[{t}]"), _name(term[1], f"{w}.result[{t}]")))
        products[left, right] = result
    return BaseAlgebraSpec(basis, _name(doc["unit"], f"{where}.unit"), products)


def _parse_generators(items, where="generators") -> list[tuple[str, int]]:
    _expect(isinstance(items, list), f"{where}: expected a list")
    out = []
    for k, item in enumerate(items):
        w = f"{where}[{k}]"
        _expect(isinstance(item, dict), f"{w}: expected an object")
        out.append((_name(item.get("name"), f"{w}.name"), _int(item.get("degree"), f"{w}.degree")))
    return out


def parse_expression(alg: GradedAlgebra, terms, where="value") -> Element:
    _expect(isinstance(terms, list), f"{where}: expected a list of terms")
    raw = []
    for k, term in enumerate(terms):
        w = f"{where}[{k}]"
        _expect(isinstance(term, dict), f"{w}: expected an object")
        coeff = _coeff(term.get("coeff", 1), f"{w}.coeff")
        base = term.get("base", alg.base.unit)
        _expect(base in alg.base.index, f"{w}: symbol {base!r} not found")
        exps = term.get("exponents", {})
        _expect(isinstance(exps, dict), f"{w}.exponents: expected an object")
        for g, e in exps.items():
            _expect(g in alg.gen_index, f"{w}: symbol {g!r} not found")
            _expect(isinstance(e, int) and not isinstance(e, bool) and e > 0, f"{w}.exponents.{g}: expected a positive integer")
        raw.append((coeff, base, exps))
    return alg.element(raw)


def _parse_differential(alg: GradedAlgebra, items, where="differential") -> dict[str, Element]:
    _expect(isinstance(items, list), f"{where}: expected a list")
    out = {}
    for k, item in enumerate(items):
        w = f"{where}[{k}]"
        _expect(isinstance(item, dict), f"{w}: expected an object")
        on = _name(item.get("on"), f"{w}.on")
        _expect(on in alg.gen_index or on in alg.base.index, f"{w}: symbol {on!r} not found")
        _expect(on not in out, f"{w}: d({on}) given twice")
        out[on] = parse_expression(alg, item.get("value", []), f"{w}.value")
    return out


def _check_duplicates(base: BaseAlgebraSpec, gens):
    seen = set(base.names)
    for name, _ in gens:
        _expect(name not in seen, f"duplicate symbol {name!r}")
        seen.add(name)


def _characteristic(alg: GradedAlgebra, items, where) -> models.CharacteristicData:
    _expect(isinstance(items, list), f"{where}: expected a list")
    pairs, names = [], []
    for k, item in enumerate(items):
        w = f"{where}[{k}]"
        _expect(isinstance(item, dict), f"{w}: expected an object")
        deg = _int(item.get("degree"), f"{w}.degree")
        pairs.append((deg, parse_expression(alg, item.get("value", []), f"{w}.value")))
        names.append(item.get("name"))
    if all(n is None for n in names):
        return models.CharacteristicData(pairs)
    _expect(all(isinstance(n, str) for n in names), f"{where}: give a name for every class or none")
    return models.CharacteristicData(pairs, names=names)


CONSTRUCTORS = {
    "ghv_bundle": models.ghv_bundle_model,
    "loop_bundle": models.loop_bundle_model,
    "formal_loop_bundle": models.formal_loop_bundle_model,
    "equivariant_loop_bundle": models.equivariant_loop_bundle_model,
}


def _build_model(block, max_degree: int) -> ComplexSpec:
    """Model blocks::

        {"name": "contractible" | "loop_space", "degrees": [3, 5]}
        {"name": "fixture", "fixture": "su3-so3"}
        {"name": "loop_bundle" | "formal_loop_bundle" | "ghv_bundle"
                 | "equivariant_loop_bundle",
         "base": {...}, "base_generators": [...], "base_differential": [...],
         "characteristic": [{"degree": 5, "name": "y4", "value": [...]}]}
    """
    _expect(isinstance(block, dict), "model: expected an object")
    name = block.get("name")
    if name in ("contractible", "loop_space"):
        degrees = block.get("degrees")
        _expect(isinstance(degrees, list), "model.degrees: expected a list of integers")
        degrees = [_int(d, "model.degrees") for d in degrees]
        ctor = models.contractible_model if name == "contractible" else models.loop_space_model
        return ctor(degrees, max_degree)
    if name == "fixture":
        fx = block.get("fixture")
        _expect(fx in models.FIXTURES, f"model: unknown fixture {fx!r}")
        return models.fixture(fx, max_degree)
    if name in CONSTRUCTORS:
        base = _parse_base(block.get("base"), "model.base")
        gens = _parse_generators(block.get("base_generators", []), "model.base_generators")
        _check_duplicates(base, gens)
        alg = GradedAlgebra(base, gens)
        diff = _parse_differential(alg, block.get("base_differential", []), "model.base_differential")
        base_spec = ComplexSpec(alg, diff, max_degree).validate()
        data = _characteristic(alg, block.get("characteristic", []), "model.characteristic")
        return CONSTRUCTORS[name](base_spec, data, max_degree)
    raise ParseError(f"unknown model name {name!r}")


def load_document(text: str) -> dict:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(exc.msg, exc.lineno, exc.colno) from None
    _expect(isinstance(doc, dict), "document must be a JSON object")
    return doc


def parse_problem(text: str, max_degree: int | None = None) -> ComplexSpec:
    """Parse and validate a problem document.

    ``max_degree`` overrides the document's own truncation. Raises
    ParseError for malformed input, SpecError or ValidationError when the
    described complex is not a valid CDGA.
    """
    doc = load_document(text)
    return spec_from_document(doc, max_degree)


def spec_from_document(doc: dict, max_degree: int | None = None) -> ComplexSpec:
    unknown = set(doc) - TOP_KEYS
    _expect(not unknown, f"unknown top-level key(s): {', '.join(sorted(unknown))}")
    if max_degree is None:
        _expect("max_degree" in doc, "missing 'max_degree'")
        max_degree = _int(doc["max_degree"], "max_degree")
    _expect(max_degree >= 1, "max_degree must be positive")
    if "model" in doc:
        _expect(not (RAW_KEYS & set(doc)), "a document gives either raw fields or a 'model' block, not both")
        return _build_model(doc["model"], max_degree)
    _expect("base" in doc, "missing 'base'")
    base = _parse_base(doc["base"])
    gens = _parse_generators(doc.get("generators", []))
    _check_duplicates(base, gens)
    alg = GradedAlgebra(base, gens)
    diff = _parse_differential(alg, doc.get("differential", []))
    return ComplexSpec(alg, diff, max_degree).validate()


def expression_to_json(a: Element) -> list[dict[str, Any]]:
    return [
        {"coeff": format_fraction(c), "base": base, "exponents": exps}
        for c, base, exps in a.terms()
    ]


def spec_to_document(spec: ComplexSpec) -> dict:
    base = spec.base
    products = [
        {"left": l, "right": r, "result": [[format_fraction(c), k] for k, c in val.items()]}
        for (l, r), val in base.products_by_name().items()
    ]
    return {
        "base": {
            "basis": [{"name": n, "degree": d} for n, d in zip(base.names, base.degrees)],
            "unit": base.unit,
            "products": products,
        },
        "generators": [{"name": g.name, "degree": g.degree} for g in spec.generators],
        "differential": [
            {"on": name, "value": expression_to_json(v)}
            for name, v in spec.differential.items()
            if v
        ],
        "max_degree": spec.max_degree,
    }


def dumps(obj) -> str:
    return json.dumps(obj, indent=2, sort_keys=True, ensure_ascii=False) + "\n"


def serialize(spec: ComplexSpec) -> str:
    return dumps(spec_to_document(spec))
