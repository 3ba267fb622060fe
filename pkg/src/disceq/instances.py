"""Instance files: JSON documents describing one computation each."""
from __future__ import annotations

import json
from dataclasses import dataclass
from importlib import resources

import jsonschema

from .errors import ParseError
from .etale.algebra import EtaleAlgebra
from .etale.orders import check_order
from .etale.splitting import make_splitting_data, splitting_data
from .oracle import CandidateStrategy
from .polyalg.mpoly import MPoly, parse_poly
from .rings import RingPresentation, base_field


def load_schema(name: str) -> dict:
    text = resources.files("disceq").joinpath("schemas", name).read_text(encoding="utf-8")
    return json.loads(text)


@dataclass
class Instance:
    data: dict
    ring: RingPresentation
    path: str | None = None

    @property
    def kind(self) -> str:
        return self.data["kind"]

    @property
    def name(self) -> str:
        return self.data.get("name", "")


def read_instance(path: str) -> Instance:
    with open(path, encoding="utf-8") as fh:
        try:
            data = json.load(fh)
        except json.JSONDecodeError as exc:
            raise ParseError(f"{path}: not valid JSON ({exc})") from exc
    inst = parse_instance(data)
    inst.path = path
    return inst


def _reject_floats(node, where="instance"):
    # exact values only: JSON Schema treats 5.0 as an integer, so check separately
    if isinstance(node, float):
        raise ParseError(f"{where}: floating-point value {node!r}; write integers or fraction texts")
    if isinstance(node, dict):
        for k, v in node.items():
            _reject_floats(v, f"{where}.{k}")
    elif isinstance(node, list):
        for i, v in enumerate(node):
            _reject_floats(v, f"{where}[{i}]")


def parse_instance(data: dict) -> Instance:
    _reject_floats(data)
    try:
        jsonschema.validate(data, load_schema("instance.schema.json"))
    except jsonschema.ValidationError as exc:
        raise ParseError(f"instance does not match the schema: {exc.message}") from exc
    ring = data.get("ring", {})
    A = RingPresentation(ring.get("names", []), ring.get("relations", []))
    return Instance(data, A)


# ---------------------------------------------------------------------------
# field decoders

def poly_over_K(A: RingPresentation, spec, var: str = "X"):
    """Coefficients (lowest first, as K elements) from a list of fraction texts or a polynomial text."""
    K = base_field(A)
    if isinstance(spec, list):
        return [K(str(c)) for c in spec]
    if var in A.var_names:
        raise ParseError(f"variable {var} clashes with a ring generator")
    f = parse_poly(spec, list(A.var_names) + [var])
    deg = f.degree_in(len(A.var_names))
    coeffs = []
    for k in range(deg + 1):
        part = {m[:-1]: c for m, c in f.terms.items() if m[-1] == k}
        coeffs.append(K(A.elem(MPoly(part, len(A.var_names)))))
    return coeffs


def coords(A: RingPresentation, vec):
    K = base_field(A)
    return [K(str(c)) for c in vec]


def strategy(block: dict) -> CandidateStrategy:
    v = block["variant"]
    if v == "exhaustive":
        return CandidateStrategy.exhaustive()
    if v == "bounded":
        return CandidateStrategy.bounded(block.get("bound", 1), block.get("mode", "conjugate"))
    return CandidateStrategy.user([tuple(str(c) for c in e) for e in block.get("elements", [])],
                                  block.get("complete", False))


def closure_AK(A: RingPresentation, block):
    gens, certs = [], []
    for item in block or []:
        gens.append(A.parse_frac(item["element"]))
        cert = item.get("certificate")
        certs.append([A.elem(str(c)) for c in cert] if cert is not None else None)
    return gens, certs


def algebra(A: RingPresentation, spec) -> EtaleAlgebra:
    return EtaleAlgebra(A, poly_over_K(A, spec))


def splitting(A: RingPresentation, block: dict, Omega: EtaleAlgebra | None = None):
    Omega = Omega or algebra(A, block["P"])
    if "Q" not in block:
        return Omega, splitting_data(Omega)
    Q = poly_over_K(A, block["Q"])
    roots = [coords(A, r) for r in block.get("roots", [])]
    closure = block.get("closure_AG")
    closure = [coords(A, g) for g in closure] if closure is not None else None
    return Omega, make_splitting_data(Omega, Q, roots, closure)


def order(A: RingPresentation, Omega: EtaleAlgebra, gens):
    return check_order(A, Omega, [Omega.elem(coords(A, g)) for g in gens])
