"""Algebra file format: parsing with positions, canonical emission, reduction mod p.

A file is one JSON object::

    {"field": "Q", "dim": 3, "basis": ["x", "y", "z"],
     "products": {"x*y": {"y": "1", "z": "1"}, "x*z": {"z": "1"}}}

Canonical emission sorts products by (i, j) and coefficients by basis index,
drops zero entries and writes reduced fractions with the sign on the
numerator, so parse -> emit is a fixed point.
"""

from __future__ import annotations

import json
from pathlib import Path
from typing import Any, Optional, Union

from pydantic import ValidationError

from ..algebra import LeibnizAlgebra, transpose_product
from ..errors import BadParamsError, ParseError
from ..linalg import RATIONALS, FieldSpec
from ..schemas.algebra import AlgebraFileModel, PrimeFieldModel
from ..utils.logging import get_logger

logger = get_logger(__name__)


def _position(text: str, needle: str) -> tuple[Optional[int], Optional[int]]:
    """1-based (line, column) of the first quoted occurrence of ``needle``."""
    offset = text.find(json.dumps(needle, ensure_ascii=False))
    if offset < 0:
        return None, None
    line = text.count("\n", 0, offset) + 1
    column = offset - (text.rfind("\n", 0, offset) + 1) + 1
    return line, column


def _fail(text: str, message: str, needle: Optional[str] = None) -> ParseError:
    line, column = _position(text, needle) if needle is not None else (None, None)
    return ParseError(message, line=line, column=column)


def _field_of(model: AlgebraFileModel) -> FieldSpec:
    if model.field == "Q":
        return RATIONALS
    return FieldSpec.prime(model.field.GF)


def model_to_algebra(
    model: AlgebraFileModel,
    *,
    text: str = "",
    name: str = "",
    right_leibniz: bool = False,
    checked: bool = True,
) -> LeibnizAlgebra:
    """Build the algebra described by a validated file model."""
    field = _field_of(model)
    labels = list(model.basis)
    if model.dim != len(labels):
        raise _fail(text, f"dim is {model.dim} but {len(labels)} basis labels are given", "dim")
    for label in labels:
        if not label or "*" in label or label != label.strip():
            raise _fail(text, f"invalid basis label {label!r}", label)
    if len(set(labels)) != len(labels):
        raise _fail(text, "basis labels must be distinct", "basis")
    index = {lab: k for k, lab in enumerate(labels)}
    n = len(labels)
    sc: list[list[list[Any]]] = [[[0] * n for _ in range(n)] for _ in range(n)]
    for key, terms in model.products.items():
        left, sep, right = key.partition("*")
        if not sep:
            raise _fail(text, f"product key {key!r} is not of the form 'a*b'", key)
        for lab in (left.strip(), right.strip()):
            if lab not in index:
                raise _fail(text, f"undeclared basis label {lab!r} in {key!r}", key)
        i, j = index[left.strip()], index[right.strip()]
        for lab, raw in terms.items():
            if lab not in index:
                raise _fail(text, f"undeclared basis label {lab!r} in product {key!r}", lab)
            try:
                sc[i][j][index[lab]] = field.parse(str(raw))
            except ParseError as exc:
                needle = raw if isinstance(raw, str) else lab
                raise _fail(text, exc.message, needle) from None
    if right_leibniz:
        raw_alg = LeibnizAlgebra.from_structure_constants(field, labels, sc, checked=False, name=name)
        return transpose_product(raw_alg, checked=checked)
    return LeibnizAlgebra.from_structure_constants(field, labels, sc, checked=checked, name=name)


def parse_algebra(
    text: str, *, name: str = "", right_leibniz: bool = False, checked: bool = True
) -> LeibnizAlgebra:
    """Parse file text; errors carry the line and column of the offending token."""
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"invalid JSON: {exc.msg}", line=exc.lineno, column=exc.colno) from None
    try:
        model = AlgebraFileModel.model_validate(data)
    except ValidationError as exc:
        first = exc.errors()[0]
        loc = [str(part) for part in first["loc"]]
        needle = next((part for part in reversed(loc) if not part.isdigit()), None)
        message = f"{'.'.join(loc) or 'file'}: {first['msg']}"
        raise _fail(text, message, needle) from None
    return model_to_algebra(model, text=text, name=name, right_leibniz=right_leibniz, checked=checked)


def load_algebra(
    path: Union[str, Path], *, right_leibniz: bool = False, checked: bool = True
) -> LeibnizAlgebra:
    path = Path(path)
    try:
        text = path.read_text(encoding="utf-8")
    except OSError as exc:
        raise BadParamsError(f"cannot read {path}: {exc.strerror}", path=str(path)) from None
    logger.debug(f"parsing algebra file {path}")
    return parse_algebra(text, name=path.stem, right_leibniz=right_leibniz, checked=checked)


def algebra_to_model(alg: LeibnizAlgebra) -> AlgebraFileModel:
    f = alg.field
    products: dict[str, dict[str, str]] = {}
    for i, a in enumerate(alg.labels):
        for j, b in enumerate(alg.labels):
            terms = {
                alg.labels[k]: f.format(c) for k, c in enumerate(alg.sc[i][j]) if c != 0
            }
            if terms:
                products[f"{a}*{b}"] = terms
    field: Union[str, PrimeFieldModel] = (
        "Q" if f.is_rational else PrimeFieldModel(GF=f.characteristic)
    )
    return AlgebraFileModel(field=field, dim=alg.dim, basis=list(alg.labels), products=products)


def emit_algebra(alg: LeibnizAlgebra) -> str:
    """Canonical text of ``alg``; byte-identical for equal algebras."""
    payload = algebra_to_model(alg).model_dump(mode="json")
    return json.dumps(payload, indent=2, ensure_ascii=False) + "\n"


def reduce_mod(alg: LeibnizAlgebra, p: int, *, checked: bool = True) -> LeibnizAlgebra:
    """``--mod p``: the rational table read over GF(p)."""
    return alg.reduced_mod(p, checked=checked)
