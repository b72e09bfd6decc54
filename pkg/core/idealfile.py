"""
Formato de fichero de ideales.

    # comentario
    field: Fp 101
    vars: x y z t
    order: grevlex
    I = y^2*z - x^2*t, z^4 - x*t^3
    M = [[y^2, 0], [t, y^2]]
    M.target = 5 6
    M.source = 7 8

Los grados de una matriz sin líneas de twists se deducen de los grados de
sus entradas.
"""

from __future__ import annotations

import logging
import re
from dataclasses import dataclass, field
from pathlib import Path
from typing import Optional, Union

from core.errors import GradingError, ParameterError, ParseError, ShapeMismatchError
from core.homology import GradedMatrix
from core.ideals import Ideal
from core.polynomial import CoefficientField, MonomialOrder, Polynomial, RingContext

logger = logging.getLogger("main")

_NAME = r"[A-Za-z_][A-Za-z0-9_]*"
_ASSIGN_RE = re.compile(rf"^\s*({_NAME})(?:\.(source|target))?\s*=\s*(.*)$")
_HEADER_RE = re.compile(r"^\s*(field|vars|order)\s*:\s*(.*)$")


@dataclass
class IdealFile:
    ring: RingContext
    ideals: dict[str, Ideal] = field(default_factory=dict)
    matrices: dict[str, GradedMatrix] = field(default_factory=dict)

    def ideal(self, name: Optional[str] = None) -> Ideal:
        """Ideal por nombre; sin nombre, el primero del fichero."""
        if name is None:
            if not self.ideals:
                raise ParameterError("El fichero no define ningún ideal")
            return next(iter(self.ideals.values()))
        try:
            return self.ideals[name]
        except KeyError:
            raise ParameterError(f"Ideal desconocido: {name}") from None

    def matrix(self, name: str) -> GradedMatrix:
        try:
            return self.matrices[name]
        except KeyError:
            raise ParameterError(f"Matriz desconocida: {name}") from None

    def to_text(self) -> str:
        lines = [
            f"field: {self.ring.field}",
            f"vars: {' '.join(self.ring.variables)}",
            f"order: {self.ring.order}",
        ]
        for name, ideal in self.ideals.items():
            lines.append(f"{name} = {', '.join(g.to_text() for g in ideal.generators)}")
        for name, matrix in self.matrices.items():
            rows = ", ".join("[" + ", ".join(e.to_text() for e in row) + "]" for row in matrix.entries)
            lines.append(f"{name} = [{rows}]")
            lines.append(f"{name}.target = {' '.join(str(d) for d in matrix.target.twists)}")
            lines.append(f"{name}.source = {' '.join(str(d) for d in matrix.source.twists)}")
        return "\n".join(lines) + "\n"


# =============================================================================
# LECTURA
# =============================================================================


def _split_top(text: str, line: int, offset: int) -> list[tuple[str, int]]:
    """Divide por comas de nivel 0; devuelve (trozo, columna 0-based)."""
    parts, depth, start = [], 0, 0
    for i, ch in enumerate(text):
        if ch in "([":
            depth += 1
        elif ch in ")]":
            depth -= 1
            if depth < 0:
                raise ParseError(f"Cierre {ch!r} sin abrir", line, offset + i + 1)
        elif ch == "," and depth == 0:
            parts.append((text[start:i], start))
            start = i + 1
    if depth != 0:
        raise ParseError("Paréntesis sin cerrar", line, offset + len(text))
    parts.append((text[start:], start))
    return parts


def _parse_poly(ring: RingContext, text: str, line: int, column: int) -> Polynomial:
    stripped = text.strip()
    lead = len(text) - len(text.lstrip())
    try:
        return ring.parse(stripped, line)
    except ParseError as e:
        inner = (e.column or 1) - 1
        raise ParseError(e.message, line, column + lead + inner + 1) from None


def _parse_field(value: str, line: int) -> CoefficientField:
    parts = value.split()
    try:
        if parts == ["Q"]:
            return CoefficientField(0)
        if len(parts) == 2 and parts[0] == "Fp":
            return CoefficientField(int(parts[1]))
    except (ValueError, ParameterError) as e:
        raise ParseError(f"Cuerpo inválido: {value} ({e})", line, 1) from None
    raise ParseError(f"Cuerpo inválido: {value!r} (use 'Q' o 'Fp p')", line, 1)


def _parse_matrix(ring: RingContext, body: str, line: int, offset: int) -> list[list[Polynomial]]:
    text = body.strip()
    offset += len(body) - len(body.lstrip())
    if not (text.startswith("[") and text.endswith("]")):
        raise ParseError("Una matriz se escribe [[...], [...]]", line, offset + 1)
    rows = []
    for chunk, start in _split_top(text[1:-1], line, offset + 1):
        row_text = chunk.strip()
        col = offset + 1 + start + len(chunk) - len(chunk.lstrip())
        if not (row_text.startswith("[") and row_text.endswith("]")):
            raise ParseError("Cada fila va entre corchetes", line, col + 1)
        entries = _split_top(row_text[1:-1], line, col + 1)
        rows.append([_parse_poly(ring, e, line, col + 1 + s) for e, s in entries])
    if any(len(r) != len(rows[0]) for r in rows):
        raise ParseError("Filas de longitudes distintas", line, offset + 1)
    return rows


def infer_twists(entries: list[list[Polynomial]]) -> tuple[list[int], list[int]]:
    """
    Twists (target, source) con source[c] - target[r] = grado de la entrada.

    Cada componente conexa de entradas no nulas se ancla con un 0.

    Raises:
        GradingError: si no existe graduación compatible
    """
    nrows, ncols = len(entries), len(entries[0]) if entries else 0
    target: list[Optional[int]] = [None] * nrows
    source: list[Optional[int]] = [None] * ncols
    for start in range(nrows):
        if target[start] is not None:
            continue
        target[start] = 0
        stack = [("r", start)]
        while stack:
            kind, i = stack.pop()
            for j in range(ncols if kind == "r" else nrows):
                r, c = (i, j) if kind == "r" else (j, i)
                e = entries[r][c]
                if not e:
                    continue
                if not e.is_homogeneous():
                    raise GradingError(f"Entrada no homogénea en ({r}, {c})")
                if kind == "r":
                    value = target[r] + e.degree
                    if source[c] is None:
                        source[c] = value
                        stack.append(("c", c))
                    elif source[c] != value:
                        raise GradingError(f"Sin graduación compatible en ({r}, {c})")
                else:
                    value = source[c] - e.degree
                    if target[r] is None:
                        target[r] = value
                        stack.append(("r", r))
                    elif target[r] != value:
                        raise GradingError(f"Sin graduación compatible en ({r}, {c})")
    return [t or 0 for t in target], [s or 0 for s in source]


def parse_ideal_file(
    text: str,
    characteristic: Optional[int] = None,
    order: Optional[str] = None,
    default_characteristic: int = 0,
    default_order: str = "grevlex",
) -> IdealFile:
    """
    Lee un fichero de ideales.

    Args:
        characteristic: sustituye a la línea field
        order: sustituye a la línea order
        default_characteristic, default_order: si el fichero no los indica

    Raises:
        ParseError: con línea y columna
    """
    field_: Optional[CoefficientField] = None
    names: Optional[list[str]] = None
    order_text: Optional[str] = None
    ring: Optional[RingContext] = None
    ideals: dict[str, Ideal] = {}
    raw_matrices: dict[str, tuple[list[list[Polynomial]], int]] = {}
    twists: dict[str, dict[str, list[int]]] = {}

    def build_ring(line_no: int) -> RingContext:
        if names is None:
            raise ParseError("Falta la línea 'vars:' antes de los ideales", line_no, 1)
        try:
            fld = CoefficientField(characteristic) if characteristic is not None else (field_ or CoefficientField(default_characteristic))
            mo = MonomialOrder.parse(order or order_text or default_order)
            return RingContext(tuple(names), fld, mo)
        except ParameterError as e:
            raise ParseError(str(e), line_no, 1) from None

    for line_no, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].rstrip()
        if not line.strip():
            continue
        header = _HEADER_RE.match(line)
        if header:
            if ring is not None:
                raise ParseError(f"'{header.group(1)}:' después de los ideales", line_no, 1)
            key, value = header.group(1), header.group(2).strip()
            if key == "field":
                field_ = _parse_field(value, line_no)
            elif key == "vars":
                names = value.replace(",", " ").split()
                if not names:
                    raise ParseError("Lista de variables vacía", line_no, 1)
            else:
                order_text = value
            continue
        assign = _ASSIGN_RE.match(line)
        if not assign:
            raise ParseError("Se esperaba 'nombre = ...'", line_no, 1)
        if ring is None:
            ring = build_ring(line_no)
        name, attr, body = assign.group(1), assign.group(2), assign.group(3)
        offset = assign.start(3)
        if attr:
            try:
                twists.setdefault(name, {})[attr] = [int(d) for d in body.split()]
            except ValueError:
                raise ParseError(f"Twists inválidos para {name}.{attr}", line_no, offset + 1) from None
        elif body.strip().startswith("["):
            raw_matrices[name] = (_parse_matrix(ring, body, line_no, offset), line_no)
        else:
            if name in ideals:
                raise ParseError(f"Ideal {name} repetido", line_no, 1)
            gens = [_parse_poly(ring, chunk, line_no, offset + s) for chunk, s in _split_top(body, line_no, offset)]
            ideals[name] = Ideal(ring, gens, name)

    if ring is None:
        ring = build_ring(1)
    matrices = {}
    for name, (entries, line_no) in raw_matrices.items():
        given = twists.get(name, {})
        try:
            target, source = infer_twists(entries)
            target = given.get("target", target)
            source = given.get("source", source)
            matrices[name] = GradedMatrix(ring, entries, target, source)
        except (GradingError, ShapeMismatchError) as e:
            raise ParseError(f"Matriz {name}: {e}", line_no, 1) from None
    unknown = set(twists) - set(raw_matrices)
    if unknown:
        raise ParseError(f"Twists de matrices inexistentes: {sorted(unknown)}", None, None)
    logger.debug(f"Fichero de ideales: {len(ideals)} ideales, {len(matrices)} matrices")
    return IdealFile(ring, ideals, matrices)


def load_ideal_file(path: Union[str, Path], **options) -> IdealFile:
    return parse_ideal_file(Path(path).read_text(encoding="utf-8"), **options)


def bundle_text(ring: RingContext, ideals: dict[str, Ideal], matrices: Optional[dict[str, GradedMatrix]] = None) -> str:
    """Texto de fichero de ideales para un conjunto de ideales con nombre del mismo anillo."""
    return IdealFile(ring, dict(ideals), dict(matrices or {})).to_text()
