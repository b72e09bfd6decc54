"""
Verificación de complejos graduados explícitos: composición nula, rangos y
criterio de exactitud de Buchsbaum-Eisenbud.
"""

from __future__ import annotations

import json
import logging
from dataclasses import asdict, dataclass, field
from typing import Optional, Sequence, Union

from sympy import gcd as sympy_gcd

from core.errors import ParameterError, ShapeMismatchError
from core.hilbert import codimension
from core.homology import GradedMatrix
from core.ideals import MinorTable, minors_ideal
from core.polynomial import Coefficient, Polynomial

logger = logging.getLogger("homology")

Witness = Union[Polynomial, tuple[tuple[int, ...], tuple[int, ...]]]


class GradedComplex:
    """
    F_0 <- F_1 <- ... <- F_s con maps[k-1] = φ_k: F_k -> F_{k-1}.

    Raises:
        ShapeMismatchError: si el origen de φ_k no es el destino de φ_{k+1}
    """

    def __init__(self, maps: Sequence[GradedMatrix]):
        if not maps:
            raise ParameterError("Un complejo necesita al menos un mapa")
        self.maps = list(maps)
        self.ring = self.maps[0].ring
        for k, (a, b) in enumerate(zip(self.maps, self.maps[1:]), start=1):
            if a.source != b.target:
                raise ShapeMismatchError(
                    f"φ_{k} tiene origen {a.source.twists} y φ_{k + 1} destino {b.target.twists}"
                )

    @property
    def length(self) -> int:
        return len(self.maps)

    def rank_of_module(self, k: int) -> int:
        return self.maps[0].nrows if k == 0 else self.maps[k - 1].ncols

    def twists(self) -> list[tuple[int, ...]]:
        return [self.maps[0].target.twists] + [m.source.twists for m in self.maps]


def check_composition_zero(complex_: GradedComplex) -> bool:
    """True si todas las composiciones φ_k ∘ φ_{k+1} son nulas."""
    for k, (a, b) in enumerate(zip(complex_.maps, complex_.maps[1:]), start=1):
        if not a.compose(b).is_zero():
            logger.info(f"φ_{k} ∘ φ_{k + 1} no es cero")
            return False
    return True


# =============================================================================
# RANGOS
# =============================================================================


def rank_certificate(matrix: GradedMatrix) -> tuple[int, Optional[tuple[tuple[int, ...], tuple[int, ...]]]]:
    """
    Rango sobre el cuerpo de fracciones por búsqueda de menores.

    Tamaños ascendentes y subconjuntos en orden lexicográfico; en cada tamaño
    se para en el primer menor no nulo.

    Returns:
        (rango, (filas, columnas) de un menor no nulo de ese tamaño o None)
    """
    table = MinorTable(matrix.entries, matrix.ring)
    rank, witness = 0, None
    for size in range(1, min(matrix.nrows, matrix.ncols) + 1):
        found = next(((rs, cs) for rs, cs in table.subsets(size) if table.minor(rs, cs)), None)
        if found is None:
            break
        rank, witness = size, found
    return rank, witness


def matrix_rank(matrix: GradedMatrix) -> int:
    return rank_certificate(matrix)[0]


def evaluated_rank(matrix: GradedMatrix, point: Sequence[Coefficient]) -> int:
    """Rango de la matriz evaluada en un punto del cuerpo (cota inferior del rango)."""
    field_ = matrix.ring.field
    rows = [[e.evaluate(point) for e in row] for row in matrix.entries]
    rank, col = 0, 0
    ncols = matrix.ncols
    while rank < len(rows) and col < ncols:
        pivot = next((i for i in range(rank, len(rows)) if rows[i][col]), None)
        if pivot is None:
            col += 1
            continue
        rows[rank], rows[pivot] = rows[pivot], rows[rank]
        inv = field_.inverse(rows[rank][col])
        for i in range(rank + 1, len(rows)):
            factor = field_.mul(rows[i][col], inv)
            if factor:
                rows[i] = [field_.sub(a, field_.mul(factor, b)) for a, b in zip(rows[i], rows[rank])]
        rank += 1
        col += 1
    return rank


# =============================================================================
# BUCHSBAUM-EISENBUD
# =============================================================================


@dataclass
class BEPosition:
    """Comprobaciones del criterio en la posición k."""

    k: int
    rank: int
    next_rank: int
    module_rank: int
    rank_ok: bool
    codimension: Optional[int]
    required: int
    codim_ok: bool
    method: str
    minor_witness: Optional[list] = None


@dataclass
class BEReport:
    positions: list[BEPosition] = field(default_factory=list)

    @property
    def verdict(self) -> bool:
        return all(p.rank_ok and p.codim_ok for p in self.positions)

    @property
    def ranks(self) -> list[int]:
        return [p.rank for p in self.positions]

    def to_dict(self) -> dict:
        return {"verdict": self.verdict, "positions": [asdict(p) for p in self.positions]}

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2, sort_keys=True)

    def to_text(self) -> str:
        lines = []
        for p in self.positions:
            codim = "inf" if p.codimension is None and p.method == "rank0" else p.codimension
            if p.method == "gcd":
                codim = ">=2"
            lines.append(
                f"k={p.k}: {p.rank} + {p.next_rank} = {p.module_rank} "
                f"[{'ok' if p.rank_ok else 'FALLA'}]; "
                f"codim I_{p.rank} = {codim} >= {p.required} "
                f"[{'ok' if p.codim_ok else 'FALLA'}] ({p.method})"
            )
        lines.append(f"veredicto: {'exacto' if self.verdict else 'no verificado'}")
        return "\n".join(lines)


def _gcd_certifies(table_ideal, witnesses: Sequence[Witness], table: MinorTable, size: int) -> bool:
    """Dos elementos del ideal de menores sin factor común ⇒ codim >= 2."""
    polys = []
    for w in witnesses[:2]:
        if isinstance(w, Polynomial):
            if not table_ideal().contains(w):
                return False
            polys.append(w)
        else:
            rs, cs = w
            if len(rs) != size or len(cs) != size:
                return False
            polys.append(table.minor(tuple(rs), tuple(cs)))
    if len(polys) < 2 or any(p.is_zero() for p in polys):
        return False
    ring = polys[0].ring
    kwargs = {"modulus": ring.characteristic} if ring.characteristic else {}
    common = sympy_gcd(polys[0].to_sympy(), polys[1].to_sympy(), **kwargs)
    return common.is_number


def buchsbaum_eisenbud(
    complex_: GradedComplex,
    witnesses: Optional[dict[int, Sequence[Witness]]] = None,
) -> BEReport:
    """
    Criterio de exactitud: r_k + r_{k+1} = rango F_k y codim I_{r_k}(φ_k) >= k.

    Args:
        witnesses: por posición, dos menores (o elementos del ideal de
            menores) cuyo mcd unidad certifica codimensión >= 2
    """
    witnesses = witnesses or {}
    maps = complex_.maps
    ranks = [rank_certificate(m) for m in maps]
    report = BEReport()
    for k in range(1, len(maps) + 1):
        phi = maps[k - 1]
        r_k, minor_witness = ranks[k - 1]
        r_next = ranks[k][0] if k < len(maps) else 0
        module_rank = phi.ncols
        rank_ok = r_k + r_next == module_rank
        table = MinorTable(phi.entries, phi.ring)
        if r_k == 0:
            position = BEPosition(k, r_k, r_next, module_rank, rank_ok, None, k, True, "rank0")
        else:
            cached = {}

            def ideal_of_minors():
                if "ideal" not in cached:
                    cached["ideal"] = minors_ideal(phi.entries, r_k, phi.ring)
                return cached["ideal"]

            if k <= 2 and k in witnesses and _gcd_certifies(ideal_of_minors, witnesses[k], table, r_k):
                position = BEPosition(k, r_k, r_next, module_rank, rank_ok, None, k, True, "gcd")
            else:
                codim = codimension(ideal_of_minors())
                position = BEPosition(k, r_k, r_next, module_rank, rank_ok, codim, k, codim >= k, "hilbert")
        if minor_witness is not None:
            position.minor_witness = [list(minor_witness[0]), list(minor_witness[1])]
        logger.debug(f"BE posición {k}: rango {r_k}, {position.method}")
        report.positions.append(position)
    return report
