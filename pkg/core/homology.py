"""
Álgebra homológica graduada: sicigias, resoluciones libres minimales,
tablas de Betti, regularidad, profundidad, Ext, torsión, zócalo y
dimensiones de cohomología local por dualidad.

Convención de twists: R[-d] es un generador de grado d; ω_R = R(-nvars).
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from typing import Callable, Optional, Sequence, Union

from core.errors import GradingError, ParameterError, RegcheckError, ShapeMismatchError
from core.groebner import (
    ModuleOrder,
    Vector,
    _axpy,
    _Basis,
    _inverse,
    _reduced,
    _run_buchberger,
    minimal_vector_subset,
    vector_degree,
)
from core.hilbert import HilbertSeries, series_of_leads
from core.ideals import Ideal
from core.polynomial import MonomialOrder, Polynomial, RingContext

logger = logging.getLogger("homology")

ProgressCallback = Callable[[int, int], None]


# =============================================================================
# MÓDULOS LIBRES Y MATRICES GRADUADAS
# =============================================================================


@dataclass(frozen=True)
class GradedFreeModule:
    """⊕ R[-d] para d en twists."""

    twists: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "twists", tuple(int(d) for d in self.twists))

    @property
    def rank(self) -> int:
        return len(self.twists)

    def dual(self, twist: int) -> "GradedFreeModule":
        """Hom(F, R(twist)): R[-d] pasa a R[-(-twist - d)]."""
        return GradedFreeModule(tuple(-twist - d for d in self.twists))

    def __str__(self) -> str:
        if not self.twists:
            return "0"
        counts: dict[int, int] = {}
        for d in self.twists:
            counts[d] = counts.get(d, 0) + 1
        parts = []
        for d in sorted(counts, reverse=True):
            power = f"^{counts[d]}" if counts[d] > 1 else ""
            parts.append(f"R[{-d}]{power}")
        return " ⊕ ".join(parts)


class GradedMatrix:
    """
    Matriz homogénea F <- G entre módulos libres graduados.

    La entrada (r, c) es cero u homogénea de grado source[c] - target[r].
    """

    def __init__(
        self,
        ring: RingContext,
        entries: Sequence[Sequence[Union[Polynomial, str, int]]],
        target: Sequence[int],
        source: Sequence[int],
        check: bool = True,
    ):
        self.ring = ring
        self.target = GradedFreeModule(tuple(target))
        self.source = GradedFreeModule(tuple(source))
        rows = []
        for row in entries:
            rows.append([_coerce(ring, e) for e in row])
        if len(rows) != self.target.rank:
            raise ShapeMismatchError(f"La matriz tiene {len(rows)} filas y el destino rango {self.target.rank}")
        for row in rows:
            if len(row) != self.source.rank:
                raise ShapeMismatchError(f"Fila de longitud {len(row)}; el origen tiene rango {self.source.rank}")
        self.entries: list[list[Polynomial]] = rows
        if check:
            self.check_grading()

    # -------------------------------------------------------------------------
    # Construcción
    # -------------------------------------------------------------------------

    @classmethod
    def from_columns(
        cls,
        ring: RingContext,
        columns: Sequence[Vector],
        target: Sequence[int],
        source: Sequence[int],
        check: bool = False,
    ) -> "GradedMatrix":
        nrows = len(target)
        buckets = [[{} for _ in columns] for _ in range(nrows)]
        for c, col in enumerate(columns):
            for (r, e), v in col.items():
                buckets[r][c][e] = v
        entries = [[Polynomial(ring, b, normalized=True) for b in row] for row in buckets]
        return cls(ring, entries, target, source, check=check)

    @classmethod
    def zero_map(cls, ring: RingContext, target: Sequence[int]) -> "GradedMatrix":
        """Mapa 0 -> F: sin columnas, con los twists de F como destino."""
        return cls(ring, [[] for _ in target], target, (), check=False)

    @classmethod
    def identity(cls, ring: RingContext, twists: Sequence[int]) -> "GradedMatrix":
        n = len(twists)
        entries = [[ring.one() if r == c else ring.zero() for c in range(n)] for r in range(n)]
        return cls(ring, entries, twists, twists, check=False)

    @classmethod
    def row(cls, ring: RingContext, generators: Sequence[Polynomial], target_twist: int = 0) -> "GradedMatrix":
        """Matriz 1×g de un sistema de generadores homogéneos."""
        for g in generators:
            if not g.is_homogeneous():
                raise GradingError(f"Generador no homogéneo: {g}")
        source = [g.degree + target_twist for g in generators]
        return cls(ring, [list(generators)], [target_twist], source, check=False)

    # -------------------------------------------------------------------------
    # Consultas
    # -------------------------------------------------------------------------

    @property
    def nrows(self) -> int:
        return self.target.rank

    @property
    def ncols(self) -> int:
        return self.source.rank

    def check_grading(self):
        """
        Raises:
            GradingError: si alguna entrada no tiene el grado que fijan los twists
        """
        for r, row in enumerate(self.entries):
            for c, entry in enumerate(row):
                if entry.is_zero():
                    continue
                expected = self.source.twists[c] - self.target.twists[r]
                if not entry.is_homogeneous() or entry.degree != expected:
                    raise GradingError(
                        f"Entrada ({r},{c}) = {entry} no es homogénea de grado {expected}"
                    )

    def columns(self) -> list[Vector]:
        cols: list[Vector] = [{} for _ in range(self.ncols)]
        for r, row in enumerate(self.entries):
            for c, entry in enumerate(row):
                for e, v in entry.term_dict.items():
                    cols[c][(r, e)] = v
        return cols

    def is_zero(self) -> bool:
        return all(e.is_zero() for row in self.entries for e in row)

    def has_unit_entry(self) -> bool:
        return any(e and e.is_constant() for row in self.entries for e in row)

    def compose(self, other: "GradedMatrix") -> "GradedMatrix":
        """self ∘ other, con self: F <- G y other: G <- H."""
        if self.source != other.target:
            raise ShapeMismatchError(
                f"No se puede componer: origen {self.source.twists} y destino {other.target.twists}"
            )
        zero = self.ring.zero()
        entries = []
        for r in range(self.nrows):
            row = []
            for c in range(other.ncols):
                acc = zero
                for k in range(self.ncols):
                    a, b = self.entries[r][k], other.entries[k][c]
                    if a and b:
                        acc = acc + a * b
                row.append(acc)
            entries.append(row)
        return GradedMatrix(self.ring, entries, self.target.twists, other.source.twists, check=False)

    def dual(self, twist: int) -> "GradedMatrix":
        """Traspuesta como mapa Hom(G, R(twist)) <- Hom(F, R(twist))."""
        entries = [[self.entries[r][c] for r in range(self.nrows)] for c in range(self.ncols)]
        return GradedMatrix(
            self.ring, entries, self.source.dual(twist).twists, self.target.dual(twist).twists, check=False
        )

    def concat(self, other: "GradedMatrix") -> "GradedMatrix":
        """[self | other] con el mismo destino."""
        if self.target != other.target:
            raise ShapeMismatchError("Destinos distintos al concatenar")
        entries = [a + b for a, b in zip(self.entries, other.entries)]
        return GradedMatrix(
            self.ring, entries, self.target.twists, self.source.twists + other.source.twists, check=False
        )

    def restrict_rows(self, count: int) -> "GradedMatrix":
        return GradedMatrix(
            self.ring, self.entries[:count], self.target.twists[:count], self.source.twists, check=False
        )

    def to_dict(self) -> dict:
        return {
            "target": list(self.target.twists),
            "source": list(self.source.twists),
            "entries": [[str(e) for e in row] for row in self.entries],
        }

    def __eq__(self, other) -> bool:
        if not isinstance(other, GradedMatrix):
            return NotImplemented
        return (
            self.target == other.target
            and self.source == other.source
            and self.entries == other.entries
        )

    def __str__(self) -> str:
        return "\n".join("[" + ", ".join(str(e) for e in row) + "]" for row in self.entries)


def _coerce(ring: RingContext, value) -> Polynomial:
    if isinstance(value, Polynomial):
        if value.ring != ring:
            raise RegcheckError(f"Entrada de otro anillo: {value}")
        return value
    if isinstance(value, str):
        return ring.parse(value)
    return ring.constant(value)


def _graded_order(twists: Sequence[int]) -> ModuleOrder:
    """Orden TOP graduado por twists sobre grevlex."""
    return ModuleOrder(MonomialOrder.grevlex(), "top", tuple(twists))


def _submodule_gb(ring: RingContext, columns: Sequence[Vector], twists: Sequence[int]) -> list[Vector]:
    order = _graded_order(twists)
    basis = _run_buchberger([c for c in columns if c], order, ring.characteristic, True)
    return _reduced(basis)


# =============================================================================
# SICIGIAS
# =============================================================================


def syzygies(matrix: GradedMatrix) -> GradedMatrix:
    """
    Núcleo de la matriz, con generadores minimales.

    Se calcula una base de Gröbner de las columnas (m_c ; e_c) con un orden
    posición-sobre-término que favorece la parte de F; los elementos con
    líder en la parte e dan el núcleo.
    """
    ring = matrix.ring
    r, s = matrix.nrows, matrix.ncols
    if s == 0:
        return GradedMatrix.zero_map(ring, matrix.source.twists)
    src = matrix.source.twists
    aug = []
    for c, col in enumerate(matrix.columns()):
        v = dict(col)
        v[(r + c, (0,) * ring.nvars)] = 1
        aug.append(v)
    order = ModuleOrder(MonomialOrder.grevlex(), "pot", matrix.target.twists + src)
    basis = _run_buchberger(aug, order, ring.characteristic, True)
    kernel = []
    for v, (pos, _) in zip(basis.vectors, basis.leads):
        if pos >= r:
            kernel.append({(p - r, e): c for (p, e), c in v.items()})
    return _minimal_columns(ring, kernel, src)


def _minimal_columns(ring: RingContext, columns: list[Vector], twists: Sequence[int]) -> GradedMatrix:
    """Subconjunto minimal de columnas homogéneas, ordenado por grado."""
    columns = [c for c in columns if c]
    if not columns:
        return GradedMatrix.zero_map(ring, twists)
    keep = minimal_vector_subset(columns, _graded_order(twists), ring.characteristic, twists)
    chosen = [columns[i] for i in keep]
    degrees = [vector_degree(c, twists) for c in chosen]
    ordered = sorted(range(len(chosen)), key=lambda i: degrees[i])
    return GradedMatrix.from_columns(
        ring, [chosen[i] for i in ordered], twists, [degrees[i] for i in ordered]
    )


# =============================================================================
# MÓDULOS PRESENTADOS
# =============================================================================


@dataclass
class PresentedModule:
    """Coker(relations): generadores con twists módulo las columnas de relaciones."""

    ring: RingContext
    twists: tuple[int, ...]
    relations: GradedMatrix

    def __post_init__(self):
        self.twists = tuple(self.twists)
        if self.relations.target.twists != self.twists:
            raise ShapeMismatchError("Los twists de los generadores no coinciden con el destino de las relaciones")

    @classmethod
    def from_ideal(cls, ideal: Ideal) -> "PresentedModule":
        """R/I."""
        if not ideal.is_homogeneous():
            raise GradingError(f"{ideal.label()} no es homogéneo")
        return cls(ideal.ring, (0,), GradedMatrix.row(ideal.ring, ideal.generators))

    @classmethod
    def free(cls, ring: RingContext, twists: Sequence[int]) -> "PresentedModule":
        return cls(ring, tuple(twists), GradedMatrix(ring, [[] for _ in twists], twists, (), check=False))

    @property
    def rank(self) -> int:
        return len(self.twists)

    def relation_gb(self) -> list[Vector]:
        return _submodule_gb(self.ring, self.relations.columns(), self.twists)

    def hilbert_series(self) -> HilbertSeries:
        if not self.twists:
            return HilbertSeries((), self.ring.nvars)
        order = _graded_order(self.twists)
        leads = [max(v, key=order.key) for v in self.relation_gb()]
        return series_of_leads(self.ring.nvars, self.twists, leads)

    def hilbert_function(self, d: int) -> int:
        return self.hilbert_series().coefficient(d)

    def is_zero(self) -> bool:
        return self.hilbert_series().is_zero()

    def regularity(self) -> Optional[int]:
        return regularity(self)

    def total_length(self) -> int:
        """dim_k M; requiere longitud finita."""
        if self.is_zero():
            return 0
        series, _ = self.hilbert_series().reduced()
        if series.nvars != 0:
            raise RegcheckError("El módulo no es de longitud finita")
        return sum(series.numerator)

    def pruned(self) -> "PresentedModule":
        """Presentación mínima: elimina generadores con relación unidad y relaciones redundantes."""
        ring = self.ring
        p = ring.characteristic
        twists = list(self.twists)
        columns = [c for c in self.relations.columns() if c]
        one = (0,) * ring.nvars
        while True:
            hit = None
            for c, col in enumerate(columns):
                for (r, e), u in col.items():
                    if e == one:
                        hit = (r, c, u)
                        break
                if hit:
                    break
            if hit is None:
                break
            r, c, u = hit
            pivot = columns[c]
            inv = _inverse(u, p)
            rest = []
            for k, col in enumerate(columns):
                if k == c:
                    continue
                entry = {e: v for (row, e), v in col.items() if row == r}
                col = dict(col)
                for e, v in entry.items():
                    coef = v * inv % p if p else v * inv
                    _axpy(col, pivot, e, coef, p)
                rest.append(_drop_row(col, r))
            columns = [col for col in rest if col]
            del twists[r]
        if not columns:
            return PresentedModule.free(ring, twists)
        relations = _minimal_columns(ring, columns, twists)
        return PresentedModule(ring, tuple(twists), relations)

    def __str__(self) -> str:
        return f"coker({GradedFreeModule(self.twists)} <- {self.relations.source})"


def _drop_row(col: Vector, r: int) -> Vector:
    """Quita la fila r (que debe ser cero) y renumera las siguientes."""
    return {(row - 1 if row > r else row, e): v for (row, e), v in col.items() if row != r}


# =============================================================================
# RESOLUCIONES
# =============================================================================


@dataclass
class BettiTable:
    """Multiplicidades (índice homológico, grado interno)."""

    entries: dict[tuple[int, int], int] = field(default_factory=dict)

    @classmethod
    def from_modules(cls, modules: Sequence[GradedFreeModule]) -> "BettiTable":
        entries: dict[tuple[int, int], int] = {}
        for i, module in enumerate(modules):
            for d in module.twists:
                entries[(i, d)] = entries.get((i, d), 0) + 1
        return cls(entries)

    @property
    def regularity(self) -> Optional[int]:
        """max(d - i); None para el módulo cero."""
        if not self.entries:
            return None
        return max(d - i for i, d in self.entries)

    @property
    def projective_dimension(self) -> int:
        return max((i for i, _ in self.entries), default=-1)

    def twists(self, i: int) -> list[int]:
        out = []
        for (j, d), count in sorted(self.entries.items()):
            if j == i:
                out.extend([d] * count)
        return out

    def rows(self) -> list[str]:
        """Filas "j: {grado: multiplicidad}" en orden ascendente."""
        out = []
        for i in range(self.projective_dimension + 1):
            degrees = {d: c for (j, d), c in sorted(self.entries.items()) if j == i}
            body = ", ".join(f"{d}: {c}" for d, c in degrees.items())
            out.append(f"{i}: {{{body}}}")
        return out

    def to_dict(self) -> dict:
        return {
            "rows": {
                str(i): {str(d): c for (j, d), c in sorted(self.entries.items()) if j == i}
                for i in range(self.projective_dimension + 1)
            },
            "regularity": self.regularity,
            "projective_dimension": self.projective_dimension,
        }

    def __str__(self) -> str:
        return "\n".join(self.rows())


@dataclass
class FreeResolution:
    """F_0 <- F_1 <- ... <- F_s con maps[k-1] = d_k: F_k -> F_{k-1}."""

    ring: RingContext
    modules: list[GradedFreeModule]
    maps: list[GradedMatrix]
    minimal: bool = False

    @property
    def length(self) -> int:
        return len(self.maps)

    def betti(self) -> BettiTable:
        return BettiTable.from_modules(self.modules)

    def regularity(self) -> Optional[int]:
        return self.betti().regularity

    def twists(self, k: int) -> tuple[int, ...]:
        return self.modules[k].twists if k < len(self.modules) else ()

    def is_complex(self) -> bool:
        """Composiciones consecutivas nulas."""
        return all(a.compose(b).is_zero() for a, b in zip(self.maps, self.maps[1:]))

    def has_unit_entries(self) -> bool:
        return any(m.has_unit_entry() for m in self.maps)


def _sort_for_frame(vectors: list[Vector], leads: list) -> tuple[list[Vector], list]:
    """Ordena por (posición, exponentes lex decrecientes) para que el marco termine."""
    order = sorted(range(len(vectors)), key=lambda i: (leads[i][0], tuple(-e for e in leads[i][1])))
    return [vectors[i] for i in order], [leads[i] for i in order]


def _schreyer_frame(
    ring: RingContext,
    twists0: Sequence[int],
    relations: Sequence[Vector],
    progress: Optional[ProgressCallback] = None,
) -> tuple[list[list[int]], list[list[Vector]]]:
    """
    Resolución (no minimal) por el teorema de Schreyer.

    Returns:
        (twists de F_0..F_s, columnas de d_1..d_s)
    """
    p = ring.characteristic
    order = _graded_order(twists0)
    level = _reduced(_run_buchberger([r for r in relations if r], order, p, True))
    leads = [max(v, key=order.key) for v in level]
    level, leads = _sort_for_frame(level, leads)
    all_twists = [list(twists0)]
    all_maps: list[list[Vector]] = []
    prev_twists = list(twists0)
    k = 1
    while level:
        twists = [vector_degree(v, prev_twists) for v in level]
        all_twists.append(twists)
        all_maps.append(level)
        if progress:
            progress(k, len(level))
        logger.debug(f"Nivel {k} del marco de Schreyer: {len(level)} generadores")
        basis = _Basis(order, p)
        for v in level:
            basis.append(v)
        next_order = ModuleOrder(order.ring_order, "schreyer", twists, leads=basis.leads, previous=order)
        syz, syz_leads = [], []
        by_pos: dict[int, list[int]] = {}
        for i, (pos, _) in enumerate(basis.leads):
            by_pos.setdefault(pos, []).append(i)
        for indices in by_pos.values():
            for a, i in enumerate(indices):
                ei = basis.leads[i][1]
                candidates = []
                for j in indices[a + 1:]:
                    ej = basis.leads[j][1]
                    lcm = tuple(max(x, y) for x, y in zip(ei, ej))
                    candidates.append((tuple(x - y for x, y in zip(lcm, ei)), j, lcm))
                for shift, j, lcm in _minimal_shifts(candidates):
                    syz.append(_lift_spair(basis, i, j, lcm, p))
                    syz_leads.append((i, shift))
        level, leads = _sort_for_frame(syz, syz_leads)
        prev_twists = twists
        order = next_order
        k += 1
        if k > ring.nvars + 1:
            raise RegcheckError("El marco de Schreyer no terminó")
    return all_twists, all_maps


def _minimal_shifts(candidates: list[tuple]) -> list[tuple]:
    """Quita los pares cuyo líder es divisible por el de otro par de la misma fila."""
    candidates = sorted(candidates, key=lambda c: (sum(c[0]), c[1]))
    kept = []
    for shift, j, lcm in candidates:
        if not any(all(a <= b for a, b in zip(k[0], shift)) for k in kept):
            kept.append((shift, j, lcm))
    return kept


def _lift_spair(basis: _Basis, i: int, j: int, lcm: tuple, p: int) -> Vector:
    ei, ej = basis.leads[i][1], basis.leads[j][1]
    si = tuple(a - b for a, b in zip(lcm, ei))
    sj = tuple(a - b for a, b in zip(lcm, ej))
    ci, cj = _inverse(basis.lcs[i], p), _inverse(basis.lcs[j], p)
    s: Vector = {}
    _axpy(s, basis.vectors[i], si, -ci, p)
    _axpy(s, basis.vectors[j], sj, cj, p)
    remainder, quotients = basis.reduce(s, full=False, track=True)
    if remainder:
        raise RegcheckError("Un S-par no reduce a cero en una base de Gröbner")
    syz: Vector = {(i, si): ci}
    key = (j, sj)
    syz[key] = (syz.get(key, 0) - cj) % p if p else syz.get(key, 0) - cj
    for idx, q in quotients.items():
        for e, c in q.items():
            key = (idx, e)
            v = syz.get(key, 0) - c
            if p:
                v %= p
            if v:
                syz[key] = v
            else:
                syz.pop(key, None)
    return syz


def _minimize(
    twists: list[list[int]], maps: list[list[Vector]], nvars: int, p: int
) -> tuple[list[list[int]], list[list[Vector]]]:
    """Elimina entradas unidad de la resolución completa."""
    twists = [list(t) for t in twists]
    maps = [[dict(c) for c in m] for m in maps]
    one = (0,) * nvars
    changed = True
    while changed:
        changed = False
        for k in range(len(maps)):
            hit = _find_unit(maps[k], one)
            while hit is not None:
                r, c, u = hit
                _eliminate_unit(maps, k, r, c, u, p)
                del twists[k + 1][c]
                del twists[k][r]
                changed = True
                hit = _find_unit(maps[k], one)
    while len(maps) and not twists[-1]:
        twists.pop()
        maps.pop()
    return twists, maps


def _find_unit(columns: list[Vector], one: tuple) -> Optional[tuple]:
    for c, col in enumerate(columns):
        for (r, e), u in sorted(col.items(), key=lambda item: item[0][0]):
            if e == one:
                return r, c, u
    return None


def _eliminate_unit(maps: list[list[Vector]], k: int, r: int, c: int, u, p: int):
    d = maps[k]
    pivot = d[c]
    inv = _inverse(u, p)
    new = []
    for idx, col in enumerate(d):
        if idx == c:
            continue
        entry = {e: v for (row, e), v in col.items() if row == r}
        col = dict(col)
        for e, v in entry.items():
            coef = v * inv % p if p else v * inv
            _axpy(col, pivot, e, coef, p)
        new.append(_drop_row(col, r))
    maps[k] = new
    if k + 1 < len(maps):
        maps[k + 1] = [_drop_row({t: v for t, v in col.items() if t[0] != c}, c) for col in maps[k + 1]]
    if k >= 1:
        del maps[k - 1][r]


def minimal_free_resolution(
    x: Union[Ideal, PresentedModule],
    progress: Optional[ProgressCallback] = None,
) -> FreeResolution:
    """
    Resolución libre graduada minimal de R/I o de un módulo presentado.

    Raises:
        GradingError: si la entrada no es homogénea
    """
    module = PresentedModule.from_ideal(x) if isinstance(x, Ideal) else x
    ring = module.ring
    twists, maps = _schreyer_frame(ring, module.twists, module.relations.columns(), progress)
    twists, maps = _minimize(twists, maps, ring.nvars, ring.characteristic)
    modules = [GradedFreeModule(tuple(t)) for t in twists]
    matrices = [
        GradedMatrix.from_columns(ring, cols, twists[k], twists[k + 1])
        for k, cols in enumerate(maps)
    ]
    if not modules or not modules[0].twists:
        modules, matrices = [], []
    logger.info(f"Resolución: rangos {[m.rank for m in modules]}")
    return FreeResolution(ring, modules, matrices, minimal=True)


def regularity(x: Union[Ideal, PresentedModule, FreeResolution]) -> Optional[int]:
    """
    Regularidad de Castelnuovo-Mumford.

    Para un ideal devuelve reg(I) = reg(R/I) + 1; None si el módulo es cero.
    """
    if isinstance(x, FreeResolution):
        return x.regularity()
    res = minimal_free_resolution(x)
    reg = res.regularity()
    if isinstance(x, Ideal):
        if x.is_zero():
            return None
        return None if reg is None else reg + 1
    return reg


def projective_dimension(x: Union[Ideal, PresentedModule]) -> int:
    return minimal_free_resolution(x).length


def depth_of_quotient(ideal: Ideal) -> int:
    """Auslander-Buchsbaum: nvars - pd(R/I)."""
    return ideal.ring.nvars - minimal_free_resolution(ideal).length


def depth(module: PresentedModule) -> int:
    return module.ring.nvars - minimal_free_resolution(module).length


# =============================================================================
# EXT, TORSIÓN, ZÓCALO Y COHOMOLOGÍA LOCAL
# =============================================================================


def _homology_presentation(kernel: GradedMatrix, image: Optional[GradedMatrix]) -> PresentedModule:
    """ker/im presentado sobre los generadores del núcleo."""
    ring = kernel.ring
    gens = kernel.source.twists
    if not gens:
        return PresentedModule.free(ring, ())
    if image is None or image.ncols == 0:
        return PresentedModule.free(ring, gens).pruned()
    syz = syzygies(kernel.concat(image))
    rel = syz.restrict_rows(len(gens))
    columns = [c for c in rel.columns() if c]
    if not columns:
        return PresentedModule.free(ring, gens).pruned()
    relations = _minimal_columns(ring, columns, gens)
    return PresentedModule(ring, gens, relations).pruned()


def ext(module: Union[PresentedModule, Ideal], q: int, twist: Optional[int] = None) -> PresentedModule:
    """
    Ext^q(M, R(twist)) como homología del dual de la resolución minimal.

    Args:
        twist: por defecto -nvars (ω_R)

    Raises:
        ParameterError: si q está fuera de [0, nvars]
    """
    if isinstance(module, Ideal):
        module = PresentedModule.from_ideal(module)
    ring = module.ring
    if q < 0 or q > ring.nvars:
        raise ParameterError(f"Índice de Ext fuera de rango: {q}")
    twist = -ring.nvars if twist is None else twist
    res = minimal_free_resolution(module)
    if q >= len(res.modules):
        return PresentedModule.free(ring, ())
    dual_q = res.modules[q].dual(twist).twists
    if q < len(res.maps):
        kernel = syzygies(res.maps[q].dual(twist))
    else:
        kernel = GradedMatrix.identity(ring, dual_q)
    image = res.maps[q - 1].dual(twist) if q >= 1 else None
    result = _homology_presentation(kernel, image)
    logger.debug(f"Ext^{q}: {result.rank} generadores")
    return result


def ext_cyclic(ideal: Ideal, q: int, twist: Optional[int] = None) -> PresentedModule:
    """Ext^q(R/I, R(twist))."""
    return ext(PresentedModule.from_ideal(ideal), q, twist)


def _colon_submodule(
    ring: RingContext,
    twists: Sequence[int],
    sub: list[Vector],
    generators: Sequence[Polynomial],
) -> list[Vector]:
    """
    U :_F a = {v ∈ F : g·v ∈ U para todo g}, con U generado por `sub`.

    Núcleo de F -> (F/U)^t, v ↦ (g_1 v, ..., g_t v), proyectado a F. Los
    generadores g deben tener todos el mismo grado.
    """
    if len({g.degree for g in generators}) != 1:
        raise GradingError("Los generadores del ideal deben tener el mismo grado")
    r, t = len(twists), len(generators)
    target = [w for _ in range(t) for w in twists]
    columns: list[Vector] = []
    source = [w + generators[0].degree for w in twists]
    for pos in range(r):
        col: Vector = {}
        for i, g in enumerate(generators):
            for e, c in g.term_dict.items():
                col[(i * r + pos, e)] = c
        columns.append(col)
    for i in range(t):
        for col in sub:
            columns.append({(i * r + pos, e): c for (pos, e), c in col.items()})
            source.append(vector_degree(col, twists))
    kernel = syzygies(GradedMatrix.from_columns(ring, columns, target, source))
    projected = [{(pos, e): c for (pos, e), c in col.items() if pos < r} for col in kernel.columns()]
    return [c for c in projected if c]


def _equal_submodules(ring: RingContext, a: list[Vector], b: list[Vector], twists: Sequence[int]) -> bool:
    return _submodule_gb(ring, a, twists) == _submodule_gb(ring, b, twists)


def _power_generators(ideal: Ideal) -> list[Polynomial]:
    """Generadores de un mismo grado de una potencia de a (basta para la torsión)."""
    gens = [g for g in ideal.generators]
    top = max(g.degree for g in gens)
    ring = ideal.ring
    out = []
    for g in gens:
        extra = top - g.degree
        if extra == 0:
            out.append(g)
            continue
        for m in _monomials(ring.nvars, extra):
            out.append(g.multiply_monomial(m))
    return out


def _monomials(nvars: int, degree: int) -> list[tuple[int, ...]]:
    from itertools import combinations_with_replacement

    out = []
    for combo in combinations_with_replacement(range(nvars), degree):
        exps = [0] * nvars
        for i in combo:
            exps[i] += 1
        out.append(tuple(exps))
    return out


def torsion_submodule(module: PresentedModule, ideal: Ideal) -> tuple[PresentedModule, PresentedModule]:
    """
    H^0_a(M) = (0 :_M a^∞) y el cociente M / H^0_a(M).

    Se itera U <- U :_F a hasta estabilizar. Los generadores de a se llevan a
    un único grado multiplicando por monomios (mismo radical, misma torsión).
    """
    ring = module.ring
    if ideal.ring != ring:
        raise ParameterError("El ideal y el módulo viven en anillos distintos")
    if ideal.is_zero():
        raise ParameterError("Torsión respecto del ideal cero")
    twists = module.twists
    relations = [c for c in module.relations.columns() if c]
    if ideal.is_unit():
        sub = [{(pos, (0,) * ring.nvars): 1} for pos in range(len(twists))]
    else:
        generators = _power_generators(ideal)
        sub = list(relations)
        while True:
            bigger = _colon_submodule(ring, twists, sub, generators)
            if _equal_submodules(ring, bigger, sub, twists):
                break
            sub = _submodule_gb(ring, bigger, twists)
    sub = [c for c in sub if c]
    if not sub:
        quotient = module.pruned()
        return PresentedModule.free(ring, ()), quotient
    degrees = [vector_degree(c, twists) for c in sub]
    sub_matrix = GradedMatrix.from_columns(ring, sub, twists, degrees)
    quotient = PresentedModule(ring, twists, _minimal_columns(ring, sub, twists)).pruned()
    rel_matrix = GradedMatrix.from_columns(
        ring, relations, twists, [vector_degree(c, twists) for c in relations]
    )
    torsion = _homology_presentation(sub_matrix, rel_matrix)
    return torsion, quotient


def socle_degrees(module: PresentedModule) -> list[int]:
    """Grados (con multiplicidad) de (0 :_M m), m el ideal maximal homogéneo."""
    ring = module.ring
    if module.rank == 0:
        return []
    relations = [c for c in module.relations.columns() if c]
    colon = _colon_submodule(ring, module.twists, relations, ring.gens())
    big = PresentedModule(ring, module.twists, _minimal_columns(ring, colon, module.twists))
    difference = module.hilbert_series() - big.hilbert_series()
    if difference.is_zero():
        return []
    reduced, _ = difference.reduced()
    if reduced.nvars != 0:
        raise RegcheckError("El zócalo no resultó de longitud finita")
    out = []
    for d, c in sorted(reduced.terms().items()):
        out.extend([d] * c)
    return out


def local_cohomology_dims(
    x: Union[Ideal, PresentedModule],
    i: int,
    degrees: Sequence[int],
) -> list[int]:
    """
    dim_k H^i_m(M)_α = dim_k Ext^{n-i}(M, R(-n))_{-α} para α en degrees.

    Raises:
        ParameterError: si i está fuera de [0, nvars]
    """
    module = PresentedModule.from_ideal(x) if isinstance(x, Ideal) else x
    n = module.ring.nvars
    if i < 0 or i > n:
        raise ParameterError(f"Índice de cohomología local fuera de rango: {i}")
    dual = ext(module, n - i, -n)
    series = dual.hilbert_series()
    return [series.coefficient(-a) for a in degrees]
