"""
Ideales homogéneos y sus operaciones: suma, producto, intersección, cociente,
saturación, eliminación, radical y menores.
"""

from __future__ import annotations

import logging
from functools import reduce
from itertools import combinations
from typing import Iterator, Optional, Sequence, Union

from core.errors import ContextMismatchError, GradingError, ParameterError
from core.groebner import (
    GroebnerBasis,
    ModuleOrder,
    buchberger,
    minimal_generating_subset,
)
from core.polynomial import MonomialOrder, Polynomial, RingContext

logger = logging.getLogger("ideals")

PolyLike = Union[Polynomial, str]


class Ideal:
    """Ideal de un anillo de polinomios dado por generadores."""

    def __init__(self, ring: RingContext, generators: Sequence[PolyLike], name: Optional[str] = None):
        gens = []
        for g in generators:
            f = ring.parse(g) if isinstance(g, str) else g
            if f.ring != ring:
                raise ContextMismatchError(f"Generador {f} fuera de {ring}")
            if f:
                gens.append(f)
        self.ring = ring
        self.generators: tuple[Polynomial, ...] = tuple(gens)
        self.name = name
        self._gb: dict[str, GroebnerBasis] = {}

    # -------------------------------------------------------------------------
    # Bases de Gröbner
    # -------------------------------------------------------------------------

    def groebner(self, order: Optional[MonomialOrder] = None) -> GroebnerBasis:
        """Base de Gröbner reducida (se calcula una vez por orden)."""
        order = order or self.ring.order
        key = str(order)
        if key not in self._gb:
            logger.debug(f"GB de {self.label()} con {key}")
            self._gb[key] = buchberger(self.generators, order, ring=self.ring)
        return self._gb[key]

    def _set_groebner(self, basis: GroebnerBasis):
        self._gb[str(basis.order)] = basis

    # -------------------------------------------------------------------------
    # Consultas
    # -------------------------------------------------------------------------

    def label(self) -> str:
        return self.name or "ideal"

    def is_zero(self) -> bool:
        return not self.generators

    def is_unit(self) -> bool:
        return self.groebner().is_unit()

    def is_homogeneous(self) -> bool:
        return all(f.is_homogeneous() for f in self.generators)

    def contains(self, f: PolyLike) -> bool:
        f = self.ring.parse(f) if isinstance(f, str) else f
        return self.groebner().contains(f)

    def contains_ideal(self, other: "Ideal") -> bool:
        _same_ring(self, other)
        basis = self.groebner()
        return all(basis.contains(f) for f in other.generators)

    def is_equal(self, other: "Ideal") -> bool:
        _same_ring(self, other)
        return self.groebner().same_as(other.groebner())

    def __eq__(self, other) -> bool:
        if not isinstance(other, Ideal):
            return NotImplemented
        return self.ring == other.ring and self.is_equal(other)

    __hash__ = None

    def degrees(self) -> list[int]:
        return [f.degree for f in self.generators]

    def minimal_generators(self) -> list[Polynomial]:
        """
        Generadores minimales (ideal homogéneo).

        Raises:
            GradingError: si el ideal no es homogéneo
        """
        if not self.is_homogeneous():
            raise GradingError(f"{self.label()} no es homogéneo")
        return minimal_generating_subset(self.generators)

    def minimalized(self) -> "Ideal":
        return Ideal(self.ring, self.minimal_generators(), self.name)

    def reduce(self, f: PolyLike) -> Polynomial:
        f = self.ring.parse(f) if isinstance(f, str) else f
        return self.groebner().reduce(f)

    # -------------------------------------------------------------------------
    # Aritmética
    # -------------------------------------------------------------------------

    def __add__(self, other: Union["Ideal", Sequence[PolyLike]]) -> "Ideal":
        if not isinstance(other, Ideal):
            other = Ideal(self.ring, other)
        return ideal_sum(self, other)

    def __mul__(self, other: Union["Ideal", Polynomial]) -> "Ideal":
        return self.multiply(other)

    def multiply(self, other: Union["Ideal", PolyLike]) -> "Ideal":
        if isinstance(other, str):
            other = self.ring.parse(other)
        if isinstance(other, Polynomial):
            other = Ideal(self.ring, [other])
        _same_ring(self, other)
        return Ideal(self.ring, [f * g for f in self.generators for g in other.generators])

    def __str__(self) -> str:
        return "(" + ", ".join(str(f) for f in self.generators) + ")"

    def __repr__(self) -> str:
        return f"Ideal{self}"


def _same_ring(a: Ideal, b: Ideal):
    if a.ring != b.ring:
        raise ContextMismatchError(f"Ideales de anillos distintos: {a.ring} y {b.ring}")


def unit_ideal(ring: RingContext) -> Ideal:
    return Ideal(ring, [ring.one()])


def zero_ideal(ring: RingContext) -> Ideal:
    return Ideal(ring, [])


# =============================================================================
# OPERACIONES BÁSICAS
# =============================================================================


def ideal_sum(*ideals: Ideal) -> Ideal:
    """I + J + ... por concatenación de generadores."""
    if not ideals:
        raise ParameterError("ideal_sum necesita al menos un ideal")
    for other in ideals[1:]:
        _same_ring(ideals[0], other)
    return Ideal(ideals[0].ring, [f for I in ideals for f in I.generators])


def ideal_product(I: Ideal, J: Ideal) -> Ideal:
    return I.multiply(J)


def eliminate(I: Ideal, names: Sequence[str]) -> Ideal:
    """
    I ∩ k[variables restantes].

    Las variables eliminadas pasan al principio con un orden de eliminación;
    el resultado vive en el subanillo de las variables restantes (en su orden
    original) y trae ya calculada su base grevlex.
    """
    ring = I.ring
    names = list(names)
    for name in names:
        ring.index(name)
    rest = [v for v in ring.variables if v not in names]
    if not rest:
        raise ParameterError("No se pueden eliminar todas las variables")
    k = len(names)
    big = RingContext(tuple(names + rest), ring.field, MonomialOrder.elimination(k))
    sub = RingContext(tuple(rest), ring.field, MonomialOrder.grevlex())
    basis = buchberger([f.embed(big) for f in I.generators], ring=big)
    kept = [v for v in basis.vectors if all(not any(e[:k]) for _, e in v)]
    vectors = [{(0, e[k:]): c for (_, e), c in v.items()} for v in kept]
    result = Ideal(sub, [Polynomial(sub, {e: c for (_, e), c in v.items()}, normalized=True) for v in vectors])
    grevlex = MonomialOrder.grevlex()
    result._set_groebner(GroebnerBasis(sub, grevlex, vectors, ModuleOrder(grevlex, "top")))
    logger.debug(f"Eliminación de {names}: {len(vectors)} generadores")
    return result


def intersect(I: Ideal, J: Ideal) -> Ideal:
    """I ∩ J eliminando t de t·I + (1-t)·J."""
    _same_ring(I, J)
    ring = I.ring
    if I.is_zero() or J.is_zero():
        return zero_ideal(ring)
    tag = ring.fresh_name("t_")
    big = ring.extended([tag], first=True)
    t = big.variable(tag)
    gens = [t * f.embed(big) for f in I.generators]
    gens += [(1 - t) * g.embed(big) for g in J.generators]
    result = eliminate(Ideal(big, gens), [tag])
    return _back_to(result, ring)


def _back_to(I: Ideal, ring: RingContext) -> Ideal:
    """Reetiqueta un ideal del mismo conjunto de variables en `ring`."""
    if I.ring.variables != ring.variables:
        return Ideal(ring, [f.embed(ring) for f in I.generators])
    result = Ideal(ring, [Polynomial(ring, f.term_dict, normalized=True) for f in I.generators])
    for basis in I._gb.values():
        result._set_groebner(GroebnerBasis(ring, basis.order, basis.vectors, basis.module_order))
    return result


def quotient(I: Ideal, J: Union[Ideal, PolyLike]) -> Ideal:
    """
    I : J = ∩ (I ∩ (g)) / g sobre los generadores g de J.

    Raises:
        ParameterError: si J es el ideal cero
    """
    if not isinstance(J, Ideal):
        J = Ideal(I.ring, [J])
    _same_ring(I, J)
    if J.is_zero():
        raise ParameterError("Cociente por el ideal cero")
    parts = []
    for g in J.generators:
        inter = intersect(I, Ideal(I.ring, [g]))
        parts.append(Ideal(I.ring, [f.divide_exact(g) for f in inter.generators]))
    return reduce(intersect, parts)


def saturate_with_steps(I: Ideal, J: Union[Ideal, PolyLike]) -> tuple[Ideal, int]:
    """
    I : J^∞ iterando cocientes.

    Returns:
        (saturación, número de cocientes hasta estabilizar)
    """
    current, steps = I, 0
    while True:
        nxt = quotient(current, J)
        steps += 1
        if nxt.is_equal(current):
            return current, steps
        current = nxt


def saturate(I: Ideal, J: Union[Ideal, PolyLike]) -> Ideal:
    return saturate_with_steps(I, J)[0]


def is_saturated(I: Ideal, J: Union[Ideal, PolyLike]) -> bool:
    return quotient(I, J).is_equal(I)


def is_nonzerodivisor(f: PolyLike, I: Ideal) -> bool:
    """True si f no es divisor de cero en R/I, es decir I : f = I."""
    return quotient(I, f).is_equal(I)


# =============================================================================
# RADICAL
# =============================================================================


def radical_membership(f: PolyLike, I: Ideal) -> bool:
    """f ∈ √I por el truco de Rabinowitsch: I + (1 - r·f) es el ideal unidad."""
    ring = I.ring
    f = ring.parse(f) if isinstance(f, str) else f
    if f.is_zero():
        return True
    aux = ring.fresh_name("r_")
    big = ring.extended([aux])
    r = big.variable(aux)
    gens = [g.embed(big) for g in I.generators] + [1 - r * f.embed(big)]
    return Ideal(big, gens).is_unit()


def same_radical(I: Ideal, J: Ideal) -> bool:
    """√I = √J comprobando cada generador contra el otro radical."""
    _same_ring(I, J)
    return all(radical_membership(f, J) for f in I.generators) and all(
        radical_membership(g, I) for g in J.generators
    )


# =============================================================================
# CONSTRUCCIONES
# =============================================================================


def default_curve_names(count: int) -> list[str]:
    if count == 4:
        return ["x", "y", "z", "t"]
    if count == 5:
        return ["x", "y", "z", "u", "v"]
    return [f"x{i}" for i in range(count)]


def monomial_curve_ideal(
    degrees: Sequence[int],
    names: Optional[Sequence[str]] = None,
    characteristic: int = 0,
) -> Ideal:
    """
    Ideal de la curva monomial (s^A : s^(A-a_1) w^(a_1) : ... : w^A).

    Args:
        degrees: a_1 < ... < a_n = A
        names: nombres de las n+1 variables
        characteristic: característica del cuerpo

    Raises:
        ParameterError: si los grados no son estrictamente crecientes y positivos
    """
    degrees = [int(a) for a in degrees]
    if not degrees or degrees[0] <= 0 or any(a >= b for a, b in zip(degrees, degrees[1:])):
        raise ParameterError(f"Grados de curva inválidos: {degrees}")
    A = degrees[-1]
    names = list(names) if names else default_curve_names(len(degrees) + 1)
    if len(names) != len(degrees) + 1:
        raise ParameterError("Número de nombres distinto de len(degrees)+1")
    param = RingContext.create(["s_", "w_"] + names, characteristic)
    s, w = param.variable("s_"), param.variable("w_")
    gens = [param.variable(names[0]) - s**A]
    for name, a in zip(names[1:], degrees):
        gens.append(param.variable(name) - s ** (A - a) * w**a)
    result = eliminate(Ideal(param, gens), ["s_", "w_"])
    result.name = "curve(" + ",".join(str(a) for a in degrees) + ")"
    return result


class MinorTable:
    """Menores de una matriz por desarrollo de Laplace, con memoria."""

    def __init__(self, rows: Sequence[Sequence[Polynomial]], ring: RingContext):
        self.rows = [list(r) for r in rows]
        self.ring = ring
        self.nrows = len(self.rows)
        self.ncols = len(self.rows[0]) if self.rows else 0
        self._memo: dict[tuple, Polynomial] = {}

    def minor(self, rs: tuple[int, ...], cs: tuple[int, ...]) -> Polynomial:
        if len(rs) == 1:
            return self.rows[rs[0]][cs[0]]
        key = (rs, cs)
        if key in self._memo:
            return self._memo[key]
        total = self.ring.zero()
        r0, rest = rs[0], rs[1:]
        for k, c in enumerate(cs):
            entry = self.rows[r0][c]
            if entry:
                term = entry * self.minor(rest, cs[:k] + cs[k + 1:])
                total = total - term if k % 2 else total + term
        self._memo[key] = total
        return total

    def subsets(self, size: int) -> Iterator[tuple[tuple[int, ...], tuple[int, ...]]]:
        """Pares (filas, columnas) en orden lexicográfico."""
        for rs in combinations(range(self.nrows), size):
            for cs in combinations(range(self.ncols), size):
                yield rs, cs


def minors_ideal(matrix: Sequence[Sequence[PolyLike]], size: int, ring: Optional[RingContext] = None) -> Ideal:
    """
    Ideal de los menores size×size.

    size = 0 da el ideal unidad. Las entradas de texto se leen en `ring`,
    que entonces es obligatorio.
    """
    rows = [list(r) for r in matrix]
    if ring is None:
        if not rows or not rows[0]:
            raise ParameterError("Matriz vacía sin anillo")
        if any(isinstance(e, str) for r in rows for e in r):
            raise ParameterError("Entradas de texto sin anillo")
        ring = rows[0][0].ring
    rows = [[ring.parse(e) if isinstance(e, str) else e for e in r] for r in rows]
    if any(e.ring != ring for r in rows for e in r):
        raise ContextMismatchError("Entradas de la matriz fuera del anillo")
    if size < 0:
        raise ParameterError(f"Tamaño de menor negativo: {size}")
    if size == 0:
        return unit_ideal(ring)
    table = MinorTable(rows, ring)
    if size > min(table.nrows, table.ncols):
        raise ParameterError(f"Menores de tamaño {size} en una matriz {table.nrows}x{table.ncols}")
    return Ideal(ring, [table.minor(rs, cs) for rs, cs in table.subsets(size)])


def homogenize(I: Ideal, var: str, position: str = "last") -> Ideal:
    """
    Homogeneización de I con una variable nueva.

    Se homogeneiza una base grevlex (orden graduado), lo que da el ideal
    homogeneizado completo.
    """
    ring = I.ring
    if var in ring.variables:
        raise ParameterError(f"La variable {var} ya está en el anillo")
    if position not in ("first", "last"):
        raise ParameterError(f"Posición inválida: {position}")
    basis = I.groebner(MonomialOrder.grevlex())
    big = ring.extended([var], first=position == "first").with_order(MonomialOrder.grevlex())
    idx = big.index(var)
    return Ideal(big, [f.embed(big).homogenize(idx) for f in basis.elements])


def is_minimal_generator(f: PolyLike, I: Ideal) -> bool:
    """
    True si f ∈ I no está en el ideal generado por I en grados menores.

    Raises:
        ParameterError: si f no pertenece a I
        GradingError: si f o I no son homogéneos
    """
    f = I.ring.parse(f) if isinstance(f, str) else f
    if not f.is_homogeneous() or not I.is_homogeneous():
        raise GradingError("is_minimal_generator requiere entrada homogénea")
    if not I.contains(f):
        raise ParameterError(f"{f} no pertenece a {I.label()}")
    lower = Ideal(I.ring, [g for g in I.generators if g.degree < f.degree])
    if lower.is_zero():
        return True
    return not lower.contains(f)


def truncate_ideal(I: Ideal, degree: int) -> Ideal:
    """Ideal generado por los generadores minimales de grado <= degree."""
    gens = [f for f in I.minimal_generators() if f.degree <= degree]
    name = f"{I.name}_<={degree}" if I.name else None
    return Ideal(I.ring, gens, name)
