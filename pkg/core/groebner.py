"""
Bases de Gröbner de ideales y de submódulos de módulos libres graduados.

Internamente un vector es un diccionario `(posición, exponentes) -> coeficiente`;
un polinomio de un ideal es el vector con todas sus entradas en la posición 0.
"""

from __future__ import annotations

import heapq
import logging
from dataclasses import dataclass
from typing import Iterable, Optional, Sequence, Union

from core.errors import ContextMismatchError, ParameterError
from core.polynomial import (
    Coefficient,
    Exponents,
    MonomialOrder,
    Polynomial,
    RingContext,
)

logger = logging.getLogger("groebner")

Term = tuple[int, Exponents]
Vector = dict[Term, Coefficient]


# =============================================================================
# ÓRDENES SOBRE MÓDULOS LIBRES
# =============================================================================


class ModuleOrder:
    """
    Orden de términos `x^a e_i` de un módulo libre.

    Tipos:
        top: término sobre posición (con grado torcido si hay twists)
        pot: posición sobre término, la posición menor es la mayor
        schreyer: inducido por los términos líderes `leads` en el módulo
            anterior, ordenado por `previous`
    """

    def __init__(
        self,
        ring_order: MonomialOrder,
        kind: str = "top",
        twists: Sequence[int] = (),
        leads: Optional[Sequence[Term]] = None,
        previous: Optional["ModuleOrder"] = None,
    ):
        if kind not in ("top", "pot", "schreyer"):
            raise ParameterError(f"Orden de módulo desconocido: {kind}")
        if kind == "schreyer" and (leads is None or previous is None):
            raise ParameterError("El orden de Schreyer necesita términos líderes y orden previo")
        self.ring_order = ring_order
        self.kind = kind
        self.twists = tuple(twists)
        self.leads = list(leads) if leads is not None else None
        self.previous = previous
        self._graded = any(self.twists)
        self._cache: dict[Term, tuple] = {}

    def key(self, term: Term) -> tuple:
        cached = self._cache.get(term)
        if cached is not None:
            return cached
        pos, exps = term
        if self.kind == "top":
            if self._graded:
                k = (sum(exps) + self.twists[pos], self.ring_order.key(exps), -pos)
            else:
                k = (self.ring_order.key(exps), -pos)
        elif self.kind == "pot":
            k = (-pos, self.ring_order.key(exps))
        else:
            lp, le = self.leads[pos]
            k = (self.previous.key((lp, tuple(a + b for a, b in zip(le, exps)))), -pos)
        self._cache[term] = k
        return k

    def twist(self, pos: int) -> int:
        return self.twists[pos] if self.twists else 0


# =============================================================================
# OPERACIONES SOBRE VECTORES
# =============================================================================


def _divides(a: Exponents, b: Exponents) -> bool:
    for x, y in zip(a, b):
        if x > y:
            return False
    return True


def _axpy(f: Vector, g: Vector, shift: Exponents, coef: Coefficient, p: int):
    """f <- f - coef * x^shift * g, en el sitio."""
    for (pos, e), c in g.items():
        t = (pos, tuple(a + b for a, b in zip(e, shift)))
        v = f.get(t, 0) - coef * c
        if p:
            v %= p
        if v:
            f[t] = v
        else:
            f.pop(t, None)


def _inverse(c: Coefficient, p: int) -> Coefficient:
    return pow(int(c), -1, p) if p else 1 / c


def _lead(f: Vector, order: ModuleOrder) -> Term:
    return max(f, key=order.key)


class _Basis:
    """Lista de vectores con sus términos líderes, agrupados por posición."""

    def __init__(self, order: ModuleOrder, p: int):
        self.order = order
        self.p = p
        self.vectors: list[Vector] = []
        self.leads: list[Term] = []
        self.lcs: list[Coefficient] = []
        self.by_pos: dict[int, list[int]] = {}

    def append(self, vector: Vector) -> int:
        lead = _lead(vector, self.order)
        self.vectors.append(vector)
        self.leads.append(lead)
        self.lcs.append(vector[lead])
        idx = len(self.vectors) - 1
        self.by_pos.setdefault(lead[0], []).append(idx)
        return idx

    def divisor_of(self, term: Term, skip: Optional[int] = None) -> Optional[int]:
        for idx in self.by_pos.get(term[0], ()):
            if idx != skip and _divides(self.leads[idx][1], term[1]):
                return idx
        return None

    def reduce(
        self,
        f: Vector,
        full: bool = True,
        track: bool = False,
        skip: Optional[int] = None,
    ) -> tuple[Vector, Optional[dict[int, dict[Exponents, Coefficient]]]]:
        """
        División por la base.

        Args:
            f: vector a reducir (no se modifica)
            full: reducir todos los términos, no solo el líder
            track: devolver también los cocientes por elemento
            skip: índice de la base que no se usa

        Returns:
            (resto, cocientes o None)
        """
        f = dict(f)
        p = self.p
        key = self.order.key
        remainder: Vector = {}
        quotients: Optional[dict[int, dict[Exponents, Coefficient]]] = {} if track else None
        while f:
            t = max(f, key=key)
            idx = self.divisor_of(t, skip)
            if idx is None:
                if not full:
                    remainder.update(f)
                    break
                remainder[t] = f.pop(t)
                continue
            c = f[t]
            coef = c * _inverse(self.lcs[idx], p)
            if p:
                coef %= p
            shift = tuple(a - b for a, b in zip(t[1], self.leads[idx][1]))
            _axpy(f, self.vectors[idx], shift, coef, p)
            if track:
                q = quotients.setdefault(idx, {})
                v = q.get(shift, 0) + coef
                if p:
                    v %= p
                if v:
                    q[shift] = v
                else:
                    q.pop(shift, None)
        return remainder, quotients


def _spair(basis: _Basis, i: int, j: int) -> Vector:
    p = basis.p
    (pos, ei), (_, ej) = basis.leads[i], basis.leads[j]
    lcm = tuple(max(a, b) for a, b in zip(ei, ej))
    s: Vector = {}
    _axpy(s, basis.vectors[i], tuple(a - b for a, b in zip(lcm, ei)), -_inverse(basis.lcs[i], p), p)
    _axpy(s, basis.vectors[j], tuple(a - b for a, b in zip(lcm, ej)), _inverse(basis.lcs[j], p), p)
    return s


def _run_buchberger(
    vectors: Iterable[Vector],
    order: ModuleOrder,
    p: int,
    is_module: bool,
    max_degree: Optional[int] = None,
) -> _Basis:
    """
    Buchberger con criterios del producto (solo ideales) y de la cadena.

    Con `max_degree` la base solo es completa hasta ese grado (entrada homogénea).
    """
    basis = _Basis(order, p)
    heap: list[tuple] = []
    pending: set[tuple[int, int]] = set()

    def push_pairs(new: int):
        pos, en = basis.leads[new]
        for old in basis.by_pos.get(pos, ()):
            if old == new:
                continue
            eo = basis.leads[old][1]
            if not is_module and all(a == 0 or b == 0 for a, b in zip(en, eo)):
                continue
            lcm = tuple(max(a, b) for a, b in zip(en, eo))
            degree = sum(lcm) + order.twist(pos)
            heapq.heappush(heap, (degree, order.key((pos, lcm)), old, new))
            pending.add((old, new))

    for v in vectors:
        if not v:
            continue
        r, _ = basis.reduce(v, full=False)
        if r:
            push_pairs(basis.append(r))

    reductions = 0
    while heap:
        degree, _, i, j = heapq.heappop(heap)
        if max_degree is not None and degree > max_degree:
            break
        pending.discard((i, j))
        pos = basis.leads[i][0]
        lcm = tuple(max(a, b) for a, b in zip(basis.leads[i][1], basis.leads[j][1]))
        if _chain_skip(basis, pending, pos, lcm, i, j):
            continue
        s = _spair(basis, i, j)
        reductions += 1
        if not s:
            continue
        r, _ = basis.reduce(s, full=False)
        if r:
            push_pairs(basis.append(r))
    logger.debug(f"Buchberger: {len(basis.vectors)} elementos, {reductions} S-pares reducidos")
    return basis


def _chain_skip(basis: _Basis, pending: set, pos: int, lcm: Exponents, i: int, j: int) -> bool:
    for k in basis.by_pos.get(pos, ()):
        if k in (i, j) or not _divides(basis.leads[k][1], lcm):
            continue
        if (min(i, k), max(i, k)) not in pending and (min(j, k), max(j, k)) not in pending:
            return True
    return False


def _reduced(basis: _Basis) -> list[Vector]:
    """Base reducida: minimal, interreducida, mónica y en orden ascendente."""
    order, p = basis.order, basis.p
    n = len(basis.vectors)
    keep = []
    for i in range(n):
        pos, ei = basis.leads[i]
        redundant = False
        for j in basis.by_pos.get(pos, ()):
            if j == i:
                continue
            ej = basis.leads[j][1]
            if _divides(ej, ei) and (ej != ei or j < i):
                redundant = True
                break
        if not redundant:
            keep.append(i)
    minimal = _Basis(order, p)
    for i in keep:
        minimal.append(basis.vectors[i])
    result = []
    for idx, v in enumerate(minimal.vectors):
        r, _ = minimal.reduce(v, full=True, skip=idx)
        # el líder no es divisible por otros líderes, sobrevive
        lead = minimal.leads[idx]
        r[lead] = v[lead]
        result.append(_monic(r, lead, p))
    result.sort(key=lambda v: order.key(_lead(v, order)))
    return result


def _monic(v: Vector, lead: Term, p: int) -> Vector:
    inv = _inverse(v[lead], p)
    if p:
        return {t: c * inv % p for t, c in v.items()}
    return {t: c * inv for t, c in v.items()}


# =============================================================================
# CONVERSIONES
# =============================================================================


@dataclass(frozen=True)
class ModuleElement:
    """Elemento de un módulo libre graduado ⊕ R(-twists[i])."""

    entries: tuple[Polynomial, ...]
    twists: tuple[int, ...] = ()

    def __post_init__(self):
        entries = tuple(self.entries)
        object.__setattr__(self, "entries", entries)
        if not entries:
            raise ParameterError("Elemento de módulo sin entradas")
        ring = entries[0].ring
        if any(e.ring != ring for e in entries):
            raise ContextMismatchError("Entradas de anillos distintos")
        twists = tuple(self.twists) or (0,) * len(entries)
        if len(twists) != len(entries):
            raise ParameterError("Número de twists distinto al de entradas")
        object.__setattr__(self, "twists", twists)

    @property
    def ring(self) -> RingContext:
        return self.entries[0].ring

    @property
    def rank(self) -> int:
        return len(self.entries)

    def is_zero(self) -> bool:
        return all(e.is_zero() for e in self.entries)

    def degree(self) -> Optional[int]:
        """Grado del elemento si es homogéneo; None si no lo es o es cero."""
        degrees = set()
        for e, w in zip(self.entries, self.twists):
            degrees.update(sum(x) + w for x in e.term_dict)
        return degrees.pop() if len(degrees) == 1 else None

    def to_vector(self) -> Vector:
        return {(i, e): c for i, p in enumerate(self.entries) for e, c in p.term_dict.items()}

    @classmethod
    def from_vector(cls, ring: RingContext, vector: Vector, rank: int, twists: Sequence[int] = ()) -> "ModuleElement":
        buckets: list[dict] = [{} for _ in range(rank)]
        for (pos, e), c in vector.items():
            buckets[pos][e] = c
        return cls(tuple(Polynomial(ring, b, normalized=True) for b in buckets), tuple(twists))

    def __str__(self) -> str:
        return "(" + ", ".join(str(e) for e in self.entries) + ")"


def poly_to_vector(f: Polynomial, pos: int = 0) -> Vector:
    return {(pos, e): c for e, c in f.term_dict.items()}


def vector_to_poly(ring: RingContext, v: Vector) -> Polynomial:
    return Polynomial(ring, {e: c for (_, e), c in v.items()}, normalized=True)


def vector_degree(v: Vector, twists: Sequence[int] = ()) -> int:
    """Grado (máximo) de un vector con twists."""
    return max(sum(e) + (twists[pos] if twists else 0) for pos, e in v)


# =============================================================================
# API PÚBLICA
# =============================================================================


class GroebnerBasis:
    """
    Base de Gröbner reducida, mónica y ordenada de forma ascendente por líder.

    Para ideales los elementos son Polynomial; para submódulos, ModuleElement.
    """

    def __init__(
        self,
        ring: RingContext,
        order: MonomialOrder,
        vectors: list[Vector],
        module_order: ModuleOrder,
        rank: int = 1,
        is_module: bool = False,
    ):
        self.ring = ring
        self.order = order
        self.module_order = module_order
        self.vectors = vectors
        self.rank = rank
        self.is_module = is_module
        self._basis = _Basis(module_order, ring.characteristic)
        for v in vectors:
            self._basis.append(v)

    @property
    def elements(self) -> list:
        if self.is_module:
            return [
                ModuleElement.from_vector(self.ring, v, self.rank, self.module_order.twists)
                for v in self.vectors
            ]
        return [vector_to_poly(self.ring, v) for v in self.vectors]

    @property
    def leads(self) -> list[Term]:
        return list(self._basis.leads)

    def leading_monomials(self) -> list[Exponents]:
        return [e for _, e in self._basis.leads]

    def __len__(self) -> int:
        return len(self.vectors)

    def is_unit(self) -> bool:
        return not self.is_module and any(not any(e) for _, e in self._basis.leads)

    def reduce_vector(self, v: Vector) -> Vector:
        return self._basis.reduce(v, full=True)[0]

    def reduce(self, f: Union[Polynomial, ModuleElement]):
        """Forma normal de f respecto de la base."""
        if isinstance(f, Polynomial):
            if f.ring != self.ring:
                raise ContextMismatchError(f"Anillos distintos: {f.ring} y {self.ring}")
            return vector_to_poly(self.ring, self.reduce_vector(poly_to_vector(f)))
        if f.rank != self.rank:
            raise ContextMismatchError("Rango de módulo distinto")
        r = self.reduce_vector(f.to_vector())
        return ModuleElement.from_vector(self.ring, r, self.rank, f.twists)

    def contains(self, f: Union[Polynomial, ModuleElement]) -> bool:
        r = self.reduce(f)
        return r.is_zero()

    def same_as(self, other: "GroebnerBasis") -> bool:
        return self.vectors == other.vectors

    def __str__(self) -> str:
        return "[" + ", ".join(str(e) for e in self.elements) + "]"


def _check_ring(polys: Sequence[Polynomial]) -> RingContext:
    if not polys:
        raise ParameterError("Se necesita al menos un generador")
    ring = polys[0].ring
    for f in polys:
        if f.ring != ring:
            raise ContextMismatchError(f"Anillos distintos: {ring} y {f.ring}")
    return ring


def buchberger(
    generators: Sequence[Polynomial],
    order: Optional[MonomialOrder] = None,
    ring: Optional[RingContext] = None,
) -> GroebnerBasis:
    """
    Base de Gröbner reducida de un ideal.

    Args:
        generators: generadores (pueden incluir ceros)
        order: orden monomial; por defecto el del anillo
        ring: anillo, necesario solo si no hay generadores

    Returns:
        GroebnerBasis mónica, ascendente por término líder
    """
    if ring is None:
        ring = _check_ring(generators)
    elif any(f.ring != ring for f in generators):
        raise ContextMismatchError("Generadores fuera del anillo")
    order = order or ring.order
    morder = ModuleOrder(order, "top")
    basis = _run_buchberger((poly_to_vector(f) for f in generators), morder, ring.characteristic, False)
    return GroebnerBasis(ring, order, _reduced(basis), morder)


def module_buchberger(
    elements: Sequence[ModuleElement],
    kind: str = "top",
    order: Optional[MonomialOrder] = None,
    rank: Optional[int] = None,
    twists: Sequence[int] = (),
    ring: Optional[RingContext] = None,
) -> GroebnerBasis:
    """
    Base de Gröbner reducida de un submódulo de un módulo libre.

    Args:
        elements: generadores del submódulo
        kind: "top" o "pot"
        order: orden monomial del anillo
        rank, twists, ring: datos del módulo libre si no hay elementos
    """
    if elements:
        ring = ring or elements[0].ring
        rank = rank or elements[0].rank
        twists = tuple(twists) or elements[0].twists
    if ring is None or rank is None:
        raise ParameterError("Submódulo vacío sin anillo ni rango")
    for el in elements:
        if el.ring != ring or el.rank != rank:
            raise ContextMismatchError("Elementos de módulos distintos")
    order = order or ring.order
    morder = ModuleOrder(order, kind, twists or (0,) * rank)
    vectors = [el.to_vector() for el in elements]
    return vector_buchberger(ring, vectors, morder, rank)


def vector_buchberger(ring: RingContext, vectors: Iterable[Vector], morder: ModuleOrder, rank: int) -> GroebnerBasis:
    basis = _run_buchberger(vectors, morder, ring.characteristic, True)
    return GroebnerBasis(ring, morder.ring_order, _reduced(basis), morder, rank, is_module=True)


def normal_form(f: Union[Polynomial, ModuleElement], basis: Union[GroebnerBasis, Sequence[Polynomial]]):
    """
    Resto de dividir f por la base.

    Si se pasa una lista de polinomios se usa como divisor tal cual (el resto
    solo es canónico si la lista es base de Gröbner).
    """
    if isinstance(basis, GroebnerBasis):
        return basis.reduce(f)
    ring = f.ring
    morder = ModuleOrder(ring.order, "top")
    divisor = _Basis(morder, ring.characteristic)
    for g in basis:
        if g:
            divisor.append(poly_to_vector(g))
    return vector_to_poly(ring, divisor.reduce(poly_to_vector(f))[0])


def ideal_membership(f: Polynomial, generators: Union[GroebnerBasis, Sequence[Polynomial]]) -> bool:
    """True si f pertenece al ideal generado."""
    if not isinstance(generators, GroebnerBasis):
        generators = buchberger(list(generators) or [f.ring.zero()], ring=f.ring)
    return generators.contains(f)


# =============================================================================
# GENERADORES MINIMALES
# =============================================================================


def minimal_vector_subset(
    vectors: Sequence[Vector],
    morder: ModuleOrder,
    p: int,
    twists: Sequence[int] = (),
) -> list[int]:
    """
    Índices de un subconjunto minimal de generadores homogéneos.

    Grado a grado: un vector se queda si su forma normal módulo lo generado
    en grados menores es independiente de las ya aceptadas en su grado.
    """
    by_degree: dict[int, list[int]] = {}
    for i, v in enumerate(vectors):
        if v:
            by_degree.setdefault(vector_degree(v, twists), []).append(i)
    chosen: list[int] = []
    for degree in sorted(by_degree):
        lower = _run_buchberger([vectors[i] for i in chosen], morder, p, True, max_degree=degree)
        rows: dict[Term, Vector] = {}
        accepted = []
        for i in by_degree[degree]:
            r, _ = lower.reduce(vectors[i], full=True)
            r = _eliminate_row(r, rows, p)
            if r:
                pivot = max(r, key=morder.key)
                rows[pivot] = _monic(r, pivot, p)
                accepted.append(i)
        chosen.extend(accepted)
    return chosen


def _eliminate_row(r: Vector, rows: dict[Term, Vector], p: int) -> Vector:
    r = dict(r)
    changed = True
    while r and changed:
        changed = False
        for pivot, row in rows.items():
            c = r.get(pivot)
            if c:
                for t, v in row.items():
                    x = r.get(t, 0) - c * v
                    if p:
                        x %= p
                    if x:
                        r[t] = x
                    else:
                        r.pop(t, None)
                changed = True
    return r


def minimal_generating_subset(
    generators: Sequence[Union[Polynomial, ModuleElement]],
) -> list[Union[Polynomial, ModuleElement]]:
    """
    Subconjunto minimal de un sistema homogéneo de generadores.

    Raises:
        GradingError: si algún generador no es homogéneo
    """
    from core.errors import GradingError

    items = [g for g in generators if not g.is_zero()]
    if not items:
        return []
    if isinstance(items[0], Polynomial):
        ring = _check_ring(items)
        if not all(f.is_homogeneous() for f in items):
            raise GradingError("Generadores no homogéneos")
        vectors = [poly_to_vector(f) for f in items]
        twists: tuple[int, ...] = ()
    else:
        ring = items[0].ring
        twists = items[0].twists
        if any(el.degree() is None for el in items):
            raise GradingError("Elementos de módulo no homogéneos")
        vectors = [el.to_vector() for el in items]
    morder = ModuleOrder(MonomialOrder.grevlex(), "top", twists)
    keep = minimal_vector_subset(vectors, morder, ring.characteristic, twists)
    return [items[i] for i in sorted(keep)]
