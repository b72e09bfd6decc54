"""
Series y funciones de Hilbert, dimensión y grado.

El numerador se obtiene del ideal de términos líderes con la recursión de
pivotes sobre ideales monomiales (filas de una matriz numpy de exponentes).
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations_with_replacement
from math import comb
from typing import Iterable, Optional, Sequence

import numpy as np

from core.errors import GradingError, ParameterError

logger = logging.getLogger("ideals")


# =============================================================================
# POLINOMIOS EN t (listas de enteros, potencias ascendentes)
# =============================================================================


def _trim(coeffs: Sequence[int]) -> list[int]:
    coeffs = list(coeffs)
    while coeffs and coeffs[-1] == 0:
        coeffs.pop()
    return coeffs


def _pmul(a: Sequence[int], b: Sequence[int]) -> list[int]:
    if not a or not b:
        return []
    return _trim(int(c) for c in np.convolve(np.array(a, dtype=object), np.array(b, dtype=object)))


def _padd(a: Sequence[int], b: Sequence[int], shift: int = 0, sign: int = 1) -> list[int]:
    """a + sign * t^shift * b (shift >= 0)."""
    out = list(a) + [0] * max(0, len(b) + shift - len(a))
    for i, c in enumerate(b):
        out[i + shift] += sign * c
    return _trim(out)


def _one_minus_t_power(k: int) -> list[int]:
    return [(-1) ** i * comb(k, i) for i in range(k + 1)]


# =============================================================================
# SERIE DE HILBERT
# =============================================================================


@dataclass(frozen=True)
class HilbertSeries:
    """
    Serie N(t) / (1-t)^nvars con N un polinomio de Laurent de coeficientes
    enteros: N(t) = sum numerator[j] * t^(j + offset).
    """

    numerator: tuple[int, ...]
    nvars: int
    offset: int = 0

    def __post_init__(self):
        coeffs = _trim(self.numerator)
        offset = self.offset
        while coeffs and coeffs[0] == 0:
            coeffs.pop(0)
            offset += 1
        if not coeffs:
            offset = 0
        object.__setattr__(self, "numerator", tuple(int(c) for c in coeffs))
        object.__setattr__(self, "offset", offset)

    @classmethod
    def from_terms(cls, terms: dict[int, int], nvars: int) -> "HilbertSeries":
        """Construye la serie a partir de {potencia: coeficiente} del numerador."""
        terms = {d: c for d, c in terms.items() if c}
        if not terms:
            return cls((), nvars)
        low = min(terms)
        coeffs = [0] * (max(terms) - low + 1)
        for d, c in terms.items():
            coeffs[d - low] = c
        return cls(tuple(coeffs), nvars, low)

    def is_zero(self) -> bool:
        return not self.numerator

    def terms(self) -> dict[int, int]:
        return {j + self.offset: c for j, c in enumerate(self.numerator) if c}

    def coefficient(self, d: int) -> int:
        """Valor de la función de Hilbert en grado d."""
        n = self.nvars
        total = 0
        for j, c in enumerate(self.numerator):
            k = d - j - self.offset
            if k < 0:
                continue
            total += c * (comb(k + n - 1, n - 1) if n else int(k == 0))
        return total

    def coefficients(self, start: int, stop: int) -> list[int]:
        return [self.coefficient(d) for d in range(start, stop + 1)]

    def reduced(self) -> tuple["HilbertSeries", int]:
        """
        Cancela los factores (1-t) comunes.

        Returns:
            (serie reducida, número de factores cancelados)
        """
        coeffs, k = list(self.numerator), 0
        while coeffs and k < self.nvars and sum(coeffs) == 0:
            acc, quotient = 0, []
            for c in coeffs[:-1]:
                acc += c
                quotient.append(acc)
            coeffs, k = quotient, k + 1
        return HilbertSeries(tuple(coeffs), self.nvars - k, self.offset), k

    @property
    def dimension(self) -> int:
        """Dimensión de Krull; -1 para el módulo cero."""
        if self.is_zero():
            return -1
        return self.reduced()[0].nvars

    @property
    def degree(self) -> int:
        """Multiplicidad: numerador reducido evaluado en t=1."""
        return sum(self.reduced()[0].numerator)

    def shift(self, k: int) -> "HilbertSeries":
        """Serie de M(-k): multiplica por t^k."""
        return HilbertSeries(self.numerator, self.nvars, self.offset + k)

    def _over(self, nvars: int) -> dict[int, int]:
        coeffs = _pmul(self.numerator, _one_minus_t_power(nvars - self.nvars)) if self.numerator else []
        return {j + self.offset: c for j, c in enumerate(coeffs) if c}

    def _combine(self, other: "HilbertSeries", sign: int) -> "HilbertSeries":
        n = max(self.nvars, other.nvars)
        terms = self._over(n)
        for d, c in other._over(n).items():
            terms[d] = terms.get(d, 0) + sign * c
        return HilbertSeries.from_terms(terms, n)

    def __add__(self, other: "HilbertSeries") -> "HilbertSeries":
        return self._combine(other, 1)

    def __sub__(self, other: "HilbertSeries") -> "HilbertSeries":
        return self._combine(other, -1)

    def __eq__(self, other) -> bool:
        if not isinstance(other, HilbertSeries):
            return NotImplemented
        n = max(self.nvars, other.nvars)
        return self._over(n) == other._over(n)

    def __hash__(self) -> int:
        r = self.reduced()[0]
        return hash((r.numerator, r.offset, r.nvars))

    def numerator_text(self) -> str:
        if not self.numerator:
            return "0"
        pieces = []
        for power, c in sorted(self.terms().items()):
            magnitude = abs(c)
            if power == 0:
                body = str(magnitude)
            else:
                mono = "t" if power == 1 else f"t^{power}"
                body = mono if magnitude == 1 else f"{magnitude}*{mono}"
            if not pieces:
                pieces.append(f"-{body}" if c < 0 else body)
            else:
                pieces.append(f" - {body}" if c < 0 else f" + {body}")
        return "".join(pieces)

    def __str__(self) -> str:
        return f"{self.numerator_text()} / (1-t)^{self.nvars}"

    def to_dict(self) -> dict:
        return {
            "numerator": {str(d): c for d, c in sorted(self.terms().items())},
            "nvars": self.nvars,
            "dimension": self.dimension,
            "degree": self.degree,
            "text": str(self),
        }


# =============================================================================
# RECURSIÓN DE PIVOTES SOBRE IDEALES MONOMIALES
# =============================================================================


def _minimalize(A: np.ndarray) -> np.ndarray:
    """Generadores minimales de las filas de A."""
    kept: list[np.ndarray] = []
    for m in sorted(A, key=lambda r: int(r.sum())):
        if all(not np.all(m >= g) for g in kept):
            kept.append(m)
    if not kept:
        return np.zeros((0, A.shape[1]), dtype=np.int64)
    return np.array(kept, dtype=np.int64)


def _pivot(A: np.ndarray, p: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """Devuelve los generadores de <A, p> y de <A : p>."""
    left = [m for m in A if not np.all(m >= p)]
    left.append(p)
    right = np.where(A >= p, A - p, 0)
    return _minimalize(np.array(left, dtype=np.int64)), _minimalize(right)


def _choose_pivot(A: np.ndarray) -> Optional[np.ndarray]:
    """Potencia de la variable más frecuente, dividiendo un generador no puro."""
    support = np.count_nonzero(A, axis=1)
    mixed = A[support > 1]
    if len(mixed) == 0:
        return None
    column = int(np.argmax(np.count_nonzero(mixed, axis=0)))
    exponents = sorted(int(e) for e in mixed[:, column] if e > 0)
    p = np.zeros(A.shape[1], dtype=np.int64)
    p[column] = exponents[(len(exponents) - 1) // 2]
    return p


@lru_cache(maxsize=1 << 16)
def _numerator_cached(rows: tuple[tuple[int, ...], ...], nvars: int) -> tuple[int, ...]:
    if not rows:
        return (1,)
    A = np.array(rows, dtype=np.int64).reshape(len(rows), nvars)
    return tuple(_numerator(A))


def _numerator(A: np.ndarray) -> list[int]:
    if len(A) == 0:
        return [1]
    if np.any(A.sum(axis=1) == 0):
        return []
    p = _choose_pivot(A)
    if p is None:
        # potencias puras de variables distintas: intersección completa
        result = [1]
        for m in A:
            result = _pmul(result, _padd([1], [1], int(m.sum()), -1))
        return result
    left, right = _pivot(A, p)
    result = list(_numerator_cached(_canonical(left), A.shape[1]))
    tail = _numerator_cached(_canonical(right), A.shape[1])
    return _padd(result, tail, int(p.sum()))


def _canonical(A: np.ndarray) -> tuple[tuple[int, ...], ...]:
    return tuple(sorted(tuple(int(x) for x in row) for row in A))


def monomial_numerator(leads: Iterable[Sequence[int]], nvars: int) -> list[int]:
    """Numerador de k[x]/(monomios) sobre (1-t)^nvars."""
    rows = [tuple(int(e) for e in m) for m in leads]
    if not rows:
        return [1]
    A = _minimalize(np.array(rows, dtype=np.int64).reshape(len(rows), nvars))
    return list(_numerator_cached(_canonical(A), nvars))


def series_of_leads(nvars: int, twists: Sequence[int], leads: Iterable[tuple[int, Sequence[int]]]) -> HilbertSeries:
    """
    Serie de F/in(U) con F = ⊕ R(-twists[i]) y términos líderes (posición, exponentes).
    """
    by_pos: dict[int, list] = {i: [] for i in range(len(twists))}
    for pos, exps in leads:
        by_pos[pos].append(exps)
    terms: dict[int, int] = {}
    for pos, monomials in by_pos.items():
        for j, c in enumerate(monomial_numerator(monomials, nvars)):
            d = j + twists[pos]
            terms[d] = terms.get(d, 0) + c
    return HilbertSeries.from_terms(terms, nvars)


# =============================================================================
# API SOBRE IDEALES
# =============================================================================


def _leading_exponents(ideal) -> list[tuple[int, ...]]:
    if not ideal.is_homogeneous():
        raise GradingError(f"{ideal.label()} no es homogéneo")
    return ideal.groebner().leading_monomials()


def hilbert_numerator(ideal) -> HilbertSeries:
    """Serie de Hilbert de R/I, sin reducir, sobre (1-t)^nvars."""
    nvars = ideal.ring.nvars
    return HilbertSeries(tuple(monomial_numerator(_leading_exponents(ideal), nvars)), nvars)


def series_from_resolution(resolution) -> HilbertSeries:
    """
    Suma alternada de los twists de la resolución.

    Raises:
        ParameterError: si la resolución no tiene módulos
    """
    modules = resolution.modules
    if not modules:
        raise ParameterError("Resolución vacía")
    terms: dict[int, int] = {}
    for j, module in enumerate(modules):
        sign = -1 if j % 2 else 1
        for d in module.twists:
            terms[d] = terms.get(d, 0) + sign
    return HilbertSeries.from_terms(terms, resolution.ring.nvars)


def dimension(ideal) -> int:
    return hilbert_numerator(ideal).dimension


def degree(ideal) -> int:
    return hilbert_numerator(ideal).degree


def codimension(ideal) -> int:
    """nvars - dim R/I; el ideal unidad tiene codimensión infinita (nvars + 1)."""
    dim = dimension(ideal)
    return ideal.ring.nvars + 1 if dim < 0 else ideal.ring.nvars - dim


def hilbert_function(ideal, d: int, method: str = "series") -> int:
    """
    dim_k (R/I)_d.

    Args:
        method: "series" expande la serie; "count" cuenta monomios estándar
    """
    if d < 0:
        raise ParameterError(f"Grado negativo: {d}")
    if method == "series":
        return hilbert_numerator(ideal).coefficient(d)
    if method != "count":
        raise ParameterError(f"Método desconocido: {method}")
    leads = _leading_exponents(ideal)
    return count_standard_monomials(leads, ideal.ring.nvars, d)


def count_standard_monomials(leads: Sequence[Sequence[int]], nvars: int, d: int) -> int:
    """Monomios de grado d no divisibles por ningún término líder."""
    count = 0
    for combo in combinations_with_replacement(range(nvars), d):
        exps = [0] * nvars
        for i in combo:
            exps[i] += 1
        if not any(all(a <= b for a, b in zip(m, exps)) for m in leads):
            count += 1
    return count
