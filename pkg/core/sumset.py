"""
Conteos combinatorios de la curva monomial (1, mn², mn(n+1), m(n+1)²):
sumas α-veces del conjunto base, secciones globales y el módulo H¹_m.

Los conjuntos alcanzables se representan como enteros usados como bitset.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from math import ceil, comb
from typing import Iterable, Optional, Sequence

from core.errors import ParameterError
from core.homology import local_cohomology_dims
from core.ideals import monomial_curve_ideal

logger = logging.getLogger("ideals")


@dataclass(frozen=True)
class SumsetSpec:
    """Parámetros (m, n) y el conjunto base {0, 1, mn², mn(n+1), m(n+1)²}."""

    m: int
    n: int

    def __post_init__(self):
        if self.m < 1 or self.n < 1:
            raise ParameterError(f"SumsetSpec requiere m, n >= 1 (m={self.m}, n={self.n})")

    @property
    def base(self) -> tuple[int, ...]:
        m, n = self.m, self.n
        return (0, 1, m * n * n, m * n * (n + 1), m * (n + 1) ** 2)

    @property
    def top(self) -> int:
        return self.base[-1]

    @property
    def threshold(self) -> int:
        """Primer α donde vale la fórmula cerrada: mn + m + 2n."""
        return self.m * self.n + self.m + 2 * self.n

    @property
    def zero_threshold(self) -> int:
        """|S_α| = 0 desde α = mn² - 1."""
        return self.m * self.n * self.n - 1

    @property
    def constant(self) -> int:
        """C(m,2)(n+1)² + m(n²-1)."""
        m, n = self.m, self.n
        return comb(m, 2) * (n + 1) ** 2 + m * (n * n - 1)

    @property
    def curve_degrees(self) -> tuple[int, ...]:
        return self.base[1:]

    @property
    def length_bound(self) -> int:
        """Cota asintótica ⌈m²n⁵/4⌉ de la longitud de H¹_m; no vale para cada (m, n)."""
        return ceil(self.m**2 * self.n**5 / 4)


# =============================================================================
# BITSETS
# =============================================================================


def sumset_bits(base: Iterable[int], alpha: int) -> int:
    """Bitset de las sumas de exactamente α elementos (con repetición) de base."""
    if alpha < 0:
        raise ParameterError(f"α negativo: {alpha}")
    base = sorted(set(int(b) for b in base))
    if not base or base[0] < 0:
        raise ParameterError("El conjunto base debe ser no vacío y de enteros >= 0")
    reach = 1
    for _ in range(alpha):
        step = 0
        for b in base:
            step |= reach << b
        reach = step
    return reach


def sumset_size(base: Iterable[int], alpha: int) -> int:
    return bin(sumset_bits(base, alpha)).count("1")


def semigroup_bits(generators: Sequence[int], bound: int) -> int:
    """Bitset de los elementos <= bound del semigrupo generado."""
    gens = sorted(set(g for g in generators if g > 0))
    mask = (1 << (bound + 1)) - 1
    reach = 1
    while True:
        step = reach
        for g in gens:
            step |= reach << g
        step &= mask
        if step == reach:
            return reach
        reach = step


# =============================================================================
# CONTEOS
# =============================================================================


def s_alpha(spec: SumsetSpec, alpha: int) -> int:
    """
    |S_α| en forma cerrada: 0 si α >= mn² - 1 y si no
    (a+1)μ - C(a+1, 2)(m(2n+1) - 1) con μ = mn² - 1 - α, a = ⌊μ / (m(2n+1) - 1)⌋.
    """
    if alpha >= spec.zero_threshold:
        return 0
    step = spec.m * (2 * spec.n + 1) - 1
    mu = spec.zero_threshold - alpha
    a = mu // step
    return (a + 1) * mu - comb(a + 1, 2) * step


def sumset_count(spec: SumsetSpec, alpha: int, mode: str = "oracle") -> int:
    """
    |I(α)|, número de sumas distintas de α elementos del conjunto base.

    Args:
        mode: "oracle" (programación dinámica) o "closed" (fórmula cerrada)

    Raises:
        ParameterError: α negativo, modo desconocido o modo cerrado bajo el umbral
    """
    if alpha < 0:
        raise ParameterError(f"α negativo: {alpha}")
    if mode == "oracle":
        return sumset_size(spec.base, alpha)
    if mode != "closed":
        raise ParameterError(f"Modo desconocido: {mode}")
    if alpha < spec.threshold:
        raise ParameterError(f"La fórmula cerrada requiere α >= {spec.threshold} (α={alpha})")
    return spec.top * alpha - spec.constant - s_alpha(spec, alpha)


def sections_count(spec: SumsetSpec, alpha: int) -> int:
    """
    dim H⁰(O_C(α)): exponentes e en [0, Aα] con e en el semigrupo de los
    grados y Aα - e en el de los complementos A - a_i.
    """
    if alpha < 0:
        return 0
    bound = spec.top * alpha
    left = semigroup_bits(spec.curve_degrees, bound)
    right = semigroup_bits([spec.top - a for a in spec.base[:-1]], bound)
    mirrored = int(format(right, f"0{bound + 1}b")[::-1], 2)
    return bin(left & mirrored).count("1")


def h1_dimension(spec: SumsetSpec, alpha: int) -> int:
    """dim H¹_m(R/I_C)_α = secciones - |I(α)| (cero para α < 0)."""
    if alpha < 0:
        return 0
    return sections_count(spec, alpha) - sumset_count(spec, alpha)


def h1_length(spec: SumsetSpec) -> int:
    """Longitud total de H¹_m(R/I_C) (se anula desde α = mn² - 1)."""
    return sum(h1_dimension(spec, a) for a in range(spec.zero_threshold + 1))


@dataclass
class SAlphaRow:
    alpha: int
    s_alpha: int
    h1: int

    @property
    def equal(self) -> bool:
        return self.s_alpha == self.h1


@dataclass
class SAlphaReport:
    m: int
    n: int
    method: str
    rows: list[SAlphaRow]
    total_length: int
    length_bound: int

    @property
    def verdict(self) -> bool:
        return all(r.equal for r in self.rows)

    @property
    def meets_length_bound(self) -> bool:
        """Solo informativo: la cota es asintótica y falla en instancias pequeñas."""
        return self.total_length >= self.length_bound

    def to_dict(self) -> dict:
        return {
            "m": self.m,
            "n": self.n,
            "method": self.method,
            "rows": [{"alpha": r.alpha, "s_alpha": r.s_alpha, "h1": r.h1, "equal": r.equal} for r in self.rows],
            "total_length": self.total_length,
            "length_bound": self.length_bound,
            "meets_length_bound": self.meets_length_bound,
            "verdict": self.verdict,
        }


def s_alpha_vs_h1(
    m: int,
    n: int,
    alphas: Optional[Sequence[int]] = None,
    method: str = "sections",
) -> SAlphaReport:
    """
    Compara |S_α| con dim H¹_m(R/I_C)_α.

    Args:
        alphas: por defecto [umbral, mn² - 1]
        method: "sections" (conteo combinatorio) o "cohomology" (vía Ext)
    """
    spec = SumsetSpec(m, n)
    if alphas is None:
        alphas = range(spec.threshold, max(spec.threshold, spec.zero_threshold) + 1)
    alphas = list(alphas)
    if method == "sections":
        h1 = [h1_dimension(spec, a) for a in alphas]
    elif method == "cohomology":
        curve = monomial_curve_ideal(spec.curve_degrees)
        h1 = local_cohomology_dims(curve, 1, alphas)
    else:
        raise ParameterError(f"Método desconocido: {method}")
    rows = [SAlphaRow(a, s_alpha(spec, a), d) for a, d in zip(alphas, h1)]
    report = SAlphaReport(m, n, method, rows, h1_length(spec), spec.length_bound)
    logger.info(f"S_α vs H¹ en ({m},{n}): {sum(r.equal for r in rows)}/{len(rows)} iguales")
    return report
