"""
Constructores de los ideales, matrices y complejos de los ejemplos y familias
paramétricas, junto con los valores esperados de sus fórmulas cerradas.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from typing import Optional

from core.complexes import GradedComplex
from core.errors import ParameterError
from core.hilbert import HilbertSeries, hilbert_numerator
from core.homology import GradedMatrix
from core.ideals import (
    Ideal,
    eliminate,
    homogenize,
    intersect,
    monomial_curve_ideal,
    quotient,
)
from core.polynomial import Polynomial, RingContext

logger = logging.getLogger("ideals")


@dataclass
class FamilyInstance:
    """
    Ideales, complejos y valores esperados de un ejemplo o miembro de familia.

    `witnesses[nombre]` son los testigos de menores para el atajo del mcd en
    el criterio de Buchsbaum-Eisenbud del complejo del mismo nombre.
    """

    name: str
    ring: RingContext
    params: dict[str, int] = field(default_factory=dict)
    ideals: dict[str, Ideal] = field(default_factory=dict)
    matrices: dict[str, GradedMatrix] = field(default_factory=dict)
    complexes: dict[str, GradedComplex] = field(default_factory=dict)
    polynomials: dict[str, Polynomial] = field(default_factory=dict)
    expected: dict[str, int] = field(default_factory=dict)
    witnesses: dict[str, dict[int, list]] = field(default_factory=dict)

    def ideal(self, name: str) -> Ideal:
        try:
            return self.ideals[name]
        except KeyError:
            raise ParameterError(f"{self.name} no tiene el ideal {name}") from None


def _mono(ring: RingContext, coefficient=1, **powers: int) -> Polynomial:
    return ring.monomial([powers.get(v, 0) for v in ring.variables], coefficient)


def _named(ring: RingContext, name: str, gens) -> Ideal:
    return Ideal(ring, list(gens), name)


# =============================================================================
# INTERSECCIÓN COMPLETA Y CURVA (1,6,8)
# =============================================================================


def example21(characteristic: int = 0) -> FamilyInstance:
    """
    Intersección completa I de grados 3, 4 en k[x,y,z,t], su residual J y
    K = J + (x^4 z^2 - x y^4 t), con las matrices de sus resoluciones.
    """
    R = RingContext.create("x y z t", characteristic)
    p = R.parse
    I = _named(R, "I", [p("y^2*z - x^2*t"), p("z^4 - x*t^3")])
    J = _named(R, "J", list(I.generators) + [p("x*y^2*t^2 - x^2*z^3")])
    K = _named(R, "K", list(J.generators) + [p("x^4*z^2 - x*y^4*t")])

    residual = GradedMatrix(R, [["z^3", "t^3"], ["y^2", "x*t"], ["x", "z"]], [1, 2, 3], [4, 4])
    eta = GradedMatrix(R, [["x*t^2", "z^3"], ["x^2", "y^2"], ["z", "t"]], [3, 4, 5], [6, 6])
    gamma_j = GradedMatrix.row(R, [p("y^2*z - x^2*t"), p("x*t^3 - z^4"), p("x^2*z^3 - x*y^2*t^2")])
    gamma_k = GradedMatrix.row(
        R, [p("y^2*z - x^2*t"), p("z^4 - x*t^3"), p("x^2*z^3 - x*y^2*t^2"), p("x^4*z^2 - x*y^4*t")]
    )
    psi = GradedMatrix(
        R,
        [
            ["x*t^2", "-z^3", "x*y^2*t", "-x^2*z^2"],
            ["-x^2", "y^2", 0, 0],
            ["z", "-t", "-x^2", "y^2"],
            [0, 0, "z", "-t"],
        ],
        [3, 4, 5, 6],
        [6, 6, 7, 7],
    )
    phi = GradedMatrix(R, [["-y^2"], ["-x^2"], ["t"], ["z"]], [6, 6, 7, 7], [8])

    z = R.variable("z")
    instance = FamilyInstance("ex21", R)
    instance.ideals.update(
        I=I,
        J=J,
        K=K,
        zJ=_named(R, "zJ", [z * g for g in J.generators]),
        line_xz=_named(R, "(x,z)", [R.variable("x"), z]),
        line_zt=_named(R, "(z,t)", [z, R.variable("t")]),
    )
    instance.matrices.update(residual=residual, eta=eta, gamma_J=gamma_j, gamma_K=gamma_k, psi=psi, phi=phi)
    instance.complexes.update(J=GradedComplex([gamma_j, eta]), K=GradedComplex([gamma_k, psi, phi]))
    instance.polynomials.update(new_generator=p("x^4*z^2 - x*y^4*t"))
    instance.expected.update(reg_I=6, reg_J=5, reg_K=6, deg_K=10, reg_zJ=6)
    return instance


def example21_k_numerator() -> dict[int, int]:
    """Numerador de la serie de R/K: 1 - t^3 - t^4 - t^5 + t^6 + 2t^7 - t^8."""
    return {0: 1, 3: -1, 4: -1, 5: -1, 6: 1, 7: 2, 8: -1}


def example22(characteristic: int = 0) -> FamilyInstance:
    """Curva monomial (1,6,8), su resolución explícita y los ideales de comparación con zJ."""
    R = RingContext.create("x y z t", characteristic)
    p = R.parse
    b = monomial_curve_ideal((1, 6, 8), R.variables, characteristic)
    b = Ideal(R, [f.embed(R) for f in b.generators], "b")
    gamma = GradedMatrix.row(
        R,
        [p("y^2*z - x^2*t"), p("x*z^3 - y^2*t^2"), p("x*t^3 - z^4"), p("y^4*t - x^3*z^2"), p("x^5*z - y^6")],
    )
    psi = GradedMatrix(
        R,
        [
            ["t^2", "-y^2*t", "x*z^2", "z^3", "y^4", "x^3*z"],
            ["z", "x^2", "-y^2", "x*t", 0, 0],
            ["x", 0, 0, "y^2", 0, 0],
            [0, "z", "-t", 0, "x^2", "y^2"],
            [0, 0, 0, 0, "z", "t"],
        ],
        [3, 4, 4, 5, 6],
        [5, 6, 6, 6, 7, 7],
    )
    phi = GradedMatrix(
        R,
        [["y^2", 0], ["t", "y^2"], ["z", "x^2"], ["-x", 0], [0, "t"], [0, "-z"]],
        [5, 6, 6, 6, 7, 7],
        [7, 8],
    )
    z = R.variable("z")
    zJ = example21(characteristic).ideals["zJ"]
    instance = FamilyInstance("ex22", R)
    instance.ideals.update(
        b=b,
        gamma=_named(R, "gamma", gamma.entries[0]),
        z_cap_b=intersect(Ideal(R, [z]), b),
        z_times_b=_named(R, "z*b", [z * g for g in b.generators]),
        zJ=Ideal(R, [g.embed(R) for g in zJ.generators], "zJ"),
    )
    instance.ideals["z_cap_b"].name = "(z)∩b"
    instance.matrices.update(gamma=gamma, psi=psi, phi=phi)
    instance.complexes.update(b=GradedComplex([gamma, psi, phi]))
    instance.expected.update(reg_b=6, reg_z_cap_b=7, reg_zJ=6)
    return instance


EXAMPLE22_TWISTS = ((3, 4, 4, 5, 6), (5, 6, 6, 6, 7, 7), (7, 8))


# =============================================================================
# FAMILIA I_{m,n} EN P^3
# =============================================================================


def cm_family(m: int, n: int, characteristic: int = 0) -> FamilyInstance:
    """
    I_{m,n} = (x^m t - y^m z, z^{n+2} - x t^{n+1}) y el complejo
    R <- R^{n+2} <- R^{2n} <- R^{n-1} que resuelve la imagen de γ.

    Raises:
        ParameterError: si m < 1 o n < 1
    """
    if m < 1 or n < 1:
        raise ParameterError(f"cm_family requiere m, n >= 1 (m={m}, n={n})")
    R = RingContext.create("x y z t", characteristic)
    zero = R.zero()

    def f(i: int) -> Polynomial:
        return _mono(R, x=i * m, z=n + 2 - i) - _mono(R, x=1, y=i * m, t=n - i + 1)

    generators = [_mono(R, y=m, z=1) - _mono(R, x=m, t=1)] + [f(i) for i in range(n + 1)]
    gamma = GradedMatrix.row(R, generators)

    # ψ: fila 0 con los bloques B_i, bloque de columnas i con L_m en la fila
    # de f_{i-1} y L en la de f_i
    rows = [[zero] * (2 * n) for _ in range(n + 2)]
    source: list[int] = []
    for i in range(1, n + 1):
        a, b = 2 * (i - 1), 2 * (i - 1) + 1
        rows[0][a] = _mono(R, x=1, y=(i - 1) * m, t=n - i + 1)
        rows[0][b] = _mono(R, -1, x=(i - 1) * m, z=n + 2 - i)
        rows[i][a], rows[i][b] = _mono(R, -1, x=m), _mono(R, y=m)
        rows[i + 1][a], rows[i + 1][b] = _mono(R, z=1), _mono(R, -1, t=1)
        source += [m * i + n - i + 3] * 2
    psi = GradedMatrix(R, rows, gamma.source.twists, source)

    maps = [gamma, psi]
    if n >= 2:
        # φ: columna k con C_m en el bloque de filas k y C en el k+1
        cols = [[zero] * (n - 1) for _ in range(2 * n)]
        twists = []
        for k in range(1, n):
            i = k + 1
            cols[2 * (k - 1)][k - 1] = _mono(R, -1, y=m)
            cols[2 * (k - 1) + 1][k - 1] = _mono(R, -1, x=m)
            cols[2 * k][k - 1] = _mono(R, t=1)
            cols[2 * k + 1][k - 1] = _mono(R, z=1)
            twists.append(m * i + n - i + 4)
        maps.append(GradedMatrix(R, cols, source, twists))

    I = _named(R, f"I_{m},{n}", [_mono(R, x=m, t=1) - _mono(R, y=m, z=1), f(0)])
    image = _named(R, f"Im(gamma_{m},{n})", generators)
    curve_degrees = (1, m * (n + 1), m * (n + 2))
    curve = monomial_curve_ideal(curve_degrees, R.variables, characteristic)
    curve = Ideal(R, [g.embed(R) for g in curve.generators], f"curve{curve_degrees}")
    x, z, t = R.variable("x"), R.variable("z"), R.variable("t")
    lines = intersect(intersect(curve, Ideal(R, [x, z])), Ideal(R, [z, t]))
    lines.name = "I_C∩(x,z)∩(z,t)"

    instance = FamilyInstance(f"cm({m},{n})", R, {"m": m, "n": n})
    instance.ideals.update(
        I=I,
        image=image,
        curve=curve,
        curve_lines=lines,
        zI=_named(R, "zI", [z * g for g in I.generators]),
        zI_alt=_named(R, "z(I:(xt,z))", [z * g for g in quotient(I, Ideal(R, [x * t, z])).generators]),
    )
    instance.matrices.update(gamma=gamma, psi=psi)
    if n >= 2:
        instance.matrices["phi"] = maps[2]
    instance.complexes["gamma"] = GradedComplex(maps)
    witness_a = _mono(R, z=n) * f(0)
    witness_b = _mono(R, t=n - 1) * (_mono(R, x=m, t=1) - _mono(R, y=m, z=1))
    instance.polynomials.update(witness_a=witness_a, witness_b=witness_b)
    instance.witnesses["gamma"] = {2: [witness_a, witness_b]}
    instance.expected.update(
        reg_I=m + n + 2,
        reg_image=m * n + 2,
        deg_image=m * (n + 2) + 2,
        reg_zI=m + n + 3,
        reg_zI_alt=m + n + 2,
    )
    return instance


# =============================================================================
# FAMILIA J_{m,n} EN P^4
# =============================================================================


def p4_family(m: int, n: int, characteristic: int = 0) -> FamilyInstance:
    """
    𝔍, J_{m,n} = 𝔍 + (y^m v^n - x^{m-1} z u^{n-1} v) y la curva monomial
    (1, mn², mn(n+1), m(n+1)²) en k[x,y,z,u,v].

    Raises:
        ParameterError: si m < 1 o n < 3
    """
    if m < 1 or n < 3:
        raise ParameterError(f"p4_family requiere m >= 1, n >= 3 (m={m}, n={n})")
    R = RingContext.create("x y z u v", characteristic)
    x, z, u, v = (R.variable(c) for c in "xzuv")
    frak_j = _named(
        R,
        "frakJ",
        [
            _mono(R, y=m, u=2) - _mono(R, x=m, z=1, v=1),
            _mono(R, z=n + 1) - _mono(R, x=1, u=n),
            _mono(R, u=n + 1) - _mono(R, x=1, v=n),
        ],
    )
    extra = _mono(R, y=m, v=n) - _mono(R, x=m - 1, z=1, u=n - 1, v=1)
    J = _named(R, f"J_{m},{n}", list(frak_j.generators) + [extra])
    degrees = (1, m * n * n, m * n * (n + 1), m * (n + 1) ** 2)
    curve = monomial_curve_ideal(degrees, R.variables, characteristic)
    curve = Ideal(R, [g.embed(R) for g in curve.generators], f"curve{degrees}")
    L = _named(R, "L", [z, u, v])
    e1 = m * n * n
    e2 = m * (n * n - 2 * n - 1)
    m1 = _mono(R, y=e1) - _mono(R, x=e1 - 1, z=1)
    m2 = _mono(R, y=e2, v=1) - _mono(R, x=e2 - 1, z=2)

    instance = FamilyInstance(f"p4({m},{n})", R, {"m": m, "n": n})
    instance.ideals.update(
        frakJ=frak_j,
        J=J,
        colon_ideal=_named(R, "(x,z^(n+1),u^2)", [x, _mono(R, z=n + 1), _mono(R, u=2)]),
        curve=curve,
        L=L,
        curve_cap_L=intersect(curve, L),
        zJ=_named(R, "zJ", [z * g for g in J.generators]),
        zJ_alt=_named(R, "z(J:(u,v,z))", [z * g for g in quotient(J, L).generators]),
        xzu=_named(R, "(x,z,u)", [x, z, u]),
    )
    instance.ideals["curve_cap_L"].name = "I_C∩L"
    instance.polynomials.update(M1=m1, M2=m2, extra=extra)
    mu = 2 * n * (n + 1)
    instance.expected.update(
        reg_J=m + 2 * n + 1,
        reg_frakJ=m + 2 * n + 2,
        deg_J=(m + 2) * (n + 1) ** 2 - 2 * (n + 1),
        deg_curve=m * (n + 1) ** 2,
        mu=mu,
        reg_curve=m * n * n,
        reg_radical=e2 + 1,
        reg_zJ=m + 2 * n + 2,
        reg_zJ_alt=m + 2 * n + 1,
    )
    return instance


def hilbert_identity_mismatches(instance: FamilyInstance, upto: int = 30) -> list[int]:
    """
    Grados d <= upto donde falla
    H_{R/(I_C ∩ L)} = H_{R/I_C} + 1/(1-t)^2 - (1 - t^{mn²})/(1-t)^2.
    """
    m, n = instance.params["m"], instance.params["n"]
    lhs = hilbert_numerator(instance.ideal("curve_cap_L"))
    plane = HilbertSeries((1,), 2)
    cut = HilbertSeries.from_terms({0: 1, m * n * n: -1}, 2)
    rhs = hilbert_numerator(instance.ideal("curve")) + plane - cut
    return [d for d in range(upto + 1) if lhs.coefficient(d) != rhs.coefficient(d)]


# =============================================================================
# SUPERFICIES
# =============================================================================


SURFACE_PARAMETRIZATIONS: dict[str, tuple[tuple[int, int], ...]] = {
    "ex34": ((5, 0), (0, 6), (4, 1), (1, 2), (2, 5)),
    "ex35": ((12, 0), (0, 8), (1, 7), (5, 1), (9, 4)),
}


def surface_ideal(which: str, characteristic: int = 101, name: Optional[str] = None) -> Ideal:
    """
    Núcleo homogeneizado (X0 primera) de k[X1..X5] -> k[a,b], X_i -> a^p b^q.

    Raises:
        ParameterError: superficie desconocida o característica distinta de 0 y 101
    """
    if which not in SURFACE_PARAMETRIZATIONS:
        raise ParameterError(f"Superficie desconocida: {which}")
    if characteristic not in (0, 101):
        raise ParameterError(f"Característica no soportada para superficies: {characteristic}")
    names = [f"X{i}" for i in range(1, 6)]
    R = RingContext.create(["a", "b"] + names, characteristic)
    gens = [
        R.variable(x) - _mono(R, a=pa, b=pb)
        for x, (pa, pb) in zip(names, SURFACE_PARAMETRIZATIONS[which])
    ]
    affine = eliminate(Ideal(R, gens), ["a", "b"])
    logger.info(f"Superficie {which}: {len(affine.generators)} generadores afines")
    result = homogenize(affine, "X0", position="first")
    result.name = name or {"ex34": "p", "ex35": "q"}[which]
    return result
