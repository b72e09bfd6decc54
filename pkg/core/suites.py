"""
Suites de comprobación de los ejemplos: cada suite es una lista de
comprobaciones con nombre que devuelven (esperado, obtenido).
"""

from __future__ import annotations

import json
import logging
from dataclasses import dataclass, field
from typing import Any, Callable, Optional

from core.complexes import GradedComplex, buchsbaum_eisenbud, check_composition_zero
from core.errors import ParameterError
from core.families import (
    EXAMPLE22_TWISTS,
    example21,
    example21_k_numerator,
    example22,
    cm_family,
    hilbert_identity_mismatches,
    p4_family,
    surface_ideal,
)
from core.hilbert import degree, hilbert_function, hilbert_numerator
from core.homology import (
    depth_of_quotient,
    ext_cyclic,
    local_cohomology_dims,
    minimal_free_resolution,
    regularity,
    socle_degrees,
)
from core.ideals import (
    Ideal,
    is_minimal_generator,
    is_saturated,
    monomial_curve_ideal,
    minors_ideal,
    quotient,
    same_radical,
    truncate_ideal,
)
from core.sumset import SumsetSpec, h1_length, s_alpha_vs_h1, sumset_count
from utils.process import CheckOutcome, CheckRunner

logger = logging.getLogger("suites")

Check = tuple[str, Callable[[], tuple[Any, Any]]]


@dataclass(frozen=True)
class SuiteInfo:
    name: str
    description: str
    budget: Optional[float]
    slow: bool = False


SUITES: dict[str, SuiteInfo] = {
    "ex21": SuiteInfo("ex21", "Intersección completa, residual y regularidades 6, 5, 6", 30),
    "ex22": SuiteInfo("ex22", "Curva (1,6,8) frente a zJ", 60),
    "lemma24": SuiteInfo("lemma24", "Familia I_{m,n} y su complejo explícito", 300),
    "ex25": SuiteInfo("ex25", "Familia J_{m,n} en P^4 en (1,3)", 600),
    "appendix": SuiteInfo("appendix", "Conteo de sumas y módulo de Hartshorne-Rao", 60),
    "ex34": SuiteInfo("ex34", "Zócalo de H^2_m(ω) de la superficie p", 900),
    "ex35": SuiteInfo("ex35", "Superficie q y su truncación (lenta)", None, slow=True),
}

LEMMA24_PARAMETERS = ((1, 1), (1, 2), (2, 1), (2, 2), (3, 2))


def _twists_of(ideal: Ideal) -> list[list[int]]:
    res = minimal_free_resolution(ideal)
    return [sorted(m.twists) for m in res.modules[1:]]


def _complex_checks(prefix: str, complex_: GradedComplex, witnesses=None) -> list[Check]:
    return [
        (f"{prefix}.composition_zero", lambda: (True, check_composition_zero(complex_))),
        (f"{prefix}.buchsbaum_eisenbud", lambda: (True, buchsbaum_eisenbud(complex_, witnesses).verdict)),
    ]


# =============================================================================
# SUITES
# =============================================================================


def suite_ex21() -> list[Check]:
    ex = example21()
    I, J, K = ex.ideal("I"), ex.ideal("J"), ex.ideal("K")
    ring = ex.ring
    maximal = Ideal(ring, ring.gens())
    zt = ex.ideal("line_zt")
    checks: list[Check] = [
        ("ex21.colon", lambda: (True, quotient(I, zt).is_equal(J))),
        ("ex21.regularity", lambda: ([6, 5, 6], [regularity(I), regularity(J), regularity(K)])),
        ("ex21.betti_twists", lambda: (
            [[[3, 4, 5], [6, 6]], [[3, 4, 5, 6], [6, 6, 7, 7], [8]]],
            [_twists_of(J), _twists_of(K)],
        )),
        ("ex21.same_radical", lambda: ([True, True], [same_radical(I, J), same_radical(J, K)])),
        ("ex21.square_in_J", lambda: (True, J.contains(ex.polynomials["new_generator"] ** 2))),
        ("ex21.K_saturated", lambda: (True, is_saturated(K, maximal))),
        ("ex21.hilbert_K", lambda: (
            [example21_k_numerator(), 10],
            [hilbert_numerator(K).terms(), degree(K)],
        )),
        ("ex21.residual_minors", lambda: (
            [True, True],
            [
                minors_ideal(ex.matrices["residual"].entries, 2, ring).is_equal(quotient(I, ex.ideal("line_xz"))),
                minors_ideal(ex.matrices["eta"].entries, 2, ring).is_equal(J),
            ],
        )),
    ]
    return checks + _complex_checks("ex21.J", ex.complexes["J"]) + _complex_checks("ex21.K", ex.complexes["K"])


def suite_ex22() -> list[Check]:
    ex = example22()
    b = ex.ideal("b")
    checks = [
        ("ex22.betti_twists", lambda: ([list(t) for t in EXAMPLE22_TWISTS], _twists_of(b))),
        ("ex22.reg_b", lambda: (6, regularity(b))),
        ("ex22.z_cap_b", lambda: (True, ex.ideal("z_cap_b").is_equal(ex.ideal("z_times_b")))),
        ("ex22.reg_z_cap_b", lambda: (7, regularity(ex.ideal("z_cap_b")))),
        ("ex22.reg_zJ", lambda: (6, regularity(ex.ideal("zJ")))),
        ("ex22.gamma_is_b", lambda: (True, ex.ideal("gamma").is_equal(b))),
    ]
    return checks + _complex_checks("ex22", ex.complexes["b"])


def suite_lemma24(parameters=LEMMA24_PARAMETERS) -> list[Check]:
    checks: list[Check] = []
    for m, n in parameters:
        fam = cm_family(m, n)
        tag = f"lemma24.{m}_{n}"
        e = fam.expected
        image = fam.ideal("image")
        checks += [
            (f"{tag}.reg_I", lambda fam=fam, e=e: (e["reg_I"], regularity(fam.ideal("I")))),
            (f"{tag}.image_is_curve_lines", lambda fam=fam, image=image: (
                True, image.is_equal(fam.ideal("curve_lines"))
            )),
            (f"{tag}.reg_image", lambda e=e, image=image: (e["reg_image"], regularity(image))),
            (f"{tag}.deg_image", lambda e=e, image=image: (e["deg_image"], degree(image))),
            (f"{tag}.same_radical", lambda fam=fam, image=image: (True, same_radical(fam.ideal("I"), image))),
            (f"{tag}.reg_zI", lambda fam=fam, e=e: (e["reg_zI"], regularity(fam.ideal("zI")))),
            (f"{tag}.reg_zI_alt", lambda fam=fam, e=e: (e["reg_zI_alt"], regularity(fam.ideal("zI_alt")))),
        ]
        checks += _complex_checks(tag, fam.complexes["gamma"], fam.witnesses["gamma"])
    return checks


def suite_ex25(m: int = 1, n: int = 3) -> list[Check]:
    fam = p4_family(m, n)
    e = fam.expected
    frak_j, J, curve = fam.ideal("frakJ"), fam.ideal("J"), fam.ideal("curve")
    cap = fam.ideal("curve_cap_L")
    tag = f"ex25.{m}_{n}"
    return [
        (f"{tag}.colon", lambda: (True, quotient(frak_j, fam.ideal("colon_ideal")).is_equal(J))),
        (f"{tag}.reg_J", lambda: ([e["reg_J"], e["reg_frakJ"]], [regularity(J), regularity(frak_j)])),
        (f"{tag}.deg_J", lambda: (e["deg_J"], degree(J))),
        (f"{tag}.deg_J_multiplicity", lambda: (e["deg_curve"] + e["mu"], degree(J))),
        (f"{tag}.reg_curve", lambda: (e["reg_curve"], regularity(curve))),
        (f"{tag}.minimal_generators", lambda: (
            [True, True],
            [is_minimal_generator(fam.polynomials["M1"], curve), is_minimal_generator(fam.polynomials["M2"], curve)],
        )),
        (f"{tag}.reg_curve_cap_L", lambda: (e["reg_radical"], regularity(cap))),
        (f"{tag}.same_radical", lambda: (True, same_radical(J, cap))),
        (f"{tag}.hilbert_identity", lambda: ([], hilbert_identity_mismatches(fam, 30))),
        (f"{tag}.containments", lambda: (
            [True, False, True],
            [
                fam.ideal("colon_ideal").contains_ideal(frak_j),
                fam.ideal("xzu").contains_ideal(J),
                curve.contains_ideal(frak_j),
            ],
        )),
        (f"{tag}.reg_zJ", lambda: (e["reg_zJ"], regularity(fam.ideal("zJ")))),
        (f"{tag}.reg_zJ_alt", lambda: (e["reg_zJ_alt"], regularity(fam.ideal("zJ_alt")))),
    ]


def suite_appendix() -> list[Check]:
    checks: list[Check] = []
    for m, n in ((1, 3), (1, 4), (2, 3)):
        spec = SumsetSpec(m, n)
        alphas = range(spec.threshold, spec.threshold + 26)
        checks.append((
            f"appendix.{m}_{n}.oracle_vs_closed",
            lambda spec=spec, alphas=alphas: (
                [sumset_count(spec, a, "oracle") for a in alphas],
                [sumset_count(spec, a, "closed") for a in alphas],
            ),
        ))
        start = max(spec.zero_threshold, spec.threshold)
        tail = range(start, start + 5)
        checks.append((
            f"appendix.{m}_{n}.s_alpha_zero",
            lambda spec=spec, tail=tail: (
                [0] * len(tail),
                [spec.top * a - spec.constant - sumset_count(spec, a) for a in tail],
            ),
        ))

    spec13 = SumsetSpec(1, 3)

    def hilbert_vs_oracle():
        curve = monomial_curve_ideal(spec13.curve_degrees)
        return (
            [sumset_count(spec13, a) for a in range(26)],
            [hilbert_function(curve, a) for a in range(26)],
        )

    def s_alpha_cohomology():
        report = s_alpha_vs_h1(1, 4, [13, 14, 15], method="cohomology")
        return [r.s_alpha for r in report.rows], [r.h1 for r in report.rows]

    def s_alpha_sections():
        report = s_alpha_vs_h1(1, 4, [13, 14, 15], method="sections")
        return [r.s_alpha for r in report.rows], [r.h1 for r in report.rows]

    def h1_lengths():
        lengths = []
        for spec in (spec13, SumsetSpec(1, 4)):
            length = h1_length(spec)
            logger.info(f"H¹ en ({spec.m},{spec.n}): longitud {length}, cota asintótica {spec.length_bound}")
            lengths.append(length)
        return [31, 135], lengths

    checks += [
        ("appendix.1_3.hilbert_vs_oracle", hilbert_vs_oracle),
        ("appendix.1_4.s_alpha_vs_h1", s_alpha_cohomology),
        ("appendix.1_4.s_alpha_vs_sections", s_alpha_sections),
        ("appendix.h1_length", h1_lengths),
    ]
    return checks


def suite_ex34(characteristic: int = 101) -> list[Check]:
    cache: dict[str, Any] = {}

    def prime() -> Ideal:
        if "p" not in cache:
            cache["p"] = surface_ideal("ex34", characteristic)
        return cache["p"]

    return [
        ("ex34.socle", lambda: ([-1, -1, 0, 1], socle_degrees(ext_cyclic(prime(), 4, -6)))),
        ("ex34.h2_omega_degree_1", lambda: ([1], local_cohomology_dims(ext_cyclic(prime(), 3, -6), 2, [1]))),
    ]


def suite_ex35(characteristic: int = 101) -> list[Check]:
    cache: dict[str, Any] = {}

    def q() -> Ideal:
        if "q" not in cache:
            cache["q"] = surface_ideal("ex35", characteristic)
        return cache["q"]

    def truncated() -> Ideal:
        if "t" not in cache:
            cache["t"] = truncate_ideal(q(), 21)
        return cache["t"]

    return [
        ("ex35.reg_q", lambda: (32, regularity(q()))),
        ("ex35.reg_omega", lambda: (7, regularity(ext_cyclic(q(), 3, -6)))),
        ("ex35.socle_degree_5", lambda: (True, 5 in socle_degrees(ext_cyclic(q(), 4, -6)))),
        ("ex35.reg_truncated", lambda: (24, regularity(truncated()))),
        ("ex35.depths", lambda: ([1, 2], [depth_of_quotient(q()), depth_of_quotient(truncated())])),
    ]


_BUILDERS: dict[str, Callable[[], list[Check]]] = {
    "ex21": suite_ex21,
    "ex22": suite_ex22,
    "lemma24": suite_lemma24,
    "ex25": suite_ex25,
    "appendix": suite_appendix,
    "ex34": suite_ex34,
    "ex35": suite_ex35,
}


# =============================================================================
# INFORMES
# =============================================================================


def _plain(value: Any) -> Any:
    """Convierte tuplas y claves enteras en tipos JSON estables."""
    if isinstance(value, dict):
        return {str(k): _plain(v) for k, v in sorted(value.items())}
    if isinstance(value, (list, tuple)):
        return [_plain(v) for v in value]
    return value


@dataclass
class SuiteReport:
    suite: str
    checks: list[CheckOutcome] = field(default_factory=list)
    over_budget: bool = False

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def to_dict(self) -> dict:
        return {
            "suite": self.suite,
            "passed": self.passed,
            "over_budget": self.over_budget,
            "checks": [
                {
                    "name": c.name,
                    "passed": c.passed,
                    "expected": _plain(c.expected),
                    "actual": _plain(c.actual),
                    "error": c.error,
                }
                for c in self.checks
            ],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2, sort_keys=True, ensure_ascii=False)

    def to_text(self) -> str:
        lines = [f"suite {self.suite}: {'PASA' if self.passed else 'FALLA'}"]
        for c in self.checks:
            status = "ok   " if c.passed else "FALLA"
            detail = c.error if c.error else f"esperado {_plain(c.expected)}, obtenido {_plain(c.actual)}"
            lines.append(f"  [{status}] {c.name}: {detail}")
        return "\n".join(lines)


def suite_checks(name: str) -> list[Check]:
    if name not in _BUILDERS:
        raise ParameterError(f"Suite desconocida: {name} (disponibles: {', '.join(SUITES)})")
    return _BUILDERS[name]()


def run_suite(
    name: str,
    jobs: int = 1,
    timeout_factor: float = 1.0,
    progress: Optional[Callable[[str], None]] = None,
) -> SuiteReport:
    """
    Ejecuta una suite y devuelve el informe con los resultados ordenados por nombre.

    Raises:
        ParameterError: si la suite no existe
    """
    checks = suite_checks(name)
    info = SUITES[name]
    budget = info.budget * timeout_factor if info.budget is not None else None
    logger.info(f"Suite {name}: {len(checks)} comprobaciones")
    results, over = CheckRunner(jobs, progress).run(checks, name, budget)
    return SuiteReport(name, results, over)


def suite_names(include_slow: bool = False) -> list[str]:
    return [name for name, info in SUITES.items() if include_slow or not info.slow]
