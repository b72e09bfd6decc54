#!/usr/bin/env python3
"""
regcheck - verificación exacta de regularidad de Castelnuovo-Mumford.

Códigos de salida: 0 correcto, 1 falla una comprobación matemática,
2 error de entrada.
"""

import argparse
import json
import logging
import sys
from pathlib import Path
from typing import Any, Callable, Optional

# Agregar directorio raíz al path
sys.path.insert(0, str(Path(__file__).parent))

from config.settings import Settings, get_settings
from core.complexes import GradedComplex, buchsbaum_eisenbud, check_composition_zero
from core.errors import ParameterError, RegcheckError
from core.families import cm_family, example21, example22, p4_family, surface_ideal
from core.hilbert import degree, dimension, hilbert_numerator
from core.homology import (
    depth_of_quotient,
    ext_cyclic,
    local_cohomology_dims,
    minimal_free_resolution,
    regularity,
    socle_degrees,
)
from core.idealfile import IdealFile, bundle_text, load_ideal_file
from core.ideals import (
    Ideal,
    eliminate,
    intersect,
    monomial_curve_ideal,
    quotient,
    same_radical,
    saturate_with_steps,
)
from core.suites import SUITES, run_suite, suite_names
from core.sumset import SumsetSpec, sumset_count
from utils.logger import LogManager
from utils.ui import (
    Colors,
    Table,
    format_duration,
    log_error,
    log_info,
    log_step,
    log_success,
    log_warning,
)

EXIT_OK = 0
EXIT_CHECK_FAILED = 1
EXIT_INPUT_ERROR = 2


class Result:
    """Salida de un subcomando: texto, carga JSON y código de salida."""

    def __init__(self, text: str, payload: Any, code: int = EXIT_OK):
        self.text = text
        self.payload = payload
        self.code = code


def _bool(value: bool) -> str:
    return "true" if value else "false"


class RegcheckCLI:
    """Front end de línea de comandos."""

    def __init__(self, args: argparse.Namespace, settings: Optional[Settings] = None):
        self.args = args
        self.settings = settings or get_settings()

        self.log_manager = LogManager(self.settings, args.log_level)
        self.logger = self.log_manager.get("main")

        self.handlers: dict[str, Callable[[], Result]] = {
            "gb": self.cmd_gb,
            "member": self.cmd_member,
            "quotient": self.cmd_binary,
            "intersect": self.cmd_binary,
            "saturate": self.cmd_binary,
            "same-radical": self.cmd_same_radical,
            "eliminate": self.cmd_eliminate,
            "curve": self.cmd_curve,
            "resolve": self.cmd_resolve,
            "betti": self.cmd_betti,
            "reg": self.cmd_invariant,
            "depth": self.cmd_invariant,
            "dim": self.cmd_invariant,
            "deg": self.cmd_invariant,
            "hilbert": self.cmd_hilbert,
            "verify-complex": self.cmd_verify_complex,
            "ext": self.cmd_ext,
            "socle": self.cmd_socle,
            "lc-dims": self.cmd_lc_dims,
            "family": self.cmd_family,
            "appendix-count": self.cmd_appendix_count,
            "suite": self.cmd_suite,
        }

    # =========================================================================
    # UTILIDADES
    # =========================================================================

    def _characteristic(self) -> int:
        return self.args.char if self.args.char is not None else self.settings.default_characteristic

    def _load(self) -> IdealFile:
        return load_ideal_file(
            self.args.ideal,
            characteristic=self.args.char,
            order=self.args.order,
            default_characteristic=self.settings.default_characteristic,
            default_order=self.settings.default_order,
        )

    def _ideal(self, name: Optional[str] = None) -> Ideal:
        return self._load().ideal(name if name is not None else getattr(self.args, "name", None))

    def _progress(self) -> Optional[Callable]:
        if not self.settings.progress:
            return None

        def report(level: int, pending: int):
            log_info(f"resolución: nivel {level}, {pending} pares")

        return report

    @staticmethod
    def _ideal_lines(name: str, ideal: Ideal) -> Result:
        gens = ideal.minimal_generators() if ideal.is_homogeneous() else list(ideal.groebner().elements)
        text = bundle_text(ideal.ring, {name: Ideal(ideal.ring, gens, name)})
        payload = {
            "ring": list(ideal.ring.variables),
            "field": str(ideal.ring.field),
            "name": name,
            "generators": [g.to_text() for g in gens],
        }
        return Result(text.rstrip("\n"), payload)

    # =========================================================================
    # SUBCOMANDOS
    # =========================================================================

    def cmd_gb(self) -> Result:
        ideal = self._ideal()
        basis = ideal.groebner()
        elements = [g.to_text() for g in basis.elements]
        payload = {"order": str(basis.order), "basis": elements}
        return Result("\n".join(elements), payload)

    def cmd_member(self) -> Result:
        ideal = self._ideal()
        f = ideal.ring.parse(self.args.poly)
        member = ideal.contains(f)
        code = EXIT_CHECK_FAILED if self.args.check and not member else EXIT_OK
        return Result(f"member = {_bool(member)}", {"member": member}, code)

    def cmd_binary(self) -> Result:
        data = self._load()
        a, b = data.ideal(self.args.name), data.ideal(self.args.with_)
        command = self.args.command
        if command == "quotient":
            result = quotient(a, b)
            return self._ideal_lines("quotient", result)
        if command == "intersect":
            return self._ideal_lines("intersection", intersect(a, b))
        result, steps = saturate_with_steps(a, b)
        out = self._ideal_lines("saturation", result)
        out.payload["steps"] = steps
        return out

    def cmd_same_radical(self) -> Result:
        data = self._load()
        value = same_radical(data.ideal(self.args.name), data.ideal(self.args.with_))
        return Result(f"same_radical = {_bool(value)}", {"same_radical": value})

    def cmd_eliminate(self) -> Result:
        return self._ideal_lines("eliminated", eliminate(self._ideal(), self.args.vars))

    def cmd_curve(self) -> Result:
        ideal = monomial_curve_ideal(self.args.degrees, self.args.vars, self._characteristic())
        return self._ideal_lines("curve", ideal)

    def cmd_resolve(self) -> Result:
        res = minimal_free_resolution(self._ideal(), self._progress())
        lines = [f"F{k}: {' '.join(str(d) for d in m.twists)}" for k, m in enumerate(res.modules)]
        payload = {"twists": [list(m.twists) for m in res.modules]}
        return Result("\n".join(lines), payload)

    def cmd_betti(self) -> Result:
        table = minimal_free_resolution(self._ideal(), self._progress()).betti()
        return Result(str(table), table.to_dict())

    def cmd_invariant(self) -> Result:
        ideal = self._ideal()
        command = self.args.command
        if command == "reg":
            value = regularity(ideal)
        elif command == "depth":
            value = depth_of_quotient(ideal)
        elif command == "dim":
            value = dimension(ideal)
        else:
            value = degree(ideal)
        return Result(f"{command} = {value}", {command: value})

    def cmd_hilbert(self) -> Result:
        series = hilbert_numerator(self._ideal())
        lines = [str(series)]
        payload: dict[str, Any] = series.to_dict()
        if self.args.upto is not None:
            values = series.coefficients(0, self.args.upto)
            lines += [f"HF({d}) = {v}" for d, v in enumerate(values)]
            payload["values"] = values
        return Result("\n".join(lines), payload)

    def cmd_verify_complex(self) -> Result:
        data = self._load()
        complex_ = GradedComplex([data.matrix(name) for name in self.args.matrices])
        composition = check_composition_zero(complex_)
        report = buchsbaum_eisenbud(complex_)
        ok = composition and report.verdict
        text = f"composition_zero = {_bool(composition)}\n{report.to_text()}"
        payload = {"composition_zero": composition, "buchsbaum_eisenbud": report.to_dict()}
        return Result(text, payload, EXIT_OK if ok else EXIT_CHECK_FAILED)

    def cmd_ext(self) -> Result:
        module = ext_cyclic(self._ideal(), self.args.q, self.args.twist)
        series = module.hilbert_series()
        lines = [
            f"generators: {' '.join(str(d) for d in module.twists)}",
            f"relations:\n{module.relations}" if module.relations.ncols else "relations: none",
            f"hilbert: {series}",
        ]
        payload = {
            "generators": list(module.twists),
            "relations": module.relations.to_dict(),
            "hilbert_numerator": {str(k): v for k, v in sorted(series.terms().items())},
        }
        return Result("\n".join(lines), payload)

    def cmd_socle(self) -> Result:
        ideal = self._ideal()
        q = self.args.q if self.args.q is not None else ideal.ring.nvars - 2
        degrees = socle_degrees(ext_cyclic(ideal, q))
        return Result(f"socle = {degrees}", {"q": q, "socle": degrees})

    def cmd_lc_dims(self) -> Result:
        alphas = list(range(self.args.from_, self.args.to + 1))
        dims = local_cohomology_dims(self._ideal(), self.args.i, alphas)
        lines = [f"H^{self.args.i}_{a} = {d}" for a, d in zip(alphas, dims)]
        return Result("\n".join(lines), {"i": self.args.i, "dims": dict(zip(map(str, alphas), dims))})

    def cmd_family(self) -> Result:
        which, params = self.args.which, self.args.params
        char = self._characteristic()
        if which in ("cm", "p4"):
            if len(params) != 2:
                raise ParameterError(f"family {which} necesita M N")
            m, n = (int(p) for p in params)
            instance = (cm_family if which == "cm" else p4_family)(m, n, char)
        elif which == "ex21":
            instance = example21(char)
        elif which == "ex22":
            instance = example22(char)
        else:
            if len(params) != 1:
                raise ParameterError("family surface necesita ex34 o ex35")
            surface_char = self.args.char if self.args.char is not None else self.settings.surface_characteristic
            ideal = surface_ideal(params[0], surface_char)
            return self._ideal_lines(ideal.name, ideal)
        ideals = {name: Ideal(instance.ring, [g.embed(instance.ring) for g in i.generators], name)
                  for name, i in instance.ideals.items()}
        text = bundle_text(instance.ring, ideals, instance.matrices)
        payload = {
            "family": instance.name,
            "expected": instance.expected,
            "ideals": {name: [g.to_text() for g in i.generators] for name, i in ideals.items()},
        }
        return Result(text.rstrip("\n"), payload)

    def cmd_appendix_count(self) -> Result:
        spec = SumsetSpec(self.args.m, self.args.n)
        modes = ["oracle", "closed"] if self.args.mode == "both" else [self.args.mode]
        values = {mode: sumset_count(spec, self.args.alpha, mode) for mode in modes}
        text = "\n".join(f"{mode} = {v}" for mode, v in values.items())
        code = EXIT_OK
        if len(values) == 2 and len(set(values.values())) != 1:
            code = EXIT_CHECK_FAILED
        return Result(text, {"alpha": self.args.alpha, **values}, code)

    def cmd_suite(self) -> Result:
        name = self.args.suite
        if name == "list":
            table = Table(["suite", "presupuesto", "descripción"])
            for info in SUITES.values():
                budget = "lenta" if info.budget is None else format_duration(info.budget)
                table.add_row([info.name, budget, info.description])
            payload = {n: {"description": i.description, "slow": i.slow} for n, i in SUITES.items()}
            return Result(table.render(), payload)

        include_slow = self.args.include_slow or self.settings.include_slow
        names = suite_names(include_slow) if name == "all" else [name]
        jobs = self.args.jobs or self.settings.suite_jobs
        progress = log_info if self.settings.progress else None
        reports = []
        for suite in names:
            log_step(f"Suite {suite}...")
            report = run_suite(suite, jobs, self.settings.suite_timeout_factor, progress)
            if report.over_budget:
                log_warning(f"Suite {suite}: presupuesto superado")
            reports.append(report)
        ok = all(r.passed for r in reports)
        text = "\n".join(r.to_text() for r in reports)
        payload = [r.to_dict() for r in reports] if name == "all" else reports[0].to_dict()
        return Result(text, payload, EXIT_OK if ok else EXIT_CHECK_FAILED)

    # =========================================================================
    # EJECUCIÓN
    # =========================================================================

    def run(self) -> int:
        result = self.handlers[self.args.command]()
        if self.args.json:
            output = json.dumps(result.payload, indent=2, sort_keys=True, ensure_ascii=False)
        else:
            output = result.text
        if self.args.out:
            Path(self.args.out).write_text(output + "\n", encoding="utf-8")
            log_success(f"Resultado escrito en {self.args.out}")
        else:
            print(output)
        self.logger.info(f"{self.args.command}: código {result.code}")
        return result.code


# =============================================================================
# ARGUMENTOS
# =============================================================================


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="regcheck", description="Álgebra conmutativa exacta y regularidad")
    parser.add_argument("--json", action="store_true", help="salida JSON")
    parser.add_argument("--out", help="escribir el resultado en un fichero")
    parser.add_argument("--order", help="orden monomial (grevlex, lex, elim:k, weights:w1,...)")
    parser.add_argument("--char", type=int, help="característica del cuerpo (0 o primo)")
    parser.add_argument("--log-level", dest="log_level", help="DEBUG, INFO, WARNING, ERROR")
    parser.add_argument("--jobs", type=int, help="hilos para las suites")
    parser.add_argument("--include-slow", dest="include_slow", action="store_true", help="incluir suites lentas en 'all'")
    sub = parser.add_subparsers(dest="command", required=True)

    def with_ideal(name: str, help_text: str) -> argparse.ArgumentParser:
        p = sub.add_parser(name, help=help_text)
        p.add_argument("--ideal", required=True, help="fichero de ideales")
        p.add_argument("--name", help="ideal del fichero (por defecto el primero)")
        return p

    with_ideal("gb", "base de Gröbner reducida")
    p = with_ideal("member", "pertenencia de un polinomio")
    p.add_argument("--poly", required=True)
    p.add_argument("--check", action="store_true", help="código 1 si no pertenece")
    for name, help_text in (
        ("quotient", "cociente A : B"),
        ("intersect", "intersección A ∩ B"),
        ("saturate", "saturación A : B^∞"),
        ("same-radical", "¿√A = √B?"),
    ):
        p = with_ideal(name, help_text)
        p.add_argument("--with", dest="with_", required=True)
    p = with_ideal("eliminate", "eliminación de variables")
    p.add_argument("--vars", nargs="+", required=True)
    p = sub.add_parser("curve", help="ideal de una curva monomial")
    p.add_argument("--degrees", nargs="+", type=int, required=True)
    p.add_argument("--vars", nargs="+")
    for name, help_text in (
        ("resolve", "resolución libre minimal de R/I"),
        ("betti", "tabla de Betti de R/I"),
        ("reg", "regularidad de I"),
        ("depth", "profundidad de R/I"),
        ("dim", "dimensión de R/I"),
        ("deg", "grado de R/I"),
    ):
        with_ideal(name, help_text)
    p = with_ideal("hilbert", "serie de Hilbert de R/I")
    p.add_argument("--upto", type=int)
    p = with_ideal("verify-complex", "composición nula y criterio de Buchsbaum-Eisenbud")
    p.add_argument("--matrices", nargs="+", required=True, help="φ1 φ2 ... del fichero")
    p = with_ideal("ext", "Ext^q(R/I, R(twist))")
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--twist", type=int)
    p = with_ideal("socle", "grados del zócalo de Ext^q(R/I, ω_R)")
    p.add_argument("--q", type=int)
    p = with_ideal("lc-dims", "dimensiones de H^i_m(R/I) por grado")
    p.add_argument("--i", type=int, required=True)
    p.add_argument("--from", dest="from_", type=int, required=True)
    p.add_argument("--to", type=int, required=True)
    p = sub.add_parser("family", help="ideales de los ejemplos y familias")
    p.add_argument("which", choices=["ex21", "ex22", "cm", "p4", "surface"])
    p.add_argument("params", nargs="*")
    p = sub.add_parser("appendix-count", help="|I(α)| por DP y por fórmula cerrada")
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--alpha", type=int, required=True)
    p.add_argument("--mode", choices=["oracle", "closed", "both"], default="both")
    p = sub.add_parser("suite", help="suites de comprobación")
    p.add_argument("suite", choices=list(SUITES) + ["all", "list"])
    return parser


def run_command(argv: list[str], settings: Optional[Settings] = None) -> int:
    """Ejecuta un subcomando y devuelve el código de salida."""
    try:
        args = build_parser().parse_args(argv)
    except SystemExit as e:
        return EXIT_OK if e.code == 0 else EXIT_INPUT_ERROR

    settings = settings or get_settings()
    errors = settings.validate()
    if errors:
        log_error("Errores de configuración:")
        for error in errors:
            print(f"  • {error}", file=sys.stderr)
        return EXIT_INPUT_ERROR

    try:
        return RegcheckCLI(args, settings).run()
    except (RegcheckError, OSError, ValueError) as e:
        log_error(str(e))
        return EXIT_INPUT_ERROR
    except Exception as e:
        print(f"\n{Colors.RED}ERROR FATAL:{Colors.RESET} {e}", file=sys.stderr)
        logging.getLogger("main").exception("Error inesperado")
        return EXIT_INPUT_ERROR


def main():
    """Función principal."""
    try:
        sys.exit(run_command(sys.argv[1:]))
    except KeyboardInterrupt:
        print("\nInterrumpido", file=sys.stderr)
        sys.exit(130)


if __name__ == "__main__":
    main()
