"""
Ejecución de comprobaciones con presupuesto de tiempo, en serie o en un pool
de hilos, con resultados en orden determinista.
"""

import logging
import threading
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import Any, Callable, List, Optional, Tuple

from core.errors import RegcheckError

logger = logging.getLogger("suites")

CheckFunction = Callable[[], Tuple[Any, Any]]


@dataclass
class CheckOutcome:
    """Resultado de una comprobación: valor esperado frente a obtenido."""

    name: str
    expected: Any
    actual: Any
    passed: bool
    elapsed: float = 0.0
    error: Optional[str] = None


class BudgetMonitor:
    """Vigila el tiempo de una suite y avisa una vez si se pasa del presupuesto."""

    def __init__(self, label: str, budget: Optional[float], check_interval: float = 1.0):
        self.label = label
        self.budget = budget
        self.check_interval = check_interval
        self.running = False
        self.exceeded = False
        self._start = 0.0
        self._thread: Optional[threading.Thread] = None

    def start(self):
        """Inicia el monitoreo."""
        self._start = time.monotonic()
        if self.budget is None:
            return
        self.running = True
        self._thread = threading.Thread(target=self._monitor_loop, daemon=True)
        self._thread.start()

    def stop(self) -> float:
        """Detiene el monitoreo y devuelve el tiempo transcurrido."""
        self.running = False
        elapsed = time.monotonic() - self._start
        if self.budget is not None and elapsed > self.budget:
            self.exceeded = True
        return elapsed

    def _monitor_loop(self):
        while self.running:
            time.sleep(self.check_interval)
            if not self.exceeded and time.monotonic() - self._start > self.budget:
                self.exceeded = True
                logger.warning(f"{self.label}: presupuesto de {self.budget:.0f}s superado")


class CheckRunner:
    """
    Ejecuta comprobaciones con nombre.

    Una excepción del motor dentro de una comprobación la marca como fallida
    con el mensaje de error; el resto sigue ejecutándose.
    """

    def __init__(self, jobs: int = 1, progress: Optional[Callable[[str], None]] = None):
        self.jobs = max(1, jobs)
        self.progress = progress

    def _run_one(self, name: str, function: CheckFunction) -> CheckOutcome:
        start = time.monotonic()
        try:
            expected, actual = function()
            outcome = CheckOutcome(name, expected, actual, expected == actual)
        except RegcheckError as e:
            outcome = CheckOutcome(name, None, None, False, error=str(e))
        outcome.elapsed = time.monotonic() - start
        status = "ok" if outcome.passed else "FALLA"
        logger.info(f"{name}: {status} ({outcome.elapsed:.2f}s)")
        if self.progress:
            self.progress(f"{name}: {status}")
        return outcome

    def run(
        self,
        checks: List[Tuple[str, CheckFunction]],
        label: str = "suite",
        budget: Optional[float] = None,
    ) -> Tuple[List[CheckOutcome], bool]:
        """
        Ejecuta todas las comprobaciones.

        Args:
            checks: pares (nombre, función que devuelve (esperado, obtenido))
            label: nombre para los logs
            budget: segundos antes de avisar; None sin límite

        Returns:
            (resultados ordenados por nombre, True si se superó el presupuesto)
        """
        names = [name for name, _ in checks]
        if len(set(names)) != len(names):
            raise RegcheckError(f"Nombres de comprobación repetidos en {label}")

        monitor = BudgetMonitor(label, budget)
        monitor.start()
        if self.jobs == 1:
            results = [self._run_one(name, fn) for name, fn in checks]
        else:
            with ThreadPoolExecutor(max_workers=self.jobs) as pool:
                futures = [pool.submit(self._run_one, name, fn) for name, fn in checks]
                results = [f.result() for f in futures]
        elapsed = monitor.stop()

        logger.info(f"{label}: {sum(r.passed for r in results)}/{len(results)} en {elapsed:.1f}s")
        memory = get_memory_usage()
        if memory:
            logger.debug(f"{label}: memoria usada {memory['used_mb']} MB ({memory['percent']:.0f}%)")
        return sorted(results, key=lambda r: r.name), monitor.exceeded


def get_memory_usage() -> dict:
    """
    Obtiene el uso de memoria del sistema.

    Returns:
        Diccionario con información de memoria (vacío si no hay /proc)
    """
    try:
        meminfo = {}
        with open('/proc/meminfo', 'r') as f:
            for line in f:
                parts = line.split(':')
                if len(parts) == 2:
                    meminfo[parts[0].strip()] = int(parts[1].strip().split()[0])

        total = meminfo.get('MemTotal', 0)
        used = total - meminfo.get('MemAvailable', 0)
        return {
            'total_mb': total // 1024,
            'used_mb': used // 1024,
            'percent': (used / total * 100) if total > 0 else 0
        }
    except (OSError, ValueError):
        return {}
