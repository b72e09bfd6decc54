"""
Sistema de logging con rotación automática y niveles configurables.

Cada componente del motor escribe en su propio fichero rotado; solo el
logger principal imprime en consola, y lo hace por stderr.
"""

import logging
import sys
from logging.handlers import RotatingFileHandler
from pathlib import Path
from typing import Optional


COMPONENTS = ["main", "groebner", "ideals", "homology", "suites"]


class ColoredFormatter(logging.Formatter):
    """Formatter con colores para terminal."""

    COLORS = {
        "DEBUG": "\033[0;36m",  # Cyan
        "INFO": "\033[0;32m",  # Green
        "WARNING": "\033[1;33m",  # Yellow
        "ERROR": "\033[0;31m",  # Red
        "CRITICAL": "\033[1;31m",  # Bold Red
    }
    RESET = "\033[0m"

    def format(self, record):
        levelname = record.levelname
        if getattr(record, "use_color", False):
            color = self.COLORS.get(levelname, self.RESET)
            record.levelname = f"{color}{levelname}{self.RESET}"
        try:
            return super().format(record)
        finally:
            # El mismo record llega después al handler de fichero
            record.levelname = levelname


class _ColoredFilter(logging.Filter):
    def filter(self, record):
        record.use_color = sys.stderr.isatty()
        return True


class AppLogger:
    """Logger de un componente con rotación."""

    def __init__(
        self,
        name: str,
        log_file: Path,
        level: str = "INFO",
        max_size_kb: int = 10 * 1024,
        backup_count: int = 5,
        console_output: bool = False,
    ):
        """
        Inicializa el logger.

        Args:
            name: Nombre del logger (el mismo que usa logging.getLogger en core/)
            log_file: Ruta al archivo de log
            level: Nivel de logging (DEBUG, INFO, WARNING, ERROR, CRITICAL)
            max_size_kb: Tamaño máximo del log en KB antes de rotar
            backup_count: Número de archivos de backup a mantener
            console_output: Si debe imprimir también en stderr
        """
        self.name = name
        self.log_file = log_file
        self.logger = logging.getLogger(name)
        self.logger.propagate = False

        numeric_level = getattr(logging, level.upper(), logging.INFO)
        self.logger.setLevel(numeric_level)

        # Evitar duplicación de handlers
        if self.logger.handlers:
            return

        log_file.parent.mkdir(parents=True, exist_ok=True)
        file_handler = RotatingFileHandler(
            log_file,
            maxBytes=max_size_kb * 1024,
            backupCount=backup_count,
            encoding="utf-8",
        )
        file_handler.setFormatter(
            logging.Formatter(
                "%(asctime)s - %(name)s - %(levelname)s - %(message)s",
                datefmt="%Y-%m-%d %H:%M:%S",
            )
        )
        self.logger.addHandler(file_handler)

        if console_output:
            console_handler = logging.StreamHandler(sys.stderr)
            console_handler.setFormatter(ColoredFormatter("%(levelname)s: %(message)s"))
            console_handler.addFilter(_ColoredFilter())
            self.logger.addHandler(console_handler)

    def set_level(self, level: str):
        self.logger.setLevel(getattr(logging, level.upper(), logging.INFO))

    def debug(self, message: str):
        self.logger.debug(message)

    def info(self, message: str):
        self.logger.info(message)

    def warning(self, message: str):
        self.logger.warning(message)

    def error(self, message: str):
        self.logger.error(message)

    def exception(self, message: str):
        """Log de excepción con traceback."""
        self.logger.exception(message)


def parse_rotation_size(size_str: str) -> int:
    """'10M' -> KB. Acepta sufijos K, M y G; cualquier otra cosa da 10 MB."""
    size_str = size_str.strip().upper()
    factors = {"K": 1, "M": 1024, "G": 1024 * 1024}
    if size_str[:-1].isdigit() and size_str[-1:] in factors:
        return int(size_str[:-1]) * factors[size_str[-1]]
    return 10 * 1024


class LogManager:
    """Gestor centralizado de los logs de cada componente."""

    def __init__(self, settings, level: Optional[str] = None):
        self.settings = settings
        self.level = level or settings.log_level
        self.loggers: dict[str, AppLogger] = {}
        self._create_loggers()

    def _create_loggers(self):
        max_size = parse_rotation_size(self.settings.log_rotation_size)
        for component in COMPONENTS:
            self.loggers[component] = AppLogger(
                name=component,
                log_file=self.settings.log_dir / f"{component}.log",
                level=self.level,
                max_size_kb=max_size,
                backup_count=self.settings.log_rotation_count,
                console_output=component == "main",
            )

    def set_level(self, level: str):
        """Cambia el nivel de todos los componentes (flag --log-level)."""
        self.level = level
        for logger in self.loggers.values():
            logger.set_level(level)

    def get(self, component: str) -> AppLogger:
        """
        Obtiene el logger de un componente.

        Args:
            component: Nombre del componente

        Returns:
            Logger del componente (el principal si no existe)
        """
        return self.loggers.get(component, self.loggers["main"])
