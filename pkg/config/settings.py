"""
Sistema de configuración centralizado con validación y valores por defecto.
Lee las variables de <base_dir>/.env (o del entorno) con python-dotenv.
"""

import os
from pathlib import Path
from typing import Any, Optional

from dotenv import load_dotenv
from sympy import isprime


VALID_LOG_LEVELS = ["DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL"]


class Settings:
    """Gestor de configuración de regcheck."""

    def __init__(self, base_dir: Optional[Path] = None):
        home = os.getenv("REGCHECK_HOME", "").strip()
        self.base_dir = Path(base_dir) if base_dir else Path(os.path.expanduser(home or "~/.regcheck"))
        self.env_file = self.base_dir / ".env"

        # Cargar variables de entorno
        load_dotenv(self.env_file)

        # Aritmética
        self.default_characteristic = self._get_int("DEFAULT_CHARACTERISTIC", 0)
        self.default_order = self._get_env("DEFAULT_ORDER", "grevlex")
        self.surface_characteristic = self._get_int("SURFACE_CHARACTERISTIC", 101)

        # Suites
        self.suite_jobs = self._get_int("SUITE_JOBS", 1)
        self.suite_timeout_factor = self._get_float("SUITE_TIMEOUT_FACTOR", 1.0)
        self.include_slow = self._get_bool("INCLUDE_SLOW", False)
        self.progress = self._get_bool("PROGRESS", True)

        # Sistema
        self.log_level = self._get_env("LOG_LEVEL", "INFO")
        self.log_rotation_size = self._get_env("LOG_ROTATION_SIZE", "10M")
        self.log_rotation_count = self._get_int("LOG_ROTATION_COUNT", 5)

        # Rutas
        self.log_dir = self._get_path("LOG_DIR", self.base_dir / "logs")
        self.output_dir = self._get_path("OUTPUT_DIR", self.base_dir / "output")

        # Crear directorios si no existen
        self._ensure_directories()

    def _get_env(self, key: str, default: str = "") -> str:
        """Obtiene variable de entorno de forma segura."""
        value = os.getenv(key, default).strip()
        if not value:
            return default
        # python-dotenv no expande $VAR por defecto
        value = os.path.expanduser(value)
        value = os.path.expandvars(value)
        return value

    def _get_int(self, key: str, default: int) -> int:
        """Obtiene variable como entero con fallback."""
        try:
            return int(os.getenv(key, str(default)))
        except ValueError:
            return default

    def _get_float(self, key: str, default: float) -> float:
        try:
            return float(os.getenv(key, str(default)))
        except ValueError:
            return default

    def _get_bool(self, key: str, default: bool) -> bool:
        """Obtiene variable como booleano con fallback."""
        value = os.getenv(key, str(default)).lower()
        return value in ("true", "1", "yes", "si", "s")

    def _get_path(self, key: str, default: Path) -> Path:
        """Obtiene variable como Path con expansión."""
        value = self._get_env(key, str(default))
        return Path(os.path.expanduser(value))

    def _ensure_directories(self):
        """Crea todos los directorios necesarios."""
        for directory in [self.log_dir, self.output_dir]:
            directory.mkdir(parents=True, exist_ok=True)

    def save(self, updates: dict[str, Any]):
        """
        Actualiza valores en el archivo .env de forma segura.

        Args:
            updates: Diccionario con las actualizaciones {KEY: value}
        """
        lines = []
        if self.env_file.exists():
            with open(self.env_file, 'r', encoding='utf-8') as f:
                lines = f.readlines()

        def render(value: Any) -> str:
            if isinstance(value, bool):
                return "true" if value else "false"
            if isinstance(value, str) and ' ' in value:
                return f'"{value}"'
            return str(value)

        # Actualizar valores existentes
        updated_keys = set()
        for i, line in enumerate(lines):
            line = line.strip()
            if not line or line.startswith('#') or '=' not in line:
                continue
            key = line.split('=')[0].strip()
            if key in updates:
                lines[i] = f"{key}={render(updates[key])}\n"
                updated_keys.add(key)

        # Agregar nuevos valores
        for key, value in updates.items():
            if key not in updated_keys:
                lines.append(f"{key}={render(value)}\n")

        self.base_dir.mkdir(parents=True, exist_ok=True)
        with open(self.env_file, 'w', encoding='utf-8') as f:
            f.writelines(lines)

        # Recargar configuración
        load_dotenv(self.env_file, override=True)

    def validate(self) -> list[str]:
        """
        Valida la configuración y retorna lista de errores.

        Returns:
            Lista de mensajes de error (vacía si todo está OK)
        """
        from core.errors import ParameterError
        from core.polynomial import MonomialOrder

        errors = []

        for key, value in (
            ("DEFAULT_CHARACTERISTIC", self.default_characteristic),
            ("SURFACE_CHARACTERISTIC", self.surface_characteristic),
        ):
            if value != 0 and not (value > 1 and isprime(value)):
                errors.append(f"{key} inválida: {value} (debe ser 0 o primo)")

        try:
            MonomialOrder.parse(self.default_order)
        except ParameterError as e:
            errors.append(f"DEFAULT_ORDER inválido: {self.default_order} ({e})")

        if self.suite_jobs < 1:
            errors.append(f"SUITE_JOBS inválido: {self.suite_jobs} (mínimo 1)")
        if self.suite_timeout_factor <= 0:
            errors.append(f"SUITE_TIMEOUT_FACTOR inválido: {self.suite_timeout_factor}")

        if not self.log_rotation_size[:-1].isdigit() or self.log_rotation_size[-1].upper() not in "KMG":
            errors.append(f"LOG_ROTATION_SIZE inválido: {self.log_rotation_size} (debe terminar en K, M o G)")

        if self.log_level.upper() not in VALID_LOG_LEVELS:
            errors.append(f"LOG_LEVEL inválido: {self.log_level} (debe ser uno de {VALID_LOG_LEVELS})")

        return errors

    def __repr__(self) -> str:
        return (
            f"Settings(characteristic={self.default_characteristic}, "
            f"order={self.default_order}, "
            f"jobs={self.suite_jobs})"
        )


# Instancia global de configuración
_settings: Optional[Settings] = None


def get_settings() -> Settings:
    """
    Obtiene la instancia global de configuración (singleton).

    Returns:
        Instancia de Settings
    """
    global _settings
    if _settings is None:
        _settings = Settings()
    return _settings


def reload_settings():
    """Recarga la configuración desde el archivo .env."""
    global _settings
    _settings = Settings()
