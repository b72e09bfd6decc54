"""
Utilidades de interfaz de terminal: colores, mensajes de diagnóstico,
tablas y barra de progreso.

Los mensajes y la barra van a stderr; stdout queda para los resultados.
"""

import re
import sys
from typing import List, TextIO

# =============================================================================
# COLORES ANSI
# =============================================================================


class Colors:
    """Códigos de color ANSI para terminal."""

    RED = "\033[0;31m"
    GREEN = "\033[0;32m"
    YELLOW = "\033[1;33m"
    BLUE = "\033[0;34m"
    CYAN = "\033[0;36m"
    BOLD = "\033[1m"
    DIM = "\033[2m"
    RESET = "\033[0m"

    @staticmethod
    def strip(text: str) -> str:
        """Remueve códigos de color de un texto."""
        return re.sub(r"\033\[[0-9;]*m", "", text)


def _paint(text: str, stream: TextIO) -> str:
    return text if stream.isatty() else Colors.strip(text)


# =============================================================================
# FUNCIONES DE IMPRESIÓN
# =============================================================================


def _emit(tag: str, color: str, message: str):
    print(_paint(f"{color}[{tag}]{Colors.RESET} {message}", sys.stderr), file=sys.stderr)


def log_step(message: str):
    """Imprime un paso de proceso."""
    _emit("→", Colors.BLUE, message)


def log_success(message: str):
    """Imprime un mensaje de éxito."""
    _emit("✓", Colors.GREEN, message)


def log_error(message: str):
    """Imprime un mensaje de error."""
    _emit("✗", Colors.RED, message)


def log_warning(message: str):
    """Imprime un mensaje de advertencia."""
    _emit("!", Colors.YELLOW, message)


def log_info(message: str):
    """Imprime un mensaje informativo."""
    _emit("i", Colors.CYAN, message)


def format_duration(seconds: float) -> str:
    """
    Formatea una duración en segundos a formato legible.

    Returns:
        String formateado (ej: "2h 30m", "4.2s")
    """
    if seconds < 60:
        return f"{seconds:.1f}s"
    seconds = int(seconds)
    if seconds < 3600:
        return f"{seconds // 60}m {seconds % 60}s"
    return f"{seconds // 3600}h {(seconds % 3600) // 60}m"


# =============================================================================
# TABLAS
# =============================================================================


class Table:
    """Generador de tablas ASCII."""

    def __init__(self, headers: List[str]):
        self.headers = headers
        self.rows: List[List[str]] = []
        self.column_widths: List[int] = [len(h) for h in headers]

    def add_row(self, row: List[str]):
        """Agrega una fila a la tabla."""
        for i, cell in enumerate(row):
            clean_cell = Colors.strip(str(cell))
            self.column_widths[i] = max(self.column_widths[i], len(clean_cell))
        self.rows.append([str(cell) for cell in row])

    def render(self) -> str:
        """Tabla como texto (sin color de borde, apta para ficheros)."""
        lines = ["┌" + "┬".join("─" * (w + 2) for w in self.column_widths) + "┐"]
        header_row = "│"
        for i, header in enumerate(self.headers):
            header_row += f" {header:^{self.column_widths[i]}} │"
        lines.append(header_row)
        lines.append("├" + "┼".join("─" * (w + 2) for w in self.column_widths) + "┤")
        for row in self.rows:
            row_str = "│"
            for i, cell in enumerate(row):
                padding = self.column_widths[i] - len(Colors.strip(cell))
                row_str += f" {cell}{' ' * padding} │"
            lines.append(row_str)
        lines.append("└" + "┴".join("─" * (w + 2) for w in self.column_widths) + "┘")
        return "\n".join(lines)

