"""
Jerarquía de excepciones del motor algebraico.
"""

from typing import Optional


class RegcheckError(Exception):
    """Error base de regcheck."""


class ContextMismatchError(RegcheckError):
    """Operandos de anillos (o formas) distintos."""


class ZeroPolynomialError(RegcheckError):
    """Se pidió el término líder del polinomio cero."""


class GradingError(RegcheckError):
    """Entrada no homogénea donde se requiere graduación."""


class ParameterError(RegcheckError):
    """Parámetro fuera de rango."""


class ShapeMismatchError(RegcheckError):
    """Matrices que no se pueden componer."""


class ParseError(RegcheckError):
    """Texto mal formado, con posición opcional."""

    def __init__(self, message: str, line: Optional[int] = None, column: Optional[int] = None):
        self.message = message
        self.line = line
        self.column = column
        location = ""
        if line is not None:
            location = f"línea {line}"
            if column is not None:
                location += f", columna {column}"
            location = f" ({location})"
        super().__init__(f"{message}{location}")
