"""
Aritmética exacta de polinomios multivariados sobre Q o F_p.
Monomios, órdenes monomiales y la forma textual canónica `y^2*z - x^2*t`.
"""

from __future__ import annotations

import dataclasses
import re
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Mapping, Optional, Sequence, Union

import sympy
from sympy import isprime

from core.errors import (
    ContextMismatchError,
    ParameterError,
    ParseError,
    ZeroPolynomialError,
)

Exponents = tuple[int, ...]
Coefficient = Union[int, Fraction]

_NAME_RE = re.compile(r"^[A-Za-z_][A-Za-z0-9_]*$")


# =============================================================================
# CUERPO DE COEFICIENTES
# =============================================================================


@dataclass(frozen=True)
class CoefficientField:
    """Q (característica 0) o el cuerpo primo F_p."""

    characteristic: int = 0

    def __post_init__(self):
        p = self.characteristic
        if p < 0 or (p != 0 and not isprime(p)):
            raise ParameterError(f"Característica inválida: {p} (debe ser 0 o un primo)")

    def convert(self, value) -> Coefficient:
        """
        Lleva un entero o racional al cuerpo.

        Args:
            value: int, Fraction o texto numérico

        Returns:
            Fraction en característica 0, entero reducido módulo p si no
        """
        p = self.characteristic
        if p == 0:
            return Fraction(value)
        if isinstance(value, Fraction):
            if value.denominator % p == 0:
                raise ParameterError(f"{value} no tiene sentido en F_{p}")
            return value.numerator * pow(value.denominator, -1, p) % p
        return int(value) % p

    def add(self, a: Coefficient, b: Coefficient) -> Coefficient:
        p = self.characteristic
        return (a + b) % p if p else a + b

    def sub(self, a: Coefficient, b: Coefficient) -> Coefficient:
        p = self.characteristic
        return (a - b) % p if p else a - b

    def mul(self, a: Coefficient, b: Coefficient) -> Coefficient:
        p = self.characteristic
        return (a * b) % p if p else a * b

    def neg(self, a: Coefficient) -> Coefficient:
        p = self.characteristic
        return (-a) % p if p else -a

    def inverse(self, a: Coefficient) -> Coefficient:
        """Inverso multiplicativo (inverso modular en F_p)."""
        p = self.characteristic
        if a == 0:
            raise ZeroDivisionError("inverso de cero")
        if p:
            return pow(int(a), -1, p)
        return 1 / Fraction(a)

    def div(self, a: Coefficient, b: Coefficient) -> Coefficient:
        return self.mul(a, self.inverse(b))

    def signed(self, a: Coefficient) -> Coefficient:
        """Representante simétrico, solo para imprimir."""
        p = self.characteristic
        if p and a > p // 2:
            return a - p
        return a

    def __str__(self) -> str:
        return f"Fp {self.characteristic}" if self.characteristic else "Q"


# =============================================================================
# ÓRDENES MONOMIALES
# =============================================================================


class OrderKind(Enum):
    """Tipos de orden monomial soportados."""

    LEX = "lex"
    GREVLEX = "grevlex"
    ELIMINATION = "elim"
    WEIGHTED = "weights"


@dataclass(frozen=True)
class MonomialOrder:
    """
    Orden monomial sobre las variables de un anillo.

    ELIMINATION con `split = k` compara primero el grado del bloque de las k
    primeras variables, luego grevlex dentro de ese bloque y por último grevlex
    en el resto. WEIGHTED compara el peso y desempata con grevlex.
    """

    kind: OrderKind = OrderKind.GREVLEX
    split: int = 0
    weights: tuple[int, ...] = ()

    def __post_init__(self):
        if self.kind is OrderKind.ELIMINATION and self.split < 0:
            raise ParameterError(f"Bloque de eliminación inválido: {self.split}")
        if self.kind is OrderKind.WEIGHTED:
            if not self.weights or any(w < 0 for w in self.weights):
                raise ParameterError(f"Pesos inválidos: {self.weights}")

    @classmethod
    def grevlex(cls) -> "MonomialOrder":
        return cls(OrderKind.GREVLEX)

    @classmethod
    def lex(cls) -> "MonomialOrder":
        return cls(OrderKind.LEX)

    @classmethod
    def elimination(cls, split: int) -> "MonomialOrder":
        return cls(OrderKind.ELIMINATION, split=split)

    @classmethod
    def weighted(cls, weights: Sequence[int]) -> "MonomialOrder":
        return cls(OrderKind.WEIGHTED, weights=tuple(int(w) for w in weights))

    @classmethod
    def parse(cls, text: str) -> "MonomialOrder":
        """
        Interpreta `grevlex`, `lex`, `elim:k` o `weights:w1,w2,...`.

        Raises:
            ParameterError: si el nombre no corresponde a ningún orden
        """
        name = text.strip().lower()
        try:
            if name == "grevlex":
                return cls.grevlex()
            if name == "lex":
                return cls.lex()
            if name.startswith("elim:"):
                return cls.elimination(int(name[5:]))
            if name.startswith("weights:"):
                return cls.weighted([int(w) for w in name[8:].split(",")])
        except ValueError:
            pass
        raise ParameterError(f"Orden monomial desconocido: {text}")

    @property
    def is_graded(self) -> bool:
        """True si el orden compara primero el grado total."""
        if self.kind is OrderKind.GREVLEX:
            return True
        return self.kind is OrderKind.WEIGHTED and len(set(self.weights)) == 1

    def key(self, exponents: Exponents) -> tuple:
        """Clave de comparación: mayor clave significa monomio mayor."""
        return _order_key(self, exponents)

    def compare(self, a: "Monomial", b: "Monomial") -> int:
        ka, kb = self.key(a.exponents), self.key(b.exponents)
        return (ka > kb) - (ka < kb)

    def __str__(self) -> str:
        if self.kind is OrderKind.ELIMINATION:
            return f"elim:{self.split}"
        if self.kind is OrderKind.WEIGHTED:
            return "weights:" + ",".join(str(w) for w in self.weights)
        return self.kind.value


def _grevlex_key(exps: Exponents) -> tuple:
    return (sum(exps), tuple(-e for e in reversed(exps)))


@lru_cache(maxsize=1 << 20)
def _order_key(order: MonomialOrder, exps: Exponents) -> tuple:
    kind = order.kind
    if kind is OrderKind.GREVLEX:
        return _grevlex_key(exps)
    if kind is OrderKind.LEX:
        return exps
    if kind is OrderKind.ELIMINATION:
        k = order.split
        return (_grevlex_key(exps[:k]), _grevlex_key(exps[k:]))
    weight = sum(w * e for w, e in zip(order.weights, exps))
    return (weight, _grevlex_key(exps))


# =============================================================================
# MONOMIOS
# =============================================================================


@dataclass(frozen=True)
class Monomial:
    """Producto de variables con exponentes no negativos."""

    exponents: Exponents
    degree: int = dataclasses.field(init=False, compare=False)

    def __post_init__(self):
        exps = tuple(int(e) for e in self.exponents)
        if any(e < 0 for e in exps):
            raise ParameterError(f"Exponentes negativos: {exps}")
        object.__setattr__(self, "exponents", exps)
        object.__setattr__(self, "degree", sum(exps))

    @classmethod
    def one(cls, nvars: int) -> "Monomial":
        return cls((0,) * nvars)

    def __mul__(self, other: "Monomial") -> "Monomial":
        if len(self.exponents) != len(other.exponents):
            raise ContextMismatchError("Monomios con distinto número de variables")
        return Monomial(tuple(a + b for a, b in zip(self.exponents, other.exponents)))

    def divides(self, other: "Monomial") -> bool:
        return all(a <= b for a, b in zip(self.exponents, other.exponents))

    def __truediv__(self, other: "Monomial") -> Optional["Monomial"]:
        if not other.divides(self):
            return None
        return Monomial(tuple(a - b for a, b in zip(self.exponents, other.exponents)))

    def lcm(self, other: "Monomial") -> "Monomial":
        return Monomial(tuple(max(a, b) for a, b in zip(self.exponents, other.exponents)))

    def gcd(self, other: "Monomial") -> "Monomial":
        return Monomial(tuple(min(a, b) for a, b in zip(self.exponents, other.exponents)))

    def to_text(self, variables: Sequence[str]) -> str:
        return _monomial_text(self.exponents, variables)


def _monomial_text(exps: Exponents, variables: Sequence[str]) -> str:
    factors = []
    for name, e in zip(variables, exps):
        if e == 1:
            factors.append(name)
        elif e > 1:
            factors.append(f"{name}^{e}")
    return "*".join(factors) if factors else "1"


def compare_monomials(order: MonomialOrder, a: Monomial, b: Monomial) -> int:
    """
    Compara dos monomios del mismo anillo.

    Returns:
        1 si a > b, -1 si a < b, 0 si son iguales
    """
    if len(a.exponents) != len(b.exponents):
        raise ContextMismatchError("Monomios con distinto número de variables")
    return order.compare(a, b)


# =============================================================================
# ANILLO DE POLINOMIOS
# =============================================================================


@dataclass(frozen=True)
class RingContext:
    """
    Anillo de polinomios k[variables] con graduación estándar.

    El orden monomial es el orden activo del anillo (impresión y bases de
    Gröbner por defecto); no interviene en la igualdad de anillos.
    """

    variables: tuple[str, ...]
    field: CoefficientField = CoefficientField()
    order: MonomialOrder = dataclasses.field(default=MonomialOrder(), compare=False)

    def __post_init__(self):
        names = tuple(self.variables)
        object.__setattr__(self, "variables", names)
        if not names:
            raise ParameterError("El anillo necesita al menos una variable")
        if len(set(names)) != len(names):
            raise ParameterError(f"Variables repetidas: {names}")
        for name in names:
            if not _NAME_RE.match(name):
                raise ParameterError(f"Nombre de variable inválido: {name!r}")

    @classmethod
    def create(
        cls,
        variables: Union[str, Sequence[str]],
        characteristic: int = 0,
        order: Optional[MonomialOrder] = None,
    ) -> "RingContext":
        """Atajo: `RingContext.create("x y z t", 101)`."""
        if isinstance(variables, str):
            variables = variables.replace(",", " ").split()
        return cls(tuple(variables), CoefficientField(characteristic), order or MonomialOrder())

    @property
    def nvars(self) -> int:
        return len(self.variables)

    @property
    def characteristic(self) -> int:
        return self.field.characteristic

    def index(self, name: str) -> int:
        try:
            return self.variables.index(name)
        except ValueError:
            raise ParameterError(f"Variable desconocida: {name}") from None

    def with_order(self, order: MonomialOrder) -> "RingContext":
        return dataclasses.replace(self, order=order)

    def with_characteristic(self, characteristic: int) -> "RingContext":
        return dataclasses.replace(self, field=CoefficientField(characteristic))

    def extended(self, names: Sequence[str], first: bool = False) -> "RingContext":
        """Anillo con variables nuevas al principio o al final."""
        clash = set(names) & set(self.variables)
        if clash:
            raise ParameterError(f"Variables ya presentes: {sorted(clash)}")
        names = tuple(names)
        variables = names + self.variables if first else self.variables + names
        return RingContext(variables, self.field, self.order)

    def subring(self, names: Sequence[str]) -> "RingContext":
        for name in names:
            self.index(name)
        return RingContext(tuple(names), self.field, self.order)

    def fresh_name(self, base: str) -> str:
        """Nombre de variable que no está en el anillo."""
        name, i = base, 0
        while name in self.variables:
            i += 1
            name = f"{base}{i}"
        return name

    def zero(self) -> "Polynomial":
        return Polynomial(self, {})

    def one(self) -> "Polynomial":
        return self.constant(1)

    def constant(self, value) -> "Polynomial":
        return Polynomial(self, {(0,) * self.nvars: value})

    def monomial(self, exponents: Sequence[int], coefficient=1) -> "Polynomial":
        if len(exponents) != self.nvars:
            raise ContextMismatchError("Longitud de exponentes distinta al número de variables")
        return Polynomial(self, {tuple(exponents): coefficient})

    def variable(self, name: str) -> "Polynomial":
        exps = [0] * self.nvars
        exps[self.index(name)] = 1
        return Polynomial(self, {tuple(exps): 1})

    def gens(self) -> list["Polynomial"]:
        return [self.variable(name) for name in self.variables]

    def parse(self, text: str, line: Optional[int] = None) -> "Polynomial":
        """Convierte la forma textual canónica en un Polynomial."""
        return _PolynomialParser(self, text, line).parse()

    def __str__(self) -> str:
        return f"{self.field}[{', '.join(self.variables)}]"


# =============================================================================
# POLINOMIOS
# =============================================================================


class Polynomial:
    """
    Polinomio exacto e inmutable: exponentes -> coeficiente no nulo.

    Los términos se guardan en orden estrictamente decreciente del orden del
    anillo; `terms()` con otro orden los reordena.
    """

    __slots__ = ("ring", "_terms", "_hash")

    def __init__(self, ring: RingContext, terms: Mapping[Exponents, Coefficient], normalized: bool = False):
        self.ring = ring
        if normalized:
            clean = dict(terms)
        else:
            convert = ring.field.convert
            clean: dict[Exponents, Coefficient] = {}
            for exps, coef in terms.items():
                exps = tuple(exps)
                if len(exps) != ring.nvars:
                    raise ContextMismatchError(
                        f"Monomio {exps} fuera del anillo con {ring.nvars} variables"
                    )
                c = convert(coef)
                if exps in clean:
                    c = ring.field.add(clean[exps], c)
                if c:
                    clean[exps] = c
                else:
                    clean.pop(exps, None)
        key = ring.order.key
        self._terms = {e: clean[e] for e in sorted(clean, key=key, reverse=True)}
        self._hash = None

    # -------------------------------------------------------------------------
    # Acceso
    # -------------------------------------------------------------------------

    @property
    def term_dict(self) -> dict[Exponents, Coefficient]:
        """Diccionario interno (no modificar)."""
        return self._terms

    def terms(self, order: Optional[MonomialOrder] = None) -> list[tuple[Coefficient, Monomial]]:
        if order is None or order == self.ring.order:
            return [(c, Monomial(e)) for e, c in self._terms.items()]
        return [
            (self._terms[e], Monomial(e))
            for e in sorted(self._terms, key=order.key, reverse=True)
        ]

    def __len__(self) -> int:
        return len(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def is_constant(self) -> bool:
        return all(not any(e) for e in self._terms)

    def constant_value(self) -> Coefficient:
        return self._terms.get((0,) * self.ring.nvars, 0)

    @property
    def degree(self) -> int:
        """Grado total; -1 para el polinomio cero."""
        return max((sum(e) for e in self._terms), default=-1)

    def is_homogeneous(self) -> bool:
        return len({sum(e) for e in self._terms}) <= 1

    def leading_term(self, order: Optional[MonomialOrder] = None) -> tuple[Coefficient, Monomial]:
        """
        Término máximo según el orden.

        Raises:
            ZeroPolynomialError: si el polinomio es cero
        """
        if not self._terms:
            raise ZeroPolynomialError("El polinomio cero no tiene término líder")
        order = order or self.ring.order
        exps = max(self._terms, key=order.key)
        return self._terms[exps], Monomial(exps)

    def leading_monomial(self, order: Optional[MonomialOrder] = None) -> Monomial:
        return self.leading_term(order)[1]

    def leading_coefficient(self, order: Optional[MonomialOrder] = None) -> Coefficient:
        return self.leading_term(order)[0]

    def monic(self, order: Optional[MonomialOrder] = None) -> "Polynomial":
        if not self._terms:
            return self
        return self.scale(self.ring.field.inverse(self.leading_coefficient(order)))

    def variables_used(self) -> list[str]:
        used = set()
        for exps in self._terms:
            used.update(i for i, e in enumerate(exps) if e)
        return [self.ring.variables[i] for i in sorted(used)]

    # -------------------------------------------------------------------------
    # Aritmética
    # -------------------------------------------------------------------------

    def _coerce(self, other) -> "Polynomial":
        if isinstance(other, Polynomial):
            if other.ring != self.ring:
                raise ContextMismatchError(f"Anillos distintos: {self.ring} y {other.ring}")
            return other
        if isinstance(other, (int, Fraction)):
            return self.ring.constant(other)
        return NotImplemented

    def __add__(self, other) -> "Polynomial":
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        field = self.ring.field
        result = dict(self._terms)
        for exps, coef in other._terms.items():
            c = field.add(result.get(exps, 0), coef)
            if c:
                result[exps] = c
            else:
                result.pop(exps, None)
        return Polynomial(self.ring, result, normalized=True)

    __radd__ = __add__

    def __neg__(self) -> "Polynomial":
        neg = self.ring.field.neg
        return Polynomial(self.ring, {e: neg(c) for e, c in self._terms.items()}, normalized=True)

    def __sub__(self, other) -> "Polynomial":
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other) -> "Polynomial":
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other - self

    def __mul__(self, other) -> "Polynomial":
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        field = self.ring.field
        p = field.characteristic
        result: dict[Exponents, Coefficient] = {}
        for e1, c1 in self._terms.items():
            for e2, c2 in other._terms.items():
                exps = tuple(a + b for a, b in zip(e1, e2))
                c = result.get(exps, 0) + c1 * c2
                result[exps] = c % p if p else c
        return Polynomial(self.ring, {e: c for e, c in result.items() if c}, normalized=True)

    __rmul__ = __mul__

    def __pow__(self, exponent: int) -> "Polynomial":
        if exponent < 0:
            raise ParameterError("Potencia negativa de un polinomio")
        result, base = self.ring.one(), self
        while exponent:
            if exponent & 1:
                result = result * base
            exponent >>= 1
            if exponent:
                base = base * base
        return result

    def scale(self, factor: Coefficient) -> "Polynomial":
        field = self.ring.field
        c = field.convert(factor)
        if not c:
            return self.ring.zero()
        return Polynomial(self.ring, {e: field.mul(v, c) for e, v in self._terms.items()}, normalized=True)

    def multiply_monomial(self, exponents: Exponents, coefficient: Coefficient = 1) -> "Polynomial":
        field = self.ring.field
        c = field.convert(coefficient)
        return Polynomial(
            self.ring,
            {tuple(a + b for a, b in zip(e, exponents)): field.mul(v, c) for e, v in self._terms.items()},
            normalized=True,
        )

    def divide_exact(self, divisor: "Polynomial") -> "Polynomial":
        """
        Cociente exacto self / divisor.

        Raises:
            ParameterError: si la división no es exacta
        """
        divisor = self._coerce(divisor)
        if divisor.is_zero():
            raise ZeroDivisionError("División por el polinomio cero")
        order = self.ring.order
        field = self.ring.field
        lc, lm = divisor.leading_term(order)
        remainder = self
        quotient: dict[Exponents, Coefficient] = {}
        while remainder:
            c, m = remainder.leading_term(order)
            q = m / lm
            if q is None:
                raise ParameterError(f"{divisor} no divide a {self}")
            qc = field.div(c, lc)
            quotient[q.exponents] = qc
            remainder = remainder - divisor.multiply_monomial(q.exponents, qc)
        return Polynomial(self.ring, quotient, normalized=True)

    def evaluate(self, values: Sequence[Coefficient]) -> Coefficient:
        """Evalúa en un punto del cuerpo."""
        field = self.ring.field
        total: Coefficient = 0
        for exps, coef in self._terms.items():
            term = coef
            for v, e in zip(values, exps):
                if e:
                    term = field.mul(term, field.convert(v) ** e)
            total = field.add(total, term)
        return total

    def homogenize(self, index: int) -> "Polynomial":
        """Homogeneiza con la variable de posición `index` (su exponente debe ser 0)."""
        top = self.degree
        result = {}
        for exps, coef in self._terms.items():
            if exps[index]:
                raise ParameterError("La variable de homogeneización aparece en el polinomio")
            new = list(exps)
            new[index] = top - sum(exps)
            result[tuple(new)] = coef
        return Polynomial(self.ring, result, normalized=True)

    def embed(self, ring: RingContext) -> "Polynomial":
        """
        Traslada el polinomio a otro anillo por nombre de variable.

        Las variables ausentes en el destino deben tener exponente 0.
        """
        if ring.field != self.ring.field:
            raise ContextMismatchError(f"Cuerpos distintos: {self.ring.field} y {ring.field}")
        positions = []
        for i, name in enumerate(self.ring.variables):
            positions.append(ring.variables.index(name) if name in ring.variables else None)
        result = {}
        for exps, coef in self._terms.items():
            new = [0] * ring.nvars
            for i, e in enumerate(exps):
                if not e:
                    continue
                j = positions[i]
                if j is None:
                    raise ParameterError(
                        f"La variable {self.ring.variables[i]} no existe en {ring}"
                    )
                new[j] = e
            result[tuple(new)] = coef
        return Polynomial(ring, result, normalized=True)

    def to_sympy(self):
        """Expresión de SymPy equivalente (para gcd y factorización)."""
        symbols = sympy.symbols(self.ring.variables)
        if not isinstance(symbols, tuple):
            symbols = (symbols,)
        expr = sympy.Integer(0)
        for exps, coef in self._terms.items():
            term = sympy.Rational(coef.numerator, coef.denominator) if isinstance(coef, Fraction) else sympy.Integer(coef)
            for s, e in zip(symbols, exps):
                if e:
                    term *= s**e
            expr += term
        return expr

    # -------------------------------------------------------------------------
    # Igualdad e impresión
    # -------------------------------------------------------------------------

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction)):
            other = self.ring.constant(other)
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self.ring == other.ring and self._terms == other._terms

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.ring.variables, frozenset(self._terms.items())))
        return self._hash

    def to_text(self, order: Optional[MonomialOrder] = None) -> str:
        if not self._terms:
            return "0"
        field = self.ring.field
        pieces = []
        for coef, mono in self.terms(order):
            c = field.signed(coef)
            negative = c < 0
            c = -c if negative else c
            if mono.degree == 0:
                body = _coefficient_text(c)
            elif c == 1:
                body = mono.to_text(self.ring.variables)
            else:
                body = f"{_coefficient_text(c)}*{mono.to_text(self.ring.variables)}"
            if not pieces:
                pieces.append(f"-{body}" if negative else body)
            else:
                pieces.append(f" - {body}" if negative else f" + {body}")
        return "".join(pieces)

    def __str__(self) -> str:
        return self.to_text()

    def __repr__(self) -> str:
        return f"Polynomial({self.to_text()!r})"


def _coefficient_text(c: Coefficient) -> str:
    if isinstance(c, Fraction) and c.denominator != 1:
        return f"{c.numerator}/{c.denominator}"
    return str(int(c))


def poly_arith(op: str, a: Polynomial, b: Union[Polynomial, int, Fraction]) -> Polynomial:
    """
    Operación aritmética por nombre: add, subtract, multiply o scale.

    Raises:
        ContextMismatchError: si los anillos no coinciden
        ParameterError: si la operación no existe
    """
    if op == "add":
        return a + b
    if op == "subtract":
        return a - b
    if op == "multiply":
        return a * b
    if op == "scale":
        if isinstance(b, Polynomial):
            raise ParameterError("scale espera un escalar")
        return a.scale(b)
    raise ParameterError(f"Operación desconocida: {op}")


def leading_term(p: Polynomial, order: Optional[MonomialOrder] = None) -> tuple[Coefficient, Monomial]:
    return p.leading_term(order)


# =============================================================================
# PARSER DE LA FORMA TEXTUAL
# =============================================================================

_TOKEN_RE = re.compile(r"\s*(?:(\d+)|([A-Za-z_][A-Za-z0-9_]*)|(\S))")


class _PolynomialParser:
    """Descenso recursivo sobre: expr := término (± término)*, término := factor (* factor)*."""

    def __init__(self, ring: RingContext, text: str, line: Optional[int]):
        self.ring = ring
        self.text = text
        self.line = line
        self.tokens: list[tuple[str, str, int]] = []
        pos = 0
        while pos < len(text):
            match = _TOKEN_RE.match(text, pos)
            if match is None or match.end() == pos:
                break
            if match.group(1):
                self.tokens.append(("num", match.group(1), match.start(1)))
            elif match.group(2):
                self.tokens.append(("var", match.group(2), match.start(2)))
            elif match.group(3):
                self.tokens.append(("op", match.group(3), match.start(3)))
            pos = match.end()
        self.i = 0

    def _error(self, message: str, column: Optional[int] = None):
        if column is None:
            column = self.tokens[self.i][2] if self.i < len(self.tokens) else len(self.text)
        raise ParseError(message, self.line, column + 1)

    def _peek(self) -> Optional[tuple[str, str, int]]:
        return self.tokens[self.i] if self.i < len(self.tokens) else None

    def _take(self, value: str) -> bool:
        token = self._peek()
        if token and token[0] == "op" and token[1] == value:
            self.i += 1
            return True
        return False

    def parse(self) -> Polynomial:
        if not self.tokens:
            self._error("Polinomio vacío", 0)
        result = self._expr()
        if self._peek() is not None:
            self._error(f"Símbolo inesperado {self._peek()[1]!r}")
        return result

    def _expr(self) -> Polynomial:
        negative = False
        if self._take("-"):
            negative = True
        else:
            self._take("+")
        result = self._term()
        if negative:
            result = -result
        while True:
            if self._take("+"):
                result = result + self._term()
            elif self._take("-"):
                result = result - self._term()
            else:
                return result

    def _term(self) -> Polynomial:
        result = self._factor()
        while self._take("*"):
            result = result * self._factor()
        return result

    def _factor(self) -> Polynomial:
        base = self._atom()
        if self._take("^"):
            token = self._peek()
            if token is None or token[0] != "num":
                self._error("Se esperaba un exponente entero")
            self.i += 1
            base = base ** int(token[1])
        return base

    def _atom(self) -> Polynomial:
        token = self._peek()
        if token is None:
            self._error("Fin inesperado del polinomio")
        kind, value, column = token
        if kind == "num":
            self.i += 1
            number = Fraction(int(value))
            if self._take("/"):
                den = self._peek()
                if den is None or den[0] != "num" or int(den[1]) == 0:
                    self._error("Denominador inválido")
                self.i += 1
                number = Fraction(int(value), int(den[1]))
            try:
                return self.ring.constant(number)
            except ParameterError as e:
                self._error(str(e), column)
        if kind == "var":
            self.i += 1
            if value not in self.ring.variables:
                self._error(f"Variable desconocida {value!r}", column)
            return self.ring.variable(value)
        if value == "(":
            self.i += 1
            inner = self._expr()
            if not self._take(")"):
                self._error("Falta ')'")
            return inner
        self._error(f"Símbolo inesperado {value!r}", column)
