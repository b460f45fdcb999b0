"""Evaluation contexts at primitive (4r+2)-th roots of unity."""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

from .laurent import LaurentPoly


@dataclass(frozen=True)
class RootContext:
    """Level-r evaluation data: A = exp(i pi / (2r+1)).

    This choice makes A a primitive (4r+2)-th root of unity with
    A**4 = exp(2 pi i / (r + 1/2)), so the skein variable and the
    evaluation point used for norm sums come from one constant.
    ``precision`` is the working mantissa size in bits for backends
    that support extended precision.
    """

    r: int
    precision: int = 53

    def __post_init__(self):
        if self.r < 3:
            raise ValueError("level r must be >= 3")
        if self.precision < 24:
            raise ValueError("precision below 24 bits is not supported")

    @property
    def order(self) -> int:
        return 4 * self.r + 2

    @property
    def A_value(self) -> complex:
        return cmath.exp(1j * math.pi / (2 * self.r + 1))

    @property
    def t_value(self) -> complex:
        """A**4 = exp(2 pi i / (r + 1/2))."""
        return cmath.exp(4j * math.pi / (2 * self.r + 1))

    def is_primitive_root(self) -> bool:
        """A**(4r+2) = 1 and no smaller positive power hits 1."""
        a = self.A_value
        if abs(a ** self.order - 1) > 1e-10:
            return False
        return all(abs(a ** k - 1) > 1e-10 for k in range(1, self.order))


def quantum_integer(n: int, ctx: RootContext) -> float:
    """[n] = (A**2n - A**-2n) / (A**2 - A**-2) at A = ctx.A_value.

    The value is real; a residual imaginary part above 1e-12 signals a
    broken context and raises.
    """
    a = ctx.A_value
    num = a ** (2 * n) - a ** (-2 * n)
    den = a ** 2 - a ** (-2)
    val = num / den
    if abs(val.imag) >= 1e-12:
        raise ArithmeticError(f"quantum integer came out non-real: {val!r}")
    return val.real


def eval_at_root(p: LaurentPoly, ctx: RootContext) -> complex:
    """Evaluate an exact Laurent polynomial at A = ctx.A_value.

    Summation runs in ascending exponent order for reproducibility.
    """
    return p.eval_at(ctx.A_value)
