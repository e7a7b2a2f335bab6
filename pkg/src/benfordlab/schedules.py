"""Index-dependent parameter schedules.

A schedule maps an index n >= 1 to a real value.  The same abstraction
serves distribution parameters (p_n, lambda_n, a_n, b_n, alpha_n), the
exponent sequence d_n and the decay sequence r_n of the rate bound.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from .errors import DomainError

CONSTANT = "constant"
POLYNOMIAL = "polynomial"
LOGARITHMIC = "logarithmic"
EXPLICIT = "explicit"

_KINDS = (CONSTANT, POLYNOMIAL, LOGARITHMIC, EXPLICIT)


@dataclass(frozen=True)
class Schedule:
    """A deterministic map n -> value.

    kinds:
      constant     -> c
      polynomial   -> c * n**exponent
      logarithmic  -> c * log(n + 1)
      explicit     -> values[n - 1]  (finite, index past the end is an error)
    """

    kind: str
    c: float = 1.0
    exponent: float = 0.0
    values: tuple[float, ...] = field(default=())

    def __post_init__(self):
        if self.kind not in _KINDS:
            raise DomainError(f"unknown schedule kind {self.kind!r}")
        if self.kind == EXPLICIT and len(self.values) == 0:
            raise DomainError("explicit schedule needs at least one value")
        if not math.isfinite(self.c) or not math.isfinite(self.exponent):
            raise DomainError("schedule parameters must be finite")

    @classmethod
    def constant(cls, value: float) -> "Schedule":
        return cls(CONSTANT, c=float(value))

    @classmethod
    def polynomial(cls, c: float, exponent: float) -> "Schedule":
        return cls(POLYNOMIAL, c=float(c), exponent=float(exponent))

    @classmethod
    def logarithmic(cls, c: float) -> "Schedule":
        return cls(LOGARITHMIC, c=float(c))

    @classmethod
    def explicit(cls, values) -> "Schedule":
        return cls(EXPLICIT, values=tuple(float(v) for v in values))

    def __call__(self, n):
        """Evaluate at n (scalar or integer array), n >= 1."""
        arr = np.asarray(n)
        if np.any(arr < 1):
            raise DomainError("schedule index must be >= 1")
        if self.kind == CONSTANT:
            out = np.full(arr.shape, self.c)
        elif self.kind == POLYNOMIAL:
            out = self.c * np.power(arr.astype(float), self.exponent)
        elif self.kind == LOGARITHMIC:
            out = self.c * np.log(arr.astype(float) + 1.0)
        else:
            if np.any(arr > len(self.values)):
                raise DomainError(
                    f"explicit schedule has {len(self.values)} values, "
                    f"index {int(np.max(arr))} requested"
                )
            out = np.asarray(self.values)[arr - 1]
        if np.ndim(n) == 0:
            return float(out)
        return out

    def describe(self) -> str:
        if self.kind == CONSTANT:
            return f"const:{self.c:g}"
        if self.kind == POLYNOMIAL:
            return f"poly:c={self.c:g},theta={self.exponent:g}"
        if self.kind == LOGARITHMIC:
            return f"log:c={self.c:g}"
        return "list:" + ",".join(f"{v:g}" for v in self.values)


def parse_schedule(text: str) -> Schedule:
    """Parse the CLI syntax: const:V | poly:c=C,theta=T | log:c=C | list:V1,V2,...

    A bare number is shorthand for a constant schedule.
    """
    text = text.strip()
    try:
        return Schedule.constant(float(text))
    except ValueError:
        pass
    if ":" not in text:
        raise DomainError(f"cannot parse schedule {text!r}")
    kind, _, body = text.partition(":")
    kind = kind.strip().lower()
    if kind == "const":
        return Schedule.constant(float(body))
    if kind == "list":
        return Schedule.explicit(float(v) for v in body.split(","))
    if kind in ("poly", "log"):
        params = {}
        for chunk in body.split(","):
            key, _, val = chunk.partition("=")
            params[key.strip()] = float(val)
        if kind == "log":
            return Schedule.logarithmic(params.get("c", 1.0))
        return Schedule.polynomial(params.get("c", 1.0), params.get("theta", 0.0))
    raise DomainError(f"cannot parse schedule {text!r}")
