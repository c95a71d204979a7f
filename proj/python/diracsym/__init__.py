"""Exact discrete-symmetry audit of Dirac-type equations in 1+d dimensions.

Matrices come back as nested lists of ``complex_q`` pairs (real and imaginary
parts as ``fractions.Fraction``); ``to_numpy`` gives a floating-point view.
"""

from __future__ import annotations

import json
import re
from fractions import Fraction
from typing import NamedTuple, Sequence

from . import _core

__version__ = _core.__version__

__all__ = [
    "ComplexQ",
    "clifford_holds",
    "gammas",
    "solve_tau",
    "classify",
    "dispersion",
    "labels",
    "run_cli",
    "to_numpy",
]


class ComplexQ(NamedTuple):
    re: Fraction
    im: Fraction

    def __complex__(self) -> complex:
        return complex(float(self.re), float(self.im))


def _q(part) -> Fraction:
    num, den = part
    return Fraction(int(num), int(den))


def _scalar(obj) -> ComplexQ:
    return ComplexQ(_q(obj["re"]), _q(obj["im"]))


def _matrix(rows):
    return [[_scalar(z) for z in row] for row in rows]


_INT = re.compile(r"-?[0-9]+")


def _is_rational(obj) -> bool:
    return (isinstance(obj, list) and len(obj) == 2 and all(isinstance(x, str) and _INT.fullmatch(x) for x in obj)
            and not obj[1].startswith("-") and obj[1] != "0")


def _decode(obj):
    """Recursively replace exact scalars by ComplexQ and ["num", "den"] pairs by Fraction."""
    if _is_rational(obj):
        return _q(obj)
    if isinstance(obj, dict):
        if set(obj) == {"re", "im"}:
            return _scalar(obj)
        return {k: _decode(v) for k, v in obj.items()}
    if isinstance(obj, list):
        return [_decode(v) for v in obj]
    return obj


def _qstr(x) -> str:
    x = Fraction(x)
    return f"{x.numerator}/{x.denominator}" if x.denominator != 1 else str(x.numerator)


def to_numpy(matrix):
    import numpy as np

    return np.array([[complex(z) for z in row] for row in matrix], dtype=complex)


def gammas(d: int, basis: str = "dirac"):
    """gamma_0 .. gamma_d for P(1,d) as exact matrices."""
    return [_matrix(m) for m in json.loads(_core.gamma_json(d, basis))]


def clifford_holds(d: int, basis: str = "dirac") -> bool:
    return _core.clifford_holds(d, basis)


def solve_tau(d: int, variant: str, symmetry: str, mass=1, basis: str = "dirac", ansatz: str = "full") -> dict:
    return _decode(json.loads(_core.solve_tau_json(d, variant, symmetry, _qstr(mass), basis, ansatz)))


def classify(dims: Sequence[int], variants: Sequence[str] = ("single",), candidates: Sequence[str] = (),
             mass=1, basis: str = "dirac", jobs: int = 1) -> list:
    raw = _core.classify_json(list(dims), list(variants), list(candidates), _qstr(mass), basis, jobs)
    return _decode(json.loads(raw))


def dispersion(d: int, variant: str, momentum: Sequence, mass=1, basis: str = "dirac") -> dict:
    return _decode(json.loads(_core.dispersion_json(d, variant, [_qstr(p) for p in momentum], _qstr(mass), basis)))


def labels(variant: str = "single", mass=1, basis: str = "dirac") -> list[str]:
    return _core.labels(variant, _qstr(mass), basis)


def run_cli(args: Sequence[str]) -> tuple[int, str, str]:
    """Runs the command-line tool in-process: (exit code, stdout, stderr)."""
    return _core.run_cli(list(args))
