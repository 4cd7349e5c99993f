"""Fixtures holding matrices exactly as typeset, and the entry-by-entry diff.

A fixture is a text file with one matrix row per line and comma-separated
entries.  Constant matrices use Gaussian-integer notation (``0``, ``-1``,
``1i``, ``-1i``, ``2+1i``); momentum-dependent ones hold sympy expressions in
``p1, p2, p3, mu`` (and ``d1, d2`` for derivative operators).  Lines starting
with ``#`` are comments.
"""
from __future__ import annotations

import dataclasses
import re
from importlib import resources
from pathlib import Path

import numpy as np
import sympy

from .algebra import GaussMatrix
from .report import ERRATUM, CheckReport

p1, p2, p3, mu, d1, d2 = sympy.symbols("p1 p2 p3 mu d1 d2")
SYMBOLS = {"p1": p1, "p2": p2, "p3": p3, "mu": mu, "d1": d1, "d2": d2, "I": sympy.I}

_GAUSS = re.compile(r"^[+-]?\d+([+-]\d*i)?$|^[+-]?\d*i$")

FIXTURE_DIR = resources.files("mcs_dkp") / "fixtures"


@dataclasses.dataclass(frozen=True)
class ErratumReport:
    target: str
    position: tuple[int, int]
    derived: object
    printed: object
    note: str

    def to_check(self, paper_ref: str) -> CheckReport:
        r, c = self.position
        return CheckReport(
            id=f"errata.{self.target}.{r}.{c}",
            paper_ref=paper_ref,
            inputs={"row": r, "col": c, "derived": str(self.derived), "printed": str(self.printed)},
            residual=0.0,
            tolerance=0.0,
            status=ERRATUM,
            detail=self.note,
        )


def parse_gaussian(token: str) -> complex:
    """``'0'``, ``'-1'``, ``'1i'``, ``'-1i'``, ``'2-3i'`` -> complex with integral parts."""
    token = token.strip().replace(" ", "")
    if not _GAUSS.match(token):
        raise ValueError(f"not a Gaussian integer: {token!r}")
    token = re.sub(r"(^|[+-])i$", r"\g<1>1i", token)
    return complex(token.replace("i", "j"))


def _rows(path: Path) -> list[list[str]]:
    text = Path(path).read_text()
    rows = [line.split(",") for line in text.splitlines()
            if line.strip() and not line.lstrip().startswith("#")]
    if not rows or any(len(r) != len(rows) for r in rows):
        raise ValueError(f"{path}: fixture must be a square matrix")
    return rows


def fixture_path(name: str) -> Path:
    path = Path(str(FIXTURE_DIR / f"{name}.mat"))
    if not path.is_file():
        raise FileNotFoundError(f"missing fixture {name!r} ({path})")
    return path


def load_constant(name: str, path: Path | None = None) -> GaussMatrix:
    rows = _rows(path or fixture_path(name))
    return GaussMatrix.from_complex([[parse_gaussian(t) for t in r] for r in rows])


def load_symbolic(name: str, path: Path | None = None) -> sympy.Matrix:
    rows = _rows(path or fixture_path(name))
    return sympy.Matrix([[sympy.sympify(t.strip(), locals=SYMBOLS) for t in r] for r in rows])


def _classify(derived, printed) -> str:
    if sympy.simplify(derived + printed) == 0:
        return "sign differs"
    if printed == 0:
        return "printed entry is zero"
    if derived == 0:
        return "derived entry is zero"
    return "value differs"


def diff_matrices(target: str, derived, printed, labels=None) -> list[ErratumReport]:
    """Entry-by-entry comparison; only mismatches produce a report.

    Positions are 1-based.  Works for :class:`GaussMatrix` pairs and for
    sympy matrices (compared after simplification).
    """
    if isinstance(derived, GaussMatrix):
        derived = derived.to_sympy()
    if isinstance(printed, GaussMatrix):
        printed = printed.to_sympy()
    derived, printed = sympy.Matrix(derived), sympy.Matrix(printed)
    if derived.shape != printed.shape:
        raise ValueError(f"{target}: shape {derived.shape} vs printed {printed.shape}")
    out = []
    for r in range(derived.rows):
        for c in range(derived.cols):
            d, p = sympy.nsimplify(derived[r, c]), sympy.nsimplify(printed[r, c])
            if sympy.simplify(d - p) != 0:
                note = _classify(d, p)
                if labels is not None:
                    note += f"; row {labels[r]}, column {labels[c]}"
                out.append(ErratumReport(target, (r + 1, c + 1), d, p, note))
    return out


def as_complex(m: sympy.Matrix, values: dict) -> np.ndarray:
    """Evaluate a symbolic fixture at numeric symbol values."""
    subs = {SYMBOLS[k]: v for k, v in values.items()}
    return np.array(m.subs(subs).evalf(), dtype=complex)
