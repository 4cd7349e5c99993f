"""Check records and seeded random substreams."""
from __future__ import annotations

import dataclasses
import json
import zlib
from typing import Any

import numpy as np

PASS = "pass"
FAIL = "fail"
ERRATUM = "erratum-note"


@dataclasses.dataclass(frozen=True)
class CheckReport:
    """One verified identity.

    ``status`` is ``pass`` exactly when ``residual <= tolerance``; the
    ``erratum-note`` status marks a transcription discrepancy and never fails.
    Negative controls store the shortfall ``max(0, threshold - observed)`` as
    their residual with tolerance 0, so the same rule applies.
    """

    id: str
    paper_ref: str
    inputs: dict
    residual: float
    tolerance: float
    status: str
    detail: str = ""

    @property
    def ok(self) -> bool:
        return self.status != FAIL

    def to_json(self) -> str:
        return json.dumps(dataclasses.asdict(self), default=_jsonable)

    def to_text(self) -> str:
        line = f"[{self.status:>12}] {self.id}  residual={self.residual:.3e} tol={self.tolerance:.1e}"
        if self.detail:
            line += f"  ({self.detail})"
        return line


def _jsonable(obj: Any):
    if isinstance(obj, complex):
        return [obj.real, obj.imag]
    if isinstance(obj, np.generic):
        return obj.item()
    if isinstance(obj, np.ndarray):
        return obj.tolist()
    raise TypeError(f"cannot serialise {type(obj).__name__}")


def check(id: str, paper_ref: str, residual: float, tolerance: float,
          inputs: dict | None = None, detail: str = "") -> CheckReport:
    residual = float(residual)
    status = PASS if residual <= tolerance else FAIL
    return CheckReport(id, paper_ref, dict(inputs or {}), residual, float(tolerance), status, detail)


def negative_control(id: str, paper_ref: str, observed: float, threshold: float,
                     inputs: dict | None = None, detail: str = "") -> CheckReport:
    """Passes when ``observed > threshold``."""
    shortfall = max(0.0, threshold - float(observed))
    if observed <= threshold and shortfall == 0.0:
        shortfall = np.finfo(float).tiny
    note = f"observed={float(observed):.3e} must exceed {threshold:.1e}"
    return check(id, paper_ref, shortfall, 0.0, inputs, f"{note}; {detail}" if detail else note)


def substream(seed: int, check_id: str) -> np.random.Generator:
    """Generator keyed by (seed, check id); adding checks never shifts others."""
    return np.random.default_rng([int(seed), zlib.crc32(check_id.encode())])
