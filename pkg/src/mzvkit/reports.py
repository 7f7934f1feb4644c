"""Uniform result records for the verification suites.

One ``Report`` per checked case; serialises to a single JSON line with
the keys identity, index, order, residuals, tolerance, pass, elapsed_ms.
Exact checks use residuals [0.0] on success and carry the mismatch in
``detail`` on failure.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field


@dataclass
class Report:
    identity: str
    index: tuple[int, ...] | None = None
    order: int | None = None
    residuals: list[float] = field(default_factory=list)
    tolerance: float | None = None
    passed: bool = True
    elapsed_ms: float = 0.0
    detail: str | None = None

    def to_json(self) -> str:
        obj = {
            "identity": self.identity,
            "index": list(self.index) if self.index is not None else None,
            "order": self.order,
            "residuals": self.residuals,
            "tolerance": self.tolerance,
            "pass": self.passed,
            "elapsed_ms": round(self.elapsed_ms, 3),
        }
        if self.detail:
            obj["detail"] = self.detail
        return json.dumps(obj)

    @classmethod
    def from_json(cls, line: str) -> "Report":
        obj = json.loads(line)
        return cls(
            identity=obj["identity"],
            index=tuple(obj["index"]) if obj.get("index") is not None else None,
            order=obj.get("order"),
            residuals=list(obj.get("residuals") or []),
            tolerance=obj.get("tolerance"),
            passed=obj["pass"],
            elapsed_ms=obj.get("elapsed_ms", 0.0),
            detail=obj.get("detail"),
        )

    def text_row(self) -> str:
        idx = "(" + ",".join(map(str, self.index)) + ")" if self.index is not None else "-"
        res = max(self.residuals) if self.residuals else 0.0
        tol = f"{self.tolerance:.1e}" if self.tolerance is not None else "exact"
        status = "pass" if self.passed else "FAIL"
        row = f"{status:4s}  {self.identity:24s} {idx:18s} ord={self.order if self.order is not None else '-':<3} max_res={res:.2e} tol={tol:8s} {self.elapsed_ms:8.1f} ms"
        if not self.passed:
            if self.residuals:
                row += "\n      residuals: " + ", ".join(f"t^{e}: {r:.3e}" for e, r in enumerate(self.residuals))
            if self.detail:
                row += f"\n      {self.detail}"
        return row
