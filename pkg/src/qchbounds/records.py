"""Claim records: one printed constant or inequality checked against recomputation."""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from typing import Union


class Status(str, Enum):
    PASS = "PASS"
    FAIL = "FAIL"
    SENSITIVE = "SENSITIVE"


@dataclass(frozen=True)
class ClaimRecord:
    """A single audited claim.

    ``paper_value`` is either the printed number or an inequality string such
    as ``"> 1"``. For inequalities ``abs_diff`` is the amount by which the
    inequality is violated (0 when it holds) and ``tolerance`` is 0.
    """

    id: str
    description: str
    paper_value: Union[float, str]
    computed_value: float
    abs_diff: float
    tolerance: float
    status: Status
    convention_notes: str = ""
    extras: dict = field(default_factory=dict, compare=False)

    @property
    def within_tolerance(self) -> bool:
        return self.abs_diff <= self.tolerance


def value_claim(
    id: str,
    description: str,
    paper_value: float,
    computed: float,
    tol: float,
    sensitive: bool = False,
    notes: str = "",
    extras: dict | None = None,
) -> ClaimRecord:
    diff = abs(computed - paper_value)
    return ClaimRecord(
        id=id,
        description=description,
        paper_value=paper_value,
        computed_value=computed,
        abs_diff=diff,
        tolerance=tol,
        status=_status(diff <= tol, sensitive),
        convention_notes=notes,
        extras=extras or {},
    )


def inequality_claim(
    id: str,
    description: str,
    lhs: float,
    op: str,
    rhs: float,
    sensitive: bool = False,
    notes: str = "",
    extras: dict | None = None,
    tol: float = 0.0,
) -> ClaimRecord:
    """Record for ``lhs op rhs`` with ``op`` one of ``>``, ``>=``, ``<``, ``<=``."""
    if op in (">", ">="):
        violation = max(0.0, rhs - lhs)
        holds = lhs > rhs if op == ">" else lhs >= rhs
    elif op in ("<", "<="):
        violation = max(0.0, lhs - rhs)
        holds = lhs < rhs if op == "<" else lhs <= rhs
    else:
        raise ValueError(f"unknown comparison {op!r}")
    if not holds and violation == 0.0:
        # strict inequality failing at exact equality
        violation = float.fromhex("0x1p-1074")
    return ClaimRecord(
        id=id,
        description=description,
        paper_value=f"{op} {rhs:.12g}",
        computed_value=lhs,
        abs_diff=violation,
        tolerance=tol,
        status=_status(violation <= tol, sensitive),
        convention_notes=notes,
        extras=extras or {},
    )


def _status(ok: bool, sensitive: bool) -> Status:
    if sensitive:
        return Status.SENSITIVE
    return Status.PASS if ok else Status.FAIL
