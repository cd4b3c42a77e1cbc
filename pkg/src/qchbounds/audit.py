"""Registry of printed constants and inequality claims, recomputed on demand."""

from __future__ import annotations

import dataclasses
import math
from dataclasses import dataclass, field
from datetime import datetime, timezone
from fractions import Fraction
from typing import Callable, Iterable

from . import bounds
from .bounds import D2Convention
from .records import ClaimRecord, Status, inequality_claim, value_claim
from .solvers import DEFAULT_TOL

TOL_5DP = 5e-5
TOL_ROOT = 5e-4
TOL_ROUNDED = 0.02
TOL_PSI_AT_L = 1e-3

TORSION_FREE_GENERA = (2, 3, 10)


def _k_a() -> list[ClaimRecord]:
    res = bounds.pseudo_anosov_constant()
    k = res.value
    return [
        value_claim("K_A", "root of K = mu_2(K)", 1.42588, k, TOL_ROOT),
        value_claim(
            "K_A.fixed_point",
            "mu_2(K_A) reproduces K_A",
            k,
            res.inputs["mu_g_at_root"],
            1e-10,
        ),
    ]


def _crossing(conv: D2Convention) -> list[ClaimRecord]:
    L, kd = bounds.multi_twist_constant(conv)
    by_conv = {c: bounds.multi_twist_constant(c) for c in D2Convention}
    l_notes = "; ".join(f"{c.value}: L={v[0]:.12g}" for c, v in by_conv.items())
    k_notes = "; ".join(f"{c.value}: phi(L)={v[1].value:.12g}" for c, v in by_conv.items())
    k_a = bounds.pseudo_anosov_constant().value
    k_c = min(kd.value, k_a)
    return [
        value_claim(
            "L.crossing",
            "crossing of phi and psi_mt",
            bounds.REF_L,
            L,
            TOL_ROOT,
            sensitive=True,
            notes=l_notes,
            extras={"convention": conv.value},
        ),
        value_claim(
            "K_D.crossing",
            "phi(L) = psi_mt(L) at the computed crossing",
            bounds.REF_K_D,
            kd.value,
            TOL_ROOT,
            sensitive=True,
            notes=k_notes,
            extras={"convention": conv.value, "psi_at_L": kd.inputs["psi_at_L"]},
        ),
        value_claim(
            "K_C",
            "min(K_D, K_A) for pure cyclic subgroups",
            bounds.REF_K_D,
            k_c,
            TOL_ROOT,
            sensitive=True,
            notes=f"K_A={k_a:.12g}; " + k_notes,
        ),
    ]


def _psi_at_printed_l() -> list[ClaimRecord]:
    return [
        value_claim(
            "K_D.psi_at_printed_L",
            "psi_mt at the printed crossing 1.33994",
            bounds.REF_K_D,
            bounds.psi_mt(bounds.REF_L),
            TOL_PSI_AT_L,
        )
    ]


def _torsion_free(conv: D2Convention) -> list[ClaimRecord]:
    out = []
    for g in TORSION_FREE_GENERA:
        out.extend(bounds.torsion_free_audit(g, bounds.REF_ELL0, conv))
        exact = Fraction(1, 7000 * g * g)
        out.append(
            value_claim(
                f"torsion_free.g{g}.bound",
                "log K >= 1/(7000 g^2)",
                float(exact),
                bounds.torsion_free_bound(g),
                0.0,
            )
        )
    return out


def _counting_hypothesis() -> list[ClaimRecord]:
    k_f = bounds.finite_subgroup_bound(2).value
    return [
        value_claim(
            "counting_hypothesis.C84",
            "C = 84 reproduces the finite-subgroup bound",
            k_f,
            bounds.hypothetical_counting_bound(84.0),
            1e-12,
        ),
        inequality_claim(
            "counting_hypothesis.gt1",
            "sqrt psi(2 arccosh(2/C + 1)) > 1 at C = 1e6",
            bounds.hypothetical_counting_bound(1e6),
            ">",
            1.0,
        ),
    ]


def _echoes() -> list[ClaimRecord]:
    return [
        value_claim("flm.log_bound", "log K >= 0.197 off shortest curves", 0.197,
                    bounds.flm_bound(), 0.0,
                    notes=f"K_T >= exp(0.197) = {math.exp(bounds.flm_bound()):.12g}"),
        value_claim("identity_class.bound", "K >= 1.626 when all classes are trivial",
                    1.626, bounds.CONSTANTS.identity_class_bound, 0.0),
        inequality_claim(
            "identity_class.exceeds_K_D",
            "1.626 > psi_mt(1.33994)",
            bounds.CONSTANTS.identity_class_bound,
            ">",
            bounds.psi_mt(bounds.REF_L),
        ),
        value_claim("hurwitz.g2", "84 (g - 1) at g = 2", 84.0,
                    float(bounds.CONSTANTS.hurwitz(2)), 0.0),
        value_claim("wiman.g2", "4 g + 2 at g = 2", 10.0,
                    float(bounds.CONSTANTS.wiman(2)), 0.0),
    ]


# each entry produces the records for a block of ids; order here is irrelevant
_REGISTRY: tuple[Callable[[D2Convention], Iterable[ClaimRecord]], ...] = (
    lambda conv: [value_claim("K_F", "sqrt psi(2 arccosh(1/42 + 1))", 1.11469,
                              bounds.finite_subgroup_bound(2).value, TOL_5DP)],
    lambda conv: [value_claim("K_P", "sqrt psi(2 arccosh(6/5))", 1.35547,
                              bounds.periodic_bound(2).value, TOL_5DP)],
    lambda conv: _k_a(),
    lambda conv: _psi_at_printed_l(),
    _crossing,
    _torsion_free,
    lambda conv: _counting_hypothesis(),
    lambda conv: _echoes(),
)

CLAIM_IDS: tuple[str, ...] = tuple(
    sorted(
        ["K_F", "K_P", "K_A", "K_A.fixed_point", "K_D.psi_at_printed_L",
         "L.crossing", "K_D.crossing", "K_C",
         "counting_hypothesis.C84", "counting_hypothesis.gt1",
         "flm.log_bound", "identity_class.bound", "identity_class.exceeds_K_D",
         "hurwitz.g2", "wiman.g2"]
        + [
            f"torsion_free.g{g}.{part}"
            for g in TORSION_FREE_GENERA
            for part in ("log_phi", "psi", "penner_link", "multitwist_link", "bound")
        ]
    )
)


@dataclass(frozen=True)
class AuditReport:
    records: tuple[ClaimRecord, ...]
    precision_config: dict = field(default_factory=dict)
    timestamp: str = ""

    @property
    def failed(self) -> list[ClaimRecord]:
        return [r for r in self.records if r.status is Status.FAIL]

    @property
    def ok(self) -> bool:
        return not self.failed

    def by_id(self, claim_id: str) -> ClaimRecord:
        for r in self.records:
            if r.id == claim_id:
                return r
        raise KeyError(claim_id)


def with_tolerance(rec: ClaimRecord, tol: float) -> ClaimRecord:
    """Copy of ``rec`` judged against a different tolerance."""
    if not tol >= 0.0:
        raise ValueError(f"tolerance must be >= 0, got {tol!r}")
    if rec.status is Status.SENSITIVE:
        status = Status.SENSITIVE
    else:
        status = Status.PASS if rec.abs_diff <= tol else Status.FAIL
    return dataclasses.replace(rec, tolerance=tol, status=status)


def run_audit(
    conv: D2Convention = D2Convention.DIAMETER,
    tol_overrides: dict[str, float] | None = None,
) -> AuditReport:
    """Recompute every registered claim. Individual claims may FAIL; this never raises for that."""
    conv = D2Convention(conv)
    tol_overrides = dict(tol_overrides or {})
    unknown = sorted(set(tol_overrides) - set(CLAIM_IDS))
    if unknown:
        raise ValueError(f"unknown claim id(s) in tolerance overrides: {', '.join(unknown)}")

    records = []
    for build in _REGISTRY:
        records.extend(build(conv))
    records = [
        with_tolerance(r, tol_overrides[r.id]) if r.id in tol_overrides else r
        for r in records
    ]
    records.sort(key=lambda r: r.id)

    ids = tuple(r.id for r in records)
    if ids != CLAIM_IDS:
        raise AssertionError(f"registry out of sync with CLAIM_IDS: {ids}")

    return AuditReport(
        records=tuple(records),
        precision_config={
            "arithmetic": "IEEE-754 binary64",
            "solver_tol": DEFAULT_TOL,
            "convention": conv.value,
            "d2": conv.d2,
        },
        timestamp=datetime.now(timezone.utc).isoformat(timespec="seconds"),
    )
