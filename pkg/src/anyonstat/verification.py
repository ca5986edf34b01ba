"""Residual sweeps for the intertwiner identities, and their CSV form."""

from __future__ import annotations

import csv
import dataclasses
import io
from pathlib import Path
from typing import Iterable, Sequence

import numpy as np

from .covering import (
    PlaneWaveFunction,
    equivariance_defect,
    inner_plane,
    inner_relative,
    intertwiner_V,
    intertwiner_V_adjoint,
    intertwining_residual,
    norm_plane,
    random_packet_mixture,
    random_plane,
    rotate_relative,
    theorem1_roundtrip_residual,
    trapezoid_grid,
)
from .phases import Phase, Turns, phase_from_turns

CSV_HEADER = ("M", "K", "k", "s", "check", "value", "pass")
DEFAULT_TOL = 1e-10
DEFAULT_SEED = 20040101


@dataclasses.dataclass(frozen=True)
class CheckResult:
    check: str
    M: int
    K: int
    k: int | None
    s: str
    value: float
    passed: bool

    def row(self) -> list[str]:
        return [
            str(self.M),
            str(self.K),
            "" if self.k is None else str(self.k),
            self.s,
            self.check,
            repr(float(self.value)),
            "true" if self.passed else "false",
        ]


@dataclasses.dataclass
class VerificationReport:
    entries: list[CheckResult] = dataclasses.field(default_factory=list)

    @property
    def overall(self) -> bool:
        return all(e.passed for e in self.entries)

    def add(self, check: str, M: int, K: int, k: int | None, s: str, value: float, tol: float):
        value = float(value)
        self.entries.append(CheckResult(check, M, K, k, s, value, bool(value < tol)))

    def failures(self) -> list[CheckResult]:
        return [e for e in self.entries if not e.passed]

    def to_csv(self) -> str:
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(CSV_HEADER)
        writer.writerows(e.row() for e in self.entries)
        return buf.getvalue()

    def write_csv(self, path: str | Path) -> None:
        with open(path, "w", encoding="utf-8", newline="") as fh:
            fh.write(self.to_csv())


def read_csv(path: str | Path) -> list[CheckResult]:
    with open(path, encoding="utf-8", newline="") as fh:
        reader = csv.DictReader(fh)
        if tuple(reader.fieldnames or ()) != CSV_HEADER:
            raise ValueError(f"unexpected CSV header {reader.fieldnames}")
        return [
            CheckResult(
                check=row["check"],
                M=int(row["M"]),
                K=int(row["K"]),
                k=int(row["k"]) if row["k"] else None,
                s=row["s"],
                value=float(row["value"]),
                passed=row["pass"] == "true",
            )
            for row in reader
        ]


def full_k_sweep(M: int) -> list[int]:
    return list(range(-2 * M, 2 * M + 1))


def verify_intertwiner(
    s: Turns | str,
    M: int,
    K: int,
    k_values: Iterable[int] | None = None,
    *,
    kappa_claim: Phase | None = None,
    tol: float = DEFAULT_TOL,
    seed: int = DEFAULT_SEED,
    psi: PlaneWaveFunction | None = None,
    report: VerificationReport | None = None,
) -> VerificationReport:
    """Run unitarity, adjoint, equivariance, intertwining and round-trip checks.

    ``kappa_claim`` defaults to ``exp(2πi s)``; any other value should make
    the equivariance check fail.
    """
    s_label = s if isinstance(s, str) else str(s)
    grid = trapezoid_grid(M, K)
    rng = np.random.default_rng(seed)
    if psi is None:
        psi = random_packet_mixture(grid, rng)
    else:
        grid = psi.grid
    other = random_plane(grid, rng)
    kappa = phase_from_turns(s)
    if kappa_claim is None:
        kappa_claim = kappa
    if report is None:
        report = VerificationReport()
    ks = full_k_sweep(M) if k_values is None else list(k_values)

    v_psi = intertwiner_V(psi, s)
    v_other = intertwiner_V(other, s)
    npsi, nother = norm_plane(psi), norm_plane(other)
    unit = abs(inner_relative(v_psi, v_other) - inner_plane(psi, other)) / (npsi * nother)
    report.add("unitarity", M, K, None, s_label, unit, tol)

    back = intertwiner_V_adjoint(v_psi, s).samples
    forth = intertwiner_V(intertwiner_V_adjoint(v_other, s), s).samples
    adj = max(np.max(np.abs(back - psi.samples)), np.max(np.abs(forth - v_other.samples)))
    report.add("adjoint_inverse", M, K, None, s_label, adj, tol)

    rot_pi = rotate_relative(v_psi, M).samples
    pi_defect = np.max(np.abs(rot_pi - complex(kappa) * v_psi.samples))
    report.add("rel_rotation_pi", M, K, M, s_label, pi_defect, tol)

    eq = equivariance_defect(psi, s, kappa_claim) / npsi
    report.add("equivariance", M, K, None, s_label, eq, tol)

    for k in ks:
        report.add("intertwining", M, K, k, s_label, intertwining_residual(psi, k, s), tol)
        report.add("roundtrip", M, K, k, s_label, theorem1_roundtrip_residual(psi, k, s), tol)
    return report


def format_report(entries: Sequence[CheckResult]) -> str:
    """Fixed-width text table; values printed with ``repr`` so they parse back exactly."""
    lines = [f"{'check':<16} {'M':>4} {'K':>4} {'k':>6} {'s':>8}  {'value':<24} result"]
    for e in entries:
        k = "" if e.k is None else str(e.k)
        lines.append(
            f"{e.check:<16} {e.M:>4} {e.K:>4} {k:>6} {e.s:>8}  {float(e.value)!r:<24} "
            f"{'PASS' if e.passed else 'FAIL'}"
        )
    return "\n".join(lines)
