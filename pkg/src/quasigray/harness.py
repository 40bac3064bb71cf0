"""Exhaustive cycle enumeration and metric collection.

``enumerate_cycle`` steps a counter from its initial state until the
initial state recurs (or a cap is hit), certifying distinctness from raw
state snapshots and aggregating the ledger's probe charges into exact
rational metrics. Nothing here depends on floating point, so two runs of
the same enumeration are bit-identical.
"""

from __future__ import annotations

import os
from array import array
from dataclasses import dataclass
from decimal import Decimal, localcontext
from fractions import Fraction
from typing import Dict, Optional

from .probes import BitState, CounterSpec, ProbeLedger, UsageError

DEFAULT_CYCLE_CAP = 1 << 26
CAP_ENV_VAR = "QUASIGRAY_CYCLE_CAP"

# below this dimension the distinctness certificate is a 2^dim bitmap;
# above it, a hash set of snapshots
_BITMAP_MAX_DIM = 26


def cycle_cap_from_env(default: int = DEFAULT_CYCLE_CAP) -> int:
    raw = os.environ.get(CAP_ENV_VAR)
    if raw is None:
        return default
    try:
        cap = int(raw)
    except ValueError as exc:
        raise UsageError(f"{CAP_ENV_VAR} must be an integer, got {raw!r}") from exc
    if cap < 1:
        raise UsageError(f"{CAP_ENV_VAR} must be >= 1, got {cap}")
    return cap


@dataclass
class CycleReport:
    """Everything measured over one enumeration.

    ``length`` counts the steps taken; when ``closed`` it equals the cycle
    length L (first return to the initial state). ``last_state`` is the
    canonical text of the state visited just before that return.
    """

    counter: str
    dim: int
    params: Dict[str, object]
    length: int
    closed: bool
    distinct: bool
    space_efficiency: Fraction
    avg_reads: Fraction
    worst_reads: int
    avg_writes: Fraction
    worst_writes: int
    max_hamming: int
    total_reads: int
    total_writes: int
    last_state: Optional[str]
    step_reads: array
    step_writes: array
    step_hamming: array


def enumerate_cycle(counter: CounterSpec, cap: Optional[int] = None) -> CycleReport:
    """Run the counter until its initial state recurs or ``cap`` steps.

    A repeated non-initial state means the trajectory can never close
    (steps are deterministic), so the run stops early with
    ``closed = distinct = False``.
    """
    if cap is None:
        cap = DEFAULT_CYCLE_CAP
    if cap < 1:
        raise UsageError(f"cap must be >= 1, got {cap}")
    dim = counter.dim
    state = counter.fresh_state()
    ledger = ProbeLedger()
    advance = counter.advance

    masks = [1 << i for i in range(dim)]
    snap0 = state.to_int()
    snap = snap0

    use_bitmap = dim <= _BITMAP_MAX_DIM
    if use_bitmap:
        seen_bits = bytearray(((1 << dim) >> 3) + 1)
        seen_bits[snap0 >> 3] |= 1 << (snap0 & 7)
    else:
        seen_set = {snap0}

    step_reads = array("H")
    step_writes = array("H")
    step_hamming = array("H")
    max_hamming = 0
    closed = False
    distinct = True
    steps = 0
    prev = snap0

    bits = state.bits
    while steps < cap:
        ledger.open_step()
        advance(state, ledger)
        for p in ledger.write_set:
            if bits[p]:
                snap |= masks[p]
            else:
                snap &= ~masks[p]
        r, w = ledger.close_step()
        h = (prev ^ snap).bit_count()
        step_reads.append(r)
        step_writes.append(w)
        step_hamming.append(h)
        if h > max_hamming:
            max_hamming = h
        steps += 1
        if snap == snap0:
            closed = True
            break
        if use_bitmap:
            idx = snap >> 3
            bit = 1 << (snap & 7)
            if seen_bits[idx] & bit:
                distinct = False
                break
            seen_bits[idx] |= bit
        else:
            if snap in seen_set:
                distinct = False
                break
            seen_set.add(snap)
        prev = snap

    last_state = BitState.from_int(prev, dim).to_text() if closed else None
    return CycleReport(
        counter=counter.name,
        dim=dim,
        params=dict(counter.params),
        length=steps,
        closed=closed,
        distinct=distinct,
        space_efficiency=Fraction(steps, 1 << dim),
        avg_reads=Fraction(ledger.total_reads, steps),
        worst_reads=ledger.max_reads,
        avg_writes=Fraction(ledger.total_writes, steps),
        worst_writes=ledger.max_writes,
        max_hamming=max_hamming,
        total_reads=ledger.total_reads,
        total_writes=ledger.total_writes,
        last_state=last_state,
        step_reads=step_reads,
        step_writes=step_writes,
        step_hamming=step_hamming,
    )


@dataclass(frozen=True)
class QuasiGrayCheck:
    """Outcome of a quasi-Gray verification at constant c."""

    passed: bool
    c: int
    violation_step: Optional[int] = None  # 1-based step number
    violation_kind: Optional[str] = None  # "hamming" or "writes"
    violation_value: Optional[int] = None

    def describe(self) -> str:
        if self.passed:
            return f"quasi-Gray with c={self.c}"
        return (
            f"step {self.violation_step}: {self.violation_kind} = "
            f"{self.violation_value} exceeds c = {self.c}"
        )


def verify_quasi_gray(report: CycleReport, c: int) -> QuasiGrayCheck:
    """Pass iff every consecutive pair (wrap included) differs in at most c
    bits and every step wrote at most c bits."""
    if c < 1:
        raise UsageError(f"c must be >= 1, got {c}")
    if not report.closed or not report.distinct:
        raise UsageError("verify_quasi_gray needs a closed, distinct report")
    if report.max_hamming <= c and report.worst_writes <= c:
        return QuasiGrayCheck(passed=True, c=c)
    for idx in range(report.length):
        if report.step_hamming[idx] > c:
            return QuasiGrayCheck(False, c, idx + 1, "hamming", report.step_hamming[idx])
        if report.step_writes[idx] > c:
            return QuasiGrayCheck(False, c, idx + 1, "writes", report.step_writes[idx])
    raise AssertionError("aggregates disagree with per-step data")


def decimal_str(value: Fraction, digits: int = 10) -> str:
    """Deterministic decimal rendering with the given significant digits."""
    with localcontext() as ctx:
        ctx.prec = digits
        quotient = Decimal(value.numerator) / Decimal(value.denominator)
    return str(quotient)


def _rational_entry(value: Fraction) -> Dict[str, object]:
    return {
        "num": value.numerator,
        "den": value.denominator,
        "decimal": decimal_str(value),
    }


def params_text(params: Dict[str, object]) -> str:
    """Stable one-cell rendering of the non-dimension parameters."""
    items = [(k, v) for k, v in sorted(params.items()) if k != "dim"]
    return ";".join(f"{k}={v}" for k, v in items)


def flatten_report(report: CycleReport) -> Dict[str, object]:
    return {
        "counter": report.counter,
        "dim": report.dim,
        "params": params_text(report.params),
        "length": report.length,
        "closed": report.closed,
        "distinct": report.distinct,
        "space_efficiency": _rational_entry(report.space_efficiency),
        "avg_reads": _rational_entry(report.avg_reads),
        "worst_reads": report.worst_reads,
        "avg_writes": _rational_entry(report.avg_writes),
        "worst_writes": report.worst_writes,
        "max_hamming": report.max_hamming,
    }


def collect_metrics(report: CycleReport) -> Dict[str, object]:
    """Flatten a closed report for export; rationals carry num/den and a
    10-significant-digit decimal rendering."""
    if not report.closed:
        raise UsageError("collect_metrics needs a closed report")
    return flatten_report(report)


def standard_binary_step(state: BitState, ledger: ProbeLedger) -> None:
    """Binary increment with carry: flip 1s from bit 0 upward until a 0 is
    flipped to 1; all-ones wraps to all zeros. Reads = writes = chain."""
    for pos in range(state.dim):
        if ledger.read(state, pos):
            ledger.write(state, pos, 0)
        else:
            ledger.write(state, pos, 1)
            return


def make_binary_counter(dim: int) -> CounterSpec:
    if dim < 1:
        raise UsageError(f"dimension must be >= 1, got {dim}")
    return CounterSpec(
        name="binary",
        dim=dim,
        params={"dim": dim},
        initial=BitState.zeros(dim),
        advance=standard_binary_step,
        claimed_c=dim,
    )
