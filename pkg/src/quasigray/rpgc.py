"""Recursive Partition Gray Code increment and decrement.

An even-length string splits into halves A (low indices) and B; a step
increments A unless A equals B, in which case it decrements B. An
odd-length string keeps bit 0 as a direction bit x and sweeps the tail W
up (x=0) and back down (x=1), turning x at the extreme states of W. Those
extremes are all-zeros (minimum) and 1 followed by zeros (maximum); the
test suite confirms this empirically for every dimension it enumerates.

Read orders are part of the contract, because the average-read behaviour
depends on them:

* equality comparisons read pairs (A[0],B[0]), (A[1],B[1]), ... and stop
  at the first differing pair;
* the maximum-state test alternates across W's halves (a0, b0, a1, b1,
  ...), the same prefix the follow-up equality comparison consults;
* the minimum-state test reads W's second half first, zigzagging across
  its quarters, then the first half back to front, matching the prefix of
  the successor comparison used by the decrement.
"""

from __future__ import annotations

from dataclasses import dataclass

from .probes import BitState, CounterSpec, ProbeLedger, UsageError


@dataclass(frozen=True)
class SubrangeView:
    """A window of ``length`` bits of ``base`` starting at ``offset``."""

    base: BitState
    offset: int
    length: int

    def __post_init__(self):
        if self.length < 1:
            raise UsageError(f"view length must be >= 1, got {self.length}")
        if self.offset < 0 or self.offset + self.length > self.base.dim:
            raise UsageError(
                f"view [{self.offset}, {self.offset + self.length}) exceeds "
                f"dim {self.base.dim}"
            )


def _equal(s: BitState, led: ProbeLedger, off_a: int, off_b: int, n: int) -> bool:
    for i in range(n):
        if led.read(s, off_a + i) != led.read(s, off_b + i):
            return False
    return True


def _all_zero(s: BitState, led: ProbeLedger, off: int, n: int) -> bool:
    for i in range(n):
        if led.read(s, off + i):
            return False
    return True


def _is_max(s: BitState, led: ProbeLedger, off: int, n: int) -> bool:
    # target is 1 followed by zeros; n is even (the tail of an odd string)
    h = n >> 1
    for i in range(h):
        want = 1 if i == 0 else 0
        if led.read(s, off + i) != want:
            return False
        if led.read(s, off + h + i) != 0:
            return False
    return True


def _is_min(s: BitState, led: ProbeLedger, off: int, n: int) -> bool:
    # all-zeros test; B half first (zigzag across its quarters), then A's
    # second half, then A's first half
    h = n >> 1
    b = off + h
    q = h >> 1
    for i in range(q):
        if led.read(s, b + i):
            return False
        if led.read(s, b + q + i):
            return False
    if h & 1:
        if led.read(s, b + h - 1):
            return False
    for i in range(h >> 1, h):
        if led.read(s, off + i):
            return False
    for i in range(h >> 1):
        if led.read(s, off + i):
            return False
    return True


def _compare_inc(s: BitState, led: ProbeLedger, off_a: int, off_b: int, n: int) -> bool:
    """True iff A equals the successor of B."""
    if n == 1:
        return led.read(s, off_a) != led.read(s, off_b)
    if n & 1 == 0:
        h = n >> 1
        if _equal(s, led, off_b, off_b + h, h):
            # incrementing B decrements B2, so A1 must equal B1
            if not _equal(s, led, off_a, off_b, h):
                return False
            return _compare_inc(s, led, off_b + h, off_a + h, h)
        if not _equal(s, led, off_a + h, off_b + h, h):
            return False
        return _compare_inc(s, led, off_a, off_b, h)
    # odd length: B = [x, W]
    m = n - 1
    if led.read(s, off_b) == 0:
        if _is_max(s, led, off_b + 1, m):
            # successor of B sets x, leaving W alone
            return led.read(s, off_a) == 1 and _equal(s, led, off_a + 1, off_b + 1, m)
        return led.read(s, off_a) == 0 and _compare_inc(
            s, led, off_a + 1, off_b + 1, m
        )
    if _is_min(s, led, off_b + 1, m):
        # successor of B is all zeros
        return led.read(s, off_a) == 0 and _all_zero(s, led, off_a + 1, m)
    # successor of B decrements W, so W must be the successor of A's tail
    return led.read(s, off_a) == 1 and _compare_inc(s, led, off_b + 1, off_a + 1, m)


def _inc_pow2(s: BitState, led: ProbeLedger, off: int, n: int) -> None:
    while n > 1:
        h = n >> 1
        if _equal(s, led, off, off + h, h):
            _dec_pow2(s, led, off + h, h)
            return
        n = h
    led.write(s, off, led.read(s, off) ^ 1)


def _dec_pow2(s: BitState, led: ProbeLedger, off: int, n: int) -> None:
    while n > 1:
        h = n >> 1
        if _compare_inc(s, led, off, off + h, h):
            _inc_pow2(s, led, off + h, h)
            return
        n = h
    led.write(s, off, led.read(s, off) ^ 1)


def _inc(s: BitState, led: ProbeLedger, off: int, n: int) -> None:
    if n == 1:
        led.write(s, off, led.read(s, off) ^ 1)
        return
    if n & (n - 1) == 0:
        _inc_pow2(s, led, off, n)
        return
    if n & 1:
        m = n - 1
        if led.read(s, off) == 0:
            if _is_max(s, led, off + 1, m):
                led.write(s, off, 1)
            else:
                _inc(s, led, off + 1, m)
        else:
            if _is_min(s, led, off + 1, m):
                led.write(s, off, 0)
            else:
                _dec(s, led, off + 1, m)
        return
    h = n >> 1
    if _equal(s, led, off, off + h, h):
        _dec(s, led, off + h, h)
    else:
        _inc(s, led, off, h)


def _dec(s: BitState, led: ProbeLedger, off: int, n: int) -> None:
    if n == 1:
        led.write(s, off, led.read(s, off) ^ 1)
        return
    if n & (n - 1) == 0:
        _dec_pow2(s, led, off, n)
        return
    if n & 1:
        m = n - 1
        if led.read(s, off) == 0:
            if _is_min(s, led, off + 1, m):
                led.write(s, off, 1)
            else:
                _dec(s, led, off + 1, m)
        else:
            if _is_max(s, led, off + 1, m):
                led.write(s, off, 0)
            else:
                _inc(s, led, off + 1, m)
        return
    h = n >> 1
    if _compare_inc(s, led, off, off + h, h):
        _inc(s, led, off + h, h)
    else:
        _dec(s, led, off, h)


def _check_same_base(a: SubrangeView, b: SubrangeView) -> None:
    if a.base is not b.base:
        raise UsageError("views must share one base state")
    if a.length != b.length:
        raise UsageError(f"length mismatch: {a.length} != {b.length}")


def compare_equal(a: SubrangeView, b: SubrangeView, ledger: ProbeLedger) -> bool:
    """Pairwise equality scan, stopping at the first differing pair."""
    _check_same_base(a, b)
    return _equal(a.base, ledger, a.offset, b.offset, a.length)


def compare_inc(a: SubrangeView, b: SubrangeView, ledger: ProbeLedger) -> bool:
    """True iff incrementing ``b`` would put its bits in the state of ``a``.

    Power-of-two lengths follow the half-splitting recursion exactly; other
    lengths fall back on the direction-bit structure of the successor.
    """
    _check_same_base(a, b)
    return _compare_inc(a.base, ledger, a.offset, b.offset, a.length)


def _require_pow2(n: int) -> None:
    if n & (n - 1):
        raise UsageError(f"length must be a power of two, got {n}")


def rpgc_increment_pow2(view: SubrangeView, ledger: ProbeLedger) -> None:
    _require_pow2(view.length)
    _inc_pow2(view.base, ledger, view.offset, view.length)


def rpgc_decrement_pow2(view: SubrangeView, ledger: ProbeLedger) -> None:
    _require_pow2(view.length)
    _dec_pow2(view.base, ledger, view.offset, view.length)


def rpgc_increment(view: SubrangeView, ledger: ProbeLedger) -> None:
    """One step forward; writes exactly one bit."""
    _inc(view.base, ledger, view.offset, view.length)


def rpgc_decrement(view: SubrangeView, ledger: ProbeLedger) -> None:
    """Exact inverse of :func:`rpgc_increment`; writes exactly one bit."""
    _dec(view.base, ledger, view.offset, view.length)


def make_rpgc_counter(dim: int) -> CounterSpec:
    if dim < 1:
        raise UsageError(f"dimension must be >= 1, got {dim}")

    def advance(state: BitState, ledger: ProbeLedger) -> None:
        _inc(state, ledger, 0, dim)

    return CounterSpec(
        name="rpgc",
        dim=dim,
        params={"dim": dim},
        initial=BitState.zeros(dim),
        advance=advance,
        claimed_c=1,
    )
