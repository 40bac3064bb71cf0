"""Name-based construction of counters, shared by the CLI and the tests."""

from __future__ import annotations

from typing import Optional, Sequence

from .brgc import make_brgc_counter
from .composite import auto_plan, build_layered, make_composite_counter
from .harness import make_binary_counter
from .lazy import (
    make_doublespin_counter,
    make_lazy_counter,
    make_spin_counter,
    make_wine_counter,
)
from .probes import CounterSpec, UsageError
from .rpgc import make_rpgc_counter

COUNTER_SCHEMAS = {
    "binary": "--dim D            standard binary counter (folklore baseline)",
    "brgc": "--dim D            binary reflected Gray code",
    "rpgc": "--dim D            recursive partition Gray code",
    "composite": "--layers A,B,..    layered plan, innermost first (--inner rpgc|brgc);"
    " or --dim D --c C for the planned split",
    "lazy": "--n N              base lazy counter (N a power of two >= 2)",
    "spin": "--n N              lazy counter with a one-bit spin phase",
    "doublespin": "--n N --g G        lazy counter with a G-bit spin phase",
    "wine": "--n N --g G        Gray-coded spin counter (write cap 3);"
    " optional --encoding brgc|rpgc",
}


def make_counter(
    name: str,
    dim: Optional[int] = None,
    n: Optional[int] = None,
    g: Optional[int] = None,
    layers: Optional[Sequence[int]] = None,
    inner: Optional[str] = None,
    c: Optional[int] = None,
    encoding: Optional[str] = None,
) -> CounterSpec:
    if name not in COUNTER_SCHEMAS:
        raise UsageError(
            f"unknown counter {name!r}; available: {', '.join(sorted(COUNTER_SCHEMAS))}"
        )
    if name in ("binary", "brgc", "rpgc"):
        if dim is None:
            raise UsageError(f"counter {name} needs --dim")
        factory = {
            "binary": make_binary_counter,
            "brgc": make_brgc_counter,
            "rpgc": make_rpgc_counter,
        }[name]
        return factory(dim)
    if name == "composite":
        if layers:
            plan = build_layered(list(layers), inner or "rpgc")
        elif dim is not None:
            plan = auto_plan(dim, c if c is not None else 1)
        else:
            raise UsageError("composite needs --layers or --dim (with optional --c)")
        return make_composite_counter(plan)
    if n is None:
        raise UsageError(f"counter {name} needs --n")
    if name == "lazy":
        return make_lazy_counter(n)
    if name == "spin":
        return make_spin_counter(n)
    if g is None:
        raise UsageError(f"counter {name} needs --g")
    if name == "doublespin":
        return make_doublespin_counter(n, g)
    return make_wine_counter(n, g, encoding or "brgc")
