"""Rendering of bound reports as ``key = value`` lines or readable text."""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable

from .bounds import BoundReport

__all__ = ["render_report", "kv_value", "kv_lines"]

_RELATION = {True: "holds", False: "FAILS", None: "not applicable"}


def kv_value(v) -> str:
    if isinstance(v, bool):
        return "true" if v else "false"
    if isinstance(v, Fraction):
        return f"{v.numerator}/{v.denominator}" if v.denominator != 1 else str(v.numerator)
    if isinstance(v, (list, tuple)):
        return ",".join(kv_value(x) for x in v)
    return str(v)


def kv_lines(pairs: Iterable[tuple[str, object]], prefix: str = "") -> list[str]:
    return [f"{prefix}{k} = {kv_value(v)}" for k, v in pairs]


def _kv(r: BoundReport, prefix: str) -> list[str]:
    pairs: list[tuple[str, object]] = [("applicable", r.applicable)]
    pairs += sorted(r.quantities.items())
    if r.applicable:
        pairs += [("lhs", r.lhs), ("rhs", r.rhs), ("holds", r.holds)]
    return kv_lines(pairs, f"{prefix}{r.claim}.")


def _text(r: BoundReport, prefix: str) -> str:
    qs = ", ".join(f"{k}={v}" for k, v in sorted(r.quantities.items()))
    if not r.applicable:
        return f"{prefix}{r.claim}: not applicable ({qs})"
    return f"{prefix}{r.claim}: {r.lhs} <= {r.rhs} {_RELATION[r.holds]} ({qs})"


def render_report(reports: Iterable[BoundReport], format: str = "kv", prefix: str = "") -> str:
    """Render reports; the empty list renders as the empty string."""
    if format not in ("kv", "text"):
        raise ValueError(f"unknown report format {format!r}")
    lines: list[str] = []
    for r in reports:
        if format == "kv":
            lines.extend(_kv(r, prefix))
        else:
            lines.append(_text(r, prefix))
    return "".join(line + "\n" for line in lines)
