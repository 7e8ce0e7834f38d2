"""Deterministic JSON documents plus CSV and LaTeX renderings of solve results."""

from __future__ import annotations

import json
import math
from fractions import Fraction
from typing import Any

from .algebra import Polynomial, format_rational

SCHEMA_VERSION = "1"


def _float_text(v: float) -> str:
    if math.isnan(v):
        return '"nan"'
    if math.isinf(v):
        return '"inf"' if v > 0 else '"-inf"'
    text = format(v, ".17g")
    if text in ("-0",):
        text = "0"
    return text


def normalize(obj: Any) -> Any:
    """Plain JSON-ready structure: rationals become "num/den" strings, polynomials coefficient lists."""
    if isinstance(obj, bool) or obj is None or isinstance(obj, (int, str)):
        return obj
    if isinstance(obj, Fraction):
        return format_rational(obj)
    if isinstance(obj, Polynomial):
        return [format_rational(c) for c in obj.coeffs]
    if isinstance(obj, float):
        return obj
    if hasattr(obj, "item") and callable(obj.item):  # numpy scalar
        return normalize(obj.item())
    if isinstance(obj, dict):
        return {str(k): normalize(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [normalize(v) for v in obj]
    return str(obj)


def _emit(obj: Any, indent: int, level: int, out: list[str]) -> None:
    pad = " " * (indent * (level + 1))
    end = " " * (indent * level)
    if isinstance(obj, float):
        out.append(_float_text(obj))
    elif isinstance(obj, dict):
        if not obj:
            out.append("{}")
            return
        out.append("{\n")
        items = sorted(obj.items())
        for i, (k, v) in enumerate(items):
            out.append(pad + json.dumps(k) + ": ")
            _emit(v, indent, level + 1, out)
            out.append(",\n" if i < len(items) - 1 else "\n")
        out.append(end + "}")
    elif isinstance(obj, list):
        if not obj:
            out.append("[]")
            return
        out.append("[\n")
        for i, v in enumerate(obj):
            out.append(pad)
            _emit(v, indent, level + 1, out)
            out.append(",\n" if i < len(obj) - 1 else "\n")
        out.append(end + "]")
    else:
        out.append(json.dumps(obj))


def dumps(obj: Any, indent: int = 2) -> str:
    """Sorted keys, floats with 17 significant digits, trailing newline."""
    out: list[str] = []
    _emit(normalize(obj), indent, 0, out)
    return "".join(out) + "\n"


def document(command: str, inputs: dict, results: dict, diagnostics: list[str]) -> dict:
    return {
        "schema_version": SCHEMA_VERSION,
        "command": command,
        "inputs": inputs,
        "results": results,
        "diagnostics": list(diagnostics),
    }


def solve_csv(methods: dict[str, Polynomial]) -> str:
    lines = ["method,power,coefficient"]
    for name in sorted(methods):
        for k, c in enumerate(methods[name].coeffs):
            lines.append(f"{name},{k},{format_rational(c)}")
    return "\n".join(lines) + "\n"


def _latex_rational(q: Fraction) -> str:
    if q.denominator == 1:
        return str(q.numerator)
    return f"\\frac{{{abs(q.numerator)}}}{{{q.denominator}}}"


def poly_latex(p: Polynomial) -> str:
    """Descending powers, e.g. 4x^2 - 2."""
    if p.is_zero():
        return "0"
    parts: list[str] = []
    for k in range(p.degree, -1, -1):
        c = p[k]
        if c == 0:
            continue
        sign = "-" if c < 0 else "+"
        mag = abs(c)
        body = "" if (mag == 1 and k > 0) else _latex_rational(mag)
        if k == 1:
            body += "x"
        elif k > 1:
            body += f"x^{{{k}}}"
        if not parts:
            parts.append(("-" if sign == "-" else "") + body)
        else:
            parts.append(f" {sign} {body}")
    return "".join(parts)


def solve_latex(n: int, methods: dict[str, Polynomial]) -> str:
    lines = [f"% {name}\ny_{{{n}}}(x) = {poly_latex(methods[name])}" for name in sorted(methods)]
    return "\n".join(lines) + "\n"
