"""Shared store for the per-criterion lines printed at the end of the run."""

LINES: dict[str, str] = {}


def record(key: str, ok: bool, detail: str) -> None:
    LINES[key] = f"criterion {key}: {'PASS' if ok else 'FAIL'}  {detail}"
