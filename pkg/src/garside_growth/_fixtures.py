"""Loaders for the JSON fixtures shipped in ``fixtures/``."""

from __future__ import annotations

import json
from importlib import resources
from pathlib import Path

from .polyseries import IntPolynomial, parse_polynomial

TABLES = "reference_tables.json"
POLYNOMIALS = "moebius_polynomials.json"
THETA = "theta_L.json"
FIXTURE_FILES = (TABLES, POLYNOMIALS, THETA)


def fixture_dir() -> Path:
    return Path(str(resources.files("garside_growth") / "fixtures"))


def load(name: str, directory: Path | str | None = None) -> dict:
    path = Path(directory or fixture_dir()) / name
    with open(path, encoding="utf-8") as fh:
        return json.load(fh)


def reference_tables(directory=None) -> dict[str, list[list[int]]]:
    return load(TABLES, directory)["tables"]


def reference_polynomials(directory=None, p_range=range(3, 9)) -> dict[str, IntPolynomial]:
    """Displayed denominators keyed by spec string; ``I2(p)`` is expanded over ``p_range``."""
    raw = load(POLYNOMIALS, directory)["polynomials"]
    out = {}
    for name, text in raw.items():
        if "(p)" in name:
            for p in p_range:
                out[name.replace("(p)", f"({p})")] = parse_polynomial(
                    text.replace("t^p", f"t^{{{p}}}")
                )
        else:
            out[name] = parse_polynomial(text)
    return out


def theta_terms(directory=None) -> list[int]:
    return [int(x) for x in load(THETA, directory)["L"]]
