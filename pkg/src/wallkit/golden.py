"""Golden fixtures and catalog comparison.

Fixtures use the catalog JSON schema, optionally with per-candidate
``actual`` (the wall is known to be realized) and ``source`` strings. These
annotations are transcribed data; nothing in the package computes them.
"""
from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from importlib import resources
from pathlib import Path
from typing import Any, Union

from .chern import rat_str
from .enumeration import CatalogFormatError, WallCandidate, WallCatalog

FIXTURE_DIR = resources.files("wallkit").joinpath("fixtures")


def fixture_index() -> dict[str, Any]:
    return json.loads(FIXTURE_DIR.joinpath("index.json").read_text())


def fixture_path(name: str) -> Path:
    entry = fixture_index()[name]
    return Path(str(FIXTURE_DIR.joinpath(entry["file"])))


def load_fixture(source: Union[str, Path]) -> WallCatalog:
    """Load a fixture by shipped name (e.g. ``"appendix_a"``) or by path."""
    if isinstance(source, str) and source in fixture_index():
        path = fixture_path(source)
    else:
        path = Path(source)
    try:
        text = path.read_text(encoding="utf-8")
    except OSError as exc:
        raise CatalogFormatError(f"cannot read fixture {path}: {exc}") from exc
    return WallCatalog.from_json(text)


Key = tuple[Fraction, Fraction, Fraction]


def _label(key: Key) -> str:
    d, c, e = key
    return f"(c,d,e)=({rat_str(c)},{rat_str(d)},{rat_str(e)})"


@dataclass
class CatalogDiff:
    missing: list[WallCandidate] = field(default_factory=list)
    unexpected: list[WallCandidate] = field(default_factory=list)
    changed: list[tuple[WallCandidate, WallCandidate]] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not (self.missing or self.unexpected or self.changed)

    def to_dict(self) -> dict[str, Any]:
        return {
            "ok": self.ok,
            "missing": [_label(c.key) for c in self.missing],
            "unexpected": [_label(c.key) for c in self.unexpected],
            "changed": [
                {
                    "group": _label(exp.key),
                    "expected": {"ranks": list(exp.ranks), "alpha0_sq": rat_str(exp.alpha0_sq)},
                    "computed": {"ranks": list(got.ranks), "alpha0_sq": rat_str(got.alpha0_sq)},
                }
                for exp, got in self.changed
            ],
        }

    def report(self) -> str:
        if self.ok:
            return "OK: catalogs agree"
        out = []
        for c in self.missing:
            out.append(f"missing    {_label(c.key)} ranks={list(c.ranks)}")
        for c in self.unexpected:
            out.append(f"unexpected {_label(c.key)} ranks={list(c.ranks)}")
        for exp, got in self.changed:
            out.append(f"changed    {_label(exp.key)} expected ranks={list(exp.ranks)} "
                       f"alpha0^2={rat_str(exp.alpha0_sq)}, got ranks={list(got.ranks)} "
                       f"alpha0^2={rat_str(got.alpha0_sq)}")
        return "\n".join(out)


def diff_catalogs(expected: WallCatalog, computed: WallCatalog) -> CatalogDiff:
    """Compare candidate sets on (ranks, c, d, e, alpha0^2); annotations are ignored."""
    exp = {c.key: c for c in expected.candidates}
    got = {c.key: c for c in computed.candidates}
    diff = CatalogDiff()
    for key in sorted(exp.keys() | got.keys()):
        if key not in got:
            diff.missing.append(exp[key])
        elif key not in exp:
            diff.unexpected.append(got[key])
        elif (exp[key].ranks, exp[key].alpha0_sq) != (got[key].ranks, got[key].alpha0_sq):
            diff.changed.append((exp[key], got[key]))
    return diff
