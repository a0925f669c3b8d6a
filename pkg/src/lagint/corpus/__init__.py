"""Machine-readable corpus of integral identities and a batch runner.

Each entry binds a recipe (reduced closures + constructor path, see
:mod:`lagint.corpus.recipes`) to parameter values and verification
intervals read from ``manifest.yaml``.  :func:`run_entry` builds the
identity both ways, checks that the two integrands agree pointwise, then
verifies the reduced identity by quadrature and derivative spot-checks.
"""

from __future__ import annotations

import re
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field, replace
from functools import lru_cache
from importlib import resources
from typing import Callable, Mapping, Optional, Sequence

import yaml

from ..errors import EvaluatorUnsupportedError, LagintError, ParameterError, UnknownIdError
from ..identity import Identity
from ..verify import (
    DEFAULT_DERIV_POINTS,
    DEFAULT_TOLERANCE,
    DerivCheck,
    Tolerance,
    VerificationReport,
    deriv_points,
    dual_agreement,
    verify_identity,
)
from . import recipes
from .recipes import BUILTIN_REDUCED, Recipe, airy_moment

DUAL_POINTS = 20
DUAL_REL_TOL = 1e-8

_ID_RE = re.compile(r"^eq(\d+)([a-z]*)(?:\.(.+))?$")


@dataclass(frozen=True)
class CorpusEntry:
    id: str
    recipe: str
    params: Mapping[str, object]
    intervals: tuple[tuple[float, float], ...]
    tags: tuple[str, ...]
    notes: str
    position: int
    built: Recipe = field(repr=False, compare=False)

    @property
    def ode(self) -> str:
        return self.built.ode

    @property
    def solution(self) -> str:
        return self.built.solution

    @property
    def gauge(self) -> str:
        return self.built.gauge

    @property
    def integrand(self) -> Callable:
        return self.built.integrand

    @property
    def rhs(self) -> Callable:
        return self.built.rhs

    @property
    def has_constructor(self) -> bool:
        return self.built.constructor is not None

    def identity(self) -> Identity:
        """The reduced identity as displayed (after recurrence simplification)."""
        r = self.built
        return Identity(self.id, r.integrand, r.rhs, r.domain, f"reduced[{self.recipe}]",
                        r.singularities, self.notes)

    def constructed(self) -> Optional[Identity]:
        """The same identity rebuilt from the generic constructor, rescaled to match."""
        r = self.built
        if r.constructor is None:
            return None
        return r.constructor().scaled(r.scale, id=f"{self.id}#constructed")


def sort_key(entry_id: str, position: int = 0):
    m = _ID_RE.match(entry_id)
    if m is None:
        return (10**9, entry_id, position)
    return (int(m.group(1)), m.group(2), position)


def _intervals(raw) -> tuple[tuple[float, float], ...]:
    try:
        out = tuple((float(a), float(b)) for a, b in raw)
    except (TypeError, ValueError):
        raise ParameterError(f"malformed interval list {raw!r}") from None
    return out


def load_manifest(text: Optional[str] = None) -> list[CorpusEntry]:
    """Parse a manifest (the packaged one by default) into entries in file order."""
    if text is None:
        text = resources.files(__package__).joinpath("manifest.yaml").read_text(encoding="utf-8")
    doc = yaml.safe_load(text) or {}
    defaults = {k: _intervals(v) for k, v in (doc.get("defaults", {}).get("intervals", {}) or {}).items()}
    entries: list[CorpusEntry] = []
    seen: set[str] = set()
    for pos, raw in enumerate(doc.get("entries", []) or []):
        eid = str(raw["id"])
        if eid in seen:
            raise ParameterError(f"duplicate corpus id {eid!r}")
        seen.add(eid)
        spec = recipes.get_recipe(str(raw["recipe"]))
        params = dict(raw.get("params") or {})
        built = recipes.build(spec.name, params)
        tags = tuple(dict.fromkeys(spec.tags + tuple(raw.get("tags", ()) or ())))
        if "intervals" in raw:
            ivs = _intervals(raw["intervals"])
        elif spec.family in defaults:
            ivs = defaults[spec.family]
        else:
            raise ParameterError(f"no intervals for {eid!r} (family {spec.family!r})")
        notes = "; ".join(n for n in (built.notes, str(raw.get("notes", "") or "")) if n)
        entries.append(CorpusEntry(eid, spec.name, params, ivs, tags, notes, pos, built))
    return entries


@lru_cache(maxsize=1)
def _default_entries() -> tuple[CorpusEntry, ...]:
    entries = load_manifest()
    return tuple(sorted(entries, key=lambda e: sort_key(e.id, e.position)))


def list_entries(filter: Optional[str] = None) -> list[CorpusEntry]:
    """All entries in deterministic equation order, optionally restricted to a family tag."""
    entries = _default_entries()
    if filter is None:
        return list(entries)
    return [e for e in entries if filter in e.tags]


def get_entry(entry_id: str) -> CorpusEntry:
    for e in _default_entries():
        if e.id == entry_id:
            return e
    raise UnknownIdError(f"unknown corpus entry {entry_id!r}")


def _empty_deriv() -> DerivCheck:
    return DerivCheck(0, float("nan"), False)


def run_entry(entry_id: str, tol: Tolerance = DEFAULT_TOLERANCE,
              intervals: Optional[Sequence[tuple[float, float]]] = None,
              n_deriv_points: int = DEFAULT_DERIV_POINTS) -> VerificationReport:
    """Verify one corpus entry (dual construction, quadrature, derivative check).

    Evaluator gaps mark the report skipped; every other library error is
    recorded as a failed report rather than raised.
    """
    entry = get_entry(entry_id)
    ivs = tuple(intervals) if intervals is not None else entry.intervals
    start = time.perf_counter()
    try:
        reduced = entry.identity()
        dual = None
        ctor = entry.constructed()
        if ctor is not None:
            pts = deriv_points(ivs, DUAL_POINTS)
            dual = dual_agreement(ctor.g, reduced.g, pts, DUAL_REL_TOL)
        report = verify_identity(reduced, ivs, tol, n_deriv_points, notes=entry.notes)
        report = replace(report, dual=dual)
    except EvaluatorUnsupportedError as exc:
        report = VerificationReport(entry.id, (), _empty_deriv(), tol, 0.0, entry.notes, skipped=True,
                                    error=str(exc))
    except LagintError as exc:
        report = VerificationReport(entry.id, (), _empty_deriv(), tol, 0.0, entry.notes,
                                    error=f"{type(exc).__name__}: {exc}")
    return report.with_runtime(time.perf_counter() - start)


@dataclass(frozen=True)
class Summary:
    total: int
    passed: int
    failed: int
    skipped: int

    @property
    def ok(self) -> bool:
        return self.failed == 0


@dataclass(frozen=True)
class CorpusRun:
    reports: tuple[VerificationReport, ...]
    summary: Summary

    @property
    def vector(self) -> tuple[tuple[str, bool], ...]:
        return tuple((r.id, r.passed) for r in self.reports)


def summarize(reports: Sequence[VerificationReport]) -> Summary:
    skipped = sum(1 for r in reports if r.skipped)
    passed = sum(1 for r in reports if r.passed)
    return Summary(len(reports), passed, len(reports) - passed - skipped, skipped)


def run_all(tol: Tolerance = DEFAULT_TOLERANCE, parallelism: int = 1, filter: Optional[str] = None,
            ids: Optional[Sequence[str]] = None) -> CorpusRun:
    """Run entries (all, a tag, or explicit ids) with up to ``parallelism`` worker threads.

    Reports come back in corpus order whatever the parallelism.
    """
    if parallelism < 1:
        raise ParameterError("parallelism must be >= 1")
    chosen = [e.id for e in list_entries(filter)] if ids is None else [get_entry(i).id for i in ids]
    if parallelism == 1:
        reports = [run_entry(i, tol) for i in chosen]
    else:
        with ThreadPoolExecutor(max_workers=parallelism) as pool:
            reports = list(pool.map(lambda i: run_entry(i, tol), chosen))
    return CorpusRun(tuple(reports), summarize(reports))


__all__ = [
    "BUILTIN_REDUCED",
    "CorpusEntry",
    "CorpusRun",
    "DUAL_POINTS",
    "DUAL_REL_TOL",
    "Summary",
    "airy_moment",
    "get_entry",
    "list_entries",
    "load_manifest",
    "run_all",
    "run_entry",
    "sort_key",
    "summarize",
]
