"""Fixture-driven verification and the Gaussian-witness conjecture scan.

The shipped fixtures are the single transcription point for reference data;
nothing else in the package hardcodes table rows. Row validation compares
every applicable route (membership DP, closed form, norm criterion) against
the fixture and against each other. Work items are independent; results are
always merged back into sorted order, so output is deterministic no matter
how many workers ran.
"""

from __future__ import annotations

import os
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from importlib import resources
from pathlib import Path
from typing import Iterable, NamedTuple, Optional, Union

from .characteristic import GeneratingSet, characteristic_bitset, minimal_generating_set
from .closed_form import gen_set_closed_form
from .modular import Prime, is_prime
from .norm_criterion import generating_set_via_norm

_ROUTES = ("dp", "closed", "norm")


class FixtureParseError(ValueError):
    """Malformed fixture content; message names the offending line."""


@dataclass(frozen=True)
class FixtureRow:
    p: Prime
    order: int
    generators: tuple[int, ...]

    def __post_init__(self) -> None:
        if self.order < 1 or (self.p - 1) % self.order != 0:
            raise ValueError(f"order {self.order} does not divide {self.p} - 1")
        if list(self.generators) != sorted(set(self.generators)):
            raise ValueError("generators must be strictly increasing")

    def as_line(self) -> str:
        inner = " ".join(str(g) for g in self.generators)
        return f"{int(self.p)},{self.order},{{{inner}}}"


@dataclass
class RouteComparison:
    """Outcome of running all applicable routes for one (p, n)."""

    p: Prime
    n: int
    results: dict[str, tuple[int, ...]]
    agree: bool
    notes: tuple[str, ...]
    timings_ms: dict[str, float]


@dataclass
class ValidationReport:
    total: int
    passed: int
    failures: list[tuple[FixtureRow, GeneratingSet, str]]
    notes: tuple[str, ...] = ()
    route_ms: dict[str, float] = field(default_factory=dict)


class ConjectureWitness(NamedTuple):
    n: int
    a: int
    b: int
    prime: int


@dataclass
class ConjectureReport:
    n_max: int
    verified: tuple[ConjectureWitness, ...]
    failures: tuple[int, ...]


def parse_fixture_line(line: str, lineno: int = 0) -> Optional[FixtureRow]:
    """One `p,n,{g1 g2 ... gk}` row, or None for blanks and # comments."""
    text = line.strip()
    if not text or text.startswith("#"):
        return None
    where = f"line {lineno}" if lineno else "input"
    parts = text.split(",", 2)
    if len(parts) != 3:
        raise FixtureParseError(f"{where}: expected 'p,n,{{...}}', got {text!r}")
    p_text, n_text, set_text = (part.strip() for part in parts)
    set_text = set_text.strip()
    if not (set_text.startswith("{") and set_text.endswith("}")):
        raise FixtureParseError(f"{where}: generator set must be brace-delimited, got {set_text!r}")
    try:
        p = Prime(int(p_text))
        n = int(n_text)
        gens = tuple(int(tok) for tok in set_text[1:-1].split())
        return FixtureRow(p=p, order=n, generators=gens)
    except FixtureParseError:
        raise
    except ValueError as exc:
        raise FixtureParseError(f"{where}: {exc}") from exc


def load_fixtures(source: Union[str, Path, Iterable[str]]) -> list[FixtureRow]:
    """Parse a fixture file (or iterable of lines) into rows.

    Errors carry the 1-based line number of the first malformed row.
    """
    if isinstance(source, (str, Path)):
        with open(source, encoding="utf-8") as fh:
            lines = fh.readlines()
    else:
        lines = list(source)
    rows = []
    for lineno, line in enumerate(lines, start=1):
        row = parse_fixture_line(line, lineno)
        if row is not None:
            rows.append(row)
    return rows


def shipped_fixture_path(name: str = "reference_sets.txt") -> Path:
    """Path of a reference fixture bundled with the package."""
    return Path(str(resources.files("hyperchar").joinpath("data", name)))


def applicable_routes(n: int) -> tuple[str, ...]:
    routes = ["dp"]
    if n in (1, 2, 3, 4):
        routes.append("closed")
    if is_prime(n):
        routes.append("norm")
    return tuple(routes)


def _run_route(route: str, p: Prime, n: int) -> GeneratingSet:
    if route == "dp":
        return minimal_generating_set(characteristic_bitset(p, n))
    if route == "closed":
        return gen_set_closed_form(p, n)
    if route == "norm":
        return generating_set_via_norm(p, Prime(n))
    raise ValueError(f"unknown route {route!r}")


def cross_validate(p: Prime, n: int) -> RouteComparison:
    """Run every applicable route for (p, n) and compare the outputs.

    The DP route always runs; the closed form joins for n in 1..4 and the
    norm route for prime n. Disagreements are reported, never raised. A note
    records any appearance of p itself among the generators, expected only
    for n in {1, 2}.
    """
    results: dict[str, tuple[int, ...]] = {}
    timings: dict[str, float] = {}
    for route in applicable_routes(n):
        t0 = time.perf_counter()
        results[route] = _run_route(route, p, n).generators
        timings[route] = (time.perf_counter() - t0) * 1000.0
    baseline = results["dp"]
    agree = all(gens == baseline for gens in results.values())
    notes = []
    if int(p) in baseline:
        marker = "expected" if n in (1, 2) else "unexpected"
        notes.append(f"p={int(p)} appears as a generator ({marker} for n={n})")
    return RouteComparison(
        p=p, n=n, results=results, agree=agree, notes=tuple(notes), timings_ms=timings
    )


def _validate_row(item: tuple[int, int, tuple[int, ...]]):
    p, n, expected = item
    comparison = cross_validate(Prime(p), n)
    return p, n, expected, comparison


def _table_row(item: tuple[int, int]):
    p, n = item
    gens = minimal_generating_set(characteristic_bitset(Prime(p), n))
    return p, n, gens.generators


def worker_count(requested: Optional[int] = None) -> int:
    """Effective worker cap: explicit argument, else HYPERCHAR_THREADS, else 1."""
    if requested is None:
        raw = os.environ.get("HYPERCHAR_THREADS", "1")
        try:
            requested = int(raw)
        except ValueError:
            raise ValueError(f"HYPERCHAR_THREADS must be an integer, got {raw!r}")
    return max(1, requested)


def _map_items(fn, items, workers: int):
    if workers <= 1 or len(items) <= 1:
        return [fn(item) for item in items]
    with ProcessPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(fn, items, chunksize=max(1, len(items) // (4 * workers))))


def validate_fixture(rows: list[FixtureRow], workers: Optional[int] = None) -> ValidationReport:
    """Cross-validate every fixture row; a row passes only if all applicable
    routes agree with each other and with the fixture's generators."""
    items = sorted((int(row.p), row.order, row.generators) for row in rows)
    outcomes = _map_items(_validate_row, items, worker_count(workers))
    outcomes.sort(key=lambda out: (out[0], out[1]))

    failures: list[tuple[FixtureRow, GeneratingSet, str]] = []
    notes: list[str] = []
    route_ms = {route: 0.0 for route in _ROUTES}
    passed = 0
    for p, n, expected, comparison in outcomes:
        row = FixtureRow(p=Prime(p), order=n, generators=expected)
        row_ok = True
        for route, gens in sorted(comparison.results.items()):
            if gens != expected:
                failures.append((row, GeneratingSet(generators=gens), route))
                row_ok = False
        for route, ms in comparison.timings_ms.items():
            route_ms[route] += ms
        notes.extend(comparison.notes)
        if row_ok:
            passed += 1
    return ValidationReport(
        total=len(items),
        passed=passed,
        failures=failures,
        notes=tuple(notes),
        route_ms=route_ms,
    )


def table_rows(p_max: int, workers: Optional[int] = None) -> list[FixtureRow]:
    """DP-route generating sets for every prime p <= p_max and every n | p-1,
    sorted by (p, n)."""
    if p_max < 2:
        raise ValueError(f"p_max must be at least 2, got {p_max}")
    items = []
    for p in range(2, p_max + 1):
        if is_prime(p):
            items.extend((p, n) for n in range(1, p) if (p - 1) % n == 0)
    results = _map_items(_table_row, items, worker_count(workers))
    results.sort(key=lambda out: (out[0], out[1]))
    return [FixtureRow(p=Prime(p), order=n, generators=gens) for p, n, gens in results]


def find_witness(n: int) -> Optional[ConjectureWitness]:
    """First (a, b), a >= b >= 1, a + b = n, with a^2 + b^2 prime, scanning a
    upward; None if no split of n works."""
    for a in range((n + 1) // 2, n):
        b = n - a
        candidate = a * a + b * b
        if is_prime(candidate):
            return ConjectureWitness(n=n, a=a, b=b, prime=candidate)
    return None


def conjecture_scan(n_max: int) -> ConjectureReport:
    """Search a Gaussian-prime witness for every odd n in [3, n_max].

    A witness a + b = n with a^2 + b^2 prime exhibits, through the order-4
    closed form, a quotient hyperfield whose generating set is {2, n}. Any
    n with no witness at all is recorded as a failure (a counterexample).
    """
    if n_max < 3 or n_max % 2 == 0:
        raise ValueError(f"n_max must be an odd integer >= 3, got {n_max}")
    verified = []
    failures = []
    for n in range(3, n_max + 1, 2):
        witness = find_witness(n)
        if witness is None:
            failures.append(n)
        else:
            verified.append(witness)
    return ConjectureReport(n_max=n_max, verified=tuple(verified), failures=tuple(failures))
