"""Grid sweeps over cycle-stars comparing exact es with the closed/conjectured forms.

Results are cached in an append-only JSON Lines file keyed by ``(k, l)``;
the last line for a key wins. Witness labelings are stored so cached rows can
be re-verified without searching again.
"""
from __future__ import annotations

import csv
import io
import json
import logging
import time
from concurrent.futures import ProcessPoolExecutor, as_completed
from dataclasses import asdict, dataclass
from pathlib import Path
from typing import Iterable

from .constructions import K_MAX, closed_form_es, construct_labeling
from .graph import CycleStarSpec, VertexLabeling, build_cycle_star
from .solver import EsResult, SearchBudget, Solver
from .verifier import is_edge_irregular, lower_bound

log = logging.getLogger(__name__)

CSV_COLUMNS = ("k", "l", "n", "lower_bound", "es_formula", "es_exact", "agrees",
               "method", "nodes", "elapsed_ms")
METHODS = ("backtracking", "brute_force", "construction")


@dataclass(frozen=True)
class SweepRow:
    k: int
    l: int
    n: int
    lower_bound: int
    es_formula: int
    es_exact: int | None
    agrees: bool | None
    witness: tuple[int, ...] | None
    method: str
    nodes: int
    elapsed_ms: int

    def to_json(self) -> dict:
        d = asdict(self)
        d["witness"] = list(self.witness) if self.witness is not None else None
        return d

    @classmethod
    def from_json(cls, d: dict) -> "SweepRow":
        fields = ("k", "l", "n", "lower_bound", "es_formula", "es_exact", "agrees",
                  "witness", "method", "nodes", "elapsed_ms")
        missing = [f for f in fields if f not in d]
        if missing:
            raise ValueError(f"missing fields {missing}")
        if d["method"] not in METHODS:
            raise ValueError(f"unknown method {d['method']!r}")
        for f in ("k", "l", "n", "lower_bound", "es_formula", "nodes", "elapsed_ms"):
            if type(d[f]) is not int:
                raise ValueError(f"field {f!r} must be an integer")
        if d["es_exact"] is not None and type(d["es_exact"]) is not int:
            raise ValueError("field 'es_exact' must be an integer or null")
        if d["agrees"] is not None and type(d["agrees"]) is not bool:
            raise ValueError("field 'agrees' must be a boolean or null")
        w = d["witness"]
        if w is not None and not (isinstance(w, list) and all(type(x) is int for x in w)):
            raise ValueError("field 'witness' must be a list of integers or null")
        return cls(d["k"], d["l"], d["n"], d["lower_bound"], d["es_formula"], d["es_exact"],
                   d["agrees"], tuple(w) if w is not None else None, d["method"],
                   d["nodes"], d["elapsed_ms"])


def conjectured_es(spec: CycleStarSpec) -> int:
    """Conjectured es for k >= 8: ceil((n+1)/2) up to n = 2k-4, then n-k+2."""
    k, n = spec.cycle_len, spec.n
    if k < 8:
        raise ValueError(f"conjectured_es covers k >= 8, got k={k}; use closed_form_es")
    if spec.leaf_count < 1:
        raise ValueError("conjectured_es needs at least one leaf")
    if n <= 2 * k - 4:
        return (n + 2) // 2
    return n - k + 2


def formula_es(spec: CycleStarSpec) -> int:
    """Proved closed form for k <= 7, conjectured value beyond."""
    return closed_form_es(spec) if spec.cycle_len <= K_MAX else conjectured_es(spec)


def compute_row(k: int, l: int, budget: SearchBudget | None = None,
                seed_constructions: bool = True) -> SweepRow:
    spec = CycleStarSpec(k, l)
    g = build_cycle_star(spec)
    lb = lower_bound(g)
    expected = formula_es(spec)
    seed = None
    if seed_constructions and k <= K_MAX:
        seed = construct_labeling(spec).labeling
    t0 = time.perf_counter()
    result = Solver(g, budget).exact_es(seed)
    elapsed_ms = int(round((time.perf_counter() - t0) * 1000))
    if isinstance(result, EsResult):
        return SweepRow(k, l, spec.n, lb, expected, result.es_value,
                        result.es_value == expected, result.witness.labels,
                        result.method, result.nodes_explored, elapsed_ms)
    return SweepRow(k, l, spec.n, lb, expected, None, None, None, "backtracking",
                    result.nodes_explored, elapsed_ms)


def _row_is_sound(row: SweepRow) -> bool:
    if row.es_exact is None:
        return row.agrees is None
    if row.witness is None or row.agrees != (row.es_exact == row.es_formula):
        return False
    g = build_cycle_star(CycleStarSpec(row.k, row.l))
    if len(row.witness) != g.num_vertices or min(row.witness) < 1:
        return False
    phi = VertexLabeling(row.witness)
    return (phi.span == row.es_exact and row.lower_bound <= row.es_exact
            and bool(is_edge_irregular(g, phi)))


def load_cache(path: Path) -> dict[tuple[int, int], SweepRow]:
    """Read a JSONL cache; malformed or unverifiable lines are logged and skipped."""
    rows: dict[tuple[int, int], SweepRow] = {}
    if not path.exists():
        return rows
    with open(path, encoding="utf-8") as fh:
        for lineno, line in enumerate(fh, start=1):
            if not line.strip():
                continue
            try:
                row = SweepRow.from_json(json.loads(line))
            except (ValueError, TypeError, AttributeError) as exc:
                log.warning("%s:%d: malformed cache line (%s); row will be recomputed",
                            path, lineno, exc)
                continue
            try:
                sound = _row_is_sound(row)
            except ValueError:
                sound = False
            if not sound:
                log.warning("%s:%d: cached row for (k=%d, l=%d) fails re-verification; "
                            "row will be recomputed", path, lineno, row.k, row.l)
                continue
            rows[(row.k, row.l)] = row
    return rows


def _append(fh, row: SweepRow) -> None:
    fh.write(json.dumps(row.to_json(), separators=(",", ":")) + "\n")
    fh.flush()


def sweep(k_range: Iterable[int], l_range: Iterable[int], budget: SearchBudget | None = None,
          cache_path: str | Path | None = None, jobs: int = 1,
          seed_constructions: bool = True) -> list[SweepRow]:
    """Rows for every ``(k, l)`` in the grid, ordered by ``(k, l)``.

    Cached rows are reused; everything else is computed (in a process pool
    when ``jobs > 1``) and appended to the cache as it finishes.
    Disagreements with the formula are returned like any other row.
    """
    keys = sorted({(k, l) for k in k_range for l in l_range})
    if not keys:
        raise ValueError("empty sweep grid")
    for k, l in keys:
        if k < 3 or l < 1:
            raise ValueError(f"sweep needs k >= 3 and l >= 1, got (k={k}, l={l})")
    path = Path(cache_path) if cache_path is not None else None
    done = load_cache(path) if path is not None else {}
    todo = [key for key in keys if key not in done]
    log.info("sweep: %d cached, %d to compute", len(keys) - len(todo), len(todo))

    fh = open(path, "a", encoding="utf-8") if path is not None else None
    try:
        if jobs <= 1 or len(todo) <= 1:
            for k, l in todo:
                row = compute_row(k, l, budget, seed_constructions)
                done[(k, l)] = row
                if fh:
                    _append(fh, row)
        elif todo:
            with ProcessPoolExecutor(max_workers=jobs) as pool:
                futures = [pool.submit(compute_row, k, l, budget, seed_constructions)
                           for k, l in todo]
                for fut in as_completed(futures):
                    row = fut.result()
                    done[(row.k, row.l)] = row
                    if fh:
                        _append(fh, row)
    finally:
        if fh:
            fh.close()

    rows = [done[key] for key in keys]
    for row in rows:
        if row.agrees is False:
            log.warning("formula mismatch at k=%d, l=%d: exact %d, formula %d",
                        row.k, row.l, row.es_exact, row.es_formula)
    return rows


def _cell(value) -> str:
    if value is None:
        return ""
    if isinstance(value, bool):
        return "true" if value else "false"
    return str(value)


def report_csv(rows: Iterable[SweepRow]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(CSV_COLUMNS)
    for row in rows:
        writer.writerow([_cell(getattr(row, c)) for c in CSV_COLUMNS])
    return buf.getvalue()


def report_json(rows: Iterable[SweepRow]) -> str:
    return json.dumps([{c: getattr(row, c) for c in CSV_COLUMNS} for row in rows], indent=2)


def emit_report(rows: Iterable[SweepRow]) -> tuple[str, str]:
    rows = list(rows)
    return report_csv(rows), report_json(rows)
