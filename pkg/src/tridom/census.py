"""Census of connected domination numbers over all plane triangulations.

Runs the generator level by level, classifies every triangulation, and
aggregates per-order counts.  A built-in reference table records the known
counts for orders 5..15 (cells that have never been computed are None and
are only ever flagged, never asserted).  Records keep the canonical code,
the certificate and enough to rebuild the graph, so downstream property
checks and extremal queries can re-verify everything independently.
"""

from __future__ import annotations

import csv
import io
import json
import time
from dataclasses import dataclass, field
from multiprocessing import get_context
from typing import Callable, Dict, Iterable, List, Optional, Sequence, Tuple

from . import generate
from .domination import (
    DominationCertificate,
    bfs_tree_cds,
    classify,
    exact_gamma,
    exact_gamma_c,
)
from .graphs import Graph, bits, degree_stats, induces_connected, is_dominating, vset
from .planar import Triangulation, canonical_code, triangulation_from_code, underlying_graph

GAMMA_C_COLUMNS = (1, 2, 3, 4, 5)

#: Known counts: order -> (total, {gamma_c: count}); None marks unknown cells.
REFERENCE_CENSUS: Dict[int, Tuple[int, Dict[int, Optional[int]]]] = {
    5: (1, {1: 1, 2: 0, 3: 0, 4: 0, 5: 0}),
    6: (2, {1: 1, 2: 1, 3: 0, 4: 0, 5: 0}),
    7: (5, {1: 3, 2: 2, 3: 0, 4: 0, 5: 0}),
    8: (14, {1: 3, 2: 11, 3: 0, 4: 0, 5: 0}),
    9: (50, {1: 12, 2: 37, 3: 1, 4: 0, 5: 0}),
    10: (233, {1: 27, 2: 193, 3: 13, 4: 0, 5: 0}),
    11: (1249, {1: 82, 2: 995, 3: 172, 4: 0, 5: 0}),
    12: (7595, {1: 226, 2: 5191, 3: 2173, 4: 5, 5: 0}),
    13: (49566, {1: 733, 2: 25760, 3: 22920, 4: 153, 5: 0}),
    14: (339722, {1: 2282, 2: None, 3: None, 4: None, 5: 0}),
    15: (2406841, {1: 7528, 2: None, 3: None, 4: None, 5: None}),
}


@dataclass(frozen=True)
class CensusRow:
    n: int
    total: int
    counts_by_gamma_c: Dict[int, int]
    wall_time: float

    def count(self, value: int) -> int:
        return self.counts_by_gamma_c.get(value, 0)

    def same_counts(self, other: "CensusRow") -> bool:
        return (self.n == other.n and self.total == other.total
                and {k: v for k, v in self.counts_by_gamma_c.items() if v}
                == {k: v for k, v in other.counts_by_gamma_c.items() if v})


class CensusRecord:
    """One classified triangulation: certificate plus lazily computed gamma."""

    __slots__ = ("n", "code", "rot", "gamma_c", "gamma_c_witness", "method",
                 "Delta", "_gamma_cert")

    def __init__(self, n: int, code: bytes, rot, gamma_c: int,
                 gamma_c_witness: int, method: str, Delta: int,
                 gamma_cert: Optional[DominationCertificate] = None):
        self.n = n
        self.code = code
        self.rot = rot
        self.gamma_c = gamma_c
        self.gamma_c_witness = gamma_c_witness
        self.method = method
        self.Delta = Delta
        self._gamma_cert = gamma_cert

    def graph(self) -> Graph:
        return underlying_graph(Triangulation(self.n, self.rot))

    def triangulation(self) -> Triangulation:
        return Triangulation(self.n, self.rot)

    @property
    def gamma_certificate(self) -> DominationCertificate:
        if self._gamma_cert is None:
            self._gamma_cert = exact_gamma(self.graph())
        return self._gamma_cert

    @property
    def gamma(self) -> int:
        return self.gamma_certificate.value

    def to_dict(self) -> dict:
        d = {
            "n": self.n,
            "code": self.code.hex(),
            "gamma_c": self.gamma_c,
            "witness": sorted(bits(self.gamma_c_witness)),
            "method": self.method,
            "Delta": self.Delta,
        }
        if self._gamma_cert is not None:
            d["gamma"] = self._gamma_cert.value
            d["gamma_witness"] = sorted(bits(self._gamma_cert.witness))
        return d

    @classmethod
    def from_dict(cls, d: dict) -> "CensusRecord":
        code = bytes.fromhex(d["code"])
        t = triangulation_from_code(code)
        rec = cls(d["n"], code, t.rot, d["gamma_c"], vset(d["witness"]),
                  d["method"], d["Delta"])
        if "gamma" in d:
            rec._gamma_cert = DominationCertificate(
                d["gamma"], vset(d["gamma_witness"]), "subset-search")
        return rec

    def __repr__(self) -> str:
        return f"CensusRecord(n={self.n}, gamma_c={self.gamma_c}, Delta={self.Delta})"


def _classify_payload(rot) -> Tuple[int, int, str]:
    cert = classify(Triangulation(len(rot), rot))
    return cert.value, cert.witness, cert.method


def _classify_level(level: Sequence[Triangulation], workers: int):
    """Classify a level; result order matches input order for any worker count."""
    payloads = [t.rot for t in level]
    if workers <= 1 or len(level) < 64:
        return [_classify_payload(r) for r in payloads]
    ctx = get_context()
    chunk = max(1, len(payloads) // (workers * 8))
    with ctx.Pool(workers) as pool:
        return pool.map(_classify_payload, payloads, chunksize=chunk)


def census_records(n_min: int = 5, n_max: int = 11, workers: int = 1,
                   levels: Optional[Iterable[Tuple[int, List[Triangulation]]]] = None,
                   ) -> Tuple[List[CensusRow], List[CensusRecord]]:
    """Classify every triangulation of each order in [n_min, n_max].

    Returns per-order rows plus one record per graph, sorted by canonical
    code within each order.  A pre-generated level iterable (or one decoded
    from an external planar_code file) may be supplied in place of native
    generation.
    """
    if n_min > n_max:
        raise ValueError("n_min must not exceed n_max")
    rows: List[CensusRow] = []
    records: List[CensusRecord] = []
    source = levels if levels is not None else generate.levels(n_max)
    for n, level in source:
        if n < n_min or n > n_max:
            continue
        t0 = time.perf_counter()
        results = _classify_level(level, workers)
        counts: Dict[int, int] = {}
        for t, (value, witness, method) in zip(level, results):
            counts[value] = counts.get(value, 0) + 1
            _, dmax, _ = degree_stats(underlying_graph(t))
            records.append(CensusRecord(n, canonical_code(t), t.rot, value,
                                        witness, method, dmax))
        rows.append(CensusRow(n, len(level), counts, time.perf_counter() - t0))
    return rows, records


def run_census(n_min: int = 5, n_max: int = 11, workers: int = 1) -> List[CensusRow]:
    """Per-order counts of triangulations by connected domination number."""
    rows, _ = census_records(n_min, n_max, workers)
    return rows


def levels_from_planar_code(data: bytes) -> List[Tuple[int, List[Triangulation]]]:
    """Group an external planar_code corpus into generator-style levels."""
    from .planar import canonical_form, planar_code_read, verify_triangulation
    by_n: Dict[int, Dict[bytes, Triangulation]] = {}
    for t in planar_code_read(data):
        report = verify_triangulation(t)
        if not report.ok:
            raise ValueError(f"ingested graph is not a triangulation: {report.problem}")
        form = canonical_form(t)
        by_n.setdefault(t.n, {})[canonical_code(form)] = form
    return [(n, [by_n[n][c] for c in sorted(by_n[n])]) for n in sorted(by_n)]


@dataclass(frozen=True)
class ReferenceDiff:
    mismatches: List[str]
    no_oracle: List[str]

    @property
    def ok(self) -> bool:
        return not self.mismatches


def compare_reference(rows: Iterable[CensusRow]) -> ReferenceDiff:
    """Cell-by-cell comparison against the built-in reference counts."""
    mismatches: List[str] = []
    no_oracle: List[str] = []
    for row in rows:
        ref = REFERENCE_CENSUS.get(row.n)
        if ref is None:
            no_oracle.append(f"n={row.n}: no oracle")
            continue
        total, cells = ref
        if row.total != total:
            mismatches.append(f"n={row.n} total: got {row.total}, reference {total}")
        for value in GAMMA_C_COLUMNS:
            want = cells[value]
            got = row.count(value)
            if want is None:
                no_oracle.append(f"n={row.n} gamma_c={value}: no oracle")
            elif got != want:
                mismatches.append(
                    f"n={row.n} gamma_c={value}: got {got}, reference {want}")
    return ReferenceDiff(mismatches, no_oracle)


@dataclass
class CorpusReport:
    graphs_checked: int = 0
    checks_run: int = 0
    violations: List[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations


def verify_corpus(records: Iterable[CensusRecord], cross_solver_max_n: int = 10,
                  ) -> CorpusReport:
    """Re-verify the structural properties every census graph must satisfy.

    Per graph: gamma <= gamma_c; gamma_c <= n - Delta with the spanning-tree
    bound witnessed by an actual connected dominating set; gamma_c at most
    floor(n/3) for 9 <= n <= 13; max degree n-4 forces gamma_c in {2, 3} for
    n <= 13; and, up to cross_solver_max_n, agreement between the
    contraction-based and subset-search solvers.
    """
    report = CorpusReport()

    def fail(rec: CensusRecord, msg: str) -> None:
        report.violations.append(f"n={rec.n} code={rec.code.hex()}: {msg}")

    for rec in records:
        report.graphs_checked += 1
        g = rec.graph()
        n = rec.n
        gc = rec.gamma_c

        report.checks_run += 1
        if not is_dominating(g, rec.gamma_c_witness):
            fail(rec, "stored witness is not dominating")
        if not induces_connected(g, rec.gamma_c_witness):
            fail(rec, "stored witness is not connected")
        if rec.gamma_c_witness.bit_count() != gc:
            fail(rec, "stored witness size differs from value")

        report.checks_run += 1
        if rec.gamma > gc:
            fail(rec, f"gamma {rec.gamma} exceeds gamma_c {gc}")

        report.checks_run += 1
        if gc > n - rec.Delta:
            fail(rec, f"gamma_c {gc} exceeds n - Delta = {n - rec.Delta}")

        report.checks_run += 1
        tree = bfs_tree_cds(g)
        if tree.value > n - rec.Delta:
            fail(rec, f"tree bound witness has {tree.value} > n - Delta vertices")
        if not is_dominating(g, tree.witness) or not induces_connected(g, tree.witness):
            fail(rec, "tree bound witness is not a connected dominating set")

        if 9 <= n <= 13:
            report.checks_run += 1
            if gc > n // 3:
                fail(rec, f"gamma_c {gc} exceeds floor(n/3) = {n // 3}")

        if n <= 13 and rec.Delta == n - 4:
            report.checks_run += 1
            if gc not in (2, 3):
                fail(rec, f"Delta = n-4 but gamma_c = {gc} not in {{2, 3}}")

        if n <= cross_solver_max_n:
            report.checks_run += 1
            if exact_gamma_c(g).value != gc:
                fail(rec, "subset-search solver disagrees with stored value")
    return report


def find_extremal(records: Iterable[CensusRecord],
                  predicate: Callable[[CensusRecord], bool]) -> List[CensusRecord]:
    """All records satisfying the predicate, sorted by (n, canonical code)."""
    hits = [rec for rec in records if predicate(rec)]
    hits.sort(key=lambda r: (r.n, r.code))
    return hits


# ---------------------------------------------------------------------------
# Persistence: CSV for rows, JSON for rows plus records.

_CSV_FIELDS = ["n", "total", "gamma_c_1", "gamma_c_2", "gamma_c_3",
               "gamma_c_4", "gamma_c_5", "wall_time_s"]


def rows_to_csv(rows: Iterable[CensusRow]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf)
    writer.writerow(_CSV_FIELDS)
    for row in rows:
        writer.writerow([row.n, row.total]
                        + [row.count(v) for v in GAMMA_C_COLUMNS]
                        + [repr(row.wall_time)])
    return buf.getvalue()


def rows_from_csv(text: str) -> List[CensusRow]:
    reader = csv.reader(io.StringIO(text))
    header = next(reader, None)
    if header != _CSV_FIELDS:
        raise ValueError(f"unexpected CSV header {header}")
    rows = []
    for line in reader:
        n, total, *cells, wall = line
        counts = {v: int(c) for v, c in zip(GAMMA_C_COLUMNS, cells) if int(c)}
        rows.append(CensusRow(int(n), int(total), counts, float(wall)))
    return rows


def results_to_json(rows: Iterable[CensusRow],
                    records: Iterable[CensusRecord] = ()) -> str:
    payload = {
        "rows": [{"n": r.n, "total": r.total,
                  "counts": {str(k): v for k, v in sorted(r.counts_by_gamma_c.items())},
                  "wall_time": r.wall_time} for r in rows],
        "records": [rec.to_dict() for rec in records],
    }
    return json.dumps(payload, indent=1)


def results_from_json(text: str) -> Tuple[List[CensusRow], List[CensusRecord]]:
    payload = json.loads(text)
    rows = [CensusRow(d["n"], d["total"],
                      {int(k): v for k, v in d["counts"].items()}, d["wall_time"])
            for d in payload["rows"]]
    records = [CensusRecord.from_dict(d) for d in payload["records"]]
    return rows, records
