"""Exhaustive search for Wall-invariant collisions among threefold multidegrees.

Two phases: bucket every canonical multidegree on the closed-form key
(d, m, parity of k), which costs a few integer operations, then run the
ring pipeline for the Euler number only inside buckets of size >= 2.  The
known pairs already collide on the cheap key, so phase 1 loses nothing.

Enumeration is deterministic (codimension-major, lexicographic within),
shards split on the leading degree, and the grouping stage can spill
sorted runs of fixed-field decimal text to disk and stream-merge them, so
a memory budget never turns into a hard failure.
"""

from __future__ import annotations

import heapq
import itertools
import os
import tempfile
from dataclasses import dataclass
from multiprocessing import Pool
from typing import Iterator, Optional

from . import complete_intersection as ci
from .errors import DomainError, IntegrityError
from .reference import KNOWN_WALL_ROWS

CheapKey = tuple[int, int, int]  # (d, m, k_parity)
Record = tuple[CheapKey, tuple[int, ...]]


@dataclass(frozen=True)
class SearchBounds:
    max_codim: int
    max_degree: int
    max_total_degree: Optional[int] = None
    memory_budget: Optional[int] = None  # max in-core records before spilling

    def __post_init__(self) -> None:
        if self.max_codim < 1:
            raise DomainError("need max_codim >= 1")
        if self.max_degree < 2:
            raise DomainError("need max_degree >= 2")
        if self.memory_budget is not None and self.memory_budget < 1:
            raise DomainError("memory budget must be positive")


def _descending_tuples(r: int, hi: int) -> Iterator[tuple[int, ...]]:
    """All (d_1 >= ... >= d_r >= 2) with d_1 <= hi, lexicographic ascending."""
    if r == 0:
        yield ()
        return
    for d in range(2, hi + 1):
        for rest in _descending_tuples(r - 1, d):
            yield (d,) + rest


def enumerate_multidegrees(bounds: SearchBounds) -> Iterator[tuple[int, ...]]:
    """Every canonical multidegree within bounds exactly once, codimension
    ascending, lexicographic within each codimension."""
    for r in range(1, bounds.max_codim + 1):
        for tup in _descending_tuples(r, bounds.max_degree):
            if bounds.max_total_degree is not None:
                total = 1
                for d in tup:
                    total *= d
                if total > bounds.max_total_degree:
                    continue
            yield tup


def cheap_key(degrees: tuple[int, ...]) -> CheapKey:
    d, k, m = ci.wall_closed_forms(degrees)
    return (d, m, k % 2)


def _leading_degree_records(args: tuple[SearchBounds, int]) -> list[Record]:
    """Phase-1 records for one shard: all multidegrees with a given d_1."""
    bounds, lead = args
    out: list[Record] = []
    for r in range(1, bounds.max_codim + 1):
        for rest in _descending_tuples(r - 1, lead):
            tup = (lead,) + rest
            if bounds.max_total_degree is not None:
                total = 1
                for d in tup:
                    total *= d
                if total > bounds.max_total_degree:
                    continue
            out.append((cheap_key(tup), tup))
    return out


def _format_record(record: Record) -> str:
    (d, m, kpar), degrees = record
    return f"{d} {m} {kpar} {','.join(map(str, degrees))}\n"


def _parse_record(line: str) -> Record:
    d, m, kpar, degrees = line.split()
    return (int(d), int(m), int(kpar)), tuple(int(x) for x in degrees.split(","))


class _RunSpooler:
    """Accumulates phase-1 records, spilling sorted runs past the budget.

    Iteration replays every record in key order via a streaming k-way merge
    of the in-core tail and the on-disk runs (one decimal-text record per
    line, sorted by key).
    """

    def __init__(self, budget: Optional[int], spill_dir: Optional[str]):
        self.budget = budget
        self._spill_dir = spill_dir
        self._records: list[Record] = []
        self.run_paths: list[str] = []

    def add(self, record: Record) -> None:
        self._records.append(record)
        if self.budget is not None and len(self._records) >= self.budget:
            self._spill()

    def _spill(self) -> None:
        if self._spill_dir is None:
            self._spill_dir = tempfile.mkdtemp(prefix="sasakinv-spill-")
        os.makedirs(self._spill_dir, exist_ok=True)
        self._records.sort()
        path = os.path.join(self._spill_dir, f"run-{len(self.run_paths):06d}.txt")
        with open(path, "w") as fh:
            fh.writelines(_format_record(rec) for rec in self._records)
        self.run_paths.append(path)
        self._records = []

    def __iter__(self) -> Iterator[Record]:
        self._records.sort()
        handles = [open(path) for path in self.run_paths]
        try:
            streams = [iter(self._records)]
            streams += [(_parse_record(line) for line in fh) for fh in handles]
            yield from heapq.merge(*streams)
        finally:
            for fh in handles:
                fh.close()


@dataclass(frozen=True)
class CollisionMember:
    degrees: tuple[int, ...]
    k: int
    h03: int
    h12: int


@dataclass(frozen=True)
class CollisionGroup:
    """Wall-equivalent candidates: multidegrees sharing the full key
    (d, m, e, parity of k) but realising at least two distinct values of k,
    hence of the Hodge numbers."""

    d: int
    m: int
    e: int
    k_parity: int
    members: tuple[CollisionMember, ...]


def _certified_group(key: CheapKey, e: int, bucket: list[tuple[tuple[int, ...], ci.WallInvariants]]) -> CollisionGroup:
    d, m, kpar = key
    bucket = sorted(bucket)
    members = []
    for degrees, w in bucket:
        hodge = ci.ci3_hodge(w, d)
        members.append(
            CollisionMember(degrees=degrees, k=w.k, h03=hodge.h03, h12=hodge.h12)
        )
    for (_, wa), (_, wb) in itertools.combinations(bucket, 2):
        if not ci.are_diffeomorphic_wall(wa, wb):
            raise IntegrityError("full-key bucket member fails the Wall test")
        if wa.k != wb.k and ci.hodge_equal(wa, wb):
            raise IntegrityError("distinct k must force distinct Hodge numbers")
    return CollisionGroup(d=d, m=m, e=e, k_parity=kpar, members=tuple(members))


def _group_records(
    records: Iterator[Record],
    memory_budget: Optional[int],
    spill_dir: Optional[str],
) -> list[CollisionGroup]:
    """Replay phase-1 records in key order and refine candidate buckets with
    the Euler number (phase 2)."""
    spooler = _RunSpooler(memory_budget, spill_dir)
    for record in records:
        spooler.add(record)
    groups: list[CollisionGroup] = []
    for key, grouped in itertools.groupby(spooler, key=lambda rec: rec[0]):
        bucket = [degrees for _, degrees in grouped]
        if len(bucket) < 2:
            continue
        by_euler: dict[int, list[tuple[tuple[int, ...], ci.WallInvariants]]] = {}
        for degrees in bucket:
            w = ci.wall_invariants(ci.threefold_spec(degrees))
            by_euler.setdefault(w.e, []).append((degrees, w))
        for e, full_bucket in sorted(by_euler.items()):
            if len(full_bucket) < 2:
                continue
            if len({w.k for _, w in full_bucket}) < 2:
                continue
            groups.append(_certified_group(key, e, full_bucket))
    groups.sort(key=lambda g: (g.d, g.m, g.k_parity, g.e))
    return groups


def collisions_among(
    multidegrees,
    memory_budget: Optional[int] = None,
    spill_dir: Optional[str] = None,
) -> list[CollisionGroup]:
    """Two-phase grouping over an explicit collection of multidegrees."""
    canon = [
        tuple(sorted((int(d) for d in md), reverse=True)) for md in multidegrees
    ]
    return _group_records(
        ((cheap_key(md), md) for md in canon), memory_budget, spill_dir
    )


def search_collisions(
    bounds: SearchBounds,
    jobs: int = 1,
    spill_dir: Optional[str] = None,
    checkpoint_dir: Optional[str] = None,
) -> list[CollisionGroup]:
    """Two-phase collision search over all multidegrees within bounds.

    Groups are returned sorted by (d, m, k_parity, e).  With a checkpoint
    directory, per-shard phase-1 records are persisted and reloaded on
    resume; shards split on the leading degree.
    """
    shards = [(bounds, lead) for lead in range(2, bounds.max_degree + 1)]
    if checkpoint_dir is not None:
        os.makedirs(checkpoint_dir, exist_ok=True)

    def shard_results() -> Iterator[list[Record]]:
        pending = []
        for args in shards:
            path = (
                os.path.join(checkpoint_dir, f"shard-{args[1]:04d}.txt")
                if checkpoint_dir
                else None
            )
            if path is not None and os.path.exists(path):
                with open(path) as fh:
                    yield [_parse_record(line) for line in fh]
            else:
                pending.append((args, path))
        if not pending:
            return
        if jobs > 1:
            with Pool(jobs) as pool:
                computed = pool.map(_leading_degree_records, [a for a, _ in pending])
        else:
            computed = [_leading_degree_records(a) for a, _ in pending]
        for (_, path), records in zip(pending, computed):
            if path is not None:
                with open(path, "w") as fh:
                    fh.writelines(_format_record(rec) for rec in records)
            yield records

    def all_records() -> Iterator[Record]:
        for records in shard_results():
            yield from records

    return _group_records(all_records(), bounds.memory_budget, spill_dir)


@dataclass(frozen=True)
class KnownPairsCheck:
    """Outcome of recomputing the recorded (d, m, e, k) rows."""

    ok: bool
    mismatches: tuple[str, ...]

    def __bool__(self) -> bool:
        return self.ok


def verify_known_pairs() -> KnownPairsCheck:
    """Recompute every recorded collision row through the ring pipeline and
    diff it against the stored values."""
    mismatches = []
    for degrees, (d, m, e, k) in KNOWN_WALL_ROWS.items():
        w = ci.wall_invariants(ci.threefold_spec(degrees))
        for name, got, want in (
            ("d", w.d, d),
            ("m", w.m, m),
            ("e", w.e, e),
            ("k", w.k, k),
        ):
            if got != want:
                mismatches.append(f"{degrees}: {name} = {got}, expected {want}")
    return KnownPairsCheck(ok=not mismatches, mismatches=tuple(mismatches))
