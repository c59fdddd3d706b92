"""Sharded, resumable execution of the paradox enumeration.

The range splits into fixed-size blocks handed to a process pool; workers
share nothing, and the collector merges per-block results in block order, so
the output is identical for any worker count.  After every finished block the
checkpoint file is rewritten atomically (write-to-temp + rename); a run
killed at any point resumes from the surviving checkpoint and produces the
same bytes as an uninterrupted run.

Checkpoint format (plain text, one key=value per line):

    version=1
    digest=<sha256 of the search parameters>
    lo=3 hi=1000000 ... (one per line, informational)
    done=<block index>          (one line per completed block)
    hit=<block>,<n>,<j>         (one line per hit found in that block)
"""

from __future__ import annotations

import hashlib
import os
import tempfile
import time
from concurrent import futures
from dataclasses import dataclass, field
from pathlib import Path

from .census import census, render_census
from .dynamics import Formalism
from .search import DEFAULT_BUDGET, HIT_CSV_HEADER, ParadoxHit, scan_paradoxes

DEFAULT_BLOCK_SIZE = 1 << 16


@dataclass(frozen=True)
class SearchConfig:
    lo: int
    hi: int
    formalism: Formalism = Formalism.SHORTCUT
    budget: int = DEFAULT_BUDGET
    block_size: int = DEFAULT_BLOCK_SIZE

    def digest(self) -> str:
        key = f"v1|{self.lo}|{self.hi}|{self.formalism.value}|{self.budget}|{self.block_size}"
        return hashlib.sha256(key.encode()).hexdigest()

    def blocks(self) -> list[tuple[int, int, int]]:
        """(index, lo, hi) triples covering [lo, hi] inclusively."""
        out = []
        idx = 0
        lo = self.lo
        while lo <= self.hi:
            hi = min(lo + self.block_size - 1, self.hi)
            out.append((idx, lo, hi))
            lo = hi + 1
            idx += 1
        return out


@dataclass
class SearchResult:
    config: SearchConfig
    complete: bool
    blocks_total: int
    blocks_done: int
    pairs: list[tuple[int, int]] = field(default_factory=list)   # (n, j), sorted
    _hits: list[ParadoxHit] | None = None

    def hits(self) -> list[ParadoxHit]:
        """Exact hit records, rebuilt and re-verified from the (n, j) pairs."""
        if not self.complete:
            raise ValueError("search did not complete; no final hit list")
        if self._hits is None:
            self._hits = [ParadoxHit.from_walk(n, j, self.config.formalism)
                          for n, j in self.pairs]
        return self._hits


class CheckpointMismatch(ValueError):
    pass


class _Checkpoint:
    def __init__(self, path: Path, cfg: SearchConfig):
        self.path = path
        self.cfg = cfg
        self.done: dict[int, list[tuple[int, int]]] = {}

    def load(self) -> None:
        if not self.path.exists():
            return
        done: set[int] = set()
        hits: dict[int, list[tuple[int, int]]] = {}
        digest = None
        with self.path.open() as fh:
            for raw in fh:
                line = raw.strip()
                if not line or line.startswith("#"):
                    continue
                key, _, val = line.partition("=")
                if key == "digest":
                    digest = val
                elif key == "done":
                    done.add(int(val))
                elif key == "hit":
                    b, n, j = (int(x) for x in val.split(","))
                    hits.setdefault(b, []).append((n, j))
        if digest != self.cfg.digest():
            raise CheckpointMismatch(
                f"{self.path} belongs to a different search configuration")
        self.done = {b: sorted(hits.get(b, [])) for b in done}

    def record(self, block: int, pairs: list[tuple[int, int]]) -> None:
        self.done[block] = pairs
        self._write()

    def _write(self) -> None:
        cfg = self.cfg
        fd, tmp = tempfile.mkstemp(dir=str(self.path.parent or Path(".")),
                                   prefix=self.path.name, suffix=".tmp")
        try:
            with os.fdopen(fd, "w", newline="\n") as fh:
                fh.write("# collatz-paradox search checkpoint\n")
                fh.write("version=1\n")
                fh.write(f"digest={cfg.digest()}\n")
                fh.write(f"lo={cfg.lo}\nhi={cfg.hi}\n")
                fh.write(f"formalism={cfg.formalism.value}\n")
                fh.write(f"budget={cfg.budget}\nblock_size={cfg.block_size}\n")
                for b in sorted(self.done):
                    fh.write(f"done={b}\n")
                for b in sorted(self.done):
                    for n, j in self.done[b]:
                        fh.write(f"hit={b},{n},{j}\n")
            os.replace(tmp, self.path)
        except BaseException:
            try:
                os.unlink(tmp)
            except OSError:
                pass
            raise


def _scan_block_task(args: tuple[int, int, int, Formalism, int]) -> tuple[int, list[tuple[int, int]]]:
    idx, lo, hi, formalism, budget = args
    return idx, scan_paradoxes(lo, hi, formalism, budget)


def run_search(cfg: SearchConfig, threads: int = 1,
               checkpoint: str | Path | None = None,
               max_blocks: int | None = None) -> SearchResult:
    """Run (or resume) the enumeration over cfg's range.

    threads is the worker-process count; results do not depend on it.
    max_blocks caps how many *new* blocks are processed before returning an
    incomplete result (the checkpoint then holds the partial state), which is
    how both tests and operators force an interruption point.
    """
    if threads < 1:
        raise ValueError("threads must be >= 1")
    blocks = cfg.blocks()
    ckpt = None
    done: dict[int, list[tuple[int, int]]] = {}
    if checkpoint is not None:
        ckpt = _Checkpoint(Path(checkpoint), cfg)
        ckpt.load()
        done = dict(ckpt.done)

    pending = [b for b in blocks if b[0] not in done]
    if max_blocks is not None:
        pending = pending[:max_blocks]

    if threads == 1 or len(pending) <= 1:
        for idx, lo, hi in pending:
            _, pairs = _scan_block_task((idx, lo, hi, cfg.formalism, cfg.budget))
            done[idx] = pairs
            if ckpt is not None:
                ckpt.record(idx, pairs)
    else:
        with futures.ProcessPoolExecutor(max_workers=threads) as pool:
            fs = {pool.submit(_scan_block_task,
                              (idx, lo, hi, cfg.formalism, cfg.budget)): idx
                  for idx, lo, hi in pending}
            for fut in futures.as_completed(fs):
                idx, pairs = fut.result()
                done[idx] = pairs
                if ckpt is not None:
                    ckpt.record(idx, pairs)

    complete = len(done) == len(blocks)
    pairs: list[tuple[int, int]] = []
    if complete:
        for idx, _, _ in blocks:
            pairs.extend(done[idx])
        pairs.sort()
    return SearchResult(cfg, complete, len(blocks), len(done), pairs)


# ---------------------------------------------------------------------------
# Output files
# ---------------------------------------------------------------------------


def hits_csv_text(result: SearchResult, timestamp: bool = True) -> str:
    cfg = result.config
    lines = ["# collatz-paradox hits",
             f"# range={cfg.lo}..{cfg.hi} formalism={cfg.formalism.value} "
             f"budget={cfg.budget}"]
    if timestamp:
        lines.append("# generated=" + time.strftime("%Y-%m-%dT%H:%M:%SZ", time.gmtime()))
    lines.append(HIT_CSV_HEADER)
    lines.extend(h.csv_row() for h in result.hits())
    return "\n".join(lines) + "\n"


def census_text(result: SearchResult, decimals: int = 2) -> str:
    rows, summary = census(result.hits())
    return render_census(rows, summary, decimals)


def write_text(path: str | Path, text: str) -> None:
    path = Path(path)
    if path.parent and not path.parent.exists():
        path.parent.mkdir(parents=True, exist_ok=True)
    with path.open("w", newline="\n") as fh:
        fh.write(text)
