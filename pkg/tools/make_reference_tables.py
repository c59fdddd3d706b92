#!/usr/bin/env python3
"""Regenerate the packaged reference record tables.

The exhaustive prefix (default: up to 10**7) is computed here from scratch.
Tail holders beyond that bound are transcribed from the published 3x+1 record
tables (Oliveira e Silva's maximum-excursion records and Roosendaal's delay
records, the same data the OEIS entries A006884/A006877 track); their values
are NOT transcribed: each one is recomputed locally by a direct trajectory,
and the combined list must come out strictly increasing in both columns or
this script refuses to write anything.

What cannot be recomputed at desk scale is the completeness of the published
tails (that no record holder is missing between two tail entries) and the
exact holder of the current classic-delay record, an integer slightly above
2.8e19; the delay table therefore carries that frontier as metadata instead
of fabricating a data line for it.
"""

from __future__ import annotations

import argparse
import sys
import time
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parents[1] / "src"))

from collatz_paradox.records import RecordKind, compute_records, recompute_value

# Published maximum-excursion record holders above the exhaustive range
# (compressed-map records coincide with the classic ones from 3 on: the peak
# is reached right after an odd step, so the compressed peak is half the
# classic peak).  The list stops where the bound chain stops needing it.
MAX_EXCURSION_TAIL = [
    19638399,
    38595583,
    80049391,
    120080895,
    210964383,
    319804831,
    1410123943,
    8528817511,
    12327829503,
    23035537407,
    45871962271,
]

# Published classic-delay record holders above the exhaustive range.  The
# published table continues far beyond the last entry here; its current
# frontier is recorded as metadata below.
DELAY_COL_TAIL = [
    11200681,
    14934241,
    15733191,
    31466382,
    36791535,
    63728127,
    127456254,
    169941673,
    226588897,
    268549803,
    537099606,
    670617279,
    1341234558,
]

DELAY_FRONTIER_VALUE = 2456
DELAY_FRONTIER_HOLDER_ABOVE = 28_000_000_000_000_000_000   # holder is slightly above 2.8e19

HEADERS = {
    RecordKind.MAX_EXCURSION_T: [
        "reference record table: maximum excursion, compressed map (odd n -> (3n+1)/2)",
        "columns: n value, both strictly increasing; value = greatest iterate on the way to 1",
        "prefix n <= {exhaustive}: computed exhaustively by tools/make_reference_tables.py",
        "tail holders: published 3x+1 maximum-excursion records (Oliveira e Silva's",
        "  search; cf. OEIS A006884); every tail value recomputed locally, exact",
        "completeness of the tail (no missing holder between entries) rests on the source",
        "generated: {date}",
    ],
    RecordKind.DELAY_COL: [
        "reference record table: delay (steps to reach 1), classic map (odd n -> 3n+1)",
        "columns: n value, both strictly increasing; value = least j with Col^j(n) = 1",
        "prefix n <= {exhaustive}: computed exhaustively by tools/make_reference_tables.py",
        "tail holders: published 3x+1 delay records (Roosendaal's tables; cf. OEIS",
        "  A006877); every tail value recomputed locally, exact",
        "the published table extends beyond the entries listed here; its frontier:",
        "frontier-value: {fval}",
        "frontier-holder-above: {fbound}",
        "  (the current record holder is slightly above that bound; exact digits",
        "  are not redistributed here, and nothing downstream needs them)",
        "generated: {date}",
    ],
}


def build(kind: RecordKind, exhaustive_to: int, tail: list[int]) -> list[tuple[int, int]]:
    t0 = time.time()
    prefix = compute_records(exhaustive_to, kind)
    print(f"{kind.value}: {len(prefix)} records up to {exhaustive_to} "
          f"({time.time() - t0:.1f} s)")
    rows = [(e.n, e.value) for e in prefix]
    for n in tail:
        if n <= exhaustive_to:
            raise SystemExit(f"tail holder {n} lies inside the exhaustive range")
        v = recompute_value(n, kind)
        print(f"  tail {n} -> {v}")
        rows.append((n, v))
    for (n1, v1), (n2, v2) in zip(rows, rows[1:]):
        if n2 <= n1 or v2 <= v1:
            raise SystemExit(f"not a record table: ({n1},{v1}) -> ({n2},{v2})")
    return rows


def write_table(path: Path, kind: RecordKind, rows: list[tuple[int, int]],
                exhaustive_to: int) -> None:
    date = time.strftime("%Y-%m-%d")
    header = [h.format(exhaustive=exhaustive_to, date=date,
                       fval=DELAY_FRONTIER_VALUE, fbound=DELAY_FRONTIER_HOLDER_ABOVE)
              for h in HEADERS[kind]]
    with path.open("w", newline="\n") as fh:
        for h in header:
            fh.write(f"# {h}\n")
        for n, v in rows:
            fh.write(f"{n} {v}\n")
    print(f"wrote {path} ({len(rows)} entries)")


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--exhaustive-to", type=int, default=10**7)
    ap.add_argument("--out-dir", default=str(Path(__file__).resolve().parents[1]
                                             / "src" / "collatz_paradox" / "data"))
    args = ap.parse_args()
    out = Path(args.out_dir)
    out.mkdir(parents=True, exist_ok=True)

    rows = build(RecordKind.MAX_EXCURSION_T, args.exhaustive_to, MAX_EXCURSION_TAIL)
    write_table(out / "max_excursion_t_records.txt", RecordKind.MAX_EXCURSION_T,
                rows, args.exhaustive_to)

    rows = build(RecordKind.DELAY_COL, args.exhaustive_to, DELAY_COL_TAIL)
    write_table(out / "delay_col_records.txt", RecordKind.DELAY_COL,
                rows, args.exhaustive_to)


if __name__ == "__main__":
    main()
