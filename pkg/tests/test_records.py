from pathlib import Path

import pytest

from collatz_paradox.records import (IngestError, RecordKind, compute_records,
                                     default_reference_path,
                                     ingest_reference_records, recompute_value,
                                     theorem5_bound_chain)


def test_max_excursion_record_prefix():
    recs = compute_records(1000, RecordKind.MAX_EXCURSION_T)
    assert [e.n for e in recs][:8] == [1, 2, 3, 7, 15, 27, 255, 447]
    assert recs[5].value == 4616
    values = [e.value for e in recs]
    assert values == sorted(values) and len(set(values)) == len(values)


def test_delay_record_prefixes():
    col = compute_records(100, RecordKind.DELAY_COL)
    assert [e.n for e in col] == [1, 2, 3, 6, 7, 9, 18, 25, 27, 54, 73, 97]
    assert dict((e.n, e.value) for e in col)[27] == 111
    t = compute_records(100, RecordKind.DELAY_T)
    assert 27 in [e.n for e in t]
    assert dict((e.n, e.value) for e in t)[27] == 70


def test_recompute_value():
    assert recompute_value(27, RecordKind.MAX_EXCURSION_T) == 4616
    assert recompute_value(27, RecordKind.DELAY_COL) == 111
    assert recompute_value(27, RecordKind.DELAY_T) == 70


def test_ingest_packaged_tables():
    mex = ingest_reference_records(RecordKind.MAX_EXCURSION_T, prefix_check_to=20000)
    assert mex.entries[0] == mex.entries[0].__class__(1, 1)
    assert mex.smallest_holder_with_value(10**9) == 113383
    assert mex.smallest_holder_with_value(28 * 10**18, strict=True) == 23035537407
    dl = ingest_reference_records(RecordKind.DELAY_COL, prefix_check_to=20000)
    assert dl.frontier_value == 2456
    assert dl.max_record_value() == 2456
    assert dl.frontier_holder_bound() == 28 * 10**18


def test_ingest_rejects_malformed_lines(tmp_path):
    p = tmp_path / "bad.txt"
    p.write_text("# header\n1 1\n2\n")
    with pytest.raises(IngestError, match="bad.txt:3"):
        ingest_reference_records(RecordKind.MAX_EXCURSION_T, p, prefix_check_to=0,
                                 verify_values=False)


def test_ingest_rejects_non_monotone(tmp_path):
    p = tmp_path / "bad.txt"
    p.write_text("1 1\n2 2\n3 2\n")
    with pytest.raises(IngestError, match="strictly increase"):
        ingest_reference_records(RecordKind.MAX_EXCURSION_T, p, prefix_check_to=0,
                                 verify_values=False)


def test_ingest_rejects_prefix_mismatch(tmp_path):
    src = default_reference_path(RecordKind.MAX_EXCURSION_T).read_text()
    lines = [l for l in src.splitlines() if not l.startswith("#")]
    lines[3] = "8 26"   # wrong holder for the fourth record
    p = tmp_path / "tampered.txt"
    p.write_text("\n".join(lines) + "\n")
    with pytest.raises(IngestError, match="prefix"):
        ingest_reference_records(RecordKind.MAX_EXCURSION_T, p, prefix_check_to=100,
                                 verify_values=False)


def test_ingest_rejects_wrong_value(tmp_path):
    src = default_reference_path(RecordKind.MAX_EXCURSION_T).read_text()
    lines = src.splitlines()
    out = []
    for l in lines:
        if l.startswith("19638399 "):
            l = "19638399 153148462601877"   # off by one
        out.append(l)
    p = tmp_path / "tampered.txt"
    p.write_text("\n".join(out) + "\n")
    with pytest.raises(IngestError, match="recompute"):
        ingest_reference_records(RecordKind.MAX_EXCURSION_T, p, prefix_check_to=100)


def test_bound_chain_values():
    rep = theorem5_bound_chain(prefix_check_to=10**4)
    assert rep.m0 == 113383
    assert rep.j0 == 1539
    assert rep.q0 == 971
    assert rep.delay_needed == 2510
    assert rep.max_known_delay == 2456
    assert rep.m1 == 23035537407
    assert rep.j1 == 301994
    assert rep.consistent
    assert any("301994" in line for line in rep.lines())


def test_bound_chain_custom_refs_dir(tmp_path):
    refs = tmp_path / "refs"
    refs.mkdir()
    for kind in (RecordKind.MAX_EXCURSION_T, RecordKind.DELAY_COL):
        src = default_reference_path(kind)
        (refs / src.name).write_text(src.read_text())
    rep = theorem5_bound_chain(refs, prefix_check_to=10**3)
    assert rep.j1 == 301994
