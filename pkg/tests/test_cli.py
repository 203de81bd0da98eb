import json

from quadlat import CayleyTable, parse_table, quadratical_over_zm, write_table
from quadlat.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_solve(capsys):
    code, out, _ = run(capsys, "solve", "-m", "65")
    assert code == 0
    assert out == "24 29 37 42\n"
    code, out, _ = run(capsys, "solve", "-m", "65", "--format", "json")
    assert json.loads(out) == {"m": 65, "solutions": [24, 29, 37, 42]}


def test_k_command(capsys):
    code, out, _ = run(capsys, "k", "-m", "13", "-a", "3")
    assert (code, out) == (0, "8\n")
    code, out, _ = run(capsys, "k", "-m", "7", "-a", "4", "-b", "1")
    assert (code, out) == (0, "3\n")
    code, out, _ = run(capsys, "k", "-m", "5", "-a", "2", "-b", "0")
    assert (code, out) == (0, "none\n")


def test_table_and_check_round_trip(capsys, tmp_path):
    path = tmp_path / "t13.txt"
    code, _, _ = run(capsys, "table", "-m", "13", "-a", "11", "-o", str(path))
    assert code == 0
    t = parse_table(path.read_text())
    assert t.entries == quadratical_over_zm(13, 11).entries
    code, out, _ = run(capsys, "check", "-i", str(path), "--all")
    assert code == 0
    lines = out.strip().splitlines()
    assert len(lines) == 15
    assert all(line.endswith(": holds") for line in lines)


def test_check_counterexample(capsys, tmp_path):
    path = tmp_path / "add5.txt"
    write_table(CayleyTable.from_function(5, lambda x, y: (x + y) % 5), path)
    code, out, _ = run(capsys, "check", "-i", str(path), "--id", "bookend")
    assert code == 0
    assert out == "bookend: counterexample (0, 1)\n"
    code, out, _ = run(capsys, "check", "-i", str(path), "--id", "bookend",
                       "--format", "json")
    assert json.loads(out)["results"]["bookend"] == [0, 1]


def test_usage_errors(capsys, tmp_path):
    code, _, err = run(capsys, "solve")
    assert code == 1
    path = tmp_path / "t.txt"
    write_table(CayleyTable.from_rows([[0]]), path)
    code, _, _ = run(capsys, "check", "-i", str(path))
    assert code == 1
    code, _, err = run(capsys, "nonsense")
    assert code == 1


def test_invariant_error_exit(capsys):
    code, _, err = run(capsys, "table", "-m", "5", "-a", "3")
    assert code == 2
    assert "error" in err


def test_dual_and_product(capsys, tmp_path):
    p5 = tmp_path / "q5.txt"
    run(capsys, "table", "-m", "5", "-a", "2", "-o", str(p5))
    pd = tmp_path / "dual.txt"
    code, _, _ = run(capsys, "dual", "-i", str(p5), "-o", str(pd))
    assert code == 0
    assert parse_table(pd.read_text()).entries == quadratical_over_zm(5, 4).entries
    pp = tmp_path / "prod.txt"
    code, _, _ = run(capsys, "product", str(p5), str(p5), "-o", str(pp))
    assert code == 0
    assert parse_table(pp.read_text()).n == 25


def test_iso_command(capsys, tmp_path):
    from quadlat import relabel

    a = tmp_path / "a.txt"
    b = tmp_path / "b.txt"
    c = tmp_path / "c.txt"
    run(capsys, "table", "-m", "13", "-a", "11", "-o", str(a))
    t = quadratical_over_zm(13, 11)
    write_table(relabel(t, [5, 2, 12, 0, 7, 1, 3, 4, 10, 11, 6, 9, 8]), b)
    # a table and its dual are never isomorphic over Z_m
    run(capsys, "table", "-m", "13", "-a", "3", "-o", str(c))
    code, out, _ = run(capsys, "iso", str(a), str(a))
    assert code == 0
    assert out.strip() == " ".join(str(i) for i in range(13))
    code, out, _ = run(capsys, "iso", str(a), str(b), "--format", "json")
    assert code == 0
    assert json.loads(out)["permutation"] is not None
    code, out, _ = run(capsys, "iso", str(a), str(c))
    assert code == 0
    assert out == "none\n"


def test_order_search_and_cap(capsys, tmp_path, monkeypatch):
    p5 = tmp_path / "q5.txt"
    run(capsys, "table", "-m", "5", "-a", "2", "-o", str(p5))
    code, out, _ = run(capsys, "order-search", "-i", str(p5))
    assert code == 0
    assert "k: 2" in out
    p13 = tmp_path / "q13.txt"
    run(capsys, "table", "-m", "13", "-a", "11", "-o", str(p13))
    code, _, err = run(capsys, "order-search", "-i", str(p13))
    assert code == 3
    assert "cap" in err
    monkeypatch.setenv("QUADLAT_MAX_ORDER_SEARCH", "13")
    code, out, _ = run(capsys, "order-search", "-i", str(p13))
    assert code == 0
    assert "k: 5" in out


def test_hchain_detect_form(capsys, tmp_path):
    p13 = tmp_path / "q13.txt"
    run(capsys, "table", "-m", "13", "-a", "11", "-o", str(p13))
    code, out, _ = run(capsys, "hchain", "-i", str(p13), "-a", "0", "-b", "1",
                       "-n", "3", "--format", "json")
    assert code == 0
    data = json.loads(out)
    assert len(data["blocks"]) == 3
    code, out, _ = run(capsys, "detect-form", "-i", str(p13))
    assert code == 0
    assert out.startswith("Q3 with base")


def test_complete_qn_command(capsys, tmp_path):
    out_path = tmp_path / "q2.txt"
    trace_path = tmp_path / "trace.txt"
    code, _, _ = run(capsys, "complete-qn", "-n", "2", "--choice", "22",
                     "--seed-labels", "-o", str(out_path), "--trace", str(trace_path))
    assert code == 0
    text = out_path.read_text()
    assert text.startswith("completed\n9\n")
    assert "# labels: aba a ab ba b 21 22 23 24" in text
    assert "by seed:" in trace_path.read_text()
    code, out, _ = run(capsys, "complete-qn", "-n", "2", "--choice", "24")
    assert code == 0
    assert out.startswith("contradiction")
    code, out, _ = run(capsys, "complete-qn", "-n", "4", "--choice", "1",
                       "--format", "json")
    assert code == 0
    assert json.loads(out)["outcome"] == "stuck"


def test_refute_q6_command(capsys):
    code, out, _ = run(capsys, "refute-q6")
    assert code == 0
    lines = out.strip().splitlines()
    assert len(lines) == 4
    assert all("contradiction in every branch" in line for line in lines)
    code, out, _ = run(capsys, "refute-q6", "--format", "json")
    data = json.loads(out)
    assert data["ok"] is True


def test_scan_classify_commands(capsys, tmp_path):
    code, out, _ = run(capsys, "scan", "--max-m", "70", "--max-k", "40")
    assert code == 0
    lines = out.strip().splitlines()
    assert lines[0] == "k,m,a,b"
    assert lines[1] == "2,5,2,4"
    disc = tmp_path / "disc.txt"
    code, out, _ = run(capsys, "classify", "--max-m", "70", "--format", "json",
                       "--discrepancies", str(disc))
    assert code == 0
    data = json.loads(out)
    assert data[0]["m"] == 5
    assert disc.read_text() == "no discrepancies\n"
    code, out, _ = run(capsys, "scan", "--max-m", "30", "--max-k", "40",
                       "--checkpoint", str(tmp_path / "ck"))
    assert code == 0
    assert (tmp_path / "ck").read_text() == "last_m=30\n"


def test_json_schema_every_command(capsys, tmp_path):
    a = tmp_path / "a.txt"
    run(capsys, "table", "-m", "5", "-a", "2", "-o", str(a))

    def js(*argv):
        code, out, _ = run(capsys, *argv)
        assert code == 0
        return json.loads(out)

    table = js("table", "-m", "5", "-a", "2", "--format", "json")
    assert set(table) == {"n", "entries", "labels"} and table["n"] == 5
    assert set(js("solve", "-m", "5", "--format", "json")) == {"m", "solutions"}
    assert set(js("check", "-i", str(a), "--all", "--format", "json")) == {
        "order", "results"}
    assert set(js("k", "-m", "5", "-a", "2", "--format", "json")) == {"m", "a", "k"}
    assert set(js("order-search", "-i", str(a), "--format", "json")) == {
        "ordering", "k"}
    assert set(js("hchain", "-i", str(a), "-a", "0", "-b", "1", "-n", "1",
                  "--format", "json")) == {"base", "center", "blocks"}
    assert set(js("detect-form", "-i", str(a), "--format", "json")) == {
        "blocks", "a", "b"}
    cq = js("complete-qn", "-n", "1", "--choice", "2", "--format", "json")
    assert cq["outcome"] == "completed" and set(cq) >= {"n", "entries"}
    assert set(js("refute-q6", "--format", "json")) == {"ok", "cases"}
    dualt = js("dual", "-i", str(a), "--format", "json")
    assert set(dualt) == {"n", "entries", "labels"}
    prod = js("product", str(a), str(a), "--format", "json")
    assert prod["n"] == 25
    assert set(js("iso", str(a), str(a), "--format", "json")) == {"permutation"}
    scan = js("scan", "--max-m", "30", "--max-k", "40", "--format", "json")
    assert all(set(r) == {"k", "m", "a", "b"} for r in scan)
    cls = js("classify", "--max-m", "30", "--format", "json")
    assert all(set(r) == {"m", "a", "b", "k"} for r in cls)


def test_scan_jobs_flag(capsys):
    code, out1, _ = run(capsys, "scan", "--max-m", "120", "--max-k", "40")
    code, out2, _ = run(capsys, "scan", "--max-m", "120", "--max-k", "40",
                        "--jobs", "2")
    assert out1 == out2
