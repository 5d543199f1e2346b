"""End-to-end tests of the command-line interface via main(argv)."""

import io
import json

import networkx as nx
import pytest

from hyperopic.audits import CLAIMS, AuditReport
from hyperopic.cli import main
from hyperopic.families import complete, cycle, path, t_hat
from hyperopic.formats import encode_graph6
from hyperopic.graph import Graph


def run(capsys, argv):
    code = main(argv)
    out = capsys.readouterr()
    return code, out.out, out.err


def nx_of(g6):
    return nx.from_graph6_bytes(g6.encode("ascii"))


# ---------------------------------------------------------------------------
# copnum


def test_copnum_path(capsys):
    code, out, err = run(
        capsys, ["copnum", encode_graph6(path(5)), "--rule", "hyperopic", "--k", "2"]
    )
    assert code == 0
    lines = out.strip().splitlines()
    assert lines[0] == "1"
    rec = json.loads(lines[1])
    assert rec["cop_number"] == 1
    assert rec["rule"] == "hyperopic" and rec["k"] == 2
    assert rec["graph6"] == encode_graph6(path(5))
    assert len(rec["placement"]) == 1
    assert rec["states_explored"] > 0


def test_copnum_more_examples(capsys):
    code, out, _ = run(
        capsys, ["copnum", encode_graph6(cycle(7)), "--rule", "hyperopic", "--k", "3"]
    )
    assert code == 0 and out.strip().splitlines()[0] == "2"

    code, out, _ = run(
        capsys, ["copnum", encode_graph6(complete(7)), "--rule", "hyperopic", "--k", "1"]
    )
    assert code == 0 and out.strip().splitlines()[0] == "4"

    code, out, _ = run(capsys, ["copnum", encode_graph6(path(5)), "--rule", "zero"])
    assert code == 0 and out.strip().splitlines()[0] == "1"

    code, out, _ = run(capsys, ["copnum", encode_graph6(cycle(4)), "--rule", "classic"])
    assert code == 0 and out.strip().splitlines()[0] == "2"


def test_copnum_reads_edge_lists_and_files(tmp_path, capsys, monkeypatch):
    code, out, _ = run(
        capsys,
        ["copnum", "0 1\n1 2", "--format", "edges", "--rule", "hyperopic", "--k", "1"],
    )
    assert code == 0 and out.strip().splitlines()[0] == "1"

    f = tmp_path / "g.g6"
    f.write_text(encode_graph6(cycle(5)) + "\n")
    code, out, _ = run(capsys, ["copnum", str(f), "--rule", "hyperopic", "--k", "3"])
    assert code == 0 and out.strip().splitlines()[0] == "2"

    monkeypatch.setattr("sys.stdin", io.StringIO(encode_graph6(path(4)) + "\n"))
    code, out, _ = run(capsys, ["copnum", "-", "--rule", "hyperopic", "--k", "2"])
    assert code == 0 and out.strip().splitlines()[0] == "1"


def test_copnum_usage_errors(capsys):
    code, _, err = run(capsys, ["copnum", encode_graph6(path(5))])  # missing --k
    assert code == 2 and "requires --k" in err

    code, _, err = run(
        capsys, ["copnum", encode_graph6(path(5)), "--rule", "zero", "--k", "2"]
    )
    assert code == 2 and "takes no --k" in err

    code, _, err = run(capsys, ["copnum", "##garbage##", "--rule", "zero"])
    assert code == 2 and "error" in err

    code, _, err = run(
        capsys,
        ["copnum", encode_graph6(path(5)), "--rule", "zero", "--max-cops", "0"],
    )
    assert code == 2 and "max-cops" in err


def test_copnum_undecided_exits_three(capsys):
    code, out, err = run(
        capsys,
        ["copnum", encode_graph6(cycle(4)), "--rule", "classic", "--max-cops", "1"],
    )
    assert code == 3 and out == "" and "no win with up to" in err

    code, out, err = run(
        capsys,
        ["copnum", encode_graph6(cycle(7)), "--rule", "hyperopic", "--k", "2",
         "--state-cap", "3"],
    )
    assert code == 3 and out == "" and "state cap" in err


def test_copnum_cache_hit_reruns_identically(tmp_path, capsys):
    cache = str(tmp_path / "cache.jsonl")
    argv = ["copnum", encode_graph6(cycle(7)), "--rule", "hyperopic", "--k", "3",
            "--cache", cache]
    code1, out1, err1 = run(capsys, argv)
    code2, out2, err2 = run(capsys, argv)
    assert code1 == code2 == 0
    assert out1 == out2
    assert "cache hit" not in err1
    assert "cache hit" in err2


# ---------------------------------------------------------------------------
# verify


def test_verify_tree_policy(capsys):
    code, out, _ = run(
        capsys, ["verify", encode_graph6(t_hat()), "--policy", "tree2"]
    )
    assert code == 0
    rec = json.loads(out)
    assert rec == {
        "policy": "tree2",
        "cops_used": 2,
        "outcome": "win",
        "rounds_or_witness": 3,
    }


def test_verify_matching_policy(capsys):
    code, out, _ = run(
        capsys, ["verify", encode_graph6(cycle(5)), "--policy", "matching"]
    )
    assert code == 0
    rec = json.loads(out)
    assert rec["outcome"] == "win" and rec["cops_used"] == 3


def test_verify_parametrized_policies(capsys):
    code, out, _ = run(
        capsys, ["verify", encode_graph6(path(10)), "--policy", "pendant", "--k", "4"]
    )
    assert code == 0
    assert json.loads(out)["rounds_or_witness"] == 6

    code, out, _ = run(
        capsys, ["verify", encode_graph6(cycle(8)), "--policy", "outerplanar"]
    )
    assert code == 0
    assert json.loads(out)["outcome"] == "win"


def test_verify_precondition_violations_exit_four(capsys):
    code, out, err = run(
        capsys, ["verify", encode_graph6(cycle(9)), "--policy", "stationary", "--k", "2"]
    )
    assert code == 4 and out == ""
    assert "precondition violated" in err and "diameter 4 too small" in err

    code, _, err = run(
        capsys, ["verify", encode_graph6(path(5)), "--policy", "neardiam", "--k", "4"]
    )
    assert code == 4 and "outside" in err


def test_verify_k_flag_handling(capsys):
    code, _, err = run(
        capsys, ["verify", encode_graph6(path(10)), "--policy", "pendant"]
    )
    assert code == 2 and "requires --k" in err

    code, _, err = run(
        capsys, ["verify", encode_graph6(t_hat()), "--policy", "tree2", "--k", "3"]
    )
    assert code == 2 and "takes no --k" in err


# ---------------------------------------------------------------------------
# gen


def test_gen_spider_with_stats(capsys):
    code, out, _ = run(capsys, ["gen", "--family", "that", "--stats"])
    assert code == 0
    g6, stats_line = out.strip().splitlines()
    assert g6 == encode_graph6(t_hat())
    stats = json.loads(stats_line)
    assert stats == {
        "n": 7,
        "diameter": 4,
        "radius": 2,
        "matching_number": 3,
        "caterpillar": False,
    }


def test_gen_pendant_clique_family(capsys):
    code, out, _ = run(
        capsys, ["gen", "--family", "gk", "--m", "3", "--k", "2", "--stats"]
    )
    assert code == 0
    stats = json.loads(out.strip().splitlines()[1])
    assert stats["n"] == 15 and stats["diameter"] == 5


def test_gen_recursive_spider_matches_fixed_one(capsys):
    code, out, _ = run(capsys, ["gen", "--family", "tfamily", "--m", "2"])
    assert code == 0
    assert nx.is_isomorphic(nx_of(out.strip()), nx_of(encode_graph6(t_hat())))


def test_gen_edge_format_and_subdivision(capsys):
    code, out, _ = run(
        capsys, ["gen", "--family", "path", "--n", "4", "--format", "edges"]
    )
    assert code == 0
    pairs = [tuple(map(int, ln.split())) for ln in out.strip().splitlines()]
    assert pairs == [(0, 1), (1, 2), (2, 3)]

    code, out, _ = run(
        capsys, ["gen", "--family", "cycle", "--n", "3", "--subdivide", "1"]
    )
    assert code == 0
    assert nx.is_isomorphic(nx_of(out.strip()), nx_of(encode_graph6(cycle(6))))


def test_gen_caterpillar_and_attach_modes(capsys):
    code, out, _ = run(
        capsys, ["gen", "--family", "caterpillar", "--leaves", "2,0,3", "--stats"]
    )
    assert code == 0
    stats = json.loads(out.strip().splitlines()[1])
    assert stats["caterpillar"] is True and stats["n"] == 8

    code, out, _ = run(
        capsys, ["gen", "--family", "tfamily", "--m", "2", "--attach", "eccentric",
                 "--stats"]
    )
    assert code == 0
    assert json.loads(out.strip().splitlines()[1])["diameter"] >= 4


def test_gen_usage_errors(capsys):
    code, _, err = run(capsys, ["gen", "--family", "gk", "--m", "3"])
    assert code == 2 and "requires --k" in err

    code, _, err = run(capsys, ["gen", "--family", "path", "--n", "4", "--m", "2"])
    assert code == 2 and "takes no --m" in err

    code, _, err = run(
        capsys, ["gen", "--family", "caterpillar", "--leaves", "a,b"]
    )
    assert code == 2 and "comma-separated" in err

    code, _, err = run(capsys, ["gen", "--family", "gk", "--m", "2", "--k", "1"])
    assert code == 2  # family constructor rejects m < 3


def test_argparse_failures_exit_two(capsys):
    for argv in [[], ["frobnicate"], ["gen", "--family", "moebius"]]:
        with pytest.raises(SystemExit) as exc:
            main(argv)
        assert exc.value.code == 2


# ---------------------------------------------------------------------------
# audit


def test_audit_single_claim(capsys):
    code, out, err = run(capsys, ["audit", "--claim", "caterpillar", "--n-max", "6"])
    assert code == 0
    rows = [json.loads(ln) for ln in out.strip().splitlines()]
    assert rows and all(r["claim"] == "caterpillar" for r in rows)
    assert all(r["verdict"] == "pass" for r in rows)
    assert "caterpillar" in err  # summary table on stderr


def test_audit_documented_discrepancy_exits_zero(capsys):
    code, out, _ = run(capsys, ["audit", "--claim", "tfamily-diam"])
    assert code == 0
    rows = [json.loads(ln) for ln in out.strip().splitlines()]
    assert [r["verdict"] for r in rows] == ["violation-documented"] * 3


def test_audit_all_claims_small(capsys):
    code, out, err = run(capsys, ["audit", "--n-max", "4"])
    assert code == 0
    rows = [json.loads(ln) for ln in out.strip().splitlines()]
    claims_seen = {r["claim"] for r in rows}
    assert claims_seen <= set(CLAIMS)
    assert "caterpillar" in claims_seen and "tfamily-diam" in claims_seen
    assert not any(r["verdict"] == "violation" for r in rows)
    # stdout rows are sorted by (claim, instance)
    keys = [(r["claim"], json.dumps(r["instance"], sort_keys=True)) for r in rows]
    assert keys == sorted(keys)


def test_audit_jobs_flag_is_invisible_in_output(capsys):
    argv = ["audit", "--claim", "bipartite", "--n-max", "4"]
    code1, out1, _ = run(capsys, argv + ["--jobs", "1"])
    code2, out2, _ = run(capsys, argv + ["--jobs", "3"])
    assert code1 == code2 == 0
    assert out1 == out2


def test_audit_unknown_claim_exits_two(capsys):
    code, _, err = run(capsys, ["audit", "--claim", "flat-earth"])
    assert code == 2 and "unknown claim" in err


def test_audit_plain_violation_exits_one(capsys, monkeypatch):
    def fake_run_claim(claim, **kw):
        return [
            AuditReport(claim, {"graph6": "Bw"}, "always true", {}, "violation")
        ]

    monkeypatch.setattr("hyperopic.audits.run_claim", fake_run_claim)
    code, out, _ = run(capsys, ["audit", "--claim", "caterpillar"])
    assert code == 1
    assert json.loads(out)["verdict"] == "violation"
