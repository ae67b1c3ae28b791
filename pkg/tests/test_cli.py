"""End-to-end CLI runs over the bundled fixtures: exit codes, report shapes,
and byte-level determinism."""

import json
import os
import subprocess
import sys
from pathlib import Path

import pytest

FIXTURES = Path(__file__).parent / "fixtures"


def fx(name: str) -> str:
    return str(FIXTURES / name)


def run_cli(*args, env_extra=None):
    env = dict(os.environ)
    env.pop("FIALG_THREADS", None)
    if env_extra:
        env.update(env_extra)
    return subprocess.run(
        [sys.executable, "-m", "fialg", *args],
        capture_output=True,
        text=True,
        env=env,
    )


def test_validate_poset_accepts_and_normalizes():
    r = run_cli("validate-poset", fx("poset_diamond.json"))
    assert r.returncode == 0
    obj = json.loads(r.stdout)
    assert obj["elements"] == ["bot", "l", "r", "top"]
    assert "poset ok" in r.stderr


def test_validate_poset_rejects_cycle():
    r = run_cli("validate-poset", fx("poset_cycle.json"))
    assert r.returncode == 2
    assert "poset_cycle.json" in r.stderr
    assert r.stdout == ""


def test_missing_file_is_exit_2():
    r = run_cli("validate-poset", fx("no_such_poset.json"))
    assert r.returncode == 2
    assert "no_such_poset.json" in r.stderr


def test_gen_poset_deterministic():
    a = run_cli("gen-poset", "--n", "6", "--p", "0.4", "--seed", "11")
    b = run_cli("gen-poset", "--n", "6", "--p", "0.4", "--seed", "11")
    assert a.returncode == b.returncode == 0
    assert a.stdout == b.stdout
    assert json.loads(a.stdout)["elements"] == [str(i) for i in range(1, 7)]


def test_gen_poset_argument_validation():
    assert run_cli("gen-poset", "--n", "0", "--p", "0.4", "--seed", "1").returncode == 2
    assert run_cli("gen-poset", "--n", "3", "--p", "1.5", "--seed", "1").returncode == 2


def test_gen_jordan_then_check_map_round_trip(tmp_path):
    out = tmp_path / "m.json"
    r = run_cli(
        "gen-jordan",
        "--poset", fx("poset_diamond.json"),
        "--ring", fx("ring_mod9.json"),
        "--seed", "20",
        "--out", str(out),
    )
    assert r.returncode == 0
    # bundled fixture was produced by this exact command: must match bytes
    assert out.read_text() == Path(fx("map_jordan_diamond_mod9.json")).read_text()
    chk = run_cli(
        "check-map", "--jordan",
        "--poset", fx("poset_diamond.json"),
        "--ring", fx("ring_mod9.json"),
        "--map", str(out),
    )
    assert chk.returncode == 0
    rep = json.loads(chk.stdout)
    assert rep["pass"] is True


def test_decompose_identity_fixture_shows_five_passes():
    r = run_cli(
        "decompose",
        "--poset", fx("poset_3chain.json"),
        "--ring", fx("ring_rationals.json"),
        "--map", fx("map_identity_3chain_rationals.json"),
    )
    assert r.returncode == 0
    rep = json.loads(r.stdout)
    assert set(rep) == {"checks", "psi", "theta"}
    assert len(rep["checks"]) == 5
    assert all(c["pass"] for c in rep["checks"])


def test_check_map_jordan_rejects_perturbed_fixture():
    r = run_cli(
        "check-map", "--jordan",
        "--poset", fx("poset_3chain.json"),
        "--ring", fx("ring_rationals.json"),
        "--map", fx("map_perturbed_3chain_rationals.json"),
    )
    assert r.returncode == 1
    rep = json.loads(r.stdout)
    assert rep["pass"] is False
    failing = [c for c in rep["checks"] if not c["pass"]]
    assert failing and failing[0]["witnesses"]
    w = failing[0]["witnesses"][0]
    assert {"indices", "left", "right"} <= set(w)


def test_decompose_perturbed_fixture_is_precondition_error():
    r = run_cli(
        "decompose",
        "--poset", fx("poset_3chain.json"),
        "--ring", fx("ring_rationals.json"),
        "--map", fx("map_perturbed_3chain_rationals.json"),
    )
    assert r.returncode == 2
    assert "NotJordan" in r.stderr


def test_verify_identities_torsion_gate():
    r = run_cli(
        "verify", "--identities",
        "--poset", fx("poset_3chain.json"),
        "--ring", fx("ring_mod6.json"),
        "--map", fx("map_identity_3chain_rationals.json"),
    )
    assert r.returncode == 2
    assert "TorsionRefused" in r.stderr
    # the override lets the identity map through (it satisfies every law)
    r2 = run_cli(
        "verify", "--identities", "--allow-torsion",
        "--poset", fx("poset_3chain.json"),
        "--ring", fx("ring_mod6.json"),
        "--map", fx("map_identity_3chain_rationals.json"),
    )
    assert r2.returncode == 0


def test_verify_near_sum_and_identities_on_fixture():
    common = [
        "--poset", fx("poset_two_2chains.json"),
        "--ring", fx("ring_rationals.json"),
        "--map", fx("map_jordan_two_2chains_rationals.json"),
    ]
    near = run_cli("verify", *common)
    assert near.returncode == 0
    assert [c["name"] for c in json.loads(near.stdout)["checks"]] == [
        "psi_homomorphism",
        "theta_anti_homomorphism",
        "diagonal_agreement",
        "strict_sum_recomposition",
        "strict_annihilation",
    ]
    full = run_cli("verify", "--identities", *common)
    assert full.returncode == 0
    assert json.loads(full.stdout)["pass"] is True


def test_out_file_matches_stdout(tmp_path):
    args = [
        "decompose",
        "--poset", fx("poset_diamond.json"),
        "--ring", fx("ring_mod9.json"),
        "--map", fx("map_jordan_diamond_mod9.json"),
    ]
    to_stdout = run_cli(*args)
    out = tmp_path / "rep.json"
    to_file = run_cli(*args, "--out", str(out))
    assert to_stdout.returncode == to_file.returncode == 0
    assert out.read_text() == to_stdout.stdout


def test_thread_env_validation():
    ok = run_cli(
        "validate-poset", fx("poset_2chain.json"), env_extra={"FIALG_THREADS": "4"}
    )
    assert ok.returncode == 0
    bad = run_cli(
        "validate-poset", fx("poset_2chain.json"), env_extra={"FIALG_THREADS": "zero"}
    )
    assert bad.returncode == 2
    assert "FIALG_THREADS" in bad.stderr
    neg = run_cli(
        "validate-poset", fx("poset_2chain.json"), env_extra={"FIALG_THREADS": "0"}
    )
    assert neg.returncode == 2


def test_unknown_subcommand_is_exit_2():
    r = run_cli("frobnicate")
    assert r.returncode == 2
