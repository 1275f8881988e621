"""Wire formats and the command-line interface."""

import json
import subprocess
import sys
from fractions import Fraction

import pytest

from mvalg import FiniteMV, INF, RationalAlgebra, SimplicialGroup
from mvalg.cli import main
from mvalg.formats import (
    FormatError,
    algebra_to_json,
    element_to_json,
    fraction_to_str,
    parse_algebra,
    parse_element,
    parse_fraction,
)


class TestFormats:
    def test_fraction_round_trip(self):
        for text in ["0", "1", "1/2", "5/6"]:
            assert fraction_to_str(parse_fraction(text)) == text

    def test_fraction_rejects_out_of_range(self):
        with pytest.raises(FormatError):
            parse_fraction("3/2")
        with pytest.raises(FormatError):
            parse_fraction("1/0")

    def test_element_round_trip(self):
        a = FiniteMV([2, 3])
        x = parse_element(a, ["1/2", "1/3"])
        assert x == (Fraction(1, 2), Fraction(1, 3))
        assert element_to_json(x) == ["1/2", "1/3"]

    def test_algebra_formats(self):
        assert parse_algebra({"finite": [2, 3]}) == FiniteMV([2, 3])
        assert parse_algebra({"rational": {"kind": "chain", "n": 6}}) == RationalAlgebra.chain(6)
        super_spec = {"rational": {"kind": "supernatural", "primes": {"2": "inf"}, "all": False}}
        assert parse_algebra(super_spec) == RationalAlgebra.supernatural({2: INF})
        product = parse_algebra(
            {"product": [{"rational": {"kind": "chain", "n": 2}}, {"kind": "chain", "n": 3}]}
        )
        assert product == [RationalAlgebra.chain(2), RationalAlgebra.chain(3)]
        assert parse_algebra({"simplicial": {"rank": 2, "unit": [2, 3]}}) == SimplicialGroup([2, 3])

    def test_algebra_json_round_trip(self):
        for alg in [FiniteMV([2, 3]), RationalAlgebra.chain(6), RationalAlgebra.supernatural({2: INF, 3: 2})]:
            assert parse_algebra(algebra_to_json(alg)) == alg

    def test_rejects_malformed(self):
        for bad in [{"finite": [0]}, {"rational": {"kind": "weird"}}, {"x": 1}, {}, 7]:
            with pytest.raises(FormatError):
                parse_algebra(bad)


def run_cli(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


class TestCommands:
    def test_separable(self, capsys):
        code, out, _ = run_cli(capsys, "separable", "--alg", '{"finite":[2,3]}')
        assert code == 0
        payload = json.loads(out)
        assert payload["separable"] is True
        assert payload["factors"] == [
            {"rational": {"kind": "chain", "n": 2}},
            {"rational": {"kind": "chain", "n": 3}},
        ]
        assert payload["witness"] == ["1", "0", "0", "1"]

    def test_subterminal(self, capsys):
        code, out, _ = run_cli(capsys, "subterminal", "--alg", '{"finite":[6]}')
        assert code == 0 and json.loads(out)["subterminal"] is True
        code, out, _ = run_cli(capsys, "subterminal", "--alg", '{"finite":[2,3]}')
        assert code == 0 and json.loads(out)["subterminal"] is False

    def test_pi0(self, capsys):
        code, out, _ = run_cli(capsys, "pi0", "--space", '{"points":2,"opens":[[],[0],[0,1]]}')
        assert code == 0
        payload = json.loads(out)
        assert payload["classes"] == 1 and payload["class_of"] == [0, 0]

    def test_eval(self, capsys):
        code, out, _ = run_cli(
            capsys, "eval", "--alg", '{"finite":[3]}', "--term", "!(x + x)", "--env", '{"x":"1/3"}'
        )
        assert code == 0 and json.loads(out)["value"] == ["1/3"]

    def test_decompose(self, capsys):
        code, out, _ = run_cli(capsys, "decompose", "--alg", '{"finite":[2,3]}')
        payload = json.loads(out)
        assert code == 0 and payload["factors"] == [{"finite": [2]}, {"finite": [3]}]

    def test_pierce(self, capsys):
        code, out, _ = run_cli(capsys, "pierce", "--alg", '{"finite":[2,3]}')
        payload = json.loads(out)
        assert code == 0 and payload["atoms"] == 2 and payload["size"] == 4

    def test_coproduct(self, capsys):
        code, out, _ = run_cli(
            capsys, "coproduct", "--alg", '{"finite":[2,3]}', "--alg", '{"finite":[2,3]}'
        )
        payload = json.loads(out)
        assert code == 0 and payload["algebra"] == {"finite": [2, 6, 6, 3]}
        code, out, _ = run_cli(
            capsys,
            "coproduct",
            "--alg",
            '{"rational":{"kind":"supernatural","primes":{"2":"inf"},"all":false}}',
            "--alg",
            '{"rational":{"kind":"chain","n":3}}',
        )
        payload = json.loads(out)
        assert code == 0
        assert payload["algebra"]["rational"]["primes"] == {"2": "inf", "3": 1}

    def test_spec_with_element(self, capsys):
        code, out, _ = run_cli(
            capsys, "spec", "--alg", '{"finite":[2,3]}', "--elem", '["1","0"]'
        )
        payload = json.loads(out)
        assert code == 0
        assert payload["points"] == [0, 1]
        assert payload["vanishing_locus"] == [1] and payload["support"] == [0]

    def test_rank(self, capsys):
        code, out, _ = run_cli(
            capsys, "rank", "--alg", '{"finite":[2,3]}', "--elem", '["1/2","1/3"]'
        )
        payload = json.loads(out)
        assert code == 0 and payload["rank"] == 2 and payload["factors"] == [2, 3]
        code, out, _ = run_cli(
            capsys,
            "rank",
            "--alg",
            '{"rational":{"kind":"supernatural","primes":{},"all":true}}',
            "--elem",
            '"1/2"',
        )
        payload = json.loads(out)
        assert code == 0 and payload["rank"] == 1 and payload["factors"] == [2]

    def test_gamma_both_directions(self, capsys):
        code, out, _ = run_cli(capsys, "gamma", "--alg", '{"simplicial":{"rank":2,"unit":[2,3]}}')
        payload = json.loads(out)
        assert code == 0 and payload["algebra"] == {"finite": [2, 3]} and payload["round_trip"]
        code, out, _ = run_cli(capsys, "gamma", "--alg", '{"finite":[6]}')
        payload = json.loads(out)
        assert code == 0 and payload["group"] == {"simplicial": {"rank": 1, "unit": [6]}}

    def test_verify_single_criterion(self, capsys):
        code, out, _ = run_cli(capsys, "verify", "simplicial-roundtrip", "--max-size", "3")
        assert code == 0
        payload = json.loads(out)
        assert payload["all_passed"] is True and len(payload["criteria"]) == 1

    def test_verify_text_mode(self, capsys):
        code, out, _ = run_cli(
            capsys, "verify", "subterminal", "--max-size", "3", "--format", "text"
        )
        assert code == 0 and out.startswith("PASS subterminal")


class TestErrorHandling:
    def test_malformed_json_exits_2(self, capsys):
        assert run_cli(capsys, "separable", "--alg", "{not json")[0] == 2

    def test_bad_algebra_exits_2(self, capsys):
        assert run_cli(capsys, "separable", "--alg", '{"finite":[0]}')[0] == 2

    def test_missing_flag_exits_2(self, capsys):
        assert run_cli(capsys, "pi0")[0] == 2

    def test_bad_term_exits_2(self, capsys):
        assert run_cli(capsys, "eval", "--alg", '{"finite":[2]}', "--term", "x +")[0] == 2

    def test_unknown_criterion_exits_2(self, capsys):
        assert run_cli(capsys, "verify", "nonsense")[0] == 2

    def test_invalid_topology_exits_2(self, capsys):
        assert run_cli(capsys, "pi0", "--space", '{"points":2,"opens":[[],[0]]}')[0] == 2


class TestDeterminism:
    def test_byte_identical_runs(self):
        cmd = [
            sys.executable,
            "-m",
            "mvalg",
            "verify",
            "subterminal",
            "pierce-coproducts",
            "--max-size",
            "3",
            "--seed",
            "7",
        ]
        first = subprocess.run(cmd, capture_output=True, check=True)
        second = subprocess.run(cmd, capture_output=True, check=True)
        assert first.stdout == second.stdout

    def test_console_reports_violation_exit_code(self):
        # exit 0 on success for the module entry point
        result = subprocess.run(
            [sys.executable, "-m", "mvalg", "separable", "--alg", '{"finite":[2]}'],
            capture_output=True,
        )
        assert result.returncode == 0
