import io
import pathlib
from contextlib import redirect_stdout

import pytest

from curvlab.cli import main

ROOT = pathlib.Path(__file__).resolve().parent.parent
GOLDEN = ROOT / "golden"

# the same commands tools/make_golden.py runs, keyed by expected output file
GOLDEN_COMMANDS = {
    "spaceform_3_0.tensor": ["generate", "--model", "space-form", "--c", "4",
                             "--m", "3", "--s", "0"],
    "constant_2_1.tensor": ["generate", "--model", "constant", "--c", "3",
                            "--m", "2", "--s", "1"],
    "random_2_1.tensor": ["generate", "--model", "random", "--m", "2",
                          "--s", "1", "--seed", "7"],
    "classify_spaceform.out": ["classify", "-i", str(GOLDEN / "spaceform_3_0.tensor"),
                               "--probes", "20"],
    "classify_random.out": ["classify", "-i", str(GOLDEN / "random_2_1.tensor")],
    "expand_constant_holomorphic.out": ["expand", "-i", str(GOLDEN / "constant_2_1.tensor"),
                                        "--family", "holomorphic", "--seed", "5"],
    "expand_spaceform_complexified.out": ["expand", "-i", str(GOLDEN / "spaceform_3_0.tensor"),
                                          "--family", "complexified", "--seed", "5"],
    "probe_constant.out": ["probe", "-i", str(GOLDEN / "constant_2_1.tensor")],
    "probe_random.out": ["probe", "-i", str(GOLDEN / "random_2_1.tensor")],
    "verify_lemma1.out": ["verify", "--theorem", "lemma1", "--m", "2", "--s", "1",
                          "--trials", "3", "--seed", "7"],
    "verify_thm5.out": ["verify", "--theorem", "thm5", "--m", "2", "--s", "0",
                        "--trials", "2", "--seed", "3"],
    "lemma3_spaceform.out": ["lemma3", "-i", str(GOLDEN / "spaceform_3_0.tensor"),
                             "--probes", "10"],
    "check_spaceform.out": ["check-symmetries", "-i", str(GOLDEN / "spaceform_3_0.tensor"),
                            "--bianchi"],
}


def run_cli(argv):
    buf = io.StringIO()
    with redirect_stdout(buf):
        code = main(list(argv))
    return code, buf.getvalue()


class TestGoldenCorpus:
    @pytest.mark.parametrize("name", sorted(GOLDEN_COMMANDS))
    def test_byte_identical_output(self, name):
        code, out = run_cli(GOLDEN_COMMANDS[name])
        assert code == 0
        assert out.encode("ascii") == (GOLDEN / name).read_bytes()

    def test_repeat_run_is_byte_identical(self):
        argv = GOLDEN_COMMANDS["classify_spaceform.out"]
        assert run_cli(argv) == run_cli(argv)


class TestExitCodes:
    def test_unknown_command(self):
        assert run_cli(["frobnicate"])[0] == 2

    def test_unknown_flag(self):
        assert run_cli(["probe", "--bogus"])[0] == 2

    def test_missing_file(self):
        assert run_cli(["classify", "-i", "/nonexistent.tensor"])[0] == 2

    def test_parse_error(self, tmp_path):
        bad = tmp_path / "bad.tensor"
        bad.write_text("not a tensor file\n")
        assert run_cli(["classify", "-i", str(bad)])[0] == 2

    def test_hypothesis_violation(self):
        code, _ = run_cli(["verify", "--theorem", "thm1", "--m", "2", "--s", "0",
                           "--trials", "1"])
        assert code == 2

    def test_verify_failure_exits_one(self):
        # unreachable threshold forces the unboundedness check to fail
        code, out = run_cli(["verify", "--theorem", "thm1", "--m", "2", "--s", "1",
                             "--trials", "1", "--seed", "5", "--threshold", "1e300"])
        assert code == 1
        assert "status = fail" in out

    def test_check_symmetries_failure_exits_one(self, tmp_path):
        doc = tmp_path / "asym.tensor"
        doc.write_text("curvlab-tensor/1\nm = 1\ns = 0\nR[1,2,2,1] = 1\n")
        code, out = run_cli(["check-symmetries", "-i", str(doc)])
        assert code == 1
        assert "check.antisym-12 = fail" in out

    def test_invariant_violation_named(self, tmp_path, capsys):
        doc = tmp_path / "badj.tensor"
        doc.write_text("curvlab-tensor/1\nm = 1\ns = 0\nJ = custom\n"
                       "J[1] = 1 0\nJ[2] = 0 1\n")
        code, _ = run_cli(["classify", "-i", str(doc)])
        assert code == 2
        assert "J.square" in capsys.readouterr().err


class TestCommandBehavior:
    def test_generate_to_file_and_classify(self, tmp_path):
        out_file = tmp_path / "t.tensor"
        code, _ = run_cli(["generate", "--model", "space-form", "--c", "4",
                           "--m", "3", "--s", "0", "-o", str(out_file)])
        assert code == 0
        code, out = run_cli(["classify", "-i", str(out_file), "--probes", "10"])
        assert code == 0
        assert "holomorphic.value = 4" in out
        assert "antiholomorphic.value = 1" in out
        assert "biholomorphic.value = 2" in out

    def test_probe_bounded_report(self):
        code, out = run_cli(["probe", "-i", str(GOLDEN / "constant_2_1.tensor")])
        assert code == 0
        assert "exceeded = false" in out
        assert "max-abs = 3.0" in out

    def test_float_backend_classify(self):
        code, out = run_cli(["classify", "-i", str(GOLDEN / "spaceform_3_0.tensor"),
                             "--backend", "float", "--probes", "5"])
        assert code == 0
        assert "backend = float" in out
        assert "holomorphic.status = constant" in out

    def test_lemma3_disagreement_impossible_on_models(self):
        code, out = run_cli(["lemma3", "-i", str(GOLDEN / "spaceform_3_0.tensor"),
                             "--probes", "5"])
        assert code == 0
        assert "agree = true" in out
