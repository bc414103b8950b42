"""End-to-end checks of the mm command-line tool."""

import os
import re
import subprocess

import pytest

CLI = os.environ.get("MM_CLI")

pytestmark = pytest.mark.skipif(not CLI, reason="MM_CLI not set")


def run(*args, stdin=None):
    return subprocess.run(
        [CLI, *args], input=stdin, capture_output=True, text=True, timeout=300
    )


def test_play_success_exit_code():
    done = run("play", "--n", "16", "--k", "16", "--strategy", "adaptive", "--seed", "7")
    assert done.returncode == 0
    assert "success" in done.stdout


def test_play_random_guess():
    done = run("play", "--n", "4", "--k", "4", "--strategy", "random-guess", "--seed", "1")
    assert done.returncode == 0


def test_play_bw_through_black_adapter():
    done = run("play", "--n", "6", "--k", "6", "--strategy", "bw-composite",
               "--mode", "black", "--seed", "2")
    assert done.returncode == 0


def test_usage_errors():
    assert run("play", "--n", "0").returncode == 2
    assert run("play").returncode == 2
    assert run("verify", "bogus-name").returncode == 2
    assert run("bench", "--out", "/tmp/x.csv").returncode == 2  # no sizes/strategies
    assert run().returncode == 2  # no subcommand


def test_bench_is_byte_identical(tmp_path):
    out = []
    for name in ("a.csv", "b.csv"):
        path = tmp_path / name
        done = run("bench", "--n", "4", "--n", "8", "--trials", "3",
                   "--strategy", "adaptive", "--strategy", "random-guess",
                   "--strategy", "bw-composite", "--seed", "42", "--out", str(path))
        assert done.returncode == 0
        out.append(path.read_bytes())
    assert out[0] == out[1]
    lines = out[0].decode().strip().split("\n")
    assert lines[0] == "n,k,strategy,seed,queries,success,wall_time_ms"
    assert len(lines) == 1 + 2 * 3 * 3


def test_bench_unwritable_path_fails():
    done = run("bench", "--n", "4", "--trials", "1", "--strategy", "adaptive",
               "--out", "/nonexistent-dir/x.csv")
    assert done.returncode == 1


def test_verify_nonadaptive_suite():
    done = run("verify", "nonadaptive")
    assert done.returncode == 0
    assert "[PASS]" in done.stdout


class Codemaker:
    """Answers the interactive tool's prompts for a fixed secret."""

    def __init__(self, secret):
        self.secret = secret

    def black(self, guess):
        return sum(1 for a, b in zip(self.secret, guess) if a == b)

    def white(self, guess):
        common = 0
        for c in set(self.secret) | set(guess):
            common += min(self.secret.count(c), guess.count(c))
        return common - self.black(guess)


def drive_interactive(args, answer_fn, white_fn=None, max_queries=500):
    proc = subprocess.Popen(
        [CLI, "interactive", *args],
        stdin=subprocess.PIPE, stdout=subprocess.PIPE, stderr=subprocess.STDOUT,
        text=True, bufsize=0,
    )
    buffer = ""
    guess = None
    queries = 0
    try:
        while True:
            chunk = proc.stdout.read(1)
            if not chunk:
                break
            buffer += chunk
            match = re.search(r"guess #\d+: ([\d ]+)\n$", buffer)
            if match:
                guess = [int(c) for c in match.group(1).split()]
            if buffer.endswith("black pegs? "):
                queries += 1
                if queries > max_queries:
                    raise AssertionError("interactive session ran away")
                proc.stdin.write(f"{answer_fn(guess)}\n")
                proc.stdin.flush()
                buffer = ""
            elif buffer.endswith("white pegs? "):
                proc.stdin.write(f"{white_fn(guess)}\n")
                proc.stdin.flush()
                buffer = ""
    finally:
        proc.stdin.close()
        proc.wait(timeout=60)
    return proc.returncode, buffer + (proc.stdout.read() or "")


def test_interactive_finds_the_code():
    maker = Codemaker([2, 1])
    code, tail = None, None
    rc, tail = drive_interactive(["--n", "2", "--k", "2"], lambda g: maker.black(g))
    assert rc == 0
    match = re.search(r"your code: ([\d ]+)", tail)
    assert match
    code = [int(c) for c in match.group(1).split()]
    assert code == [2, 1]


def test_interactive_full_match_announces_immediately():
    rc, tail = drive_interactive(["--n", "3", "--k", "3"], lambda g: 3)
    assert rc == 0
    assert "your code: 1 1 1" in tail


def test_interactive_reprompts_on_bad_input():
    maker = Codemaker([2, 1])
    answers = iter(["-1"])  # first response invalid, then play honestly

    def answer(guess):
        try:
            return next(answers)
        except StopIteration:
            return maker.black(guess)

    rc, tail = drive_interactive(["--n", "2", "--k", "2"], answer)
    assert rc == 0
    assert "your code: 2 1" in tail


def test_interactive_black_and_white_mode():
    maker = Codemaker([3, 1, 3])
    rc, tail = drive_interactive(
        ["--n", "3", "--k", "4", "--mode", "bw"],
        lambda g: maker.black(g), lambda g: maker.white(g),
    )
    assert rc == 0
    assert "your code: 3 1 3" in tail


def test_interactive_detects_inconsistency():
    # Flipping one position can move the answer by at most one; claiming a
    # jump of two is impossible for every code.
    script = iter([0, 2])
    rc, tail = drive_interactive(["--n", "3", "--k", "3"],
                                 lambda g: next(script))
    assert rc == 1
    assert "answers inconsistent with any code" in tail
