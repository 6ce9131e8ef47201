import socket
import threading
import time

import pytest

from missp.cli import main
from missp.dictionary import parse_dictionary

from vectors import BLOCK_112


@pytest.fixture
def workspace(tmp_path):
    (tmp_path / "keys.txt").write_text("n=4\nd=2\n")
    assert main([
        "dict", "gen",
        "--keys", str(tmp_path / "keys.txt"),
        "--m", "4", "--seed", "7",
        "--out", str(tmp_path / "dict.txt"),
    ]) == 0
    return tmp_path


def _free_port():
    with socket.socket() as sock:
        sock.bind(("127.0.0.1", 0))
        return sock.getsockname()[1]


class TestDictGen:
    def test_output_parses(self, workspace):
        dmap = parse_dictionary((workspace / "dict.txt").read_text())
        assert len(dmap) == 95


class TestEncryptDecrypt:
    def test_round_trip(self, workspace):
        (workspace / "plain.txt").write_text("The 9 quick foxes! :)")
        assert main([
            "encrypt",
            "--keys", str(workspace / "keys.txt"),
            "--dict", str(workspace / "dict.txt"),
            "--in", str(workspace / "plain.txt"),
            "--out", str(workspace / "cipher.txt"),
            "--m", "4", "--seed", "42",
        ]) == 0
        header, stream = (workspace / "cipher.txt").read_text().splitlines()
        assert header == "m=4"
        assert len(stream) == 4 * 4 * 2 * len("The 9 quick foxes! :)")
        assert main([
            "decrypt",
            "--keys", str(workspace / "keys.txt"),
            "--dict", str(workspace / "dict.txt"),
            "--in", str(workspace / "cipher.txt"),
            "--out", str(workspace / "round.txt"),
        ]) == 0
        assert (workspace / "round.txt").read_text() == "The 9 quick foxes! :)"

    def test_deterministic_ciphertext(self, workspace):
        (workspace / "plain.txt").write_text("abc")
        args = [
            "encrypt",
            "--keys", str(workspace / "keys.txt"),
            "--dict", str(workspace / "dict.txt"),
            "--in", str(workspace / "plain.txt"),
            "--seed", "3",
        ]
        assert main(args + ["--out", str(workspace / "c1.txt")]) == 0
        assert main(args + ["--out", str(workspace / "c2.txt")]) == 0
        assert (workspace / "c1.txt").read_text() == (workspace / "c2.txt").read_text()

    def test_unknown_sign_exits_nonzero(self, workspace, capsys):
        (workspace / "plain.txt").write_text("ok\ttab")  # TAB not in dictionary
        code = main([
            "encrypt",
            "--keys", str(workspace / "keys.txt"),
            "--dict", str(workspace / "dict.txt"),
            "--in", str(workspace / "plain.txt"),
            "--out", str(workspace / "cipher.txt"),
        ])
        assert code == 25
        assert capsys.readouterr().err.strip() == "ERR UnknownSign block=2"

    def test_wrong_keys_exit_nonzero(self, workspace, capsys):
        (workspace / "plain.txt").write_text("hello world")
        assert main([
            "encrypt",
            "--keys", str(workspace / "keys.txt"),
            "--dict", str(workspace / "dict.txt"),
            "--in", str(workspace / "plain.txt"),
            "--out", str(workspace / "cipher.txt"),
            "--seed", "1",
        ]) == 0
        (workspace / "badkeys.txt").write_text("n=2\nd=2\n")
        code = main([
            "decrypt",
            "--keys", str(workspace / "badkeys.txt"),
            "--dict", str(workspace / "dict.txt"),
            "--in", str(workspace / "cipher.txt"),
            "--out", str(workspace / "bad.txt"),
        ])
        assert code != 0
        err = capsys.readouterr().err
        assert err.startswith("ERR NoSolution") or err.startswith("ERR AmbiguousPlaintext")

    def test_missing_m_everywhere(self, workspace, capsys):
        (workspace / "headerless.txt").write_text("1234\n")
        code = main([
            "decrypt",
            "--keys", str(workspace / "keys.txt"),
            "--dict", str(workspace / "dict.txt"),
            "--in", str(workspace / "headerless.txt"),
            "--out", str(workspace / "out.txt"),
        ])
        assert code == 12
        assert "ERR LengthMismatch" in capsys.readouterr().err


class TestSolve:
    def test_prints_unique_result(self, workspace, capsys):
        (workspace / "block.txt").write_text(BLOCK_112)
        assert main([
            "solve",
            "--keys", str(workspace / "keys.txt"),
            "--in", str(workspace / "block.txt"),
        ]) == 0
        assert capsys.readouterr().out.strip() == "Unique 112"

    def test_accepts_header_format(self, workspace, capsys):
        (workspace / "block.txt").write_text(f"m=4\n{BLOCK_112}\n")
        assert main([
            "solve",
            "--keys", str(workspace / "keys.txt"),
            "--in", str(workspace / "block.txt"),
        ]) == 0
        assert capsys.readouterr().out.strip() == "Unique 112"


class TestSendRecv:
    def test_loopback(self, workspace):
        (workspace / "plain.txt").write_text("over the wire")
        assert main([
            "encrypt",
            "--keys", str(workspace / "keys.txt"),
            "--dict", str(workspace / "dict.txt"),
            "--in", str(workspace / "plain.txt"),
            "--out", str(workspace / "cipher.txt"),
            "--seed", "2",
        ]) == 0
        port = _free_port()
        results = []
        recv = threading.Thread(
            target=lambda: results.append(main([
                "recv",
                "--port", str(port),
                "--keys", str(workspace / "keys.txt"),
                "--dict", str(workspace / "dict.txt"),
                "--out", str(workspace / "received.txt"),
            ])),
            daemon=True,
        )
        recv.start()
        for _ in range(50):
            code = main([
                "send",
                "--addr", f"127.0.0.1:{port}",
                "--in", str(workspace / "cipher.txt"),
                "--keys", str(workspace / "keys.txt"),
                "--timeout", "5",
            ])
            if code == 0:
                break
            time.sleep(0.1)
        recv.join(timeout=10)
        assert code == 0
        assert results == [0]
        assert (workspace / "received.txt").read_text() == "over the wire"

    def test_send_to_closed_port(self, workspace, capsys):
        (workspace / "plain.txt").write_text("x")
        assert main([
            "encrypt",
            "--keys", str(workspace / "keys.txt"),
            "--dict", str(workspace / "dict.txt"),
            "--in", str(workspace / "plain.txt"),
            "--out", str(workspace / "cipher.txt"),
            "--seed", "2",
        ]) == 0
        code = main([
            "send",
            "--addr", f"127.0.0.1:{_free_port()}",
            "--in", str(workspace / "cipher.txt"),
            "--keys", str(workspace / "keys.txt"),
            "--timeout", "2",
        ])
        assert code == 32
        assert "ERR ConnectionFailed" in capsys.readouterr().err


class TestAnalyze:
    def test_writes_csv(self, workspace):
        assert main([
            "analyze",
            "--n", "2", "3",
            "--m", "4",
            "--d", "2",
            "--trials", "40",
            "--seed", "5",
            "--out", str(workspace / "stats.csv"),
        ]) == 0
        lines = (workspace / "stats.csv").read_text().strip().splitlines()
        assert lines[0] == "n,m,d,trials,p_none,p_unique,p_multi"
        assert len(lines) == 3


class TestUsage:
    def test_no_subcommand(self, capsys):
        assert main([]) == 2
        capsys.readouterr()

    def test_unknown_flag(self, capsys):
        assert main(["solve", "--bogus"]) == 2
        capsys.readouterr()

    def test_bad_address(self, capsys):
        assert main(["send", "--addr", "nocolon", "--in", "x", "--keys", "y"]) == 2
        capsys.readouterr()
