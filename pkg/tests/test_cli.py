import json
import socket
import threading
import time

import pytest

from lusztig_series.cli import main


def run_cli(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_value(capsys):
    code, out, _ = run_cli(capsys, "value", "beta", "26")
    assert code == 0 and out.strip() == "34375"


def test_value_piecewise_bound_kind(capsys):
    code, out, _ = run_cli(capsys, "value", "tau", "29")
    assert code == 0 and out.strip() == "24264720"


def test_value_usage_error(capsys):
    code, _, err = run_cli(capsys, "value", "beta_prime", "7")
    assert code == 2
    assert "even n >= 2" in err


def test_value_json(capsys):
    code, out, _ = run_cli(capsys, "value", "alpha", "43", "--format", "json")
    assert code == 0
    assert json.loads(out) == {"fn": "alpha", "n": 43, "value": "35931532"}


def test_unknown_subcommand_exits_2():
    with pytest.raises(SystemExit) as exc:
        main(["frobnicate"])
    assert exc.value.code == 2


def test_table2_row(capsys):
    code, out, _ = run_cli(capsys, "table", "2", "--range", "43..43")
    assert code == 0
    assert out.splitlines()[1] == "43\t30078125\t35931532\t16861595\t16861595"


def test_table_bad_range(capsys):
    code, _, err = run_cli(capsys, "table", "2", "--range", "50..40")
    assert code == 2 and "table 2 accepts" in err
    code, _, err = run_cli(capsys, "table", "2", "--range", "oops")
    assert code == 2


def test_table1_rows(capsys):
    code, out, _ = run_cli(capsys, "table", "1")
    lines = out.splitlines()
    assert lines[4] == "3\t(4^{(n-11)/4},5,6)\t77·5^{(n-11)/4}"


def test_table_json_round_trip(capsys):
    code, out, _ = run_cli(capsys, "table", "3", "--format", "json", "--range", "33..33")
    payload = json.loads(out)
    assert payload["table"] == 3
    assert payload["rows"][0]["aa"]["value"] == "121323600"
    assert payload["rows"][0]["aa"]["pairs"] == [[15, 14]]


def test_max_with_witnesses(capsys):
    code, out, _ = run_cli(capsys, "max", "C", "odd", "30", "--witnesses")
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "max\t36433296"
    assert "witness\t[1:15] [-1:15]" in lines


def test_max_parity_any_rejected_for_classical(capsys):
    code, _, err = run_cli(capsys, "max", "D-", "any", "6")
    assert code == 2 and "parity" in err


def test_max_json(capsys):
    code, out, _ = run_cli(capsys, "max", "GL", "any", "12", "--format", "json",
                           "--witnesses")
    payload = json.loads(out)
    assert payload["value"] == "125"
    assert payload["witnesses"][0]["text"] == "{linear:4^3}"


def test_threshold(capsys):
    code, out, _ = run_cli(capsys, "threshold", "GL", "any", "16")
    assert code == 0
    assert "linear_family\tq >= 5" in out


def test_verify_suite_constants(capsys):
    code, out, _ = run_cli(capsys, "verify", "--suite", "constants")
    assert code == 0
    assert "# FLAGGED theorem_un5.D_even" in out
    assert "# summary: 6 checks, 5 verified, 0 failed, 1 flagged" in out


def test_verify_json_schema(capsys):
    code, out, _ = run_cli(capsys, "verify", "--suite", "constants", "--format", "json")
    assert code == 0
    entries = json.loads(out)
    assert isinstance(entries, list) and len(entries) == 6
    assert set(entries[0]) == {"claim_id", "status", "expected", "actual", "location"}


@pytest.fixture(scope="module")
def live_server():
    import uvicorn

    from lusztig_series.service.app import app

    sock = socket.socket(socket.AF_INET, socket.SOCK_STREAM)
    sock.bind(("127.0.0.1", 0))
    port = sock.getsockname()[1]
    config = uvicorn.Config(app, log_level="error")
    server = uvicorn.Server(config)
    thread = threading.Thread(
        target=server.run, kwargs={"sockets": [sock]}, daemon=True
    )
    thread.start()
    deadline = time.monotonic() + 10
    while not server.started:
        if time.monotonic() > deadline:
            raise RuntimeError("service did not start")
        time.sleep(0.02)
    yield f"http://127.0.0.1:{port}"
    server.should_exit = True
    thread.join(timeout=10)


def test_cli_as_http_client(capsys, live_server):
    code, out, _ = run_cli(capsys, "value", "beta", "26", "--server", live_server)
    assert code == 0 and out.strip() == "34375"
    code, out, _ = run_cli(capsys, "max", "D-", "odd", "6", "--witnesses",
                           "--server", live_server)
    assert code == 0 and "witness\t[1:4(-)] [-1:2(+)]" in out
    code, _, err = run_cli(capsys, "value", "beta_prime", "7", "--server", live_server)
    assert code == 2 and "even n >= 2" in err
    code, out, _ = run_cli(capsys, "verify", "--suite", "constants",
                           "--server", live_server)
    assert code == 0 and "# FLAGGED theorem_un5.D_even" in out
