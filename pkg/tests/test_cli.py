import io
import pathlib
from contextlib import redirect_stderr, redirect_stdout

import pytest

from c2surf.cli import main
from c2surf.words import parse_word

GOLDEN = pathlib.Path(__file__).parent / "golden"


def run(argv):
    out, err = io.StringIO(), io.StringIO()
    with redirect_stdout(out), redirect_stderr(err):
        code = main(argv)
    return code, out.getvalue(), err.getvalue()


def normalize_ws(text: str) -> str:
    lines = [" ".join(line.split()) for line in text.strip().splitlines()]
    return "\n".join(line for line in lines if line)


def test_count_range():
    code, out, _ = run(["count", "N2..N7"])
    assert code == 0
    phis = [int(line.split()[5]) for line in out.strip().splitlines()[1:]]
    assert phis == [5, 3, 14, 8, 27, 15]


def test_count_torus():
    code, out, _ = run(["count", "T0"])
    assert code == 0
    assert out.strip().splitlines()[1].split() == ["T0", "4", "3"]


def test_count_bad_spec():
    code, _, err = run(["count", "Nbad"])
    assert code == 2
    assert "bad surface" in err


@pytest.mark.parametrize("r", [2, 3, 4, 5, 6, 7])
def test_golden_tables(r):
    code, out, _ = run(["enumerate", f"N{r}", "--tables"])
    assert code == 0
    golden = (GOLDEN / f"N{r}.txt").read_text()
    assert normalize_ws(out) == normalize_ws(golden)


def test_golden_row_and_action_counts():
    expected = {2: (5, 5), 3: (3, 3), 4: (11, 14), 5: (7, 8), 6: (20, 27), 7: (13, 15)}
    for r, (rows, actions) in expected.items():
        lines = normalize_ws((GOLDEN / f"N{r}.txt").read_text()).splitlines()
        body = lines[1:]
        assert len(body) == rows
        total = 0
        for line in body:
            cells = [c.strip() for c in line.split("|")]
            total += (int(cells[1]) if cells[1] else 0) + (int(cells[2]) if cells[2] else 0)
        assert total == actions


# Full tables transcribed by hand: row label, negative words, positive words.
# Operation tokens are written in the canonical printer order.
HAND_TABLES = {
    2: [
        ("2,0:(0,0)", ["S2a+S11AT"], []),
        ("2,1:(1,0)", [], ["S22+S10AT"]),
        ("0,0:(0,0)", ["S2a+DCC"], []),
        ("0,1:(1,0)", ["S21+DCC"], []),
        ("0,2:(0,2)", [], ["S22+2FM"]),
    ],
    3: [
        ("3,1:(0,1)", [], ["Tspit(1,4)+FM"]),
        ("1,1:(0,1)", ["S2a+S11AT+FM"], []),
        ("1,2:(1,1)", [], ["S22+S10AT+FM"]),
    ],
    4: [
        ("4,0:(0,0)", ["S2a+2S11AT"], []),
        ("4,1:(1,0)", [], ["Tspit(1,4)+S10AT"]),
        ("2,0:(0,0)", ["S2a+DCC+S11AT"], []),
        ("2,1:(1,0)", ["S2a+S10AT+S11AT"], []),
        ("2,2:(2,0)", [], ["S22+2S10AT"]),
        ("2,2:(0,2)", [], ["Tspit(1,4)+2FM"]),
        ("0,0:(0,0)", ["S2a+2DCC", "Tanti(1)+DCC"], []),
        ("0,1:(1,0)", ["S21+2DCC", "S2a+DCC+S10AT"], ["Trot(1)+S10AT"]),
        ("0,2:(2,0)", ["S21+DCC+S10AT"], []),
        ("0,2:(0,2)", ["S2a+S11AT+2FM"], []),
        ("0,3:(1,2)", [], ["S22+S10AT+2FM"]),
    ],
    5: [
        ("5,1:(0,1)", [], ["Tspit(2,6)+FM"]),
        ("3,1:(0,1)", ["S2a+2S11AT+FM"], []),
        ("3,2:(1,1)", [], ["Tspit(1,4)+S10AT+FM"]),
        ("1,1:(0,1)", ["S2a+DCC+S11AT+FM"], ["Tspit(2,2)+FM"]),
        ("1,2:(1,1)", ["S2a+S10AT+S11AT+FM"], []),
        ("1,3:(2,1)", [], ["S22+2S10AT+FM"]),
        ("1,3:(0,3)", [], ["Tspit(1,4)+3FM"]),
    ],
    6: [
        ("6,0:(0,0)", ["S2a+3S11AT"], []),
        ("6,1:(1,0)", [], ["Tspit(2,6)+S10AT"]),
        ("4,0:(0,0)", ["S2a+DCC+2S11AT"], []),
        ("4,1:(1,0)", ["S2a+S10AT+2S11AT"], []),
        ("4,2:(2,0)", [], ["Tspit(1,4)+2S10AT"]),
        ("4,2:(0,2)", [], ["Tspit(2,6)+2FM"]),
        ("2,0:(0,0)", ["S2a+2DCC+S11AT"], []),
        ("2,1:(1,0)", ["S2a+DCC+S10AT+S11AT"], ["Tspit(2,2)+S10AT"]),
        ("2,2:(2,0)", ["S2a+2S10AT+S11AT"], []),
        ("2,2:(0,2)", ["S2a+2S11AT+2FM"], []),
        ("2,3:(3,0)", [], ["S22+3S10AT"]),
        ("2,3:(1,2)", [], ["Tspit(1,4)+S10AT+2FM"]),
        ("0,0:(0,0)", ["S2a+3DCC", "Tanti(1)+2DCC"], []),
        ("0,1:(1,0)", ["S21+3DCC", "S2a+2DCC+S10AT", "Tanti(1)+DCC+S10AT"], []),
        ("0,2:(2,0)", ["S21+2DCC+S10AT", "S2a+DCC+2S10AT"], ["Trot(1)+2S10AT"]),
        ("0,2:(0,2)", ["S2a+DCC+S11AT+2FM"], ["Tspit(2,2)+2FM"]),
        ("0,3:(3,0)", ["S21+DCC+2S10AT"], []),
        ("0,3:(1,2)", ["S2a+S10AT+S11AT+2FM"], []),
        ("0,4:(2,2)", [], ["S22+2S10AT+2FM"]),
        ("0,4:(0,4)", [], ["Tspit(1,4)+4FM"]),
    ],
    7: [
        ("7,1:(0,1)", [], ["Tspit(3,8)+FM"]),
        ("5,1:(0,1)", ["S2a+3S11AT+FM"], []),
        ("5,2:(1,1)", [], ["Tspit(2,6)+S10AT+FM"]),
        ("3,1:(0,1)", ["S2a+DCC+2S11AT+FM"], ["Tspit(3,4)+FM"]),
        ("3,2:(1,1)", ["S2a+S10AT+2S11AT+FM"], []),
        ("3,3:(2,1)", [], ["Tspit(1,4)+2S10AT+FM"]),
        ("3,3:(0,3)", [], ["Tspit(2,6)+3FM"]),
        ("1,1:(0,1)", ["S2a+2DCC+S11AT+FM"], []),
        ("1,2:(1,1)", ["S2a+DCC+S10AT+S11AT+FM"], ["Tspit(2,2)+S10AT+FM"]),
        ("1,3:(2,1)", ["S2a+2S10AT+S11AT+FM"], []),
        ("1,3:(0,3)", ["S2a+2S11AT+3FM"], []),
        ("1,4:(3,1)", [], ["S22+3S10AT+FM"]),
        ("1,4:(1,3)", [], ["Tspit(1,4)+S10AT+3FM"]),
    ],
}


def render_hand_table(r: int) -> str:
    lines = [f"N{r} | - | + | - | +"]
    for label, neg, pos in HAND_TABLES[r]:
        lines.append(
            " | ".join(
                [
                    label,
                    str(len(neg)) if neg else "",
                    str(len(pos)) if pos else "",
                    ", ".join(neg),
                    ", ".join(pos),
                ]
            )
        )
    return "\n".join(lines)


@pytest.mark.parametrize("r", [2, 3, 4, 5, 6, 7])
def test_golden_matches_hand_transcription(r):
    golden = normalize_ws((GOLDEN / f"N{r}.txt").read_text())
    assert golden == normalize_ws(render_hand_table(r))


def test_enumerate_plain():
    code, out, _ = run(["enumerate", "T1"])
    assert code == 0
    assert len(out.strip().splitlines()) == 5  # nontrivial only by default
    code, out, _ = run(["enumerate", "T1", "--include-trivial"])
    assert len(out.strip().splitlines()) == 6
    code, out, _ = run(["enumerate", "N3"])
    assert len(out.strip().splitlines()) == 3


def test_enumerate_record_roundtrips():
    code, out, _ = run(["enumerate", "N4", "--format", "record"])
    assert code == 0
    lines = out.strip().splitlines()
    assert len(lines) == 14
    for line in lines:
        fields = dict(kv.split("=", 1) for kv in line.split())
        parse_word(fields["word"])  # must parse back
        assert fields["surface"] == "N4"
        assert fields["Q"] in "+-"


def test_inv_command():
    code, out, _ = run(["inv", "S2a+2DCC+3S10AT+S11AT+2FM"])
    assert code == 0
    assert "surface=N14" in out
    code, out, _ = run(["inv", "S22+2FM"])
    assert "taxonomy=[0,2:(0,2),+]" in out
    code, _, err = run(["inv", "S2a+3FM"])
    assert code == 3
    code, _, err = run(["inv", "S2a+3XYZ"])
    assert code == 2


def test_gl2_command():
    code, out, _ = run(["gl2", "1", "1", "0", "-1"])
    assert code == 0
    assert out.splitlines()[0] == "Tclass"
    assert "[[1,0],[1,1]]" in out
    code, out, _ = run(["gl2", "1", "0", "0", "1"])
    assert code == 0 and out.strip() == "Id"
    code, _, _ = run(["gl2", "2", "1", "1", "1"])
    assert code == 3


def test_verify_suites_fast():
    for argv in (
        ["verify", "orbits", "--n", "5"],
        ["verify", "generators", "--n", "4"],
        ["verify", "dd", "--max-dim", "4"],
        ["verify", "counts", "--max-r", "40"],
        ["verify", "gl2", "--trials", "200"],
        ["verify", "rewrites", "--max-beta", "12"],
    ):
        code, out, _ = run(argv)
        assert code == 0, (argv, out)
        assert "FAIL" not in out
    code, _, err = run(["verify", "nonsense"])
    assert code == 2
    code, _, err = run(["verify", "dd", "--max-dim", "9"])
    assert code == 2 and "2..6" in err
    code, _, err = run(["verify", "generators", "--n", "9"])
    assert code == 2 and "1..6" in err
