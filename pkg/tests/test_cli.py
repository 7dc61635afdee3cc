import pytest

from abduction.cli import Flags, main, run
from abduction.textformat import parse_instance

E2_TEXT = "hyp a b\nman m\nclause -a m\nclause -b m\nclause -a -b\n"
E5_TEXT = "hyp a b c\nman m1 m2\nclause -a m1\nclause -a m2\nclause -b m1\nclause -c m2\n"


@pytest.fixture
def write(tmp_path):
    def _write(text):
        f = tmp_path / "inst.txt"
        f.write_text(text)
        return str(f)
    return _write


def test_next_yes(write, capsys):
    path = write(E2_TEXT + "given a ;\ncandidate b\n")
    assert main(["next", "--ordering", "none", path]) == 0
    assert capsys.readouterr().out == "YES\n"


def test_enumerate_card(write, capsys):
    assert main(["enumerate", write(E5_TEXT), "--ordering", "card", "--limit", "2"]) == 0
    lines = capsys.readouterr().out.splitlines()
    assert lines[0] == "a" and len(lines[1].split()) == 2


def test_verify_lemma(write, capsys):
    assert main(["verify-lemma", "--gadget", "adding", write(E2_TEXT)]) == 0
    assert capsys.readouterr().out == "OK\n"
    assert main(["verify-lemma", "--gadget", "flatten", "--seed", "3"]) == 0


def test_exit_codes(write, capsys):
    assert main(["check", write(E2_TEXT + "candidate a b\n")]) == 1
    assert capsys.readouterr().out == "NO\n"
    assert main(["check", write("clause -a m\nman m\nhyp m\n")]) == 2
    assert "H and M overlap on m" in capsys.readouterr().err
    assert main(["next", write(E2_TEXT + "given a b ;\ncandidate a\n")]) == 3
    assert main(["reduce", "--gadget", "selector", write("hyp a b c\nman m\nclause -a -b -c m\n")]) == 3
    assert main(["check", str(write("x")) + ".missing"]) == 2


def test_search_commands():
    doc = parse_instance(E5_TEXT)
    assert run("min-size", doc) == (0, "1\n")
    assert run("solve", doc, Flags(ordering="card")) == (0, "a\n")
    assert run("oracle", doc, Flags(ordering="subset")) == (0, "a\nb c\n")
    empty = parse_instance("hyp a\nman m\nclause m\n")
    assert run("enumerate", empty, Flags(ordering="card")) == (0, "<empty>\na\n")
    none = parse_instance("hyp a\nman m\nclause -m\n")
    assert run("enumerate", none) == (1, "")
    assert run("min-size", none) == (1, "")


def test_verdict_commands():
    doc = parse_instance(E5_TEXT + "given a ;\ncandidate b c\n")
    assert run("next-best", doc, Flags(ordering="card"))[1] == "YES\n"
    assert run("other-minimal", doc, Flags(ordering="card"))[1] == "NO\n"
    assert run("minimal", doc, Flags(ordering="subset"))[1] == "YES\n"


def test_reduce_output():
    status, out = run("reduce", parse_instance(E2_TEXT + "given a ;\n"), Flags(gadget="adding"))
    assert status == 0
    assert out.startswith("# gadget: adding\n# r: r\n# s: s\n# t: t\n")
    back = parse_instance(out)
    assert back.given == (frozenset({"a", "r"}),)
    assert "s" in back.problem.hypotheses
    out = run("reduce", parse_instance(E2_TEXT), Flags(gadget="pad", target=3))[1]
    assert len(parse_instance(out).problem.hypotheses) == 4
    out = run("reduce", parse_instance(E2_TEXT + "candidate a\n"), Flags(gadget="flatten"))[1]
    assert parse_instance(out).candidate == frozenset({"c_a", "d_b"})
    assert "# index: a b\n" in out


def test_counterexample_is_reported(monkeypatch):
    import abduction.verify as verify
    from abduction.reductions import add_solution_gadget
    # swap in the unguarded construction, which fails when T rules out M
    monkeypatch.setattr(verify, "add_solution_gadget", lambda p: add_solution_gadget(p, guarded=False))
    status, out = run("verify-lemma", parse_instance("hyp a\nman m\nclause -m\n"), Flags(gadget="adding"))
    assert status == 1
    assert out.startswith("# counterexample (adding): SOL(P') = {}")
    assert parse_instance(out).problem.manifestations == {"m"}
