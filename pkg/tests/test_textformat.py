import random

import pytest

from abduction.brute import bf_sol
from abduction.corpus import random_small
from abduction.errors import ParseError
from abduction.logic import CnfFormula
from abduction.textformat import InstanceDocument, normalize_width3, parse_instance, print_instance

from conftest import S

E2_TEXT = "hyp a b\nman m\nclause -a m\nclause -b m\nclause -a -b\n"


def test_parse_e2(E2):
    doc = parse_instance(E2_TEXT)
    assert doc.problem == E2
    assert doc.given == () and doc.candidate is None
    doc = parse_instance(E2_TEXT + "given a ;\ncandidate b\n")
    assert doc.given == (S("a"),)
    assert doc.candidate == S("b")


def test_print_is_canonical(E2):
    text = print_instance(InstanceDocument(E2, (S("a"),), S("b")))
    assert text == E2_TEXT + "given a ;\ncandidate b\n"
    messy = "# comment\nman m\nhyp b\nclause m -a   # trailing\nhyp a\nclause m -b\nclause -b -a\n"
    assert print_instance(parse_instance(messy)) == E2_TEXT


def test_given_forms():
    doc = parse_instance("hyp a b\nman m\ngiven ;\ngiven a ; b ;\ngiven a b ;\n")
    assert doc.given == (S(), S("a"), S("b"), S("a", "b"))
    assert "given ;\n" in print_instance(doc)


@pytest.mark.parametrize("text,line,msg", [
    ("clause -a m\nman m\nhyp m", 3, "H and M overlap on m"),
    ("hyp a\nfoo b", 2, "unknown directive"),
    ("hyp a\nman m\ngiven a ;\n\ngiven a ;", 5, "duplicate given set"),
    ("hyp a\ngiven a", 2, "must end with ';'"),
    ("hyp a\nman -m", 2, "invalid atom"),
    ("hyp", 1, "needs at least one atom"),
])
def test_parse_errors(text, line, msg):
    with pytest.raises(ParseError) as err:
        parse_instance(text)
    assert err.value.line == line
    assert msg in str(err.value)
    assert str(err.value).startswith(f"line {line}:")


def test_roundtrip_random():
    rng = random.Random(1)
    for _ in range(200):
        p = random_small(rng)
        sol = sorted(bf_sol(p), key=sorted)
        doc = InstanceDocument(p, tuple(sol[:2]), sol[-1] if sol else None).canonical()
        assert parse_instance(print_instance(doc)) == doc


def test_normalize_width3(E2):
    doc = InstanceDocument(E2)
    assert normalize_width3(doc) is doc
    three = parse_instance("hyp a\nman m\nclause -a b m\n")
    assert normalize_width3(three) == three
    four = parse_instance("hyp a\nman m\nclause l1 l2 l3 l4\n")
    out = print_instance(normalize_width3(four))
    assert "clause l1 l2 z0\nclause l3 l4 -z0\n" in out


def test_normalize_preserves_solutions():
    rng = random.Random(8)
    for _ in range(80):
        p = random_small(rng, max_hyp=4, max_atoms=8, max_width=6)
        doc = normalize_width3(InstanceDocument(p))
        assert doc.problem.theory.max_width <= 3
        assert bf_sol(doc.problem) == bf_sol(p)
