from __future__ import annotations

import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from bvgroup.trees import (
    LEAF,
    BinaryTree,
    TreeParseError,
    add_caret,
    apply_expansion,
    caret,
    common_refinement,
    format_tree,
    is_refinement,
    leaf_count,
    left_vine,
    parse_tree,
    remove_caret,
    right_vine,
    terminal_carets,
)

from randgen import random_tree

C = caret(LEAF, LEAF)


def test_leaf_count():
    assert leaf_count(LEAF) == 1
    assert leaf_count(C) == 2
    assert leaf_count(caret(C, LEAF)) == 3


def test_terminal_carets():
    assert terminal_carets(C) == [1]
    assert terminal_carets(caret(LEAF, C)) == [2]
    assert terminal_carets(caret(C, C)) == [1, 3]


def test_add_caret():
    assert add_caret(LEAF, 1) == C
    assert add_caret(C, 2) == caret(LEAF, C)
    assert add_caret(C, 1) == caret(C, LEAF)
    with pytest.raises(IndexError):
        add_caret(C, 3)


def test_remove_caret():
    assert remove_caret(C, 1) == LEAF
    assert remove_caret(caret(LEAF, C), 2) == C
    with pytest.raises(ValueError):
        remove_caret(caret(C, LEAF), 2)


def test_refinement_of_identical_trees_is_trivial():
    t = caret(C, LEAF)
    assert common_refinement(t, t) == (t, [], [])


def test_refinement_when_one_contains_the_other():
    t, ea, eb = common_refinement(C, LEAF)
    assert t == C
    assert ea == []
    assert eb == [(1, C)]


def _internal_nodes(t: BinaryTree) -> set[str]:
    """Addresses of carets, built recursively from the children."""
    if t.is_leaf:
        return set()
    out = {""}
    out |= {"0" + a for a in _internal_nodes(t.left)}
    out |= {"1" + a for a in _internal_nodes(t.right)}
    return out


def _from_internal_nodes(nodes: set[str], addr: str = "") -> BinaryTree:
    if addr not in nodes:
        return LEAF
    return caret(_from_internal_nodes(nodes, addr + "0"), _from_internal_nodes(nodes, addr + "1"))


def test_refinement_of_the_two_vines():
    a, b = caret(C, LEAF), caret(LEAF, C)
    t, ea, eb = common_refinement(a, b)
    # oracle: a caret set is prefix closed, and the union of two is the
    # smallest tree containing both
    assert t == _from_internal_nodes(_internal_nodes(a) | _internal_nodes(b))
    assert t == caret(C, C)
    assert ea == [(3, C)]
    assert eb == [(1, C)]
    assert apply_expansion(a, ea) == t
    assert apply_expansion(b, eb) == t


def test_vines():
    assert right_vine(3) == caret(LEAF, C)
    assert left_vine(3) == caret(C, LEAF)
    assert right_vine(1) == LEAF


def test_children():
    t = caret(C, caret(LEAF, C))
    assert t.left == C
    assert t.right == caret(LEAF, C)


def test_invalid_depths_rejected():
    with pytest.raises(ValueError):
        BinaryTree((1, 2))
    with pytest.raises(ValueError):
        BinaryTree((2, 1, 2))


def test_text_format():
    assert format_tree(LEAF) == "()"
    assert format_tree(C) == "(()())"
    assert format_tree(caret(C, LEAF)) == "((()())())"
    assert parse_tree(" ( () ( ()() ) ) ") == caret(LEAF, C)


@pytest.mark.parametrize("text,col", [("(()", 4), ("(()()()))", 7), ("(()x)", 4), ("()()", 3), (")", 1)])
def test_parse_errors_report_column(text, col):
    with pytest.raises(TreeParseError) as info:
        parse_tree(text)
    assert info.value.column == col


trees = st.builds(lambda seed, n: random_tree(random.Random(seed), n), st.integers(0, 2**32), st.integers(1, 24))


@given(trees)
def test_format_parse_round_trip(t):
    assert parse_tree(format_tree(t)) == t


@given(trees, trees)
@settings(max_examples=200)
def test_refinement_matches_caret_union(a, b):
    t, ea, eb = common_refinement(a, b)
    assert t == _from_internal_nodes(_internal_nodes(a) | _internal_nodes(b))
    assert apply_expansion(a, ea) == t
    assert apply_expansion(b, eb) == t
    assert is_refinement(t, a) and is_refinement(t, b)


@given(trees, st.data())
def test_add_then_remove(t, data):
    j = data.draw(st.integers(1, t.n))
    assert remove_caret(add_caret(t, j), j) == t


@given(trees)
def test_terminal_carets_agree_with_children(t):
    expected = sorted(
        i for i, (x, y) in enumerate(zip(t.leaf_addresses(), t.leaf_addresses()[1:]), start=1)
        if x[:-1] == y[:-1] and x.endswith("0") and y.endswith("1")
    )
    assert terminal_carets(t) == expected
