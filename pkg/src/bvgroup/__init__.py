"""Exact computation in the braided Thompson group BV."""

from __future__ import annotations

from .aag import KexParams, KexSession, SplitMix64, format_transcript, run_session
from .braids import BraidWord, NormalForm, SimpleBraid, normal_form
from .bvcore import (
    IDENTITY,
    BVElement,
    RawTriple,
    VElement,
    check_relations,
    equals,
    evaluate_word,
    format_element,
    generator,
    invert,
    multiply,
    parse_element,
    project_to_v,
    reduce,
    unreduce,
)
from .trees import BinaryTree, common_refinement, format_tree, parse_tree

__all__ = [
    "BinaryTree",
    "BraidWord",
    "BVElement",
    "IDENTITY",
    "KexParams",
    "KexSession",
    "NormalForm",
    "RawTriple",
    "SimpleBraid",
    "SplitMix64",
    "VElement",
    "check_relations",
    "common_refinement",
    "equals",
    "evaluate_word",
    "format_element",
    "format_transcript",
    "format_tree",
    "generator",
    "invert",
    "multiply",
    "normal_form",
    "parse_element",
    "parse_tree",
    "project_to_v",
    "reduce",
    "run_session",
    "unreduce",
]
