"""
Elements of the braided Thompson group BV as tree-braid-tree triples.

A :class:`RawTriple` is any semi-reduced triple ``(top, braid word, bot)``.
A :class:`BVElement` is the canonical representative: no removable eye is
left and the braid is in right-greedy normal form, so two elements are
equal exactly when their fields are equal. Build elements with
:func:`reduce`, :func:`generator`, :func:`evaluate_word` or
:func:`parse_element`, never by hand.

Products stack the first factor on top of the second.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterable, Sequence

from . import braids as br
from . import trees as tr
from .braids import BraidWord, NormalForm
from .trees import BinaryTree

__all__ = [
    "RawTriple",
    "BVElement",
    "VElement",
    "ElementParseError",
    "IDENTITY",
    "V_IDENTITY",
    "reduce",
    "is_reduced",
    "unreduce",
    "multiply",
    "invert",
    "equals",
    "generator",
    "evaluate_word",
    "parse_generator_word",
    "format_generator_word",
    "project_to_v",
    "v_reduce",
    "v_multiply",
    "v_invert",
    "RelationInstance",
    "relation_instances",
    "check_relations",
    "format_element",
    "parse_element",
]


@dataclass(frozen=True)
class RawTriple:
    top: BinaryTree
    braid: BraidWord
    bot: BinaryTree

    def __post_init__(self):
        if not tr.leaf_count(self.top) == self.braid.n == tr.leaf_count(self.bot):
            raise ValueError(
                f"leaf counts {self.top.n}, {self.bot.n} do not match {self.braid.n} strands"
            )


@dataclass(frozen=True)
class BVElement:
    top: BinaryTree
    braid: NormalForm
    bot: BinaryTree

    @property
    def n(self) -> int:
        return self.braid.n

    def raw(self) -> RawTriple:
        return RawTriple(self.top, br.nf_word(self.braid), self.bot)

    def is_identity(self) -> bool:
        return self.n == 1 and self.braid.is_identity()

    def __mul__(self, other: BVElement) -> BVElement:
        return multiply(self, other)

    def __invert__(self) -> BVElement:
        return invert(self)

    def __str__(self) -> str:
        return format_element(self)


@dataclass(frozen=True)
class VElement:
    top: BinaryTree
    perm: tuple[int, ...]  # 1-based, top leaf -> bottom leaf
    bot: BinaryTree

    def is_identity(self) -> bool:
        return self.perm == (1,)


IDENTITY = BVElement(tr.LEAF, NormalForm(1, 0, ()), tr.LEAF)
V_IDENTITY = VElement(tr.LEAF, (1,), tr.LEAF)


# -- reduction -------------------------------------------------------------------


def _as_raw(x: BVElement | RawTriple) -> RawTriple:
    return x.raw() if isinstance(x, BVElement) else x


def _eye_candidate(top, bot, perm, i):
    """Bottom caret index that top caret ``i`` lands on in order, or 0."""
    k = perm[i - 1]
    if perm[i] != k + 1 or k not in tr.terminal_carets(bot):
        return 0
    return k


def reduce(r: RawTriple | BVElement) -> BVElement:
    """
    Remove eyes sweeping left to right over the terminal carets of the top
    tree, then put the braid into normal form.
    """
    r = _as_raw(r)
    top, bot, word = r.top, r.bot, r.braid
    perm = list(br.permutation_of(word))
    nf = None
    pos = 1
    while True:
        carets = [c for c in tr.terminal_carets(top) if c >= pos]
        if not carets:
            break
        i = carets[0]
        k = _eye_candidate(top, bot, perm, i)
        if k:
            if nf is None:
                nf = br.normal_form(word)
            if not br.strands_parallel(word, i, nf):
                k = 0
        if not k:
            pos = i + 1
            continue
        top = tr.remove_caret(top, i)
        bot = tr.remove_caret(bot, k)
        word = br.delete_strand(word, i + 1)
        del perm[i]
        perm = [x - (x > k) for x in perm]
        nf = None
        # the parent caret may have become terminal at i-1 or i
        pos = max(1, i - 1)
    return BVElement(top, nf if nf is not None else br.normal_form(word), bot)


def is_reduced(e: BVElement | RawTriple) -> bool:
    """Whether no eye can be removed (checks every top terminal caret)."""
    r = _as_raw(e)
    perm = br.permutation_of(r.braid)
    nf = br.normal_form(r.braid)
    for i in tr.terminal_carets(r.top):
        if _eye_candidate(r.top, r.bot, perm, i) and br.strands_parallel(r.braid, i, nf):
            return False
    return True


# -- unreduction and products ----------------------------------------------------


def _expand_bottom(r: RawTriple, expansion: tr.Expansion) -> RawTriple:
    if not expansion:
        return r
    perm = br.permutation_of(r.braid)
    inv = [0] * len(perm)
    for t, b in enumerate(perm, start=1):
        inv[b - 1] = t
    mult = [1] * r.braid.n
    top_exp = []
    for j, sub in expansion:
        t = inv[j - 1]
        mult[t - 1] = tr.leaf_count(sub)
        top_exp.append((t, sub))
    return RawTriple(
        tr.apply_expansion(r.top, top_exp),
        br.cable(r.braid, mult),
        tr.apply_expansion(r.bot, expansion),
    )


def _expand_top(r: RawTriple, expansion: tr.Expansion) -> RawTriple:
    if not expansion:
        return r
    perm = br.permutation_of(r.braid)
    mult = [1] * r.braid.n
    bot_exp = []
    for t, sub in expansion:
        mult[t - 1] = tr.leaf_count(sub)
        bot_exp.append((perm[t - 1], sub))
    return RawTriple(
        tr.apply_expansion(r.top, expansion),
        br.cable(r.braid, mult),
        tr.apply_expansion(r.bot, bot_exp),
    )


def unreduce(e: BVElement | RawTriple, side: str, target: BinaryTree) -> RawTriple:
    """
    Insert eyes so that the tree on ``side`` ("top" or "bottom") becomes
    ``target``, which must refine it. The group element is unchanged.
    """
    r = _as_raw(e)
    if side not in ("top", "bottom"):
        raise ValueError(f"side must be 'top' or 'bottom', got {side!r}")
    tree = r.top if side == "top" else r.bot
    refined, expansion, extra = tr.common_refinement(tree, target)
    if refined != target or extra:
        raise ValueError(f"{target} does not refine {tree}")
    return _expand_top(r, expansion) if side == "top" else _expand_bottom(r, expansion)


def multiply(
    a: BVElement | RawTriple, b: BVElement | RawTriple, fast: bool = False
) -> BVElement | RawTriple:
    """
    Product ``a b``. With ``fast=True`` the semi-reduced triple is returned
    without eye removal or normalization; call :func:`reduce` when an
    equality test is needed.
    """
    ra, rb = _as_raw(a), _as_raw(b)
    _, ea, eb = tr.common_refinement(ra.bot, rb.top)
    ra = _expand_bottom(ra, ea)
    rb = _expand_top(rb, eb)
    raw = RawTriple(ra.top, br.multiply(ra.braid, rb.braid), rb.bot)
    return raw if fast else reduce(raw)


def invert(e: BVElement | RawTriple, fast: bool = False) -> BVElement | RawTriple:
    r = _as_raw(e)
    raw = RawTriple(r.bot, br.invert(r.braid), r.top)
    return raw if fast else reduce(raw)


def equals(a: BVElement, b: BVElement) -> bool:
    return a.top == b.top and a.bot == b.bot and a.braid == b.braid


# -- generators and words --------------------------------------------------------


def _spine(j: int, sub: BinaryTree) -> BinaryTree:
    # hang ``sub`` at the end of a right spine with j carets
    return BinaryTree(tuple(range(1, j + 1)) + tuple(d + j for d in sub.depths))


_F0_TOP = tr.left_vine(3)
_F0_BOT = tr.right_vine(3)


@lru_cache(maxsize=None)
def generator(family: str, index: int) -> BVElement:
    """
    Generators of BV.

    ``f_j`` is the braid-free element with top tree ``((()())())`` and bottom
    tree ``(()(()()))`` hung below a right spine of ``j`` carets. ``b_j`` is
    the right vine on ``j+2`` leaves on both sides with a positive crossing
    of its last two strands. ``a_j = b_j f_j b_{j+1}^-1``.
    """
    if index < 0:
        raise ValueError(f"generator index must be >= 0, got {index}")
    if family == "f":
        top, bot = _spine(index, _F0_TOP), _spine(index, _F0_BOT)
        return reduce(RawTriple(top, br.identity(index + 3), bot))
    if family == "b":
        vine = tr.right_vine(index + 2)
        return reduce(RawTriple(vine, br.from_artin(index + 2, [index + 1]), vine))
    if family == "a":
        return multiply(multiply(generator("b", index), generator("f", index)), invert(generator("b", index + 1)))
    raise ValueError(f"unknown generator family {family!r}")


GeneratorWord = list[tuple[str, int, int]]


class ElementParseError(ValueError):
    def __init__(self, message: str, line: int, column: int):
        super().__init__(f"line {line}, column {column}: {message}")
        self.line = line
        self.column = column


def parse_generator_word(text: str, line: int = 1) -> GeneratorWord:
    """Parse ``"f0 b1 A2"``; lowercase is the generator, uppercase its inverse."""
    out = []
    col = 1
    for token in text.split(" "):
        if token:
            fam = token[0]
            if fam.lower() not in "fba" or not token[1:].isdigit():
                raise ElementParseError(f"bad generator token {token!r}", line, col)
            out.append((fam.lower(), int(token[1:]), 1 if fam.islower() else -1))
        col += len(token) + 1
    return out


def format_generator_word(word: Iterable[tuple[str, int, int]]) -> str:
    return " ".join((fam if exp > 0 else fam.upper()) + str(idx) for fam, idx, exp in word)


def evaluate_word(word: Iterable[tuple[str, int, int]] | str) -> BVElement:
    """Left-to-right product of generator powers; normalized once at the end."""
    if isinstance(word, str):
        word = parse_generator_word(word)
    acc: RawTriple | BVElement = IDENTITY
    for fam, idx, exp in word:
        if exp not in (1, -1):
            raise ValueError(f"exponent must be +1 or -1, got {exp}")
        g = generator(fam, idx)
        acc = multiply(acc, g if exp > 0 else invert(g), fast=True)
    return reduce(acc)


# -- the quotient onto V ---------------------------------------------------------


def v_reduce(top: BinaryTree, perm: Sequence[int], bot: BinaryTree) -> VElement:
    perm = list(perm)
    if not len(perm) == top.n == bot.n:
        raise ValueError("leaf counts do not match the permutation")
    pos = 1
    while True:
        carets = [c for c in tr.terminal_carets(top) if c >= pos]
        if not carets:
            break
        i = carets[0]
        k = perm[i - 1]
        if perm[i] == k + 1 and k in tr.terminal_carets(bot):
            top = tr.remove_caret(top, i)
            bot = tr.remove_caret(bot, k)
            del perm[i]
            perm = [x - (x > k) for x in perm]
            pos = max(1, i - 1)
        else:
            pos = i + 1
    return VElement(top, tuple(perm), bot)


def project_to_v(e: BVElement) -> VElement:
    return v_reduce(e.top, br.permutation_of(br.nf_word(e.braid)), e.bot)


def _cable_v(perm: Sequence[int], mult: Sequence[int]) -> tuple[int, ...]:
    p0 = [x - 1 for x in perm]
    new, _ = br._cable_perm(p0, mult)
    return tuple(x + 1 for x in new)


def v_multiply(a: VElement, b: VElement) -> VElement:
    _, ea, eb = tr.common_refinement(a.bot, b.top)
    # bottom of a
    inv = {bpos: t for t, bpos in enumerate(a.perm, start=1)}
    mult = [1] * len(a.perm)
    top_exp = []
    for j, sub in ea:
        mult[inv[j] - 1] = sub.n
        top_exp.append((inv[j], sub))
    a_top = tr.apply_expansion(a.top, top_exp)
    a_perm = _cable_v(a.perm, mult)
    # top of b
    mult = [1] * len(b.perm)
    bot_exp = []
    for t, sub in eb:
        mult[t - 1] = sub.n
        bot_exp.append((b.perm[t - 1], sub))
    b_perm = _cable_v(b.perm, mult)
    b_bot = tr.apply_expansion(b.bot, bot_exp)
    perm = tuple(b_perm[x - 1] for x in a_perm)
    return v_reduce(a_top, perm, b_bot)


def v_invert(a: VElement) -> VElement:
    inv = [0] * len(a.perm)
    for t, x in enumerate(a.perm, start=1):
        inv[x - 1] = t
    return v_reduce(a.bot, inv, a.top)


# -- the relation suite -----------------------------------------------------------


@dataclass(frozen=True)
class RelationInstance:
    family: int
    lhs: str
    rhs: str
    passed: bool | None = field(default=None, compare=False)

    def __str__(self) -> str:
        status = {None: "unchecked", True: "pass", False: "FAIL"}[self.passed]
        return f"[{self.family:2d}] {self.lhs or '1'} = {self.rhs or '1'}  {status}"


def relation_instances(max_index: int) -> list[RelationInstance]:
    """
    Every instance of the defining relations (families 1-10) with all
    indices at most ``max_index``, then the two commutator identities
    (family 11 and 12) for ``1 <= i <= max_index``.
    """
    if max_index < 2:
        raise ValueError("max_index must be at least 2")
    K = max_index
    out = []

    def add(family, lhs, rhs):
        out.append(RelationInstance(family, lhs, rhs))

    for h in range(K + 1):
        for l in range(h + 1, K):
            add(1, f"f{l} f{h}", f"f{h} f{l + 1}")
    for h in range(K):
        add(2, f"a{h} f{h}", f"f{h + 1} a{h} a{h + 1}")
        add(2, f"A{h} f{h}", f"f{h + 1} A{h} A{h + 1}")
    for l in range(K + 1):
        for h in range(l + 2, K + 1):
            add(3, f"a{l} f{h}", f"f{h} a{l}")
    for h in range(K + 1):
        for l in range(h + 1, K):
            add(4, f"b{l} f{h}", f"f{h} b{l + 1}")
    for h in range(K):
        add(5, f"a{h}", f"B{h + 1} F{h} b{h}")
    for l in range(K + 1):
        for h in range(l + 2, K + 1):
            add(6, f"a{l} a{h}", f"a{h} a{l}")
    for h in range(K):
        add(7, f"a{h} a{h + 1} a{h}", f"a{h + 1} a{h} a{h + 1}")
    for h in range(K + 1):
        for l in range(h + 2, K + 1):
            add(8, f"b{l} a{h}", f"a{h} b{l}")
    for h in range(K):
        add(9, f"a{h} b{h + 1} a{h}", f"b{h + 1} a{h} b{h + 1}")
    for j in range(K):
        add(10, f"a{j}", f"b{j} f{j} B{j + 1}")
    for i in range(1, K + 1):
        add(11, f"f{i} F{i + 1}", f"f0 f{i + 1} F0 F{i + 1}")
    for i in range(1, K + 1):
        add(12, f"f{i + 1} F{i}", f"f{i + 1} f0 F{i + 1} F0")
    return out


def check_relations(max_index: int) -> list[RelationInstance]:
    report = []
    for inst in relation_instances(max_index):
        ok = equals(evaluate_word(inst.lhs), evaluate_word(inst.rhs))
        report.append(RelationInstance(inst.family, inst.lhs, inst.rhs, ok))
    return report


# -- text format -----------------------------------------------------------------


def format_element(e: BVElement) -> str:
    return f"T: {tr.format_tree(e.top)}\nB: {br.format_normal_form(e.braid)}\nTb: {tr.format_tree(e.bot)}"


def _parse_field(line: str, lineno: int, prefix: str) -> tuple[str, int]:
    stripped = line.lstrip()
    indent = len(line) - len(stripped)
    if not stripped.startswith(prefix):
        raise ElementParseError(f"expected line starting with {prefix!r}", lineno, indent + 1)
    body = stripped[len(prefix) :]
    lead = len(body) - len(body.lstrip())
    return body.strip(), indent + len(prefix) + lead + 1


def parse_element(text: str) -> BVElement:
    """
    Parse the three-line element format. The ``B:`` line holds ``id``, an
    Artin word such as ``s1 S2``, or a normal form ``D^p | perm ; ...``.
    """
    lines = [(k, ln) for k, ln in enumerate(text.splitlines(), start=1) if ln.strip() and not ln.lstrip().startswith("#")]
    if len(lines) != 3:
        raise ElementParseError(f"expected 3 lines (T:, B:, Tb:), got {len(lines)}", lines[-1][0] if lines else 1, 1)
    (l1, t1), (l2, t2), (l3, t3) = lines
    trees = []
    for lineno, line, prefix in ((l1, t1, "T:"), (l3, t3, "Tb:")):
        body, col = _parse_field(line, lineno, prefix)
        try:
            trees.append(tr.parse_tree(body))
        except tr.TreeParseError as exc:
            raise ElementParseError(str(exc).split(": ", 1)[1], lineno, col + exc.column - 1) from None
    top, bot = trees
    if top.n != bot.n:
        raise ElementParseError(f"top tree has {top.n} leaves, bottom tree {bot.n}", l3, 1)
    body, col = _parse_field(t2, l2, "B:")
    try:
        if body.startswith("D^"):
            word = br.parse_normal_form(top.n, body)
        else:
            word = br.parse_artin(top.n, body)
    except br.BraidParseError as exc:
        raise ElementParseError(str(exc).split(": ", 1)[1], l2, col + exc.column - 1) from None
    return reduce(RawTriple(top, word, bot))
