"""
Planar rooted binary trees.

A tree is stored as the left-to-right sequence of its leaf depths. That
sequence determines the tree uniquely, and it is the same thing as the
dyadic subdivision of the unit interval cut out by the tree: leaf ``i`` at
depth ``d`` is an interval of length ``2**-d``. Least common refinements are
then just unions of breakpoint sets.

The recursive view (``LEAF`` / ``caret(left, right)``) is available through
:func:`caret`, :attr:`BinaryTree.left` and :attr:`BinaryTree.right`.

Leaf indices are 1-based everywhere in this module.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

__all__ = [
    "BinaryTree",
    "Expansion",
    "LEAF",
    "caret",
    "leaf_count",
    "terminal_carets",
    "add_caret",
    "remove_caret",
    "common_refinement",
    "apply_expansion",
    "is_refinement",
    "right_vine",
    "left_vine",
    "parse_tree",
    "format_tree",
    "TreeParseError",
]


class TreeParseError(ValueError):
    def __init__(self, message: str, column: int):
        super().__init__(f"column {column}: {message}")
        self.column = column


def _scaled_positions(depths: Sequence[int], scale: int) -> list[int]:
    """Left endpoints of the leaves, multiplied by ``2**scale``."""
    out = []
    x = 0
    for d in depths:
        out.append(x)
        x += 1 << (scale - d)
    return out


@dataclass(frozen=True)
class BinaryTree:
    depths: tuple[int, ...]

    def __post_init__(self):
        depths = self.depths
        if not depths:
            raise ValueError("a tree has at least one leaf")
        scale = max(depths)
        x = 0
        for d in depths:
            if d < 0:
                raise ValueError("negative leaf depth")
            size = 1 << (scale - d)
            if x % size:
                raise ValueError(f"leaf depths {depths} do not describe a binary tree")
            x += size
        if x != 1 << scale:
            raise ValueError(f"leaf depths {depths} do not describe a binary tree")

    @property
    def n(self) -> int:
        return len(self.depths)

    @property
    def is_leaf(self) -> bool:
        return len(self.depths) == 1

    def _split(self) -> int:
        # number of leaves in the left subtree
        if self.is_leaf:
            raise ValueError("a leaf has no children")
        total = 0
        for k, d in enumerate(self.depths):
            total += 1 << (self.max_depth - d)
            if total == 1 << (self.max_depth - 1):
                return k + 1
        raise AssertionError("unreachable")

    @property
    def max_depth(self) -> int:
        return max(self.depths)

    @property
    def left(self) -> BinaryTree:
        k = self._split()
        return BinaryTree(tuple(d - 1 for d in self.depths[:k]))

    @property
    def right(self) -> BinaryTree:
        k = self._split()
        return BinaryTree(tuple(d - 1 for d in self.depths[k:]))

    def leaf_addresses(self) -> list[str]:
        """Root-to-leaf paths as strings over ``0`` (left) and ``1`` (right)."""
        scale = self.max_depth
        out = []
        for x, d in zip(_scaled_positions(self.depths, scale), self.depths):
            out.append(format(x >> (scale - d), f"0{d}b") if d else "")
        return out

    def __str__(self) -> str:
        return format_tree(self)

    def __repr__(self) -> str:
        return f"BinaryTree({format_tree(self)!r})"


LEAF = BinaryTree((0,))

# Each entry grafts ``subtree`` onto leaf ``leaf_index`` of the unexpanded tree.
Expansion = list[tuple[int, BinaryTree]]


def caret(left: BinaryTree, right: BinaryTree) -> BinaryTree:
    return BinaryTree(tuple(d + 1 for d in left.depths) + tuple(d + 1 for d in right.depths))


def leaf_count(t: BinaryTree) -> int:
    return len(t.depths)


def right_vine(n: int) -> BinaryTree:
    """The tree with ``n`` leaves whose carets all hang off the right spine."""
    if n < 1:
        raise ValueError("a tree has at least one leaf")
    if n == 1:
        return LEAF
    return BinaryTree(tuple(range(1, n)) + (n - 1,))


def left_vine(n: int) -> BinaryTree:
    if n < 1:
        raise ValueError("a tree has at least one leaf")
    if n == 1:
        return LEAF
    return BinaryTree((n - 1,) + tuple(range(n - 1, 0, -1)))


def terminal_carets(t: BinaryTree) -> list[int]:
    """Indices ``i`` such that leaves ``i`` and ``i+1`` hang from one caret."""
    depths = t.depths
    scale = t.max_depth
    pos = _scaled_positions(depths, scale)
    out = []
    for i in range(len(depths) - 1):
        d = depths[i]
        if d == depths[i + 1] and not (pos[i] >> (scale - d)) & 1:
            out.append(i + 1)
    return out


def add_caret(t: BinaryTree, j: int) -> BinaryTree:
    if not 1 <= j <= len(t.depths):
        raise IndexError(f"leaf index {j} out of range 1..{len(t.depths)}")
    d = t.depths[j - 1] + 1
    return BinaryTree(t.depths[: j - 1] + (d, d) + t.depths[j:])


def remove_caret(t: BinaryTree, i: int) -> BinaryTree:
    if i not in terminal_carets(t):
        raise ValueError(f"leaves {i} and {i + 1} do not form a terminal caret")
    d = t.depths[i - 1] - 1
    return BinaryTree(t.depths[: i - 1] + (d,) + t.depths[i + 1 :])


def apply_expansion(t: BinaryTree, expansion: Iterable[tuple[int, BinaryTree]]) -> BinaryTree:
    depths = list(t.depths)
    for j, sub in sorted(expansion, key=lambda e: e[0], reverse=True):
        if not 1 <= j <= len(t.depths):
            raise IndexError(f"leaf index {j} out of range 1..{len(t.depths)}")
        d = depths[j - 1]
        depths[j - 1 : j] = [d + s for s in sub.depths]
    return BinaryTree(tuple(depths))


def _breakpoints(t: BinaryTree, scale: int) -> list[int]:
    return _scaled_positions(t.depths, scale)


def _expansion_into(t: BinaryTree, target_points: list[int], target_depths: list[int], scale: int) -> Expansion:
    out: Expansion = []
    pos = _breakpoints(t, scale)
    k = 0
    for idx, (x, d) in enumerate(zip(pos, t.depths)):
        end = x + (1 << (scale - d))
        start = k
        while k < len(target_points) and target_points[k] < end:
            k += 1
        if k - start > 1:
            out.append((idx + 1, BinaryTree(tuple(e - d for e in target_depths[start:k]))))
    return out


def common_refinement(a: BinaryTree, b: BinaryTree) -> tuple[BinaryTree, Expansion, Expansion]:
    """Least common refinement of ``a`` and ``b``, with the expansions reaching it."""
    if a == b:
        return a, [], []
    scale = max(a.max_depth, b.max_depth)
    points = sorted(set(_breakpoints(a, scale)) | set(_breakpoints(b, scale)))
    top = 1 << scale
    depths = []
    for x, y in zip(points, points[1:] + [top]):
        width = y - x
        # dyadic intervals of two subdivisions are nested or disjoint
        depths.append(scale - (width.bit_length() - 1))
    t = BinaryTree(tuple(depths))
    return t, _expansion_into(a, points, depths, scale), _expansion_into(b, points, depths, scale)


def is_refinement(target: BinaryTree, t: BinaryTree) -> bool:
    """Whether ``target`` is obtained from ``t`` by grafting subtrees onto leaves."""
    refined, _, extra = common_refinement(t, target)
    return refined == target and not extra


def parse_tree(text: str) -> BinaryTree:
    """Parse the balanced-parentheses encoding, ``()`` for a leaf."""
    stack: list[int] = []
    depths: list[int] = []
    done = False
    for col, ch in enumerate(text, start=1):
        if ch.isspace():
            continue
        if done:
            raise TreeParseError("trailing characters after tree", col)
        if ch == "(":
            stack.append(0)
        elif ch == ")":
            if not stack:
                raise TreeParseError("unbalanced ')'", col)
            children = stack.pop()
            if children == 0:
                depths.append(len(stack))
            elif children != 2:
                raise TreeParseError(f"node with {children} children", col)
            if stack:
                stack[-1] += 1
                if stack[-1] > 2:
                    raise TreeParseError("node with more than 2 children", col)
            else:
                done = True
        else:
            raise TreeParseError(f"unexpected character {ch!r}", col)
    if not done:
        raise TreeParseError("incomplete tree", len(text) + 1)
    return BinaryTree(tuple(depths))


def format_tree(t: BinaryTree) -> str:
    parts = []
    for addr in t.leaf_addresses():
        opens = len(addr) - len(addr.rstrip("0"))
        closes = len(addr) - len(addr.rstrip("1"))
        parts.append("(" * opens + "()" + ")" * closes)
    return "".join(parts)
