"""
Braid groups over the generating set of non-repeating (simple) braids.

A simple braid is stored as the permutation it induces. Internally the
permutation is kept 0-based in ``SimpleBraid.images`` (top position ``t``
ends at bottom position ``images[t]``); the public ``perm`` property and all
text formats are 1-based, as are strand indices in the public operations.

Words are read top to bottom, so the permutation of a product ``ab`` sends
``t`` to ``b[a[t]]``. The positive crossing ``sigma_i`` swaps the strands at
positions ``i`` and ``i+1``.

Normal forms are right-greedy: ``Delta^p f_1 ... f_k`` where each ``f_j`` is a
simple braid other than the identity or ``Delta``, and every adjacent pair
``(f_j, f_{j+1})`` is right-weighted, i.e. ``f_{j+1}`` is the largest simple
right divisor of ``f_j f_{j+1}``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np
from numba import njit

__all__ = [
    "SimpleBraid",
    "BraidWord",
    "NormalForm",
    "BraidParseError",
    "simple_from_permutation",
    "delta",
    "identity",
    "from_artin",
    "multiply",
    "invert",
    "normal_form",
    "nf_word",
    "equals",
    "delete_strand",
    "double_strand",
    "cable",
    "strands_parallel",
    "permutation_of",
    "artin_word_of_simple",
    "artin_action",
    "parse_artin",
    "format_artin",
    "format_normal_form",
    "parse_normal_form",
]


class BraidParseError(ValueError):
    def __init__(self, message: str, column: int):
        super().__init__(f"column {column}: {message}")
        self.column = column


@dataclass(frozen=True)
class SimpleBraid:
    images: tuple[int, ...]

    @property
    def n(self) -> int:
        return len(self.images)

    @property
    def perm(self) -> tuple[int, ...]:
        return tuple(x + 1 for x in self.images)

    def is_identity(self) -> bool:
        return all(x == t for t, x in enumerate(self.images))

    def is_delta(self) -> bool:
        n = len(self.images)
        return all(x == n - 1 - t for t, x in enumerate(self.images))

    def crossings(self) -> int:
        p = self.images
        return sum(1 for i in range(len(p)) for j in range(i + 1, len(p)) if p[i] > p[j])

    def __str__(self) -> str:
        return " ".join(map(str, self.perm))


@dataclass(frozen=True)
class BraidWord:
    n: int
    letters: tuple[tuple[SimpleBraid, int], ...] = ()

    def __post_init__(self):
        if self.n < 1:
            raise ValueError("a braid has at least one strand")
        for s, sign in self.letters:
            if s.n != self.n:
                raise ValueError(f"letter on {s.n} strands in a word on {self.n} strands")
            if sign not in (1, -1):
                raise ValueError(f"letter sign must be +1 or -1, got {sign}")

    def __len__(self) -> int:
        return len(self.letters)


@dataclass(frozen=True)
class NormalForm:
    n: int
    delta_power: int
    factors: tuple[SimpleBraid, ...]

    @property
    def length(self) -> int:
        """Number of letters of the word spelled by this normal form."""
        return abs(self.delta_power) + len(self.factors)

    def is_identity(self) -> bool:
        return self.delta_power == 0 and not self.factors

    def __str__(self) -> str:
        return format_normal_form(self)


# -- simple braids -------------------------------------------------------------


def simple_from_permutation(p: Sequence[int]) -> SimpleBraid:
    """The non-repeating braid inducing the 1-based one-line permutation ``p``."""
    n = len(p)
    if sorted(p) != list(range(1, n + 1)):
        raise ValueError(f"{list(p)} is not a permutation of 1..{n}")
    return SimpleBraid(tuple(x - 1 for x in p))


def _transposition(n: int, i: int) -> SimpleBraid:
    images = list(range(n))
    images[i], images[i + 1] = images[i + 1], images[i]
    return SimpleBraid(tuple(images))


def delta(n: int) -> SimpleBraid:
    return SimpleBraid(tuple(range(n - 1, -1, -1)))


def _inverse(p: Sequence[int]) -> list[int]:
    q = [0] * len(p)
    for t, x in enumerate(p):
        q[x] = t
    return q


# -- words -----------------------------------------------------------------------


def identity(n: int) -> BraidWord:
    return BraidWord(n, ())


def from_artin(n: int, word: Iterable[int]) -> BraidWord:
    """Word from signed 1-based Artin indices: ``+i`` is sigma_i, ``-i`` its inverse."""
    letters = []
    for k in word:
        i = abs(k)
        if k == 0 or i > n - 1:
            raise IndexError(f"Artin generator {k} out of range for {n} strands")
        letters.append((_transposition(n, i - 1), 1 if k > 0 else -1))
    return BraidWord(n, tuple(letters))


def multiply(a: BraidWord, b: BraidWord) -> BraidWord:
    if a.n != b.n:
        raise ValueError(f"strand counts differ: {a.n} vs {b.n}")
    return BraidWord(a.n, a.letters + b.letters)


def invert(a: BraidWord) -> BraidWord:
    return BraidWord(a.n, tuple((s, -sign) for s, sign in reversed(a.letters)))


def permutation_of(a: BraidWord) -> tuple[int, ...]:
    """1-based one-line permutation induced by ``a`` (top position to bottom)."""
    cur = list(range(a.n))
    for s, sign in a.letters:
        p = s.images if sign > 0 else _inverse(s.images)
        cur = [p[c] for c in cur]
    return tuple(c + 1 for c in cur)


# -- normal form -----------------------------------------------------------------


@njit(cache=True)
def _inverse_into(p, q):
    for t in range(p.shape[0]):
        q[p[t]] = t


@njit(cache=True)
def _right_weight(F, j, qa, todo):
    """
    Slide crossings from the bottom of row ``j`` to the top of row ``j+1``
    until the pair is right-weighted. sigma_i can move when it is a right
    descent of the upper factor and sigma_i times the lower factor is still
    simple. Returns whether anything moved.
    """
    a = F[j]
    b = F[j + 1]
    n = a.shape[0]
    _inverse_into(a, qa)
    top = 0
    for i in range(n - 1):
        if qa[i] > qa[i + 1] and b[i] < b[i + 1]:
            todo[top] = i
            top += 1
    if top == 0:
        return False
    while top > 0:
        top -= 1
        i = todo[top]
        if qa[i] > qa[i + 1] and b[i] < b[i + 1]:
            x = qa[i]
            qa[i] = qa[i + 1]
            qa[i + 1] = x
            x = b[i]
            b[i] = b[i + 1]
            b[i + 1] = x
            if i > 0 and qa[i - 1] > qa[i] and b[i - 1] < b[i]:
                todo[top] = i - 1
                top += 1
            if i < n - 2 and qa[i + 1] > qa[i + 2] and b[i + 1] < b[i + 2]:
                todo[top] = i + 1
                top += 1
    _inverse_into(qa, a)
    return True


@njit(cache=True)
def _is_identity_row(r):
    for t in range(r.shape[0]):
        if r[t] != t:
            return False
    return True


@njit(cache=True)
def _is_delta_row(r):
    n = r.shape[0]
    for t in range(n):
        if r[t] != n - 1 - t:
            return False
    return True


@njit(cache=True)
def _tau_row(r, tmp):
    n = r.shape[0]
    for i in range(n):
        tmp[i] = n - 1 - r[n - 1 - i]
    r[:] = tmp


@njit(cache=True)
def _normal_form_kernel(letters, signs):
    """
    Returns (delta power, factor rows, factor count). Negative letters
    become Delta^-1 times the left complement, and every Delta^-1 is moved
    to the front, twisting the factors it passes by tau. The positive
    factors are then inserted one by one, restoring right-weightedness
    leftwards, and finally swept until every pair is right-weighted.
    """
    h, n = letters.shape
    F = np.empty((h, n), dtype=np.int64)
    qa = np.empty(n, dtype=np.int64)
    todo = np.empty(n * n + n, dtype=np.int64)
    tmp = np.empty(n, dtype=np.int64)
    negatives = 0
    for k in range(h):
        if signs[k] < 0:
            negatives += 1
    seen = 0
    m = 0
    for k in range(h):
        row = F[m]
        if signs[k] > 0:
            row[:] = letters[k]
        else:
            # left complement c with c s = Delta
            seen += 1
            _inverse_into(letters[k], tmp)
            for i in range(n):
                row[i] = tmp[n - 1 - i]
        if (negatives - seen) % 2 == 1:
            _tau_row(row, tmp)
        if _is_identity_row(row):
            continue
        m += 1
        j = m - 2
        while j >= 0:
            if not _right_weight(F, j, qa, todo):
                break
            j -= 1
    changed = True
    while changed:
        changed = False
        for j in range(m - 1):
            if _right_weight(F, j, qa, todo):
                changed = True
    # identities collect on the left, Deltas on the right
    start = 0
    while start < m and _is_identity_row(F[start]):
        start += 1
    stop = m
    while stop > start and _is_delta_row(F[stop - 1]):
        stop -= 1
    trailing = m - stop
    if trailing % 2 == 1:
        for j in range(start, stop):
            _tau_row(F[j], tmp)
    return trailing - negatives, F[start:stop], stop - start


def normal_form(a: BraidWord) -> NormalForm:
    n = a.n
    if n == 1 or not a.letters:
        return NormalForm(n, 0, ())
    letters = np.array([s.images for s, _ in a.letters], dtype=np.int64)
    signs = np.array([sign for _, sign in a.letters], dtype=np.int64)
    power, rows, _ = _normal_form_kernel(letters, signs)
    return NormalForm(n, int(power), tuple(SimpleBraid(tuple(r)) for r in rows.tolist()))


def _is_right_weighted(a: SimpleBraid, b: SimpleBraid) -> bool:
    qa = _inverse(a.images)
    pb = b.images
    return not any(qa[i] > qa[i + 1] and pb[i] < pb[i + 1] for i in range(a.n - 1))


def nf_word(nf: NormalForm) -> BraidWord:
    """The word spelled by a normal form."""
    d = delta(nf.n)
    sign = 1 if nf.delta_power >= 0 else -1
    letters = [(d, sign)] * abs(nf.delta_power) if nf.n > 1 else []
    letters += [(f, 1) for f in nf.factors]
    return BraidWord(nf.n, tuple(letters))


def equals(a: BraidWord, b: BraidWord) -> bool:
    return a.n == b.n and normal_form(a) == normal_form(b)


# -- strand surgery ----------------------------------------------------------------


def _check_strand(n: int, i: int) -> None:
    if not 1 <= i <= n:
        raise IndexError(f"strand index {i} out of range 1..{n}")


def _delete_point(p: Sequence[int], t: int) -> tuple[int, ...]:
    b = p[t]
    return tuple(x - (x > b) for k, x in enumerate(p) if k != t)


def delete_strand(a: BraidWord, i: int) -> BraidWord:
    """Remove the strand starting at top position ``i``."""
    _check_strand(a.n, i)
    if a.n == 1:
        raise ValueError("cannot delete the only strand")
    pos = i - 1
    letters = []
    for s, sign in a.letters:
        p = s.images
        if sign > 0:
            top = pos
            pos = p[pos]
        else:
            top = _inverse(p)[pos]
            pos = top
        letters.append((SimpleBraid(_delete_point(p, top)), sign))
    return BraidWord(a.n - 1, tuple(letters))


def _cable_perm(p: Sequence[int], mult: Sequence[int]) -> tuple[list[int], list[int]]:
    """Replace top strand ``t`` of ``p`` by ``mult[t]`` parallel copies."""
    n = len(p)
    at_bottom = [0] * n
    for t in range(n):
        at_bottom[p[t]] = mult[t]
    offset = [0] * n
    acc = 0
    for b in range(n):
        offset[b] = acc
        acc += at_bottom[b]
    out = []
    for t in range(n):
        base = offset[p[t]]
        out.extend(range(base, base + mult[t]))
    return out, at_bottom


def cable(a: BraidWord, mult: Sequence[int]) -> BraidWord:
    """
    Replace each top strand ``t`` (1-based position ``t+1``) by ``mult[t]``
    parallel strands, all the way down.
    """
    if len(mult) != a.n or any(m < 1 for m in mult):
        raise ValueError("need one positive multiplicity per strand")
    m = list(mult)
    letters = []
    for s, sign in a.letters:
        p = s.images
        if sign > 0:
            new, m = _cable_perm(p, m)
        else:
            # m counts strands at the bottom of s
            top_mult = [m[p[t]] for t in range(len(p))]
            new, _ = _cable_perm(p, top_mult)
            m = top_mult
        letters.append((SimpleBraid(tuple(new)), sign))
    return BraidWord(sum(mult), tuple(letters))


def double_strand(a: BraidWord, i: int) -> BraidWord:
    """Split the strand starting at top position ``i`` into positions ``i, i+1``."""
    _check_strand(a.n, i)
    mult = [1] * a.n
    mult[i - 1] = 2
    return cable(a, mult)


def strands_parallel(a: BraidWord, i: int, nf: NormalForm | None = None) -> bool:
    """Whether strands ``i`` and ``i+1`` can be united into a single strand."""
    if not 1 <= i <= a.n - 1:
        raise IndexError(f"strand pair {i} out of range 1..{a.n - 1}")
    if nf is None:
        nf = normal_form(a)
    return normal_form(double_strand(delete_strand(a, i), i)) == nf


# -- Artin action oracle -----------------------------------------------------------


def artin_word_of_simple(s: SimpleBraid) -> list[int]:
    """A positive Artin word (1-based indices) for a simple braid."""
    p = s.images
    arr = list(range(s.n))  # arr[pos] = strand (by top index) at that position
    word = []
    swapped = True
    while swapped:
        swapped = False
        for k in range(s.n - 1):
            if p[arr[k]] > p[arr[k + 1]]:
                arr[k], arr[k + 1] = arr[k + 1], arr[k]
                word.append(k + 1)
                swapped = True
    return word


def _free_reduce_append(out: list[int], letters: Iterable[int]) -> None:
    for x in letters:
        if out and out[-1] == -x:
            out.pop()
        else:
            out.append(x)


def _substitute(table: list[tuple[int, ...]], word: Iterable[int]) -> tuple[int, ...]:
    out: list[int] = []
    for x in word:
        img = table[abs(x) - 1]
        if x < 0:
            img = tuple(-y for y in reversed(img))
        _free_reduce_append(out, img)
    return tuple(out)


def _artin_image(n: int, k: int) -> list[tuple[int, ...]]:
    """Images of x_1..x_n under sigma_|k| (or its inverse when k < 0)."""
    i = abs(k)
    images = [(j,) for j in range(1, n + 1)]
    if k > 0:
        images[i - 1] = (i, i + 1, -i)
        images[i] = (i,)
    else:
        images[i - 1] = (i + 1,)
        images[i] = (-(i + 1), i, i + 1)
    return images


def artin_action(a: BraidWord) -> tuple[tuple[int, ...], ...]:
    """
    Images of the free generators x_1..x_n under the Artin automorphism of
    ``a``, as freely reduced words of signed 1-based generator indices.
    Two words are equal in B_n exactly when their tables agree.
    """
    n = a.n
    table = [(j,) for j in range(1, n + 1)]
    for s, sign in a.letters:
        gens = artin_word_of_simple(s)
        if sign < 0:
            gens = [-g for g in reversed(gens)]
        for g in gens:
            img = _artin_image(n, g)
            table = [_substitute(table, w) for w in img]
    return tuple(table)


# -- text formats ----------------------------------------------------------------


def parse_artin(n: int, text: str) -> BraidWord:
    """Parse ``"s1 S2 s1"`` style words; ``"id"`` or empty text is the identity."""
    word = []
    col = 1
    stripped = text.strip()
    if stripped in ("", "id"):
        return identity(n)
    for token in text.split(" "):
        if token:
            if len(token) < 2 or token[0] not in "sS" or not token[1:].isdigit():
                raise BraidParseError(f"bad Artin token {token!r}", col)
            k = int(token[1:])
            if not 1 <= k <= n - 1:
                raise BraidParseError(f"generator {token!r} out of range for {n} strands", col)
            word.append(k if token[0] == "s" else -k)
        col += len(token) + 1
    return from_artin(n, word)


def format_artin(a: BraidWord) -> str:
    tokens = []
    for s, sign in a.letters:
        gens = artin_word_of_simple(s)
        if sign > 0:
            tokens.extend(f"s{g}" for g in gens)
        else:
            tokens.extend(f"S{g}" for g in reversed(gens))
    return " ".join(tokens) if tokens else "id"


def format_normal_form(nf: NormalForm) -> str:
    head = f"D^{nf.delta_power} |"
    if not nf.factors:
        return head
    return head + " " + " ; ".join(str(f) for f in nf.factors)


def parse_normal_form(n: int, text: str) -> BraidWord:
    """Parse ``"D^p | perm ; perm"`` into the word it spells."""
    head, bar, rest = text.partition("|")
    if not bar:
        raise BraidParseError("missing '|' in normal form", len(text) + 1)
    head = head.strip()
    if not head.startswith("D^"):
        raise BraidParseError("normal form must start with 'D^'", 1)
    try:
        power = int(head[2:])
    except ValueError:
        raise BraidParseError(f"bad Delta exponent {head[2:]!r}", 3) from None
    letters = []
    if n > 1:
        letters = [(delta(n), 1 if power >= 0 else -1)] * abs(power)
    col = len(head) + 2
    if rest.strip():
        for chunk in rest.split(";"):
            try:
                p = [int(x) for x in chunk.split()]
                s = simple_from_permutation(p)
            except ValueError as exc:
                raise BraidParseError(f"bad permutation {chunk.strip()!r}: {exc}", col) from None
            if s.n != n:
                raise BraidParseError(f"permutation on {s.n} points, expected {n}", col)
            letters.append((s, 1))
            col += len(chunk) + 1
    return BraidWord(n, tuple(letters))
