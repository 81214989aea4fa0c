"""
Anshel-Anshel-Goldfeld commutator key exchange with BV as platform group.

This is a simulator for experiments, not a secure implementation. Both
parties run in one process and the session object keeps the private keys
so tests can check them.

Messages follow ``A b_k A^-1`` (Alice) and ``B a_k B^-1`` (Bob). With those
messages the commutator both sides can compute is ``A B A^-1 B^-1``:

* Alice substitutes Bob's tuple into her recipe to get ``B A B^-1`` and
  forms ``A (B A B^-1)^-1``.
* Bob substitutes Alice's tuple into his recipe to get ``A B A^-1`` and
  forms ``(A B A^-1) B^-1``.

Randomness comes from :class:`SplitMix64` so transcripts are reproducible
from the seed alone.
"""

from __future__ import annotations

from dataclasses import dataclass

from .bvcore import (
    IDENTITY,
    BVElement,
    evaluate_word,
    format_element,
    invert,
    multiply,
    reduce,
)

__all__ = [
    "SplitMix64",
    "KexParams",
    "KexSession",
    "ALPHABET",
    "sample_element",
    "sample_key",
    "conjugate_tuple",
    "run_session",
    "format_transcript",
]

_MASK = (1 << 64) - 1


class SplitMix64:
    """
    64-bit generator: ``state += 0x9E3779B97F4A7C15`` then the output mix
    ``z = (z ^ z>>30) * 0xBF58476D1CE4E5B9; z = (z ^ z>>27) * 0x94D049BB133111EB;
    z ^= z>>31`` (all mod 2**64).
    """

    def __init__(self, seed: int):
        self.state = seed & _MASK

    def next_u64(self) -> int:
        self.state = (self.state + 0x9E3779B97F4A7C15) & _MASK
        z = self.state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK
        return z ^ (z >> 31)

    def below(self, k: int) -> int:
        """Uniform integer in ``[0, k)`` by rejection sampling."""
        if k <= 0:
            raise ValueError("bound must be positive")
        limit = (1 << 64) - (1 << 64) % k
        while True:
            x = self.next_u64()
            if x < limit:
                return x % k

    def shuffle(self, items: list) -> None:
        for i in range(len(items) - 1, 0, -1):
            j = self.below(i + 1)
            items[i], items[j] = items[j], items[i]


# sample_element draws uniformly from these letters
ALPHABET = (
    ("f", 0, 1), ("f", 0, -1), ("f", 1, 1), ("f", 1, -1),
    ("b", 0, 1), ("b", 0, -1), ("b", 1, 1), ("b", 1, -1),
)


@dataclass(frozen=True)
class KexParams:
    alice_set_size: int = 4
    alice_key_length: int = 6
    bob_set_size: int = 4
    bob_key_length: int = 6
    public_gen_word_length: int = 8
    seed: int = 0

    def __post_init__(self):
        sizes = (
            self.alice_set_size,
            self.alice_key_length,
            self.bob_set_size,
            self.bob_key_length,
            self.public_gen_word_length,
        )
        if any(x < 0 for x in sizes):
            raise ValueError("sizes and lengths must be non-negative")
        if self.alice_key_length and not self.alice_set_size:
            raise ValueError("Alice needs a nonempty public set for a nontrivial key")
        if self.bob_key_length and not self.bob_set_size:
            raise ValueError("Bob needs a nonempty public set for a nontrivial key")


Recipe = list[tuple[int, int]]


@dataclass(frozen=True)
class KexSession:
    params: KexParams
    alice_public: tuple[BVElement, ...]
    bob_public: tuple[BVElement, ...]
    # simulation only: never leaves the party in a real exchange
    alice_key: BVElement
    bob_key: BVElement
    alice_recipe: tuple[tuple[int, int], ...]
    bob_recipe: tuple[tuple[int, int], ...]
    alice_msg: tuple[BVElement, ...]
    bob_msg: tuple[BVElement, ...]
    shared_secret_alice: BVElement
    shared_secret_bob: BVElement

    @property
    def secrets_match(self) -> bool:
        return self.shared_secret_alice == self.shared_secret_bob


def sample_element(rng: SplitMix64, word_length: int) -> BVElement:
    if word_length < 0:
        raise ValueError("word length must be non-negative")
    word = [ALPHABET[rng.below(len(ALPHABET))] for _ in range(word_length)]
    return evaluate_word(word)


def _product(elements, recipe) -> BVElement:
    # reduced after every factor: keys cancel heavily, and unreduced
    # intermediates grow far faster than the reduced ones
    acc = IDENTITY
    for idx, exp in recipe:
        x = elements[idx]
        acc = multiply(acc, x if exp > 0 else invert(x))
    return acc


def sample_key(rng: SplitMix64, public_set, key_length: int) -> tuple[BVElement, Recipe]:
    """Random product of public elements and their inverses; indices are 0-based."""
    if key_length < 0:
        raise ValueError("key length must be non-negative")
    if key_length and not public_set:
        raise ValueError("cannot build a key from an empty public set")
    recipe = []
    for _ in range(key_length):
        idx = rng.below(len(public_set))
        exp = 1 if rng.below(2) else -1
        recipe.append((idx, exp))
    return _product(public_set, recipe), recipe


def conjugate_tuple(key: BVElement, elements) -> list[BVElement]:
    key_inv = invert(key, fast=True)
    out = []
    for t in elements:
        raw = multiply(multiply(key, t, fast=True), key_inv, fast=True)
        out.append(reduce(raw))
    return out


def run_session(params: KexParams) -> KexSession:
    rng = SplitMix64(params.seed)
    g = params.public_gen_word_length
    alice_public = [sample_element(rng, g) for _ in range(params.alice_set_size)]
    alice_key, alice_recipe = sample_key(rng, alice_public, params.alice_key_length)
    bob_public = [sample_element(rng, g) for _ in range(params.bob_set_size)]
    bob_key, bob_recipe = sample_key(rng, bob_public, params.bob_key_length)

    alice_msg = conjugate_tuple(alice_key, bob_public)
    bob_msg = conjugate_tuple(bob_key, alice_public)

    # Alice: B A B^-1 from Bob's tuple
    bab = _product(bob_msg, alice_recipe)
    secret_alice = multiply(alice_key, invert(bab))
    # Bob: A B A^-1 from Alice's tuple
    aba = _product(alice_msg, bob_recipe)
    secret_bob = multiply(aba, invert(bob_key))

    return KexSession(
        params,
        tuple(alice_public),
        tuple(bob_public),
        alice_key,
        bob_key,
        tuple(alice_recipe),
        tuple(bob_recipe),
        tuple(alice_msg),
        tuple(bob_msg),
        secret_alice,
        secret_bob,
    )


def _block(title: str, elements) -> list[str]:
    lines = [f"# {title} ({len(elements)})"]
    for k, e in enumerate(elements):
        lines.append(f"## {title}[{k}]")
        lines.append(format_element(e))
    return lines


def format_transcript(s: KexSession) -> str:
    p = s.params
    lines = [
        "# params",
        f"seed={p.seed} alice_set={p.alice_set_size} alice_len={p.alice_key_length} "
        f"bob_set={p.bob_set_size} bob_len={p.bob_key_length} gen_len={p.public_gen_word_length}",
    ]
    lines += _block("alice_public", s.alice_public)
    lines += _block("bob_public", s.bob_public)
    lines += _block("alice_msg", s.alice_msg)
    lines += _block("bob_msg", s.bob_msg)
    lines += ["# shared_secret_alice", format_element(s.shared_secret_alice)]
    lines += ["# shared_secret_bob", format_element(s.shared_secret_bob)]
    lines.append("secrets match" if s.secrets_match else "secrets DIFFER")
    return "\n".join(lines)
