"""
Generators of BV, their normal forms, and a few defining relations.

Run: python demos/01_generators_and_relations.py
"""

from __future__ import annotations

from bvgroup import evaluate_word, format_element, generator, multiply, project_to_v

# %% The three generator families
for fam in "fba":
    print(f"--- {fam}0")
    print(format_element(generator(fam, 0)))

# %% f1 f0 = f0 f2, the first relation of Thompson's group F
lhs, rhs = evaluate_word("f1 f0"), evaluate_word("f0 f2")
print("\nf1 f0 == f0 f2:", lhs == rhs)

# %% Braid relation among the a's
print("a0 a1 a0 == a1 a0 a1:", evaluate_word("a0 a1 a0") == evaluate_word("a1 a0 a1"))

# %% b0 squared is a full twist: nontrivial in BV, trivial in V
b0 = generator("b", 0)
bb = multiply(b0, b0)
print("\nb0^2 =")
print(format_element(bb))
print("its image in V:", project_to_v(bb))
