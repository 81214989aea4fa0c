"""
One simulated commutator key exchange over BV, then a sweep over seeds.

Run: python demos/02_key_exchange.py
"""

from __future__ import annotations

import time

from bvgroup import KexParams, format_transcript, run_session

# %% A small session, printed in full
session = run_session(KexParams(2, 2, 2, 2, 3, seed=1))
print(format_transcript(session))

# %% Sizes of the objects involved at the default parameters
start = time.perf_counter()
sizes = []
for seed in range(10):
    s = run_session(KexParams(seed=seed))
    assert s.secrets_match
    sizes.append((s.alice_key.n, s.shared_secret_alice.n, s.shared_secret_alice.braid.length))
print(f"\n10 sessions in {time.perf_counter() - start:.1f}s")
print("(key leaves, secret leaves, secret braid length):", sizes)
