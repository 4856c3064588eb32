# %% [markdown]
# Cross-check the combinatorial descriptions against plain linear algebra:
# vanishing conditions at the points for I^(m), products of generators for I^r.

# %%
import time

from symcontain import Bounds, Power, default_config, graded_ideal, graded_symbolic, verify_claim
from symcontain.combinat import hilbert_dim

nci = default_config("nci", 2)
for d in range(2, 9):
    print(d, graded_symbolic(nci, 2, d).rank, hilbert_dim(nci, ("symbolic", 2), d),
          graded_ideal(nci, Power(2), d).rank, hilbert_dim(nci, ("power", 2), d))

# %%
t0 = time.perf_counter()
for claim in ("nci_split_even", "nci_split_odd", "madic_1"):
    rep = verify_claim(nci, claim, Bounds(max_degree=10, m_max=4, r_max=2))
    print(claim, rep.all_pass, len(rep.cells))
print(f"{time.perf_counter() - t0:.1f}s")

# %%
# odd splits are strict: I^(2) is bigger than I * I
rep = verify_claim(nci, "nci_split_odd", Bounds(max_degree=8, pairs=((1, 1),)))
print([c.detail for c in rep.cells if c.detail][:1])
