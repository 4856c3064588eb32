# %% [markdown]
# Initial degrees and the adapted ring bases.

# %%
from symcontain import alpha, default_config
from symcontain.combinat import enumerate_basis
from symcontain.oracle import Symbolic, alpha_oracle
from symcontain.polyring import X, Y, Z, basis_poly, render, to_h_basis

for kind, n in [("ac", 3), ("ac", 5), ("nci", 1), ("nci", 3)]:
    cfg = default_config(kind, n)
    print(cfg.label, [alpha(cfg, ("symbolic", m)) for m in range(1, 7)],
          [alpha_oracle(cfg, Symbolic(m)) for m in range(1, 4)])

# %%
cfg = default_config("ac", 4)
for e in enumerate_basis(cfg, 4, ("symbolic", 2)):
    print(tuple(e), render(basis_poly(cfg, e)))

# %%
f = X ** 4 * Z + Y ** 5
print(to_h_basis(f, cfg).items())
