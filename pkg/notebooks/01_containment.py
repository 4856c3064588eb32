# %% [markdown]
# Which symbolic powers sit inside which ordinary powers, for four almost
# collinear points (three on z = 0 plus [0:0:1]).

# %%
from symcontain import contains, default_config, resurgence, resurgence_estimate
from symcontain.polyring import basis_poly, render

cfg = default_config("ac", 3)
print(cfg.label, "F =", render(cfg.F))

# %%
# x marks a pair (m, r) where I^(m) is not inside I^r
for m in range(1, 13):
    row = "".join("." if contains(cfg, m, r).contained else "x" for r in range(1, 13))
    print(f"m={m:2d} {row}")

# %%
v = contains(cfg, 9, 8)
print(v.contained, v.threshold, v.witness, render(basis_poly(cfg, v.witness)))

# %%
# the ratio m/r approaches n^2/(n^2-n+1) from below
print("resurgence", resurgence(cfg))
for N in (5, 10, 20, 40):
    print(N, resurgence_estimate(cfg, N, with_pair=True))
