"""The two checkable thresholds: edge count and spectral radius.

For a connected graph of order n and minimum degree delta (positive, not
divisible by 3), once n reaches the respective window, either
  m(G)  >  size_threshold(n, delta)      or
  rho(G) > rho_threshold(n, delta)
guarantees a spanning forest of 3..5-vertex paths.  Both thresholds are
attained by one extremal configuration, which itself violates the
isolated-vertex condition: neither inequality can be weakened.
"""

from pathfactors import (
    OrderTooSmall,
    build_extremal,
    emit_graph6,
    extremal_params,
    find_witness,
    isolated_count,
    n_min_size,
    n_min_spectral,
    rho_closed_form,
    spectral_radius,
    thresholds,
)

print("== order windows per minimum degree ==")
print("delta  n_min_size  n_min_spectral")
for delta in (1, 2, 4, 5, 7, 8):
    print(f"{delta:5d}  {n_min_size(delta):10d}  {n_min_spectral(delta):14d}")

print("\n== thresholds for delta=1 near the window edge ==")
for n in (24, 25, 26, 30):
    try:
        th = thresholds(n, 1)
    except OrderTooSmall as exc:
        print(f"n={n}: below both windows ({exc})")
        continue
    print(f"n={n}: size>{th.size_threshold} (active={th.size_applicable}), "
          f"rho>{th.rho_threshold:.6f} (active={th.spectral_applicable})")

print("\n== the extremal configuration attains both ==")
n, delta = 26, 1
pars = extremal_params(n, delta)
g = build_extremal(n, delta)
th = thresholds(n, delta)
print(f"extremal(n={n}, s={delta}): clique {pars.s} + clique {pars.q} "
      f"+ {pars.p} independent, {g.m} edges, graph6 {emit_graph6(g)!r}")
print(f"its edge count equals the size threshold: {g.m == th.size_threshold}")
rho = spectral_radius(g).rho
print(f"its spectral radius {rho:.10f} equals the spectral threshold "
      f"{th.rho_threshold:.10f} within 1e-9: {abs(rho - th.rho_threshold) < 1e-9}")

print("\n== and it violates the condition ==")
witness = range(delta)
iso = isolated_count(g, witness)
print(f"S = first {delta} vertices: {iso} isolated > 2|S|/3 = {2 * delta / 3:.2f}")
w = find_witness(g, max_n=30)
print(f"smallest witness found by search: size {w.size}, isolated {w.isolated}")

print("\n== closed-form radius tracks the order ==")
print("n      rho_threshold(n, 1)   n - floor(2/3) - 2")
for n in (26, 40, 80, 160, 300):
    print(f"{n:4d}   {rho_closed_form(n, 1):18.10f}   {n - 2}")
