"""
The digit-quantized Lorenz flow
===============================

The classic three-variable chaotic system is Euler-stepped, then squashed
onto speech-parameter ranges: after each step x is replaced by the ones
digit of its integer part times 100 (a rate lattice 0, 100, ..., 900) and
z by the same digit over 10 (a volume lattice 0.0 ... 0.9).  The squashed
state feeds the next step, which keeps the orbit bounded but still
chaotic through y.
"""

from collections import Counter
from pathlib import Path

from verseflow import LorenzConfig, digit0, emit_diagnostics, lorenz_sequence

OUT = Path(__file__).parent / "out"
OUT.mkdir(exist_ok=True)

print("digit extraction: ones digit of the absolute integer part")
for value in (347.2, 0.98, -15.0, 901.4):
    print(f"  digit0({value:+8.2f}) = {digit0(value)}")

config = LorenzConfig(n=200, dt=0.01, sigma=10.0, rho_l=28.0, beta=8.0 / 3.0,
                      x0=1.0, y0=1.0, z0=1.0)
log = lorenz_sequence(config)

print("\nfirst steps from (1, 1, 1):")
for step, vec in enumerate(log.vectors[:6]):
    print(f"  {step}: x={vec.x:5.0f}  y={vec.y:+10.4f}  z={vec.z:.1f}")

rates = Counter(int(v.x) for v in log.vectors)
print("\nhow often each rate lattice point was visited over 200 steps:")
for rate in sorted(rates):
    print(f"  x={rate:3d}: {'#' * rates[rate]}")

emit_diagnostics(log, OUT / "lorenz_trace.csv")
print(f"\nwrote {OUT / 'lorenz_trace.csv'}")
