"""Cross-check the closed-form chart coefficients against finite
differences through the ambient embedding.

The restricted form has coefficients (x(s), y(s), (1-x-y)/3) depending on
s only; the oracle recomputes them by numerically differentiating the
chart map into the 5-sphere and pairing with the ambient contact form.
"""

import numpy as np

from reebdeform import ProfileFamily, analytic_lambda, numeric_pullback
from reebdeform.family import oracle_agreement_err

fam = ProfileFamily()
rng = np.random.default_rng(0)

print("spot checks (analytic vs finite-difference):")
for t in (0.0, 0.5, 1.0, 1.25):
    s = float(rng.uniform(-0.8, 0.8) * fam.delta)
    th1, th2 = rng.uniform(0.0, 2 * np.pi, size=2)
    ex = analytic_lambda(fam, t, s)
    nu = numeric_pullback(fam, t, th1, th2, s)
    print(f"  t={t:<5g} s={s:+.3f}  a: {ex.a:+.6f}/{nu.a:+.6f}  "
          f"b: {ex.b:+.6f}/{nu.b:+.6f}  c: {ex.c:+.6f}/{nu.c:+.6f}")

print()
print("grid sweep, max scaled disagreement (tolerance 1e-6):")
for t in (0.0, 0.5, 1.0, 1.25):
    err = oracle_agreement_err(fam, t, n_th1=8, n_th2=8, n_s=12)
    print(f"  t={t:<5g} {err:.3e}")
