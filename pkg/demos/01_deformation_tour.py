"""Tour of the deformation family.

Walks the parameter t from 0 through 1 into the overtwisted range and
prints, for each surface, the wedge-coefficient classification, the
open-book sign profile, and (for t > 1) the tube interval where the
dth1 coefficient of the restricted form is non-positive.
"""

import numpy as np

from reebdeform import ProfileFamily, classify, lutz_tube
from reebdeform.family import InconsistencyError, openbook_sign_profile

fam = ProfileFamily()

print("t      verdict            min|W|     max|W|")
for t in [0.0, 0.25, 0.5, 0.75, 0.9, 1.0, 1.1, 1.25, 1.4]:
    try:
        rep = classify(fam, t)
        print(f"{t:<6g} {rep.verdict:<18} {rep.min_abs_wedge:.3e}  {rep.max_abs_wedge:.3e}")
    except InconsistencyError as exc:
        # for t > 1 the wedge is positive in a small window around s = 0
        # ((1-t)^2 u'(0)/2 at the center) and negative elsewhere
        print(f"{t:<6g} mixed signs        {exc.n_pos}+ / {exc.n_neg}- of 201 samples")

print()
print("open-book coefficient x' - y' (positive fraction of 201 samples):")
for t in [0.0, 0.5, 0.9, 1.25]:
    prof = openbook_sign_profile(fam, t)
    print(f"  t={t:<5g} {prof.count(1)}/{len(prof)} positive")

print()
print("tube {x_t <= 0} for t > 1:")
for t in [1.1, 1.25, 1.4]:
    lo, hi = lutz_tube(fam, t).tube_interval
    print(f"  t={t:<5g} s in [{lo:.4f}, {hi:.4f}]  width {hi - lo:.4f}")
