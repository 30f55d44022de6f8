"""Which right-hand side is tighter?  Paired comparisons on shared draws.

Run:  python3 demos/sharpness_survey.py
"""

import numpy as np

from numrad import CampaignConfig, sharpness_compare

EX_A = np.array([[1, 2], [3, 0]], dtype=complex)
EX_B = np.array([[3, 4], [1, 5]], dtype=complex)
EX_X = np.array([[1, 2], [0, 1]], dtype=complex)


def show(rep, note=""):
    print(f"{rep.bound_a} vs {rep.bound_b}:  "
          f"wins {rep.wins_a}/{rep.wins_b}, ties {rep.ties}, "
          f"skipped {rep.skipped}, mean gap {rep.mean_gap:+.4f}"
          + (f"   <- {note}" if note else ""))


def main():
    cfg = CampaignConfig(trials=150, dims=(2, 3, 4), seed=11)

    print("Symmetrized-product family (same lhs, three coefficients)")
    show(sharpness_compare("B16b", "B16a", cfg),
         "norm-product beats the arithmetic-mean coefficient")
    show(sharpness_compare("B16b", "B17", cfg),
         "and always beats the classical 2||A||||B||")
    print()

    print("Block refinement against the Schwarz-type bound")
    show(sharpness_compare("B14", "B05", cfg),
         "positive gap = B14 rhs is the smaller one")
    fixed = sharpness_compare("B14", "B05", inputs=(EX_A, EX_B, EX_X))
    print(f"  on the fixed reference inputs: "
          f"B14 rhs = {fixed.pairs[0][0]:.4f}, "
          f"B05 rhs = {fixed.pairs[0][1]:.4f}, gap = {fixed.mean_gap:.4f}")
    print()

    print("A cautionary comparison")
    show(sharpness_compare("B08", "B05", cfg))
    print("  B08's right side is usually far below B05's -- it is")
    print("  'sharper' than the numerical radius itself allows, which is")
    print("  exactly why campaigns falsify it.  A tighter rhs is only an")
    print("  improvement if the inequality still holds.")


if __name__ == "__main__":
    main()
