"""Classify a contraction, decide which Real structures exist, and normalize lifts.

    python demos/classify_and_normalize.py
"""
import numpy as np

from hopfreal import polymap as pm
from hopfreal import realstruct as rs
from hopfreal import sampling as sp
from hopfreal.contractions import classify, structural_flags


def main():
    rng = np.random.default_rng(0)
    maps = {
        "diag(0.5, 0.5)": pm.diag(0.5, 0.5),
        "diag(0.25, 0.5)": pm.diag(0.25, 0.5),
        "(0.25 z + w^2, 0.5 w)": pm.triangular(0.25, 1.0, 2, 0.5),
        "diag(0.3+0.4i, 0.3-0.4i)": pm.diag(0.3 + 0.4j, 0.3 - 0.4j),
        "diag(-0.3, 0.5)": pm.diag(-0.3, 0.5),
        "diag(-0.25, -0.25)": pm.diag(-0.25, -0.25),
    }
    for label, m in maps.items():
        f = classify(m)
        print("%-26s -> %s" % (label, f.to_json()))
        print("    flags:     %s" % structural_flags(f))
        print("    existence: %s" % rs.existence(f))
        for parity in ("even", "odd"):
            if not rs.existence(f)[parity + "_exists"]:
                continue
            base = rs.canonical_lift(f, parity)
            phi = sp.random_even_lift(rng, f) if parity == "even" else sp.random_odd_lift(rng, f)
            # hide the lift in another deck power: phi o f^2
            phi = pm.compose(phi, pm.power(f.polymap(), 2))
            spec, psi = rs.normalize(f, phi)
            reduced = rs.reduce_lift(f, phi, spec.deck_power)
            resid = pm.max_coeff_diff(pm.compose(psi, pm.compose(base, pm.invert(psi))), reduced)
            print("    %s lift: deck power %d, model %s, |psi o canonical o psi^-1 - phi| = %.1e"
                  % (parity, spec.deck_power, spec.model, resid))


if __name__ == "__main__":
    main()
