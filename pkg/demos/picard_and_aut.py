"""Real line bundles and automorphism groups of Real Hopf surfaces.

    python demos/picard_and_aut.py
"""
import numpy as np

from hopfreal import autgroup as ag
from hopfreal import picard as pc
from hopfreal import realstruct as rs
from hopfreal import sampling as sp
from hopfreal.contractions import Contraction


def main():
    f_even, f_odd = Contraction("III", delta=0.5, r=2), Contraction("IV", alpha=0.25)
    print("Real structures on L_zeta (circle of lifts nu phi_0 with |nu| = radius):")
    for parity, f in (("even", f_even), ("odd", f_odd)):
        s = rs.canonical_structure(f, parity)
        for zeta in (-2.0, 4.0):
            datum = pc.real_structures_on_line_bundle(parity, zeta)
            status = datum.to_json()["status"]
            radius = status["circle_radius"] if isinstance(status, dict) else None
            check = pc.verify_bundle_involution(f, s, zeta, radius) if radius else "-"
            print("  %-4s zeta=%5.1f -> %-24s simulated involution: %s" % (parity, zeta, status, check))
    for parity in ("even", "odd"):
        print("  Pic_R, %s: %s" % (parity, pc.pic_real_group(parity)["presentation"]))

    print("\nAutomorphism groups:")
    for f, parity in ((Contraction("IV", alpha=0.5), "even"), (Contraction("IIc", alpha=0.3, delta=0.5), "even"),
                      (Contraction("IIcPrime", alpha=0.3 + 0.4j), "even"), (Contraction("IV", alpha=-0.5), "odd")):
        d = ag.real_automorphism_group(f, rs.canonical_structure(f, parity))
        print("  %-10s %-4s %s" % (f.cls, parity, d["presentation"]))

    rng = np.random.default_rng(0)
    f = Contraction("IV", alpha=0.5)
    g = sp.random_commutant(rng, f).underlying
    rep = ag.canonical_rep(f, g)
    print("\nCanonical representative of a random GL(2,C) element modulo <f>: |det| = %.4f in [0.25, 1)"
          % abs(np.linalg.det(rep.underlying.matrix())))
    A = sp.random_quaternionic(rng)
    rho, U = ag.spinc_witness(A)
    print("Spin^c witness of a random R+ . SU(2) element: rho = %.4f, det U = %.4f" % (rho, np.linalg.det(U).real))


if __name__ == "__main__":
    main()
