"""Build the equivariant charts H_f -> S^1 x S^3 for every route and measure them.

    python demos/charts.py
"""
import numpy as np

from hopfreal import polymap as pm
from hopfreal import realstruct as rs
from hopfreal import sampling as sp
from hopfreal import topology as tp
from hopfreal.contractions import Contraction

CASES = [
    ("even positive", Contraction("IIa", delta=0.5, r=2), "even"),
    ("even one negative", Contraction("IIc", alpha=0.5, delta=-0.6), "even"),
    ("even two negative", Contraction("IV", alpha=-0.5), "even"),
    ("even II'c", Contraction("IIcPrime", alpha=0.3 + 0.4j), "even"),
    ("odd positive", Contraction("III", delta=0.5, r=2), "odd"),
    ("odd II'c", Contraction("IIcPrime", alpha=0.3 + 0.4j), "odd"),
    ("odd IV negative", Contraction("IV", alpha=-0.25), "odd"),
]


def main():
    rng = np.random.default_rng(0)
    Y = sp.random_points(rng, 1000)
    print("%-18s %-10s %-24s %-12s %-10s %s" % ("case", "model", "route", "equivar.", "orbit", "locus"))
    for label, f, parity in CASES:
        s = rs.canonical_structure(f, parity)
        chart = tp.build_chart(f, s)
        X = chart.forward(Y)
        equiv = tp.chart_distance(chart.forward(pm.evaluate(s.lift, Y)), tp.model_involution(chart.model, X)).max()
        orbit = tp.chart_distance(chart.forward(pm.evaluate(f.polymap(), Y)), X).max()
        locus = tp.real_locus(f, s)["locus"]
        print("%-18s %-10s %-24s %-12.1e %-10.1e %s" % (label, chart.model, chart.route, equiv, orbit, locus))


if __name__ == "__main__":
    main()
