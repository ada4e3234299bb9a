"""Distance-based descriptors of a connected graph, by two independent routes.

For a connected graph G with d(G,k) unordered vertex pairs at distance k:

    H(G,x)  = sum_k d(G,k) x^k          (Hosoya polynomial, d(G,0) = n)
    W(G)    = sum over pairs of d(u,v)  (Wiener index)
    WW(G)   = sum over pairs of d(d+1)/2  (hyper-Wiener index)

and the edge versions H_e, W_e, WW_e are the same constructions over edge
pairs, where edge distance is vertex distance in the line graph. The direct
pair sums must agree with the derivative route:

    W(G)  = H'(G,1)
    WW(G) = H'(G,1) + H''(G,1)/2

and identically for the edge versions via H_e. Both routes are implemented
here; index_identity_discrepancies cross-checks them on demand.
"""

from collections import Counter
from dataclasses import dataclass

from .graphs import bfs_distances, line_graph
from .polynomials import Polynomial
from .errors import OddSecondDerivativeError


@dataclass(frozen=True)
class IndexReport:
    """All six descriptors of one graph, computed from shared BFS tables."""

    wiener: int
    edge_wiener: int
    hyper_wiener: int
    edge_hyper_wiener: int
    hosoya: Polynomial
    edge_hosoya: Polynomial


def _distribution_and_sums(g):
    """One BFS sweep: distance counts plus the direct pair sums.

    Returns (polynomial, wiener, hyper_wiener) where the polynomial is the
    Hosoya polynomial of g. Only targets above the source index are tallied
    so every unordered pair contributes exactly once; the hyper-Wiener sum
    uses the per-pair integer term d(d+1)/2, never rational arithmetic.
    """
    tally = Counter()
    w = 0
    ww = 0
    for src in range(g.n):
        tail = bfs_distances(g, src)[src + 1 :]
        tally.update(tail)
        w += sum(tail)
        ww += sum(d * (d + 1) // 2 for d in tail)
    counts = [0] * (max(tally) + 1 if tally else 1)
    counts[0] = g.n
    for k, c in tally.items():
        counts[k] = c
    return Polynomial(counts), w, ww


def hosoya_polynomial(g):
    """H(G,x): coefficient k counts vertex pairs at distance k; H(G,0) = n."""
    poly, _, _ = _distribution_and_sums(g)
    return poly


def edge_hosoya_polynomial(g):
    """H_e(G,x) = H(L(G),x); the zero polynomial when g has no edges."""
    if g.m == 0:
        return Polynomial()
    lg, _ = line_graph(g)
    return hosoya_polynomial(lg)


def wiener(g):
    """W(G): direct sum of d(u,v) over unordered vertex pairs."""
    total = 0
    for src in range(g.n):
        total += sum(bfs_distances(g, src)[src + 1 :])
    return total


def edge_wiener(g):
    """W_e(G) = W(L(G)); 0 when g has no edges."""
    if g.m == 0:
        return 0
    lg, _ = line_graph(g)
    return wiener(lg)


def hyper_wiener(g):
    """WW(G): direct sum of d(d+1)/2 over unordered vertex pairs."""
    total = 0
    for src in range(g.n):
        total += sum(d * (d + 1) // 2 for d in bfs_distances(g, src)[src + 1 :])
    return total


def edge_hyper_wiener(g):
    """WW_e(G) = WW(L(G)); 0 when g has no edges."""
    if g.m == 0:
        return 0
    lg, _ = line_graph(g)
    return hyper_wiener(lg)


def hyper_wiener_from_polynomial(h):
    """The derivative route WW = H'(1) + H''(1)/2, exactly.

    H''(1) must be even or the input was not a distance polynomial; the
    division is plain integer halving, never a rounding decision.
    """
    first = h.derivative()
    h1 = first.evaluate(1)
    h2 = first.derivative().evaluate(1)
    if h2 % 2:
        raise OddSecondDerivativeError(
            f"H''(1) = {h2} is odd; not a valid distance polynomial"
        )
    return h1 + h2 // 2


def index_report(g):
    """Compute all six descriptors sharing one BFS sweep per graph.

    The vertex sweep feeds both H and the direct W/WW sums; the line-graph
    sweep feeds the edge versions. Cross-route identity checks are not run
    here; see index_identity_discrepancies.
    """
    hosoya, w, ww = _distribution_and_sums(g)
    if g.m == 0:
        edge_hosoya, we, wwe = Polynomial(), 0, 0
    else:
        lg, _ = line_graph(g)
        edge_hosoya, we, wwe = _distribution_and_sums(lg)
    return IndexReport(
        wiener=w,
        edge_wiener=we,
        hyper_wiener=ww,
        edge_hyper_wiener=wwe,
        hosoya=hosoya,
        edge_hosoya=edge_hosoya,
    )


def index_identity_discrepancies(report):
    """Compare the report's direct sums against the derivative route.

    Returns human-readable discrepancy messages; empty on a correct
    implementation.
    """
    h, he = report.hosoya, report.edge_hosoya
    checks = [
        ("wiener vs H'(1)", report.wiener, h.derivative().evaluate(1)),
        ("edge_wiener vs H_e'(1)", report.edge_wiener, he.derivative().evaluate(1)),
        (
            "hyper_wiener vs H'(1) + H''(1)/2",
            report.hyper_wiener,
            hyper_wiener_from_polynomial(h),
        ),
        (
            "edge_hyper_wiener vs H_e'(1) + H_e''(1)/2",
            report.edge_hyper_wiener,
            hyper_wiener_from_polynomial(he),
        ),
    ]
    return [
        f"{name}: direct {direct} != derivative {derived}"
        for name, direct, derived in checks
        if direct != derived
    ]
