"""Regular dendrimers and their closed-form edge descriptors.

A regular dendrimer of degree d grows from a single center: generation 1
attaches d leaves to the center, and each later generation attaches d-1 new
leaves to every current leaf. After k generations every internal vertex has
degree d and every leaf sits at depth k, for

    n = 1 + d ((d-1)^k - 1) / (d-2)

vertices. The edge-Hosoya polynomial, edge-Wiener and edge-hyper-Wiener
index of these trees have closed forms, evaluated here entirely in exact
integers: every division is asserted to leave no remainder, so a
NonIntegralResultError can only mean an implementation bug.
"""

from dataclasses import dataclass
from math import comb

from .errors import NonIntegralResultError
from .graphs import graph_from_edge_list, single_vertex_graph
from .indices import hosoya_polynomial
from .polynomials import Polynomial
from .trees import Tree


@dataclass(frozen=True)
class DendrimerParams:
    """Generation count k >= 0 and branching degree d >= 3.

    Degree 2 would be a plain path and is rejected; paths are reachable
    through the general tree API, and the closed forms divide by d - 2.
    """

    generations: int
    degree: int

    def __post_init__(self):
        if self.generations < 0:
            raise ValueError("generation count must be >= 0")
        if self.degree < 3:
            raise ValueError("degree must be >= 3 (degree 2 is a path)")

    @property
    def vertex_count(self):
        k, d = self.generations, self.degree
        return 1 + d * _exact_div((d - 1) ** k - 1, d - 2)

    @property
    def leaf_count(self):
        k, d = self.generations, self.degree
        if k == 0:
            return 1
        return d * (d - 1) ** (k - 1)


def _exact_div(numerator, denominator):
    quotient, remainder = divmod(numerator, denominator)
    if remainder:
        raise NonIntegralResultError(
            f"{numerator} is not divisible by {denominator}"
        )
    return quotient


def generate_dendrimer(params):
    """Build the dendrimer tree breadth-first from the center.

    Vertex labels are 0..n-1 in generation-major order (center is 0), with
    a fixed child order, so the labeling is reproducible.
    """
    k, d = params.generations, params.degree
    if k == 0:
        return Tree(single_vertex_graph(0))
    edges = []
    next_label = 1
    frontier = [0]
    for generation in range(1, k + 1):
        children_per_vertex = d if generation == 1 else d - 1
        grown = []
        for parent in frontier:
            for _ in range(children_per_vertex):
                edges.append((parent, next_label))
                grown.append(next_label)
                next_label += 1
        frontier = grown
    return Tree(graph_from_edge_list(edges))


def dendrimer_edge_hosoya(params):
    """Closed-form edge-Hosoya polynomial, degree 2k-1 (zero for k = 0).

    Even coefficients count edge pairs whose path midpoint is a vertex,
    odd ones pairs meeting at a branching vertex, summed per generation
    ring i = 0..k-1 with weight (d-1)^(2i).
    """
    k, d = params.generations, params.degree
    coeffs = [0] * (2 * k)
    for i in range(k):
        ring = (d - 1) ** (2 * i)
        coeffs[2 * i] = ring * d * _exact_div((d - 1) ** (k - i) - 1, d - 2)
        coeffs[2 * i + 1] = (
            ring
            * comb(d, 2)
            * (d * _exact_div((d - 1) ** (k - i - 1) - 1, d - 2) + 1)
        )
    return Polynomial(coeffs)


def dendrimer_edge_wiener(params):
    """Closed-form edge-Wiener index; the rational expression always divides out."""
    k, d = params.generations, params.degree
    b = d - 1
    numerator = d * (
        2
        - 2 * d
        + b**k * (d * d + 4 * d - 4)
        + b ** (2 * k) * (2 - d * (d + 2) + 2 * (d - 2) * d * k)
    )
    return _exact_div(numerator, 2 * (d - 2) ** 3)


def dendrimer_edge_hyper_wiener(params):
    """Closed-form edge-hyper-Wiener index, exact at any (k, d)."""
    k, d = params.generations, params.degree
    b = d - 1
    numerator = d * (
        2 * (d - 1)
        + b**k * (4 - 5 * d * d)
        + b ** (2 * k)
        * (
            -2
            - 8 * k
            + d * (-2 + 5 * d + 16 * k - d * (d + 4) * k + 2 * (d - 2) ** 2 * k * k)
        )
    )
    return _exact_div(numerator, 2 * (d - 2) ** 4)


def wiener_polynomial(g):
    """The Hosoya polynomial minus its constant term n.

    This variant generating polynomial has zero constant term; for any tree
    T its shift down by one degree equals the edge-Hosoya polynomial of T.
    """
    return hosoya_polynomial(g) - g.n
