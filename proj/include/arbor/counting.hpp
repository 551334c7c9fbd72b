#pragma once

#include <string>

#include "arbor/graph.hpp"
#include "arbor/numeric.hpp"

namespace arbor {

enum class Quantity { ArbRooted, AllArb, Arb, SpanningTrees, EulerTours };
enum class Method { Determinant, CharPoly, BruteForce };

struct CountResult {
    Quantity kind;
    BigInt value;
    Method method;
};

std::string quantity_name(Quantity q);
std::string method_name(Method m);

// Tutte's matrix-tree theorem: arborescences rooted at v, all tree edges
// oriented toward the root.
BigInt arb_rooted(const DirectedMultigraph& d, int root);

// Sum of arb_rooted over all roots.
BigInt allarb(const DirectedMultigraph& d);

// Same quantity through the x^1 coefficient of the Laplacian characteristic
// polynomial (the product of its nonzero eigenvalues). Cross-check route.
BigInt allarb_via_charpoly(const DirectedMultigraph& d);

// Common rooted count of a balanced digraph. Requires is_balanced; computes
// all n rooted determinants and throws std::logic_error if they disagree
// (that would be a construction bug, not a math possibility).
BigInt arb_eulerian(const DirectedMultigraph& d);

// Kirchhoff's matrix-tree theorem.
BigInt spanning_trees(const UndirectedMultigraph& g);

// BEST theorem: arb(D) * prod_v (d+(v)-1)!. Requires balanced and strongly
// connected.
BigInt eulerian_tours(const DirectedMultigraph& d);

// Enumeration oracle: one out-edge choice per non-root vertex, counting the
// choices that form an arborescence to the root (parallel edges count
// separately). Caps: n <= 10 and product of out-degrees <= 10^7.
BigInt brute_force_arb(const DirectedMultigraph& d, int root);

// Lemma: det(L(D) + alpha*J) = n * alpha * allarb(D). Evaluates both sides.
bool j_perturbation_check(const DirectedMultigraph& d, long alpha);

// arb of a regular tournament via phi_{M(T)}(n) / (n^2 2^(n-1)). Requires a
// d-regular tournament on n = 2d+1 vertices; throws std::logic_error if the
// division is not exact.
BigInt arb_via_skew_charpoly(const DirectedMultigraph& t);

}  // namespace arbor
