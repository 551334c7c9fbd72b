#pragma once

#include <cstdint>

#include "arbor/graph.hpp"

namespace arbor {

// Swirl tournament SW_n, n = 2d+1 odd: vertex i beats i+1..i+d (mod n).
DirectedMultigraph swirl(int n);

// Transitive tournament TR_n: i -> j iff i < j (source-first labeling).
DirectedMultigraph transitive(int n);

// Paley tournament: q prime, q = 3 (mod 4); i -> j iff j - i is a nonzero
// quadratic residue mod q. q capped at 10^4.
DirectedMultigraph paley(long q);

UndirectedMultigraph complete_graph(int n);
UndirectedMultigraph complete_bipartite(int n, int m);

// Minimizing Eulerian orientation of K_{n,m} (n, m even): an oriented
// 4-cycle with alternate vertices blown up to n/2 and m/2. Left side first
// in blocks of n/2, right side after in blocks of m/2; orientation
// X1 -> Y1 -> X2 -> Y2 -> X1.
DirectedMultigraph bipartite_blowup_minimizer(int n, int m);

// Double every multiplicity.
UndirectedMultigraph doubled(const UndirectedMultigraph& g);

// For a double graph: orient half of each pair's edges each way. Requires
// every multiplicity even; satisfies 2 L(D) = L(G).
DirectedMultigraph symmetric_orientation(const UndirectedMultigraph& g);

// Seed-deterministic generators for property tests.
DirectedMultigraph random_tournament(int n, std::uint64_t seed);
DirectedMultigraph random_orientation(const UndirectedMultigraph& g, std::uint64_t seed);

// Balanced orientation: orient an Eulerian circuit of each component, then
// reverse 10*|E| randomly chosen directed cycles. Requires all degrees even.
DirectedMultigraph random_eulerian_orientation(const UndirectedMultigraph& g, std::uint64_t seed);

}  // namespace arbor
