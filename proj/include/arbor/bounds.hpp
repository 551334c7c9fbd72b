#pragma once

#include <optional>
#include <string>
#include <vector>

#include "arbor/graph.hpp"
#include "arbor/numeric.hpp"

namespace arbor {

enum class BoundId {
    LbTournament,   // LB-TOURN
    LbEulerKn,      // LB-EULER-KN
    UbTrivial,      // UB-TRIVIAL
    UbFrobenius,    // UB-FROB
    UbMaxDeg,       // UB-MAXDEG
    UbHadamard,     // UB-HADAMARD
    LbKnm,          // LB-KNM
    LbSpTree,       // LB-SPTREE
};

std::string bound_id_name(BoundId id);

struct BoundReport {
    BoundId id;
    std::string instance;
    BigInt quantity;   // the exact count being bounded
    BigRat bound;      // exact bound value; on quantity^2 when squared is set
    bool squared;      // true for the Frobenius/max-degree family (fractional
                       // exponents cleared by squaring)
    bool satisfied;
    bool tight;
};

// (1/n)(prod(d_k+1) + prod d_k). Degrees must sum to C(n,2).
BigRat lb_tournament(const std::vector<long long>& out_degrees);

// (1/n^2)(((n+1)/2)^n + ((n-1)/2)^n) for odd n.
BigRat lb_eulerian_tournament(int n);

// sum_k prod_{j != k} d_j.
BigInt ub_trivial(const std::vector<long long>& out_degrees);

// allarb(D)^2 (n-1)^(n-1) <= (sum (d+)^2 + m)^(n-1), exact integers.
BoundReport ub_frobenius_holds(const DirectedMultigraph& d);

// allarb(D)^2 (n-1)^(n-1) <= n^(n-1) ((max d+)^2 + max d+)^(n-1).
BoundReport ub_maxdeg_holds(const DirectedMultigraph& d);

// (1/n)(n(n+1)/4)^((n-1)/2) for odd n.
BigRat ub_hadamard(int n);

// (m/2)^(n-1) (n/2)^(m-1) for even n, m.
BigInt lb_knm(int n, int m);

// sp(G) / 2^(n-1).
BigRat lb_sptree(const UndirectedMultigraph& g);

// (1/2^m) sum over all 2^m orientations of allarb  ==  n/2^(n-1) * sp(G).
// Orientations are per-edge, so each distinct directed multigraph is
// weighted by a product of binomials. Gated at m <= 22 edges.
bool averaging_identity_holds(const UndirectedMultigraph& g);

// No 4-vertex induced subtournament with skew-adjacency determinant 9.
bool is_locally_transitive(const DirectedMultigraph& t);

// phi_{M(T)}(x) == ((x+1)^n + (x-1)^n)/2, exact polynomial comparison.
bool locally_transitive_charpoly_check(const DirectedMultigraph& t);

// Every even-size principal minor of M(T) equals 1. Subset scan, capped.
bool even_minors_all_one(const DirectedMultigraph& t, int cap = 12);

// 4 A A^T == (n+1) I + (n-3) J, exact.
bool is_hadamard_tournament(const DirectedMultigraph& t);

// Cyclic vertex ordering such that every edge (u,v) dominates the vertices
// between u and v (Huang's characterization of locally transitive
// tournaments). Brute-force over circular orderings, n <= cap; the returned
// ordering is re-verified before return.
std::optional<std::vector<int>> huang_cyclic_order(const DirectedMultigraph& t, int cap = 10);

}  // namespace arbor
