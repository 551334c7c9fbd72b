#pragma once

#include <vector>

#include "arbor/matrix.hpp"

namespace arbor {

// Directed multigraph on vertices 0..n-1, stored as a dense multiplicity
// matrix: mult(u,v) = number of directed edges u->v. Loops are rejected.
// Values are immutable once built except through set_mult during
// construction; there is no interior mutation after sharing.
class DirectedMultigraph {
  public:
    explicit DirectedMultigraph(int n);

    int n() const { return n_; }
    int mult(int u, int v) const { return m_[static_cast<size_t>(u) * n_ + v]; }
    void set_mult(int u, int v, int count);
    void add_edge(int u, int v, int count = 1);

    long long out_degree(int v) const;
    long long in_degree(int v) const;
    std::vector<long long> out_degrees() const;
    std::vector<long long> in_degrees() const;
    long long edge_count() const;

    bool is_balanced() const;
    bool is_strongly_connected() const;
    bool is_tournament() const;
    // underlying graph simple: mult(u,v) + mult(v,u) <= 1 for all pairs
    bool is_simple() const;

    DirectedMultigraph reversed() const;
    DirectedMultigraph induced_subdigraph(const std::vector<int>& vertices) const;

    friend bool operator==(const DirectedMultigraph& a, const DirectedMultigraph& b) {
        return a.n_ == b.n_ && a.m_ == b.m_;
    }

  private:
    int n_;
    std::vector<int> m_;
};

// Undirected multigraph: symmetric multiplicity matrix, zero diagonal.
class UndirectedMultigraph {
  public:
    explicit UndirectedMultigraph(int n);

    int n() const { return n_; }
    int mult(int u, int v) const { return m_[static_cast<size_t>(u) * n_ + v]; }
    // sets both (u,v) and (v,u)
    void set_mult(int u, int v, int count);
    void add_edge(int u, int v, int count = 1);

    long long degree(int v) const;
    std::vector<long long> degrees() const;
    long long edge_count() const;

    bool is_connected() const;
    bool all_degrees_even() const;

    friend bool operator==(const UndirectedMultigraph& a, const UndirectedMultigraph& b) {
        return a.n_ == b.n_ && a.m_ == b.m_;
    }

  private:
    int n_;
    std::vector<int> m_;
};

IntMatrix adjacency(const DirectedMultigraph& d);
// L(D) = diag(out-degrees) - A(D); every row sums to zero.
IntMatrix laplacian(const DirectedMultigraph& d);
IntMatrix laplacian(const UndirectedMultigraph& g);
// M(D) = A(D) - A(D)^T; requires the underlying graph simple.
IntMatrix skew_adjacency(const DirectedMultigraph& d);

// Brute-force isomorphism with degree-sequence pruning. Throws when either
// graph exceeds the cap.
bool digraphs_isomorphic(const DirectedMultigraph& a, const DirectedMultigraph& b, int iso_cap = 10);

}  // namespace arbor
