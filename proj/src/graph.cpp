#include "arbor/graph.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>
#include <string>

namespace arbor {

DirectedMultigraph::DirectedMultigraph(int n) : n_(n), m_(static_cast<size_t>(n) * n, 0) {
    if (n < 1) throw std::invalid_argument("digraph needs at least one vertex");
}

void DirectedMultigraph::set_mult(int u, int v, int count) {
    if (u < 0 || u >= n_ || v < 0 || v >= n_) throw std::invalid_argument("vertex out of range");
    if (u == v) throw std::invalid_argument("loops are not allowed");
    if (count < 0) throw std::invalid_argument("negative multiplicity");
    m_[static_cast<size_t>(u) * n_ + v] = count;
}

void DirectedMultigraph::add_edge(int u, int v, int count) {
    set_mult(u, v, mult(u, v) + count);
}

long long DirectedMultigraph::out_degree(int v) const {
    long long s = 0;
    for (int w = 0; w < n_; w++) s += mult(v, w);
    return s;
}

long long DirectedMultigraph::in_degree(int v) const {
    long long s = 0;
    for (int w = 0; w < n_; w++) s += mult(w, v);
    return s;
}

std::vector<long long> DirectedMultigraph::out_degrees() const {
    std::vector<long long> d(n_);
    for (int v = 0; v < n_; v++) d[v] = out_degree(v);
    return d;
}

std::vector<long long> DirectedMultigraph::in_degrees() const {
    std::vector<long long> d(n_);
    for (int v = 0; v < n_; v++) d[v] = in_degree(v);
    return d;
}

long long DirectedMultigraph::edge_count() const {
    long long s = 0;
    for (int x : m_) s += x;
    return s;
}

bool DirectedMultigraph::is_balanced() const {
    for (int v = 0; v < n_; v++)
        if (out_degree(v) != in_degree(v)) return false;
    return true;
}

namespace {

// DFS over edges with mult > 0; fills reachability from start.
void reach(const DirectedMultigraph& d, int start, bool transpose, std::vector<bool>& seen) {
    std::vector<int> stack{start};
    seen.assign(d.n(), false);
    seen[start] = true;
    while (!stack.empty()) {
        int u = stack.back();
        stack.pop_back();
        for (int v = 0; v < d.n(); v++) {
            int m = transpose ? d.mult(v, u) : d.mult(u, v);
            if (m > 0 && !seen[v]) {
                seen[v] = true;
                stack.push_back(v);
            }
        }
    }
}

}  // namespace

bool DirectedMultigraph::is_strongly_connected() const {
    if (n_ == 1) return true;
    std::vector<bool> seen;
    reach(*this, 0, false, seen);
    if (!std::all_of(seen.begin(), seen.end(), [](bool b) { return b; })) return false;
    reach(*this, 0, true, seen);
    return std::all_of(seen.begin(), seen.end(), [](bool b) { return b; });
}

bool DirectedMultigraph::is_tournament() const {
    for (int u = 0; u < n_; u++)
        for (int v = u + 1; v < n_; v++)
            if (mult(u, v) + mult(v, u) != 1) return false;
    return true;
}

bool DirectedMultigraph::is_simple() const {
    for (int u = 0; u < n_; u++)
        for (int v = u + 1; v < n_; v++)
            if (mult(u, v) + mult(v, u) > 1) return false;
    return true;
}

DirectedMultigraph DirectedMultigraph::reversed() const {
    DirectedMultigraph r(n_);
    for (int u = 0; u < n_; u++)
        for (int v = 0; v < n_; v++)
            if (u != v) r.set_mult(v, u, mult(u, v));
    return r;
}

DirectedMultigraph DirectedMultigraph::induced_subdigraph(const std::vector<int>& vertices) const {
    int k = static_cast<int>(vertices.size());
    DirectedMultigraph s(k);
    for (int i = 0; i < k; i++)
        for (int j = 0; j < k; j++)
            if (i != j) s.set_mult(i, j, mult(vertices[i], vertices[j]));
    return s;
}

UndirectedMultigraph::UndirectedMultigraph(int n) : n_(n), m_(static_cast<size_t>(n) * n, 0) {
    if (n < 1) throw std::invalid_argument("graph needs at least one vertex");
}

void UndirectedMultigraph::set_mult(int u, int v, int count) {
    if (u < 0 || u >= n_ || v < 0 || v >= n_) throw std::invalid_argument("vertex out of range");
    if (u == v) throw std::invalid_argument("loops are not allowed");
    if (count < 0) throw std::invalid_argument("negative multiplicity");
    m_[static_cast<size_t>(u) * n_ + v] = count;
    m_[static_cast<size_t>(v) * n_ + u] = count;
}

void UndirectedMultigraph::add_edge(int u, int v, int count) {
    set_mult(u, v, mult(u, v) + count);
}

long long UndirectedMultigraph::degree(int v) const {
    long long s = 0;
    for (int w = 0; w < n_; w++) s += mult(v, w);
    return s;
}

std::vector<long long> UndirectedMultigraph::degrees() const {
    std::vector<long long> d(n_);
    for (int v = 0; v < n_; v++) d[v] = degree(v);
    return d;
}

long long UndirectedMultigraph::edge_count() const {
    long long s = 0;
    for (int x : m_) s += x;
    return s / 2;
}

bool UndirectedMultigraph::is_connected() const {
    std::vector<bool> seen(n_, false);
    std::vector<int> stack{0};
    seen[0] = true;
    while (!stack.empty()) {
        int u = stack.back();
        stack.pop_back();
        for (int v = 0; v < n_; v++)
            if (mult(u, v) > 0 && !seen[v]) {
                seen[v] = true;
                stack.push_back(v);
            }
    }
    return std::all_of(seen.begin(), seen.end(), [](bool b) { return b; });
}

bool UndirectedMultigraph::all_degrees_even() const {
    for (int v = 0; v < n_; v++)
        if (degree(v) % 2 != 0) return false;
    return true;
}

IntMatrix adjacency(const DirectedMultigraph& d) {
    IntMatrix a(d.n(), d.n());
    for (int u = 0; u < d.n(); u++)
        for (int v = 0; v < d.n(); v++)
            if (u != v) a.at(u, v) = d.mult(u, v);
    return a;
}

IntMatrix laplacian(const DirectedMultigraph& d) {
    IntMatrix l(d.n(), d.n());
    for (int u = 0; u < d.n(); u++) {
        for (int v = 0; v < d.n(); v++)
            if (u != v) l.at(u, v) = -d.mult(u, v);
        l.at(u, u) = d.out_degree(u);
    }
    return l;
}

IntMatrix laplacian(const UndirectedMultigraph& g) {
    IntMatrix l(g.n(), g.n());
    for (int u = 0; u < g.n(); u++) {
        for (int v = 0; v < g.n(); v++)
            if (u != v) l.at(u, v) = -g.mult(u, v);
        l.at(u, u) = g.degree(u);
    }
    return l;
}

IntMatrix skew_adjacency(const DirectedMultigraph& d) {
    if (!d.is_simple())
        throw std::invalid_argument("skew adjacency requires a simple underlying graph");
    IntMatrix m(d.n(), d.n());
    for (int u = 0; u < d.n(); u++)
        for (int v = 0; v < d.n(); v++)
            if (u != v) m.at(u, v) = d.mult(u, v) - d.mult(v, u);
    return m;
}

namespace {

bool iso_extend(const DirectedMultigraph& a, const DirectedMultigraph& b, std::vector<int>& map,
                std::vector<bool>& used, int next,
                const std::vector<std::pair<long long, long long>>& deg_a,
                const std::vector<std::pair<long long, long long>>& deg_b) {
    int n = a.n();
    if (next == n) return true;
    for (int img = 0; img < n; img++) {
        if (used[img] || deg_a[next] != deg_b[img]) continue;
        bool ok = true;
        for (int prev = 0; prev < next && ok; prev++) {
            if (a.mult(next, prev) != b.mult(img, map[prev])) ok = false;
            if (ok && a.mult(prev, next) != b.mult(map[prev], img)) ok = false;
        }
        if (!ok) continue;
        map[next] = img;
        used[img] = true;
        if (iso_extend(a, b, map, used, next + 1, deg_a, deg_b)) return true;
        used[img] = false;
    }
    return false;
}

}  // namespace

bool digraphs_isomorphic(const DirectedMultigraph& a, const DirectedMultigraph& b, int iso_cap) {
    if (a.n() > iso_cap || b.n() > iso_cap)
        throw std::invalid_argument("isomorphism test capped at n = " + std::to_string(iso_cap));
    if (a.n() != b.n()) return false;
    int n = a.n();
    std::vector<std::pair<long long, long long>> deg_a(n), deg_b(n);
    for (int v = 0; v < n; v++) {
        deg_a[v] = {a.out_degree(v), a.in_degree(v)};
        deg_b[v] = {b.out_degree(v), b.in_degree(v)};
    }
    auto sa = deg_a, sb = deg_b;
    std::sort(sa.begin(), sa.end());
    std::sort(sb.begin(), sb.end());
    if (sa != sb) return false;
    std::vector<int> map(n, -1);
    std::vector<bool> used(n, false);
    return iso_extend(a, b, map, used, 0, deg_a, deg_b);
}

}  // namespace arbor
