#include "arbor/counting.hpp"

#include <stdexcept>

#include "arbor/linalg.hpp"

namespace arbor {

std::string quantity_name(Quantity q) {
    switch (q) {
        case Quantity::ArbRooted: return "arb-rooted";
        case Quantity::AllArb: return "allarb";
        case Quantity::Arb: return "arb";
        case Quantity::SpanningTrees: return "sp";
        case Quantity::EulerTours: return "euler-tours";
    }
    return "?";
}

std::string method_name(Method m) {
    switch (m) {
        case Method::Determinant: return "determinant";
        case Method::CharPoly: return "charpoly";
        case Method::BruteForce: return "brute-force";
    }
    return "?";
}

BigInt arb_rooted(const DirectedMultigraph& d, int root) {
    if (root < 0 || root >= d.n()) throw std::invalid_argument("arb_rooted: bad root");
    return minor_det(laplacian(d), root, root);
}

BigInt allarb(const DirectedMultigraph& d) {
    IntMatrix l = laplacian(d);
    BigInt total = 0;
    for (int v = 0; v < d.n(); v++) total += minor_det(l, v, v);
    return total;
}

BigInt allarb_via_charpoly(const DirectedMultigraph& d) {
    int n = d.n();
    IntPolynomial phi = char_poly(laplacian(d));
    // phi(x) = x^n - a_{n-1} x^{n-1} + ... + (-1)^{n-1} a_1 x with
    // a_1 = allarb(D), so the x^1 coefficient is (-1)^{n-1} allarb(D).
    BigInt c1 = phi.coeff(1);
    return (n % 2 == 0) ? BigInt(-c1) : c1;
}

BigInt arb_eulerian(const DirectedMultigraph& d) {
    if (!d.is_balanced()) throw std::invalid_argument("arb_eulerian: digraph is not balanced");
    IntMatrix l = laplacian(d);
    BigInt first = minor_det(l, 0, 0);
    for (int v = 1; v < d.n(); v++)
        if (minor_det(l, v, v) != first)
            throw std::logic_error("arb_eulerian: rooted counts disagree on a balanced digraph");
    return first;
}

BigInt spanning_trees(const UndirectedMultigraph& g) {
    return minor_det(laplacian(g), g.n() - 1, g.n() - 1);
}

BigInt eulerian_tours(const DirectedMultigraph& d) {
    if (!d.is_balanced()) throw std::invalid_argument("eulerian_tours: digraph is not balanced");
    if (!d.is_strongly_connected())
        throw std::invalid_argument("eulerian_tours: digraph is not strongly connected");
    BigInt t = arb_eulerian(d);
    for (int v = 0; v < d.n(); v++) {
        long long dv = d.out_degree(v);
        if (dv > 0) t *= factorial(static_cast<unsigned long>(dv - 1));
    }
    return t;
}

BigInt brute_force_arb(const DirectedMultigraph& d, int root) {
    int n = d.n();
    if (root < 0 || root >= n) throw std::invalid_argument("brute_force_arb: bad root");
    if (n > 10) throw std::invalid_argument("brute_force_arb: n exceeds cap 10");

    // per non-root vertex, its out-neighbors with multiplicity
    std::vector<std::vector<int>> choices(n);
    for (int u = 0; u < n; u++) {
        if (u == root) continue;
        for (int v = 0; v < n; v++)
            for (int c = 0; c < d.mult(u, v); c++) choices[u].push_back(v);
        if (choices[u].empty()) return 0;
    }
    long long combos = 1;
    for (int u = 0; u < n; u++) {
        if (u == root) continue;
        combos *= static_cast<long long>(choices[u].size());
        if (combos > 10000000LL) throw std::invalid_argument("brute_force_arb: choice space exceeds cap 10^7");
    }

    std::vector<int> pick(n, 0);
    std::vector<int> succ(n, -1);
    std::vector<int> mark(n, -1);
    BigInt count = 0;
    while (true) {
        for (int u = 0; u < n; u++)
            if (u != root) succ[u] = choices[u][pick[u]];
        // arborescence iff every walk along succ reaches the root; a walk
        // that re-enters its own trail closed a cycle (the root has no
        // successor, so it can never be inside one)
        bool ok = true;
        std::fill(mark.begin(), mark.end(), -1);
        mark[root] = n;
        for (int u = 0; u < n && ok; u++) {
            int w = u;
            while (mark[w] == -1) {
                mark[w] = u;
                w = succ[w];
            }
            if (mark[w] == u) ok = false;
        }
        if (ok) count += 1;

        int u = 0;
        while (u < n) {
            if (u == root) {
                u++;
                continue;
            }
            if (++pick[u] < static_cast<int>(choices[u].size())) break;
            pick[u] = 0;
            u++;
        }
        if (u >= n) break;
    }
    return count;
}

bool j_perturbation_check(const DirectedMultigraph& d, long alpha) {
    if (alpha <= 0) throw std::invalid_argument("j_perturbation_check: alpha must be positive");
    int n = d.n();
    IntMatrix m = laplacian(d) + BigInt(alpha) * IntMatrix::all_ones(n);
    return det(m) == BigInt(n) * BigInt(alpha) * allarb(d);
}

BigInt arb_via_skew_charpoly(const DirectedMultigraph& t) {
    int n = t.n();
    if (!t.is_tournament()) throw std::invalid_argument("arb_via_skew_charpoly: not a tournament");
    if (n % 2 == 0) throw std::invalid_argument("arb_via_skew_charpoly: n must be odd");
    long long d = (n - 1) / 2;
    for (int v = 0; v < n; v++)
        if (t.out_degree(v) != d)
            throw std::invalid_argument("arb_via_skew_charpoly: tournament is not regular");

    BigInt value = eval_poly(char_poly(skew_adjacency(t)), BigInt(n));
    BigInt denom = BigInt(n) * BigInt(n) * pow2(n - 1);
    BigInt q, r;
    mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), value.get_mpz_t(), denom.get_mpz_t());
    if (r != 0) throw std::logic_error("arb_via_skew_charpoly: division not exact");
    return q;
}

}  // namespace arbor
