#pragma once

#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

#include "arbor/graph.hpp"
#include "arbor/numeric.hpp"

namespace arbor {

enum class Objective { MinArb, MaxArb, MinAllArb, MaxAllArb };

std::string objective_name(Objective o);

struct BudgetExceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct SearchOptions {
    int jobs = 1;
    bool iso_dedup = false;
    // refuse searches whose orientation-space upper bound exceeds this
    BigInt budget = BigInt(1000000000);
    int iso_cap = 10;
};

struct SearchResult {
    Objective objective;
    BigInt optimum;
    // every witness attains the optimum; pairwise non-isomorphic when
    // deduped, labeled otherwise
    std::vector<DirectedMultigraph> witnesses;
    // number of candidates examined (balanced orientations / tournaments)
    BigInt space_size;
    bool deduped = false;
    // set when dedup was requested but witnesses exceed the iso cap
    bool dedup_skipped = false;
};

// Visits every balanced orientation of G exactly once, in a deterministic
// order (pairs in lexicographic order, one split per pair, pruning on
// imbalance vs remaining incident edges). Requires all degrees even. The
// visitor returns false to stop early.
void enumerate_eulerian_orientations(const UndirectedMultigraph& g,
                                     const std::function<bool(const DirectedMultigraph&)>& visit,
                                     const BigInt& budget = BigInt(1000000000));

// All 2^C(n,2) labeled tournaments, n <= 6.
void enumerate_tournaments(int n, const std::function<bool(const DirectedMultigraph&)>& visit);

// Optimum of arb over balanced orientations of G (MinArb / MaxArb).
SearchResult extremal_eulerian(const UndirectedMultigraph& g, Objective obj,
                               const SearchOptions& opts = {});

// Optimum of allarb over all labeled tournaments (MinAllArb / MaxAllArb).
SearchResult extremal_tournament(int n, Objective obj, const SearchOptions& opts = {});

struct CheckLine {
    std::string name;
    bool passed;
    std::string detail;
};

struct TheoremReport {
    std::string theorem;
    bool passed;
    std::vector<CheckLine> checks;
};

std::vector<std::string> known_theorems();

// Binds constructors, bound evaluators and (when feasible) exhaustive search
// into a pass/fail report for one of the named theorems. max_n limits the
// exhaustive parts.
TheoremReport verify_theorem(const std::string& theorem, int max_n, const SearchOptions& opts = {});

}  // namespace arbor
