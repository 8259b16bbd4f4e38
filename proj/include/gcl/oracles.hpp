// gcl/oracles.hpp -- brute-force ground truth: distance to rho-IndepSet,
// eps-farness certification, and exact sparse-subset search/enumeration.
#pragma once

#include "gcl/graph.hpp"
#include "gcl/rational.hpp"

#include <algorithm>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace gcl {

struct GuardError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Size guards keeping default runs in seconds; override for bigger runs.
struct SearchLimits {
    int max_n_search = 24;    // pruned subset search (distance, sparsest subset)
    int max_n_enumerate = 20; // full 2^n enumeration
};

inline void check_search_guard(int n, const SearchLimits& limits) {
    if (n > limits.max_n_search)
        throw GuardError("exact search refused: n=" + std::to_string(n) + " exceeds guard " +
                         std::to_string(limits.max_n_search) + " (raise the limit to override)");
}
inline void check_enumerate_guard(int n, const SearchLimits& limits) {
    if (n > limits.max_n_enumerate)
        throw GuardError("full enumeration refused: n=" + std::to_string(n) + " exceeds guard " +
                         std::to_string(limits.max_n_enumerate) + " (raise the limit to override)");
}

struct FarnessCertificate {
    Rat rho;
    Int min_edges;       // min of |E(U)| over floor(rho*n)-subsets U
    VertexSet witness;   // lexicographically first minimizer
    Rat eps_far_up_to;   // min_edges / n^2
    bool exact = true;   // false when produced by the upper-bound-only mode
};

namespace detail {

struct SubsetSearch {
    const Graph& g;
    int n, target;
    long budget;       // prune strictly above; updated in min mode
    bool minimize;          // min mode tracks the best; decision mode stops at first hit
    std::vector<int> chosen;
    std::vector<int> chosen_deg; // |N(u) ∩ chosen| for every u, updated incrementally
    long best = -1;
    std::vector<int> best_set;
    bool found = false;

    SubsetSearch(const Graph& g_, int target_, long budget_, bool minimize_)
        : g(g_), n(g_.vertex_count()), target(target_), budget(budget_),
          chosen_deg(n, 0) {
        minimize = minimize_;
    }

    /// Sum of the (target - chosen) smallest chosen-degrees among the suffix:
    /// a lower bound on edges any completion must add.
    long remaining_lower_bound(int pos) {
        int need = target - (int)chosen.size();
        if (need <= 0) return 0;
        scratch.clear();
        for (int u = pos; u < n; ++u) scratch.push_back(chosen_deg[u]);
        std::nth_element(scratch.begin(), scratch.begin() + (need - 1), scratch.end());
        long lb = 0;
        for (int i = 0; i < need; ++i) lb += scratch[i];
        return lb;
    }

    // include-first DFS in index order => complete sets visited in
    // lexicographic order, so the first hit at any value is the lex-least
    bool dfs(int pos, long edges) {
        int need = target - (int)chosen.size();
        if (need == 0) {
            if (minimize) {
                if (best == -1 || edges < best) {
                    best = edges;
                    best_set = chosen;
                    found = true;
                }
                return false;
            }
            best = edges;
            best_set = chosen;
            found = true;
            return true;
        }
        if (n - pos < need) return false;
        long cap = minimize ? (best == -1 ? -1 : best - 1) : budget;
        if (cap != -1 && edges + remaining_lower_bound(pos) > cap) return false;

        // include pos
        long added = chosen_deg[pos];
        if (cap == -1 || edges + added <= cap || minimize) {
            chosen.push_back(pos);
            g.neighbors(pos).for_each([&](int u) { ++chosen_deg[u]; });
            bool done = dfs(pos + 1, edges + added);
            g.neighbors(pos).for_each([&](int u) { --chosen_deg[u]; });
            chosen.pop_back();
            if (done) return true;
        }
        // exclude pos
        return dfs(pos + 1, edges);
    }

private:
    std::vector<int> scratch;
};

} // namespace detail

/// Exact minimum of |E(U)| over floor(rho*n)-subsets, with lexicographically
/// least witness. Distance to rho-IndepSet is min_edges / n^2.
inline FarnessCertificate distance_to_indepset(const Graph& g, const Rat& rho,
                                               const SearchLimits& limits = {}) {
    int n = g.vertex_count();
    long target = floor_long(rho * n);
    if (target < 1) throw std::invalid_argument("distance_to_indepset: floor(rho*n) < 1");
    if (target > n) throw std::invalid_argument("distance_to_indepset: rho > 1");
    check_search_guard(n, limits);

    detail::SubsetSearch s(g, (int)target, -1, /*minimize=*/true);
    s.dfs(0, 0);
    VertexSet witness(n);
    for (int v : s.best_set) witness.insert(v);
    Rat upto(s.best, (long)n * n);
    upto.canonicalize();
    return {rho, Int(s.best), witness, upto, true};
}

/// Greedy upper bound (min-degree peeling), for instances above the guard.
/// The certificate is marked non-exact and must not be used to claim farness.
inline FarnessCertificate distance_upper_bound_only(const Graph& g, const Rat& rho) {
    int n = g.vertex_count();
    long target = floor_long(rho * n);
    if (target < 1 || target > n) throw std::invalid_argument("distance_upper_bound_only: bad rho");
    VertexSet s = g.all_vertices();
    while (s.count() > target) {
        int worst = -1, worst_deg = -1;
        s.for_each([&](int v) {
            int d = degree_in(g, v, s);
            if (d > worst_deg) {
                worst_deg = d;
                worst = v;
            }
        });
        s.erase(worst);
    }
    Int edges(edge_count_within(g, s));
    Rat upto(edges, Int((long)n * n));
    upto.canonicalize();
    return {rho, edges, s, upto, false};
}

/// true iff min_edges >= eps*n^2 (exact rational comparison).
inline std::pair<bool, FarnessCertificate> is_eps_far(const Graph& g, const Rat& rho,
                                                      const Rat& eps,
                                                      const SearchLimits& limits = {}) {
    FarnessCertificate cert = distance_to_indepset(g, rho, limits);
    long n = g.vertex_count();
    bool far = Rat(cert.min_edges) >= eps * n * n;
    return {far, std::move(cert)};
}

/// Lexicographically least subset of exactly `size` vertices with at most
/// `budget` induced edges, or nullopt.
inline std::optional<VertexSet> sparsest_subset(const Graph& g, int size, long budget,
                                                const SearchLimits& limits = {}) {
    int n = g.vertex_count();
    if (size < 0 || size > n) throw std::invalid_argument("sparsest_subset: size outside 0..n");
    if (budget < 0) throw std::invalid_argument("sparsest_subset: negative budget");
    check_search_guard(n, limits);
    if (size == 0) return VertexSet(n);

    detail::SubsetSearch s(g, size, budget, /*minimize=*/false);
    s.dfs(0, 0);
    if (!s.found) return std::nullopt;
    VertexSet out(n);
    for (int v : s.best_set) out.insert(v);
    return out;
}

/// The two sparsity predicate forms used by the lemma machinery. The strict
/// "fewer than coeff*|J|^2 edges" form and the "density <= tau" form differ at
/// the boundary, so call sites name which one they mean.
class SparsityPredicate {
public:
    static SparsityPredicate edge_budget(Int budget) {
        SparsityPredicate p;
        p.kind_ = Kind::EdgeBudget;
        p.budget_ = std::move(budget);
        return p;
    }
    static SparsityPredicate edges_below_coeff_sq(Rat coeff) {
        SparsityPredicate p;
        p.kind_ = Kind::EdgesBelowCoeffSq;
        p.coeff_ = std::move(coeff);
        return p;
    }
    static SparsityPredicate density_at_most(Rat tau) {
        SparsityPredicate p;
        p.kind_ = Kind::DensityAtMost;
        p.coeff_ = std::move(tau);
        return p;
    }

    bool test(long edges, int size) const {
        switch (kind_) {
        case Kind::EdgeBudget:
            return Int(edges) <= budget_;
        case Kind::EdgesBelowCoeffSq: // strict, so the empty set never passes
            return Rat(edges) < coeff_ * size * size;
        case Kind::DensityAtMost:
            if (size <= 1) return Rat(0) <= coeff_;
            return Rat(2 * edges) <= coeff_ * size * (size - 1);
        }
        return false;
    }

    /// Can any completion with up to `remaining` extra vertices still pass?
    /// Sound because edges never decrease while the threshold only grows.
    bool feasible(long edges, int size, int remaining) const {
        switch (kind_) {
        case Kind::EdgeBudget:
            return Int(edges) <= budget_;
        case Kind::EdgesBelowCoeffSq: {
            long s = size + remaining;
            return Rat(edges) < coeff_ * s * s;
        }
        case Kind::DensityAtMost: {
            long s = size + remaining;
            if (s <= 1) return Rat(0) <= coeff_;
            return Rat(2 * edges) <= coeff_ * s * (s - 1);
        }
        }
        return false;
    }

    std::string describe() const {
        switch (kind_) {
        case Kind::EdgeBudget:
            return "edges <= " + budget_.get_str();
        case Kind::EdgesBelowCoeffSq:
            return "edges < " + rat_str(coeff_) + "*|J|^2";
        case Kind::DensityAtMost:
            return "density <= " + rat_str(coeff_);
        }
        return "?";
    }

private:
    enum class Kind { EdgeBudget, EdgesBelowCoeffSq, DensityAtMost };
    Kind kind_ = Kind::EdgeBudget;
    Rat coeff_;
    Int budget_;

    SparsityPredicate() = default;
};

/// Visits every subset satisfying the predicate exactly once, in
/// lexicographic order of the sorted member lists.
inline void enumerate_sparse_subsets(const Graph& g, const SparsityPredicate& pred,
                                     const std::function<void(const VertexSet&)>& visit,
                                     const SearchLimits& limits = {}) {
    int n = g.vertex_count();
    check_enumerate_guard(n, limits);
    VertexSet current(n);
    std::vector<int> chosen_deg(n, 0);
    int size = 0;

    // Pre-order over the subset tree (extend with vertices > the last one)
    // emits sets in lexicographic order of their sorted member lists.
    std::function<void(int, long)> rec = [&](int start, long edges) {
        if (pred.test(edges, size)) visit(current);
        for (int v = start; v < n; ++v) {
            long added = chosen_deg[v];
            if (!pred.feasible(edges + added, size + 1, n - v - 1)) continue;
            current.insert(v);
            ++size;
            g.neighbors(v).for_each([&](int u) { ++chosen_deg[u]; });
            rec(v + 1, edges + added);
            g.neighbors(v).for_each([&](int u) { --chosen_deg[u]; });
            --size;
            current.erase(v);
        }
    };
    rec(0, 0);
}

inline std::vector<VertexSet> collect_sparse_subsets(const Graph& g,
                                                     const SparsityPredicate& pred,
                                                     const SearchLimits& limits = {}) {
    std::vector<VertexSet> out;
    enumerate_sparse_subsets(g, pred, [&](const VertexSet& s) { out.push_back(s); }, limits);
    return out;
}

} // namespace gcl
