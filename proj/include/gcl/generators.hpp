// gcl/generators.hpp -- seeded construction of the instance families.
#pragma once

#include "gcl/graph.hpp"
#include "gcl/rational.hpp"
#include "gcl/rng.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace gcl {

struct PlantedInstance {
    Graph graph;
    VertexSet planted;
    std::string family;
    std::map<std::string, std::string> params;
    bool boost_insufficient = false;       // adversarial family only
    std::optional<VertexSet> independent;  // adversarial family: the host set I
    long planted_edges_pre_boost = -1;     // adversarial family: |E(J)| before boosting
};

/// G(n,p): each unordered pair is an edge independently with probability p.
/// Pair order is fixed (u < v, lexicographic), so a seed pins the graph.
inline Graph gnp(int n, const Rat& p, uint64_t seed) {
    if (p < 0 || p > 1) throw std::invalid_argument("gnp: p outside [0,1]");
    Graph g(n);
    SplitMix64 rng(seed);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (rng.bernoulli(p)) g.add_edge(u, v);
    return g;
}

/// A graph close to rho-IndepSet: a uniformly random floor(rho*n) subset whose
/// induced pairs appear with probability sparse_p, all other pairs with p.
inline PlantedInstance planted_close_instance(int n, const Rat& rho, const Rat& p,
                                              const Rat& sparse_p, uint64_t seed) {
    if (rho <= 0 || rho > 1) throw std::invalid_argument("planted_close_instance: rho outside (0,1]");
    if (p < 0 || p > 1 || sparse_p < 0 || sparse_p > 1)
        throw std::invalid_argument("planted_close_instance: probability outside [0,1]");
    if (sparse_p > p)
        throw std::invalid_argument("planted_close_instance: need sparse_p <= p");
    long size = floor_long(rho * n);
    if (size < 1) throw std::invalid_argument("planted_close_instance: floor(rho*n) < 1");

    SplitMix64 rng(seed);
    VertexSet planted = sample_subset(n, (int)size, rng);
    Graph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) {
            bool inside = planted.contains(u) && planted.contains(v);
            if (rng.bernoulli(inside ? sparse_p : p)) g.add_edge(u, v);
        }
    PlantedInstance inst{std::move(g), std::move(planted), "planted_close", {}, false, std::nullopt, -1};
    inst.params = {{"n", std::to_string(n)},
                   {"rho", rat_str(rho)},
                   {"p", rat_str(p)},
                   {"sparse_p", rat_str(sparse_p)},
                   {"seed", std::to_string(seed)}};
    return inst;
}

/// The adversarial construction sketched alongside the log-factor discussion:
/// an independent set I of size floor(rho*n/2) inside G(n, 8*eps/rho^2), a set
/// J inside I of size j_size (default floor(rho*n/100)) carrying a planted
/// G(|J|, eps/rho^2) subgraph, and every vertex of J boosted with extra random
/// edges until J holds the strictly highest degrees. If a vertex of J runs out
/// of non-neighbours before overtaking the rest of the graph the instance is
/// flagged boost_insufficient instead of being silently wrong.
inline PlantedInstance adversarial_log_instance(int n, const Rat& rho, const Rat& eps,
                                                uint64_t seed,
                                                std::optional<long> j_size_opt = std::nullopt) {
    if (rho <= 0 || rho > 1) throw std::invalid_argument("adversarial_log_instance: rho outside (0,1]");
    if (eps <= 0) throw std::invalid_argument("adversarial_log_instance: eps <= 0");
    Rat base_p = 8 * eps / (rho * rho);
    Rat plant_p = eps / (rho * rho);
    if (base_p > 1) throw std::invalid_argument("adversarial_log_instance: 8*eps/rho^2 > 1 infeasible");
    long i_size = floor_long(rho * n / 2);
    long j_size = j_size_opt ? *j_size_opt : floor_long(rho * n / 100);
    if (j_size < 1 || j_size > i_size)
        throw std::invalid_argument("adversarial_log_instance: need 1 <= |J| <= |I| at this n");
    long boost = floor_long(8 * eps * n / (rho * rho));
    if (boost > n - 1) throw std::invalid_argument("adversarial_log_instance: degree boost exceeds n-1");

    SplitMix64 rng(seed);
    VertexSet iset = sample_subset(n, (int)i_size, rng);
    std::vector<int> i_members = iset.to_vector();
    VertexSet jset(n);
    {
        // J = a uniform j_size-subset of I
        SplitMix64 jrng(derive_seed(seed, 1));
        VertexSet pick = sample_subset((int)i_members.size(), (int)j_size, jrng);
        pick.for_each([&](int k) { jset.insert(i_members[k]); });
    }

    Graph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) {
            bool both_in_i = iset.contains(u) && iset.contains(v);
            bool both_in_j = jset.contains(u) && jset.contains(v);
            Rat p = both_in_j ? plant_p : (both_in_i ? Rat(0) : base_p);
            if (rng.bernoulli(p)) g.add_edge(u, v);
        }

    long planted_edges = edge_count_within(g, jset);

    // Boost each v in J with `boost` random new edges.
    SplitMix64 brng(derive_seed(seed, 2));
    jset.for_each([&](int v) {
        for (long b = 0; b < boost; ++b) {
            VertexSet candidates = g.all_vertices() - g.neighbors(v);
            candidates.erase(v);
            if (candidates.empty()) break;
            std::vector<int> cand = candidates.to_vector();
            g.add_edge(v, cand[brng.below(cand.size())]);
        }
    });

    // Verify the headline property and top up where the fixed boost fell short.
    bool insufficient = false;
    while (true) {
        int max_outside = -1;
        for (int v = 0; v < n; ++v)
            if (!jset.contains(v)) max_outside = std::max(max_outside, g.degree(v));
        int weakest = -1;
        jset.for_each([&](int v) {
            if (g.degree(v) <= max_outside && (weakest == -1 || v < weakest)) weakest = v;
        });
        if (weakest == -1) break;
        VertexSet candidates = g.all_vertices() - g.neighbors(weakest);
        candidates.erase(weakest);
        if (candidates.empty()) {
            insufficient = true;
            break;
        }
        std::vector<int> cand = candidates.to_vector();
        g.add_edge(weakest, cand[brng.below(cand.size())]);
    }

    PlantedInstance inst{std::move(g), std::move(jset), "adversarial_log", {}, false, std::nullopt, -1};
    inst.independent = std::move(iset);
    inst.boost_insufficient = insufficient;
    inst.planted_edges_pre_boost = planted_edges;
    inst.params = {{"n", std::to_string(n)},      {"rho", rat_str(rho)},
                   {"eps", rat_str(eps)},         {"seed", std::to_string(seed)},
                   {"i_size", std::to_string(i_size)}, {"j_size", std::to_string(j_size)},
                   {"boost", std::to_string(boost)}};
    return inst;
}

/// Disjoint copies of K_{d,d}; copy i occupies vertices [2di, 2d(i+1)), first
/// d on the left side. d-regular with copies*d^2 edges.
inline Graph kdd_union(int copies, int d) {
    if (copies < 1 || d < 1) throw std::invalid_argument("kdd_union: need copies,d >= 1");
    Graph g(2 * d * copies);
    for (int c = 0; c < copies; ++c) {
        int base = 2 * d * c;
        for (int a = 0; a < d; ++a)
            for (int b = 0; b < d; ++b) g.add_edge(base + a, base + d + b);
    }
    return g;
}

/// The lower-bound family for kdd_union(copies, d): from each copy pick a
/// half, at least ceil(d/4) vertices from it, and at most ceil(d/(32k))-1
/// vertices from the other half. Emitted de-duplicated, in a deterministic
/// order (per-copy local sets are sorted, copies combined odometer-style).
inline std::vector<VertexSet> kdd_lower_bound_family(int d, int copies, long k) {
    if (copies < 1 || d < 1 || k < 1)
        throw std::invalid_argument("kdd_lower_bound_family: need copies,d,k >= 1");
    int n = 2 * d * copies;
    long need = (d + 3) / 4;            // ceil(d/4)
    long other_budget = ceil_rat(Rat(d, 32 * k)).get_si() - 1; // strict "fewer than"
    if (other_budget < 0) other_budget = 0;

    // Local sets for one copy, as bitmasks over its 2d vertices (low d bits =
    // left half), de-duplicated across the two half choices.
    std::set<uint64_t> local;
    if (2 * d > 60) throw std::invalid_argument("kdd_lower_bound_family: d too large to enumerate");
    for (int half = 0; half < 2; ++half) {
        for (uint64_t main_bits = 0; main_bits < (uint64_t{1} << d); ++main_bits) {
            if (std::popcount(main_bits) < need) continue;
            for (uint64_t other_bits = 0; other_bits < (uint64_t{1} << d); ++other_bits) {
                if (std::popcount(other_bits) > other_budget) continue;
                uint64_t mask = half == 0 ? (main_bits | (other_bits << d))
                                          : (other_bits | (main_bits << d));
                local.insert(mask);
            }
        }
    }
    std::vector<uint64_t> locals(local.begin(), local.end());

    std::vector<VertexSet> out;
    std::vector<size_t> pick(copies, 0);
    while (true) {
        VertexSet s(n);
        for (int c = 0; c < copies; ++c) {
            uint64_t mask = locals[pick[c]];
            for (int b = 0; b < 2 * d; ++b)
                if ((mask >> b) & 1) s.insert(2 * d * c + b);
        }
        out.push_back(std::move(s));
        int c = copies - 1;
        while (c >= 0 && ++pick[c] == locals.size()) pick[c--] = 0;
        if (c < 0) break;
    }
    return out;
}

} // namespace gcl
