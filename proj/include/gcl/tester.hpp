// gcl/tester.hpp -- the tolerant rho-IndepSet tester, its Monte-Carlo harness,
// and the analytic helpers (hypergeometric Chernoff bound, far-case union
// bound chain).
#pragma once

#include "gcl/graph.hpp"
#include "gcl/oracles.hpp"
#include "gcl/rational.hpp"
#include "gcl/realcheck.hpp"
#include "gcl/rng.hpp"

#include <cmath>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace gcl {

struct TesterConfig {
    Rat rho;
    Rat eps;
    Rat c1{1};
    Rat c2{1};
    long s = 0;             // 0: use the default formula
    Int accept_budget{-1};  // negative: use the default formula
    uint64_t seed = 0;

    void require_eps_in_unit() const {
        if (eps <= 0 || eps >= 1)
            throw std::invalid_argument("TesterConfig: the default formulas need 0 < eps < 1");
    }

    /// Default sample size floor(c2 * rho^3 * log^5(1/eps) / eps^2), evaluated
    /// at 192 fractional bits on the lower endpoint (pinned for determinism).
    long default_s() const {
        require_eps_in_unit();
        RatInterval L = log2_interval(1 / eps, 192);
        Rat v = c2 * rho * rho * rho * (L.lo * L.lo * L.lo * L.lo * L.lo) / (eps * eps);
        return floor_long(v);
    }

    /// Default accept budget floor(2*eps/(c1*log^4(1/eps)) * s^2), same
    /// deterministic rounding convention (upper endpoint of the log in the
    /// denominator, hence the lower endpoint of the whole expression).
    Int default_budget(long s_val) const {
        require_eps_in_unit();
        RatInterval L = log2_interval(1 / eps, 192);
        Rat denom = c1 * (L.hi * L.hi * L.hi * L.hi);
        if (denom <= 0) throw std::invalid_argument("TesterConfig: c1*log^4(1/eps) <= 0");
        return floor_rat(2 * eps / denom * s_val * s_val);
    }

    long resolved_s() const {
        long v = s > 0 ? s : default_s();
        if (v < 1) throw std::invalid_argument("TesterConfig: sample size resolves to < 1");
        return v;
    }
    Int resolved_budget(long s_val) const {
        return accept_budget >= 0 ? accept_budget : default_budget(s_val);
    }
};

struct TrialReport {
    bool accept = false;
    VertexSet sample;
    std::optional<VertexSet> witness; // the sparse J found, in original vertex ids
    long edges_found = 0;
};

/// Uniform s-subset of V(g), seed-deterministic.
inline VertexSet sample_vertices(const Graph& g, long s, uint64_t seed) {
    if (s < 0 || s > g.vertex_count())
        throw std::invalid_argument("sample_vertices: s outside 0..n");
    SplitMix64 rng(seed);
    return sample_subset(g.vertex_count(), (int)s, rng);
}

/// One run: sample S, then accept iff some floor(rho*s)-subset of S induces
/// at most accept_budget edges. The inner search is exact (shared with the
/// oracles); above the guard it refuses rather than approximating.
inline TrialReport run_tester(const Graph& g, const TesterConfig& cfg,
                              const SearchLimits& limits = {}) {
    long s = cfg.resolved_s();
    if (s > g.vertex_count())
        throw std::invalid_argument("run_tester: sample size exceeds n");
    Int budget = cfg.resolved_budget(s);
    long target = floor_long(cfg.rho * s);
    if (target < 1) throw std::invalid_argument("run_tester: floor(rho*s) < 1");

    TrialReport rep;
    rep.sample = sample_vertices(g, s, cfg.seed);
    std::vector<int> ids = rep.sample.to_vector();

    Graph induced((int)ids.size());
    for (size_t a = 0; a < ids.size(); ++a)
        for (size_t b = a + 1; b < ids.size(); ++b)
            if (g.has_edge(ids[a], ids[b])) induced.add_edge((int)a, (int)b);

    long budget_ll = budget.fits_slong_p() ? budget.get_si()
                                                : (long)target * target; // any huge budget caps out
    auto found = sparsest_subset(induced, (int)target, budget_ll, limits);
    if (found) {
        VertexSet witness(g.vertex_count());
        found->for_each([&](int local) { witness.insert(ids[local]); });
        rep.accept = true;
        rep.edges_found = edge_count_within(g, witness);
        rep.witness = std::move(witness);
    }
    return rep;
}

struct AcceptanceStats {
    long trials = 0;
    long accepts = 0;
    double rate = 0;
    double ci_low = 0, ci_high = 0; // Wilson interval, z = 1.96
};

inline AcceptanceStats wilson_interval(long accepts, long trials) {
    AcceptanceStats st;
    st.trials = trials;
    st.accepts = accepts;
    st.rate = trials ? (double)accepts / trials : 0.0;
    if (!trials) return st;
    const double z = 1.96, z2 = z * z, nn = (double)trials, p = st.rate;
    double denom = 1 + z2 / nn;
    double center = (p + z2 / (2 * nn)) / denom;
    double half = z * std::sqrt(p * (1 - p) / nn + z2 / (4 * nn * nn)) / denom;
    st.ci_low = center - half;
    st.ci_high = center + half;
    return st;
}

/// Independent trials with per-trial seeds derived from cfg.seed.
inline AcceptanceStats monte_carlo(const Graph& g, const TesterConfig& cfg, long trials,
                                   const SearchLimits& limits = {}) {
    if (trials < 1) throw std::invalid_argument("monte_carlo: trials must be >= 1");
    long accepts = 0;
    for (long t = 0; t < trials; ++t) {
        TesterConfig trial_cfg = cfg;
        trial_cfg.seed = derive_seed(cfg.seed, (uint64_t)t);
        if (run_tester(g, trial_cfg, limits).accept) ++accepts;
    }
    return wilson_interval(accepts, trials);
}

/// Majority vote over an odd number of repetitions (error reduction); off by
/// default in the CLI because it changes nothing about the base semantics.
inline bool majority_tester(const Graph& g, const TesterConfig& cfg, int repetitions,
                            const SearchLimits& limits = {}) {
    if (repetitions < 1 || repetitions % 2 == 0)
        throw std::invalid_argument("majority_tester: repetitions must be odd and >= 1");
    int accepts = 0;
    for (int t = 0; t < repetitions; ++t) {
        TesterConfig trial_cfg = cfg;
        trial_cfg.seed = derive_seed(cfg.seed ^ 0x6d61ea6f72697479ull, (uint64_t)t);
        if (run_tester(g, trial_cfg, limits).accept) ++accepts;
    }
    return 2 * accepts > repetitions;
}

// ---------------------------------------------------------------------------
// Hypergeometric tail machinery
// ---------------------------------------------------------------------------

/// Chernoff bound for H(N,K,n): Pr[X >= theta] <= exp(-(theta-E)^2/(theta+E)),
/// E = nK/N. Returned as an enclosure; .hi is the usable upper bound (rounds
/// up), .lo certifies dominance claims against the exact tail.
inline RatInterval chernoff_tail(long N, long K, long n, const Rat& theta,
                                 unsigned prec = 128) {
    if (N < 1 || K < 0 || K > N || n < 0 || n > N)
        throw std::invalid_argument("chernoff_tail: bad hypergeometric parameters");
    Rat mean = Rat(n) * K / N;
    if (theta < mean) throw std::invalid_argument("chernoff_tail: theta below the mean");
    if (theta == mean) return RatInterval(Rat(1)); // exponent is exactly 0
    Rat x = (theta - mean) * (theta - mean) / (theta + mean);
    return exp_interval(-x, prec);
}

/// Exact Pr[X >= theta] for X ~ H(N,K,n), by enumeration.
inline Rat hypergeom_tail_exact(long N, long K, long n, const Rat& theta) {
    if (N < 1 || K < 0 || K > N || n < 0 || n > N)
        throw std::invalid_argument("hypergeom_tail_exact: bad parameters");
    long lo = ceil_rat(theta).fits_slong_p() ? ceil_rat(theta).get_si() : n + 1;
    if (lo < 0) lo = 0;
    Int num = 0;
    long hi = std::min(K, n);
    for (long x = lo; x <= hi; ++x) {
        if (n - x > N - K) continue;
        num += binom((unsigned long)K, (unsigned long)x) *
               binom((unsigned long)(N - K), (unsigned long)(n - x));
    }
    Rat tail(num, binom((unsigned long)N, (unsigned long)n));
    tail.canonicalize();
    return tail;
}

/// The far-case union-bound chain: the final displayed form is
/// f_max^2 * exp(-2*log2(s)) with f_max = c3*rho^2*log^2(1/eps)/eps + 1.
/// Validity of the regime requires (eps/(4*c3*rho^2*log^2(1/eps)))*rho*s >= 1
/// (the f <= |F|+1 absorption) and f_max^2 <= s (the final collapse).
struct FarCaseBound {
    RatInterval f_max;
    RatInterval exp_term;   // exp(-2*log2 s)
    RatInterval bound;      // f_max^2 * exp_term
    bool regime_valid = false;
    bool absorption_ok = false; // (eps/(4 c3 rho^2 log^2(1/eps))) * rho*s >= 1
    bool fmax_sq_le_s = false;  // f_max^2 <= s
    std::string tuple_count_note;
};

inline FarCaseBound far_case_bound(const TesterConfig& cfg, const Rat& c3,
                                   unsigned prec = 128) {
    if (cfg.eps <= 0 || cfg.eps >= 1) throw std::invalid_argument("far_case_bound: need 0 < eps < 1");
    if (c3 <= 0) throw std::invalid_argument("far_case_bound: c3 must be positive");
    long s = cfg.resolved_s();

    FarCaseBound out;
    RatInterval L = log2_interval(1 / cfg.eps, prec);
    RatInterval L2 = L.squared();
    out.f_max = L2 * (c3 * cfg.rho * cfg.rho / cfg.eps) + RatInterval(Rat(1));

    RatInterval logs = log2_interval(Rat(s), prec);
    out.exp_term = exp_interval(-2 * logs.hi, prec); // decreasing in the argument
    out.exp_term.hi = exp_interval(-2 * logs.lo, prec).hi;
    out.bound = out.f_max.squared() * out.exp_term;

    // absorption: eps*rho*s - 4*c3*rho^2*log^2(1/eps) >= 0, certified
    out.absorption_ok = certify_nonneg([&](unsigned p) {
                            return RatInterval(cfg.eps * cfg.rho * s) -
                                   log2_interval(1 / cfg.eps, p).squared() *
                                       (4 * c3 * cfg.rho * cfg.rho);
                        }).pass;
    out.fmax_sq_le_s = out.f_max.squared().hi <= Rat(s);
    out.regime_valid = out.absorption_ok && out.fmax_sq_le_s;
    out.tuple_count_note =
        "intermediate fingerprint-tuple count uses the (n choose f)*2^k*f^k*f*k upper bound; "
        "the implemented tuple space is not enumerated, only the final displayed chain is evaluated";
    return out;
}

} // namespace gcl
