// gcl/containers.hpp -- fingerprint/container generation for sparse subgraphs:
// maximum removal ratio, the two generating procedures, the degree-threshold
// lemma, the revision search, and end-to-end certificate construction.
#pragma once

#include "gcl/graph.hpp"
#include "gcl/oracles.hpp"
#include "gcl/rational.hpp"
#include "gcl/realcheck.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace gcl {

// ---------------------------------------------------------------------------
// Parameters and exact ratio values
// ---------------------------------------------------------------------------

/// eps, rho, ell of the container lemma. Ratio comparisons involve sqrt(ell),
/// so thresholds are kept in squared cross-multiplied form and never
/// materialize an irrational value.
struct GclParams {
    Rat eps;
    Rat rho;
    Rat ell;
    bool relaxed = false; // permit parameters outside the lemma hypotheses

    void validate() const {
        if (eps <= 0) throw std::invalid_argument("GclParams: eps must be > 0");
        if (rho <= 0 || rho > 1) throw std::invalid_argument("GclParams: rho outside (0,1]");
        if (ell <= 0) throw std::invalid_argument("GclParams: ell must be > 0");
        if (!relaxed) {
            if (!(eps < rho * rho / 2))
                throw std::invalid_argument("GclParams: eps < rho^2/2 required (or set relaxed)");
            if (ell < 256)
                throw std::invalid_argument("GclParams: ell >= 256 required (or set relaxed)");
        }
    }

    /// Sparsity hypothesis for J: fewer than (eps/(ell*rho^2))*|J|^2 edges.
    SparsityPredicate sparse_j_predicate() const {
        return SparsityPredicate::edges_below_coeff_sq(eps / (ell * rho * rho));
    }

    /// eps < rho^2/2, exactly.
    bool eps_below_half_rho_sq() const { return eps < rho * rho / 2; }

    /// ell >= 1024*log^4(1/eps), certified (claimed only when definitely true).
    bool strict_ell() const {
        CertCheck c = certified_ge(ell, [&](unsigned prec) {
            RatInterval L = log2_interval(1 / eps, prec);
            // fourth power is even: work with |L| so eps > 1 stays sound
            RatInterval a = L.lo >= 0 ? L
                            : L.hi <= 0
                                ? RatInterval(-L.hi, -L.lo)
                                : RatInterval(Rat(0), std::max(Rat(-L.lo), L.hi));
            return a.squared().squared() * Rat(1024);
        });
        return c.pass;
    }

    Rat rho_n(int n) const { return rho * n; }

    /// log2(8*rho/eps) as an enclosure.
    RatInterval log8re(unsigned prec) const { return log2_interval(8 * rho / eps, prec); }
};

/// A removal ratio: q or q*sqrt(ell), q a nonnegative rational. Comparisons
/// square both sides, so ordering is exact for any rational ell.
struct RatioValue {
    Rat q;
    bool times_sqrt_ell = false;

    Rat squared(const Rat& ell) const { return times_sqrt_ell ? Rat(q * q * ell) : Rat(q * q); }

    bool less_than(const RatioValue& o, const Rat& ell) const {
        return squared(ell) < o.squared(ell);
    }
    bool equals(const RatioValue& o, const Rat& ell) const {
        return squared(ell) == o.squared(ell);
    }

    RatioValue scaled(const Rat& c) const { return {q * c, times_sqrt_ell}; }

    RatInterval enclosure(const Rat& ell, unsigned prec) const {
        if (!times_sqrt_ell) return RatInterval(q);
        return sqrt_interval(ell, prec) * q;
    }

    std::string to_string() const {
        return times_sqrt_ell ? rat_str(q) + "*sqrt(ell)" : rat_str(q);
    }
};

// ---------------------------------------------------------------------------
// Fingerprints and traces
// ---------------------------------------------------------------------------

enum class Direction { Down, Up }; // Down removes neighbours, Up removes higher-degree vertices

inline const char* direction_name(Direction d) { return d == Direction::Down ? "down" : "up"; }

struct FingerprintStep {
    int vertex;
    Direction dir;
    bool operator==(const FingerprintStep&) const = default;
};

/// Revision (i, v): remove from the final container every vertex that
/// out-ranked v in trace container C_i. Index i addresses the trace directly;
/// i = 0 is the initial full container.
struct Revision {
    int trace_index;
    int vertex;
    bool operator==(const Revision&) const = default;
};

struct Fingerprint {
    std::vector<FingerprintStep> seq;
    std::optional<Revision> revision;
    bool operator==(const Fingerprint&) const = default;
};

struct TraceStep {
    int vertex;
    Direction dir;
    int removed_from_container; // |C_{t-1}| - |C_t|
    int removed_from_j;         // beta_t * |J| as an integer
    RatioValue ratio;           // the maximum removal ratio attained at this step
};

struct ContainerTrace {
    std::vector<VertexSet> containers; // C_0 = V, ..., C_{|F|}
    std::vector<TraceStep> steps;

    const VertexSet& final_container() const { return containers.back(); }
    int length() const { return (int)steps.size(); }
};

// ---------------------------------------------------------------------------
// Maximum removal ratio (the greedy selection rule)
// ---------------------------------------------------------------------------

struct MrrResult {
    RatioValue value;
    int vertex;
    Direction dir;
};

/// Max over v in J of the two removal ratios; the denominator floor
/// (eps/(sqrt(ell)*rho^2))*|J| is compared in squared form. Ties break to the
/// smallest vertex, and Down before Up at equal value.
inline MrrResult mrr(const Graph& g, const VertexSet& j, const VertexSet& c,
                     const GclParams& params) {
    if (j.empty()) throw std::invalid_argument("mrr: J is empty");
    require_same_universe(g, j);
    require_same_universe(g, c);

    const Rat q0 = params.eps * j.count() / (params.rho * params.rho); // tau = q0/sqrt(ell)
    const Rat q0_sq = q0 * q0;
    auto ratio_of = [&](long numer, long denom_j) -> RatioValue {
        // denominator = max(denom_j, tau); denom_j >= tau  <=>  denom_j^2*ell >= q0^2
        if (Rat(denom_j) * denom_j * params.ell >= q0_sq)
            return {Rat(numer) / denom_j, false};
        return {Rat(numer) / q0, true}; // numer/tau = (numer/q0)*sqrt(ell)
    };

    std::optional<MrrResult> best;
    j.for_each([&](int v) {
        RatioValue down = ratio_of(degree_in(g, v, c), degree_in(g, v, j));
        if (!best || best->value.less_than(down, params.ell))
            best = MrrResult{down, v, Direction::Down};
        VertexSet up_set = upset(g, c, v);
        RatioValue up = ratio_of(up_set.count(), up_set.intersection_count(j));
        if (best->value.less_than(up, params.ell)) best = MrrResult{up, v, Direction::Up};
    });
    return *best;
}

// ---------------------------------------------------------------------------
// Algorithm: fingerprint generation
// ---------------------------------------------------------------------------

struct SparsityError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Greedy fingerprint generation: while G[C] has more than eps*n^2/4 edges,
/// apply the (vertex, direction) pair attaining the maximum removal ratio.
/// Requires G[J] to satisfy the sparsity hypothesis unless params.relaxed.
inline std::pair<Fingerprint, ContainerTrace> fingerprint_generate(const Graph& g,
                                                                   const VertexSet& j,
                                                                   const GclParams& params) {
    params.validate();
    require_same_universe(g, j);
    const int n = g.vertex_count();

    if (!params.sparse_j_predicate().test(edge_count_within(g, j), j.count())) {
        if (!params.relaxed)
            throw SparsityError("fingerprint_generate: G[J] violates the sparsity hypothesis");
    }

    ContainerTrace trace;
    trace.containers.push_back(g.all_vertices());
    Fingerprint fp;

    const Rat eps_n2_over_4 = params.eps * n * n / 4;
    while (Rat(edge_count_within(g, trace.containers.back())) > eps_n2_over_4) {
        if ((int)trace.steps.size() > n)
            throw std::logic_error("fingerprint_generate: step count exceeded n");
        const VertexSet& prev = trace.containers.back();
        MrrResult pick = mrr(g, j, prev, params);
        VertexSet next = prev;
        if (pick.dir == Direction::Down) {
            next -= g.neighbors(pick.vertex); // the chosen vertex itself stays
        } else {
            next -= upset(g, prev, pick.vertex);
        }
        int removed = prev.count() - next.count();
        if (removed < 1)
            throw std::logic_error("fingerprint_generate: step removed nothing");
        int removed_j = prev.intersection_count(j) - next.intersection_count(j);
        fp.seq.push_back({pick.vertex, pick.dir});
        trace.steps.push_back({pick.vertex, pick.dir, removed, removed_j, pick.value});
        trace.containers.push_back(std::move(next));
    }
    return {std::move(fp), std::move(trace)};
}

// ---------------------------------------------------------------------------
// Algorithm: container generation (replay from the fingerprint alone)
// ---------------------------------------------------------------------------

/// Replays F from C_0 = V; if a revision (i, u) is present, returns
/// C_{|F|} \ (C_i)_{upset u}. Depends only on (g, F, R), never on J.
inline VertexSet container_generate(const Graph& g, const Fingerprint& fp) {
    std::vector<VertexSet> cs;
    cs.push_back(g.all_vertices());
    for (const FingerprintStep& step : fp.seq) {
        if (step.vertex < 0 || step.vertex >= g.vertex_count())
            throw std::invalid_argument("container_generate: fingerprint vertex out of range");
        VertexSet next = cs.back();
        if (step.dir == Direction::Down)
            next -= g.neighbors(step.vertex);
        else
            next -= upset(g, cs.back(), step.vertex);
        cs.push_back(std::move(next));
    }
    if (!fp.revision) return cs.back();
    const auto& [i, u] = *fp.revision;
    if (i < 0 || i >= (int)cs.size())
        throw std::invalid_argument("container_generate: revision index out of range");
    if (u < 0 || u >= g.vertex_count())
        throw std::invalid_argument("container_generate: revision vertex out of range");
    return cs.back() - upset(g, cs[i], u);
}

// ---------------------------------------------------------------------------
// Degree-threshold lemma
// ---------------------------------------------------------------------------

struct DegreeThresholdResult {
    Rat d;              // threshold from the ladder |W|/2^k
    int ladder_k;       // the first satisfying rung
    VertexSet witnesses; // {x in U : deg_W(x) > d}
    bool count_bound_ok; // certified |witnesses| >= m/(4*d*log(2|U||W|/m))
};

/// For |E(U,W)| >= m >= 1, walks the ladder d_k = |W|/2^k while d_k stays at
/// least m/(2|U|), returning the first rung whose witness count certifiably
/// meets m/(4*d*log(2|U||W|/m)). Both postcondition bounds hold for the
/// returned value by construction.
inline DegreeThresholdResult degree_threshold(const Graph& g, const VertexSet& u,
                                              const VertexSet& w, long m) {
    require_same_universe(g, u);
    require_same_universe(g, w);
    if (m < 1) throw std::invalid_argument("degree_threshold: m must be >= 1");
    long actual = edge_count_between(g, u, w);
    if (actual < m)
        throw std::invalid_argument("degree_threshold: |E(U,W)| = " + std::to_string(actual) +
                                    " is below m = " + std::to_string(m));
    const long usz = u.count(), wsz = w.count();
    Rat big(2 * usz * wsz, m); // 2|U||W|/m = 2/delta; log argument
    big.canonicalize();
    const double big_dbl = big.get_d();
    const double log_dbl = std::log2(big_dbl);
    // Cache the witness degrees once.
    std::vector<std::pair<int, int>> deg_w; // (vertex, deg in W)
    u.for_each([&](int x) { deg_w.emplace_back(x, degree_in(g, x, w)); });

    for (long k = 0; ((__int128)m << k) <= (__int128)2 * usz * wsz; ++k) {
        // ladder stays within the range bound: d_k >= m/(2|U|) <=> 2^k <= 2|U||W|/m
        long count = 0;
        for (auto [x, deg] : deg_w)
            if (((__int128)deg << k) > wsz) ++count; // deg > |W|/2^k
        if (count == 0) continue;
        // count >= m/(4*d*L), L = log2(2|U||W|/m):  count*4*d*L >= m.
        // Doubles filter the clear cases; the boundary band goes to the
        // certified path, which is also the authority on pass margins.
        bool pass;
        double lhs = 4.0 * (double)count * ((double)wsz / std::ldexp(1.0, (int)k)) * log_dbl;
        if (std::abs(lhs - (double)m) > 1e-6 * std::max<double>(m, lhs)) {
            pass = lhs > (double)m;
        } else {
            Rat d_exact(Int(wsz), pow2(k));
            d_exact.canonicalize();
            pass = certify_nonneg([&](unsigned prec) {
                       return log2_interval(big, prec) * (Rat(4 * count) * d_exact) -
                              RatInterval(Rat(m));
                   }).pass;
        }
        if (pass) {
            Rat d(Int(wsz), pow2(k));
            d.canonicalize();
            VertexSet wit(g.vertex_count());
            for (auto [x, deg] : deg_w)
                if (((__int128)deg << k) > wsz) wit.insert(x);
            return {d, (int)k, std::move(wit), true};
        }
    }
    throw std::logic_error("degree_threshold: no ladder rung satisfies the count bound (lemma violation?)");
}

// ---------------------------------------------------------------------------
// Revision search
// ---------------------------------------------------------------------------

struct WorstRatio {
    RatioValue r;  // min over steps t <= t_star of MRR_t * |J| / (|C_{t-1}| - (1-2a)rho*n)
    int step;      // 1-based step attaining it
    int t_star;    // smallest trace index with |C_t| <= rho*n
};

/// r and t* from the certificate construction; alpha is the pre-revision
/// value 1 - |C_{|F|}|/(rho*n). Returns nullopt when t* does not exist or no
/// step precedes it.
inline std::optional<WorstRatio> worst_ratio(const ContainerTrace& trace, const GclParams& params,
                                             int n, int j_size, const Rat& alpha) {
    Rat rho_n = params.rho_n(n);
    int t_star = -1;
    for (int i = 0; i < (int)trace.containers.size(); ++i)
        if (Rat(trace.containers[i].count()) <= rho_n) {
            t_star = i;
            break;
        }
    if (t_star <= 0) return std::nullopt; // no usable step (t*=0 means C_0 already small)

    std::optional<WorstRatio> best;
    for (int t = 1; t <= t_star; ++t) {
        Rat denom = Rat(trace.containers[t - 1].count()) - (1 - 2 * alpha) * rho_n;
        if (denom <= 0) continue; // cannot happen for alpha in (0,1/2); defensive
        RatioValue rt = trace.steps[t - 1].ratio.scaled(Rat(j_size) / denom);
        if (!best || rt.less_than(best->r, params.ell)) best = WorstRatio{rt, t, t_star};
    }
    return best;
}

struct RevisionChoice {
    Revision revision;
    Rat gamma;
    int container_after; // |C_final \ (C_i)_{upset v}|
};

/// Search for a revision pair per the revision lemma: gamma is set to the
/// exact rational 1 - |C \ D_{upset v}|/(rho*n), and a pair is admissible when
/// gamma >= sqrt(ell)/(16*r*log(8rho/eps)) and
/// |D_{upset v} ∩ J| <= (16*gamma*log^2(8rho/eps)/sqrt(ell))*|J|, both
/// certified against adversarial rounding. Proof-guided: first scan J at the
/// step attaining the worst ratio, maximizing the container reduction; then
/// fall back to an exhaustive scan over (i < t*, v in J).
inline std::optional<RevisionChoice> find_revision(const Graph& g, const VertexSet& j,
                                                   const ContainerTrace& trace,
                                                   const VertexSet& c_final,
                                                   const GclParams& params,
                                                   const WorstRatio& wr) {
    const int n = g.vertex_count();
    const Rat rho_n = params.rho_n(n);
    const int j_size = j.count();

    auto admissible = [&](int i, int v) -> std::optional<RevisionChoice> {
        VertexSet duv = upset(g, trace.containers[i], v);
        int after = (c_final - duv).count();
        Rat gamma = 1 - Rat(after) / rho_n;
        if (gamma <= 0) return std::nullopt;
        // gamma*16*r*L8 - sqrt(ell) >= 0
        CertCheck g_ok = certify_nonneg([&](unsigned prec) {
            return wr.r.enclosure(params.ell, prec) * params.log8re(prec) * (gamma * 16) -
                   sqrt_interval(params.ell, prec);
        });
        if (!g_ok.pass) return std::nullopt;
        // 16*gamma*L8^2*|J| - sqrt(ell)*|D_up ∩ J| >= 0
        long cost = duv.intersection_count(j);
        CertCheck c_ok = certify_nonneg([&](unsigned prec) {
            return params.log8re(prec).squared() * (gamma * 16 * j_size) -
                   sqrt_interval(params.ell, prec) * Rat(cost);
        });
        if (!c_ok.pass) return std::nullopt;
        return RevisionChoice{{i, v}, gamma, after};
    };

    std::optional<RevisionChoice> best;
    auto consider = [&](int i, int v) {
        auto choice = admissible(i, v);
        if (choice && (!best || choice->container_after < best->container_after)) best = choice;
    };

    j.for_each([&](int v) { consider(wr.step - 1, v); });
    if (best) return best;
    for (int i = 0; i < wr.t_star; ++i)
        j.for_each([&](int v) { consider(i, v); });
    return best;
}

// ---------------------------------------------------------------------------
// Certificates
// ---------------------------------------------------------------------------

struct LemmaCheck {
    bool pass = false;
    Rat margin{0};       // adversarial: nonnegative iff pass
    bool ambiguous = false;

    static LemmaCheck from(const CertCheck& c) { return {c.pass, c.margin, c.ambiguous}; }
    static LemmaCheck exact(bool pass, Rat margin) { return {pass, std::move(margin), false}; }
};

struct WeakContainmentReport {
    bool hypotheses_met = false; // eps <= rho^2/2, ell >= 256, farness asserted
    std::vector<LemmaCheck> per_step; // MRR_t >= sqrt(ell)*max(|C_{t-1}|,rho n)/(16*L8*|J|)
    LemmaCheck containment;           // |C ∩ J| >= (1 - 16*L8^2/sqrt(ell))*|J|
    LemmaCheck fingerprint_size;      // |F| <= 16*rho^2*L8^2/eps
    bool all_steps_pass = true;

    bool overall() const { return all_steps_pass && containment.pass && fingerprint_size.pass; }
};

/// Per-step progress and final bounds of the weak containment lemma. Reports
/// outcomes with exact margins; never throws on unmet hypotheses, it records
/// them so downstream consumers know the outcomes are informational.
inline WeakContainmentReport verify_weak_containment(const ContainerTrace& trace,
                                                     const GclParams& params, const VertexSet& j,
                                                     bool eps_far_certified) {
    WeakContainmentReport rep;
    rep.hypotheses_met = eps_far_certified && params.ell >= 256 &&
                         params.eps <= params.rho * params.rho / 2;
    const int n = j.universe();
    const int j_size = j.count();
    const Rat rho_n = params.rho_n(n);

    for (size_t t = 0; t < trace.steps.size(); ++t) {
        const VertexSet& prev = trace.containers[t];
        Rat maxc = std::max(Rat(prev.count()), rho_n);
        // MRR*16*|J|*L8 - sqrt(ell)*max(|C_{t-1}|, rho n) >= 0
        CertCheck chk = certify_nonneg([&](unsigned prec) {
            return trace.steps[t].ratio.enclosure(params.ell, prec) * params.log8re(prec) *
                       Rat(16 * j_size) -
                   sqrt_interval(params.ell, prec) * maxc;
        });
        rep.per_step.push_back(LemmaCheck::from(chk));
        rep.all_steps_pass = rep.all_steps_pass && chk.pass;
    }

    long missing = j_size - trace.final_container().intersection_count(j);
    rep.containment = LemmaCheck::from(certify_nonneg([&](unsigned prec) {
        return params.log8re(prec).squared() * Rat(16 * j_size) -
               sqrt_interval(params.ell, prec) * Rat(missing);
    }));
    rep.fingerprint_size = LemmaCheck::from(certify_nonneg([&](unsigned prec) {
        return params.log8re(prec).squared() * (16 * params.rho * params.rho) -
               RatInterval(params.eps * trace.length());
    }));
    return rep;
}

struct GclCertificate {
    VertexSet j;
    Fingerprint fingerprint;
    VertexSet container;    // = container_generate(g, fingerprint), recomputed
    ContainerTrace trace;
    Rat alpha;              // 1 - |container|/(rho*n), after any revision
    Rat alpha_pre_revision; // 1 - |C_{|F|}|/(rho*n)
    std::optional<RatioValue> worst_r;
    std::optional<int> t_star;
    std::optional<Rat> gamma;
    LemmaCheck c1, c2, c3;  // the three container-lemma conclusions
    WeakContainmentReport weak;
    bool strict_hypotheses = false;
    bool eps_far_certified = false;
    bool reconstruction_ok = false;
    std::vector<std::string> notes;

    bool conclusions_pass() const { return c1.pass && c2.pass && c3.pass; }
};

/// Full certificate construction: fingerprint + trace, the alpha/r/t* case
/// split deciding whether to attach a revision, an independent replay of the
/// container function, and exact evaluation of the three lemma conclusions.
inline GclCertificate build_gcl_certificate(const Graph& g, const VertexSet& j,
                                            const GclParams& params,
                                            bool eps_far_certified = false) {
    const int n = g.vertex_count();
    const Rat rho_n = params.rho_n(n);

    GclCertificate cert;
    cert.j = j;
    cert.eps_far_certified = eps_far_certified;

    auto [fp, trace] = fingerprint_generate(g, j, params);
    cert.fingerprint = std::move(fp);
    cert.trace = std::move(trace);

    const VertexSet& c_pre = cert.trace.final_container();
    cert.alpha_pre_revision = 1 - Rat(c_pre.count()) / rho_n;
    const Rat& alpha0 = cert.alpha_pre_revision;

    if (alpha0 >= Rat(1, 2)) {
        cert.notes.push_back("alpha >= 1/2: no revision needed");
    } else {
        auto wr = worst_ratio(cert.trace, params, n, j.count(), alpha0);
        if (!wr) {
            cert.notes.push_back("t* undefined or 0: revision skipped");
        } else {
            cert.worst_r = wr->r;
            cert.t_star = wr->t_star;
            // If alpha > sqrt(ell)/(32*r*L8) the bounds already hold: certified
            // via alpha*32*r*L8 - sqrt(ell) > 0.
            CertCheck no_rev = certify_nonneg([&](unsigned prec) {
                return wr->r.enclosure(params.ell, prec) * params.log8re(prec) * (alpha0 * 32) -
                       sqrt_interval(params.ell, prec);
            });
            if (no_rev.pass && no_rev.margin > 0) {
                cert.notes.push_back("alpha > sqrt(ell)/(32 r log(8rho/eps)): no revision needed");
            } else {
                auto choice = find_revision(g, j, cert.trace, c_pre, params, *wr);
                if (choice) {
                    cert.fingerprint.revision = choice->revision;
                    cert.gamma = choice->gamma;
                } else {
                    cert.notes.push_back(params.ell < 16
                                             ? "no admissible revision (ell < 16 hypothesis unmet)"
                                             : "no admissible revision found");
                }
            }
        }
    }

    cert.container = container_generate(g, cert.fingerprint);
    // The replay must agree with the trace-side construction.
    if (!cert.fingerprint.revision)
        cert.reconstruction_ok = cert.container == c_pre;
    else
        cert.reconstruction_ok =
            cert.container ==
            c_pre - upset(g, cert.trace.containers[cert.fingerprint.revision->trace_index],
                          cert.fingerprint.revision->vertex);
    if (!cert.reconstruction_ok)
        throw std::logic_error("build_gcl_certificate: container replay mismatch");

    cert.alpha = 1 - Rat(cert.container.count()) / rho_n;
    const Rat& alpha = cert.alpha;

    // Conclusion 1: |C(F,R)| <= (1 - eps/(2 rho^2)) rho n, exact.
    Rat c1_rhs = (1 - params.eps / (2 * params.rho * params.rho)) * rho_n;
    cert.c1 = LemmaCheck::exact(Rat(cert.container.count()) <= c1_rhs,
                                c1_rhs - cert.container.count());

    // Conclusion 2: |F| <= 32*alpha*rho^2*L8^2/eps.
    cert.c2 = LemmaCheck::from(certify_nonneg([&](unsigned prec) {
        return params.log8re(prec).squared() * (32 * alpha * params.rho * params.rho) -
               RatInterval(params.eps * cert.trace.length());
    }));

    // Conclusion 3: |J ∩ C(F,R)| >= (1 - 32*alpha*L8^2/sqrt(ell))*|J|.
    long missing = j.count() - cert.container.intersection_count(j);
    cert.c3 = LemmaCheck::from(certify_nonneg([&](unsigned prec) {
        return params.log8re(prec).squared() * (32 * alpha * j.count()) -
               sqrt_interval(params.ell, prec) * Rat(missing);
    }));

    cert.weak = verify_weak_containment(cert.trace, params, j, eps_far_certified);
    cert.strict_hypotheses =
        eps_far_certified && params.eps_below_half_rho_sq() && params.strict_ell();
    return cert;
}

} // namespace gcl
