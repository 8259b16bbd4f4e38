// gcl/serialize.hpp -- JSON forms of certificates and reports.
#pragma once

#include "gcl/containers.hpp"
#include "gcl/counting.hpp"
#include "gcl/io.hpp"
#include "gcl/oracles.hpp"
#include "gcl/tester.hpp"

#include <json.hpp>

namespace gcl {

inline nlohmann::json check_to_json(const LemmaCheck& c) {
    nlohmann::json j{{"pass", c.pass}, {"margin", rat_str(c.margin)}};
    if (c.ambiguous) j["ambiguous"] = true;
    return j;
}

inline nlohmann::json certificate_to_json(const GclCertificate& cert) {
    nlohmann::json f = nlohmann::json::array();
    for (const auto& st : cert.fingerprint.seq)
        f.push_back({st.vertex, direction_name(st.dir)});

    nlohmann::json weak_steps = nlohmann::json::array();
    for (const auto& s : cert.weak.per_step) weak_steps.push_back(check_to_json(s));

    nlohmann::json j{
        {"J", set_to_json(cert.j)},
        {"F", f},
        {"R", cert.fingerprint.revision
                  ? nlohmann::json({cert.fingerprint.revision->trace_index,
                                    cert.fingerprint.revision->vertex})
                  : nlohmann::json(nullptr)},
        {"container", set_to_json(cert.container)},
        {"alpha", rat_str(cert.alpha)},
        {"r", cert.worst_r ? nlohmann::json(cert.worst_r->to_string()) : nlohmann::json(nullptr)},
        {"t_star", cert.t_star ? nlohmann::json(*cert.t_star) : nlohmann::json(nullptr)},
        {"gamma", cert.gamma ? nlohmann::json(rat_str(*cert.gamma)) : nlohmann::json(nullptr)},
        {"checks",
         {{"c1", check_to_json(cert.c1)},
          {"c2", check_to_json(cert.c2)},
          {"c3", check_to_json(cert.c3)},
          {"weak_each_step",
           {{"pass", cert.weak.overall()},
            {"hypotheses_met", cert.weak.hypotheses_met},
            {"steps", weak_steps},
            {"containment", check_to_json(cert.weak.containment)},
            {"fingerprint_size", check_to_json(cert.weak.fingerprint_size)}}}}},
        {"strict_hypotheses", cert.strict_hypotheses},
        {"reconstruction_ok", cert.reconstruction_ok},
    };
    if (!cert.notes.empty()) j["notes"] = cert.notes;
    return j;
}

inline nlohmann::json farness_to_json(const FarnessCertificate& cert) {
    return {{"rho", rat_str(cert.rho)},
            {"min_edges", cert.min_edges.get_str()},
            {"witness", set_to_json(cert.witness)},
            {"eps_far_up_to", rat_str(cert.eps_far_up_to)},
            {"exact", cert.exact}};
}

inline nlohmann::json trial_to_json(const TrialReport& rep) {
    nlohmann::json j{{"verdict", rep.accept ? "accept" : "reject"},
                     {"sample", set_to_json(rep.sample)},
                     {"edges_found", rep.edges_found}};
    j["witness"] = rep.witness ? set_to_json(*rep.witness) : nlohmann::json(nullptr);
    return j;
}

inline nlohmann::json stats_to_json(const AcceptanceStats& st) {
    return {{"trials", st.trials}, {"accepts", st.accepts},   {"accept_rate", st.rate},
            {"ci_low", st.ci_low}, {"ci_high", st.ci_high}};
}

inline nlohmann::json count_report_to_json(const CountReport& rep) {
    return {{"graph", rep.graph_desc},
            {"threshold", rep.threshold_desc},
            {"exact_count", rep.exact_count.get_str()},
            {"bound", rep.bound.get_str()},
            {"bound_terms",
             {{"distinct_fingerprints", rep.distinct_fingerprints.get_str()},
              {"sparse_sets", rep.sparse_sets},
              {"leftover_max", rep.leftover_max},
              {"nominal_binomial_log2", rep.nominal_binomial_log2}}},
            {"eps", rat_str(rep.eps)},
            {"rho", rat_str(rep.rho)},
            {"ell", rat_str(rep.ell)},
            {"constants", {{"c_recipe", rat_str(rep.c1_used)}, {"c3", rat_str(rep.c3_used)}}},
            {"regime", rep.regime_small_k ? "k < d^3" : "k >= d^3"},
            {"eps_far_verified", rep.eps_far_verified},
            {"pass", rep.pass}};
}

inline nlohmann::json lower_bound_family_to_json(const LowerBoundFamilyReport& rep) {
    nlohmann::json j{{"formula", rep.formula.get_str()},
                     {"family_size", rep.family_size.get_str()},
                     {"terms",
                      {{"halves", rep.term_halves.get_str()},
                       {"big_half", rep.term_big.get_str()},
                       {"small_half", rep.term_small.get_str()}}},
                     {"family_ge_formula", rep.family_ge_formula},
                     {"members_pass_density", rep.members_pass_density},
                     {"sparse_ge_family", rep.sparse_ge_family}};
    j["sparse_count"] =
        rep.sparse_count ? nlohmann::json(rep.sparse_count->get_str()) : nlohmann::json(nullptr);
    return j;
}

inline nlohmann::json markov_to_json(const MarkovReport& rep) {
    return {{"count", rep.count.get_str()},
            {"threshold", rep.threshold.get_str()},
            {"pass", rep.pass}};
}

inline nlohmann::json farcase_to_json(const FarCaseBound& b) {
    return {{"f_max", {{"lo", rat_str(b.f_max.lo)}, {"hi", rat_str(b.f_max.hi)}}},
            {"exp_term_hi", b.exp_term.hi.get_d()},
            {"bound_hi", b.bound.hi.get_d()},
            {"bound_hi_exact", rat_str(b.bound.hi)},
            {"regime_valid", b.regime_valid},
            {"absorption_ok", b.absorption_ok},
            {"fmax_sq_le_s", b.fmax_sq_le_s},
            {"tuple_count_note", b.tuple_count_note}};
}

} // namespace gcl
