#pragma once

// Orchestration: run every check family over one (group, subgroup, weight)
// instance, across the pointwise-function model, the group-algebra model,
// their duals, the cross-model identities, and chains of nested projections.
// Reports are assembled deterministically (target order, then registry
// order), so the serialized output is identical for any worker count.

#include <atomic>
#include <cstdlib>
#include <functional>
#include <memory>
#include <optional>
#include <thread>

#include <qhg/compact.hpp>
#include <qhg/discrete.hpp>

namespace qhg {

struct InstanceSpec {
    std::string name;
    GroupPtr group;
    std::vector<int> subgroup;
    Rational weight = Rational(1);
    bool with_duals = true;
    std::vector<std::vector<int>> chain;  // nested subgroups, ascending; default {e} < K < G
};

struct SuiteOptions {
    int jobs = 1;
};

inline int order_cap() {
    if (const char* s = std::getenv("QHG_ORDER_CAP")) {
        const long v = std::strtol(s, nullptr, 10);
        if (v > 0) return static_cast<int>(v);
    }
    return 24;
}

inline InstanceSpec instance_from_catalog(const std::string& group_name,
                                          const std::string& subgroup_name,
                                          const Rational& weight = Rational(1)) {
    const CatalogEntry entry = catalog(group_name);
    InstanceSpec spec;
    spec.name = group_name + "/" + subgroup_name;
    spec.group = entry.group;
    const auto it = entry.subgroups.find(subgroup_name);
    if (it == entry.subgroups.end())
        throw std::invalid_argument("unknown subgroup name: " + subgroup_name);
    spec.subgroup = it->second;
    spec.weight = weight;
    return spec;
}

inline std::vector<CheckRecord> verify_group_data(const GroupPtr& g,
                                                  const std::vector<int>& K) {
    std::vector<CheckRecord> out;
    const int n = g->order;
    {
        std::string bad;
        for (int i = 0; i < n && bad.empty(); ++i) {
            std::vector<char> row(static_cast<size_t>(n), 0), col(static_cast<size_t>(n), 0);
            for (int j = 0; j < n; ++j) {
                const int rij = g->mul(i, j), rji = g->mul(j, i);
                if (rij < 0 || rij >= n || rji < 0 || rji >= n) {
                    bad = "entry out of range";
                    break;
                }
                row[static_cast<size_t>(rij)] = 1;
                col[static_cast<size_t>(rji)] = 1;
            }
            for (int j = 0; j < n && bad.empty(); ++j)
                if (!row[static_cast<size_t>(j)] || !col[static_cast<size_t>(j)])
                    bad = "multiplication table is not a Latin square";
        }
        for (int i = 0; i < n && bad.empty(); ++i) {
            if (g->mul(g->identity, i) != i || g->mul(i, g->identity) != i)
                bad = "identity element fails";
            else if (g->mul(i, g->inv(i)) != g->identity || g->mul(g->inv(i), i) != g->identity)
                bad = "inverse fails";
        }
        for (int i = 0; i < n && bad.empty(); ++i)
            for (int j = 0; j < n && bad.empty(); ++j)
                for (int k = 0; k < n; ++k)
                    if (g->mul(g->mul(i, j), k) != g->mul(i, g->mul(j, k))) {
                        bad = "associativity fails";
                        break;
                    }
        out.push_back(bad.empty() ? pass_record("group_valid", "order " + std::to_string(n))
                                  : fail_record("group_valid", bad));
    }
    {
        const bool ok = !K.empty() && is_subgroup_set(*g, K);
        out.push_back(ok ? pass_record("subgroup_valid", "|K| = " + std::to_string(K.size()))
                         : fail_record("subgroup_valid", "chosen subset is not a subgroup"));
    }
    {
        const Subgroup sub = make_subgroup(g, K);
        const int ks = static_cast<int>(K.size());
        auto partitions = [&](const CosetDecomposition& dec, bool fixed_size) {
            std::vector<char> seen(static_cast<size_t>(n), 0);
            int total = 0;
            for (const auto& cls : dec.classes) {
                if (fixed_size && static_cast<int>(cls.size()) != ks) return false;
                if (!fixed_size && static_cast<int>(cls.size()) % ks != 0) return false;
                for (int x : cls) {
                    if (x < 0 || x >= n || seen[static_cast<size_t>(x)]) return false;
                    seen[static_cast<size_t>(x)] = 1;
                    ++total;
                }
            }
            return total == n;
        };
        const bool ok = n % ks == 0 &&
                        static_cast<int>(left_cosets(*g, sub).classes.size()) == n / ks &&
                        static_cast<int>(right_cosets(*g, sub).classes.size()) == n / ks &&
                        partitions(left_cosets(*g, sub), true) &&
                        partitions(right_cosets(*g, sub), true) &&
                        partitions(double_cosets(*g, sub), false);
        out.push_back(ok ? pass_record("cosets_partition")
                         : fail_record("cosets_partition",
                                       "a coset decomposition does not partition the group"));
    }
    return out;
}

namespace detail {

struct TargetPlan {
    std::string target;
    HopfStarAlgebra A;
    Duality Du;
    ModularData md;
    Vec h;
    bool base_function = false;  // pointwise model: closed forms + subset classification
    bool base_group = false;     // convolution model: closed forms + double-coset basis
    bool central = false;
    int expect_compact = 0, expect_legs = 0, expect_c1 = 0;
    std::string why_compact, why_legs, why_c1;
    std::optional<Subspace> exact_legs, exact_c1;
    std::shared_ptr<HopfStarAlgebra> canon_quotient;
    Scalar quotient_scale = Scalar(1);
    std::shared_ptr<HopfStarAlgebra> canon_legs;
    Scalar legs_scale = Scalar(1);
};

using TaskResult = std::vector<std::pair<std::string, CheckRecord>>;

struct Task {
    std::string target;
    std::string fallback_id;  // id the failure lands on if the task throws
    std::function<TaskResult()> run;
};

inline TaskResult tag(const std::string& target, std::vector<CheckRecord> recs) {
    TaskResult out;
    for (auto& r : recs) out.emplace_back(target, std::move(r));
    return out;
}

}  // namespace detail

inline VerificationReport run_suite(const InstanceSpec& spec, const SuiteOptions& opt = {}) {
    const GroupPtr& g = spec.group;
    if (g == nullptr) throw std::invalid_argument("run_suite: no group");
    if (g->order > order_cap())
        throw std::runtime_error("group order " + std::to_string(g->order) +
                                 " exceeds the cap " + std::to_string(order_cap()) +
                                 " (raise QHG_ORDER_CAP to override)");
    if (spec.subgroup.empty() || !is_subgroup_set(*g, spec.subgroup))
        throw std::invalid_argument("run_suite: chosen subset is not a subgroup");

    const std::vector<int>& K = spec.subgroup;
    const int n = g->order;
    const int ks = static_cast<int>(K.size());
    const int index = n / ks;
    const Subgroup sub = make_subgroup(g, K);
    const bool normal = is_normal(*g, sub);
    const int ndc = static_cast<int>(double_cosets(*g, sub).classes.size());
    const Rational w = spec.weight;
    const Rational w_dual = Rational(1) / w;

    // coset indicator spaces for the exact-basis expectations
    std::vector<Vec> left_ind, double_ind, unit_vecs;
    for (const auto& cls : left_cosets(*g, sub).classes)
        left_ind.push_back(subset_indicator(n, cls));
    for (const auto& cls : double_cosets(*g, sub).classes)
        double_ind.push_back(subset_indicator(n, cls));
    for (int k : K) unit_vecs.push_back(Vec::unit(n, k));

    std::vector<detail::TargetPlan> plans;
    {
        detail::TargetPlan p;
        p.target = "function_model";
        p.A = build_function_algebra(g, w);
        p.h = subset_indicator(n, K);
        p.base_function = true;
        p.expect_compact = ks;
        p.why_compact = "order of the subgroup";
        p.expect_legs = index;
        p.why_legs = "index of the subgroup";
        p.expect_c1 = ndc;
        p.why_c1 = "number of double cosets";
        p.exact_legs = Subspace::from_span(n, left_ind);
        p.exact_c1 = Subspace::from_span(n, double_ind);
        p.canon_quotient =
            std::make_shared<HopfStarAlgebra>(build_function_algebra(subgroup_group(g, K), w));
        if (normal) {
            const auto q = quotient_group(g, sub);
            p.canon_legs = std::make_shared<HopfStarAlgebra>(
                build_function_algebra(q.group, w * Rational(ks)));
        }
        plans.push_back(std::move(p));
    }
    {
        detail::TargetPlan p;
        p.target = "group_model";
        p.A = build_group_algebra(g, w);
        p.h = uniform_average(n, K);
        p.base_group = true;
        p.expect_compact = ndc;
        p.why_compact = "number of double cosets";
        p.expect_legs = ks;
        p.why_legs = "order of the subgroup";
        p.expect_c1 = ks;
        p.why_c1 = "order of the subgroup";
        p.exact_legs = Subspace::from_span(n, unit_vecs);
        p.exact_c1 = p.exact_legs;
        if (normal) {
            const auto q = quotient_group(g, sub);
            p.canon_quotient = std::make_shared<HopfStarAlgebra>(
                build_group_algebra(q.group, w / Rational(ks)));
            p.quotient_scale = Scalar(Rational(1, ks));
        }
        p.canon_legs =
            std::make_shared<HopfStarAlgebra>(build_group_algebra(subgroup_group(g, K), w));
        plans.push_back(std::move(p));
    }
    if (spec.with_duals) {
        for (int b = 0; b < 2; ++b) {
            const detail::TargetPlan& base = plans[static_cast<size_t>(b)];
            detail::TargetPlan p;
            p.target = base.target + "_dual";
            {
                Duality du = dualize(base.A);
                p.A = du.dual;
                p.h = fourier_projection(base.A, du, base.h);
            }
            p.expect_compact = b == 0 ? ndc : ks;
            p.why_compact = b == 0 ? "number of double cosets" : "order of the subgroup";
            p.expect_legs = b == 0 ? ks : index;
            p.why_legs = b == 0 ? "order of the subgroup" : "index of the subgroup";
            p.expect_c1 = b == 0 ? ks : ndc;
            p.why_c1 = b == 0 ? "order of the subgroup" : "number of double cosets";
            plans.push_back(std::move(p));
        }
    }
    for (auto& p : plans) {
        p.Du = dualize(p.A);
        p.md = compute_modular_data(p.A);
        p.central = left_mult_matrix(p.A, p.h) == right_mult_matrix(p.A, p.h);
    }

    // chains of nested projections (ascending subgroups)
    std::vector<std::vector<int>> chain = spec.chain;
    if (chain.empty()) {
        chain.push_back({g->identity});
        chain.push_back(K);
        std::vector<int> all(static_cast<size_t>(n));
        for (int i = 0; i < n; ++i) all[static_cast<size_t>(i)] = i;
        chain.push_back(all);
        chain.erase(std::unique(chain.begin(), chain.end(),
                                [](const std::vector<int>& a, const std::vector<int>& b) {
                                    return a.size() == b.size();
                                }),
                    chain.end());
    }
    for (const auto& c : chain)
        if (c.empty() || !is_subgroup_set(*g, c))
            throw std::invalid_argument("run_suite: a chain entry is not a subgroup");
    for (size_t i = 0; i + 1 < chain.size(); ++i) {
        std::vector<char> in_next(static_cast<size_t>(n), 0);
        for (int x : chain[i + 1]) in_next[static_cast<size_t>(x)] = 1;
        for (int x : chain[i])
            if (!in_next[static_cast<size_t>(x)])
                throw std::invalid_argument("run_suite: chain entries are not nested");
    }

    std::vector<detail::Task> tasks;
    const std::string iname = spec.name;

    tasks.push_back({"group", "group_valid",
                     [g, K]() { return detail::tag("group", verify_group_data(g, K)); }});

    for (const auto& plan : plans) {
        const detail::TargetPlan* p = &plan;
        const std::string t = p->target;
        tasks.push_back({t, "hopf_unit", [p, t]() { return detail::tag(t, verify_axioms(p->A)); }});
        tasks.push_back({t, "modular_delta_defining", [p, t]() {
                             auto recs = verify_modular(p->A, p->md);
                             recs.push_back(check_canonical_modular_trivial(p->A, p->md));
                             return detail::tag(t, recs);
                         }});
        tasks.push_back({t, "dual_pairing_antipode", [p, t]() {
                             auto recs = verify_duality(p->A, p->Du, p->md);
                             recs.push_back(check_bidual(p->A));
                             return detail::tag(t, recs);
                         }});
        tasks.push_back({t, "glp_def_certified", [p, t, g]() {
                             auto recs = verify_glp(p->A, p->md, p->h);
                             recs.push_back(check_fourier_projection(p->A, p->Du, p->h));
                             Centrality c = centrality_equivalences(p->A, p->Du, p->h);
                             for (auto& r : c.records) recs.push_back(std::move(r));
                             if (p->base_function)
                                 recs.push_back(check_subset_projection_classification(g, p->A));
                             else
                                 recs.push_back(skip_record(
                                     "prop1_4_exhaustive",
                                     "classification runs on the pointwise function model"));
                             return detail::tag(t, recs);
                         }});
        tasks.push_back({t, "compact_dim_expected", [p, t, g, K]() {
                             std::vector<CheckRecord> recs;
                             const CompactHypergroup H = build_compact(p->A, p->h);
                             recs.push_back(check_compact_dim(H, p->expect_compact, p->why_compact));
                             for (auto& r : verify_compact(p->A, H, p->central))
                                 recs.push_back(std::move(r));
                             if (p->central) {
                                 for (auto& r : verify_central_quotient(
                                          p->A, p->h, p->canon_quotient.get(), p->quotient_scale))
                                     recs.push_back(std::move(r));
                             } else {
                                 recs.push_back(skip_record("prop2_1_central_quotient",
                                                            "h is not central"));
                                 recs.push_back(skip_record("compact_central_reproduces",
                                                            "h is not central"));
                             }
                             if (p->base_group) {
                                 for (auto& r : verify_hecke(p->A, H, g, K))
                                     recs.push_back(std::move(r));
                             } else {
                                 for (const char* id :
                                      {"hecke_pi_double_coset", "hecke_product_formula",
                                       "hecke_structure_constants", "hecke_comult_grouplike",
                                       "hecke_span_matches_hAh", "hecke_slice_formula"})
                                     recs.push_back(skip_record(
                                         id, "convolution construction; applies to the "
                                             "group-algebra model"));
                             }
                             return detail::tag(t, recs);
                         }});
        tasks.push_back({t, "legs_two_slice_families_agree", [p, t, g, K]() {
                             auto recs = verify_legs(p->A, p->md, p->h);
                             const Legs L = build_legs(p->A, p->h);
                             recs.push_back(check_legs_dim(
                                 L, p->expect_legs, p->why_legs,
                                 p->exact_legs ? &*p->exact_legs : nullptr));
                             if (p->base_function)
                                 recs.push_back(check_coset_orientation(p->A, L, g, K));
                             else
                                 recs.push_back(skip_record(
                                     "legs_coset_orientation",
                                     "coset orientation applies to the pointwise function model"));
                             recs.push_back(check_span_closed(p->A, L.right.basis));
                             return detail::tag(t, recs);
                         }});
        tasks.push_back({t, "prop3_11_idempotent_images", [p, t, g, K]() {
                             const DiscreteData D = build_discrete(p->A, p->h);
                             auto recs = verify_discrete(p->A, p->md, D);
                             recs.push_back(check_c1_dim(D, p->expect_c1, p->why_c1,
                                                         p->exact_c1 ? &*p->exact_c1 : nullptr));
                             if (p->base_function) {
                                 for (auto& r : check_discrete_closed_forms(p->A, D, g, K))
                                     recs.push_back(std::move(r));
                             } else if (p->base_group) {
                                 for (auto& r : check_discrete_closed_forms_group(p->A, D, g, K))
                                     recs.push_back(std::move(r));
                             } else {
                                 recs.push_back(skip_record("ex3_18_expectation_closed_form",
                                                            "closed forms apply to the base models"));
                                 recs.push_back(skip_record("ex3_18_delta1_closed_form",
                                                            "closed forms apply to the base models"));
                             }
                             for (auto& r :
                                  verify_thm3_8(p->A, D, p->canon_legs.get(), p->legs_scale))
                                 recs.push_back(std::move(r));
                             return detail::tag(t, recs);
                         }});
    }

    {
        const detail::TargetPlan* fn = &plans[0];
        const detail::TargetPlan* gr = &plans[1];
        tasks.push_back({"cross_model", "dual_function_model_is_group_model",
                         [fn, gr, g, K, w, w_dual]() {
                             std::vector<CheckRecord> recs;
                             {
                                 const auto canonical = build_group_algebra(g, w_dual);
                                 recs.push_back(
                                     algebras_equal(fn->Du.dual, canonical)
                                         ? pass_record("dual_function_model_is_group_model",
                                                       "weight 1/w")
                                         : fail_record("dual_function_model_is_group_model",
                                                       "dual of the function model is not the "
                                                       "group model"));
                             }
                             {
                                 const auto canonical = build_function_algebra(g, w_dual);
                                 Mat inv_perm(g->order, g->order);
                                 for (int j = 0; j < g->order; ++j)
                                     inv_perm.at(g->inv(j), j) = Scalar(1);
                                 const auto moved =
                                     transport(gr->Du.dual, inv_perm, canonical.labels);
                                 recs.push_back(
                                     algebras_equal(moved, canonical)
                                         ? pass_record("dual_group_model_is_function_model",
                                                       "weight 1/w, composed with inversion")
                                         : fail_record("dual_group_model_is_function_model",
                                                       "dual of the group model is not the "
                                                       "function model composed with inversion"));
                             }
                             {
                                 const DiscreteData D = build_discrete(fn->A, fn->h);
                                 const HeckeData H = build_hecke(g, K);
                                 const int hd = static_cast<int>(H.classes.size());
                                 recs.push_back(
                                     D.c1.dim == hd
                                         ? pass_record("discrete_hecke_dim_match",
                                                       "both equal " + std::to_string(hd))
                                         : fail_record(
                                               "discrete_hecke_dim_match",
                                               "dim C1 = " + std::to_string(D.c1.dim) +
                                                   " but the convolution side has " +
                                                   std::to_string(hd) + " classes"));
                             }
                             return detail::tag("cross_model", recs);
                         }});
    }

    for (int b = 0; b < 2; ++b) {
        const detail::TargetPlan* p = &plans[static_cast<size_t>(b)];
        const std::string t = std::string("chain_") + p->target;
        const bool reversed = p->base_group;  // averages shrink as the subgroup grows
        tasks.push_back({t, "chain_order", [p, t, n, chain, reversed]() {
                             std::vector<CheckRecord> recs;
                             std::vector<Vec> hs;
                             for (const auto& c : chain)
                                 hs.push_back(p->base_function ? subset_indicator(n, c)
                                                               : uniform_average(n, c));
                             for (size_t i = 0; i + 1 < hs.size(); ++i) {
                                 const Vec& small = reversed ? hs[i + 1] : hs[i];
                                 const Vec& big = reversed ? hs[i] : hs[i + 1];
                                 for (auto& r : verify_chain_pair(p->A, p->Du, small, big))
                                     recs.push_back(std::move(r));
                                 recs.push_back(check_chain_legs(p->A, small, big));
                             }
                             recs.push_back(check_leg_monotone(p->A, hs));
                             return detail::tag(t, recs);
                         }});
    }

    // run tasks (deterministic assembly independent of worker count)
    std::vector<detail::TaskResult> slots(tasks.size());
    const int jobs = std::max(1, opt.jobs);
    auto run_one = [&](size_t i) {
        try {
            slots[i] = tasks[i].run();
        } catch (const std::exception& e) {
            slots[i] = {{tasks[i].target,
                         fail_record(tasks[i].fallback_id,
                                     std::string("construction failed: ") + e.what())}};
        }
    };
    if (jobs == 1 || tasks.size() <= 1) {
        for (size_t i = 0; i < tasks.size(); ++i) run_one(i);
    } else {
        std::atomic<size_t> next{0};
        std::vector<std::thread> pool;
        const int nw = std::min<int>(jobs, static_cast<int>(tasks.size()));
        for (int t = 0; t < nw; ++t)
            pool.emplace_back([&]() {
                for (;;) {
                    const size_t i = next.fetch_add(1);
                    if (i >= tasks.size()) return;
                    run_one(i);
                }
            });
        for (auto& th : pool) th.join();
    }

    VerificationReport report;
    report.instance = iname;
    for (auto& slot : slots)
        for (auto& [target, rec] : slot) report.add(target, std::move(rec));
    report.canonicalize();
    return report;
}

}  // namespace qhg
