// Acceptance runner: builds the whole instance catalog in both models (plus
// duals), runs every check family through the orchestrator, and condenses the
// outcome into one line per criterion. Exits nonzero if any criterion fails.

#include <iostream>
#include <set>

#include <qhg/json_io.hpp>

using namespace qhg;

namespace {

struct Instance {
    std::string group;
    std::string subgroup;        // catalog key, or empty when elems is explicit
    std::vector<int> elems;      // used when subgroup is empty
    bool group_model_central;    // oracle: K normal in G
};

// The catalog: every construction below runs on each of these in the
// pointwise-function model, the convolution (group-algebra) model, and both
// duals. The last entry exists for the centrality truth table.
const std::vector<Instance> kCatalog = {
    {"cyclic(6)", "order3", {}, true},
    {"cyclic(4)", "order2", {}, true},
    {"symmetric(3)", "transposition", {}, false},
    {"symmetric(3)", "alternating", {}, true},
    {"klein4", "", {0, 1}, true},
    {"dihedral(4)", "center", {}, true},
    {"quaternion8", "i_subgroup", {}, true},
    {"symmetric(4)", "point_stabilizer", {}, false},
    {"symmetric(4)", "klein_normal", {}, true},
    {"dihedral(4)", "reflection", {}, false},
};

const std::vector<std::string> kModelTargets = {"function_model", "group_model",
                                                "function_model_dual", "group_model_dual"};

struct Run {
    Instance inst;
    InstanceSpec spec;
    VerificationReport report;
};

std::vector<Run> g_runs;
std::vector<std::string> g_notes;  // failure details for the summary

void note(const std::string& s) { g_notes.push_back(s); }

const CheckRecord* find(const VerificationReport& rep, const std::string& target,
                        const std::string& id) {
    for (const auto& [t, r] : rep.records)
        if (t == target && r.id == id) return &r;
    return nullptr;
}

bool expect_status(const Run& run, const std::string& target, const std::string& id,
                   CheckStatus want) {
    const CheckRecord* r = find(run.report, target, id);
    if (r == nullptr) {
        note(run.spec.name + " " + target + "/" + id + ": record missing");
        return false;
    }
    if (r->status != want) {
        note(run.spec.name + " " + target + "/" + id + ": " + r->detail);
        return false;
    }
    return true;
}

bool pass_everywhere(const std::vector<std::string>& ids,
                     const std::vector<std::string>& targets) {
    bool ok = true;
    for (const Run& run : g_runs)
        for (const auto& t : targets)
            for (const auto& id : ids) ok &= expect_status(run, t, id, CheckStatus::Pass);
    return ok;
}

// --------------------------------------------------------------------------
// criteria

bool criterion1_axioms() {
    bool ok = true;
    for (const Run& run : g_runs)
        for (const auto& t : kModelTargets) {
            int seen = 0;
            for (const auto& [target, r] : run.report.records) {
                if (target != t) continue;
                const bool axiom = r.id.rfind("hopf_", 0) == 0 ||
                                   r.id.rfind("integral_", 0) == 0 ||
                                   r.id == "local_units_unital" || r.id == "type_compact" ||
                                   r.id == "type_discrete";
                if (!axiom) continue;
                ++seen;
                if (r.status != CheckStatus::Pass) {
                    note(run.spec.name + " " + t + "/" + r.id + ": " + r.detail);
                    ok = false;
                }
            }
            if (seen != 22) {
                note(run.spec.name + " " + t + ": expected 22 axiom checks, saw " +
                     std::to_string(seen));
                ok = false;
            }
        }
    return ok;
}

bool criterion2_group_like() {
    return pass_everywhere({"glp_def_certified", "glp_prop16", "glp_prop17"}, kModelTargets);
}

bool criterion3_classification() {
    bool ok = true;
    for (const Run& run : g_runs) {
        ok &= expect_status(run, "function_model", "prop1_4_exhaustive", CheckStatus::Pass);
        const CheckRecord* r = find(run.report, "function_model", "prop1_4_exhaustive");
        if (r != nullptr && run.spec.group->order <= 8 &&
            r->detail.rfind("exhaustive over", 0) != 0) {
            note(run.spec.name + ": classification was not exhaustive: " + r->detail);
            ok = false;
        }
    }
    return ok;
}

bool criterion4_fourier() {
    return pass_everywhere({"glp_fourier_certified", "plancherel_basis", "fourier_roundtrip",
                            "fourier_inverse_formula"},
                           kModelTargets);
}

bool criterion5_centrality() {
    bool ok = pass_everywhere({"prop1_10_agreement"}, kModelTargets);
    for (const Run& run : g_runs) {
        const auto want = [&](const std::string& target, bool central) {
            const CheckRecord* r = find(run.report, target, "prop1_10_central");
            const std::string expect = central ? "central=true" : "central=false";
            if (r == nullptr || r->detail != expect) {
                note(run.spec.name + " " + target + ": expected " + expect + ", got " +
                     (r ? r->detail : "missing"));
                return false;
            }
            return true;
        };
        ok &= want("function_model", true);
        ok &= want("group_model", run.inst.group_model_central);
    }
    return ok;
}

bool criterion6_compact() {
    bool ok = pass_everywhere(
        {"compact_dim_expected", "prop2_3_unital", "prop2_3_positive_factorization",
         "prop2_3_gram_psd", "prop2_3_coassociative", "post2_3_counit_laws",
         "post2_3_antipode_props", "prop2_4_integrals_coincide", "prop2_4_two_sided_invariance",
         "prop2_5_antipode_integral", "prop2_6_span", "thm2_7_certified"},
        kModelTargets);
    ok &= pass_everywhere({"hecke_pi_double_coset", "hecke_product_formula",
                           "hecke_structure_constants", "hecke_comult_grouplike",
                           "hecke_span_matches_hAh", "hecke_slice_formula"},
                          {"group_model"});
    for (const Run& run : g_runs) {
        ok &= expect_status(run, "function_model", "compact_central_reproduces",
                            CheckStatus::Pass);
        ok &= expect_status(run, "group_model", "compact_central_reproduces",
                            run.inst.group_model_central ? CheckStatus::Pass
                                                         : CheckStatus::Skipped);
    }
    return ok;
}

bool criterion7_discrete() {
    bool ok = pass_everywhere(
        {"legs_dim_expected", "c1_dim_expected", "prop3_2_membership",
         "prop3_3_star_subalgebra", "prop3_3_left_invariant", "prop3_4_kernel_characterizations",
         "prop3_6_s2_sigma_delta", "prop3_7_semisimple", "prop3_10_c1_subalgebra",
         "prop3_11_idempotent_images", "prop3_11_bimodule", "prop3_11_positive_faithful",
         "prop3_11_antipode_exchange", "prop3_11_commute", "lemma3_12_two_expressions",
         "prop3_13_ranges", "prop3_13_coassociative", "lemma3_14_integral_invariance",
         "post3_14_invariance_delta1", "prop3_15_antipode_integral", "prop3_16_span",
         "thm3_17_certified"},
        kModelTargets);
    ok &= pass_everywhere({"ex3_18_expectation_closed_form", "ex3_18_delta1_closed_form"},
                          {"function_model", "group_model"});
    for (const Run& run : g_runs)
        for (const auto& t : kModelTargets) {
            // legs coincide on the co-commutative side (group model and the
            // dual of the function model); elsewhere exactly when K is normal
            const bool legs_equal = t == "group_model" || t == "function_model_dual" ||
                                    run.inst.group_model_central;
            const CheckRecord* gate = find(run.report, t, "thm3_8_gate");
            if (gate == nullptr ||
                gate->detail.find(legs_equal ? "coincide" : "differ") == std::string::npos) {
                note(run.spec.name + " " + t + ": unexpected gate: " +
                     (gate ? gate->detail : "missing"));
                ok = false;
                continue;
            }
            if (legs_equal) {
                ok &= expect_status(run, t, "thm3_8_c_axioms", CheckStatus::Pass);
                ok &= expect_status(run, t, "thm3_8_t1_inverse_formula", CheckStatus::Pass);
                ok &= expect_status(run, t, "thm3_8_witness", CheckStatus::Skipped);
            } else {
                ok &= expect_status(run, t, "thm3_8_witness", CheckStatus::Pass);
                ok &= expect_status(run, t, "thm3_8_c_axioms", CheckStatus::Skipped);
            }
        }
    return ok;
}

bool criterion8_chains() {
    bool ok = true;
    int seen = 0;
    for (const Run& run : g_runs) {
        if (run.spec.name != "cyclic(4)/order2" && run.spec.name != "symmetric(3)/alternating")
            continue;
        ++seen;
        for (const auto& [target, r] : run.report.records) {
            if (target.rfind("chain_", 0) != 0) continue;
            if (r.status != CheckStatus::Pass) {
                note(run.spec.name + " " + target + "/" + r.id + ": " + r.detail);
                ok = false;
            }
        }
    }
    return ok && seen == 2;
}

bool criterion9_determinism() {
    bool ok = true;
    for (const InstanceSpec& spec : {instance_from_catalog("symmetric(3)", "transposition"),
                                     instance_from_catalog("quaternion8", "i_subgroup")}) {
        SuiteOptions j1, j8;
        j1.jobs = 1;
        j8.jobs = 8;
        const std::string a = report_json(run_suite(spec, j1)).dump();
        const std::string b = report_json(run_suite(spec, j8)).dump();
        if (a != b) {
            note(spec.name + ": reports differ between --jobs 1 and --jobs 8");
            ok = false;
        }
    }
    return ok;
}

bool criterion10_negative_controls() {
    bool ok = true;
    const GroupPtr g = catalog("symmetric(3)").group;
    const HopfStarAlgebra A = build_function_algebra(g, Rational(1));
    VerificationReport controls;
    controls.instance = "negative controls";

    {
        HopfStarAlgebra bad = A;
        for (int i = 0; i < bad.dim; ++i) std::swap(bad.antipode.at(i, 0), bad.antipode.at(i, 1));
        const CheckRecord* hit = nullptr;
        auto recs = verify_axioms(bad);
        for (const auto& r : recs)
            if (r.id == "hopf_antipode_laws" && r.status == CheckStatus::Fail) hit = &r;
        if (hit == nullptr || hit->witness.empty()) {
            note("corrupted antipode was not flagged with a witness");
            ok = false;
        } else {
            controls.add("corrupted_antipode", *hit);
        }
    }
    {
        InstanceSpec spec = instance_from_catalog("symmetric(3)", "transposition");
        spec.subgroup = {0, 1, 2};
        bool threw = false;
        try {
            run_suite(spec, {});
        } catch (const std::invalid_argument&) {
            threw = true;
        }
        const ModularData md = compute_modular_data(A);
        auto recs = verify_glp(A, md, subset_indicator(g->order, {0, 1, 2}));
        const CheckRecord* hit = nullptr;
        for (const auto& r : recs)
            if (r.id == "glp_def_certified" && r.status == CheckStatus::Fail) hit = &r;
        if (!threw || hit == nullptr || hit->witness.empty()) {
            note("non-subgroup subset was not rejected with a witness");
            ok = false;
        } else {
            controls.add("non_subgroup_subset", *hit);
        }
    }
    {
        Vec v(A.dim);
        v[0] = Scalar(1);
        v[1] = Scalar(-1);
        const CheckRecord rec = check_span_closed(A, {v});
        if (rec.status != CheckStatus::Fail || rec.witness.empty()) {
            note("non-closed subspace was not flagged with a witness");
            ok = false;
        } else {
            controls.add("non_closed_subspace", rec);
        }
    }
    if (ok) {
        const json j = report_json(controls);
        if (j.at("records").size() != 3) ok = false;
        for (const auto& e : j.at("records"))
            if (!e.contains("witness") || e.at("witness").at("fields").empty()) {
                note("a control record serialized without its witness");
                ok = false;
            }
    }
    return ok;
}

}  // namespace

int main() {
    std::cout << "building the catalog: " << kCatalog.size()
              << " instances, four model targets each\n";
    for (const Instance& inst : kCatalog) {
        InstanceSpec spec;
        if (!inst.subgroup.empty()) {
            spec = instance_from_catalog(inst.group, inst.subgroup);
        } else {
            spec.name = inst.group + "/order" + std::to_string(inst.elems.size());
            spec.group = catalog(inst.group).group;
            spec.subgroup = inst.elems;
        }
        SuiteOptions opt;
        opt.jobs = 4;
        Run run{inst, spec, run_suite(spec, opt)};
        std::cout << "  " << run.spec.name << ": " << run.report.records.size() << " checks, "
                  << run.report.count(CheckStatus::Fail) << " failed\n";
        g_runs.push_back(std::move(run));
    }
    std::cout << "\n";

    struct Criterion {
        const char* name;
        bool (*fn)();
    };
    const std::vector<Criterion> criteria = {
        {"1. structure and integral axioms pass exactly on every instance and dual",
         criterion1_axioms},
        {"2. subgroup indicators and averages certify as group-like projections",
         criterion2_group_like},
        {"3. indicator classification: group-like iff the subset is a subgroup",
         criterion3_classification},
        {"4. Fourier image certifies; Plancherel and inversion hold exactly",
         criterion4_fourier},
        {"5. the four centrality conditions agree and match the normality table",
         criterion5_centrality},
        {"6. corner algebra: dimensions, double-coset realization, central case",
         criterion6_compact},
        {"7. leg algebras and the discrete part: dimensions, gate, closed forms",
         criterion7_discrete},
        {"8. nested projections order the corner and leg algebras", criterion8_chains},
        {"9. reports are byte-identical for 1 and 8 workers", criterion9_determinism},
        {"10. negative controls fail with serialized witnesses", criterion10_negative_controls},
    };

    int passed = 0;
    for (const auto& c : criteria) {
        g_notes.clear();
        const bool ok = c.fn();
        std::cout << "[" << (ok ? "PASS" : "FAIL") << "] " << c.name << "\n";
        for (const auto& n : g_notes) std::cout << "       " << n << "\n";
        if (ok) ++passed;
    }

    std::cout << "\n" << passed << "/" << criteria.size() << " acceptance criteria passed\n";
    return passed == static_cast<int>(criteria.size()) ? 0 : 1;
}
