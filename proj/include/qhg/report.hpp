#pragma once

// Check records and the static check registry.
//
// Every runtime check the engine can emit has exactly one entry here; the
// entry carries the machine id, the claim key it certifies in the claim
// ledger, and a plain-math statement. Reports list records in registry order
// (then target order), which is what makes serialized reports deterministic.

#include <algorithm>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace qhg {

enum class CheckStatus { Pass, Fail, Skipped, Finding };

inline const char* status_name(CheckStatus s) {
    switch (s) {
        case CheckStatus::Pass: return "pass";
        case CheckStatus::Fail: return "fail";
        case CheckStatus::Skipped: return "skipped";
        case CheckStatus::Finding: return "finding";
    }
    return "?";
}

struct Witness {
    std::string description;
    std::vector<std::pair<std::string, std::string>> fields;  // ordered key/value

    bool empty() const { return description.empty() && fields.empty(); }
};

struct CheckRecord {
    std::string id;
    CheckStatus status = CheckStatus::Pass;
    std::string detail;   // short free text ("central=true", failure summary)
    Witness witness;      // populated on fail / finding when useful
    long micros = 0;      // in-memory only; never serialized (determinism)
};

inline CheckRecord pass_record(std::string id, std::string detail = "") {
    return CheckRecord{std::move(id), CheckStatus::Pass, std::move(detail), {}, 0};
}
inline CheckRecord fail_record(std::string id, std::string detail, Witness w = {}) {
    return CheckRecord{std::move(id), CheckStatus::Fail, std::move(detail), std::move(w), 0};
}
inline CheckRecord skip_record(std::string id, std::string detail) {
    return CheckRecord{std::move(id), CheckStatus::Skipped, std::move(detail), {}, 0};
}
inline CheckRecord finding_record(std::string id, std::string detail, Witness w = {}) {
    return CheckRecord{std::move(id), CheckStatus::Finding, std::move(detail), std::move(w), 0};
}

struct CheckDef {
    const char* id;
    const char* claims;     // comma-separated claim keys this check certifies
    const char* statement;  // the identity/property, in plain math
};

// Registry order is canonical report order.
inline const std::vector<CheckDef>& check_registry() {
    static const std::vector<CheckDef> defs = {
        // group data
        {"group_valid", "struct", "multiplication table is a finite group (Latin square, associative, identity, inverses)"},
        {"subgroup_valid", "struct", "chosen subset is a subgroup; coset decompositions partition the group"},
        {"cosets_partition", "struct", "left/right/double coset classes partition G; |G| = [G:K]*|K|"},
        // algebra axioms
        {"hopf_unit", "A.1", "1*b = b*1 = b for every basis element"},
        {"hopf_associativity", "A.1", "(ab)c = a(bc) on all basis triples"},
        {"hopf_comult_multiplicative", "A.1", "comultiplication is an algebra homomorphism on all basis pairs"},
        {"hopf_comult_star", "A.1", "comultiplication commutes with the star operation"},
        {"hopf_coassociativity", "A.1", "(comult x id)comult = (id x comult)comult on the basis"},
        {"hopf_counit_laws", "A.2", "(counit x id)comult(a) = a = (id x counit)comult(a)"},
        {"hopf_counit_star_homo", "A.2", "counit is a *-homomorphism to the scalars"},
        {"hopf_antipode_laws", "A.2", "m(S x id)comult(a) = counit(a)1 = m(id x S)comult(a)"},
        {"hopf_antipode_antimultiplicative", "A.2", "S(ab) = S(b)S(a); S(1) = 1"},
        {"hopf_antipode_bijective", "A.2", "S is invertible and S(a*) = (S^{-1}(a))* on the basis"},
        {"hopf_star_involution", "A.1", "star is an involutive conjugate-linear anti-automorphism"},
        {"hopf_canonical_t1_bijective", "A.1", "T1: a(x)b -> comult(a)(1(x)b) is bijective as a d^2 x d^2 matrix"},
        {"hopf_canonical_t2_bijective", "A.1", "T2: a(x)b -> (a(x)1)comult(b) is bijective as a d^2 x d^2 matrix"},
        {"integral_left_invariant", "A.3", "(id x phi)comult(a) = phi(a)1 for every basis a"},
        {"integral_right_invariant", "A.3", "(psi x id)comult(a) = psi(a)1 for every basis a"},
        {"integral_faithful", "A.3", "the sesquilinear forms phi(a* b) and psi(a* b) have full rank d"},
        {"integral_positive", "A.3", "phi(a* a) >= 0 and psi(a* a) >= 0: Gram matrices are Hermitian PSD (exact LDL pivots)"},
        {"integral_a4_antipode_phi", "A.4", "S((id x phi)(comult(a)(1(x)b))) = (id x phi)((1(x)a)comult(b)) on all basis pairs"},
        {"integral_a4_antipode_psi", "A.4", "S((psi x id)((b(x)1)comult(a))) = (psi x id)(comult(b)(a(x)1)) on all basis pairs"},
        {"local_units_unital", "A.7", "the unit is a (global) local unit for every basis element"},
        {"type_compact", "A.8", "classification: algebra has an identity (compact type)"},
        {"type_discrete", "A.8", "classification: a nonzero left co-integral exists (discrete type), found by linear solve"},
        // modular data
        {"modular_delta_defining", "A.5", "(phi x id)comult(a) = phi(a)delta for every basis a"},
        {"modular_delta_inverse", "A.5", "(id x psi)comult(a) = psi(a)delta^{-1} for every basis a"},
        {"modular_sigma_defining", "A.5", "phi(ab) = phi(b sigma(a)) on all basis pairs"},
        {"modular_sigma_prime_defining", "A.5", "psi(ab) = psi(b sigma'(a)) on all basis pairs"},
        {"modular_nu_defining", "A.5", "phi(S^2(a)) = nu phi(a) for every basis a"},
        {"modular_eps_delta", "A.5", "counit(delta) = 1"},
        {"modular_s_delta", "A.5", "S(delta) = delta^{-1}"},
        {"modular_sigma_prime_conjugation", "A.5", "sigma'(a) = delta sigma(a) delta^{-1}"},
        {"modular_s_sigma_interchange", "A.5", "S∘sigma' = sigma^{-1}∘S"},
        {"modular_sigma_star", "A.5", "sigma(a)* = sigma^{-1}(a*)"},
        {"modular_sigma_delta_scaling", "A.5", "sigma(delta) = sigma'(delta) = nu^{-1} delta"},
        {"modular_comult_sigma", "A.5", "comult(sigma(a)) = (S^2 x sigma)comult(a)"},
        {"modular_comult_sigma_prime", "A.5", "comult(sigma'(a)) = (sigma' x S^{-2})comult(a)"},
        {"modular_comult_s2", "A.6", "comult(S^2(a)) = (sigma x sigma'^{-1})comult(a)"},
        {"modular_phi_s_delta", "A.5", "phi(S(a)) = phi(a delta) for every basis a"},
        {"modular_canonical_trivial", "1.2", "canonical models: sigma = sigma' = id, delta = 1, nu = 1"},
        // duality
        {"dual_pairing_antipode", "dual", "<S(a), b> = <a, S_B^{-1}(b)> on all basis pairs"},
        {"dual_integral_defining", "dual", "phi_B(F(a)) = counit(a) for every basis a, F the Fourier map"},
        {"dual_action_associative", "dual", "pairing product bookkeeping: induced module actions are associative on sampled triples"},
        {"dual_bidual", "dual", "double dual carries back to the original structure via the antipode change of basis"},
        {"dual_function_model_is_group_model", "dual,1.8", "the dual of the function model is exactly the group model on the same group, same normalization"},
        {"dual_group_model_is_function_model", "dual,1.8", "the dual of the group model is exactly the function model after composing with inversion"},
        {"fourier_linear_bijection", "1.8", "the Fourier map a -> phi(.a) is a linear bijection onto the dual"},
        {"fourier_roundtrip", "1.8", "inverse Fourier inverts Fourier exactly (basis and sampled elements)"},
        {"fourier_inverse_formula", "1.8", "slice formula for the inverse Fourier map agrees with the matrix inverse"},
        {"fourier_unit_cointegral", "A.8", "Fourier of the normalized co-integral is the unit functional"},
        {"plancherel_basis", "plancherel", "phi_B(F(a)* F(a)) = phi(a* a) on the basis"},
        {"plancherel_random", "plancherel", "phi_B(F(a)* F(a)) = phi(a* a) on 20 seeded pseudo-random elements"},
        {"propA9_pair_delta", "A.9", "<a, delta_B> = counit(sigma(a)) = counit(sigma'(a))"},
        {"propA9_pair_delta_inv", "A.9", "<a, delta_B^{-1}> = counit(sigma^{-1}(a)) = counit(sigma'^{-1}(a))"},
        {"propA9_pair_sigma", "A.9", "<a, sigma_B(b)> = <delta^{-1} S^{-2}(a), b>"},
        {"propA9_pair_sigma_inv", "A.9", "<a, sigma_B^{-1}(b)> = <delta S^2(a), b>"},
        // group-like projections
        {"glp_def_certified", "1.1,1.2", "h is nonzero, self-adjoint, idempotent, and comult(h)(1(x)h) = h(x)h"},
        {"glp_prop16", "1.6", "comult(h)(h(x)1) = h(x)h (and adjoint forms); counit(h)=1; S(h)=h"},
        {"glp_prop17", "1.7", "h delta = delta h = h; sigma(h) = sigma'(h) = h; nu = 1"},
        {"glp_fourier_certified", "1.8", "k = F(h)/phi(h) is a group-like projection in the dual, with all consequences"},
        {"prop1_10_agreement", "1.10", "the four centrality characterizations evaluate to the same boolean"},
        {"prop1_10_central", "1.10", "finding: whether h is central (shared value of the four tests)"},
        {"prop1_4_exhaustive", "1.4",
         "chi_T is group-like iff T is a subgroup; exhaustive over all 2^|G| subsets when "
         "|G| <= 12, else all small-seed closures plus seeded random subsets"},
        // compact hypergroup
        {"compact_dim_expected", "2.8", "dim hAh equals #(K\\G/K) (group model) / |K| (function model)"},
        {"prop2_1_central_quotient", "2.1,2.2", "central case: Ah with restricted structure passes the full axiom suite"},
        {"compact_central_reproduces", "2.1,2.2", "central case reproduces the canonical model on K (function) / G/K (group, K normal)"},
        {"prop2_3_unital", "2.3", "comult0(h) = h(x)h and comult0 maps into hAh (x) hAh"},
        {"prop2_3_positive_factorization", "2.3", "comult0(a* a) = ((comult(a)(h(x)h))* (comult(a)(h(x)h)) for basis a"},
        {"prop2_3_gram_psd", "2.3", "Gram matrix of {comult0(b_i)} under (phi0 x phi0)((.)*(.)) is Hermitian PSD"},
        {"prop2_3_coassociative", "2.3", "comult0 is coassociative on hAh"},
        {"post2_3_counit_laws", "2.3", "restricted counit satisfies both counit laws for comult0"},
        {"post2_3_antipode_props", "2.3", "S0(S0(a)*)* = a and comult0(S0(a)) = (S0 x S0)comult0^op(a)"},
        {"prop2_4_integrals_coincide", "2.4", "restrictions of phi and psi to hAh coincide"},
        {"prop2_4_two_sided_invariance", "2.4", "(id x phi0)comult0(a) = phi0(a)h = (phi0 x id)comult0(a)"},
        {"prop2_5_antipode_integral", "2.5", "S0((id x phi0)(comult0(a)(1(x)b))) = (id x phi0)((1(x)a)comult0(b))"},
        {"prop2_6_span", "2.6", "elements (id x phi0)(comult0(a)(1(x)b)) span hAh"},
        {"thm2_7_certified", "2.7", "aggregate: hAh is a compact quantum hypergroup (all section-2 families pass)"},
        {"compact_is_hopf", "2.1,2.8", "finding: whether comult0 is multiplicative (Hopf case); agrees with centrality"},
        {"hecke_pi_double_coset", "2.8", "pi(q) = pi(q') iff KqK = Kq'K; pi(q) = h iff q in K"},
        {"hecke_product_formula", "2.8", "pi(q)pi(q') = (1/n) sum_{r in K} pi(q r q')"},
        {"hecke_structure_constants", "2.8", "products expand exactly in the pi basis; coefficients match direct multiplication"},
        {"hecke_comult_grouplike", "2.8", "comult0(pi(q)) = pi(q)(x)pi(q); counit0(pi(q)) = 1; S0(pi(q)) = pi(q^{-1}); phi0(pi(q)) = [q in K]"},
        {"hecke_span_matches_hAh", "2.8", "span{pi(q)} equals the model-agnostic hAh subspace"},
        {"hecke_slice_formula", "2.8", "(id x phi0)(comult0(pi(q))(1(x)pi(q'))) = 0 unless pi(q') = pi(q^{-1}), else (|K ∩ q^{-1}Kq|/|K|) pi(q)"},
        // legs / C
        {"legs_two_slice_families_agree", "A.10,A.11", "both slice families of comult(h) generate the same right leg"},
        {"legs_rowspace_characterization", "A.12", "the right leg equals the row space of the comult(h) coefficient matrix"},
        {"legs_left_is_antipode_of_right", "3.1", "left leg of comult(h) = S(right leg)"},
        {"legs_coset_orientation", "3.18", "finding: which coset functional equation C matches in the function model (f(pk)=f(p) vs f(kp)=f(p))"},
        {"prop3_2_membership", "3.2", "for c in C: ch = counit(c)h; comult(c)(1(x)h) = c(x)h; (S(c)(x)1)comult(h) = (1(x)c)comult(h)"},
        {"prop3_3_star_subalgebra", "3.3", "C is a *-subalgebra containing h (and the unit)"},
        {"prop3_3_left_invariant", "3.3,A.13", "right legs of comult(C) lie in C (left invariance)"},
        {"prop3_4_kernel_characterizations", "3.4", "both kernel characterizations carve out exactly C"},
        {"prop3_5_leg_monotone", "3.5", "h <= h' implies C_{h'} ⊆ C_h"},
        {"prop3_6_s2_sigma_delta", "3.6", "S^2(C) = C; sigma = S^2 on C; C delta = delta C = C"},
        {"prop3_7_semisimple", "3.7", "C is semisimple: integral Gram has full rank and the trace form of the regular representation has zero radical"},
        {"propA14_nondegenerate", "A.14", "multiplication on C is non-degenerate from both sides"},
        {"propA15_local_units", "A.15", "C has local units (here: contains the unit, verified by solve)"},
        {"legs_dim_expected", "3.9,3.18", "dim C equals |K| (group model) / [G:K] (function model); group model C = span of subgroup basis vectors"},
        // discrete hypergroup
        {"prop3_11_idempotent_images", "3.11", "E and E' are idempotent with images C and S(C), identity on their images"},
        {"prop3_11_bimodule", "3.11", "E(ca) = cE(a) and E(ac) = E(a)c for c in C (mirrored for E')"},
        {"prop3_11_positive_faithful", "3.11", "Gram of phi∘E over the basis is Hermitian PSD and full-rank (E faithful and positive)"},
        {"prop3_11_antipode_exchange", "3.11", "E∘S = S∘E'"},
        {"prop3_11_commute", "3.11", "E∘E' = E'∘E, an idempotent onto C1 equal to the double-slice formula"},
        {"ex3_18_expectation_closed_form", "3.18", "function model: E(f)(p) = (1/n) sum_{k in K} f(pk), E'(f)(p) = (1/n) sum_{k in K} f(kp)"},
        {"lemma3_12_two_expressions", "3.12", "(E x id)comult(a) = (id x E')comult(a) for every basis a"},
        {"prop3_10_c1_subalgebra", "3.10", "C1 = C ∩ S(C) is a *-subalgebra, S-invariant, contains h and the unit"},
        {"c1_dim_expected", "3.18", "dim C1 = #(K\\G/K) (function model) / |K| (group model)"},
        {"c1_semisimple", "3.10", "C1 is semisimple (same two tests as C)"},
        {"sigma_preserves_c1", "3.6,3.10", "sigma and sigma' restrict to automorphisms of C1; sigma = S^2 there"},
        {"discrete_hecke_dim_match", "3.18", "dim C1 in the function model equals dim hBh of the dual Hecke hypergroup"},
        {"prop3_13_ranges", "3.13", "comult1(C1)(1(x)C1) and (C1(x)1)comult1(C1) lie in C1(x)C1"},
        {"prop3_13_coassociative", "3.13", "comult1 is coassociative on C1"},
        {"counit_restriction_delta1", "3.13", "the restricted counit is a counit for comult1"},
        {"lemma3_14_integral_invariance", "3.14", "phi∘E = phi, psi∘E = psi, phi∘E' = phi, psi∘E' = psi"},
        {"post3_14_invariance_delta1", "3.14", "restrictions of phi and psi are invariant for comult1"},
        {"prop3_15_antipode_integral", "3.15", "S((id x phi)(comult1(a)(1(x)b))) = (id x phi)((1(x)a)comult1(b)) on C1"},
        {"delta1_antipode_flip", "3.15", "comult1(S(a)) = (S x S)comult1^op(a) on C1"},
        {"prop3_16_span", "3.16", "elements (id x phi)(comult1(a)(1(x)b)) span C1"},
        {"delta1_slice_formula", "3.13", "comult1(a) = (id x phi0 x id)comult^(2)(a) for every basis a"},
        {"delta1_gram_psd", "3.17", "Gram matrix of {comult1(b_i)} under (phi x phi)((.)*(.)) is Hermitian PSD"},
        {"cointegral_two_sided", "3.17", "ah = counit(a)h = ha for all a in C1 (h is a two-sided co-integral)"},
        {"ex3_18_delta1_closed_form", "3.18", "function model: comult1(f)(p,q) = (1/n) sum_{k in K} f(pkq)"},
        {"thm3_17_certified", "3.17", "aggregate: (C1, comult1) is a discrete quantum hypergroup with co-integral h"},
        {"thm3_8_gate", "3.8", "finding: legs coincide -> discrete quantum group; otherwise hypergroup only"},
        {"thm3_8_c_axioms", "3.8", "legs-equal case: C with restricted structure passes the full axiom suite"},
        {"thm3_8_cointegral", "3.8", "legs-equal case: h is a two-sided co-integral of C (discrete type)"},
        {"thm3_8_t1_inverse_formula", "3.8", "legs-equal case: T1^{-1}(a(x)b) = (id x S)((1(x)S^{-1}(b))comult(a)) holds on C"},
        {"thm3_8_c_matches_canonical", "3.8,3.9", "legs-equal case: C matches the canonical model it must equal"},
        {"thm3_8_witness", "3.8", "legs-differ case: the Hopf antipode law genuinely fails on C1 (witness recorded)"},
        // ordered pairs / chains
        {"chain_order", "1.9", "hh' = h'h = h (ordered pair of group-like projections)"},
        {"chain_pre3_5", "3.5", "comult(h')(1(x)h) = h'(x)h and (h(x)1)comult(h') = h(x)h'"},
        {"chain_prop1_9", "1.9", "k k' = k' = k' k for the Fourier-transformed projections"},
        {"chain_prop3_5", "3.5", "C_{h'} ⊆ C_h"},
        {"subalgebra_closure_certified", "closure",
         "the candidate subspace is closed under multiplication and star"},
    };
    return defs;
}

inline const CheckDef* find_check(const std::string& id) {
    for (const auto& d : check_registry())
        if (id == d.id) return &d;
    return nullptr;
}

// A full verification report: records grouped by target ("function_model",
// "group_model_dual", ...), ordered by (target insertion order, registry order).
struct VerificationReport {
    std::string instance;
    std::vector<std::string> targets;
    std::vector<std::pair<std::string, CheckRecord>> records;  // (target, record)

    void add(const std::string& target, CheckRecord rec) {
        if (find_check(rec.id) == nullptr)
            throw std::logic_error("unregistered check id: " + rec.id);
        if (std::find(targets.begin(), targets.end(), target) == targets.end())
            targets.push_back(target);
        records.emplace_back(target, std::move(rec));
    }
    void add_all(const std::string& target, std::vector<CheckRecord> recs) {
        for (auto& r : recs) add(target, std::move(r));
    }

    int count(CheckStatus s) const {
        int n = 0;
        for (const auto& [t, r] : records)
            if (r.status == s) ++n;
        return n;
    }
    bool ok() const { return count(CheckStatus::Fail) == 0; }

    // Canonical order: targets in insertion order, records by registry index.
    void canonicalize() {
        std::map<std::string, int> reg_index;
        const auto& reg = check_registry();
        for (size_t i = 0; i < reg.size(); ++i) reg_index[reg[i].id] = static_cast<int>(i);
        std::map<std::string, int> tgt_index;
        for (size_t i = 0; i < targets.size(); ++i) tgt_index[targets[i]] = static_cast<int>(i);
        std::stable_sort(records.begin(), records.end(),
                         [&](const auto& a, const auto& b) {
                             int ta = tgt_index[a.first], tb = tgt_index[b.first];
                             if (ta != tb) return ta < tb;
                             return reg_index[a.second.id] < reg_index[b.second.id];
                         });
    }
};

}  // namespace qhg
