#pragma once

// Group-like projections: defining conditions, structural consequences, the
// transform to the dual side, centrality, and ordered pairs.

#include <qhg/duality.hpp>

#include <set>

namespace qhg {

inline bool is_group_like_projection(const HopfStarAlgebra& A, const Vec& h) {
    if (h.is_zero()) return false;
    if (star_of(A, h) != h) return false;
    if (mult_of(A, h, h) != h) return false;
    return t_rmul_second(A, comult_of(A, h), h) == Tensor2::outer(h, h);
}

// Indicator of a subset of points (function model).
inline Vec subset_indicator(int dim, const std::vector<int>& subset) {
    Vec h(dim);
    for (int t : subset) h[t] = Scalar(1);
    return h;
}

// Normalized average of translations over a subgroup (group model).
inline Vec uniform_average(int dim, const std::vector<int>& subset) {
    Vec h(dim);
    const Scalar w{Rational(1, static_cast<long>(subset.size()))};
    for (int t : subset) h[t] = w;
    return h;
}

// ---------------------------------------------------------------------------
// defining conditions and consequences

inline std::vector<CheckRecord> verify_glp(const HopfStarAlgebra& A, const ModularData& md,
                                           const Vec& h) {
    std::vector<CheckRecord> out;
    const Tensor2 hh = Tensor2::outer(h, h);
    const Tensor2 Dh = comult_of(A, h);
    {
        std::string bad;
        if (h.is_zero()) bad = "h = 0";
        else if (star_of(A, h) != h) bad = "h* != h";
        else if (mult_of(A, h, h) != h) bad = "h^2 != h";
        else if (t_rmul_second(A, Dh, h) != hh) bad = "comult(h)(1(x)h) != h(x)h";
        if (bad.empty())
            out.push_back(pass_record("glp_def_certified"));
        else {
            Witness w;
            w.description = "element offered as a group-like projection";
            w.fields = {{"h", element_str(A, h)}};
            out.push_back(fail_record("glp_def_certified", bad, w));
        }
    }
    {
        std::string bad;
        if (t_rmul_first(A, Dh, h) != hh) bad = "comult(h)(h(x)1) != h(x)h";
        else if (t_lmul_first(A, h, Dh) != hh) bad = "(h(x)1)comult(h) != h(x)h";
        else if (t_lmul_second(A, h, Dh) != hh) bad = "(1(x)h)comult(h) != h(x)h";
        else if (counit_of(A, h) != Scalar(1)) bad = "counit(h) != 1";
        else if (antipode_of(A, h) != h) bad = "S(h) != h";
        out.push_back(bad.empty() ? pass_record("glp_prop16") : fail_record("glp_prop16", bad));
    }
    {
        std::string bad;
        if (mult_of(A, h, md.delta) != h) bad = "h delta != h";
        else if (mult_of(A, md.delta, h) != h) bad = "delta h != h";
        else if (mul(md.sigma, h) != h) bad = "sigma(h) != h";
        else if (mul(md.sigma_prime, h) != h) bad = "sigma'(h) != h";
        else if (!(md.nu == Scalar(1))) bad = "scaling constant != 1";
        out.push_back(bad.empty() ? pass_record("glp_prop17") : fail_record("glp_prop17", bad));
    }
    return out;
}

// Properly scaled transform: k = F(h)/phi(h), defined whenever phi(h) != 0.
inline Vec fourier_projection(const HopfStarAlgebra& A, const Duality& D, const Vec& h) {
    const Scalar c = phi_of(A, h);
    if (c.is_zero()) throw std::runtime_error("fourier_projection: phi(h) = 0");
    return c.inverse() * fourier_of(D, h);
}

inline CheckRecord check_fourier_projection(const HopfStarAlgebra& A, const Duality& D,
                                            const Vec& h) {
    const HopfStarAlgebra& B = D.dual;
    if (phi_of(A, h).is_zero())
        return fail_record("glp_fourier_certified", "phi(h) = 0, transform cannot be normalized");
    const Vec k = fourier_projection(A, D, h);
    const Tensor2 kk = Tensor2::outer(k, k);
    const Tensor2 Dk = comult_of(B, k);
    std::string bad;
    if (!is_group_like_projection(B, k)) bad = "k = F(h)/phi(h) fails the defining conditions";
    else if (t_rmul_first(B, Dk, k) != kk) bad = "comult(k)(k(x)1) != k(x)k";
    else if (t_lmul_first(B, k, Dk) != kk) bad = "(k(x)1)comult(k) != k(x)k";
    else if (counit_of(B, k) != Scalar(1)) bad = "counit(k) != 1";
    else if (antipode_of(B, k) != k) bad = "S(k) != k";
    if (!bad.empty()) {
        Witness w;
        w.description = "transform of the projection";
        w.fields = {{"k", element_str(B, k)}};
        return fail_record("glp_fourier_certified", bad, w);
    }
    return pass_record("glp_fourier_certified");
}

// ---------------------------------------------------------------------------
// centrality: four characterizations that must agree

struct Centrality {
    bool central = false;
    std::vector<CheckRecord> records;
};

inline Centrality centrality_equivalences(const HopfStarAlgebra& A, const Duality& D,
                                          const Vec& h) {
    Centrality out;
    const HopfStarAlgebra& B = D.dual;
    const Mat Lh = left_mult_matrix(A, h), Rh = right_mult_matrix(A, h);

    const bool c1 = Lh == Rh;

    std::vector<Vec> hA, Ah;
    for (int j = 0; j < A.dim; ++j) {
        hA.push_back(Lh.col(j));
        Ah.push_back(Rh.col(j));
    }
    const bool c2 =
        Subspace::from_span(A.dim, hA) == Subspace::from_span(A.dim, Ah);

    const Vec k = fourier_projection(A, D, h);
    const Tensor2 Dk = comult_of(B, k);
    const ModularData mdB = compute_modular_data(B);
    const Mat SB2 = mul(B.antipode, B.antipode);
    const bool c3 =
        Dk.flip() == t_map_second(t_rmul_second(B, Dk, mdB.delta_inv), SB2);

    const bool c4 = row_space(Dk) == col_space(Dk);

    const bool agree = c1 == c2 && c2 == c3 && c3 == c4;
    out.central = c1;
    if (agree) {
        out.records.push_back(pass_record("prop1_10_agreement"));
    } else {
        Witness w;
        w.description = "characterizations disagree";
        auto yn = [](bool b) { return b ? std::string("true") : std::string("false"); };
        w.fields = {{"h central", yn(c1)},
                    {"hA = Ah", yn(c2)},
                    {"flipped coproduct identity", yn(c3)},
                    {"legs of comult(k) equal", yn(c4)}};
        out.records.push_back(fail_record("prop1_10_agreement",
                                          "the four centrality tests split", w));
    }
    out.records.push_back(finding_record(
        "prop1_10_central", out.central ? "central=true" : "central=false"));
    return out;
}

// ---------------------------------------------------------------------------
// classification of subset indicators in the function model

// Exhaustive when 2^|G| is small; otherwise every closure of a small seed set
// plus a seeded random sample of subsets.
inline CheckRecord check_subset_projection_classification(const GroupPtr& g,
                                                          const HopfStarAlgebra& fnA) {
    const int n = g->order;
    auto classify = [&](const std::vector<int>& subset) -> bool {
        const Vec h = subset_indicator(n, subset);
        const bool glp = is_group_like_projection(fnA, h);
        const bool sub = !subset.empty() && is_subgroup_set(*g, subset);
        return glp == sub;
    };

    if (n <= 12) {
        const std::uint64_t total = std::uint64_t(1) << n;
        for (std::uint64_t mask = 0; mask < total; ++mask) {
            std::vector<int> subset;
            for (int t = 0; t < n; ++t)
                if (mask >> t & 1) subset.push_back(t);
            if (!classify(subset)) {
                Witness w;
                w.description = "subset where the classification fails";
                w.fields = {{"indicator", element_str(fnA, subset_indicator(n, subset))}};
                return fail_record("prop1_4_exhaustive", "indicator misclassified", w);
            }
        }
        return pass_record("prop1_4_exhaustive",
                           "exhaustive over " + std::to_string(total) + " subsets");
    }

    // larger groups: all closures of seeds of size <= 2, plus random subsets
    std::set<std::vector<int>> subgroups;
    for (int a = 0; a < n; ++a) {
        subgroups.insert(subgroup_closure(g, {a}).elements);
        for (int b = a + 1; b < n; ++b) subgroups.insert(subgroup_closure(g, {a, b}).elements);
    }
    int checked = 0;
    for (const auto& sub : subgroups) {
        ++checked;
        if (!classify(sub))
            return fail_record("prop1_4_exhaustive", "a subgroup indicator is not group-like");
    }
    SplitMix64 rng(407);
    for (int trial = 0; trial < 500; ++trial) {
        std::vector<int> subset;
        for (int t = 0; t < n; ++t)
            if (rng.next() & 1) subset.push_back(t);
        ++checked;
        if (!classify(subset))
            return fail_record("prop1_4_exhaustive", "a sampled subset is misclassified");
    }
    return pass_record("prop1_4_exhaustive", "closures of small seed sets + " +
                                                 std::to_string(500) + " sampled subsets (" +
                                                 std::to_string(checked) + " total)");
}

// ---------------------------------------------------------------------------
// ordered pairs h <= h'

inline std::vector<CheckRecord> verify_chain_pair(const HopfStarAlgebra& A, const Duality& D,
                                                  const Vec& h, const Vec& hp) {
    std::vector<CheckRecord> out;
    {
        const bool ok = mult_of(A, h, hp) == h && mult_of(A, hp, h) == h;
        out.push_back(ok ? pass_record("chain_order")
                         : fail_record("chain_order", "hh' = h = h'h fails"));
    }
    {
        const Tensor2 Dhp = comult_of(A, hp);
        const bool ok1 = t_rmul_second(A, Dhp, h) == Tensor2::outer(hp, h);
        const bool ok2 = t_lmul_first(A, h, Dhp) == Tensor2::outer(h, hp);
        out.push_back(ok1 && ok2
                          ? pass_record("chain_pre3_5")
                          : fail_record("chain_pre3_5",
                                        ok1 ? "(h(x)1)comult(h') != h(x)h'"
                                            : "comult(h')(1(x)h) != h'(x)h"));
    }
    {
        const HopfStarAlgebra& B = D.dual;
        const Vec k = fourier_projection(A, D, h);
        const Vec kp = fourier_projection(A, D, hp);
        const bool ok = mult_of(B, k, kp) == kp && mult_of(B, kp, k) == kp;
        out.push_back(ok ? pass_record("chain_prop1_9")
                         : fail_record("chain_prop1_9", "k k' = k' = k' k fails in the dual"));
    }
    return out;
}

}  // namespace qhg
