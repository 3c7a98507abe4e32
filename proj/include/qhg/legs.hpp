#pragma once

// The right leg C of comult(h): slice-family construction, membership
// characterizations, invariance properties, semisimplicity, and the
// non-degeneracy / local-unit facts for left invariant *-subalgebras.

#include <qhg/projection.hpp>
#include <qhg/subalgebra.hpp>

namespace qhg {

inline CheckRecord check_semisimple(const HopfStarAlgebra& A, const SubalgebraBasis& S,
                                    const std::string& id);

struct Legs {
    Subspace right;  // C, the right leg of comult(h)
    Subspace left;   // S(C), the left leg
    SubalgebraBasis basis;  // C as a subalgebra basis
};

inline Legs build_legs(const HopfStarAlgebra& A, const Vec& h) {
    const Tensor2 Dh = comult_of(A, h);
    Legs L;
    L.right = row_space(Dh);
    L.left = col_space(Dh);
    L.basis = SubalgebraBasis::from_span(A.dim, L.right.basis);
    return L;
}

inline CheckRecord check_legs_dim(const Legs& L, int expected, const std::string& why,
                                  const Subspace* exact = nullptr) {
    if (L.basis.dim != expected)
        return fail_record("legs_dim_expected", "dim C = " + std::to_string(L.basis.dim) +
                                                    " but expected " + std::to_string(expected) +
                                                    " (" + why + ")");
    if (exact != nullptr && !(L.right == *exact))
        return fail_record("legs_dim_expected",
                           "dim matches but the space differs from the expected one (" + why + ")");
    return pass_record("legs_dim_expected", why);
}

inline std::vector<CheckRecord> verify_legs(const HopfStarAlgebra& A, const ModularData& md,
                                            const Vec& h) {
    std::vector<CheckRecord> out;
    const Tensor2 Dh = comult_of(A, h);
    const Legs L = build_legs(A, h);
    const int d = A.dim;
    const int dc = L.basis.dim;
    {
        // unrestricted slices of the second leg vs slices through
        // functionals psi(. a') — both must generate C
        std::vector<Vec> fam;
        for (int j = 0; j < d; ++j) {
            Vec w(d);
            for (int i = 0; i < d; ++i)
                w[i] = psi_of(A, mult_of(A, Vec::unit(d, i), Vec::unit(d, j)));
            fam.push_back(t_slice_first(w, Dh));
        }
        out.push_back(Subspace::from_span(d, fam) == L.right
                          ? pass_record("legs_two_slice_families_agree")
                          : fail_record("legs_two_slice_families_agree",
                                        "integral-paired slices generate a different space"));
    }
    {
        out.push_back(L.right == row_space(Dh)
                          ? pass_record("legs_rowspace_characterization")
                          : fail_record("legs_rowspace_characterization",
                                        "C differs from the row space"));
    }
    {
        std::vector<Vec> sc;
        for (int i = 0; i < dc; ++i) sc.push_back(antipode_of(A, L.basis.basis_vec(i)));
        out.push_back(Subspace::from_span(d, sc) == L.left
                          ? pass_record("legs_left_is_antipode_of_right")
                          : fail_record("legs_left_is_antipode_of_right",
                                        "left leg != S(right leg)"));
    }
    {
        std::string bad;
        for (int i = 0; i < dc && bad.empty(); ++i) {
            const Vec c = L.basis.basis_vec(i);
            if (mult_of(A, c, h) != counit_of(A, c) * h) bad = "ch != counit(c)h";
            else if (t_rmul_second(A, comult_of(A, c), h) != Tensor2::outer(c, h))
                bad = "comult(c)(1(x)h) != c(x)h";
            else if (t_lmul_first(A, antipode_of(A, c), Dh) != t_lmul_second(A, c, Dh))
                bad = "(S(c)(x)1)comult(h) != (1(x)c)comult(h)";
        }
        out.push_back(bad.empty() ? pass_record("prop3_2_membership")
                                  : fail_record("prop3_2_membership", bad));
    }
    {
        std::string bad;
        if (!closed_under_mult(A, L.basis)) bad = "C is not closed under multiplication";
        else if (!closed_under_star(A, L.basis)) bad = "C is not closed under star";
        else if (!L.right.contains(h)) bad = "h not in C";
        else if (!L.right.contains(A.unit)) bad = "the unit is not in C";
        out.push_back(bad.empty() ? pass_record("prop3_3_star_subalgebra")
                                  : fail_record("prop3_3_star_subalgebra", bad));
    }
    {
        bool ok = true;
        for (int i = 0; i < dc && ok; ++i)
            if (!L.right.contains(row_space(comult_of(A, L.basis.basis_vec(i))))) ok = false;
        out.push_back(ok ? pass_record("prop3_3_left_invariant")
                         : fail_record("prop3_3_left_invariant",
                                       "a right leg of comult(C) escapes C"));
    }
    {
        // both kernel characterizations, as kernels of explicit linear maps
        Mat M1(d * d, d), M2(d * d, d);
        for (int j = 0; j < d; ++j) {
            const Vec e = Vec::unit(d, j);
            Tensor2 t1 = t_rmul_second(A, comult_of(A, e), h);
            t1 -= Tensor2::outer(e, h);
            M1.set_col(j, tensor_vec(t1));
            Tensor2 t2 = t_lmul_second(A, e, Dh);
            t2 -= t_lmul_first(A, antipode_of(A, e), Dh);
            M2.set_col(j, tensor_vec(t2));
        }
        const Subspace k1 = Subspace::from_span(d, kernel(M1));
        const Subspace k2 = Subspace::from_span(d, kernel(M2));
        out.push_back(k1 == L.right && k2 == L.right
                          ? pass_record("prop3_4_kernel_characterizations")
                          : fail_record("prop3_4_kernel_characterizations",
                                        k1 == L.right ? "the antipode-form kernel differs from C"
                                                      : "the comult-form kernel differs from C"));
    }
    {
        const Mat S2 = mul(A.antipode, A.antipode);
        std::string bad;
        std::vector<Vec> im_s2, im_sigma, cd, dc_;
        for (int i = 0; i < dc; ++i) {
            const Vec c = L.basis.basis_vec(i);
            im_s2.push_back(mul(S2, c));
            im_sigma.push_back(mul(md.sigma, c));
            cd.push_back(mult_of(A, c, md.delta));
            dc_.push_back(mult_of(A, md.delta, c));
            if (bad.empty() && mul(md.sigma, c) != mul(S2, c)) bad = "sigma != S^2 on C";
        }
        if (bad.empty() && !(Subspace::from_span(d, im_s2) == L.right)) bad = "S^2(C) != C";
        if (bad.empty() && !(Subspace::from_span(d, im_sigma) == L.right)) bad = "sigma(C) != C";
        if (bad.empty() && !(Subspace::from_span(d, cd) == L.right)) bad = "C delta != C";
        if (bad.empty() && !(Subspace::from_span(d, dc_) == L.right)) bad = "delta C != C";
        out.push_back(bad.empty() ? pass_record("prop3_6_s2_sigma_delta")
                                  : fail_record("prop3_6_s2_sigma_delta", bad));
    }
    out.push_back(check_semisimple(A, L.basis, "prop3_7_semisimple"));
    {
        // left: b with bC = 0, right: b with Cb = 0, both inside C
        Mat left(dc * dc, dc), right(dc * dc, dc);
        for (int j = 0; j < dc; ++j) {
            for (int i = 0; i < dc; ++i) {
                const Vec prod_l =
                    L.basis.to_sub(mult_of(A, L.basis.basis_vec(j), L.basis.basis_vec(i)));
                const Vec prod_r =
                    L.basis.to_sub(mult_of(A, L.basis.basis_vec(i), L.basis.basis_vec(j)));
                for (int r = 0; r < dc; ++r) {
                    left.at(i * dc + r, j) = prod_l[r];
                    right.at(i * dc + r, j) = prod_r[r];
                }
            }
        }
        out.push_back(kernel(left).empty() && kernel(right).empty()
                          ? pass_record("propA14_nondegenerate")
                          : fail_record("propA14_nondegenerate",
                                        "multiplication on C is degenerate"));
    }
    {
        // solve for e in C with a e = a for every basis a of A; in the
        // unital finite-dimensional case this is exactly 1 in C
        Mat M(d * d, dc);
        Vec rhs(d * d);
        for (int i = 0; i < d; ++i) {
            for (int j = 0; j < dc; ++j) {
                const Vec prod = mult_of(A, Vec::unit(d, i), L.basis.basis_vec(j));
                for (int r = 0; r < d; ++r) M.at(i * d + r, j) = prod[r];
            }
            rhs[i * d + i] = Scalar(1);
        }
        const bool solvable = solve(M, rhs).has_value();
        out.push_back(solvable && L.right.contains(A.unit)
                          ? pass_record("propA15_local_units")
                          : fail_record("propA15_local_units",
                                        solvable ? "solvable but 1 not recognized in C"
                                                 : "no common right local unit in C"));
    }
    return out;
}

// Shared by C and C1: positive-integral Gram rank plus the vanishing radical
// of the regular-representation trace form.
inline CheckRecord check_semisimple(const HopfStarAlgebra& A, const SubalgebraBasis& S,
                                    const std::string& id) {
    const int dc = S.dim;
    Mat gram(dc, dc);
    for (int i = 0; i < dc; ++i)
        for (int j = 0; j < dc; ++j)
            gram.at(i, j) = phi_of(A, mult_of(A, star_of(A, S.basis_vec(i)), S.basis_vec(j)));
    if (!hermitian_psd(gram)) return fail_record(id, "the integral Gram matrix is not PSD");
    if (rank(gram) != dc) return fail_record(id, "the integral Gram matrix is singular");
    // trace form of left regular representation in internal coordinates
    std::vector<Mat> lm;
    for (int i = 0; i < dc; ++i) {
        Mat m(dc, dc);
        for (int j = 0; j < dc; ++j)
            m.set_col(j, S.to_sub(mult_of(A, S.basis_vec(i), S.basis_vec(j))));
        lm.push_back(m);
    }
    Mat trace_form(dc, dc);
    for (int i = 0; i < dc; ++i)
        for (int j = 0; j < dc; ++j) {
            const Mat prod = mul(lm[static_cast<size_t>(i)], lm[static_cast<size_t>(j)]);
            Scalar tr;
            for (int r = 0; r < dc; ++r) tr += prod.at(r, r);
            trace_form.at(i, j) = tr;
        }
    if (rank(trace_form) != dc) return fail_record(id, "the trace form has a nonzero radical");
    return pass_record(id);
}

// Which coset functional equation the leg algebra satisfies in a function
// model: constant on pK (f(pk) = f(p)) or constant on Kp (f(kp) = f(p)).
inline CheckRecord check_coset_orientation(const HopfStarAlgebra& A, const Legs& L,
                                           const GroupPtr& g, const std::vector<int>& K) {
    const Subgroup sub = make_subgroup(g, K);
    auto span_of = [&](const CosetDecomposition& dec) {
        std::vector<Vec> v;
        for (const auto& cls : dec.classes) v.push_back(subset_indicator(g->order, cls));
        return Subspace::from_span(g->order, v);
    };
    const bool matches_left = L.right == span_of(left_cosets(*g, sub));    // classes pK
    const bool matches_right = L.right == span_of(right_cosets(*g, sub));  // classes Kp
    (void)A;
    if (matches_left && matches_right)
        return finding_record("legs_coset_orientation",
                              "both (K is normal: pK = Kp for every p)");
    if (matches_left)
        return finding_record("legs_coset_orientation", "f(pk) = f(p): constant on cosets pK");
    if (matches_right)
        return finding_record("legs_coset_orientation", "f(kp) = f(p): constant on cosets Kp");
    return fail_record("legs_coset_orientation", "C matches neither coset decomposition");
}

// exhaustive monotonicity over a family of comparable projections
inline CheckRecord check_leg_monotone(const HopfStarAlgebra& A,
                                      const std::vector<Vec>& chain) {
    for (size_t i = 0; i < chain.size(); ++i)
        for (size_t j = 0; j < chain.size(); ++j) {
            if (i == j) continue;
            const Vec& h = chain[i];
            const Vec& hp = chain[j];
            if (mult_of(A, h, hp) != h || mult_of(A, hp, h) != h) continue;  // not h <= h'
            const Legs Lh = build_legs(A, h);
            const Legs Lhp = build_legs(A, hp);
            if (!Lh.right.contains(Lhp.right))
                return fail_record("prop3_5_leg_monotone",
                                   "a comparable pair violates C_{h'} ⊆ C_h");
        }
    return pass_record("prop3_5_leg_monotone");
}

inline CheckRecord check_chain_legs(const HopfStarAlgebra& A, const Vec& h, const Vec& hp) {
    const Legs Lh = build_legs(A, h);
    const Legs Lhp = build_legs(A, hp);
    return Lh.right.contains(Lhp.right)
               ? pass_record("chain_prop3_5")
               : fail_record("chain_prop3_5", "C_{h'} is not contained in C_h");
}

}  // namespace qhg
