#pragma once

// Dual Hopf *-algebra on the dual basis, Fourier transform, and the checks
// tying the two sides together.
//
// Conventions (pinned by the frozen tests):
//   pairing            <b_i, f_j> = delta_ij, extended bilinearly
//   product on duals   (w n)(x) = (w (x) n)(comult x)
//   coproduct on duals (comult w)(x (x) y) = w(y x)          -- flipped
//   antipode on duals  S(w) = w ∘ S^{-1}
//   star on duals      w*(a) = conj(w(S(a)*))
//   Fourier            F(a) = phi(. a), so coords(F(a)) = P a with
//                      P[i][j] = phi(b_i b_j)
//   integral on duals  phi(F(a)) = counit(a), i.e. phi = counit^T P^{-1};
//                      psi = phi ∘ S

#include <qhg/hopf.hpp>
#include <qhg/prng.hpp>

namespace qhg {

inline Scalar pairing(const Vec& a, const Vec& w) { return dot(a, w); }

struct Duality {
    HopfStarAlgebra dual;
    Mat fourier;      // P
    Mat fourier_inv;  // P^{-1}
};

inline Duality dualize(const HopfStarAlgebra& A, const std::string& label_prefix = "f") {
    const int d = A.dim;
    Duality D;
    HopfStarAlgebra& B = D.dual;
    B.dim = d;
    B.name = "dual(" + A.name + ")";
    B.labels.reserve(static_cast<size_t>(d));
    for (int i = 0; i < d; ++i) B.labels.push_back(label_prefix + std::to_string(i));

    B.mult.assign(static_cast<size_t>(d), std::vector<Vec>(static_cast<size_t>(d)));
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) {
            Vec v(d);
            for (int k = 0; k < d; ++k) v[k] = A.comult[static_cast<size_t>(k)].at(i, j);
            B.mult[static_cast<size_t>(i)][static_cast<size_t>(j)] = std::move(v);
        }
    B.unit = A.counit;
    B.comult.reserve(static_cast<size_t>(d));
    for (int k = 0; k < d; ++k) {
        Mat Dk(d, d);
        for (int i = 0; i < d; ++i)
            for (int j = 0; j < d; ++j) {
                const Scalar& c = A.mult[static_cast<size_t>(j)][static_cast<size_t>(i)][k];
                if (!c.is_zero()) Dk.at(i, j) = c;
            }
        B.comult.push_back(std::move(Dk));
    }
    B.counit = A.unit;
    auto Sinv = inverse(A.antipode);
    if (!Sinv) throw std::runtime_error("dualize: antipode is singular");
    B.antipode = Sinv->transpose();
    B.star = mul(A.star.conj(), A.antipode).transpose();

    D.fourier = integral_pairing(A, true);
    auto Pinv = inverse(D.fourier);
    if (!Pinv) throw std::runtime_error("dualize: integral pairing is singular");
    D.fourier_inv = *Pinv;
    B.phi = mul_left(A.counit, D.fourier_inv);
    B.psi = mul_left(B.phi, B.antipode);
    return D;
}

inline Vec fourier_of(const Duality& D, const Vec& a) { return mul(D.fourier, a); }

inline Vec inverse_fourier_matrix(const Duality& D, const Vec& b) {
    return mul(D.fourier_inv, b);
}

// Slice formula for the inverse transform, computed entirely inside the dual:
// coefficient i of F^{-1}(b) is phi(S^{-1}(f_i) b) evaluated in the dual.
inline Vec inverse_fourier_slice(const HopfStarAlgebra& B, const Vec& b) {
    auto Sinv = inverse(B.antipode);
    if (!Sinv) throw std::runtime_error("inverse_fourier_slice: antipode is singular");
    Vec out(B.dim);
    for (int i = 0; i < B.dim; ++i)
        out[i] = phi_of(B, mult_of(B, Sinv->col(i), b));
    return out;
}

inline std::vector<CheckRecord> verify_duality(const HopfStarAlgebra& A, const Duality& D,
                                               const ModularData& md) {
    std::vector<CheckRecord> out;
    const HopfStarAlgebra& B = D.dual;
    const int d = A.dim;
    auto check = [&](const char* id, bool ok, const std::string& why) {
        out.push_back(ok ? pass_record(id) : fail_record(id, why));
    };

    // <S(a), w> = <a, S_dual^{-1}(w)>
    {
        auto SBinv = inverse(B.antipode);
        check("dual_pairing_antipode",
              SBinv && A.antipode.transpose() == *SBinv,
              "antipode does not move across the pairing as S <-> S^{-1}");
    }

    // phi_dual(F(a)) = counit(a)
    {
        bool ok = true;
        for (int i = 0; i < d && ok; ++i)
            if (phi_of(B, mul(D.fourier, Vec::unit(d, i))) != A.counit[i]) ok = false;
        check("dual_integral_defining", ok, "phi_dual ∘ F != counit");
    }

    // module actions induced by slices are associative
    {
        SplitMix64 rng(101);
        bool ok = true;
        for (int trial = 0; trial < 5 && ok; ++trial) {
            Vec w = rng.small_vec(d), n = rng.small_vec(d), a = rng.small_vec(d);
            const Vec wn = mult_of(B, w, n);
            // right-to-left action a -> (id x w)comult(a)
            const Vec lhs1 = t_slice_second(comult_of(A, a), wn);
            const Vec rhs1 = t_slice_second(comult_of(A, t_slice_second(comult_of(A, a), n)), w);
            if (lhs1 != rhs1) ok = false;
            // left-to-right action a -> (w x id)comult(a)
            const Vec lhs2 = t_slice_first(wn, comult_of(A, a));
            const Vec rhs2 = t_slice_first(n, comult_of(A, t_slice_first(w, comult_of(A, a))));
            if (lhs2 != rhs2) ok = false;
        }
        check("dual_action_associative", ok, "a slice-induced module action is not associative");
    }

    // Fourier map: bijection re-derived from the pairing
    check("fourier_linear_bijection",
          D.fourier == integral_pairing(A, true) && rank(D.fourier) == d &&
              mul(D.fourier, D.fourier_inv) == Mat::identity(d),
          "Fourier matrix is not the integral pairing or is singular");

    // round trips, both directions, basis and random
    {
        SplitMix64 rng(102);
        bool ok = true;
        for (int i = 0; i < d && ok; ++i) {
            const Vec e = Vec::unit(d, i);
            if (inverse_fourier_matrix(D, fourier_of(D, e)) != e) ok = false;
        }
        for (int trial = 0; trial < 5 && ok; ++trial) {
            Vec a = rng.small_vec(d);
            if (inverse_fourier_matrix(D, fourier_of(D, a)) != a) ok = false;
        }
        check("fourier_roundtrip", ok, "inverse Fourier does not invert Fourier");
    }

    // slice formula for the inverse
    {
        SplitMix64 rng(103);
        bool ok = true;
        for (int i = 0; i < d && ok; ++i) {
            const Vec b = Vec::unit(d, i);
            if (inverse_fourier_slice(B, b) != inverse_fourier_matrix(D, b)) ok = false;
        }
        for (int trial = 0; trial < 5 && ok; ++trial) {
            Vec b = rng.small_vec(d);
            if (inverse_fourier_slice(B, b) != inverse_fourier_matrix(D, b)) ok = false;
        }
        check("fourier_inverse_formula", ok,
              "slice formula disagrees with the matrix inverse");
    }

    // F maps the normalized co-integral to the unit of the dual
    {
        auto t = solve_cointegral(A, true);
        bool ok = false;
        std::string why = "no left co-integral";
        if (t && !t->is_zero()) {
            const Vec Ft = fourier_of(D, *t);
            auto lam = proportional(Ft, B.unit);
            if (lam && !lam->is_zero()) {
                const Vec tn = lam->inverse() * *t;
                ok = fourier_of(D, tn) == B.unit;
                why = "normalized transform misses the unit";
            } else {
                why = "transform of the co-integral is not proportional to the unit";
            }
        }
        check("fourier_unit_cointegral", ok, why);
    }

    // Parseval on all basis pairs, then on random elements
    {
        bool ok = true;
        for (int i = 0; i < d && ok; ++i) {
            const Vec fi_star = star_of(B, fourier_of(D, Vec::unit(d, i)));
            const Vec bi_star = star_of(A, Vec::unit(d, i));
            for (int j = 0; j < d && ok; ++j) {
                const Scalar lhs =
                    phi_of(B, mult_of(B, fi_star, fourier_of(D, Vec::unit(d, j))));
                const Scalar rhs = phi_of(A, mult_of(A, bi_star, Vec::unit(d, j)));
                if (!(lhs == rhs)) ok = false;
            }
        }
        check("plancherel_basis", ok, "phi_dual(F(a)* F(b)) != phi(a* b) on a basis pair");
    }
    {
        SplitMix64 rng(104);
        bool ok = true;
        for (int trial = 0; trial < 20 && ok; ++trial) {
            Vec a = rng.small_vec(d);
            const Vec Fa = fourier_of(D, a);
            const Scalar lhs = phi_of(B, mult_of(B, star_of(B, Fa), Fa));
            const Scalar rhs = phi_of(A, mult_of(A, star_of(A, a), a));
            if (!(lhs == rhs)) ok = false;
        }
        check("plancherel_random", ok, "phi_dual(F(a)* F(a)) != phi(a* a)");
    }

    // pairings with the dual modular data
    {
        ModularData mdB = compute_modular_data(B);
        check("propA9_pair_delta",
              mdB.delta == mul_left(A.counit, md.sigma) &&
                  mdB.delta == mul_left(A.counit, md.sigma_prime),
              "<a, delta_dual> != counit(sigma(a))");
        check("propA9_pair_delta_inv",
              mdB.delta_inv == mul_left(A.counit, md.sigma_inv) &&
                  mdB.delta_inv == mul_left(A.counit, md.sigma_prime_inv),
              "<a, delta_dual^{-1}> != counit(sigma^{-1}(a))");
        auto S2inv = inverse(mul(A.antipode, A.antipode));
        bool ok_s = S2inv.has_value();
        if (ok_s) {
            const Mat lhs = mdB.sigma;
            const Mat rhs = mul(left_mult_matrix(A, md.delta_inv), *S2inv).transpose();
            ok_s = lhs == rhs;
        }
        check("propA9_pair_sigma", ok_s, "<a, sigma_dual(b)> != <delta^{-1} S^{-2}(a), b>");
        const Mat rhs4 =
            mul(left_mult_matrix(A, md.delta), mul(A.antipode, A.antipode)).transpose();
        check("propA9_pair_sigma_inv", mdB.sigma_inv == rhs4,
              "<a, sigma_dual^{-1}(b)> != <delta S^2(a), b>");
    }
    return out;
}

// The double dual carries the original structure back through the inverse
// antipode: columns of S^{-1} are the images of the original basis.
inline CheckRecord check_bidual(const HopfStarAlgebra& A) {
    Duality D1 = dualize(A);
    Duality D2 = dualize(D1.dual);
    auto Sinv = inverse(A.antipode);
    if (!Sinv) return fail_record("dual_bidual", "antipode is singular");
    HopfStarAlgebra back = transport(D2.dual, *Sinv);
    if (!same_structure(back, A))
        return fail_record("dual_bidual", "double dual is not the original structure");
    auto p1 = proportional(back.phi, A.phi);
    auto p2 = proportional(back.psi, A.psi);
    if (!(p1 && !p1->is_zero() && p2 && !p2->is_zero()))
        return fail_record("dual_bidual", "double-dual integrals are not proportional to the originals");
    return pass_record("dual_bidual",
                       "integral ratios " + p1->str() + ", " + p2->str());
}

}  // namespace qhg
