#pragma once

// Subalgebras presented by canonical bases, coordinate transfer between a
// subspace and its ambient algebra, and restriction of a full Hopf structure
// to an invariant subalgebra.

#include <qhg/hopf.hpp>

namespace qhg {

struct SubalgebraBasis {
    int ambient = 0;
    Subspace space;  // reduced row echelon basis, one row per basis element
    int dim = 0;
    Mat incl;  // ambient x dim, column j = basis element j

    static SubalgebraBasis from_span(int ambient, const std::vector<Vec>& span) {
        SubalgebraBasis s;
        s.ambient = ambient;
        s.space = Subspace::from_span(ambient, span);
        s.dim = s.space.dim();
        s.incl = Mat(ambient, s.dim);
        for (int j = 0; j < s.dim; ++j) s.incl.set_col(j, s.space.basis[static_cast<size_t>(j)]);
        return s;
    }

    bool contains(const Vec& x) const { return space.contains(x); }

    Vec basis_vec(int j) const { return incl.col(j); }

    // ambient -> internal coordinates; the element must lie in the subspace
    Vec to_sub(const Vec& x) const {
        auto c = space.coords_of(x);
        if (!c) throw std::runtime_error("subalgebra: element outside the subspace");
        return *c;
    }

    Vec to_ambient(const Vec& c) const { return mul(incl, c); }

    // restrict a tensor living in sub (x) sub: T = sum M[i][j] u_i (x) u_j
    Mat tensor_to_sub(const Tensor2& t) const {
        // reduced-echelon bases are biorthogonal to their pivot coordinates,
        // so the candidate coefficients can be read off at pivot pairs
        Mat m(dim, dim);
        for (int i = 0; i < dim; ++i)
            for (int j = 0; j < dim; ++j)
                m.at(i, j) = t.m.at(space.pivots[static_cast<size_t>(i)],
                                    space.pivots[static_cast<size_t>(j)]);
        if (tensor_to_ambient(m) != t)
            throw std::runtime_error("subalgebra: tensor outside sub (x) sub");
        return m;
    }

    Tensor2 tensor_to_ambient(const Mat& m) const {
        Tensor2 t(ambient);
        t.m = mul(mul(incl, m), incl.transpose());
        return t;
    }
};

// Certifies that a spanned subspace is closed under multiplication and star;
// on failure the witness names the offending pair and the escaping element.
inline CheckRecord check_span_closed(const HopfStarAlgebra& A, const std::vector<Vec>& span) {
    const SubalgebraBasis S = SubalgebraBasis::from_span(A.dim, span);
    for (int i = 0; i < S.dim; ++i) {
        const Vec u = S.basis_vec(i);
        const Vec s = star_of(A, u);
        if (!S.contains(s)) {
            Witness w;
            w.description = "a star leaves the subspace";
            w.fields = {{"element", element_str(A, u)}, {"star", element_str(A, s)}};
            return fail_record("subalgebra_closure_certified", "not star-closed", w);
        }
        for (int j = 0; j < S.dim; ++j) {
            const Vec p = mult_of(A, u, S.basis_vec(j));
            if (!S.contains(p)) {
                Witness w;
                w.description = "a product leaves the subspace";
                w.fields = {{"left", element_str(A, u)},
                            {"right", element_str(A, S.basis_vec(j))},
                            {"product", element_str(A, p)}};
                return fail_record("subalgebra_closure_certified", "not closed under products", w);
            }
        }
    }
    return pass_record("subalgebra_closure_certified",
                       "dimension " + std::to_string(S.dim) + " subspace is a *-subalgebra");
}

// span of all products h . b_i . h
inline SubalgebraBasis corner_subalgebra(const HopfStarAlgebra& A, const Vec& h) {
    std::vector<Vec> span;
    for (int i = 0; i < A.dim; ++i)
        span.push_back(mult_of(A, mult_of(A, h, Vec::unit(A.dim, i)), h));
    return SubalgebraBasis::from_span(A.dim, span);
}

// span of all products b_i . h
inline SubalgebraBasis right_ideal_basis(const HopfStarAlgebra& A, const Vec& h) {
    std::vector<Vec> span;
    for (int i = 0; i < A.dim; ++i) span.push_back(mult_of(A, Vec::unit(A.dim, i), h));
    return SubalgebraBasis::from_span(A.dim, span);
}

inline bool closed_under_mult(const HopfStarAlgebra& A, const SubalgebraBasis& S) {
    for (int i = 0; i < S.dim; ++i)
        for (int j = 0; j < S.dim; ++j)
            if (!S.contains(mult_of(A, S.basis_vec(i), S.basis_vec(j)))) return false;
    return true;
}

inline bool closed_under_star(const HopfStarAlgebra& A, const SubalgebraBasis& S) {
    for (int i = 0; i < S.dim; ++i)
        if (!S.contains(star_of(A, S.basis_vec(i)))) return false;
    return true;
}

inline bool closed_under_map(const Mat& M, const SubalgebraBasis& S) {
    for (int i = 0; i < S.dim; ++i)
        if (!S.contains(mul(M, S.basis_vec(i)))) return false;
    return true;
}

// Restriction of the ambient Hopf *-structure to a subalgebra invariant under
// multiplication, star, and antipode, with an explicitly supplied unit (in
// ambient coordinates — a corner pAp has p as its unit, not the ambient one),
// coproduct (one tensor per basis element, in ambient coordinates), and
// integrals in internal coordinates.
inline HopfStarAlgebra restrict_hopf(const HopfStarAlgebra& A, const SubalgebraBasis& S,
                                     const Vec& unit_ambient,
                                     const std::vector<Tensor2>& comult_vals, const Vec& phi_sub,
                                     const Vec& psi_sub, const std::string& name,
                                     std::vector<std::string> labels = {}) {
    if (static_cast<int>(comult_vals.size()) != S.dim)
        throw std::invalid_argument("restrict_hopf: one coproduct value per basis element");
    HopfStarAlgebra R;
    R.dim = S.dim;
    R.name = name;
    if (labels.empty())
        for (int i = 0; i < S.dim; ++i) labels.push_back("c" + std::to_string(i));
    R.labels = std::move(labels);
    R.mult.assign(static_cast<size_t>(S.dim),
                  std::vector<Vec>(static_cast<size_t>(S.dim), Vec(S.dim)));
    for (int i = 0; i < S.dim; ++i)
        for (int j = 0; j < S.dim; ++j)
            R.mult[static_cast<size_t>(i)][static_cast<size_t>(j)] =
                S.to_sub(mult_of(A, S.basis_vec(i), S.basis_vec(j)));
    R.unit = S.to_sub(unit_ambient);
    R.comult.clear();
    for (int i = 0; i < S.dim; ++i) R.comult.push_back(S.tensor_to_sub(comult_vals[i]));
    R.counit = Vec(S.dim);
    for (int i = 0; i < S.dim; ++i) R.counit[i] = counit_of(A, S.basis_vec(i));
    R.antipode = Mat(S.dim, S.dim);
    R.star = Mat(S.dim, S.dim);
    for (int j = 0; j < S.dim; ++j) {
        R.antipode.set_col(j, S.to_sub(antipode_of(A, S.basis_vec(j))));
        R.star.set_col(j, S.to_sub(star_of(A, S.basis_vec(j))));
    }
    R.phi = phi_sub;
    R.psi = psi_sub;
    return R;
}

}  // namespace qhg
