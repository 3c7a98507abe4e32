#pragma once

// Exact dense linear algebra over Gaussian rationals.
//
// Conventions that the rest of the engine relies on:
//  * rref() produces the unique reduced row echelon form; Subspace stores the
//    nonzero RREF rows of a spanning set, so two subspaces are equal iff their
//    stored bases are syntactically equal.
//  * kernel bases are themselves canonicalized through RREF.
//  * Zero entries are skipped in inner loops; the structure tensors this
//    engine meets are extremely sparse and exact arithmetic is costly.

#include <qhg/scalar.hpp>

#include <optional>
#include <utility>
#include <vector>

namespace qhg {

struct Vec {
    std::vector<Scalar> c;

    Vec() = default;
    explicit Vec(int dim) : c(static_cast<size_t>(dim)) {}
    explicit Vec(std::vector<Scalar> v) : c(std::move(v)) {}

    int dim() const { return static_cast<int>(c.size()); }
    Scalar& operator[](int i) { return c[static_cast<size_t>(i)]; }
    const Scalar& operator[](int i) const { return c[static_cast<size_t>(i)]; }

    bool is_zero() const {
        for (const auto& x : c)
            if (!x.is_zero()) return false;
        return true;
    }

    Vec& operator+=(const Vec& o) {
        if (dim() != o.dim()) throw std::invalid_argument("Vec dim mismatch");
        for (int i = 0; i < dim(); ++i)
            if (!o[i].is_zero()) c[static_cast<size_t>(i)] += o[i];
        return *this;
    }
    Vec& operator-=(const Vec& o) {
        if (dim() != o.dim()) throw std::invalid_argument("Vec dim mismatch");
        for (int i = 0; i < dim(); ++i)
            if (!o[i].is_zero()) c[static_cast<size_t>(i)] -= o[i];
        return *this;
    }
    friend Vec operator+(Vec a, const Vec& b) { return a += b; }
    friend Vec operator-(Vec a, const Vec& b) { return a -= b; }

    friend Vec operator*(const Scalar& s, const Vec& v) {
        Vec r(v.dim());
        if (s.is_zero()) return r;
        for (int i = 0; i < v.dim(); ++i)
            if (!v[i].is_zero()) r[i] = s * v[i];
        return r;
    }

    friend bool operator==(const Vec& a, const Vec& b) { return a.c == b.c; }
    friend bool operator!=(const Vec& a, const Vec& b) { return !(a == b); }

    Vec conj() const {
        Vec r(dim());
        for (int i = 0; i < dim(); ++i) r[i] = c[static_cast<size_t>(i)].conj();
        return r;
    }

    static Vec unit(int dim, int k) {
        Vec v(dim);
        v[k] = Scalar(1);
        return v;
    }

    std::string str() const {
        std::string s = "[";
        for (int i = 0; i < dim(); ++i) {
            if (i) s += ",";
            s += c[static_cast<size_t>(i)].str();
        }
        return s + "]";
    }
};

// Bilinear dot product (no conjugation); sesquilinear forms are built
// explicitly where needed.
inline Scalar dot(const Vec& a, const Vec& b) {
    if (a.dim() != b.dim()) throw std::invalid_argument("dot dim mismatch");
    Scalar s;
    for (int i = 0; i < a.dim(); ++i)
        if (!a[i].is_zero() && !b[i].is_zero()) s += a[i] * b[i];
    return s;
}

struct Mat {
    int rows = 0, cols = 0;
    std::vector<Scalar> a;

    Mat() = default;
    Mat(int r, int c) : rows(r), cols(c), a(static_cast<size_t>(r) * static_cast<size_t>(c)) {}

    Scalar& at(int i, int j) { return a[static_cast<size_t>(i) * cols + j]; }
    const Scalar& at(int i, int j) const { return a[static_cast<size_t>(i) * cols + j]; }

    static Mat identity(int n) {
        Mat m(n, n);
        for (int i = 0; i < n; ++i) m.at(i, i) = Scalar(1);
        return m;
    }

    Vec row(int i) const {
        Vec v(cols);
        for (int j = 0; j < cols; ++j) v[j] = at(i, j);
        return v;
    }
    Vec col(int j) const {
        Vec v(rows);
        for (int i = 0; i < rows; ++i) v[i] = at(i, j);
        return v;
    }
    void set_row(int i, const Vec& v) {
        for (int j = 0; j < cols; ++j) at(i, j) = v[j];
    }
    void set_col(int j, const Vec& v) {
        for (int i = 0; i < rows; ++i) at(i, j) = v[i];
    }

    Mat transpose() const {
        Mat t(cols, rows);
        for (int i = 0; i < rows; ++i)
            for (int j = 0; j < cols; ++j)
                if (!at(i, j).is_zero()) t.at(j, i) = at(i, j);
        return t;
    }
    Mat conj() const {
        Mat t(rows, cols);
        for (int i = 0; i < rows; ++i)
            for (int j = 0; j < cols; ++j) t.at(i, j) = at(i, j).conj();
        return t;
    }

    bool is_zero() const {
        for (const auto& x : a)
            if (!x.is_zero()) return false;
        return true;
    }

    Mat& operator+=(const Mat& o) {
        if (rows != o.rows || cols != o.cols) throw std::invalid_argument("Mat dim mismatch");
        for (size_t i = 0; i < a.size(); ++i)
            if (!o.a[i].is_zero()) a[i] += o.a[i];
        return *this;
    }
    Mat& operator-=(const Mat& o) {
        if (rows != o.rows || cols != o.cols) throw std::invalid_argument("Mat dim mismatch");
        for (size_t i = 0; i < a.size(); ++i)
            if (!o.a[i].is_zero()) a[i] -= o.a[i];
        return *this;
    }
    friend Mat operator+(Mat x, const Mat& y) { return x += y; }
    friend Mat operator-(Mat x, const Mat& y) { return x -= y; }
    friend Mat operator*(const Scalar& s, const Mat& m) {
        Mat r(m.rows, m.cols);
        if (s.is_zero()) return r;
        for (size_t i = 0; i < m.a.size(); ++i)
            if (!m.a[i].is_zero()) r.a[i] = s * m.a[i];
        return r;
    }

    friend bool operator==(const Mat& x, const Mat& y) {
        return x.rows == y.rows && x.cols == y.cols && x.a == y.a;
    }
    friend bool operator!=(const Mat& x, const Mat& y) { return !(x == y); }
};

inline Mat mul(const Mat& x, const Mat& y) {
    if (x.cols != y.rows) throw std::invalid_argument("Mat mul dim mismatch");
    Mat r(x.rows, y.cols);
    for (int i = 0; i < x.rows; ++i)
        for (int k = 0; k < x.cols; ++k) {
            const Scalar& xik = x.at(i, k);
            if (xik.is_zero()) continue;
            for (int j = 0; j < y.cols; ++j) {
                const Scalar& ykj = y.at(k, j);
                if (ykj.is_zero()) continue;
                r.at(i, j) += xik * ykj;
            }
        }
    return r;
}

inline Vec mul(const Mat& m, const Vec& v) {
    if (m.cols != v.dim()) throw std::invalid_argument("Mat*Vec dim mismatch");
    Vec r(m.rows);
    for (int j = 0; j < m.cols; ++j) {
        if (v[j].is_zero()) continue;
        for (int i = 0; i < m.rows; ++i) {
            const Scalar& mij = m.at(i, j);
            if (!mij.is_zero()) r[i] += mij * v[j];
        }
    }
    return r;
}

// Covector acting from the left: (w^T M) as a Vec of length cols.
inline Vec mul_left(const Vec& w, const Mat& m) {
    if (w.dim() != m.rows) throw std::invalid_argument("Vec*Mat dim mismatch");
    Vec r(m.cols);
    for (int i = 0; i < m.rows; ++i) {
        if (w[i].is_zero()) continue;
        for (int j = 0; j < m.cols; ++j) {
            const Scalar& mij = m.at(i, j);
            if (!mij.is_zero()) r[j] += w[i] * mij;
        }
    }
    return r;
}

struct RrefResult {
    Mat m;
    int rank = 0;
    std::vector<int> pivots;  // pivot column per pivot row
};

// Unique reduced row echelon form: leading 1s, pivot columns cleared,
// pivot columns strictly increasing.
inline RrefResult rref(Mat m) {
    RrefResult res;
    int r = 0;
    for (int col = 0; col < m.cols && r < m.rows; ++col) {
        int piv = -1;
        for (int i = r; i < m.rows; ++i)
            if (!m.at(i, col).is_zero()) {
                piv = i;
                break;
            }
        if (piv < 0) continue;
        if (piv != r)
            for (int j = 0; j < m.cols; ++j) std::swap(m.at(piv, j), m.at(r, j));
        Scalar inv = m.at(r, col).inverse();
        for (int j = col; j < m.cols; ++j)
            if (!m.at(r, j).is_zero()) m.at(r, j) = inv * m.at(r, j);
        for (int i = 0; i < m.rows; ++i) {
            if (i == r) continue;
            const Scalar f = m.at(i, col);
            if (f.is_zero()) continue;
            for (int j = col; j < m.cols; ++j) {
                const Scalar& rj = m.at(r, j);
                if (!rj.is_zero()) m.at(i, j) -= f * rj;
            }
        }
        res.pivots.push_back(col);
        ++r;
    }
    res.rank = r;
    res.m = std::move(m);
    return res;
}

inline int rank(const Mat& m) { return rref(m).rank; }

// Canonical kernel basis {x : m x = 0}, one vector per free column,
// re-canonicalized through RREF so equal kernels give equal bases.
inline std::vector<Vec> kernel(const Mat& m) {
    RrefResult rr = rref(m);
    std::vector<bool> is_pivot(static_cast<size_t>(m.cols), false);
    for (int p : rr.pivots) is_pivot[static_cast<size_t>(p)] = true;
    std::vector<Vec> raw;
    for (int f = 0; f < m.cols; ++f) {
        if (is_pivot[static_cast<size_t>(f)]) continue;
        Vec z(m.cols);
        z[f] = Scalar(1);
        for (int i = 0; i < rr.rank; ++i) {
            const Scalar& v = rr.m.at(i, f);
            if (!v.is_zero()) z[rr.pivots[static_cast<size_t>(i)]] = -v;
        }
        raw.push_back(std::move(z));
    }
    if (raw.empty()) return raw;
    Mat stack(static_cast<int>(raw.size()), m.cols);
    for (int i = 0; i < stack.rows; ++i) stack.set_row(i, raw[static_cast<size_t>(i)]);
    RrefResult rr2 = rref(std::move(stack));
    std::vector<Vec> out;
    for (int i = 0; i < rr2.rank; ++i) out.push_back(rr2.m.row(i));
    return out;
}

// Exact solve of m x = b. Returns the particular solution with free
// variables set to zero, or nullopt if inconsistent.
inline std::optional<Vec> solve(const Mat& m, const Vec& b) {
    if (m.rows != b.dim()) throw std::invalid_argument("solve dim mismatch");
    Mat aug(m.rows, m.cols + 1);
    for (int i = 0; i < m.rows; ++i) {
        for (int j = 0; j < m.cols; ++j) aug.at(i, j) = m.at(i, j);
        aug.at(i, m.cols) = b[i];
    }
    RrefResult rr = rref(std::move(aug));
    for (int i = 0; i < rr.rank; ++i)
        if (rr.pivots[static_cast<size_t>(i)] == m.cols) return std::nullopt;
    Vec x(m.cols);
    for (int i = 0; i < rr.rank; ++i) x[rr.pivots[static_cast<size_t>(i)]] = rr.m.at(i, m.cols);
    return x;
}

inline std::optional<Mat> inverse(const Mat& m) {
    if (m.rows != m.cols) throw std::invalid_argument("inverse of non-square Mat");
    int n = m.rows;
    Mat aug(n, 2 * n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) aug.at(i, j) = m.at(i, j);
        aug.at(i, n + i) = Scalar(1);
    }
    RrefResult rr = rref(std::move(aug));
    if (rr.rank < n || rr.pivots[static_cast<size_t>(n - 1)] >= n) return std::nullopt;
    Mat inv(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) inv.at(i, j) = rr.m.at(i, n + j);
    return inv;
}

inline bool is_hermitian(const Mat& m) {
    if (m.rows != m.cols) return false;
    for (int i = 0; i < m.rows; ++i)
        for (int j = 0; j <= i; ++j)
            if (m.at(i, j) != m.at(j, i).conj()) return false;
    return true;
}

// Exact positive-semidefiniteness of a Hermitian matrix by LDL* pivoting:
// every pivot must be a nonnegative rational, and a zero pivot forces its
// whole row to vanish. No square roots are ever taken.
inline bool hermitian_psd(Mat m) {
    if (!is_hermitian(m)) return false;
    int n = m.rows;
    for (int k = 0; k < n; ++k) {
        const Scalar d = m.at(k, k);
        if (!d.is_real() || sgn(d.re) < 0) return false;
        if (d.is_zero()) {
            for (int j = k + 1; j < n; ++j)
                if (!m.at(k, j).is_zero()) return false;
            continue;
        }
        Scalar dinv = d.inverse();
        for (int i = k + 1; i < n; ++i) {
            const Scalar f = m.at(i, k) * dinv;
            if (f.is_zero()) continue;
            for (int j = k + 1; j < n; ++j) {
                const Scalar& mkj = m.at(k, j);
                if (!mkj.is_zero()) m.at(i, j) -= f * mkj;
            }
        }
    }
    return true;
}

// A linear subspace held in canonical form: basis = nonzero RREF rows.
// Equality of Subspace values is syntactic equality of bases.
struct Subspace {
    int ambient = 0;
    std::vector<Vec> basis;
    std::vector<int> pivots;

    Subspace() = default;
    explicit Subspace(int amb) : ambient(amb) {}

    static Subspace from_span(int ambient, const std::vector<Vec>& span) {
        Subspace s(ambient);
        if (span.empty()) return s;
        Mat m(static_cast<int>(span.size()), ambient);
        for (int i = 0; i < m.rows; ++i) {
            if (span[static_cast<size_t>(i)].dim() != ambient)
                throw std::invalid_argument("span vector with wrong ambient dim");
            m.set_row(i, span[static_cast<size_t>(i)]);
        }
        RrefResult rr = rref(std::move(m));
        for (int i = 0; i < rr.rank; ++i) s.basis.push_back(rr.m.row(i));
        s.pivots = rr.pivots;
        return s;
    }

    int dim() const { return static_cast<int>(basis.size()); }

    // Residual of v after eliminating against the RREF basis.
    Vec reduce(Vec v) const {
        for (int i = 0; i < dim(); ++i) {
            const Scalar f = v[pivots[static_cast<size_t>(i)]];
            if (!f.is_zero()) v -= f * basis[static_cast<size_t>(i)];
        }
        return v;
    }

    bool contains(const Vec& v) const {
        if (v.dim() != ambient) throw std::invalid_argument("contains: ambient mismatch");
        return reduce(v).is_zero();
    }
    bool contains(const Subspace& o) const {
        for (const auto& b : o.basis)
            if (!contains(b)) return false;
        return true;
    }

    // Coefficients of v in the stored basis (pivot extraction), or nullopt.
    std::optional<Vec> coords_of(const Vec& v) const {
        Vec c(dim());
        Vec resid = v;
        for (int i = 0; i < dim(); ++i) {
            const Scalar f = resid[pivots[static_cast<size_t>(i)]];
            c[i] = f;
            if (!f.is_zero()) resid -= f * basis[static_cast<size_t>(i)];
        }
        if (!resid.is_zero()) return std::nullopt;
        return c;
    }

    Vec from_coords(const Vec& c) const {
        Vec v(ambient);
        for (int i = 0; i < dim(); ++i)
            if (!c[i].is_zero()) v += c[i] * basis[static_cast<size_t>(i)];
        return v;
    }

    friend bool operator==(const Subspace& a, const Subspace& b) {
        return a.ambient == b.ambient && a.basis == b.basis;
    }
    friend bool operator!=(const Subspace& a, const Subspace& b) { return !(a == b); }
};

inline Subspace subspace_sum(const Subspace& u, const Subspace& v) {
    if (u.ambient != v.ambient) throw std::invalid_argument("subspace_sum: ambient mismatch");
    std::vector<Vec> span = u.basis;
    span.insert(span.end(), v.basis.begin(), v.basis.end());
    return Subspace::from_span(u.ambient, span);
}

// Intersection via the kernel of the stacked-basis system:
// x^T U = y^T V  <=>  [U^T | -V^T] (x;y) = 0.
inline Subspace subspace_intersect(const Subspace& u, const Subspace& v) {
    if (u.ambient != v.ambient)
        throw std::invalid_argument("subspace_intersect: ambient mismatch");
    const int p = u.dim(), q = v.dim();
    if (p == 0 || q == 0) return Subspace(u.ambient);
    Mat m(u.ambient, p + q);
    for (int i = 0; i < p; ++i)
        for (int r = 0; r < u.ambient; ++r) m.at(r, i) = u.basis[static_cast<size_t>(i)][r];
    for (int j = 0; j < q; ++j)
        for (int r = 0; r < u.ambient; ++r) m.at(r, p + j) = -v.basis[static_cast<size_t>(j)][r];
    std::vector<Vec> span;
    for (const Vec& z : kernel(m)) {
        Vec w(u.ambient);
        for (int i = 0; i < p; ++i)
            if (!z[i].is_zero()) w += z[i] * u.basis[static_cast<size_t>(i)];
        span.push_back(std::move(w));
    }
    return Subspace::from_span(u.ambient, span);
}

// Coefficient matrix of an element of A (x) A over a fixed basis:
// T = sum_{p,q} m[p][q] b_p (x) b_q.
struct Tensor2 {
    int dim = 0;
    Mat m;

    Tensor2() = default;
    explicit Tensor2(int d) : dim(d), m(d, d) {}
    Tensor2(int d, Mat mm) : dim(d), m(std::move(mm)) {
        if (m.rows != d || m.cols != d) throw std::invalid_argument("Tensor2 shape");
    }

    static Tensor2 outer(const Vec& x, const Vec& y) {
        if (x.dim() != y.dim()) throw std::invalid_argument("Tensor2 outer dim mismatch");
        Tensor2 t(x.dim());
        for (int i = 0; i < x.dim(); ++i) {
            if (x[i].is_zero()) continue;
            for (int j = 0; j < y.dim(); ++j)
                if (!y[j].is_zero()) t.m.at(i, j) = x[i] * y[j];
        }
        return t;
    }

    Tensor2 flip() const { return Tensor2(dim, m.transpose()); }
    bool is_zero() const { return m.is_zero(); }

    Tensor2& operator+=(const Tensor2& o) {
        m += o.m;
        return *this;
    }
    Tensor2& operator-=(const Tensor2& o) {
        m -= o.m;
        return *this;
    }
    friend Tensor2 operator+(Tensor2 a, const Tensor2& b) { return a += b; }
    friend Tensor2 operator-(Tensor2 a, const Tensor2& b) { return a -= b; }
    friend Tensor2 operator*(const Scalar& s, const Tensor2& t) {
        return Tensor2(t.dim, s * t.m);
    }
    friend bool operator==(const Tensor2& a, const Tensor2& b) {
        return a.dim == b.dim && a.m == b.m;
    }
    friend bool operator!=(const Tensor2& a, const Tensor2& b) { return !(a == b); }
};

// Span of the second-leg factors (slices through all functionals on leg 1).
inline Subspace row_space(const Tensor2& t) {
    std::vector<Vec> rows;
    for (int i = 0; i < t.dim; ++i) rows.push_back(t.m.row(i));
    return Subspace::from_span(t.dim, rows);
}

// Span of the first-leg factors.
inline Subspace col_space(const Tensor2& t) {
    std::vector<Vec> cols;
    for (int j = 0; j < t.dim; ++j) cols.push_back(t.m.col(j));
    return Subspace::from_span(t.dim, cols);
}

// vec() flattening, row-major: index = p*dim + q. Used to treat elements of
// A (x) A as vectors when building the canonical-map matrices.
inline Vec tensor_vec(const Tensor2& t) {
    Vec v(t.dim * t.dim);
    for (int p = 0; p < t.dim; ++p)
        for (int q = 0; q < t.dim; ++q) v[p * t.dim + q] = t.m.at(p, q);
    return v;
}

inline Tensor2 tensor_unvec(int dim, const Vec& v) {
    Tensor2 t(dim);
    for (int p = 0; p < dim; ++p)
        for (int q = 0; q < dim; ++q) t.m.at(p, q) = v[p * dim + q];
    return t;
}

}  // namespace qhg
