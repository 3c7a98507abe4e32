#pragma once

// Deterministic pseudo-random scalars for reproducible property checks.
// SplitMix64 with a fixed seed: identical sequences on every platform and
// every run, so suites that sample elements are reproducible bit-for-bit.

#include <qhg/linalg.hpp>

#include <cstdint>

namespace qhg {

struct SplitMix64 {
    std::uint64_t state;

    explicit SplitMix64(std::uint64_t seed = 0x9E3779B97F4A7C15ULL) : state(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state += 0x9E3779B97F4A7C15ULL);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    // Uniform in [0, n).
    std::uint64_t below(std::uint64_t n) { return next() % n; }

    // Small Gaussian integer with real/imaginary parts in [-3, 3].
    Scalar small_scalar() {
        long re = static_cast<long>(below(7)) - 3;
        long im = static_cast<long>(below(7)) - 3;
        return Scalar(Rational(re), Rational(im));
    }

    Vec small_vec(int dim) {
        Vec v(dim);
        for (int i = 0; i < dim; ++i) v[i] = small_scalar();
        return v;
    }

    Mat small_mat(int rows, int cols) {
        Mat m(rows, cols);
        for (int i = 0; i < rows; ++i)
            for (int j = 0; j < cols; ++j) m.at(i, j) = small_scalar();
        return m;
    }
};

}  // namespace qhg
