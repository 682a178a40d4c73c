#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <random>
#include <vector>

#include "error.hpp"

namespace grassfold {

using Rational = mpq_class;

// Deterministic draw in [lo, hi]; avoids distribution objects so streams are
// reproducible across standard libraries.
inline int uniform_int(std::mt19937_64& rng, int lo, int hi) {
    return lo + static_cast<int>(rng() % static_cast<uint64_t>(hi - lo + 1));
}

// Exact determinant by fraction-free Gaussian elimination with pivoting.
Rational rational_det(std::vector<std::vector<Rational>> m);

// Full-rank k x n matrix over the rationals, used as a Grassmannian point.
class RationalMatrix {
public:
    RationalMatrix(int k, int n) : k_(k), n_(n), m_(k, std::vector<Rational>(n, 0)) {}

    int k() const { return k_; }
    int n() const { return n_; }
    Rational& at(int r, int c) { return m_.at(r).at(c); }
    const Rational& at(int r, int c) const { return m_.at(r).at(c); }

    // Integer entries uniform in [-9, 9].
    static RationalMatrix random(int k, int n, std::mt19937_64& rng);

private:
    int k_, n_;
    std::vector<std::vector<Rational>> m_;
};

// Determinant of the listed columns (1-based, in the listed order). A repeated
// index yields 0; an unsorted tuple carries the sign of its sorting
// permutation through the determinant.
Rational plucker_eval(const RationalMatrix& m, const std::vector<int>& idx);

} // namespace grassfold
