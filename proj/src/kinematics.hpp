#pragma once

#include <array>
#include <complex>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "rational.hpp"

namespace grassfold::kin {

using Complex = std::complex<double>;

template <typename T>
using Spinor = std::array<T, 2>;

template <typename T>
using Mat2 = std::array<std::array<T, 2>, 2>;

// Twistor columns Z_1..Z_n of the 4 x n kinematics matrix.
template <typename T>
using TwistorMatrix = std::vector<std::array<T, 4>>;

// <a,b> = sum eps^{alpha beta} a^alpha b^beta, eps = [[0,1],[-1,0]].
template <typename T>
T angle(const Spinor<T>& a, const Spinor<T>& b) {
    return a[0] * b[1] - a[1] * b[0];
}

template <typename T>
Mat2<T> outer(const Spinor<T>& a, const Spinor<T>& b) {
    return {{{a[0] * b[0], a[0] * b[1]}, {a[1] * b[0], a[1] * b[1]}}};
}

template <typename T>
T det2(const Mat2<T>& m) {
    return m[0][0] * m[1][1] - m[0][1] * m[1][0];
}

// 2x2 matrix of a momentum 4-vector, eta = diag(-1,1,1,1); det = -(p.p).
Mat2<Complex> pauli_encode(const std::array<Complex, 4>& p);
Complex minkowski(const std::array<Complex, 4>& a, const std::array<Complex, 4>& b);

// Z_i = (lambda^1, lambda^2, (x^T E lambda)^1, (x^T E lambda)^2); the lambda
// slot of x is the contracted one, which matches the displayed D=3 form (x
// symmetric there) and keeps the twistor identities exact on D=4 data.
template <typename T>
std::array<T, 4> twistor_column(const Spinor<T>& l, const Mat2<T>& x) {
    return {l[0], l[1], x[0][0] * l[1] - x[1][0] * l[0], x[0][1] * l[1] - x[1][1] * l[0]};
}

template <typename T>
TwistorMatrix<T> twistors_from(const std::vector<Spinor<T>>& lambda,
                               const std::vector<Mat2<T>>& x);

// x_1 = 0, x_{i+1} = x_i + lambda_i lambda_tilde_i^T; the cyclic closure
// x_{n+1} = x_1 is checked against closure_tol (exactly for rational T).
template <typename T>
std::vector<Mat2<T>> dual_from_spinors(const std::vector<Spinor<T>>& lambda,
                                       const std::vector<Spinor<T>>& lambda_tilde,
                                       double closure_tol = 1e-8);

// mod-n index into [1, n]
inline int wrap(int i, int n) { return ((i - 1) % n + n) % n + 1; }

// Determinant of twistor columns (i1, i2, i3, i4), indices mod n, listed order.
template <typename T>
T plucker4(const TwistorMatrix<T>& z, int i1, int i2, int i3, int i4);

// Trace contraction [[p_1, ..., p_m]] of 2x2 momentum matrices by the eps
// chain; even m in all uses here.
Complex trace_contract(const std::vector<Mat2<Complex>>& ps);

// Floating kinematics data; dim 3 means lambda_tilde = lambda.
struct KinematicsSample {
    int dim = 3;
    int n = 0;
    std::vector<Spinor<Complex>> lambda;
    std::vector<Spinor<Complex>> lambda_tilde; // equal to lambda when dim == 3
    std::vector<Mat2<Complex>> x;
    TwistorMatrix<Complex> z;

    Mat2<Complex> x_diff(int i, int j) const; // x_i - x_j, indices mod n
};

// Exact rational D=4 kinematics configuration.
struct RationalKinematicsSample {
    int n = 0;
    std::vector<Spinor<Rational>> lambda;
    std::vector<Spinor<Rational>> lambda_tilde;
    std::vector<Mat2<Rational>> x;
    TwistorMatrix<Rational> z;
};

// D=3 spinors: n-2 integer-grid draws, one conic solve, one rank-1 root;
// resampled until momentum closure and genericity floors hold.
std::vector<Spinor<Complex>> sample_d3_spinors(int n, std::mt19937_64& rng);
KinematicsSample sample_d3(int n, std::mt19937_64& rng);

// Generic floating D=4 data (negative control for the D=3-only identities).
KinematicsSample sample_d4(int n, std::mt19937_64& rng);

RationalKinematicsSample sample_d4_rational(int n, std::mt19937_64& rng);

// Random integer 4 x n momentum-twistor matrix with the cyclically-consecutive
// and folding-relevant Pluckers nonzero (exact check).
RationalMatrix sample_d4_twistors(int n, std::mt19937_64& rng);

// Relative residuals of the Section-2 identities. All are pure functions of
// the sample; indices are 1-based mod n.
double check_xij(const KinematicsSample& s, int i, int j);
double check_bracket_identity(const KinematicsSample& s, int i, int k, int j);
double check_d3_consecutive(const KinematicsSample& s, int a); // requires dim == 3
double residual_d3_consecutive(const std::vector<Spinor<Complex>>& lambda,
                               const TwistorMatrix<Complex>& z, int a);

struct TraceForms {
    Complex direct, form_a, form_b;
};
// S = [[p_a, p_{a+1}, sum, p_c, p_{c+1}, sum]] and its two bracket/Plucker
// simplifications; requires dim == 3 and cyclic separation c-a in [3, n-3].
TraceForms s_quantity(const KinematicsSample& s, int a, int c);

// Relative residual of the D=3 folding constraint at (a, c).
double folding_residual(const KinematicsSample& s, int a, int c);
double folding_residual_z(const TwistorMatrix<Complex>& z, int a, int c);
Rational folding_residual_exact(const RationalMatrix& z, int a, int c,
                                Rational* lhs_out = nullptr, Rational* rhs_out = nullptr);

// Exact-zero identity checks on a rational configuration.
bool xij_exact(const RationalKinematicsSample& s, int i, int j);
bool bracket_identity_exact(const RationalKinematicsSample& s, int i, int k, int j);

struct IdentityStats {
    std::string name;
    double max_residual = 0;
    double median_residual = 0;
    long count = 0;
};

struct ResidualReport {
    int n = 0;
    int dim = 3;
    int trials = 0;
    double tol = 0; // violation threshold for the D=4 control
    uint64_t rng_seed = 0;
    bool pass = false;
    int sampler_retries = 0;
    std::vector<IdentityStats> identities;
    std::vector<double> violation_rates; // D=4 control, one per folding equation
    bool exact_pass = true;              // D=4 control: exact identities
};

// Every Section-2 identity over `trials` D=3 samples; passes iff all relative
// residuals are <= tol.
ResidualReport run_d3_suite(int n, int trials, double tol, uint64_t rng_seed);

// D=4 negative control: folding equations must be violated beyond `threshold`
// in >= 95% of trials while the exact D=4 identities hold exactly.
ResidualReport run_d4_control(int n, int trials, double threshold, uint64_t rng_seed);

std::mt19937_64 trial_rng(uint64_t master_seed, int trial);

// ---- template definitions ----

template <typename T>
Mat2<T> mat_add(const Mat2<T>& a, const Mat2<T>& b) {
    return {{{a[0][0] + b[0][0], a[0][1] + b[0][1]}, {a[1][0] + b[1][0], a[1][1] + b[1][1]}}};
}

template <typename T>
Mat2<T> mat_sub(const Mat2<T>& a, const Mat2<T>& b) {
    return {{{a[0][0] - b[0][0], a[0][1] - b[0][1]}, {a[1][0] - b[1][0], a[1][1] - b[1][1]}}};
}

template <typename T>
Mat2<T> mat_mul(const Mat2<T>& a, const Mat2<T>& b) {
    Mat2<T> out{};
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) out[i][j] = a[i][0] * b[0][j] + a[i][1] * b[1][j];
    return out;
}

template <typename T>
T det3(const std::array<std::array<T, 3>, 3>& m) {
    return m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) -
           m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
           m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
}

template <typename T>
T det4(const std::array<std::array<T, 4>, 4>& m) {
    T out{};
    for (int c = 0; c < 4; ++c) {
        std::array<std::array<T, 3>, 3> minor{};
        for (int r = 1; r < 4; ++r) {
            int cc = 0;
            for (int col = 0; col < 4; ++col) {
                if (col == c) continue;
                minor[r - 1][cc++] = m[r][col];
            }
        }
        T term = m[0][c] * det3(minor);
        if (c % 2 == 0)
            out = out + term;
        else
            out = out - term;
    }
    return out;
}

template <typename T>
TwistorMatrix<T> twistors_from(const std::vector<Spinor<T>>& lambda,
                               const std::vector<Mat2<T>>& x) {
    if (lambda.size() != x.size())
        fail(ErrorCode::InvalidArgument, "spinor and dual-coordinate lists differ in length");
    TwistorMatrix<T> z;
    for (size_t i = 0; i < lambda.size(); ++i) z.push_back(twistor_column(lambda[i], x[i]));
    return z;
}

template <typename T>
T plucker4(const TwistorMatrix<T>& z, int i1, int i2, int i3, int i4) {
    int n = static_cast<int>(z.size());
    std::array<int, 4> cols{wrap(i1, n), wrap(i2, n), wrap(i3, n), wrap(i4, n)};
    std::array<std::array<T, 4>, 4> m{};
    for (int c = 0; c < 4; ++c)
        for (int r = 0; r < 4; ++r) m[r][c] = z[cols[c] - 1][r];
    return det4(m);
}

namespace detail {

inline double mat_norm(const Mat2<Complex>& m) {
    double out = 0;
    for (const auto& row : m)
        for (const auto& e : row) out = std::max(out, std::abs(e));
    return out;
}

} // namespace detail

template <typename T>
std::vector<Mat2<T>> dual_from_spinors(const std::vector<Spinor<T>>& lambda,
                                       const std::vector<Spinor<T>>& lambda_tilde,
                                       double closure_tol) {
    if (lambda.size() != lambda_tilde.size())
        fail(ErrorCode::InvalidArgument, "spinor lists differ in length");
    size_t n = lambda.size();
    std::vector<Mat2<T>> x(n, Mat2<T>{});
    for (size_t i = 0; i + 1 < n; ++i)
        x[i + 1] = mat_add(x[i], outer(lambda[i], lambda_tilde[i]));
    Mat2<T> closure = mat_add(x[n - 1], outer(lambda[n - 1], lambda_tilde[n - 1]));
    if constexpr (std::is_same_v<T, Rational>) {
        if (closure != Mat2<T>{})
            fail(ErrorCode::Sampling, "momentum is not conserved: dual coordinates do not close");
    } else {
        double scale = 0;
        for (size_t i = 0; i < n; ++i)
            scale = std::max(scale, detail::mat_norm(outer(lambda[i], lambda_tilde[i])));
        if (detail::mat_norm(closure) > closure_tol * scale)
            fail(ErrorCode::Sampling, "dual-coordinate closure residual exceeds tolerance");
    }
    return x;
}

} // namespace grassfold::kin
