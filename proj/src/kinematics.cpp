#include "kinematics.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include "folding.hpp"

namespace grassfold::kin {

Mat2<Complex> pauli_encode(const std::array<Complex, 4>& p) {
    const Complex i(0, 1);
    return {{{-p[0] + p[3], p[1] - i * p[2]}, {p[1] + i * p[2], -p[0] - p[3]}}};
}

Complex minkowski(const std::array<Complex, 4>& a, const std::array<Complex, 4>& b) {
    return -a[0] * b[0] + a[1] * b[1] + a[2] * b[2] + a[3] * b[3];
}

Complex trace_contract(const std::vector<Mat2<Complex>>& ps) {
    if (ps.empty()) fail(ErrorCode::InvalidArgument, "empty trace contraction");
    // [[p_1,...,p_m]] = tr(P_1 G P_2 G ... P_m G) with G[b][a] = eps^{ab}
    const Mat2<Complex> g{{{Complex(0), Complex(-1)}, {Complex(1), Complex(0)}}};
    Mat2<Complex> acc = mat_mul(ps[0], g);
    for (size_t i = 1; i < ps.size(); ++i) acc = mat_mul(acc, mat_mul(ps[i], g));
    return acc[0][0] + acc[1][1];
}

Mat2<Complex> KinematicsSample::x_diff(int i, int j) const {
    return mat_sub(x[wrap(i, n) - 1], x[wrap(j, n) - 1]);
}

namespace {

double relative(Complex l, Complex r) {
    double denom = std::max(std::abs(l), std::abs(r));
    return denom < 1e-300 ? 0.0 : std::abs(l - r) / denom;
}

Complex rand_grid(std::mt19937_64& rng, int box = 5) {
    return Complex(uniform_int(rng, -box, box), uniform_int(rng, -box, box));
}

Spinor<Complex> rand_spinor(std::mt19937_64& rng) {
    for (;;) {
        Spinor<Complex> s{rand_grid(rng), rand_grid(rng)};
        if (std::abs(s[0]) > 0 || std::abs(s[1]) > 0) return s;
    }
}

// row' = row * m
std::array<Complex, 2> row_mul(const std::array<Complex, 2>& row, const Mat2<Complex>& m) {
    return {row[0] * m[0][0] + row[1] * m[1][0], row[0] * m[0][1] + row[1] * m[1][1]};
}

const Mat2<Complex> kEps{{{Complex(0), Complex(1)}, {Complex(-1), Complex(0)}}};

// <i| A B |j> = lambda_i^T E A E B~ E lambda_j; the second dual-coordinate
// matrix enters with its index slots exchanged (transposed), which is
// invisible on D=3 data where the matrices are symmetric.
Complex bracket_chain(const Spinor<Complex>& li, const Mat2<Complex>& a, Mat2<Complex> b,
                      const Spinor<Complex>& lj) {
    std::swap(b[0][1], b[1][0]);
    std::array<Complex, 2> row{li[0], li[1]};
    row = row_mul(row, kEps);
    row = row_mul(row, a);
    row = row_mul(row, kEps);
    row = row_mul(row, b);
    row = row_mul(row, kEps);
    return row[0] * lj[0] + row[1] * lj[1];
}

bool brackets_generic(const std::vector<Spinor<Complex>>& lambda) {
    int n = static_cast<int>(lambda.size());
    double scale = 0, floor = 1e300;
    for (int i = 1; i <= n; ++i) {
        double b = std::abs(angle(lambda[i - 1], lambda[wrap(i + 1, n) - 1]));
        scale = std::max(scale, b);
        floor = std::min(floor, b);
    }
    return floor >= 1e-3 * scale;
}

bool pluckers_generic(const TwistorMatrix<Complex>& z) {
    int n = static_cast<int>(z.size());
    double scale = 0, floor = 1e300;
    for (int a = 1; a <= n - 3; ++a)
        for (int b = a + 1; b <= n - 2; ++b)
            for (int c = b + 1; c <= n - 1; ++c)
                for (int d = c + 1; d <= n; ++d) {
                    double p = std::abs(plucker4(z, a, b, c, d));
                    scale = std::max(scale, p);
                    floor = std::min(floor, p);
                }
    return floor >= 1e-6 * scale;
}

double momentum_closure_residual(const std::vector<Spinor<Complex>>& lambda,
                                 const std::vector<Spinor<Complex>>& tilde) {
    Mat2<Complex> sum{};
    double scale = 0;
    for (size_t i = 0; i < lambda.size(); ++i) {
        Mat2<Complex> p = outer(lambda[i], tilde[i]);
        sum = mat_add(sum, p);
        scale = std::max(scale, detail::mat_norm(p));
    }
    return detail::mat_norm(sum) / scale;
}

} // namespace

std::vector<Spinor<Complex>> sample_d3_spinors(int n, std::mt19937_64& rng) {
    if (n < 6) fail(ErrorCode::InvalidArgument, "D=3 sampling requires n >= 6");
    for (int attempt = 0; attempt < 100; ++attempt) {
        std::vector<Spinor<Complex>> lambda;
        for (int i = 0; i < n - 2; ++i) lambda.push_back(rand_spinor(rng));
        Mat2<Complex> m{};
        for (const auto& l : lambda) m = mat_sub(m, outer(l, l));

        // lambda_{n-1} on the conic  lambda^T adj(M) lambda = det M
        Complex det_m = det2(m);
        Spinor<Complex> second;
        if (std::abs(m[0][0]) >= std::abs(m[1][1])) {
            if (std::abs(m[0][0]) < 1e-12) continue;
            Complex u = rand_grid(rng);
            Complex root = std::sqrt(det_m * (m[0][0] - u * u));
            second = {u, (m[0][1] * u + root) / m[0][0]};
        } else {
            if (std::abs(m[1][1]) < 1e-12) continue;
            Complex v = rand_grid(rng);
            Complex root = std::sqrt(det_m * (m[1][1] - v * v));
            second = {(m[0][1] * v + root) / m[1][1], v};
        }
        lambda.push_back(second);

        // lambda_n is the rank-1 symmetric root of M - lambda_{n-1} lambda_{n-1}^T
        Mat2<Complex> rem = mat_sub(m, outer(second, second));
        Spinor<Complex> last;
        if (std::abs(rem[0][0]) >= std::abs(rem[1][1])) {
            if (std::abs(rem[0][0]) < 1e-12) continue;
            Complex s = std::sqrt(rem[0][0]);
            last = {s, rem[0][1] / s};
        } else {
            Complex s = std::sqrt(rem[1][1]);
            last = {rem[0][1] / s, s};
        }
        lambda.push_back(last);

        if (!brackets_generic(lambda)) continue;
        if (momentum_closure_residual(lambda, lambda) > 1e-10) continue;
        return lambda;
    }
    fail(ErrorCode::Sampling, "D=3 spinor sampling exceeded the resample limit");
}

KinematicsSample sample_d3(int n, std::mt19937_64& rng) {
    for (int attempt = 0; attempt < 20; ++attempt) {
        KinematicsSample s;
        s.dim = 3;
        s.n = n;
        s.lambda = sample_d3_spinors(n, rng);
        s.lambda_tilde = s.lambda;
        s.x = dual_from_spinors(s.lambda, s.lambda_tilde);
        s.z = twistors_from(s.lambda, s.x);
        if (!pluckers_generic(s.z)) continue;
        return s;
    }
    fail(ErrorCode::Sampling, "D=3 sampling exceeded the resample limit");
}

KinematicsSample sample_d4(int n, std::mt19937_64& rng) {
    if (n < 6) fail(ErrorCode::InvalidArgument, "D=4 sampling requires n >= 6");
    for (int attempt = 0; attempt < 100; ++attempt) {
        KinematicsSample s;
        s.dim = 4;
        s.n = n;
        for (int i = 0; i < n - 2; ++i) {
            s.lambda.push_back(rand_spinor(rng));
            s.lambda_tilde.push_back(rand_spinor(rng));
        }
        Mat2<Complex> m{};
        for (int i = 0; i < n - 2; ++i)
            m = mat_sub(m, outer(s.lambda[i], s.lambda_tilde[i]));
        Spinor<Complex> a = rand_spinor(rng), b = rand_spinor(rng);
        Complex det_a = a[0] * b[1] - b[0] * a[1];
        if (std::abs(det_a) < 0.5) continue;
        // solve [a b] * [tilde_{n-1}^T; tilde_n^T] = M
        Mat2<Complex> inv{{{b[1] / det_a, -b[0] / det_a}, {-a[1] / det_a, a[0] / det_a}}};
        Mat2<Complex> rows = mat_mul(inv, m);
        s.lambda.push_back(a);
        s.lambda.push_back(b);
        s.lambda_tilde.push_back({rows[0][0], rows[0][1]});
        s.lambda_tilde.push_back({rows[1][0], rows[1][1]});
        if (!brackets_generic(s.lambda)) continue;
        s.x = dual_from_spinors(s.lambda, s.lambda_tilde);
        s.z = twistors_from(s.lambda, s.x);
        if (!pluckers_generic(s.z)) continue;
        return s;
    }
    fail(ErrorCode::Sampling, "D=4 sampling exceeded the resample limit");
}

RationalKinematicsSample sample_d4_rational(int n, std::mt19937_64& rng) {
    if (n < 6) fail(ErrorCode::InvalidArgument, "D=4 sampling requires n >= 6");
    auto rand_rat_spinor = [&rng]() {
        for (;;) {
            Spinor<Rational> s{Rational(uniform_int(rng, -9, 9)), Rational(uniform_int(rng, -9, 9))};
            if (s[0] != 0 || s[1] != 0) return s;
        }
    };
    for (int attempt = 0; attempt < 100; ++attempt) {
        RationalKinematicsSample s;
        s.n = n;
        for (int i = 0; i < n - 2; ++i) {
            s.lambda.push_back(rand_rat_spinor());
            s.lambda_tilde.push_back(rand_rat_spinor());
        }
        Mat2<Rational> m{};
        for (int i = 0; i < n - 2; ++i)
            m = mat_sub(m, outer(s.lambda[i], s.lambda_tilde[i]));
        Spinor<Rational> a = rand_rat_spinor(), b = rand_rat_spinor();
        Rational det_a = a[0] * b[1] - b[0] * a[1];
        if (det_a == 0) continue;
        Mat2<Rational> inv{{{b[1] / det_a, -b[0] / det_a}, {-a[1] / det_a, a[0] / det_a}}};
        Mat2<Rational> rows = mat_mul(inv, m);
        s.lambda.push_back(a);
        s.lambda.push_back(b);
        s.lambda_tilde.push_back({rows[0][0], rows[0][1]});
        s.lambda_tilde.push_back({rows[1][0], rows[1][1]});
        bool generic = true;
        for (int i = 1; i <= n && generic; ++i)
            if (angle(s.lambda[i - 1], s.lambda[wrap(i + 1, n) - 1]) == 0) generic = false;
        if (!generic) continue;
        s.x = dual_from_spinors(s.lambda, s.lambda_tilde);
        s.z = twistors_from(s.lambda, s.x);
        return s;
    }
    fail(ErrorCode::Sampling, "rational D=4 sampling exceeded the resample limit");
}

namespace {

// index tuples whose Pluckers must not vanish on control matrices
std::set<std::vector<int>> folding_tuples(int n) {
    std::set<std::vector<int>> needed;
    auto add = [&](std::vector<int> idx) {
        for (int& x : idx) x = wrap(x, n);
        std::sort(idx.begin(), idx.end());
        needed.insert(std::move(idx));
    };
    for (int i = 1; i <= n; ++i) add({i, i + 1, i + 2, i + 3});
    for (int i = 0; i <= n - 6; ++i) {
        auto [a, c] = gr4_position(n, i);
        add({a, a + 1, a + 2, c});
        add({a - 1, a, a + 1, c + 1});
        add({a - 1, a, a + 1, a + 2});
        add({a + 1, c - 1, c, c + 1});
        add({a, c, c + 1, c + 2});
        add({c - 1, c, c + 1, c + 2});
        add({a, a + 1, c, c + 1});
    }
    return needed;
}

RationalMatrix sample_matrix_with(int n, const std::set<std::vector<int>>& needed,
                                  std::mt19937_64& rng) {
    for (int attempt = 0; attempt < 100; ++attempt) {
        RationalMatrix m = RationalMatrix::random(4, n, rng);
        bool ok = true;
        for (const auto& idx : needed)
            if (plucker_eval(m, idx) == 0) {
                ok = false;
                break;
            }
        if (ok) return m;
    }
    fail(ErrorCode::Sampling, "twistor-matrix sampling exceeded the resample limit");
}

} // namespace

RationalMatrix sample_d4_twistors(int n, std::mt19937_64& rng) {
    if (n < 6) fail(ErrorCode::InvalidArgument, "twistor sampling requires n >= 6");
    return sample_matrix_with(n, folding_tuples(n), rng);
}

double check_xij(const KinematicsSample& s, int i, int j) {
    auto lam = [&](int a) { return s.lambda[wrap(a, s.n) - 1]; };
    Complex lhs = det2(s.x_diff(i, j));
    Complex denom = angle(lam(i - 1), lam(i)) * angle(lam(j - 1), lam(j));
    if (std::abs(denom) < 1e-300) fail(ErrorCode::Sampling, "degenerate consecutive bracket");
    Complex rhs = plucker4(s.z, i - 1, i, j - 1, j) / denom;
    return relative(lhs, rhs);
}

double check_bracket_identity(const KinematicsSample& s, int i, int k, int j) {
    auto lam = [&](int a) { return s.lambda[wrap(a, s.n) - 1]; };
    Complex lhs = bracket_chain(lam(i), s.x_diff(i, k), s.x_diff(k, j), lam(j));
    Complex denom = angle(lam(k - 1), lam(k));
    if (std::abs(denom) < 1e-300) fail(ErrorCode::Sampling, "degenerate consecutive bracket");
    Complex rhs = plucker4(s.z, i, k - 1, k, j) / denom;
    return relative(lhs, rhs);
}

double residual_d3_consecutive(const std::vector<Spinor<Complex>>& lambda,
                               const TwistorMatrix<Complex>& z, int a) {
    int n = static_cast<int>(lambda.size());
    auto lam = [&](int i) { return lambda[wrap(i, n) - 1]; };
    Complex ab = angle(lam(a), lam(a + 1));
    Complex lhs = angle(lam(a - 1), lam(a)) * angle(lam(a + 1), lam(a + 2)) * ab * ab;
    Complex rhs = plucker4(z, a - 1, a, a + 1, a + 2);
    return relative(lhs, rhs);
}

double check_d3_consecutive(const KinematicsSample& s, int a) {
    if (s.dim != 3)
        fail(ErrorCode::InvalidArgument, "consecutive-Mandelstam identity requires D=3 data");
    return residual_d3_consecutive(s.lambda, s.z, a);
}

TraceForms s_quantity(const KinematicsSample& s, int a, int c) {
    if (s.dim != 3) fail(ErrorCode::InvalidArgument, "trace quantity requires D=3 data");
    int n = s.n;
    int sep = ((c - a) % n + n) % n;
    if (sep < 3 || sep > n - 3)
        fail(ErrorCode::InvalidArgument, "cyclic separation must lie in [3, n-3]");
    auto lam = [&](int i) { return s.lambda[wrap(i, n) - 1]; };
    auto mom = [&](int i) { return outer(lam(i), lam(i)); };

    Mat2<Complex> mid1{}, mid2{};
    for (int m = a + 2; m <= a + sep - 1; ++m) mid1 = mat_add(mid1, mom(m));
    for (int m = c + 2; m <= c + n - sep - 1; ++m) mid2 = mat_add(mid2, mom(m));

    TraceForms out;
    out.direct = trace_contract({mom(a), mom(a + 1), mid1, mom(c), mom(c + 1), mid2});
    out.form_a = plucker4(s.z, c, c + 1, c + 2, a) * angle(lam(a), lam(a + 1)) *
                 plucker4(s.z, a + 1, c - 1, c, c + 1) /
                 (angle(lam(c - 1), lam(c)) * angle(lam(c + 1), lam(c + 2)) *
                  angle(lam(c), lam(c + 1)));
    out.form_b = plucker4(s.z, a, a + 1, a + 2, c) * angle(lam(c), lam(c + 1)) *
                 plucker4(s.z, c + 1, a - 1, a, a + 1) /
                 (angle(lam(a - 1), lam(a)) * angle(lam(a + 1), lam(a + 2)) *
                  angle(lam(a), lam(a + 1)));
    return out;
}

double folding_residual_z(const TwistorMatrix<Complex>& z, int a, int c) {
    Complex lhs = plucker4(z, a, a + 1, a + 2, c) * plucker4(z, a - 1, a, a + 1, c + 1) /
                  (plucker4(z, a - 1, a, a + 1, a + 2) * plucker4(z, a, a + 1, c, c + 1));
    Complex rhs = plucker4(z, a + 1, c - 1, c, c + 1) * plucker4(z, a, c, c + 1, c + 2) /
                  (plucker4(z, c - 1, c, c + 1, c + 2) * plucker4(z, a, a + 1, c, c + 1));
    return relative(lhs, rhs);
}

double folding_residual(const KinematicsSample& s, int a, int c) {
    return folding_residual_z(s.z, a, c);
}

namespace {

Rational rational_abs(const Rational& r) { return r < 0 ? Rational(-r) : r; }

Rational plucker_wrapped(const RationalMatrix& z, std::vector<int> idx) {
    for (int& x : idx) x = wrap(x, z.n());
    return plucker_eval(z, idx);
}

} // namespace

Rational folding_residual_exact(const RationalMatrix& z, int a, int c, Rational* lhs_out,
                                Rational* rhs_out) {
    Rational den1 = plucker_wrapped(z, {a - 1, a, a + 1, a + 2}) *
                    plucker_wrapped(z, {a, a + 1, c, c + 1});
    Rational den2 = plucker_wrapped(z, {c - 1, c, c + 1, c + 2}) *
                    plucker_wrapped(z, {a, a + 1, c, c + 1});
    if (den1 == 0 || den2 == 0)
        fail(ErrorCode::Sampling, "degenerate twistor matrix: zero denominator");
    Rational lhs = plucker_wrapped(z, {a, a + 1, a + 2, c}) *
                   plucker_wrapped(z, {a - 1, a, a + 1, c + 1}) / den1;
    Rational rhs = plucker_wrapped(z, {a + 1, c - 1, c, c + 1}) *
                   plucker_wrapped(z, {a, c, c + 1, c + 2}) / den2;
    if (lhs_out) *lhs_out = lhs;
    if (rhs_out) *rhs_out = rhs;
    Rational scale = std::max(rational_abs(lhs), rational_abs(rhs));
    if (scale == 0) return Rational(0);
    return rational_abs(lhs - rhs) / scale;
}

bool xij_exact(const RationalKinematicsSample& s, int i, int j) {
    auto lam = [&](int a) { return s.lambda[wrap(a, s.n) - 1]; };
    Mat2<Rational> xij = mat_sub(s.x[wrap(i, s.n) - 1], s.x[wrap(j, s.n) - 1]);
    // x^2 is the mostly-minus square, +det of the 2x2 encoding; cross-multiplied
    Rational lhs = det2(xij) * angle(lam(i - 1), lam(i)) * angle(lam(j - 1), lam(j));
    return lhs == plucker4(s.z, i - 1, i, j - 1, j);
}

bool bracket_identity_exact(const RationalKinematicsSample& s, int i, int k, int j) {
    auto lam = [&](int a) { return s.lambda[wrap(a, s.n) - 1]; };
    Mat2<Rational> a = mat_sub(s.x[wrap(i, s.n) - 1], s.x[wrap(k, s.n) - 1]);
    Mat2<Rational> b = mat_sub(s.x[wrap(k, s.n) - 1], s.x[wrap(j, s.n) - 1]);
    std::swap(b[0][1], b[1][0]);
    const Mat2<Rational> eps{{{Rational(0), Rational(1)}, {Rational(-1), Rational(0)}}};
    std::array<Rational, 2> row{lam(i)[0], lam(i)[1]};
    auto row_mul_r = [](const std::array<Rational, 2>& r, const Mat2<Rational>& m) {
        return std::array<Rational, 2>{r[0] * m[0][0] + r[1] * m[1][0],
                                       r[0] * m[0][1] + r[1] * m[1][1]};
    };
    row = row_mul_r(row, eps);
    row = row_mul_r(row, a);
    row = row_mul_r(row, eps);
    row = row_mul_r(row, b);
    row = row_mul_r(row, eps);
    Rational lhs = row[0] * lam(j)[0] + row[1] * lam(j)[1];
    // cross-multiplied against the <k-1,k> denominator
    return lhs * angle(lam(k - 1), lam(k)) == plucker4(s.z, i, k - 1, k, j);
}

std::mt19937_64 trial_rng(uint64_t master_seed, int trial) {
    uint64_t z = master_seed + 0x9E3779B97F4A7C15ull * static_cast<uint64_t>(trial + 1);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return std::mt19937_64(z ^ (z >> 31));
}

namespace {

IdentityStats make_stats(const std::string& name, std::vector<double> values) {
    IdentityStats st;
    st.name = name;
    st.count = static_cast<long>(values.size());
    if (values.empty()) return st;
    std::sort(values.begin(), values.end());
    st.max_residual = values.back();
    st.median_residual = values[values.size() / 2];
    return st;
}

} // namespace

ResidualReport run_d3_suite(int n, int trials, double tol, uint64_t rng_seed) {
    if (n < 6) fail(ErrorCode::InvalidArgument, "D=3 suite requires n >= 6");
    if (trials < 1) fail(ErrorCode::InvalidArgument, "at least one trial is required");
    ResidualReport rep;
    rep.n = n;
    rep.dim = 3;
    rep.trials = trials;
    rep.tol = tol;
    rep.rng_seed = rng_seed;

    std::vector<double> closure, xij, bracket, consecutive, s_agree, folding;
    for (int t = 0; t < trials; ++t) {
        auto rng = trial_rng(rng_seed, t);
        KinematicsSample s = sample_d3(n, rng);
        closure.push_back(momentum_closure_residual(s.lambda, s.lambda_tilde));
        for (int i = 1; i <= n; ++i)
            for (int j = 1; j <= n; ++j) {
                // cyclically adjacent pairs make both sides identically zero
                int sep = ((j - i) % n + n) % n;
                if (sep <= 1 || sep == n - 1) continue;
                xij.push_back(check_xij(s, i, j));
            }
        for (int i = 1; i <= n; ++i)
            for (int k = 1; k <= n; ++k)
                for (int j = 1; j <= n; ++j) {
                    if (i == k || k == j || i == j) continue;
                    // k = i+1 and j = k-1 annihilate the left side exactly
                    if (wrap(i + 1, n) == k || wrap(k - 1, n) == j) continue;
                    bracket.push_back(check_bracket_identity(s, i, k, j));
                }
        for (int a = 1; a <= n; ++a) consecutive.push_back(check_d3_consecutive(s, a));
        for (int a = 1; a <= n; ++a)
            for (int sep = 3; sep <= n - 3; ++sep) {
                TraceForms f = s_quantity(s, a, a + sep);
                s_agree.push_back(relative(f.direct, f.form_a));
                s_agree.push_back(relative(f.direct, f.form_b));
                folding.push_back(folding_residual(s, a, a + sep));
            }
    }
    rep.identities.push_back(make_stats("momentum_conservation", std::move(closure)));
    rep.identities.push_back(make_stats("xij_squared", std::move(xij)));
    rep.identities.push_back(make_stats("bracket_chain", std::move(bracket)));
    rep.identities.push_back(make_stats("consecutive_mandelstam", std::move(consecutive)));
    rep.identities.push_back(make_stats("trace_agreement", std::move(s_agree)));
    rep.identities.push_back(make_stats("folding_constraint", std::move(folding)));
    rep.pass = true;
    for (const auto& st : rep.identities)
        if (st.max_residual > tol) rep.pass = false;
    return rep;
}

ResidualReport run_d4_control(int n, int trials, double threshold, uint64_t rng_seed) {
    if (n < 6) fail(ErrorCode::InvalidArgument, "D=4 control requires n >= 6");
    if (trials < 1) fail(ErrorCode::InvalidArgument, "at least one trial is required");
    ResidualReport rep;
    rep.n = n;
    rep.dim = 4;
    rep.trials = trials;
    rep.tol = threshold;
    rep.rng_seed = rng_seed;

    auto [folded, records] =
        apply_sequence(initial_seed(4, n), fold_schedule(4, n).vertex_ids);
    std::set<std::vector<int>> needed = folding_tuples(n);
    for (const auto& rec : records) {
        needed.insert(rec.old_label.column_entries());
        needed.insert(rec.new_label.column_entries());
        for (const auto& t : rec.in_labels) needed.insert(t.column_entries());
        for (const auto& t : rec.out_labels) needed.insert(t.column_entries());
    }

    std::vector<int> violations(n - 5, 0);
    std::vector<double> residuals;
    rep.exact_pass = true;
    for (int t = 0; t < trials; ++t) {
        auto rng = trial_rng(rng_seed, t);
        RationalMatrix z = sample_matrix_with(n, needed, rng);
        for (int i = 0; i <= n - 6; ++i) {
            auto [a, c] = gr4_position(n, i);
            double res = folding_residual_exact(z, a, c).get_d();
            residuals.push_back(res);
            if (res > threshold) ++violations[i];
        }
        // exact D=4 identities on the same matrix
        for (const auto& rec : records)
            if (!verify_exchange(rec, z)) rep.exact_pass = false;
        Rational three_term = plucker_eval(z, {1, 3, 4, 5}) * plucker_eval(z, {2, 4, 5, 6}) -
                              plucker_eval(z, {1, 2, 4, 5}) * plucker_eval(z, {3, 4, 5, 6}) -
                              plucker_eval(z, {2, 3, 4, 5}) * plucker_eval(z, {1, 4, 5, 6});
        if (three_term != 0) rep.exact_pass = false;
        // exact rational kinematics path
        RationalKinematicsSample rs = sample_d4_rational(n, rng);
        for (int i = 1; i <= n && rep.exact_pass; ++i)
            for (int j = 1; j <= n; ++j) {
                if (i == j) continue;
                if (!xij_exact(rs, i, j)) {
                    rep.exact_pass = false;
                    break;
                }
            }
        for (int i = 1; i <= n && rep.exact_pass; ++i)
            for (int k = 1; k <= n && rep.exact_pass; ++k)
                for (int j = 1; j <= n; ++j) {
                    if (i == k || k == j || i == j) continue;
                    if (!bracket_identity_exact(rs, i, k, j)) {
                        rep.exact_pass = false;
                        break;
                    }
                }
    }
    rep.identities.push_back(make_stats("folding_violation", std::move(residuals)));
    rep.pass = rep.exact_pass;
    for (int i = 0; i <= n - 6; ++i) {
        double rate = static_cast<double>(violations[i]) / trials;
        rep.violation_rates.push_back(rate);
        if (rate < 0.95) rep.pass = false;
    }
    return rep;
}

} // namespace grassfold::kin
