#include "rational.hpp"

namespace grassfold {

Rational rational_det(std::vector<std::vector<Rational>> m) {
    size_t n = m.size();
    Rational det = 1;
    for (size_t col = 0; col < n; ++col) {
        size_t pivot = col;
        while (pivot < n && m[pivot][col] == 0) ++pivot;
        if (pivot == n) return Rational(0);
        if (pivot != col) {
            std::swap(m[pivot], m[col]);
            det = -det;
        }
        det *= m[col][col];
        for (size_t r = col + 1; r < n; ++r) {
            if (m[r][col] == 0) continue;
            Rational f = m[r][col] / m[col][col];
            for (size_t c = col; c < n; ++c) m[r][c] -= f * m[col][c];
        }
    }
    return det;
}

RationalMatrix RationalMatrix::random(int k, int n, std::mt19937_64& rng) {
    RationalMatrix m(k, n);
    for (int r = 0; r < k; ++r)
        for (int c = 0; c < n; ++c) m.at(r, c) = uniform_int(rng, -9, 9);
    return m;
}

Rational plucker_eval(const RationalMatrix& m, const std::vector<int>& idx) {
    if (static_cast<int>(idx.size()) != m.k())
        fail(ErrorCode::InvalidArgument, "index tuple arity must equal the row count");
    std::vector<std::vector<Rational>> sub(m.k(), std::vector<Rational>(m.k()));
    for (int c = 0; c < m.k(); ++c) {
        if (idx[c] < 1 || idx[c] > m.n())
            fail(ErrorCode::InvalidArgument, "column index out of range");
        for (int r = 0; r < m.k(); ++r) sub[r][c] = m.at(r, idx[c] - 1);
    }
    return rational_det(std::move(sub));
}

} // namespace grassfold
