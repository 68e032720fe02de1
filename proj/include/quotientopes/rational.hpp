#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <string>
#include <vector>

#include "quotientopes/errors.hpp"

namespace qtp {

// Arbitrary-precision rational, always in lowest terms with positive denominator.
using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

using RationalVector = std::vector<Rational>;

// "p/q" in lowest terms, "p" when the denominator is 1.
inline std::string format_rational(const Rational& r) {
    std::string s = numerator(r).str();
    if (denominator(r) != 1) s += "/" + denominator(r).str();
    return s;
}

inline Rational parse_rational(const std::string& text) {
    auto is_int = [](const std::string& t) {
        if (t.empty()) return false;
        size_t k = (t[0] == '-' || t[0] == '+') ? 1 : 0;
        if (k == t.size()) return false;
        for (; k < t.size(); ++k)
            if (t[k] < '0' || t[k] > '9') return false;
        return true;
    };
    size_t slash = text.find('/');
    try {
        if (slash == std::string::npos) {
            if (!is_int(text)) throw validation_error("");
            return Rational(BigInt(text));
        }
        std::string num = text.substr(0, slash), den = text.substr(slash + 1);
        if (!is_int(num) || !is_int(den)) throw validation_error("");
        BigInt d(den);
        if (d == 0) throw validation_error("");
        return Rational(BigInt(num), d);
    } catch (const std::exception&) {
        throw validation_error("bad rational \"" + text + "\"");
    }
}

inline Rational dot(const RationalVector& u, const RationalVector& v) {
    if (u.size() != v.size()) throw validation_error("dot of vectors with different lengths");
    Rational s = 0;
    for (size_t i = 0; i < u.size(); ++i) s += u[i] * v[i];
    return s;
}

// Dense row-major rational matrix.
class RationalMatrix {
public:
    RationalMatrix(int rows, int cols) : rows_(rows), cols_(cols), a_(size_t(rows) * cols, Rational(0)) {
        if (rows < 0 || cols < 0) throw validation_error("negative matrix shape");
    }
    int rows() const { return rows_; }
    int cols() const { return cols_; }
    Rational& at(int r, int c) { return a_[size_t(r) * cols_ + c]; }
    const Rational& at(int r, int c) const { return a_[size_t(r) * cols_ + c]; }

private:
    int rows_, cols_;
    std::vector<Rational> a_;
};

namespace detail {

// Row echelon by Gaussian elimination over Q. Pivot rule is deterministic:
// first row below the frontier with a nonzero entry in the current column.
// Returns the rank; perm receives the original index of each row in final order.
inline int echelonize(RationalMatrix& m, std::vector<int>& perm) {
    perm.resize(m.rows());
    for (int r = 0; r < m.rows(); ++r) perm[r] = r;
    int rank = 0;
    for (int col = 0; col < m.cols() && rank < m.rows(); ++col) {
        int pivot = -1;
        for (int r = rank; r < m.rows(); ++r)
            if (m.at(r, col) != 0) { pivot = r; break; }
        if (pivot < 0) continue;
        if (pivot != rank) {
            for (int c = 0; c < m.cols(); ++c) std::swap(m.at(pivot, c), m.at(rank, c));
            std::swap(perm[pivot], perm[rank]);
        }
        for (int r = rank + 1; r < m.rows(); ++r) {
            if (m.at(r, col) == 0) continue;
            Rational factor = m.at(r, col) / m.at(rank, col);
            for (int c = col; c < m.cols(); ++c) m.at(r, c) -= factor * m.at(rank, c);
        }
        ++rank;
    }
    return rank;
}

}  // namespace detail

inline int matrix_rank(RationalMatrix m) {
    std::vector<int> perm;
    return detail::echelonize(m, perm);
}

// Solve A x = b for square A. The solution is verified by multiplying back;
// a rank-deficient A raises singular_matrix_error carrying the rank and the
// original index of the first dependent row.
inline RationalVector solve_linear_system(const RationalMatrix& A, const RationalVector& b) {
    int n = A.rows();
    if (A.cols() != n) throw validation_error("solve requires a square matrix");
    if (static_cast<int>(b.size()) != n) throw validation_error("right-hand side length mismatch");

    RationalMatrix m(n, n + 1);
    for (int r = 0; r < n; ++r) {
        for (int c = 0; c < n; ++c) m.at(r, c) = A.at(r, c);
        m.at(r, n) = b[r];
    }
    // Echelonize the coefficient block only; the augmented column rides along.
    std::vector<int> perm;
    RationalMatrix coeff(n, n);
    for (int r = 0; r < n; ++r)
        for (int c = 0; c < n; ++c) coeff.at(r, c) = A.at(r, c);
    int rank = detail::echelonize(coeff, perm);
    if (rank < n) {
        int witness = perm[rank];  // first row with no pivot, in original numbering
        throw singular_matrix_error(
            "singular system: rank " + std::to_string(rank) + " < " + std::to_string(n) +
                ", row " + std::to_string(witness) + " depends on earlier rows",
            rank, witness);
    }
    // Redo elimination on the augmented matrix with the same pivot rule.
    std::vector<int> perm2;
    detail::echelonize(m, perm2);
    RationalVector x(n, Rational(0));
    for (int r = n - 1; r >= 0; --r) {
        Rational s = m.at(r, n);
        for (int c = r + 1; c < n; ++c) s -= m.at(r, c) * x[c];
        x[r] = s / m.at(r, r);
    }
    for (int r = 0; r < n; ++r) {
        Rational s = 0;
        for (int c = 0; c < n; ++c) s += A.at(r, c) * x[c];
        if (s != b[r]) throw verification_error("solve verification failed at row " + std::to_string(r));
    }
    return x;
}

// Dimension of the affine hull of a point set (-1 for the empty set).
inline int affine_dimension(const std::vector<RationalVector>& points) {
    if (points.empty()) return -1;
    if (points.size() == 1) return 0;
    int d = static_cast<int>(points[0].size());
    RationalMatrix m(static_cast<int>(points.size()) - 1, d);
    for (size_t p = 1; p < points.size(); ++p) {
        if (static_cast<int>(points[p].size()) != d) throw validation_error("point dimension mismatch");
        for (int c = 0; c < d; ++c) m.at(static_cast<int>(p) - 1, c) = points[p][c] - points[0][c];
    }
    return matrix_rank(std::move(m));
}

}  // namespace qtp
