#include "chipfire/linalg.hpp"

#include <gmpxx.h>

#include <numeric>
#include <stdexcept>
#include <utility>

namespace chipfire {
namespace {

struct Overflow {};

struct Int64Ops {
    using T = std::int64_t;
    static T from(std::int64_t v) { return v; }
    static bool is_zero(T v) { return v == 0; }
    static T mul(T a, T b) {
        T r;
        if (__builtin_mul_overflow(a, b, &r)) throw Overflow{};
        return r;
    }
    static T sub(T a, T b) {
        T r;
        if (__builtin_sub_overflow(a, b, &r)) throw Overflow{};
        return r;
    }
    static T gcd(T a, T b) { return std::gcd(a, b); }
    static T div(T a, T b) { return a / b; }
    static bool is_one(T v) { return v == 1 || v == -1; }
};

struct MpzOps {
    using T = mpz_class;
    static T from(std::int64_t v) { return mpz_class(static_cast<long>(v)); }
    static bool is_zero(const T& v) { return sgn(v) == 0; }
    static T mul(const T& a, const T& b) { return a * b; }
    static T sub(const T& a, const T& b) { return a - b; }
    static T gcd(const T& a, const T& b) {
        mpz_class g;
        mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
        return g;
    }
    static T div(const T& a, const T& b) { return a / b; }
    static bool is_one(const T& v) { return abs(v) == 1; }
};

template <class Ops>
int rank_impl(const IntRows& input) {
    using T = typename Ops::T;
    std::vector<std::vector<T>> rows;
    rows.reserve(input.size());
    std::size_t cols = 0;
    for (const auto& r : input) {
        cols = std::max(cols, r.size());
        std::vector<T> row;
        row.reserve(r.size());
        for (auto v : r) row.push_back(Ops::from(v));
        rows.push_back(std::move(row));
    }
    for (auto& r : rows) r.resize(cols, Ops::from(0));

    int rank = 0;
    for (std::size_t c = 0; c < cols && rank < static_cast<int>(rows.size()); ++c) {
        std::size_t pivot = rows.size();
        for (std::size_t r = rank; r < rows.size(); ++r) {
            if (!Ops::is_zero(rows[r][c])) {
                pivot = r;
                if (Ops::is_one(rows[r][c])) break;
            }
        }
        if (pivot == rows.size()) continue;
        std::swap(rows[rank], rows[pivot]);
        const auto& p = rows[rank];
        for (std::size_t r = rank + 1; r < rows.size(); ++r) {
            auto& row = rows[r];
            if (Ops::is_zero(row[c])) continue;
            T factor = row[c];
            T content = Ops::from(0);
            for (std::size_t j = c; j < cols; ++j) {
                row[j] = Ops::sub(Ops::mul(p[c], row[j]), Ops::mul(factor, p[j]));
                content = Ops::gcd(content, row[j]);
            }
            if (!Ops::is_zero(content) && !Ops::is_one(content)) {
                for (std::size_t j = c; j < cols; ++j) row[j] = Ops::div(row[j], content);
            }
        }
        ++rank;
    }
    return rank;
}

template <class Ops>
typename Ops::T det_impl(const IntMatrix& m) {
    using T = typename Ops::T;
    const int n = m.rows;
    if (n == 0) return Ops::from(1);
    std::vector<std::vector<T>> a(n, std::vector<T>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) a[i][j] = Ops::from(m(i, j));
    // Bareiss
    T prev = Ops::from(1);
    int sign = 1;
    for (int k = 0; k < n - 1; ++k) {
        if (Ops::is_zero(a[k][k])) {
            int swap_row = -1;
            for (int r = k + 1; r < n; ++r) {
                if (!Ops::is_zero(a[r][k])) { swap_row = r; break; }
            }
            if (swap_row < 0) return Ops::from(0);
            std::swap(a[k], a[swap_row]);
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i) {
            for (int j = k + 1; j < n; ++j) {
                a[i][j] = Ops::div(Ops::sub(Ops::mul(a[i][j], a[k][k]), Ops::mul(a[i][k], a[k][j])), prev);
            }
        }
        prev = a[k][k];
    }
    return sign > 0 ? a[n - 1][n - 1] : Ops::sub(Ops::from(0), a[n - 1][n - 1]);
}

}  // namespace

int rational_rank(const IntRows& rows) {
    try {
        return rank_impl<Int64Ops>(rows);
    } catch (const Overflow&) {
        return rank_impl<MpzOps>(rows);
    }
}

std::int64_t exact_determinant(const IntMatrix& m) {
    if (m.rows != m.cols) throw std::invalid_argument("determinant of a non-square matrix");
    try {
        return det_impl<Int64Ops>(m);
    } catch (const Overflow&) {
        mpz_class d = det_impl<MpzOps>(m);
        if (!d.fits_slong_p()) throw std::overflow_error("determinant exceeds 64 bits");
        return d.get_si();
    }
}

bool in_column_span(const IntRows& columns, const std::vector<std::int64_t>& target) {
    // Column vectors are used as rows: rank is the same for the transpose.
    IntRows augmented = columns;
    const int base = rational_rank(augmented);
    augmented.push_back(target);
    return rational_rank(augmented) == base;
}

}  // namespace chipfire
