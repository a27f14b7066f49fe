#include "ppav/matrix.hpp"

#include <utility>

#include "ppav/errors.hpp"

namespace ppav {

IntMatrix hnf_integer(IntMatrix a) {
    const std::size_t rows = a.rows(), cols = a.cols();
    std::size_t r = 0;
    Integer g, s, t, u, v, x, y;
    for (std::size_t j = 0; j < cols && r < rows; ++j) {
        for (std::size_t i = r + 1; i < rows; ++i) {
            if (a(i, j) == 0) continue;
            if (a(r, j) == 0) {
                for (std::size_t k = j; k < cols; ++k) std::swap(a(r, k), a(i, k));
                continue;
            }
            mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), a(r, j).get_mpz_t(),
                       a(i, j).get_mpz_t());
            u = a(r, j) / g;
            v = a(i, j) / g;
            for (std::size_t k = j; k < cols; ++k) {
                x = a(r, k);
                y = a(i, k);
                a(r, k) = s * x + t * y;
                a(i, k) = u * y - v * x;
            }
        }
        if (a(r, j) == 0) continue;
        if (a(r, j) < 0)
            for (std::size_t k = j; k < cols; ++k) a(r, k) = -a(r, k);
        for (std::size_t i = 0; i < r; ++i) {
            const Integer q = floor_div(a(i, j), a(r, j));
            if (q == 0) continue;
            for (std::size_t k = j; k < cols; ++k) a(i, k) -= q * a(r, k);
        }
        ++r;
    }
    IntMatrix out(r, cols);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t k = 0; k < cols; ++k) out(i, k) = a(i, k);
    return out;
}

Integer common_denominator(const RatMatrix& m) {
    Integer d = 1;
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) d = lcm(d, m(i, j).get_den());
    return d;
}

IntMatrix to_integer(const RatMatrix& m, const Integer& scale) {
    IntMatrix out(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) {
            const Rational v = m(i, j) * scale;
            if (v.get_den() != 1) throw InternalError("to_integer: scale does not clear denominators");
            out(i, j) = v.get_num();
        }
    return out;
}

RatMatrix to_rational(const IntMatrix& m) {
    RatMatrix out(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = m(i, j);
    return out;
}

RatMatrix hnf(const RatMatrix& m) {
    const Integer den = common_denominator(m);
    IntMatrix h = hnf_integer(to_integer(m, den));
    if (h.rows() != m.cols())
        throw RankError("generators span a lattice of rank " + std::to_string(h.rows()) +
                        " in dimension " + std::to_string(m.cols()));
    RatMatrix out = to_rational(h);
    for (std::size_t i = 0; i < out.rows(); ++i)
        for (std::size_t j = 0; j < out.cols(); ++j) out(i, j) /= den;
    return out;
}

Rational determinant(RatMatrix m) {
    if (m.rows() != m.cols()) throw DomainError("determinant of non-square matrix");
    const std::size_t n = m.rows();
    Rational det = 1;
    for (std::size_t j = 0; j < n; ++j) {
        std::size_t p = j;
        while (p < n && m(p, j) == 0) ++p;
        if (p == n) return Rational(0);
        if (p != j) {
            for (std::size_t k = 0; k < n; ++k) std::swap(m(p, k), m(j, k));
            det = -det;
        }
        det *= m(j, j);
        for (std::size_t i = j + 1; i < n; ++i) {
            if (m(i, j) == 0) continue;
            const Rational f = m(i, j) / m(j, j);
            for (std::size_t k = j; k < n; ++k) m(i, k) -= f * m(j, k);
        }
    }
    return det;
}

Integer determinant(const IntMatrix& m) {
    const Rational d = determinant(to_rational(m));
    return d.get_num();
}

RatMatrix inverse(RatMatrix m) {
    if (m.rows() != m.cols()) throw DomainError("inverse of non-square matrix");
    const std::size_t n = m.rows();
    RatMatrix inv = RatMatrix::identity(n);
    for (std::size_t j = 0; j < n; ++j) {
        std::size_t p = j;
        while (p < n && m(p, j) == 0) ++p;
        if (p == n) throw InternalError("inverse of singular matrix");
        if (p != j)
            for (std::size_t k = 0; k < n; ++k) {
                std::swap(m(p, k), m(j, k));
                std::swap(inv(p, k), inv(j, k));
            }
        const Rational piv = m(j, j);
        for (std::size_t k = 0; k < n; ++k) {
            m(j, k) /= piv;
            inv(j, k) /= piv;
        }
        for (std::size_t i = 0; i < n; ++i) {
            if (i == j || m(i, j) == 0) continue;
            const Rational f = m(i, j);
            for (std::size_t k = 0; k < n; ++k) {
                m(i, k) -= f * m(j, k);
                inv(i, k) -= f * inv(j, k);
            }
        }
    }
    return inv;
}

std::size_t rank(RatMatrix m) {
    std::size_t r = 0;
    for (std::size_t j = 0; j < m.cols() && r < m.rows(); ++j) {
        std::size_t p = r;
        while (p < m.rows() && m(p, j) == 0) ++p;
        if (p == m.rows()) continue;
        for (std::size_t k = 0; k < m.cols(); ++k) std::swap(m(p, k), m(r, k));
        for (std::size_t i = r + 1; i < m.rows(); ++i) {
            if (m(i, j) == 0) continue;
            const Rational f = m(i, j) / m(r, j);
            for (std::size_t k = j; k < m.cols(); ++k) m(i, k) -= f * m(r, k);
        }
        ++r;
    }
    return r;
}

IntMatrix integer_left_kernel(const IntMatrix& m) {
    const std::size_t r = m.rows(), k = m.cols();
    IntMatrix aug(r, k + r);
    for (std::size_t i = 0; i < r; ++i) {
        for (std::size_t j = 0; j < k; ++j) aug(i, j) = m(i, j);
        aug(i, k + i) = 1;
    }
    const IntMatrix h = hnf_integer(std::move(aug));
    std::vector<std::vector<Integer>> kernel;
    for (std::size_t i = 0; i < h.rows(); ++i) {
        bool zero = true;
        for (std::size_t j = 0; j < k && zero; ++j) zero = h(i, j) == 0;
        if (!zero) continue;
        std::vector<Integer> row(r);
        for (std::size_t j = 0; j < r; ++j) row[j] = h(i, k + j);
        kernel.push_back(std::move(row));
    }
    return IntMatrix::from_rows(kernel, r);
}

std::vector<Rational> solve_left(const RatMatrix& m, const std::vector<Rational>& b) {
    RatMatrix row(1, b.size());
    row.set_row(0, b);
    return (row * inverse(m)).row(0);
}

}  // namespace ppav
