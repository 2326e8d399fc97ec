#include "w22/linalg.hpp"

#include <stdexcept>

namespace w22 {

std::vector<std::size_t> rref(Matrix& m) {
    std::vector<std::size_t> pivots;
    if (m.empty())
        return pivots;
    std::size_t rows = m.size(), cols = m[0].size();
    for (const auto& row : m)
        if (row.size() != cols)
            throw std::domain_error("rref: ragged matrix");
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t p = r;
        while (p < rows && m[p][c].is_zero())
            ++p;
        if (p == rows)
            continue;
        std::swap(m[p], m[r]);
        Scalar inv = m[r][c].inverse();
        for (std::size_t j = c; j < cols; ++j)
            m[r][j] *= inv;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || m[i][c].is_zero())
                continue;
            Scalar f = m[i][c];
            for (std::size_t j = c; j < cols; ++j)
                m[i][j] -= f * m[r][j];
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

std::size_t rank(Matrix m) {
    return rref(m).size();
}

std::vector<std::vector<Scalar>> nullspace(Matrix m, std::size_t cols) {
    std::vector<std::vector<Scalar>> out;
    auto pivots = rref(m);
    std::vector<bool> is_pivot(cols, false);
    for (std::size_t c : pivots)
        is_pivot.at(c) = true;
    for (std::size_t free = 0; free < cols; ++free) {
        if (is_pivot[free])
            continue;
        std::vector<Scalar> v(cols, Scalar(0));
        v[free] = Scalar(1);
        for (std::size_t i = 0; i < pivots.size(); ++i)
            v[pivots[i]] = -m[i][free];
        out.push_back(std::move(v));
    }
    return out;
}

std::optional<std::vector<Scalar>> solve(Matrix a, std::vector<Scalar> b) {
    if (a.size() != b.size())
        throw std::domain_error("solve: dimension mismatch");
    std::size_t cols = a.empty() ? 0 : a[0].size();
    for (std::size_t i = 0; i < a.size(); ++i)
        a[i].push_back(b[i]);
    auto pivots = rref(a);
    if (!pivots.empty() && pivots.back() == cols)
        return std::nullopt; // pivot in the augmented column
    std::vector<Scalar> x(cols, Scalar(0));
    for (std::size_t i = 0; i < pivots.size(); ++i)
        x[pivots[i]] = a[i][cols];
    return x;
}

Scalar det_bareiss(Matrix m) {
    std::size_t n = m.size();
    for (const auto& row : m)
        if (row.size() != n)
            throw std::domain_error("det_bareiss: matrix not square");
    if (n == 0)
        return Scalar(1);

    // Scale each row by the lcm of its component denominators so entries
    // become (Gaussian) integers; divide the scale back out at the end.
    Scalar scale(1);
    for (auto& row : m) {
        mpz_class l(1);
        for (const auto& e : row) {
            mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), e.re().get_den().get_mpz_t());
            mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), e.im().get_den().get_mpz_t());
        }
        Scalar f{mpz_class(l)};
        if (!f.is_one()) {
            for (auto& e : row)
                e *= f;
            scale *= f;
        }
    }

    int sign = 1;
    Scalar prev(1);
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m[k][k].is_zero()) {
            std::size_t p = k + 1;
            while (p < n && m[p][k].is_zero())
                ++p;
            if (p == n)
                return Scalar(0);
            std::swap(m[p], m[k]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j)
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
            m[i][k] = Scalar(0);
        }
        prev = m[k][k];
    }
    Scalar det = m[n - 1][n - 1] / scale;
    return sign < 0 ? -det : det;
}

} // namespace w22
