#ifndef HYPERJAC_LINALG_HPP
#define HYPERJAC_LINALG_HPP

#include <cstddef>
#include <utility>
#include <vector>

#include "hyperjac/errors.hpp"

namespace hyperjac {

template <class K>
using Matrix = std::vector<std::vector<typename K::Elem>>;

namespace detail {

// In-place reduced row echelon form with first-nonzero pivoting (deterministic
// row order; exact fields need no pivot-magnitude strategy). Returns the pivot
// column of each eliminated row.
template <class K>
std::vector<std::size_t> rref(Matrix<K>& m) {
    std::vector<std::size_t> pivots;
    if (m.empty()) return pivots;
    const std::size_t rows = m.size();
    const std::size_t cols = m[0].size();
    std::size_t row = 0;
    for (std::size_t col = 0; col < cols && row < rows; ++col) {
        std::size_t sel = rows;
        for (std::size_t r = row; r < rows; ++r) {
            if (!m[r][col].is_zero()) { sel = r; break; }
        }
        if (sel == rows) continue;
        std::swap(m[row], m[sel]);
        const auto inv = m[row][col].inverse();
        for (std::size_t c = col; c < cols; ++c) m[row][c] = m[row][c] * inv;
        for (std::size_t r = 0; r < rows; ++r) {
            if (r == row || m[r][col].is_zero()) continue;
            const auto f = m[r][col];
            for (std::size_t c = col; c < cols; ++c) m[r][c] = m[r][c] - f * m[row][c];
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

} // namespace detail

// Solves A x = b exactly. Requires a consistent system with a unique solution.
template <class K>
std::vector<typename K::Elem> linsolve(const K& k, const Matrix<K>& a,
                                       const std::vector<typename K::Elem>& b) {
    const std::size_t rows = a.size();
    if (rows != b.size()) raise(errc::singular_system, "rhs length does not match row count");
    const std::size_t cols = rows ? a[0].size() : 0;

    Matrix<K> aug = a;
    for (std::size_t r = 0; r < rows; ++r) {
        if (aug[r].size() != cols) raise(errc::singular_system, "ragged matrix");
        aug[r].push_back(b[r]);
    }
    auto pivots = detail::rref<K>(aug);

    // A pivot in the appended column means the system is inconsistent.
    if (!pivots.empty() && pivots.back() == cols)
        raise(errc::singular_system, "inconsistent linear system");
    if (pivots.size() < cols)
        raise(errc::singular_system, "solution is not unique");

    std::vector<typename K::Elem> x(cols, k.zero());
    for (std::size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = aug[r][cols];
    return x;
}

// Basis of the null space of A, one vector per free column.
template <class K>
std::vector<std::vector<typename K::Elem>> kernel_basis(const K& k, const Matrix<K>& a) {
    Matrix<K> m = a;
    const std::size_t cols = m.empty() ? 0 : m[0].size();
    auto pivots = detail::rref<K>(m);

    std::vector<bool> is_pivot(cols, false);
    for (auto c : pivots) is_pivot[c] = true;

    std::vector<std::vector<typename K::Elem>> basis;
    for (std::size_t free = 0; free < cols; ++free) {
        if (is_pivot[free]) continue;
        std::vector<typename K::Elem> v(cols, k.zero());
        v[free] = k.one();
        for (std::size_t r = 0; r < pivots.size(); ++r) {
            if (pivots[r] < free) v[pivots[r]] = -m[r][free];
        }
        basis.push_back(std::move(v));
    }
    return basis;
}

} // namespace hyperjac

#endif
