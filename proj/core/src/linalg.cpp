#include "binform/linalg.hpp"

#include "binform/errors.hpp"

namespace binform {

namespace {

template <typename T>
void check_square(const std::vector<std::vector<T>>& m) {
    for (const auto& row : m)
        if (row.size() != m.size()) throw domain_error("determinant of non-square matrix");
}

// One-step Bareiss. Divisions by the previous pivot are exact over any
// integral domain, which keeps polynomial entries from swelling.
template <typename T, typename DivExact>
T bareiss_det(std::vector<std::vector<T>> m, const T& one, DivExact div) {
    const std::size_t n = m.size();
    if (n == 0) return one;
    T prev = one;
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m[k][k] == T()) {
            std::size_t swap_row = k + 1;
            while (swap_row < n && m[swap_row][k] == T()) ++swap_row;
            if (swap_row == n) return T();  // singular
            std::swap(m[k], m[swap_row]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                T num = m[i][j] * m[k][k] - m[i][k] * m[k][j];
                m[i][j] = div(num, prev);
            }
            m[i][k] = T();
        }
        prev = m[k][k];
    }
    T d = m[n - 1][n - 1];
    return sign < 0 ? T() - d : d;
}

} // namespace

MPoly det_fraction_free(const PolyMatrix& m) {
    check_square(m);
    return bareiss_det<MPoly>(m, MPoly(Rat(1)),
                              [](const MPoly& a, const MPoly& b) { return a.divide_exact(b); });
}

Rat det_fraction_free(const RatMatrix& m) {
    check_square(m);
    return bareiss_det<Rat>(m, Rat(1), [](const Rat& a, const Rat& b) { return a / b; });
}

namespace {

// Row echelon over Q; returns rank. `m` is modified in place.
std::size_t echelon(RatMatrix& m, std::size_t cols) {
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < m.size(); ++c) {
        std::size_t pivot = r;
        while (pivot < m.size() && m[pivot][c].is_zero()) ++pivot;
        if (pivot == m.size()) continue;
        std::swap(m[r], m[pivot]);
        Rat inv = m[r][c].inverse();
        for (std::size_t j = c; j < m[r].size(); ++j) m[r][j] *= inv;
        for (std::size_t i = 0; i < m.size(); ++i) {
            if (i == r || m[i][c].is_zero()) continue;
            Rat factor = m[i][c];
            for (std::size_t j = c; j < m[i].size(); ++j) m[i][j] -= factor * m[r][j];
        }
        ++r;
    }
    return r;
}

} // namespace

int rank(const RatMatrix& m, std::size_t cols) {
    for (const auto& row : m)
        if (row.size() != cols) throw domain_error("ragged matrix");
    RatMatrix work = m;
    return static_cast<int>(echelon(work, cols));
}

int nullspace_dim(const RatMatrix& m, std::size_t cols) {
    return static_cast<int>(cols) - rank(m, cols);
}

std::optional<std::vector<Rat>> solve_linear(const RatMatrix& a, const std::vector<Rat>& b,
                                             std::size_t cols) {
    if (a.size() != b.size()) throw domain_error("solve: row count mismatch");
    RatMatrix aug = a;
    for (std::size_t i = 0; i < aug.size(); ++i) {
        if (aug[i].size() != cols) throw domain_error("ragged matrix");
        aug[i].push_back(b[i]);
    }
    echelon(aug, cols);
    std::vector<Rat> x(cols, Rat(0));
    for (const auto& row : aug) {
        std::size_t lead = 0;
        while (lead < cols && row[lead].is_zero()) ++lead;
        if (lead == cols) {
            if (!row[cols].is_zero()) return std::nullopt;  // 0 = nonzero
            continue;
        }
        x[lead] = row[cols];  // echelon() fully reduces, pivot is 1
    }
    return x;
}

} // namespace binform
