#include "young/exact_matrix.hpp"

#include <stdexcept>
#include <utility>

namespace young {

ExactMatrix::ExactMatrix(int order) : order_(order) {
    if (order < 0) throw std::invalid_argument("matrix order must be >= 0");
    cells_.resize(static_cast<std::size_t>(order) * static_cast<std::size_t>(order));
}

ExactMatrix ExactMatrix::from_rows(const std::vector<std::vector<Int>>& rows) {
    ExactMatrix m(static_cast<int>(rows.size()));
    for (int r = 1; r <= m.order(); ++r) {
        const auto& row = rows[static_cast<std::size_t>(r) - 1];
        if (static_cast<int>(row.size()) != m.order()) {
            throw std::invalid_argument("matrix rows must all have the same length");
        }
        for (int c = 1; c <= m.order(); ++c) {
            m.at(r, c) = row[static_cast<std::size_t>(c) - 1];
        }
    }
    return m;
}

Int& ExactMatrix::at(int r, int c) {
    if (r < 1 || r > order_ || c < 1 || c > order_) {
        throw std::out_of_range("matrix index out of range");
    }
    return cells_[static_cast<std::size_t>(r - 1) * static_cast<std::size_t>(order_) +
                  static_cast<std::size_t>(c - 1)];
}

const Int& ExactMatrix::at(int r, int c) const {
    return const_cast<ExactMatrix&>(*this).at(r, c);
}

Int determinant(const ExactMatrix& m) {
    const int n = m.order();
    if (n == 0) return 1;
    ExactMatrix a = m;
    Int previous_pivot = 1;
    int sign = 1;
    for (int k = 1; k < n; ++k) {
        if (a.at(k, k) == 0) {
            int pivot_row = 0;
            for (int r = k + 1; r <= n; ++r) {
                if (a.at(r, k) != 0) {
                    pivot_row = r;
                    break;
                }
            }
            if (pivot_row == 0) return 0;
            for (int c = k; c <= n; ++c) std::swap(a.at(k, c), a.at(pivot_row, c));
            sign = -sign;
        }
        for (int r = k + 1; r <= n; ++r) {
            for (int c = k + 1; c <= n; ++c) {
                // Fraction-free step: the division by the previous pivot
                // is exact over the integers.
                a.at(r, c) = (a.at(r, c) * a.at(k, k) - a.at(r, k) * a.at(k, c)) / previous_pivot;
            }
            a.at(r, k) = 0;
        }
        previous_pivot = a.at(k, k);
    }
    return sign * a.at(n, n);
}

ExactMatrix identity_matrix(int order) {
    ExactMatrix m(order);
    for (int k = 1; k <= order; ++k) m.at(k, k) = 1;
    return m;
}

ExactMatrix transpose(const ExactMatrix& m) {
    ExactMatrix t(m.order());
    for (int r = 1; r <= m.order(); ++r) {
        for (int c = 1; c <= m.order(); ++c) t.at(c, r) = m.at(r, c);
    }
    return t;
}

ExactMatrix multiply(const ExactMatrix& a, const ExactMatrix& b) {
    if (a.order() != b.order()) {
        throw std::invalid_argument("matrix orders do not match");
    }
    ExactMatrix out(a.order());
    for (int r = 1; r <= a.order(); ++r) {
        for (int c = 1; c <= a.order(); ++c) {
            Int sum = 0;
            for (int k = 1; k <= a.order(); ++k) sum += a.at(r, k) * b.at(k, c);
            out.at(r, c) = sum;
        }
    }
    return out;
}

}  // namespace young
