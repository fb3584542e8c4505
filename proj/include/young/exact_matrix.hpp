#pragma once

#include <vector>

#include "young/bigint.hpp"

namespace young {

// Dense square matrix of exact integers. Indices are 1-based like
// everything else in this library.
class ExactMatrix {
public:
    explicit ExactMatrix(int order);
    static ExactMatrix from_rows(const std::vector<std::vector<Int>>& rows);

    int order() const { return order_; }
    Int& at(int r, int c);
    const Int& at(int r, int c) const;

    bool operator==(const ExactMatrix&) const = default;

private:
    int order_ = 0;
    std::vector<Int> cells_;
};

// Exact determinant by fraction-free (Bareiss) elimination. The empty
// 0x0 matrix has determinant 1.
Int determinant(const ExactMatrix& m);

ExactMatrix identity_matrix(int order);
ExactMatrix transpose(const ExactMatrix& m);
ExactMatrix multiply(const ExactMatrix& a, const ExactMatrix& b);

}  // namespace young
