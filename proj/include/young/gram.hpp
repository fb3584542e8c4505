#pragma once

#include <string>
#include <vector>

#include "young/bigint.hpp"
#include "young/partition.hpp"
#include "young/report.hpp"

namespace young {

// Coordinates of the basis vector y_j over the formal basis x_j..x_n,
// n being the Durfee index of the shape. The coefficient of x_i is
// coefficients[i - j] = (-1)^(i-j) * C(lambda_i - j, i - j); the leading
// coefficient is always 1.
struct BasisExpansion {
    int j = 0;
    int n = 0;
    std::vector<Int> coefficients;

    const Int& coefficient_for(int i) const;
};

// Determinant of the trailing minor [D(i,j)]_{k <= i,j <= n} of the
// Durfee square; 1 <= k <= n required.
Int gram_determinant(const Partition& p, int k);

// Closed form C(lambda_i - j, i - j), for j <= i <= n.
Int basis_coefficient(const Partition& p, int i, int j);

// The same coefficient as a path-matrix determinant: sinks are rows
// {j..n} \ {i}, sources are columns {j+1..n}. Empty minor (i = j = n)
// gives 1.
Int basis_coefficient_minor(const Partition& p, int i, int j);

BasisExpansion basis_expansion(const Partition& p, int j);

// "y_1 = x_1 - 3*x_2 + x_3"
std::string format_basis(const BasisExpansion& e);

// The value <y_j, x_i> of the bilinear form with matrix D on the Durfee
// square: sum over k = j..n of (-1)^(k-j) * C(lambda_k - j, k - j) * D(k,i).
// Equals delta_ij whenever i >= j; for i < j the computed value is
// returned as-is (nothing is claimed about it).
Int pairing(const Partition& p, int j, int i);

// The conjugate-side analogue: sum over k = j..n of
// (-1)^(k-j) * D(i,k) * C(lambda'_k - j, k - j); also delta_ij for i >= j.
Int conjugate_pairing(const Partition& p, int j, int i);

// For all 1 <= j <= i <= n checks: pairing = delta_ij, the conjugate
// pairing = delta_ij, and closed-form coefficients against their minor
// determinants. For self-conjugate shapes additionally checks full
// orthonormality <y_a, y_b> = delta_ab, expanded bilinearly over D.
VerificationReport verify_identities(const Partition& p);

}  // namespace young
