#pragma once

#include <string>
#include <utility>
#include <vector>

#include "young/bigint.hpp"
#include "young/report.hpp"

namespace young {

// C(a, b) with the standard conventions: 0 when b < 0 or b > a. Negative
// upper index is rejected (nothing in this library needs it).
Int binomial(long long a, long long b);

// m-th Catalan number C(2m, m) / (m + 1).
Int catalan(long long m);

struct IdentityInstance {
    std::string identity;
    std::vector<std::pair<std::string, long long>> parameters;
    Int lhs;
    Int rhs;
    bool pass = false;

    CheckRecord to_check_record() const;
};

// sum_k (-1)^(r-k) C(r,k) C(s+k,n) == C(s, n-r), for r, s, n >= 0.
IdentityInstance knuth_identity_check(long long r, long long s, long long n);

// sum_k (-1)^(k-j) C(i+k,i) C(j,j-k) == C(i, i-j); the index-reversed form
// of the pairing identity on square shapes.
IdentityInstance alternating_convolution_check(long long i, long long j);

// Staircase shape (2n+1, 2n, ..., 2, 1): array entries on the Durfee
// square equal Catalan numbers C_(2n+2-i-j), and the basis coefficients
// match the reflected closed form C(i'+j', j'-i') with i' = (n+1) - i.
VerificationReport staircase_check(int n);

// Square shape (n, ..., n): array entries equal C(2n-i-j, n-i), basis
// coefficients equal C(n-j, i-j), and the alternating convolution
// identity holds over the whole rectangle 0 <= i, j <= n.
VerificationReport square_check(int n);

}  // namespace young
