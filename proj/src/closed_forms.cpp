#include "young/closed_forms.hpp"

#include <stdexcept>
#include <utility>

#include "young/gram.hpp"
#include "young/partition.hpp"
#include "young/path_array.hpp"

namespace young {

Int binomial(long long a, long long b) {
    if (a < 0) throw std::domain_error("binomial: upper index must be >= 0");
    if (b < 0 || b > a) return 0;
    if (b > a - b) b = a - b;
    Int result = 1;
    for (long long t = 1; t <= b; ++t) {
        result *= a - b + t;
        result /= t;  // exact: result is a binomial coefficient after each step
    }
    return result;
}

Int catalan(long long m) {
    if (m < 0) throw std::domain_error("catalan: index must be >= 0");
    return binomial(2 * m, m) / (m + 1);
}

CheckRecord IdentityInstance::to_check_record() const {
    Json fields;
    fields["identity"] = identity;
    for (const auto& [name, value] : parameters) fields[name] = value;
    fields["lhs"] = lhs.str();
    fields["rhs"] = rhs.str();
    return CheckRecord{std::move(fields), pass, false};
}

IdentityInstance knuth_identity_check(long long r, long long s, long long n) {
    if (r < 0 || s < 0 || n < 0) {
        throw std::domain_error("knuth identity: parameters must be >= 0");
    }
    IdentityInstance instance;
    instance.identity = "knuth-summation";
    instance.parameters = {{"r", r}, {"s", s}, {"n", n}};
    Int lhs = 0;
    for (long long k = 0; k <= r; ++k) {
        Int term = binomial(r, k) * binomial(s + k, n);
        if ((r - k) % 2 == 0) {
            lhs += term;
        } else {
            lhs -= term;
        }
    }
    instance.lhs = lhs;
    instance.rhs = binomial(s, n - r);
    instance.pass = instance.lhs == instance.rhs;
    return instance;
}

IdentityInstance alternating_convolution_check(long long i, long long j) {
    if (i < 0 || j < 0) {
        throw std::domain_error("alternating convolution: parameters must be >= 0");
    }
    IdentityInstance instance;
    instance.identity = "alternating-convolution";
    instance.parameters = {{"i", i}, {"j", j}};
    Int lhs = 0;
    for (long long k = 0; k <= j; ++k) {
        Int term = binomial(i + k, i) * binomial(j, j - k);
        if ((j - k) % 2 == 0) {
            lhs += term;
        } else {
            lhs -= term;
        }
    }
    instance.lhs = lhs;
    instance.rhs = binomial(i, i - j);
    instance.pass = instance.lhs == instance.rhs;
    return instance;
}

VerificationReport staircase_check(int n) {
    if (n < 0) throw std::domain_error("staircase check: n must be >= 0");
    std::vector<int> parts;
    for (int part = 2 * n + 1; part >= 1; --part) parts.push_back(part);
    Partition p(std::move(parts));
    const int durfee = p.durfee();

    VerificationReport report;
    report.partition = p.parts();
    PathCountArray d = path_count_array(p);

    for (int i = 1; i <= durfee; ++i) {
        for (int j = 1; j <= durfee; ++j) {
            Int expected = catalan(2 * n + 2 - i - j);
            Json fields;
            fields["identity"] = "staircase-array";
            fields["i"] = i;
            fields["j"] = j;
            fields["value"] = d.at(i, j).str();
            fields["expected"] = expected.str();
            report.add(std::move(fields), d.at(i, j) == expected);
        }
    }

    // Reflected indices i' = (n+1) - i turn the expansion coefficients
    // into C(i'+j', j'-i'); checked against the generic closed form.
    for (int j = 1; j <= durfee; ++j) {
        BasisExpansion e = basis_expansion(p, j);
        for (int i = j; i <= durfee; ++i) {
            const int i_reflected = (n + 1) - i;
            const int j_reflected = (n + 1) - j;
            Int magnitude = binomial(i_reflected + j_reflected, j_reflected - i_reflected);
            Int expected = (i - j) % 2 == 0 ? magnitude : Int(-magnitude);
            Json fields;
            fields["identity"] = "staircase-basis";
            fields["j"] = j;
            fields["i"] = i;
            fields["coefficient"] = e.coefficient_for(i).str();
            fields["expected"] = expected.str();
            report.add(std::move(fields), e.coefficient_for(i) == expected);
        }
    }
    return report;
}

VerificationReport square_check(int n) {
    if (n < 1) throw std::domain_error("square check: n must be >= 1");
    Partition p(std::vector<int>(static_cast<std::size_t>(n), n));

    VerificationReport report;
    report.partition = p.parts();
    PathCountArray d = path_count_array(p);

    for (int i = 1; i <= n; ++i) {
        for (int j = 1; j <= n; ++j) {
            Int expected = binomial(2 * n - i - j, n - i);
            Json fields;
            fields["identity"] = "square-array";
            fields["i"] = i;
            fields["j"] = j;
            fields["value"] = d.at(i, j).str();
            fields["expected"] = expected.str();
            report.add(std::move(fields), d.at(i, j) == expected);
        }
    }

    for (int j = 1; j <= n; ++j) {
        for (int i = j; i <= n; ++i) {
            Int expected = binomial(n - j, i - j);
            Int closed = basis_coefficient(p, i, j);
            Json closed_fields;
            closed_fields["identity"] = "square-coefficient";
            closed_fields["i"] = i;
            closed_fields["j"] = j;
            closed_fields["value"] = closed.str();
            closed_fields["expected"] = expected.str();
            report.add(std::move(closed_fields), closed == expected);

            Int minor = basis_coefficient_minor(p, i, j);
            Json minor_fields;
            minor_fields["identity"] = "square-coefficient-minor";
            minor_fields["i"] = i;
            minor_fields["j"] = j;
            minor_fields["value"] = minor.str();
            minor_fields["expected"] = expected.str();
            report.add(std::move(minor_fields), minor == expected);
        }
    }

    for (int i = 0; i <= n; ++i) {
        for (int j = 0; j <= n; ++j) {
            report.checks.push_back(alternating_convolution_check(i, j).to_check_record());
        }
    }
    return report;
}

}  // namespace young
