#include "young/gram.hpp"

#include <sstream>
#include <stdexcept>
#include <utility>

#include "young/closed_forms.hpp"
#include "young/exact_matrix.hpp"
#include "young/path_array.hpp"

namespace young {

namespace {

int require_durfee_index(const Partition& p, int value, const char* name) {
    const int n = p.durfee();
    if (value < 1 || value > n) {
        std::ostringstream msg;
        msg << name << " = " << value << " is outside the Durfee range 1.." << n;
        throw std::out_of_range(msg.str());
    }
    return n;
}

Int coefficient_minor_from(const PathCountArray& d, int i, int j) {
    const Partition& p = d.shape();
    const int n = p.durfee();
    std::vector<int> sink_rows;
    for (int r = j; r <= n; ++r) {
        if (r != i) sink_rows.push_back(r);
    }
    if (sink_rows.empty()) return 1;
    std::vector<int> source_cols;
    for (int c = j + 1; c <= n; ++c) source_cols.push_back(c);
    const int order = static_cast<int>(sink_rows.size());
    ExactMatrix m(order);
    for (int r = 1; r <= order; ++r) {
        for (int s = 1; s <= order; ++s) {
            m.at(r, s) = d.at(sink_rows[static_cast<std::size_t>(r) - 1],
                              source_cols[static_cast<std::size_t>(s) - 1]);
        }
    }
    return determinant(m);
}

Int pairing_from(const PathCountArray& d, int j, int i) {
    const Partition& p = d.shape();
    const int n = p.durfee();
    Int total = 0;
    for (int k = j; k <= n; ++k) {
        Int term = binomial(p.part(k) - j, k - j) * d.at(k, i);
        if ((k - j) % 2 == 0) {
            total += term;
        } else {
            total -= term;
        }
    }
    return total;
}

Int conjugate_pairing_from(const PathCountArray& d, const Partition& conj, int j, int i) {
    const int n = d.shape().durfee();
    Int total = 0;
    for (int k = j; k <= n; ++k) {
        Int term = d.at(i, k) * binomial(conj.part(k) - j, k - j);
        if ((k - j) % 2 == 0) {
            total += term;
        } else {
            total -= term;
        }
    }
    return total;
}

// Column j holds the coordinates of y_j over x_1..x_n; lower triangular
// with unit diagonal.
ExactMatrix basis_matrix(const Partition& p) {
    const int n = p.durfee();
    ExactMatrix y(n);
    for (int j = 1; j <= n; ++j) {
        BasisExpansion e = basis_expansion(p, j);
        for (int i = j; i <= n; ++i) y.at(i, j) = e.coefficient_for(i);
    }
    return y;
}

ExactMatrix durfee_matrix(const PathCountArray& d) {
    const int n = d.shape().durfee();
    ExactMatrix m(n);
    for (int i = 1; i <= n; ++i) {
        for (int j = 1; j <= n; ++j) m.at(i, j) = d.at(i, j);
    }
    return m;
}

}  // namespace

const Int& BasisExpansion::coefficient_for(int i) const {
    if (i < j || i > n) throw std::out_of_range("basis coefficient index out of range");
    return coefficients[static_cast<std::size_t>(i - j)];
}

Int gram_determinant(const Partition& p, int k) {
    if (p.empty()) throw std::out_of_range("gram determinant needs a nonempty partition");
    const int n = require_durfee_index(p, k, "k");
    PathCountArray d = path_count_array(p);
    ExactMatrix m(n - k + 1);
    for (int i = k; i <= n; ++i) {
        for (int j = k; j <= n; ++j) m.at(i - k + 1, j - k + 1) = d.at(i, j);
    }
    return determinant(m);
}

Int basis_coefficient(const Partition& p, int i, int j) {
    require_durfee_index(p, i, "i");
    require_durfee_index(p, j, "j");
    if (j > i) throw std::out_of_range("basis coefficient needs j <= i");
    return binomial(p.part(i) - j, i - j);
}

Int basis_coefficient_minor(const Partition& p, int i, int j) {
    require_durfee_index(p, i, "i");
    require_durfee_index(p, j, "j");
    if (j > i) throw std::out_of_range("basis coefficient needs j <= i");
    return coefficient_minor_from(path_count_array(p), i, j);
}

BasisExpansion basis_expansion(const Partition& p, int j) {
    const int n = require_durfee_index(p, j, "j");
    BasisExpansion e;
    e.j = j;
    e.n = n;
    for (int i = j; i <= n; ++i) {
        Int c = binomial(p.part(i) - j, i - j);
        e.coefficients.push_back((i - j) % 2 == 0 ? c : -c);
    }
    return e;
}

std::string format_basis(const BasisExpansion& e) {
    std::ostringstream out;
    out << "y_" << e.j << " = x_" << e.j;
    for (int i = e.j + 1; i <= e.n; ++i) {
        const Int& c = e.coefficient_for(i);
        Int magnitude = c < 0 ? Int(-c) : c;
        out << (c < 0 ? " - " : " + ");
        if (magnitude != 1) out << magnitude.str() << '*';
        out << "x_" << i;
    }
    return out.str();
}

Int pairing(const Partition& p, int j, int i) {
    require_durfee_index(p, i, "i");
    require_durfee_index(p, j, "j");
    return pairing_from(path_count_array(p), j, i);
}

Int conjugate_pairing(const Partition& p, int j, int i) {
    require_durfee_index(p, i, "i");
    require_durfee_index(p, j, "j");
    return conjugate_pairing_from(path_count_array(p), p.conjugate(), j, i);
}

VerificationReport verify_identities(const Partition& p) {
    VerificationReport report;
    report.partition = p.parts();
    if (p.empty()) return report;

    const int n = p.durfee();
    PathCountArray d = path_count_array(p);
    Partition conj = p.conjugate();

    for (int j = 1; j <= n; ++j) {
        for (int i = j; i <= n; ++i) {
            const Int expected = i == j ? 1 : 0;

            Int value = pairing_from(d, j, i);
            Json fields;
            fields["identity"] = "pairing";
            fields["j"] = j;
            fields["i"] = i;
            fields["value"] = value.str();
            fields["expected"] = expected.str();
            report.add(std::move(fields), value == expected);

            Int conj_value = conjugate_pairing_from(d, conj, j, i);
            Json conj_fields;
            conj_fields["identity"] = "conjugate-pairing";
            conj_fields["j"] = j;
            conj_fields["i"] = i;
            conj_fields["value"] = conj_value.str();
            conj_fields["expected"] = expected.str();
            report.add(std::move(conj_fields), conj_value == expected);

            Int closed = binomial(p.part(i) - j, i - j);
            Int minor = coefficient_minor_from(d, i, j);
            Json coeff_fields;
            coeff_fields["identity"] = "coefficient-minor";
            coeff_fields["i"] = i;
            coeff_fields["j"] = j;
            coeff_fields["closed_form"] = closed.str();
            coeff_fields["minor"] = minor.str();
            report.add(std::move(coeff_fields), closed == minor);
        }
    }

    if (p.self_conjugate()) {
        ExactMatrix y = basis_matrix(p);
        ExactMatrix gram = multiply(multiply(transpose(y), durfee_matrix(d)), y);
        for (int a = 1; a <= n; ++a) {
            for (int b = 1; b <= n; ++b) {
                const Int expected = a == b ? 1 : 0;
                Json fields;
                fields["identity"] = "orthonormality";
                fields["a"] = a;
                fields["b"] = b;
                fields["value"] = gram.at(a, b).str();
                fields["expected"] = expected.str();
                report.add(std::move(fields), gram.at(a, b) == expected);
            }
        }
    } else {
        Json fields;
        fields["identity"] = "orthonormality";
        fields["skipped"] = "shape is not self-conjugate";
        report.add(std::move(fields), true);
    }

    return report;
}

}  // namespace young
