#include "young/report.hpp"

#include <algorithm>

namespace young {

bool VerificationReport::pass() const { return failure_count() == 0; }

bool VerificationReport::inconclusive() const { return inconclusive_count() > 0; }

std::size_t VerificationReport::failure_count() const {
    return static_cast<std::size_t>(std::count_if(
        checks.begin(), checks.end(), [](const CheckRecord& c) { return !c.pass; }));
}

std::size_t VerificationReport::inconclusive_count() const {
    return static_cast<std::size_t>(std::count_if(
        checks.begin(), checks.end(), [](const CheckRecord& c) { return c.inconclusive; }));
}

void VerificationReport::add(Json fields, bool check_pass, bool check_inconclusive) {
    checks.push_back(CheckRecord{std::move(fields), check_pass, check_inconclusive});
}

void VerificationReport::absorb(const VerificationReport& other) {
    checks.insert(checks.end(), other.checks.begin(), other.checks.end());
}

Json VerificationReport::to_json() const {
    Json out;
    out["partition"] = partition;
    Json rendered = Json::array();
    for (const auto& check : checks) {
        Json one = check.fields;
        one["pass"] = check.pass;
        if (check.inconclusive) one["inconclusive"] = true;
        rendered.push_back(std::move(one));
    }
    out["checks"] = std::move(rendered);
    out["pass"] = pass();
    if (inconclusive()) out["inconclusive"] = true;
    return out;
}

}  // namespace young
