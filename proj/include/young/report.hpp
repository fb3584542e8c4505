#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "json.hpp"

#include "young/partition.hpp"

namespace young {

using Json = nlohmann::ordered_json;

// One verified statement. `fields` carries the check-specific data
// (selection indices, identity parameters, exact values as decimal
// strings). `inconclusive` marks budget exhaustion: not a failure, but
// never a silent pass either.
struct CheckRecord {
    Json fields;
    bool pass = true;
    bool inconclusive = false;
};

struct VerificationReport {
    std::vector<int> partition;
    std::vector<CheckRecord> checks;

    bool pass() const;
    bool inconclusive() const;
    std::size_t failure_count() const;
    std::size_t inconclusive_count() const;

    void add(Json fields, bool pass, bool inconclusive = false);
    void absorb(const VerificationReport& other);

    // {"partition":[...],"checks":[{...,"pass":true},...],"pass":true}
    Json to_json() const;
};

}  // namespace young
