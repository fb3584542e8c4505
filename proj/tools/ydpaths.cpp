// ydpaths: path-count arrays of Young diagrams, their unimodular
// determinants, and the integral orthonormal basis built from them.
//
// Subcommands:
//   array  PARTITION   print the path-count array
//   check  PARTITION   certify determinants and identities for one shape
//   basis  PARTITION   print the orthonormal basis expansions
//   verify             sweep every shape up to --max-cells
//
// Exit codes: 0 pass, 1 violation, 2 usage/config error.

#include <atomic>
#include <cstdint>
#include <iostream>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"

#include "young/closed_forms.hpp"
#include "young/gram.hpp"
#include "young/lgv.hpp"
#include "young/partition.hpp"
#include "young/path_array.hpp"
#include "young/report.hpp"

namespace {

using young::Json;
using young::Partition;
using young::Selection;
using young::VerificationReport;

constexpr int kExitPass = 0;
constexpr int kExitViolation = 1;
constexpr int kExitUsage = 2;

const std::vector<std::string> kAllProperties = {
    "array-oracle", "dets", "lgv-oracle", "identities",
    "closed-forms", "duality", "truncation"};

struct SweepConfig {
    int max_cells = 8;
    std::vector<std::string> properties = kAllProperties;
    std::string format = "text";
    std::uint64_t path_budget = young::kDefaultPathLimit;
    std::uint64_t system_budget = young::kDefaultNodeBudget;
    unsigned workers = 0;  // 0 = available parallelism
    bool strict = false;
    bool explore_noncontiguous = false;
    std::size_t samples = 1000;
    std::uint64_t seed = 0;
};

struct PropertyResult {
    std::vector<int> partition;
    std::string property;
    VerificationReport report;
};

// --- property suites -------------------------------------------------

VerificationReport run_array_oracle(const Partition& p, const SweepConfig& config) {
    VerificationReport report;
    report.partition = p.parts();
    auto d = young::path_count_array(p);
    for (int i = 1; i <= p.row_count(); ++i) {
        for (int j = 1; j <= p.part(i); ++j) {
            young::BoxCoord foot{p.col_height(j), j};
            young::BoxCoord end{i, p.part(i)};
            auto listed = young::enumerate_paths(p, foot, end, config.path_budget);
            Json fields;
            fields["check"] = "array-entry";
            fields["i"] = i;
            fields["j"] = j;
            fields["array"] = d.at(i, j).str();
            fields["enumerated"] = std::to_string(listed.paths.size());
            if (!listed.complete) {
                report.add(std::move(fields), true, true);
            } else {
                report.add(std::move(fields),
                           d.at(i, j) == young::Int(listed.paths.size()));
            }
        }
    }
    return report;
}

VerificationReport run_dets(const Partition& p) {
    VerificationReport report = young::check_determinant_one(p);
    for (int k = 1; k <= p.durfee(); ++k) {
        young::Int det = young::gram_determinant(p, k);
        Json fields;
        fields["check"] = "gram-determinant";
        fields["k"] = k;
        fields["det"] = det.str();
        report.add(std::move(fields), det == 1);
    }
    return report;
}

VerificationReport run_lgv_oracle(const Partition& p, const SweepConfig& config) {
    VerificationReport report;
    report.partition = p.parts();
    if (p.empty()) return report;
    for (int r = 1; r <= p.row_count(); ++r) {
        for (int c = 1; c <= p.part(r); ++c) {
            for (int m = 1; m <= std::min({3, r, c}); ++m) {
                Selection sel;
                for (int x = m - 1; x >= 0; --x) sel.rows.push_back(r - x);
                for (int x = m - 1; x >= 0; --x) sel.cols.push_back(c - x);
                report.checks.push_back(
                    young::verify_lgv(p, sel, config.system_budget).to_check_record());
            }
        }
    }
    for (const auto& sel : young::se_unit_selections(p)) {
        auto found = young::enumerate_disjoint_systems(p, sel.cols, sel.rows,
                                                       config.system_budget);
        Json fields;
        fields["check"] = "hook-uniqueness";
        fields["rows"] = sel.rows;
        fields["cols"] = sel.cols;
        fields["systems"] = found.systems.size();
        if (!found.complete) {
            report.add(std::move(fields), true, true);
            continue;
        }
        bool ok = found.systems.size() == 1;
        if (ok) {
            const auto& only = found.systems[0];
            for (std::size_t k = 0; k < only.sink_of_source.size(); ++k) {
                ok = ok && only.sink_of_source[k] == static_cast<int>(k) + 1;
            }
            for (const auto& path : only.paths) ok = ok && young::is_hook(path);
        }
        report.add(std::move(fields), ok);
    }
    return report;
}

VerificationReport run_duality(const Partition& p) {
    VerificationReport report;
    report.partition = p.parts();
    auto d = young::path_count_array(p);
    auto dt = young::path_count_array(p.conjugate());
    bool ok = true;
    int boxes = 0;
    for (int i = 1; i <= p.row_count(); ++i) {
        for (int j = 1; j <= p.part(i); ++j) {
            ok = ok && d.at(i, j) == dt.at(j, i);
            ++boxes;
        }
    }
    Json fields;
    fields["check"] = "transpose-duality";
    fields["boxes"] = boxes;
    report.add(std::move(fields), ok);
    return report;
}

VerificationReport run_truncation(const Partition& p) {
    VerificationReport report;
    report.partition = p.parts();
    auto d = young::path_count_array(p);
    if (p.row_count() >= 1) {
        auto dropped = p.truncate(1, 0);
        auto dd = young::path_count_array(dropped);
        bool ok = true;
        for (int i = 1; i <= dropped.row_count(); ++i) {
            for (int j = 1; j <= dropped.part(i); ++j) {
                ok = ok && dd.at(i, j) == d.at(i + 1, j);
            }
        }
        Json fields;
        fields["check"] = "row-truncation";
        report.add(std::move(fields), ok);
    }
    if (!p.empty()) {
        auto dropped = p.truncate(0, 1);
        auto dd = young::path_count_array(dropped);
        bool ok = true;
        for (int i = 1; i <= dropped.row_count(); ++i) {
            for (int j = 1; j <= dropped.part(i); ++j) {
                ok = ok && dd.at(i, j) == d.at(i, j + 1);
            }
        }
        Json fields;
        fields["check"] = "column-truncation";
        report.add(std::move(fields), ok);
    }
    return report;
}

VerificationReport run_noncontiguous_scan(const Partition& p, const SweepConfig& config) {
    VerificationReport report;
    report.partition = p.parts();
    for (const auto& record :
         young::exploratory_noncontiguous_scan(p, 4, config.samples, config.seed)) {
        Json fields;
        fields["check"] = "noncontiguous-selection";
        fields["rows"] = record.selection.rows;
        fields["cols"] = record.selection.cols;
        fields["det"] = record.det.str();
        fields["certified"] = false;
        // Outside the certified property: reported, never pass/fail.
        report.add(std::move(fields), true);
    }
    return report;
}

std::vector<PropertyResult> run_closed_forms() {
    std::vector<PropertyResult> out;
    for (int n = 0; n <= 3; ++n) {
        auto report = young::staircase_check(n);
        out.push_back({report.partition, "closed-forms", std::move(report)});
    }
    for (int n = 1; n <= 6; ++n) {
        auto report = young::square_check(n);
        out.push_back({report.partition, "closed-forms", std::move(report)});
    }
    VerificationReport identities;
    for (long long r = 0; r <= 8; ++r) {
        for (long long s = 0; s <= 8; ++s) {
            for (long long n = 0; n <= 8; ++n) {
                identities.checks.push_back(
                    young::knuth_identity_check(r, s, n).to_check_record());
            }
        }
    }
    for (long long i = 0; i <= 8; ++i) {
        for (long long j = 0; j <= 8; ++j) {
            identities.checks.push_back(
                young::alternating_convolution_check(i, j).to_check_record());
        }
    }
    out.push_back({{}, "closed-forms", std::move(identities)});
    return out;
}

std::vector<PropertyResult> run_partition_suites(const Partition& p,
                                                 const SweepConfig& config) {
    std::vector<PropertyResult> out;
    for (const auto& property : config.properties) {
        if (property == "closed-forms") continue;  // global, not per shape
        VerificationReport report;
        if (property == "array-oracle") {
            report = run_array_oracle(p, config);
        } else if (property == "dets") {
            report = run_dets(p);
        } else if (property == "lgv-oracle") {
            report = run_lgv_oracle(p, config);
        } else if (property == "identities") {
            report = young::verify_identities(p);
        } else if (property == "duality") {
            report = run_duality(p);
        } else if (property == "truncation") {
            report = run_truncation(p);
        }
        report.partition = p.parts();
        out.push_back({p.parts(), property, std::move(report)});
    }
    if (config.explore_noncontiguous) {
        out.push_back({p.parts(), "noncontiguous-scan", run_noncontiguous_scan(p, config)});
    }
    return out;
}

// --- output ----------------------------------------------------------

std::string join_parts(const std::vector<int>& parts) {
    if (parts.empty()) return "(empty)";
    std::string text;
    for (std::size_t k = 0; k < parts.size(); ++k) {
        if (k > 0) text += ',';
        text += std::to_string(parts[k]);
    }
    return text;
}

void echo_violations(const PropertyResult& result) {
    for (const auto& check : result.report.checks) {
        if (!check.pass) {
            Json fields = check.fields;
            std::cerr << "violation " << join_parts(result.partition) << " "
                      << result.property << " " << fields.dump() << "\n";
        }
    }
}

int finish_sweep(const SweepConfig& config, const std::vector<PropertyResult>& results) {
    std::size_t checks = 0;
    std::size_t fail_count = 0;
    std::size_t inconclusive_count = 0;
    for (const auto& result : results) {
        checks += result.report.checks.size();
        fail_count += result.report.failure_count();
        inconclusive_count += result.report.inconclusive_count();
        echo_violations(result);
    }
    const bool pass = fail_count == 0;

    if (config.format == "json") {
        Json out;
        Json cfg;
        cfg["max_cells"] = config.max_cells;
        cfg["properties"] = config.properties;
        cfg["path_budget"] = config.path_budget;
        cfg["system_budget"] = config.system_budget;
        if (config.explore_noncontiguous) {
            cfg["samples"] = config.samples;
            cfg["seed"] = config.seed;
        }
        out["config"] = std::move(cfg);
        Json rendered = Json::array();
        for (const auto& result : results) {
            Json one = result.report.to_json();
            one.erase("partition");
            Json entry;
            entry["partition"] = result.partition;
            entry["property"] = result.property;
            for (auto& [key, value] : one.items()) entry[key] = std::move(value);
            rendered.push_back(std::move(entry));
        }
        out["results"] = std::move(rendered);
        Json summary;
        summary["checks"] = checks;
        summary["failures"] = fail_count;
        summary["inconclusive"] = inconclusive_count;
        summary["pass"] = pass;
        out["summary"] = std::move(summary);
        std::cout << out.dump(2) << "\n";
    } else if (config.format == "csv") {
        std::cout << "partition,property,checks,failures,inconclusive,pass\n";
        for (const auto& result : results) {
            std::cout << "\"" << join_parts(result.partition) << "\"," << result.property
                      << "," << result.report.checks.size() << ","
                      << result.report.failure_count() << ","
                      << result.report.inconclusive_count() << ","
                      << (result.report.pass() ? "true" : "false") << "\n";
        }
    } else {
        for (const auto& result : results) {
            std::string status = !result.report.pass()          ? "FAIL"
                                 : result.report.inconclusive() ? "inc "
                                                                : "ok  ";
            std::cout << status << " " << join_parts(result.partition) << " "
                      << result.property << " (" << result.report.checks.size()
                      << " checks)\n";
        }
        std::cout << "summary: results=" << results.size() << " checks=" << checks
                  << " failures=" << fail_count << " inconclusive=" << inconclusive_count
                  << " status=" << (pass ? "pass" : "fail") << "\n";
    }

    if (!pass) return kExitViolation;
    if (inconclusive_count > 0 && config.strict) return kExitViolation;
    return kExitPass;
}

int cmd_verify(const SweepConfig& config) {
    auto partitions = young::enumerate_partitions(config.max_cells);
    std::vector<std::vector<PropertyResult>> per_partition(partitions.size());

    unsigned workers = config.workers;
    if (workers == 0) workers = std::max(1u, std::thread::hardware_concurrency());
    workers = std::min<unsigned>(workers, static_cast<unsigned>(partitions.size()) + 1);

    std::atomic<std::size_t> cursor{0};
    auto drain = [&]() {
        for (;;) {
            std::size_t idx = cursor.fetch_add(1);
            if (idx >= partitions.size()) return;
            per_partition[idx] = run_partition_suites(partitions[idx], config);
        }
    };
    if (workers <= 1) {
        drain();
    } else {
        std::vector<std::thread> pool;
        for (unsigned w = 0; w < workers; ++w) pool.emplace_back(drain);
        for (auto& t : pool) t.join();
    }

    // Deterministic assembly: partition order, then the global section.
    std::vector<PropertyResult> results;
    for (auto& group : per_partition) {
        for (auto& result : group) results.push_back(std::move(result));
    }
    bool wants_closed_forms = false;
    for (const auto& property : config.properties) {
        wants_closed_forms = wants_closed_forms || property == "closed-forms";
    }
    if (wants_closed_forms) {
        for (auto& result : run_closed_forms()) results.push_back(std::move(result));
    }
    return finish_sweep(config, results);
}

int cmd_array(const Partition& p, const std::string& format) {
    auto d = young::path_count_array(p);
    if (format == "json") {
        Json out;
        out["shape"] = p.parts();
        Json rows = Json::array();
        for (const auto& row : d.rows()) {
            Json rendered = Json::array();
            for (const auto& entry : row) rendered.push_back(entry.str());
            rows.push_back(std::move(rendered));
        }
        out["rows"] = std::move(rows);
        std::cout << out.dump(2) << "\n";
    } else if (format == "csv") {
        std::cout << d.to_csv();
    } else {
        if (p.empty()) {
            std::cout << "(empty diagram)\n";
        } else {
            std::cout << d.to_text();
        }
    }
    return kExitPass;
}

int cmd_check(const Partition& p, const std::string& format) {
    auto dets = young::check_determinant_one(p);
    auto identities = young::verify_identities(p);
    const bool pass = dets.pass() && identities.pass();

    if (format == "json") {
        Json out;
        out["partition"] = p.parts();
        out["determinant_one"] = dets.to_json();
        out["identities"] = identities.to_json();
        out["pass"] = pass;
        std::cout << out.dump(2) << "\n";
    } else if (format == "csv") {
        std::cout << "partition,check,checks,failures,pass\n";
        std::cout << "\"" << join_parts(p.parts()) << "\",determinant-one,"
                  << dets.checks.size() << "," << dets.failure_count() << ","
                  << (dets.pass() ? "true" : "false") << "\n";
        std::cout << "\"" << join_parts(p.parts()) << "\",identities,"
                  << identities.checks.size() << "," << identities.failure_count() << ","
                  << (identities.pass() ? "true" : "false") << "\n";
    } else {
        std::cout << "partition " << join_parts(p.parts()) << "\n";
        std::cout << "determinant-one: " << (dets.pass() ? "pass" : "FAIL") << " ("
                  << dets.checks.size() << " checks)\n";
        std::cout << "identities: " << (identities.pass() ? "pass" : "FAIL") << " ("
                  << identities.checks.size() << " checks)\n";
    }
    echo_violations({p.parts(), "determinant-one", dets});
    echo_violations({p.parts(), "identities", identities});
    return pass ? kExitPass : kExitViolation;
}

int cmd_basis(const Partition& p, const std::string& format) {
    const int n = p.durfee();
    if (format == "json") {
        Json out;
        out["partition"] = p.parts();
        out["n"] = n;
        Json basis = Json::array();
        for (int j = 1; j <= n; ++j) {
            auto e = young::basis_expansion(p, j);
            Json entry;
            entry["j"] = j;
            Json coefficients = Json::array();
            for (const auto& c : e.coefficients) coefficients.push_back(c.str());
            entry["coefficients"] = std::move(coefficients);
            entry["text"] = young::format_basis(e);
            basis.push_back(std::move(entry));
        }
        out["basis"] = std::move(basis);
        std::cout << out.dump(2) << "\n";
    } else if (format == "csv") {
        for (int j = 1; j <= n; ++j) {
            auto e = young::basis_expansion(p, j);
            std::cout << j;
            for (const auto& c : e.coefficients) std::cout << "," << c.str();
            std::cout << "\n";
        }
    } else {
        for (int j = 1; j <= n; ++j) {
            std::cout << young::format_basis(young::basis_expansion(p, j)) << "\n";
        }
    }
    return kExitPass;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Path-count arrays of Young diagrams: unimodular determinant "
                 "certification and integral orthonormal bases"};
    app.require_subcommand(1);

    std::string array_partition, check_partition, basis_partition;
    std::string array_format = "text", check_format = "text", basis_format = "text";
    const auto format_check = CLI::IsMember({"text", "json", "csv"});

    auto* array_cmd = app.add_subcommand("array", "Print the path-count array of a shape");
    array_cmd->add_option("partition", array_partition, "Comma-separated parts, e.g. 5,4,3,3")
        ->required();
    array_cmd->add_option("--format", array_format, "Output format")->check(format_check);

    auto* check_cmd =
        app.add_subcommand("check", "Certify determinants and identities for one shape");
    check_cmd->add_option("partition", check_partition, "Comma-separated parts")->required();
    check_cmd->add_option("--format", check_format, "Output format")->check(format_check);

    auto* basis_cmd =
        app.add_subcommand("basis", "Print the integral orthonormal basis expansions");
    basis_cmd->add_option("partition", basis_partition, "Comma-separated parts")->required();
    basis_cmd->add_option("--format", basis_format, "Output format")->check(format_check);

    SweepConfig config;
    auto* verify_cmd =
        app.add_subcommand("verify", "Sweep every shape up to --max-cells and verify");
    verify_cmd->add_option("--max-cells", config.max_cells, "Largest cell count to sweep")
        ->check(CLI::NonNegativeNumber);
    verify_cmd
        ->add_option("--properties", config.properties,
                     "Comma-separated subset of: array-oracle,dets,lgv-oracle,identities,"
                     "closed-forms,duality,truncation")
        ->delimiter(',');
    verify_cmd->add_option("--format", config.format, "Output format")->check(format_check);
    verify_cmd->add_option("--path-budget", config.path_budget,
                           "Cap on enumerated paths per array entry");
    verify_cmd->add_option("--system-budget", config.system_budget,
                           "Cap on visited states per disjoint-system search");
    verify_cmd->add_option("--workers", config.workers,
                           "Worker threads (0 = available parallelism)");
    verify_cmd->add_flag("--strict", config.strict,
                         "Treat inconclusive (budget-capped) checks as violations");
    verify_cmd->add_flag("--explore-noncontiguous", config.explore_noncontiguous,
                         "Also report non-contiguous unit-corner selections (never "
                         "counted as failures)");
    verify_cmd->add_option("--samples", config.samples,
                           "Cap on exploratory records per shape");
    verify_cmd->add_option("--seed", config.seed,
                           "Seed for exploratory sampling beyond the cap");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitPass : kExitUsage;
    }

    try {
        if (*array_cmd) return cmd_array(Partition::parse(array_partition), array_format);
        if (*check_cmd) return cmd_check(Partition::parse(check_partition), check_format);
        if (*basis_cmd) {
            Partition p = Partition::parse(basis_partition);
            if (p.empty()) {
                std::cerr << "error: basis needs a nonempty partition\n";
                return kExitUsage;
            }
            return cmd_basis(p, basis_format);
        }
        if (*verify_cmd) {
            if (config.properties.empty()) {
                std::cerr << "error: --properties must name at least one property\n";
                return kExitUsage;
            }
            for (const auto& property : config.properties) {
                bool known = false;
                for (const auto& name : kAllProperties) known = known || name == property;
                if (!known) {
                    std::cerr << "error: unknown property '" << property << "'\n";
                    return kExitUsage;
                }
            }
            return cmd_verify(config);
        }
    } catch (const std::exception& err) {
        std::cerr << "error: " << err.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
