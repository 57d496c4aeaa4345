#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "hlzeta/common.hpp"

namespace hlzeta {

struct SuiteEntry {
    std::string id;
    std::function<IdentityReport()> run;
};

// every registered identity, sorted by id
const std::vector<SuiteEntry>& suite_registry();

// "all", exact ids, shell globs ("kubert.*"), or a dotted prefix ("franel2.table")
std::vector<const SuiteEntry*> select_identities(const std::vector<std::string>& selectors);

struct SuiteConfig {
    std::vector<std::string> selectors;
    std::vector<std::pair<std::string, double>> tolerance_overrides;  // glob -> tolerance, later wins
    std::int64_t sieve_bound = 0;                                     // 0: library default
    int jobs = 1;
    std::string output_path;
    std::string format = "csv";
};

// flat key=value lines; '#' starts a comment
//   select = kubert.*,franel2.table
//   tol.crandall.* = 1e-4
//   jobs = 2 / sieve_bound = 1000000 / out = path / format = csv
SuiteConfig parse_config_text(const std::string& text, const std::string& origin = "config");
SuiteConfig load_config(const std::string& path);

void add_tolerance_override(SuiteConfig& cfg, const std::string& spec);  // "ID=VALUE"

struct SuiteResult {
    std::vector<IdentityReport> reports;  // canonical id order
    std::vector<std::string> engine_errors;
    bool all_pass() const;
};

// runs checks on cfg.jobs threads; on_report sees reports in canonical order as they become ready
SuiteResult run_suite(const std::vector<const SuiteEntry*>& entries, const SuiteConfig& cfg,
                      const std::function<void(const IdentityReport&)>& on_report = {});

// 0 all pass, 1 any fail, 2 engine error
int suite_exit_code(const SuiteResult& r);

bool glob_match(const std::string& pattern, const std::string& text);

}  // namespace hlzeta
