#pragma once

#include <string>
#include <utility>
#include <vector>

namespace hcnlab {

/// Structured pass/fail outcome of one check. `rows` hold the check-specific
/// witnesses (violations, or the produced table for table-style checks).
/// Serialization is deterministic: identical inputs give identical bytes.
struct VerificationReport {
    std::string check;
    bool passed = false;
    std::vector<std::pair<std::string, std::string>> params;
    std::vector<std::string> columns;
    std::vector<std::vector<std::string>> rows;

    void param(std::string key, std::string value) {
        params.emplace_back(std::move(key), std::move(value));
    }
    void param(std::string key, unsigned long long value) {
        params.emplace_back(std::move(key), std::to_string(value));
    }

    std::string to_tsv() const;
    std::string to_summary() const;
};

}  // namespace hcnlab
