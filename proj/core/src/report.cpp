#include "hcnlab/report.hpp"

#include <sstream>

namespace hcnlab {

std::string VerificationReport::to_tsv() const {
    std::ostringstream os;
    os << "# hcnlab-report v1\n";
    os << "# check\t" << check << "\n";
    os << "# passed\t" << (passed ? "true" : "false") << "\n";
    for (const auto& [k, v] : params) {
        os << "# param\t" << k << "\t" << v << "\n";
    }
    if (!columns.empty()) {
        os << "# columns";
        for (const auto& c : columns) os << "\t" << c;
        os << "\n";
    }
    for (const auto& row : rows) {
        for (std::size_t i = 0; i < row.size(); ++i) {
            if (i) os << "\t";
            os << row[i];
        }
        os << "\n";
    }
    return os.str();
}

std::string VerificationReport::to_summary() const {
    std::ostringstream os;
    os << "check " << check << ": " << (passed ? "PASS" : "FAIL");
    os << " (" << rows.size() << (rows.size() == 1 ? " row" : " rows") << ")\n";
    for (const auto& [k, v] : params) {
        os << "  " << k << " = " << v << "\n";
    }
    if (!rows.empty()) {
        os << "  ";
        for (std::size_t i = 0; i < columns.size(); ++i) {
            if (i) os << " | ";
            os << columns[i];
        }
        os << "\n";
        for (const auto& row : rows) {
            os << "  ";
            for (std::size_t i = 0; i < row.size(); ++i) {
                if (i) os << " | ";
                os << row[i];
            }
            os << "\n";
        }
    }
    return os.str();
}

}  // namespace hcnlab
