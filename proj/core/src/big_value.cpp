#include "hcnlab/big_value.hpp"

#include <cctype>
#include <climits>

#include "hcnlab/errors.hpp"

namespace hcnlab {

namespace {

bool all_digits(std::string_view s) {
    if (s.empty()) return false;
    for (char c : s) {
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    }
    return true;
}

}  // namespace

BigValue parse_magnitude(std::string_view text) {
    const auto caret = text.find('^');
    if (caret == std::string_view::npos) {
        if (!all_digits(text)) {
            throw usage_error("malformed magnitude expression: '" + std::string(text) + "'");
        }
        return BigValue(std::string(text), 10);
    }
    const std::string_view base_s = text.substr(0, caret);
    const std::string_view exp_s = text.substr(caret + 1);
    if (!all_digits(base_s) || !all_digits(exp_s)) {
        throw usage_error("malformed magnitude expression: '" + std::string(text) + "'");
    }
    if (exp_s.size() > 9) {
        throw usage_error("exponent too large in '" + std::string(text) + "'");
    }
    const unsigned long exp = std::stoul(std::string(exp_s));
    BigValue base(std::string(base_s), 10);
    BigValue out;
    mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), exp);
    return out;
}

std::string to_decimal(const BigValue& v) {
    return v.get_str(10);
}

}  // namespace hcnlab
