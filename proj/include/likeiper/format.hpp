#pragma once

#include <ios>
#include <stdexcept>
#include <string>

#include "likeiper/precision.hpp"

namespace likeiper {

enum class DecimalRounding {
    truncate,  // keep the first `decimals` digits, discard the rest
    half_even  // round to nearest, ties to even
};

namespace detail {

/// Round a plain fixed-point decimal string ("-?digits.digits") at the given
/// number of decimal places, on the decimal digits themselves.
inline std::string round_decimal_string(std::string s, int decimals, DecimalRounding mode) {
    bool negative = false;
    if (!s.empty() && (s[0] == '-' || s[0] == '+')) {
        negative = s[0] == '-';
        s.erase(0, 1);
    }
    auto dot = s.find('.');
    if (dot == std::string::npos) {
        dot = s.size();
        s += '.';
    }
    while (s.size() < dot + 1 + static_cast<std::size_t>(decimals))
        s += '0';

    const std::size_t cut = dot + 1 + static_cast<std::size_t>(decimals);
    std::string kept = s.substr(0, cut);
    std::string rest = s.substr(cut);

    bool round_up = false;
    if (mode == DecimalRounding::half_even && !rest.empty()) {
        if (rest[0] > '5') {
            round_up = true;
        } else if (rest[0] == '5') {
            const bool tail_nonzero = rest.find_first_not_of('0', 1) != std::string::npos;
            if (tail_nonzero)
                round_up = true;
            else
                round_up = (kept.back() - '0') % 2 != 0;  // tie: go to even
        }
    }
    if (round_up) {
        for (auto it = kept.rbegin(); it != kept.rend(); ++it) {
            if (*it == '.')
                continue;
            if (*it != '9') {
                ++*it;
                round_up = false;
                break;
            }
            *it = '0';
        }
        if (round_up)
            kept.insert(kept.begin(), '1');
    }
    // An all-zero result must not keep a sign.
    if (negative && kept.find_first_not_of("0.") != std::string::npos)
        kept.insert(kept.begin(), '-');
    return kept;
}

}  // namespace detail

/// Fixed-point decimal rendering with an explicit digit-level rounding rule.
inline std::string format_fixed(const Real& value, int decimals,
                                DecimalRounding mode = DecimalRounding::half_even) {
    if (decimals < 0)
        throw std::invalid_argument("format_fixed: decimals must be >= 0");
    // Render with slack digits, then round on the decimal string so the rule
    // is applied to decimal digits rather than to the binary mantissa.
    std::string raw = value.str(decimals + 10, std::ios_base::fixed);
    return detail::round_decimal_string(std::move(raw), decimals, mode);
}

}  // namespace likeiper
