#pragma once

// Smooth plane cubics: the boundary divisors I (triple cover of a line by a
// genus-one curve) and T (line joined to a genus-one double cover of a line),
// then the characteristic numbers by downward recursion.

#include "charnum/configuration.hpp"
#include "charnum/hurwitz.hpp"

#include <array>
#include <stdexcept>
#include <string>
#include <vector>

namespace charnum::cubic {

inline constexpr int kConditions = 8;  // for divisor classes
inline constexpr int kCharConditions = 9;

// 4 alpha = beta + 2 T + 6 I
inline constexpr int kAlphaCoefficient = 4;
inline constexpr int kTCoefficient = 2;
inline constexpr int kICoefficient = 6;

inline config::DivisorSpec divisor_I() {
    config::DivisorSpec d;
    d.name = "I";
    d.total_conditions = kConditions;
    d.components = {{"l", config::ImageKind::Line, 3, 6, std::nullopt, hurwitz::connected_cover_count(3, 6)}};
    return d;
}

inline config::DivisorSpec divisor_T() {
    config::DivisorSpec d;
    d.name = "T";
    d.total_conditions = kConditions;
    d.components = {
        {"l", config::ImageKind::Line, 2, 4, std::nullopt, hurwitz::connected_cover_count(2, 4)},
        {"m", config::ImageKind::Line, 1, 0, std::nullopt, 1},
    };
    d.nodes = {{"t", {0, 1}, config::Contact::Transverse, 2, {}, 2}};
    return d;
}

namespace detail {
inline void check_split(int a, int b) {
    if (a < 0 || b < 0 || a + b != kConditions) {
        throw std::invalid_argument("cubic divisor split needs a + b = 8, got (" + std::to_string(a) + ", " +
                                    std::to_string(b) + ")");
    }
}
}  // namespace detail

inline config::Column column_I(int a, int b) {
    detail::check_split(a, b);
    return config::enumerate(divisor_I(), a);
}

inline config::Column column_T(int a, int b) {
    detail::check_split(a, b);
    return config::enumerate(divisor_T(), a);
}

inline Integer cubic_I_char(int a, int b) { return to_integer(column_I(a, b).total.constant()); }
inline Integer cubic_T_char(int a, int b) { return to_integer(column_T(a, b).total.constant()); }

struct RecursionStep {
    int a;
    Integer next;  // C_{a+1}
    Integer t;
    Integer i;
    Integer value;  // C_a
};

/// C_a for a = 0..9 (index = a), plus the recursion steps from a = 8 down to 0.
struct CubicCharNumbers {
    std::array<Integer, kCharConditions + 1> values;
    std::vector<RecursionStep> steps;
};

inline CubicCharNumbers cubic_char_numbers() {
    CubicCharNumbers out;
    out.values[kCharConditions] = 1;
    for (int a = kConditions; a >= 0; --a) {
        RecursionStep s{a, out.values[a + 1], cubic_T_char(a, kConditions - a), cubic_I_char(a, kConditions - a), 0};
        s.value = kAlphaCoefficient * s.next - kTCoefficient * s.t - kICoefficient * s.i;
        out.values[a] = s.value;
        out.steps.push_back(s);
    }
    return out;
}

}  // namespace charnum::cubic
