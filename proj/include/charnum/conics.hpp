#pragma once

// Characteristic numbers of smooth plane conics.

#include "charnum/exact.hpp"

#include <array>
#include <stdexcept>
#include <string>

namespace charnum::conics {

/// Counts of smooth conics under point and line conditions. Held as data so
/// tests can perturb single entries.
struct ConicTable {
    /// Conics through a points tangent to b lines, a + b = 5; index = b.
    std::array<Integer, 6> counts{1, 2, 4, 4, 2, 1};
    /// Conics tangent to a given line at a given point, through a further
    /// points and tangent to b lines, a + b = 3; index = b.
    std::array<Integer, 4> flag_counts{1, 2, 2, 1};

    Integer count(int a, int b) const {
        if (a < 0 || b < 0 || a + b != 5) {
            throw std::invalid_argument("conic_char needs a + b = 5 with a, b >= 0, got (" + std::to_string(a) + ", " +
                                        std::to_string(b) + ")");
        }
        return counts[b];
    }

    Integer flag_count(int a, int b) const {
        if (a < 0 || b < 0 || a + b != 3) {
            throw std::invalid_argument("flag_conic_char needs a + b = 3 with a, b >= 0, got (" + std::to_string(a) +
                                        ", " + std::to_string(b) + ")");
        }
        return flag_counts[b];
    }

    /// Like count() but 0 outside the valid range.
    Integer count_or_zero(int a, int b) const {
        if (a < 0 || b < 0 || a + b != 5) return 0;
        return counts[b];
    }
};

inline const ConicTable& standard_table() {
    static const ConicTable t;
    return t;
}

/// Conics through a general points and tangent to b general lines, a + b = 5.
inline Integer conic_char(int a, int b) { return standard_table().count(a, b); }

/// Conics tangent to a given line at a given point (a flag) that also pass
/// through a general points and are tangent to b general lines, a + b = 3.
inline Integer flag_conic_char(int a, int b) { return standard_table().flag_count(a, b); }

}  // namespace charnum::conics
