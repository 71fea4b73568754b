#pragma once

#include <array>
#include <stdexcept>
#include <string>
#include <vector>

#include "g2theta/monic_cubic.hpp"

namespace g2theta {

// One row of the reference data set: a monogenic totally real cubic ring, the
// matrix count |Q_p|, and the narrow class group of its fraction algebra.
struct TableRow {
    std::string polynomial;
    bool is_field = true;    // false = Z × real quadratic order
    bool maximal = true;     // externally verified maximality
    long qp_count = 0;       // expected |Q_p|
    std::string narrow_class_group;  // abelian group descriptor, e.g. "C4 x C2"
};

inline const std::vector<TableRow>& reference_table() {
    static const std::vector<TableRow> rows = {
        {"t^3-t^2-2t+1", true, true, 24, "1"},
        {"t^3-3t-1", true, true, 24, "1"},
        {"t^3-t^2-3t+1", true, true, 24, "1"},
        {"t^3-t^2-9t+10", true, true, 48, "C4"},
        {"t^3-t^2-14t+23", true, true, 48, "C4"},
        {"t^3-t^2-11t+12", true, true, 48, "C4"},
        {"t^3-t^2-12t-1", true, true, 48, "C4"},
        {"t^3-5t-1", true, true, 24, "1"},
        {"t^3-t^2-9t+8", true, true, 0, "C6"},
        {"t^3-21t-35", true, true, 24, "C3"},
        {"(t-1)(t^2-2)", false, true, 12, "1"},
        {"(t-2)(t^2-3)", false, true, 0, "C2"},
        {"(t-3)(t^2-10)", false, true, 24, "C2"},
        {"t^3-t^2-54t+169", true, true, 96, "C2 x C2"},
        {"t^3-t^2-34t-57", true, true, 96, "C4 x C2"},
    };
    return rows;
}

// size of the 2-torsion subgroup of a finite abelian group given as a product
// of cyclic factors ("1", "C4", "C2 x C2", ...); each even-order factor
// contributes a factor of 2
inline long two_torsion_order(const std::string& descriptor) {
    long result = 1;
    size_t i = 0;
    auto skip_ws = [&] {
        while (i < descriptor.size() &&
               (descriptor[i] == ' ' || descriptor[i] == '\t'))
            ++i;
    };
    bool first = true;
    while (true) {
        skip_ws();
        if (i >= descriptor.size()) {
            if (first) throw std::invalid_argument("empty group descriptor");
            break;
        }
        if (!first) {
            if (descriptor[i] != 'x' && descriptor[i] != 'X' &&
                descriptor[i] != '*')
                throw std::invalid_argument("bad group descriptor: " + descriptor);
            ++i;
            skip_ws();
        }
        first = false;
        if (descriptor[i] == '1') {
            ++i;
            continue;  // trivial factor
        }
        if (descriptor[i] != 'C' && descriptor[i] != 'c')
            throw std::invalid_argument("bad group descriptor: " + descriptor);
        ++i;
        size_t start = i;
        while (i < descriptor.size() && std::isdigit(static_cast<unsigned char>(descriptor[i])))
            ++i;
        if (start == i) throw std::invalid_argument("bad group descriptor: " + descriptor);
        long n = std::stol(descriptor.substr(start, i - start));
        if (n <= 0) throw std::invalid_argument("bad group descriptor: " + descriptor);
        if (n % 2 == 0) result *= 2;
        if (i >= descriptor.size()) break;
    }
    return result;
}

}  // namespace g2theta
