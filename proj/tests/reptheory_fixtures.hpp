#pragma once

#include <string>
#include <vector>

#include "z4cent/cyc8.hpp"
#include "z4cent/fusion.hpp"

namespace fixtures {

using z4cent::Cyc8;

// Printed character table, with a and b written out.
inline std::vector<std::vector<Cyc8>> printed_character_table() {
    const Cyc8 i = Cyc8::i(), a = Cyc8::gaussian(-1, -2), b = Cyc8::gaussian(-1, 2);
    auto c = [](long v) { return Cyc8(v); };
    return {
        {c(1), c(1), c(1), c(1), c(1), c(1), c(1), c(1), c(1), c(1)},
        {c(1), c(-1), c(1), c(-1), c(1), c(1), c(-1), c(1), c(-1), c(1)},
        {c(2), c(0), c(2), c(0), c(2), c(2), c(0), c(-1), c(0), c(2)},
        {c(3), c(-1), c(-1), c(-1), c(3), c(-1), c(1), c(0), c(1), c(-1)},
        {c(3), c(1), c(-1), c(1), c(3), c(-1), c(-1), c(0), c(-1), c(-1)},
        {c(3), -i, a, i, c(-1), b, c(-1), c(0), c(1), c(1)},
        {c(3), i, b, -i, c(-1), a, c(-1), c(0), c(1), c(1)},
        {c(3), -i, b, i, c(-1), a, c(1), c(0), c(-1), c(1)},
        {c(3), i, a, -i, c(-1), b, c(1), c(0), c(-1), c(1)},
        {c(6), c(0), c(2), c(0), c(-2), c(2), c(0), c(0), c(0), c(-2)},
    };
}

inline z4cent::IntMatrix printed_fusion_matrix() {
    return {
        {0, 0, 0, 0, 0, 0, 1, 0, 0, 0}, {0, 0, 0, 0, 0, 0, 0, 1, 0, 0}, {0, 0, 0, 0, 0, 0, 1, 1, 0, 0},
        {0, 0, 0, 0, 0, 1, 0, 0, 0, 1}, {0, 0, 0, 0, 0, 0, 0, 0, 1, 1}, {1, 0, 1, 0, 0, 0, 0, 0, 0, 1},
        {0, 0, 0, 1, 0, 1, 0, 0, 1, 0}, {0, 0, 0, 0, 1, 1, 0, 0, 1, 0}, {0, 1, 1, 0, 0, 0, 0, 0, 0, 1},
        {0, 0, 0, 1, 1, 0, 1, 1, 0, 1},
    };
}

// chi7 * chi_i as sets of constituents, i = 1..10.
inline std::vector<std::vector<int>> printed_products() {
    return {{7}, {8}, {7, 8}, {6, 10}, {9, 10}, {1, 3, 10}, {4, 6, 9}, {5, 6, 9}, {2, 3, 10}, {4, 5, 7, 8, 10}};
}

}  // namespace fixtures
