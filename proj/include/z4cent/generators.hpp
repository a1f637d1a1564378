#pragma once

// Generator matrices of the order-384 group acting on (x, y, z).

#include "cyc_matrix.hpp"

namespace z4cent {

/// diag(1, eta, -1)
inline CycMatrix generator_d() { return CycMatrix::diagonal({1, Cyc8::eta(), -1}); }

/// (eta/2) * [[1, 2, 1], [1, 0, -1], [1, -2, 1]]
inline CycMatrix generator_t() {
    const CycMatrix m{{1, 2, 1}, {1, 0, -1}, {1, -2, 1}};
    return (Cyc8::eta() * Cyc8(Rational(1, 2))) * m;
}

/// generator_t with the sign of its top-left entry flipped. Used as a negative control.
inline CycMatrix perturbed_generator_t() {
    CycMatrix t = generator_t();
    t(0, 0) = -t(0, 0);
    return t;
}

}  // namespace z4cent
