#pragma once

#include "mmb/grid.hpp"

namespace mmb {

// Binary morphology with a square structuring element of odd side `k`,
// zero-padded at the borders. Separable row/column passes run through the
// kernel dispatch table.
BinaryMask dilate(const BinaryMask& mask, int k = 3);
BinaryMask erode(const BinaryMask& mask, int k = 3);

inline BinaryMask morph_close(const BinaryMask& mask, int k = 3) {
    return erode(dilate(mask, k), k);
}
inline BinaryMask morph_open(const BinaryMask& mask, int k = 3) {
    return dilate(erode(mask, k), k);
}

// Closing followed by opening, the mask cleanup used by both detection
// branches.
inline BinaryMask close_then_open(const BinaryMask& mask, int k = 3) {
    if (k <= 1) return mask;
    return morph_open(morph_close(mask, k), k);
}

}  // namespace mmb
