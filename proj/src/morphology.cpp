#include "mmb/morphology.hpp"

#include <algorithm>
#include <stdexcept>
#include <vector>

#include "mmb/kernels.hpp"

namespace mmb {

namespace {

void check_kernel(int k) {
    if (k < 1 || k % 2 == 0)
        throw std::invalid_argument("morphology kernel must be odd and >= 1");
}

// Vertical pass companions to the row kernels: combine 2r+1 rows
// elementwise. Plain loops; the compiler vectorizes the byte min/max.
void col_max(const BinaryMask& in, BinaryMask& out, int r) {
    const int w = in.width(), h = in.height();
    for (int y = 0; y < h; ++y) {
        uint8_t* dst = &out.at(0, y);
        const int lo = std::max(0, y - r), hi = std::min(h - 1, y + r);
        std::fill(dst, dst + w, 0);
        for (int yy = lo; yy <= hi; ++yy) {
            const uint8_t* src = &in.at(0, yy);
            for (int x = 0; x < w; ++x) dst[x] = std::max(dst[x], src[x]);
        }
    }
}

void col_min(const BinaryMask& in, BinaryMask& out, int r) {
    const int w = in.width(), h = in.height();
    for (int y = 0; y < h; ++y) {
        uint8_t* dst = &out.at(0, y);
        if (y - r < 0 || y + r >= h) {
            std::fill(dst, dst + w, 0);
            continue;
        }
        std::fill(dst, dst + w, 1);
        for (int yy = y - r; yy <= y + r; ++yy) {
            const uint8_t* src = &in.at(0, yy);
            for (int x = 0; x < w; ++x) dst[x] = std::min(dst[x], src[x]);
        }
    }
}

}  // namespace

BinaryMask dilate(const BinaryMask& mask, int k) {
    check_kernel(k);
    if (k == 1 || mask.empty()) return mask;
    const int r = k / 2;
    const auto& ops = kernels::active_ops();

    BinaryMask rows(mask.width(), mask.height());
    for (int y = 0; y < mask.height(); ++y)
        ops.row_max(&mask.at(0, y), &rows.at(0, y), mask.width(), r);
    BinaryMask out(mask.width(), mask.height());
    col_max(rows, out, r);
    return out;
}

BinaryMask erode(const BinaryMask& mask, int k) {
    check_kernel(k);
    if (k == 1 || mask.empty()) return mask;
    const int r = k / 2;
    const auto& ops = kernels::active_ops();

    BinaryMask rows(mask.width(), mask.height());
    for (int y = 0; y < mask.height(); ++y)
        ops.row_min(&mask.at(0, y), &rows.at(0, y), mask.width(), r);
    BinaryMask out(mask.width(), mask.height());
    col_min(rows, out, r);
    return out;
}

}  // namespace mmb
