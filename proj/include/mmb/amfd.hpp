#pragma once

#include <utility>
#include <vector>

#include "mmb/frame.hpp"
#include "mmb/grid.hpp"

namespace mmb {

struct AmfdParams {
    double k = 4.0;        // threshold multiplier in T = mu + k * sigma
    int morph_kernel = 3;  // structuring element side, odd

    void validate() const;
};

// Absolute pairwise differences of a 3-frame neighborhood. d_prev_cur spans
// (t-1, t), d_prev_next spans (t-1, t+1), d_cur_next spans (t, t+1).
struct DiffTriple {
    PixelGrid d_prev_cur;
    PixelGrid d_prev_next;
    PixelGrid d_cur_next;
};

DiffTriple frame_differences(const Frame& prev, const Frame& cur, const Frame& next);

// Mean of the three difference grids.
PixelGrid accumulate(const DiffTriple& diff);

// T = mu + k * sigma over the grid (population sigma); mask = response >= T.
// A uniformly zero response yields an empty mask.
std::pair<BinaryMask, double> adaptive_threshold(const PixelGrid& response, double k);

// Whole-sequence pass: one mask per frame. Boundary frames (0 and M-1) get
// empty masks. When `responses` is given it receives the accumulative
// response grid per frame (zero grids at the boundaries) for scoring and
// debug dumps.
std::vector<BinaryMask> amfd_pass(const Sequence& seq, const AmfdParams& params,
                                  std::vector<PixelGrid>* responses = nullptr);

}  // namespace mmb
