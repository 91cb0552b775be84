#pragma once

#include <utility>
#include <vector>

#include "mmb/blobs.hpp"

namespace mmb {

struct PfParams {
    int window_len = 5;   // frames per pipeline window
    double gate = 7.0;    // per-axis association gate in pixels (strict <)
    int confirm_h = 3;    // minimum occurrences H for confirmation
    int stride = 1;       // window advance

    void validate() const;
};

struct Tracklet {
    long track_id = -1;
    std::vector<Detection> boxes;  // strictly increasing frames
};

struct PfResult {
    std::vector<Detection> detections;  // confirmed, with track ids, (frame, id) sorted
    std::vector<Tracklet> tracklets;
};

// One-to-one association between two detection lists, minimizing summed
// Euclidean center distance. A pair is admissible when both center deltas
// are inside the gate and the centers are not identical: |dx| < gate,
// |dy| < gate, (dx, dy) != (0, 0). Exactly coincident candidates carry no
// motion evidence and stay unmatched, which is what lets the filter drop
// differencing ghosts pinned to one spot.
std::vector<std::pair<int, int>> associate(const std::vector<Detection>& frame_a,
                                           const std::vector<Detection>& frame_b, double gate);

// Sliding-window trajectory filter: chains candidates across the window via
// gated assignment (frames without an admissible match are skipped), keeps
// chains observed at least confirm_h times, fills in-chain gaps by linear
// interpolation of centers and sizes, and stitches chains that share a
// detection across overlapping windows into one identity.
PfResult run_pipeline_filter(const std::vector<Detection>& detections, int frame_count,
                             const PfParams& params = {});

}  // namespace mmb
