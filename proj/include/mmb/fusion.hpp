#pragma once

#include <vector>

#include "mmb/blobs.hpp"

namespace mmb {

struct FusionParams {
    bool roi_gating = false;          // drop LRMC boxes with no AMFD support
    double merge_overlap_iou = 0.3;   // IoU at or above which boxes merge
};

// Per-frame combination of the two candidate sets. Overlapping boxes
// (IoU >= merge_overlap_iou) collapse into one detection with the union box
// and the max score; merging repeats until no output pair crosses the
// threshold. With gating on, LRMC detections intersecting no AMFD box are
// dropped before the union.
std::vector<Detection> fuse(const std::vector<Detection>& amfd_dets,
                            const std::vector<Detection>& lrmc_dets,
                            const FusionParams& params = {});

}  // namespace mmb
