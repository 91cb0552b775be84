#pragma once

#include <string>
#include <vector>

#include "mmb/amfd.hpp"
#include "mmb/blobs.hpp"
#include "mmb/fusion.hpp"
#include "mmb/lrmc.hpp"
#include "mmb/pipeline_filter.hpp"

namespace mmb {

struct BlobGateParams {
    double area_min = 5.0;
    double area_max = 80.0;
    double ar_min = 1.0;
    double ar_max = 6.0;
    int connectivity = 8;
};

struct PipelineConfig {
    AmfdParams amfd;
    LrmcParams lrmc;
    BlobGateParams gate;
    FusionParams fusion;
    PfParams pf;

    // Ablation switches. The branch-only switches output one branch raw
    // (no fusion, no trajectory filter); no_pf keeps the fusion of both
    // branches and skips only the filter.
    bool amfd_only = false;
    bool lrmc_only = false;
    bool no_pf = false;

    std::string debug_dir;  // when set, response grids are dumped as PGMs

    void validate() const;
};

struct PipelineResult {
    std::vector<Detection> detections;  // sorted by (frame, position)
    std::vector<Tracklet> tracklets;    // empty when the filter is off
};

// Full detection pipeline: AMFD and LRMC masks, connected components and the
// size/aspect gate, per-frame fusion, then the trajectory filter.
PipelineResult run_detection(const Sequence& seq, const PipelineConfig& config);

}  // namespace mmb
