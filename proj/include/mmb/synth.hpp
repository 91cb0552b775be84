#pragma once

#include <cstdint>
#include <limits>
#include <vector>

#include "mmb/frame.hpp"

namespace mmb {

// Explicitly placed target; used to compose scenes with known structure
// (convoys, slow movers). Random draws fill in whatever the scene does not
// script.
struct TargetSpec {
    double x = 0.0, y = 0.0;   // top-left at appear_frame
    double vx = 0.0, vy = 0.0; // px/frame
    double w = 3.0, h = 3.0;
    double contrast = 40.0;    // intensity offset above the local background
    double jitter = 0.0;       // uniform per-frame position jitter amplitude
    int appear_frame = 0;
    int disappear_frame = std::numeric_limits<int>::max();
};

// Background structure; a drifting or pop-in patch breaks the otherwise
// static-field-times-gain background. With `opaque` set it hides targets
// whose center it covers.
struct OccluderSpec {
    double x = 0.0, y = 0.0, w = 0.0, h = 0.0;
    double intensity_delta = -30.0;
    double vx = 0.0, vy = 0.0;
    double feather = 0.0;  // linear soft edge, pixels
    int appear_frame = 0;
    int disappear_frame = std::numeric_limits<int>::max();
    bool opaque = false;
};

struct SynthConfig {
    int width = 128;
    int height = 128;
    int num_frames = 100;
    double frame_rate_hz = 10.0;

    int num_targets = 5;                  // random targets beyond the scripted ones
    double target_size_min = 3.0;         // sides drawn within [2, 8]
    double target_size_max = 3.0;
    double target_contrast = 40.0;
    double speed_min = 0.5;               // px/frame
    double speed_max = 2.0;
    double jitter = 0.0;

    double noise_sigma = 2.0;
    double illumination_amplitude = 0.0;  // relative gain amplitude
    double illumination_period = 50.0;    // frames

    double clutter_rate = 0.0;            // transient blobs per frame (1-frame life)
    double clutter_size = 3.0;
    double clutter_contrast_min = 14.0;
    double clutter_contrast_max = 18.0;

    std::vector<TargetSpec> scripted_targets;
    std::vector<OccluderSpec> occluders;

    uint64_t seed = 1;

    void validate() const;
};

struct SynthResult {
    Sequence sequence;
    std::vector<GroundTruthRecord> ground_truth;  // sorted by (frame, track_id)
};

// Deterministic under a fixed seed: frames are quantized to 8-bit values and
// bit-identical across runs. Ground truth covers every visible target every
// frame; a target that fully leaves the frame re-enters under a fresh id.
SynthResult generate(const SynthConfig& config);

}  // namespace mmb
