#pragma once

#include <utility>
#include <vector>

#include "mmb/blobs.hpp"
#include "mmb/box.hpp"
#include "mmb/frame.hpp"

namespace mmb {

// Small-object matching protocol: any strictly positive box intersection is
// admissible; ambiguities resolve by minimum summed center distance.
struct FrameMatch {
    long tp = 0;
    long fp = 0;
    long fn = 0;
    std::vector<std::pair<int, int>> pairs;  // (det index, gt index)
};

FrameMatch match_detections(const std::vector<Box>& dets, const std::vector<Box>& gts);

struct DetEvalResult {
    long tp = 0, fp = 0, fn = 0;
    double precision = 0.0, recall = 0.0, f1 = 0.0;
    std::vector<std::pair<double, double>> pr_points;  // (recall, precision)
    double ap = 0.0;
};

// Threshold sweep over the distinct score set (descending), with the final
// counts taken at the all-detections operating point. AP integrates the
// monotone precision envelope over recall by trapezoids.
DetEvalResult pr_curve_and_ap(const std::vector<Detection>& dets,
                              const std::vector<GroundTruthRecord>& gts);

double mean_ap(const std::vector<DetEvalResult>& per_sequence);

struct TrackBox {
    int frame = 0;
    long id = -1;
    Box box;
};

struct MotEvalResult {
    double mota = 0.0;  // in [.., 1]; percentage is a display concern
    double motp = 0.0;  // mean center distance of matches, pixels
    int mt = 0, pt = 0, ml = 0;
    long fp = 0, fn = 0, ids = 0, fm = 0;
    long gt_total = 0;        // ground-truth boxes over all frames
    long matches_total = 0;
};

// CLEAR correspondence: matches carry over while both sides are present and
// still overlapping; the remainder is matched per frame by gated Hungarian
// on center distance. MT needs > 80% coverage, ML < 20%.
MotEvalResult clear_mot(const std::vector<TrackBox>& hypotheses,
                        const std::vector<TrackBox>& ground_truth);

struct SotEvalResult {
    double dpr = 0.0;   // fraction of frames with center error < alpha
    double osr = 0.0;   // fraction of frames with IoU > beta
    double alpha = 5.0;
    double beta = 0.5;
};

SotEvalResult sot_rates(const std::vector<Box>& predicted, const std::vector<Box>& truth,
                        double alpha = 5.0, double beta = 0.5);

}  // namespace mmb
