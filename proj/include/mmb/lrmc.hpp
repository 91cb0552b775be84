#pragma once

#include <Eigen/Dense>
#include <utility>
#include <vector>

#include "mmb/frame.hpp"
#include "mmb/grid.hpp"

namespace mmb {

struct LrmcParams {
    double seconds_per_group = 4.0;  // L: seconds of video per observation matrix
    int rank_r = 1;                  // target background rank
    double k = 4.0;                  // foreground threshold multiplier
    int morph_kernel = 3;

    void validate() const;
};

// Vectorized frames of one temporal sub-group, one column per frame.
struct ObservationMatrix {
    Eigen::MatrixXd columns;        // (width*height) x group size
    std::vector<int> frame_indices; // contiguous, strictly increasing
    int width = 0;
    int height = 0;
};

// N = ceil(M / (L * f)).
int subgroup_count(int frame_count, double seconds_per_group, double frame_rate_hz);

// Contiguous partition of the sequence into subgroup_count() groups; the
// last group may be short. Every frame appears in exactly one group.
std::vector<ObservationMatrix> build_observation_matrices(const Sequence& seq,
                                                          double seconds_per_group);

// Best rank-r approximation in Frobenius norm via truncated SVD, plus the
// foreground perturbation F = V - B.
std::pair<Eigen::MatrixXd, Eigen::MatrixXd> recover_background(const Eigen::MatrixXd& v,
                                                               int rank_r);

// Whole-sequence pass: per sub-group background recovery, then per frame the
// |F| column is reshaped and thresholded with the same mu + k*sigma rule as
// the differencing branch, followed by morphology.
std::vector<BinaryMask> lrmc_pass(const Sequence& seq, const LrmcParams& params,
                                  std::vector<PixelGrid>* responses = nullptr);

}  // namespace mmb
