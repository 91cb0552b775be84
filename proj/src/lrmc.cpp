#include "mmb/lrmc.hpp"

#include <cmath>
#include <cstring>
#include <stdexcept>

#include "mmb/amfd.hpp"
#include "mmb/kernels.hpp"
#include "mmb/morphology.hpp"

namespace mmb {

void LrmcParams::validate() const {
    if (seconds_per_group <= 0.0) throw std::invalid_argument("lrmc: L must be positive");
    if (rank_r < 1) throw std::invalid_argument("lrmc: rank must be >= 1");
    if (k <= 0.0) throw std::invalid_argument("lrmc: k must be positive");
    if (morph_kernel < 1 || morph_kernel % 2 == 0)
        throw std::invalid_argument("lrmc: morph_kernel must be odd and >= 1");
}

int subgroup_count(int frame_count, double seconds_per_group, double frame_rate_hz) {
    if (frame_count < 1) throw std::invalid_argument("subgroup_count: frame_count < 1");
    if (seconds_per_group <= 0.0 || frame_rate_hz <= 0.0)
        throw std::invalid_argument("subgroup_count: non-positive inputs");
    const double group = seconds_per_group * frame_rate_hz;
    return static_cast<int>(std::ceil(static_cast<double>(frame_count) / group));
}

std::vector<ObservationMatrix> build_observation_matrices(const Sequence& seq,
                                                          double seconds_per_group) {
    seq.validate();
    const int m = seq.count();
    if (m < 1) throw std::invalid_argument("build_observation_matrices: empty sequence");
    const double group = seconds_per_group * seq.frame_rate_hz;
    if (group <= 0.0) throw std::invalid_argument("build_observation_matrices: bad group size");

    const int n = subgroup_count(m, seconds_per_group, seq.frame_rate_hz);
    std::vector<std::vector<int>> members(n);
    for (int j = 0; j < m; ++j) {
        int g = static_cast<int>(std::floor(static_cast<double>(j) / group));
        g = std::min(g, n - 1);
        members[g].push_back(j);
    }

    const int w = seq.width(), h = seq.height();
    const Eigen::Index pixels = static_cast<Eigen::Index>(w) * h;
    std::vector<ObservationMatrix> out;
    out.reserve(n);
    for (const auto& idx : members) {
        if (idx.empty()) continue;  // cannot happen with floor partitioning
        ObservationMatrix v;
        v.width = w;
        v.height = h;
        v.frame_indices = idx;
        v.columns.resize(pixels, static_cast<Eigen::Index>(idx.size()));
        for (size_t c = 0; c < idx.size(); ++c) {
            const double* src = seq.frames[idx[c]].pixels.data();
            std::memcpy(v.columns.col(static_cast<Eigen::Index>(c)).data(), src,
                        sizeof(double) * static_cast<size_t>(pixels));
        }
        out.push_back(std::move(v));
    }
    return out;
}

std::pair<Eigen::MatrixXd, Eigen::MatrixXd> recover_background(const Eigen::MatrixXd& v,
                                                               int rank_r) {
    if (v.size() == 0) throw std::invalid_argument("recover_background: empty matrix");
    if (rank_r < 1 || rank_r > v.cols())
        throw std::invalid_argument("recover_background: rank out of range");

    Eigen::BDCSVD<Eigen::MatrixXd> svd(v, Eigen::ComputeThinU | Eigen::ComputeThinV);
    const auto& sv = svd.singularValues();
    const int r = std::min<int>(rank_r, static_cast<int>(sv.size()));

    Eigen::MatrixXd b = svd.matrixU().leftCols(r) * sv.head(r).asDiagonal() *
                        svd.matrixV().leftCols(r).transpose();
    Eigen::MatrixXd f = v - b;
    return {std::move(b), std::move(f)};
}

std::vector<BinaryMask> lrmc_pass(const Sequence& seq, const LrmcParams& params,
                                  std::vector<PixelGrid>* responses) {
    params.validate();
    seq.validate();
    const int m = seq.count();
    if (m < 2) throw std::invalid_argument("lrmc_pass: need at least 2 frames");

    const int w = seq.width(), h = seq.height();
    std::vector<BinaryMask> masks(m, BinaryMask(w, h));
    if (responses) responses->assign(m, PixelGrid(w, h));

    const auto groups = build_observation_matrices(seq, params.seconds_per_group);
    const auto& ops = kernels::active_ops();
    for (const ObservationMatrix& v : groups) {
        const int r = std::min<int>(params.rank_r, static_cast<int>(v.columns.cols()));
        auto [b, f] = recover_background(v.columns, r);
        for (size_t c = 0; c < v.frame_indices.size(); ++c) {
            const int t = v.frame_indices[c];
            PixelGrid response(w, h);
            ops.abs_val(f.col(static_cast<Eigen::Index>(c)).data(), response.data(),
                        response.size());
            auto [mask, threshold] = adaptive_threshold(response, params.k);
            (void)threshold;
            masks[t] = close_then_open(mask, params.morph_kernel);
            if (responses) (*responses)[t] = std::move(response);
        }
    }
    return masks;
}

}  // namespace mmb
