#include "mmb/amfd.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "mmb/kernels.hpp"
#include "mmb/morphology.hpp"

namespace mmb {

void AmfdParams::validate() const {
    if (k <= 0.0) throw std::invalid_argument("amfd: k must be positive");
    if (morph_kernel < 1 || morph_kernel % 2 == 0)
        throw std::invalid_argument("amfd: morph_kernel must be odd and >= 1");
}

DiffTriple frame_differences(const Frame& prev, const Frame& cur, const Frame& next) {
    if (!prev.pixels.same_shape(cur.pixels) || !cur.pixels.same_shape(next.pixels))
        throw std::invalid_argument("frame_differences: geometry mismatch");
    if (cur.index != prev.index + 1 || next.index != cur.index + 1)
        throw std::invalid_argument("frame_differences: frames must be consecutive");

    const auto& ops = kernels::active_ops();
    const size_t n = cur.pixels.size();
    DiffTriple d{PixelGrid(cur.width(), cur.height()), PixelGrid(cur.width(), cur.height()),
                 PixelGrid(cur.width(), cur.height())};
    ops.absdiff(cur.pixels.data(), prev.pixels.data(), d.d_prev_cur.data(), n);
    ops.absdiff(next.pixels.data(), prev.pixels.data(), d.d_prev_next.data(), n);
    ops.absdiff(next.pixels.data(), cur.pixels.data(), d.d_cur_next.data(), n);
    return d;
}

PixelGrid accumulate(const DiffTriple& diff) {
    if (!diff.d_prev_cur.same_shape(diff.d_prev_next) ||
        !diff.d_prev_cur.same_shape(diff.d_cur_next))
        throw std::invalid_argument("accumulate: geometry mismatch");
    PixelGrid out(diff.d_prev_cur.width(), diff.d_prev_cur.height());
    kernels::active_ops().mean3(diff.d_prev_cur.data(), diff.d_prev_next.data(),
                                diff.d_cur_next.data(), out.data(), out.size());
    return out;
}

std::pair<BinaryMask, double> adaptive_threshold(const PixelGrid& response, double k) {
    if (response.empty()) throw std::invalid_argument("adaptive_threshold: empty grid");
    if (k <= 0.0) throw std::invalid_argument("adaptive_threshold: k must be positive");

    const auto& ops = kernels::active_ops();
    const size_t n = response.size();
    double sum = 0.0, sumsq = 0.0;
    ops.sum_sumsq(response.data(), n, &sum, &sumsq);
    const double mu = sum / static_cast<double>(n);
    const double var = std::max(0.0, sumsq / static_cast<double>(n) - mu * mu);
    const double t = mu + k * std::sqrt(var);

    BinaryMask mask(response.width(), response.height());
    const double maxv = *std::max_element(response.begin(), response.end());
    if (maxv == 0.0) {
        // Uniformly zero response: no motion evidence, leave the mask empty.
        return {std::move(mask), t};
    }
    ops.threshold_ge(response.data(), t, mask.data(), n);
    return {std::move(mask), t};
}

std::vector<BinaryMask> amfd_pass(const Sequence& seq, const AmfdParams& params,
                                  std::vector<PixelGrid>* responses) {
    params.validate();
    seq.validate();
    const int m = seq.count();
    if (m < 3) throw std::invalid_argument("amfd_pass: need at least 3 frames");

    const int w = seq.width(), h = seq.height();
    std::vector<BinaryMask> masks(m, BinaryMask(w, h));
    if (responses) responses->assign(m, PixelGrid(w, h));

    for (int t = 1; t + 1 < m; ++t) {
        const DiffTriple d =
            frame_differences(seq.frames[t - 1], seq.frames[t], seq.frames[t + 1]);
        PixelGrid response = accumulate(d);
        auto [mask, threshold] = adaptive_threshold(response, params.k);
        (void)threshold;
        masks[t] = close_then_open(mask, params.morph_kernel);
        if (responses) (*responses)[t] = std::move(response);
    }
    return masks;
}

}  // namespace mmb
