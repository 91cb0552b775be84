#include "mmb/fusion.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace mmb {

namespace {

int find_root(std::vector<int>& parent, int i) {
    while (parent[i] != i) {
        parent[i] = parent[parent[i]];
        i = parent[i];
    }
    return i;
}

// One union-find pass over the pairwise overlap graph.
std::vector<Detection> merge_pass(const std::vector<Detection>& dets, double merge_iou,
                                  bool* changed) {
    const int n = static_cast<int>(dets.size());
    std::vector<int> parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    *changed = false;
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            if (iou(dets[i].box, dets[j].box) >= merge_iou) {
                const int a = find_root(parent, i), b = find_root(parent, j);
                if (a != b) {
                    parent[std::max(a, b)] = std::min(a, b);
                    *changed = true;
                }
            }
        }
    }
    if (!*changed) return dets;

    std::vector<Detection> merged;
    std::vector<int> root_to_out(n, -1);
    for (int i = 0; i < n; ++i) {
        const int root = find_root(parent, i);
        if (root_to_out[root] < 0) {
            root_to_out[root] = static_cast<int>(merged.size());
            merged.push_back(dets[i]);
        } else {
            Detection& m = merged[root_to_out[root]];
            m.box = union_box(m.box, dets[i].box);
            m.score = std::max(m.score, dets[i].score);
            if (m.source != dets[i].source) m.source = DetectionSource::fused;
        }
    }
    return merged;
}

}  // namespace

std::vector<Detection> fuse(const std::vector<Detection>& amfd_dets,
                            const std::vector<Detection>& lrmc_dets,
                            const FusionParams& params) {
    if (!amfd_dets.empty() && !lrmc_dets.empty()) {
        const int frame = amfd_dets.front().frame;
        for (const auto& d : amfd_dets)
            if (d.frame != frame) throw std::invalid_argument("fuse: mixed frame indices");
        for (const auto& d : lrmc_dets)
            if (d.frame != frame) throw std::invalid_argument("fuse: mixed frame indices");
    }

    std::vector<Detection> pool = amfd_dets;
    for (const Detection& d : lrmc_dets) {
        if (params.roi_gating) {
            bool supported = false;
            for (const Detection& a : amfd_dets) {
                if (overlaps(d.box, a.box)) {
                    supported = true;
                    break;
                }
            }
            if (!supported) continue;
        }
        pool.push_back(d);
    }

    // Union boxes can newly overlap after a pass, so iterate to a fixpoint;
    // each pass strictly shrinks the set.
    bool changed = true;
    while (changed && pool.size() > 1) pool = merge_pass(pool, params.merge_overlap_iou, &changed);

    std::sort(pool.begin(), pool.end(), [](const Detection& a, const Detection& b) {
        if (a.box.y != b.box.y) return a.box.y < b.box.y;
        if (a.box.x != b.box.x) return a.box.x < b.box.x;
        return a.score > b.score;
    });
    return pool;
}

}  // namespace mmb
