#include "mmb/pipeline_filter.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <stdexcept>
#include <tuple>

#include "mmb/hungarian.hpp"

namespace mmb {

void PfParams::validate() const {
    if (window_len < 1) throw std::invalid_argument("pf: window_len must be >= 1");
    if (confirm_h < 1 || confirm_h > window_len)
        throw std::invalid_argument("pf: need 1 <= confirm_h <= window_len");
    if (gate < 1.0) throw std::invalid_argument("pf: gate must be >= 1");
    if (stride < 1) throw std::invalid_argument("pf: stride must be >= 1");
}

std::vector<std::pair<int, int>> associate(const std::vector<Detection>& frame_a,
                                           const std::vector<Detection>& frame_b, double gate) {
    if (frame_a.empty() || frame_b.empty()) return {};
    std::vector<std::vector<double>> cost(frame_a.size(),
                                          std::vector<double>(frame_b.size(), kUnmatchable));
    for (size_t i = 0; i < frame_a.size(); ++i) {
        for (size_t j = 0; j < frame_b.size(); ++j) {
            const double dx = frame_a[i].box.cx() - frame_b[j].box.cx();
            const double dy = frame_a[i].box.cy() - frame_b[j].box.cy();
            if (std::fabs(dx) >= gate || std::fabs(dy) >= gate) continue;
            if (dx == 0.0 && dy == 0.0) continue;
            cost[i][j] = std::sqrt(dx * dx + dy * dy);
        }
    }
    return min_cost_matching(cost).pairs;
}

namespace {

using BoxKey = std::tuple<int, double, double, double, double>;

BoxKey key_of(const Detection& d) {
    return {d.frame, d.box.x, d.box.y, d.box.w, d.box.h};
}

struct Chain {
    std::vector<Detection> hits;  // detected positions, ascending frames
};

// Linear interpolation of center, size and score between bracketing hits.
Detection interpolate(const Detection& a, const Detection& b, int frame) {
    const double span = static_cast<double>(b.frame - a.frame);
    const double t = static_cast<double>(frame - a.frame) / span;
    Detection d;
    d.frame = frame;
    const double cx = a.box.cx() + t * (b.box.cx() - a.box.cx());
    const double cy = a.box.cy() + t * (b.box.cy() - a.box.cy());
    const double w = a.box.w + t * (b.box.w - a.box.w);
    const double h = a.box.h + t * (b.box.h - a.box.h);
    d.box = {cx - w / 2.0, cy - h / 2.0, w, h};
    d.score = a.score + t * (b.score - a.score);
    d.source = DetectionSource::interpolated;
    return d;
}

}  // namespace

PfResult run_pipeline_filter(const std::vector<Detection>& detections, int frame_count,
                             const PfParams& params) {
    params.validate();
    if (frame_count < 0) throw std::invalid_argument("pf: negative frame count");

    std::vector<std::vector<Detection>> by_frame(std::max(frame_count, 0));
    for (const Detection& d : detections) {
        if (d.frame < 0 || d.frame >= frame_count)
            throw std::invalid_argument("pf: detection frame out of range");
        by_frame[d.frame].push_back(d);
    }

    const int window = std::min(params.window_len, std::max(frame_count, 1));
    std::map<BoxKey, long> id_registry;   // detected (frame, box) -> track id
    long next_id = 0;

    // Output cells keyed (id, frame); detected positions beat interpolated
    // ones, first writer wins otherwise.
    std::map<std::pair<long, int>, Detection> cells;

    auto emit = [&](long id, const Detection& d) {
        auto [it, inserted] = cells.try_emplace({id, d.frame}, d);
        if (!inserted && it->second.source == DetectionSource::interpolated &&
            d.source != DetectionSource::interpolated) {
            it->second = d;
        }
        it->second.track_id = id;
    };

    for (int start = 0; start + window <= frame_count; start += params.stride) {
        // Chain candidates through the window. A candidate that finds no
        // admissible match keeps its last position and retries next frame;
        // unmatched detections seed new candidates.
        std::vector<Chain> chains;
        for (const Detection& d : by_frame[start]) chains.push_back({{d}});
        for (int f = start + 1; f < start + window; ++f) {
            const auto& dets = by_frame[f];
            std::vector<Detection> tails(chains.size());
            for (size_t i = 0; i < chains.size(); ++i) tails[i] = chains[i].hits.back();
            const auto pairs = associate(tails, dets, params.gate);
            std::vector<char> taken(dets.size(), 0);
            for (const auto& [ci, dj] : pairs) {
                chains[ci].hits.push_back(dets[dj]);
                taken[dj] = 1;
            }
            for (size_t j = 0; j < dets.size(); ++j)
                if (!taken[j]) chains.push_back({{dets[j]}});
        }

        for (const Chain& chain : chains) {
            const int h = static_cast<int>(chain.hits.size());
            if (h < params.confirm_h) continue;

            // Identity: inherit from the most recent hit already seen in an
            // earlier window, otherwise issue a fresh id.
            long id = -1;
            for (auto it = chain.hits.rbegin(); it != chain.hits.rend(); ++it) {
                auto found = id_registry.find(key_of(*it));
                if (found != id_registry.end()) {
                    id = found->second;
                    break;
                }
            }
            if (id < 0) id = next_id++;
            for (const Detection& d : chain.hits) id_registry.try_emplace(key_of(d), id);

            // A hit stays with the id it was first registered under, so a
            // detection shared by two chains never shows up twice.
            for (const Detection& d : chain.hits) emit(id_registry.at(key_of(d)), d);
            // Fill skipped frames inside the detected span.
            for (size_t i = 0; i + 1 < chain.hits.size(); ++i) {
                const Detection& a = chain.hits[i];
                const Detection& b = chain.hits[i + 1];
                for (int f = a.frame + 1; f < b.frame; ++f) emit(id, interpolate(a, b, f));
            }
        }
    }

    PfResult result;
    std::map<long, Tracklet> tracks;
    for (const auto& [key, det] : cells) {
        result.detections.push_back(det);
        Tracklet& t = tracks[key.first];
        t.track_id = key.first;
        t.boxes.push_back(det);
    }
    std::sort(result.detections.begin(), result.detections.end(),
              [](const Detection& a, const Detection& b) {
                  if (a.frame != b.frame) return a.frame < b.frame;
                  return a.track_id < b.track_id;
              });
    for (auto& [id, t] : tracks) result.tracklets.push_back(std::move(t));
    return result;
}

}  // namespace mmb
