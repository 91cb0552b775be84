#include "mmb/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <set>
#include <stdexcept>

#include "mmb/hungarian.hpp"

namespace mmb {

namespace {

double safe_ratio(double num, double den) { return den == 0.0 ? 0.0 : num / den; }

struct Counts {
    long tp = 0, fp = 0, fn = 0;
};

Counts match_all_frames(const std::map<int, std::vector<Box>>& dets_by_frame,
                        const std::map<int, std::vector<Box>>& gts_by_frame) {
    Counts c;
    std::set<int> frames;
    for (const auto& [f, v] : dets_by_frame) frames.insert(f);
    for (const auto& [f, v] : gts_by_frame) frames.insert(f);
    static const std::vector<Box> kNone;
    for (int f : frames) {
        auto di = dets_by_frame.find(f);
        auto gi = gts_by_frame.find(f);
        const auto m = match_detections(di == dets_by_frame.end() ? kNone : di->second,
                                        gi == gts_by_frame.end() ? kNone : gi->second);
        c.tp += m.tp;
        c.fp += m.fp;
        c.fn += m.fn;
    }
    return c;
}

}  // namespace

FrameMatch match_detections(const std::vector<Box>& dets, const std::vector<Box>& gts) {
    FrameMatch out;
    if (!dets.empty() && !gts.empty()) {
        std::vector<std::vector<double>> cost(dets.size(),
                                              std::vector<double>(gts.size(), kUnmatchable));
        for (size_t i = 0; i < dets.size(); ++i)
            for (size_t j = 0; j < gts.size(); ++j)
                if (overlaps(dets[i], gts[j])) cost[i][j] = center_distance(dets[i], gts[j]);
        out.pairs = min_cost_matching(cost).pairs;
    }
    out.tp = static_cast<long>(out.pairs.size());
    out.fp = static_cast<long>(dets.size()) - out.tp;
    out.fn = static_cast<long>(gts.size()) - out.tp;
    return out;
}

DetEvalResult pr_curve_and_ap(const std::vector<Detection>& dets,
                              const std::vector<GroundTruthRecord>& gts) {
    std::map<int, std::vector<Box>> gts_by_frame;
    for (const auto& g : gts) gts_by_frame[g.frame].push_back(g.box);

    DetEvalResult r;
    const long total_gt = static_cast<long>(gts.size());

    std::vector<double> thresholds;
    for (const auto& d : dets) thresholds.push_back(d.score);
    std::sort(thresholds.begin(), thresholds.end(), std::greater<>());
    thresholds.erase(std::unique(thresholds.begin(), thresholds.end()), thresholds.end());

    for (double th : thresholds) {
        std::map<int, std::vector<Box>> kept;
        for (const auto& d : dets)
            if (d.score >= th) kept[d.frame].push_back(d.box);
        const Counts c = match_all_frames(kept, gts_by_frame);
        const double precision = safe_ratio(static_cast<double>(c.tp),
                                            static_cast<double>(c.tp + c.fp));
        const double recall = safe_ratio(static_cast<double>(c.tp), static_cast<double>(total_gt));
        r.pr_points.emplace_back(recall, precision);
        if (th == thresholds.back()) {  // all-detections operating point
            r.tp = c.tp;
            r.fp = c.fp;
            r.fn = c.fn;
        }
    }
    if (dets.empty()) r.fn = total_gt;

    r.precision = safe_ratio(static_cast<double>(r.tp), static_cast<double>(r.tp + r.fp));
    r.recall = safe_ratio(static_cast<double>(r.tp), static_cast<double>(r.tp + r.fn));
    r.f1 = safe_ratio(2.0 * r.precision * r.recall, r.precision + r.recall);

    if (total_gt == 0 || r.pr_points.empty()) {
        r.ap = 0.0;
        return r;
    }

    // Monotone non-increasing precision envelope over recall, then the
    // trapezoidal area from recall 0 to the curve's end.
    auto points = r.pr_points;
    std::sort(points.begin(), points.end());
    for (int i = static_cast<int>(points.size()) - 2; i >= 0; --i)
        points[i].second = std::max(points[i].second, points[i + 1].second);

    double ap = points.front().first * points.front().second;  // rectangle from recall 0
    for (size_t i = 1; i < points.size(); ++i) {
        ap += (points[i].first - points[i - 1].first) *
              (points[i].second + points[i - 1].second) / 2.0;
    }
    r.ap = ap;
    return r;
}

double mean_ap(const std::vector<DetEvalResult>& per_sequence) {
    if (per_sequence.empty()) return 0.0;
    double sum = 0.0;
    for (const auto& r : per_sequence) sum += r.ap;
    return sum / static_cast<double>(per_sequence.size());
}

MotEvalResult clear_mot(const std::vector<TrackBox>& hypotheses,
                        const std::vector<TrackBox>& ground_truth) {
    std::map<int, std::vector<TrackBox>> hyp_by_frame, gt_by_frame;
    {
        std::set<std::pair<int, long>> seen;
        for (const auto& h : hypotheses) {
            if (!seen.emplace(h.frame, h.id).second)
                throw std::invalid_argument("clear_mot: duplicate (frame, id) in hypotheses");
            hyp_by_frame[h.frame].push_back(h);
        }
        seen.clear();
        for (const auto& g : ground_truth) {
            if (!seen.emplace(g.frame, g.id).second)
                throw std::invalid_argument("clear_mot: duplicate (frame, id) in ground truth");
            gt_by_frame[g.frame].push_back(g);
        }
    }

    std::set<int> frames;
    for (const auto& [f, v] : hyp_by_frame) frames.insert(f);
    for (const auto& [f, v] : gt_by_frame) frames.insert(f);

    MotEvalResult r;
    r.gt_total = static_cast<long>(ground_truth.size());

    std::map<long, long> last_match;                 // gt id -> hyp id
    std::map<long, std::vector<char>> gt_covered;    // gt id -> matched flags, frame order
    double distance_sum = 0.0;

    for (int f : frames) {
        static const std::vector<TrackBox> kNone;
        auto hi = hyp_by_frame.find(f);
        auto gi = gt_by_frame.find(f);
        const auto& hyps = hi == hyp_by_frame.end() ? kNone : hi->second;
        const auto& gts = gi == gt_by_frame.end() ? kNone : gi->second;

        std::vector<char> hyp_used(hyps.size(), 0), gt_used(gts.size(), 0);
        std::vector<std::pair<int, int>> matches;  // (gt index, hyp index)

        // Carry over still-valid correspondences.
        for (size_t g = 0; g < gts.size(); ++g) {
            auto prev = last_match.find(gts[g].id);
            if (prev == last_match.end()) continue;
            for (size_t h = 0; h < hyps.size(); ++h) {
                if (hyp_used[h] || hyps[h].id != prev->second) continue;
                if (overlaps(gts[g].box, hyps[h].box)) {
                    matches.emplace_back(static_cast<int>(g), static_cast<int>(h));
                    gt_used[g] = hyp_used[h] = 1;
                }
                break;
            }
        }

        // Hungarian over the rest, admissible only with positive overlap.
        std::vector<int> free_gts, free_hyps;
        for (size_t g = 0; g < gts.size(); ++g)
            if (!gt_used[g]) free_gts.push_back(static_cast<int>(g));
        for (size_t h = 0; h < hyps.size(); ++h)
            if (!hyp_used[h]) free_hyps.push_back(static_cast<int>(h));
        if (!free_gts.empty() && !free_hyps.empty()) {
            std::vector<std::vector<double>> cost(free_gts.size(),
                                                  std::vector<double>(free_hyps.size(),
                                                                      kUnmatchable));
            for (size_t a = 0; a < free_gts.size(); ++a)
                for (size_t b = 0; b < free_hyps.size(); ++b) {
                    const Box& gb = gts[free_gts[a]].box;
                    const Box& hb = hyps[free_hyps[b]].box;
                    if (overlaps(gb, hb)) cost[a][b] = center_distance(gb, hb);
                }
            for (const auto& [a, b] : min_cost_matching(cost).pairs) {
                matches.emplace_back(free_gts[a], free_hyps[b]);
                gt_used[free_gts[a]] = hyp_used[free_hyps[b]] = 1;
            }
        }

        for (const auto& [g, h] : matches) {
            const long gid = gts[g].id;
            const long hid = hyps[h].id;
            auto prev = last_match.find(gid);
            if (prev != last_match.end() && prev->second != hid) ++r.ids;
            last_match[gid] = hid;
            distance_sum += center_distance(gts[g].box, hyps[h].box);
            ++r.matches_total;
        }
        for (size_t g = 0; g < gts.size(); ++g) {
            if (!gt_used[g]) ++r.fn;
            gt_covered[gts[g].id].push_back(gt_used[g]);
        }
        for (size_t h = 0; h < hyps.size(); ++h)
            if (!hyp_used[h]) ++r.fp;
    }

    r.mota = r.gt_total == 0
                 ? 0.0
                 : 1.0 - static_cast<double>(r.fn + r.fp + r.ids) / static_cast<double>(r.gt_total);
    r.motp = r.matches_total == 0 ? 0.0 : distance_sum / static_cast<double>(r.matches_total);

    for (const auto& [id, flags] : gt_covered) {
        const double covered =
            static_cast<double>(std::count(flags.begin(), flags.end(), 1)) /
            static_cast<double>(flags.size());
        if (covered > 0.8)
            ++r.mt;
        else if (covered < 0.2)
            ++r.ml;
        else
            ++r.pt;

        // Fragmentations: tracked runs interrupted and later resumed.
        int pos = 0;
        const int n = static_cast<int>(flags.size());
        while (pos < n && !flags[pos]) ++pos;
        bool in_track = pos < n;
        int interruptions = 0;
        for (; pos < n; ++pos) {
            if (flags[pos] && !in_track) {
                ++interruptions;
                in_track = true;
            } else if (!flags[pos] && in_track) {
                in_track = false;
            }
        }
        r.fm += interruptions;
    }
    return r;
}

SotEvalResult sot_rates(const std::vector<Box>& predicted, const std::vector<Box>& truth,
                        double alpha, double beta) {
    if (predicted.size() != truth.size())
        throw std::invalid_argument("sot_rates: sequences must be aligned and equal length");
    SotEvalResult r;
    r.alpha = alpha;
    r.beta = beta;
    if (predicted.empty()) return r;
    long d_ok = 0, o_ok = 0;
    for (size_t i = 0; i < predicted.size(); ++i) {
        if (center_distance(predicted[i], truth[i]) < alpha) ++d_ok;
        if (iou(predicted[i], truth[i]) > beta) ++o_ok;
    }
    r.dpr = static_cast<double>(d_ok) / static_cast<double>(predicted.size());
    r.osr = static_cast<double>(o_ok) / static_cast<double>(predicted.size());
    return r;
}

}  // namespace mmb
