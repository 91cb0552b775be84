#include "mmb/pipeline.hpp"

#include <algorithm>
#include <filesystem>
#include <stdexcept>

#include "mmb/image_io.hpp"

namespace mmb {

void PipelineConfig::validate() const {
    amfd.validate();
    lrmc.validate();
    pf.validate();
    if (amfd_only && lrmc_only)
        throw std::invalid_argument("pipeline: --amfd-only and --lrmc-only are exclusive");
    if (gate.area_min > gate.area_max || gate.ar_min > gate.ar_max)
        throw std::invalid_argument("pipeline: inverted gate bounds");
    if (gate.connectivity != 4 && gate.connectivity != 8)
        throw std::invalid_argument("pipeline: connectivity must be 4 or 8");
}

namespace {

std::vector<std::vector<Detection>> masks_to_detections(
    const std::vector<BinaryMask>& masks, const std::vector<PixelGrid>& responses,
    const BlobGateParams& gate, DetectionSource source) {
    std::vector<std::vector<Detection>> per_frame(masks.size());
    for (size_t t = 0; t < masks.size(); ++t) {
        auto blobs = gate_blobs(connected_components(masks[t], gate.connectivity),
                                gate.area_min, gate.area_max, gate.ar_min, gate.ar_max);
        per_frame[t] =
            blobs_to_detections(blobs, static_cast<int>(t), responses[t], source);
    }
    return per_frame;
}

void dump_responses(const std::string& dir, const char* prefix,
                    const std::vector<PixelGrid>& responses) {
    namespace fs = std::filesystem;
    fs::create_directories(dir);
    char name[64];
    for (size_t t = 0; t < responses.size(); ++t) {
        std::snprintf(name, sizeof(name), "%s_%06zu.pgm", prefix, t);
        write_pgm((fs::path(dir) / name).string(), responses[t]);
    }
}

}  // namespace

PipelineResult run_detection(const Sequence& seq, const PipelineConfig& config) {
    config.validate();
    seq.validate();
    const int m = seq.count();
    if (m < 3) throw std::invalid_argument("pipeline: need at least 3 frames");

    std::vector<std::vector<Detection>> amfd_dets, lrmc_dets;
    if (!config.lrmc_only) {
        std::vector<PixelGrid> responses;
        const auto masks = amfd_pass(seq, config.amfd, &responses);
        if (!config.debug_dir.empty()) dump_responses(config.debug_dir, "amfd", responses);
        amfd_dets = masks_to_detections(masks, responses, config.gate, DetectionSource::amfd);
    }
    if (!config.amfd_only) {
        std::vector<PixelGrid> responses;
        const auto masks = lrmc_pass(seq, config.lrmc, &responses);
        if (!config.debug_dir.empty()) dump_responses(config.debug_dir, "lrmc", responses);
        lrmc_dets = masks_to_detections(masks, responses, config.gate, DetectionSource::lrmc);
    }

    std::vector<Detection> combined;
    for (int t = 0; t < m; ++t) {
        std::vector<Detection> frame_dets;
        if (config.amfd_only) {
            frame_dets = amfd_dets[t];
        } else if (config.lrmc_only) {
            frame_dets = lrmc_dets[t];
        } else {
            frame_dets = fuse(amfd_dets[t], lrmc_dets[t], config.fusion);
        }
        combined.insert(combined.end(), frame_dets.begin(), frame_dets.end());
    }

    PipelineResult result;
    if (config.no_pf || config.amfd_only || config.lrmc_only) {
        result.detections = std::move(combined);
    } else {
        PfResult pf = run_pipeline_filter(combined, m, config.pf);
        result.detections = std::move(pf.detections);
        result.tracklets = std::move(pf.tracklets);
    }
    std::sort(result.detections.begin(), result.detections.end(),
              [](const Detection& a, const Detection& b) {
                  if (a.frame != b.frame) return a.frame < b.frame;
                  if (a.box.y != b.box.y) return a.box.y < b.box.y;
                  if (a.box.x != b.box.x) return a.box.x < b.box.x;
                  return a.track_id < b.track_id;
              });
    return result;
}

}  // namespace mmb
