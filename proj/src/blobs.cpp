#include "mmb/blobs.hpp"

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

void unite(std::vector<int>& parent, int a, int b) {
    a = find_root(parent, a);
    b = find_root(parent, b);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
}

}  // namespace

std::vector<Blob> connected_components(const BinaryMask& mask, int connectivity) {
    if (connectivity != 4 && connectivity != 8)
        throw std::invalid_argument("connectivity must be 4 or 8");
    if (mask.empty()) return {};

    const int w = mask.width();
    const int h = mask.height();
    const uint8_t* m = mask.data();

    // Union-find over foreground pixels, linking each pixel to its already
    // visited neighbors (W, NW, N, NE).
    std::vector<int> parent(mask.size());
    std::iota(parent.begin(), parent.end(), 0);
    for (int y = 0; y < h; ++y) {
        for (int x = 0; x < w; ++x) {
            const int i = y * w + x;
            if (!m[i]) continue;
            if (x > 0 && m[i - 1]) unite(parent, i, i - 1);
            if (y > 0) {
                if (m[i - w]) unite(parent, i, i - w);
                if (connectivity == 8) {
                    if (x > 0 && m[i - w - 1]) unite(parent, i, i - w - 1);
                    if (x + 1 < w && m[i - w + 1]) unite(parent, i, i - w + 1);
                }
            }
        }
    }

    std::vector<int> root_to_blob(mask.size(), -1);
    std::vector<Blob> blobs;
    for (int y = 0; y < h; ++y) {
        for (int x = 0; x < w; ++x) {
            const int i = y * w + x;
            if (!m[i]) continue;
            const int root = find_root(parent, i);
            int bi = root_to_blob[root];
            if (bi < 0) {
                bi = static_cast<int>(blobs.size());
                root_to_blob[root] = bi;
                blobs.emplace_back();
            }
            blobs[bi].pixels.emplace_back(x, y);
        }
    }

    for (Blob& b : blobs) {
        int x0 = b.pixels[0].first, x1 = x0, y0 = b.pixels[0].second, y1 = y0;
        for (const auto& [x, y] : b.pixels) {
            x0 = std::min(x0, x);
            x1 = std::max(x1, x);
            y0 = std::min(y0, y);
            y1 = std::max(y1, y);
        }
        b.bbox = {static_cast<double>(x0), static_cast<double>(y0),
                  static_cast<double>(x1 - x0 + 1), static_cast<double>(y1 - y0 + 1)};
        b.area = static_cast<int>(b.pixels.size());
    }

    std::sort(blobs.begin(), blobs.end(), [](const Blob& a, const Blob& b) {
        if (a.bbox.y != b.bbox.y) return a.bbox.y < b.bbox.y;
        if (a.bbox.x != b.bbox.x) return a.bbox.x < b.bbox.x;
        return a.area < b.area;
    });
    return blobs;
}

std::vector<Blob> gate_blobs(std::vector<Blob> blobs, double area_min, double area_max,
                             double ar_min, double ar_max) {
    if (area_min > area_max || ar_min > ar_max)
        throw std::invalid_argument("gate_blobs: inverted bounds");
    std::erase_if(blobs, [&](const Blob& b) {
        const double ar = b.aspect_ratio();
        return b.area < area_min || b.area > area_max || ar < ar_min || ar > ar_max;
    });
    return blobs;
}

std::vector<Detection> blobs_to_detections(const std::vector<Blob>& blobs, int frame_index,
                                           const PixelGrid& response, DetectionSource source) {
    double grid_max = 0.0;
    for (double v : response) grid_max = std::max(grid_max, v);

    std::vector<Detection> dets;
    dets.reserve(blobs.size());
    for (const Blob& b : blobs) {
        Detection d;
        d.frame = frame_index;
        d.box = b.bbox;
        d.source = source;
        if (grid_max > 0.0) {
            double sum = 0.0;
            for (const auto& [x, y] : b.pixels) sum += response.at(x, y);
            d.score = sum / static_cast<double>(b.area) / grid_max;
        }
        dets.push_back(std::move(d));
    }
    return dets;
}

const char* to_string(DetectionSource s) {
    switch (s) {
        case DetectionSource::amfd: return "amfd";
        case DetectionSource::lrmc: return "lrmc";
        case DetectionSource::fused: return "fused";
        case DetectionSource::interpolated: return "interpolated";
    }
    return "fused";
}

DetectionSource detection_source_from_string(const std::string& s) {
    if (s == "amfd") return DetectionSource::amfd;
    if (s == "lrmc") return DetectionSource::lrmc;
    if (s == "interpolated") return DetectionSource::interpolated;
    return DetectionSource::fused;
}

}  // namespace mmb
