#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "mmb/box.hpp"
#include "mmb/grid.hpp"

namespace mmb {

struct Blob {
    std::vector<std::pair<int, int>> pixels;  // (x, y), scan order
    Box bbox;                                 // tight, integer-valued
    int area = 0;

    double aspect_ratio() const {
        const double long_side = std::max(bbox.w, bbox.h);
        const double short_side = std::min(bbox.w, bbox.h);
        return long_side / short_side;
    }
};

enum class DetectionSource { amfd, lrmc, fused, interpolated };

const char* to_string(DetectionSource s);
DetectionSource detection_source_from_string(const std::string& s);

struct Detection {
    int frame = 0;
    Box box;
    double score = 0.0;
    DetectionSource source = DetectionSource::fused;
    long track_id = -1;
};

// Maximal connected sets of 1-pixels. Output is ordered by bbox top-left
// (y, then x). connectivity must be 4 or 8.
std::vector<Blob> connected_components(const BinaryMask& mask, int connectivity = 8);

// Size/aspect gate. Bounds are inclusive.
std::vector<Blob> gate_blobs(std::vector<Blob> blobs, double area_min = 5.0,
                             double area_max = 80.0, double ar_min = 1.0,
                             double ar_max = 6.0);

// One detection per blob; score = mean response over the blob's pixels
// divided by the grid maximum (0 when the grid maximum is 0).
std::vector<Detection> blobs_to_detections(const std::vector<Blob>& blobs, int frame_index,
                                           const PixelGrid& response, DetectionSource source);

}  // namespace mmb
