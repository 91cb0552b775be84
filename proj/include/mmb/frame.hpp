#pragma once

#include <string>
#include <vector>

#include "mmb/box.hpp"
#include "mmb/grid.hpp"

namespace mmb {

// One grayscale video frame. Intensities live in [0, 255] but are stored as
// doubles so downstream arithmetic keeps headroom.
struct Frame {
    int index = 0;
    PixelGrid pixels;

    int width() const { return pixels.width(); }
    int height() const { return pixels.height(); }
};

struct Sequence {
    std::vector<Frame> frames;
    double frame_rate_hz = 10.0;

    int count() const { return static_cast<int>(frames.size()); }
    int width() const { return frames.empty() ? 0 : frames.front().width(); }
    int height() const { return frames.empty() ? 0 : frames.front().height(); }

    void validate() const;
};

enum class ClassLabel { car, airplane, ship, train, synthetic };

const char* to_string(ClassLabel label);
ClassLabel class_label_from_string(const std::string& s);

struct GroundTruthRecord {
    int frame = 0;
    long track_id = -1;  // -1 when identities are absent (detection-only)
    Box box;
    ClassLabel label = ClassLabel::synthetic;
};

// Fixed luma weights for RGB input, BT.601.
inline double luma(double r, double g, double b) {
    return 0.299 * r + 0.587 * g + 0.114 * b;
}

}  // namespace mmb
