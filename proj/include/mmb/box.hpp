#pragma once

#include <algorithm>
#include <cmath>

namespace mmb {

// Axis-aligned box, top-left anchored. Coordinates are real-valued; mask
// rasterization truncates to integers.
struct Box {
    double x = 0.0;
    double y = 0.0;
    double w = 0.0;
    double h = 0.0;

    double cx() const { return x + w / 2.0; }
    double cy() const { return y + h / 2.0; }
    double area() const { return w * h; }

    friend bool operator==(const Box& a, const Box& b) {
        return a.x == b.x && a.y == b.y && a.w == b.w && a.h == b.h;
    }
};

inline double intersection_area(const Box& a, const Box& b) {
    const double ix = std::min(a.x + a.w, b.x + b.w) - std::max(a.x, b.x);
    const double iy = std::min(a.y + a.h, b.y + b.h) - std::max(a.y, b.y);
    if (ix <= 0.0 || iy <= 0.0) return 0.0;
    return ix * iy;
}

inline bool overlaps(const Box& a, const Box& b) {
    return intersection_area(a, b) > 0.0;
}

inline double iou(const Box& a, const Box& b) {
    const double inter = intersection_area(a, b);
    if (inter <= 0.0) return 0.0;
    return inter / (a.area() + b.area() - inter);
}

inline Box union_box(const Box& a, const Box& b) {
    const double x0 = std::min(a.x, b.x);
    const double y0 = std::min(a.y, b.y);
    const double x1 = std::max(a.x + a.w, b.x + b.w);
    const double y1 = std::max(a.y + a.h, b.y + b.h);
    return {x0, y0, x1 - x0, y1 - y0};
}

inline double center_distance(const Box& a, const Box& b) {
    const double dx = a.cx() - b.cx();
    const double dy = a.cy() - b.cy();
    return std::sqrt(dx * dx + dy * dy);
}

// The center-form convention places (x, y) at the box center.
inline Box center_to_topleft(const Box& b) {
    return {b.x - b.w / 2.0, b.y - b.h / 2.0, b.w, b.h};
}

inline Box topleft_to_center(const Box& b) {
    return {b.x + b.w / 2.0, b.y + b.h / 2.0, b.w, b.h};
}

}  // namespace mmb
