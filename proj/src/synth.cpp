#include "mmb/synth.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>

namespace mmb {

namespace {

constexpr double kPi = 3.14159265358979323846;

// Explicit uniform/gaussian draws on top of mt19937_64 keep the stream
// reproducible regardless of standard library.
class Rng {
public:
    explicit Rng(uint64_t seed) : engine_(seed) {}

    double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }
    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

    double gaussian() {
        if (have_spare_) {
            have_spare_ = false;
            return spare_;
        }
        double u1 = uniform();
        while (u1 <= 0.0) u1 = uniform();
        const double u2 = uniform();
        const double mag = std::sqrt(-2.0 * std::log(u1));
        spare_ = mag * std::sin(2.0 * kPi * u2);
        have_spare_ = true;
        return mag * std::cos(2.0 * kPi * u2);
    }

private:
    std::mt19937_64 engine_;
    double spare_ = 0.0;
    bool have_spare_ = false;
};

// Smooth low-frequency field: bilinear interpolation of a coarse random
// lattice, intensities around 120.
PixelGrid make_field(int width, int height, Rng& rng) {
    const int cells = 6;
    std::vector<double> lattice((cells + 1) * (cells + 1));
    for (double& v : lattice) v = rng.uniform(95.0, 150.0);

    PixelGrid field(width, height);
    for (int y = 0; y < height; ++y) {
        const double fy = static_cast<double>(y) / height * cells;
        const int cy = std::min(static_cast<int>(fy), cells - 1);
        const double ty = fy - cy;
        for (int x = 0; x < width; ++x) {
            const double fx = static_cast<double>(x) / width * cells;
            const int cx = std::min(static_cast<int>(fx), cells - 1);
            const double tx = fx - cx;
            const double v00 = lattice[cy * (cells + 1) + cx];
            const double v10 = lattice[cy * (cells + 1) + cx + 1];
            const double v01 = lattice[(cy + 1) * (cells + 1) + cx];
            const double v11 = lattice[(cy + 1) * (cells + 1) + cx + 1];
            field.at(x, y) = (1 - ty) * ((1 - tx) * v00 + tx * v10) +
                             ty * ((1 - tx) * v01 + tx * v11);
        }
    }
    return field;
}

// Coverage of the pixel cell [px, px+1) x [py, py+1) by an axis-aligned
// rectangle.
double cell_coverage(double px, double py, double rx, double ry, double rw, double rh) {
    const double ox = std::min(px + 1.0, rx + rw) - std::max(px, rx);
    const double oy = std::min(py + 1.0, ry + rh) - std::max(py, ry);
    if (ox <= 0.0 || oy <= 0.0) return 0.0;
    return ox * oy;
}

// Occluder weight at a pixel: 1 inside, linear falloff over `feather`.
double occluder_weight(double px, double py, const OccluderSpec& o, double ox, double oy) {
    const double dx = std::min(px - ox, ox + o.w - 1.0 - px);
    const double dy = std::min(py - oy, oy + o.h - 1.0 - py);
    const double d = std::min(dx, dy);
    if (d < -o.feather) return 0.0;
    if (o.feather <= 0.0) return d >= 0.0 ? 1.0 : 0.0;
    return std::clamp((d + o.feather) / o.feather, 0.0, 1.0);
}

struct LiveTarget {
    TargetSpec spec;
    long public_id = -1;
    bool was_visible = false;
};

}  // namespace

void SynthConfig::validate() const {
    if (width <= 0 || height <= 0 || num_frames <= 0)
        throw std::invalid_argument("synth: non-positive dimensions");
    if (frame_rate_hz <= 0.0) throw std::invalid_argument("synth: frame rate must be positive");
    if (num_targets < 0) throw std::invalid_argument("synth: negative target count");
    if (target_size_min < 2.0 || target_size_max > 8.0 || target_size_min > target_size_max)
        throw std::invalid_argument("synth: target sizes must lie within [2, 8]");
    if (speed_min < 0.0 || speed_min > speed_max)
        throw std::invalid_argument("synth: invalid speed range");
    if (noise_sigma < 0.0) throw std::invalid_argument("synth: negative noise sigma");
    if (illumination_amplitude < 0.0 || illumination_period <= 0.0)
        throw std::invalid_argument("synth: invalid illumination spec");
    if (clutter_rate < 0.0) throw std::invalid_argument("synth: negative clutter rate");
    if (clutter_contrast_min > clutter_contrast_max)
        throw std::invalid_argument("synth: invalid clutter contrast range");
}

SynthResult generate(const SynthConfig& config) {
    config.validate();
    Rng rng(config.seed);

    const int w = config.width, h = config.height;
    const PixelGrid field = make_field(w, h, rng);

    // Assemble the full target list: scripted first, then random draws.
    std::vector<LiveTarget> targets;
    for (const TargetSpec& s : config.scripted_targets) targets.push_back({s});
    for (int i = 0; i < config.num_targets; ++i) {
        TargetSpec s;
        s.w = s.h = std::round(rng.uniform(config.target_size_min, config.target_size_max));
        s.x = rng.uniform(4.0, w - 4.0 - s.w);
        s.y = rng.uniform(4.0, h - 4.0 - s.h);
        const double speed = rng.uniform(config.speed_min, config.speed_max);
        const double angle = rng.uniform(0.0, 2.0 * kPi);
        s.vx = speed * std::cos(angle);
        s.vy = speed * std::sin(angle);
        s.contrast = config.target_contrast;
        s.jitter = config.jitter;
        targets.push_back({s});
    }

    long next_id = 0;
    SynthResult out;
    out.sequence.frame_rate_hz = config.frame_rate_hz;
    out.sequence.frames.reserve(config.num_frames);

    for (int t = 0; t < config.num_frames; ++t) {
        PixelGrid scene = field;

        // Background occluders.
        for (const OccluderSpec& o : config.occluders) {
            if (t < o.appear_frame || t >= o.disappear_frame) continue;
            const double ox = o.x + o.vx * (t - o.appear_frame);
            const double oy = o.y + o.vy * (t - o.appear_frame);
            const int x0 = std::max(0, static_cast<int>(std::floor(ox - o.feather)));
            const int x1 = std::min(w - 1, static_cast<int>(std::ceil(ox + o.w + o.feather)));
            const int y0 = std::max(0, static_cast<int>(std::floor(oy - o.feather)));
            const int y1 = std::min(h - 1, static_cast<int>(std::ceil(oy + o.h + o.feather)));
            for (int y = y0; y <= y1; ++y)
                for (int x = x0; x <= x1; ++x)
                    scene.at(x, y) += o.intensity_delta * occluder_weight(x, y, o, ox, oy);
        }

        // Targets. Jitter draws happen for every live target every frame so
        // the stream stays aligned regardless of visibility.
        for (LiveTarget& lt : targets) {
            const TargetSpec& s = lt.spec;
            double jx = 0.0, jy = 0.0;
            if (s.jitter > 0.0) {
                jx = rng.uniform(-s.jitter, s.jitter);
                jy = rng.uniform(-s.jitter, s.jitter);
            }
            if (t < s.appear_frame || t >= s.disappear_frame) continue;
            const double rx = s.x + s.vx * (t - s.appear_frame) + jx;
            const double ry = s.y + s.vy * (t - s.appear_frame) + jy;

            bool hidden = false;
            const double cx = rx + s.w / 2.0, cy = ry + s.h / 2.0;
            for (const OccluderSpec& o : config.occluders) {
                if (!o.opaque || t < o.appear_frame || t >= o.disappear_frame) continue;
                const double ox = o.x + o.vx * (t - o.appear_frame);
                const double oy = o.y + o.vy * (t - o.appear_frame);
                if (cx >= ox && cx < ox + o.w && cy >= oy && cy < oy + o.h) {
                    hidden = true;
                    break;
                }
            }
            if (hidden) {
                lt.was_visible = false;
                continue;
            }

            const int x0 = std::max(0, static_cast<int>(std::floor(rx)));
            const int x1 = std::min(w - 1, static_cast<int>(std::ceil(rx + s.w)) - 1);
            const int y0 = std::max(0, static_cast<int>(std::floor(ry)));
            const int y1 = std::min(h - 1, static_cast<int>(std::ceil(ry + s.h)) - 1);
            if (x0 > x1 || y0 > y1) {
                lt.was_visible = false;  // fully outside; next entry is a new id
                continue;
            }

            for (int y = y0; y <= y1; ++y)
                for (int x = x0; x <= x1; ++x)
                    scene.at(x, y) += s.contrast * cell_coverage(x, y, rx, ry, s.w, s.h);

            if (!lt.was_visible) lt.public_id = next_id++;
            lt.was_visible = true;

            GroundTruthRecord r;
            r.frame = t;
            r.track_id = lt.public_id;
            r.box = {static_cast<double>(x0), static_cast<double>(y0),
                     static_cast<double>(x1 - x0 + 1), static_cast<double>(y1 - y0 + 1)};
            r.label = ClassLabel::synthetic;
            out.ground_truth.push_back(r);
        }

        // Transient clutter, one frame of life.
        if (config.clutter_rate > 0.0) {
            const double whole = std::floor(config.clutter_rate);
            int count = static_cast<int>(whole);
            if (rng.uniform() < config.clutter_rate - whole) ++count;
            for (int i = 0; i < count; ++i) {
                const double sz = config.clutter_size;
                const double cx0 = rng.uniform(1.0, w - 1.0 - sz);
                const double cy0 = rng.uniform(1.0, h - 1.0 - sz);
                const double contrast =
                    rng.uniform(config.clutter_contrast_min, config.clutter_contrast_max);
                const int x0 = std::max(0, static_cast<int>(std::floor(cx0)));
                const int x1 = std::min(w - 1, static_cast<int>(std::ceil(cx0 + sz)) - 1);
                const int y0 = std::max(0, static_cast<int>(std::floor(cy0)));
                const int y1 = std::min(h - 1, static_cast<int>(std::ceil(cy0 + sz)) - 1);
                for (int y = y0; y <= y1; ++y)
                    for (int x = x0; x <= x1; ++x)
                        scene.at(x, y) += contrast * cell_coverage(x, y, cx0, cy0, sz, sz);
            }
        }

        // Global illumination gain, then sensor noise, then 8-bit quantize.
        const double gain =
            1.0 + config.illumination_amplitude *
                      std::sin(2.0 * kPi * t / config.illumination_period);
        Frame frame;
        frame.index = t;
        frame.pixels = PixelGrid(w, h);
        for (size_t i = 0; i < scene.size(); ++i) {
            double v = scene.data()[i] * gain;
            if (config.noise_sigma > 0.0) v += config.noise_sigma * rng.gaussian();
            frame.pixels.data()[i] = std::clamp(std::round(v), 0.0, 255.0);
        }
        out.sequence.frames.push_back(std::move(frame));
    }

    std::sort(out.ground_truth.begin(), out.ground_truth.end(),
              [](const GroundTruthRecord& a, const GroundTruthRecord& b) {
                  if (a.frame != b.frame) return a.frame < b.frame;
                  return a.track_id < b.track_id;
              });
    return out;
}

}  // namespace mmb
