#include "mmb/kernels.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>

namespace mmb::kernels {

namespace {

void absdiff_scalar(const double* a, const double* b, double* out, size_t n) {
    for (size_t i = 0; i < n; ++i) out[i] = std::fabs(a[i] - b[i]);
}

void mean3_scalar(const double* a, const double* b, const double* c,
                  double* out, size_t n) {
    for (size_t i = 0; i < n; ++i) out[i] = (a[i] + b[i] + c[i]) / 3.0;
}

void sum_sumsq_scalar(const double* v, size_t n, double* sum, double* sumsq) {
    double s = 0.0, s2 = 0.0;
    for (size_t i = 0; i < n; ++i) {
        s += v[i];
        s2 += v[i] * v[i];
    }
    *sum = s;
    *sumsq = s2;
}

void threshold_ge_scalar(const double* v, double t, uint8_t* out, size_t n) {
    for (size_t i = 0; i < n; ++i) out[i] = v[i] >= t ? 1 : 0;
}

void abs_val_scalar(const double* v, double* out, size_t n) {
    for (size_t i = 0; i < n; ++i) out[i] = std::fabs(v[i]);
}

void row_max_scalar(const uint8_t* in, uint8_t* out, size_t n, int radius) {
    const ptrdiff_t len = static_cast<ptrdiff_t>(n);
    for (ptrdiff_t i = 0; i < len; ++i) {
        uint8_t m = 0;
        const ptrdiff_t lo = std::max<ptrdiff_t>(0, i - radius);
        const ptrdiff_t hi = std::min<ptrdiff_t>(len - 1, i + radius);
        for (ptrdiff_t j = lo; j <= hi; ++j) m = std::max(m, in[j]);
        out[i] = m;
    }
}

void row_min_scalar(const uint8_t* in, uint8_t* out, size_t n, int radius) {
    const ptrdiff_t len = static_cast<ptrdiff_t>(n);
    for (ptrdiff_t i = 0; i < len; ++i) {
        // Zero padding: windows reaching past the ends erode to 0.
        if (i - radius < 0 || i + radius >= len) {
            out[i] = 0;
            continue;
        }
        uint8_t m = 1;
        for (ptrdiff_t j = i - radius; j <= i + radius; ++j) m = std::min(m, in[j]);
        out[i] = m;
    }
}

}  // namespace

const Ops& scalar_ops() {
    static const Ops ops = {
        absdiff_scalar, mean3_scalar,     sum_sumsq_scalar, threshold_ge_scalar,
        abs_val_scalar, row_max_scalar,   row_min_scalar,   "scalar",
    };
    return ops;
}

const Ops& active_ops() {
    static const Ops* selected = [] {
        const char* env = std::getenv("MMB_KERNELS");
        if (env && std::string(env) == "scalar") return &scalar_ops();
        if (avx2_available()) return &avx2_ops();
        return &scalar_ops();
    }();
    return *selected;
}

}  // namespace mmb::kernels
