#if defined(__x86_64__) || defined(_M_X64)

#include <immintrin.h>

#include <algorithm>
#include <cmath>

#include "mmb/kernels.hpp"

namespace mmb::kernels {

namespace {

const __m256d kSignMask = _mm256_set1_pd(-0.0);

void absdiff_avx2(const double* a, const double* b, double* out, size_t n) {
    size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        __m256d va = _mm256_loadu_pd(a + i);
        __m256d vb = _mm256_loadu_pd(b + i);
        __m256d d = _mm256_sub_pd(va, vb);
        _mm256_storeu_pd(out + i, _mm256_andnot_pd(kSignMask, d));
    }
    for (; i < n; ++i) out[i] = std::fabs(a[i] - b[i]);
}

void mean3_avx2(const double* a, const double* b, const double* c,
                double* out, size_t n) {
    const __m256d three = _mm256_set1_pd(3.0);
    size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        __m256d s = _mm256_add_pd(_mm256_loadu_pd(a + i), _mm256_loadu_pd(b + i));
        s = _mm256_add_pd(s, _mm256_loadu_pd(c + i));
        _mm256_storeu_pd(out + i, _mm256_div_pd(s, three));
    }
    for (; i < n; ++i) out[i] = (a[i] + b[i] + c[i]) / 3.0;
}

void sum_sumsq_avx2(const double* v, size_t n, double* sum, double* sumsq) {
    __m256d acc = _mm256_setzero_pd();
    __m256d acc2 = _mm256_setzero_pd();
    size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        __m256d x = _mm256_loadu_pd(v + i);
        acc = _mm256_add_pd(acc, x);
        acc2 = _mm256_add_pd(acc2, _mm256_mul_pd(x, x));
    }
    alignas(32) double lanes[4], lanes2[4];
    _mm256_store_pd(lanes, acc);
    _mm256_store_pd(lanes2, acc2);
    double s = lanes[0] + lanes[1] + lanes[2] + lanes[3];
    double s2 = lanes2[0] + lanes2[1] + lanes2[2] + lanes2[3];
    for (; i < n; ++i) {
        s += v[i];
        s2 += v[i] * v[i];
    }
    *sum = s;
    *sumsq = s2;
}

void threshold_ge_avx2(const double* v, double t, uint8_t* out, size_t n) {
    const __m256d vt = _mm256_set1_pd(t);
    size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        __m256d x = _mm256_loadu_pd(v + i);
        int m = _mm256_movemask_pd(_mm256_cmp_pd(x, vt, _CMP_GE_OQ));
        out[i + 0] = (m >> 0) & 1;
        out[i + 1] = (m >> 1) & 1;
        out[i + 2] = (m >> 2) & 1;
        out[i + 3] = (m >> 3) & 1;
    }
    for (; i < n; ++i) out[i] = v[i] >= t ? 1 : 0;
}

void abs_val_avx2(const double* v, double* out, size_t n) {
    size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        __m256d x = _mm256_loadu_pd(v + i);
        _mm256_storeu_pd(out + i, _mm256_andnot_pd(kSignMask, x));
    }
    for (; i < n; ++i) out[i] = std::fabs(v[i]);
}

void row_max_avx2(const uint8_t* in, uint8_t* out, size_t n, int radius) {
    const ptrdiff_t len = static_cast<ptrdiff_t>(n);
    const ptrdiff_t r = radius;
    ptrdiff_t i = 0;
    auto edge = [&](ptrdiff_t idx) {
        uint8_t m = 0;
        const ptrdiff_t lo = std::max<ptrdiff_t>(0, idx - r);
        const ptrdiff_t hi = std::min<ptrdiff_t>(len - 1, idx + r);
        for (ptrdiff_t j = lo; j <= hi; ++j) m = std::max(m, in[j]);
        out[idx] = m;
    };
    for (; i < std::min<ptrdiff_t>(r, len); ++i) edge(i);
    for (; i + 32 <= len - r; i += 32) {
        __m256i m = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(in + i - r));
        for (ptrdiff_t d = -r + 1; d <= r; ++d)
            m = _mm256_max_epu8(
                m, _mm256_loadu_si256(reinterpret_cast<const __m256i*>(in + i + d)));
        _mm256_storeu_si256(reinterpret_cast<__m256i*>(out + i), m);
    }
    for (; i < len; ++i) edge(i);
}

void row_min_avx2(const uint8_t* in, uint8_t* out, size_t n, int radius) {
    const ptrdiff_t len = static_cast<ptrdiff_t>(n);
    const ptrdiff_t r = radius;
    ptrdiff_t i = 0;
    for (; i < std::min<ptrdiff_t>(r, len); ++i) out[i] = 0;
    for (; i + 32 <= len - r; i += 32) {
        __m256i m = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(in + i - r));
        for (ptrdiff_t d = -r + 1; d <= r; ++d)
            m = _mm256_min_epu8(
                m, _mm256_loadu_si256(reinterpret_cast<const __m256i*>(in + i + d)));
        _mm256_storeu_si256(reinterpret_cast<__m256i*>(out + i), m);
    }
    for (; i < len - r && i < len; ++i) {
        uint8_t m = 1;
        for (ptrdiff_t j = i - r; j <= i + r; ++j) m = std::min(m, in[j]);
        out[i] = m;
    }
    for (i = std::max<ptrdiff_t>(i, len - r); i < len; ++i) out[i] = 0;
}

}  // namespace

const Ops& avx2_ops() {
    static const Ops ops = {
        absdiff_avx2, mean3_avx2,   sum_sumsq_avx2, threshold_ge_avx2,
        abs_val_avx2, row_max_avx2, row_min_avx2,   "avx2",
    };
    return ops;
}

bool avx2_available() {
    static const bool available = __builtin_cpu_supports("avx2");
    return available;
}

}  // namespace mmb::kernels

#else

#include "mmb/kernels.hpp"

namespace mmb::kernels {

const Ops& avx2_ops() { return scalar_ops(); }
bool avx2_available() { return false; }

}  // namespace mmb::kernels

#endif
