#pragma once

#include <cstddef>
#include <cstdint>
#include <string>

namespace mmb::kernels {

// Data-parallel inner loops of the pixel pipeline. A scalar reference
// implementation always exists; on x86-64 an AVX2 variant is selected at
// runtime when the CPU supports it. Both tables are exposed so the test
// suite can check the variants against each other on identical inputs.
struct Ops {
    // out[i] = |a[i] - b[i]|
    void (*absdiff)(const double* a, const double* b, double* out, size_t n);
    // out[i] = (a[i] + b[i] + c[i]) / 3
    void (*mean3)(const double* a, const double* b, const double* c,
                  double* out, size_t n);
    // sum and sum of squares over v
    void (*sum_sumsq)(const double* v, size_t n, double* sum, double* sumsq);
    // out[i] = v[i] >= t ? 1 : 0
    void (*threshold_ge)(const double* v, double t, uint8_t* out, size_t n);
    // out[i] = |v[i]|
    void (*abs_val)(const double* v, double* out, size_t n);
    // Sliding-window max/min over a row of 0/1 bytes, window of `radius`
    // pixels each side, zero padding outside [0, n). Used as the separable
    // passes of binary dilation/erosion.
    void (*row_max)(const uint8_t* in, uint8_t* out, size_t n, int radius);
    void (*row_min)(const uint8_t* in, uint8_t* out, size_t n, int radius);

    const char* name;
};

const Ops& scalar_ops();
const Ops& avx2_ops();    // valid only if avx2_available()
bool avx2_available();

// Active table: AVX2 when available unless MMB_KERNELS=scalar is set in the
// environment.
const Ops& active_ops();

}  // namespace mmb::kernels
