#pragma once

#include <cstddef>

namespace fmc::kern {

// Dense double-precision primitives behind the PCA pipeline. One scalar
// reference implementation, one AVX2 variant; the active set is chosen once
// at runtime from CPU capabilities. Variants agree to a few ulp (summation
// order differs), which the equivalence tests pin down.
struct Kernels {
    const char* name;
    // sum_i a[i]*b[i]
    double (*dot)(const double* a, const double* b, std::size_t len);
    // y[i] += alpha * x[i]
    void (*axpy)(double* y, double alpha, const double* x, std::size_t len);
    // out[i] = a[i] - b[i]
    void (*subtract)(double* out, const double* a, const double* b, std::size_t len);
    // plane rotation: (x[i], y[i]) <- (c*x[i] - s*y[i], s*x[i] + c*y[i])
    void (*rotate)(double* x, double* y, double c, double s, std::size_t len);
};

const Kernels& scalar_kernels();

// nullptr when the CPU (or the build) has no AVX2.
const Kernels* avx2_kernels();

// Best available set; stable for the process lifetime unless forced.
const Kernels& active();

// Test hook: pin the active set, nullptr to restore automatic choice.
void force(const Kernels* k);

}  // namespace fmc::kern
