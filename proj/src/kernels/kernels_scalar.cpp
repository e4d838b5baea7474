#include "fmc/kernels.hpp"

namespace fmc::kern {
namespace {

double dot_scalar(const double* a, const double* b, std::size_t len) {
    double acc = 0.0;
    for (std::size_t i = 0; i < len; ++i) acc += a[i] * b[i];
    return acc;
}

void axpy_scalar(double* y, double alpha, const double* x, std::size_t len) {
    for (std::size_t i = 0; i < len; ++i) y[i] += alpha * x[i];
}

void subtract_scalar(double* out, const double* a, const double* b, std::size_t len) {
    for (std::size_t i = 0; i < len; ++i) out[i] = a[i] - b[i];
}

void rotate_scalar(double* x, double* y, double c, double s, std::size_t len) {
    for (std::size_t i = 0; i < len; ++i) {
        const double xi = x[i];
        const double yi = y[i];
        x[i] = c * xi - s * yi;
        y[i] = s * xi + c * yi;
    }
}

}  // namespace

const Kernels& scalar_kernels() {
    static const Kernels k{"scalar", dot_scalar, axpy_scalar, subtract_scalar, rotate_scalar};
    return k;
}

}  // namespace fmc::kern
