// Compiled with -mavx2 (and nothing wider): keep this translation unit free
// of generic code so the vector ISA cannot leak elsewhere.

#include "fmc/kernels.hpp"

#if defined(__AVX2__)

#include <immintrin.h>

namespace fmc::kern {
namespace {

double dot_avx2(const double* a, const double* b, std::size_t len) {
    __m256d acc = _mm256_setzero_pd();
    std::size_t i = 0;
    for (; i + 4 <= len; i += 4) {
        const __m256d va = _mm256_loadu_pd(a + i);
        const __m256d vb = _mm256_loadu_pd(b + i);
        acc = _mm256_add_pd(acc, _mm256_mul_pd(va, vb));
    }
    alignas(32) double lanes[4];
    _mm256_store_pd(lanes, acc);
    double sum = lanes[0] + lanes[1] + lanes[2] + lanes[3];
    for (; i < len; ++i) sum += a[i] * b[i];
    return sum;
}

void axpy_avx2(double* y, double alpha, const double* x, std::size_t len) {
    const __m256d va = _mm256_set1_pd(alpha);
    std::size_t i = 0;
    for (; i + 4 <= len; i += 4) {
        const __m256d vy = _mm256_loadu_pd(y + i);
        const __m256d vx = _mm256_loadu_pd(x + i);
        _mm256_storeu_pd(y + i, _mm256_add_pd(vy, _mm256_mul_pd(va, vx)));
    }
    for (; i < len; ++i) y[i] += alpha * x[i];
}

void subtract_avx2(double* out, const double* a, const double* b, std::size_t len) {
    std::size_t i = 0;
    for (; i + 4 <= len; i += 4) {
        _mm256_storeu_pd(out + i,
                         _mm256_sub_pd(_mm256_loadu_pd(a + i), _mm256_loadu_pd(b + i)));
    }
    for (; i < len; ++i) out[i] = a[i] - b[i];
}

void rotate_avx2(double* x, double* y, double c, double s, std::size_t len) {
    const __m256d vc = _mm256_set1_pd(c);
    const __m256d vs = _mm256_set1_pd(s);
    std::size_t i = 0;
    for (; i + 4 <= len; i += 4) {
        const __m256d vx = _mm256_loadu_pd(x + i);
        const __m256d vy = _mm256_loadu_pd(y + i);
        _mm256_storeu_pd(x + i, _mm256_sub_pd(_mm256_mul_pd(vc, vx), _mm256_mul_pd(vs, vy)));
        _mm256_storeu_pd(y + i, _mm256_add_pd(_mm256_mul_pd(vs, vx), _mm256_mul_pd(vc, vy)));
    }
    for (; i < len; ++i) {
        const double xi = x[i];
        const double yi = y[i];
        x[i] = c * xi - s * yi;
        y[i] = s * xi + c * yi;
    }
}

}  // namespace

const Kernels* avx2_kernels_impl() {
    static const Kernels k{"avx2", dot_avx2, axpy_avx2, subtract_avx2, rotate_avx2};
    return &k;
}

}  // namespace fmc::kern

#else

namespace fmc::kern {
const Kernels* avx2_kernels_impl() { return nullptr; }
}  // namespace fmc::kern

#endif
