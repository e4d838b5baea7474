#include "fmc/pca.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <numeric>
#include <stdexcept>

#include "fmc/kernels.hpp"

namespace fmc {
namespace {

std::string fmt12(double x) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.12g", x);
    return buf;
}

double frobenius(const Mat& m) {
    double s = 0.0;
    for (double v : m.a) s += v * v;
    return std::sqrt(s);
}

double off_diagonal_norm(const Mat& m) {
    double s = 0.0;
    for (std::size_t i = 0; i < m.rows; ++i) {
        for (std::size_t j = 0; j < m.cols; ++j) {
            if (i != j) s += m.at(i, j) * m.at(i, j);
        }
    }
    return std::sqrt(s);
}

}  // namespace

SolutionMatrix solution_matrix(const SolutionSet& s) {
    if (s.count > 0 && s.solutions.empty())
        throw std::invalid_argument("solution set was not stored");
    SolutionMatrix m;
    m.pair = s.pair;
    m.count = s.solutions.size();
    m.n = m.count ? static_cast<int>(s.solutions.front().size()) : 0;
    m.rows = Mat(m.count, static_cast<std::size_t>(m.n));
    for (std::size_t r = 0; r < m.count; ++r) {
        for (int i = 0; i < m.n; ++i) m.rows.at(r, static_cast<std::size_t>(i)) = s.solutions[r][static_cast<std::size_t>(i)];
    }
    return m;
}

Centered center(const SolutionMatrix& m) {
    if (m.count == 0) throw std::invalid_argument("cannot center an empty matrix");
    const auto& k = kern::active();
    const std::size_t n = m.rows.cols;
    Centered out;
    out.mean.assign(n, 0.0);
    for (std::size_t r = 0; r < m.count; ++r) k.axpy(out.mean.data(), 1.0, m.rows.row(r), n);
    for (double& v : out.mean) v /= static_cast<double>(m.count);
    out.data = Mat(m.count, n);
    for (std::size_t r = 0; r < m.count; ++r)
        k.subtract(out.data.row(r), m.rows.row(r), out.mean.data(), n);
    return out;
}

Mat covariance(const Mat& centered) {
    const auto& k = kern::active();
    const std::size_t n = centered.cols;
    Mat cov(n, n);
    for (std::size_t r = 0; r < centered.rows; ++r) {
        const double* x = centered.row(r);
        for (std::size_t j = 0; j < n; ++j) k.axpy(cov.row(j), x[j], x, n);
    }
    if (centered.rows > 0) {
        const double inv = 1.0 / static_cast<double>(centered.rows);
        for (double& v : cov.a) v *= inv;
    }
    return cov;
}

Mat covariance_exact(const SolutionMatrix& m) {
    const std::size_t n = static_cast<std::size_t>(m.n);
    Mat cov(n, n);
    if (m.count == 0) return cov;
    // With labels <= 64 and counts well below 2^20 every term fits int64 and
    // the numerator is exact; one final double division per entry.
    std::vector<long long> sum(n, 0);
    std::vector<long long> moment(n * n, 0);
    std::vector<long long> row(n);
    for (std::size_t r = 0; r < m.count; ++r) {
        for (std::size_t i = 0; i < n; ++i) row[i] = std::llround(m.rows.at(r, i));
        for (std::size_t i = 0; i < n; ++i) {
            sum[i] += row[i];
            for (std::size_t j = 0; j < n; ++j) moment[i * n + j] += row[i] * row[j];
        }
    }
    const long long N = static_cast<long long>(m.count);
    const double denom = static_cast<double>(N) * static_cast<double>(N);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            const long long numer = N * moment[i * n + j] - sum[i] * sum[j];
            cov.at(i, j) = static_cast<double>(numer) / denom;
        }
    }
    return cov;
}

EigenDecomposition eigendecompose(const Mat& sym, double tol) {
    if (sym.rows != sym.cols) throw std::invalid_argument("matrix not square");
    const std::size_t n = sym.rows;
    const double f0 = frobenius(sym);
    double asym = 0.0;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            asym = std::max(asym, std::fabs(sym.at(i, j) - sym.at(j, i)));
    if (asym > tol * std::max(1.0, f0)) throw std::invalid_argument("matrix not symmetric");

    const auto& kr = kern::active();
    Mat a = sym;
    // rows of vt are the transposed rotation accumulator: row j holds the
    // j-th eigenvector candidate, so plane rotations touch contiguous memory.
    Mat vt(n, n);
    for (std::size_t i = 0; i < n; ++i) vt.at(i, i) = 1.0;

    const double target = tol * f0;
    bool converged = f0 == 0.0 || off_diagonal_norm(a) <= target;
    for (int sweep = 0; sweep < 100 && !converged; ++sweep) {
        for (std::size_t p = 0; p < n; ++p) {
            for (std::size_t q = p + 1; q < n; ++q) {
                const double apq = a.at(p, q);
                if (apq == 0.0) continue;
                const double theta = (a.at(q, q) - a.at(p, p)) / (2.0 * apq);
                const double t = (theta >= 0.0 ? 1.0 : -1.0) /
                                 (std::fabs(theta) + std::sqrt(theta * theta + 1.0));
                const double c = 1.0 / std::sqrt(t * t + 1.0);
                const double s = t * c;
                // columns p,q of A
                for (std::size_t i = 0; i < n; ++i) {
                    const double aip = a.at(i, p);
                    const double aiq = a.at(i, q);
                    a.at(i, p) = c * aip - s * aiq;
                    a.at(i, q) = s * aip + c * aiq;
                }
                // rows p,q of A
                kr.rotate(a.row(p), a.row(q), c, s, n);
                kr.rotate(vt.row(p), vt.row(q), c, s, n);
            }
        }
        converged = off_diagonal_norm(a) <= target;
    }
    if (!converged) throw std::runtime_error("Jacobi sweep cap reached without convergence");

    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t x, std::size_t y) { return a.at(x, x) > a.at(y, y); });

    EigenDecomposition out;
    out.values.resize(n);
    out.vectors = Mat(n, n);
    for (std::size_t j = 0; j < n; ++j) {
        const std::size_t src = order[j];
        out.values[j] = a.at(src, src);
        std::size_t arg = 0;
        for (std::size_t i = 1; i < n; ++i)
            if (std::fabs(vt.at(src, i)) > std::fabs(vt.at(src, arg))) arg = i;
        const double flip = vt.at(src, arg) < 0.0 ? -1.0 : 1.0;
        for (std::size_t i = 0; i < n; ++i) out.vectors.at(i, j) = flip * vt.at(src, i);
    }
    return out;
}

Mat project(const Mat& centered, const EigenDecomposition& eig, int k) {
    const std::size_t n = centered.cols;
    if (k < 1 || static_cast<std::size_t>(k) > n)
        throw std::invalid_argument("component count out of range");
    const auto& kr = kern::active();
    // contiguous copies of the leading eigenvector columns
    Mat w(static_cast<std::size_t>(k), n);
    for (int j = 0; j < k; ++j)
        for (std::size_t i = 0; i < n; ++i)
            w.at(static_cast<std::size_t>(j), i) = eig.vectors.at(i, static_cast<std::size_t>(j));
    Mat z(centered.rows, static_cast<std::size_t>(k));
    for (std::size_t r = 0; r < centered.rows; ++r)
        for (int j = 0; j < k; ++j)
            z.at(r, static_cast<std::size_t>(j)) =
                kr.dot(centered.row(r), w.row(static_cast<std::size_t>(j)), n);
    return z;
}

ProjectionResult pca_run(const SolutionSet& s, int k) {
    SolutionMatrix m = solution_matrix(s);
    ProjectionResult out;
    out.pair = m.pair;
    out.n = m.n;
    out.count = m.count;
    if (m.count == 0) {
        out.coordinates = Mat(0, static_cast<std::size_t>(std::max(k, 0)));
        return out;
    }
    Centered c = center(m);
    out.mean = c.mean;
    EigenDecomposition eig = eigendecompose(covariance_exact(m));
    out.eigenvalues = eig.values;
    out.coordinates = project(c.data, eig, k);
    out.components = std::move(eig.vectors);
    return out;
}

std::pair<std::string, std::string> export_projection(const ProjectionResult& p,
                                                      const std::string& destination) {
    std::string sidecar = destination;
    if (sidecar.size() >= 4 && sidecar.compare(sidecar.size() - 4, 4, ".csv") == 0) {
        sidecar.replace(sidecar.size() - 4, 4, ".json");
    } else {
        sidecar += ".json";
    }

    const std::size_t k = p.coordinates.cols;
    std::ofstream csv(destination, std::ios::trunc);
    if (!csv) throw std::runtime_error("cannot open " + destination + " for writing");
    static const char* kNames[3] = {"x", "y", "z"};
    for (std::size_t j = 0; j < k; ++j) {
        if (j) csv << ',';
        if (j < 3) {
            csv << kNames[j];
        } else {
            csv << 'c' << j + 1;
        }
    }
    csv << '\n';
    for (std::size_t r = 0; r < p.coordinates.rows; ++r) {
        for (std::size_t j = 0; j < k; ++j) {
            if (j) csv << ',';
            csv << fmt12(p.coordinates.at(r, j));
        }
        csv << '\n';
    }
    csv.flush();
    if (!csv) throw std::runtime_error("write failed: " + destination);

    double total = 0.0;
    for (double v : p.eigenvalues) total += v;
    std::ofstream js(sidecar, std::ios::trunc);
    if (!js) throw std::runtime_error("cannot open " + sidecar + " for writing");
    js << "{\n  \"sp\": " << p.pair.sp << ",\n  \"sh\": " << p.pair.sh
       << ",\n  \"count\": " << p.count << ",\n  \"components\": " << k
       << ",\n  \"eigenvalues\": [";
    for (std::size_t i = 0; i < p.eigenvalues.size(); ++i)
        js << (i ? ", " : "") << fmt12(p.eigenvalues[i]);
    js << "],\n  \"explained_variance_ratio\": [";
    for (std::size_t i = 0; i < p.eigenvalues.size(); ++i)
        js << (i ? ", " : "") << fmt12(total > 0.0 ? p.eigenvalues[i] / total : 0.0);
    js << "]\n}\n";
    js.flush();
    if (!js) throw std::runtime_error("write failed: " + sidecar);
    return {destination, sidecar};
}

}  // namespace fmc
