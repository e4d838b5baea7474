#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "fmc/search.hpp"

namespace fmc {

// Minimal dense row-major matrix; all the linear algebra here is small.
struct Mat {
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::vector<double> a;  // rows*cols, row-major

    Mat() = default;
    Mat(std::size_t r, std::size_t c) : rows(r), cols(c), a(r * c, 0.0) {}
    double* row(std::size_t r) { return a.data() + r * cols; }
    const double* row(std::size_t r) const { return a.data() + r * cols; }
    double& at(std::size_t r, std::size_t c) { return a[r * cols + c]; }
    double at(std::size_t r, std::size_t c) const { return a[r * cols + c]; }
};

// One solution per row, labels as doubles; pair carried for reporting.
struct SolutionMatrix {
    MagicPair pair{};
    int n = 0;
    std::size_t count = 0;
    Mat rows;
};

// Requires stored solutions (throws std::invalid_argument when s.count > 0
// but nothing was stored).
SolutionMatrix solution_matrix(const SolutionSet& s);

struct Centered {
    Mat data;                  // rows - mean, same shape as input
    std::vector<double> mean;  // column means
};

// Column-mean centering. Throws std::invalid_argument on an empty matrix.
Centered center(const SolutionMatrix& m);

// Population covariance (1/N) X~^T X~ of an already centered matrix.
Mat covariance(const Mat& centered);

// Same matrix computed from integer label moments: (N*M - S S^T) / N^2 with
// M = sum of outer products and S the column sums, all in int64. Complement
// classes (labels x -> n+1-x) have identical N*M - S S^T in exact integers,
// so their covariance matrices match bit for bit. Used by pca_run.
Mat covariance_exact(const SolutionMatrix& m);

struct EigenDecomposition {
    std::vector<double> values;  // descending
    Mat vectors;                 // column j pairs with values[j]
};

// Cyclic Jacobi on a symmetric matrix. Converged when the off-diagonal
// Frobenius norm falls below tol times the initial full Frobenius norm; at
// most 100 sweeps, then std::runtime_error. Asymmetric input (relative to
// tol) throws std::invalid_argument. Each eigenvector's sign is fixed so its
// largest-magnitude entry is positive (ties: lowest index).
EigenDecomposition eigendecompose(const Mat& sym, double tol = 1e-13);

// Z = centered * W_k (top-k eigenvector columns). k out of 1..n throws
// std::invalid_argument.
Mat project(const Mat& centered, const EigenDecomposition& eig, int k);

struct ProjectionResult {
    MagicPair pair{};
    int n = 0;
    std::size_t count = 0;
    std::vector<double> mean;
    std::vector<double> eigenvalues;    // descending
    Mat components;                     // eigenvector columns
    Mat coordinates;                    // count x k
};

// The whole pipeline on a stored solution set: matrix, centering, exact
// covariance, eigendecomposition, top-k projection.
ProjectionResult pca_run(const SolutionSet& s, int k = 2);

// Coordinates as CSV (header x,y,z,c4,... per k; %.12g floats; one row per
// solution) plus a JSON sidecar (same path with .csv swapped for .json,
// appended otherwise) carrying eigenvalues and explained-variance ratios.
// Returns {csv path, sidecar path}. Throws std::runtime_error on I/O failure.
std::pair<std::string, std::string> export_projection(const ProjectionResult& p,
                                                      const std::string& destination);

}  // namespace fmc
