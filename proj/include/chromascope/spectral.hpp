#pragma once

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "chromascope/graph.hpp"
#include "chromascope/matrix.hpp"

namespace chromascope {

class EigenSolverError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct JacobiOptions {
    double tolerance = 1e-10;  // off-diagonal Frobenius norm at convergence
    int max_sweeps = 100;
};

/// All eigenvalues of a symmetric matrix, ascending, by cyclic Jacobi
/// rotations. Throws std::invalid_argument if the matrix is asymmetric
/// beyond the tolerance and EigenSolverError if the sweep cap is hit.
std::vector<double> symmetric_eigenvalues(const DenseMatrix& a, const JacobiOptions& options = {});

struct EigenExtremes {
    double lambda_max = 0.0;
    double lambda_min = 0.0;
};

EigenExtremes extreme_eigenvalues(const DenseMatrix& a, const JacobiOptions& options = {});

/// Operator norm of a symmetric matrix: max(|lambda_max|, |lambda_min|).
double operator_norm(const DenseMatrix& a, const JacobiOptions& options = {});

struct SpectrumSummary {
    double lambda_max = 0.0;
    double lambda_min = 0.0;
    int n = 0;
    int delta = 0;
    double tolerance = 0.0;
};

SpectrumSummary spectrum_summary(const Graph& g, const JacobiOptions& options = {});

/// 1 + lambda_max / (-lambda_min). Rejects edgeless graphs.
double hoffman_bound(const Graph& g, const JacobiOptions& options = {});
double hoffman_bound(const SpectrumSummary& s);

struct SpectralBound {
    double ratio_bound = 0.0;  // lower bound on lambda_max(G_p) / -lambda_min(G_p)
    double chi_bound = 0.0;    // lower bound on chi(G_p)
};

/// With s = (c/p)(sqrt(delta) + sqrt(ln n)):
///   ratio_bound = (lambda_max - s) / (-lambda_min + s)
///   chi_bound   = lambda_max / (-lambda_min + s)
/// Requires 0 < p <= 1, c > 0 and at least one edge.
SpectralBound theorem2_bound(const SpectrumSummary& s, double p, double c);
SpectralBound theorem2_bound(const Graph& g, double p, double c, const JacobiOptions& options = {});

/// (2|E|/n) / (-lambda_min + (c/p) sqrt(delta)), the average-degree variant.
double compact_spectral_bound(const Graph& g, const SpectrumSummary& s, double p, double c);

/// One draw of D = A(G_p) - p A(G).
struct DeviationTrial {
    double p = 0.0;
    std::uint64_t seed = 0;
    double norm_x = 0.0;       // ||D||
    double sigma_exact = 0.0;  // sqrt(delta p (1-p))
    int delta = 0;
    int n = 0;

    /// c (sqrt(delta) + sqrt(ln n)).
    double envelope(double c) const {
        return c * (std::sqrt(static_cast<double>(delta)) + std::sqrt(std::log(static_cast<double>(std::max(n, 1)))));
    }
};

DeviationTrial deviation_trial(const Graph& g, double p, std::uint64_t seed, const JacobiOptions& options = {});

/// Slacks of |p lambda(A_G) - lambda(A_{G_p})| <= ||D|| for the extreme
/// eigenvalues of one sampled instance; both must be >= -tolerance.
struct PerturbationReport {
    double p = 0.0;
    std::uint64_t seed = 0;
    double norm_x = 0.0;
    double slack_max = 0.0;
    double slack_min = 0.0;
    double sigma_exact = 0.0;
    double envelope_unit = 0.0;  // sqrt(delta) + sqrt(ln n)

    bool holds(double tolerance) const { return slack_max >= -tolerance && slack_min >= -tolerance; }
};

PerturbationReport perturbation_check(const Graph& g, double p, std::uint64_t seed, const JacobiOptions& options = {});

}  // namespace chromascope
