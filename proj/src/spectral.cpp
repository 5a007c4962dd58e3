#include "chromascope/spectral.hpp"

#include <algorithm>
#include <cmath>

#include "chromascope/expectation.hpp"
#include "chromascope/format.hpp"

namespace chromascope {

namespace {

double off_diagonal_norm(const DenseMatrix& a) {
    double sum = 0.0;
    const std::size_t n = a.size();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) sum += 2.0 * a(i, j) * a(i, j);
    return std::sqrt(sum);
}

// Applies the rotation in the (p,q) plane that annihilates a(p,q).
void rotate(DenseMatrix& a, std::size_t p, std::size_t q) {
    const double apq = a(p, q);
    const double theta = (a(q, q) - a(p, p)) / (2.0 * apq);
    const double t = std::copysign(1.0, theta) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
    const double c = 1.0 / std::sqrt(t * t + 1.0);
    const double s = t * c;
    const double tau = s / (1.0 + c);
    const std::size_t n = a.size();
    a(p, p) -= t * apq;
    a(q, q) += t * apq;
    a(p, q) = 0.0;
    a(q, p) = 0.0;
    for (std::size_t r = 0; r < n; ++r) {
        if (r == p || r == q) continue;
        const double arp = a(r, p);
        const double arq = a(r, q);
        const double np = arp - s * (arq + tau * arp);
        const double nq = arq + s * (arp - tau * arq);
        a(r, p) = np;
        a(p, r) = np;
        a(r, q) = nq;
        a(q, r) = nq;
    }
}

SpectrumSummary summary_from(const Graph& g, const DenseMatrix& adj, const JacobiOptions& options) {
    SpectrumSummary s;
    const auto ext = extreme_eigenvalues(adj, options);
    s.lambda_max = ext.lambda_max;
    s.lambda_min = ext.lambda_min;
    s.n = g.vertex_count();
    s.delta = max_degree(g);
    s.tolerance = options.tolerance;
    return s;
}

}  // namespace

std::vector<double> symmetric_eigenvalues(const DenseMatrix& input, const JacobiOptions& options) {
    if (input.asymmetry() > options.tolerance)
        throw std::invalid_argument("matrix is not symmetric within tolerance " + format_double(options.tolerance));
    DenseMatrix a = input;
    const std::size_t n = a.size();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            const double mean = 0.5 * (a(i, j) + a(j, i));
            a(i, j) = mean;
            a(j, i) = mean;
        }
    int sweep = 0;
    while (off_diagonal_norm(a) >= options.tolerance) {
        if (sweep++ >= options.max_sweeps)
            throw EigenSolverError("Jacobi iteration did not converge in " + std::to_string(options.max_sweeps) +
                                   " sweeps");
        for (std::size_t p = 0; p + 1 < n; ++p)
            for (std::size_t q = p + 1; q < n; ++q)
                if (a(p, q) != 0.0) rotate(a, p, q);
    }
    std::vector<double> values(n);
    for (std::size_t i = 0; i < n; ++i) values[i] = a(i, i);
    std::sort(values.begin(), values.end());
    return values;
}

EigenExtremes extreme_eigenvalues(const DenseMatrix& a, const JacobiOptions& options) {
    if (a.size() == 0) throw std::invalid_argument("extreme eigenvalues need n >= 1");
    const auto values = symmetric_eigenvalues(a, options);
    return {values.back(), values.front()};
}

double operator_norm(const DenseMatrix& a, const JacobiOptions& options) {
    if (a.size() == 0) return 0.0;
    const auto ext = extreme_eigenvalues(a, options);
    return std::max(std::abs(ext.lambda_max), std::abs(ext.lambda_min));
}

SpectrumSummary spectrum_summary(const Graph& g, const JacobiOptions& options) {
    return summary_from(g, adjacency_matrix(g), options);
}

double hoffman_bound(const SpectrumSummary& s) {
    if (!(s.lambda_min < 0.0)) throw std::invalid_argument("Hoffman bound is undefined for edgeless graphs");
    return 1.0 + s.lambda_max / (-s.lambda_min);
}

double hoffman_bound(const Graph& g, const JacobiOptions& options) {
    if (g.edge_count() == 0)
        throw std::invalid_argument("Hoffman bound is undefined for edgeless graphs (chi >= 1 holds trivially)");
    return hoffman_bound(spectrum_summary(g, options));
}

SpectralBound theorem2_bound(const SpectrumSummary& s, double p, double c) {
    if (!(p > 0.0 && p <= 1.0)) throw std::invalid_argument("spectral bound needs 0 < p <= 1");
    if (!(c > 0.0)) throw std::invalid_argument("constant c must be positive");
    if (!(s.lambda_min < 0.0)) throw std::invalid_argument("spectral bound needs at least one edge");
    const double shift = (c / p) * (std::sqrt(static_cast<double>(s.delta)) +
                                    std::sqrt(std::log(static_cast<double>(std::max(s.n, 1)))));
    const double denom = -s.lambda_min + shift;
    return {(s.lambda_max - shift) / denom, s.lambda_max / denom};
}

SpectralBound theorem2_bound(const Graph& g, double p, double c, const JacobiOptions& options) {
    if (g.edge_count() == 0) throw std::invalid_argument("spectral bound needs at least one edge");
    return theorem2_bound(spectrum_summary(g, options), p, c);
}

double compact_spectral_bound(const Graph& g, const SpectrumSummary& s, double p, double c) {
    if (!(p > 0.0 && p <= 1.0)) throw std::invalid_argument("spectral bound needs 0 < p <= 1");
    if (!(s.lambda_min < 0.0)) throw std::invalid_argument("spectral bound needs at least one edge");
    const double avg = 2.0 * static_cast<double>(g.edge_count()) / static_cast<double>(g.vertex_count());
    return avg / (-s.lambda_min + (c / p) * std::sqrt(static_cast<double>(s.delta)));
}

PerturbationReport perturbation_check(const Graph& g, double p, std::uint64_t seed, const JacobiOptions& options) {
    const EdgeSubset kept = sample_subgraph(g, p, seed);
    const Graph sample = subgraph_by_mask(g, kept);
    const DenseMatrix base = adjacency_matrix(g);
    const DenseMatrix sampled = adjacency_matrix(sample);
    DenseMatrix scaled = base;
    scaled *= p;
    DenseMatrix d = sampled;
    d -= scaled;

    PerturbationReport out;
    out.p = p;
    out.seed = seed;
    out.norm_x = operator_norm(d, options);
    const int delta = max_degree(g);
    out.sigma_exact = std::sqrt(static_cast<double>(delta) * p * (1.0 - p));
    out.envelope_unit = std::sqrt(static_cast<double>(delta)) +
                        std::sqrt(std::log(static_cast<double>(std::max(g.vertex_count(), 1))));
    if (g.vertex_count() == 0) return out;
    const auto full = extreme_eigenvalues(base, options);
    const auto part = extreme_eigenvalues(sampled, options);
    out.slack_max = out.norm_x - std::abs(p * full.lambda_max - part.lambda_max);
    out.slack_min = out.norm_x - std::abs(p * full.lambda_min - part.lambda_min);
    return out;
}

DeviationTrial deviation_trial(const Graph& g, double p, std::uint64_t seed, const JacobiOptions& options) {
    const EdgeSubset kept = sample_subgraph(g, p, seed);
    DenseMatrix d = adjacency_matrix(subgraph_by_mask(g, kept));
    DenseMatrix scaled = adjacency_matrix(g);
    scaled *= p;
    d -= scaled;
    DeviationTrial out;
    out.p = p;
    out.seed = seed;
    out.norm_x = operator_norm(d, options);
    out.delta = max_degree(g);
    out.n = g.vertex_count();
    out.sigma_exact = std::sqrt(static_cast<double>(out.delta) * p * (1.0 - p));
    return out;
}

}  // namespace chromascope
