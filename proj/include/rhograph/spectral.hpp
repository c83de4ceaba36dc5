#ifndef RHOGRAPH_SPECTRAL_HPP
#define RHOGRAPH_SPECTRAL_HPP

#include <span>
#include <vector>

#include "rhograph/graph.hpp"

namespace rhograph {

/// Spectral radius estimate with its Perron vector, normalized so the
/// maximum entry equals 1 (ties broken toward the smallest vertex index,
/// which is reported as max_entry_vertex).
struct SpectralResult {
    double rho = 0.0;
    std::vector<double> perron;
    double residual = 0.0; // ||A x - rho x||_inf
    long long iterations = 0;
    int max_entry_vertex = -1;
};

struct SpectralOptions {
    double tolerance = 1e-10;
    int dense_limit = 512;          // full Jacobi solve up to this order
    long long max_iterations = 500000; // power-iteration cap above it
};

SpectralResult spectral_radius(const Graph& g, const SpectralOptions& opts);
SpectralResult spectral_radius(const Graph& g, double tol = 1e-10);

double least_eigenvalue(const Graph& g, const SpectralOptions& opts);
double least_eigenvalue(const Graph& g, double tol = 1e-10);

enum class CertificateKind { Lower, UpperLocal, UpperGamma };

/// Rigorous one-sided bound witness. Lower: rho >= c certified by the
/// entrywise inequality A y >= c y. Upper kinds certify rho^2 <= c with
/// integer c recomputable from the graph.
struct Certificate {
    CertificateKind kind;
    double c = 0.0;
    std::vector<double> y; // lower witness vector
    int vertex = -1;       // upper-local argmax v / upper-gamma z
};

/// Exact entrywise check of (A y)_v >= c y_v for all v, in rational
/// arithmetic (doubles are treated as exact rationals). A true result
/// proves rho(g) >= c. Throws invalid_argument on a negative, nonfinite
/// or all-zero y.
bool certify_lower(const Graph& g, std::span<const double> y, double c);

/// c = max_v { d(v) + e(N_1(v), N_2(v)) } with rho^2 <= c; requires a
/// bipartite input (the bound drops the 2 e(N_1(v)) term).
Certificate upper_bound_local(const Graph& g);

/// c = gamma(z) at the max-Perron vertex z; rho^2 <= c for connected g.
Certificate gamma_bound_certificate(const Graph& g);
bool gamma_bound_check(const Graph& g, double tol = 1e-10);

/// Lower-bound certificate built from the computed Perron vector: y is the
/// vector rounded to 12 significant digits, c the exact Collatz-Wielandt
/// minimum min_v (A y)_v / y_v rounded down, so certify_lower(g, y, c)
/// holds by construction.
struct LowerCertificate {
    std::vector<double> y;
    double c = 0.0;
};
LowerCertificate make_lower_certificate(const Graph& g, double tol = 1e-10);

} // namespace rhograph

#endif
