#include "rhograph/spectral.hpp"

#include <gmpxx.h>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <stdexcept>

#include "rhograph/errors.hpp"

namespace rhograph {

namespace {

struct EigenPair {
    double value = 0.0;
    std::vector<double> vector;
    long long iterations = 0;
};

// Cyclic Jacobi on a dense symmetric matrix; returns all eigenvalues and
// accumulated eigenvectors (columns of v).
struct JacobiResult {
    std::vector<double> values;
    std::vector<std::vector<double>> vectors; // vectors[i] is eigenvector i
    long long sweeps = 0;
};

JacobiResult jacobi_full(std::vector<std::vector<double>> a) {
    const int n = static_cast<int>(a.size());
    std::vector<std::vector<double>> v(n, std::vector<double>(n, 0.0));
    for (int i = 0; i < n; ++i) v[i][i] = 1.0;
    JacobiResult out;
    const int max_sweeps = 100;
    for (int sweep = 0; sweep < max_sweeps; ++sweep) {
        double off = 0.0;
        for (int p = 0; p < n; ++p)
            for (int q = p + 1; q < n; ++q) off = std::max(off, std::fabs(a[p][q]));
        if (off < 1e-14) {
            out.sweeps = sweep;
            break;
        }
        for (int p = 0; p < n; ++p) {
            for (int q = p + 1; q < n; ++q) {
                double apq = a[p][q];
                if (std::fabs(apq) < 1e-18) continue;
                double theta = (a[q][q] - a[p][p]) / (2.0 * apq);
                double t = (theta >= 0 ? 1.0 : -1.0) /
                           (std::fabs(theta) + std::sqrt(theta * theta + 1.0));
                double c = 1.0 / std::sqrt(t * t + 1.0);
                double s = t * c;
                for (int i = 0; i < n; ++i) {
                    double aip = a[i][p], aiq = a[i][q];
                    a[i][p] = c * aip - s * aiq;
                    a[i][q] = s * aip + c * aiq;
                }
                for (int i = 0; i < n; ++i) {
                    double api = a[p][i], aqi = a[q][i];
                    a[p][i] = c * api - s * aqi;
                    a[q][i] = s * api + c * aqi;
                }
                for (int i = 0; i < n; ++i) {
                    double vip = v[i][p], viq = v[i][q];
                    v[i][p] = c * vip - s * viq;
                    v[i][q] = s * vip + c * viq;
                }
            }
        }
        out.sweeps = sweep + 1;
    }
    out.values.resize(n);
    out.vectors.assign(n, std::vector<double>(n));
    for (int i = 0; i < n; ++i) {
        out.values[i] = a[i][i];
        for (int r = 0; r < n; ++r) out.vectors[i][r] = v[r][i];
    }
    return out;
}

std::vector<std::vector<double>> adjacency_matrix(const Graph& g) {
    int n = g.order();
    std::vector<std::vector<double>> a(n, std::vector<double>(n, 0.0));
    for (int v = 0; v < n; ++v)
        for (int u : g.neighbors(v)) a[v][u] = 1.0;
    return a;
}

std::vector<double> multiply(const Graph& g, std::span<const double> x) {
    std::vector<double> y(g.order(), 0.0);
    for (int v = 0; v < g.order(); ++v) {
        double s = 0.0;
        for (int u : g.neighbors(v)) s += x[u];
        y[v] = s;
    }
    return y;
}

// Largest eigenpair of a connected graph via dense Jacobi.
EigenPair top_pair_dense(const Graph& g) {
    auto jr = jacobi_full(adjacency_matrix(g));
    int best = 0;
    for (int i = 1; i < g.order(); ++i)
        if (jr.values[i] > jr.values[best]) best = i;
    EigenPair p;
    p.value = jr.values[best];
    p.vector = jr.vectors[best];
    p.iterations = jr.sweeps;
    return p;
}

// Power iteration on A + I: converges to the Perron direction even for
// bipartite graphs (whose +-rho pair makes iteration on A oscillate).
EigenPair top_pair_power(const Graph& g, const SpectralOptions& opts) {
    int n = g.order();
    std::vector<double> x(n, 1.0 / std::sqrt(static_cast<double>(n)));
    double mu = 0.0;
    for (long long it = 1; it <= opts.max_iterations; ++it) {
        std::vector<double> ax = multiply(g, x);
        std::vector<double> bx(n);
        for (int i = 0; i < n; ++i) bx[i] = ax[i] + x[i];
        double norm = 0.0;
        for (double v : bx) norm += v * v;
        norm = std::sqrt(norm);
        for (int i = 0; i < n; ++i) bx[i] /= norm;
        std::vector<double> abx = multiply(g, bx);
        mu = 0.0;
        for (int i = 0; i < n; ++i) mu += bx[i] * abx[i];
        double res = 0.0;
        for (int i = 0; i < n; ++i) res = std::max(res, std::fabs(abx[i] - mu * bx[i]));
        x = std::move(bx);
        if (res <= opts.tolerance) {
            EigenPair p;
            p.value = mu;
            p.vector = std::move(x);
            p.iterations = it;
            return p;
        }
    }
    throw ConvergenceFailure("power iteration did not converge", mu);
}

EigenPair top_pair(const Graph& g, const SpectralOptions& opts) {
    if (g.order() <= opts.dense_limit) return top_pair_dense(g);
    return top_pair_power(g, opts);
}

} // namespace

SpectralResult spectral_radius(const Graph& g, const SpectralOptions& opts) {
    if (opts.tolerance <= 0) throw std::invalid_argument("tolerance must be positive");
    SpectralResult r;
    int n = g.order();
    r.perron.assign(n, 0.0);
    if (n == 0) return r;
    if (g.size() == 0) {
        // Zero matrix: rho = 0, deterministic unit vector at vertex 0.
        r.perron[0] = 1.0;
        r.max_entry_vertex = 0;
        return r;
    }

    // Perron theory applies per component; take the best component so the
    // returned vector is entrywise nonnegative even when radii tie.
    auto comps = g.components();
    double best_rho = -1.0;
    int best_idx = -1;
    std::vector<EigenPair> pairs(comps.size());
    std::vector<std::vector<int>> verts(comps.size());
    for (std::size_t ci = 0; ci < comps.size(); ++ci) {
        verts[ci] = comps[ci].to_vector();
        if (verts[ci].size() == 1 || g.induced(comps[ci]).size() == 0) {
            pairs[ci].value = 0.0;
            continue;
        }
        pairs[ci] = top_pair(g.induced(comps[ci]), opts);
        if (pairs[ci].value > best_rho + 1e-15) {
            best_rho = pairs[ci].value;
            best_idx = static_cast<int>(ci);
        }
    }
    if (best_idx < 0) { // all components edgeless (unreachable: size()>0)
        r.perron[0] = 1.0;
        r.max_entry_vertex = 0;
        return r;
    }

    const EigenPair& p = pairs[best_idx];
    r.rho = p.value;
    r.iterations = p.iterations;
    // Orient and clamp: the Perron vector of a connected component is
    // strictly positive; numerical noise may flip sign or leave tiny
    // negatives.
    double s = 0.0;
    for (double x : p.vector) s += x;
    double sign = s >= 0 ? 1.0 : -1.0;
    for (std::size_t i = 0; i < verts[best_idx].size(); ++i) {
        double x = sign * p.vector[i];
        r.perron[verts[best_idx][i]] = x > 0 ? x : 0.0;
    }
    double mx = 0.0;
    for (double x : r.perron) mx = std::max(mx, x);
    for (double& x : r.perron) x /= mx;
    for (int v = 0; v < n; ++v) {
        if (r.perron[v] >= 1.0 - 1e-12) {
            r.max_entry_vertex = v;
            break;
        }
    }
    auto ax = multiply(g, r.perron);
    for (int v = 0; v < n; ++v)
        r.residual = std::max(r.residual, std::fabs(ax[v] - r.rho * r.perron[v]));
    return r;
}

SpectralResult spectral_radius(const Graph& g, double tol) {
    SpectralOptions opts;
    opts.tolerance = tol;
    return spectral_radius(g, opts);
}

double least_eigenvalue(const Graph& g, const SpectralOptions& opts) {
    if (opts.tolerance <= 0) throw std::invalid_argument("tolerance must be positive");
    if (g.order() == 0 || g.size() == 0) return 0.0;
    if (g.order() <= opts.dense_limit) {
        double least = std::numeric_limits<double>::infinity();
        for (const auto& comp : g.components()) {
            Graph h = g.induced(comp);
            if (h.size() == 0) {
                least = std::min(least, 0.0);
                continue;
            }
            auto jr = jacobi_full(adjacency_matrix(h));
            for (double v : jr.values) least = std::min(least, v);
        }
        return least;
    }
    // Shifted power iteration: largest eigenvalue of cI - A gives c - lambda_min.
    double c = g.max_degree() + 1.0;
    int n = g.order();
    std::vector<double> x(n, 1.0 / std::sqrt(static_cast<double>(n)));
    x[0] += 0.5; // break symmetry with eigenvectors orthogonal to e_0
    double mu = 0.0;
    for (long long it = 1; it <= opts.max_iterations; ++it) {
        auto ax = multiply(g, x);
        std::vector<double> bx(n);
        for (int i = 0; i < n; ++i) bx[i] = c * x[i] - ax[i];
        double norm = 0.0;
        for (double v : bx) norm += v * v;
        norm = std::sqrt(norm);
        for (int i = 0; i < n; ++i) bx[i] /= norm;
        auto abx = multiply(g, bx);
        std::vector<double> bbx(n);
        for (int i = 0; i < n; ++i) bbx[i] = c * bx[i] - abx[i];
        mu = 0.0;
        for (int i = 0; i < n; ++i) mu += bx[i] * bbx[i];
        double res = 0.0;
        for (int i = 0; i < n; ++i) res = std::max(res, std::fabs(bbx[i] - mu * bx[i]));
        x = std::move(bx);
        if (res <= opts.tolerance) return c - mu;
    }
    throw ConvergenceFailure("shifted power iteration did not converge", c - mu);
}

double least_eigenvalue(const Graph& g, double tol) {
    SpectralOptions opts;
    opts.tolerance = tol;
    return least_eigenvalue(g, opts);
}

bool certify_lower(const Graph& g, std::span<const double> y, double c) {
    if (static_cast<int>(y.size()) != g.order())
        throw std::invalid_argument("certificate vector length mismatch");
    bool nonzero = false;
    for (double v : y) {
        if (!std::isfinite(v) || v < 0)
            throw std::invalid_argument("certificate vector must be nonnegative and finite");
        if (v > 0) nonzero = true;
    }
    if (!nonzero) throw std::invalid_argument("certificate vector must be nonzero");
    if (!std::isfinite(c)) throw std::invalid_argument("bound must be finite");

    // Doubles are exact rationals; the comparison below is exact.
    mpq_class cq(c);
    for (int v = 0; v < g.order(); ++v) {
        mpq_class lhs(0);
        for (int u : g.neighbors(v)) lhs += mpq_class(y[u]);
        mpq_class rhs = cq * mpq_class(y[v]);
        if (lhs < rhs) return false;
    }
    return true;
}

Certificate upper_bound_local(const Graph& g) {
    if (!g.find_bipartition())
        throw std::invalid_argument("upper_bound_local requires a bipartite graph");
    Certificate cert;
    cert.kind = CertificateKind::UpperLocal;
    long long best = 0;
    int arg = -1;
    for (int v = 0; v < g.order(); ++v) {
        VertexSet n1 = g.neighbors(v);
        VertexSet n2 = g.neighborhood_at_distance(v, 2);
        long long val = g.degree(v) + g.edges_between(n1, n2);
        if (arg < 0 || val > best) {
            best = val;
            arg = v;
        }
    }
    cert.c = static_cast<double>(best);
    cert.vertex = arg;
    return cert;
}

Certificate gamma_bound_certificate(const Graph& g) {
    if (!g.connected())
        throw std::invalid_argument("gamma bound requires a connected graph");
    auto sr = spectral_radius(g);
    Certificate cert;
    cert.kind = CertificateKind::UpperGamma;
    cert.vertex = sr.max_entry_vertex;
    cert.c = static_cast<double>(g.gamma_of(sr.max_entry_vertex));
    return cert;
}

bool gamma_bound_check(const Graph& g, double tol) {
    if (tol <= 0) throw std::invalid_argument("tolerance must be positive");
    auto cert = gamma_bound_certificate(g);
    auto sr = spectral_radius(g);
    return sr.rho * sr.rho <= cert.c + tol;
}

LowerCertificate make_lower_certificate(const Graph& g, double tol) {
    auto sr = spectral_radius(g, tol);
    LowerCertificate lc;
    lc.y.assign(g.order(), 0.0);
    bool any = false;
    for (int v = 0; v < g.order(); ++v) {
        double x = sr.perron[v];
        if (x <= 0) continue;
        // Relative rounding keeps the entrywise ratios tight.
        char buf[32];
        std::snprintf(buf, sizeof buf, "%.12e", x);
        lc.y[v] = std::strtod(buf, nullptr);
        any = true;
    }
    if (!any) {
        lc.y[0] = 1.0; // edgeless graph: certify rho >= 0
        lc.c = 0.0;
        return lc;
    }
    // Exact Collatz-Wielandt lower bound from y.
    bool first = true;
    mpq_class best;
    for (int v = 0; v < g.order(); ++v) {
        if (lc.y[v] <= 0) continue;
        mpq_class num(0);
        for (int u : g.neighbors(v)) num += mpq_class(lc.y[u]);
        mpq_class ratio = num / mpq_class(lc.y[v]);
        if (first || ratio < best) {
            best = ratio;
            first = false;
        }
    }
    double c = best.get_d(); // rounds toward zero, so c <= best for c >= 0
    while (c > 0 && !certify_lower(g, lc.y, c))
        c = std::nextafter(c, -std::numeric_limits<double>::infinity());
    lc.c = c;
    return lc;
}

} // namespace rhograph
