#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <limits>
#include <random>
#include <span>
#include <sstream>
#include <vector>

#include "tmdnp/errors.hpp"

namespace tmdnp::num {

// ---------------------------------------------------------------------------
// Linear algebra
// ---------------------------------------------------------------------------

// Thomas algorithm. lower/upper have size n-1, diag and rhs size n.
// Requires a diagonally dominant (here: always nonsingular) system.
inline std::vector<double> solve_tridiagonal(std::span<const double> lower,
                                             std::span<const double> diag,
                                             std::span<const double> upper,
                                             std::span<const double> rhs) {
    const std::size_t n = diag.size();
    if (n == 0 || rhs.size() != n || lower.size() + 1 != n || upper.size() + 1 != n)
        throw InvalidArgumentError("solve_tridiagonal: inconsistent sizes");
    std::vector<double> c(n - 1), d(n);
    double beta = diag[0];
    if (beta == 0.0) throw NumericError("solve_tridiagonal: zero pivot");
    if (n > 1) c[0] = upper[0] / beta;
    d[0] = rhs[0] / beta;
    for (std::size_t i = 1; i < n; ++i) {
        beta = diag[i] - lower[i - 1] * c[i - 1];
        if (beta == 0.0) throw NumericError("solve_tridiagonal: zero pivot");
        if (i < n - 1) c[i] = upper[i] / beta;
        d[i] = (rhs[i] - lower[i - 1] * d[i - 1]) / beta;
    }
    for (std::size_t i = n - 1; i-- > 0;) d[i] -= c[i] * d[i + 1];
    return d;
}

// Gaussian elimination with partial pivoting for the small dense systems of
// the fitters (<= 7 unknowns). Matrix is row-major n*n, modified in place.
inline std::vector<double> solve_dense(std::vector<double> a, std::vector<double> b) {
    const std::size_t n = b.size();
    if (a.size() != n * n) throw InvalidArgumentError("solve_dense: inconsistent sizes");
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        for (std::size_t r = col + 1; r < n; ++r)
            if (std::abs(a[r * n + col]) > std::abs(a[pivot * n + col])) pivot = r;
        if (a[pivot * n + col] == 0.0) throw NumericError("solve_dense: singular matrix");
        if (pivot != col) {
            for (std::size_t k = 0; k < n; ++k) std::swap(a[col * n + k], a[pivot * n + k]);
            std::swap(b[col], b[pivot]);
        }
        for (std::size_t r = col + 1; r < n; ++r) {
            const double f = a[r * n + col] / a[col * n + col];
            if (f == 0.0) continue;
            for (std::size_t k = col; k < n; ++k) a[r * n + k] -= f * a[col * n + k];
            b[r] -= f * b[col];
        }
    }
    std::vector<double> x(n);
    for (std::size_t i = n; i-- > 0;) {
        double s = b[i];
        for (std::size_t k = i + 1; k < n; ++k) s -= a[i * n + k] * x[k];
        x[i] = s / a[i * n + i];
    }
    return x;
}

// Inverse of a small dense matrix via column-wise solves.
inline std::vector<double> invert_dense(const std::vector<double>& a, std::size_t n) {
    std::vector<double> inv(n * n);
    for (std::size_t col = 0; col < n; ++col) {
        std::vector<double> e(n, 0.0);
        e[col] = 1.0;
        std::vector<double> x = solve_dense(a, std::move(e));
        for (std::size_t r = 0; r < n; ++r) inv[r * n + col] = x[r];
    }
    return inv;
}

// ---------------------------------------------------------------------------
// Polynomial least squares
// ---------------------------------------------------------------------------

// Fits y ~ poly(degree) over the points where mask is true, in a shifted and
// scaled abscissa for conditioning. Returns fitted values at all points.
inline std::vector<double> polyfit_eval(std::span<const double> x, std::span<const double> y,
                                        int degree, std::span<const bool> mask) {
    if (degree < 0) throw InvalidArgumentError("polyfit: negative degree");
    const std::size_t n = x.size();
    if (y.size() != n || mask.size() != n) throw InvalidArgumentError("polyfit: size mismatch");
    const auto p = static_cast<std::size_t>(degree) + 1;

    double lo = std::numeric_limits<double>::infinity();
    double hi = -std::numeric_limits<double>::infinity();
    std::size_t used = 0;
    for (std::size_t i = 0; i < n; ++i) {
        if (!mask[i]) continue;
        lo = std::min(lo, x[i]);
        hi = std::max(hi, x[i]);
        ++used;
    }
    if (used < p)
        throw UnderdeterminedError("polyfit: fewer free points than coefficients");
    const double mid = 0.5 * (lo + hi);
    const double scale = hi > lo ? 2.0 / (hi - lo) : 1.0;

    std::vector<double> ata(p * p, 0.0), atb(p, 0.0), powers(p);
    for (std::size_t i = 0; i < n; ++i) {
        if (!mask[i]) continue;
        const double t = (x[i] - mid) * scale;
        powers[0] = 1.0;
        for (std::size_t k = 1; k < p; ++k) powers[k] = powers[k - 1] * t;
        for (std::size_t r = 0; r < p; ++r) {
            atb[r] += powers[r] * y[i];
            for (std::size_t c = 0; c < p; ++c) ata[r * p + c] += powers[r] * powers[c];
        }
    }
    const std::vector<double> coeff = solve_dense(std::move(ata), std::move(atb));

    std::vector<double> fit(n);
    for (std::size_t i = 0; i < n; ++i) {
        const double t = (x[i] - mid) * scale;
        double v = 0.0;
        for (std::size_t k = p; k-- > 0;) v = v * t + coeff[k];
        fit[i] = v;
    }
    return fit;
}

// ---------------------------------------------------------------------------
// Levenberg-Marquardt
// ---------------------------------------------------------------------------

struct LmOptions {
    int max_iterations = 200;
    double ftol = 1e-14;      // relative SSR improvement considered converged
    double lambda0 = 1e-3;
    double lambda_max = 1e12;
};

struct LmResult {
    std::vector<double> params;
    std::vector<double> std_errors;  // from residual covariance
    double ssr = 0.0;
    int iterations = 0;
};

// Minimizes sum_i (y_i - f(params, x_i))^2 with a numeric Jacobian.
// Throws FitFailureError with diagnostics when the damping saturates without
// any improving step.
inline LmResult levenberg_marquardt(const std::function<double(std::span<const double>, double)>& model,
                                    std::span<const double> x, std::span<const double> y,
                                    std::vector<double> params, const LmOptions& opt = {}) {
    const std::size_t m = x.size();
    const std::size_t p = params.size();
    if (y.size() != m) throw InvalidArgumentError("levenberg_marquardt: size mismatch");
    if (m < p) throw UnderdeterminedError("levenberg_marquardt: fewer points than parameters");

    auto ssr_of = [&](std::span<const double> q) {
        double s = 0.0;
        for (std::size_t i = 0; i < m; ++i) {
            const double r = y[i] - model(q, x[i]);
            s += r * r;
        }
        return s;
    };

    double ssr = ssr_of(params);
    double lambda = opt.lambda0;
    int iter = 0;
    std::vector<double> jac(m * p), resid(m), trial(p);

    for (; iter < opt.max_iterations; ++iter) {
        for (std::size_t i = 0; i < m; ++i) resid[i] = y[i] - model(params, x[i]);
        for (std::size_t k = 0; k < p; ++k) {
            const double h = std::max(1e-8, 1e-8 * std::abs(params[k]));
            std::vector<double> shifted(params.begin(), params.end());
            shifted[k] += h;
            for (std::size_t i = 0; i < m; ++i)
                jac[i * p + k] = (model(shifted, x[i]) - (y[i] - resid[i])) / h;
        }

        std::vector<double> jtj(p * p, 0.0), jtr(p, 0.0);
        for (std::size_t i = 0; i < m; ++i)
            for (std::size_t r = 0; r < p; ++r) {
                jtr[r] += jac[i * p + r] * resid[i];
                for (std::size_t c = 0; c < p; ++c) jtj[r * p + c] += jac[i * p + r] * jac[i * p + c];
            }

        bool improved = false;
        while (lambda <= opt.lambda_max) {
            std::vector<double> damped = jtj;
            for (std::size_t k = 0; k < p; ++k)
                damped[k * p + k] += lambda * std::max(jtj[k * p + k], 1e-30);
            std::vector<double> step;
            try {
                step = solve_dense(std::move(damped), jtr);
            } catch (const NumericError&) {
                lambda *= 10.0;
                continue;
            }
            for (std::size_t k = 0; k < p; ++k) trial[k] = params[k] + step[k];
            const double trial_ssr = ssr_of(trial);
            if (std::isfinite(trial_ssr) && trial_ssr < ssr) {
                const double rel = (ssr - trial_ssr) / std::max(ssr, 1e-300);
                params.assign(trial.begin(), trial.end());
                ssr = trial_ssr;
                lambda = std::max(lambda * 0.25, 1e-12);
                improved = true;
                if (rel < opt.ftol) iter = opt.max_iterations;  // converged
                break;
            }
            lambda *= 10.0;
        }
        if (!improved) {
            if (ssr == 0.0) break;  // exact fit already
            if (lambda > opt.lambda_max) {
                // No improving direction: either converged to machine level or stuck.
                break;
            }
        }
    }

    // Covariance from the undamped normal matrix at the optimum.
    std::vector<double> jtj(p * p, 0.0);
    {
        for (std::size_t k = 0; k < p; ++k) {
            const double h = std::max(1e-8, 1e-8 * std::abs(params[k]));
            std::vector<double> shifted(params.begin(), params.end());
            shifted[k] += h;
            for (std::size_t i = 0; i < m; ++i)
                jac[i * p + k] = (model(shifted, x[i]) - model(params, x[i])) / h;
        }
        for (std::size_t i = 0; i < m; ++i)
            for (std::size_t r = 0; r < p; ++r)
                for (std::size_t c = 0; c < p; ++c) jtj[r * p + c] += jac[i * p + r] * jac[i * p + c];
    }
    LmResult out;
    out.params = std::move(params);
    out.ssr = ssr;
    out.iterations = iter;
    out.std_errors.assign(p, 0.0);
    if (m > p) {
        const double sigma2 = ssr / static_cast<double>(m - p);
        try {
            const std::vector<double> cov = invert_dense(jtj, p);
            for (std::size_t k = 0; k < p; ++k)
                out.std_errors[k] = std::sqrt(std::max(0.0, sigma2 * cov[k * p + k]));
        } catch (const NumericError&) {
            std::ostringstream msg;
            msg << "fit failed: singular normal matrix after " << iter
                << " iterations, ssr=" << ssr;
            throw FitFailureError(msg.str());
        }
    }
    return out;
}

// ---------------------------------------------------------------------------
// FFT
// ---------------------------------------------------------------------------

inline std::size_t next_pow2(std::size_t n) {
    std::size_t p = 1;
    while (p < n) p <<= 1;
    return p;
}

// In-place iterative radix-2 forward DFT, X_k = sum_j x_j exp(-2*pi*i*j*k/N).
inline void fft_pow2(std::vector<std::complex<double>>& a) {
    const std::size_t n = a.size();
    if (n == 0 || (n & (n - 1)) != 0)
        throw InvalidArgumentError("fft_pow2: size must be a power of two");
    for (std::size_t i = 1, j = 0; i < n; ++i) {
        std::size_t bit = n >> 1;
        for (; j & bit; bit >>= 1) j ^= bit;
        j ^= bit;
        if (i < j) std::swap(a[i], a[j]);
    }
    for (std::size_t len = 2; len <= n; len <<= 1) {
        const double ang = -2.0 * std::numbers::pi / static_cast<double>(len);
        const std::complex<double> wlen(std::cos(ang), std::sin(ang));
        for (std::size_t i = 0; i < n; i += len) {
            std::complex<double> w(1.0, 0.0);
            for (std::size_t k = 0; k < len / 2; ++k) {
                const std::complex<double> u = a[i + k];
                const std::complex<double> v = a[i + k + len / 2] * w;
                a[i + k] = u + v;
                a[i + k + len / 2] = u - v;
                w *= wlen;
            }
        }
    }
}

// ---------------------------------------------------------------------------
// Small helpers
// ---------------------------------------------------------------------------

inline double interp_linear(std::span<const double> x, std::span<const double> y, double xq) {
    if (x.size() < 2 || x.size() != y.size())
        throw InvalidArgumentError("interp_linear: need two matching samples");
    if (xq <= x.front()) return y.front();
    if (xq >= x.back()) return y.back();
    const auto it = std::upper_bound(x.begin(), x.end(), xq);
    const std::size_t hi = static_cast<std::size_t>(it - x.begin());
    const std::size_t lo = hi - 1;
    const double t = (xq - x[lo]) / (x[hi] - x[lo]);
    return y[lo] + t * (y[hi] - y[lo]);
}

inline double trapezoid(std::span<const double> x, std::span<const double> y) {
    double s = 0.0;
    for (std::size_t i = 1; i < x.size(); ++i)
        s += 0.5 * (y[i] + y[i - 1]) * (x[i] - x[i - 1]);
    return s;
}

// Box-Muller gaussian deviates; keeps synthetic data identical across
// standard library implementations.
class GaussianSampler {
public:
    explicit GaussianSampler(std::uint64_t seed) : rng_(seed) {}

    double operator()() {
        if (have_spare_) {
            have_spare_ = false;
            return spare_;
        }
        double u1 = 0.0;
        do {
            u1 = uniform();
        } while (u1 <= 0.0);
        const double u2 = uniform();
        const double r = std::sqrt(-2.0 * std::log(u1));
        const double phi = 2.0 * std::numbers::pi * u2;
        spare_ = r * std::sin(phi);
        have_spare_ = true;
        return r * std::cos(phi);
    }

    double uniform() {
        return static_cast<double>(rng_()) * 0x1.0p-64;
    }

private:
    std::mt19937_64 rng_;
    bool have_spare_ = false;
    double spare_ = 0.0;
};

}  // namespace tmdnp::num
