#pragma once

#include <cmath>
#include <complex>
#include <vector>

#include "sea/form.hpp"
#include "sea/univariate.hpp"

namespace sea::testing {

using Grid = std::vector<std::vector<double>>;  // grid[i][j]: coefficient of X^i Z^j

inline Grid to_grid(const BinaryForm& f) {
    const int d = f.degree();
    Grid g(static_cast<std::size_t>(d + 1), std::vector<double>(static_cast<std::size_t>(d + 1), 0.0));
    for (int i = 0; i <= d; ++i) g[i][d - i] = f[i].approx_real();
    return g;
}

inline Grid grid_diff(const Grid& g, bool in_x) {
    Grid out(g.size(), std::vector<double>(g.size(), 0.0));
    for (std::size_t i = 0; i < g.size(); ++i) {
        for (std::size_t j = 0; j < g.size(); ++j) {
            if (in_x && i > 0) out[i - 1][j] += static_cast<double>(i) * g[i][j];
            if (!in_x && j > 0) out[i][j - 1] += static_cast<double>(j) * g[i][j];
        }
    }
    return out;
}

inline Grid grid_mul(const Grid& a, const Grid& b) {
    const std::size_t n = a.size() + b.size() - 1;
    Grid out(n, std::vector<double>(n, 0.0));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < a.size(); ++j)
            for (std::size_t k = 0; k < b.size(); ++k)
                for (std::size_t l = 0; l < b.size(); ++l) out[i + k][j + l] += a[i][j] * b[k][l];
    return out;
}

/// Floating-point transvectant on a dense (X, Z) grid, written independently of
/// the exact kernel. Returns ascending coefficients of X.
inline std::vector<double> transvect_double(const BinaryForm& f, const BinaryForm& g, int r) {
    const int n = f.degree();
    const int m = g.degree();
    const int e = n + m - 2 * r;
    std::vector<double> out(static_cast<std::size_t>(e + 1), 0.0);
    double binom = 1.0;
    for (int k = 0; k <= r; ++k) {
        Grid df = to_grid(f);
        for (int s = 0; s < r - k; ++s) df = grid_diff(df, true);
        for (int s = 0; s < k; ++s) df = grid_diff(df, false);
        Grid dg = to_grid(g);
        for (int s = 0; s < k; ++s) dg = grid_diff(dg, true);
        for (int s = 0; s < r - k; ++s) dg = grid_diff(dg, false);
        const Grid p = grid_mul(df, dg);
        const double sign = k % 2 == 0 ? 1.0 : -1.0;
        for (int i = 0; i <= e; ++i) {
            if (static_cast<std::size_t>(i) < p.size() && static_cast<std::size_t>(e - i) < p.size()) {
                out[i] += sign * binom * p[i][e - i];
            }
        }
        binom = binom * (r - k) / (k + 1);
    }
    double scale = std::tgamma(n - r + 1) * std::tgamma(m - r + 1) / (std::tgamma(n + 1) * std::tgamma(m + 1));
    for (double& c : out) c *= scale;
    return out;
}

/// All complex roots by Durand-Kerner iteration.
inline std::vector<std::complex<double>> roots_durand_kerner(const UnivariatePoly& p) {
    using C = std::complex<double>;
    const int d = p.degree();
    std::vector<C> a;
    const double lead = p.leading().approx_real();
    for (int i = 0; i <= d; ++i) a.emplace_back(p.coeff(i).approx_real() / lead, p.coeff(i).approx_imag() / lead);
    auto eval = [&](C z) {
        C v = 0;
        for (int i = d; i >= 0; --i) v = v * z + a[i];
        return v;
    };
    std::vector<C> z;
    for (int i = 0; i < d; ++i) z.push_back(std::pow(C(0.4, 0.9), i));
    for (int it = 0; it < 2000; ++it) {
        double delta = 0;
        for (int i = 0; i < d; ++i) {
            C den = 1;
            for (int j = 0; j < d; ++j) {
                if (j != i) den *= z[i] - z[j];
            }
            const C step = eval(z[i]) / den;
            z[i] -= step;
            delta = std::max(delta, std::abs(step));
        }
        if (delta < 1e-14) break;
    }
    return z;
}

/// res(p, q) = lc(p)^deg q * prod q(root of p).
inline std::complex<double> resultant_by_roots(const UnivariatePoly& p, const UnivariatePoly& q) {
    std::complex<double> out = std::pow(std::complex<double>(p.leading().approx_real(), p.leading().approx_imag()),
                                        q.degree());
    for (auto root : roots_durand_kerner(p)) {
        std::complex<double> v = 0;
        for (int i = q.degree(); i >= 0; --i) {
            v = v * root + std::complex<double>(q.coeff(i).approx_real(), q.coeff(i).approx_imag());
        }
        out *= v;
    }
    return out;
}

inline bool close(double a, double b, double rel = 1e-7) {
    return std::abs(a - b) <= rel * std::max({1.0, std::abs(a), std::abs(b)});
}

}  // namespace sea::testing
