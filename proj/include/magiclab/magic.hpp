// Copyright 2026 The Magiclab Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <array>
#include <cmath>
#include <functional>
#include <vector>

#include "magiclab/exact.hpp"
#include "magiclab/linalg.hpp"
#include "magiclab/states.hpp"
#include "magiclab/wh_group.hpp"

namespace magiclab {

/// Stabilizer Renyi entropy value: m = ln(xi) / (1 - alpha), so m = -ln(xi)
/// at alpha = 2. Note xi <= 1 only holds for alpha > 1; for alpha < 1 the
/// moment sum exceeds 1 on magic states.
struct SreValue {
    double alpha = 0;
    double xi = 0;
    double m = 0;
};

/// Fourth-moment style sum (1/D) sum_O |<psi|O|psi>|^{2 alpha} over the
/// phase-quotient WH group.
inline double xi(double alpha, const PureState& psi, const WHGroup& group) {
    if (alpha <= 0) throw InvalidAlpha(alpha);
    if (group.total_dim() != psi.dim) throw DimMismatch(group.total_dim(), psi.dim);
    double acc = 0;
    for (const auto& op : group.operators) {
        const double p = std::norm(expectation(op, psi));
        acc += (alpha == 2.0) ? p * p : std::pow(p, alpha);
    }
    return acc / group.total_dim();
}

inline SreValue sre(double alpha, const PureState& psi, const WHGroup& group) {
    if (alpha == 1.0) throw InvalidAlpha(alpha);
    const double x = xi(alpha, psi, group);
    return SreValue{alpha, x, std::log(x) / (1.0 - alpha)};
}

/// Bloch-sphere state c1 = cos(theta/2), c2 = sin(theta/2) e^{i phi}.
inline PureState bloch_state(double theta, double phi) {
    return PureState{2, {cplx{std::cos(theta / 2), 0.0},
                         std::polar(std::sin(theta / 2), phi)}};
}

/// Closed-form Xi_2 for a single qubit in Bloch parameters.
inline double xi2_closed_1q(double theta, double phi) {
    const double s = std::sin(theta);
    return (8 * s * s * s * s * std::cos(4 * phi) + 4 * std::cos(2 * theta) +
            7 * std::cos(4 * theta) + 53) / 64.0;
}

/// Closed-form Xi_2 for two qubits in the hypersphere parameterization
/// c1 = sin t1 sin t2 e^{i p1}, c2 = sin t1 cos t2 e^{i p2},
/// c3 = cos t1 sin t3 e^{i p3}, c4 = cos t1 cos t3.
inline double xi2_closed_2q(double t1, double t2, double t3,
                            double p1, double p2, double p3) {
    using std::cos;
    using std::sin;
    auto sq = [](double v) { return v * v; };
    auto p4 = [&](double v) { return sq(sq(v)); };
    auto p8 = [&](double v) { return sq(p4(v)); };

    const double term1 =
        (3.0 / 32.0) * p4(sin(2 * t1)) * sq(sin(2 * t2)) * sq(sin(2 * t3)) *
        (2 * sq(sin(p3)) * sq(sin(p2 - p1)) + 2 * sq(sin(p2)) * sq(sin(p3 - p1)) +
         2 * sq(sin(p1)) * sq(sin(p2 - p3)) + 1);
    const double term2 =
        2 * p4(sin(t1)) * p4(cos(t1)) *
        (24 * sq(sin(t2)) * sq(cos(t2)) * sq(sin(t3)) * sq(cos(t3)) *
             (sq(cos(p3)) * sq(cos(p2 - p1)) + sq(cos(p2)) * sq(cos(p3 - p1)) +
              sq(cos(p1)) * sq(cos(p2 - p3))) +
         p4(cos(t2)) * (p4(sin(t3)) * (cos(4 * p2 - 4 * p3) + 6) +
                        p4(cos(t3)) * (cos(4 * p2) + 6)) +
         p4(sin(t2)) * (p4(sin(t3)) * (cos(4 * p3 - 4 * p1) + 6) +
                        p4(cos(t3)) * (cos(4 * p1) + 6)));
    const double term3 =
        2 * p8(sin(t1)) * p4(sin(t2)) * p4(cos(t2)) * (cos(4 * p2 - 4 * p1) + 6);
    const double term4 = p8(sin(t1)) * p8(sin(t2)) + p8(sin(t1)) * p8(cos(t2));
    const double term5 =
        p8(cos(t1)) * (2 * p4(sin(t3)) * p4(cos(t3)) * (cos(4 * p3) + 6) +
                       p8(sin(t3)) + p8(cos(t3)));
    return term1 + term2 + term3 + term4 + term5;
}

inline double xi2_closed_2q(const std::array<double, 6>& x) {
    return xi2_closed_2q(x[0], x[1], x[2], x[3], x[4], x[5]);
}

// ---- Finite differences ----

constexpr double kFdStep = 1e-5;

/// Central finite-difference gradient, step h (default 1e-5).
inline std::vector<double> fd_gradient(const std::function<double(const std::vector<double>&)>& f,
                                       std::vector<double> x, double h = kFdStep) {
    std::vector<double> g(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) {
        const double xi0 = x[i];
        x[i] = xi0 + h;
        const double fp = f(x);
        x[i] = xi0 - h;
        const double fm = f(x);
        x[i] = xi0;
        g[i] = (fp - fm) / (2 * h);
    }
    return g;
}

/// Symmetrized central finite-difference Hessian (row major).
inline std::vector<double> fd_hessian(const std::function<double(const std::vector<double>&)>& f,
                                      std::vector<double> x, double h = kFdStep) {
    const std::size_t n = x.size();
    std::vector<double> hess(n * n);
    auto eval = [&](std::size_t i, double di, std::size_t j, double dj) {
        const double xi0 = x[i], xj0 = x[j];
        x[i] += di;
        x[j] += dj;
        const double v = f(x);
        x[i] = xi0;
        x[j] = xj0;
        return v;
    };
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i; j < n; ++j) {
            double v;
            if (i == j) {
                const double f0 = f(x);
                v = (eval(i, h, j, 0) + eval(i, -h, j, 0) - 2 * f0) / (h * h);
            } else {
                v = (eval(i, h, j, h) - eval(i, h, j, -h) - eval(i, -h, j, h) +
                     eval(i, -h, j, -h)) / (4 * h * h);
            }
            hess[i * n + j] = hess[j * n + i] = v;
        }
    return hess;
}

inline double norm2(const std::vector<double>& v) {
    double s = 0;
    for (double x : v) s += x * x;
    return std::sqrt(s);
}

/// Gradient of the two-qubit closed form at the given 6 parameters.
inline std::array<double, 6> gradient_xi2(const std::array<double, 6>& params) {
    auto f = [](const std::vector<double>& x) {
        return xi2_closed_2q(x[0], x[1], x[2], x[3], x[4], x[5]);
    };
    const auto g = fd_gradient(f, {params.begin(), params.end()});
    std::array<double, 6> out{};
    std::copy(g.begin(), g.end(), out.begin());
    return out;
}

struct HessianCertificate {
    bool positive_definite = false;
    std::vector<double> eigenvalues;  // ascending
    double gradient_norm = 0;
};

constexpr double kStationaryGradTol = 1e-7;
constexpr double kHessianEigenTol = 1e-6;

/// Finite-difference Hessian certificate of the two-qubit closed form.
/// Requires a stationary point (gradient norm below 1e-7).
inline HessianCertificate hessian_positive_definite(const std::array<double, 6>& params) {
    auto f = [](const std::vector<double>& x) {
        return xi2_closed_2q(x[0], x[1], x[2], x[3], x[4], x[5]);
    };
    std::vector<double> x(params.begin(), params.end());
    HessianCertificate cert;
    cert.gradient_norm = norm2(fd_gradient(f, x));
    if (cert.gradient_norm >= kStationaryGradTol) throw NotAStationaryPoint(cert.gradient_norm);
    cert.eigenvalues = symmetric_eigenvalues(fd_hessian(f, x), 6);
    cert.positive_definite = cert.eigenvalues.front() > kHessianEigenTol;
    return cert;
}

// ---- Analytic bounds ----

/// SIC-saturated upper bound on M_alpha in dimension d.
inline double sic_bound(double alpha, int d) {
    if (d < 2) throw InvalidDim(d);
    if (alpha == 1.0) throw InvalidAlpha(alpha);
    return std::log((1 + (d - 1) * std::pow(d + 1.0, 1 - alpha)) / d) / (1 - alpha);
}

/// M_alpha of a WH MUB fiducial state in dimension d.
inline double mub_bound(double alpha, int d) {
    if (d < 2) throw InvalidDim(d);
    if (alpha == 1.0) throw InvalidAlpha(alpha);
    return std::log((1 + (d - 1) * std::pow(static_cast<double>(d), 1 - alpha)) / d) / (1 - alpha);
}

// ---- Exact path ----

/// Xi_2 of an n-qubit exact state as an exact rational. Every displacement
/// representative for qubit factors is a Gaussian-integer matrix, so each
/// |<O>|^4 is an integer over 2^{4k}.
inline mpq_class xi2_exact(const ExactState& psi) {
    int n_qubits = 0;
    for (int d = psi.dim(); d > 1; d /= 2) {
        if (d % 2 != 0) throw InvalidDim(psi.dim());
        ++n_qubits;
    }
    std::vector<std::vector<std::pair<int, int>>> tuples{{}};
    for (int q = 0; q < n_qubits; ++q) {
        std::vector<std::vector<std::pair<int, int>>> next;
        for (const auto& t : tuples)
            for (int a1 = 0; a1 < 2; ++a1)
                for (int a2 = 0; a2 < 2; ++a2) {
                    auto tt = t;
                    tt.emplace_back(a1, a2);
                    next.push_back(std::move(tt));
                }
        tuples = std::move(next);
    }
    mpz_class num_sum = 0;
    for (const auto& t : tuples) {
        auto [g, two_k] = exact_wh_expectation(psi, t);
        const mpz_class n2 = g.norm2();  // |<O>|^2 * 2^{2k}
        num_sum += n2 * n2;
    }
    mpz_class denom = psi.dim();
    for (int i = 0; i < 4 * psi.root2_exp(); ++i) denom *= 2;
    mpq_class q(num_sum, denom);
    q.canonicalize();
    return q;
}

}  // namespace magiclab
