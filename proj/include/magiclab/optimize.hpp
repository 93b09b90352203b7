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

#include <algorithm>
#include <array>
#include <cmath>
#include <functional>
#include <limits>
#include <numbers>
#include <span>
#include <string>
#include <vector>

#include "magiclab/exact.hpp"
#include "magiclab/magic.hpp"
#include "magiclab/states.hpp"

namespace magiclab {

/// Hypersphere parameters of a dim-4 pure state with the phase of the last
/// amplitude fixed to 0: thetas in [0, pi/2], phis in [0, 2 pi).
struct ParamPoint {
    std::array<double, 3> thetas{};
    std::array<double, 3> phis{};
};

inline PureState param_to_state_unchecked(const std::array<double, 6>& x) {
    const double t1 = x[0], t2 = x[1], t3 = x[2];
    return PureState{4,
                     {std::polar(std::sin(t1) * std::sin(t2), x[3]),
                      std::polar(std::sin(t1) * std::cos(t2), x[4]),
                      std::polar(std::cos(t1) * std::sin(t3), x[5]),
                      cplx{std::cos(t1) * std::cos(t3), 0.0}}};
}

/// c1 = sin t1 sin t2 e^{i p1}, c2 = sin t1 cos t2 e^{i p2},
/// c3 = cos t1 sin t3 e^{i p3}, c4 = cos t1 cos t3.
inline PureState param_to_state(const ParamPoint& p) {
    for (double t : p.thetas)
        if (t < 0 || t > std::numbers::pi / 2 + 1e-12)
            throw OutOfRange("theta " + std::to_string(t) + " outside [0, pi/2]");
    for (double ph : p.phis)
        if (ph < 0 || ph >= 2 * std::numbers::pi + 1e-12)
            throw OutOfRange("phi " + std::to_string(ph) + " outside [0, 2 pi)");
    return param_to_state_unchecked(
        {p.thetas[0], p.thetas[1], p.thetas[2], p.phis[0], p.phis[1], p.phis[2]});
}

/// A search objective: smooth periodic function of n parameters plus the map
/// to the state it parameterizes and the wrap back into the canonical box.
/// from_state inverts the parameterization (for Haar-distributed starts).
struct Objective {
    std::string name;
    std::size_t n_params = 0;
    std::vector<double> lower, upper;  // sampling box for starts
    std::function<double(const std::vector<double>&)> value;
    std::function<PureState(const std::vector<double>&)> state;
    std::function<void(std::vector<double>&)> wrap;
    std::function<std::vector<double>(const PureState&)> from_state;
};

namespace detail {

inline double wrap_periodic(double x, double period) {
    x = std::fmod(x, period);
    if (x < 0) x += period;
    return x;
}

/// Reflects into [0, half] using the objective's evenness and periodicity.
inline double wrap_reflect(double x, double half) {
    x = wrap_periodic(x, 2 * half);
    return x > half ? 2 * half - x : x;
}

}  // namespace detail

/// Two-qubit Xi_2 in the 6-parameter closed form.
inline Objective two_qubit_objective() {
    Objective o;
    o.name = "two-qubit";
    o.n_params = 6;
    const double pi = std::numbers::pi;
    o.lower = {0, 0, 0, 0, 0, 0};
    o.upper = {pi / 2, pi / 2, pi / 2, 2 * pi, 2 * pi, 2 * pi};
    o.value = [](const std::vector<double>& x) {
        return xi2_closed_2q(x[0], x[1], x[2], x[3], x[4], x[5]);
    };
    o.state = [](const std::vector<double>& x) {
        return param_to_state_unchecked({x[0], x[1], x[2], x[3], x[4], x[5]});
    };
    o.wrap = [pi](std::vector<double>& x) {
        for (int i = 0; i < 3; ++i) x[i] = detail::wrap_reflect(x[i], pi / 2);
        for (int i = 3; i < 6; ++i) x[i] = detail::wrap_periodic(x[i], 2 * pi);
    };
    o.from_state = [pi](const PureState& psi) {
        Vec c = psi.amps;
        if (std::abs(c[3]) > 1e-14) {
            const cplx ph = std::conj(c[3]) / std::abs(c[3]);
            for (auto& z : c) z *= ph;
        }
        const double upper = std::hypot(std::abs(c[0]), std::abs(c[1]));
        const double lower = std::hypot(std::abs(c[2]), std::abs(c[3]));
        std::vector<double> x{std::atan2(upper, lower),
                              std::atan2(std::abs(c[0]), std::abs(c[1])),
                              std::atan2(std::abs(c[2]), std::abs(c[3])),
                              std::arg(c[0]), std::arg(c[1]), std::arg(c[2])};
        for (int i = 3; i < 6; ++i) x[i] = detail::wrap_periodic(x[i], 2 * pi);
        return x;
    };
    return o;
}

/// Single-qubit Xi_2 in Bloch parameters (theta in [0, pi], phi in [0, 2 pi)).
inline Objective one_qubit_objective() {
    Objective o;
    o.name = "one-qubit";
    o.n_params = 2;
    const double pi = std::numbers::pi;
    o.lower = {0, 0};
    o.upper = {pi, 2 * pi};
    o.value = [](const std::vector<double>& x) { return xi2_closed_1q(x[0], x[1]); };
    o.state = [](const std::vector<double>& x) { return bloch_state(x[0], x[1]); };
    o.wrap = [pi](std::vector<double>& x) {
        x[0] = detail::wrap_reflect(x[0], pi);
        x[1] = detail::wrap_periodic(x[1], 2 * pi);
    };
    o.from_state = [pi](const PureState& psi) {
        Vec c = psi.amps;
        if (std::abs(c[0]) > 1e-14) {
            const cplx ph = std::conj(c[0]) / std::abs(c[0]);
            for (auto& z : c) z *= ph;
        }
        return std::vector<double>{2 * std::atan2(std::abs(c[1]), std::abs(c[0])),
                                   detail::wrap_periodic(std::arg(c[1]), 2 * pi)};
    };
    return o;
}

/// Xi_2 of a single d=4 qudit by direct summation over the 16 displacement
/// operators: <D_{a1 a2}> = (phase) sum_k conj(c_{k+a1}) i^{a2 k} c_k, and
/// only the modulus enters.
inline double xi2_qudit4_direct(const std::array<cplx, 4>& c) {
    static const cplx ipow[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
    double acc = 0;
    for (int a1 = 0; a1 < 4; ++a1)
        for (int a2 = 0; a2 < 4; ++a2) {
            cplx s{};
            for (int k = 0; k < 4; ++k)
                s += std::conj(c[(k + a1) & 3]) * ipow[(a2 * k) & 3] * c[k];
            const double p = std::norm(s);
            acc += p * p;
        }
    return acc / 4.0;
}

inline Objective qudit4_objective() {
    Objective o = two_qubit_objective();
    o.name = "qudit-d4";
    o.value = [](const std::vector<double>& x) {
        const PureState s =
            param_to_state_unchecked({x[0], x[1], x[2], x[3], x[4], x[5]});
        return xi2_qudit4_direct({s.amps[0], s.amps[1], s.amps[2], s.amps[3]});
    };
    return o;
}

// ---- Local descent ----

struct NelderMeadResult {
    std::vector<double> x;
    double f = 0;
    int evals = 0;
    bool converged = false;
};

/// Classic Nelder-Mead simplex descent, run unconstrained (the objectives are
/// periodic and even, so the box wrap is applied after convergence). Stops
/// when the simplex f-spread falls below ftol or its diameter below xtol.
inline NelderMeadResult nelder_mead(const std::function<double(const std::vector<double>&)>& f,
                                    const std::vector<double>& x0, double step,
                                    double ftol = 1e-13, double xtol = 1e-9,
                                    int max_iter = 4000) {
    const std::size_t n = x0.size();
    std::vector<std::vector<double>> pts(n + 1, x0);
    std::vector<double> fv(n + 1);
    NelderMeadResult res;
    for (std::size_t i = 0; i < n; ++i) pts[i + 1][i] += step;
    for (std::size_t i = 0; i <= n; ++i) fv[i] = f(pts[i]);
    res.evals = static_cast<int>(n) + 1;

    for (int iter = 0; iter < max_iter; ++iter) {
        std::vector<std::size_t> order(n + 1);
        for (std::size_t i = 0; i <= n; ++i) order[i] = i;
        std::sort(order.begin(), order.end(), [&](auto a, auto b) { return fv[a] < fv[b]; });
        const std::size_t best = order[0], worst = order[n], second = order[n - 1];
        double diameter = 0;
        for (std::size_t i = 1; i <= n; ++i)
            for (std::size_t k = 0; k < n; ++k)
                diameter = std::max(diameter, std::abs(pts[i][k] - pts[0][k]));
        if (fv[worst] - fv[best] < ftol || diameter < xtol) {
            res.converged = true;
            break;
        }
        std::vector<double> centroid(n, 0.0);
        for (std::size_t i = 0; i <= n; ++i) {
            if (i == worst) continue;
            for (std::size_t k = 0; k < n; ++k) centroid[k] += pts[i][k];
        }
        for (auto& c : centroid) c /= n;
        auto blend = [&](double coef) {
            std::vector<double> p(n);
            for (std::size_t k = 0; k < n; ++k)
                p[k] = centroid[k] + coef * (pts[worst][k] - centroid[k]);
            return p;
        };
        const auto refl = blend(-1.0);
        const double frefl = f(refl);
        ++res.evals;
        if (frefl < fv[order[0]]) {
            const auto expd = blend(-2.0);
            const double fexp = f(expd);
            ++res.evals;
            pts[worst] = fexp < frefl ? expd : refl;
            fv[worst] = std::min(fexp, frefl);
            continue;
        }
        if (frefl < fv[second]) {
            pts[worst] = refl;
            fv[worst] = frefl;
            continue;
        }
        const auto contr = blend(frefl < fv[worst] ? -0.5 : 0.5);
        const double fcontr = f(contr);
        ++res.evals;
        if (fcontr < std::min(frefl, fv[worst])) {
            pts[worst] = contr;
            fv[worst] = fcontr;
            continue;
        }
        for (std::size_t i = 0; i <= n; ++i) {  // shrink toward the best vertex
            if (i == best) continue;
            for (std::size_t k = 0; k < n; ++k)
                pts[i][k] = pts[best][k] + 0.5 * (pts[i][k] - pts[best][k]);
            fv[i] = f(pts[i]);
            ++res.evals;
        }
    }
    std::size_t best = 0;
    for (std::size_t i = 1; i <= n; ++i)
        if (fv[i] < fv[best]) best = i;
    res.x = pts[best];
    res.f = fv[best];
    return res;
}

/// Newton polish with finite-difference derivatives; quadratic convergence
/// takes a simplex-accurate point to ~1e-12 in a few steps. The Hessian can
/// be singular at parameterization-degenerate minimizers (a vanishing
/// amplitude leaves its phase as a flat direction), so the solve falls back
/// to Levenberg damping.
inline void newton_polish(const std::function<double(const std::vector<double>&)>& f,
                          std::vector<double>& x, int max_steps = 5) {
    const std::size_t n = x.size();
    for (int it = 0; it < max_steps; ++it) {
        const auto g = fd_gradient(f, x);
        if (norm2(g) < 1e-11) return;
        const auto hess = fd_hessian(f, x);
        const double f0 = f(x);
        bool moved = false;
        for (const double mu : {0.0, 1e-8, 1e-5, 1e-2, 1.0}) {
            std::vector<double> damped = hess, rhs(n), delta;
            for (std::size_t i = 0; i < n; ++i) {
                damped[i * n + i] += mu;
                rhs[i] = -g[i];
            }
            if (!solve_linear(damped, rhs, delta, n)) continue;
            std::vector<double> trial(n);
            double scale = 1.0;
            for (int bt = 0; bt < 6 && !moved; ++bt, scale *= 0.5) {
                for (std::size_t i = 0; i < n; ++i) trial[i] = x[i] + scale * delta[i];
                if (f(trial) <= f0 + 1e-15) {
                    x = trial;
                    moved = true;
                }
            }
            if (moved) break;
        }
        if (!moved) return;
    }
}

struct MinimizerRecord {
    std::vector<double> point;
    PureState state;
    double xi_value = 0;
    double gradient_norm = 0;
    double hessian_min_eigen = 0;
    CanonicalKey basin;
};

struct MultistartResult {
    std::vector<MinimizerRecord> records;
    int n_starts = 0;
    int n_converged = 0;
    int n_failed = 0;  // starts whose polished gradient norm stayed above 1e-8
    double best_value = 0;
};

constexpr double kAcceptGradTol = 1e-8;

enum class StartMode { Box, Haar };

/// Seeded multistart local minimization. Start points are uniform in the
/// parameter box by default (Haar-distributed states are available for
/// robustness studies); each start draws from its own (seed, index) stream,
/// so results do not depend on execution order.
inline MultistartResult multistart_minimize(const Objective& obj, int n_starts,
                                            std::uint64_t seed,
                                            StartMode mode = StartMode::Box) {
    if (n_starts < 1) throw OutOfRange("n_starts must be >= 1");
    MultistartResult out;
    out.n_starts = n_starts;
    out.best_value = std::numeric_limits<double>::infinity();
    for (int s = 0; s < n_starts; ++s) {
        auto rng = stream_rng(seed, static_cast<std::uint64_t>(s));
        std::vector<double> x0(obj.n_params);
        if (mode == StartMode::Haar && obj.from_state) {
            const int dim = obj.n_params == 2 ? 2 : 4;
            x0 = obj.from_state(haar_random_state(dim, rng));
        } else {
            for (std::size_t i = 0; i < obj.n_params; ++i) {
                std::uniform_real_distribution<double> u(obj.lower[i], obj.upper[i]);
                x0[i] = u(rng);
            }
        }
        NelderMeadResult nm = nelder_mead(obj.value, x0, 0.4);
        newton_polish(obj.value, nm.x);
        obj.wrap(nm.x);
        const auto g = fd_gradient(obj.value, nm.x);
        const double gn = norm2(g);
        if (gn >= kAcceptGradTol) {
            ++out.n_failed;
            continue;
        }
        MinimizerRecord rec;
        rec.point = nm.x;
        rec.state = normalize(obj.state(nm.x).amps);
        rec.xi_value = obj.value(nm.x);
        rec.gradient_norm = gn;
        rec.hessian_min_eigen =
            symmetric_eigenvalues(fd_hessian(obj.value, nm.x), obj.n_params).front();
        rec.basin = canonical_key(rec.state);
        out.best_value = std::min(out.best_value, rec.xi_value);
        out.records.push_back(std::move(rec));
        ++out.n_converged;
    }
    return out;
}

/// Distinct minimizers at the target value, deduplicated up to phase at a
/// tolerance looser than the catalogs' separation (optimizer output carries
/// ~1e-9 noise). Collected states are snapped to the nearest exact catalog
/// state when one lies within 1e-6; unsnapped states are flagged.
struct CollectedMinimizers {
    OrbitFamily family;
    std::vector<int> snap_index;  // index into snap targets, or -1
    int n_matching_records = 0;
};

constexpr double kCollectDedupTol = 1e-7;
constexpr double kSnapTol = 1e-6;

inline CollectedMinimizers collect_minimizers(const std::vector<MinimizerRecord>& records,
                                              double target_xi, double tol,
                                              std::span<const ExactState> snap_targets = {}) {
    CollectedMinimizers out;
    std::vector<PureState> snap_pure;
    snap_pure.reserve(snap_targets.size());
    for (const auto& e : snap_targets) snap_pure.push_back(e.to_pure());
    for (const auto& rec : records) {
        if (std::abs(rec.xi_value - target_xi) > tol) continue;
        ++out.n_matching_records;
        bool dup = false;
        for (const auto& s : out.family.states)
            if (equal_up_to_phase(s, rec.state, kCollectDedupTol)) {
                dup = true;
                break;
            }
        if (dup) continue;
        int snap = -1;
        for (std::size_t i = 0; i < snap_pure.size(); ++i)
            if (equal_up_to_phase(snap_pure[i], rec.state, kSnapTol)) {
                snap = static_cast<int>(i);
                break;
            }
        out.family.states.push_back(snap >= 0 ? snap_pure[snap] : rec.state);
        out.snap_index.push_back(snap);
    }
    return out;
}

/// Accepts a point iff it is a strict local minimum: gradient norm below
/// 1e-8 and smallest Hessian eigenvalue above 1e-6.
inline MinimizerRecord certify_isolated_minimum(const Objective& obj, std::vector<double> x) {
    MinimizerRecord rec;
    obj.wrap(x);
    rec.point = x;
    rec.state = normalize(obj.state(x).amps);
    rec.xi_value = obj.value(x);
    rec.gradient_norm = norm2(fd_gradient(obj.value, x));
    rec.hessian_min_eigen =
        symmetric_eigenvalues(fd_hessian(obj.value, x), obj.n_params).front();
    rec.basin = canonical_key(rec.state);
    if (rec.gradient_norm >= kAcceptGradTol || rec.hessian_min_eigen <= kHessianEigenTol)
        throw NotAMinimum(rec.gradient_norm, rec.hessian_min_eigen);
    return rec;
}

inline MinimizerRecord certify_isolated_minimum(const ParamPoint& p) {
    return certify_isolated_minimum(
        two_qubit_objective(),
        {p.thetas[0], p.thetas[1], p.thetas[2], p.phis[0], p.phis[1], p.phis[2]});
}

}  // namespace magiclab
