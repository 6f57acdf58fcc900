#include "glcorr/quadrature.hpp"

#include "glcorr/algebra.hpp"
#include "glcorr/errors.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

namespace glcorr {

namespace {

constexpr double kPi = std::numbers::pi;

void spec_error(const std::string& what) { throw Error(ErrorKind::InvalidSpec, what); }

double smooth_step(double t) { return t > 0.0 ? std::exp(-1.0 / t) : 0.0; }

/// 1 for r <= delta/2, 0 for r >= delta, smooth in between.
double bump(double r, double delta) {
    const double half = 0.5 * delta;
    if (r <= half) return 1.0;
    if (r >= delta) return 0.0;
    const double t = (r - half) / half;
    const double a = smooth_step(1.0 - t);
    return a / (a + smooth_step(t));
}

struct Task {
    bool local = false;      // polar patch around a centre, else an origin ring panel
    std::size_t centre = 0;  // for local tasks
    double a = 0.0;
    double b = 0.0;
};

struct TaskResult {
    double value = 0.0;
    double error = 0.0;
    std::size_t evaluations = 0;
};

}  // namespace

void QuadratureSpec::validate() const {
    if (epsilon_schedule.size() < 3) spec_error("epsilon schedule needs at least 3 entries");
    for (std::size_t i = 0; i < epsilon_schedule.size(); ++i) {
        if (!(epsilon_schedule[i] > 0.0)) spec_error("epsilon schedule entries must be positive");
        if (i > 0 && !(epsilon_schedule[i] < epsilon_schedule[i - 1])) {
            spec_error("epsilon schedule must decrease strictly");
        }
    }
    if (angular_samples < 64 || (angular_samples & (angular_samples - 1)) != 0) {
        spec_error("angular samples must be a power of two >= 64");
    }
    if (!(outer_radius > 0.0)) spec_error("outer radius must be positive");
    if (!(radial_tol > 0.0)) spec_error("radial tolerance must be positive");
}

double far_field_coefficient(const VortexConfiguration& cfg) {
    double total = 0.0;
    double fourth = 0.0;
    for (double q : cfg.charges()) {
        total += q;
        fourth += q * q * q * q;
    }
    return total * total * total * total - fourth;
}

QuadratureResult partitioned_integral(const PlanarField& field,
                                      const std::vector<SingularCentre>& centres,
                                      double far_coefficient, const QuadratureSpec& spec) {
    spec.validate();
    const std::vector<double>& eps = spec.epsilon_schedule;
    const double eps_max = eps.front();
    if (centres.empty()) spec_error("at least one singular centre is required");

    double d_min = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < centres.size(); ++i) {
        for (std::size_t j = i + 1; j < centres.size(); ++j) {
            d_min = std::min(d_min, std::abs(centres[i].position - centres[j].position));
        }
    }
    double delta = 1.0;
    if (std::isfinite(d_min)) {
        if (!(eps_max < 0.5 * d_min)) {
            spec_error("largest epsilon must be below half the minimal centre distance");
        }
        delta = 0.45 * d_min;
        if (eps_max >= delta) delta = 0.5 * (eps_max + 0.5 * d_min);
    } else {
        delta = std::max(1.0, 2.0 * eps_max);
    }
    double reach = 0.0;
    for (const auto& c : centres) reach = std::max(reach, std::abs(c.position) + delta);
    const double radius = spec.outer_radius;
    if (!(radius > reach)) spec_error("outer radius must enclose every singular patch");

    // Local patches: radial pieces between the schedule and delta/2, delta.
    std::vector<Task> tasks;
    for (std::size_t k = 0; k < centres.size(); ++k) {
        std::vector<double> cuts{0.5 * delta, delta};
        if (centres[k].excluded) {
            cuts.insert(cuts.end(), eps.begin(), eps.end());
        } else {
            cuts.push_back(0.0);
        }
        std::sort(cuts.begin(), cuts.end());
        cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());
        for (std::size_t i = 0; i + 1 < cuts.size(); ++i) tasks.push_back({true, k, cuts[i], cuts[i + 1]});
    }
    const std::size_t local_count = tasks.size();

    // Origin rings: break where a ring meets a patch edge, then geometric
    // panels out to the outer radius.
    std::vector<double> cuts{0.0};
    for (const auto& c : centres) {
        const double r = std::abs(c.position);
        for (double off : {-delta, -0.5 * delta, 0.5 * delta, delta}) {
            if (r + off > 0.0) cuts.push_back(r + off);
        }
    }
    std::sort(cuts.begin(), cuts.end());
    cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());
    for (double r = 2.0 * cuts.back(); r < radius; r *= 2.0) cuts.push_back(r);
    cuts.push_back(radius);
    for (std::size_t i = 0; i + 1 < cuts.size(); ++i) tasks.push_back({false, 0, cuts[i], cuts[i + 1]});

    // Ring means enter the radial integrands multiplied by 2*pi*r, so their
    // absolute tolerance scales like 1/r.
    const double ring_abs_tol = 1e-2 * spec.radial_tol;
    const double ring_rel_tol = 1e-12;

    // Mean of (1 - sum of bumps) * field on |x| = rho; `count` accumulates
    // field evaluations.
    auto global_mean = [&](double rho, std::size_t& count) {
        const PeriodicMean m = adaptive_periodic_mean(
            [&](double theta) {
                const Complex x = std::polar(rho, theta);
                double weight = 1.0;
                for (const auto& c : centres) weight -= bump(std::abs(x - c.position), delta);
                if (weight <= 0.0) return 0.0;
                ++count;
                return weight * field(x);
            },
            spec.angular_samples, ring_abs_tol / rho, ring_rel_tol);
        return m.value;
    };

    const auto results = parallel_map<TaskResult>(tasks.size(), [&](std::size_t i) {
        const Task& t = tasks[i];
        std::size_t count = 0;
        std::function<double(double)> radial;
        if (t.local) {
            const Complex c = centres[t.centre].position;
            radial = [&, c](double r) {
                const double chi = bump(r, delta);
                if (chi == 0.0) return 0.0;
                const PeriodicMean m = adaptive_periodic_mean(
                    [&](double theta) {
                        ++count;
                        return field(c + std::polar(r, theta));
                    },
                    spec.angular_samples, ring_abs_tol / r, ring_rel_tol);
                return 2.0 * kPi * r * chi * m.value;
            };
        } else {
            radial = [&](double rho) { return 2.0 * kPi * rho * global_mean(rho, count); };
        }
        const IntegralEstimate e =
            integrate_adaptive(radial, t.a, t.b, spec.radial_tol, spec.radial_tol);
        return TaskResult{e.value, e.error, count};
    });

    // Far field beyond R, with the next-order deviation of the ring mean at R
    // from far_coefficient/R^4 as its error.
    std::size_t tail_count = 0;
    const double mean_at_r = global_mean(radius, tail_count);
    const double tail = kPi * far_coefficient / (radius * radius);
    const double deviation = std::pow(radius, 4) * mean_at_r - far_coefficient;
    const double tail_error = 0.5 * kPi * std::abs(deviation) / (radius * radius);

    std::size_t evaluations = tail_count;
    std::vector<double> errors;
    std::vector<double> global_values;
    for (std::size_t i = 0; i < results.size(); ++i) {
        evaluations += results[i].evaluations;
        errors.push_back(results[i].error);
        if (i >= local_count) global_values.push_back(results[i].value);
    }
    global_values.push_back(tail);
    const double global = pairwise_sum(global_values);

    std::vector<double> partial;
    for (double e : eps) {
        std::vector<double> parts{global};
        for (std::size_t i = 0; i < local_count; ++i) {
            if (!centres[tasks[i].centre].excluded || tasks[i].a >= e) {
                parts.push_back(results[i].value);
            }
        }
        partial.push_back(pairwise_sum(parts));
    }
    const double quadrature_error = pairwise_sum(errors) + tail_error;
    return extrapolate_limit(eps, partial, quadrature_error, evaluations);
}

QuadratureResult pv_integral(const VortexConfiguration& cfg, const QuadratureSpec& spec) {
    spec.validate();
    if (cfg.size() == 1) {
        // The integrand vanishes identically for a single vortex.
        QuadratureResult out;
        for (double e : spec.epsilon_schedule) out.extrapolation_table.push_back({e, 0.0});
        out.fitted_exponent = std::numeric_limits<double>::quiet_NaN();
        return out;
    }
    std::vector<SingularCentre> centres;
    for (const Complex& p : cfg.positions()) centres.push_back({p, true});
    return partitioned_integral([&](Complex x) { return raw_integrand(x, cfg); }, centres,
                                far_field_coefficient(cfg), spec);
}

QuadratureResult counterterm_pv_integral(int n, const QuadratureSpec& spec) {
    const Counterterm ct(n);
    std::vector<SingularCentre> centres;
    for (int j = 1; j <= n; ++j) centres.push_back({root_of_unity(n, j), true});
    return partitioned_integral([&](Complex x) { return ct(x); }, centres, 0.0, spec);
}

QuadratureResult regularized_integral(int n, int m, const QuadratureSpec& spec) {
    if (!spec.use_counterterm) spec_error("the regularized route needs use_counterterm");
    const RegularizedField g(n, m, true, false);
    std::vector<SingularCentre> centres{{0.0, true}};
    for (int j = 1; j <= n; ++j) centres.push_back({root_of_unity(n, j), false});
    return partitioned_integral([&](Complex x) { return g(x); }, centres,
                                far_field_coefficient(g.configuration()), spec);
}

AnnulusSplit annulus_split(int n, const QuadratureSpec& spec) {
    spec.validate();
    const std::vector<double>& eps = spec.epsilon_schedule;
    if (!(eps.front() < 0.5)) spec_error("annulus split needs epsilon < 1/2");
    const VortexConfiguration cfg = make_symmetric_config(n, 1);
    const Counterterm ct(n);
    const double radius = spec.outer_radius;
    if (!(radius > 2.0 / (1.0 - eps.front()))) spec_error("outer radius too small");

    // Ring means on both fields share the sample points. Near |x| = 1 the
    // rings pass within eps of the vertices; the means adapt.
    const double abs_tol = 1e-2 * spec.radial_tol;
    auto ring = [&](bool raw, double rho, std::size_t& count) {
        const PeriodicMean mean = adaptive_periodic_mean(
            [&](double theta) {
                ++count;
                const Complex x = std::polar(rho, theta);
                return raw ? raw_integrand(x, cfg) : ct(x);
            },
            spec.angular_samples, abs_tol / rho, 1e-12, 1 << 22);
        return 2.0 * kPi * rho * mean.value;
    };

    // Inner pieces [0, 1/2], [1/2, 1-eps_0], [1-eps_{i-1}, 1-eps_i]; outer
    // pieces mirrored through rho -> 1/rho, then geometric panels to R.
    std::vector<double> inner{0.0, 0.5};
    std::vector<double> outer;
    for (double e : eps) {
        inner.push_back(1.0 - e);
        outer.push_back(1.0 / (1.0 - e));
    }
    std::reverse(outer.begin(), outer.end());
    outer.push_back(2.0);
    for (double r = 4.0; r < radius; r *= 2.0) outer.push_back(r);
    outer.push_back(radius);

    struct Piece {
        bool raw;
        double a;
        double b;
        int depth;  // index of the smallest eps whose region contains the piece
    };
    std::vector<Piece> pieces;
    const int levels = static_cast<int>(eps.size());
    for (bool raw : {true, false}) {
        for (std::size_t i = 0; i + 1 < inner.size(); ++i) {
            pieces.push_back({raw, inner[i], inner[i + 1], std::max(0, static_cast<int>(i) - 1)});
        }
        for (std::size_t i = 0; i + 1 < outer.size(); ++i) {
            const int depth = i + 1 < eps.size() ? levels - 1 - static_cast<int>(i) : 0;
            pieces.push_back({raw, outer[i], outer[i + 1], depth});
        }
    }
    const auto results = parallel_map<TaskResult>(pieces.size(), [&](std::size_t i) {
        std::size_t count = 0;
        const Piece& p = pieces[i];
        const IntegralEstimate e = integrate_adaptive(
            [&](double rho) { return ring(p.raw, rho, count); }, p.a, p.b, spec.radial_tol,
            spec.radial_tol);
        return TaskResult{e.value, e.error, count};
    });

    const double far = far_field_coefficient(cfg);
    AnnulusSplit out;
    for (bool raw : {true, false}) {
        std::vector<double> partial;
        std::vector<double> errors;
        std::size_t evaluations = 0;
        for (std::size_t i = 0; i < pieces.size(); ++i) {
            if (pieces[i].raw != raw) continue;
            errors.push_back(results[i].error);
            evaluations += results[i].evaluations;
        }
        for (int level = 0; level < levels; ++level) {
            std::vector<double> parts;
            for (std::size_t i = 0; i < pieces.size(); ++i) {
                if (pieces[i].raw == raw && pieces[i].depth <= level) parts.push_back(results[i].value);
            }
            if (raw) parts.push_back(kPi * far / (radius * radius));
            partial.push_back(pairwise_sum(parts));
        }
        QuadratureResult r = extrapolate_limit(eps, partial, pairwise_sum(errors), evaluations);
        (raw ? out.I : out.II) = std::move(r);
    }
    return out;
}

QuadratureResult a0_numeric(int n, int m, const QuadratureSpec& spec) {
    if (n < 2 || n > 8) throw Error(ErrorKind::InvalidOrder, "a0_numeric supports 2 <= N <= 8");
    QuadratureResult r = pv_integral(make_symmetric_config(n, 1), spec);
    // A_0(N, m) = m^4 A_0(N, 1): one exact-rational factor applied after the fact.
    const double m4 = std::pow(static_cast<double>(m), 4);
    r.value = r.value / 4.0 * m4;
    r.error_estimate = r.error_estimate / 4.0 * m4;
    for (auto& e : r.extrapolation_table) e.value = e.value / 4.0 * m4;
    return r;
}

}  // namespace glcorr
