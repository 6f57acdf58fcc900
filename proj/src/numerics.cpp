#include "glcorr/numerics.hpp"

#include "glcorr/errors.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <cmath>
#include <cstdlib>
#include <exception>
#include <limits>
#include <mutex>
#include <numbers>
#include <queue>
#include <string>
#include <thread>

namespace glcorr {

double pairwise_sum(std::span<const double> values) {
    const std::size_t n = values.size();
    if (n == 0) return 0.0;
    if (n <= 8) {
        double s = 0.0;
        for (double v : values) s += v;
        return s;
    }
    const std::size_t half = n / 2;
    return pairwise_sum(values.first(half)) + pairwise_sum(values.subspan(half));
}

namespace {

// Kronrod 21-point nodes (positive half) and weights; the odd entries are the
// embedded 10-point Gauss nodes.
constexpr std::array<double, 11> kXgk = {
    0.995657163025808080735527280689003, 0.973906528517171720077964012084452,
    0.930157491355708226001207180059508, 0.865063366688984510732096688423493,
    0.780817726586416897063717578345042, 0.679409568299024406234327365114874,
    0.562757134668604683339000099272694, 0.433395394129247190799265943165784,
    0.294392862701460198131126603103866, 0.148874338981631210884826001129720,
    0.000000000000000000000000000000000};
constexpr std::array<double, 11> kWgk = {
    0.011694638867371874278064396062192, 0.032558162307964727478818972459390,
    0.054755896574351996031381300244580, 0.075039674810919952767043140916190,
    0.093125454583697605535065465083366, 0.109387158802297641899210590325805,
    0.123491976262065851077208357297217, 0.134709217311473325928054001771707,
    0.142775938577060080797094273138717, 0.147739104901338491374841515972068,
    0.149445554002916905664936468389821};
constexpr std::array<double, 5> kWg = {
    0.066671344308688137593568809893332, 0.149451349150580593145776339657697,
    0.219086362515982043995534934228163, 0.269266719309996355091226921569469,
    0.295524224714752870173892994651338};

struct Panel {
    double a = 0.0;
    double b = 0.0;
    double value = 0.0;
    double error = 0.0;
};

Panel gauss_kronrod_21(const std::function<double(double)>& f, double a, double b) {
    const double center = 0.5 * (a + b);
    const double half = 0.5 * (b - a);
    const double fc = f(center);
    if (!std::isfinite(fc)) {
        throw Error(ErrorKind::Evaluation, "non-finite integrand at " + std::to_string(center));
    }
    double kronrod = kWgk[10] * fc;
    double gauss = 0.0;
    for (int j = 0; j < 10; ++j) {
        const double dx = half * kXgk[j];
        const double f1 = f(center - dx);
        const double f2 = f(center + dx);
        if (!std::isfinite(f1) || !std::isfinite(f2)) {
            throw Error(ErrorKind::Evaluation,
                        "non-finite integrand near " + std::to_string(center));
        }
        kronrod += kWgk[j] * (f1 + f2);
        if (j % 2 == 1) gauss += kWg[j / 2] * (f1 + f2);
    }
    return {a, b, kronrod * half, std::abs((kronrod - gauss) * half)};
}

struct PanelOrder {
    bool operator()(const Panel& lhs, const Panel& rhs) const {
        if (lhs.error != rhs.error) return lhs.error < rhs.error;
        return lhs.a > rhs.a;
    }
};

}  // namespace

IntegralEstimate integrate_adaptive(const std::function<double(double)>& f, double a, double b,
                                    double abs_tol, double rel_tol, int max_intervals) {
    if (a == b) return {};
    std::priority_queue<Panel, std::vector<Panel>, PanelOrder> queue;
    queue.push(gauss_kronrod_21(f, a, b));
    std::size_t evaluations = 21;
    double total = queue.top().value;
    double total_error = queue.top().error;

    while (total_error > std::max(abs_tol, rel_tol * std::abs(total))) {
        if (static_cast<int>(queue.size()) >= max_intervals) {
            throw Error(ErrorKind::NonConvergence,
                        "adaptive quadrature on [" + std::to_string(a) + ", " + std::to_string(b) +
                            "] did not reach tolerance",
                        {total, total_error});
        }
        const Panel worst = queue.top();
        queue.pop();
        const double mid = 0.5 * (worst.a + worst.b);
        if (!(mid > worst.a && mid < worst.b)) {
            throw Error(ErrorKind::NonConvergence, "interval collapsed during subdivision",
                        {total, total_error});
        }
        const Panel left = gauss_kronrod_21(f, worst.a, mid);
        const Panel right = gauss_kronrod_21(f, mid, worst.b);
        evaluations += 42;
        queue.push(left);
        queue.push(right);
        total += left.value + right.value - worst.value;
        total_error += left.error + right.error - worst.error;
    }

    // Re-sum in left-to-right order so the returned value does not carry the
    // drift of the running updates.
    std::vector<Panel> panels;
    panels.reserve(queue.size());
    while (!queue.empty()) {
        panels.push_back(queue.top());
        queue.pop();
    }
    std::sort(panels.begin(), panels.end(),
              [](const Panel& l, const Panel& r) { return l.a < r.a; });
    std::vector<double> values;
    std::vector<double> errors;
    values.reserve(panels.size());
    errors.reserve(panels.size());
    for (const Panel& p : panels) {
        values.push_back(p.value);
        errors.push_back(p.error);
    }
    return {pairwise_sum(values), pairwise_sum(errors), evaluations};
}

double periodic_mean(const std::function<double(double)>& f, int samples) {
    std::vector<double> values(static_cast<std::size_t>(samples));
    const double step = 2.0 * std::numbers::pi / samples;
    for (int k = 0; k < samples; ++k) values[static_cast<std::size_t>(k)] = f(step * k);
    return pairwise_sum(values) / samples;
}

PeriodicMean adaptive_periodic_mean(const std::function<double(double)>& f, int start_samples,
                                    double abs_tol, double rel_tol, int max_samples) {
    int samples = std::max(start_samples, 2);
    std::vector<double> values(static_cast<std::size_t>(samples));
    const double step = 2.0 * std::numbers::pi / samples;
    for (int k = 0; k < samples; ++k) values[static_cast<std::size_t>(k)] = f(step * k);

    auto level_mean = [](const std::vector<double>& v, int stride) {
        std::vector<double> picked;
        picked.reserve(v.size() / static_cast<std::size_t>(stride));
        for (std::size_t i = 0; i < v.size(); i += static_cast<std::size_t>(stride)) {
            picked.push_back(v[i]);
        }
        return pairwise_sum(picked) / static_cast<double>(picked.size());
    };

    while (true) {
        const double fine = level_mean(values, 1);
        const double coarse = level_mean(values, 2);
        const double diff = std::abs(fine - coarse);
        if (!std::isfinite(fine)) {
            throw Error(ErrorKind::Evaluation, "non-finite sample in periodic mean");
        }
        // The sum cannot resolve the mean below the rounding level of its
        // samples, however small the requested tolerance.
        double magnitude = 0.0;
        for (double v : values) magnitude = std::max(magnitude, std::abs(v));
        const double floor = 1e-14 * magnitude;
        if (diff <= std::max({abs_tol, rel_tol * std::abs(fine), floor})) {
            return {fine, diff, samples};
        }
        if (samples * 2 > max_samples) {
            throw Error(ErrorKind::NonConvergence, "periodic mean did not settle",
                        {coarse, fine});
        }
        // Interleave new midpoints so `values` stays in angular order.
        const int next = samples * 2;
        const double next_step = 2.0 * std::numbers::pi / next;
        std::vector<double> merged(static_cast<std::size_t>(next));
        for (int k = 0; k < samples; ++k) {
            merged[static_cast<std::size_t>(2 * k)] = values[static_cast<std::size_t>(k)];
            merged[static_cast<std::size_t>(2 * k + 1)] = f(next_step * (2 * k + 1));
        }
        values = std::move(merged);
        samples = next;
    }
}

RichardsonResult richardson(std::span<const double> steps, std::span<const double> values,
                            std::span<const double> exponents) {
    const std::size_t n = values.size();
    if (n < 2 || steps.size() != n || exponents.size() + 1 < n) {
        throw Error(ErrorKind::InvalidSpec, "richardson needs >= 2 matched steps and values");
    }
    for (std::size_t i = 1; i < n; ++i) {
        if (!(steps[i] < steps[i - 1]) || !(steps[i] > 0.0)) {
            throw Error(ErrorKind::InvalidSpec, "richardson steps must decrease strictly");
        }
    }
    // T[i][j] is the value at h = 0 of the model v0 + sum_{l<j} c_l h^{p_l}
    // interpolating entries i-j..i, obtained by a small dense solve. Steps are
    // rescaled by h_i to keep the system well conditioned.
    RichardsonResult out;
    out.table.assign(n, {});
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j <= i; ++j) {
            const std::size_t m = j + 1;
            std::vector<std::vector<double>> a(m, std::vector<double>(m + 1));
            for (std::size_t r = 0; r < m; ++r) {
                const std::size_t row = i - j + r;
                const double h = steps[row] / steps[i];
                a[r][0] = 1.0;
                for (std::size_t l = 1; l < m; ++l) a[r][l] = std::pow(h, exponents[l - 1]);
                a[r][m] = values[row];
            }
            for (std::size_t c = 0; c < m; ++c) {
                std::size_t piv = c;
                for (std::size_t r = c + 1; r < m; ++r) {
                    if (std::abs(a[r][c]) > std::abs(a[piv][c])) piv = r;
                }
                std::swap(a[c], a[piv]);
                for (std::size_t r = 0; r < m; ++r) {
                    if (r == c) continue;
                    const double f = a[r][c] / a[c][c];
                    for (std::size_t l = c; l <= m; ++l) a[r][l] -= f * a[c][l];
                }
            }
            out.table[i].push_back(a[0][m] / a[0][0]);
        }
    }
    out.value = out.table[n - 1][n - 1];
    out.error = std::abs(out.table[n - 1][n - 1] - out.table[n - 1][n - 2]);
    return out;
}

double fitted_exponent(std::span<const double> steps, std::span<const double> values) {
    const std::size_t n = values.size();
    if (n < 3) return std::numeric_limits<double>::quiet_NaN();
    const double d1 = values[n - 2] - values[n - 3];
    const double d2 = values[n - 1] - values[n - 2];
    if (d1 == 0.0 || d2 == 0.0 || (d1 > 0.0) != (d2 > 0.0)) {
        return std::numeric_limits<double>::quiet_NaN();
    }
    return std::log(d1 / d2) / std::log(steps[n - 2] / steps[n - 1]);
}

QuadratureResult extrapolate_limit(std::span<const double> epsilons, std::span<const double> values,
                                   double quadrature_error, std::size_t evaluations) {
    const std::size_t n = values.size();
    std::vector<double> exponents;
    for (std::size_t j = 1; j < n; ++j) exponents.push_back(static_cast<double>(j));
    const RichardsonResult rich = richardson(epsilons, values, exponents);

    double scale = 0.0;
    for (double v : values) scale = std::max(scale, std::abs(v));
    const double noise = quadrature_error + 1e-13 * scale;
    const std::vector<double> diagnostics(values.begin(), values.end());
    int sign = 0;
    for (std::size_t i = 1; i < n; ++i) {
        const double d = values[i] - values[i - 1];
        if (std::abs(d) <= noise) continue;
        const int s = d > 0.0 ? 1 : -1;
        if (sign != 0 && s != sign) {
            throw Error(ErrorKind::NonConvergence, "partial values are not monotone in eps",
                        diagnostics);
        }
        sign = s;
    }
    const double first = std::abs(values[1] - values[0]);
    const double last = std::abs(values[n - 1] - values[n - 2]);
    if (last > noise && last >= first) {
        throw Error(ErrorKind::NonConvergence, "partial values do not settle as eps -> 0",
                    diagnostics);
    }

    QuadratureResult out;
    out.value = rich.value;
    out.error_estimate = rich.error + quadrature_error;
    out.evaluations = evaluations;
    for (std::size_t i = 0; i < n; ++i) out.extrapolation_table.push_back({epsilons[i], values[i]});
    out.fitted_exponent = fitted_exponent(epsilons, values);
    return out;
}

namespace {
std::atomic<int> g_thread_override{0};
}

void set_thread_count(int threads) { g_thread_override.store(threads); }

int thread_count() {
    if (const int forced = g_thread_override.load(); forced > 0) return forced;
    if (const char* env = std::getenv("GLCORR_THREADS")) {
        const int parsed = std::atoi(env);
        if (parsed > 0) return parsed;
    }
    const unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : static_cast<int>(hw);
}

void parallel_for(std::size_t n, const std::function<void(std::size_t)>& fn) {
    const std::size_t workers = std::min<std::size_t>(static_cast<std::size_t>(thread_count()), n);
    if (workers <= 1) {
        for (std::size_t i = 0; i < n; ++i) fn(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::mutex failure_mutex;
    std::size_t failed_index = n;
    std::exception_ptr failure;

    auto work = [&] {
        for (std::size_t i = next.fetch_add(1); i < n; i = next.fetch_add(1)) {
            try {
                fn(i);
            } catch (...) {
                // Keep the lowest failing index so the reported error does not
                // depend on scheduling.
                std::lock_guard lock(failure_mutex);
                if (i < failed_index) {
                    failed_index = i;
                    failure = std::current_exception();
                }
            }
        }
    };
    std::vector<std::jthread> pool;
    pool.reserve(workers - 1);
    for (std::size_t t = 1; t < workers; ++t) pool.emplace_back(work);
    work();
    pool.clear();
    if (failure) std::rethrow_exception(failure);
}

}  // namespace glcorr
