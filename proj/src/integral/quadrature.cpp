#include "grtoda/integral.hpp"

#include <atomic>
#include <cmath>
#include <cstdlib>
#include <thread>

namespace grtoda {

namespace {

int thread_count() {
    if (const char* env = std::getenv("GRTODA_THREADS")) {
        int n = std::atoi(env);
        if (n >= 1) return n;
    }
    unsigned hw = std::thread::hardware_concurrency();
    return hw ? static_cast<int>(std::min(hw, 8u)) : 1;
}

struct GridSum {
    std::complex<double> sum{0.0, 0.0};
    long evaluations = 0;
};

// trapezoid / midpoint tensor grid over [-T, T]^d with spacing h.
// Deterministic: per-slab partial sums are combined in slab order,
// independent of how many workers ran them.
GridSum grid_sum(const PhaseData& phase, double T, double h, bool midpoint) {
    int d = static_cast<int>(phase.vars.size());
    long n_axis = midpoint ? static_cast<long>(std::floor(2 * T / h))
                           : static_cast<long>(std::floor(2 * T / h)) + 1;
    auto node = [&](long i) { return midpoint ? -T + (i + 0.5) * h : -T + i * h; };
    long slabs = (d == 1) ? 1 : n_axis;
    std::vector<std::complex<double>> partial(slabs, {0.0, 0.0});
    std::vector<long> evals(slabs, 0);

    auto run_slab = [&](long s) {
        std::vector<double> t(d, 0.0);
        std::complex<long double> acc = 0.0;
        long count = 0;
        std::vector<long> idx(d, 0);
        if (d == 1) {
            for (long i = 0; i < n_axis; ++i) {
                t[0] = node(i);
                std::complex<double> v = std::exp(phase.eval(t));
                if (!midpoint && (i == 0 || i == n_axis - 1)) v *= 0.5;
                acc += v;
                ++count;
            }
        } else {
            t[0] = node(s);
            double w0 = (!midpoint && (s == 0 || s == n_axis - 1)) ? 0.5 : 1.0;
            // iterate the remaining d-1 axes
            std::fill(idx.begin(), idx.end(), 0);
            for (;;) {
                double w = w0;
                for (int a = 1; a < d; ++a) {
                    t[a] = node(idx[a]);
                    if (!midpoint && (idx[a] == 0 || idx[a] == n_axis - 1)) w *= 0.5;
                }
                acc += w * std::exp(phase.eval(t));
                ++count;
                int a = 1;
                while (a < d && ++idx[a] == n_axis) { idx[a] = 0; ++a; }
                if (a == d) break;
            }
        }
        partial[s] = static_cast<std::complex<double>>(acc);
        evals[s] = count;
    };

    int workers = std::min<long>(thread_count(), slabs);
    if (workers <= 1) {
        for (long s = 0; s < slabs; ++s) run_slab(s);
    } else {
        std::atomic<long> next{0};
        std::vector<std::thread> pool;
        for (int w = 0; w < workers; ++w)
            pool.emplace_back([&] {
                for (;;) {
                    long s = next.fetch_add(1);
                    if (s >= slabs) break;
                    run_slab(s);
                }
            });
        for (auto& th : pool) th.join();
    }
    std::complex<long double> total = 0.0;
    long count = 0;
    for (long s = 0; s < slabs; ++s) {
        total += partial[s];
        count += evals[s];
    }
    double scale = std::pow(h, d);
    GridSum g;
    g.sum = static_cast<std::complex<double>>(total) * scale;
    g.evaluations = count;
    return g;
}

// max |e^{Re F}| over the boundary shell, sampled with spacing h
double boundary_magnitude(const PhaseData& phase, double T, double h) {
    int d = static_cast<int>(phase.vars.size());
    long n_axis = static_cast<long>(std::floor(2 * T / h)) + 1;
    double worst = 0.0;
    std::vector<double> t(d, 0.0);
    std::vector<long> idx(d, 0);
    for (;;) {
        bool on_boundary = false;
        for (int a = 0; a < d; ++a) {
            t[a] = -T + idx[a] * h;
            if (idx[a] == 0 || idx[a] == n_axis - 1) on_boundary = true;
        }
        if (on_boundary) worst = std::max(worst, std::exp(phase.eval(t).real()));
        int a = 0;
        // skip interior points quickly: only iterate faces for d >= 2
        while (a < d && ++idx[a] == n_axis) { idx[a] = 0; ++a; }
        if (a == d) break;
    }
    return worst;
}

} // namespace

QuadratureResult evaluate_whittaker(int m, int N, const std::vector<double>& lambda, double hbar,
                                    double x, double tol, const QuadraturePolicy& policy) {
    if (!(1 <= m && m < N)) throw std::invalid_argument("evaluate_whittaker: need 1 <= m < N");
    int d = m * (N - m);
    if (d > 4) throw std::invalid_argument("evaluate_whittaker: dimension m(N-m) must be <= 4");
    if (!(tol >= 1e-12)) throw std::invalid_argument("evaluate_whittaker: tol must be >= 1e-12");
    PhaseData phase = build_phase(m, N, lambda, hbar, x);

    // truncation: double the half-width until the boundary shell is negligible
    double T = policy.t0;
    double shell_h = 1.0;
    double target = std::min(tol, 1e-9) * 1e-4;
    for (int grow = 0; grow < 8; ++grow) {
        if (boundary_magnitude(phase, T, shell_h) < target) break;
        T *= 2;
        if (grow == 7) throw BudgetExceeded(QuadratureResult{});
    }

    QuadratureResult best;
    std::complex<double> prev{0.0, 0.0};
    bool have_prev = false;
    double h = policy.h0;
    long total_evals = 0;
    for (int level = 0; level < policy.max_levels; ++level) {
        long n_axis = static_cast<long>(std::floor(2 * T / h)) + 1;
        double per = std::pow(static_cast<double>(n_axis), d);
        if (static_cast<double>(total_evals) + per > static_cast<double>(policy.max_evaluations)) {
            best.evaluations = total_evals;
            throw BudgetExceeded(best);
        }
        GridSum g = grid_sum(phase, T, h, policy.midpoint);
        total_evals += g.evaluations;
        if (have_prev) {
            double err = std::abs(g.sum - prev);
            best.value = g.sum;
            best.abs_error = err;
            best.evaluations = total_evals;
            if (err <= tol * std::max(std::abs(g.sum), 1.0) * 0.5) return best;
        } else {
            best.value = g.sum;
            best.abs_error = std::abs(g.sum);
            best.evaluations = total_evals;
        }
        prev = g.sum;
        have_prev = true;
        h /= 2;
    }
    throw BudgetExceeded(best);
}

} // namespace grtoda
