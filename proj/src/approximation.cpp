#include "vilenkin/approximation.hpp"

#include <algorithm>
#include <cmath>
#include <thread>

#include "vilenkin/rng.hpp"

namespace vilenkin {

namespace {

void check_exponent(double p) {
    if (std::isnan(p) || p < 1.0) {
        throw BadExponent("norm exponent must satisfy p >= 1 (or infinity)");
    }
}

void check_alpha(double alpha) {
    if (!(alpha > 0.0 && alpha < 1.0)) {
        throw OrderOutOfRange("alpha must lie in (0,1)");
    }
}

/// Walks the grid labels j = 0..M_N-1 with body(j, label(x_j + h)).
/// The translated label is maintained incrementally through the mixed-radix
/// counter, so the walk costs O(M_N) in total.
template <typename Body>
void for_each_translated(const RadixStructure& s, std::int64_t h_label, Body&& body) {
    const int n_levels = s.level();
    const std::int64_t total = s.size();
    std::vector<int> x(static_cast<std::size_t>(n_levels), 0);
    std::vector<int> shifted(static_cast<std::size_t>(n_levels));
    std::vector<std::int64_t> place(static_cast<std::size_t>(n_levels));
    std::int64_t rest = h_label;
    for (int k = 0; k < n_levels; ++k) {
        place[static_cast<std::size_t>(k)] = s.place(k);
        shifted[static_cast<std::size_t>(k)] =
            static_cast<int>(rest / place[static_cast<std::size_t>(k)]);
        rest %= place[static_cast<std::size_t>(k)];
    }
    std::int64_t slabel = h_label;
    for (std::int64_t j = 0;; ++j) {
        body(j, slabel);
        if (j + 1 == total) break;
        for (int d = n_levels - 1;; --d) {
            const std::size_t ud = static_cast<std::size_t>(d);
            const int m = s.radix(d);
            int next = shifted[ud] + 1;
            if (next == m) next = 0;
            slabel += static_cast<std::int64_t>(next - shifted[ud]) * place[ud];
            shifted[ud] = next;
            if (++x[ud] < m) break;
            x[ud] = 0;
        }
    }
}

struct NormRequest {
    bool want_abs = false;   // p = 1
    bool want_sq = false;    // p = 2
    bool want_max = false;   // p = inf
    std::vector<double> generic;
};

NormRequest classify(std::span<const double> ps) {
    NormRequest req;
    for (double p : ps) {
        check_exponent(p);
        if (std::isinf(p)) {
            req.want_max = true;
        } else if (p == 1.0) {
            req.want_abs = true;
        } else if (p == 2.0) {
            req.want_sq = true;
        } else {
            req.generic.push_back(p);
        }
    }
    return req;
}

struct NormAccumulators {
    long double sum_abs = 0.0L;
    long double sum_sq = 0.0L;
    double max_sq = 0.0;
    std::vector<long double> sum_generic;
};

/// ||f(.+h) - f||_p for every requested exponent at once; one grid pass.
void translation_norms(const StepFunction& f, std::int64_t h_label, const NormRequest& req,
                       std::span<const double> ps, double* out) {
    NormAccumulators acc;
    acc.sum_generic.assign(req.generic.size(), 0.0L);
    const Complex* v = f.values.data();
    const bool need_abs = req.want_abs;
    const bool has_generic = !req.generic.empty();
    for_each_translated(f.structure, h_label, [&](std::int64_t j, std::int64_t sj) {
        const Complex d = v[sj] - v[j];
        const double d2 = d.real() * d.real() + d.imag() * d.imag();
        acc.sum_sq += d2;
        if (d2 > acc.max_sq) acc.max_sq = d2;
        if (need_abs) acc.sum_abs += std::sqrt(d2);
        if (has_generic) {
            for (std::size_t i = 0; i < req.generic.size(); ++i) {
                acc.sum_generic[i] += std::pow(d2, req.generic[i] / 2.0);
            }
        }
    });
    const double inv_total = 1.0 / static_cast<double>(f.structure.size());
    std::size_t gi = 0;
    for (std::size_t i = 0; i < ps.size(); ++i) {
        const double p = ps[i];
        if (std::isinf(p)) {
            out[i] = std::sqrt(acc.max_sq);
        } else if (p == 1.0) {
            out[i] = static_cast<double>(acc.sum_abs) * inv_total;
        } else if (p == 2.0) {
            out[i] = std::sqrt(static_cast<double>(acc.sum_sq) * inv_total);
        } else {
            out[i] = std::pow(static_cast<double>(acc.sum_generic[gi++]) * inv_total, 1.0 / p);
        }
    }
}

}  // namespace

double lp_norm(const StepFunction& f, double p) {
    check_exponent(p);
    f.validate();
    const double inv_total = 1.0 / static_cast<double>(f.structure.size());
    if (std::isinf(p)) {
        double peak = 0.0;
        for (const Complex& z : f.values) {
            peak = std::max(peak, std::abs(z));
        }
        return peak;
    }
    if (p == 2.0) {
        long double acc = 0.0L;
        for (const Complex& z : f.values) {
            acc += static_cast<long double>(std::norm(z));
        }
        return std::sqrt(static_cast<double>(acc) * inv_total);
    }
    long double acc = 0.0L;
    for (const Complex& z : f.values) {
        acc += std::pow(static_cast<long double>(std::abs(z)), static_cast<long double>(p));
    }
    return static_cast<double>(std::pow(acc * static_cast<long double>(inv_total),
                                        1.0L / static_cast<long double>(p)));
}

double modulus(const StepFunction& f, int r, double p) {
    check_exponent(p);
    f.validate();
    const RadixStructure& s = f.structure;
    if (r < 0 || r > s.level()) {
        throw LevelOutOfRange("modulus level outside [0, N]");
    }
    const std::int64_t h_count = s.size() / s.cumulative(r);  // translations in I_r
    const double ps[1] = {p};
    const NormRequest req = classify(ps);
    double worst = 0.0;
    for (std::int64_t h = 1; h < h_count; ++h) {
        double value = 0.0;
        translation_norms(f, h, req, ps, &value);
        worst = std::max(worst, value);
    }
    return worst;
}

std::vector<ModulusProfile> modulus_profiles(const StepFunction& f, std::span<const double> ps) {
    f.validate();
    const RadixStructure& s = f.structure;
    const std::int64_t total = s.size();
    const NormRequest req = classify(ps);
    const std::size_t np = ps.size();

    // Norms for every translation h; slot h*np + i holds exponent ps[i].
    std::vector<double> norms(static_cast<std::size_t>(total) * np, 0.0);
    const unsigned hw = std::max(1u, std::thread::hardware_concurrency());
    const unsigned workers =
        total >= 8192 ? std::min<unsigned>(hw, 8) : 1u;
    auto run_range = [&](std::int64_t begin, std::int64_t end) {
        for (std::int64_t h = begin; h < end; ++h) {
            translation_norms(f, h, req, ps, norms.data() + static_cast<std::size_t>(h) * np);
        }
    };
    if (workers <= 1) {
        run_range(1, total);
    } else {
        std::vector<std::thread> pool;
        const std::int64_t span = (total - 1 + workers - 1) / workers;
        for (unsigned w = 0; w < workers; ++w) {
            const std::int64_t begin = 1 + static_cast<std::int64_t>(w) * span;
            const std::int64_t end = std::min<std::int64_t>(total, begin + span);
            if (begin >= end) break;
            pool.emplace_back(run_range, begin, end);
        }
        for (std::thread& t : pool) t.join();
    }

    // omega(1/M_r) is the max over the label block I_r = [0, M_N/M_r).
    std::vector<ModulusProfile> profiles;
    profiles.reserve(np);
    for (std::size_t i = 0; i < np; ++i) {
        ModulusProfile profile{ps[i], s, std::vector<double>(static_cast<std::size_t>(s.level()) + 1, 0.0)};
        profiles.push_back(std::move(profile));
    }
    for (int r = 0; r <= s.level(); ++r) {
        const std::int64_t h_count = total / s.cumulative(r);
        for (std::size_t i = 0; i < np; ++i) {
            double worst = 0.0;
            for (std::int64_t h = 1; h < h_count; ++h) {
                worst = std::max(worst, norms[static_cast<std::size_t>(h) * np + i]);
            }
            profiles[i].omegas[static_cast<std::size_t>(r)] = worst;
        }
    }
    return profiles;
}

ModulusProfile modulus_profile(const StepFunction& f, double p) {
    const double ps[1] = {p};
    return modulus_profiles(f, ps).front();
}

double modulus_bound(const ModulusProfile& profile, int k, double alpha) {
    check_alpha(alpha);
    const RadixStructure& s = profile.structure;
    if (k < 2 || k > s.level()) {
        throw LevelOutOfRange("bound needs 2 <= k <= N");
    }
    const double m_k = static_cast<double>(s.cumulative(k));
    double bound = std::pow(m_k, alpha) * profile.omega(k - 1);
    for (int r = 0; r <= k - 2; ++r) {
        bound += static_cast<double>(s.cumulative(r)) / m_k * profile.omega(r);
    }
    return bound;
}

double approximation_error(const StepFunction& f, std::int64_t n, double alpha, double p) {
    check_alpha(alpha);
    check_exponent(p);
    const StepFunction mean = cesaro_mean(forward(f), n, -alpha);
    StepFunction diff = mean;
    for (std::size_t j = 0; j < diff.values.size(); ++j) {
        diff.values[j] -= f.values[j];
    }
    return lp_norm(diff, p);
}

namespace {

std::int64_t pick_n(const RadixStructure& s, int k, const NPolicy& policy) {
    const std::int64_t lo = s.cumulative(k);
    const std::int64_t hi = s.cumulative(k + 1);  // exclusive
    switch (policy.kind) {
        case NPolicy::Kind::BlockStart:
            return lo;
        case NPolicy::Kind::BlockEnd:
            return hi - 1;
        case NPolicy::Kind::Random: {
            Rng rng(policy.seed + 1000003ULL * static_cast<std::uint64_t>(k));
            return lo + static_cast<std::int64_t>(rng.below(static_cast<std::uint64_t>(hi - lo)));
        }
    }
    return lo;
}

}  // namespace

std::vector<std::vector<ConvergenceRow>> convergence_tables(const StepFunction& f, double alpha,
                                                            std::span<const double> ps, int k_lo,
                                                            int k_hi, NPolicy policy) {
    check_alpha(alpha);
    const RadixStructure& s = f.structure;
    if (k_lo < 2 || k_hi > s.level() - 1 || k_lo > k_hi) {
        throw LevelOutOfRange("k range must lie within [2, N-1]");
    }
    const std::vector<ModulusProfile> profiles = modulus_profiles(f, ps);
    const Spectrum spec = forward(f);
    std::vector<std::vector<ConvergenceRow>> tables(ps.size());
    for (int k = k_lo; k <= k_hi; ++k) {
        const std::int64_t n = pick_n(s, k, policy);
        const StepFunction mean = cesaro_mean(spec, n, -alpha);
        StepFunction diff = mean;
        for (std::size_t j = 0; j < diff.values.size(); ++j) {
            diff.values[j] -= f.values[j];
        }
        for (std::size_t i = 0; i < ps.size(); ++i) {
            ConvergenceRow row;
            row.k = k;
            row.n = n;
            row.error = lp_norm(diff, ps[i]);
            row.bound = modulus_bound(profiles[i], k, alpha);
            if (row.bound > 0.0) {
                row.ratio = row.error / row.bound;
            }
            tables[i].push_back(row);
        }
    }
    return tables;
}

std::vector<ConvergenceRow> convergence_table(const StepFunction& f, double alpha, double p,
                                              int k_lo, int k_hi, NPolicy policy) {
    const double ps[1] = {p};
    return std::move(convergence_tables(f, alpha, ps, k_lo, k_hi, policy).front());
}

StepFunction gen_lacunary(double beta, const RadixStructure& s) {
    if (!(beta > 0.0 && beta <= 1.0)) {
        throw OrderOutOfRange("lacunary exponent must lie in (0,1]");
    }
    std::vector<Complex> coeffs(static_cast<std::size_t>(s.size()), Complex{0.0, 0.0});
    for (int j = 0; j < s.level(); ++j) {
        const std::int64_t index = s.cumulative(j);
        coeffs[static_cast<std::size_t>(index)] =
            std::pow(static_cast<double>(s.cumulative(j)), -beta);
    }
    return inverse(Spectrum{s, std::move(coeffs)});
}

StepFunction gen_indicator(int r, std::int64_t label, const RadixStructure& s) {
    if (r < 0 || r > s.level()) {
        throw LevelOutOfRange("indicator level outside [0, N]");
    }
    if (label < 0 || label >= s.cumulative(r)) {
        throw OutOfRange("coset label outside [0, M_r)");
    }
    const std::int64_t block = s.size() / s.cumulative(r);
    std::vector<Complex> values(static_cast<std::size_t>(s.size()), Complex{0.0, 0.0});
    std::fill(values.begin() + label * block, values.begin() + (label + 1) * block,
              Complex{1.0, 0.0});
    return StepFunction{s, std::move(values)};
}

StepFunction gen_random(std::uint64_t seed, int r, const RadixStructure& s) {
    if (r < 0 || r > s.level()) {
        throw LevelOutOfRange("level outside [0, N]");
    }
    Rng rng(seed);
    const std::int64_t block = s.size() / s.cumulative(r);
    std::vector<Complex> values(static_cast<std::size_t>(s.size()));
    for (std::int64_t b = 0; b < s.cumulative(r); ++b) {
        const Complex z = rng.complex_uniform();
        std::fill(values.begin() + b * block, values.begin() + (b + 1) * block, z);
    }
    return StepFunction{s, std::move(values)};
}

}  // namespace vilenkin
