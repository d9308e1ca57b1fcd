#include "mcf/dynamics.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <thread>

namespace mcf {

namespace {

double draw_unit(std::mt19937_64& rng) {
    // uniform in (0, 1]; avoids log(0)
    return (static_cast<double>(rng() >> 11) + 1.0) * 0x1p-53;
}

Vec3 simplex_point(std::mt19937_64& rng) {
    Vec3 x;
    for (auto& v : x) v = -std::log(draw_unit(rng));
    const double s = x[0] + x[1] + x[2];
    return {x[0] / s, x[1] / s, x[2] / s};
}

}  // namespace

Vec3 random_simplex_point(std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    return simplex_point(rng);
}

std::size_t SimplexHistogram::cell_count(int ndivs) {
    return static_cast<std::size_t>(ndivs) * static_cast<std::size_t>(ndivs);
}

std::size_t SimplexHistogram::cell_index(int i, int j, bool up) const {
    // row i holds (ndivs - i) up cells then (ndivs - 1 - i) down cells
    std::size_t base = 0;
    for (int r = 0; r < i; ++r) base += static_cast<std::size_t>(2 * (ndivs - r) - 1);
    return base + 2 * static_cast<std::size_t>(j) + (up ? 0 : 1);
}

std::size_t SimplexHistogram::locate(double x1, double x2) const {
    const double u = x1 * ndivs, v = x2 * ndivs;
    int i = std::min(static_cast<int>(u), ndivs - 1);
    int j = std::min(static_cast<int>(v), ndivs - 1);
    if (i < 0) i = 0;
    if (j < 0) j = 0;
    if (i + j > ndivs - 1) j = ndivs - 1 - i;
    bool up = (u - i) + (v - j) <= 1.0;
    if (i + j == ndivs - 1) up = true;
    return cell_index(i, j, up);
}

std::vector<SimplexHistogram::Cell> SimplexHistogram::cells() const {
    std::vector<Cell> out;
    out.reserve(cell_count(ndivs));
    const double n = ndivs;
    for (int i = 0; i < ndivs; ++i) {
        for (int j = 0; j < ndivs - i; ++j) {
            out.push_back({i, j, true, (i + 1.0 / 3.0) / n, (j + 1.0 / 3.0) / n, 1.0 / (n * n)});
            if (i + j < ndivs - 1)
                out.push_back(
                    {i, j, false, (i + 2.0 / 3.0) / n, (j + 2.0 / 3.0) / n, 1.0 / (n * n)});
        }
    }
    return out;
}

SimplexHistogram invariant_measure_histogram(const AlgorithmDef& algo,
                                             std::uint64_t n_iterations, int ndivs,
                                             std::uint64_t seed) {
    if (ndivs < 1) throw DomainError("ndivs must be at least 1");
    SimplexHistogram h;
    h.ndivs = ndivs;
    h.counts.assign(SimplexHistogram::cell_count(ndivs), 0);

    std::mt19937_64 rng(seed);
    Vec3 x = simplex_point(rng);
    std::uint64_t done = 0;
    while (done < n_iterations) {
        try {
            auto [b, y] = step(algo, x);
            (void)b;
            x = project(y);
        } catch (const DomainError&) {
            if (++h.restarts > 100)
                throw DomainError("invariant measure orbit restarted more than 100 times");
            x = simplex_point(rng);
            continue;
        }
        ++h.counts[h.locate(x[0], x[1])];
        ++done;
    }
    h.total = n_iterations;
    return h;
}

std::optional<double> density_value(const AlgorithmDef& algo, const Vec3& x) {
    auto checked = [](double d) {
        if (d == 0.0) throw DomainError("density denominator vanishes on the boundary");
        return d;
    };
    switch (algo.id) {
        case AlgorithmId::Brun: {
            // sorted coordinates: density depends on the middle one
            Vec3 s = x;
            std::sort(s.begin(), s.end());
            return 1.0 / checked(2.0 * s[1] * (1.0 - s[1]) * (1.0 - s[0] - s[1]));
        }
        case AlgorithmId::Reverse:
            return 1.0 / checked((1.0 - x[0]) * (1.0 - x[1]) * (1.0 - x[2]));
        case AlgorithmId::Cassaigne:
            return 1.0 / checked((1.0 - x[0]) * (1.0 - x[2]));
        default:
            return std::nullopt;
    }
}

std::vector<NaturalExtensionState> natural_extension_sample(const AlgorithmDef& algo,
                                                            std::size_t n,
                                                            std::uint64_t seed) {
    return natural_extension_sample(algo, n, random_simplex_point(seed),
                                    Vec3{1.0 / 3.0, 1.0 / 3.0, 1.0 / 3.0});
}

std::vector<NaturalExtensionState> natural_extension_sample(const AlgorithmDef& algo,
                                                            std::size_t n, Vec3 x, Vec3 a) {
    std::vector<NaturalExtensionState> out;
    out.reserve(n);
    for (std::size_t k = 0; k < n; ++k) {
        const Branch* b;
        try {
            auto [br, y] = step(algo, x);
            b = br;
            x = y;
        } catch (const DomainError& e) {
            throw OrbitDegenerateError("natural extension orbit of " + algo.name +
                                           " degenerates at step " + std::to_string(k) + ": " +
                                           e.what(),
                                       k);
        }
        a = multiply(b->transpose_d, a);
        NaturalExtensionState st;
        st.label = b->tag;
        st.x = x;
        st.a = a;
        std::tie(st.px, st.py) = plane_project(project(x));
        std::tie(st.pax, st.pay) = plane_project(project(a));
        out.push_back(std::move(st));
    }
    return out;
}

LyapunovEstimate lyapunov_orbit(const AlgorithmDef& algo, std::uint64_t n_iterations,
                                std::uint64_t seed) {
    LyapunovEstimate est;
    est.iterations = n_iterations;
    if (n_iterations == 0) return est;

    std::mt19937_64 rng(seed);
    double x0, x1, x2;
    {
        const Vec3 x = simplex_point(rng);
        x0 = x[0];
        x1 = x[1];
        x2 = x[2];
    }
    // companion vector in the annihilator of x
    double y0, y1, y2;
    do {
        y0 = draw_unit(rng) - 0.5;
        y1 = draw_unit(rng) - 0.5;
        y2 = draw_unit(rng) - 0.5;
        const double d = (y0 * x0 + y1 * x1 + y2 * x2) / (x0 * x0 + x1 * x1 + x2 * x2);
        y0 -= d * x0;
        y1 -= d * x1;
        y2 -= d * x2;
    } while (std::fabs(y0) + std::fabs(y1) + std::fabs(y2) == 0.0);
    {
        const double t = std::fabs(y0) + std::fabs(y1) + std::fabs(y2);
        y0 /= t;
        y1 /= t;
        y2 /= t;
    }

    // the per-step 1-norm factors multiply into prod1/prod2, flushed into
    // the log sums before they can under/overflow
    double sum1 = 0.0, sum2 = 0.0, prod1 = 1.0, prod2 = 1.0;
    const int n_branches = static_cast<int>(algo.branches.size());
    // flat copies of the branch data for the hot loop
    struct Mats { DMat3 inv, tr; };
    std::vector<Mats> mats(static_cast<std::size_t>(n_branches));
    for (int i = 0; i < n_branches; ++i)
        mats[static_cast<std::size_t>(i)] = {algo.branches[static_cast<std::size_t>(i)].inverse_d,
                                             algo.branches[static_cast<std::size_t>(i)].transpose_d};

    for (std::uint64_t it = 0; it < n_iterations; ++it) {
        const Vec3 xv{x0, x1, x2};
        int idx;
        try {
            idx = algo.classify_index(xv);
        } catch (const DomainError&) {
            return est;  // success stays false
        }
        const Mats& m = mats[static_cast<std::size_t>(idx)];
        const double nx0 = m.inv[0][0] * x0 + m.inv[0][1] * x1 + m.inv[0][2] * x2;
        const double nx1 = m.inv[1][0] * x0 + m.inv[1][1] * x1 + m.inv[1][2] * x2;
        const double nx2 = m.inv[2][0] * x0 + m.inv[2][1] * x1 + m.inv[2][2] * x2;
        const double s = nx0 + nx1 + nx2;
        if (!(s > 0.0) || nx0 < 1e-100 || nx1 < 1e-100 || nx2 < 1e-100) return est;
        const double rs = 1.0 / s;
        x0 = nx0 * rs;
        x1 = nx1 * rs;
        x2 = nx2 * rs;
        prod1 *= s;
        if (prod1 < 1e-280) {
            const double l = std::log(prod1);
            if (!std::isfinite(l)) return est;
            sum1 -= l;
            prod1 = 1.0;
        }

        const double ny0 = m.tr[0][0] * y0 + m.tr[0][1] * y1 + m.tr[0][2] * y2;
        const double ny1 = m.tr[1][0] * y0 + m.tr[1][1] * y1 + m.tr[1][2] * y2;
        const double ny2 = m.tr[2][0] * y0 + m.tr[2][1] * y1 + m.tr[2][2] * y2;
        const double d =
            (ny0 * x0 + ny1 * x1 + ny2 * x2) / (x0 * x0 + x1 * x1 + x2 * x2);
        y0 = ny0 - d * x0;
        y1 = ny1 - d * x1;
        y2 = ny2 - d * x2;
        const double t = std::fabs(y0) + std::fabs(y1) + std::fabs(y2);
        if (!(t > 0.0)) return est;
        const double rt = 1.0 / t;
        y0 *= rt;
        y1 *= rt;
        y2 *= rt;
        prod2 *= t;
        if (prod2 < 1e-280 || prod2 > 1e280) {
            const double l = std::log(prod2);
            if (!std::isfinite(l)) return est;
            sum2 += l;
            prod2 = 1.0;
        }
    }
    sum1 -= std::log(prod1);
    sum2 += std::log(prod2);
    if (!std::isfinite(sum1) || !std::isfinite(sum2)) return est;

    est.theta1 = sum1 / static_cast<double>(n_iterations);
    est.theta2 = sum2 / static_cast<double>(n_iterations);
    est.ratio = 1.0 - est.theta2 / est.theta1;
    est.success = std::isfinite(est.ratio);
    return est;
}

namespace {

Stats make_stats(const std::vector<double>& xs) {
    Stats s;
    s.min = *std::min_element(xs.begin(), xs.end());
    s.max = *std::max_element(xs.begin(), xs.end());
    double sum = 0;
    for (double v : xs) sum += v;
    s.mean = sum / static_cast<double>(xs.size());
    double var = 0;
    for (double v : xs) var += (v - s.mean) * (v - s.mean);
    s.std_dev = xs.size() > 1 ? std::sqrt(var / static_cast<double>(xs.size() - 1)) : 0.0;
    return s;
}

}  // namespace

LyapunovTable lyapunov_table(const AlgorithmDef& algo, int n_orbits,
                             std::uint64_t n_iterations, std::uint64_t seed,
                             unsigned threads) {
    if (n_orbits < 1) throw DomainError("n_orbits must be at least 1");
    std::vector<LyapunovEstimate> estimates(static_cast<std::size_t>(n_orbits));
    auto run = [&](int begin, int end) {
        for (int k = begin; k < end; ++k)
            estimates[static_cast<std::size_t>(k)] =
                lyapunov_orbit(algo, n_iterations, seed + static_cast<std::uint64_t>(k));
    };
    if (threads <= 1 || n_orbits == 1) {
        run(0, n_orbits);
    } else {
        std::vector<std::thread> pool;
        const int chunk = (n_orbits + static_cast<int>(threads) - 1) / static_cast<int>(threads);
        for (int b = 0; b < n_orbits; b += chunk)
            pool.emplace_back(run, b, std::min(n_orbits, b + chunk));
        for (auto& t : pool) t.join();
    }

    LyapunovTable table;
    table.algorithm = algo.name;
    table.n_orbits = n_orbits;
    table.n_iterations = n_iterations;
    std::vector<double> t1, t2, r;
    for (const auto& e : estimates) {
        if (!e.success) continue;
        t1.push_back(e.theta1);
        t2.push_back(e.theta2);
        r.push_back(e.ratio);
    }
    table.n_success = static_cast<int>(t1.size());
    if (table.n_success == 0)
        throw DomainError("all " + std::to_string(n_orbits) + " orbits of " + algo.name +
                          " failed");
    table.theta1 = make_stats(t1);
    table.theta2 = make_stats(t2);
    table.ratio = make_stats(r);
    return table;
}

std::vector<LyapunovTable> lyapunov_comparison(const std::vector<const AlgorithmDef*>& algos,
                                               int n_orbits, std::uint64_t n_iterations,
                                               std::uint64_t seed, unsigned threads) {
    if (algos.empty()) throw DomainError("empty algorithm list");
    std::vector<LyapunovTable> out;
    out.reserve(algos.size());
    for (const AlgorithmDef* a : algos)
        out.push_back(lyapunov_table(*a, n_orbits, n_iterations, seed, threads));
    return out;
}

}  // namespace mcf
