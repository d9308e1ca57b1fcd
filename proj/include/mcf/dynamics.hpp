#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "mcf/algorithms.hpp"

namespace mcf {

// Uniform point on the open simplex (three exponential draws, normalized).
Vec3 random_simplex_point(std::uint64_t seed);

// Triangular barycentric grid on the simplex: every square (i,j) of the
// (x1,x2) grid splits into an up and a down triangle, ndivs^2 cells total,
// all of equal area.
struct SimplexHistogram {
    int ndivs = 0;
    std::uint64_t total = 0;
    int restarts = 0;
    std::vector<std::uint64_t> counts;  // indexed by cell_index

    struct Cell {
        int i, j;
        bool up;
        double bx, by;  // barycenter (x1, x2); x3 = 1 - bx - by
        double area;    // fraction of the simplex, = 1 / ndivs^2
    };

    static std::size_t cell_count(int ndivs);
    std::size_t cell_index(int i, int j, bool up) const;
    std::size_t locate(double x1, double x2) const;  // clamps boundary hits
    std::vector<Cell> cells() const;

    bool operator==(const SimplexHistogram&) const = default;
};

// Projective orbit histogram; degenerate orbits restart from fresh seeds
// (counted in `restarts`, error after 100) so that total == n_iterations.
SimplexHistogram invariant_measure_histogram(const AlgorithmDef& algo,
                                             std::uint64_t n_iterations, int ndivs,
                                             std::uint64_t seed);

// Closed-form invariant density at an interior simplex point, where the
// formula is known (Brun, Reverse, Cassaigne); nullopt otherwise.
// Throws DomainError when a denominator vanishes (boundary point).
std::optional<double> density_value(const AlgorithmDef& algo, const Vec3& x);

struct NaturalExtensionState {
    std::string label;  // branch applied to reach this state
    Vec3 x;             // forward vector
    Vec3 a;             // dual vector
    double px, py;      // plane projection of project(x)
    double pax, pay;    // plane projection of project(a)
};

// Coupled orbit x <- M^-1 x, a <- M^T a from a random simplex start and
// a0 = (1/3, 1/3, 1/3); <a, x> is invariant along the orbit.
std::vector<NaturalExtensionState> natural_extension_sample(const AlgorithmDef& algo,
                                                            std::size_t n,
                                                            std::uint64_t seed);
std::vector<NaturalExtensionState> natural_extension_sample(const AlgorithmDef& algo,
                                                            std::size_t n, Vec3 x0, Vec3 a0);

struct LyapunovEstimate {
    double theta1 = 0;
    double theta2 = 0;
    double ratio = 0;  // 1 - theta2/theta1
    std::uint64_t iterations = 0;
    bool success = false;
};

// Two-vector scheme: theta1 from the 1-norm contraction of the orbit
// vector, theta2 from the growth of a transpose-cocycle companion kept in
// the annihilator of x (re-orthogonalized every step).
LyapunovEstimate lyapunov_orbit(const AlgorithmDef& algo, std::uint64_t n_iterations,
                                std::uint64_t seed);

struct Stats {
    double min = 0, mean = 0, max = 0, std_dev = 0;
    bool operator==(const Stats&) const = default;
};

struct LyapunovTable {
    std::string algorithm;
    int n_orbits = 0;
    int n_success = 0;
    std::uint64_t n_iterations = 0;
    Stats theta1, theta2, ratio;
    bool operator==(const LyapunovTable&) const = default;
};

// Per-orbit seeds are seed + orbit index; aggregates over successful
// orbits only.  Throws DomainError when every orbit fails.
LyapunovTable lyapunov_table(const AlgorithmDef& algo, int n_orbits,
                             std::uint64_t n_iterations, std::uint64_t seed,
                             unsigned threads = 1);

std::vector<LyapunovTable> lyapunov_comparison(const std::vector<const AlgorithmDef*>& algos,
                                               int n_orbits, std::uint64_t n_iterations,
                                               std::uint64_t seed, unsigned threads = 1);

}  // namespace mcf
