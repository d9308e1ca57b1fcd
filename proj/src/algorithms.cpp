#include "mcf/algorithms.hpp"

#include <algorithm>
#include <cassert>
#include <cctype>
#include <cmath>
#include <stdexcept>

namespace mcf {

namespace {

struct BranchSpec {
    const char* tag;
    std::int64_t m[9];
    const char* sub[3];
    const char* dual[3];
};

// Branch tables: tag, matrix (row major), substitution images, dual images.
const BranchSpec kBrun[] = {
    {"123", {1,0,0, 0,1,0, 0,1,1}, {"1","23","3"}, {"1","2","32"}},
    {"132", {1,0,0, 0,1,1, 0,0,1}, {"1","2","32"}, {"1","23","3"}},
    {"213", {1,0,0, 0,1,0, 1,0,1}, {"13","2","3"}, {"1","2","31"}},
    {"231", {1,0,1, 0,1,0, 0,0,1}, {"1","2","31"}, {"13","2","3"}},
    {"312", {1,0,0, 1,1,0, 0,0,1}, {"12","2","3"}, {"1","21","3"}},
    {"321", {1,1,0, 0,1,0, 0,0,1}, {"1","21","3"}, {"12","2","3"}},
};

const BranchSpec kSelmer[] = {
    {"123", {1,0,0, 0,1,0, 1,0,1}, {"13","2","3"}, {"1","2","31"}},
    {"132", {1,0,0, 1,1,0, 0,0,1}, {"12","2","3"}, {"1","21","3"}},
    {"213", {1,0,0, 0,1,0, 0,1,1}, {"1","23","3"}, {"1","2","32"}},
    {"231", {1,1,0, 0,1,0, 0,0,1}, {"1","21","3"}, {"12","2","3"}},
    {"312", {1,0,0, 0,1,1, 0,0,1}, {"1","2","32"}, {"1","23","3"}},
    {"321", {1,0,1, 0,1,0, 0,0,1}, {"1","2","31"}, {"13","2","3"}},
};

const BranchSpec kPoincare[] = {
    {"123", {1,0,0, 1,1,0, 1,1,1}, {"123","23","3"},  {"1","21","321"}},
    {"132", {1,0,0, 1,1,1, 1,0,1}, {"132","2","32"},  {"1","231","31"}},
    {"213", {1,1,0, 0,1,0, 1,1,1}, {"13","213","3"},  {"12","2","312"}},
    {"231", {1,1,1, 0,1,0, 0,1,1}, {"1","231","31"},  {"132","2","32"}},
    {"312", {1,0,1, 1,1,1, 0,0,1}, {"12","2","312"},  {"13","213","3"}},
    {"321", {1,1,1, 0,1,1, 0,0,1}, {"1","21","321"},  {"123","23","3"}},
};

const BranchSpec kFullySubtractive[] = {
    {"1", {1,0,0, 1,1,0, 1,0,1}, {"123","2","3"}, {"1","21","31"}},
    {"2", {1,1,0, 0,1,0, 0,1,1}, {"1","231","3"}, {"12","2","32"}},
    {"3", {1,0,1, 0,1,1, 0,0,1}, {"1","2","312"}, {"13","23","3"}},
};

const BranchSpec kARP[] = {
    {"1",   {1,1,1, 0,1,0, 0,0,1}, {"1","21","31"},   {"123","2","3"}},
    {"2",   {1,0,0, 1,1,1, 0,0,1}, {"12","2","32"},   {"1","231","3"}},
    {"3",   {1,0,0, 0,1,0, 1,1,1}, {"13","23","3"},   {"1","2","312"}},
    {"123", {1,0,0, 1,1,0, 1,1,1}, {"123","23","3"},  {"1","21","321"}},
    {"132", {1,0,0, 1,1,1, 1,0,1}, {"132","2","32"},  {"1","231","31"}},
    {"213", {1,1,0, 0,1,0, 1,1,1}, {"13","213","3"},  {"12","2","312"}},
    {"231", {1,1,1, 0,1,0, 0,1,1}, {"1","231","31"},  {"132","2","32"}},
    {"312", {1,0,1, 1,1,1, 0,0,1}, {"12","2","312"},  {"13","213","3"}},
    {"321", {1,1,1, 0,1,1, 0,0,1}, {"1","21","321"},  {"123","23","3"}},
};

const BranchSpec kReverse[] = {
    {"1", {1,1,1, 0,1,0, 0,0,1}, {"1","21","31"}, {"123","2","3"}},
    {"2", {1,0,0, 1,1,1, 0,0,1}, {"12","2","32"}, {"1","231","3"}},
    {"3", {1,0,0, 0,1,0, 1,1,1}, {"13","23","3"}, {"1","2","312"}},
    {"4", {0,1,1, 1,0,1, 1,1,0}, {"23","31","12"}, {"23","13","12"}},
};

const BranchSpec kCassaigne[] = {
    {"1", {1,1,0, 0,0,1, 0,1,0}, {"1","13","2"}, {"12","3","2"}},
    {"2", {0,1,0, 1,0,0, 0,1,1}, {"2","13","3"}, {"2","1","23"}},
};

Branch make_branch(const BranchSpec& spec) {
    Branch b;
    b.tag = spec.tag;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) b.matrix[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = spec.m[3 * i + j];
    b.determinant = det(b.matrix);
    b.inverse = inverse(b.matrix);
    b.inverse_d = to_double(b.inverse);
    b.transpose_d = to_double(transpose(b.matrix));
    b.substitution = Substitution{{spec.sub[0], spec.sub[1], spec.sub[2]}};
    b.dual_substitution = Substitution{{spec.dual[0], spec.dual[1], spec.dual[2]}};
    assert(incidence(b.substitution) == b.matrix);
    assert(incidence(b.dual_substitution) == transpose(b.matrix));
    return b;
}

template <std::size_t N>
AlgorithmDef make_algorithm(AlgorithmId id, const char* name, const char* cli_name,
                            PartitionKind partition, const BranchSpec (&specs)[N]) {
    AlgorithmDef algo;
    algo.id = id;
    algo.name = name;
    algo.cli_name = cli_name;
    algo.partition = partition;
    algo.branches.reserve(N);
    for (const auto& spec : specs) algo.branches.push_back(make_branch(spec));
    return algo;
}

const std::vector<AlgorithmDef>& registry() {
    static const std::vector<AlgorithmDef> algos = [] {
        std::vector<AlgorithmDef> v;
        v.push_back(make_algorithm(AlgorithmId::Brun, "Brun", "brun",
                                   PartitionKind::SortedPermutation, kBrun));
        v.push_back(make_algorithm(AlgorithmId::Selmer, "Selmer", "selmer",
                                   PartitionKind::SortedPermutation, kSelmer));
        v.push_back(make_algorithm(AlgorithmId::Poincare, "Poincare", "poincare",
                                   PartitionKind::SortedPermutation, kPoincare));
        v.push_back(make_algorithm(AlgorithmId::FullySubtractive, "Fully Subtractive",
                                   "fully-subtractive", PartitionKind::MinimumIndex,
                                   kFullySubtractive));
        v.push_back(make_algorithm(AlgorithmId::ARP, "Arnoux-Rauzy-Poincare", "arp",
                                   PartitionKind::DominantThenPermutation, kARP));
        v.push_back(make_algorithm(AlgorithmId::Reverse, "Reverse", "reverse",
                                   PartitionKind::DominantThenRest, kReverse));
        v.push_back(make_algorithm(AlgorithmId::Cassaigne, "Cassaigne", "cassaigne",
                                   PartitionKind::FirstVersusThird, kCassaigne));
        return v;
    }();
    return algos;
}

std::string lower_alnum(std::string_view s) {
    std::string out;
    for (char c : s)
        if (std::isalnum(static_cast<unsigned char>(c)))
            out += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    return out;
}

template <class T>
std::pair<const Branch*, std::array<T, 3>> step_impl(const AlgorithmDef& algo,
                                                     const std::array<T, 3>& x) {
    const int idx = algo.classify_index(x);
    const Branch& b = algo.branches[static_cast<std::size_t>(idx)];
    std::array<T, 3> y;
    if constexpr (std::is_same_v<T, double>) {
        y = multiply(b.inverse_d, x);
        const double tol = -1e-12 * l1_norm(x);
        for (auto& v : y) {
            if (v < 0) {
                if (v < tol)
                    throw DomainError("negative coordinate after step (classification inconsistency)");
                v = 0.0;
            }
        }
    } else {
        y = multiply(b.inverse, x);
        for (const auto& v : y)
            if (v < 0)
                throw DomainError("negative coordinate after step (classification inconsistency)");
    }
    return {&b, y};
}

template <class T>
std::vector<std::string> coding_impl(const AlgorithmDef& algo, std::array<T, 3> x, std::size_t n) {
    std::vector<std::string> out;
    out.reserve(n);
    for (std::size_t k = 0; k < n; ++k) {
        try {
            auto [b, y] = step_impl(algo, x);
            out.push_back(b->tag);
            x = y;
        } catch (const DomainError& e) {
            throw OrbitDegenerateError("orbit of " + algo.name + " degenerates at step " +
                                           std::to_string(k) + ": " + e.what(),
                                       k);
        }
    }
    return out;
}

}  // namespace

const Branch& AlgorithmDef::branch(std::string_view tag) const {
    const int i = branch_index(tag);
    if (i < 0)
        throw std::invalid_argument("unknown branch label '" + std::string(tag) + "' for " + name);
    return branches[static_cast<std::size_t>(i)];
}

int AlgorithmDef::branch_index(std::string_view tag) const {
    for (std::size_t i = 0; i < branches.size(); ++i)
        if (branches[i].tag == tag) return static_cast<int>(i);
    return -1;
}

const AlgorithmDef& algorithm(AlgorithmId id) {
    for (const auto& a : registry())
        if (a.id == id) return a;
    throw std::invalid_argument("unknown algorithm id");
}

const std::vector<const AlgorithmDef*>& all_algorithms() {
    static const std::vector<const AlgorithmDef*> ptrs = [] {
        std::vector<const AlgorithmDef*> v;
        for (const auto& a : registry()) v.push_back(&a);
        return v;
    }();
    return ptrs;
}

const AlgorithmDef& algorithm(std::string_view name) {
    const std::string key = lower_alnum(name);
    for (const auto& a : registry()) {
        if (key == lower_alnum(a.name) || key == lower_alnum(a.cli_name)) return a;
    }
    if (key == "arnouxrauzypoincare" || key == "arp") return algorithm(AlgorithmId::ARP);
    std::string names;
    for (const auto& a : registry()) {
        if (!names.empty()) names += ", ";
        names += a.cli_name;
    }
    throw std::invalid_argument("unknown algorithm '" + std::string(name) +
                                "' (supported: " + names + ")");
}

const Branch& classify(const AlgorithmDef& algo, const Vec3& x) {
    return algo.branches[static_cast<std::size_t>(algo.classify_index(x))];
}

const Branch& classify(const AlgorithmDef& algo, const RVec3& x) {
    return algo.branches[static_cast<std::size_t>(algo.classify_index(x))];
}

std::pair<const Branch*, Vec3> step(const AlgorithmDef& algo, const Vec3& x) {
    return step_impl(algo, x);
}

std::pair<const Branch*, RVec3> step(const AlgorithmDef& algo, const RVec3& x) {
    return step_impl(algo, x);
}

Vec3 project(const Vec3& x) {
    const double s = x[0] + x[1] + x[2];
    if (s == 0.0 || !std::isfinite(s)) throw DomainError("cannot project zero vector");
    return {x[0] / s, x[1] / s, x[2] / s};
}

RVec3 project(const RVec3& x) {
    const Rational s = x[0] + x[1] + x[2];
    if (s == 0) throw DomainError("cannot project zero vector");
    return {x[0] / s, x[1] / s, x[2] / s};
}

std::vector<std::string> coding(const AlgorithmDef& algo, Vec3 x, std::size_t n) {
    return coding_impl(algo, x, n);
}

std::vector<std::string> coding(const AlgorithmDef& algo, RVec3 x, std::size_t n) {
    return coding_impl(algo, x, n);
}

}  // namespace mcf
