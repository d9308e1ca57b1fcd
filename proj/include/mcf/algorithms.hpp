#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "mcf/errors.hpp"
#include "mcf/linalg.hpp"
#include "mcf/words.hpp"

namespace mcf {

enum class AlgorithmId { Brun, Selmer, Poincare, FullySubtractive, ARP, Reverse, Cassaigne };

// How the positive cone is partitioned into branch cells.
enum class PartitionKind {
    SortedPermutation,        // Brun, Selmer, Poincare: cell per coordinate ordering
    MinimumIndex,             // Fully Subtractive: cell per argmin
    DominantThenPermutation,  // ARP: 2x_i > sum first, otherwise ordering cell
    DominantThenRest,         // Reverse: 2x_i > sum first, otherwise branch 4
    FirstVersusThird,         // Cassaigne: x1 > x3 or not
};

struct Branch {
    std::string tag;             // "123".."321" or "1".."4"
    IMat3 matrix;                // non-negative integer branch matrix
    RMat3 inverse;               // exact inverse
    DMat3 inverse_d;             // same, in doubles, for orbit loops
    DMat3 transpose_d;           // matrix transpose in doubles (dual/cocycle updates)
    std::int64_t determinant;
    Substitution substitution;
    Substitution dual_substitution;
};

class AlgorithmDef {
public:
    AlgorithmId id;
    std::string name;      // display name, e.g. "Fully Subtractive"
    std::string cli_name;  // e.g. "fully-subtractive"
    PartitionKind partition;
    std::vector<Branch> branches;

    const Branch& branch(std::string_view tag) const;  // throws std::invalid_argument
    int branch_index(std::string_view tag) const;      // -1 if unknown

    // Index of the branch cell containing x.  Ties are resolved by ordering
    // coordinates by (value, index); Cassaigne sends x1 == x3 to branch 2;
    // the dominant-coordinate tests are strict, so equality falls through.
    // Throws DegenerateInputError when two or more coordinates are zero.
    template <class T>
    int classify_index(const std::array<T, 3>& x) const;
};

const AlgorithmDef& algorithm(AlgorithmId id);
const std::vector<const AlgorithmDef*>& all_algorithms();

// Accepts enum names ("Brun", "FullySubtractive"), display names and CLI
// names, case-insensitively.  Throws std::invalid_argument listing the
// supported names.
const AlgorithmDef& algorithm(std::string_view name);

const Branch& classify(const AlgorithmDef& algo, const Vec3& x);
const Branch& classify(const AlgorithmDef& algo, const RVec3& x);

// One application of F(x) = M(x)^{-1} x.
std::pair<const Branch*, Vec3> step(const AlgorithmDef& algo, const Vec3& x);
std::pair<const Branch*, RVec3> step(const AlgorithmDef& algo, const RVec3& x);

Vec3 project(const Vec3& x);    // x / |x|_1; throws DomainError on zero vector
RVec3 project(const RVec3& x);

// First n branch tags of the orbit of x.  Throws OrbitDegenerateError with
// the failing step index if classification breaks down along the way.
std::vector<std::string> coding(const AlgorithmDef& algo, Vec3 x, std::size_t n);
std::vector<std::string> coding(const AlgorithmDef& algo, RVec3 x, std::size_t n);

// ---- implementation ----

template <class T>
int AlgorithmDef::classify_index(const std::array<T, 3>& x) const {
    int zeros = 0;
    for (const auto& v : x) {
        if (v < T(0)) throw DegenerateInputError("negative coordinate");
        if (v == T(0)) ++zeros;
    }
    if (zeros >= 2)
        throw DegenerateInputError("input has two or more zero coordinates");

    // less-than under the (value, index) tie-break
    auto lt = [&x](int i, int j) { return x[static_cast<std::size_t>(i)] < x[static_cast<std::size_t>(j)] || (x[static_cast<std::size_t>(i)] == x[static_cast<std::size_t>(j)] && i < j); };

    switch (partition) {
        case PartitionKind::FirstVersusThird:
            return x[0] > x[2] ? 0 : 1;
        case PartitionKind::DominantThenPermutation:
        case PartitionKind::DominantThenRest: {
            const T sum = x[0] + x[1] + x[2];
            for (int i = 0; i < 3; ++i)
                if (x[static_cast<std::size_t>(i)] + x[static_cast<std::size_t>(i)] > sum) return i;
            if (partition == PartitionKind::DominantThenRest) return 3;
            break;  // ARP falls through to the permutation cells
        }
        default:
            break;
    }

    int a = 0, b = 1, c = 2;  // sort three indices by lt
    if (lt(b, a)) std::swap(a, b);
    if (lt(c, b)) {
        std::swap(b, c);
        if (lt(b, a)) std::swap(a, b);
    }
    if (partition == PartitionKind::MinimumIndex) return a;

    // permutation branches are stored in lexicographic tag order:
    // 123, 132, 213, 231, 312, 321
    static constexpr int perm_slot[3][3] = {{-1, 0, 1}, {2, -1, 3}, {4, 5, -1}};
    const int slot = perm_slot[a][b];
    const int base = partition == PartitionKind::DominantThenPermutation ? 3 : 0;
    return base + slot;
}

}  // namespace mcf
