#include "mcf/eonestar.hpp"

#include <algorithm>
#include <set>

namespace mcf {

namespace {

void check_unimodular(const Substitution& s) {
    const std::int64_t d = det(incidence(s));
    if (d != 1 && d != -1) {
        const std::string repr = "(" + format_substitution(s) + ")";
        throw UnimodularityError("The substitution " + repr + " must be unimodular.", repr);
    }
}

IMat3 integer_inverse(const IMat3& m) {
    const std::int64_t d = det(m);
    IMat3 inv;
    for (int i = 0; i < 3; ++i) {
        for (int j = 0; j < 3; ++j) {
            const int r1 = (j + 1) % 3, r2 = (j + 2) % 3;
            const int c1 = (i + 1) % 3, c2 = (i + 2) % 3;
            inv[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
                (m[static_cast<std::size_t>(r1)][static_cast<std::size_t>(c1)] * m[static_cast<std::size_t>(r2)][static_cast<std::size_t>(c2)] -
                 m[static_cast<std::size_t>(r1)][static_cast<std::size_t>(c2)] * m[static_cast<std::size_t>(r2)][static_cast<std::size_t>(c1)]) /
                d;
        }
    }
    return inv;
}

}  // namespace

Patch unit_cube_seed() {
    return {Face{{0, 0, 0}, 1}, Face{{0, 0, 0}, 2}, Face{{0, 0, 0}, 3}};
}

Patch e_one_star(const Substitution& s, const Patch& patch) {
    check_unimodular(s);
    const IMat3 inv = integer_inverse(incidence(s));
    std::set<Face> out;
    for (const Face& f : patch) {
        for (int j = 0; j < 3; ++j) {
            const Word& img = s.images[static_cast<std::size_t>(j)];
            for (std::size_t k = 0; k < img.size(); ++k) {
                if (img[k] - '0' != f.type) continue;
                const IVec3 suffix = parikh(std::string_view(img).substr(k + 1));
                const IVec3 shifted{f.position[0] + suffix[0], f.position[1] + suffix[1],
                                    f.position[2] + suffix[2]};
                out.insert(Face{multiply(inv, shifted), j + 1});
            }
        }
    }
    return Patch(out.begin(), out.end());
}

Patch e_one_star_iterate(const AlgorithmDef& algo, const Vec3& v, int n) {
    if (n < 0) throw std::invalid_argument("iteration count must be non-negative");
    const std::vector<std::string> labels = coding(algo, v, static_cast<std::size_t>(n));

    // The iterated operator product equals E1* of the composed dual
    // substitution (later coding symbols outermost); validate that
    // composition so the error matches what a single application would say.
    Substitution composed = kIdentitySubstitution;
    for (const auto& tag : labels)
        composed = compose(algo.branch(tag).dual_substitution, composed);
    check_unimodular(composed);

    Patch p = unit_cube_seed();
    for (auto it = labels.rbegin(); it != labels.rend(); ++it)
        p = e_one_star(algo.branch(*it).dual_substitution, p);
    return p;
}

std::array<IVec3, 4> face_corners(const Face& f) {
    const auto& x = f.position;
    auto add = [&x](std::int64_t a, std::int64_t b, std::int64_t c) {
        return IVec3{x[0] + a, x[1] + b, x[2] + c};
    };
    switch (f.type) {
        case 1: return {add(0, 0, 0), add(0, 1, 0), add(0, 1, 1), add(0, 0, 1)};
        case 2: return {add(0, 0, 0), add(0, 0, 1), add(1, 0, 1), add(1, 0, 0)};
        default: return {add(0, 0, 0), add(1, 0, 0), add(1, 1, 0), add(0, 1, 0)};
    }
}

}  // namespace mcf
