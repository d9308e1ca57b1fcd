#pragma once

#include <compare>
#include <cstdint>
#include <vector>

#include "mcf/algorithms.hpp"
#include "mcf/words.hpp"

namespace mcf {

// Unit face (x, i*): the square facet of the unit cube at lattice point x
// orthogonal to basis vector e_i.
struct Face {
    IVec3 position{0, 0, 0};
    int type = 1;  // 1, 2 or 3

    auto operator<=>(const Face&) const = default;
};

// Canonical form: sorted, duplicate-free.
using Patch = std::vector<Face>;

// Faces of type 1*, 2*, 3* at the origin.
Patch unit_cube_seed();

// Dual geometric action of a unimodular substitution on a patch:
//   E1*(s)(x, i*) = union over j and factorizations s(j) = p.i.q of
//                   (M^-1 (x + parikh(q)), j*)
// with M = incidence(s).  Throws UnimodularityError when |det M| != 1.
Patch e_one_star(const Substitution& s, const Patch& patch);

// Applies E1* of the coding's dual substitutions to the unit cube seed,
// innermost factor last in the coding (operator product order).  The
// composed dual substitution must be unimodular; the error carries its
// images, e.g. "(1->23, 2->1233, 3->1232)".
Patch e_one_star_iterate(const AlgorithmDef& algo, const Vec3& v, int n);

// Corners of a face's square in Z^3, for rendering.
std::array<IVec3, 4> face_corners(const Face& f);

}  // namespace mcf
