#pragma once

#include <optional>
#include <string>
#include <vector>

#include "mcf/algorithms.hpp"

namespace mcf {

// Rows h encode closed constraints <h, x> >= 0; rows are primitive
// (no common factor) integer vectors.
struct HalfspaceList {
    std::vector<IVec3> rows;
};

// Exact polyhedral cone of one cylinder: the set of positive vectors whose
// coding starts with `word`.
struct ConeCell {
    std::vector<std::string> word;
    HalfspaceList halfspaces;
    std::vector<IVec3> rays;  // primitive extreme rays
    IMat3 product_matrix;     // M_{w1} ... M_{wn}
};

// Closure of the branch cell within the positive cone (cell constraints
// plus positivity).
HalfspaceList cell_halfspaces(const AlgorithmDef& algo, std::string_view tag);

// nullopt when the pulled-back cone is empty or lower-dimensional.
std::optional<ConeCell> cylinder(const AlgorithmDef& algo,
                                 const std::vector<std::string>& word);

// All non-empty cylinders of length n, in lexicographic word order
// (branch order as listed by the algorithm).
std::vector<ConeCell> enumerate_cylinders(const AlgorithmDef& algo, int n);

// Exact barycentric data of the cell's simplex cross-section.
// Vertices are the rays normalized to x1+x2+x3 = 1, as (x1, x2) pairs in
// counterclockwise order; the full simplex has area 1/2 in these
// coordinates.
struct CellPolygon {
    std::vector<std::pair<Rational, Rational>> vertices;
    Rational area;
};
CellPolygon cell_polygon_exact(const ConeCell& cell);  // throws on degenerate polygons

// Projection of the cross-section into the drawing plane, counterclockwise.
std::vector<std::pair<double, double>> cylinder_polygon(const ConeCell& cell);

// Integer barycenter (sum of primitive rays): strictly inside the cell.
IVec3 cell_barycenter(const ConeCell& cell);

}  // namespace mcf
