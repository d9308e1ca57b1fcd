#include "mcf/cones.hpp"

#include <algorithm>
#include <stdexcept>

namespace mcf {

namespace {

IVec3 cross(const IVec3& a, const IVec3& b) {
    return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}

std::int64_t dot(const IVec3& a, const IVec3& b) {
    return a[0] * b[0] + a[1] * b[1] + a[2] * b[2];
}

bool is_zero(const IVec3& v) { return v[0] == 0 && v[1] == 0 && v[2] == 0; }

// Divide out the gcd; flip sign so the first nonzero entry is positive.
IVec3 primitive(IVec3 v) {
    std::int64_t g = gcd64(gcd64(v[0], v[1]), v[2]);
    if (g == 0) return v;
    for (auto& c : v) c /= g;
    for (auto c : v) {
        if (c > 0) break;
        if (c < 0) {
            for (auto& e : v) e = -e;
            break;
        }
    }
    return v;
}

// Primitive integer row from a rational row.
IVec3 primitive(const std::array<Rational, 3>& row) {
    BigInt l = 1;
    for (const auto& q : row) l = lcm(l, denominator(q));
    IVec3 v;
    for (int i = 0; i < 3; ++i) {
        const BigInt n = numerator(row[static_cast<std::size_t>(i)]) * (l / denominator(row[static_cast<std::size_t>(i)]));
        v[static_cast<std::size_t>(i)] = static_cast<std::int64_t>(n);
    }
    return primitive(v);
}

void add_row(HalfspaceList& hs, const IVec3& row) {
    const IVec3 p = primitive(row);
    if (is_zero(p)) return;
    if (std::find(hs.rows.begin(), hs.rows.end(), p) == hs.rows.end()) hs.rows.push_back(p);
}

// Raw (un-pulled-back) constraints of one branch cell, without positivity.
std::vector<IVec3> raw_cell_rows(const AlgorithmDef& algo, int index) {
    const std::string& tag = algo.branches[static_cast<std::size_t>(index)].tag;
    std::vector<IVec3> rows;
    auto perm_rows = [&rows](const std::string& t) {
        const int p1 = t[0] - '1', p2 = t[1] - '1', p3 = t[2] - '1';
        IVec3 r1{0, 0, 0}, r2{0, 0, 0};
        r1[static_cast<std::size_t>(p2)] = 1;
        r1[static_cast<std::size_t>(p1)] = -1;  // x_{p2} - x_{p1} >= 0
        r2[static_cast<std::size_t>(p3)] = 1;
        r2[static_cast<std::size_t>(p2)] = -1;  // x_{p3} - x_{p2} >= 0
        rows.push_back(r1);
        rows.push_back(r2);
    };
    auto dominant_row = [](int i, std::int64_t sign) {
        // sign=+1: 2x_i >= sum;  sign=-1: 2x_i <= sum
        IVec3 r{-sign, -sign, -sign};
        r[static_cast<std::size_t>(i)] = sign;
        return r;
    };
    switch (algo.partition) {
        case PartitionKind::SortedPermutation:
            perm_rows(tag);
            break;
        case PartitionKind::MinimumIndex: {
            const int i = tag[0] - '1';
            for (int j = 0; j < 3; ++j) {
                if (j == i) continue;
                IVec3 r{0, 0, 0};
                r[static_cast<std::size_t>(j)] = 1;
                r[static_cast<std::size_t>(i)] = -1;  // x_j - x_i >= 0
                rows.push_back(r);
            }
            break;
        }
        case PartitionKind::DominantThenPermutation:
            if (tag.size() == 1) {
                rows.push_back(dominant_row(tag[0] - '1', 1));
            } else {
                perm_rows(tag);
                // inside the ordering cell only the largest coordinate can
                // dominate, so one complement row cuts it off
                rows.push_back(dominant_row(tag[2] - '1', -1));
            }
            break;
        case PartitionKind::DominantThenRest:
            if (tag == "4") {
                for (int i = 0; i < 3; ++i) rows.push_back(dominant_row(i, -1));
            } else {
                rows.push_back(dominant_row(tag[0] - '1', 1));
            }
            break;
        case PartitionKind::FirstVersusThird: {
            IVec3 r{1, 0, -1};
            if (tag == "2") r = {-1, 0, 1};
            rows.push_back(r);
            break;
        }
    }
    return rows;
}

std::vector<IVec3> extreme_rays(const HalfspaceList& hs) {
    const auto& rows = hs.rows;
    auto feasible = [&rows](const IVec3& r) {
        for (const auto& h : rows)
            if (dot(h, r) < 0) return false;
        return true;
    };
    std::vector<IVec3> rays;
    for (std::size_t i = 0; i < rows.size(); ++i) {
        for (std::size_t j = i + 1; j < rows.size(); ++j) {
            IVec3 r = cross(rows[i], rows[j]);
            if (is_zero(r)) continue;
            r = primitive(r);
            IVec3 neg{-r[0], -r[1], -r[2]};
            const IVec3* pick = feasible(r) ? &r : (feasible(neg) ? &neg : nullptr);
            if (!pick) continue;
            if (std::find(rays.begin(), rays.end(), *pick) == rays.end()) rays.push_back(*pick);
        }
    }
    std::sort(rays.begin(), rays.end());
    return rays;
}

bool full_dimensional(const HalfspaceList& hs, const std::vector<IVec3>& rays) {
    if (rays.size() < 3) return false;
    IVec3 b{0, 0, 0};
    for (const auto& r : rays)
        for (int i = 0; i < 3; ++i) b[static_cast<std::size_t>(i)] += r[static_cast<std::size_t>(i)];
    for (const auto& h : hs.rows)
        if (dot(h, b) <= 0) return false;
    return true;
}

}  // namespace

HalfspaceList cell_halfspaces(const AlgorithmDef& algo, std::string_view tag) {
    const int idx = algo.branch_index(tag);
    if (idx < 0)
        throw std::invalid_argument("unknown branch label '" + std::string(tag) + "' for " +
                                    algo.name);
    HalfspaceList hs;
    add_row(hs, {1, 0, 0});
    add_row(hs, {0, 1, 0});
    add_row(hs, {0, 0, 1});
    for (const auto& r : raw_cell_rows(algo, idx)) add_row(hs, r);
    return hs;
}

std::optional<ConeCell> cylinder(const AlgorithmDef& algo,
                                 const std::vector<std::string>& word) {
    if (word.empty()) throw std::invalid_argument("cylinder word must be non-empty");
    ConeCell cell;
    cell.word = word;
    cell.product_matrix = kIdentity3;

    HalfspaceList hs;
    add_row(hs, {1, 0, 0});
    add_row(hs, {0, 1, 0});
    add_row(hs, {0, 0, 1});

    IMat3 prefix = kIdentity3;  // M_{w1} ... M_{w,k-1}
    RMat3 prefix_inv = inverse(kIdentity3);
    for (const auto& tag : word) {
        const int idx = algo.branch_index(tag);
        if (idx < 0)
            throw std::invalid_argument("unknown branch label '" + tag + "' for " + algo.name);
        for (const auto& r : raw_cell_rows(algo, idx)) {
            // pull h through the prefix inverse: x satisfies h on F^k(x)
            std::array<Rational, 3> pulled;
            for (int c = 0; c < 3; ++c) {
                Rational acc = 0;
                for (int k = 0; k < 3; ++k)
                    acc += Rational(r[static_cast<std::size_t>(k)]) * prefix_inv[static_cast<std::size_t>(k)][static_cast<std::size_t>(c)];
                pulled[static_cast<std::size_t>(c)] = acc;
            }
            add_row(hs, primitive(pulled));
        }
        // positivity of the step-k image
        for (int i = 0; i < 3; ++i) {
            std::array<Rational, 3> row;
            for (int c = 0; c < 3; ++c) row[static_cast<std::size_t>(c)] = prefix_inv[static_cast<std::size_t>(i)][static_cast<std::size_t>(c)];
            add_row(hs, primitive(row));
        }
        prefix = multiply(prefix, algo.branches[static_cast<std::size_t>(idx)].matrix);
        prefix_inv = inverse(prefix);
    }
    cell.product_matrix = prefix;
    cell.rays = extreme_rays(hs);
    if (!full_dimensional(hs, cell.rays)) return std::nullopt;
    cell.halfspaces = std::move(hs);
    return cell;
}

std::vector<ConeCell> enumerate_cylinders(const AlgorithmDef& algo, int n) {
    if (n < 1) throw std::invalid_argument("cylinder depth must be at least 1");
    std::vector<ConeCell> out;
    std::vector<std::string> word;
    auto rec = [&](auto&& self, int depth) -> void {
        if (depth == n) {
            if (auto cell = cylinder(algo, word)) out.push_back(std::move(*cell));
            return;
        }
        for (const auto& b : algo.branches) {
            word.push_back(b.tag);
            self(self, depth + 1);
            word.pop_back();
        }
    };
    rec(rec, 0);
    return out;
}

CellPolygon cell_polygon_exact(const ConeCell& cell) {
    // normalize rays onto the simplex, drop duplicates
    std::vector<std::pair<Rational, Rational>> pts;
    for (const auto& r : cell.rays) {
        const Rational s = Rational(r[0] + r[1] + r[2]);
        std::pair<Rational, Rational> p{Rational(r[0]) / s, Rational(r[1]) / s};
        if (std::find(pts.begin(), pts.end(), p) == pts.end()) pts.push_back(p);
    }
    if (pts.size() < 3) throw DomainError("cell projects to a degenerate polygon");

    // counterclockwise convex hull (monotone chain, exact arithmetic)
    std::sort(pts.begin(), pts.end());
    auto cross2 = [](const auto& o, const auto& a, const auto& b) {
        return (a.first - o.first) * (b.second - o.second) -
               (a.second - o.second) * (b.first - o.first);
    };
    std::vector<std::pair<Rational, Rational>> hull;
    for (int pass = 0; pass < 2; ++pass) {
        const std::size_t base = hull.size();
        for (const auto& p : pts) {
            while (hull.size() >= base + 2 &&
                   cross2(hull[hull.size() - 2], hull[hull.size() - 1], p) <= 0)
                hull.pop_back();
            hull.push_back(p);
        }
        hull.pop_back();
        std::reverse(pts.begin(), pts.end());
    }
    if (hull.size() < 3) throw DomainError("cell projects to a degenerate polygon");

    CellPolygon poly;
    poly.vertices = std::move(hull);
    Rational area = 0;
    for (std::size_t i = 0; i < poly.vertices.size(); ++i) {
        const auto& a = poly.vertices[i];
        const auto& b = poly.vertices[(i + 1) % poly.vertices.size()];
        area += a.first * b.second - b.first * a.second;
    }
    poly.area = area / 2;
    if (poly.area < 0) poly.area = -poly.area;
    return poly;
}

std::vector<std::pair<double, double>> cylinder_polygon(const ConeCell& cell) {
    const CellPolygon poly = cell_polygon_exact(cell);
    std::vector<std::pair<double, double>> out;
    out.reserve(poly.vertices.size());
    for (const auto& [x1, x2] : poly.vertices) {
        const double a = static_cast<double>(x1), b = static_cast<double>(x2);
        out.push_back(plane_project(Vec3{a, b, 1.0 - a - b}));
    }
    return out;
}

IVec3 cell_barycenter(const ConeCell& cell) {
    IVec3 b{0, 0, 0};
    for (const auto& r : cell.rays)
        for (int i = 0; i < 3; ++i) b[static_cast<std::size_t>(i)] += r[static_cast<std::size_t>(i)];
    return b;
}

}  // namespace mcf
