#pragma once

#include <array>
#include <cstdint>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace mcf {

using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

using Vec3 = std::array<double, 3>;
using IVec3 = std::array<std::int64_t, 3>;
using RVec3 = std::array<Rational, 3>;

using DMat3 = std::array<std::array<double, 3>, 3>;
using IMat3 = std::array<std::array<std::int64_t, 3>, 3>;
using RMat3 = std::array<std::array<Rational, 3>, 3>;

constexpr IMat3 kIdentity3 = {{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}};

std::int64_t det(const IMat3& m);
IMat3 transpose(const IMat3& m);
IMat3 multiply(const IMat3& a, const IMat3& b);
RMat3 inverse(const IMat3& m);  // exact; throws std::invalid_argument if singular

IVec3 multiply(const IMat3& m, const IVec3& v);
RVec3 multiply(const RMat3& m, const RVec3& v);
Vec3 multiply(const DMat3& m, const Vec3& v);

DMat3 to_double(const IMat3& m);
DMat3 to_double(const RMat3& m);

double l1_norm(const Vec3& v);
Rational l1_norm(const RVec3& v);

// Orthonormal basis of the plane x1+x2+x3 = const, shared by every 2-D
// projection in the project: ((1,-1,0)/sqrt 2, (1,1,-2)/sqrt 6).
std::pair<double, double> plane_project(const Vec3& v);

std::int64_t gcd64(std::int64_t a, std::int64_t b);

// Shortest decimal string that round-trips; integral values get a ".0"
// suffix so 1.0 prints as "1.0", matching Python float repr.
std::string format_double(double v);

std::string format_vec(const Vec3& v);    // "(0.5, 0.5, 1.5)"
std::string format_vec(const IVec3& v);   // "(1, 2, 3)"

}  // namespace mcf
