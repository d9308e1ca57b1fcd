#include "mcf/linalg.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <stdexcept>

namespace mcf {

std::int64_t det(const IMat3& m) {
    return m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1])
         - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0])
         + m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
}

IMat3 transpose(const IMat3& m) {
    IMat3 t;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) t[i][j] = m[j][i];
    return t;
}

IMat3 multiply(const IMat3& a, const IMat3& b) {
    IMat3 c{};
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            for (int k = 0; k < 3; ++k) c[i][j] += a[i][k] * b[k][j];
    return c;
}

RMat3 inverse(const IMat3& m) {
    const std::int64_t d = det(m);
    if (d == 0) throw std::invalid_argument("singular matrix");
    RMat3 inv;
    for (int i = 0; i < 3; ++i) {
        for (int j = 0; j < 3; ++j) {
            // adjugate entry (i,j) = cofactor (j,i)
            const int r1 = (j + 1) % 3, r2 = (j + 2) % 3;
            const int c1 = (i + 1) % 3, c2 = (i + 2) % 3;
            const std::int64_t cof = m[r1][c1] * m[r2][c2] - m[r1][c2] * m[r2][c1];
            inv[i][j] = Rational(cof, d);
        }
    }
    return inv;
}

IVec3 multiply(const IMat3& m, const IVec3& v) {
    IVec3 r{};
    for (int i = 0; i < 3; ++i) r[i] = m[i][0] * v[0] + m[i][1] * v[1] + m[i][2] * v[2];
    return r;
}

RVec3 multiply(const RMat3& m, const RVec3& v) {
    RVec3 r;
    for (int i = 0; i < 3; ++i) r[i] = m[i][0] * v[0] + m[i][1] * v[1] + m[i][2] * v[2];
    return r;
}

Vec3 multiply(const DMat3& m, const Vec3& v) {
    Vec3 r;
    for (int i = 0; i < 3; ++i) r[i] = m[i][0] * v[0] + m[i][1] * v[1] + m[i][2] * v[2];
    return r;
}

DMat3 to_double(const IMat3& m) {
    DMat3 d;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) d[i][j] = static_cast<double>(m[i][j]);
    return d;
}

DMat3 to_double(const RMat3& m) {
    DMat3 d;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) d[i][j] = static_cast<double>(m[i][j]);
    return d;
}

double l1_norm(const Vec3& v) { return std::fabs(v[0]) + std::fabs(v[1]) + std::fabs(v[2]); }

Rational l1_norm(const RVec3& v) {
    Rational s = 0;
    for (const auto& x : v) s += x < 0 ? Rational(-x) : x;
    return s;
}

std::pair<double, double> plane_project(const Vec3& v) {
    static const double s2 = std::sqrt(2.0), s6 = std::sqrt(6.0);
    return {(v[0] - v[1]) / s2, (v[0] + v[1] - 2.0 * v[2]) / s6};
}

std::int64_t gcd64(std::int64_t a, std::int64_t b) {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b != 0) {
        const std::int64_t t = a % b;
        a = b;
        b = t;
    }
    return a;
}

std::string format_double(double v) {
    char buf[64];
    for (int prec = 1; prec <= 17; ++prec) {
        std::snprintf(buf, sizeof buf, "%.*g", prec, v);
        if (std::strtod(buf, nullptr) == v) break;
    }
    std::string s = buf;
    if (s.find_first_of(".einN") == std::string::npos) s += ".0";
    return s;
}

std::string format_vec(const Vec3& v) {
    return "(" + format_double(v[0]) + ", " + format_double(v[1]) + ", " + format_double(v[2]) + ")";
}

std::string format_vec(const IVec3& v) {
    return "(" + std::to_string(v[0]) + ", " + std::to_string(v[1]) + ", " + std::to_string(v[2]) + ")";
}

}  // namespace mcf
