#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace solflow {

struct Vec2 {
    double x = 0.0;
    double y = 0.0;
};

inline Vec2 operator+(Vec2 a, Vec2 b) { return {a.x + b.x, a.y + b.y}; }
inline Vec2 operator-(Vec2 a, Vec2 b) { return {a.x - b.x, a.y - b.y}; }
inline Vec2 operator*(double s, Vec2 v) { return {s * v.x, s * v.y}; }
inline double dot(Vec2 a, Vec2 b) { return a.x * b.x + a.y * b.y; }

// Row-major 2x2 real matrix.
struct Mat2 {
    double a = 0.0, b = 0.0;
    double c = 0.0, d = 0.0;

    static Mat2 identity() { return {1.0, 0.0, 0.0, 1.0}; }
    static Mat2 zero() { return {}; }

    double trace() const { return a + d; }
    double det() const { return a * d - b * c; }
    Mat2 transposed() const { return {a, c, b, d}; }
};

inline Mat2 operator+(const Mat2& m, const Mat2& n) {
    return {m.a + n.a, m.b + n.b, m.c + n.c, m.d + n.d};
}
inline Mat2 operator-(const Mat2& m, const Mat2& n) {
    return {m.a - n.a, m.b - n.b, m.c - n.c, m.d - n.d};
}
inline Mat2 operator*(double s, const Mat2& m) {
    return {s * m.a, s * m.b, s * m.c, s * m.d};
}
inline Mat2 operator*(const Mat2& m, const Mat2& n) {
    return {m.a * n.a + m.b * n.c, m.a * n.b + m.b * n.d,
            m.c * n.a + m.d * n.c, m.c * n.b + m.d * n.d};
}
inline Vec2 operator*(const Mat2& m, Vec2 v) {
    return {m.a * v.x + m.b * v.y, m.c * v.x + m.d * v.y};
}

inline double maxAbs(const Mat2& m) {
    return std::max(std::max(std::fabs(m.a), std::fabs(m.b)),
                    std::max(std::fabs(m.c), std::fabs(m.d)));
}

// exp(M) for a real 2x2 matrix, closed form.
// Split M = q I + R with tr R = 0; then R^2 = delta I and
// exp(M) = e^q (cosh(s) I + sinh(s)/s R), s = sqrt(delta),
// with the trigonometric branch for delta < 0.
inline Mat2 expm(const Mat2& m) {
    const double q = 0.5 * m.trace();
    const Mat2 r{m.a - q, m.b, m.c, m.d - q};
    const double delta = r.a * r.a + r.b * r.c;  // r.d = -r.a
    double ch, shs;
    if (delta > 1e-8) {
        const double s = std::sqrt(delta);
        ch = std::cosh(s);
        shs = std::sinh(s) / s;
    } else if (delta < -1e-8) {
        const double s = std::sqrt(-delta);
        ch = std::cos(s);
        shs = std::sin(s) / s;
    } else {
        ch = 1.0 + delta / 2.0 + delta * delta / 24.0;
        shs = 1.0 + delta / 6.0 + delta * delta / 120.0;
    }
    const double eq = std::exp(q);
    return {eq * (ch + shs * r.a), eq * shs * r.b,
            eq * shs * r.c, eq * (ch - shs * r.a)};
}

// Eigenvalues of a symmetric 2x2 matrix, ascending.
inline std::array<double, 2> symEigenvalues(const Mat2& m) {
    const double q = 0.5 * (m.a + m.d);
    const double s = std::sqrt(0.25 * (m.a - m.d) * (m.a - m.d) + m.b * m.c);
    return {q - s, q + s};
}

// Row-major 2x2 integer matrix with exact arithmetic helpers.
struct IMat2 {
    long long a = 0, b = 0;
    long long c = 0, d = 0;

    static IMat2 identity() { return {1, 0, 0, 1}; }

    long long trace() const { return a + d; }
    long long det() const { return a * d - b * c; }
    IMat2 transposed() const { return {a, c, b, d}; }

    // Inverse of a unimodular matrix: adjugate over the determinant.
    IMat2 unimodularInverse() const {
        const long long dt = det();
        if (dt != 1 && dt != -1)
            throw std::domain_error("matrix is not unimodular, det = " + std::to_string(dt));
        return {d / dt, -b / dt, -c / dt, a / dt};
    }

    Mat2 toReal() const {
        return {double(a), double(b), double(c), double(d)};
    }

    bool operator==(const IMat2& o) const = default;
};

inline long long checkedMulAdd(long long x, long long y, long long u, long long v) {
    __int128 r = (__int128)x * y + (__int128)u * v;
    if (r > INT64_MAX || r < INT64_MIN)
        throw std::range_error("integer overflow in 2x2 matrix arithmetic");
    return (long long)r;
}

inline IMat2 operator*(const IMat2& m, const IMat2& n) {
    return {checkedMulAdd(m.a, n.a, m.b, n.c), checkedMulAdd(m.a, n.b, m.b, n.d),
            checkedMulAdd(m.c, n.a, m.d, n.c), checkedMulAdd(m.c, n.b, m.d, n.d)};
}

// Exact integer power, k of either sign (negative powers need |det| = 1).
inline IMat2 ipow(const IMat2& m, long long k) {
    IMat2 base = k >= 0 ? m : m.unimodularInverse();
    long long n = k >= 0 ? k : -k;
    IMat2 out = IMat2::identity();
    while (n > 0) {
        if (n & 1) out = out * base;
        base = n > 1 ? base * base : base;
        n >>= 1;
    }
    return out;
}

// Eigenvalues of a symmetric 3x3 matrix via cyclic Jacobi rotations.
inline std::array<double, 3> symEigenvalues3(std::array<std::array<double, 3>, 3> m) {
    for (int sweep = 0; sweep < 32; ++sweep) {
        double off = std::fabs(m[0][1]) + std::fabs(m[0][2]) + std::fabs(m[1][2]);
        if (off < 1e-300) break;
        for (int p = 0; p < 2; ++p) {
            for (int q = p + 1; q < 3; ++q) {
                if (std::fabs(m[p][q]) < 1e-300) continue;
                const double theta = (m[q][q] - m[p][p]) / (2.0 * m[p][q]);
                const double t = (theta >= 0 ? 1.0 : -1.0) /
                                 (std::fabs(theta) + std::sqrt(theta * theta + 1.0));
                const double cos = 1.0 / std::sqrt(t * t + 1.0);
                const double sin = t * cos;
                for (int k = 0; k < 3; ++k) {
                    const double mkp = m[k][p], mkq = m[k][q];
                    m[k][p] = cos * mkp - sin * mkq;
                    m[k][q] = sin * mkp + cos * mkq;
                }
                for (int k = 0; k < 3; ++k) {
                    const double mpk = m[p][k], mqk = m[q][k];
                    m[p][k] = cos * mpk - sin * mqk;
                    m[q][k] = sin * mpk + cos * mqk;
                }
            }
        }
    }
    std::array<double, 3> ev{m[0][0], m[1][1], m[2][2]};
    std::sort(ev.begin(), ev.end());
    return ev;
}

}  // namespace solflow
