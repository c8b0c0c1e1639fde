// The conic table is hard-coded; these tests recompute the entries that have
// an exact linear-algebra check from random rational configurations.

#include "charnum/conics.hpp"
#include "generators.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <array>
#include <vector>

using namespace charnum;
using charnum::testing::Gen;

namespace {

using Vec = std::vector<Rational>;
using Mat = std::vector<Vec>;
using Point = std::array<Rational, 3>;

// Conic coefficients (x^2, xy, y^2, xz, yz, z^2).
Vec conic_row(const Point& p) {
    return {p[0] * p[0], p[0] * p[1], p[1] * p[1], p[0] * p[2], p[1] * p[2], p[2] * p[2]};
}

// Symmetric bilinear form of a conic: B(p, q) with B(p, p) = F(p).
Rational bilinear(const Vec& c, const Point& p, const Point& q) {
    return c[0] * p[0] * q[0] + c[2] * p[1] * q[1] + c[5] * p[2] * q[2] +
           c[1] * (p[0] * q[1] + p[1] * q[0]) / 2 + c[3] * (p[0] * q[2] + p[2] * q[0]) / 2 +
           c[4] * (p[1] * q[2] + p[2] * q[1]) / 2;
}

// Polar condition at p in direction q, as a row on conic coefficients.
Vec polar_row(const Point& p, const Point& q) {
    Vec r(6);
    for (int k = 0; k < 6; ++k) {
        Vec e(6, 0);
        e[k] = 1;
        r[k] = bilinear(e, p, q);
    }
    return r;
}

// Reduced row echelon form in place; returns pivot columns.
std::vector<std::size_t> rref(Mat& m) {
    std::vector<std::size_t> pivots;
    if (m.empty()) return pivots;
    const std::size_t cols = m[0].size();
    std::size_t row = 0;
    for (std::size_t c = 0; c < cols && row < m.size(); ++c) {
        std::size_t p = row;
        while (p < m.size() && m[p][c] == 0) ++p;
        if (p == m.size()) continue;
        std::swap(m[p], m[row]);
        Rational inv = 1 / m[row][c];
        for (auto& x : m[row]) x *= inv;
        for (std::size_t r = 0; r < m.size(); ++r) {
            if (r == row || m[r][c] == 0) continue;
            Rational f = m[r][c];
            for (std::size_t k = 0; k < cols; ++k) m[r][k] -= f * m[row][k];
        }
        pivots.push_back(c);
        ++row;
    }
    return pivots;
}

Mat nullspace(Mat m) {
    const std::size_t cols = m[0].size();
    auto pivots = rref(m);
    Mat basis;
    for (std::size_t f = 0; f < cols; ++f) {
        if (std::find(pivots.begin(), pivots.end(), f) != pivots.end()) continue;
        Vec v(cols, 0);
        v[f] = 1;
        for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -m[i][f];
        basis.push_back(v);
    }
    return basis;
}

// Polynomials over Q, index = degree.
using Poly = std::vector<Rational>;

void trim(Poly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

Poly poly_mod(Poly a, const Poly& b) {
    trim(a);
    while (a.size() >= b.size() && !a.empty()) {
        Rational f = a.back() / b.back();
        const std::size_t shift = a.size() - b.size();
        for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] -= f * b[i];
        trim(a);
    }
    return a;
}

std::size_t gcd_degree(Poly a, Poly b) {
    trim(a);
    trim(b);
    while (!b.empty()) {
        Poly r = poly_mod(a, b);
        a = b;
        b = r;
    }
    return a.size() - 1;
}

Rational det3(const Vec& c) {
    // Matrix of the quadratic form with halves on the off-diagonal.
    Rational a = c[0], b = c[1] / 2, cc = c[2], d = c[3] / 2, e = c[4] / 2, f = c[5];
    return a * (cc * f - e * e) - b * (b * f - e * d) + d * (b * e - cc * d);
}

// det(Q1 + t Q2) as a polynomial in t, by interpolation at 4 nodes.
Poly pencil_det(const Vec& q1, const Vec& q2) {
    Poly p(4, 0);
    std::array<Rational, 4> xs{0, 1, -1, 2}, ys;
    for (int i = 0; i < 4; ++i) {
        Vec m(6);
        for (int k = 0; k < 6; ++k) m[k] = q1[k] + xs[i] * q2[k];
        ys[i] = det3(m);
    }
    for (int i = 0; i < 4; ++i) {  // Lagrange
        Poly basis{1};
        Rational denom = 1;
        for (int j = 0; j < 4; ++j) {
            if (j == i) continue;
            Poly next(basis.size() + 1, 0);
            for (std::size_t k = 0; k < basis.size(); ++k) {
                next[k + 1] += basis[k];
                next[k] -= xs[j] * basis[k];
            }
            basis = next;
            denom *= xs[i] - xs[j];
        }
        for (std::size_t k = 0; k < basis.size(); ++k) p[k] += ys[i] * basis[k] / denom;
    }
    trim(p);
    return p;
}

// Members of the pencil Q1 + t Q2 tangent to the line through A and B:
// discriminant of the restricted binary quadratic, a polynomial in t.
Poly tangency_discriminant(const Vec& q1, const Vec& q2, const Point& A, const Point& B) {
    auto coeffs = [&](const Vec& q) {
        return std::array<Rational, 3>{bilinear(q, A, A), 2 * bilinear(q, A, B), bilinear(q, B, B)};
    };
    auto c1 = coeffs(q1), c2 = coeffs(q2);
    // alpha = c1[0] + t c2[0], beta = ..., gamma = ...; D = beta^2 - 4 alpha gamma.
    auto mul = [](const Poly& x, const Poly& y) {
        Poly r(x.size() + y.size() - 1, 0);
        for (std::size_t i = 0; i < x.size(); ++i)
            for (std::size_t j = 0; j < y.size(); ++j) r[i + j] += x[i] * y[j];
        return r;
    };
    Poly al{c1[0], c2[0]}, be{c1[1], c2[1]}, ga{c1[2], c2[2]};
    Poly d = mul(be, be);
    Poly ag = mul(al, ga);
    for (std::size_t i = 0; i < d.size(); ++i) d[i] -= 4 * ag[i];
    trim(d);
    return d;
}

// Number of distinct roots of a tangency discriminant that give smooth conics.
std::size_t smooth_tangent_members(const Vec& q1, const Vec& q2, const Point& A, const Point& B) {
    Poly d = tangency_discriminant(q1, q2, A, B);
    EXPECT_EQ(d.size(), 3u) << "discriminant should be quadratic";
    if (d.size() != 3) return 0;
    Poly dd{d[1], 2 * d[2]};
    EXPECT_EQ(gcd_degree(d, dd), 0u) << "discriminant has a repeated root";
    EXPECT_EQ(gcd_degree(d, pencil_det(q1, q2)), 0u) << "a tangent member is singular";
    return 2;
}

Point random_point(Gen& g) { return {Rational(g.int_in(-50, 50)), Rational(g.int_in(-50, 50)), Rational(g.int_in(1, 50))}; }

}  // namespace

TEST(ConicTable, Values) {
    EXPECT_EQ(conics::conic_char(5, 0), 1);
    EXPECT_EQ(conics::conic_char(4, 1), 2);
    EXPECT_EQ(conics::conic_char(3, 2), 4);
    EXPECT_EQ(conics::conic_char(2, 3), 4);
    EXPECT_EQ(conics::conic_char(1, 4), 2);
    EXPECT_EQ(conics::conic_char(0, 5), 1);
    EXPECT_THROW(conics::conic_char(3, 3), std::invalid_argument);
    EXPECT_THROW(conics::conic_char(6, -1), std::invalid_argument);
    EXPECT_THROW(conics::flag_conic_char(2, 2), std::invalid_argument);
}

TEST(ConicTable, DualitySymmetry) {
    for (int a = 0; a <= 5; ++a) {
        EXPECT_EQ(conics::conic_char(a, 5 - a), conics::conic_char(5 - a, a));
        EXPECT_GT(conics::conic_char(a, 5 - a), 0);
    }
    for (int a = 0; a <= 3; ++a) EXPECT_EQ(conics::flag_conic_char(a, 3 - a), conics::flag_conic_char(3 - a, a));
}

TEST(ConicOracle, FivePointsGiveOneConic) {
    Gen g(0x5eed'0005);
    for (int iter = 0; iter < 25; ++iter) {
        Mat m;
        for (int i = 0; i < 5; ++i) m.push_back(conic_row(random_point(g)));
        auto k = nullspace(m);
        ASSERT_EQ(k.size(), 1u);
        EXPECT_NE(det3(k[0]), 0) << "interpolating conic should be smooth";
        EXPECT_EQ(static_cast<int>(k.size()), conics::conic_char(5, 0));
    }
}

TEST(ConicOracle, FourPointsOneLineGiveTwoConics) {
    Gen g(0x5eed'0006);
    for (int iter = 0; iter < 25; ++iter) {
        Mat m;
        for (int i = 0; i < 4; ++i) m.push_back(conic_row(random_point(g)));
        auto pencil = nullspace(m);
        ASSERT_EQ(pencil.size(), 2u);
        auto n = smooth_tangent_members(pencil[0], pencil[1], random_point(g), random_point(g));
        EXPECT_EQ(n, conics::conic_char(4, 1));
    }
}

TEST(ConicOracle, FlagAndThreePointsGiveOneConic) {
    Gen g(0x5eed'0007);
    for (int iter = 0; iter < 25; ++iter) {
        Point p = random_point(g), dir = random_point(g);
        Mat m{conic_row(p), polar_row(p, dir)};
        for (int i = 0; i < 3; ++i) m.push_back(conic_row(random_point(g)));
        auto k = nullspace(m);
        ASSERT_EQ(k.size(), 1u);
        EXPECT_NE(det3(k[0]), 0);
        EXPECT_EQ(static_cast<int>(k.size()), conics::flag_conic_char(3, 0));
    }
}

TEST(ConicOracle, FlagTwoPointsOneLineGiveTwoConics) {
    Gen g(0x5eed'0008);
    for (int iter = 0; iter < 25; ++iter) {
        Point p = random_point(g), dir = random_point(g);
        Mat m{conic_row(p), polar_row(p, dir), conic_row(random_point(g)), conic_row(random_point(g))};
        auto pencil = nullspace(m);
        ASSERT_EQ(pencil.size(), 2u);
        auto n = smooth_tangent_members(pencil[0], pencil[1], random_point(g), random_point(g));
        EXPECT_EQ(n, conics::flag_conic_char(2, 1));
    }
}
