#pragma once

// Counts of simply branched covers of the projective line via monodromy:
// b-tuples of transpositions in S_d whose ordered product is the identity.

#include "charnum/exact.hpp"

#include <algorithm>
#include <array>
#include <cstdint>
#include <map>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace charnum::hurwitz {

inline constexpr int kMaxDegree = 6;

/// Permutation of {0, ..., d-1}, d <= 6.
class Permutation {
public:
    explicit Permutation(int degree) : degree_(check_degree(degree)) {
        for (int i = 0; i < kMaxDegree; ++i) image_[i] = static_cast<std::uint8_t>(i);
    }

    Permutation(int degree, const std::vector<int>& images) : Permutation(degree) {
        if (static_cast<int>(images.size()) != degree) throw std::invalid_argument("image size differs from degree");
        std::array<bool, kMaxDegree> hit{};
        for (int i = 0; i < degree; ++i) {
            int v = images[i];
            if (v < 0 || v >= degree || hit[v]) throw std::invalid_argument("images do not form a bijection");
            hit[v] = true;
            image_[i] = static_cast<std::uint8_t>(v);
        }
    }

    static Permutation transposition(int degree, int i, int j) {
        if (i == j || i < 0 || j < 0 || i >= degree || j >= degree) throw std::invalid_argument("bad transposition");
        Permutation p(degree);
        std::swap(p.image_[i], p.image_[j]);
        return p;
    }

    int degree() const { return degree_; }
    int operator()(int i) const { return image_[i]; }

    /// (this * o)(i) = this(o(i)).
    Permutation operator*(const Permutation& o) const {
        if (o.degree_ != degree_) throw std::invalid_argument("degree mismatch");
        Permutation r(degree_);
        for (int i = 0; i < degree_; ++i) r.image_[i] = image_[o.image_[i]];
        return r;
    }

    Permutation inverse() const {
        Permutation r(degree_);
        for (int i = 0; i < degree_; ++i) r.image_[image_[i]] = static_cast<std::uint8_t>(i);
        return r;
    }

    bool is_identity() const {
        for (int i = 0; i < degree_; ++i)
            if (image_[i] != i) return false;
        return true;
    }

    /// Cycle lengths in non-increasing order.
    std::vector<int> cycle_type() const {
        std::vector<int> lens;
        std::array<bool, kMaxDegree> seen{};
        for (int i = 0; i < degree_; ++i) {
            if (seen[i]) continue;
            int len = 0;
            for (int j = i; !seen[j]; j = image_[j]) {
                seen[j] = true;
                ++len;
            }
            lens.push_back(len);
        }
        std::sort(lens.rbegin(), lens.rend());
        return lens;
    }

    friend bool operator==(const Permutation& a, const Permutation& b) {
        if (a.degree_ != b.degree_) return false;
        for (int i = 0; i < a.degree_; ++i)
            if (a.image_[i] != b.image_[i]) return false;
        return true;
    }

    static int check_degree(int d) {
        if (d < 1) throw std::invalid_argument("degree must be at least 1");
        if (d > kMaxDegree) throw std::invalid_argument("degree " + std::to_string(d) + " exceeds the supported maximum 6");
        return d;
    }

private:
    int degree_ = 0;
    std::array<std::uint8_t, kMaxDegree> image_{};
};

inline std::vector<Permutation> transpositions(int d) {
    std::vector<Permutation> out;
    for (int i = 0; i < d; ++i)
        for (int j = i + 1; j < d; ++j) out.push_back(Permutation::transposition(d, i, j));
    return out;
}

struct CoverCount {
    int degree = 0;
    int branch_points = 0;
    Integer raw_tuples = 0;
    Integer connected_tuples = 0;
    Rational covers = 0;
};

namespace detail {

inline void check_args(int d, int b) {
    Permutation::check_degree(d);
    if (b < 0) throw std::invalid_argument("branch point count must be nonnegative");
}

inline void partitions_into(int n, int max_part, std::vector<int>& cur, std::vector<std::vector<int>>& out) {
    if (n == 0) {
        out.push_back(cur);
        return;
    }
    for (int p = std::min(n, max_part); p >= 1; --p) {
        cur.push_back(p);
        partitions_into(n - p, p, cur, out);
        cur.pop_back();
    }
}

inline Permutation with_cycle_type(int d, const std::vector<int>& type) {
    std::vector<int> img(d);
    int start = 0;
    for (int len : type) {
        for (int k = 0; k < len; ++k) img[start + k] = start + (k + 1) % len;
        start += len;
    }
    return Permutation(d, img);
}

}  // namespace detail

/// Number of b-tuples of transpositions in S_d with identity product
/// (no transitivity requirement), by repeated multiplication by the class of
/// transpositions in the centre of the group algebra.
inline Integer tuple_count(int d, int b) {
    detail::check_args(d, b);
    std::vector<std::vector<int>> types;
    std::vector<int> cur;
    detail::partitions_into(d, d, cur, types);
    std::map<std::vector<int>, std::size_t> index;
    for (std::size_t i = 0; i < types.size(); ++i) index[types[i]] = i;

    // step[l] lists, for each transposition t, the class of sigma_l * t.
    const auto ts = transpositions(d);
    std::vector<std::vector<std::size_t>> step(types.size());
    for (std::size_t l = 0; l < types.size(); ++l) {
        Permutation sigma = detail::with_cycle_type(d, types[l]);
        for (const auto& t : ts) step[l].push_back(index.at((sigma * t).cycle_type()));
    }

    // v[l] = number of k-tuples whose product is a fixed element of class l.
    const std::size_t id = index.at(std::vector<int>(d, 1));
    std::vector<Integer> v(types.size(), 0);
    v[id] = 1;
    for (int k = 0; k < b; ++k) {
        std::vector<Integer> next(types.size(), 0);
        for (std::size_t l = 0; l < types.size(); ++l)
            for (std::size_t m : step[l]) next[l] += v[m];
        v = std::move(next);
    }
    return v[id];
}

/// Identity-product tuples whose transpositions generate a transitive subgroup.
/// Inclusion-exclusion on the orbit containing the first letter:
///   A(n,k) = sum_{m,j} binom(n-1,m-1) binom(k,j) C(m,j) A(n-m,k-j).
inline Integer connected_tuple_count(int d, int b) {
    detail::check_args(d, b);
    std::vector<std::vector<Integer>> A(d + 1, std::vector<Integer>(b + 1, 0));
    std::vector<std::vector<Integer>> C(d + 1, std::vector<Integer>(b + 1, 0));
    for (int n = 1; n <= d; ++n)
        for (int k = 0; k <= b; ++k) A[n][k] = tuple_count(n, k);
    for (int n = 1; n <= d; ++n) {
        for (int k = 0; k <= b; ++k) {
            Integer c = A[n][k];
            for (int m = 1; m < n; ++m)
                for (int j = 0; j <= k; ++j) {
                    if (C[m][j] == 0 || A[n - m][k - j] == 0) continue;
                    c -= binomial(n - 1, m - 1) * binomial(k, j) * C[m][j] * A[n - m][k - j];
                }
            C[n][k] = c;
        }
    }
    return C[d][b];
}

/// Stack-weighted number of connected degree-d covers with b given simple
/// branch points: connected tuples / d!.
inline Rational connected_cover_count(int d, int b) {
    return Rational(connected_tuple_count(d, b), factorial(d));
}

inline constexpr std::uint64_t kEnumerationLimit = 50'000'000;

/// Direct enumeration of all transposition tuples: product check plus an
/// orbit check by union-find. Used as an oracle for the class-algebra path.
inline CoverCount enumerate_covers(int d, int b) {
    detail::check_args(d, b);
    const auto ts = transpositions(d);
    std::uint64_t total = 1;
    for (int i = 0; i < b; ++i) {
        total *= ts.empty() ? 1 : ts.size();
        if (total > kEnumerationLimit) throw std::invalid_argument("enumeration of S_" + std::to_string(d) + " with " + std::to_string(b) + " branch points is too large");
    }

    CoverCount out{d, b, 0, 0, 0};
    if (ts.empty()) {  // S_1: only the empty tuple exists
        if (b == 0) out.raw_tuples = out.connected_tuples = 1;
        out.covers = Rational(out.connected_tuples);
        return out;
    }

    std::vector<std::pair<int, int>> moved;
    for (int i = 0; i < d; ++i)
        for (int j = i + 1; j < d; ++j) moved.emplace_back(i, j);

    std::vector<std::size_t> idx(b, 0);
    std::uint64_t raw = 0, connected = 0;
    for (std::uint64_t it = 0; it < total; ++it) {
        // prod * (i j) swaps the images of i and j.
        std::array<int, kMaxDegree> prod{};
        std::iota(prod.begin(), prod.end(), 0);
        for (int k = 0; k < b; ++k) std::swap(prod[moved[idx[k]].first], prod[moved[idx[k]].second]);
        bool identity = true;
        for (int i = 0; i < d; ++i) identity = identity && prod[i] == i;
        if (identity) {
            ++raw;
            std::array<int, kMaxDegree> parent{};
            std::iota(parent.begin(), parent.end(), 0);
            auto find = [&](int x) {
                while (parent[x] != x) x = parent[x] = parent[parent[x]];
                return x;
            };
            int comps = d;
            for (int k = 0; k < b; ++k) {
                int x = find(moved[idx[k]].first), y = find(moved[idx[k]].second);
                if (x != y) {
                    parent[x] = y;
                    --comps;
                }
            }
            if (comps == 1) ++connected;
        }
        for (int k = 0; k < b; ++k) {  // odometer
            if (++idx[k] < ts.size()) break;
            idx[k] = 0;
        }
    }
    out.raw_tuples = raw;
    out.connected_tuples = connected;
    out.covers = Rational(out.connected_tuples, factorial(d));
    return out;
}

/// Class-algebra counts packaged as a CoverCount.
inline CoverCount cover_count(int d, int b) {
    CoverCount c{d, b, tuple_count(d, b), connected_tuple_count(d, b), 0};
    c.covers = Rational(c.connected_tuples, factorial(d));
    return c;
}

/// Hurwitz's formula in degree 3: (3^(b-1) - 3) / 6 for even b >= 2.
inline Rational degree3_closed_form(int b) {
    if (b < 2 || b % 2 != 0) throw std::invalid_argument("degree3_closed_form needs an even b >= 2");
    return Rational(pow_int(3, b - 1) - 3, 6);
}

}  // namespace charnum::hurwitz
