#pragma once

// Exact integers and rationals plus the combinatorial coefficients used by
// every enumeration in the library.

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace charnum {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline Integer numerator(const Rational& r) { return boost::multiprecision::numerator(r); }
inline Integer denominator(const Rational& r) { return boost::multiprecision::denominator(r); }

/// p / q in lowest terms. The two-argument cpp_rational constructor in
/// Boost 1.74 rejects negative denominators, so the sign is moved first.
inline Rational make_rational(Integer p, Integer q) {
    if (q == 0) throw std::invalid_argument("zero denominator");
    if (q < 0) {
        p = -p;
        q = -q;
    }
    return Rational(p, q);
}

inline bool is_integer(const Rational& r) { return denominator(r) == 1; }

/// Returns the integer value of r; throws std::domain_error when r is not integral.
inline Integer to_integer(const Rational& r) {
    if (!is_integer(r)) {
        throw std::domain_error("rational " + r.str() + " is not an integer");
    }
    return numerator(r);
}

/// Exact quotient a / b; throws std::domain_error unless b divides a.
inline Integer exact_div(const Integer& a, const Integer& b) {
    if (b == 0) throw std::domain_error("division by zero");
    Integer q, r;
    boost::multiprecision::divide_qr(a, b, q, r);
    if (r != 0) {
        throw std::domain_error(a.str() + " is not divisible by " + b.str());
    }
    return q;
}

inline std::string to_string(const Integer& v) { return v.str(); }

/// "p" for integers, "p/q" otherwise.
inline std::string to_string(const Rational& v) {
    if (is_integer(v)) return numerator(v).str();
    return numerator(v).str() + "/" + denominator(v).str();
}

/// Parses an optionally signed decimal integer. Throws std::invalid_argument.
inline Integer parse_integer(const std::string& text) {
    std::size_t start = (!text.empty() && (text[0] == '-' || text[0] == '+')) ? 1 : 0;
    if (start == text.size()) throw std::invalid_argument("not an integer: \"" + text + "\"");
    for (std::size_t i = start; i < text.size(); ++i) {
        if (text[i] < '0' || text[i] > '9') {
            throw std::invalid_argument("not an integer: \"" + text + "\"");
        }
    }
    return Integer(text[0] == '+' ? text.substr(1) : text);
}

/// Parses "p" or "p/q" with q nonzero.
inline Rational parse_rational(const std::string& text) {
    auto slash = text.find('/');
    if (slash == std::string::npos) return Rational(parse_integer(text));
    Integer den = parse_integer(text.substr(slash + 1));
    if (den == 0) throw std::invalid_argument("zero denominator: \"" + text + "\"");
    return make_rational(parse_integer(text.substr(0, slash)), den);
}

inline Integer factorial(std::int64_t n) {
    if (n < 0) throw std::invalid_argument("factorial of negative number");
    Integer r = 1;
    for (std::int64_t i = 2; i <= n; ++i) r *= i;
    return r;
}

/// Binomial coefficient; 0 when k < 0 or k > n.
inline Integer binomial(std::int64_t n, std::int64_t k) {
    if (n < 0) throw std::invalid_argument("binomial requires n >= 0");
    if (k < 0 || k > n) return 0;
    k = std::min(k, n - k);
    Integer r = 1;
    for (std::int64_t i = 1; i <= k; ++i) {
        r *= n - k + i;
        r /= i;  // exact: r is binomial(n - k + i, i) here
    }
    return r;
}

/// n! / prod(parts_i!). Rejects parts that are negative or do not sum to n.
inline Integer multinomial(std::int64_t n, const std::vector<std::int64_t>& parts) {
    std::int64_t sum = 0;
    for (auto p : parts) {
        if (p < 0) throw std::invalid_argument("multinomial part is negative");
        sum += p;
    }
    if (sum != n) {
        throw std::invalid_argument("multinomial parts sum to " + std::to_string(sum) +
                                    ", expected " + std::to_string(n));
    }
    Integer r = 1;
    std::int64_t seen = 0;
    for (auto p : parts) {
        seen += p;
        r *= binomial(seen, p);
    }
    return r;
}

/// n (n-1) ... (n-k+1); 0 once a factor hits zero or goes negative.
inline Integer falling_factorial(std::int64_t n, std::int64_t k) {
    Integer r = 1;
    for (std::int64_t i = 0; i < k; ++i) {
        if (n - i <= 0) return 0;
        r *= n - i;
    }
    return r;
}

inline Integer pow_int(std::int64_t base, std::int64_t e) {
    if (e < 0) throw std::invalid_argument("negative exponent");
    Integer r = 1;
    for (std::int64_t i = 0; i < e; ++i) r *= base;
    return r;
}

}  // namespace charnum
