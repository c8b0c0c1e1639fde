#pragma once

#include "charnum/exact.hpp"

#include <cstdint>
#include <initializer_list>
#include <map>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <utility>

namespace charnum {

/// Unknowns of the quartic problem in their fixed global order.
enum class Symbol : std::uint8_t {
    Iota,
    Tau,
    Q,
    QPrime,
    Y,
    YPrime,
    C0,  // C0 .. C14 are contiguous
    C14 = C0 + 14,
};

inline constexpr int kSymbolCount = static_cast<int>(Symbol::C14) + 1;

inline Symbol char_symbol(int a) {
    if (a < 0 || a > 14) throw std::out_of_range("characteristic number index " + std::to_string(a));
    return static_cast<Symbol>(static_cast<int>(Symbol::C0) + a);
}

/// For C_a returns a; empty for the auxiliary unknowns.
inline std::optional<int> char_index(Symbol s) {
    int v = static_cast<int>(s) - static_cast<int>(Symbol::C0);
    if (v < 0) return std::nullopt;
    return v;
}

inline std::string symbol_name(Symbol s) {
    switch (s) {
        case Symbol::Iota: return "iota";
        case Symbol::Tau: return "tau";
        case Symbol::Q: return "q";
        case Symbol::QPrime: return "q'";
        case Symbol::Y: return "y";
        case Symbol::YPrime: return "y'";
        default: return "C" + std::to_string(*char_index(s));
    }
}

inline Symbol parse_symbol(const std::string& name) {
    for (int i = 0; i < kSymbolCount; ++i) {
        auto s = static_cast<Symbol>(i);
        if (symbol_name(s) == name) return s;
    }
    throw std::invalid_argument("unknown symbol \"" + name + "\"");
}

/// Affine-linear form constant + sum coeff * symbol with exact coefficients.
/// Zero coefficients are never stored, so operator== is coefficient-wise.
class LinForm {
public:
    using Terms = std::map<Symbol, Rational>;

    LinForm() = default;
    LinForm(Rational constant) : constant_(std::move(constant)) {}  // NOLINT: implicit on purpose
    LinForm(Integer constant) : constant_(std::move(constant)) {}   // NOLINT
    LinForm(int constant) : constant_(constant) {}                  // NOLINT
    LinForm(Rational constant, std::initializer_list<std::pair<const Symbol, Rational>> terms)
        : constant_(std::move(constant)) {
        for (const auto& [s, c] : terms) add_term(s, c);
    }

    static LinForm symbol(Symbol s, Rational coeff = 1) {
        LinForm f;
        f.add_term(s, coeff);
        return f;
    }

    const Rational& constant() const { return constant_; }
    const Terms& terms() const { return terms_; }

    Rational coefficient(Symbol s) const {
        auto it = terms_.find(s);
        return it == terms_.end() ? Rational(0) : it->second;
    }

    bool mentions(Symbol s) const { return terms_.count(s) != 0; }
    bool is_constant() const { return terms_.empty(); }
    bool is_zero() const { return terms_.empty() && constant_ == 0; }

    LinForm& add_term(Symbol s, const Rational& c) {
        if (c == 0) return *this;
        auto [it, inserted] = terms_.emplace(s, c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
        return *this;
    }

    LinForm& operator+=(const LinForm& o) {
        constant_ += o.constant_;
        for (const auto& [s, c] : o.terms_) add_term(s, c);
        return *this;
    }
    LinForm& operator-=(const LinForm& o) { return *this += o * Rational(-1); }
    LinForm& operator*=(const Rational& k) {
        if (k == 0) {
            constant_ = 0;
            terms_.clear();
            return *this;
        }
        constant_ *= k;
        for (auto& [s, c] : terms_) c *= k;
        return *this;
    }

    friend LinForm operator+(LinForm a, const LinForm& b) { return a += b; }
    friend LinForm operator-(LinForm a, const LinForm& b) { return a -= b; }
    friend LinForm operator*(LinForm a, const Rational& k) { return a *= k; }
    friend LinForm operator*(const Rational& k, LinForm a) { return a *= k; }
    friend LinForm operator-(LinForm a) { return a *= Rational(-1); }
    friend bool operator==(const LinForm& a, const LinForm& b) {
        return a.constant_ == b.constant_ && a.terms_ == b.terms_;
    }
    friend bool operator!=(const LinForm& a, const LinForm& b) { return !(a == b); }

    /// Substitutes the given values; symbols without a value stay symbolic.
    LinForm substitute(const std::map<Symbol, Rational>& values) const {
        LinForm r(constant_);
        for (const auto& [s, c] : terms_) {
            auto it = values.find(s);
            if (it == values.end()) {
                r.add_term(s, c);
            } else {
                r.constant_ += c * it->second;
            }
        }
        return r;
    }

    /// Human-readable rendering, e.g. "103320 + 1170*tau" or "-2*x".
    std::string str() const {
        std::string out;
        auto append = [&](const Rational& c, const std::string& sym) {
            bool neg = c < 0;
            Rational mag = neg ? Rational(-c) : c;
            if (out.empty()) {
                out += neg ? "-" : "";
            } else {
                out += neg ? " - " : " + ";
            }
            if (sym.empty()) {
                out += to_string(mag);
            } else if (mag == 1) {
                out += sym;
            } else {
                out += to_string(mag) + "*" + sym;
            }
        };
        if (constant_ != 0) append(constant_, "");
        for (const auto& [s, c] : terms_) append(c, symbol_name(s));
        return out.empty() ? "0" : out;
    }

private:
    Rational constant_{0};
    Terms terms_;
};

inline std::ostream& operator<<(std::ostream& os, const LinForm& f) { return os << f.str(); }

}  // namespace charnum
