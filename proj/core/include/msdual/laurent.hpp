#pragma once

#include "msdual/errors.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <string>

namespace msdual {

// Laurent polynomial in the quantum parameter v with exact integer
// coefficients.  Canonical form: zero coefficients are never stored.
class LaurentPoly {
public:
    LaurentPoly() = default;

    static LaurentPoly zero() { return LaurentPoly(); }
    static LaurentPoly one() { return monomial(0, 1); }
    static LaurentPoly v(int exponent = 1) { return monomial(exponent, 1); }

    static LaurentPoly monomial(int exponent, long long coeff) {
        LaurentPoly p;
        if (coeff != 0) p.c_[exponent] = coeff;
        return p;
    }

    bool is_zero() const { return c_.empty(); }
    bool is_one() const { return c_.size() == 1 && c_.begin()->first == 0 && c_.begin()->second == 1; }

    long long coeff(int exponent) const {
        auto it = c_.find(exponent);
        return it == c_.end() ? 0 : it->second;
    }

    int min_exp() const;
    int max_exp() const;

    const std::map<int, long long>& terms() const { return c_; }

    LaurentPoly& operator+=(const LaurentPoly& o);
    LaurentPoly& operator-=(const LaurentPoly& o);
    friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
    friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
    friend LaurentPoly operator-(const LaurentPoly& a);
    friend bool operator==(const LaurentPoly&, const LaurentPoly&) = default;

    LaurentPoly& operator*=(const LaurentPoly& o) { return *this = *this * o; }

    // Multiplication by v^k.
    LaurentPoly shifted(int k) const;

    // v -> v^{-1}.
    LaurentPoly bar() const;

    // True iff every term lies in v * Z[v] (all exponents >= 1).
    bool in_v_zv() const { return c_.empty() || c_.begin()->first >= 1; }

    // True iff all exponents >= 0 and all coefficients >= 0.
    bool in_nonneg_nv() const;

    // The unique bar-symmetric g with (*this - g) in v*Z[v]:
    // g = c_0 + sum_{k>0} c_{-k} (v^k + v^{-k}).
    LaurentPoly bar_symmetric_part() const;

    // Exact division; nullopt if the division leaves a remainder.  The divisor
    // must be nonzero with leading coefficient +-1.
    std::optional<LaurentPoly> divide_exact(const LaurentPoly& divisor) const;

    // Reads *this as a polynomial in q = v^{-2} and evaluates at the given q.
    // nullopt if some exponent is positive or odd.
    std::optional<long long> eval_as_poly_in_qinv2(long long q) const;

    // Terms printed in descending exponents, e.g. "v^2 + 1 + v^-2".
    std::string to_string() const;

private:
    std::map<int, long long> c_;
};

// [a] = (v^a - v^{-a})/(v - v^{-1}); [0] = 0, [-a] = -[a].
LaurentPoly gauss_int(long long a);

// [a]! = [a][a-1]...[1], [0]! = 1; requires a >= 0.
LaurentPoly gauss_factorial(long long a);

// Rational function num/den in v over the integers; no floating point.
// Equality is decided by cross multiplication, so no gcd normalization is
// needed; only a light content/power-of-v reduction keeps sizes small.
class RationalFunction {
public:
    RationalFunction() : num_(LaurentPoly::zero()), den_(LaurentPoly::one()) {}
    RationalFunction(LaurentPoly num, LaurentPoly den);
    /* implicit */ RationalFunction(const LaurentPoly& p) : num_(p), den_(LaurentPoly::one()) {}

    static RationalFunction one() { return RationalFunction(LaurentPoly::one()); }

    const LaurentPoly& num() const { return num_; }
    const LaurentPoly& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }

    RationalFunction& operator+=(const RationalFunction& o);
    friend RationalFunction operator+(RationalFunction a, const RationalFunction& b) { return a += b; }
    friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b);

    friend bool operator==(const RationalFunction& a, const RationalFunction& b) {
        return a.num_ * b.den_ == b.num_ * a.den_;
    }

    std::string to_string() const;

private:
    void reduce();
    LaurentPoly num_, den_;
};

} // namespace msdual
