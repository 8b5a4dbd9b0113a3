#include "msdual/laurent.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace msdual {

int LaurentPoly::min_exp() const {
    if (c_.empty()) throw InvariantViolation("min_exp of zero polynomial");
    return c_.begin()->first;
}

int LaurentPoly::max_exp() const {
    if (c_.empty()) throw InvariantViolation("max_exp of zero polynomial");
    return c_.rbegin()->first;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
    for (auto& [e, k] : o.c_) {
        auto [it, fresh] = c_.emplace(e, 0);
        it->second += k;
        if (it->second == 0) c_.erase(it);
    }
    return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
    for (auto& [e, k] : o.c_) {
        auto [it, fresh] = c_.emplace(e, 0);
        it->second -= k;
        if (it->second == 0) c_.erase(it);
    }
    return *this;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
    LaurentPoly r;
    for (auto& [ea, ka] : a.c_)
        for (auto& [eb, kb] : b.c_) {
            auto [it, fresh] = r.c_.emplace(ea + eb, 0);
            it->second += ka * kb;
            if (it->second == 0) r.c_.erase(it);
        }
    return r;
}

LaurentPoly operator-(const LaurentPoly& a) {
    LaurentPoly r;
    for (auto& [e, k] : a.c_) r.c_[e] = -k;
    return r;
}

LaurentPoly LaurentPoly::shifted(int k) const {
    LaurentPoly r;
    for (auto& [e, c] : c_) r.c_[e + k] = c;
    return r;
}

LaurentPoly LaurentPoly::bar() const {
    LaurentPoly r;
    for (auto& [e, c] : c_) r.c_[-e] = c;
    return r;
}

bool LaurentPoly::in_nonneg_nv() const {
    for (auto& [e, c] : c_)
        if (e < 0 || c < 0) return false;
    return true;
}

LaurentPoly LaurentPoly::bar_symmetric_part() const {
    LaurentPoly g;
    long long c0 = coeff(0);
    if (c0 != 0) g += monomial(0, c0);
    for (auto& [e, c] : c_) {
        if (e >= 0) break;
        g += monomial(e, c);
        g += monomial(-e, c);
    }
    return g;
}

std::optional<LaurentPoly> LaurentPoly::divide_exact(const LaurentPoly& divisor) const {
    if (divisor.is_zero()) throw DivisionFailure("division by zero polynomial");
    if (is_zero()) return zero();
    long long lead = divisor.c_.rbegin()->second;
    if (lead != 1 && lead != -1)
        throw DivisionFailure("divisor leading coefficient must be a unit");
    int dlead = divisor.max_exp();
    LaurentPoly rem = *this;
    LaurentPoly quot;
    while (!rem.is_zero() && rem.max_exp() - rem.min_exp() >= dlead - divisor.min_exp()) {
        int e = rem.max_exp() - dlead;
        long long k = rem.c_.rbegin()->second / lead;
        LaurentPoly t = monomial(e, k);
        quot += t;
        rem -= t * divisor;
        if (!rem.is_zero() && rem.max_exp() >= e + dlead) return std::nullopt;
    }
    if (!rem.is_zero()) return std::nullopt;
    return quot;
}

std::optional<long long> LaurentPoly::eval_as_poly_in_qinv2(long long q) const {
    long long total = 0;
    for (auto& [e, c] : c_) {
        if (e > 0 || e % 2 != 0) return std::nullopt;
        long long qpow = 1;
        for (int t = 0; t < -e / 2; ++t) qpow *= q;
        total += c * qpow;
    }
    return total;
}

std::string LaurentPoly::to_string() const {
    if (c_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
        auto [e, k] = *it;
        if (first) {
            if (k < 0) os << "-";
        } else {
            os << (k < 0 ? " - " : " + ");
        }
        long long a = k < 0 ? -k : k;
        if (a != 1 || e == 0) os << a;
        if (e != 0) {
            if (a != 1) os << "*";
            os << "v";
            if (e != 1) os << "^" << e;
        }
        first = false;
    }
    return os.str();
}

LaurentPoly gauss_int(long long a) {
    if (a == 0) return LaurentPoly::zero();
    if (a < 0) return -gauss_int(-a);
    LaurentPoly p;
    for (long long e = a - 1; e >= 1 - a; e -= 2) p += LaurentPoly::monomial(static_cast<int>(e), 1);
    return p;
}

LaurentPoly gauss_factorial(long long a) {
    if (a < 0) throw std::invalid_argument("gauss_factorial needs a >= 0");
    LaurentPoly p = LaurentPoly::one();
    for (long long k = 2; k <= a; ++k) p *= gauss_int(k);
    return p;
}

RationalFunction::RationalFunction(LaurentPoly num, LaurentPoly den)
    : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw std::invalid_argument("rational function with zero denominator");
    reduce();
}

void RationalFunction::reduce() {
    if (num_.is_zero()) {
        den_ = LaurentPoly::one();
        return;
    }
    // Cancel a common power of v and the common integer content.
    int shift = std::min(num_.min_exp(), den_.min_exp());
    if (shift != 0) {
        num_ = num_.shifted(-shift);
        den_ = den_.shifted(-shift);
    }
    long long g = 0;
    for (auto& [e, c] : num_.terms()) g = std::gcd(g, c < 0 ? -c : c);
    for (auto& [e, c] : den_.terms()) g = std::gcd(g, c < 0 ? -c : c);
    if (g > 1) {
        LaurentPoly n2, d2;
        for (auto& [e, c] : num_.terms()) n2 += LaurentPoly::monomial(e, c / g);
        for (auto& [e, c] : den_.terms()) d2 += LaurentPoly::monomial(e, c / g);
        num_ = n2;
        den_ = d2;
    }
}

RationalFunction& RationalFunction::operator+=(const RationalFunction& o) {
    num_ = num_ * o.den_ + o.num_ * den_;
    den_ = den_ * o.den_;
    if (den_.is_zero()) throw InvariantViolation("rational function denominator vanished");
    reduce();
    return *this;
}

RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
    return RationalFunction(a.num_ * b.num_, a.den_ * b.den_);
}

std::string RationalFunction::to_string() const {
    if (den_.is_one()) return num_.to_string();
    return "(" + num_.to_string() + ") / (" + den_.to_string() + ")";
}

} // namespace msdual
