#pragma once

#include "msdual/errors.hpp"

#include <cstdint>
#include <numeric>
#include <string>
#include <vector>

namespace msdual {

using int128 = __int128;

inline int128 checked_mul(int128 a, int128 b) {
    if (a == 0 || b == 0) return 0;
    int128 r = a * b;
    if (r / b != a) throw ArithmeticOverflow("128-bit product overflow");
    return r;
}

inline int128 checked_add(int128 a, int128 b) {
    int128 r = a + b;
    if ((b > 0 && r < a) || (b < 0 && r > a)) throw ArithmeticOverflow("128-bit sum overflow");
    return r;
}

using IMat = std::vector<std::vector<int128>>; // row major, exact integers

IMat imat_mul(const IMat& a, const IMat& b);

// Rank over the rationals via fraction-free elimination; exact, throws
// ArithmeticOverflow if 128-bit intermediates do not suffice.
int bareiss_rank(IMat m);

// Exact rational with 64-bit numerator/denominator and checked intermediates.
struct Rat {
    long long num = 0;
    long long den = 1;

    Rat() = default;
    Rat(long long n) : num(n), den(1) {}
    Rat(long long n, long long d);

    bool is_zero() const { return num == 0; }

    friend Rat operator+(const Rat& a, const Rat& b);
    friend Rat operator-(const Rat& a, const Rat& b);
    friend Rat operator*(const Rat& a, const Rat& b);
    friend Rat operator/(const Rat& a, const Rat& b);
    friend Rat operator-(const Rat& a) { return Rat(-a.num, a.den); }
    friend bool operator==(const Rat&, const Rat&) = default;

    std::string to_string() const;
};

using RatMat = std::vector<std::vector<Rat>>;

// In-place reduced row echelon form; returns pivot columns.
std::vector<int> rat_rref(RatMat& m);

// Right nullspace basis, each vector scaled to primitive integers.
std::vector<std::vector<long long>> rat_nullspace_integer(const RatMat& m);

// Lagrange interpolation through (x_i, y_i); exact rational coefficients,
// returned low degree first.
std::vector<Rat> lagrange_interpolate(const std::vector<long long>& xs,
                                      const std::vector<long long>& ys);

} // namespace msdual
