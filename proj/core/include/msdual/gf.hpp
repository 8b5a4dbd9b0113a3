#pragma once

#include "msdual/errors.hpp"

#include <cstdint>
#include <vector>

namespace msdual {

// Finite field F_q with q = p^k.  Prime fields use modular arithmetic and
// support large p; proper prime powers (q <= 64) use multiplication tables
// over an irreducible polynomial found by trial division.  Elements are
// integers in [0, q): for k > 1 the base-p digits are the coefficients.
class Fq {
public:
    static Fq make(long long q);

    long long q() const { return q_; }
    long long characteristic() const { return p_; }
    int extension_degree() const { return k_; }

    long long add(long long a, long long b) const;
    long long sub(long long a, long long b) const { return add(a, neg(b)); }
    long long neg(long long a) const;
    long long mul(long long a, long long b) const;
    long long inv(long long a) const;

    // Embeds an integer through the prime subfield.
    long long from_int(long long x) const {
        long long r = x % p_;
        return r < 0 ? r + p_ : r;
    }

private:
    Fq(long long q, long long p, int k) : q_(q), p_(p), k_(k) {}
    void build_tables();

    long long q_ = 2, p_ = 2;
    int k_ = 1;
    std::vector<int> add_table_, mul_table_, inv_table_; // k_ > 1 only
};

using GFMat = std::vector<std::vector<long long>>; // row major, values in [0, q)

GFMat gf_identity(std::size_t n);
GFMat gf_mul(const Fq& F, const GFMat& a, const GFMat& b);
int gf_rank(const Fq& F, GFMat m);

// In-place reduced row echelon form; returns the pivot columns.
std::vector<int> gf_rref(const Fq& F, GFMat& m);

// Basis of the right nullspace (vectors x with m x = 0).
std::vector<std::vector<long long>> gf_nullspace(const Fq& F, GFMat m);

// Reduces `vec` against an RREF basis with the given pivot columns; the
// returned pair is (residual, coordinates).  Residual zero means membership
// in the row space.
std::pair<std::vector<long long>, std::vector<long long>>
gf_reduce(const Fq& F, const GFMat& rref, const std::vector<int>& pivots,
          std::vector<long long> vec);

} // namespace msdual
