#pragma once

#include "msdual/laurent.hpp"
#include "msdual/multisegment.hpp"
#include "msdual/pbw.hpp"
#include "msdual/quiverrep.hpp"

namespace msdual {

// Euler-type forms on dimension vectors; the quiver arrows are i -> i-1.
//   m(a, b) = sum_i a_i b_{i-1} + sum_i a_i b_i
//   r(a, b) = -sum_i a_i b_{i-1} + sum_i a_i b_i
long long bilinear_m(const DimVector& a, const DimVector& b);
long long bilinear_r(const DimVector& a, const DimVector& b);

// Generator action on a basis vector <m>:
//   f_i <m> = sum_l v^{sum_{k>l}(m_{(k-1;i-1]} - m_{(k;i]})} [m_{(l;i]} + 1] <m+_{l,i}>
// with <m+_{l,i}> = 0 when l > 1 and m_{(l-1;i-1]} = 0.
PBWVector f_action(int i, const PBWVector& u);

// Adjoint of f_i for the orthogonal scalar product below.
PBWVector e_prime_action(int i, const PBWVector& u);

// Diagonal value of the scalar product on basis vectors:
//   (<m>, <m>) = prod_{i,l} v^{-C(m_{(l;i]},2)} (1-v^2)^{(l-1) m_{(l;i]}} / [m_{(l;i]}]!
RationalFunction scalar_norm(const Multisegment& m);

// Orthogonal extension to vectors; degrees must agree.
RationalFunction scalar_product(const PBWVector& u, const PBWVector& w);

// |Aut F_q[m]| = q^{endo_dim(m)} prod_{i,l} phi_{m_{(l;i]}}(q^{-1}) with
// phi_m(t) = (1-t^m)...(1-t); exact positive integer.
long long aut_order(const Multisegment& m, long long q);

// Twist exponent of the structure constants, computed both as
//   -eps(O) - eps(P) + eps(Q) - r(deg O, deg P)
// and as dim O + dim P - dim Q + m(deg O, deg P); the two must agree.
long long alpha(const Multisegment& O, const Multisegment& P, const Multisegment& Q);

struct HallProductOptions {
    long long max_total_degree = 6;
    // Sample points for Hall-polynomial interpolation, in evaluation order.
    std::vector<long long> sample_qs = {2, 3, 4, 5, 7, 8, 9, 11, 13};
    SubmoduleCountOptions count;
};

// Hall polynomial F^Q_{O,P} by exact interpolation from submodule counts;
// accepted once two consecutive interpolations agree and one held-out sample
// validates.  Coefficients are integers, low degree first.
std::vector<long long> hall_polynomial(const Multisegment& O, const Multisegment& P,
                                       const Multisegment& Q,
                                       const HallProductOptions& opt = {});

// <O> o <P> = sum_Q v^{alpha(O,P,Q)} F^Q_{O,P}(v^{-2}) <Q>, extended bilinearly.
PBWVector hall_product(const PBWVector& u, const PBWVector& w,
                       const HallProductOptions& opt = {});

} // namespace msdual
