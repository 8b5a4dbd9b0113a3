#include "msdual/hall.hpp"

#include "msdual/enumerate.hpp"

#include <algorithm>

namespace msdual {

long long bilinear_m(const DimVector& a, const DimVector& b) {
    if (!(a.ring() == b.ring())) throw std::invalid_argument("bilinear form: ring mismatch");
    long long total = 0;
    for (auto& [i, ai] : a.entries())
        total += ai * (b.at(a.ring().add(i, -1)) + b.at(i));
    return total;
}

long long bilinear_r(const DimVector& a, const DimVector& b) {
    if (!(a.ring() == b.ring())) throw std::invalid_argument("bilinear form: ring mismatch");
    long long total = 0;
    for (auto& [i, ai] : a.entries())
        total += ai * (b.at(i) - b.at(a.ring().add(i, -1)));
    return total;
}

namespace {

// Tail sums sum_{k > l} (m_{(k-1; i-1]} - m_{(k; i]}) for the generator
// actions; index by l from 1 to max_length + 1.
long long action_exponent(const Multisegment& m, int i, int l) {
    const VertexRing& ring = m.ring();
    int im1 = ring.add(i, -1);
    long long e = 0;
    for (auto& [seg, k] : m.terms()) {
        int h = head_of(ring, seg);
        if (h == im1 && seg.length >= l) e += k;    // m_{(k-1;i-1]} for k-1 >= l
        if (h == i && seg.length >= l + 1) e -= k;  // m_{(k;i]} for k >= l+1
    }
    return e;
}

} // namespace

PBWVector f_action(int i, const PBWVector& u) {
    const VertexRing& ring = u.ring();
    int iN = ring.normalize(i);
    int im1 = ring.add(iN, -1);
    PBWVector out(ring);
    for (auto& [m, c] : u.terms()) {
        // l = 1 always contributes; l > 1 needs a segment (l-1; i-1] to grow.
        std::vector<int> ls{1};
        for (auto& [seg, k] : m.terms())
            if (head_of(ring, seg) == im1) ls.push_back(seg.length + 1);
        for (int l : ls) {
            LaurentPoly coeff = LaurentPoly::v(static_cast<int>(action_exponent(m, iN, l))) *
                                gauss_int(m.mult_head(l, iN) + 1);
            Multisegment target = m;
            if (l > 1) target.add_head(l - 1, im1, -1);
            target.add_head(l, iN);
            out.add_term(target, coeff * c);
        }
    }
    return out;
}

PBWVector e_prime_action(int i, const PBWVector& u) {
    const VertexRing& ring = u.ring();
    int iN = ring.normalize(i);
    int im1 = ring.add(iN, -1);
    PBWVector out(ring);
    for (auto& [m, c] : u.terms()) {
        for (auto& [seg, k] : m.terms()) {
            if (head_of(ring, seg) != iN) continue;
            int l = seg.length;
            LaurentPoly coeff =
                LaurentPoly::v(static_cast<int>(action_exponent(m, iN, l) - m.mult_head(l, iN) + 1));
            if (l > 1) {
                long long a = m.mult_head(l - 1, im1);
                coeff *= LaurentPoly::one() - LaurentPoly::v(static_cast<int>(2 * (a + 1)));
            }
            Multisegment target = m;
            target.add_head(l, iN, -1);
            if (l > 1) target.add_head(l - 1, im1);
            out.add_term(target, coeff * c);
        }
    }
    return out;
}

RationalFunction scalar_norm(const Multisegment& m) {
    LaurentPoly num = LaurentPoly::one();
    LaurentPoly den = LaurentPoly::one();
    LaurentPoly one_minus_v2 = LaurentPoly::one() - LaurentPoly::v(2);
    for (auto& [seg, mult] : m.terms()) {
        long long choose2 = mult * (mult - 1) / 2;
        num = num * LaurentPoly::v(static_cast<int>(-choose2));
        for (int t = 0; t < (seg.length - 1) * mult; ++t) num = num * one_minus_v2;
        den = den * gauss_factorial(mult);
    }
    return RationalFunction(num, den);
}

RationalFunction scalar_product(const PBWVector& u, const PBWVector& w) {
    if (!u.is_zero() && !w.is_zero() && !(u.degree() == w.degree()))
        throw std::invalid_argument("scalar_product: degree vectors differ");
    RationalFunction total;
    for (auto& [m, cu] : u.terms()) {
        LaurentPoly cw = w.coeff(m);
        if (cw.is_zero()) continue;
        total += RationalFunction(cu * cw) * scalar_norm(m);
    }
    return total;
}

long long aut_order(const Multisegment& m, long long q) {
    if (q < 2) throw std::invalid_argument("aut_order needs a prime power q >= 2");
    long long eps = endo_dim(m);
    // q^eps * prod phi_mult(1/q) = q^{eps - sum_j j} * prod_j (q^j - 1).
    long long shift = eps;
    int128 prod = 1;
    for (auto& [seg, mult] : m.terms()) {
        for (long long j = 1; j <= mult; ++j) {
            shift -= j;
            int128 qj = 1;
            for (long long t = 0; t < j; ++t) qj = checked_mul(qj, q);
            prod = checked_mul(prod, qj - 1);
        }
    }
    if (shift < 0) throw InvariantViolation("aut_order: negative q exponent");
    for (long long t = 0; t < shift; ++t) prod = checked_mul(prod, q);
    if (prod > static_cast<int128>(INT64_MAX))
        throw ArithmeticOverflow("aut_order exceeds 64 bits");
    return static_cast<long long>(prod);
}

long long alpha(const Multisegment& O, const Multisegment& P, const Multisegment& Q) {
    DimVector expect = O.degree();
    expect += P.degree();
    if (!(expect == Q.degree()))
        throw std::invalid_argument("alpha: degree(Q) != degree(O) + degree(P)");
    long long by_endos =
        -endo_dim(O) - endo_dim(P) + endo_dim(Q) - bilinear_r(O.degree(), P.degree());
    long long by_orbits =
        orbit_dim(O) + orbit_dim(P) - orbit_dim(Q) + bilinear_m(O.degree(), P.degree());
    if (by_endos != by_orbits)
        throw InvariantViolation("alpha: the two twist formulas disagree (" +
                                 std::to_string(by_endos) + " vs " + std::to_string(by_orbits) +
                                 ")");
    return by_endos;
}

std::vector<long long> hall_polynomial(const Multisegment& O, const Multisegment& P,
                                       const Multisegment& Q, const HallProductOptions& opt) {
    std::vector<long long> xs, ys;
    std::vector<Rat> accepted;
    for (std::size_t t = 0; t < opt.sample_qs.size(); ++t) {
        xs.push_back(opt.sample_qs[t]);
        ys.push_back(count_submodules(Q, P, O, opt.sample_qs[t], opt.count));
        if (xs.size() < 3) continue;
        // Interpolate on all but the last point, then on all but none; accept
        // when the two agree and the held-out point validates.
        std::vector<long long> xs1(xs.begin(), xs.end() - 2), ys1(ys.begin(), ys.end() - 2);
        std::vector<long long> xs2(xs.begin(), xs.end() - 1), ys2(ys.begin(), ys.end() - 1);
        std::vector<Rat> p1 = lagrange_interpolate(xs1, ys1);
        std::vector<Rat> p2 = lagrange_interpolate(xs2, ys2);
        if (p1 != p2) continue;
        Rat held(0);
        Rat x(xs.back());
        for (std::size_t d = p2.size(); d-- > 0;) held = held * x + p2[d];
        if (!(held == Rat(ys.back()))) continue;
        accepted = p2;
        break;
    }
    if (accepted.empty())
        throw InterpolationFailure("hall polynomial did not stabilize over the sample set");
    std::vector<long long> coeffs;
    for (auto& c : accepted) {
        if (c.den != 1)
            throw InterpolationFailure("hall polynomial has a non-integer coefficient");
        coeffs.push_back(c.num);
    }
    return coeffs;
}

PBWVector hall_product(const PBWVector& u, const PBWVector& w, const HallProductOptions& opt) {
    const VertexRing& ring = u.ring();
    PBWVector out(ring);
    if (u.is_zero() || w.is_zero()) return out;
    DimVector total = *u.degree();
    total += *w.degree();
    if (total.total() > opt.max_total_degree)
        throw ResourceLimitError("hall_product: total degree " + std::to_string(total.total()) +
                                 " exceeds bound " + std::to_string(opt.max_total_degree));

    std::vector<Multisegment> candidates = multisegments_with_degree(total);
    for (auto& [O, cO] : u.terms()) {
        for (auto& [P, cP] : w.terms()) {
            LaurentPoly c = cO * cP;
            for (auto& Q : candidates) {
                std::vector<long long> F = hall_polynomial(O, P, Q, opt);
                bool zero = std::all_of(F.begin(), F.end(), [](long long x) { return x == 0; });
                if (zero) continue;
                // F(v^{-2}) shifted by v^alpha.
                LaurentPoly poly;
                for (std::size_t d = 0; d < F.size(); ++d)
                    poly += LaurentPoly::monomial(-2 * static_cast<int>(d), F[d]);
                out.add_term(Q, c * poly.shifted(static_cast<int>(alpha(O, P, Q))));
            }
        }
    }
    return out;
}

} // namespace msdual
