#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "msdual/enumerate.hpp"
#include "msdual/hall.hpp"

using namespace msdual;

namespace {

Multisegment ms(const std::string& text, const VertexRing& ring) {
    return Multisegment::parse(text, ring);
}

Multisegment seg_head(const VertexRing& ring, int length, int head, long long mult = 1) {
    Multisegment m(ring);
    m.add_head(length, head, mult);
    return m;
}

// |Aut F_q[m]| as a Laurent polynomial in v under q = v^{-2}:
// q^{eps - sum j} prod (q^j - 1).
LaurentPoly aut_order_poly(const Multisegment& m) {
    LaurentPoly q = LaurentPoly::v(-2);
    long long shift = endo_dim(m);
    LaurentPoly prod = LaurentPoly::one();
    for (auto& [seg, mult] : m.terms())
        for (long long j = 1; j <= mult; ++j) {
            shift -= j;
            LaurentPoly qj = LaurentPoly::one();
            for (long long t = 0; t < j; ++t) qj *= q;
            prod *= qj - LaurentPoly::one();
        }
    return prod.shifted(static_cast<int>(-2 * shift));
}

} // namespace

TEST_CASE("bilinear forms on dimension vectors") {
    VertexRing z2 = VertexRing::cyclic(2);
    DimVector zero(z2), ab(z2);
    ab.add(0, 1);
    ab.add(1, 1);
    CHECK(bilinear_m(zero, ab) == 0);
    CHECK(bilinear_m(ab, ab) == 4);
    CHECK(bilinear_r(ab, ab) == 0);
}

TEST_CASE("generator action on basis vectors") {
    VertexRing z2 = VertexRing::cyclic(2);
    CHECK(f_action(1, PBWVector::basis(Multisegment(z2))) ==
          PBWVector::basis(seg_head(z2, 1, 1)));

    // f_i<(1;i]> = [2] <2(1;i]>.
    PBWVector expect(z2);
    expect.add_term(seg_head(z2, 1, 1, 2), gauss_int(2));
    CHECK(f_action(1, PBWVector::basis(seg_head(z2, 1, 1))) == expect);

    // f_i<(1;i-1]> = v <(1;i-1]+(1;i]> + <(2;i]>.
    PBWVector expect2(z2);
    Multisegment both = seg_head(z2, 1, 0);
    both.add_head(1, 1);
    expect2.add_term(both, LaurentPoly::v(1));
    expect2.add_term(seg_head(z2, 2, 1), LaurentPoly::one());
    CHECK(f_action(1, PBWVector::basis(seg_head(z2, 1, 0))) == expect2);
}

TEST_CASE("adjoint action on basis vectors") {
    VertexRing z2 = VertexRing::cyclic(2);
    CHECK(e_prime_action(1, PBWVector::basis(Multisegment(z2))).is_zero());
    CHECK(e_prime_action(1, PBWVector::basis(seg_head(z2, 1, 1))) ==
          PBWVector::basis(Multisegment(z2)));

    PBWVector expect(z2);
    expect.add_term(seg_head(z2, 1, 0), LaurentPoly::one() - LaurentPoly::v(2));
    CHECK(e_prime_action(1, PBWVector::basis(seg_head(z2, 2, 1))) == expect);
}

TEST_CASE("scalar product on the basis") {
    VertexRing z2 = VertexRing::cyclic(2);
    CHECK(scalar_norm(Multisegment(z2)) == RationalFunction::one());
    CHECK(scalar_norm(seg_head(z2, 2, 1)) ==
          RationalFunction(LaurentPoly::one() - LaurentPoly::v(2)));
    CHECK(scalar_norm(seg_head(z2, 1, 1, 2)) ==
          RationalFunction(LaurentPoly::v(-1), gauss_int(2)));
    CHECK_THROWS_AS(scalar_product(PBWVector::basis(seg_head(z2, 1, 0)),
                                   PBWVector::basis(seg_head(z2, 1, 1))),
                    std::invalid_argument);
}

TEST_CASE("scalar product matches the automorphism-order normalization") {
    // (<m>, <m>) * |Aut|_{q=v^-2} = v^{-2 eps} (1 - v^2)^{dim}.
    VertexRing z3 = VertexRing::cyclic(3);
    for (auto& m : multisegments_up_to(z3, 4)) {
        LaurentPoly lhs_num = scalar_norm(m).num() * aut_order_poly(m);
        LaurentPoly rhs = LaurentPoly::v(static_cast<int>(-2 * endo_dim(m)));
        for (long long t = 0; t < m.total_degree(); ++t)
            rhs *= LaurentPoly::one() - LaurentPoly::v(2);
        CHECK(lhs_num == rhs * scalar_norm(m).den());
    }
}

TEST_CASE("automorphism group orders") {
    VertexRing z2 = VertexRing::cyclic(2);
    CHECK(aut_order(seg_head(z2, 1, 1), 5) == 4);
    CHECK(aut_order(seg_head(z2, 1, 1, 2), 2) == 6);   // |GL_2(F_2)|
    CHECK(aut_order(seg_head(z2, 1, 1, 2), 3) == 48);  // |GL_2(F_3)|
    CHECK(aut_order(seg_head(z2, 2, 1), 2) == 1);
    CHECK(aut_order(seg_head(z2, 2, 1), 3) == 2);
    CHECK(count_automorphisms_brute(seg_head(z2, 2, 1), 2) == 1);
    CHECK(count_automorphisms_brute(seg_head(z2, 1, 1, 2), 2) == 6);
}

TEST_CASE("twist exponent") {
    VertexRing z2 = VertexRing::cyclic(2);
    Multisegment simple = seg_head(z2, 1, 1);
    CHECK(alpha(simple, Multisegment(z2), simple) == 0);
    CHECK(alpha(simple, seg_head(z2, 1, 0), seg_head(z2, 2, 1)) == 0);
    CHECK(alpha(simple, simple, seg_head(z2, 1, 1, 2)) == 1);
    CHECK_THROWS_AS(alpha(simple, simple, seg_head(z2, 2, 1)), std::invalid_argument);
}

TEST_CASE("hall product on small vectors") {
    VertexRing z2 = VertexRing::cyclic(2);
    PBWVector one = PBWVector::basis(Multisegment(z2));
    PBWVector u = PBWVector::basis(seg_head(z2, 1, 1));
    CHECK(hall_product(u, one) == u);

    PBWVector expect(z2);
    expect.add_term(seg_head(z2, 1, 1, 2), gauss_int(2));
    CHECK(hall_product(u, u) == expect);

    // The product with a simple left factor is the generator action.
    for (auto& m : multisegments_up_to(z2, 3))
        for (int i = 0; i < 2; ++i)
            CHECK(hall_product(PBWVector::basis(seg_head(z2, 1, i)), PBWVector::basis(m)) ==
                  f_action(i, PBWVector::basis(m)));

    HallProductOptions tight;
    tight.max_total_degree = 2;
    CHECK_THROWS_AS(hall_product(hall_product(u, u), hall_product(u, u), tight),
                    ResourceLimitError);
}

TEST_CASE("hall polynomials interpolate exactly") {
    VertexRing z2 = VertexRing::cyclic(2);
    Multisegment simple = seg_head(z2, 1, 1);
    auto F = hall_polynomial(simple, simple, seg_head(z2, 1, 1, 2));
    CHECK(F == std::vector<long long>{1, 1}); // q + 1
    // No submodule of the split orbit is a nonsplit chain.
    Multisegment split = seg_head(z2, 1, 0);
    split.add_head(1, 1);
    auto zero = hall_polynomial(Multisegment(z2), seg_head(z2, 2, 1), split);
    CHECK(zero == std::vector<long long>{0});
}

TEST_CASE("the product is associative on small vectors") {
    // Exercises the twist exponent, the counting oracle and the interpolation
    // together.
    for (int n : {2, 3}) {
        VertexRing ring = VertexRing::cyclic(n);
        std::vector<PBWVector> gens;
        for (int i = 0; i < n; ++i) gens.push_back(PBWVector::basis(seg_head(ring, 1, i)));
        for (auto& a : gens)
            for (auto& b : gens)
                for (auto& m : multisegments_up_to(ring, 2)) {
                    PBWVector c = PBWVector::basis(m);
                    CHECK(hall_product(hall_product(a, b), c) ==
                          hall_product(a, hall_product(b, c)));
                }
    }
}

TEST_CASE("commuting generators commute exactly") {
    VertexRing z5 = VertexRing::cyclic(5);
    for (auto& m : multisegments_up_to(z5, 3)) {
        PBWVector u = PBWVector::basis(m);
        CHECK(f_action(0, f_action(2, u)) == f_action(2, f_action(0, u)));
    }
    VertexRing z = VertexRing::integers();
    for (auto& m : z_multisegments_in_window(0, 3, 3)) {
        PBWVector u = PBWVector::basis(m);
        CHECK(f_action(0, f_action(5, u)) == f_action(5, f_action(0, u)));
    }
}

TEST_CASE("adjointness on a small family") {
    VertexRing z3 = VertexRing::cyclic(3);
    for (int t = 1; t <= 3; ++t) {
        for (auto& d : degree_vectors_with_total(z3, t)) {
            for (int i = 0; i < 3; ++i) {
                if (d.at(i) == 0) continue;
                DimVector low = d;
                low.add(i, -1);
                for (auto& m1 : multisegments_with_degree(low))
                    for (auto& m2 : multisegments_with_degree(d)) {
                        RationalFunction lhs =
                            RationalFunction(f_action(i, PBWVector::basis(m1)).coeff(m2)) *
                            scalar_norm(m2);
                        RationalFunction rhs =
                            RationalFunction(e_prime_action(i, PBWVector::basis(m2)).coeff(m1)) *
                            scalar_norm(m1);
                        CHECK(lhs == rhs);
                    }
            }
        }
    }
}

TEST_CASE("pbw vector JSON round trip") {
    VertexRing z2 = VertexRing::cyclic(2);
    PBWVector u = f_action(0, f_action(1, PBWVector::basis(Multisegment(z2))));
    PBWVector back = PBWVector::from_json_string(u.to_json_string(), z2);
    CHECK(back == u);
    CHECK_THROWS_AS(
        [&] {
            PBWVector mixed(z2);
            mixed.add_term(seg_head(z2, 1, 0), LaurentPoly::one());
            mixed.add_term(seg_head(z2, 1, 1), LaurentPoly::one());
        }(),
        std::invalid_argument);
}
