#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "msdual/laurent.hpp"
#include "msdual/linalg.hpp"

using namespace msdual;

TEST_CASE("quantum integers") {
    CHECK(gauss_int(0).is_zero());
    CHECK(gauss_int(1).is_one());
    LaurentPoly two = LaurentPoly::v(1) + LaurentPoly::v(-1);
    CHECK(gauss_int(2) == two);
    // [3]! = (v^2 + 1 + v^-2)(v + v^-1)
    LaurentPoly three = LaurentPoly::v(2) + LaurentPoly::one() + LaurentPoly::v(-2);
    CHECK(gauss_factorial(3) == three * two);
    CHECK(gauss_int(-2) == -two);
}

TEST_CASE("exact division") {
    LaurentPoly p = gauss_factorial(4);
    auto q = p.divide_exact(gauss_int(4));
    REQUIRE(q.has_value());
    CHECK(*q == gauss_factorial(3));
    auto fail = (gauss_int(2) + LaurentPoly::one()).divide_exact(gauss_int(3));
    CHECK_FALSE(fail.has_value());
    CHECK_THROWS_AS(p.divide_exact(LaurentPoly::zero()), DivisionFailure);
}

TEST_CASE("bar and the symmetric part") {
    LaurentPoly p = LaurentPoly::monomial(3, 2) + LaurentPoly::monomial(-1, 5);
    CHECK(p.bar() == LaurentPoly::monomial(-3, 2) + LaurentPoly::monomial(1, 5));
    // c = 1 + v^2 has symmetric part 1; c = v^-1 has symmetric part v + v^-1.
    LaurentPoly c1 = LaurentPoly::one() + LaurentPoly::v(2);
    CHECK(c1.bar_symmetric_part() == LaurentPoly::one());
    LaurentPoly c2 = LaurentPoly::v(-1);
    CHECK(c2.bar_symmetric_part() == gauss_int(2));
    LaurentPoly rest = c2 - c2.bar_symmetric_part();
    CHECK(rest.in_v_zv());
    CHECK((c1 - c1.bar_symmetric_part()).in_v_zv());
    CHECK(c1.bar_symmetric_part().bar() == c1.bar_symmetric_part());
}

TEST_CASE("polynomials in v^-2 evaluate") {
    LaurentPoly p = LaurentPoly::monomial(-4, 1) + LaurentPoly::monomial(-2, 1) +
                    LaurentPoly::one();
    auto v = p.eval_as_poly_in_qinv2(3);
    REQUIRE(v.has_value());
    CHECK(*v == 9 + 3 + 1);
    CHECK_FALSE(LaurentPoly::v(1).eval_as_poly_in_qinv2(2).has_value());
}

TEST_CASE("rational functions compare by cross multiplication") {
    RationalFunction a(LaurentPoly::v(-1), gauss_int(2));
    RationalFunction b(LaurentPoly::one(), LaurentPoly::v(2) + LaurentPoly::one());
    CHECK(a == b); // v^-1/(v+v^-1) = 1/(v^2+1)
    RationalFunction c = a + a;
    CHECK(c == RationalFunction(LaurentPoly::monomial(0, 2),
                                LaurentPoly::v(2) + LaurentPoly::one()));
    CHECK_THROWS_AS(RationalFunction(LaurentPoly::one(), LaurentPoly::zero()),
                    std::invalid_argument);
}

TEST_CASE("interpolation recovers integer polynomials") {
    // f(q) = q^2 + 3
    std::vector<long long> xs{2, 3, 5}, ys{7, 12, 28};
    auto coeffs = lagrange_interpolate(xs, ys);
    REQUIRE(coeffs.size() == 3);
    CHECK(coeffs[0] == Rat(3));
    CHECK(coeffs[1] == Rat(0));
    CHECK(coeffs[2] == Rat(1));
}

TEST_CASE("integer rank via fraction-free elimination") {
    IMat m{{1, 2, 3}, {2, 4, 6}, {0, 1, 1}};
    CHECK(bareiss_rank(m) == 2);
    IMat id{{1, 0}, {0, 1}};
    CHECK(bareiss_rank(id) == 2);
    CHECK(bareiss_rank(IMat{}) == 0);
}
