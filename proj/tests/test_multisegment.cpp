#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "msdual/enumerate.hpp"
#include "msdual/multisegment.hpp"

#include <algorithm>
#include <random>

using namespace msdual;

namespace {

Multisegment ms(const std::string& text, const VertexRing& ring) {
    return Multisegment::parse(text, ring);
}

} // namespace

TEST_CASE("labels expand to multisegments") {
    VertexRing z = VertexRing::integers();
    Label fig{{2, 2, 3, 1, 1, 2, 2, 1}, {2, 2, 0, 0, 0, -1, -1, -1}};
    Multisegment m = from_label(fig, z);
    CHECK(m == ms("2[2;2)+[0;3)+2[0;1)+2[-1;2)+[-1;1)", z));

    CHECK(from_label(Label{}, z).empty());

    VertexRing z2 = VertexRing::cyclic(2);
    CHECK(from_label(Label{{3}, {0}}, z2) == ms("[0;3)", z2));
}

TEST_CASE("labels are permutation invariant") {
    VertexRing z = VertexRing::integers();
    Label lab{{2, 2, 3, 1, 1, 2, 2, 1}, {2, 2, 0, 0, 0, -1, -1, -1}};
    Multisegment expect = from_label(lab, z);
    std::mt19937_64 rng(7);
    for (int t = 0; t < 20; ++t) {
        std::vector<std::size_t> perm(lab.mu.size());
        for (std::size_t i = 0; i < perm.size(); ++i) perm[i] = i;
        std::shuffle(perm.begin(), perm.end(), rng);
        Label shuffled;
        for (std::size_t i : perm) {
            shuffled.mu.push_back(lab.mu[i]);
            shuffled.a.push_back(lab.a[i]);
        }
        CHECK(from_label(shuffled, z) == expect);
    }
}

TEST_CASE("reduction modulo n") {
    VertexRing z = VertexRing::integers();
    Label fig{{2, 2, 3, 1, 1, 2, 2, 1}, {2, 2, 0, 0, 0, -1, -1, -1}};
    Multisegment m = from_label(fig, z);
    VertexRing z2 = VertexRing::cyclic(2);
    // 2[0;2) + [0;3) + 2[0;1) + 2[1;2) + [1;1)
    CHECK(reduce_mod(m, 2) == ms("2[0;2)+[0;3)+2[0;1)+2[1;2)+[1;1)", z2));

    CHECK(reduce_mod(Multisegment(z), 3).empty());
    CHECK(reduce_mod(ms("[-1;1)+[1;1)", z), 2) == ms("2[1;1)", z2));
    CHECK_THROWS_AS(reduce_mod(m, 1), std::invalid_argument);
    CHECK_THROWS_AS(reduce_mod(reduce_mod(m, 2), 2), std::invalid_argument);

    // reduce_mod(from_label(mu, a), n) = from_label(mu, a mod n).
    Label modded = fig;
    for (int& a : modded.a) a = z2.normalize(a);
    CHECK(reduce_mod(m, 2) == from_label(modded, z2));
}

TEST_CASE("aperiodicity") {
    VertexRing z2 = VertexRing::cyclic(2);
    CHECK(Multisegment(z2).is_aperiodic());
    CHECK_FALSE(ms("[0;1)+[1;1)", z2).is_aperiodic());
    VertexRing z = VertexRing::integers();
    Multisegment fig = from_label(Label{{2, 2, 3, 1, 1, 2, 2, 1}, {2, 2, 0, 0, 0, -1, -1, -1}}, z);
    CHECK_FALSE(reduce_mod(fig, 2).is_aperiodic()); // length 1 occurs at both residues
    CHECK_THROWS_AS(fig.is_aperiodic(), InvariantViolation);

    // All n origins at some length is periodic at that length.
    VertexRing z3 = VertexRing::cyclic(3);
    CHECK_FALSE(ms("[0;2)+[1;2)+[2;2)", z3).is_aperiodic());
    CHECK(ms("[0;2)+[1;2)", z3).is_aperiodic());
}

TEST_CASE("flat") {
    VertexRing z = VertexRing::integers();
    CHECK(Multisegment(z).flat().empty());
    CHECK(ms("[0;2)", z).flat() == ms("[-1;2)", z));
    VertexRing z2 = VertexRing::cyclic(2);
    CHECK(ms("[1;1)", z2).flat() == ms("[1;1)", z2));
}

TEST_CASE("flat is an involution and negates the degree") {
    std::mt19937_64 rng(11);
    for (int t = 0; t < 200; ++t) {
        VertexRing ring = t % 2 ? VertexRing::integers() : VertexRing::cyclic(2 + t % 4);
        Multisegment m(ring);
        for (int s = 0; s < 4; ++s)
            m.add(Segment{static_cast<int>(rng() % 9) - 4, 1 + static_cast<int>(rng() % 5)});
        CHECK(m.flat().flat() == m);
        DimVector d = m.degree();
        DimVector fd = m.flat().degree();
        CHECK(fd == d.negated());
    }
}

TEST_CASE("degree vectors") {
    VertexRing z = VertexRing::integers();
    CHECK(Multisegment(z).degree().is_zero());
    DimVector d = ms("[0;3)", z).degree();
    CHECK(d.at(0) == 1);
    CHECK(d.at(1) == 1);
    CHECK(d.at(2) == 1);
    VertexRing z2 = VertexRing::cyclic(2);
    DimVector d2 = ms("[0;3)", z2).degree();
    CHECK(d2.at(0) == 2);
    CHECK(d2.at(1) == 1);
    CHECK(ms("[0;3)", z2).total_degree() == 3);
}

TEST_CASE("text grammar round trips") {
    VertexRing z = VertexRing::integers();
    CHECK(ms("", z).empty());
    CHECK(ms("0", z).empty());
    CHECK(ms(" 2[0;2) + [1;3) ", z) == ms("2[0;2)+[1;3)", z));
    CHECK(ms("[2;2)+[2;2)+[0;3)+2[0;1)+2[-1;2)+[-1;1)", z) ==
          from_label(Label{{2, 2, 3, 1, 1, 2, 2, 1}, {2, 2, 0, 0, 0, -1, -1, -1}}, z));
    CHECK(Multisegment(z).to_string() == "0");

    // Printer and parser are mutually inverse.
    std::mt19937_64 rng(3);
    for (int t = 0; t < 100; ++t) {
        VertexRing ring = t % 2 ? VertexRing::integers() : VertexRing::cyclic(2 + t % 3);
        Multisegment m(ring);
        for (int s = 0; s < static_cast<int>(rng() % 5); ++s)
            m.add(Segment{static_cast<int>(rng() % 7) - 3, 1 + static_cast<int>(rng() % 4)},
                  1 + static_cast<int>(rng() % 3));
        CHECK(Multisegment::parse(m.to_string(), ring) == m);
        CHECK(Multisegment::from_json_string(m.to_json_string(), ring) == m);
    }
}

TEST_CASE("syntax errors carry byte offsets") {
    VertexRing z = VertexRing::integers();
    CHECK_THROWS_AS(Multisegment::parse("[1;2", z), SyntaxError);
    CHECK_THROWS_AS(Multisegment::parse("2[0;2)+", z), SyntaxError);
    CHECK_THROWS_AS(Multisegment::parse("[0;0)", z), SyntaxError);
    CHECK_THROWS_AS(Multisegment::parse("0 junk", z), SyntaxError);
    try {
        Multisegment::parse("[1;x)", z);
        CHECK(false);
    } catch (const SyntaxError& e) {
        CHECK(e.offset == 3);
    }
}

TEST_CASE("cyclic origins normalize and multiplicities merge") {
    VertexRing z3 = VertexRing::cyclic(3);
    Multisegment m(z3);
    m.add(Segment{-1, 2});
    m.add(Segment{2, 2});
    CHECK(m.terms().size() == 1);
    CHECK(m.mult(Segment{2, 2}) == 2);
    CHECK(head_of(z3, Segment{2, 2}) == 0);
    CHECK(m.mult_head(2, 0) == 2);
}

TEST_CASE("degree-exact enumeration matches the budget enumeration") {
    VertexRing z2 = VertexRing::cyclic(2);
    auto all = multisegments_up_to(z2, 4);
    long long found = 0;
    for (auto& d : degree_vectors_with_total(z2, 4))
        found += static_cast<long long>(multisegments_with_degree(d).size());
    long long direct = 0;
    for (auto& m : all)
        if (m.total_degree() == 4) ++direct;
    CHECK(found == direct);
}
