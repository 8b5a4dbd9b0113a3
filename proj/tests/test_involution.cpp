#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "msdual/enumerate.hpp"
#include "msdual/involution.hpp"

#include <functional>
#include <random>

using namespace msdual;

namespace {

Multisegment ms(const std::string& text, const VertexRing& ring) {
    return Multisegment::parse(text, ring);
}

} // namespace

TEST_CASE("sharp on segments") {
    VertexRing z = VertexRing::integers();
    CHECK(sharp(Multisegment(z)).empty());
    // (2;1] = [0;2): the negated path gives (1;0] + (1;-1].
    CHECK(sharp(ms("[0;2)", z)) == ms("[0;1)+[-1;1)", z));

    VertexRing z3 = VertexRing::cyclic(3);
    // (2;2] = [1;2): image is (1;2] + (1;1] = [2;1) + [1;1).
    CHECK(sharp(ms("[1;2)", z3)) == ms("[2;1)+[1;1)", z3));

    CHECK_THROWS_AS(sharp(ms("[0;1)+[1;1)", VertexRing::cyclic(2))), NonAperiodicError);
}

TEST_CASE("tau on segments") {
    VertexRing z = VertexRing::integers();
    CHECK(tau(Multisegment(z)).empty());
    CHECK(tau(ms("[0;2)", z)) == ms("[0;1)+[1;1)", z));

    // tau preserves the degree vector; over Z/3Z the dual of the segment
    // [0;2) = (2;1] is therefore supported on the same cells {0, 1}.
    VertexRing z3 = VertexRing::cyclic(3);
    Multisegment m = ms("[0;2)", z3);
    Multisegment t = tau(m);
    CHECK(t == ms("[0;1)+[1;1)", z3));
    CHECK(t.degree() == m.degree());
}

TEST_CASE("distinguished descent dual") {
    VertexRing z = VertexRing::integers();
    CHECK(mw_dual(Multisegment(z)).empty());
    CHECK(mw_dual(ms("[0;2)", z)) == ms("[0;1)+[1;1)", z));
    CHECK(mw_dual(ms("[0;1)+[1;1)", z)) == ms("[0;2)", z));
    CHECK_THROWS_AS(mw_dual(ms("[0;1)", VertexRing::cyclic(2))), std::invalid_argument);
}

TEST_CASE("involution laws on small families") {
    VertexRing z = VertexRing::integers();
    for (auto& m : z_multisegments_in_window(0, 4, 5)) {
        CHECK(m.flat().flat() == m);
        CHECK(sharp(sharp(m)) == m);
        Multisegment t = tau(m); // asserts sharp o flat == flat o sharp internally
        CHECK(tau(t) == m);
        CHECK(mw_dual(m) == t);
        CHECK(t.degree() == m.degree());
    }
    for (int n : {2, 3}) {
        VertexRing ring = VertexRing::cyclic(n);
        for (auto& m : aperiodic_multisegments_up_to(ring, 4)) {
            CHECK(sharp(sharp(m)) == m);
            CHECK(tau(tau(m)) == m);
        }
    }
}

TEST_CASE("sharp is path independent") {
    std::mt19937_64 rng(99);
    VertexRing z3 = VertexRing::cyclic(3);
    for (auto& m : aperiodic_multisegments_up_to(z3, 4)) {
        Multisegment expect = sharp(m);
        for (int t = 0; t < 3; ++t) {
            auto chooser = [&](const std::vector<int>& defined) {
                return defined[rng() % defined.size()];
            };
            CHECK(sharp_with_chooser(m, chooser) == expect);
        }
    }
}

TEST_CASE("partitions embed as row sums") {
    VertexRing z = VertexRing::integers();
    CHECK(partition_to_multisegment(Partition{{1}}, z) == ms("[0;1)", z));
    CHECK(partition_to_multisegment(Partition{{2, 1}}, z) == ms("[0;2)+[-1;1)", z));
    VertexRing z2 = VertexRing::cyclic(2);
    CHECK(partition_to_multisegment(Partition{{2, 1}}, z2) == ms("[0;2)+[1;1)", z2));
}

TEST_CASE("partition basics") {
    Partition p({3, 1, 2});
    CHECK(p.parts() == std::vector<long long>{3, 2, 1});
    CHECK(p.conjugate() == Partition{{3, 2, 1}});
    CHECK(Partition{{2, 2}}.conjugate() == Partition{{2, 2}});
    CHECK(Partition{{2}}.is_regular(2));
    CHECK_FALSE(Partition{{1, 1}}.is_regular(2));
    CHECK(Partition{{1, 1}}.is_regular(3));
    CHECK(Partition::parse("(3,1,2)") == p);
}

TEST_CASE("rim-hook involution") {
    CHECK(mullineux(Partition{{1}}, 2) == Partition{{1}});
    CHECK(mullineux(Partition{{1}}, 3) == Partition{{1}});
    // At n = 2 the image of (2) must again be 2-regular; the oracle fixes it.
    CHECK(mullineux(Partition{{2}}, 2) == Partition{{2}});
    // The pair (2,1) <-> (3) at n = 3, consistent with twisting by sign.
    CHECK(mullineux(Partition{{2, 1}}, 3) == Partition{{3}});
    CHECK(mullineux(Partition{{3}}, 3) == Partition{{2, 1}});
    CHECK_THROWS_AS(mullineux(Partition{{1, 1}}, 2), std::invalid_argument);

    // Involutive on all n-regular partitions of size <= 9.
    std::vector<Partition> all;
    std::vector<long long> stack;
    std::function<void(long long, long long)> rec = [&](long long rem, long long maxp) {
        if (rem == 0) {
            all.push_back(Partition{std::vector<long long>(stack)});
            return;
        }
        for (long long p = std::min(rem, maxp); p >= 1; --p) {
            stack.push_back(p);
            rec(rem - p, p);
            stack.pop_back();
        }
    };
    for (long long n = 1; n <= 9; ++n) rec(n, n);
    for (int n : {2, 3, 4}) {
        for (auto& lambda : all) {
            if (!lambda.is_regular(n)) continue;
            Partition image = mullineux(lambda, n);
            CHECK(image.size() == lambda.size());
            CHECK(image.is_regular(n));
            CHECK(mullineux(image, n) == lambda);
        }
    }
}

TEST_CASE("sharp embeds conjugation over the integers") {
    VertexRing z = VertexRing::integers();
    std::vector<Partition> some{Partition{{2}},      Partition{{1, 1}},   Partition{{3, 1}},
                                Partition{{2, 2, 1}}, Partition{{4, 2, 1}}, Partition{{3, 3}}};
    for (auto& lambda : some)
        CHECK(sharp(partition_to_multisegment(lambda, z)) ==
              partition_to_multisegment(lambda.conjugate(), z));
}

TEST_CASE("sharp embeds the rim-hook involution at a root of unity") {
    for (int n : {2, 3}) {
        VertexRing ring = VertexRing::cyclic(n);
        std::vector<Partition> some{Partition{{2}}, Partition{{2, 1}}, Partition{{3, 1}},
                                    Partition{{3, 2, 1}}};
        for (auto& lambda : some) {
            if (!lambda.is_regular(n)) continue;
            CHECK(sharp(partition_to_multisegment(lambda, ring)) ==
                  partition_to_multisegment(mullineux(lambda, n), ring));
        }
    }
}
