#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>
#include <tuple>

#include "solflow/fundgroup.hpp"
#include "solflow/rng.hpp"

using namespace solflow;

namespace {
const GluingMatrix kA(2, 1, 1, 1);
const GluingMatrix kB(1, 1, 0, 1);
}

TEST_CASE("presentation relations hold exactly") {
    const GroupElement a = genA(), b = genB(), c = genC();
    // c a c^-1 = a^2 b,  c b c^-1 = a b
    const GroupElement lhs1 = multiply(multiply(c, a, kA), inverse(c, kA), kA);
    const GroupElement rhs1 = multiply(multiply(a, a, kA), b, kA);
    CHECK(lhs1 == rhs1);
    const GroupElement lhs2 = multiply(multiply(c, b, kA), inverse(c, kA), kA);
    const GroupElement rhs2 = multiply(a, b, kA);
    CHECK(lhs2 == rhs2);
    // a b = b a
    CHECK(multiply(a, b, kA) == multiply(b, a, kA));
}

TEST_CASE("inverses and associativity on random elements") {
    Rng rng(41);
    auto randomElement = [&rng]() {
        return GroupElement{(long long)(rng.uniform(-8, 8)),
                            (long long)(rng.uniform(-8, 8)),
                            (long long)(rng.uniform(-4, 4))};
    };
    for (int i = 0; i < 100; ++i) {
        const GroupElement g = randomElement(), h = randomElement(), k = randomElement();
        CHECK(multiply(g, inverse(g, kA), kA) == identityElement());
        CHECK(multiply(inverse(g, kA), g, kA) == identityElement());
        CHECK(multiply(multiply(g, h, kA), k, kA) == multiply(g, multiply(h, k, kA), kA));
    }
}

TEST_CASE("component overflow raises range_error") {
    // C^62 applied to (1,1) exceeds 64-bit range for the hyperbolic matrix
    CHECK_THROWS_AS(multiply(GroupElement{0, 0, 62}, GroupElement{1, 1, 0}, kA),
                    std::range_error);
}

TEST_CASE("growth table for the hyperbolic bundle matches the frozen census") {
    const GrowthTable t = growthFunction(kA, 12);
    const long long expected[] = {1,    7,    33,    103,   273,  663,  1521,
                                  3355, 7277, 15547, 32817, 68607, 142241};
    REQUIRE(t.counts.size() == 13);
    CHECK_FALSE(t.truncated);
    for (int k = 0; k <= 12; ++k) {
        CHECK(t.radii[k] == k);
        CHECK(t.counts[k] == expected[k]);
    }
    // section 3 bound gamma(2k) >= 2^k
    for (int k = 1; 2 * k <= 12; ++k) CHECK(t.counts[2 * k] >= (1LL << k));
}

TEST_CASE("growth table for the unipotent bundle is polynomial") {
    const GrowthTable t = growthFunction(kB, 14);
    const long long expected[] = {1,    7,    29,   83,   189,  379,  697,  1199,
                                  1953, 3039, 4533, 6539, 9173, 12539, 16777};
    REQUIRE(t.counts.size() == 15);
    for (int k = 0; k <= 14; ++k) CHECK(t.counts[k] == expected[k]);
}

TEST_CASE("growth rate estimates") {
    const double rateA = growthRate(growthFunction(kA, 12));
    CHECK(rateA == doctest::Approx(0.755592).epsilon(1e-4));
    CHECK(rateA >= 0.34);

    // unipotent growth is ~k^4, so the log-slope keeps dropping with radius
    const double rateB = growthRate(growthFunction(kB, 14));
    CHECK(rateB < rateA / 1.5);
    CHECK(rateB > 0.0);

    GrowthTable tiny;
    tiny.radii = {0, 1};
    tiny.counts = {1, 7};
    CHECK_THROWS_AS(growthRate(tiny), std::invalid_argument);
}

TEST_CASE("certificate words are pairwise distinct for the hyperbolic matrix") {
    const CertificateResult r = certificateWords(kA, 10);
    CHECK(r.words.size() == 1024);
    CHECK(r.collisions == 0);
    std::set<std::tuple<long long, long long, long long>> seen;
    for (const auto& w : r.words) {
        seen.insert({w.vx, w.vy, w.n});
        CHECK(w.n == 10);  // every word has exactly ten c's
    }
    CHECK(seen.size() == 1024);
}

TEST_CASE("certificate words collide for the unipotent matrix") {
    const CertificateResult r = certificateWords(kB, 8);
    CHECK(r.collisions > 0);
}

TEST_CASE("argument validation") {
    CHECK_THROWS_AS(growthFunction(kA, 17), std::invalid_argument);
    CHECK_THROWS_AS(growthFunction(kA, -1), std::invalid_argument);
    CHECK_THROWS_AS(certificateWords(kA, 21), std::invalid_argument);
    const GrowthTable capped = growthFunction(kA, 12, 1000);
    CHECK(capped.truncated);
    CHECK(capped.counts.size() < 13);
}
