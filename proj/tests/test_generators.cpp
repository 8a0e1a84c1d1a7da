#include "support.h"

#include "patrol/error.h"
#include "patrol/generators.h"
#include "patrol/schedules.h"

using namespace patrol;
using testing::Q;

TEST_CASE("random draws are reproducible") {
    Lcg64 a(7), b(7);
    for (int i = 0; i < 100; ++i) CHECK(draw(a, 3, 9) == draw(b, 3, 9));
    // first state after seeding 1: 6364136223846793005 + 1442695040888963407
    Lcg64 c(1);
    CHECK(c() == 6364136223846793005ULL + 1442695040888963407ULL);
    Lcg64 d(1);
    CHECK(draw(d, 0, 9) == static_cast<std::int64_t>(((6364136223846793005ULL + 1442695040888963407ULL) >> 32) % 10));
}

TEST_CASE("alg1 tight family") {
    CHECK(gen_tight_alg1(1) == testing::a1());
    for (const char* as : {"1/4", "1/2", "1", "2", "7/3"}) {
        Rational alpha = Q(as);
        CAPTURE(as);
        auto inst = gen_tight_alg1(alpha);
        auto cp = critical_points(inst);
        CHECK(cp.x1 == tight_alg1_x1(alpha));
        CHECK(cp.alpha == alpha);
        CHECK(inst[1].position == Q("1/2"));
    }
}

TEST_CASE("alg1 tight witness") {
    for (const char* as : {"1/4", "1/2", "1", "2"}) {
        Rational alpha = Q(as);
        CAPTURE(as);
        auto inst = gen_tight_alg1(alpha);
        auto sp = witness_tight_alg1(alpha);
        auto rep = waiting_times(sp, inst);
        Rational x1 = tight_alg1_x1(alpha);
        CHECK(rep.points[0].simulated == Rational(4 * x1 + x1 / alpha));
        CHECK(rep.points[2].simulated == Rational(4 * x1 + x1 / alpha));
        REQUIRE(rep.max_ratio);
        CHECK(*rep.max_ratio <= 1);
        CHECK(observation_checks(sp, inst).all_ok());
    }
}

TEST_CASE("alg2 tight family, first case") {
    for (const char* as : {"1/4", "1/2", "3/4"}) {
        Rational alpha = Q(as);
        CAPTURE(as);
        auto inst = gen_tight_alg2(alpha);
        auto cp = critical_points(inst);
        Rational x1 = alpha / (alpha + 2);
        CHECK(cp.x1 == x1);
        CHECK(cp.alpha == alpha);
        CHECK(cp.x4 == x1 + x1 / alpha);
        CHECK(x1 + 2 * x1 / alpha == 1);
    }
}

TEST_CASE("alg2 tight family, second case") {
    auto inst = gen_tight_alg2(2, Q("1/100"));
    auto cp = critical_points(inst);
    CHECK(cp.x1 == Q("2/5"));
    CHECK(cp.alpha == 2);
    CHECK(inst[1].position == Q("39/100"));
    for (const char* e : {"0", "2/5", "1/2", "-1/100"}) {
        CAPTURE(e);
        try {
            gen_tight_alg2(2, Q(e));
            FAIL("accepted");
        } catch (const Error& err) {
            CHECK(err.kind() == ErrorKind::BadEpsilon);
        }
    }
    CHECK_THROWS_AS(gen_tight_alg2(1), Error);
}

TEST_CASE("alg2 witness, first case") {
    Rational alpha = Q("1/2");
    auto inst = gen_tight_alg2(alpha);
    auto sp = witness_tight_alg2(alpha);
    auto rep = waiting_times(sp, inst);
    Rational x1 = alpha / (alpha + 2);
    CHECK(rep.points[0].simulated == Q("8/5"));
    CHECK(rep.points[1].simulated == Q("2/5"));
    CHECK(rep.points[3].simulated == Q("8/5"));
    // r2's return trip through y1 takes 3 x1 / alpha, above I(y2) = 2 x1 / alpha
    CHECK(rep.points[2].simulated == Rational(3 * x1 / alpha));
    CHECK(observation_checks(sp, inst).ordering_ok);
}

TEST_CASE("alg2 witness, second case") {
    auto inst = gen_tight_alg2(1, Q("1/20"));
    auto sp = witness_tight_alg2(1, Q("1/20"));
    auto rep = waiting_times(sp, inst);
    CHECK(rep.points[0].simulated == Q("4/3"));
    CHECK(rep.points[3].simulated == Q("4/3"));
    REQUIRE(rep.max_ratio);
    CHECK(*rep.max_ratio <= 1);
    CHECK(observation_checks(sp, inst).all_ok());

    // beyond alpha = 1 the instance breaks the lower bound at 0
    auto steep = gen_tight_alg2(2, Q("1/20"));
    CHECK(check_necessary(steep).verdict == Verdict::InfeasibleCertified);
}

TEST_CASE("random admissible instances") {
    auto a = gen_admissible_random(1, 5);
    auto b = gen_admissible_random(1, 5);
    CHECK(a == b);
    CHECK(a.size() == 5);
    CHECK(check_necessary(a).verdict == Verdict::Unknown);

    auto s = gen_admissible_sample(2, 8);
    auto cp = critical_points(s.instance);
    CHECK(cp.x1 == s.x1);
    CHECK(cp.x4 == s.x4);
    CHECK_FALSE(cp.flipped);
    CHECK_FALSE(gen_admissible_random(3, 6) == gen_admissible_random(4, 6));
}

TEST_CASE("random partition-feasible and violating instances") {
    for (std::uint64_t seed = 1; seed <= 5; ++seed) {
        auto inst = gen_theorem1_feasible(seed, 6);
        CHECK(classify(inst).s00.empty());
        CHECK(theorem1_check(inst).report.verdict == Verdict::FeasibleWithSchedule);
        for (int cond : {1, 2, 3}) {
            auto v = gen_theorem1_violating(seed, 6, cond);
            auto rep = theorem1_check(v.instance).report;
            CHECK(rep.verdict == Verdict::InfeasibleCertified);
            auto* c = rep.find("Thm1-cond" + std::to_string(cond));
            REQUIRE(c);
            CHECK(c->status == CheckStatus::Fail);
        }
    }
}
