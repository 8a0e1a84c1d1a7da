#include "support.h"

#include "patrol/error.h"
#include "patrol/schedules.h"

using namespace patrol;
using testing::make;
using testing::Q;

namespace {

std::vector<Rational> simulated(const SchedulePair& sp, const Instance& inst) {
    auto rep = waiting_times(sp, inst);
    std::vector<Rational> out;
    for (const auto& p : rep.points) {
        REQUIRE(p.simulated);
        out.push_back(*p.simulated);
    }
    return out;
}

}  // namespace

TEST_CASE("partition schedule on a feasible instance") {
    auto inst = make({{"0", "1"}, {"1/4", "1"}, {"1", "3/2"}});
    auto sp = partition_schedule(inst);
    CHECK(sp.kind == ScheduleKind::Partition);
    auto w = simulated(sp, inst);
    CHECK(w[0] == Q("1/2"));
    CHECK(w[1] == Q("1/2"));
    CHECK(w[2] == Q("3/2"));
    auto an = analytic_waiting_partition(inst);
    for (std::size_t i = 0; i < inst.size(); ++i) {
        CHECK(w[i] <= inst[i].idleness);
        REQUIRE(an.points[i].analytic);
        CHECK(*an.points[i].analytic >= w[i]);
    }
    CHECK(observation_checks(sp, inst).all_ok());
}

TEST_CASE("partition schedule with only two end points") {
    auto inst = make({{"0", "2"}, {"1", "2"}});
    auto w = simulated(partition_schedule(inst), inst);
    CHECK(w[0] == 0);
    CHECK(w[1] == 2);
}

TEST_CASE("partition schedule serves left-class points beyond the right interval start") {
    // X10 = [0, 1/2], X01 = [3/10, 1]; 2/5 belongs to S10 and lies in both.
    auto inst = make({{"0", "1"}, {"0.4", "1"}, {"1", "1.4"}});
    auto sp = partition_schedule(inst);
    auto w = simulated(sp, inst);
    for (std::size_t i = 0; i < inst.size(); ++i) CHECK(w[i] <= inst[i].idleness);
    CHECK(observation_checks(sp, inst).all_ok());
}

TEST_CASE("partition schedule refuses infeasible instances") {
    try {
        partition_schedule(make({{"0", "1/2"}, {"1/2", "1.2"}, {"1", "1/2"}}));
        FAIL("accepted");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::ConditionsFail);
    }
}

TEST_CASE("nested schedule, one-robot branch") {
    auto inst = make({{"0", "2"}, {"1/2", "2"}, {"1", "2"}});
    auto sp = nested4_schedule(inst);
    auto w = simulated(sp, inst);
    CHECK(w[0] == 0);  // the idle robot sits at 0
    CHECK(w[1] == 1);
    CHECK(w[2] == 2);
}

TEST_CASE("nested schedule on A1") {
    auto inst = testing::a1();
    auto sp = nested4_schedule(inst);
    auto w = simulated(sp, inst);
    CHECK(w[0] == 2);
    CHECK(w[2] == 2);
    CHECK(w[1] <= Q("2/3"));
    auto rep = full_report(sp, inst);
    REQUIRE(rep.max_ratio);
    CHECK(*rep.max_ratio == Q("6/5"));
    CHECK(observation_checks(sp, inst).all_ok());
}

TEST_CASE("two-zigzag schedule on A1") {
    auto inst = testing::a1();
    auto sp = alg1_schedule(inst);
    CHECK(sp.r1.period() == 1);
    CHECK(sp.r2.period() == 1);
    CHECK(sp.r1.position_at(0) == Q("1/2"));
    CHECK(sp.r1.position_at(Q("1/2")) == 0);
    CHECK(sp.r2.position_at(Q("1/2")) == 1);
    auto rep = full_report(sp, inst);
    CHECK(rep.points[1].simulated == Rational(1));
    CHECK(rep.points[0].simulated == Rational(1));
    for (const auto& p : rep.points) CHECK(p.analytic == p.simulated);
    CHECK(rep.max_ratio == Rational(3));
}

TEST_CASE("two-zigzag schedule is mirrored back for right-leaning instances") {
    auto inst = make({{"0", "5/3"}, {"0.6", "1/4"}, {"1", "5/3"}});
    auto sp = alg1_schedule(inst);
    auto rep = full_report(sp, inst);
    for (const auto& p : rep.points) CHECK(p.analytic == p.simulated);
    CHECK(observation_checks(sp, inst).all_ok());
}

TEST_CASE("coordinated schedule on A1: closed form and simulation") {
    auto inst = testing::a1();
    auto an = analytic_waiting_alg2(inst, critical_points(inst));
    CHECK(an.points[0].analytic == Q("5/3"));
    CHECK(an.points[2].analytic == Q("5/3"));
    CHECK(an.points[1].analytic == Q("1/2"));
    CHECK(an.points[1].analytic_is_bound);
    CHECK_FALSE(an.points[0].analytic_is_bound);

    auto rep = full_report(alg2_schedule(inst), inst);
    CHECK(rep.points[0].simulated == Q("5/3"));
    CHECK(*rep.points[1].simulated <= Q("1/2"));
    REQUIRE(rep.max_ratio);
    CHECK(*rep.max_ratio <= Q("3/2"));
}

TEST_CASE("best schedule") {
    auto a1 = testing::a1();
    auto best = best_schedule(a1);
    CHECK(best.schedule.kind == ScheduleKind::Alg2);
    REQUIRE(best.report.max_ratio);
    CHECK(*best.report.max_ratio <= Q("3/2"));

    auto feasible = make({{"0", "1"}, {"1/4", "1"}, {"1", "3/2"}});
    auto p = best_schedule(feasible);
    CHECK(p.schedule.kind == ScheduleKind::Partition);
    CHECK(*p.report.max_ratio <= 1);

    try {
        best_schedule(make({{"0", "1"}, {"1/2", "1/3"}, {"1", "5/3"}}));
        FAIL("accepted");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::InfeasibleCertified);
    }
}

TEST_CASE("degenerate intersection needs an explicit override") {
    auto inst = make({{"0", "2"}, {"0.3", "0.2"}, {"0.5", "0.2"}, {"1", "2"}});
    try {
        alg2_schedule(inst);
        FAIL("accepted");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::DegenerateIntersection);
    }
    Alg2Options opt;
    opt.allow_degenerate = true;
    auto sp = alg2_schedule(inst, opt);
    CHECK(max_speed(sp.r1) <= 1);
    CHECK(max_speed(sp.r2) <= 1);
}
