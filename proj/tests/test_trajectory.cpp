#include "support.h"

#include "patrol/error.h"
#include "patrol/trajectory.h"

using namespace patrol;
using testing::Q;

TEST_CASE("zigzag waypoints and positions") {
    auto z = zigzag(0, 1, 0, true);
    CHECK(z.period() == 2);
    CHECK(z.position_at(Q("1/2")) == Q("1/2"));
    CHECK(z.position_at(Q("3/2")) == Q("1/2"));
    CHECK(z.position_at(Q("5/2")) == Q("1/2"));
    CHECK(z.position_at(Q("101/4")) == Q("3/4"));

    auto mid = zigzag(Q("1/4"), Q("3/4"), Q("1/2"), false);
    CHECK(mid.period() == 1);
    CHECK(mid.position_at(0) == Q("1/2"));
    CHECK(mid.position_at(Q("1/4")) == Q("1/4"));
    CHECK(mid.position_at(Q("3/4")) == Q("3/4"));
    CHECK(mid.position_at(1) == Q("1/2"));
    CHECK(max_speed(mid) == 1);

    auto still = zigzag(Q("1/3"), Q("1/3"), Q("1/3"), true);
    CHECK(still.position_at(7) == Q("1/3"));
    CHECK(max_speed(still) == 0);
}

TEST_CASE("invalid trajectories are rejected") {
    auto bad = [](std::vector<Waypoint> w, std::size_t cs) {
        try {
            Trajectory t(std::move(w), cs);
        } catch (const Error& e) {
            return e.kind() == ErrorKind::InvalidTrajectory;
        }
        return false;
    };
    CHECK(bad({{0, 0}, {Q("1/2"), 1}, {1, 0}}, 0));        // too fast
    CHECK(bad({{0, 0}, {1, 1}}, 0));                        // cycle does not close
    CHECK(bad({{1, 0}, {2, 0}}, 0));                        // does not start at 0
    CHECK(bad({{0, 0}, {0, 0}, {1, 0}}, 0));                // time not increasing
    CHECK(bad({{0, 0}, {2, 2}, {4, 0}}, 0));                // leaves [0,1]
    CHECK(bad({{0, 0}}, 0));
    CHECK_FALSE(bad({{0, 0}, {1, 1}, {2, 0}}, 0));
}

TEST_CASE("transient prefix then cycle") {
    Trajectory t({{0, Q("1/2")}, {Q("1/2"), 0}, {Q("3/2"), 1}, {Q("5/2"), 0}}, 1);
    CHECK(t.cycle_start_time() == Q("1/2"));
    CHECK(t.period() == 2);
    CHECK(t.position_at(Q("1/4")) == Q("1/4"));
    CHECK(t.position_at(Q("7/2")) == 1);
    CHECK(t.position_at(Q("9/2")) == 0);
    auto legs = t.unroll(5);
    CHECK(legs.front().t0 == 0);
    CHECK(legs.back().t1 >= 5);
    for (std::size_t i = 1; i < legs.size(); ++i) {
        CHECK(legs[i].t0 == legs[i - 1].t1);
        CHECK(legs[i].p0 == legs[i - 1].p1);
    }
}

TEST_CASE("mirroring and simplification") {
    auto z = zigzag(Q("1/5"), Q("1/2"), Q("1/5"), true);
    auto m = mirrored(z);
    for (const char* t : {"0", "1/10", "3/10", "1/2", "7/5"}) CHECK(m.position_at(Q(t)) == 1 - z.position_at(Q(t)));

    Trajectory straight({{0, 0}, {Q("1/4"), Q("1/4")}, {Q("1/2"), Q("1/2")}, {1, 1}, {2, 0}}, 0);
    auto s = simplified(straight);
    CHECK(s.waypoints().size() == 3);
    for (const char* t : {"0", "1/8", "3/4", "3/2", "9/4"}) CHECK(s.position_at(Q(t)) == straight.position_at(Q(t)));
}

TEST_CASE("ordered pair removes crossings without changing positions") {
    auto a = zigzag(0, 1, 0, true);
    auto b = zigzag(Q("1/4"), Q("3/4"), Q("3/4"), false);
    auto [lo, hi] = ordered_pair(a, b);
    for (int k = 0; k <= 96; ++k) {
        Rational t(k, 24);
        t.canonicalize();
        Rational pa = a.position_at(t), pb = b.position_at(t);
        CHECK(lo.position_at(t) == rmin(pa, pb));
        CHECK(hi.position_at(t) == rmax(pa, pb));
    }
    CHECK(max_speed(lo) <= 1);
    CHECK(max_speed(hi) <= 1);
}

TEST_CASE("schedule pair period bookkeeping") {
    SchedulePair sp{zigzag(0, Q("1/3"), 0, true), zigzag(Q("1/3"), 1, Q("1/3"), true), ScheduleKind::Alg1};
    CHECK(sp.joint_period() == Q("4/3"));
    CHECK(sp.steady_start() == 0);
    auto bp = merged_breakpoints(sp.r1, sp.r2, 2);
    CHECK(bp.front() == 0);
    CHECK(bp.back() == 2);
    CHECK(std::is_sorted(bp.begin(), bp.end()));
    auto m = mirrored(sp);
    CHECK(m.r1.position_at(Q("1/2")) == 1 - sp.r2.position_at(Q("1/2")));
}
