#pragma once

#include "patrol/rational.h"

#include <utility>
#include <vector>

namespace patrol {

struct Waypoint {
    Rational time;
    Rational position;

    bool operator==(const Waypoint&) const = default;
};

/// One linear leg of a trajectory.
struct Segment {
    Rational t0, t1;
    Rational p0, p1;

    Rational position_at(const Rational& t) const {
        return p0 == p1 ? p0 : Rational(p0 + (p1 - p0) * (t - t0) / (t1 - t0));
    }
};

/// Eventually periodic piecewise-linear motion of one robot with speed at
/// most 1. The waypoints from cycle_start to the last one form the cycle,
/// which repeats forever; the last waypoint coincides in position with the
/// cycle-start waypoint.
class Trajectory {
public:
    /// Throws InvalidTrajectory if the waypoints violate the invariants.
    Trajectory(std::vector<Waypoint> waypoints, std::size_t cycle_start);

    const std::vector<Waypoint>& waypoints() const { return waypoints_; }
    std::size_t cycle_start() const { return cycle_start_; }
    const Rational& cycle_start_time() const { return waypoints_[cycle_start_].time; }
    const Rational& period() const { return period_; }

    Rational position_at(const Rational& t) const;

    /// Legs covering [0, t_end], with the cycle unrolled as often as needed.
    /// The last leg may extend past t_end.
    std::vector<Segment> unroll(const Rational& t_end) const;

    bool operator==(const Trajectory&) const = default;

private:
    std::vector<Waypoint> waypoints_;
    std::size_t cycle_start_;
    Rational period_;
};

/// Back-and-forth motion at full speed between lo and hi, starting at
/// `start` heading right (or left). lo == hi yields a dwell.
Trajectory zigzag(const Rational& lo, const Rational& hi, const Rational& start, bool moving_right);

/// Staying at p forever.
Trajectory dwell(const Rational& p);

/// x -> 1 - x.
Trajectory mirrored(const Trajectory& tr);

/// Drops interior waypoints that lie on the line through their neighbours
/// (the cycle-start waypoint is always kept).
Trajectory simplified(const Trajectory& tr);

enum class ScheduleKind { Partition, Nested4, Alg1, Alg2, Witness };

const char* to_string(ScheduleKind k);

struct SchedulePair {
    Trajectory r1;
    Trajectory r2;
    ScheduleKind kind;

    /// Time from which both robots are periodic.
    Rational steady_start() const;
    /// Least common multiple of the two periods.
    Rational joint_period() const;
};

/// Pointwise (min, max) of two trajectories. Visit times are unchanged;
/// the result never crosses, which realizes the robot-relabelling argument
/// for schedules whose natural description has crossing paths.
std::pair<Trajectory, Trajectory> ordered_pair(const Trajectory& a, const Trajectory& b);

/// Mirror a schedule: positions map to 1 - x and the robots swap roles.
SchedulePair mirrored(const SchedulePair& sp);

/// Sorted, de-duplicated breakpoint times of both robots in [0, t_end].
std::vector<Rational> merged_breakpoints(const Trajectory& a, const Trajectory& b, const Rational& t_end);

/// Largest |dp|/dt over all legs; every valid trajectory has this <= 1.
Rational max_speed(const Trajectory& tr);

}  // namespace patrol
