#pragma once

#include "patrol/instance.h"
#include "patrol/rational.h"
#include "patrol/trajectory.h"

#include <optional>
#include <string>
#include <vector>

namespace patrol {

enum class WaitingMode { SteadyState, TransientInclusive };

const char* to_string(WaitingMode m);

struct PointWaiting {
    std::optional<Rational> analytic;
    /// The analytic value is only an upper bound (e.g. the shared interval
    /// under the coordinated schedule).
    bool analytic_is_bound = false;
    std::optional<Rational> simulated;
    /// False when no robot visits the point within a full period.
    bool visited = true;
    /// w / I using the simulated w when present, else the analytic one;
    /// absent when the point is never visited.
    std::optional<Rational> ratio;
};

struct WaitingReport {
    std::vector<PointWaiting> points;
    /// Absent when some point is never visited.
    std::optional<Rational> max_ratio;
    WaitingMode mode = WaitingMode::SteadyState;

    /// Recomputes every ratio and max_ratio from the waiting values.
    void finalize(const Instance& inst);
};

/// Closed time span during which a robot is at a given point.
struct VisitSpan {
    Rational begin;
    Rational end;
};

/// Visits of coordinate x by one trajectory inside [from, to], merged.
std::vector<VisitSpan> visit_spans(const Trajectory& tr, const Rational& x, const Rational& from,
                                   const Rational& to);

/// Largest gap between consecutive visits of x by either robot, or nullopt
/// if x is never visited in a full period.
std::optional<Rational> waiting_time(const SchedulePair& sp, const Rational& x, WaitingMode mode);

/// Simulated waiting times of every instance point.
WaitingReport waiting_times(const SchedulePair& sp, const Instance& inst,
                            WaitingMode mode = WaitingMode::SteadyState);

/// Settings of the distance-triggered controller.
struct ReactiveConfig {
    Rational horizon = 100;
    /// Replaces the coordination distance from the critical points.
    std::optional<Rational> d_override;
};

struct ReactiveRun {
    SchedulePair schedule;
    /// Time at which the recurring configuration is first seen.
    Rational cycle_start;
    Rational period;
    /// Smallest distance between the robots over all time both were
    /// zigzagging inside [x1, x4]; absent if that never happened.
    std::optional<Rational> min_session_distance;
    std::size_t events = 0;
};

/// Runs the two-robot distance-triggered controller in the coordinates of
/// `cp` (already normalized) until the joint state recurs.
/// Throws NoCycle when the horizon is exceeded first.
ReactiveRun simulate_reactive(const CriticalPoints& cp, const ReactiveConfig& config = {});

struct PointObservation {
    std::size_t index = 0;
    /// Only points whose simulated waiting time is within their idleness
    /// are checked.
    bool applicable = false;
    bool ok = true;
    /// Longest stretch with no robot inside the point's range.
    Rational longest_absence;
};

struct ObservationReport {
    bool ordering_ok = true;
    std::optional<Rational> ordering_violation_time;
    std::vector<PointObservation> points;

    bool all_ok() const;
};

/// Robot ordering at every breakpoint, and range presence for every point
/// served within its idleness.
ObservationReport observation_checks(const SchedulePair& sp, const Instance& inst);

}  // namespace patrol
