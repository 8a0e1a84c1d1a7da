#pragma once

#include "patrol/instance.h"
#include "patrol/simulator.h"
#include "patrol/trajectory.h"

namespace patrol {

/// Partition schedule for S00-free instances: r1 zigzags [0, s1], r2 zigzags
/// [b, 1] where X01 = [b, 1]. s1 is min(a, b) (X10 = [0, a]) extended to
/// the rightmost S10 point, so that every S10 point is served by r1; any
/// overlap with r2's interval is resolved by relabelling. Throws
/// ConditionsFail when the instance is not feasible.
SchedulePair partition_schedule(const Instance& inst);

/// Closed-form waiting times of partition_schedule.
WaitingReport analytic_waiting_partition(const Instance& inst);

/// Uncoordinated nested schedule: one robot zigzags the range of the point
/// with minimum idleness, the other zigzags [0, 1].
SchedulePair nested4_schedule(const Instance& inst);

/// r1 zigzags [0, x3] and r2 zigzags [x3, 1], both leaving x3 at t = 0.
/// Built in normalized coordinates and mirrored back when cp.flipped.
SchedulePair alg1_schedule(const Instance& inst);
WaitingReport analytic_waiting_alg1(const Instance& inst, const CriticalPoints& cp);

struct Alg2Options {
    ReactiveConfig sim;
    /// Permit x1 == x4 (run with d = 0).
    bool allow_degenerate = false;
};

/// Distance-triggered schedule, run through the event simulator.
SchedulePair alg2_schedule(const Instance& inst, const Alg2Options& options = {});
ReactiveRun alg2_run(const Instance& inst, const Alg2Options& options = {});
WaitingReport analytic_waiting_alg2(const Instance& inst, const CriticalPoints& cp);

struct BestSchedule {
    SchedulePair schedule;
    WaitingReport report;
};

/// Partition schedule when the partition conditions hold, else the better of alg1 and
/// alg2 by simulated maximum ratio (ties go to alg2). Throws
/// InfeasibleCertified when a necessary condition fails.
BestSchedule best_schedule(const Instance& inst);

/// Simulated report merged with the closed-form values for the given kind.
WaitingReport full_report(const SchedulePair& sp, const Instance& inst, WaitingMode mode = WaitingMode::SteadyState);

}  // namespace patrol
