#include "patrol/schedules.h"

#include "patrol/error.h"

#include <algorithm>

namespace patrol {

namespace {

/// Gap of a zigzag over [lo, hi] at a point inside it.
Rational zigzag_gap(const Rational& lo, const Rational& hi, const Rational& x) {
    return 2 * rmax(Rational(x - lo), Rational(hi - x));
}

struct PartitionBounds {
    Rational left_end;   // r1 zigzags [0, left_end]
    Rational right_start;  // r2 zigzags [right_start, 1]
};

PartitionBounds partition_bounds(const Instance& inst) {
    auto t1 = theorem1_check(inst);
    if (t1.report.verdict != Verdict::FeasibleWithSchedule) {
        const auto* f = t1.report.first_failure();
        std::string why = f->name;
        if (f->certificate) why += " at point " + to_string(f->certificate->position);
        throw Error(ErrorKind::ConditionsFail, why);
    }
    Rational a = t1.x10.hi;
    Rational b = t1.x01.lo;
    Rational left_end = rmin(a, b);
    for (auto i : classify(inst).s10) left_end = rmax(left_end, inst[i].position);
    return {left_end, b};
}

Rational coord(const Rational& y, const CriticalPoints& cp) { return cp.flipped ? Rational(1 - y) : y; }

WaitingReport empty_report(const Instance& inst) {
    WaitingReport rep;
    rep.points.resize(inst.size());
    return rep;
}

CriticalPoints alg2_points(const Instance& inst, const Alg2Options& options) {
    return options.allow_degenerate ? critical_points_allow_degenerate(inst) : critical_points(inst);
}

}  // namespace

SchedulePair partition_schedule(const Instance& inst) {
    auto [left_end, right_start] = partition_bounds(inst);
    Trajectory r1 = zigzag(0, left_end, 0, true);
    Trajectory r2 = zigzag(right_start, 1, right_start, true);
    if (left_end > right_start) {
        auto [lo, hi] = ordered_pair(r1, r2);
        return {std::move(lo), std::move(hi), ScheduleKind::Partition};
    }
    return {std::move(r1), std::move(r2), ScheduleKind::Partition};
}

WaitingReport analytic_waiting_partition(const Instance& inst) {
    auto [left_end, right_start] = partition_bounds(inst);
    WaitingReport rep = empty_report(inst);
    for (std::size_t i = 0; i < inst.size(); ++i) {
        const auto& y = inst[i].position;
        std::optional<Rational> w;
        int servers = 0;
        if (y <= left_end) {
            w = zigzag_gap(0, left_end, y);
            ++servers;
        }
        if (y >= right_start) {
            Rational g = zigzag_gap(right_start, 1, y);
            w = w ? rmin(*w, g) : g;
            ++servers;
        }
        rep.points[i].analytic = w;
        // Visits from the second robot can only shorten the gaps.
        rep.points[i].analytic_is_bound = servers > 1;
        rep.points[i].visited = w.has_value();
    }
    rep.finalize(inst);
    return rep;
}

SchedulePair nested4_schedule(const Instance& inst) {
    std::size_t best = 0;
    for (std::size_t i = 1; i < inst.size(); ++i)
        if (inst[i].idleness < inst[best].idleness) best = i;
    if (inst[best].idleness * 2 >= 1) return {dwell(0), zigzag(0, 1, 0, true), ScheduleKind::Nested4};

    Interval ball = range(inst[best]);
    auto [lo, hi] = ordered_pair(zigzag(ball.lo, ball.hi, ball.lo, true), zigzag(0, 1, 0, true));
    return {std::move(lo), std::move(hi), ScheduleKind::Nested4};
}

SchedulePair alg1_schedule(const Instance& inst) {
    CriticalPoints cp = critical_points(inst);
    SchedulePair sp{zigzag(0, cp.x3, cp.x3, false), zigzag(cp.x3, 1, cp.x3, true), ScheduleKind::Alg1};
    return cp.flipped ? mirrored(sp) : sp;
}

WaitingReport analytic_waiting_alg1(const Instance& inst, const CriticalPoints& cp) {
    WaitingReport rep = empty_report(inst);
    for (std::size_t i = 0; i < inst.size(); ++i) {
        Rational x = coord(inst[i].position, cp);
        Rational w;
        if (x < cp.x3) w = zigzag_gap(0, cp.x3, x);
        else if (x > cp.x3) w = zigzag_gap(cp.x3, 1, x);
        else w = rmin(Rational(2 * cp.x3), Rational(2 * (1 - cp.x3)));
        rep.points[i].analytic = w;
    }
    rep.finalize(inst);
    return rep;
}

ReactiveRun alg2_run(const Instance& inst, const Alg2Options& options) {
    CriticalPoints cp = alg2_points(inst, options);
    ReactiveRun run = simulate_reactive(cp, options.sim);
    if (cp.flipped) run.schedule = mirrored(run.schedule);
    return run;
}

SchedulePair alg2_schedule(const Instance& inst, const Alg2Options& options) {
    return alg2_run(inst, options).schedule;
}

WaitingReport analytic_waiting_alg2(const Instance& inst, const CriticalPoints& cp) {
    WaitingReport rep = empty_report(inst);
    for (std::size_t i = 0; i < inst.size(); ++i) {
        Rational x = coord(inst[i].position, cp);
        auto& p = rep.points[i];
        if (x < cp.x1) {
            p.analytic = 2 * rmax(x, Rational(1 - x - cp.d));
        } else if (x <= cp.x4) {
            p.analytic = zigzag_gap(cp.x1, cp.x4, x) + cp.d;
            p.analytic_is_bound = true;
        } else {
            p.analytic = 2 * rmax(Rational(1 - x), Rational(x - cp.d));
        }
    }
    rep.finalize(inst);
    return rep;
}

WaitingReport full_report(const SchedulePair& sp, const Instance& inst, WaitingMode mode) {
    WaitingReport rep = waiting_times(sp, inst, mode);
    std::optional<WaitingReport> closed;
    switch (sp.kind) {
        case ScheduleKind::Partition: closed = analytic_waiting_partition(inst); break;
        case ScheduleKind::Alg1: closed = analytic_waiting_alg1(inst, critical_points(inst)); break;
        case ScheduleKind::Alg2:
            closed = analytic_waiting_alg2(inst, critical_points_allow_degenerate(inst));
            break;
        default: break;
    }
    if (closed) {
        for (std::size_t i = 0; i < inst.size(); ++i) {
            rep.points[i].analytic = closed->points[i].analytic;
            rep.points[i].analytic_is_bound = closed->points[i].analytic_is_bound;
        }
    }
    rep.finalize(inst);
    return rep;
}

BestSchedule best_schedule(const Instance& inst) {
    AdmissibilityReport adm = check_necessary(inst);
    if (adm.verdict == Verdict::InfeasibleCertified) {
        const auto* f = adm.first_failure();
        std::string why = f->name;
        if (f->certificate) why += " at point " + to_string(f->certificate->position);
        throw Error(ErrorKind::InfeasibleCertified, why);
    }
    if (adm.verdict == Verdict::FeasibleWithSchedule) {
        SchedulePair sp = partition_schedule(inst);
        WaitingReport rep = waiting_times(sp, inst);
        return {std::move(sp), std::move(rep)};
    }
    SchedulePair a1 = alg1_schedule(inst);
    SchedulePair a2 = alg2_schedule(inst);
    WaitingReport w1 = waiting_times(a1, inst);
    WaitingReport w2 = waiting_times(a2, inst);
    if (!w2.max_ratio || (w1.max_ratio && *w1.max_ratio < *w2.max_ratio))
        return {std::move(a1), std::move(w1)};
    return {std::move(a2), std::move(w2)};
}

}  // namespace patrol
