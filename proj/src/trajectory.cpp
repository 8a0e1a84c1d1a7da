#include "patrol/trajectory.h"

#include "patrol/error.h"

#include <algorithm>

namespace patrol {

Trajectory::Trajectory(std::vector<Waypoint> waypoints, std::size_t cycle_start)
    : waypoints_(std::move(waypoints)), cycle_start_(cycle_start) {
    auto fail = [](const std::string& why) { throw Error(ErrorKind::InvalidTrajectory, why); };
    if (waypoints_.size() < 2) fail("need at least two waypoints");
    if (cycle_start_ + 1 >= waypoints_.size()) fail("cycle must contain at least one leg");
    if (waypoints_.front().time != 0) fail("first waypoint must be at time 0");
    for (std::size_t i = 0; i < waypoints_.size(); ++i) {
        const auto& w = waypoints_[i];
        if (w.position < 0 || w.position > 1) fail("position " + to_string(w.position) + " outside [0,1]");
        if (i == 0) continue;
        const auto& prev = waypoints_[i - 1];
        Rational dt = w.time - prev.time;
        if (dt <= 0) fail("waypoint times must strictly increase at index " + std::to_string(i));
        if (rabs(w.position - prev.position) > dt)
            fail("speed above 1 on leg ending at index " + std::to_string(i));
    }
    if (waypoints_.back().position != waypoints_[cycle_start_].position)
        fail("cycle does not close: last position differs from cycle-start position");
    period_ = waypoints_.back().time - waypoints_[cycle_start_].time;
}

Rational Trajectory::position_at(const Rational& t) const {
    Rational local = t;
    if (local >= waypoints_.back().time) {
        const Rational& tc = cycle_start_time();
        local = t - Rational(floor_div(t - tc, period_)) * period_;
    }
    auto it = std::upper_bound(waypoints_.begin(), waypoints_.end(), local,
                               [](const Rational& v, const Waypoint& w) { return v < w.time; });
    if (it == waypoints_.begin()) return waypoints_.front().position;
    if (it == waypoints_.end()) return waypoints_.back().position;
    const auto& a = *(it - 1);
    const auto& b = *it;
    return Segment{a.time, b.time, a.position, b.position}.position_at(local);
}

std::vector<Segment> Trajectory::unroll(const Rational& t_end) const {
    std::vector<Segment> out;
    for (std::size_t i = 0; i + 1 < waypoints_.size(); ++i) {
        const auto& a = waypoints_[i];
        const auto& b = waypoints_[i + 1];
        out.push_back({a.time, b.time, a.position, b.position});
    }
    for (Rational shift = period_; out.back().t1 < t_end; shift += period_) {
        for (std::size_t i = cycle_start_; i + 1 < waypoints_.size(); ++i) {
            const auto& a = waypoints_[i];
            const auto& b = waypoints_[i + 1];
            out.push_back({a.time + shift, b.time + shift, a.position, b.position});
            if (out.back().t1 >= t_end) break;
        }
    }
    return out;
}

Trajectory zigzag(const Rational& lo, const Rational& hi, const Rational& start, bool moving_right) {
    if (lo == hi) return dwell(lo);
    if (start < lo || start > hi) throw Error(ErrorKind::BadArgument, "zigzag start outside its interval");
    Rational len = hi - lo;
    if (start == hi) moving_right = false;
    if (start == lo) moving_right = true;
    std::vector<Waypoint> w{{0, start}};
    if (moving_right) {
        w.push_back({hi - start, hi});
        w.push_back({hi - start + len, lo});
    } else {
        w.push_back({start - lo, lo});
        w.push_back({start - lo + len, hi});
    }
    w.push_back({2 * len, start});
    std::vector<Waypoint> dedup;
    for (auto& p : w)
        if (dedup.empty() || dedup.back().time != p.time) dedup.push_back(p);
    return Trajectory(std::move(dedup), 0);
}

Trajectory dwell(const Rational& p) { return Trajectory({{0, p}, {1, p}}, 0); }

Trajectory mirrored(const Trajectory& tr) {
    std::vector<Waypoint> w;
    w.reserve(tr.waypoints().size());
    for (const auto& p : tr.waypoints()) w.push_back({p.time, 1 - p.position});
    return Trajectory(std::move(w), tr.cycle_start());
}

Trajectory simplified(const Trajectory& tr) {
    const auto& w = tr.waypoints();
    std::vector<Waypoint> out{w.front()};
    std::size_t new_cycle_start = 0;
    for (std::size_t i = 1; i < w.size(); ++i) {
        bool keep = i == tr.cycle_start() || i + 1 == w.size();
        if (!keep) {
            const auto& a = out.back();
            const auto& b = w[i];
            const auto& c = w[i + 1];
            keep = (b.position - a.position) * (c.time - b.time) != (c.position - b.position) * (b.time - a.time);
        }
        if (keep) {
            if (i == tr.cycle_start()) new_cycle_start = out.size();
            out.push_back(w[i]);
        }
    }
    return Trajectory(std::move(out), new_cycle_start);
}

const char* to_string(ScheduleKind k) {
    switch (k) {
        case ScheduleKind::Partition: return "partition";
        case ScheduleKind::Nested4: return "nested4";
        case ScheduleKind::Alg1: return "alg1";
        case ScheduleKind::Alg2: return "alg2";
        case ScheduleKind::Witness: return "witness";
    }
    return "?";
}

Rational SchedulePair::steady_start() const { return rmax(r1.cycle_start_time(), r2.cycle_start_time()); }

Rational SchedulePair::joint_period() const { return rational_lcm(r1.period(), r2.period()); }

std::vector<Rational> merged_breakpoints(const Trajectory& a, const Trajectory& b, const Rational& t_end) {
    std::vector<Rational> times{Rational(0), t_end};
    for (const auto* tr : {&a, &b}) {
        for (const auto& s : tr->unroll(t_end)) {
            if (s.t0 <= t_end) times.push_back(s.t0);
            if (s.t1 <= t_end) times.push_back(s.t1);
        }
    }
    std::sort(times.begin(), times.end());
    times.erase(std::unique(times.begin(), times.end()), times.end());
    return times;
}

std::pair<Trajectory, Trajectory> ordered_pair(const Trajectory& a, const Trajectory& b) {
    Rational start = rmax(a.cycle_start_time(), b.cycle_start_time());
    Rational end = start + rational_lcm(a.period(), b.period());
    std::vector<Rational> times = merged_breakpoints(a, b, end);
    times.push_back(start);

    std::vector<Rational> crossings;
    for (std::size_t i = 0; i + 1 < times.size(); ++i) {
        Rational d0 = a.position_at(times[i]) - b.position_at(times[i]);
        Rational d1 = a.position_at(times[i + 1]) - b.position_at(times[i + 1]);
        if ((d0 < 0 && d1 > 0) || (d0 > 0 && d1 < 0))
            crossings.push_back(times[i] + d0 / (d0 - d1) * (times[i + 1] - times[i]));
    }
    times.insert(times.end(), crossings.begin(), crossings.end());
    std::sort(times.begin(), times.end());
    times.erase(std::unique(times.begin(), times.end()), times.end());

    std::vector<Waypoint> lo, hi;
    std::size_t cycle_start = 0;
    for (const auto& t : times) {
        if (t == start) cycle_start = lo.size();
        Rational pa = a.position_at(t);
        Rational pb = b.position_at(t);
        lo.push_back({t, rmin(pa, pb)});
        hi.push_back({t, rmax(pa, pb)});
    }
    return {simplified(Trajectory(std::move(lo), cycle_start)),
            simplified(Trajectory(std::move(hi), cycle_start))};
}

SchedulePair mirrored(const SchedulePair& sp) { return {mirrored(sp.r2), mirrored(sp.r1), sp.kind}; }

Rational max_speed(const Trajectory& tr) {
    Rational best = 0;
    const auto& w = tr.waypoints();
    for (std::size_t i = 0; i + 1 < w.size(); ++i)
        best = rmax(best, rabs(w[i + 1].position - w[i].position) / (w[i + 1].time - w[i].time));
    return best;
}

}  // namespace patrol
