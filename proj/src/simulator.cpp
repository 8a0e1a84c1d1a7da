#include "patrol/simulator.h"

#include "patrol/error.h"

#include <algorithm>
#include <array>
#include <map>

namespace patrol {

const char* to_string(WaitingMode m) {
    return m == WaitingMode::SteadyState ? "steady-state" : "transient-inclusive";
}

void WaitingReport::finalize(const Instance& inst) {
    max_ratio = Rational(0);
    for (std::size_t i = 0; i < points.size(); ++i) {
        auto& p = points[i];
        if (!p.visited) {
            p.ratio.reset();
            max_ratio.reset();
            continue;
        }
        std::optional<Rational> w = p.simulated ? p.simulated : p.analytic;
        if (!w) {
            p.ratio.reset();
            continue;
        }
        p.ratio = *w / inst[i].idleness;
        if (max_ratio) max_ratio = rmax(*max_ratio, *p.ratio);
    }
    for (const auto& p : points)
        if (!p.visited) max_ratio.reset();
}

namespace {

std::vector<VisitSpan> merge_spans(std::vector<VisitSpan> spans) {
    std::sort(spans.begin(), spans.end(), [](const auto& a, const auto& b) { return a.begin < b.begin; });
    std::vector<VisitSpan> out;
    for (auto& s : spans) {
        if (!out.empty() && s.begin <= out.back().end) out.back().end = rmax(out.back().end, s.end);
        else out.push_back(std::move(s));
    }
    return out;
}

/// Times within a leg where the robot's position lies in [lo, hi].
std::optional<VisitSpan> presence_on_leg(const Segment& s, const Rational& lo, const Rational& hi) {
    if (s.p0 == s.p1) {
        if (lo <= s.p0 && s.p0 <= hi) return VisitSpan{s.t0, s.t1};
        return std::nullopt;
    }
    Rational slope = (s.p1 - s.p0) / (s.t1 - s.t0);
    Rational ta = s.t0 + (lo - s.p0) / slope;
    Rational tb = s.t0 + (hi - s.p0) / slope;
    if (ta > tb) std::swap(ta, tb);
    Rational b = rmax(ta, s.t0);
    Rational e = rmin(tb, s.t1);
    if (b > e) return std::nullopt;
    return VisitSpan{b, e};
}

std::vector<VisitSpan> presence_spans(const Trajectory& tr, const Rational& lo, const Rational& hi,
                                      const Rational& from, const Rational& to) {
    std::vector<VisitSpan> spans;
    for (const auto& s : tr.unroll(to)) {
        if (s.t1 < from || s.t0 > to) continue;
        if (auto v = presence_on_leg(s, lo, hi)) {
            Rational b = rmax(v->begin, from);
            Rational e = rmin(v->end, to);
            if (b <= e) spans.push_back({b, e});
        }
    }
    return merge_spans(std::move(spans));
}

/// Largest gap between consecutive spans among the gaps that open in
/// [from, from + period). nullopt when there is no span opening there.
std::optional<Rational> largest_gap(const std::vector<VisitSpan>& spans, const Rational& from,
                                    const Rational& period) {
    Rational limit = from + period;
    bool any = false;
    Rational best = 0;
    for (std::size_t k = 0; k < spans.size(); ++k) {
        if (spans[k].begin <= limit && spans[k].end >= from) any = true;
        if (k + 1 == spans.size()) break;
        if (spans[k].end >= from && spans[k].end < limit)
            best = rmax(best, spans[k + 1].begin - spans[k].end);
    }
    if (!any) return std::nullopt;
    return best;
}

}  // namespace

std::vector<VisitSpan> visit_spans(const Trajectory& tr, const Rational& x, const Rational& from,
                                   const Rational& to) {
    return presence_spans(tr, x, x, from, to);
}

std::optional<Rational> waiting_time(const SchedulePair& sp, const Rational& x, WaitingMode mode) {
    const Trajectory* robots[] = {&sp.r1, &sp.r2};
    if (mode == WaitingMode::SteadyState) {
        // A point served by one robot only needs that robot's own period;
        // the joint period can be much longer.
        std::array<bool, 2> serves{};
        for (int r = 0; r < 2; ++r) {
            const auto& tr = *robots[r];
            serves[r] = !visit_spans(tr, x, tr.cycle_start_time(), tr.cycle_start_time() + tr.period()).empty();
        }
        if (!serves[0] && !serves[1]) return std::nullopt;
        if (serves[0] != serves[1]) {
            const auto& tr = *robots[serves[0] ? 0 : 1];
            const Rational& from = tr.cycle_start_time();
            return largest_gap(visit_spans(tr, x, from, from + 2 * tr.period()), from, tr.period());
        }
    }
    Rational from = mode == WaitingMode::SteadyState ? sp.steady_start() : Rational(0);
    Rational period = sp.joint_period();
    if (mode == WaitingMode::TransientInclusive) period += sp.steady_start();
    Rational to = sp.steady_start() + 2 * sp.joint_period();
    std::vector<VisitSpan> all = visit_spans(sp.r1, x, from, to);
    auto second = visit_spans(sp.r2, x, from, to);
    all.insert(all.end(), second.begin(), second.end());
    return largest_gap(merge_spans(std::move(all)), from, period);
}

WaitingReport waiting_times(const SchedulePair& sp, const Instance& inst, WaitingMode mode) {
    WaitingReport rep;
    rep.mode = mode;
    for (const auto& p : inst.points()) {
        PointWaiting pw;
        pw.simulated = waiting_time(sp, p.position, mode);
        pw.visited = pw.simulated.has_value();
        rep.points.push_back(std::move(pw));
    }
    rep.finalize(inst);
    return rep;
}

// ---------------------------------------------------------------------------
// Distance-triggered controller.

namespace {

enum class Mode { ZigzagRight, ZigzagLeft, Dwell, ExcursionOut, ExcursionReturn };

struct Robot {
    Rational pos;
    Mode mode;
    std::optional<Rational> session_start;

    bool in_session() const { return session_start.has_value(); }
};

class Controller {
public:
    Controller(const CriticalPoints& cp, Rational d) : x1_(cp.x1), x4_(cp.x4), d_(std::move(d)) {
        robots_[0] = {x1_ - d_, Mode::ExcursionOut, std::nullopt};
        robots_[1] = {x1_, x1_ == x4_ ? Mode::Dwell : Mode::ZigzagRight, Rational(0)};
    }

    int velocity(int r) const {
        switch (robots_[r].mode) {
            case Mode::ZigzagRight: return 1;
            case Mode::ZigzagLeft: return -1;
            case Mode::Dwell: return 0;
            case Mode::ExcursionOut: return r == 0 ? -1 : 1;
            case Mode::ExcursionReturn: return r == 0 ? 1 : -1;
        }
        return 0;
    }

    std::optional<Rational> target(int r) const {
        switch (robots_[r].mode) {
            case Mode::ZigzagRight: return x4_;
            case Mode::ZigzagLeft: return x1_;
            case Mode::Dwell: return std::nullopt;
            case Mode::ExcursionOut: return Rational(r == 0 ? 0 : 1);
            case Mode::ExcursionReturn: return r == 0 ? x1_ : x4_;
        }
        return std::nullopt;
    }

    /// Applies every rule that fires at the current instant.
    void settle(const Rational& now) {
        for (int guard = 0; guard < 32; ++guard) {
            bool changed = false;
            for (int r = 0; r < 2; ++r) {
                auto tgt = target(r);
                if (tgt && robots_[r].pos == *tgt) {
                    arrive(r, now);
                    changed = true;
                }
            }
            if (!changed) changed = maybe_trigger();
            if (!changed) return;
        }
        throw Error(ErrorKind::NoCycle, "controller did not settle at t=" + to_string(now));
    }

    std::optional<Rational> next_event_in() const {
        std::optional<Rational> best;
        auto consider = [&](const Rational& dt) {
            if (dt > 0 && (!best || dt < *best)) best = dt;
        };
        for (int r = 0; r < 2; ++r) {
            auto tgt = target(r);
            if (tgt && velocity(r) != 0) consider(rabs(*tgt - robots_[r].pos));
        }
        int rate = velocity(1) - velocity(0);
        Rational gap = distance() - d_;
        if (rate < 0 && gap > 0) consider(gap / -rate);
        return best;
    }

    void advance(const Rational& dt) {
        for (int r = 0; r < 2; ++r) robots_[r].pos += velocity(r) * dt;
    }

    Rational distance() const { return robots_[1].pos - robots_[0].pos; }
    bool both_in_session() const { return robots_[0].in_session() && robots_[1].in_session(); }
    const Robot& robot(int r) const { return robots_[r]; }

    std::string state_key() const {
        std::string key;
        for (const auto& rb : robots_) {
            key += rb.pos.get_str();
            key += ':';
            key += std::to_string(static_cast<int>(rb.mode));
            key += rb.in_session() ? 'S' : '-';
            key += ';';
        }
        if (both_in_session()) {
            const auto& a = *robots_[0].session_start;
            const auto& b = *robots_[1].session_start;
            key += a < b ? '<' : (b < a ? '>' : '=');
        }
        return key;
    }

private:
    void arrive(int r, const Rational& now) {
        auto& rb = robots_[r];
        switch (rb.mode) {
            case Mode::ZigzagRight: rb.mode = Mode::ZigzagLeft; break;
            case Mode::ZigzagLeft: rb.mode = Mode::ZigzagRight; break;
            case Mode::Dwell: break;
            case Mode::ExcursionOut: rb.mode = Mode::ExcursionReturn; break;
            case Mode::ExcursionReturn:
                if (x1_ == x4_) rb.mode = Mode::Dwell;
                else rb.mode = r == 0 ? Mode::ZigzagRight : Mode::ZigzagLeft;
                rb.session_start = now;
                break;
        }
    }

    /// The in-session robot with the older session leaves when the gap
    /// closes to d; ties go to r1.
    bool maybe_trigger() {
        if (distance() != d_ || velocity(1) - velocity(0) >= 0) return false;
        int leaver = -1;
        for (int r = 0; r < 2; ++r) {
            if (!robots_[r].in_session()) continue;
            if (leaver < 0 || *robots_[r].session_start < *robots_[leaver].session_start) leaver = r;
        }
        if (leaver < 0) return false;
        robots_[leaver].mode = Mode::ExcursionOut;
        robots_[leaver].session_start.reset();
        return true;
    }

    Rational x1_, x4_, d_;
    std::array<Robot, 2> robots_;
};

}  // namespace

ReactiveRun simulate_reactive(const CriticalPoints& cp, const ReactiveConfig& config) {
    Rational d = config.d_override ? *config.d_override : cp.d;
    if (d < 0) throw Error(ErrorKind::BadArgument, "coordination distance must be non-negative");
    if (d > cp.x1) throw Error(ErrorKind::BadArgument, "coordination distance exceeds x1");

    Controller ctl(cp, d);
    std::array<std::vector<Waypoint>, 2> path;
    std::map<std::string, std::pair<std::size_t, Rational>> seen;
    std::optional<Rational> min_gap;
    Rational now = 0;

    for (std::size_t events = 0;; ++events) {
        ctl.settle(now);
        for (int r = 0; r < 2; ++r) path[r].push_back({now, ctl.robot(r).pos});

        auto key = ctl.state_key();
        if (auto it = seen.find(key); it != seen.end()) {
            auto [index, when] = it->second;
            SchedulePair sp{simplified(Trajectory(std::move(path[0]), index)),
                            simplified(Trajectory(std::move(path[1]), index)), ScheduleKind::Alg2};
            return {std::move(sp), when, now - when, min_gap, events};
        }
        seen.emplace(std::move(key), std::make_pair(path[0].size() - 1, now));

        Rational dt = ctl.next_event_in().value_or(Rational(1));
        if (ctl.both_in_session()) {
            Rational before = ctl.distance();
            ctl.advance(dt);
            Rational low = rmin(before, ctl.distance());
            min_gap = min_gap ? rmin(*min_gap, low) : low;
        } else {
            ctl.advance(dt);
        }
        now += dt;
        if (now > config.horizon)
            throw Error(ErrorKind::NoCycle, "no state recurrence before horizon " + to_string(config.horizon));
    }
}

// ---------------------------------------------------------------------------

bool ObservationReport::all_ok() const {
    if (!ordering_ok) return false;
    return std::all_of(points.begin(), points.end(), [](const auto& p) { return p.ok; });
}

ObservationReport observation_checks(const SchedulePair& sp, const Instance& inst) {
    ObservationReport rep;
    Rational from = sp.steady_start();
    Rational period = sp.joint_period();
    Rational to = from + 2 * period;

    for (const auto& t : merged_breakpoints(sp.r1, sp.r2, from + period)) {
        if (sp.r1.position_at(t) > sp.r2.position_at(t)) {
            rep.ordering_ok = false;
            rep.ordering_violation_time = t;
            break;
        }
    }

    for (std::size_t i = 0; i < inst.size(); ++i) {
        PointObservation po;
        po.index = i;
        auto w = waiting_time(sp, inst[i].position, WaitingMode::SteadyState);
        po.applicable = w && *w <= inst[i].idleness;
        if (po.applicable) {
            Interval r = range(inst[i]);
            auto spans = presence_spans(sp.r1, r.lo, r.hi, from, to);
            auto more = presence_spans(sp.r2, r.lo, r.hi, from, to);
            spans.insert(spans.end(), more.begin(), more.end());
            auto gap = largest_gap(merge_spans(std::move(spans)), from, period);
            if (!gap) {
                po.ok = false;
                po.longest_absence = period;
            } else {
                po.longest_absence = *gap;
                po.ok = *gap <= inst[i].idleness / 2;
            }
        }
        rep.points.push_back(std::move(po));
    }
    return rep;
}

}  // namespace patrol
