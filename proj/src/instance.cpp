#include "patrol/instance.h"

#include "patrol/error.h"

#include <algorithm>

namespace patrol {

Instance::Instance(std::vector<PointRequirement> points) : points_(std::move(points)) {
    std::sort(points_.begin(), points_.end(),
              [](const auto& a, const auto& b) { return a.position < b.position; });
    if (points_.size() < 2)
        throw Error(ErrorKind::ValidationError, "an instance needs at least two points");
    for (std::size_t i = 0; i < points_.size(); ++i) {
        const auto& p = points_[i];
        if (p.position < 0 || p.position > 1)
            throw Error(ErrorKind::ValidationError, "position " + to_string(p.position) + " outside [0,1]");
        if (p.idleness <= 0)
            throw Error(ErrorKind::ValidationError,
                        "non-positive idleness at position " + to_string(p.position));
        if (i > 0 && points_[i - 1].position == p.position)
            throw Error(ErrorKind::ValidationError, "duplicate position " + to_string(p.position));
    }
    if (points_.front().position != 0)
        throw Error(ErrorKind::ValidationError, "missing endpoint point at 0");
    if (points_.back().position != 1)
        throw Error(ErrorKind::ValidationError, "missing endpoint point at 1");
}

Instance mirror(const Instance& inst) {
    std::vector<PointRequirement> pts;
    pts.reserve(inst.size());
    for (const auto& p : inst.points()) pts.push_back({Rational(1 - p.position), p.idleness});
    return Instance(std::move(pts));
}

Interval range(const PointRequirement& p) {
    Rational half = p.idleness / 2;
    return {rmax(Rational(0), p.position - half), rmin(Rational(1), p.position + half)};
}

Classification classify(const Instance& inst) {
    Classification c;
    for (std::size_t i = 0; i < inst.size(); ++i) {
        Interval r = range(inst[i]);
        bool has0 = r.contains(Rational(0));
        bool has1 = r.contains(Rational(1));
        if (has0 && has1) c.s11.push_back(i);
        else if (has0) c.s10.push_back(i);
        else if (has1) c.s01.push_back(i);
        else c.s00.push_back(i);
    }
    return c;
}

std::optional<Interval> intersect_ranges(const Instance& inst, const std::vector<std::size_t>& indices) {
    Interval acc{0, 1};
    for (auto i : indices) {
        Interval r = range(inst[i]);
        acc.lo = rmax(acc.lo, r.lo);
        acc.hi = rmin(acc.hi, r.hi);
    }
    if (acc.lo > acc.hi) return std::nullopt;
    return acc;
}

namespace {

CriticalPoints raw_critical_points(const Instance& inst, bool allow_degenerate) {
    Classification c = classify(inst);
    if (c.s00.empty()) throw Error(ErrorKind::EmptyS00, "no point excludes both 0 and 1 from its range");
    auto box = intersect_ranges(inst, c.s00);
    if (!box)
        throw Error(ErrorKind::EmptyIntersection,
                    "ranges of the S00 points do not intersect; the instance is infeasible");
    CriticalPoints cp;
    cp.x1 = box->lo;
    cp.x4 = box->hi;
    cp.x2 = inst[c.s00.front()].position;
    cp.x3 = inst[c.s00.back()].position;
    if (cp.x1 == cp.x4) {
        if (!allow_degenerate)
            throw Error(ErrorKind::DegenerateIntersection,
                        "x1 == x4: the expansion is unbounded and the coordination distance is 0");
        cp.alpha = 0;
        cp.d = 0;
        return cp;
    }
    cp.alpha = cp.x1 / (cp.x4 - cp.x1);
    cp.d = rmin(cp.x1, cp.x4 - cp.x1) / (1 + cp.alpha);
    return cp;
}

CriticalPoints critical_points_impl(const Instance& inst, bool allow_degenerate) {
    CriticalPoints cp = raw_critical_points(inst, allow_degenerate);
    if (cp.x1 > 1 - cp.x4) {
        cp = raw_critical_points(mirror(inst), allow_degenerate);
        cp.flipped = true;
    }
    return cp;
}

}  // namespace

CriticalPoints critical_points(const Instance& inst) { return critical_points_impl(inst, false); }

CriticalPoints critical_points_allow_degenerate(const Instance& inst) {
    return critical_points_impl(inst, true);
}

Instance normalized(const Instance& inst, const CriticalPoints& cp) {
    return cp.flipped ? mirror(inst) : inst;
}

Rational lower_bound(const Rational& x, const Rational& x1, const Rational& x4) {
    if (x < x1) return rmax(rmax(Rational(2 * x), Rational(2 * (1 - x - x4 + x1))), Rational(x4 - x1));
    if (x <= x4) return 2 * rmax(Rational(x4 - x), Rational(x - x1));
    return rmax(rmax(Rational(2 * (1 - x)), Rational(2 * (x - x4 + x1))), Rational(x4 - x1));
}

Rational lower_bound(const Rational& x, const CriticalPoints& cp) { return lower_bound(x, cp.x1, cp.x4); }

const char* to_string(CheckStatus s) {
    switch (s) {
        case CheckStatus::Pass: return "pass";
        case CheckStatus::Fail: return "fail";
        case CheckStatus::NotApplicable: return "not-applicable";
    }
    return "?";
}

const char* to_string(Verdict v) {
    switch (v) {
        case Verdict::InfeasibleCertified: return "infeasible-certified";
        case Verdict::Unknown: return "unknown";
        case Verdict::FeasibleWithSchedule: return "feasible-with-schedule";
    }
    return "?";
}

const ConditionEntry* AdmissibilityReport::find(const std::string& name) const {
    for (const auto& c : conditions)
        if (c.name == name) return &c;
    return nullptr;
}

const ConditionEntry* AdmissibilityReport::first_failure() const {
    for (const auto& c : conditions)
        if (c.status == CheckStatus::Fail) return &c;
    return nullptr;
}

namespace {

Certificate cert(const Instance& inst, std::size_t i, std::string detail) {
    return {i, inst[i].position, std::move(detail)};
}

ConditionEntry pass(std::string name) { return {std::move(name), CheckStatus::Pass, std::nullopt}; }

void finish(AdmissibilityReport& rep, Verdict when_all_pass) {
    rep.verdict = rep.first_failure() ? Verdict::InfeasibleCertified : when_all_pass;
}

}  // namespace

Theorem1Result theorem1_check(const Instance& inst) {
    Classification c = classify(inst);
    if (!c.s00.empty())
        throw Error(ErrorKind::NotApplicable, "partition conditions apply only to instances with S00 empty");

    // Every S10 range contains 0 (and every S01 range contains 1), so these
    // intersections are never empty.
    Interval x10 = *intersect_ranges(inst, c.s10);
    Interval x01 = *intersect_ranges(inst, c.s01);

    Theorem1Result out{{}, x10, x01};
    auto& rep = out.report;

    auto side = [&](const char* name, const std::vector<std::size_t>& cls, const Interval& box,
                    const Rational& end) {
        ConditionEntry e = pass(name);
        if (!box.contains(end)) {
            e.status = CheckStatus::Fail;
            e.certificate = cert(inst, cls.front(), "extreme point " + to_string(end) + " not in intersection");
        }
        for (auto i : cls) {
            if (e.status == CheckStatus::Fail) break;
            if (!box.contains(inst[i].position)) {
                e.status = CheckStatus::Fail;
                e.certificate = cert(inst, i, "point outside the intersection of its class's ranges");
            }
        }
        rep.conditions.push_back(std::move(e));
    };
    side("Thm1-cond1", c.s10, x10, Rational(0));
    side("Thm1-cond2", c.s01, x01, Rational(1));

    ConditionEntry cover = pass("Thm1-cond3");
    for (std::size_t i = 0; i < inst.size(); ++i) {
        const auto& y = inst[i].position;
        if (!x10.contains(y) && !x01.contains(y)) {
            cover.status = CheckStatus::Fail;
            cover.certificate = cert(inst, i, "point lies in neither X10 nor X01");
            break;
        }
    }
    rep.conditions.push_back(std::move(cover));
    finish(rep, Verdict::FeasibleWithSchedule);
    return out;
}

AdmissibilityReport check_necessary(const Instance& inst) {
    Classification c = classify(inst);
    if (c.s00.empty()) return theorem1_check(inst).report;

    AdmissibilityReport rep;

    ConditionEntry contain = pass("Lemma5-containment");
    for (std::size_t j = 0; j < inst.size() && contain.status == CheckStatus::Pass; ++j) {
        Interval r = range(inst[j]);
        for (auto i : c.s00) {
            if (!r.contains(inst[i].position)) {
                contain.status = CheckStatus::Fail;
                contain.certificate =
                    cert(inst, j, "range excludes S00 point " + to_string(inst[i].position));
                break;
            }
        }
    }
    rep.conditions.push_back(std::move(contain));

    auto box = intersect_ranges(inst, c.s00);
    const char* dependent[] = {"Lemma4-3-left", "Lemma4-3-right", "Lemma4-4-left", "Lemma4-4-right",
                               "Lemma6-lowerbound"};
    if (!box) {
        for (const char* name : dependent) rep.conditions.push_back({name, CheckStatus::NotApplicable, {}});
        finish(rep, Verdict::Unknown);
        return rep;
    }
    const Rational& x1 = box->lo;
    const Rational& x4 = box->hi;
    std::size_t i2 = c.s00.front();
    std::size_t i3 = c.s00.back();
    const Rational& x2 = inst[i2].position;
    const Rational& x3 = inst[i3].position;

    ConditionEntry left = pass("Lemma4-3-left");
    ConditionEntry right = pass("Lemma4-3-right");
    for (std::size_t i = 0; i < inst.size(); ++i) {
        const auto& y = inst[i].position;
        Interval r = range(inst[i]);
        if (y < x1 && !r.contains(Rational(0)) && left.status == CheckStatus::Pass) {
            left.status = CheckStatus::Fail;
            left.certificate = cert(inst, i, "point left of x1 whose range excludes 0");
        }
        if (y > x4 && !r.contains(Rational(1)) && right.status == CheckStatus::Pass) {
            right.status = CheckStatus::Fail;
            right.certificate = cert(inst, i, "point right of x4 whose range excludes 1");
        }
    }
    rep.conditions.push_back(std::move(left));
    rep.conditions.push_back(std::move(right));

    ConditionEntry order_l = pass("Lemma4-4-left");
    if (x4 - x3 > x3 - x1) {
        order_l.status = CheckStatus::Fail;
        order_l.certificate = cert(inst, i3, "x4 - x3 > x3 - x1");
    }
    rep.conditions.push_back(std::move(order_l));
    ConditionEntry order_r = pass("Lemma4-4-right");
    if (x2 - x1 > x4 - x1) {
        order_r.status = CheckStatus::Fail;
        order_r.certificate = cert(inst, i2, "x2 - x1 > x4 - x1");
    }
    rep.conditions.push_back(std::move(order_r));

    ConditionEntry lb = pass("Lemma6-lowerbound");
    for (std::size_t i = 0; i < inst.size(); ++i) {
        Rational bound = lower_bound(inst[i].position, x1, x4);
        if (inst[i].idleness < bound) {
            lb.status = CheckStatus::Fail;
            lb.certificate = cert(inst, i, "idleness below lower bound " + to_string(bound));
            break;
        }
    }
    rep.conditions.push_back(std::move(lb));

    finish(rep, Verdict::Unknown);
    return rep;
}

}  // namespace patrol
