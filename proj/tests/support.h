#pragma once

#include "patrol/instance.h"
#include "patrol/rational.h"
#include "patrol/trajectory.h"

#include <doctest.h>

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace testing {

inline patrol::Rational Q(const char* s) { return patrol::parse_rational(s); }

inline bool is_integer(const patrol::Rational& q) { return q.get_den() == 1; }

inline patrol::Instance make(std::vector<std::pair<const char*, const char*>> rows) {
    std::vector<patrol::PointRequirement> pts;
    for (auto& [x, i] : rows) pts.push_back({Q(x), Q(i)});
    return patrol::Instance(std::move(pts));
}

// The three-point instance of the alg1 tight family at alpha = 1.
inline patrol::Instance a1() { return make({{"0", "5/3"}, {"1/2", "1/3"}, {"1", "5/3"}}); }

// Times within [ta, tb] at which a linear motion from pa to pb lies in
// [lo, hi]; nullopt when it never does.
inline std::optional<std::pair<patrol::Rational, patrol::Rational>> inside(const patrol::Rational& ta,
                                                                           const patrol::Rational& tb,
                                                                           const patrol::Rational& pa,
                                                                           const patrol::Rational& pb,
                                                                           const patrol::Rational& lo,
                                                                           const patrol::Rational& hi) {
    using patrol::Rational;
    if (pa == pb) {
        if (pa < lo || pa > hi) return std::nullopt;
        return std::make_pair(ta, tb);
    }
    Rational v = (pb - pa) / (tb - ta);
    Rational t_lo = ta + (lo - pa) / v, t_hi = ta + (hi - pa) / v;
    if (t_lo > t_hi) std::swap(t_lo, t_hi);
    Rational a = patrol::rmax(ta, t_lo), b = patrol::rmin(tb, t_hi);
    if (a > b) return std::nullopt;
    return std::make_pair(a, b);
}

// Smallest distance between the two robots over [0, t_end] at instants when
// both are inside [lo, hi]. Distances are piecewise linear between merged
// breakpoints, so endpoints of the shared sub-intervals suffice (a sign
// change in between means the robots met).
inline std::optional<patrol::Rational> min_distance_inside(const patrol::SchedulePair& sp, const patrol::Rational& lo,
                                                           const patrol::Rational& hi, const patrol::Rational& t_end) {
    using patrol::Rational;
    auto bp = patrol::merged_breakpoints(sp.r1, sp.r2, t_end);
    std::optional<Rational> best;
    for (std::size_t k = 0; k + 1 < bp.size(); ++k) {
        const Rational &ta = bp[k], &tb = bp[k + 1];
        auto a = inside(ta, tb, sp.r1.position_at(ta), sp.r1.position_at(tb), lo, hi);
        auto b = inside(ta, tb, sp.r2.position_at(ta), sp.r2.position_at(tb), lo, hi);
        if (!a || !b) continue;
        Rational s = patrol::rmax(a->first, b->first), e = patrol::rmin(a->second, b->second);
        if (s > e) continue;
        Rational ds = sp.r2.position_at(s) - sp.r1.position_at(s);
        Rational de = sp.r2.position_at(e) - sp.r1.position_at(e);
        Rational m = (ds < 0) != (de < 0) ? Rational(0) : patrol::rmin(patrol::rabs(ds), patrol::rabs(de));
        best = best ? patrol::rmin(*best, m) : m;
    }
    return best;
}

}  // namespace testing

namespace doctest {
template <>
struct StringMaker<patrol::Rational> {
    static String convert(const patrol::Rational& q) { return patrol::to_string(q).c_str(); }
};
}  // namespace doctest
