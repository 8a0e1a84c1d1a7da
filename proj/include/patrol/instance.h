#pragma once

#include "patrol/rational.h"

#include <optional>
#include <string>
#include <vector>

namespace patrol {

/// A point of the path together with its idleness requirement.
struct PointRequirement {
    Rational position;
    Rational idleness;

    bool operator==(const PointRequirement&) const = default;
};

/// Closed interval [lo, hi] inside [0, 1].
struct Interval {
    Rational lo;
    Rational hi;

    bool contains(const Rational& x) const { return lo <= x && x <= hi; }
    bool contains(const Interval& o) const { return lo <= o.lo && o.hi <= hi; }
    Rational length() const { return hi - lo; }
    bool operator==(const Interval&) const = default;
};

/// Points sorted by position, first at 0 and last at 1.
class Instance {
public:
    /// Sorts the points and validates them; throws ValidationError.
    explicit Instance(std::vector<PointRequirement> points);

    const std::vector<PointRequirement>& points() const { return points_; }
    std::size_t size() const { return points_.size(); }
    const PointRequirement& operator[](std::size_t i) const { return points_[i]; }

    bool operator==(const Instance&) const = default;

private:
    std::vector<PointRequirement> points_;
};

/// x -> 1 - x applied to every point; the order is reversed so that
/// positions stay increasing.
Instance mirror(const Instance& inst);

/// Zero-based point indices per class. The first letter states whether 0 is
/// in the point's range, the second whether 1 is.
struct Classification {
    std::vector<std::size_t> s00, s01, s10, s11;
};

struct CriticalPoints {
    Rational x1, x2, x3, x4;
    Rational alpha;
    Rational d;
    /// True when the instance was mirrored so that x1 <= 1 - x4; all values
    /// above are then in mirrored coordinates.
    bool flipped = false;

    bool operator==(const CriticalPoints&) const = default;
};

Interval range(const PointRequirement& p);
Classification classify(const Instance& inst);

/// Intersection of the ranges of the given points; nullopt when empty.
/// The intersection over an empty family is [0, 1].
std::optional<Interval> intersect_ranges(const Instance& inst, const std::vector<std::size_t>& indices);

/// Critical points of an instance with S00 != {}. Throws EmptyS00,
/// EmptyIntersection or DegenerateIntersection (x1 == x4).
CriticalPoints critical_points(const Instance& inst);

/// Same as critical_points, but allows x1 == x4 (alpha is then reported as
/// 0 and d as 0). Used when a caller explicitly overrides the degenerate case.
CriticalPoints critical_points_allow_degenerate(const Instance& inst);

/// The instance in the coordinates the critical points are expressed in.
Instance normalized(const Instance& inst, const CriticalPoints& cp);

/// Lower bound on the idleness of any point at x in a feasible instance.
Rational lower_bound(const Rational& x, const CriticalPoints& cp);
Rational lower_bound(const Rational& x, const Rational& x1, const Rational& x4);

enum class CheckStatus { Pass, Fail, NotApplicable };
enum class Verdict { InfeasibleCertified, Unknown, FeasibleWithSchedule };

const char* to_string(CheckStatus s);
const char* to_string(Verdict v);

struct Certificate {
    std::size_t index = 0;  // zero-based point index
    Rational position;
    std::string detail;
};

struct ConditionEntry {
    std::string name;
    CheckStatus status = CheckStatus::NotApplicable;
    std::optional<Certificate> certificate;
};

struct AdmissibilityReport {
    std::vector<ConditionEntry> conditions;
    Verdict verdict = Verdict::Unknown;

    const ConditionEntry* find(const std::string& name) const;
    /// First failing condition, if any.
    const ConditionEntry* first_failure() const;
};

struct Theorem1Result {
    AdmissibilityReport report;
    Interval x10;
    Interval x01;
};

/// Partition conditions (1)-(3) for instances with S00 == {}; throws NotApplicable
/// otherwise.
Theorem1Result theorem1_check(const Instance& inst);

/// All necessary feasibility conditions. For S00 == {} this is the
/// partition characterization; otherwise the range-containment, side,
/// ordering and idleness lower-bound conditions (verdict Unknown when all
/// pass).
AdmissibilityReport check_necessary(const Instance& inst);

}  // namespace patrol
