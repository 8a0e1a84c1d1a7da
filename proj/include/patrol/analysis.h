#pragma once

#include "patrol/instance.h"
#include "patrol/rational.h"
#include "patrol/simulator.h"

namespace patrol {

/// Approximation guarantees of the two S00 schedules at expansion alpha.
struct BoundCurve {
    Rational alpha;
    Rational bound_alg1;  // 1 + 2 alpha
    Rational bound_alg2;  // (2 + alpha) / (1 + alpha)
    Rational combined;    // min of the two
};

/// Floating-point twin of BoundCurve for irrational alpha.
struct BoundCurveApprox {
    double alpha;
    double bound_alg1;
    double bound_alg2;
    double combined;
};

/// max over points of w / I. Throws Unbounded if some point is never visited.
Rational ratio(const WaitingReport& report, const Instance& inst);

/// Throws BadArgument for alpha <= 0.
BoundCurve bounds(const Rational& alpha);
BoundCurveApprox bounds(double alpha);

/// Expansion at which the two guarantees meet, found by bisection on
/// bound_alg1 - bound_alg2 over (0, 1).
double worst_alpha();

/// (sqrt(3) - 1) / 2, the positive root of 2a^2 + 2a - 1.
double worst_alpha_closed_form();

inline constexpr double kSqrt3 = 1.7320508075688772;

}  // namespace patrol
