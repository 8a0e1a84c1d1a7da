#include "patrol/analysis.h"

#include "patrol/error.h"

#include <cmath>

namespace patrol {

Rational ratio(const WaitingReport& report, const Instance& inst) {
    Rational best = 0;
    for (std::size_t i = 0; i < report.points.size(); ++i) {
        const auto& p = report.points[i];
        if (!p.visited || !p.ratio)
            throw Error(ErrorKind::Unbounded, "point " + to_string(inst[i].position) + " is never visited");
        best = rmax(best, *p.ratio);
    }
    return best;
}

BoundCurve bounds(const Rational& alpha) {
    if (alpha <= 0) throw Error(ErrorKind::BadArgument, "alpha must be positive");
    Rational b1 = 1 + 2 * alpha;
    Rational b2 = (2 + alpha) / (1 + alpha);
    return {alpha, b1, b2, rmin(b1, b2)};
}

BoundCurveApprox bounds(double alpha) {
    if (!(alpha > 0)) throw Error(ErrorKind::BadArgument, "alpha must be positive");
    double b1 = 1 + 2 * alpha;
    double b2 = (2 + alpha) / (1 + alpha);
    return {alpha, b1, b2, std::min(b1, b2)};
}

double worst_alpha() {
    // bound_alg1 - bound_alg2 is increasing in alpha: -1 at 0, 3/2 at 1.
    auto gap = [](double a) { return (1 + 2 * a) - (2 + a) / (1 + a); };
    double lo = 0.0, hi = 1.0;
    for (int i = 0; i < 200 && hi - lo > 0; ++i) {
        double mid = lo + (hi - lo) / 2;
        if (mid == lo || mid == hi) break;
        (gap(mid) < 0 ? lo : hi) = mid;
    }
    return lo + (hi - lo) / 2;
}

double worst_alpha_closed_form() { return (std::sqrt(3.0) - 1.0) / 2.0; }

}  // namespace patrol
