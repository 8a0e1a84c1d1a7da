#include "patrol/generators.h"

#include "patrol/error.h"

#include <algorithm>
#include <set>

namespace patrol {

std::int64_t draw(Lcg64& rng, std::int64_t lo, std::int64_t hi) {
    if (hi < lo) throw Error(ErrorKind::BadArgument, "empty draw range");
    auto span = static_cast<std::uint64_t>(hi - lo) + 1;
    return lo + static_cast<std::int64_t>((rng() >> 32) % span);
}

namespace {

void require_positive(const Rational& alpha) {
    if (alpha <= 0) throw Error(ErrorKind::BadArgument, "alpha must be positive");
}

Rational grid(std::int64_t k) {
    Rational q(k, kGrid);
    q.canonicalize();
    return q;
}

}  // namespace

Rational tight_alg1_x1(const Rational& alpha) { return alpha / (2 * alpha + 1); }

Rational tight_alg2_x1(const Rational& alpha) {
    return alpha < 1 ? Rational(alpha / (alpha + 2)) : Rational(alpha / (2 * alpha + 1));
}

Instance gen_tight_alg1(const Rational& alpha) {
    require_positive(alpha);
    Rational x1 = tight_alg1_x1(alpha);
    Rational outer = 4 * x1 + x1 / alpha;
    return Instance({{0, outer}, {x1 * (1 + 1 / (2 * alpha)), x1 / alpha}, {1, outer}});
}

SchedulePair witness_tight_alg1(const Rational& alpha) {
    require_positive(alpha);
    Rational x1 = tight_alg1_x1(alpha);
    Rational y1 = x1 * (1 + 1 / (2 * alpha));
    Rational pause = 2 * x1;

    Rational t1 = y1 - x1;
    Rational t2 = t1 + pause;
    Rational t3 = t2 + y1;
    Trajectory r1({{0, x1}, {t1, y1}, {t2, y1}, {t3, 0}, {t3 + x1, x1}}, 0);

    Rational s1 = 1 - y1;
    Rational s2 = 2 * s1;
    Trajectory r2({{0, y1}, {s1, 1}, {s2, y1}, {s2 + pause, y1}}, 0);
    return {std::move(r1), std::move(r2), ScheduleKind::Witness};
}

Instance gen_tight_alg2(const Rational& alpha, const std::optional<Rational>& epsilon) {
    require_positive(alpha);
    Rational x1 = tight_alg2_x1(alpha);
    if (alpha < 1) {
        Rational outer = x1 * (2 + 3 / alpha);
        return Instance({{0, outer},
                         {x1 + x1 / (2 * alpha), x1 / alpha},
                         {2 * x1 / alpha, 2 * x1 / alpha},
                         {1, outer}});
    }
    if (!epsilon || *epsilon <= 0 || *epsilon >= x1)
        throw Error(ErrorKind::BadEpsilon, "epsilon must lie strictly between 0 and x1 = " + to_string(x1));
    const Rational& eps = *epsilon;
    Rational outer = 2 * (1 - x1);
    return Instance({{0, outer}, {x1 - eps, 2 * (x1 + eps)}, {x1 + x1 / (2 * alpha), x1 / alpha}, {1, outer}});
}

SchedulePair witness_tight_alg2(const Rational& alpha, const std::optional<Rational>& epsilon) {
    gen_tight_alg2(alpha, epsilon);  // validates alpha and epsilon
    Rational x1 = tight_alg2_x1(alpha);
    if (alpha < 1) {
        // r2 pauses 2 x1 at y1 on every pass; r1 pauses at y1 until r2 is
        // heading back left at distance x1/alpha, which happens at 1 - x1
        // into each of r2's cycles.
        Rational y1 = x1 + x1 / (2 * alpha);
        Rational cycle = 2 - x1 / alpha;
        Rational release = 1 - x1;
        Trajectory r1({{0, x1},
                       {x1 / (2 * alpha), y1},
                       {release, y1},
                       {release + y1, 0},
                       {cycle, y1},
                       {cycle + release, y1},
                       {cycle + release + y1, 0},
                       {2 * cycle, y1}},
                      4);
        Trajectory r2({{0, y1}, {1 - y1, 1}, {2 * (1 - y1), y1}, {cycle, y1}}, 0);
        return {std::move(r1), std::move(r2), ScheduleKind::Witness};
    }
    // Both robots pause x1/alpha at the middle point y2 = 1/2.
    Rational y2 = x1 + x1 / (2 * alpha);
    Rational pause = x1 / alpha;
    Rational x4 = x1 + x1 / alpha;
    Rational a = x1 / (2 * alpha);
    Trajectory r1({{0, x1}, {a, y2}, {a + pause, y2}, {a + pause + y2, 0}, {a + pause + 2 * y2, y2}}, 1);
    Rational b = 1 - x4;
    Rational c = b + (1 - y2);
    Trajectory r2({{0, x4}, {b, 1}, {c, y2}, {c + pause, y2}, {c + pause + (1 - y2), 1}}, 1);
    return {std::move(r1), std::move(r2), ScheduleKind::Witness};
}

AdmissibleSample gen_admissible_sample(std::uint64_t seed, std::size_t n) {
    if (n < 3) throw Error(ErrorKind::BadArgument, "random instances need n >= 3");
    Lcg64 rng(seed);
    for (int attempt = 0; attempt < 1000; ++attempt) {
        std::int64_t i1 = draw(rng, kGrid / 24, kGrid * 2 / 5);
        std::int64_t width = draw(rng, kGrid / 24, kGrid - 2 * i1);
        std::int64_t i4 = i1 + width;
        Rational x1 = grid(i1), x4 = grid(i4);

        std::set<std::int64_t> used{0, kGrid};
        std::vector<PointRequirement> pts;

        // The centre point pins the intersection to exactly [x1, x4].
        if ((i1 + i4) % 2 != 0) continue;
        std::int64_t centre = (i1 + i4) / 2;
        used.insert(centre);
        pts.push_back({grid(centre), x4 - x1});

        std::size_t inner = static_cast<std::size_t>(draw(rng, 1, static_cast<std::int64_t>(std::min<std::size_t>(n - 2, 3))));
        // S00 points must sit where a range covering [x1, x4] can still
        // exclude both ends: strictly inside (x4/2, (1+x1)/2).
        std::int64_t lo = std::max(i1, i4 / 2 + 1);
        std::int64_t hi = std::min(i4, (kGrid + i1 + 1) / 2 - 1);
        for (std::size_t k = 1; k < inner && lo <= hi; ++k) {
            std::int64_t j = draw(rng, lo, hi);
            if (!used.insert(j).second) continue;
            Rational y = grid(j);
            Rational base = 2 * rmax(Rational(y - x1), Rational(x4 - y));
            Rational room = 2 * rmin(y, Rational(1 - y)) - base;
            if (room <= 0) {
                used.erase(j);
                continue;
            }
            pts.push_back({y, base + room * draw(rng, 0, 3) / 4});
        }
        Rational x2 = pts.front().position, x3 = x2;
        for (const auto& p : pts) {
            x2 = rmin(x2, p.position);
            x3 = rmax(x3, p.position);
        }

        std::vector<std::int64_t> outer{0, kGrid};
        while (outer.size() + pts.size() < n) {
            bool left = draw(rng, 0, 1) == 0;
            std::int64_t j = left ? draw(rng, 1, i1 - 1) : draw(rng, i4 + 1, kGrid - 1);
            if (used.insert(j).second) outer.push_back(j);
            if (used.size() > static_cast<std::size_t>(kGrid)) break;
        }
        for (auto j : outer) {
            Rational y = grid(j);
            Rational need = lower_bound(y, x1, x4);
            if (y < x1) need = rmax(need, rmax(Rational(2 * y), Rational(2 * (x3 - y))));
            else need = rmax(need, rmax(Rational(2 * (1 - y)), Rational(2 * (y - x2))));
            pts.push_back({y, need + grid(draw(rng, 0, 6))});
        }

        Instance inst(std::move(pts));
        if (inst.size() != n) continue;
        if (check_necessary(inst).verdict != Verdict::Unknown) continue;
        return {std::move(inst), x1, x4};
    }
    throw Error(ErrorKind::BadArgument, "could not sample an admissible instance");
}

Instance gen_admissible_random(std::uint64_t seed, std::size_t n) {
    return gen_admissible_sample(seed, n).instance;
}

namespace {

/// Adds random S10/S01/S11 points in [0, a] u [b, 1] that keep X10 = [0, a]
/// and X01 = [b, 1] and satisfy the partition conditions.
void fill_feasible(Lcg64& rng, std::vector<PointRequirement>& pts, std::set<std::int64_t>& used, std::int64_t a,
                   std::int64_t b, std::size_t n) {
    for (int guard = 0; pts.size() < n && guard < 10000; ++guard) {
        std::int64_t j = draw(rng, 1, kGrid - 1);
        if (j > a && j < b) continue;
        if (used.count(j)) continue;
        Rational y = grid(j);
        int kind = static_cast<int>(draw(rng, 0, 2));
        if (kind == 0 && j <= a && 2 * j < kGrid) {
            // S10: range [0, r] with max(a, 2y) <= r < 1
            std::int64_t rlo = std::max(a, 2 * j);
            if (rlo >= kGrid) continue;
            std::int64_t r = draw(rng, rlo, kGrid - 1);
            pts.push_back({y, 2 * (grid(r) - y)});
        } else if (kind == 1 && j >= b && 2 * j > kGrid) {
            // S01: range [l, 1] with 0 < l <= min(b, 2y - 1)
            std::int64_t lhi = std::min(b, 2 * j - kGrid);
            std::int64_t l = draw(rng, 1, lhi);
            pts.push_back({y, 2 * (y - grid(l))});
        } else if (kind == 2) {
            pts.push_back({y, 2 * rmax(y, Rational(1 - y)) + grid(draw(rng, 0, 6))});
        } else {
            continue;
        }
        used.insert(j);
    }
}

}  // namespace

Instance gen_theorem1_feasible(std::uint64_t seed, std::size_t n) {
    if (n < 2) throw Error(ErrorKind::BadArgument, "n must be at least 2");
    Lcg64 rng(seed);
    for (int attempt = 0; attempt < 1000; ++attempt) {
        std::int64_t a = draw(rng, kGrid / 10, kGrid * 9 / 10);
        std::int64_t b = draw(rng, kGrid / 10, kGrid * 9 / 10);
        std::vector<PointRequirement> pts{{0, 2 * grid(a)}, {1, 2 * (1 - grid(b))}};
        std::set<std::int64_t> used{0, kGrid};
        fill_feasible(rng, pts, used, a, b, n);
        if (pts.size() != n) continue;
        Instance inst(std::move(pts));
        if (!classify(inst).s00.empty()) continue;
        if (theorem1_check(inst).report.verdict != Verdict::FeasibleWithSchedule) continue;
        return inst;
    }
    throw Error(ErrorKind::BadArgument, "could not sample a feasible S00-free instance");
}

PlantedViolation gen_theorem1_violating(std::uint64_t seed, std::size_t n, int condition) {
    if (n < 3) throw Error(ErrorKind::BadArgument, "n must be at least 3");
    if (condition == 2) {
        PlantedViolation v = gen_theorem1_violating(seed, n, 1);
        std::size_t mirrored_index = v.instance.size() - 1 - v.index;
        return {mirror(v.instance), 2, mirrored_index};
    }
    if (condition != 1 && condition != 3) throw Error(ErrorKind::BadArgument, "condition must be 1, 2 or 3");

    Lcg64 rng(seed ^ (static_cast<std::uint64_t>(condition) << 56));
    for (int attempt = 0; attempt < 1000; ++attempt) {
        std::int64_t a, b, planted;
        Rational planted_idleness;
        if (condition == 3) {
            // Gap (a, b) with one S11 point inside it.
            a = draw(rng, kGrid / 10, kGrid / 2);
            b = draw(rng, a + 2, kGrid * 9 / 10);
            planted = draw(rng, a + 1, b - 1);
            Rational y = grid(planted);
            planted_idleness = 2 * rmax(y, Rational(1 - y)) + grid(draw(rng, 0, 6));
        } else {
            // An S10 point right of X10 = [0, a] but inside X01 = [b, 1].
            a = draw(rng, kGrid / 10, kGrid * 2 / 5);
            planted = draw(rng, a + 1, kGrid / 2 - 1);
            b = draw(rng, kGrid / 20, planted);
            Rational y = grid(planted);
            std::int64_t r = draw(rng, 2 * planted, kGrid - 1);
            planted_idleness = 2 * (grid(r) - y);
        }
        std::vector<PointRequirement> pts{{0, 2 * grid(a)}, {1, 2 * (1 - grid(b))}, {grid(planted), planted_idleness}};
        std::set<std::int64_t> used{0, kGrid, planted};
        fill_feasible(rng, pts, used, a, b, n);
        if (pts.size() != n) continue;
        Instance inst(std::move(pts));
        if (!classify(inst).s00.empty()) continue;
        auto rep = theorem1_check(inst).report;
        int failures = 0;
        for (const auto& c : rep.conditions) failures += c.status == CheckStatus::Fail;
        if (failures != 1) continue;
        std::size_t index = 0;
        while (inst[index].position != grid(planted)) ++index;
        return {std::move(inst), condition, index};
    }
    throw Error(ErrorKind::BadArgument, "could not plant a partition-condition violation");
}

}  // namespace patrol
