#pragma once

#include "patrol/instance.h"
#include "patrol/trajectory.h"

#include <cstdint>
#include <optional>
#include <random>

namespace patrol {

/// Portable pseudo-random source for instance generation:
///   state' = 6364136223846793005 * state + 1442695040888963407  (mod 2^64)
/// seeded with the seed itself. A draw in [0, n) is (state' >> 32) mod n.
using Lcg64 = std::linear_congruential_engine<std::uint64_t, 6364136223846793005ULL,
                                              1442695040888963407ULL, 0ULL>;

/// Integer uniformly drawn from [lo, hi] by the documented rule above.
std::int64_t draw(Lcg64& rng, std::int64_t lo, std::int64_t hi);

/// Grid on which random instances place their positions.
inline constexpr std::int64_t kGrid = 720;

struct GeneratorParams {
    Rational alpha = 1;
    std::optional<Rational> epsilon;
    std::uint64_t seed = 1;
    std::size_t n = 5;
};

/// Three-point instance on which the two-zigzag schedule is exactly
/// (1 + 2 alpha)-approximate.
Instance gen_tight_alg1(const Rational& alpha);

/// The feasible schedule for gen_tight_alg1: each robot pauses 2 x1 at the
/// middle point.
SchedulePair witness_tight_alg1(const Rational& alpha);

/// Four-point instance on which the coordinated schedule reaches its bound.
/// alpha < 1 uses the first family (epsilon ignored); alpha >= 1 needs
/// 0 < epsilon < x1 and throws BadEpsilon otherwise.
Instance gen_tight_alg2(const Rational& alpha, const std::optional<Rational>& epsilon = std::nullopt);

/// Coordinated witness schedule for gen_tight_alg2. For alpha >= 1 only
/// alpha == 1 yields a feasible schedule: for alpha > 1 the instance itself
/// violates the idleness lower bound at 0.
SchedulePair witness_tight_alg2(const Rational& alpha, const std::optional<Rational>& epsilon = std::nullopt);

/// x1 of the tight families.
Rational tight_alg1_x1(const Rational& alpha);
Rational tight_alg2_x1(const Rational& alpha);

/// Random instance satisfying every necessary condition, with S00 != {}.
/// Deterministic in (seed, n); n >= 3.
Instance gen_admissible_random(std::uint64_t seed, std::size_t n);

/// Sampled x1/x4 of gen_admissible_random (before any normalization).
struct AdmissibleSample {
    Instance instance;
    Rational x1;
    Rational x4;
};
AdmissibleSample gen_admissible_sample(std::uint64_t seed, std::size_t n);

/// Random S00-free instance satisfying all partition conditions.
Instance gen_theorem1_feasible(std::uint64_t seed, std::size_t n);

struct PlantedViolation {
    Instance instance;
    int condition = 0;  // 1, 2 or 3
    std::size_t index = 0;  // the only point violating it
};

/// Random S00-free instance violating exactly the given partition
/// condition, through a single planted point.
PlantedViolation gen_theorem1_violating(std::uint64_t seed, std::size_t n, int condition);

}  // namespace patrol
