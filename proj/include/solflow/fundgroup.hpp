#pragma once

#include <cstdint>
#include <vector>

#include "solflow/metric.hpp"

namespace solflow {

/// Element (v, n) of Z^2 x| Z with multiplication
/// (v, n) (w, m) = (v + C^n w, n + m). Exact integer arithmetic; component
/// overflow raises std::range_error.
struct GroupElement {
    long long vx = 0;
    long long vy = 0;
    long long n = 0;

    bool operator==(const GroupElement&) const = default;
};

inline GroupElement identityElement() { return {}; }

// Generators a = ((1,0),0), b = ((0,1),0), c = ((0,0),1).
inline GroupElement genA() { return {1, 0, 0}; }
inline GroupElement genB() { return {0, 1, 0}; }
inline GroupElement genC() { return {0, 0, 1}; }

GroupElement multiply(const GroupElement& g, const GroupElement& h, const GluingMatrix& c);
GroupElement inverse(const GroupElement& g, const GluingMatrix& c);

/// Ball counts gamma(k) = #{elements of word length <= k} in generators
/// a, b, c and their inverses.
struct GrowthTable {
    std::vector<long long> radii;
    std::vector<long long> counts;
    bool truncated = false;  // memory cap hit; table is a partial prefix
};

/// BFS over the Cayley graph up to maxRadius (<= 16). Stops early with a
/// partial table when the visited-set cap is exceeded.
GrowthTable growthFunction(const GluingMatrix& c, int maxRadius,
                           std::size_t elementCap = 8'000'000);

/// The 2^k words c a^{e1} c a^{e2} ... c a^{ek}, e in {0,1}; pairwise
/// distinct for hyperbolic matrices. collisions counts duplicate values.
struct CertificateResult {
    std::vector<GroupElement> words;
    long long collisions = 0;
};

CertificateResult certificateWords(const GluingMatrix& c, int k);

/// Least-squares slope of log gamma(k) against k over the upper half of the
/// table; a positive value certifies exponential growth empirically.
double growthRate(const GrowthTable& t);

}  // namespace solflow
