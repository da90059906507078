#include "solflow/fundgroup.hpp"

#include <cmath>
#include <deque>
#include <stdexcept>
#include <unordered_set>

namespace solflow {

namespace {

struct ElementHash {
    std::size_t operator()(const GroupElement& g) const {
        // splitmix64-style mixing of the three components
        auto mix = [](std::uint64_t x) {
            x += 0x9e3779b97f4a7c15ull;
            x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
            x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
            return x ^ (x >> 31);
        };
        std::uint64_t h = mix((std::uint64_t)g.vx);
        h = mix(h ^ (std::uint64_t)g.vy);
        h = mix(h ^ (std::uint64_t)g.n);
        return (std::size_t)h;
    }
};

// C^n w, exact; n applied by repeated multiplication (|n| is a word length
// in practice, so this stays cheap).
void applyPower(const IMat2& c, const IMat2& cInv, long long n, long long& wx, long long& wy) {
    const IMat2& m = n >= 0 ? c : cInv;
    for (long long i = 0; i < (n >= 0 ? n : -n); ++i) {
        const long long nx = checkedMulAdd(m.a, wx, m.b, wy);
        const long long ny = checkedMulAdd(m.c, wx, m.d, wy);
        wx = nx;
        wy = ny;
    }
}

long long checkedAdd(long long a, long long b) {
    long long r;
    if (__builtin_add_overflow(a, b, &r))
        throw std::range_error("integer overflow in group multiplication");
    return r;
}

}  // namespace

GroupElement multiply(const GroupElement& g, const GroupElement& h, const GluingMatrix& c) {
    long long wx = h.vx, wy = h.vy;
    applyPower(c.entries(), c.entries().unimodularInverse(), g.n, wx, wy);
    return {checkedAdd(g.vx, wx), checkedAdd(g.vy, wy), checkedAdd(g.n, h.n)};
}

GroupElement inverse(const GroupElement& g, const GluingMatrix& c) {
    long long wx = -g.vx, wy = -g.vy;
    applyPower(c.entries(), c.entries().unimodularInverse(), -g.n, wx, wy);
    return {wx, wy, -g.n};
}

GrowthTable growthFunction(const GluingMatrix& c, int maxRadius, std::size_t elementCap) {
    if (maxRadius < 0 || maxRadius > 16)
        throw std::invalid_argument("maxRadius must lie in [0, 16]");

    const GroupElement gens[6] = {genA(), inverse(genA(), c), genB(), inverse(genB(), c),
                                  genC(), inverse(genC(), c)};

    std::unordered_set<GroupElement, ElementHash> visited;
    std::vector<GroupElement> frontier{identityElement()};
    visited.insert(identityElement());

    GrowthTable table;
    table.radii.push_back(0);
    table.counts.push_back(1);

    for (int r = 1; r <= maxRadius; ++r) {
        std::vector<GroupElement> next;
        for (const GroupElement& g : frontier) {
            for (const GroupElement& s : gens) {
                GroupElement h;
                try {
                    h = multiply(g, s, c);
                } catch (const std::range_error&) {
                    throw std::range_error("integer overflow in BFS at radius " +
                                           std::to_string(r));
                }
                if (visited.insert(h).second) {
                    next.push_back(h);
                    if (visited.size() > elementCap) {
                        table.truncated = true;
                        return table;
                    }
                }
            }
        }
        frontier = std::move(next);
        table.radii.push_back(r);
        table.counts.push_back((long long)visited.size());
    }
    return table;
}

CertificateResult certificateWords(const GluingMatrix& c, int k) {
    if (k < 0 || k > 20) throw std::invalid_argument("k must lie in [0, 20]");

    CertificateResult res;
    std::unordered_set<GroupElement, ElementHash> seen;
    const GroupElement a = genA(), cc = genC();
    for (std::uint64_t mask = 0; mask < (1ull << k); ++mask) {
        GroupElement w = identityElement();
        for (int i = 0; i < k; ++i) {
            w = multiply(w, cc, c);
            if (mask >> i & 1) w = multiply(w, a, c);
        }
        if (!seen.insert(w).second) ++res.collisions;
        res.words.push_back(w);
    }
    return res;
}

double growthRate(const GrowthTable& t) {
    const std::size_t n = t.counts.size();
    if (n < 6) throw std::invalid_argument("growth table needs at least 6 radii");

    const std::size_t lo = n / 2;
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    const double m = double(n - lo);
    for (std::size_t i = lo; i < n; ++i) {
        const double x = double(t.radii[i]);
        const double y = std::log(double(t.counts[i]));
        sx += x;
        sy += y;
        sxx += x * x;
        sxy += x * y;
    }
    const double denom = m * sxx - sx * sx;
    return denom == 0.0 ? 0.0 : (m * sxy - sx * sy) / denom;
}

}  // namespace solflow
