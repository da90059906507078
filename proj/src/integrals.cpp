#include "solflow/integrals.hpp"

#include <cmath>
#include <stdexcept>

namespace solflow {

namespace {
constexpr double kTwoPi = 6.28318530717958648;
const double kLogLambda = std::log(kCatEigenvalue);
}  // namespace

void BracketConfig::validate() const {
    if (!(fdStep > 0.0 && fdStep < 1e-2))
        throw std::invalid_argument("fdStep must lie in (0, 1e-2)");
    if (!(tolerance > 0.0))
        throw std::invalid_argument("tolerance must be positive");
}

double evalI1(double px, double py) { return px * px - px * py - py * py; }

double evalI2(double px, double py, double angularFactor) {
    const double i1 = evalI1(px, py);
    const double u = px - kGoldenRatio * py;
    if (i1 == 0.0 || u == 0.0) return 0.0;
    const double flat = std::exp(-1.0 / (i1 * i1));
    return flat * std::sin(angularFactor * std::log(std::fabs(u)) / kLogLambda);
}

long double evalI2Ext(long double px, long double py) {
    const long double i1 = px * px - px * py - py * py;
    const long double u = px - (long double)kGoldenRatio * py;
    if (i1 == 0.0L || u == 0.0L) return 0.0L;
    const long double flat = std::exp(-1.0L / (i1 * i1));
    return flat * std::sin((long double)kTwoPi * std::log(std::fabs(u)) /
                           (long double)kLogLambda);
}

IntegralValues evalAll(const CoverState& s, const MetricFamily& m) {
    const double h = hamiltonian(s, m);
    return {s.px, s.py, h, evalI1(s.px, s.py), evalI2(s.px, s.py), h};
}

namespace {

double partial(const StateFunction& f, CoverState s, int idx, double h) {
    double* fields[6] = {&s.x, &s.y, &s.z, &s.px, &s.py, &s.pz};
    const double base = *fields[idx];
    *fields[idx] = base + h;
    const double fp = f(s);
    *fields[idx] = base - h;
    const double fm = f(s);
    return (fp - fm) / (2.0 * h);
}

}  // namespace

double poissonBracket(const StateFunction& f, const StateFunction& g,
                      const CoverState& s, const BracketConfig& cfg) {
    cfg.validate();
    double sum = 0.0;
    for (int j = 0; j < 3; ++j) {
        sum += partial(f, s, j, cfg.fdStep) * partial(g, s, j + 3, cfg.fdStep) -
               partial(f, s, j + 3, cfg.fdStep) * partial(g, s, j, cfg.fdStep);
    }
    return sum;
}

int independenceRank(const CoverState& s, const MetricFamily& m,
                     const BracketConfig& cfg) {
    cfg.validate();
    const double h = cfg.fdStep;
    const long double hExt = 1e-8L;

    long double rows[3][6] = {};
    const double fields[6] = {s.x, s.y, s.z, s.px, s.py, s.pz};

    for (int i = 0; i < 6; ++i) {
        CoverState sp = s, sm = s;
        double* fp[6] = {&sp.x, &sp.y, &sp.z, &sp.px, &sp.py, &sp.pz};
        double* fm[6] = {&sm.x, &sm.y, &sm.z, &sm.px, &sm.py, &sm.pz};
        *fp[i] = fields[i] + h;
        *fm[i] = fields[i] - h;
        rows[0][i] = (evalI1(sp.px, sp.py) - evalI1(sm.px, sm.py)) / (2.0 * h);
        rows[2][i] = (hamiltonian(sp, m) - hamiltonian(sm, m)) / (2.0 * h);
    }
    // I2 row: long double, small step; the flat factor makes the row tiny but
    // directionally meaningful down to |I1| ~ 0.01.
    for (int i = 3; i < 5; ++i) {
        long double pp[2] = {s.px, s.py}, pm[2] = {s.px, s.py};
        pp[i - 3] += hExt;
        pm[i - 3] -= hExt;
        rows[1][i] = (evalI2Ext(pp[0], pp[1]) - evalI2Ext(pm[0], pm[1])) / (2.0L * hExt);
    }

    // Scale each row by its max entry before normalizing: the squared norm of
    // the raw I2 row can underflow even in long double.
    double jac[3][6] = {};
    for (int r = 0; r < 3; ++r) {
        long double mx = 0.0L;
        for (int i = 0; i < 6; ++i) mx = std::max(mx, std::fabs(rows[r][i]));
        if (mx == 0.0L) continue;
        long double norm2 = 0.0L;
        for (int i = 0; i < 6; ++i) {
            const long double v = rows[r][i] / mx;
            norm2 += v * v;
        }
        const long double norm = std::sqrt(norm2);
        for (int i = 0; i < 6; ++i) jac[r][i] = double(rows[r][i] / mx / norm);
    }

    std::array<std::array<double, 3>, 3> gram{};
    for (int r = 0; r < 3; ++r)
        for (int c = 0; c < 3; ++c)
            for (int i = 0; i < 6; ++i) gram[r][c] += jac[r][i] * jac[c][i];

    const auto eig = symEigenvalues3(gram);
    int rank = 0;
    for (double e : eig)
        if (std::sqrt(std::max(e, 0.0)) > 1e-8) ++rank;
    return rank;
}

QuotientInvariants invariantPair(const GluingMatrix& c, double angularFactor) {
    const IMat2& e = c.entries();

    if (c.isHyperbolic()) {
        if (e.b != 0) {
            // Roots of  c12 r^2 - (c11 - c22) r - c21 = 0  give the
            // eigenfunctionals l(p) = px - r py; their product is the
            // invariant quadratic form (for A exactly px^2 - px py - py^2).
            const double sum = double(e.a - e.d) / double(e.b);
            const double prod = double(-e.c) / double(e.b);
            const double disc = std::sqrt(sum * sum - 4.0 * prod);
            const double r1 = 0.5 * (sum + disc);
            const double r2 = 0.5 * (sum - disc);
            // Pick the root whose eigenfunctional scales by lambda > 1 under
            // the momentum action, i.e. the C-eigenvalue c11 - c12 r is the
            // small one.
            const double rUnstable =
                std::fabs(double(e.a) - double(e.b) * r1) <
                        std::fabs(double(e.a) - double(e.b) * r2)
                    ? r1
                    : r2;
            const double logLambda = std::log(c.spectralRadius());
            auto first = [sum, prod](double px, double py) {
                return px * px - sum * px * py + prod * py * py;
            };
            auto second = [first, rUnstable, logLambda, angularFactor](double px, double py) {
                const double i1 = first(px, py);
                const double u = px - rUnstable * py;
                if (i1 == 0.0 || u == 0.0) return 0.0;
                return std::exp(-1.0 / (i1 * i1)) *
                       std::sin(angularFactor * std::log(std::fabs(u)) / logLambda);
            };
            return {first, second, "hyperbolic eigenfunctional pair"};
        }
        // Hyperbolic with c12 = 0 cannot be unimodular with a real log.
        throw std::domain_error("unsupported hyperbolic gluing matrix shape");
    }

    if (c.isUnipotent()) {
        // C = I + N, N^2 = 0. A functional w with N w = 0 is fixed by the
        // momentum action C^-T = I - N^T; a complementary functional m with
        // N m = kappa w shifts by -kappa * (w . p), so m(p)/(kappa w(p))
        // drops by exactly 1.
        const double n11 = double(e.a - 1), n12 = double(e.b);
        const double n21 = double(e.c), n22 = double(e.d - 1);
        double wx, wy;
        if (n11 != 0.0 || n12 != 0.0) {
            wx = n12;
            wy = -n11;
        } else {
            wx = n22;
            wy = -n21;
        }
        if (wx == 0.0 && wy == 0.0) {
            // C = I: deck acts trivially on momenta.
            return {[](double px, double) { return px; },
                    [](double, double py) { return py; },
                    "identity gluing (momenta fixed)"};
        }
        // m complementary to w, kappa from N m = kappa w.
        const double mx = -wy, my = wx;
        const double nmx = n11 * mx + n12 * my;
        const double nmy = n21 * mx + n22 * my;
        const double kappa = std::fabs(wx) > std::fabs(wy) ? nmx / wx : nmy / wy;
        auto first = [wx, wy](double px, double py) { return wx * px + wy * py; };
        auto second = [first, mx, my, kappa, angularFactor](double px, double py) {
            const double j1 = first(px, py);
            if (j1 == 0.0) return 0.0;
            return std::exp(-1.0 / (j1 * j1)) *
                   std::sin(angularFactor * (mx * px + my * py) / (kappa * j1));
        };
        return {first, second, "unipotent substitute pair"};
    }

    // Remaining admissible case is C = I handled above; eigenvalue 1 with
    // trace != 2 does not occur for unimodular matrices with a real log.
    return {[](double px, double) { return px; },
            [](double, double py) { return py; },
            "trivial pair"};
}

}  // namespace solflow
