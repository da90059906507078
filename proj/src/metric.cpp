#include "solflow/metric.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace solflow {

namespace {

Mat2 computeRealLog(const IMat2& m, std::array<double, 2>& eigsOut, bool& hyperbolicOut) {
    const long long tr = m.trace();
    const long long det = m.det();
    const long long disc = tr * tr - 4 * det;
    const Mat2 c = m.toReal();

    if (disc < 0) {
        const double re = 0.5 * double(tr);
        const double im = 0.5 * std::sqrt(double(-disc));
        std::ostringstream msg;
        msg << "gluing matrix has complex eigenvalues " << re << " +/- " << im
            << "i and therefore no real logarithm";
        throw std::domain_error(msg.str());
    }

    const double s = std::sqrt(double(disc));
    const double l1 = 0.5 * (double(tr) + s);
    const double l2 = 0.5 * (double(tr) - s);
    if (l1 <= 0.0 || l2 <= 0.0) {
        std::ostringstream msg;
        msg << "gluing matrix has non-positive eigenvalues " << l1 << ", " << l2
            << " and therefore no real logarithm";
        throw std::domain_error(msg.str());
    }
    eigsOut = {l2, l1};
    hyperbolicOut = disc > 0;

    if (disc == 0) {
        // Repeated eigenvalue lambda > 0: C = lambda (I + N/lambda), N^2 = 0.
        const double lambda = 0.5 * double(tr);
        const Mat2 n = c - lambda * Mat2::identity();
        return std::log(lambda) * Mat2::identity() + (1.0 / lambda) * n;
    }

    // Distinct eigenvalues: spectral projectors P1 = (C - l2 I)/(l1 - l2), etc.
    const Mat2 p1 = (1.0 / (l1 - l2)) * (c - l2 * Mat2::identity());
    const Mat2 p2 = (1.0 / (l2 - l1)) * (c - l1 * Mat2::identity());
    return std::log(l1) * p1 + std::log(l2) * p2;
}

}  // namespace

GluingMatrix::GluingMatrix(const IMat2& entries) : entries_(entries), det_(entries.det()) {
    if (det_ != 1 && det_ != -1)
        throw std::invalid_argument("gluing matrix must be unimodular, det = " +
                                    std::to_string(det_));
    logMatrix_ = computeRealLog(entries_, eigenvalues_, hyperbolic_);
}

GluingMatrix GluingMatrix::parse(const std::string& spec) {
    std::array<long long, 4> e{};
    std::istringstream in(spec);
    for (int i = 0; i < 4; ++i) {
        if (!(in >> e[i]))
            throw std::invalid_argument("expected four comma-separated integers, got \"" +
                                        spec + "\"");
        if (i < 3) {
            char sep = 0;
            if (!(in >> sep) || sep != ',')
                throw std::invalid_argument("expected four comma-separated integers, got \"" +
                                            spec + "\"");
        }
    }
    return GluingMatrix(IMat2{e[0], e[1], e[2], e[3]});
}

double GluingMatrix::spectralRadius() const {
    return std::max(std::fabs(eigenvalues_[0]), std::fabs(eigenvalues_[1]));
}

Vec2 GluingMatrix::applySpatial(Vec2 xy, long long k) const {
    return ipow(entries_, k).toReal() * xy;
}

Vec2 GluingMatrix::applyMomentum(Vec2 p, long long k) const {
    return ipow(entries_.unimodularInverse().transposed(), k).toReal() * p;
}

Mat2 realLog(const GluingMatrix& c) { return c.logMatrix(); }

double deckInvarianceDefect(const MetricFamily& m, const GluingMatrix& c, double z) {
    const Mat2 ct = c.entries().toReal().transposed();
    const Mat2 defect = ct * m.metricAt(z + 1.0) * c.entries().toReal() - m.metricAt(z);
    return maxAbs(defect);
}

}  // namespace solflow
