#pragma once

#include <array>
#include <string>

#include "solflow/linalg.hpp"

namespace solflow {

/// Unimodular integer gluing matrix C together with its real logarithm G0
/// (exp(G0) = C) and eigenvalue data. Construction rejects matrices without
/// a real logarithm (negative or complex eigenvalues).
class GluingMatrix {
public:
    explicit GluingMatrix(const IMat2& entries);
    GluingMatrix(long long c11, long long c12, long long c21, long long c22)
        : GluingMatrix(IMat2{c11, c12, c21, c22}) {}

    // Parses "c11,c12,c21,c22" (row-major).
    static GluingMatrix parse(const std::string& spec);

    const IMat2& entries() const { return entries_; }
    long long det() const { return det_; }
    const Mat2& logMatrix() const { return logMatrix_; }
    std::array<double, 2> eigenvalues() const { return eigenvalues_; }
    double spectralRadius() const;
    bool isHyperbolic() const { return hyperbolic_; }
    bool isUnipotent() const { return !hyperbolic_ && entries_.trace() == 2; }

    // Exact k-th powers of the spatial action and of the induced momentum
    // action (C^-T)^k.
    Vec2 applySpatial(Vec2 xy, long long k = 1) const;
    Vec2 applyMomentum(Vec2 p, long long k = 1) const;

private:
    IMat2 entries_;
    long long det_ = 0;
    Mat2 logMatrix_;
    std::array<double, 2> eigenvalues_{};
    bool hyperbolic_ = false;
};

/// Real logarithm of an admissible gluing matrix. Closed-form 2x2
/// eigendecomposition for distinct positive eigenvalues, nilpotent branch
/// for repeated ones.
Mat2 realLog(const GluingMatrix& c);

/// The z-dependent fiber metric family G(z) = exp(-z G0^T) exp(-z G0)
/// together with its inverse and the z-derivative of the inverse.
/// Immutable and pure; safe for concurrent reads.
class MetricFamily {
public:
    explicit MetricFamily(const GluingMatrix& c)
        : g0_(c.logMatrix()), g0t_(c.logMatrix().transposed()) {}
    explicit MetricFamily(const Mat2& g0) : g0_(g0), g0t_(g0.transposed()) {}

    const Mat2& logMatrix() const { return g0_; }

    // G(z), symmetric positive definite, G(0) = I.
    Mat2 metricAt(double z) const {
        const Mat2 e = expm(-z * g0_);
        return e.transposed() * e;
    }

    // G^{-1}(z) = exp(z G0) exp(z G0^T).
    Mat2 coMetricAt(double z) const {
        const Mat2 e = expm(z * g0_);
        return e * e.transposed();
    }

    // d/dz G^{-1}(z) = G0 G^{-1} + G^{-1} G0^T.
    Mat2 dCoMetricAt(double z) const {
        const Mat2 gi = coMetricAt(z);
        const Mat2 h = g0_ * gi;
        return h + h.transposed();
    }

private:
    Mat2 g0_;
    Mat2 g0t_;
};

/// Max-norm of C^T G(z+1) C - G(z); zero exactly when the metric descends
/// to the quotient of the cylinder by the deck action.
double deckInvarianceDefect(const MetricFamily& m, const GluingMatrix& c, double z);

}  // namespace solflow
