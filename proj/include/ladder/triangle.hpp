//
//  triangle.hpp
//  ladder
//
//  Ellipses inscribed in the right triangle with vertices (0,0), (u,0), (0,v).
//
//  Every such ellipse is described by a pair (w, t) in the open unit square:
//  it touches the floor at (u·t, 0), the wall at (0, v·w), and the hypotenuse
//  at one further point. Its center ranges over the interior of the medial
//  triangle, and (w, t) <-> center is a bijection.
//

#ifndef ladder_triangle_hpp
#define ladder_triangle_hpp

#include <cassert>
#include <cmath>
#include <stdexcept>
#include <string>

#include "ladder/conic.hpp"

namespace ladder {

class TriangleLegs {
public:
    TriangleLegs(double u, double v) : u_(u), v_(v) {
        if (!std::isfinite(u) || !(u > 0.0))
            throw std::invalid_argument("leg u must be positive and finite");
        if (!std::isfinite(v) || !(v > 0.0))
            throw std::invalid_argument("leg v must be positive and finite");
    }

    double u() const noexcept { return u_; }
    double v() const noexcept { return v_; }

private:
    double u_;
    double v_;
};

class InscriptionParams {
public:
    InscriptionParams(TriangleLegs legs, double w, double t) : legs_(legs), w_(w), t_(t) {
        if (!(w > 0.0 && w < 1.0))
            throw std::invalid_argument("w must lie in the open interval (0,1)");
        if (!(t > 0.0 && t < 1.0))
            throw std::invalid_argument("t must lie in the open interval (0,1)");
        assert(w + t - 2.0 * w * t > 0.0);
    }

    const TriangleLegs& legs() const noexcept { return legs_; }
    double u() const noexcept { return legs_.u(); }
    double v() const noexcept { return legs_.v(); }
    double w() const noexcept { return w_; }
    double t() const noexcept { return t_; }

private:
    TriangleLegs legs_;
    double w_;
    double t_;
};

struct ParamPair {
    double w = 0.0;
    double t = 0.0;
};

/// Points where the inscribed ellipse touches the floor, the wall and the
/// hypotenuse.
struct Tangencies {
    Point t1;
    Point t2;
    Point t3;
};

/// Which of the strict medial-triangle inequalities
///     0 < x < u/2,   v/2 − (v/u)·x < y < v/2
/// a point violates.
enum class MedialViolation {
    x_not_positive,
    x_not_below_half_u,
    y_not_below_half_v,
    y_not_above_midline,
};

inline const char* to_string(MedialViolation m) noexcept {
    switch (m) {
    case MedialViolation::x_not_positive:
        return "x > 0 violated";
    case MedialViolation::x_not_below_half_u:
        return "x < u/2 violated";
    case MedialViolation::y_not_below_half_v:
        return "y < v/2 violated";
    case MedialViolation::y_not_above_midline:
        return "y > v/2 - (v/u)x violated";
    }
    return "unknown";
}

class OutsideMedialTriangle : public std::domain_error {
public:
    explicit OutsideMedialTriangle(MedialViolation which)
        : std::domain_error(std::string("center outside medial triangle: ") + to_string(which)),
          which_(which) {}

    MedialViolation which() const noexcept { return which_; }

private:
    MedialViolation which_;
};

inline Point center_from_params(const InscriptionParams& p) noexcept {
    const double w = p.w();
    const double t = p.t();
    const double den = w + (1.0 - w) * t;
    return {0.5 * t * p.u() / den, 0.5 * w * p.v() / den};
}

/// Inverse of center_from_params.
inline ParamPair params_from_center(const TriangleLegs& legs, Point center) {
    const double u = legs.u();
    const double v = legs.v();
    const double x = center.x;
    const double y = center.y;
    if (!(x > 0.0))
        throw OutsideMedialTriangle(MedialViolation::x_not_positive);
    if (!(x < 0.5 * u))
        throw OutsideMedialTriangle(MedialViolation::x_not_below_half_u);
    if (!(y < 0.5 * v))
        throw OutsideMedialTriangle(MedialViolation::y_not_below_half_v);
    if (!(y > 0.5 * v - (v / u) * x))
        throw OutsideMedialTriangle(MedialViolation::y_not_above_midline);
    const double num = 2.0 * u * y + 2.0 * v * x - u * v;
    return {num / (2.0 * x * v), num / (2.0 * u * y)};
}

/// The inscribed ellipse for (w, t), with the coefficient scale kept as is:
///     (vw)²x² + (ut)²y² + 2wt(2w+2t−2wt−1)uv·xy − 2ut(vw)²x − 2wv(ut)²y + (uvwt)² = 0
inline ConicCoeffs inscribed_conic(const InscriptionParams& p) noexcept {
    const double u = p.u();
    const double v = p.v();
    const double w = p.w();
    const double t = p.t();
    const double vw = v * w;
    const double ut = u * t;
    return {vw * vw,
            ut * ut,
            w * t * (2.0 * w + 2.0 * t - 2.0 * w * t - 1.0) * u * v,
            -ut * vw * vw,
            -vw * ut * ut,
            (ut * vw) * (ut * vw)};
}

inline Tangencies tangency_points(const InscriptionParams& p) noexcept {
    const double u = p.u();
    const double v = p.v();
    const double w = p.w();
    const double t = p.t();
    const double den = w + t - 2.0 * w * t;
    return {{u * t, 0.0}, {0.0, v * w}, {u * t * (1.0 - w) / den, v * w * (1.0 - t) / den}};
}

/// True for a real, non-degenerate ellipse. With A=a, B=b, C=cxy, D=2dx,
/// E=2ey, F=f this is AB − C² > 0 and AE² + BD² + 4FC² − 2CDE − 4ABF > 0.
inline bool is_nondegenerate_ellipse(const ConicCoeffs& k) noexcept {
    const double A = k.a;
    const double B = k.b;
    const double C = k.cxy;
    const double D = 2.0 * k.dx;
    const double E = 2.0 * k.ey;
    const double F = k.f;
    return A * B - C * C > 0.0 &&
           A * E * E + B * D * D + 4.0 * F * C * C - 2.0 * C * D * E - 4.0 * A * B * F > 0.0;
}

/// dy/dx of the conic at p by implicit differentiation. Infinite where the
/// tangent is vertical.
inline double implicit_slope(const ConicCoeffs& k, Point p) noexcept {
    const Gradient g = gradient(k, p);
    return -g.x / g.y;
}

} // namespace ladder

#endif /* ladder_triangle_hpp */
