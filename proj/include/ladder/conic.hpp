//
//  conic.hpp
//  ladder
//
//  Conic algebra for ellipses tangent to both positive coordinate axes.
//

#ifndef ladder_conic_hpp
#define ladder_conic_hpp

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>
#include <utility>

namespace ladder {

struct Point {
    double x = 0.0;
    double y = 0.0;
};

inline double distance(Point p, Point q) noexcept {
    return std::hypot(p.x - q.x, p.y - q.y);
}

class InvalidEllipse : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

class DegenerateLine : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

// The ellipse
//
//     d²x² + c²y² + 2·cross·xy − 2cd²x − 2c²dy + c²d² = 0
//
// touching the x-axis at (c, 0) and the y-axis at (0, d). It is a real
// ellipse exactly when c·d > |cross|.
class TangentEllipse {
public:
    TangentEllipse(double c, double d, double cross) : c_(c), d_(d), cross_(cross) {
        if (!std::isfinite(c) || !(c > 0.0))
            throw InvalidEllipse("c must be positive and finite");
        if (!std::isfinite(d) || !(d > 0.0))
            throw InvalidEllipse("d must be positive and finite");
        if (!std::isfinite(cross) || !(c * d > std::abs(cross)))
            throw InvalidEllipse("ellipse condition cd>|C| violated");
    }

    double c() const noexcept { return c_; }
    double d() const noexcept { return d_; }
    double cross() const noexcept { return cross_; }

    Point x_tangency() const noexcept { return {c_, 0.0}; }
    Point y_tangency() const noexcept { return {0.0, d_}; }

private:
    double c_;
    double d_;
    double cross_;
};

/// Coefficients of a·x² + b·y² + 2·cxy·xy + 2·dx·x + 2·ey·y + f = 0.
/// The cross and linear slots carry the factor of 2 written in the equation.
struct ConicCoeffs {
    double a = 0.0;
    double b = 0.0;
    double cxy = 0.0;
    double dx = 0.0;
    double ey = 0.0;
    double f = 0.0;

    ConicCoeffs scaled(double k) const noexcept {
        return {k * a, k * b, k * cxy, k * dx, k * ey, k * f};
    }
};

inline ConicCoeffs conic_from_tangent_ellipse(const TangentEllipse& e) noexcept {
    const double c = e.c();
    const double d = e.d();
    return {d * d, c * c, e.cross(), -c * d * d, -c * c * d, c * c * d * d};
}

inline double evaluate(const ConicCoeffs& k, Point p) noexcept {
    const double x = p.x;
    const double y = p.y;
    return k.a * x * x + k.b * y * y + 2.0 * k.cxy * x * y + 2.0 * k.dx * x +
           2.0 * k.ey * y + k.f;
}

/// Sum of the absolute values of the terms of evaluate(k, p); the natural
/// scale for judging how close evaluate(k, p) is to zero.
inline double term_magnitude(const ConicCoeffs& k, Point p) noexcept {
    const double x = std::abs(p.x);
    const double y = std::abs(p.y);
    return std::abs(k.a) * x * x + std::abs(k.b) * y * y + 2.0 * std::abs(k.cxy) * x * y +
           2.0 * std::abs(k.dx) * x + 2.0 * std::abs(k.ey) * y + std::abs(k.f);
}

struct Gradient {
    double x = 0.0;
    double y = 0.0;
};

inline Gradient gradient(const ConicCoeffs& k, Point p) noexcept {
    return {2.0 * (k.a * p.x + k.cxy * p.y + k.dx),
            2.0 * (k.b * p.y + k.cxy * p.x + k.ey)};
}

/// Point where the gradient vanishes. Requires a·b − cxy² ≠ 0.
inline Point conic_center(const ConicCoeffs& k) noexcept {
    const double det = k.a * k.b - k.cxy * k.cxy;
    return {(k.cxy * k.ey - k.b * k.dx) / det, (k.cxy * k.dx - k.a * k.ey) / det};
}

/// Discriminant of the quadratic obtained by restricting a conic to a line,
/// together with β² + 4|αγ|, the scale a caller should compare it against.
struct LineDiscriminant {
    double value = 0.0;
    double scale = 0.0;

    double relative() const noexcept { return scale > 0.0 ? value / scale : value; }
};

/// Restricts the conic to the line through (u, 0) and (0, v), i.e.
/// y = v(1 − x/u), and returns β² − 4αγ of the resulting αx² + βx + γ.
/// Negative: the line misses the conic. Zero: tangent. Positive: secant.
inline LineDiscriminant line_tangency_discriminant(const ConicCoeffs& k, double u, double v) {
    if (!(u > 0.0) || !(v > 0.0))
        throw std::invalid_argument("line intercepts must be positive");
    const double m = -v / u;
    const double alpha = k.a + k.b * m * m + 2.0 * k.cxy * m;
    const double beta = 2.0 * (k.b * v * m + k.cxy * v + k.dx + k.ey * m);
    const double gamma = k.b * v * v + 2.0 * k.ey * v + k.f;
    if (alpha == 0.0)
        throw DegenerateLine("line restriction of the conic is not quadratic");
    return {beta * beta - 4.0 * alpha * gamma, beta * beta + 4.0 * std::abs(alpha * gamma)};
}

namespace detail {

// Real roots of A·z² + B·z + C with A ≠ 0; a slightly negative discriminant
// from rounding is treated as a double root.
inline std::pair<double, double> quadratic_roots(double A, double B, double C) noexcept {
    const double disc = std::max(0.0, B * B - 4.0 * A * C);
    const double q = -0.5 * (B + std::copysign(std::sqrt(disc), B));
    if (q == 0.0)
        return {-B / (2.0 * A), -B / (2.0 * A)};
    return {q / A, C / q};
}

} // namespace detail

/// Points of the ellipse with a horizontal and a vertical tangent that are not
/// the axis tangency points. The open arc between them, away from the axes,
/// is where an admissible ladder can touch.
struct ExtremePoints {
    Point horizontal;
    Point vertical;
};

inline ExtremePoints extreme_tangent_points(const TangentEllipse& e) noexcept {
    const ConicCoeffs k = conic_from_tangent_ellipse(e);

    // G_x = 0  <=>  x = p·y + q
    const double p = -k.cxy / k.a;
    const double q = -k.dx / k.a;
    const auto [y1, y2] = detail::quadratic_roots(k.a * p * p + k.b + 2.0 * k.cxy * p,
                                                  2.0 * (k.a * p * q + k.cxy * q + k.dx * p + k.ey),
                                                  k.a * q * q + 2.0 * k.dx * q + k.f);
    const Point h1{p * y1 + q, y1};
    const Point h2{p * y2 + q, y2};
    const Point horizontal =
        distance(h1, e.x_tangency()) > distance(h2, e.x_tangency()) ? h1 : h2;

    // G_y = 0  <=>  y = r·x + s
    const double r = -k.cxy / k.b;
    const double s = -k.ey / k.b;
    const auto [x1, x2] = detail::quadratic_roots(k.b * r * r + k.a + 2.0 * k.cxy * r,
                                                  2.0 * (k.b * r * s + k.cxy * s + k.ey * r + k.dx),
                                                  k.b * s * s + 2.0 * k.ey * s + k.f);
    const Point v1{x1, r * x1 + s};
    const Point v2{x2, r * x2 + s};
    const Point vertical = distance(v1, e.y_tangency()) > distance(v2, e.y_tangency()) ? v1 : v2;

    return {horizontal, vertical};
}

} // namespace ladder

#endif /* ladder_conic_hpp */
