//
//  solver.hpp
//  ladder
//
//  Ladder positions touching an axis-tangent ellipse.
//
//  A ladder from (u, 0) to (0, v) touching the ellipse makes the ellipse an
//  inscribed ellipse of that triangle with c = u·t, d = v·w and
//  w + t − wt = j, where j = ½(1 + cross/(cd)). Eliminating w leaves the squared
//  ladder length as a function of t alone,
//
//      f(t) = c²/t² + d²(1−t)²/(j−t)²,    0 < t < j,
//
//  which decreases to a single minimum at t0 and then increases. Hence the
//  critical length s0 = √f(t0): no ladder shorter than s0 touches the ellipse,
//  exactly one of length s0 does, and two of every longer length do.
//
//  "height" is the y-intercept v, where the ladder leans on the wall.
//

#ifndef ladder_solver_hpp
#define ladder_solver_hpp

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <utility>
#include <vector>

#include "ladder/bisect.hpp"
#include "ladder/conic.hpp"
#include "ladder/triangle.hpp"

namespace ladder {

/// |s − s0| at or below this, relative to max(s0, 1), is a double root.
inline constexpr double kDoubleRootTolerance = 1e-9;
/// Bisection stops once the bracket is narrower than this times the distance
/// from the bracket to the nearer pole of f (at 0 or j).
inline constexpr double kBisectionWidth = 1e-14;
/// Brackets start this far (times j) inside the poles of f at 0 and j.
inline constexpr double kPoleGuard = 1e-13;

class LadderProblem {
public:
    LadderProblem(TangentEllipse ellipse, double s) : ellipse_(ellipse), s_(s) {
        if (!std::isfinite(s) || !(s > 0.0))
            throw std::invalid_argument("ladder length s must be positive and finite");
    }

    const TangentEllipse& ellipse() const noexcept { return ellipse_; }
    double s() const noexcept { return s_; }

private:
    TangentEllipse ellipse_;
    double s_;
};

struct ReducedForm {
    double c = 0.0;
    double d = 0.0;
    double j = 0.0;
};

struct LadderSolution {
    double t = 0.0;
    double w = 0.0;
    double u = 0.0;
    double v = 0.0;
    Point tangency;
    double height = 0.0;
    int multiplicity = 1;
};

struct CriticalInfo {
    double t0 = 0.0;
    double s0 = 0.0;
};

struct Quadratic {
    double a = 0.0;
    double b = 0.0;
    double c = 0.0;

    double operator()(double t) const noexcept { return (a * t + b) * t + c; }
};

/// q4·t⁴ + q3·t³ + q2·t² + q1·t + q0.
struct Quartic {
    double q4 = 0.0;
    double q3 = 0.0;
    double q2 = 0.0;
    double q1 = 0.0;
    double q0 = 0.0;

    double operator()(double t) const noexcept {
        return (((q4 * t + q3) * t + q2) * t + q1) * t + q0;
    }

    /// Descending order.
    std::array<double, 5> coefficients() const noexcept { return {q4, q3, q2, q1, q0}; }

    Quartic scaled(double k) const noexcept { return {k * q4, k * q3, k * q2, k * q1, k * q0}; }
};

inline Quartic multiply(const Quadratic& p, const Quadratic& q) noexcept {
    return {p.a * q.a,
            p.a * q.b + p.b * q.a,
            p.a * q.c + p.b * q.b + p.c * q.a,
            p.b * q.c + p.c * q.b,
            p.c * q.c};
}

class DegenerateFactor : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

inline ReducedForm reduce(const TangentEllipse& e) noexcept {
    const double cd = e.c() * e.d();
    return {e.c(), e.d(), 0.5 * (1.0 + e.cross() / cd)};
}

namespace detail {

inline void require_open_domain(const ReducedForm& r, double t) {
    if (!(t > 0.0 && t < r.j))
        throw std::domain_error("t must lie in the open interval (0, j)");
}

} // namespace detail

/// Squared ladder length for floor parameter t.
inline double eval_f(const ReducedForm& r, double t) {
    detail::require_open_domain(r, t);
    const double a = r.c / t;
    const double b = r.d * (1.0 - t) / (r.j - t);
    return a * a + b * b;
}

inline double eval_f_prime(const ReducedForm& r, double t) {
    detail::require_open_domain(r, t);
    const double jt = r.j - t;
    return -2.0 * (r.c * r.c / (t * t * t) - r.d * r.d * (1.0 - t) * (1.0 - r.j) / (jt * jt * jt));
}

/// f' = −2g with g strictly decreasing on (0, j), so the minimum of f is the
/// unique sign change of g.
inline CriticalInfo critical_point(const ReducedForm& r) {
    const auto g = [&r](double t) {
        const double jt = r.j - t;
        return r.c * r.c / (t * t * t) - r.d * r.d * (1.0 - t) * (1.0 - r.j) / (jt * jt * jt);
    };
    const double eps = kPoleGuard * r.j;
    const double t0 = bisect(g, eps, r.j - eps, kBisectionWidth * eps);
    return {t0, std::sqrt(eval_f(r, t0))};
}

/// Fills in a solution from t and gap = j − t; the gap is passed separately
/// so that w keeps its relative precision when t is close to j.
inline LadderSolution make_solution(const ReducedForm& r, double t, double gap, int multiplicity) {
    const double w = gap / ((1.0 - r.j) + gap);
    const double u = r.c / t;
    const double v = r.d / w;
    const Tangencies touch = tangency_points(InscriptionParams(TriangleLegs(u, v), w, t));
    return {t, w, u, v, touch.t3, v, multiplicity};
}

enum class SolutionCount { none, one, two };

inline SolutionCount classify(double s, const CriticalInfo& crit) noexcept {
    if (std::abs(s - crit.s0) <= kDoubleRootTolerance * std::max(crit.s0, 1.0))
        return SolutionCount::one;
    return s < crit.s0 ? SolutionCount::none : SolutionCount::two;
}

/// All admissible ladders of length s, sorted by t ascending (longest floor
/// leg first). crit must be critical_point(reduce(p.ellipse())).
inline std::vector<LadderSolution> solve(const LadderProblem& p, const CriticalInfo& crit) {
    const ReducedForm r = reduce(p.ellipse());
    switch (classify(p.s(), crit)) {
    case SolutionCount::none:
        return {};
    case SolutionCount::one:
        return {make_solution(r, crit.t0, r.j - crit.t0, 2)};
    case SolutionCount::two:
        break;
    }

    const double s2 = p.s() * p.s();
    const auto h = [&](double t) { return eval_f(r, t) - s2; };
    // Same function in terms of gap = j − t, for the branch next to the pole at j.
    const auto h_gap = [&](double gap) {
        const double a = r.c / (r.j - gap);
        const double b = r.d * ((1.0 - r.j) + gap) / gap;
        return a * a + b * b - s2;
    };

    // f blows up at both ends; only an absurdly long ladder needs the guard
    // points pushed closer to the poles.
    double lo = kPoleGuard * r.j;
    while (h(lo) <= 0.0) {
        lo *= 0.5;
        if (lo == 0.0)
            throw std::logic_error("solve: no sign change near t = 0");
    }
    double gap_lo = kPoleGuard * r.j;
    while (h_gap(gap_lo) <= 0.0) {
        gap_lo *= 0.5;
        if (gap_lo == 0.0)
            throw std::logic_error("solve: no sign change near t = j");
    }

    const double t_left = bisect(h, lo, crit.t0, kBisectionWidth * lo);
    const double gap_right = bisect(h_gap, gap_lo, r.j - crit.t0, kBisectionWidth * gap_lo);
    return {make_solution(r, t_left, r.j - t_left, 1),
            make_solution(r, r.j - gap_right, gap_right, 1)};
}

inline std::vector<LadderSolution> solve(const LadderProblem& p) {
    return solve(p, critical_point(reduce(p.ellipse())));
}

/// p_s(t) = (c² − s²t²)(j − t)² + d²t²(1 − t)² = (f(t) − s²)·t²(j − t)².
inline Quartic quartic_from(const LadderProblem& p) noexcept {
    const ReducedForm r = reduce(p.ellipse());
    const double c2 = r.c * r.c;
    const double d2 = r.d * r.d;
    const double s2 = p.s() * p.s();
    const double j = r.j;
    return {d2 - s2, 2.0 * s2 * j - 2.0 * d2, c2 + d2 - s2 * j * j, -2.0 * c2 * j, c2 * j * j};
}

/// For the circle (d = c, cross = 0) the quartic splits as −¼·q1·q2.
inline std::pair<Quadratic, Quadratic> circle_factorization(double c, double s) {
    if (!(c > 0.0) || !(s > 0.0))
        throw std::invalid_argument("c and s must be positive");
    if (s == c)
        throw DegenerateFactor("s = c makes the first factor linear");
    return {{2.0 * (s - c), -(s - 2.0 * c), -c}, {2.0 * (s + c), -(s + 2.0 * c), c}};
}

inline double circle_s0(double c) noexcept { return 2.0 * (std::numbers::sqrt2 + 1.0) * c; }

} // namespace ladder

#endif /* ladder_solver_hpp */
