//
//  verify.hpp
//  ladder
//
//  Brute-force oracles for the solver. None of them relies on f having a
//  single minimum, so a mistake in the critical-point logic cannot confirm
//  itself.
//

#ifndef ladder_verify_hpp
#define ladder_verify_hpp

#include <algorithm>
#include <cmath>
#include <span>
#include <stdexcept>
#include <vector>

#include "ladder/bisect.hpp"
#include "ladder/conic.hpp"
#include "ladder/solver.hpp"

namespace ladder {

inline constexpr int kDefaultGridSize = 10000;

namespace detail {

inline bool sign_change(double a, double b) noexcept {
    return (a < 0.0 && b > 0.0) || (a > 0.0 && b < 0.0);
}

} // namespace detail

/// Roots of f(t) = s² on (0, j) from sign changes of f − s² sampled at
/// t = j·i/n, i = 1..n−1, plus one guard point 1e-13·j inside each pole.
/// A tangential (double) root produces no sign change and is not reported.
inline std::vector<double> grid_scan_solve(const ReducedForm& r, double s, int n = kDefaultGridSize) {
    if (n < 100)
        throw std::invalid_argument("grid_scan_solve: need at least 100 grid points");
    const double s2 = s * s;
    const auto h = [&](double t) { return eval_f(r, t) - s2; };

    std::vector<double> grid;
    grid.reserve(static_cast<std::size_t>(n) + 1);
    grid.push_back(kPoleGuard * r.j);
    for (int i = 1; i < n; ++i)
        grid.push_back(r.j * i / n);
    grid.push_back(r.j - kPoleGuard * r.j);

    std::vector<double> roots;
    double h_prev = h(grid.front());
    for (std::size_t i = 1; i < grid.size(); ++i) {
        const double h_cur = h(grid[i]);
        if (h_cur == 0.0)
            roots.push_back(grid[i]);
        else if (detail::sign_change(h_prev, h_cur))
            roots.push_back(bisect(h, grid[i - 1], grid[i], kBisectionWidth * r.j));
        h_prev = h_cur;
    }
    return roots;
}

namespace detail {

// Coefficients are stored in descending order.
inline double horner(std::span<const double> p, double t) noexcept {
    double acc = 0.0;
    for (double a : p)
        acc = acc * t + a;
    return acc;
}

inline std::vector<double> derivative(std::span<const double> p) {
    std::vector<double> dp;
    const std::size_t n = p.size() - 1;
    for (std::size_t i = 0; i < n; ++i)
        dp.push_back(p[i] * static_cast<double>(n - i));
    return dp;
}

// Real roots in (lo, hi). The roots of p' split the interval into pieces on
// which p is monotone; each piece holds at most one root, found by bisection.
inline std::vector<double> real_roots(std::span<const double> p, double lo, double hi) {
    while (!p.empty() && p.front() == 0.0)
        p = p.subspan(1);
    if (p.size() <= 1)
        return {};
    if (p.size() == 2) {
        const double r = -p[1] / p[0];
        if (r > lo && r < hi)
            return {r};
        return {};
    }

    const std::vector<double> dp = derivative(p);
    std::vector<double> knots{lo};
    for (double c : real_roots(dp, lo, hi))
        knots.push_back(c);
    knots.push_back(hi);

    const auto eval = [p](double t) { return horner(p, t); };
    const double width = 1e-15 * std::max({1.0, std::abs(lo), std::abs(hi)});
    std::vector<double> roots;
    for (std::size_t i = 0; i + 1 < knots.size(); ++i) {
        const double a = knots[i];
        const double b = knots[i + 1];
        const double pa = eval(a);
        const double pb = eval(b);
        if (i > 0 && pa == 0.0)
            roots.push_back(a);
        else if (sign_change(pa, pb))
            roots.push_back(bisect(eval, a, b, width));
    }
    std::sort(roots.begin(), roots.end());
    roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
    return roots;
}

} // namespace detail

/// Real roots of q inside the open interval (lo, hi), ascending. Isolation is
/// by recursion on the derivative sequence; even-multiplicity roots that do
/// not evaluate to exactly zero are not reported.
inline std::vector<double> poly_roots_in_interval(const Quartic& q, double lo, double hi) {
    if (!(lo < hi))
        throw std::invalid_argument("poly_roots_in_interval: need lo < hi");
    const auto coeffs = q.coefficients();
    return detail::real_roots(coeffs, lo, hi);
}

struct VerificationReport {
    double length_residual = 0.0;
    double tangency_residual = 0.0;
    double on_conic_residual = 0.0;
    double on_line_residual = 0.0;
    bool passed = false;
};

/// Re-checks a solution against the ellipse using conic primitives only.
/// All residuals are relative: |u² + v² − s²|/s², the line discriminant over
/// its natural scale, the conic value at the tangency point over the sum of
/// its term magnitudes, and |x/u + y/v − 1|.
inline VerificationReport verify_solution(const TangentEllipse& e, double s,
                                          const LadderSolution& sol, double tol) {
    if (!(tol > 0.0))
        throw std::invalid_argument("verify_solution: tolerance must be positive");
    const ConicCoeffs k = conic_from_tangent_ellipse(e);

    VerificationReport rep;
    rep.length_residual = std::abs(sol.u * sol.u + sol.v * sol.v - s * s) / (s * s);
    rep.tangency_residual = std::abs(line_tangency_discriminant(k, sol.u, sol.v).relative());
    rep.on_conic_residual = std::abs(evaluate(k, sol.tangency)) / term_magnitude(k, sol.tangency);
    rep.on_line_residual = std::abs(sol.tangency.x / sol.u + sol.tangency.y / sol.v - 1.0);
    rep.passed = rep.length_residual <= tol && rep.tangency_residual <= tol &&
                 rep.on_conic_residual <= tol && rep.on_line_residual <= tol;
    return rep;
}

} // namespace ladder

#endif /* ladder_verify_hpp */
