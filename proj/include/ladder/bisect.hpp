//
//  bisect.hpp
//  ladder
//

#ifndef ladder_bisect_hpp
#define ladder_bisect_hpp

#include <cmath>
#include <stdexcept>

namespace ladder {

inline constexpr int kBisectionIterationCap = 200;

/// Root of h in [lo, hi] by bisection. h(lo) and h(hi) must have opposite
/// signs (or one of them be zero). Stops when the bracket is narrower than
/// width, when the midpoint no longer moves, or on an exact zero.
template <class Fn>
double bisect(Fn&& h, double lo, double hi, double width) {
    double h_lo = h(lo);
    const double h_hi = h(hi);
    if (h_lo == 0.0)
        return lo;
    if (h_hi == 0.0)
        return hi;
    if (std::signbit(h_lo) == std::signbit(h_hi))
        throw std::invalid_argument("bisect: endpoints do not bracket a sign change");

    for (int i = 0; i < kBisectionIterationCap; ++i) {
        const double mid = 0.5 * (lo + hi);
        if (hi - lo <= width || mid <= lo || mid >= hi)
            return mid;
        const double h_mid = h(mid);
        if (h_mid == 0.0)
            return mid;
        if (std::signbit(h_mid) == std::signbit(h_lo)) {
            lo = mid;
            h_lo = h_mid;
        } else {
            hi = mid;
        }
    }
    throw std::logic_error("bisect: iteration cap reached");
}

} // namespace ladder

#endif /* ladder_bisect_hpp */
