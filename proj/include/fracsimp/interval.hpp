#pragma once

#include <stdexcept>
#include <string>

namespace fracsimp {

// Ordered integration window (gamma, delta) with gamma < delta.
struct Interval {
    double gamma;
    double delta;

    Interval(double g, double d) : gamma(g), delta(d) {
        if (!(g < d))
            throw std::domain_error("Interval: require gamma < delta, got [" +
                                    std::to_string(g) + ", " + std::to_string(d) + "]");
    }

    double midpoint() const { return 0.5 * (gamma + delta); }
    double width() const { return delta - gamma; }
};

}  // namespace fracsimp
