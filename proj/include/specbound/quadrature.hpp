#pragma once

#include <cstddef>
#include <functional>

namespace specbound {

struct QuadratureOptions {
    double rel_tol = 1e-10;
    double abs_tol = 1e-300;       // floor for integrals that are genuinely zero
    std::size_t max_intervals = 4000;
};

// Adaptive Gauss-Kronrod 7/15 on [a, b]. Throws QuadratureError with the
// achieved error estimate if the interval budget runs out first.
double integrate_adaptive(const std::function<double(double)>& f, double a, double b,
                          const QuadratureOptions& opts = {});

}  // namespace specbound
