#pragma once

namespace fracgreen {

// Truncation control for infinite sums (power series, Fourier series).
struct SeriesControl {
    double abs_tol = 1e-14;
    long max_terms = 400;
};

} // namespace fracgreen
