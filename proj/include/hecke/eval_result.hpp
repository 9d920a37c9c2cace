#pragma once

#include <complex>

namespace hecke
{

// Outcome of an adaptively truncated lattice series.
struct EvalResult {
    std::complex<double> value;
    // Size of the last shell extension plus a Gaussian tail bound beyond it.
    double abs_error_estimate = 0.0;
    // Lattice points inside the final truncation radius.
    long terms_used = 0;
    double radius = 0.0;
};

} // namespace hecke
