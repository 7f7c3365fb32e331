#pragma once

#include <string_view>
#include <vector>

namespace specrisk {

enum class SpectrumFamily { uniform, cvar, extremile, esrm };

// Nondecreasing, nonnegative weight vector summing to one. The weights are
// applied to losses in sorted order, so the largest weight hits the largest
// loss.
struct Spectrum {
    std::vector<double> weights;
    SpectrumFamily family = SpectrumFamily::uniform;
    double param = 0.0;

    int n() const { return static_cast<int>(weights.size()); }
};

// cvar: mass 1/k on the top k = ceil(p*n) indices, p in (0, 1].
// extremile: sigma_i = (i/n)^b - ((i-1)/n)^b, b >= 1.
// esrm: exponential increments e^{g*i/n} - e^{g*(i-1)/n}, renormalized to
// sum to one, g > 0.
// uniform: 1/n everywhere (param ignored).
Spectrum make_spectrum(SpectrumFamily family, double param, int n);

// Skewness measure n * sigma_n; equals 1 exactly for the uniform spectrum.
double kappa_sigma(const Spectrum& s);

// Parses "cvar" | "extremile" | "esrm" | "erm".
SpectrumFamily spectrum_family_from_name(std::string_view name);
std::string_view spectrum_family_name(SpectrumFamily family);

}  // namespace specrisk
