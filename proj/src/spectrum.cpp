#include "specrisk/spectrum.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace specrisk {

namespace {

void validate(const Spectrum& s) {
    double sum = 0.0;
    double prev = -1.0;
    for (double w : s.weights) {
        if (w < 0.0) throw std::logic_error("spectrum weight negative");
        if (w < prev) throw std::logic_error("spectrum weights not nondecreasing");
        prev = w;
        sum += w;
    }
    if (std::abs(sum - 1.0) > 1e-12)
        throw std::logic_error("spectrum weights do not sum to 1: " + std::to_string(sum));
}

}  // namespace

Spectrum make_spectrum(SpectrumFamily family, double param, int n) {
    if (n < 1) throw std::invalid_argument("make_spectrum: n must be >= 1");
    Spectrum s;
    s.family = family;
    s.param = param;
    s.weights.assign(static_cast<std::size_t>(n), 0.0);

    switch (family) {
        case SpectrumFamily::uniform: {
            for (double& w : s.weights) w = 1.0 / n;
            break;
        }
        case SpectrumFamily::cvar: {
            if (!(param > 0.0 && param <= 1.0))
                throw std::invalid_argument("cvar: p must lie in (0, 1]");
            const int k = static_cast<int>(std::ceil(param * n));
            for (int i = n - k; i < n; ++i) s.weights[i] = 1.0 / k;
            break;
        }
        case SpectrumFamily::extremile: {
            if (!(param >= 1.0)) throw std::invalid_argument("extremile: b must be >= 1");
            for (int i = 1; i <= n; ++i) {
                s.weights[i - 1] = std::pow(static_cast<double>(i) / n, param) -
                                   std::pow(static_cast<double>(i - 1) / n, param);
            }
            break;
        }
        case SpectrumFamily::esrm: {
            if (!(param > 0.0)) throw std::invalid_argument("esrm: gamma must be > 0");
            // Increment form e^{g(i-1)/n} * (e^{g/n} - 1); the shared factor
            // expm1(g/n) cancels against the normalizer expm1(g).
            const double denom = std::expm1(param);
            const double step = std::expm1(param / n);
            for (int i = 1; i <= n; ++i) {
                s.weights[i - 1] = std::exp(param * (i - 1) / n) * step / denom;
            }
            break;
        }
    }
    validate(s);
    return s;
}

double kappa_sigma(const Spectrum& s) {
    if (s.n() == 0) throw std::invalid_argument("kappa_sigma: empty spectrum");
    return static_cast<double>(s.n()) * s.weights.back();
}

SpectrumFamily spectrum_family_from_name(std::string_view name) {
    if (name == "cvar") return SpectrumFamily::cvar;
    if (name == "extremile") return SpectrumFamily::extremile;
    if (name == "esrm") return SpectrumFamily::esrm;
    if (name == "erm" || name == "uniform") return SpectrumFamily::uniform;
    throw std::invalid_argument("unknown spectrum family: " + std::string(name));
}

std::string_view spectrum_family_name(SpectrumFamily family) {
    switch (family) {
        case SpectrumFamily::uniform: return "erm";
        case SpectrumFamily::cvar: return "cvar";
        case SpectrumFamily::extremile: return "extremile";
        case SpectrumFamily::esrm: return "esrm";
    }
    return "?";
}

}  // namespace specrisk
