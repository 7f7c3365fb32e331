#pragma once

#include <cmath>
#include <span>
#include <stdexcept>
#include <string_view>

namespace specrisk {

enum class DivergenceKind { chi2, kl };

// f-divergence to the uniform distribution: D_f(q || 1/n) = (1/n) sum f(n q_i).
//   chi2: f(x) = x^2 - 1,     f*(y) = y^2/4 + 1,  [f*]'(y) = y/2
//   kl:   f(x) = x ln x,      f*(y) = e^{y-1},    [f*]'(y) = e^{y-1}
struct Divergence {
    DivergenceKind kind = DivergenceKind::chi2;

    double generator(double x) const {
        if (kind == DivergenceKind::chi2) return x * x - 1.0;
        return x > 0.0 ? x * std::log(x) : 0.0;
    }

    double conjugate(double y) const {
        if (kind == DivergenceKind::chi2) return y * y / 4.0 + 1.0;
        return std::exp(y - 1.0);
    }

    double conjugate_prime(double y) const {
        if (kind == DivergenceKind::chi2) return y / 2.0;
        return std::exp(y - 1.0);
    }

    // Strong convexity constant of f on [0, n].
    double alpha_n(int n) const {
        if (kind == DivergenceKind::chi2) return 2.0;
        return 1.0 / n;
    }

    // D_f(q || 1/n).
    double value(std::span<const double> q) const {
        const int n = static_cast<int>(q.size());
        if (kind == DivergenceKind::chi2) {
            double ss = 0.0;
            for (double qi : q) ss += qi * qi;
            return n * ss - 1.0;
        }
        double acc = 0.0;
        for (double qi : q) {
            const double x = n * qi;
            if (x > 0.0) acc += qi * std::log(x);
        }
        return acc;
    }
};

inline Divergence divergence_from_name(std::string_view name) {
    if (name == "chi2") return {DivergenceKind::chi2};
    if (name == "kl") return {DivergenceKind::kl};
    throw std::invalid_argument("unknown divergence: " + std::string(name));
}

inline std::string_view divergence_name(const Divergence& d) {
    return d.kind == DivergenceKind::chi2 ? "chi2" : "kl";
}

}  // namespace specrisk
