// Copyright 2026 The phaseshift Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Reference evaluations that share no code with the library.

#pragma once

#include <cmath>
#include <complex>
#include <functional>

#include <boost/math/quadrature/gauss_kronrod.hpp>

namespace oracle {

// <t| U R_s U^dag R_t U |s> = a (2e^{it} - 1 + (e^{it} - 1)^2 |a|^2).
inline std::complex<double> final_amplitude(double theta,
                                            std::complex<double> a) {
    const std::complex<double> z = std::polar(1.0, theta);
    return a * (2.0 * z - 1.0 + (z - 1.0) * (z - 1.0) * std::norm(a));
}

inline double failure(double theta, double eps) {
    const std::complex<double> a(std::sqrt(1.0 - eps), 0.0);
    return 1.0 - std::norm(final_amplitude(theta, a));
}

// Textbook form, no cancellation guard.
inline double naive_deviation(double theta, double eps) {
    const double d = 1.0 + 2.0 * (std::cos(theta) - 1.0) * (1.0 - eps);
    return eps * d * d;
}

inline double mean_zero_cosine(double beta, double alpha) {
    auto f = [](double e) { return 1.0 - 1.0 / (2.0 * (1.0 - e)); };
    return boost::math::quadrature::gauss_kronrod<double, 61>::integrate(
               f, beta, alpha, 15, 1e-14) /
           (alpha - beta);
}

// First + to - sign change of f on (lo, hi), refined by bisection.
inline double first_descent(const std::function<double(double)> &f, double lo,
                            double hi, int scan = 4000) {
    double prev = lo;
    for (int i = 1; i <= scan; ++i) {
        const double x = lo + (hi - lo) * i / scan;
        if (f(prev) > 0.0 && f(x) <= 0.0) {
            double a = prev, b = x;
            for (int k = 0; k < 200 && b - a > 1e-16; ++k) {
                const double m = 0.5 * (a + b);
                (f(m) > 0.0 ? a : b) = m;
            }
            return 0.5 * (a + b);
        }
        prev = x;
    }
    return NAN;
}

} // namespace oracle
