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

#include <cmath>
#include <complex>
#include <numbers>
#include <random>
#include <stdexcept>

#include <Eigen/QR>
#include <gtest/gtest.h>

#include "oracle.hpp"
#include "phaseshift/analytics.hpp"
#include "phaseshift/errors.hpp"
#include "phaseshift/simulator.hpp"

namespace {

using namespace phaseshift;
using namespace phaseshift::sim;
using std::numbers::pi;

PhaseAngle th(double r) { return PhaseAngle(r); }
FailureProb ep(double e) { return FailureProb(e); }

Eigen::MatrixXcd random_unitary(std::size_t n, std::mt19937_64 &rng) {
    std::normal_distribution<double> g;
    Eigen::MatrixXcd a(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            a(i, j) = {g(rng), g(rng)};
        }
    }
    return Eigen::HouseholderQR<Eigen::MatrixXcd>(a).householderQ();
}

// |amps| up to a global phase.
double phase_distance(const StateVector &a, const StateVector &b) {
    const Complex ip = b.amplitudes().dot(a.amplitudes());
    const Complex ph = std::abs(ip) > 0 ? ip / std::abs(ip) : Complex(1.0);
    return (a.amplitudes() - ph * b.amplitudes()).cwiseAbs().maxCoeff();
}

TEST(StateVector, NormIsValidated) {
    Eigen::VectorXcd v(2);
    v << 1.0, 1.0;
    EXPECT_THROW(StateVector{v}, std::invalid_argument);
    EXPECT_THROW(StateVector{Eigen::VectorXcd(0)}, std::invalid_argument);
    v /= std::sqrt(2.0);
    EXPECT_NO_THROW(StateVector{v});
    EXPECT_THROW((void)StateVector::basis(4, 4), std::out_of_range);
}

TEST(UnitaryMatrix, UnitarityIsValidated) {
    Eigen::MatrixXcd m = Eigen::MatrixXcd::Identity(3, 3);
    m(0, 1) = 1e-6;
    EXPECT_THROW(UnitaryMatrix{m}, std::invalid_argument);
    EXPECT_THROW(UnitaryMatrix{Eigen::MatrixXcd(2, 3)}, std::invalid_argument);
    std::mt19937_64 rng(1);
    EXPECT_LE(UnitaryMatrix(random_unitary(16, rng)).unitarity_error(), 1e-12);
}

TEST(Hadamard, Examples) {
    EXPECT_NEAR(hadamard_instance(2, 3).epsilon(), 0.75, 1e-15);
    EXPECT_NEAR(hadamard_instance(1, 1).epsilon(), 0.5, 1e-15);
    const auto h = hadamard_instance(3, 5);
    EXPECT_NEAR(h.epsilon(), 7.0 / 8.0, 1e-15);
    EXPECT_NEAR(1.0 - std::norm(h.unitary()(5, 0)), 7.0 / 8.0, 1e-15);
    EXPECT_LE(hadamard_instance(6, 0).unitary().unitarity_error(), 1e-12);
}

TEST(Hadamard, Errors) {
    EXPECT_THROW((void)hadamard_instance(0, 0), SizeError);
    EXPECT_THROW((void)hadamard_instance(13, 0), SizeError);
    EXPECT_THROW((void)hadamard_instance(2, 4), std::out_of_range);
}

TEST(Crafted, Examples) {
    EXPECT_NEAR(crafted_instance(8, ep(0.5), 0, 1).epsilon(), 0.5, 1e-12);
    const auto exact = crafted_instance(4, ep(0.0), 0, 2);
    const StateVector out = exact.unitary().column(0);
    EXPECT_NEAR(std::abs(out[2]), 1.0, 1e-15);
    EXPECT_NEAR(std::abs(crafted_instance(8, ep(1.0), 0, 1).amplitude()), 0.0,
                1e-15);
    const auto id = crafted_instance(2, ep(1.0), 0, 1);
    EXPECT_TRUE(id.unitary().entries().isApprox(
        Eigen::MatrixXcd::Identity(2, 2)));
}

TEST(Crafted, EpsilonIsExactAcrossRange) {
    for (std::size_t dim : {2u, 3u, 8u, 64u}) {
        for (int k = 0; k <= 100; ++k) {
            const double e = k / 100.0;
            const auto inst = crafted_instance(dim, ep(e), dim - 1, 0);
            EXPECT_NEAR(inst.epsilon(), e, 1e-12) << dim << " " << e;
            EXPECT_LE(inst.unitary().unitarity_error(), 1e-12);
        }
    }
}

TEST(Crafted, Errors) {
    EXPECT_THROW((void)crafted_instance(1, ep(0.5), 0, 0), SizeError);
    EXPECT_THROW((void)crafted_instance(8, ep(0.5), 0, 8), std::out_of_range);
    EXPECT_THROW((void)crafted_instance(8, ep(0.5), 3, 3), DomainError);
    EXPECT_NO_THROW((void)crafted_instance(8, ep(0.0), 3, 3));
}

TEST(SelectivePhase, Examples) {
    std::mt19937_64 rng(2);
    const StateVector s(random_unitary(5, rng).col(0));
    const StateVector same = selective_phase(s, 2, th(0.0));
    EXPECT_EQ((same.amplitudes() - s.amplitudes()).norm(), 0.0);
    const StateVector flipped = selective_phase(s, 2, th(pi));
    for (std::size_t i = 0; i < 5; ++i) {
        const Complex want = i == 2 ? -s[i] : s[i];
        EXPECT_NEAR(std::abs(flipped[i] - want), 0.0, 1e-15);
    }
    const StateVector b = selective_phase(StateVector::basis(4, 1), 1,
                                          th(pi / 3.0));
    EXPECT_NEAR(std::abs(b[1] - std::polar(1.0, pi / 3.0)), 0.0, 1e-15);
    EXPECT_THROW((void)selective_phase(s, 5, th(1.0)), std::out_of_range);
}

TEST(OneIteration, Examples) {
    for (std::size_t k = 0; k < 4; ++k) {
        const auto h = hadamard_instance(2, k);
        const StateVector out = one_iteration(h, th(pi));
        EXPECT_NEAR(measured_failure(out, k), 0.0, 1e-15);
        EXPECT_LE(phase_distance(out, StateVector::basis(4, k)), 1e-15);
    }
    EXPECT_NEAR(measured_failure(one_iteration(crafted_instance(
                                                   8, ep(0.5), 0, 1),
                                               th(pi / 2.0)),
                                 1),
                0.0, 1e-10);
    std::mt19937_64 rng(3);
    const SearchInstance r(UnitaryMatrix(random_unitary(6, rng)), 1, 4);
    EXPECT_LE(phase_distance(one_iteration(r, th(0.0)), r.unitary().column(1)),
              1e-14);
}

TEST(MeasuredFailure, Examples) {
    EXPECT_EQ(measured_failure(StateVector::basis(8, 3), 3), 0.0);
    Eigen::VectorXcd u = Eigen::VectorXcd::Constant(4, 0.5);
    EXPECT_NEAR(measured_failure(StateVector(u), 2), 0.75, 1e-15);
    EXPECT_THROW((void)measured_failure(StateVector(u), 4), std::out_of_range);
}

TEST(OneIteration, MatchesAnalyticDeviation) {
    for (std::size_t dim : {2u, 8u, 32u}) {
        for (int i = 0; i <= 24; ++i) {
            for (int j = 0; j <= 24; ++j) {
                const double t = pi * i / 24.0, e = j / 24.0;
                const auto inst = crafted_instance(dim, ep(e), 0, 1);
                const double sim = measured_failure(one_iteration(inst, th(t)), 1);
                EXPECT_NEAR(sim, analytics::deviation(th(t), ep(e)), 1e-10)
                    << dim << " " << t << " " << e;
            }
        }
    }
}

TEST(OneIteration, RandomUnitariesMatchAmplitudeOracle) {
    std::mt19937_64 rng(4);
    std::uniform_real_distribution<double> u(0.0, pi);
    for (int k = 0; k < 200; ++k) {
        const std::size_t dim = 2 + k % 15;
        const SearchInstance inst(UnitaryMatrix(random_unitary(dim, rng)), 0,
                                  dim - 1);
        const double t = u(rng);
        const Complex want = oracle::final_amplitude(t, inst.amplitude());
        const StateVector out = one_iteration(inst, th(t));
        EXPECT_NEAR(std::abs(out[dim - 1] - want), 0.0, 1e-12);
        EXPECT_NEAR(measured_failure(out, dim - 1),
                    analytics::deviation_raw(th(t), inst.amplitude()), 1e-12);
        EXPECT_NEAR(out.norm(), 1.0, 1e-12);
    }
}

TEST(IterationMatrix, AppliedToSourceEqualsOneIteration) {
    std::mt19937_64 rng(5);
    const SearchInstance inst(UnitaryMatrix(random_unitary(7, rng)), 2, 5);
    const UnitaryMatrix m = iteration_matrix(inst, th(1.234));
    EXPECT_LE(m.unitarity_error(), 1e-12);
    const StateVector a = m.column(2);
    const StateVector b = one_iteration(inst, th(1.234));
    EXPECT_LE((a.amplitudes() - b.amplitudes()).cwiseAbs().maxCoeff(), 1e-13);
}

TEST(Recursion, Examples) {
    const auto inst = crafted_instance(8, ep(0.9), 0, 1);
    EXPECT_TRUE(recursion_unitary(inst, th(pi / 3.0), 0)
                    .entries()
                    .isApprox(inst.unitary().entries()));
    const auto f = recursion_failures(inst, th(pi / 3.0), 2);
    ASSERT_EQ(f.size(), 3u);
    EXPECT_NEAR(f[0], 0.9, 1e-8);
    EXPECT_NEAR(f[1], 0.729, 1e-8);
    EXPECT_NEAR(f[2], 0.387420489, 1e-8);
    const auto g = recursion_failures(hadamard_instance(2, 3), th(pi), 1);
    EXPECT_NEAR(g[1], 0.0, 1e-15);
}

TEST(Recursion, MatchesRecurrenceTrace) {
    for (double t : {pi / 3.0, pi / 2.0, 5.0 * pi / 6.0, 2.0}) {
        for (double e0 : {0.3, 0.75, 0.9}) {
            const auto inst = crafted_instance(8, ep(e0), 0, 1);
            const auto sim = recursion_failures(inst, th(t), 5);
            const auto tr = analytics::recurrence_trace(th(t), ep(e0), 5);
            for (std::size_t m = 0; m <= 5; ++m) {
                EXPECT_NEAR(sim[m], tr.epsilons[m], 1e-8)
                    << t << " " << e0 << " " << m;
            }
        }
    }
}

TEST(Recursion, StaysUnitary) {
    const auto inst = crafted_instance(16, ep(0.6), 0, 3);
    EXPECT_LE(recursion_unitary(inst, th(2.2), 6).unitarity_error(), 1e-10);
}

TEST(Recursion, Caps) {
    const auto inst = crafted_instance(4, ep(0.5), 0, 1);
    EXPECT_THROW((void)recursion_unitary(inst, th(1.0), 21), SizeError);
    EXPECT_NO_THROW((void)recursion_failures(inst, th(1.0), 20));
    const auto big = crafted_instance(512, ep(0.5), 0, 1);
    EXPECT_THROW((void)recursion_failures(big, th(1.0), 1), SizeError);
}

} // namespace
