// Copyright 2026 The mkbell Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Test-only reference computations, written as plain loops so they stay
// independent of the library's Eigen-expression code paths.

#ifndef MKBELL_TESTS_SUPPORT_ORACLES_HPP
#define MKBELL_TESTS_SUPPORT_ORACLES_HPP

#include <cmath>
#include <complex>
#include <cstdint>
#include <random>
#include <vector>

#include <Eigen/Dense>

namespace mkbell::oracles {

using Complex = std::complex<double>;

inline double uniform01(std::mt19937_64& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

inline double gaussian(std::mt19937_64& rng) {
    // Box-Muller on the raw uniform stream keeps the draw reproducible
    // across standard libraries.
    const double u1 = uniform01(rng);
    const double u2 = uniform01(rng);
    return std::sqrt(-2.0 * std::log1p(-u1)) * std::cos(2.0 * M_PI * u2);
}

/// Random density matrix via the Ginibre construction G G^dagger / tr.
inline Eigen::MatrixXcd random_density_matrix(int n_qubits, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    const auto dim = static_cast<Eigen::Index>(std::uint64_t{1} << n_qubits);
    Eigen::MatrixXcd g(dim, dim);
    for (Eigen::Index r = 0; r < dim; ++r) {
        for (Eigen::Index c = 0; c < dim; ++c) {
            g(r, c) = Complex(gaussian(rng), gaussian(rng));
        }
    }
    Eigen::MatrixXcd rho = Eigen::MatrixXcd::Zero(dim, dim);
    for (Eigen::Index r = 0; r < dim; ++r) {
        for (Eigen::Index c = 0; c < dim; ++c) {
            Complex sum(0.0, 0.0);
            for (Eigen::Index k = 0; k < dim; ++k) {
                sum += g(r, k) * std::conj(g(c, k));
            }
            rho(r, c) = sum;
        }
    }
    Complex trace(0.0, 0.0);
    for (Eigen::Index d = 0; d < dim; ++d) trace += rho(d, d);
    for (Eigen::Index r = 0; r < dim; ++r) {
        for (Eigen::Index c = 0; c < dim; ++c) {
            rho(r, c) /= trace.real();
        }
    }
    return rho;
}

/// The two-amplitude basis vector of index j and sign s, built from the
/// definition rather than the library routine.
inline std::vector<Complex> reference_psi(int n_qubits, std::uint64_t j, int sign) {
    const std::uint64_t half = std::uint64_t{1} << (n_qubits - 1);
    std::vector<Complex> amplitudes(std::size_t{1} << n_qubits, Complex(0.0, 0.0));
    amplitudes[2 * j] = Complex(1.0 / std::sqrt(2.0), 0.0);
    amplitudes[2 * (half - j - 1) + 1] = Complex(sign / std::sqrt(2.0), 0.0);
    return amplitudes;
}

/// <v|rho|v> by explicit double loop.
inline double expectation(const std::vector<Complex>& v, const Eigen::MatrixXcd& rho) {
    Complex sum(0.0, 0.0);
    const auto dim = static_cast<std::size_t>(rho.rows());
    for (std::size_t r = 0; r < dim; ++r) {
        for (std::size_t c = 0; c < dim; ++c) {
            sum += std::conj(v[r]) * rho(static_cast<Eigen::Index>(r),
                                         static_cast<Eigen::Index>(c)) * v[c];
        }
    }
    return sum.real();
}

/// tr(A B) by explicit double loop.
inline Complex trace_product(const Eigen::MatrixXcd& a, const Eigen::MatrixXcd& b) {
    Complex sum(0.0, 0.0);
    for (Eigen::Index r = 0; r < a.rows(); ++r) {
        for (Eigen::Index c = 0; c < a.cols(); ++c) {
            sum += a(r, c) * b(c, r);
        }
    }
    return sum;
}

}  // namespace mkbell::oracles

#endif  // MKBELL_TESTS_SUPPORT_ORACLES_HPP
