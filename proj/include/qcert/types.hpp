// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <Eigen/Core>
#include <complex>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>

namespace qcert {

using Complex = std::complex<double>;
using StateVector = Eigen::VectorXcd;
using DenseMatrix = Eigen::MatrixXcd;

/// Raised on malformed user input: bad parameters, schema violations,
/// inconsistent files. The CLI maps it to exit code 2.
class InputError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// Raised when an internal certificate check fails (e.g. the spectral
/// verification of a constructed Hamiltonian). The CLI maps it to exit
/// code 3; it always signals a bug, never bad user data.
class VerificationError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// Global measurement basis. All Hamiltonians handled here decompose into
/// terms measurable in one of these three settings.
enum class Basis : char { X = 'X', Y = 'Y', Z = 'Z' };

inline char basis_letter(Basis b) { return static_cast<char>(b); }

inline Basis basis_from_letter(char c) {
    switch (c) {
    case 'X': return Basis::X;
    case 'Y': return Basis::Y;
    case 'Z': return Basis::Z;
    default: throw InputError(std::string("invalid basis letter '") + c + "'");
    }
}

// Qubit 0 is the most significant bit of a basis-state index, so the
// index written in binary reads left-to-right as qubits 0..n-1. All
// bitstring serialization follows the same order.
inline int basis_bit(std::uint64_t index, int qubit, int n) {
    return static_cast<int>((index >> (n - 1 - qubit)) & 1ULL);
}

inline std::uint64_t qubit_mask(int qubit, int n) {
    return 1ULL << (n - 1 - qubit);
}

/// Number of qubits for a statevector dimension; rejects non-powers of two.
inline int qubit_count(Eigen::Index dim) {
    if (dim < 2 || (dim & (dim - 1)) != 0) {
        throw InputError("statevector dimension " + std::to_string(dim) +
                         " is not a power of two >= 2");
    }
    int n = 0;
    while ((Eigen::Index{1} << n) < dim) {
        ++n;
    }
    return n;
}

/// Deterministic pairwise (tree) summation. The result depends only on the
/// order of `xs`, not on chunking or thread count, so accumulations stay
/// bit-stable across runs.
inline double pairwise_sum(std::span<const double> xs) {
    if (xs.size() <= 8) {
        double s = 0.0;
        for (double x : xs) {
            s += x;
        }
        return s;
    }
    const std::size_t half = xs.size() / 2;
    return pairwise_sum(xs.first(half)) + pairwise_sum(xs.subspan(half));
}

} // namespace qcert
