// SPDX-License-Identifier: Apache-2.0
#include "qcert/dicke.hpp"

#include <algorithm>
#include <bit>
#include <cmath>

namespace qcert {

std::uint64_t binomial(int n, int k) {
    if (n < 0 || k < 0 || k > n) {
        return 0;
    }
    if (n > 60) {
        throw InputError("binomial limited to n <= 60 for exact 64-bit "
                         "arithmetic, got n = " +
                         std::to_string(n));
    }
    k = std::min(k, n - k);
    std::uint64_t r = 1;
    for (int i = 1; i <= k; ++i) {
        // r * (n-k+i) is divisible by i: prefix products of a binomial row
        r = r * static_cast<std::uint64_t>(n - k + i) /
            static_cast<std::uint64_t>(i);
    }
    return r;
}

StateVector dicke_state(DickeSpec spec) {
    spec.validate();
    if (spec.n > 26) {
        throw InputError("statevector limited to 26 qubits, got " +
                         std::to_string(spec.n));
    }
    const std::uint64_t dim = 1ULL << spec.n;
    const double amp =
        1.0 / std::sqrt(static_cast<double>(binomial(spec.n, spec.k)));
    StateVector psi = StateVector::Zero(static_cast<Eigen::Index>(dim));
    for (std::uint64_t x = 0; x < dim; ++x) {
        if (std::popcount(x) == spec.k) {
            psi[static_cast<Eigen::Index>(x)] = amp;
        }
    }
    return psi;
}

double fidelity_pure(const StateVector& psi, DickeSpec target) {
    target.validate();
    if (psi.size() != (Eigen::Index{1} << target.n)) {
        throw InputError("statevector dimension " + std::to_string(psi.size()) +
                         " does not match " + std::to_string(target.n) +
                         " qubits");
    }
    const std::uint64_t dim = 1ULL << target.n;
    Complex overlap{0.0, 0.0};
    for (std::uint64_t x = 0; x < dim; ++x) {
        if (std::popcount(x) == target.k) {
            overlap += psi[static_cast<Eigen::Index>(x)];
        }
    }
    overlap /= std::sqrt(static_cast<double>(binomial(target.n, target.k)));
    return std::norm(overlap);
}

double schmidt_lambda(DickeSpec spec, int a, int beta) {
    spec.validate();
    if (a < 1 || a > spec.n - 1) {
        throw InputError("cut size " + std::to_string(a) + " outside [1, " +
                         std::to_string(spec.n - 1) + "]");
    }
    const int b = spec.n - a;
    if (beta < 0 || beta > a || spec.k - beta < 0 || spec.k - beta > b) {
        return 0.0;
    }
    // numerator <= C(n,k) by the Vandermonde identity, so no overflow
    const std::uint64_t numerator =
        binomial(a, beta) * binomial(b, spec.k - beta);
    return static_cast<double>(numerator) /
           static_cast<double>(binomial(spec.n, spec.k));
}

BipartitionSpectrum bipartition_spectrum(DickeSpec spec, int a) {
    spec.validate();
    BipartitionSpectrum out;
    out.a = a;
    const int lo = std::max(0, spec.k - (spec.n - a));
    const int hi = std::min(a, spec.k);
    for (int beta = lo; beta <= hi; ++beta) {
        out.lambdas[beta] = schmidt_lambda(spec, a, beta);
    }
    return out;
}

Alpha alpha_bruteforce(DickeSpec spec) {
    spec.validate();
    if (spec.k == 0 || spec.k == spec.n) {
        return {1.0, true};
    }
    double best = 0.0;
    for (int a = 1; a <= spec.n - 1; ++a) {
        const int lo = std::max(0, spec.k - (spec.n - a));
        const int hi = std::min(a, spec.k);
        for (int beta = lo; beta <= hi; ++beta) {
            best = std::max(best, schmidt_lambda(spec, a, beta));
        }
    }
    return {best, false};
}

Alpha alpha_closed_form(DickeSpec spec) {
    spec.validate();
    const int n = spec.n;
    const int k = spec.k;
    if (k == 0 || k == n) {
        return {1.0, true};
    }
    if (2 * k < n) {
        return {static_cast<double>(n - k) / n, false};
    }
    if (2 * k == n) {
        return {static_cast<double>(n) / (2.0 * (n - 1)), false};
    }
    return {static_cast<double>(k) / n, false};
}

StateVector apply_transposition(const StateVector& psi, int i, int j) {
    const int n = qubit_count(psi.size());
    if (i < 0 || i >= n || j < 0 || j >= n) {
        throw InputError("transposition indices (" + std::to_string(i) + ", " +
                         std::to_string(j) + ") outside [0, " +
                         std::to_string(n) + ")");
    }
    StateVector out = psi;
    if (i == j) {
        return out;
    }
    const std::uint64_t mi = qubit_mask(i, n);
    const std::uint64_t mj = qubit_mask(j, n);
    const std::uint64_t dim = 1ULL << n;
    for (std::uint64_t x = 0; x < dim; ++x) {
        // visit each differing pair once: bit i set, bit j clear
        if ((x & mi) != 0 && (x & mj) == 0) {
            const std::uint64_t y = (x ^ mi) ^ mj;
            std::swap(out[static_cast<Eigen::Index>(x)],
                      out[static_cast<Eigen::Index>(y)]);
        }
    }
    return out;
}

} // namespace qcert
