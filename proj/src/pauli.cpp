// SPDX-License-Identifier: Apache-2.0
#include "qcert/pauli.hpp"

#include <bit>
#include <cmath>
#include <vector>

namespace qcert {

namespace {

bool valid_letter(char c) {
    return c == 'I' || c == 'X' || c == 'Y' || c == 'Z';
}

struct TermMasks {
    std::uint64_t flip = 0;   // sites with X or Y (bit positions, not qubit ids)
    std::uint64_t parity = 0; // sites with Y or Z contribute (-1)^bit
    int y_count = 0;
};

TermMasks term_masks(std::string_view letters) {
    const int n = static_cast<int>(letters.size());
    TermMasks m;
    for (int q = 0; q < n; ++q) {
        const std::uint64_t bit = qubit_mask(q, n);
        switch (letters[q]) {
        case 'X': m.flip |= bit; break;
        case 'Y':
            m.flip |= bit;
            m.parity |= bit;
            ++m.y_count;
            break;
        case 'Z': m.parity |= bit; break;
        default: break;
        }
    }
    return m;
}

Complex i_power(int k) {
    switch (k & 3) {
    case 0: return {1.0, 0.0};
    case 1: return {0.0, 1.0};
    case 2: return {-1.0, 0.0};
    default: return {0.0, -1.0};
    }
}

void check_dimensions(const PauliSum& h, const StateVector& psi) {
    const Eigen::Index dim = Eigen::Index{1} << h.qubits();
    if (psi.size() != dim) {
        throw InputError("statevector dimension " + std::to_string(psi.size()) +
                         " does not match " + std::to_string(h.qubits()) +
                         " qubits");
    }
}

} // namespace

PauliSum::PauliSum(int n) : n_(n) {
    if (n < 1) {
        throw InputError("qubit count must be >= 1, got " + std::to_string(n));
    }
}

PauliSum::PauliSum(int n, const std::vector<PauliTerm>& terms) : PauliSum(n) {
    for (const auto& t : terms) {
        add(t.letters, t.coeff);
    }
}

void PauliSum::add(std::string_view letters, double coeff) {
    if (static_cast<int>(letters.size()) != n_) {
        throw InputError("letter sequence '" + std::string(letters) +
                         "' has length " + std::to_string(letters.size()) +
                         ", expected " + std::to_string(n_));
    }
    for (char c : letters) {
        if (!valid_letter(c)) {
            throw InputError(std::string("invalid Pauli letter '") + c +
                             "' in '" + std::string(letters) + "'");
        }
    }
    if (!std::isfinite(coeff)) {
        throw InputError("non-finite coefficient for '" + std::string(letters) +
                         "'");
    }
    auto it = terms_.find(letters);
    if (it == terms_.end()) {
        if (coeff != 0.0) {
            terms_.emplace(std::string(letters), coeff);
        }
        return;
    }
    it->second += coeff;
    if (it->second == 0.0) {
        terms_.erase(it);
    }
}

double PauliSum::coefficient(std::string_view letters) const {
    auto it = terms_.find(letters);
    return it == terms_.end() ? 0.0 : it->second;
}

double PauliSum::identity_coefficient() const {
    return coefficient(identity_letters());
}

PauliSum operator+(const PauliSum& a, const PauliSum& b) {
    if (a.qubits() != b.qubits()) {
        throw InputError("cannot add sums over " + std::to_string(a.qubits()) +
                         " and " + std::to_string(b.qubits()) + " qubits");
    }
    PauliSum out = a;
    for (const auto& [letters, coeff] : b.terms_) {
        out.add(letters, coeff);
    }
    return out;
}

PauliSum operator*(double scale, const PauliSum& h) {
    PauliSum out(h.qubits());
    for (const auto& [letters, coeff] : h.terms_) {
        out.add(letters, scale * coeff);
    }
    return out;
}

double expectation(const PauliSum& h, const StateVector& psi) {
    check_dimensions(h, psi);
    const double norm = psi.norm();
    if (std::abs(norm - 1.0) > 1e-6) {
        throw InputError("statevector norm " + std::to_string(norm) +
                         " deviates from 1 by more than 1e-6");
    }

    const std::uint64_t dim = 1ULL << h.qubits();
    std::vector<double> re_parts;
    std::vector<double> im_parts;
    re_parts.reserve(h.size());
    im_parts.reserve(h.size());
    const Complex* amp = psi.data();

    for (const auto& [letters, coeff] : h.terms()) {
        const TermMasks m = term_masks(letters);
        Complex acc{0.0, 0.0};
        for (std::uint64_t x = 0; x < dim; ++x) {
            const double sign =
                (std::popcount(x & m.parity) & 1) ? -1.0 : 1.0;
            acc += sign * std::conj(amp[x ^ m.flip]) * amp[x];
        }
        const Complex value = coeff * i_power(m.y_count) * acc;
        re_parts.push_back(value.real());
        im_parts.push_back(value.imag());
    }

    const double im = pairwise_sum(im_parts);
    if (std::abs(im) > 1e-10) {
        throw VerificationError("expectation has imaginary residue " +
                                std::to_string(im));
    }
    return pairwise_sum(re_parts);
}

StateVector apply(const PauliSum& h, const StateVector& psi) {
    check_dimensions(h, psi);
    const std::uint64_t dim = 1ULL << h.qubits();
    StateVector out = StateVector::Zero(psi.size());
    const Complex* in = psi.data();
    Complex* res = out.data();
    for (const auto& [letters, coeff] : h.terms()) {
        const TermMasks m = term_masks(letters);
        const Complex prefactor = coeff * i_power(m.y_count);
        for (std::uint64_t x = 0; x < dim; ++x) {
            const double sign =
                (std::popcount(x & m.parity) & 1) ? -1.0 : 1.0;
            res[x ^ m.flip] += prefactor * sign * in[x];
        }
    }
    return out;
}

DenseMatrix to_dense(const PauliSum& h) {
    if (h.qubits() > 12) {
        throw InputError("dense materialization limited to 12 qubits, got " +
                         std::to_string(h.qubits()));
    }
    const std::uint64_t dim = 1ULL << h.qubits();
    DenseMatrix mat = DenseMatrix::Zero(static_cast<Eigen::Index>(dim),
                                        static_cast<Eigen::Index>(dim));
    for (const auto& [letters, coeff] : h.terms()) {
        const TermMasks m = term_masks(letters);
        const Complex prefactor = coeff * i_power(m.y_count);
        for (std::uint64_t x = 0; x < dim; ++x) {
            const double sign =
                (std::popcount(x & m.parity) & 1) ? -1.0 : 1.0;
            mat(static_cast<Eigen::Index>(x ^ m.flip),
                static_cast<Eigen::Index>(x)) += prefactor * sign;
        }
    }
    const double herm_defect =
        (mat - mat.adjoint()).cwiseAbs().maxCoeff();
    if (herm_defect > 1e-12) {
        throw VerificationError("dense form is not Hermitian (defect " +
                                std::to_string(herm_defect) + ")");
    }
    return mat;
}

BasisGroups group_by_basis(const PauliSum& h) {
    const int n = h.qubits();
    BasisGroups out{PauliSum(n), PauliSum(n), PauliSum(n), 0.0};
    for (const auto& [letters, coeff] : h.terms()) {
        char uniform = 'I';
        for (char c : letters) {
            if (c == 'I') {
                continue;
            }
            if (uniform == 'I') {
                uniform = c;
            } else if (uniform != c) {
                throw InputError(
                    "term '" + letters +
                    "' mixes Pauli letters; it cannot be measured in one "
                    "of the three global bases");
            }
        }
        switch (uniform) {
        case 'I': out.constant += coeff; break;
        case 'X': out.x_terms.add(letters, coeff); break;
        case 'Y': out.y_terms.add(letters, coeff); break;
        default: out.z_terms.add(letters, coeff); break;
        }
    }
    return out;
}

} // namespace qcert
