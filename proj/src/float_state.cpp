#include "qexch/float_state.hpp"

#include <cmath>
#include <stdexcept>

namespace qexch {

FloatState::FloatState(int n) : n_(n) {
    if (n < 1 || n > kMaxQubits) throw std::invalid_argument("FloatState: n out of range");
}

FloatState FloatState::from_exact(const StateVector& s) {
    FloatState out(s.n());
    for (const auto& [key, amp] : s.amplitudes()) out.amps_.emplace(key, amp.to_complex());
    return out;
}

std::complex<double> FloatState::amplitude(std::uint32_t key) const {
    auto it = amps_.find(key);
    return it == amps_.end() ? std::complex<double>{0.0, 0.0} : it->second;
}

void FloatState::add_term(std::uint32_t key, std::complex<double> amp) {
    if (amp == std::complex<double>{0.0, 0.0}) return;
    auto [it, fresh] = amps_.emplace(key, amp);
    if (!fresh) {
        it->second += amp;
        if (it->second == std::complex<double>{0.0, 0.0}) amps_.erase(it);
    }
}

void FloatState::add_scaled(const FloatState& o, std::complex<double> factor) {
    if (n_ != o.n_) throw std::domain_error("FloatState: qubit count mismatch");
    if (factor == std::complex<double>{0.0, 0.0}) return;
    for (const auto& [key, amp] : o.amps_) add_term(key, amp * factor);
}

FloatState FloatState::scaled(std::complex<double> factor) const {
    FloatState out(n_);
    if (factor == std::complex<double>{0.0, 0.0}) return out;
    for (const auto& [key, amp] : amps_) out.amps_.emplace(key, amp * factor);
    return out;
}

FloatState FloatState::operator+(const FloatState& o) const {
    FloatState out = *this;
    out.add_scaled(o, {1.0, 0.0});
    return out;
}

double FloatState::norm_squared() const {
    double total = 0.0;
    for (const auto& [key, amp] : amps_) total += std::norm(amp);
    return total;
}

double FloatState::norm() const { return std::sqrt(norm_squared()); }

FloatState FloatState::normalized() const {
    double len = norm();
    if (len < 1e-300) throw std::domain_error("FloatState: cannot normalize zero vector");
    return scaled({1.0 / len, 0.0});
}

FloatState FloatState::apply_pauli(PauliAxis axis, int qubit) const {
    if (qubit < 1 || qubit > n_) throw std::out_of_range("apply_pauli: qubit index out of range");
    std::uint32_t mask = 1u << (n_ - qubit);
    FloatState out(n_);
    switch (axis) {
        case PauliAxis::X:
            for (const auto& [key, amp] : amps_) out.amps_.emplace(key ^ mask, amp);
            break;
        case PauliAxis::Z:
            for (const auto& [key, amp] : amps_) {
                out.amps_.emplace(key, (key & mask) ? -amp : amp);
            }
            break;
        case PauliAxis::Y:
            for (const auto& [key, amp] : amps_) {
                std::complex<double> phase = (key & mask) ? std::complex<double>{0.0, -1.0}
                                                          : std::complex<double>{0.0, 1.0};
                out.amps_.emplace(key ^ mask, amp * phase);
            }
            break;
    }
    return out;
}

FloatState FloatState::apply_permutation(const Permutation& perm) const {
    validate_permutation(perm, n_);
    FloatState out(n_);
    for (const auto& [key, amp] : amps_) {
        std::uint32_t moved = 0;
        for (int j = 1; j <= n_; ++j) {
            if ((key >> (n_ - j)) & 1u) moved |= 1u << (n_ - perm[j - 1]);
        }
        out.amps_.emplace(moved, amp);
    }
    return out;
}

std::complex<double> inner_product(const FloatState& lhs, const FloatState& rhs) {
    if (lhs.n() != rhs.n()) throw std::domain_error("inner_product: qubit count mismatch");
    std::complex<double> sum{0.0, 0.0};
    auto lit = lhs.amplitudes().begin();
    auto rit = rhs.amplitudes().begin();
    while (lit != lhs.amplitudes().end() && rit != rhs.amplitudes().end()) {
        if (lit->first < rit->first) {
            ++lit;
        } else if (rit->first < lit->first) {
            ++rit;
        } else {
            sum += std::conj(lit->second) * rit->second;
            ++lit;
            ++rit;
        }
    }
    return sum;
}

}  // namespace qexch
