#include "qexch/state_vector.hpp"

#include <bit>
#include <stdexcept>

namespace qexch {

char pauli_axis_char(PauliAxis axis) {
    switch (axis) {
        case PauliAxis::X: return 'X';
        case PauliAxis::Y: return 'Y';
        case PauliAxis::Z: return 'Z';
    }
    return '?';
}

std::string format_bits(std::uint32_t key, int n) {
    std::string s(static_cast<std::size_t>(n), '0');
    for (int q = 1; q <= n; ++q) {
        if ((key >> (n - q)) & 1u) s[q - 1] = '1';
    }
    return s;
}

BasisState BasisState::parse(std::string_view text) {
    if (text.empty()) throw std::invalid_argument("BasisState: empty bit string");
    if (text.size() > static_cast<std::size_t>(kMaxQubits)) {
        throw std::invalid_argument("BasisState: more than 24 qubits");
    }
    BasisState s;
    s.n = static_cast<int>(text.size());
    for (char ch : text) {
        s.bits <<= 1;
        if (ch == '1') {
            s.bits |= 1u;
        } else if (ch != '0') {
            throw std::invalid_argument("BasisState: non-binary symbol '" + std::string(1, ch) + "'");
        }
    }
    return s;
}

std::string BasisState::to_string() const { return format_bits(bits, n); }

int BasisState::weight() const { return std::popcount(bits); }

StateVector::StateVector(int n, int radicand) : n_(n), radicand_(radicand) {
    if (n < 1 || n > kMaxQubits) throw std::invalid_argument("StateVector: n out of range");
    if (radicand < 1) throw std::invalid_argument("StateVector: radicand must be positive");
}

void StateVector::insert_term(std::uint32_t key, const ExactScalar& amp) {
    if (amp.is_zero()) return;
    auto [it, fresh] = amps_.emplace(key, amp);
    if (!fresh) {
        it->second += amp;
        if (it->second.is_zero()) amps_.erase(it);
    }
}

StateVector StateVector::basis(std::string_view bits, int radicand) {
    BasisState b = BasisState::parse(bits);
    StateVector s(b.n, radicand);
    s.amps_.emplace(b.bits, ExactScalar::one(radicand));
    return s;
}

StateVector StateVector::perm_sum(int n, int weight, const ExactScalar& coeff) {
    if (weight < 0 || weight > n) throw std::invalid_argument("perm_sum: weight out of range");
    StateVector s(n, coeff.radicand());
    if (coeff.is_zero()) return s;
    if (weight == 0) {
        s.amps_.emplace(0u, coeff);
        return s;
    }
    // Gosper's hack walks the weight class in ascending key order.
    std::uint32_t limit = (n == 32) ? 0xffffffffu : ((1u << n) - 1u);
    std::uint32_t v = (1u << weight) - 1u;
    while (v <= limit) {
        s.amps_.emplace(v, coeff);
        std::uint32_t t = v | (v - 1u);
        if (t == 0xffffffffu) break;
        v = (t + 1u) | (((~t & (t + 1u)) - 1u) >> (std::countr_zero(v) + 1));
    }
    return s;
}

ExactScalar StateVector::amplitude(std::uint32_t key) const {
    auto it = amps_.find(key);
    return it == amps_.end() ? ExactScalar::zero(radicand_) : it->second;
}

StateVector StateVector::operator+(const StateVector& o) const {
    if (n_ != o.n_) throw std::domain_error("StateVector: qubit count mismatch");
    if (radicand_ != o.radicand_) throw std::domain_error("StateVector: radicand mismatch");
    StateVector out = *this;
    for (const auto& [key, amp] : o.amps_) out.insert_term(key, amp);
    return out;
}

StateVector StateVector::operator-(const StateVector& o) const {
    return *this + o.scaled(-ExactScalar::one(o.radicand_));
}

StateVector StateVector::scaled(const ExactScalar& factor) const {
    StateVector out(n_, radicand_);
    if (factor.is_zero()) return out;
    for (const auto& [key, amp] : amps_) out.amps_.emplace(key, amp * factor);
    return out;
}

StateVector StateVector::apply_pauli(PauliAxis axis, int qubit) const {
    if (qubit < 1 || qubit > n_) throw std::out_of_range("apply_pauli: qubit index out of range");
    std::uint32_t mask = 1u << (n_ - qubit);
    StateVector out(n_, radicand_);
    switch (axis) {
        case PauliAxis::X:
            for (const auto& [key, amp] : amps_) out.amps_.emplace(key ^ mask, amp);
            break;
        case PauliAxis::Z: {
            ExactScalar minus_one = -ExactScalar::one(radicand_);
            for (const auto& [key, amp] : amps_) {
                out.amps_.emplace(key, (key & mask) ? amp * minus_one : amp);
            }
            break;
        }
        case PauliAxis::Y: {
            // Y = i X Z: |0> -> i|1>, |1> -> -i|0>.
            ExactScalar plus_i = ExactScalar::i(radicand_);
            ExactScalar minus_i = -plus_i;
            for (const auto& [key, amp] : amps_) {
                out.amps_.emplace(key ^ mask, (key & mask) ? amp * minus_i : amp * plus_i);
            }
            break;
        }
    }
    return out;
}

StateVector StateVector::apply_permutation(const Permutation& perm) const {
    validate_permutation(perm, n_);
    StateVector out(n_, radicand_);
    for (const auto& [key, amp] : amps_) {
        std::uint32_t moved = 0;
        for (int j = 1; j <= n_; ++j) {
            if ((key >> (n_ - j)) & 1u) moved |= 1u << (n_ - perm[j - 1]);
        }
        out.amps_.emplace(moved, amp);
    }
    return out;
}

std::map<int, std::size_t> StateVector::weight_histogram() const {
    std::map<int, std::size_t> hist;
    for (const auto& [key, amp] : amps_) hist[std::popcount(key)]++;
    return hist;
}

ExactScalar StateVector::norm_squared() const { return inner_product(*this, *this); }

bool StateVector::operator==(const StateVector& o) const {
    return n_ == o.n_ && radicand_ == o.radicand_ && amps_ == o.amps_;
}

ExactScalar inner_product(const StateVector& lhs, const StateVector& rhs) {
    if (lhs.n() != rhs.n()) throw std::domain_error("inner_product: qubit count mismatch");
    if (lhs.radicand() != rhs.radicand()) throw std::domain_error("inner_product: radicand mismatch");
    ExactScalar sum = ExactScalar::zero(lhs.radicand());
    auto lit = lhs.amplitudes().begin();
    auto rit = rhs.amplitudes().begin();
    while (lit != lhs.amplitudes().end() && rit != rhs.amplitudes().end()) {
        if (lit->first < rit->first) {
            ++lit;
        } else if (rit->first < lit->first) {
            ++rit;
        } else {
            sum += lit->second.conj() * rit->second;
            ++lit;
            ++rit;
        }
    }
    return sum;
}

void validate_permutation(const Permutation& perm, int n) {
    if (static_cast<int>(perm.size()) != n) {
        throw std::invalid_argument("permutation: size does not match qubit count");
    }
    std::vector<bool> seen(static_cast<std::size_t>(n), false);
    for (int image : perm) {
        if (image < 1 || image > n || seen[image - 1]) {
            throw std::invalid_argument("permutation: not a bijection on {1..n}");
        }
        seen[image - 1] = true;
    }
}

Permutation compose_permutations(const Permutation& second, const Permutation& first) {
    if (second.size() != first.size()) {
        throw std::invalid_argument("permutation: size mismatch in composition");
    }
    Permutation out(first.size());
    for (std::size_t j = 0; j < first.size(); ++j) out[j] = second[first[j] - 1];
    return out;
}

Permutation transposition(int n, int j, int k) {
    if (j < 1 || k < 1 || j > n || k > n || j == k) {
        throw std::invalid_argument("transposition: bad indices");
    }
    Permutation perm(static_cast<std::size_t>(n));
    for (int q = 1; q <= n; ++q) perm[q - 1] = q;
    perm[j - 1] = k;
    perm[k - 1] = j;
    return perm;
}

}  // namespace qexch
