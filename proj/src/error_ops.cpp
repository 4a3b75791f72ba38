#include "qexch/error_ops.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

namespace qexch {

namespace {

std::string exchange_label(int j, int k) {
    if (j < 10 && k < 10) return "E_" + std::to_string(j) + std::to_string(k);
    return "E_" + std::to_string(j) + "_" + std::to_string(k);
}

std::string permutation_label(const Permutation& perm) {
    std::string s = "P_";
    for (std::size_t i = 0; i < perm.size(); ++i) {
        if (i) s += '.';
        s += std::to_string(perm[i]);
    }
    return s;
}

}  // namespace

ErrorOp ErrorOp::identity() { return ErrorOp(); }

ErrorOp ErrorOp::pauli(PauliAxis axis, int qubit) {
    if (qubit < 1) throw std::invalid_argument("ErrorOp: qubit index must be positive");
    ErrorOp op;
    op.kind_ = ErrorKind::Pauli;
    op.axis_ = axis;
    op.qubit_ = qubit;
    op.label_ = std::string(1, pauli_axis_char(axis)) + "_" + std::to_string(qubit);
    return op;
}

ErrorOp ErrorOp::exchange(int j, int k) {
    if (j < 1 || k <= j) throw std::invalid_argument("ErrorOp: exchange requires 1 <= j < k");
    ErrorOp op;
    op.kind_ = ErrorKind::Exchange;
    op.j_ = j;
    op.k_ = k;
    op.label_ = exchange_label(j, k);
    return op;
}

ErrorOp ErrorOp::permutation(Permutation perm) {
    validate_permutation(perm, static_cast<int>(perm.size()));
    ErrorOp op;
    op.kind_ = ErrorKind::PermutationOp;
    op.perm_ = std::move(perm);
    op.label_ = permutation_label(op.perm_);
    return op;
}

ErrorOp ErrorOp::product(std::vector<ErrorOp> factors) {
    std::vector<ErrorOp> flat;
    for (auto& f : factors) {
        if (f.kind_ == ErrorKind::Product) {
            flat.insert(flat.end(), f.factors_.begin(), f.factors_.end());
        } else if (f.kind_ != ErrorKind::Identity) {
            flat.push_back(std::move(f));
        }
    }
    if (flat.empty()) return identity();
    if (flat.size() == 1) return flat.front();
    ErrorOp op;
    op.kind_ = ErrorKind::Product;
    std::string label;
    for (const auto& f : flat) {
        if (!label.empty()) label += '*';
        label += f.label_;
    }
    op.factors_ = std::move(flat);
    op.label_ = std::move(label);
    return op;
}

template <typename State>
static State apply_impl(const ErrorOp& op, const State& state) {
    switch (op.kind()) {
        case ErrorKind::Identity:
            return state;
        case ErrorKind::Pauli:
            return state.apply_pauli(op.axis(), op.qubit());
        case ErrorKind::Exchange:
            return state.apply_permutation(transposition(state.n(), op.exchange_j(), op.exchange_k()));
        case ErrorKind::PermutationOp:
            return state.apply_permutation(op.perm());
        case ErrorKind::Product: {
            State current = state;
            for (auto it = op.factors().rbegin(); it != op.factors().rend(); ++it) {
                current = apply_impl(*it, current);
            }
            return current;
        }
    }
    throw std::logic_error("ErrorOp: unknown kind");
}

StateVector ErrorOp::apply(const StateVector& state) const { return apply_impl(*this, state); }

FloatState ErrorOp::apply(const FloatState& state) const { return apply_impl(*this, state); }

ErrorOp compose_errors(const ErrorOp& e1, const ErrorOp& e2) {
    return ErrorOp::product({e1, e2});
}

StateVector exchange_as_pauli_sum(int j, int k, const StateVector& state) {
    if (j < 1 || k <= j || k > state.n()) {
        throw std::out_of_range("exchange_as_pauli_sum: indices out of range");
    }
    StateVector zz = state.apply_pauli(PauliAxis::Z, j).apply_pauli(PauliAxis::Z, k);
    StateVector xx = state.apply_pauli(PauliAxis::X, j).apply_pauli(PauliAxis::X, k);
    StateVector yy = state.apply_pauli(PauliAxis::Y, j).apply_pauli(PauliAxis::Y, k);
    ExactScalar half(Rational(1, 2), state.radicand());
    return (state + zz + xx + yy).scaled(half);
}

ErrorSet ErrorSet::from_ops(int n, std::vector<ErrorOp> ops) {
    if (n < 1 || n > kMaxQubits) throw std::invalid_argument("ErrorSet: n out of range");
    if (ops.empty() || ops.front().kind() != ErrorKind::Identity) {
        throw std::invalid_argument("ErrorSet: identity must be first");
    }
    std::set<std::string> labels;
    for (std::size_t i = 0; i < ops.size(); ++i) {
        if (i > 0 && ops[i].kind() == ErrorKind::Identity) {
            throw std::invalid_argument("ErrorSet: identity present more than once");
        }
        if (!labels.insert(ops[i].label()).second) {
            throw std::invalid_argument("ErrorSet: duplicate label " + ops[i].label());
        }
    }
    ErrorSet set;
    set.n = n;
    set.ops = std::move(ops);
    return set;
}

std::string ErrorSet::composition() const {
    std::size_t pauli[3] = {0, 0, 0};
    std::size_t exchanges = 0, perms = 0, products = 0;
    for (const auto& op : ops) {
        switch (op.kind()) {
            case ErrorKind::Identity: break;
            case ErrorKind::Pauli: pauli[static_cast<int>(op.axis())]++; break;
            case ErrorKind::Exchange: exchanges++; break;
            case ErrorKind::PermutationOp: perms++; break;
            case ErrorKind::Product: products++; break;
        }
    }
    std::ostringstream out;
    out << "1 identity";
    const char* names = "XYZ";
    for (int a = 0; a < 3; ++a) {
        if (pauli[a]) out << " + " << pauli[a] << " " << names[a];
    }
    if (exchanges) out << " + " << exchanges << " exchange (unordered pairs j<k)";
    if (perms) out << " + " << perms << " permutation";
    if (products) out << " + " << products << " product";
    return out.str();
}

ErrorSet make_error_set(int n, const std::set<ErrorClass>& classes) {
    if (classes.empty()) throw std::invalid_argument("make_error_set: empty class set");
    if (classes.count(ErrorClass::Exchange) && n < 2) {
        throw std::invalid_argument("make_error_set: exchange errors need n >= 2");
    }
    std::vector<ErrorOp> ops;
    ops.push_back(ErrorOp::identity());
    for (PauliAxis axis : {PauliAxis::X, PauliAxis::Y, PauliAxis::Z}) {
        ErrorClass cls = axis == PauliAxis::X   ? ErrorClass::X
                         : axis == PauliAxis::Y ? ErrorClass::Y
                                                : ErrorClass::Z;
        if (!classes.count(cls)) continue;
        for (int q = 1; q <= n; ++q) ops.push_back(ErrorOp::pauli(axis, q));
    }
    if (classes.count(ErrorClass::Exchange)) {
        for (int j = 1; j <= n; ++j) {
            for (int k = j + 1; k <= n; ++k) ops.push_back(ErrorOp::exchange(j, k));
        }
    }
    return ErrorSet::from_ops(n, std::move(ops));
}

std::set<ErrorClass> parse_error_classes(const std::string& text) {
    std::set<ErrorClass> classes;
    std::stringstream stream(text);
    std::string token;
    while (std::getline(stream, token, ',')) {
        token.erase(std::remove_if(token.begin(), token.end(), ::isspace), token.end());
        if (token.empty()) continue;
        if (token == "identity") {
            classes.insert(ErrorClass::Identity);
        } else if (token == "x") {
            classes.insert(ErrorClass::X);
        } else if (token == "y") {
            classes.insert(ErrorClass::Y);
        } else if (token == "z") {
            classes.insert(ErrorClass::Z);
        } else if (token == "pauli") {
            classes.insert(ErrorClass::X);
            classes.insert(ErrorClass::Y);
            classes.insert(ErrorClass::Z);
        } else if (token == "exchange") {
            classes.insert(ErrorClass::Exchange);
        } else {
            throw std::invalid_argument("unknown error class '" + token + "'");
        }
    }
    if (classes.empty()) throw std::invalid_argument("empty error class list");
    return classes;
}

}  // namespace qexch
