#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qexch/codes.hpp"
#include "qexch/error_ops.hpp"
#include "test_util.hpp"

using namespace qexch;

TEST_CASE("exchange acts as the printed expansion on the Shor code") {
    Code shor = builtin_code("shor9");
    ErrorOp e34 = ErrorOp::exchange(3, 4);
    StateVector expected = StateVector::basis("000000000") + StateVector::basis("001011111") +
                           StateVector::basis("110100111") + StateVector::basis("111111000");
    CHECK(e34.apply(shor.word(0).state) == expected);

    StateVector expected1 = StateVector::basis("111111111") + StateVector::basis("110100000") +
                            StateVector::basis("001011000") + StateVector::basis("000000111");
    CHECK(e34.apply(shor.word(1).state) == expected1);
}

TEST_CASE("exchange basics") {
    StateVector zeros = StateVector::basis("0000");
    CHECK(ErrorOp::exchange(2, 4).apply(zeros) == zeros);
    CHECK(ErrorOp::exchange(1, 2).apply(StateVector::basis("01")) == StateVector::basis("10"));
    CHECK_THROWS_AS(ErrorOp::exchange(3, 3), std::invalid_argument);
    CHECK_THROWS_AS(ErrorOp::exchange(2, 1), std::invalid_argument);
    CHECK_THROWS_AS(ErrorOp::exchange(2, 9).apply(zeros), std::invalid_argument);
}

TEST_CASE("four-pauli form of the exchange") {
    CHECK(exchange_as_pauli_sum(1, 2, StateVector::basis("01")) == StateVector::basis("10"));
    CHECK(exchange_as_pauli_sum(1, 2, StateVector::basis("00")) == StateVector::basis("00"));

    // the singlet is antisymmetric under swap
    StateVector singlet = StateVector::basis("01") - StateVector::basis("10");
    CHECK(exchange_as_pauli_sum(1, 2, singlet) ==
          singlet.scaled(-ExactScalar::one(1)));
}

TEST_CASE("exchange equals its four-pauli form on random sparse states") {
    auto rng = seeded_rng(41, 0);
    for (int t = 0; t < 200; ++t) {
        int n = 2 + static_cast<int>(t % 9);  // n in 2..10
        StateVector s = testing::random_state(rng, n, 28);
        std::uniform_int_distribution<int> pick(1, n);
        int j = pick(rng), k = pick(rng);
        if (j == k) continue;
        if (j > k) std::swap(j, k);
        CHECK(ErrorOp::exchange(j, k).apply(s) == exchange_as_pauli_sum(j, k, s));
    }
}

TEST_CASE("exchange algebra") {
    auto rng = seeded_rng(43, 0);
    for (int t = 0; t < 40; ++t) {
        int n = 3 + static_cast<int>(t % 6);
        StateVector s = testing::random_state(rng, n, 5);
        std::uniform_int_distribution<int> pick(1, n);
        int j = pick(rng), k = pick(rng);
        if (j == k) continue;
        if (j > k) std::swap(j, k);
        ErrorOp e = ErrorOp::exchange(j, k);
        // involution and unitarity
        CHECK(e.apply(e.apply(s)) == s);
        CHECK(e.apply(s).norm_squared() == s.norm_squared());
        // commutes with a Pauli on a third qubit
        int l = pick(rng);
        if (l == j || l == k) continue;
        StateVector lhs = e.apply(s.apply_pauli(PauliAxis::Y, l));
        CHECK(lhs == e.apply(s).apply_pauli(PauliAxis::Y, l));
    }
}

TEST_CASE("within-triple exchanges fix the Shor code words") {
    Code shor = builtin_code("shor9");
    for (int base : {1, 4, 7}) {
        for (int j = base; j < base + 3; ++j) {
            for (int k = j + 1; k < base + 3; ++k) {
                ErrorOp e = ErrorOp::exchange(j, k);
                CHECK(e.apply(shor.word(0).state) == shor.word(0).state);
                CHECK(e.apply(shor.word(1).state) == shor.word(1).state);
            }
        }
    }
    // across triples the words move
    CHECK(ErrorOp::exchange(3, 4).apply(shor.word(0).state) != shor.word(0).state);
}

TEST_CASE("error set construction") {
    ErrorSet full = make_error_set(9, parse_error_classes("identity,pauli,exchange"));
    CHECK(full.size() == 64);  // 1 + 27 + 36
    CHECK(full.ops[0].label() == "I");
    CHECK(full.ops[1].label() == "X_1");
    CHECK(full.ops[10].label() == "Y_1");
    CHECK(full.ops[19].label() == "Z_1");
    CHECK(full.ops[28].label() == "E_12");
    CHECK(full.ops[63].label() == "E_89");

    ErrorSet small = make_error_set(3, parse_error_classes("identity,exchange"));
    CHECK(small.size() == 4);  // unordered pairs j < k

    ErrorSet paulis = make_error_set(5, parse_error_classes("identity,x,y,z"));
    CHECK(paulis.size() == 16);  // 3n + 1

    CHECK_THROWS_AS(make_error_set(5, {}), std::invalid_argument);
    CHECK_THROWS_AS(make_error_set(1, parse_error_classes("exchange")), std::invalid_argument);
    CHECK_THROWS_AS(parse_error_classes("bogus"), std::invalid_argument);
    CHECK(parse_error_classes("pauli") ==
          std::set<ErrorClass>{ErrorClass::X, ErrorClass::Y, ErrorClass::Z});
}

TEST_CASE("error set composition summary") {
    ErrorSet full = make_error_set(9, parse_error_classes("pauli,exchange"));
    CHECK(full.composition() == "1 identity + 9 X + 9 Y + 9 Z + 36 exchange (unordered pairs j<k)");
}

TEST_CASE("composition semantics") {
    ErrorOp x3 = ErrorOp::pauli(PauliAxis::X, 3);
    CHECK(compose_errors(ErrorOp::identity(), x3).label() == "X_3");

    // compose(E_12, X_1) applies X_1 first, then swaps; equal to X_2 E_12
    ErrorOp combo = compose_errors(ErrorOp::exchange(1, 2), ErrorOp::pauli(PauliAxis::X, 1));
    for (const char* bits : {"00", "01", "10", "11"}) {
        StateVector s = StateVector::basis(bits);
        StateVector via_order = ErrorOp::exchange(1, 2).apply(s.apply_pauli(PauliAxis::X, 1));
        CHECK(combo.apply(s) == via_order);
        StateVector relabeled = ErrorOp::exchange(1, 2).apply(s).apply_pauli(PauliAxis::X, 2);
        CHECK(combo.apply(s) == relabeled);
    }

    // products flatten
    ErrorOp nested = compose_errors(combo, ErrorOp::pauli(PauliAxis::Z, 2));
    CHECK(nested.factors().size() == 3);
    CHECK(nested.label() == "E_12*X_1*Z_2");
}

TEST_CASE("error set rejects malformed op lists") {
    std::vector<ErrorOp> no_identity{ErrorOp::pauli(PauliAxis::X, 1)};
    CHECK_THROWS_AS(ErrorSet::from_ops(3, std::move(no_identity)), std::invalid_argument);
    std::vector<ErrorOp> duplicate{ErrorOp::identity(), ErrorOp::pauli(PauliAxis::X, 1),
                                   ErrorOp::pauli(PauliAxis::X, 1)};
    CHECK_THROWS_AS(ErrorSet::from_ops(3, std::move(duplicate)), std::invalid_argument);
}
