#pragma once

#include "qexch/float_state.hpp"
#include "qexch/state_vector.hpp"

#include <complex>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace qexch {

struct CodeWord {
    std::string label;
    StateVector state;
    // Logical index i and multiplicity index m for extended (irrep-labeled)
    // codes; unset on plain codes.
    std::optional<int> logical;
    std::optional<int> mult;
};

// Ordered list of code words sharing one qubit count and radicand. Words are
// kept unnormalized, exactly as constructed.
class Code {
    std::string name_;
    int n_;
    int radicand_;
    std::vector<CodeWord> words_;
    std::string description_;

public:
    Code(std::string name, int n, int radicand, std::vector<CodeWord> words,
         std::string description = "");

    const std::string& name() const { return name_; }
    int n() const { return n_; }
    int radicand() const { return radicand_; }
    std::size_t word_count() const { return words_.size(); }
    const std::vector<CodeWord>& words() const { return words_; }
    const CodeWord& word(std::size_t index) const { return words_.at(index); }
    const std::string& description() const { return description_; }

    // Same words re-tagged with (logical, mult) labels, in word order.
    Code with_labels(const std::vector<std::pair<int, int>>& labels) const;
};

std::vector<std::string> builtin_code_names();
Code builtin_code(const std::string& name);

// Per-word coefficient support for the fully symmetric family: weight -> a_kappa.
struct PermInvariantWordSpec {
    std::map<int, ExactScalar> coefficients;
};

Code perm_invariant_code(int n, const std::vector<PermInvariantWordSpec>& words,
                         const std::string& name = "perm-invariant");

// alpha * C0_hat + beta * C1_hat over unit-normalized words, renormalized.
FloatState logical_state(const Code& code, std::complex<double> alpha, std::complex<double> beta);

// "qexch-code v1" JSON document; round-trips every amplitude bit-exactly.
void save_code(const Code& code, std::ostream& out);
void save_code(const Code& code, const std::string& path);
Code load_code(std::istream& in);
Code load_code(const std::string& path);

}  // namespace qexch
