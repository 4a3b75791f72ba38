#pragma once

#include "qexch/codes.hpp"
#include "qexch/error_ops.hpp"
#include "qexch/exact_linalg.hpp"
#include "qexch/rational.hpp"

#include <optional>
#include <string>
#include <vector>

namespace qexch {

// All blocks <e_p C_i | e_q C_j>, indexed by word order and error-set order.
class GramTensor {
    std::vector<std::string> word_labels_;
    std::vector<std::string> error_labels_;
    int radicand_;
    std::vector<ExactScalar> entries_;

    std::size_t index(std::size_t i, std::size_t j, std::size_t p, std::size_t q) const {
        std::size_t w = word_labels_.size(), e = error_labels_.size();
        return ((i * w + j) * e + p) * e + q;
    }

public:
    GramTensor(std::vector<std::string> word_labels, std::vector<std::string> error_labels,
               int radicand);

    std::size_t word_count() const { return word_labels_.size(); }
    std::size_t error_count() const { return error_labels_.size(); }
    const std::vector<std::string>& word_labels() const { return word_labels_; }
    const std::vector<std::string>& error_labels() const { return error_labels_; }
    int radicand() const { return radicand_; }

    const ExactScalar& entry(std::size_t i, std::size_t j, std::size_t p, std::size_t q) const {
        return entries_[index(i, j, p, q)];
    }
    void set_entry(std::size_t i, std::size_t j, std::size_t p, std::size_t q, ExactScalar value) {
        entries_[index(i, j, p, q)] = std::move(value);
    }
};

GramTensor gram_blocks(const Code& code, const ErrorSet& errors);

// Word-independent Gram matrix extracted from a degenerate-consistent tensor.
struct DMatrix {
    std::vector<std::string> error_labels;
    std::vector<ExactScalar> entries;  // row-major, error_count^2
    int rank = 0;
    // Partition of error indices into mutually orthogonal groups (connected
    // components of the nonzero pattern), ordered by smallest member.
    std::vector<std::vector<int>> blocks;

    const ExactScalar& at(std::size_t p, std::size_t q) const {
        return entries[p * error_labels.size() + q];
    }
};

enum class KlMode { Strict, Degenerate, Extended };

struct KlWitness {
    int i, j, p, q;
    ExactScalar found;
    ExactScalar expected;
};

struct KLReport {
    KlMode condition = KlMode::Degenerate;
    bool passed = false;
    std::vector<KlWitness> witnesses;
    std::optional<DMatrix> d_matrix;
    // Strict mode tolerates one global positive scale (the shared word norm).
    std::optional<ExactScalar> strict_scale;
};

KLReport check_kl(const GramTensor& gram, KlMode mode);

// Extended condition over (logical, multiplicity)-labeled words; every word
// of the code must carry both labels.
KLReport check_kl_extended(const Code& code, const ErrorSet& errors);

// Throws std::domain_error unless the tensor is degenerate-consistent.
DMatrix d_matrix(const GramTensor& gram);

// Exact dimension of span{e_p |C_i>} by sparse row elimination.
int span_dimension(const Code& code, const ErrorSet& errors);

// Predicted Gram quantities for a full permutation sum of the given weight:
// the off-diagonal Z entry and the number of terms an off-diagonal X overlap
// collects (each contributing |coeff|^2).
struct GeneralNIdentities {
    Rational z_offdiagonal;
    BigInt x_term_count;
};

GeneralNIdentities general_n_identities(int n, int kappa);

}  // namespace qexch
