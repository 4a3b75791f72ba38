#pragma once

#include "qexch/codes.hpp"
#include "qexch/error_ops.hpp"
#include "qexch/klcheck.hpp"

#include <array>
#include <complex>
#include <stdexcept>
#include <vector>

namespace qexch {

// build_recovery refuses codes that fail the degenerate check; the failing
// report rides along.
class KlRefusal : public std::runtime_error {
public:
    KLReport report;
    explicit KlRefusal(KLReport r)
        : std::runtime_error("recovery refused: degenerate error-correction condition fails (" +
                             std::to_string(r.witnesses.size()) + " witnesses)"),
          report(std::move(r)) {}
};

struct SyndromeSubspace {
    double eigenvalue;  // of D normalized by the word norm
    int block;          // originating block of the D matrix
    // Significant rows of the orthogonalizing transform: (error index p, U_qp).
    std::vector<std::pair<int, std::complex<double>>> composition;
    // Orthonormal images of the two normalized words under the corrected error.
    std::array<FloatState, 2> basis;
};

class RecoveryPlan {
    int n_;
    ErrorSet errors_;
    std::array<FloatState, 2> words_;
    std::vector<SyndromeSubspace> syndromes_;
    double threshold_;
    int d_rank_;

    friend RecoveryPlan build_recovery(const Code&, const ErrorSet&, double);
    RecoveryPlan(int n, ErrorSet errors, std::array<FloatState, 2> words, double threshold,
                 int d_rank)
        : n_(n),
          errors_(std::move(errors)),
          words_(std::move(words)),
          threshold_(threshold),
          d_rank_(d_rank) {}

public:
    int n() const { return n_; }
    const ErrorSet& errors() const { return errors_; }
    const std::array<FloatState, 2>& words() const { return words_; }
    const std::vector<SyndromeSubspace>& syndromes() const { return syndromes_; }
    std::size_t syndrome_count() const { return syndromes_.size(); }
    double threshold() const { return threshold_; }
    int d_rank() const { return d_rank_; }
};

// Diagonalize the word-independent Gram matrix and turn every eigenvalue
// above threshold_factor * lambda_max into a syndrome subspace.
RecoveryPlan build_recovery(const Code& code, const ErrorSet& errors,
                            double threshold_factor = 1e-8);

struct RecoveryBranch {
    double probability;
    FloatState post_state;
};

struct RecoveryOutcome {
    std::vector<RecoveryBranch> branches;
    double residual;  // probability mass outside every syndrome subspace
};

// Project a unit state onto each syndrome subspace and apply the correction
// map branch by branch.
RecoveryOutcome recover(const RecoveryPlan& plan, const FloatState& state);

// Prepare alpha*C0_hat + beta*C1_hat, apply the error, recover, and return
// the probability-weighted squared overlap with the prepared state.
double roundtrip_fidelity(const RecoveryPlan& plan, const ErrorOp& error,
                          std::complex<double> alpha, std::complex<double> beta);

}  // namespace qexch
