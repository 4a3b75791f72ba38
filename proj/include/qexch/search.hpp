#pragma once

#include "qexch/codes.hpp"
#include "qexch/error_ops.hpp"
#include "qexch/float_state.hpp"
#include "qexch/rational.hpp"

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace qexch {

// Support of a two-word fully symmetric code: the weights carrying nonzero
// coefficients in each word.
struct SupportPattern {
    int n = 0;
    std::vector<int> word0_weights;
    std::vector<int> word1_weights;
    bool dual_flip_related = false;  // word1 = word0 with all bits flipped

    // Builds the pattern and detects the dual relation.
    static SupportPattern make(int n, std::vector<int> word0, std::vector<int> word1);
    // word1 derived by mirroring word0.
    static SupportPattern dual(int n, std::vector<int> word0);

    std::string to_string() const;  // e.g. "0,6/3,9"
    static SupportPattern parse(int n, const std::string& text);
};

// Every dual pattern on n qubits, deduplicated against its mirror image.
std::vector<SupportPattern> all_dual_patterns(int n);

// Z expectation of a unit-coefficient permutation sum: <S|Z_k S> per weight.
Rational z_expectation_per_weight(int n, int kappa);

enum class Feasibility { Feasible, Infeasible, Unknown };

struct DualphaseReport {
    Feasibility feasibility = Feasibility::Unknown;
    // per-weight contribution of |a_kappa|^2 to <C_0|Z_k C_0>
    std::vector<std::pair<int, Rational>> contributions;
    // squared-magnitude assignment achieving zero, normalized to the smallest weight
    std::map<int, Rational> witness;
    std::string certificate;
};

// Sign analysis of the phase condition for dual-related words.
DualphaseReport dualphase_feasibility(const SupportPattern& pattern);

// Max deviation of the floating Gram tensor from the degenerate structure
// delta_ij * d_pq, with d taken as the word-averaged diagonal block.
double kl_residual(const std::vector<FloatState>& words, const ErrorSet& errors);
double kl_residual(const Code& code, const ErrorSet& errors);

struct SearchResult {
    SupportPattern pattern;
    std::map<int, double> word0_coefficients;  // unit-norm word coefficients
    std::map<int, double> word1_coefficients;
    double residual = 0.0;
    int restarts_used = 0;
    std::uint64_t seed = 0;
};

struct SearchOptions {
    int max_evals_per_restart = 400;
    // Sample a seeded +-1 sign per basis string inside each supported weight
    // class, per restart. Off by default: the fully symmetric family keeps
    // every term of a weight class at the same sign.
    bool sign_extensions = false;
};

// Seeded multi-start simplex descent over real coefficients, one result per
// pattern, sorted by residual. Deterministic given (seed, budget, patterns).
std::vector<SearchResult> search_perm_invariant(int n, const ErrorSet& errors,
                                                const std::vector<SupportPattern>& patterns,
                                                int restarts, std::uint64_t seed,
                                                const SearchOptions& options = {});

// Shared wording for search reports; residual floors are never proofs.
std::string search_outcome_note(bool reached_tolerance);

enum class BoundsModel { Single, SinglePlusExchange, AllTwoBit, IrrepConstruction };

BoundsModel parse_bounds_model(const std::string& name);

struct BoundsResult {
    BoundsModel model;
    std::string inequality;   // the dimension-count inequality, as text
    long long lhs_at_min = 0; // left-hand side evaluated at min_n
    int min_n = 0;            // least n from which the inequality holds onward
};

BoundsResult bounds_min_qubits(BoundsModel model);

}  // namespace qexch
