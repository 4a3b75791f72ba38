#include "qexch/recovery.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <numeric>

namespace qexch {

RecoveryPlan build_recovery(const Code& code, const ErrorSet& errors, double threshold_factor) {
    if (code.word_count() != 2) {
        throw std::invalid_argument("build_recovery: code must have exactly two words");
    }
    GramTensor gram = gram_blocks(code, errors);
    KLReport report = check_kl(gram, KlMode::Degenerate);
    if (!report.passed) throw KlRefusal(std::move(report));
    const DMatrix& d = *report.d_matrix;

    double word_norm_sq = d.at(0, 0).to_complex().real();
    if (word_norm_sq <= 0.0) throw std::domain_error("build_recovery: degenerate word norm");
    const auto e = static_cast<Eigen::Index>(errors.size());

    Eigen::MatrixXcd dhat(e, e);
    for (Eigen::Index p = 0; p < e; ++p) {
        for (Eigen::Index q = 0; q < e; ++q) {
            dhat(p, q) = d.at(static_cast<std::size_t>(p), static_cast<std::size_t>(q)).to_complex() /
                         word_norm_sq;
        }
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(dhat);
    if (solver.info() != Eigen::Success) {
        throw std::runtime_error("build_recovery: eigendecomposition failed");
    }
    Eigen::VectorXd eigenvalues = solver.eigenvalues();
    double lambda_max = eigenvalues.maxCoeff();
    double threshold = threshold_factor * lambda_max;
    if (lambda_max <= 0.0) throw std::domain_error("build_recovery: no positive eigenvalues");

    std::array<FloatState, 2> words{FloatState::from_exact(code.word(0).state)
                                        .scaled({1.0 / std::sqrt(word_norm_sq), 0.0}),
                                    FloatState::from_exact(code.word(1).state)
                                        .scaled({1.0 / std::sqrt(word_norm_sq), 0.0})};

    std::vector<std::vector<FloatState>> images(2);
    for (int i = 0; i < 2; ++i) {
        images[i].reserve(errors.size());
        for (const auto& op : errors.ops) images[i].push_back(op.apply(words[i]));
    }

    auto block_of = [&d](Eigen::Index p) {
        for (std::size_t b = 0; b < d.blocks.size(); ++b) {
            for (int member : d.blocks[b]) {
                if (member == static_cast<int>(p)) return static_cast<int>(b);
            }
        }
        return -1;
    };

    RecoveryPlan plan(code.n(), errors, std::move(words), threshold, d.rank);

    // Walk eigenvalue clusters from the top. Within a cluster the eigenspace
    // basis is re-derived by projecting coordinate axes in index order, so the
    // plan does not depend on the solver's arbitrary degenerate basis.
    const double cluster_tol = std::max(1e-9, 1e-9 * std::abs(lambda_max));
    std::vector<Eigen::Index> order(static_cast<std::size_t>(e));
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(),
              [&eigenvalues](Eigen::Index a, Eigen::Index b) {
                  return eigenvalues(a) > eigenvalues(b);
              });

    std::size_t pos = 0;
    while (pos < order.size()) {
        double lambda = eigenvalues(order[pos]);
        std::size_t end = pos;
        while (end < order.size() && std::abs(eigenvalues(order[end]) - lambda) <= cluster_tol) {
            ++end;
        }
        if (lambda > threshold) {
            std::size_t cluster_dim = end - pos;
            Eigen::MatrixXcd projector = Eigen::MatrixXcd::Zero(e, e);
            for (std::size_t k = pos; k < end; ++k) {
                Eigen::VectorXcd v = solver.eigenvectors().col(order[k]);
                projector += v * v.adjoint();
            }
            std::vector<Eigen::VectorXcd> accepted;
            for (Eigen::Index axis = 0; axis < e && accepted.size() < cluster_dim; ++axis) {
                Eigen::VectorXcd w = projector.col(axis);
                for (const auto& u : accepted) w -= u.dot(w) * u;
                double len = w.norm();
                if (len > 1e-8) accepted.push_back(w / len);
            }
            if (accepted.size() != cluster_dim) {
                throw std::runtime_error("build_recovery: eigenspace basis extraction failed");
            }
            for (const auto& v : accepted) {
                SyndromeSubspace syndrome{lambda, 0, {}, {FloatState(code.n()), FloatState(code.n())}};
                double scale = 1.0 / std::sqrt(lambda);
                Eigen::Index dominant = 0;
                double dominant_mag = -1.0;
                for (Eigen::Index p = 0; p < e; ++p) {
                    std::complex<double> u_qp = std::conj(v(p));
                    if (std::abs(u_qp) > 1e-12) {
                        syndrome.composition.emplace_back(static_cast<int>(p), u_qp);
                        for (int i = 0; i < 2; ++i) {
                            syndrome.basis[i].add_scaled(images[i][static_cast<std::size_t>(p)],
                                                         u_qp * scale);
                        }
                        if (std::abs(u_qp) > dominant_mag) {
                            dominant_mag = std::abs(u_qp);
                            dominant = p;
                        }
                    }
                }
                syndrome.block = block_of(dominant);
                plan.syndromes_.push_back(std::move(syndrome));
            }
        }
        pos = end;
    }
    return plan;
}

RecoveryOutcome recover(const RecoveryPlan& plan, const FloatState& state) {
    if (state.n() != plan.n()) throw std::domain_error("recover: qubit count mismatch");
    double norm = state.norm();
    if (std::abs(norm - 1.0) > 1e-6) {
        throw std::invalid_argument("recover: input state is not unit-norm");
    }
    RecoveryOutcome outcome;
    double captured = 0.0;
    for (const auto& syndrome : plan.syndromes()) {
        std::complex<double> c0 = inner_product(syndrome.basis[0], state);
        std::complex<double> c1 = inner_product(syndrome.basis[1], state);
        double probability = std::norm(c0) + std::norm(c1);
        if (probability <= 1e-12) continue;
        FloatState corrected(plan.n());
        double inv_len = 1.0 / std::sqrt(probability);
        corrected.add_scaled(plan.words()[0], c0 * inv_len);
        corrected.add_scaled(plan.words()[1], c1 * inv_len);
        outcome.branches.push_back({probability, std::move(corrected)});
        captured += probability;
    }
    outcome.residual = std::max(0.0, 1.0 - captured);
    return outcome;
}

double roundtrip_fidelity(const RecoveryPlan& plan, const ErrorOp& error,
                          std::complex<double> alpha, std::complex<double> beta) {
    double len = std::sqrt(std::norm(alpha) + std::norm(beta));
    if (len < 1e-12) throw std::invalid_argument("roundtrip_fidelity: zero logical amplitudes");
    FloatState psi(plan.n());
    psi.add_scaled(plan.words()[0], alpha / len);
    psi.add_scaled(plan.words()[1], beta / len);
    psi = psi.normalized();

    FloatState corrupted = error.apply(psi).normalized();
    RecoveryOutcome outcome = recover(plan, corrupted);
    double fidelity = 0.0;
    for (const auto& branch : outcome.branches) {
        fidelity += branch.probability * std::norm(inner_product(psi, branch.post_state));
    }
    return fidelity;
}

}  // namespace qexch
