#include "qexch/klcheck.hpp"

#include "qexch/combinatorics.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace qexch {

GramTensor::GramTensor(std::vector<std::string> word_labels, std::vector<std::string> error_labels,
                       int radicand)
    : word_labels_(std::move(word_labels)),
      error_labels_(std::move(error_labels)),
      radicand_(radicand) {
    entries_.assign(word_labels_.size() * word_labels_.size() * error_labels_.size() *
                        error_labels_.size(),
                    ExactScalar::zero(radicand_));
}

GramTensor gram_blocks(const Code& code, const ErrorSet& errors) {
    if (errors.n != code.n()) throw std::domain_error("gram_blocks: qubit count mismatch");
    std::size_t w = code.word_count();
    std::size_t e = errors.size();

    std::vector<std::string> word_labels;
    for (const auto& word : code.words()) word_labels.push_back(word.label);
    std::vector<std::string> error_labels;
    for (const auto& op : errors.ops) error_labels.push_back(op.label());

    std::vector<std::vector<StateVector>> images;
    images.reserve(w);
    for (const auto& word : code.words()) {
        std::vector<StateVector> row;
        row.reserve(e);
        for (const auto& op : errors.ops) row.push_back(op.apply(word.state));
        images.push_back(std::move(row));
    }

    GramTensor gram(std::move(word_labels), std::move(error_labels), code.radicand());
    for (std::size_t i = 0; i < w; ++i) {
        for (std::size_t j = 0; j < w; ++j) {
            for (std::size_t p = 0; p < e; ++p) {
                for (std::size_t q = 0; q < e; ++q) {
                    gram.set_entry(i, j, p, q, inner_product(images[i][p], images[j][q]));
                }
            }
        }
    }
    return gram;
}

namespace {

DMatrix extract_d(const GramTensor& gram) {
    DMatrix d;
    d.error_labels = gram.error_labels();
    std::size_t e = gram.error_count();
    d.entries.reserve(e * e);
    ExactMatrix rows(e);
    for (std::size_t p = 0; p < e; ++p) {
        rows[p].reserve(e);
        for (std::size_t q = 0; q < e; ++q) {
            d.entries.push_back(gram.entry(0, 0, p, q));
            rows[p].push_back(gram.entry(0, 0, p, q));
        }
    }
    d.rank = exact_rank(std::move(rows));

    // Connected components of the nonzero pattern.
    std::vector<int> component(e, -1);
    for (std::size_t start = 0; start < e; ++start) {
        if (component[start] >= 0) continue;
        int id = static_cast<int>(d.blocks.size());
        std::vector<int> members;
        std::vector<std::size_t> stack{start};
        component[start] = id;
        while (!stack.empty()) {
            std::size_t p = stack.back();
            stack.pop_back();
            members.push_back(static_cast<int>(p));
            for (std::size_t q = 0; q < e; ++q) {
                if (component[q] < 0 && !d.at(p, q).is_zero()) {
                    component[q] = id;
                    stack.push_back(q);
                }
            }
        }
        std::sort(members.begin(), members.end());
        d.blocks.push_back(std::move(members));
    }
    return d;
}

void sort_witnesses(std::vector<KlWitness>& witnesses) {
    std::sort(witnesses.begin(), witnesses.end(), [](const KlWitness& a, const KlWitness& b) {
        return std::tie(a.i, a.j, a.p, a.q) < std::tie(b.i, b.j, b.p, b.q);
    });
}

KLReport check_degenerate(const GramTensor& gram, KlMode mode) {
    KLReport report;
    report.condition = mode;
    std::size_t w = gram.word_count();
    std::size_t e = gram.error_count();
    ExactScalar zero = ExactScalar::zero(gram.radicand());
    for (std::size_t i = 0; i < w; ++i) {
        for (std::size_t j = 0; j < w; ++j) {
            for (std::size_t p = 0; p < e; ++p) {
                for (std::size_t q = 0; q < e; ++q) {
                    const ExactScalar& found = gram.entry(i, j, p, q);
                    const ExactScalar& expected = (i == j) ? gram.entry(0, 0, p, q) : zero;
                    if (!(found == expected)) {
                        report.witnesses.push_back({static_cast<int>(i), static_cast<int>(j),
                                                    static_cast<int>(p), static_cast<int>(q), found,
                                                    expected});
                    }
                }
            }
        }
    }
    sort_witnesses(report.witnesses);
    report.passed = report.witnesses.empty();
    if (report.passed) report.d_matrix = extract_d(gram);
    return report;
}

}  // namespace

KLReport check_kl(const GramTensor& gram, KlMode mode) {
    if (mode == KlMode::Strict) {
        KLReport report;
        report.condition = KlMode::Strict;
        ExactScalar scale = gram.entry(0, 0, 0, 0);
        report.strict_scale = scale;
        std::size_t w = gram.word_count();
        std::size_t e = gram.error_count();
        ExactScalar zero = ExactScalar::zero(gram.radicand());
        for (std::size_t i = 0; i < w; ++i) {
            for (std::size_t j = 0; j < w; ++j) {
                for (std::size_t p = 0; p < e; ++p) {
                    for (std::size_t q = 0; q < e; ++q) {
                        const ExactScalar& found = gram.entry(i, j, p, q);
                        const ExactScalar& expected = (i == j && p == q) ? scale : zero;
                        if (!(found == expected)) {
                            report.witnesses.push_back({static_cast<int>(i), static_cast<int>(j),
                                                        static_cast<int>(p), static_cast<int>(q),
                                                        found, expected});
                        }
                    }
                }
            }
        }
        sort_witnesses(report.witnesses);
        report.passed = report.witnesses.empty();
        if (report.passed) report.d_matrix = extract_d(gram);
        return report;
    }
    return check_degenerate(gram, KlMode::Degenerate);
}

KLReport check_kl_extended(const Code& code, const ErrorSet& errors) {
    std::set<std::pair<int, int>> seen;
    for (const auto& word : code.words()) {
        if (!word.logical || !word.mult) {
            throw std::invalid_argument("check_kl_extended: word '" + word.label +
                                        "' lacks (logical, multiplicity) labels");
        }
        if (!seen.insert({*word.logical, *word.mult}).second) {
            throw std::invalid_argument("check_kl_extended: duplicate (logical, multiplicity) pair");
        }
    }
    // With distinct (i, m) pairs the requirement delta_ij * delta_mm' * d_pq
    // is the degenerate condition over the labeled word list.
    return check_degenerate(gram_blocks(code, errors), KlMode::Extended);
}

DMatrix d_matrix(const GramTensor& gram) {
    KLReport report = check_kl(gram, KlMode::Degenerate);
    if (!report.passed) {
        throw std::domain_error("d_matrix: gram tensor is not degenerate-consistent (" +
                                std::to_string(report.witnesses.size()) + " witnesses)");
    }
    return *report.d_matrix;
}

int span_dimension(const Code& code, const ErrorSet& errors) {
    if (errors.n != code.n()) throw std::domain_error("span_dimension: qubit count mismatch");
    std::vector<std::map<std::uint32_t, ExactScalar>> rows;
    rows.reserve(code.word_count() * errors.size());
    for (const auto& word : code.words()) {
        for (const auto& op : errors.ops) {
            rows.push_back(op.apply(word.state).amplitudes());
        }
    }
    return sparse_row_rank(std::move(rows));
}

GeneralNIdentities general_n_identities(int n, int kappa) {
    if (kappa < 1 || kappa > n - 1) {
        throw std::invalid_argument("general_n_identities: need 1 <= kappa <= n-1");
    }
    long long centered = static_cast<long long>(n) - 2 * kappa;
    Rational z_term(BigInt(centered * centered - n) * binomial(n, kappa),
                    BigInt(static_cast<long long>(n) * (n - 1)));
    return {z_term, 2 * binomial(n - 2, kappa - 1)};
}

}  // namespace qexch
