// qexch: verification and search toolkit for quantum codes under Pauli
// exchange errors. Subcommands cover code inspection, exact Gram/KL checks,
// the D-matrix analysis, recovery round-trips, dimension bounds, and the
// permutation-invariant code search.

#include "qexch/codes.hpp"
#include "qexch/error_ops.hpp"
#include "qexch/klcheck.hpp"
#include "qexch/recovery.hpp"
#include "qexch/rng.hpp"
#include "qexch/search.hpp"

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <complex>
#include <filesystem>
#include <iomanip>
#include <iostream>
#include <sstream>

namespace {

using OrderedJson = nlohmann::ordered_json;
using namespace qexch;

constexpr const char* kReportFormat = "qexch-report v1";
constexpr int kExitPass = 0;
constexpr int kExitVerificationFailure = 1;
constexpr int kExitUsage = 2;

// Data/usage problems distinct from verification failures.
struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

Code resolve_code(const std::string& ref) {
    for (const auto& name : builtin_code_names()) {
        if (ref == name) return builtin_code(ref);
    }
    if (!std::filesystem::exists(ref)) {
        throw UsageError("unknown code '" + ref + "' (not a builtin, not a file)");
    }
    return load_code(ref);
}

ErrorSet resolve_errors(const Code& code, const std::string& classes) {
    return make_error_set(code.n(), parse_error_classes(classes));
}

OrderedJson scalar_json(const ExactScalar& s) {
    auto z = s.to_complex();
    return OrderedJson{{"exact", s.to_text()}, {"re", z.real()}, {"im", z.imag()}};
}

OrderedJson report_header(const std::string& command) {
    return OrderedJson{{"format", kReportFormat}, {"command", command}};
}

void emit(const OrderedJson& doc) { std::cout << doc.dump(2) << "\n"; }

std::string format_double(double value) {
    std::ostringstream out;
    out << std::setprecision(12) << value;
    return out.str();
}

OrderedJson witness_json(const GramTensor& gram, const KlWitness& w) {
    return OrderedJson{{"i", w.i},
                       {"j", w.j},
                       {"p", w.p},
                       {"q", w.q},
                       {"word_i", gram.word_labels()[w.i]},
                       {"word_j", gram.word_labels()[w.j]},
                       {"error_p", gram.error_labels()[w.p]},
                       {"error_q", gram.error_labels()[w.q]},
                       {"found", scalar_json(w.found)},
                       {"expected", scalar_json(w.expected)}};
}

void print_witnesses(const GramTensor& gram, const std::vector<KlWitness>& witnesses,
                     std::size_t limit) {
    std::size_t shown = std::min(limit, witnesses.size());
    for (std::size_t k = 0; k < shown; ++k) {
        const auto& w = witnesses[k];
        std::cout << "  witness <" << gram.error_labels()[w.p] << " " << gram.word_labels()[w.i]
                  << " | " << gram.error_labels()[w.q] << " " << gram.word_labels()[w.j]
                  << "> = " << w.found.pretty() << ", expected " << w.expected.pretty() << "\n";
    }
    if (witnesses.size() > shown) {
        std::cout << "  ... and " << (witnesses.size() - shown) << " more\n";
    }
}

// ---- show / list-codes ----

int cmd_list_codes(const std::string& format) {
    if (format == "json") {
        OrderedJson doc = report_header("list-codes");
        doc["codes"] = builtin_code_names();
        emit(doc);
    } else {
        for (const auto& name : builtin_code_names()) std::cout << name << "\n";
    }
    return kExitPass;
}

int cmd_show(const std::string& ref, const std::string& format) {
    Code code = resolve_code(ref);
    if (format == "json") {
        OrderedJson doc = report_header("show");
        doc["name"] = code.name();
        if (!code.description().empty()) doc["description"] = code.description();
        doc["n"] = code.n();
        doc["radicand"] = code.radicand();
        OrderedJson words = OrderedJson::array();
        for (const auto& word : code.words()) {
            OrderedJson w{{"label", word.label}, {"terms", word.state.term_count()}};
            OrderedJson hist;
            for (const auto& [weight, count] : word.state.weight_histogram()) {
                hist[std::to_string(weight)] = count;
            }
            w["weight_histogram"] = std::move(hist);
            if (word.logical) w["logical"] = *word.logical;
            if (word.mult) w["mult"] = *word.mult;
            words.push_back(std::move(w));
        }
        doc["words"] = std::move(words);
        emit(doc);
    } else {
        std::cout << "code " << code.name() << ": n=" << code.n()
                  << " radicand=" << code.radicand() << "\n";
        if (!code.description().empty()) std::cout << "  " << code.description() << "\n";
        for (const auto& word : code.words()) {
            std::cout << "  word " << word.label << ": " << word.state.term_count() << " terms,"
                      << " |word|^2 = " << word.state.norm_squared().pretty() << ", weights {";
            bool first = true;
            for (const auto& [weight, count] : word.state.weight_histogram()) {
                std::cout << (first ? "" : ", ") << weight << ": " << count;
                first = false;
            }
            std::cout << "}\n";
        }
    }
    return kExitPass;
}

// ---- check ----

int cmd_check(const std::string& ref, const std::string& classes, bool strict, bool use_float,
              double tol, const std::string& format) {
    Code code = resolve_code(ref);
    ErrorSet errors = resolve_errors(code, classes);

    if (use_float) {
        double residual = kl_residual(code, errors);
        bool passed = residual <= tol;
        if (format == "json") {
            OrderedJson doc = report_header("check");
            doc["code"] = code.name();
            doc["errors"] = errors.composition();
            doc["mode"] = "float";
            doc["tolerance"] = tol;
            doc["residual"] = residual;
            doc["passed"] = passed;
            emit(doc);
        } else {
            std::cout << "code " << code.name() << ", errors: " << errors.composition() << "\n";
            std::cout << "float residual = " << format_double(residual) << " (tol "
                      << format_double(tol) << ")\n";
            std::cout << (passed ? "PASS" : "FAIL") << "\n";
        }
        return passed ? kExitPass : kExitVerificationFailure;
    }

    GramTensor gram = gram_blocks(code, errors);
    KLReport report = check_kl(gram, strict ? KlMode::Strict : KlMode::Degenerate);
    if (format == "json") {
        OrderedJson doc = report_header("check");
        doc["code"] = code.name();
        doc["errors"] = errors.composition();
        doc["mode"] = strict ? "strict" : "degenerate";
        doc["passed"] = report.passed;
        if (report.strict_scale) doc["strict_scale"] = scalar_json(*report.strict_scale);
        OrderedJson witnesses = OrderedJson::array();
        for (const auto& w : report.witnesses) witnesses.push_back(witness_json(gram, w));
        doc["witnesses"] = std::move(witnesses);
        if (report.passed && report.d_matrix) {
            doc["d_rank"] = report.d_matrix->rank;
        }
        emit(doc);
    } else {
        std::cout << "code " << code.name() << ", errors: " << errors.composition() << "\n";
        std::cout << (strict ? "strict" : "degenerate") << " condition: "
                  << (report.passed ? "PASS" : "FAIL") << "\n";
        if (report.strict_scale) {
            std::cout << "strict scale (shared word norm^2): " << report.strict_scale->pretty()
                      << "\n";
        }
        if (!report.passed) {
            std::cout << report.witnesses.size() << " witnesses:\n";
            print_witnesses(gram, report.witnesses, 10);
        } else if (report.d_matrix) {
            std::cout << "D matrix rank " << report.d_matrix->rank << "\n";
        }
    }
    return report.passed ? kExitPass : kExitVerificationFailure;
}

// ---- gram / dmatrix ----

int cmd_gram(const std::string& ref, const std::string& classes, const std::string& format) {
    Code code = resolve_code(ref);
    ErrorSet errors = resolve_errors(code, classes);
    GramTensor gram = gram_blocks(code, errors);
    std::size_t w = gram.word_count(), e = gram.error_count();
    if (format == "json") {
        OrderedJson doc = report_header("gram");
        doc["code"] = code.name();
        doc["errors"] = errors.composition();
        doc["word_labels"] = gram.word_labels();
        doc["error_labels"] = gram.error_labels();
        OrderedJson entries = OrderedJson::array();
        for (std::size_t i = 0; i < w; ++i)
            for (std::size_t j = 0; j < w; ++j)
                for (std::size_t p = 0; p < e; ++p)
                    for (std::size_t q = 0; q < e; ++q) {
                        const auto& value = gram.entry(i, j, p, q);
                        if (value.is_zero()) continue;
                        entries.push_back(OrderedJson{{"i", i},
                                                      {"j", j},
                                                      {"p", p},
                                                      {"q", q},
                                                      {"value", scalar_json(value)}});
                    }
        doc["nonzero_entries"] = std::move(entries);
        emit(doc);
    } else if (format == "csv") {
        std::cout << "word_i,word_j,error_p,error_q,exact,re,im\n";
        for (std::size_t i = 0; i < w; ++i)
            for (std::size_t j = 0; j < w; ++j)
                for (std::size_t p = 0; p < e; ++p)
                    for (std::size_t q = 0; q < e; ++q) {
                        const auto& value = gram.entry(i, j, p, q);
                        auto z = value.to_complex();
                        std::cout << gram.word_labels()[i] << "," << gram.word_labels()[j] << ","
                                  << gram.error_labels()[p] << "," << gram.error_labels()[q] << ","
                                  << value.to_text() << "," << format_double(z.real()) << ","
                                  << format_double(z.imag()) << "\n";
                    }
    } else {
        std::cout << "gram blocks for " << code.name() << ", errors: " << errors.composition()
                  << "\n";
        for (std::size_t i = 0; i < w; ++i) {
            for (std::size_t j = 0; j < w; ++j) {
                std::cout << "block <" << gram.word_labels()[i] << "|" << gram.word_labels()[j]
                          << "> nonzero entries:\n";
                bool any = false;
                for (std::size_t p = 0; p < e; ++p) {
                    for (std::size_t q = 0; q < e; ++q) {
                        const auto& value = gram.entry(i, j, p, q);
                        if (value.is_zero()) continue;
                        any = true;
                        std::cout << "  <" << gram.error_labels()[p] << " | "
                                  << gram.error_labels()[q] << "> = " << value.pretty() << "\n";
                    }
                }
                if (!any) std::cout << "  (all zero)\n";
            }
        }
    }
    return kExitPass;
}

int cmd_dmatrix(const std::string& ref, const std::string& classes, const std::string& format) {
    Code code = resolve_code(ref);
    ErrorSet errors = resolve_errors(code, classes);
    GramTensor gram = gram_blocks(code, errors);
    KLReport report = check_kl(gram, KlMode::Degenerate);
    if (!report.passed) {
        std::cout << "degenerate condition FAILS (" << report.witnesses.size()
                  << " witnesses); no D matrix\n";
        print_witnesses(gram, report.witnesses, 10);
        return kExitVerificationFailure;
    }
    const DMatrix& d = *report.d_matrix;
    std::size_t e = d.error_labels.size();
    // The error images of the two words span exactly 2*rank(D) dimensions; a
    // 54-dimensional figure is sometimes quoted for the 9-qubit exchange code
    // and does not match either route, so the report carries the comparison.
    int span = span_dimension(code, errors);
    constexpr int kQuotedSubspaceDimension = 54;
    if (format == "json") {
        OrderedJson doc = report_header("dmatrix");
        doc["code"] = code.name();
        doc["errors"] = errors.composition();
        doc["error_labels"] = d.error_labels;
        doc["rank"] = d.rank;
        doc["span_dimension"] = span;
        doc["two_rank_d"] = 2 * d.rank;
        doc["span_matches_two_rank_d"] = (span == 2 * d.rank);
        doc["quoted_subspace_dimension"] = kQuotedSubspaceDimension;
        doc["span_matches_quoted"] = (span == kQuotedSubspaceDimension);
        OrderedJson blocks = OrderedJson::array();
        for (const auto& block : d.blocks) {
            OrderedJson labels = OrderedJson::array();
            for (int member : block) labels.push_back(d.error_labels[member]);
            blocks.push_back(OrderedJson{{"size", block.size()}, {"members", std::move(labels)}});
        }
        doc["blocks"] = std::move(blocks);
        OrderedJson entries = OrderedJson::array();
        for (std::size_t p = 0; p < e; ++p)
            for (std::size_t q = 0; q < e; ++q) {
                if (d.at(p, q).is_zero()) continue;
                entries.push_back(
                    OrderedJson{{"p", p}, {"q", q}, {"value", scalar_json(d.at(p, q))}});
            }
        doc["nonzero_entries"] = std::move(entries);
        emit(doc);
    } else if (format == "csv") {
        std::cout << "error_p,error_q,exact,re,im\n";
        for (std::size_t p = 0; p < e; ++p)
            for (std::size_t q = 0; q < e; ++q) {
                auto z = d.at(p, q).to_complex();
                std::cout << d.error_labels[p] << "," << d.error_labels[q] << ","
                          << d.at(p, q).to_text() << "," << format_double(z.real()) << ","
                          << format_double(z.imag()) << "\n";
            }
    } else {
        std::cout << "D matrix for " << code.name() << ", errors: " << errors.composition() << "\n";
        std::cout << "span{e_p C_i} dimension = " << span << " (2*rank(D) = " << 2 * d.rank
                  << (span == 2 * d.rank ? ", matches" : ", MISMATCH") << "; quoted figure "
                  << kQuotedSubspaceDimension
                  << (span == kQuotedSubspaceDimension ? " matches" : " does not match") << ")\n";
        std::cout << "exact rank " << d.rank << "; blocks (";
        for (std::size_t b = 0; b < d.blocks.size(); ++b) {
            std::cout << (b ? ", " : "") << d.blocks[b].size();
        }
        std::cout << ")\n";
        for (std::size_t b = 0; b < d.blocks.size(); ++b) {
            const auto& block = d.blocks[b];
            std::cout << "block " << b << " [" << d.error_labels[block.front()];
            if (block.size() > 1) std::cout << " .. " << d.error_labels[block.back()];
            std::cout << "]:\n";
            // Distinct values with multiplicities keep large uniform blocks short.
            std::map<std::string, std::size_t> census;
            std::map<std::string, std::size_t> diag_census;
            for (int p : block) {
                for (int q : block) {
                    auto& bucket = (p == q) ? diag_census : census;
                    bucket[d.at(p, q).pretty()]++;
                }
            }
            for (const auto& [value, count] : diag_census) {
                std::cout << "  diagonal " << value << " x" << count << "\n";
            }
            for (const auto& [value, count] : census) {
                std::cout << "  off-diagonal " << value << " x" << count << "\n";
            }
        }
    }
    return kExitPass;
}

// ---- demo ----

void print_state_terms(const std::string& name, const StateVector& state) {
    std::cout << name << " =";
    bool first = true;
    for (const auto& [key, amp] : state.amplitudes()) {
        std::cout << (first ? " " : " + ");
        if (!(amp == ExactScalar::one(amp.radicand()))) std::cout << "(" << amp.pretty() << ")*";
        std::cout << "|" << format_bits(key, state.n()) << ">";
        first = false;
    }
    std::cout << "\n";
}

int cmd_demo(const std::string& topic) {
    if (topic != "shor-exchange") throw UsageError("unknown demo '" + topic + "'");
    Code shor = builtin_code("shor9");
    ErrorOp e34 = ErrorOp::exchange(3, 4);
    std::cout << "Exchanging qubits 3 and 4 of the Shor 9-qubit code words:\n";
    for (const auto& word : shor.words()) {
        print_state_terms("E_34 |" + word.label + ">", e34.apply(word.state));
    }
    std::vector<ErrorOp> ops;
    ops.push_back(ErrorOp::identity());
    for (int q = 7; q <= 9; ++q) ops.push_back(ErrorOp::pauli(PauliAxis::Z, q));
    ops.push_back(e34);
    ErrorSet errors = ErrorSet::from_ops(9, std::move(ops));
    std::cout << "\nchecking {I, Z_7, Z_8, Z_9, E_34} against the degenerate condition:\n";
    GramTensor gram = gram_blocks(shor, errors);
    KLReport report = check_kl(gram, KlMode::Degenerate);
    print_witnesses(gram, report.witnesses, 12);
    std::cout << "\nThe code cannot tell E_34 apart from a phase error on qubits 7-9.\n";
    std::cout << "degenerate condition: " << (report.passed ? "PASS" : "FAIL") << " ("
              << report.witnesses.size() << " witnesses)\n";
    return kExitPass;
}

// ---- recover-test ----

std::vector<std::pair<std::complex<double>, std::complex<double>>> logical_grid() {
    using C = std::complex<double>;
    const double r = 1.0 / std::sqrt(2.0);
    return {
        {C(1, 0), C(0, 0)},      {C(0, 0), C(1, 0)},      {C(r, 0), C(r, 0)},
        {C(r, 0), C(-r, 0)},     {C(r, 0), C(0, r)},      {C(r, 0), C(0, -r)},
        {C(0.6, 0), C(0.8, 0)},  {C(0.8, 0), C(-0.6, 0)}, {C(0.6, 0), C(0, 0.8)},
        {C(0, 0.6), C(0.8, 0)},  {C(0.28, 0), C(0, 0.96)}, {C(r, 0), C(0.5, 0.5)},
    };
}

int cmd_recover_test(const std::string& ref, const std::string& classes, int trials,
                     std::uint64_t seed, double tol, const std::string& format) {
    Code code = resolve_code(ref);
    ErrorSet errors = resolve_errors(code, classes);
    RecoveryPlan plan = [&]() {
        try {
            return build_recovery(code, errors);
        } catch (const KlRefusal& refusal) {
            std::cout << "recovery refused: degenerate condition fails with "
                      << refusal.report.witnesses.size() << " witnesses\n";
            throw;
        }
    }();

    auto states = logical_grid();
    auto rng = seeded_rng(seed, 0);
    std::normal_distribution<double> gauss(0.0, 1.0);
    for (int t = 0; t < trials; ++t) {
        std::complex<double> alpha(gauss(rng), gauss(rng));
        std::complex<double> beta(gauss(rng), gauss(rng));
        states.emplace_back(alpha, beta);
    }

    double worst = 1.0;
    std::string worst_case;
    for (const auto& op : errors.ops) {
        for (std::size_t s = 0; s < states.size(); ++s) {
            double fidelity = roundtrip_fidelity(plan, op, states[s].first, states[s].second);
            if (fidelity < worst) {
                worst = fidelity;
                worst_case = op.label() + " on state " + std::to_string(s);
            }
        }
    }
    bool passed = (1.0 - worst) <= tol;
    if (format == "json") {
        OrderedJson doc = report_header("recover-test");
        doc["code"] = code.name();
        doc["errors"] = errors.composition();
        doc["syndromes"] = plan.syndrome_count();
        doc["d_rank"] = plan.d_rank();
        OrderedJson plan_summary = OrderedJson::array();
        for (const auto& syndrome : plan.syndromes()) {
            OrderedJson composition = OrderedJson::array();
            for (const auto& [p, weight] : syndrome.composition) {
                composition.push_back(OrderedJson{{"error", errors.ops[p].label()},
                                                  {"re", weight.real()},
                                                  {"im", weight.imag()}});
            }
            plan_summary.push_back(OrderedJson{{"eigenvalue", syndrome.eigenvalue},
                                               {"block", syndrome.block},
                                               {"composition", std::move(composition)}});
        }
        doc["plan"] = std::move(plan_summary);
        doc["states"] = states.size();
        doc["trials"] = trials;
        doc["seed"] = seed;
        doc["tolerance"] = tol;
        doc["worst_fidelity"] = worst;
        doc["worst_case"] = worst_case;
        doc["passed"] = passed;
        emit(doc);
    } else {
        std::cout << "recovery plan: " << plan.syndrome_count() << " syndrome subspaces (D rank "
                  << plan.d_rank() << ")\n";
        // census: eigenvalue of the normalized D by originating block
        std::map<std::pair<int, long long>, int> census;
        for (const auto& syndrome : plan.syndromes()) {
            census[{syndrome.block, std::llround(syndrome.eigenvalue * 1e9)}]++;
        }
        for (const auto& [key, count] : census) {
            std::cout << "  block " << key.first << ": eigenvalue "
                      << format_double(static_cast<double>(key.second) * 1e-9) << " x" << count
                      << "\n";
        }
        std::cout << "ran " << states.size() << " logical states (" << logical_grid().size()
                  << " grid + " << trials << " seeded) through " << errors.size() << " errors\n";
        std::cout << "worst round-trip fidelity = " << format_double(worst);
        if (!worst_case.empty()) std::cout << " (" << worst_case << ")";
        std::cout << "\n" << (passed ? "PASS" : "FAIL") << " at tolerance " << format_double(tol)
                  << "\n";
    }
    return passed ? kExitPass : kExitVerificationFailure;
}

// ---- bounds ----

int cmd_bounds(const std::string& model_name, const std::string& format) {
    BoundsResult result = bounds_min_qubits(parse_bounds_model(model_name));
    if (format == "json") {
        OrderedJson doc = report_header("bounds");
        doc["model"] = model_name;
        doc["inequality"] = result.inequality;
        doc["min_n"] = result.min_n;
        doc["lhs_at_min_n"] = result.lhs_at_min;
        emit(doc);
    } else {
        std::cout << "model " << model_name << ": " << result.inequality
                  << " holds from n = " << result.min_n << " (left side "
                  << result.lhs_at_min << " vs 2^n = " << (1LL << result.min_n) << ")\n";
    }
    return kExitPass;
}

// ---- search ----

int cmd_search(int n, const std::string& classes, const std::string& patterns_text, int restarts,
               std::uint64_t seed, double tol, bool sign_extensions, const std::string& format) {
    ErrorSet errors = make_error_set(n, parse_error_classes(classes));
    std::vector<SupportPattern> patterns;
    if (patterns_text == "all-dual") {
        patterns = all_dual_patterns(n);
    } else {
        std::stringstream stream(patterns_text);
        std::string token;
        while (std::getline(stream, token, ';')) {
            if (!token.empty()) patterns.push_back(SupportPattern::parse(n, token));
        }
    }
    if (patterns.empty()) throw UsageError("no patterns given");

    SearchOptions options;
    options.sign_extensions = sign_extensions;
    auto results = search_perm_invariant(n, errors, patterns, restarts, seed, options);
    double floor = results.front().residual;
    bool reached = floor <= tol;

    if (format == "json") {
        OrderedJson doc = report_header("search");
        doc["n"] = n;
        doc["error_classes"] = classes;
        doc["errors"] = errors.composition();
        doc["restarts"] = restarts;
        doc["seed"] = seed;
        doc["tolerance"] = tol;
        doc["sign_extensions"] = sign_extensions;
        doc["coefficient_space"] = "real";
        OrderedJson list = OrderedJson::array();
        for (const auto& result : results) {
            OrderedJson item;
            item["pattern"] = result.pattern.to_string();
            item["residual"] = result.residual;
            OrderedJson c0, c1;
            for (const auto& [weight, value] : result.word0_coefficients) {
                c0[std::to_string(weight)] = value;
            }
            for (const auto& [weight, value] : result.word1_coefficients) {
                c1[std::to_string(weight)] = value;
            }
            item["word0_coefficients"] = std::move(c0);
            item["word1_coefficients"] = std::move(c1);
            item["restarts_used"] = result.restarts_used;
            list.push_back(std::move(item));
        }
        doc["results"] = std::move(list);
        doc["residual_floor"] = floor;
        doc["reached_tolerance"] = reached;
        doc["note"] = search_outcome_note(reached);
        emit(doc);
    } else {
        std::cout << "search n=" << n << ", errors: " << errors.composition() << ", "
                  << patterns.size() << " patterns, " << restarts << " restarts, seed " << seed
                  << "\ncoefficients searched over the reals only\n";
        for (const auto& result : results) {
            std::cout << "pattern " << result.pattern.to_string()
                      << ": residual = " << format_double(result.residual) << ", coefficients";
            for (const auto& [weight, value] : result.word0_coefficients) {
                std::cout << " a_" << weight << "=" << format_double(value);
            }
            std::cout << "\n";
        }
        std::cout << "residual floor = " << format_double(floor) << " (tolerance "
                  << format_double(tol) << ")\n";
        std::cout << search_outcome_note(reached) << "\n";
    }
    return reached ? kExitPass : kExitVerificationFailure;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"verification and search toolkit for codes under Pauli exchange errors"};
    app.require_subcommand(1);

    std::string code_ref, classes, format = "human", patterns_text, model_name, demo_topic;
    bool strict = false, use_float = false, sign_extensions = false;
    double tol = 1e-9;
    int trials = 20, restarts = 50, n = 9;
    std::uint64_t seed = 1;

    auto add_format = [&format](CLI::App* cmd, bool with_csv = false) {
        cmd->add_option("--format", format, "output format")
            ->check(CLI::IsMember(with_csv ? std::vector<std::string>{"human", "json", "csv"}
                                           : std::vector<std::string>{"human", "json"}));
    };

    auto* list_cmd = app.add_subcommand("list-codes", "list builtin codes");
    add_format(list_cmd);

    auto* show_cmd = app.add_subcommand("show", "show a code's words and weight histograms");
    show_cmd->add_option("--code", code_ref, "builtin name or code file")->required();
    add_format(show_cmd);

    auto* check_cmd = app.add_subcommand("check", "verify the error-correction conditions");
    check_cmd->add_option("--code", code_ref)->required();
    check_cmd->add_option("--errors", classes, "error classes, e.g. pauli,exchange")->required();
    check_cmd->add_flag("--strict", strict, "require orthonormal error images");
    check_cmd->add_flag("--float", use_float, "floating check against --tol");
    check_cmd->add_option("--tol", tol, "tolerance for --float mode");
    add_format(check_cmd);

    auto* gram_cmd = app.add_subcommand("gram", "dump exact Gram blocks");
    gram_cmd->add_option("--code", code_ref)->required();
    gram_cmd->add_option("--errors", classes)->required();
    add_format(gram_cmd, true);

    auto* dmatrix_cmd = app.add_subcommand("dmatrix", "extract the word-independent D matrix");
    dmatrix_cmd->add_option("--code", code_ref)->required();
    dmatrix_cmd->add_option("--errors", classes)->required();
    add_format(dmatrix_cmd, true);

    auto* demo_cmd = app.add_subcommand("demo", "worked demonstrations");
    demo_cmd->add_option("topic", demo_topic, "demo topic (shor-exchange)")->required();

    auto* recover_cmd = app.add_subcommand("recover-test", "round-trip recovery fidelities");
    recover_cmd->add_option("--code", code_ref)->required();
    recover_cmd->add_option("--errors", classes)->required();
    recover_cmd->add_option("--trials", trials, "seeded random logical states");
    recover_cmd->add_option("--seed", seed);
    recover_cmd->add_option("--tol", tol);
    add_format(recover_cmd);

    auto* bounds_cmd = app.add_subcommand("bounds", "minimal qubit counts from dimension bounds");
    bounds_cmd
        ->add_option("--model", model_name,
                     "single | single_plus_exchange | all_two_bit | irrep_construction")
        ->required();
    add_format(bounds_cmd);

    auto* search_cmd = app.add_subcommand("search", "search permutation-invariant families");
    search_cmd->add_option("--n", n, "qubit count")->required();
    search_cmd->add_option("--errors", classes)->required();
    search_cmd->add_option("--patterns", patterns_text, "'all-dual' or '0,6/3,9;0,5/4,9'")
        ->required();
    search_cmd->add_option("--restarts", restarts);
    search_cmd->add_option("--seed", seed);
    search_cmd->add_option("--tol", tol);
    search_cmd->add_flag("--sign-extensions", sign_extensions,
                         "sample per-string sign patterns inside each weight class");
    add_format(search_cmd);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (*list_cmd) return cmd_list_codes(format);
        if (*show_cmd) return cmd_show(code_ref, format);
        if (*check_cmd) return cmd_check(code_ref, classes, strict, use_float, tol, format);
        if (*gram_cmd) return cmd_gram(code_ref, classes, format);
        if (*dmatrix_cmd) return cmd_dmatrix(code_ref, classes, format);
        if (*demo_cmd) return cmd_demo(demo_topic);
        if (*recover_cmd) return cmd_recover_test(code_ref, classes, trials, seed, tol, format);
        if (*bounds_cmd) return cmd_bounds(model_name, format);
        if (*search_cmd)
            return cmd_search(n, classes, patterns_text, restarts, seed, tol, sign_extensions,
                              format);
        throw UsageError("no subcommand");
    } catch (const KlRefusal&) {
        return kExitVerificationFailure;
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
}
