#include "qexch/search.hpp"

#include "qexch/combinatorics.hpp"
#include "qexch/rng.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace qexch {

namespace {

std::vector<int> normalize_weights(int n, std::vector<int> weights) {
    std::sort(weights.begin(), weights.end());
    weights.erase(std::unique(weights.begin(), weights.end()), weights.end());
    if (weights.empty()) throw std::invalid_argument("SupportPattern: empty weight set");
    if (weights.front() < 0 || weights.back() > n) {
        throw std::invalid_argument("SupportPattern: weight out of range");
    }
    return weights;
}

std::vector<int> mirror_weights(int n, const std::vector<int>& weights) {
    std::vector<int> mirrored;
    mirrored.reserve(weights.size());
    for (auto it = weights.rbegin(); it != weights.rend(); ++it) mirrored.push_back(n - *it);
    return mirrored;
}

}  // namespace

SupportPattern SupportPattern::make(int n, std::vector<int> word0, std::vector<int> word1) {
    SupportPattern p;
    p.n = n;
    p.word0_weights = normalize_weights(n, std::move(word0));
    p.word1_weights = normalize_weights(n, std::move(word1));
    p.dual_flip_related = p.word1_weights == mirror_weights(n, p.word0_weights);
    return p;
}

SupportPattern SupportPattern::dual(int n, std::vector<int> word0) {
    SupportPattern p;
    p.n = n;
    p.word0_weights = normalize_weights(n, std::move(word0));
    p.word1_weights = mirror_weights(n, p.word0_weights);
    p.dual_flip_related = true;
    return p;
}

std::string SupportPattern::to_string() const {
    std::ostringstream out;
    for (std::size_t i = 0; i < word0_weights.size(); ++i) {
        out << (i ? "," : "") << word0_weights[i];
    }
    out << "/";
    for (std::size_t i = 0; i < word1_weights.size(); ++i) {
        out << (i ? "," : "") << word1_weights[i];
    }
    return out.str();
}

SupportPattern SupportPattern::parse(int n, const std::string& text) {
    auto slash = text.find('/');
    if (slash == std::string::npos) {
        throw std::invalid_argument("SupportPattern: expected 'k,k,../k,k,..' in '" + text + "'");
    }
    auto parse_list = [](const std::string& part) {
        std::vector<int> weights;
        std::stringstream stream(part);
        std::string token;
        while (std::getline(stream, token, ',')) {
            try {
                weights.push_back(std::stoi(token));
            } catch (const std::exception&) {
                throw std::invalid_argument("SupportPattern: bad weight '" + token + "'");
            }
        }
        return weights;
    };
    return make(n, parse_list(text.substr(0, slash)), parse_list(text.substr(slash + 1)));
}

std::vector<SupportPattern> all_dual_patterns(int n) {
    std::vector<SupportPattern> patterns;
    std::uint32_t top = 1u << (n + 1);
    for (std::uint32_t mask = 1; mask < top; ++mask) {
        std::vector<int> weights;
        for (int k = 0; k <= n; ++k) {
            if (mask & (1u << k)) weights.push_back(k);
        }
        std::vector<int> mirrored = mirror_weights(n, weights);
        if (weights <= mirrored) patterns.push_back(SupportPattern::dual(n, weights));
    }
    return patterns;
}

Rational z_expectation_per_weight(int n, int kappa) {
    if (n < 1 || kappa < 0 || kappa > n) {
        throw std::invalid_argument("z_expectation_per_weight: bad arguments");
    }
    return Rational(binomial(n - 1, kappa) - binomial(n - 1, kappa - 1));
}

DualphaseReport dualphase_feasibility(const SupportPattern& pattern) {
    if (!pattern.dual_flip_related) {
        throw std::invalid_argument("dualphase_feasibility: pattern is not dual-flip related");
    }
    DualphaseReport report;
    bool any_positive = false, any_negative = false;
    Rational positive_total(0), negative_total(0);
    for (int weight : pattern.word0_weights) {
        Rational z = z_expectation_per_weight(pattern.n, weight);
        report.contributions.emplace_back(weight, z);
        if (z.sign() > 0) {
            any_positive = true;
            positive_total += z;
        } else if (z.sign() < 0) {
            any_negative = true;
            negative_total -= z;
        }
    }

    std::ostringstream cert;
    cert << "per-weight contributions to <C_0|Z_k C_0> per unit |a_w|^2:";
    for (const auto& [weight, z] : report.contributions) {
        cert << " w=" << weight << ":" << (z.sign() >= 0 ? "+" : "") << z.to_string();
    }
    if (any_positive != any_negative && (any_positive || any_negative)) {
        report.feasibility = Feasibility::Infeasible;
        cert << "; every nonzero contribution is strictly "
             << (any_positive ? "positive" : "negative")
             << ", so the phase condition cannot be met on this support";
        report.certificate = cert.str();
        return report;
    }

    report.feasibility = Feasibility::Feasible;
    // Positive weights get mass negative_total, negative weights positive_total;
    // the signed sums then cancel exactly.
    std::map<int, Rational> assignment;
    for (const auto& [weight, z] : report.contributions) {
        if (z.sign() > 0) {
            assignment[weight] = negative_total;
        } else if (z.sign() < 0) {
            assignment[weight] = positive_total;
        } else {
            assignment[weight] = Rational(1);
        }
    }
    Rational anchor = assignment.begin()->second;
    if (anchor.is_zero()) anchor = Rational(1);
    for (auto& [weight, mass] : assignment) mass /= anchor;
    report.witness = std::move(assignment);
    cert << "; witness |a_w|^2 ratios:";
    for (const auto& [weight, mass] : report.witness) {
        cert << " w=" << weight << ":" << mass.to_string();
    }
    report.certificate = cert.str();
    return report;
}

double kl_residual(const std::vector<FloatState>& words, const ErrorSet& errors) {
    if (words.empty()) throw std::invalid_argument("kl_residual: no words");
    for (const auto& word : words) {
        if (word.n() != errors.n) throw std::domain_error("kl_residual: qubit count mismatch");
    }
    std::size_t w = words.size();
    std::size_t e = errors.size();
    std::vector<std::vector<FloatState>> images(w);
    for (std::size_t i = 0; i < w; ++i) {
        images[i].reserve(e);
        for (const auto& op : errors.ops) images[i].push_back(op.apply(words[i]));
    }
    double residual = 0.0;
    // Diagonal word blocks against their average; Hermitian symmetry lets the
    // (p, q) loop stay in the upper triangle.
    for (std::size_t p = 0; p < e; ++p) {
        for (std::size_t q = p; q < e; ++q) {
            std::vector<std::complex<double>> values(w);
            std::complex<double> mean{0.0, 0.0};
            for (std::size_t i = 0; i < w; ++i) {
                values[i] = inner_product(images[i][p], images[i][q]);
                mean += values[i];
            }
            mean /= static_cast<double>(w);
            for (std::size_t i = 0; i < w; ++i) {
                residual = std::max(residual, std::abs(values[i] - mean));
            }
        }
    }
    for (std::size_t i = 0; i < w; ++i) {
        for (std::size_t j = i + 1; j < w; ++j) {
            for (std::size_t p = 0; p < e; ++p) {
                for (std::size_t q = 0; q < e; ++q) {
                    residual = std::max(residual,
                                        std::abs(inner_product(images[i][p], images[j][q])));
                }
            }
        }
    }
    return residual;
}

double kl_residual(const Code& code, const ErrorSet& errors) {
    std::vector<FloatState> words;
    words.reserve(code.word_count());
    for (const auto& word : code.words()) words.push_back(FloatState::from_exact(word.state));
    return kl_residual(words, errors);
}

namespace {

// The fully symmetric family is fixed by every qubit permutation, so pure
// exchange and permutation operators produce Gram rows identical to the
// identity row; dropping them leaves the residual unchanged.
ErrorSet strip_symmetric_ops(const ErrorSet& errors) {
    std::vector<ErrorOp> kept;
    for (const auto& op : errors.ops) {
        if (op.kind() == ErrorKind::Exchange || op.kind() == ErrorKind::PermutationOp) continue;
        kept.push_back(op);
    }
    return ErrorSet::from_ops(errors.n, std::move(kept));
}

using WeightBasis = std::map<int, FloatState>;

struct PatternProblem {
    int n;
    SupportPattern pattern;
    WeightBasis basis;  // weight -> unit-coefficient permutation sum
    std::vector<std::pair<int, int>> variables;  // (word index, weight) per free variable

    explicit PatternProblem(int n_, const SupportPattern& p) : n(n_), pattern(p) {
        auto ensure_basis = [this](int weight) {
            if (!basis.count(weight)) {
                basis.emplace(weight, FloatState::from_exact(StateVector::perm_sum(
                                          n, weight, ExactScalar::one(1))));
            }
        };
        for (int weight : p.word0_weights) ensure_basis(weight);
        for (int weight : p.word1_weights) ensure_basis(weight);
        // First coefficient of each independent word is pinned to one; the
        // remaining support weights are free. Dual patterns tie word1 to word0.
        for (std::size_t idx = 1; idx < p.word0_weights.size(); ++idx) {
            variables.emplace_back(0, p.word0_weights[idx]);
        }
        if (!p.dual_flip_related) {
            for (std::size_t idx = 1; idx < p.word1_weights.size(); ++idx) {
                variables.emplace_back(1, p.word1_weights[idx]);
            }
        }
    }

    // Same weight classes with a random sign on each basis string.
    WeightBasis signed_basis(std::mt19937_64& rng) const {
        WeightBasis flipped;
        std::uniform_int_distribution<int> coin(0, 1);
        for (const auto& [weight, state] : basis) {
            FloatState out(n);
            for (const auto& [key, amp] : state.amplitudes()) {
                out.add_term(key, coin(rng) ? -amp : amp);
            }
            flipped.emplace(weight, std::move(out));
        }
        return flipped;
    }

    std::pair<std::map<int, double>, std::map<int, double>> coefficients(
        const std::vector<double>& x) const {
        std::map<int, double> c0, c1;
        c0[pattern.word0_weights.front()] = 1.0;
        std::size_t v = 0;
        for (std::size_t idx = 1; idx < pattern.word0_weights.size(); ++idx) {
            c0[pattern.word0_weights[idx]] = x[v++];
        }
        if (pattern.dual_flip_related) {
            for (const auto& [weight, value] : c0) c1[n - weight] = value;
        } else {
            c1[pattern.word1_weights.front()] = 1.0;
            for (std::size_t idx = 1; idx < pattern.word1_weights.size(); ++idx) {
                c1[pattern.word1_weights[idx]] = x[v++];
            }
        }
        return {std::move(c0), std::move(c1)};
    }

    std::vector<FloatState> build_words(const WeightBasis& from, const std::map<int, double>& c0,
                                        const std::map<int, double>& c1) const {
        std::vector<FloatState> words;
        for (const auto* coeffs : {&c0, &c1}) {
            FloatState word(n);
            for (const auto& [weight, value] : *coeffs) {
                word.add_scaled(from.at(weight), {value, 0.0});
            }
            words.push_back(word.normalized());
        }
        return words;
    }

    double objective(const WeightBasis& from, const std::vector<double>& x,
                     const ErrorSet& errors) const {
        auto [c0, c1] = coefficients(x);
        double len0 = 0.0, len1 = 0.0;
        for (const auto& [weight, value] : c0) len0 += value * value;
        for (const auto& [weight, value] : c1) len1 += value * value;
        if (len0 < 1e-24 || len1 < 1e-24) return 1e6;
        return kl_residual(build_words(from, c0, c1), errors);
    }
};

// Deterministic Nelder-Mead with standard reflection/expansion coefficients.
double nelder_mead(const std::function<double(const std::vector<double>&)>& f,
                   std::vector<double>& x, int max_evals) {
    std::size_t dim = x.size();
    if (dim == 0) return f(x);
    int evals = 0;
    auto eval = [&](const std::vector<double>& point) {
        ++evals;
        return f(point);
    };

    std::vector<std::vector<double>> simplex;
    std::vector<double> values;
    simplex.push_back(x);
    values.push_back(eval(x));
    for (std::size_t d = 0; d < dim; ++d) {
        std::vector<double> vertex = x;
        vertex[d] += (std::abs(vertex[d]) > 0.5 ? 0.25 * vertex[d] : 0.25);
        simplex.push_back(vertex);
        values.push_back(eval(vertex));
    }

    auto order = [&]() {
        std::vector<std::size_t> idx(simplex.size());
        std::iota(idx.begin(), idx.end(), 0);
        std::stable_sort(idx.begin(), idx.end(),
                         [&values](std::size_t a, std::size_t b) { return values[a] < values[b]; });
        std::vector<std::vector<double>> s2;
        std::vector<double> v2;
        for (std::size_t i : idx) {
            s2.push_back(simplex[i]);
            v2.push_back(values[i]);
        }
        simplex = std::move(s2);
        values = std::move(v2);
    };

    while (evals < max_evals) {
        order();
        double spread = values.back() - values.front();
        double diameter = 0.0;
        for (std::size_t d = 0; d < dim; ++d) {
            diameter = std::max(diameter, std::abs(simplex.back()[d] - simplex.front()[d]));
        }
        if (spread < 1e-15 && diameter < 1e-12) break;

        std::vector<double> centroid(dim, 0.0);
        for (std::size_t v = 0; v + 1 < simplex.size(); ++v) {
            for (std::size_t d = 0; d < dim; ++d) centroid[d] += simplex[v][d];
        }
        for (double& c : centroid) c /= static_cast<double>(dim);

        auto blend = [&](double t) {
            std::vector<double> point(dim);
            for (std::size_t d = 0; d < dim; ++d) {
                point[d] = centroid[d] + t * (simplex.back()[d] - centroid[d]);
            }
            return point;
        };

        std::vector<double> reflected = blend(-1.0);
        double fr = eval(reflected);
        if (fr < values.front()) {
            std::vector<double> expanded = blend(-2.0);
            double fe = eval(expanded);
            if (fe < fr) {
                simplex.back() = expanded;
                values.back() = fe;
            } else {
                simplex.back() = reflected;
                values.back() = fr;
            }
        } else if (fr < values[values.size() - 2]) {
            simplex.back() = reflected;
            values.back() = fr;
        } else {
            std::vector<double> contracted = blend(fr < values.back() ? -0.5 : 0.5);
            double fc = eval(contracted);
            if (fc < std::min(fr, values.back())) {
                simplex.back() = contracted;
                values.back() = fc;
            } else {
                for (std::size_t v = 1; v < simplex.size(); ++v) {
                    for (std::size_t d = 0; d < dim; ++d) {
                        simplex[v][d] = simplex[0][d] + 0.5 * (simplex[v][d] - simplex[0][d]);
                    }
                    values[v] = eval(simplex[v]);
                }
            }
        }
    }
    order();
    x = simplex.front();
    return values.front();
}

}  // namespace

std::vector<SearchResult> search_perm_invariant(int n, const ErrorSet& errors,
                                                const std::vector<SupportPattern>& patterns,
                                                int restarts, std::uint64_t seed,
                                                const SearchOptions& options) {
    if (patterns.empty()) throw std::invalid_argument("search_perm_invariant: empty pattern list");
    if (restarts < 1) throw std::invalid_argument("search_perm_invariant: budget must be >= 1");
    if (errors.n != n) throw std::domain_error("search_perm_invariant: qubit count mismatch");

    // Sign-extended words are not permutation invariant, so the exchange rows
    // only collapse onto the identity row in the default symmetric family.
    ErrorSet reduced = options.sign_extensions ? errors : strip_symmetric_ops(errors);
    std::vector<SearchResult> results;
    for (std::size_t pattern_index = 0; pattern_index < patterns.size(); ++pattern_index) {
        const SupportPattern& pattern = patterns[pattern_index];
        if (pattern.n != n) throw std::invalid_argument("search_perm_invariant: pattern n mismatch");
        PatternProblem problem(n, pattern);
        std::size_t dim = problem.variables.size();

        std::vector<double> best_x;
        WeightBasis best_basis = problem.basis;
        double best_value = std::numeric_limits<double>::infinity();
        std::uint64_t pattern_seed = split_seed(seed, pattern_index);
        for (int restart = 0; restart < restarts; ++restart) {
            auto rng = seeded_rng(pattern_seed, static_cast<std::uint64_t>(restart));
            WeightBasis restart_basis =
                options.sign_extensions ? problem.signed_basis(rng) : problem.basis;
            std::vector<double> x(dim, 1.0);
            if (restart > 0) {
                std::uniform_real_distribution<double> span(-2.0, 2.0);
                for (double& value : x) value = span(rng);
            }
            double value = nelder_mead(
                [&problem, &restart_basis, &reduced](const std::vector<double>& point) {
                    return problem.objective(restart_basis, point, reduced);
                },
                x, options.max_evals_per_restart);
            if (value < best_value) {
                best_value = value;
                best_x = x;
                best_basis = restart_basis;
            }
            if (dim == 0 && !options.sign_extensions) break;  // nothing to vary
        }

        auto [c0, c1] = problem.coefficients(best_x);
        // Report unit-norm coefficients and the residual over the full set.
        auto words = problem.build_words(best_basis, c0, c1);
        double full_residual = kl_residual(words, errors);
        auto normalize = [](std::map<int, double>& coeffs) {
            double len = 0.0;
            for (const auto& [weight, value] : coeffs) len += value * value;
            len = std::sqrt(len);
            for (auto& [weight, value] : coeffs) value /= len;
        };
        normalize(c0);
        normalize(c1);

        SearchResult result;
        result.pattern = pattern;
        result.word0_coefficients = std::move(c0);
        result.word1_coefficients = std::move(c1);
        result.residual = full_residual;
        result.restarts_used = restarts;
        result.seed = seed;
        results.push_back(std::move(result));
    }
    std::stable_sort(results.begin(), results.end(),
                     [](const SearchResult& a, const SearchResult& b) {
                         return a.residual < b.residual;
                     });
    return results;
}

std::string search_outcome_note(bool reached_tolerance) {
    if (reached_tolerance) {
        return "a pattern satisfies the degenerate condition within tolerance";
    }
    return "residual floor over the given budget; numerical evidence only, "
           "not a proof of infeasibility";
}

BoundsModel parse_bounds_model(const std::string& name) {
    if (name == "single") return BoundsModel::Single;
    if (name == "single_plus_exchange") return BoundsModel::SinglePlusExchange;
    if (name == "all_two_bit") return BoundsModel::AllTwoBit;
    if (name == "irrep_construction") return BoundsModel::IrrepConstruction;
    throw std::invalid_argument("unknown bounds model '" + name + "'");
}

BoundsResult bounds_min_qubits(BoundsModel model) {
    auto lhs = [model](long long n) -> long long {
        switch (model) {
            case BoundsModel::Single: return 2 * (3 * n + 1);
            case BoundsModel::SinglePlusExchange: return n * n + 5 * n + 2;
            case BoundsModel::AllTwoBit: return 9 * n * (n - 1) + 2 * (3 * n + 1);
            case BoundsModel::IrrepConstruction: return 2 * (n - 1) * (3 * n + 1);
        }
        throw std::logic_error("bounds_min_qubits: unknown model");
    };
    BoundsResult result;
    result.model = model;
    switch (model) {
        case BoundsModel::Single: result.inequality = "2(3n+1) <= 2^n"; break;
        case BoundsModel::SinglePlusExchange: result.inequality = "n^2+5n+2 <= 2^n"; break;
        case BoundsModel::AllTwoBit: result.inequality = "9n(n-1)+2(3n+1) <= 2^n"; break;
        case BoundsModel::IrrepConstruction: result.inequality = "2(n-1)(3n+1) <= 2^n"; break;
    }
    // Least n from which the dimension count holds for every larger n; the
    // left side is quadratic, so scanning to 62 is exhaustive.
    int last_failure = 0;
    for (int n = 1; n <= 62; ++n) {
        if (lhs(n) > (1LL << n)) last_failure = n;
    }
    result.min_n = last_failure + 1;
    result.lhs_at_min = lhs(result.min_n);
    return result;
}

}  // namespace qexch
