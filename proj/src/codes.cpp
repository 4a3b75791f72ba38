#include "qexch/codes.hpp"

#include "qexch/combinatorics.hpp"

#include <nlohmann/json.hpp>

#include <bit>
#include <fstream>
#include <set>
#include <sstream>
#include <stdexcept>

namespace qexch {

namespace {

using OrderedJson = nlohmann::ordered_json;

constexpr const char* kCodeFormat = "qexch-code v1";

void reject_unknown_keys(const nlohmann::json& obj, const std::set<std::string>& known,
                         const std::string& where) {
    for (const auto& [key, value] : obj.items()) {
        if (!known.count(key)) {
            throw std::invalid_argument("code document: unknown key '" + key + "' in " + where);
        }
    }
}

OrderedJson coeff_to_json(const ExactScalar& s) {
    return OrderedJson{{"a", s.a().to_string()},
                       {"b", s.b().to_string()},
                       {"c", s.c().to_string()},
                       {"d", s.d().to_string()}};
}

ExactScalar coeff_from_json(const nlohmann::json& obj, int radicand) {
    if (!obj.is_object()) throw std::invalid_argument("code document: coeff must be an object");
    reject_unknown_keys(obj, {"a", "b", "c", "d"}, "coeff");
    auto part = [&obj](const char* key) {
        if (!obj.contains(key) || !obj.at(key).is_string()) {
            throw std::invalid_argument(std::string("code document: coeff missing '") + key + "'");
        }
        return Rational::parse(obj.at(key).get<std::string>());
    };
    return ExactScalar(part("a"), part("b"), part("c"), part("d"), radicand);
}

}  // namespace

Code::Code(std::string name, int n, int radicand, std::vector<CodeWord> words,
           std::string description)
    : name_(std::move(name)),
      n_(n),
      radicand_(radicand),
      words_(std::move(words)),
      description_(std::move(description)) {
    if (n_ < 1 || n_ > kMaxQubits) throw std::invalid_argument("Code: n out of range");
    if (radicand_ < 1) throw std::invalid_argument("Code: radicand must be positive");
    if (words_.empty()) throw std::invalid_argument("Code: no words");
    std::set<std::string> labels;
    for (const auto& word : words_) {
        if (word.state.n() != n_) throw std::invalid_argument("Code: word qubit count mismatch");
        if (word.state.radicand() != radicand_) {
            throw std::invalid_argument("Code: word radicand mismatch");
        }
        if (word.state.is_zero()) throw std::invalid_argument("Code: zero word " + word.label);
        if (!labels.insert(word.label).second) {
            throw std::invalid_argument("Code: duplicate word label " + word.label);
        }
    }
}

Code Code::with_labels(const std::vector<std::pair<int, int>>& labels) const {
    if (labels.size() != words_.size()) {
        throw std::invalid_argument("Code: label count mismatch");
    }
    std::vector<CodeWord> relabeled = words_;
    for (std::size_t w = 0; w < relabeled.size(); ++w) {
        relabeled[w].logical = labels[w].first;
        relabeled[w].mult = labels[w].second;
    }
    return Code(name_, n_, radicand_, std::move(relabeled), description_);
}

std::vector<std::string> builtin_code_names() { return {"shor9", "exch9", "rep3"}; }

Code builtin_code(const std::string& name) {
    if (name == "shor9") {
        // Each word is a sum of four triplet-patterned kets with unit amplitude.
        auto word = [](const char* a, const char* b, const char* c, const char* d) {
            return StateVector::basis(a) + StateVector::basis(b) + StateVector::basis(c) +
                   StateVector::basis(d);
        };
        std::vector<CodeWord> words;
        words.push_back({"c_0", word("000000000", "000111111", "111000111", "111111000"), {}, {}});
        words.push_back({"c_1", word("111111111", "111000000", "000111000", "000000111"), {}, {}});
        return Code("shor9", 9, 1, std::move(words),
                    "9-qubit code built from triplet blocks (qubits 1-3, 4-6, 7-9), each block "
                    "000 or 111: c_0 sums the even-parity block patterns 000/011/101/110, c_1 "
                    "their complements. Unnormalized unit amplitudes.");
    }
    if (name == "exch9") {
        int m = 28;
        ExactScalar one = ExactScalar::one(m);
        ExactScalar coeff = ExactScalar::inv_radical(m);  // 1/sqrt(28)
        StateVector c0 = StateVector::perm_sum(9, 0, one) + StateVector::perm_sum(9, 6, coeff);
        StateVector c1 = StateVector::perm_sum(9, 9, one) + StateVector::perm_sum(9, 3, coeff);
        std::vector<CodeWord> words;
        words.push_back({"C_0", std::move(c0), {}, {}});
        words.push_back({"C_1", std::move(c1), {}, {}});
        return Code("exch9", 9, m, std::move(words),
                    "Permutation-invariant 9-qubit code: C_0 = |0^9> + (1/sqrt(28)) * sum of all "
                    "weight-6 strings, C_1 = |1^9> + (1/sqrt(28)) * sum of all weight-3 strings. "
                    "Unnormalized; each word has norm^2 = 4.");
    }
    if (name == "rep3") {
        std::vector<CodeWord> words;
        words.push_back({"C_0", StateVector::basis("000"), {}, {}});
        words.push_back({"C_1", StateVector::basis("111"), {}, {}});
        return Code("rep3", 3, 1, std::move(words),
                    "3-qubit repetition code {|000>, |111>}; corrects single bit flips and is "
                    "fixed by every qubit permutation, but cannot correct phase errors.");
    }
    throw std::invalid_argument("unknown builtin code '" + name + "'");
}

Code perm_invariant_code(int n, const std::vector<PermInvariantWordSpec>& words,
                         const std::string& name) {
    if (words.empty()) throw std::invalid_argument("perm_invariant_code: no words");
    int radicand = 0;
    for (const auto& spec : words) {
        for (const auto& [weight, coeff] : spec.coefficients) {
            if (weight < 0 || weight > n) {
                throw std::invalid_argument("perm_invariant_code: weight out of range");
            }
            if (coeff.is_zero()) continue;
            if (radicand == 0) radicand = coeff.radicand();
            if (coeff.radicand() != radicand) {
                throw std::domain_error("perm_invariant_code: coefficient radicand mismatch");
            }
        }
    }
    if (radicand == 0) throw std::invalid_argument("perm_invariant_code: all-zero word");
    std::vector<CodeWord> built;
    for (std::size_t w = 0; w < words.size(); ++w) {
        StateVector state(n, radicand);
        for (const auto& [weight, coeff] : words[w].coefficients) {
            if (coeff.is_zero()) continue;
            state = state + StateVector::perm_sum(n, weight, coeff);
        }
        if (state.is_zero()) throw std::invalid_argument("perm_invariant_code: all-zero word");
        built.push_back({"C_" + std::to_string(w), std::move(state), {}, {}});
    }
    return Code(name, n, radicand, std::move(built));
}

FloatState logical_state(const Code& code, std::complex<double> alpha, std::complex<double> beta) {
    if (code.word_count() != 2) {
        throw std::invalid_argument("logical_state: code must have exactly two words");
    }
    if (alpha == std::complex<double>{0, 0} && beta == std::complex<double>{0, 0}) {
        throw std::invalid_argument("logical_state: (alpha, beta) must be nonzero");
    }
    FloatState psi(code.n());
    FloatState w0 = FloatState::from_exact(code.word(0).state).normalized();
    FloatState w1 = FloatState::from_exact(code.word(1).state).normalized();
    psi.add_scaled(w0, alpha);
    psi.add_scaled(w1, beta);
    return psi.normalized();
}

void save_code(const Code& code, std::ostream& out) {
    OrderedJson doc;
    doc["format"] = kCodeFormat;
    doc["name"] = code.name();
    if (!code.description().empty()) doc["description"] = code.description();
    doc["n"] = code.n();
    doc["radicand"] = code.radicand();
    OrderedJson words = OrderedJson::array();
    for (const auto& word : code.words()) {
        OrderedJson w;
        w["label"] = word.label;
        if (word.logical) w["logical"] = *word.logical;
        if (word.mult) w["mult"] = *word.mult;
        OrderedJson terms = OrderedJson::array();
        // Weight classes that hold every string with one shared amplitude
        // collapse to a single permsum term; everything else stays explicit.
        std::map<int, std::vector<std::uint32_t>> by_weight;
        for (const auto& [key, amp] : word.state.amplitudes()) {
            by_weight[std::popcount(key)].push_back(key);
        }
        for (const auto& [weight, keys] : by_weight) {
            const ExactScalar& first = word.state.amplitude(keys.front());
            bool uniform = binomial(code.n(), weight) == BigInt(keys.size());
            if (uniform) {
                for (std::uint32_t key : keys) {
                    if (!(word.state.amplitude(key) == first)) {
                        uniform = false;
                        break;
                    }
                }
            }
            if (uniform) {
                OrderedJson term;
                term["coeff"] = coeff_to_json(first);
                term["kind"] = "permsum";
                term["weight"] = weight;
                terms.push_back(std::move(term));
            } else {
                for (std::uint32_t key : keys) {
                    OrderedJson term;
                    term["coeff"] = coeff_to_json(word.state.amplitude(key));
                    term["kind"] = "basis";
                    term["bits"] = format_bits(key, code.n());
                    terms.push_back(std::move(term));
                }
            }
        }
        w["terms"] = std::move(terms);
        words.push_back(std::move(w));
    }
    doc["words"] = std::move(words);
    out << doc.dump(2) << "\n";
}

void save_code(const Code& code, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::invalid_argument("save_code: cannot open " + path);
    save_code(code, out);
}

Code load_code(std::istream& in) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(in);
    } catch (const nlohmann::json::parse_error& e) {
        throw std::invalid_argument(std::string("code document: not valid JSON: ") + e.what());
    }
    if (!doc.is_object()) throw std::invalid_argument("code document: top level must be an object");
    reject_unknown_keys(doc, {"format", "name", "description", "n", "radicand", "words"},
                        "document");
    if (!doc.contains("format") || doc["format"] != kCodeFormat) {
        throw std::invalid_argument("code document: missing or unsupported format header");
    }
    for (const char* key : {"name", "n", "radicand", "words"}) {
        if (!doc.contains(key)) {
            throw std::invalid_argument(std::string("code document: missing key '") + key + "'");
        }
    }
    if (!doc["n"].is_number_integer() || !doc["radicand"].is_number_integer()) {
        throw std::invalid_argument("code document: n and radicand must be integers");
    }
    int n = doc["n"].get<int>();
    int radicand = doc["radicand"].get<int>();
    if (n < 1 || n > kMaxQubits) throw std::invalid_argument("code document: n out of range");
    if (radicand < 1) throw std::invalid_argument("code document: radicand must be positive");
    if (!doc["words"].is_array() || doc["words"].empty()) {
        throw std::invalid_argument("code document: words must be a non-empty array");
    }

    std::vector<CodeWord> words;
    for (const auto& w : doc["words"]) {
        if (!w.is_object()) throw std::invalid_argument("code document: word must be an object");
        reject_unknown_keys(w, {"label", "logical", "mult", "terms"}, "word");
        if (!w.contains("label") || !w["label"].is_string()) {
            throw std::invalid_argument("code document: word missing label");
        }
        if (!w.contains("terms") || !w["terms"].is_array()) {
            throw std::invalid_argument("code document: word missing terms");
        }
        StateVector state(n, radicand);
        for (const auto& term : w["terms"]) {
            if (!term.is_object()) throw std::invalid_argument("code document: term must be an object");
            reject_unknown_keys(term, {"coeff", "kind", "bits", "weight"}, "term");
            if (!term.contains("coeff") || !term.contains("kind")) {
                throw std::invalid_argument("code document: term missing coeff or kind");
            }
            ExactScalar coeff = coeff_from_json(term["coeff"], radicand);
            std::string kind = term["kind"].get<std::string>();
            if (kind == "basis") {
                if (!term.contains("bits") || !term["bits"].is_string()) {
                    throw std::invalid_argument("code document: basis term missing bits");
                }
                std::string bits = term["bits"].get<std::string>();
                if (static_cast<int>(bits.size()) != n) {
                    throw std::invalid_argument("code document: bit string length != n");
                }
                state = state + StateVector::basis(bits, radicand).scaled(coeff);
            } else if (kind == "permsum") {
                if (!term.contains("weight") || !term["weight"].is_number_integer()) {
                    throw std::invalid_argument("code document: permsum term missing weight");
                }
                int weight = term["weight"].get<int>();
                if (weight < 0 || weight > n) {
                    throw std::invalid_argument("code document: permsum weight out of range");
                }
                state = state + StateVector::perm_sum(n, weight, coeff);
            } else {
                throw std::invalid_argument("code document: unknown term kind '" + kind + "'");
            }
        }
        CodeWord word{w["label"].get<std::string>(), std::move(state), {}, {}};
        if (w.contains("logical")) {
            if (!w["logical"].is_number_integer()) {
                throw std::invalid_argument("code document: logical must be an integer");
            }
            word.logical = w["logical"].get<int>();
        }
        if (w.contains("mult")) {
            if (!w["mult"].is_number_integer()) {
                throw std::invalid_argument("code document: mult must be an integer");
            }
            word.mult = w["mult"].get<int>();
        }
        words.push_back(std::move(word));
    }
    std::string name = doc["name"].get<std::string>();
    std::string description;
    if (doc.contains("description")) {
        if (!doc["description"].is_string()) {
            throw std::invalid_argument("code document: description must be a string");
        }
        description = doc["description"].get<std::string>();
    }
    return Code(name, n, radicand, std::move(words), std::move(description));
}

Code load_code(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("load_code: cannot open " + path);
    return load_code(in);
}

}  // namespace qexch
