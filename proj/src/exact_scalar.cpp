#include "qexch/exact_scalar.hpp"

#include <cmath>
#include <stdexcept>

namespace qexch {

namespace {

// Exact integer square root when m is a perfect square, 0 otherwise.
int perfect_sqrt(int m) {
    int r = static_cast<int>(std::lround(std::sqrt(static_cast<double>(m))));
    for (int k = r - 1; k <= r + 1; ++k) {
        if (k >= 0 && k * k == m) return k;
    }
    return 0;
}

void require_same_radicand(const ExactScalar& x, const ExactScalar& y) {
    if (x.radicand() != y.radicand()) {
        throw std::domain_error("ExactScalar: radicand mismatch (" +
                                std::to_string(x.radicand()) + " vs " +
                                std::to_string(y.radicand()) + ")");
    }
}

}  // namespace

void ExactScalar::canonicalize() {
    if (radicand_ < 1) throw std::domain_error("ExactScalar: radicand must be positive");
    if (int r = perfect_sqrt(radicand_); r != 0 && !(c_.is_zero() && d_.is_zero())) {
        Rational root{static_cast<long long>(r)};
        a_ += c_ * root;
        b_ += d_ * root;
        c_ = Rational(0);
        d_ = Rational(0);
    }
}

ExactScalar::ExactScalar(Rational real, int radicand)
    : a_(std::move(real)), radicand_(radicand) {
    if (radicand_ < 1) throw std::domain_error("ExactScalar: radicand must be positive");
}

ExactScalar::ExactScalar(Rational a, Rational b, Rational c, Rational d, int radicand)
    : a_(std::move(a)), b_(std::move(b)), c_(std::move(c)), d_(std::move(d)), radicand_(radicand) {
    canonicalize();
}

ExactScalar ExactScalar::operator-() const {
    return ExactScalar(-a_, -b_, -c_, -d_, radicand_);
}

ExactScalar ExactScalar::operator+(const ExactScalar& o) const {
    require_same_radicand(*this, o);
    return ExactScalar(a_ + o.a_, b_ + o.b_, c_ + o.c_, d_ + o.d_, radicand_);
}

ExactScalar ExactScalar::operator-(const ExactScalar& o) const {
    require_same_radicand(*this, o);
    return ExactScalar(a_ - o.a_, b_ - o.b_, c_ - o.c_, d_ - o.d_, radicand_);
}

ExactScalar ExactScalar::operator*(const ExactScalar& o) const {
    require_same_radicand(*this, o);
    Rational m{static_cast<long long>(radicand_)};
    // Expand with i^2 = -1, sqrt(m)^2 = m, (i*sqrt(m))^2 = -m.
    Rational na = a_ * o.a_ - b_ * o.b_ + m * (c_ * o.c_ - d_ * o.d_);
    Rational nb = a_ * o.b_ + b_ * o.a_ + m * (c_ * o.d_ + d_ * o.c_);
    Rational nc = a_ * o.c_ + c_ * o.a_ - b_ * o.d_ - d_ * o.b_;
    Rational nd = a_ * o.d_ + d_ * o.a_ + b_ * o.c_ + c_ * o.b_;
    return ExactScalar(std::move(na), std::move(nb), std::move(nc), std::move(nd), radicand_);
}

ExactScalar ExactScalar::conj() const {
    return ExactScalar(a_, -b_, c_, -d_, radicand_);
}

ExactScalar ExactScalar::inv() const {
    if (is_zero()) throw std::domain_error("ExactScalar: inverse of zero");
    // Multiply by the conjugates under i -> -i, sqrt(m) -> -sqrt(m), and both;
    // the product of all four conjugates is the rational field norm.
    ExactScalar conj_i = conj();
    ExactScalar conj_r(a_, b_, -c_, -d_, radicand_);
    ExactScalar conj_ir(a_, -b_, -c_, d_, radicand_);
    ExactScalar y = conj_i * conj_r * conj_ir;
    ExactScalar norm = (*this) * y;
    if (!norm.is_rational() || norm.a_.is_zero()) {
        throw std::domain_error("ExactScalar: field norm degenerate");
    }
    Rational scale = norm.a_.reciprocal();
    ExactScalar scale_s(scale, radicand_);
    return y * scale_s;
}

std::complex<double> ExactScalar::to_complex() const {
    double root = std::sqrt(static_cast<double>(radicand_));
    return {a_.to_double() + c_.to_double() * root,
            b_.to_double() + d_.to_double() * root};
}

bool ExactScalar::operator==(const ExactScalar& o) const {
    if (a_ != o.a_ || b_ != o.b_ || c_ != o.c_ || d_ != o.d_) return false;
    if (radicand_ == o.radicand_) return true;
    return is_gaussian() && o.is_gaussian();
}

std::string ExactScalar::to_text() const {
    return "a=" + a_.to_string() + ";b=" + b_.to_string() + ";c=" + c_.to_string() +
           ";d=" + d_.to_string() + ";radicand=" + std::to_string(radicand_);
}

ExactScalar ExactScalar::parse_text(std::string_view text) {
    Rational parts[4];
    const char* names = "abcd";
    std::string_view rest = text;
    for (int k = 0; k < 4; ++k) {
        std::string prefix = std::string(1, names[k]) + "=";
        if (rest.substr(0, 2) != prefix) {
            throw std::invalid_argument("ExactScalar: bad textual form '" + std::string(text) + "'");
        }
        rest.remove_prefix(2);
        auto semi = rest.find(';');
        if (semi == std::string_view::npos) {
            throw std::invalid_argument("ExactScalar: bad textual form '" + std::string(text) + "'");
        }
        parts[k] = Rational::parse(rest.substr(0, semi));
        rest.remove_prefix(semi + 1);
    }
    if (rest.substr(0, 9) != "radicand=") {
        throw std::invalid_argument("ExactScalar: bad textual form '" + std::string(text) + "'");
    }
    rest.remove_prefix(9);
    int m = 0;
    try {
        m = std::stoi(std::string(rest));
    } catch (const std::exception&) {
        throw std::invalid_argument("ExactScalar: bad radicand in '" + std::string(text) + "'");
    }
    return ExactScalar(parts[0], parts[1], parts[2], parts[3], m);
}

std::string ExactScalar::pretty() const {
    if (is_zero()) return "0";
    std::string out;
    auto append = [&out](const Rational& coeff, const std::string& unit) {
        if (coeff.is_zero()) return;
        Rational mag = qexch::abs(coeff);
        std::string piece;
        if (unit.empty()) {
            piece = mag.to_string();
        } else if (mag == Rational(1)) {
            piece = unit;
        } else {
            piece = mag.to_string() + "*" + unit;
        }
        if (out.empty()) {
            out = (coeff.sign() < 0 ? "-" : "") + piece;
        } else {
            out += (coeff.sign() < 0 ? " - " : " + ") + piece;
        }
    };
    std::string root = "sqrt(" + std::to_string(radicand_) + ")";
    append(a_, "");
    append(b_, "i");
    append(c_, root);
    append(d_, "i*" + root);
    return out;
}

}  // namespace qexch
