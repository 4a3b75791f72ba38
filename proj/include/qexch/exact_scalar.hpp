#pragma once

#include "qexch/rational.hpp"

#include <complex>
#include <string>
#include <string_view>

namespace qexch {

// Element of the number field Q(i, sqrt(m)): a + b*i + c*sqrt(m) + d*i*sqrt(m).
// The radicand m is a per-value tag; values with different radicands never
// combine arithmetically. Perfect-square radicands (including m = 1) fold
// their radical parts into the rational/imaginary components at construction,
// so component-wise equality stays canonical.
class ExactScalar {
    Rational a_, b_, c_, d_;
    int radicand_ = 1;

    void canonicalize();

public:
    ExactScalar() = default;
    explicit ExactScalar(Rational real, int radicand = 1);
    ExactScalar(Rational a, Rational b, Rational c, Rational d, int radicand);

    static ExactScalar zero(int radicand) { return ExactScalar(Rational(0), radicand); }
    static ExactScalar one(int radicand) { return ExactScalar(Rational(1), radicand); }
    static ExactScalar i(int radicand) {
        return ExactScalar(Rational(0), Rational(1), Rational(0), Rational(0), radicand);
    }
    // sqrt(m) itself, i.e. c = 1.
    static ExactScalar radical(int radicand) {
        return ExactScalar(Rational(0), Rational(0), Rational(1), Rational(0), radicand);
    }
    // 1/sqrt(m), stored as c = 1/m.
    static ExactScalar inv_radical(int radicand) {
        return ExactScalar(Rational(0), Rational(0), Rational(1, radicand), Rational(0), radicand);
    }

    const Rational& a() const { return a_; }
    const Rational& b() const { return b_; }
    const Rational& c() const { return c_; }
    const Rational& d() const { return d_; }
    int radicand() const { return radicand_; }

    bool is_zero() const { return a_.is_zero() && b_.is_zero() && c_.is_zero() && d_.is_zero(); }
    bool is_rational() const { return b_.is_zero() && c_.is_zero() && d_.is_zero(); }
    // No radical components; the value lies in Q(i).
    bool is_gaussian() const { return c_.is_zero() && d_.is_zero(); }
    bool is_real() const { return b_.is_zero() && d_.is_zero(); }

    ExactScalar operator-() const;
    ExactScalar operator+(const ExactScalar& o) const;
    ExactScalar operator-(const ExactScalar& o) const;
    ExactScalar operator*(const ExactScalar& o) const;
    ExactScalar& operator+=(const ExactScalar& o) { return *this = *this + o; }
    ExactScalar& operator-=(const ExactScalar& o) { return *this = *this - o; }
    ExactScalar& operator*=(const ExactScalar& o) { return *this = *this * o; }

    // Complex conjugate: b -> -b, d -> -d.
    ExactScalar conj() const;
    // Exact multiplicative inverse via the three field conjugates.
    ExactScalar inv() const;

    std::complex<double> to_complex() const;

    // Equal when all four components match and the radicand tags agree;
    // values without radical components compare equal across radicands.
    bool operator==(const ExactScalar& o) const;
    bool operator!=(const ExactScalar& o) const { return !(*this == o); }

    // Canonical textual form, e.g. "a=1;b=0;c=1/28;d=0;radicand=28". Round-trips exactly.
    std::string to_text() const;
    static ExactScalar parse_text(std::string_view text);

    // Human-readable rendering, e.g. "1 + 1/28*sqrt(28)", "-i", "3/2".
    std::string pretty() const;
};

}  // namespace qexch
