#pragma once

#include <map>
#include <optional>
#include <string>

#include "su3rwc/rational.hpp"

namespace su3rwc {

// Exact finite sum  sum_i c_i * sqrt(n_i)  with rational c_i != 0 and
// squarefree integer radicands n_i >= 1. Radicand 1 carries the rational
// part. Closed under +, -, *; division is defined for single-term divisors.
class SurdSum {
  public:
    SurdSum() = default;
    SurdSum(const Rational& r);  // NOLINT(google-explicit-constructor)
    explicit SurdSum(long n);

    // sign * sqrt(r); throws std::domain_error for r < 0.
    static SurdSum sqrt_of(const Rational& r, int sign = +1);

    SurdSum operator-() const;
    SurdSum& operator+=(const SurdSum& o);
    SurdSum& operator-=(const SurdSum& o);
    friend SurdSum operator+(SurdSum a, const SurdSum& b) { return a += b; }
    friend SurdSum operator-(SurdSum a, const SurdSum& b) { return a -= b; }
    friend SurdSum operator*(const SurdSum& a, const SurdSum& b);
    SurdSum& operator*=(const SurdSum& o) { return *this = *this * o; }
    SurdSum& scale(const Rational& r);

    // Exact quotient by a single-term divisor; throws std::domain_error on a
    // zero or multi-term divisor.
    SurdSum div_single(const SurdSum& divisor) const;

    bool operator==(const SurdSum& o) const { return terms_ == o.terms_; }
    bool operator!=(const SurdSum& o) const { return !(*this == o); }

    bool is_zero() const { return terms_.empty(); }
    bool is_rational() const;
    bool is_single_term() const { return terms_.size() == 1; }
    std::size_t term_count() const { return terms_.size(); }
    // Empty if the value has an irrational term.
    std::optional<Rational> as_rational() const;
    const std::map<BigInt, Rational>& terms() const { return terms_; }

    // Sign of the numeric value; exact (no rounding).
    int sign() const;

    // Bit-exact serialization: "0", "[-]sqrt(p/q)" for single terms,
    // "c1*sqrt(n1) + c2*sqrt(n2) + ..." (radicands ascending) otherwise.
    std::string to_exact_string() const;
    static SurdSum parse(const std::string& text);

    // Decimal evaluation to `digits` significant digits.
    std::string to_decimal_string(int digits) const;
    double to_double() const;
    mpf_class to_mpf(mp_bitcnt_t prec_bits) const;

  private:
    void add_term(const BigInt& radicand, const Rational& coeff);

    std::map<BigInt, Rational> terms_;
};

// n = square^2 * squarefree, n >= 1.
struct SquarefreeSplit {
    BigInt square_root;
    BigInt squarefree;
};
SquarefreeSplit squarefree_decompose(const BigInt& n);

// Operation aliases matching the library's documented surface.
inline SurdSum surd_from_sqrt(const Rational& r, int sign = +1) { return SurdSum::sqrt_of(r, sign); }
inline SurdSum surd_mul(const SurdSum& a, const SurdSum& b) { return a * b; }
inline SurdSum surd_div_single(const SurdSum& a, const SurdSum& b) { return a.div_single(b); }
inline std::string surd_to_float(const SurdSum& a, int digits) { return a.to_decimal_string(digits); }

}  // namespace su3rwc
