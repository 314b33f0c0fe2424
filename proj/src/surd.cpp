#include "su3rwc/surd.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <sstream>
#include <stdexcept>
#include <vector>

namespace su3rwc {

namespace {

mpf_class rational_to_mpf(const Rational& q, mp_bitcnt_t prec) {
    mpf_class f(0, prec);
    mpf_set_q(f.get_mpf_t(), q.get_mpq_t());
    return f;
}

}  // namespace

SquarefreeSplit squarefree_decompose(const BigInt& n) {
    if (n <= 0) throw std::domain_error("squarefree_decompose needs n >= 1");
    BigInt rem = n;
    BigInt square_root = 1;
    BigInt squarefree = 1;
    auto strip = [&](const BigInt& d) {
        int count = 0;
        while (mpz_divisible_p(rem.get_mpz_t(), d.get_mpz_t())) {
            rem /= d;
            ++count;
        }
        if (count == 0) return;
        if (count >= 2) {
            BigInt half;
            mpz_pow_ui(half.get_mpz_t(), d.get_mpz_t(), count / 2);
            square_root *= half;
        }
        if (count % 2 == 1) squarefree *= d;
    };
    strip(BigInt(2));
    BigInt d = 3;
    while (d * d * d <= rem) {
        strip(d);
        d += 2;
    }
    // rem now has at most two prime factors: 1, p, p^2, or p*q.
    if (rem != 1) {
        if (mpz_perfect_square_p(rem.get_mpz_t())) {
            BigInt root;
            mpz_sqrt(root.get_mpz_t(), rem.get_mpz_t());
            square_root *= root;
        } else {
            squarefree *= rem;
        }
    }
    return {square_root, squarefree};
}

SurdSum::SurdSum(const Rational& r) {
    if (r != 0) terms_.emplace(BigInt(1), r);
}

SurdSum::SurdSum(long n) {
    if (n != 0) terms_.emplace(BigInt(1), Rational(n));
}

SurdSum SurdSum::sqrt_of(const Rational& r, int sign) {
    if (sgn(r) < 0) throw std::domain_error("sqrt of negative rational");
    SurdSum out;
    if (sgn(r) == 0) return out;
    SquarefreeSplit p = squarefree_decompose(r.get_num());
    SquarefreeSplit q = squarefree_decompose(r.get_den());
    // sqrt(p/q) = (sp / (sq*fq)) * sqrt(fp*fq); gcd(fp, fq) = 1 because the
    // fraction is canonical, so fp*fq is squarefree.
    Rational coeff = make_rational(p.square_root, q.square_root * q.squarefree);
    if (sign < 0) coeff = -coeff;
    out.terms_.emplace(p.squarefree * q.squarefree, coeff);
    return out;
}

void SurdSum::add_term(const BigInt& radicand, const Rational& coeff) {
    if (coeff == 0) return;
    auto it = terms_.find(radicand);
    if (it == terms_.end()) {
        terms_.emplace(radicand, coeff);
    } else {
        it->second += coeff;
        if (it->second == 0) terms_.erase(it);
    }
}

SurdSum SurdSum::operator-() const {
    SurdSum out(*this);
    for (auto& [rad, c] : out.terms_) c = -c;
    return out;
}

SurdSum& SurdSum::operator+=(const SurdSum& o) {
    for (const auto& [rad, c] : o.terms_) add_term(rad, c);
    return *this;
}

SurdSum& SurdSum::operator-=(const SurdSum& o) {
    for (const auto& [rad, c] : o.terms_) add_term(rad, -c);
    return *this;
}

SurdSum operator*(const SurdSum& a, const SurdSum& b) {
    SurdSum out;
    for (const auto& [ra, ca] : a.terms_) {
        for (const auto& [rb, cb] : b.terms_) {
            // sqrt(ra)*sqrt(rb) = g*sqrt((ra/g)*(rb/g)) with g = gcd(ra, rb);
            // both factors squarefree and coprime, so the product is squarefree.
            BigInt g;
            mpz_gcd(g.get_mpz_t(), ra.get_mpz_t(), rb.get_mpz_t());
            BigInt rad = (ra / g) * (rb / g);
            out.add_term(rad, ca * cb * Rational(g));
        }
    }
    return out;
}

SurdSum& SurdSum::scale(const Rational& r) {
    if (r == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [rad, c] : terms_) c *= r;
    return *this;
}

SurdSum SurdSum::div_single(const SurdSum& divisor) const {
    if (divisor.is_zero()) throw std::domain_error("surd division by zero");
    if (!divisor.is_single_term()) throw std::domain_error("surd division by multi-term value");
    const auto& [rad, coeff] = *divisor.terms_.begin();
    // 1 / (c*sqrt(n)) = (1/(c*n)) * sqrt(n)
    SurdSum inverse;
    inverse.terms_.emplace(rad, make_rational(coeff.get_den(), coeff.get_num() * rad));
    return *this * inverse;
}

bool SurdSum::is_rational() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == 1);
}

std::optional<Rational> SurdSum::as_rational() const {
    if (terms_.empty()) return Rational(0);
    if (terms_.size() == 1 && terms_.begin()->first == 1) return terms_.begin()->second;
    return std::nullopt;
}

int SurdSum::sign() const {
    if (terms_.empty()) return 0;
    if (terms_.size() == 1) return sgn(terms_.begin()->second);
    bool all_pos = true, all_neg = true;
    for (const auto& [rad, c] : terms_) {
        if (sgn(c) > 0) all_neg = false;
        if (sgn(c) < 0) all_pos = false;
    }
    if (all_pos) return +1;
    if (all_neg) return -1;
    // Mixed signs: refine a floating interval. Distinct squarefree radicals
    // are linearly independent over Q, so the value is nonzero and this
    // terminates.
    for (mp_bitcnt_t prec = 256;; prec *= 2) {
        mpf_class val(0, prec);
        mpf_class magnitude(0, prec);
        for (const auto& [rad, c] : terms_) {
            mpf_class radf(0, prec);
            mpf_set_z(radf.get_mpf_t(), rad.get_mpz_t());
            mpf_class root(0, prec);
            mpf_sqrt(root.get_mpf_t(), radf.get_mpf_t());
            mpf_class term = rational_to_mpf(c, prec) * root;
            val += term;
            magnitude += abs(term);
        }
        mpf_class err = magnitude;
        mpf_div_2exp(err.get_mpf_t(), err.get_mpf_t(), prec - 16);
        if (abs(val) > err) return sgn(val) > 0 ? +1 : -1;
    }
}

std::string SurdSum::to_exact_string() const {
    if (terms_.empty()) return "0";
    if (terms_.size() == 1) {
        const auto& [rad, c] = *terms_.begin();
        Rational square = c * c * Rational(rad);
        std::string body = "sqrt(" + square.get_num().get_str() + "/" + square.get_den().get_str() + ")";
        return sgn(c) < 0 ? "-" + body : body;
    }
    std::string out;
    bool first = true;
    for (const auto& [rad, c] : terms_) {
        if (!first) out += " + ";
        first = false;
        std::string coeff = c.get_num().get_str();
        if (c.get_den() != 1) coeff += "/" + c.get_den().get_str();
        out += coeff + "*sqrt(" + rad.get_str() + ")";
    }
    return out;
}

namespace {

class SurdParser {
  public:
    explicit SurdParser(const std::string& text) : s_(text) {}

    SurdSum run() {
        skip_spaces();
        if (peek_word("0") && at_end_after(1)) return SurdSum();
        SurdSum total = parse_term();
        skip_spaces();
        while (!done()) {
            expect('+');
            skip_spaces();
            total += parse_term();
            skip_spaces();
        }
        return total;
    }

  private:
    [[noreturn]] void fail(const std::string& why) const {
        throw std::invalid_argument("bad surd literal '" + s_ + "': " + why);
    }
    bool done() const { return pos_ >= s_.size(); }
    char peek() const { return done() ? '\0' : s_[pos_]; }
    void expect(char c) {
        if (peek() != c) fail(std::string("expected '") + c + "'");
        ++pos_;
    }
    void skip_spaces() {
        while (!done() && s_[pos_] == ' ') ++pos_;
    }
    bool peek_word(const std::string& w) const { return s_.compare(pos_, w.size(), w) == 0; }
    bool at_end_after(std::size_t n) const {
        for (std::size_t i = pos_ + n; i < s_.size(); ++i)
            if (s_[i] != ' ') return false;
        return true;
    }

    BigInt parse_uint() {
        std::size_t start = pos_;
        while (!done() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        if (pos_ == start) fail("expected digits");
        return BigInt(s_.substr(start, pos_ - start));
    }

    SurdSum parse_term() {
        int sign = +1;
        if (peek() == '-') {
            sign = -1;
            ++pos_;
        }
        if (peek_word("sqrt(")) {
            pos_ += 5;
            BigInt p = parse_uint();
            expect('/');
            BigInt q = parse_uint();
            expect(')');
            if (q == 0) fail("zero denominator");
            return SurdSum::sqrt_of(make_rational(p, q), sign);
        }
        BigInt num = parse_uint();
        BigInt den = 1;
        if (peek() == '/') {
            ++pos_;
            den = parse_uint();
            if (den == 0) fail("zero denominator");
        }
        if (!peek_word("*sqrt(")) fail("expected '*sqrt('");
        pos_ += 6;
        BigInt rad = parse_uint();
        expect(')');
        SurdSum coeff(make_rational(sign < 0 ? BigInt(-num) : num, den));
        return coeff * SurdSum::sqrt_of(Rational(rad));
    }

    const std::string& s_;
    std::size_t pos_ = 0;
};

}  // namespace

SurdSum SurdSum::parse(const std::string& text) { return SurdParser(text).run(); }

mpf_class SurdSum::to_mpf(mp_bitcnt_t prec_bits) const {
    mpf_class total(0, prec_bits);
    for (const auto& [rad, c] : terms_) {
        mpf_class radf(0, prec_bits);
        mpf_set_z(radf.get_mpf_t(), rad.get_mpz_t());
        mpf_class root(0, prec_bits);
        mpf_sqrt(root.get_mpf_t(), radf.get_mpf_t());
        total += rational_to_mpf(c, prec_bits) * root;
    }
    return total;
}

double SurdSum::to_double() const { return to_mpf(128).get_d(); }

std::string SurdSum::to_decimal_string(int digits) const {
    if (digits < 1) throw std::domain_error("decimal rendering needs digits >= 1");
    if (terms_.empty()) return "0.0";
    mp_bitcnt_t prec = static_cast<mp_bitcnt_t>(digits * 4 + 96);
    mpf_class val = to_mpf(prec);
    bool negative = sgn(val) < 0;
    if (negative) val = -val;

    mp_exp_t expo = 0;
    std::string raw = val.get_str(expo, 10, static_cast<std::size_t>(digits) + 6);
    // Round the digit string to `digits` significant digits.
    std::string d = raw;
    if (static_cast<int>(d.size()) > digits) {
        bool round_up = d[static_cast<std::size_t>(digits)] >= '5';
        d = d.substr(0, static_cast<std::size_t>(digits));
        if (round_up) {
            int i = digits - 1;
            while (i >= 0) {
                if (d[static_cast<std::size_t>(i)] != '9') {
                    ++d[static_cast<std::size_t>(i)];
                    break;
                }
                d[static_cast<std::size_t>(i)] = '0';
                --i;
            }
            if (i < 0) {
                d.insert(d.begin(), '1');
                ++expo;
                d.pop_back();
            }
        }
    }
    while (d.size() > 1 && d.back() == '0') d.pop_back();

    std::string out;
    long e = static_cast<long>(expo);
    if (e >= -3 && e <= digits + 3) {
        if (e <= 0) {
            out = "0." + std::string(static_cast<std::size_t>(-e), '0') + d;
        } else if (static_cast<std::size_t>(e) >= d.size()) {
            out = d + std::string(static_cast<std::size_t>(e) - d.size(), '0') + ".0";
        } else {
            out = d.substr(0, static_cast<std::size_t>(e)) + "." + d.substr(static_cast<std::size_t>(e));
        }
    } else {
        out = d.substr(0, 1);
        out += ".";
        out += d.size() > 1 ? d.substr(1) : "0";
        out += "e";
        out += std::to_string(e - 1);
    }
    return negative ? "-" + out : out;
}

}  // namespace su3rwc
