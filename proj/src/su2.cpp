#include "su3rwc/su2.hpp"

#include <algorithm>

#include "su3rwc/factorial.hpp"

namespace su3rwc {

namespace {

// factorial(x/2); x must be even and nonnegative (callers guard the range).
const BigInt& fact2(int x) { return factorial(x / 2); }

bool even_nonneg(int x) { return x >= 0 && x % 2 == 0; }

// Squared triangle factor (j1+j2-j)!(j1-j2+j)!(-j1+j2+j)!/(j1+j2+j+1)!.
Rational triangle_sq(int ta, int tb, int tc) {
    return make_rational(fact2(ta + tb - tc) * fact2(ta - tb + tc) * fact2(-ta + tb + tc),
                         fact2(ta + tb + tc + 2));
}

}  // namespace

bool su2_triangle(int tj1, int tj2, int tj3) {
    if (tj1 < 0 || tj2 < 0 || tj3 < 0) return false;
    if ((tj1 + tj2 + tj3) % 2 != 0) return false;
    return tj3 >= std::abs(tj1 - tj2) && tj3 <= tj1 + tj2;
}

SurdSum su2_cg(int tj1, int tm1, int tj2, int tm2, int tj, int tm) {
    if (tm1 + tm2 != tm) return SurdSum();
    if (!su2_triangle(tj1, tj2, tj)) return SurdSum();
    if (!even_nonneg(tj1 + tm1) || !even_nonneg(tj1 - tm1)) return SurdSum();
    if (!even_nonneg(tj2 + tm2) || !even_nonneg(tj2 - tm2)) return SurdSum();
    if (!even_nonneg(tj + tm) || !even_nonneg(tj - tm)) return SurdSum();

    Rational pref = triangle_sq(tj1, tj2, tj) * Rational(tj + 1);
    pref *= Rational(fact2(tj1 + tm1) * fact2(tj1 - tm1) * fact2(tj2 + tm2) * fact2(tj2 - tm2) *
                     fact2(tj + tm) * fact2(tj - tm));

    int k_min = std::max({0, -(tj - tj2 + tm1) / 2, -(tj - tj1 - tm2) / 2});
    int k_max = std::min({(tj1 + tj2 - tj) / 2, (tj1 - tm1) / 2, (tj2 + tm2) / 2});
    Rational sum(0);
    for (int k = k_min; k <= k_max; ++k) {
        BigInt den = factorial(k) * fact2(tj1 + tj2 - tj - 2 * k) * fact2(tj1 - tm1 - 2 * k) *
                     fact2(tj2 + tm2 - 2 * k) * fact2(tj - tj2 + tm1 + 2 * k) *
                     fact2(tj - tj1 - tm2 + 2 * k);
        Rational term = make_rational(BigInt(1), den);
        sum += (k % 2 == 0) ? term : -term;
    }
    SurdSum out = SurdSum::sqrt_of(pref);
    out.scale(sum);
    return out;
}

SurdSum su2_racah_w(int ta, int tb, int tc, int td, int te, int tf) {
    if (!su2_triangle(ta, tb, te) || !su2_triangle(tc, td, te) || !su2_triangle(ta, tc, tf) ||
        !su2_triangle(tb, td, tf))
        return SurdSum();

    Rational pref = triangle_sq(ta, tb, te) * triangle_sq(tc, td, te) * triangle_sq(ta, tc, tf) *
                    triangle_sq(tb, td, tf);

    int t_min = std::max({0, (ta + td - te - tf) / 2, (tb + tc - te - tf) / 2});
    int t_max = std::min({(ta + tb - te) / 2, (tc + td - te) / 2, (ta + tc - tf) / 2,
                          (tb + td - tf) / 2});
    Rational sum(0);
    for (int t = t_min; t <= t_max; ++t) {
        BigInt num = fact2(ta + tb + tc + td + 2 - 2 * t);
        BigInt den = factorial(t) * fact2(ta + tb - te - 2 * t) * fact2(tc + td - te - 2 * t) *
                     fact2(ta + tc - tf - 2 * t) * fact2(tb + td - tf - 2 * t) *
                     fact2(te + tf - ta - td + 2 * t) * fact2(te + tf - tb - tc + 2 * t);
        Rational term = make_rational(num, den);
        sum += (t % 2 == 0) ? term : -term;
    }
    SurdSum out = SurdSum::sqrt_of(pref);
    out.scale(sum);
    return out;
}

SurdSum su2_racah_unitary(int ta, int tb, int tc, int td, int te, int tf) {
    SurdSum w = su2_racah_w(ta, tb, tc, td, te, tf);
    if (w.is_zero()) return w;
    return w * SurdSum::sqrt_of(Rational((te + 1) * (tf + 1)));
}

SurdSum su2_racah_unitary(const U2Label& a, const U2Label& b, const U2Label& e, const U2Label& c,
                          const U2Label& f, const U2Label& d) {
    return su2_racah_unitary(a.twice_spin(), b.twice_spin(), c.twice_spin(), d.twice_spin(),
                             e.twice_spin(), f.twice_spin());
}

}  // namespace su3rwc
