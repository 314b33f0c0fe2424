#include "su3rwc/kernels.hpp"

#include <algorithm>

#include "su3rwc/factorial.hpp"

// See KERNEL_NOTES.md for the validated reading of the kernel denominators.

namespace su3rwc {

namespace {
const BigInt& f(long n) { return factorial(n); }
}  // namespace

Rational f3_kernel(const KernelArgs3& a) {
    const int h1 = a.h[0], h2 = a.h[1], h3 = a.h[2];
    const int q1 = a.q[0], q2 = a.q[1], q3 = a.q[2];
    const int m1 = a.m[0], m2 = a.m[1], m3 = a.m[2];
    const int n1 = a.n[0], n2 = a.n[1], n3 = a.n[2];

    const int x_lo = std::max({q1, q2 - 1, q3 - 2, h2, m2, m3 - 1, n2, n3 - 1, h3 - 1});
    const int x_hi = std::min({h1, n1, m1});
    const int y_lo = std::max({q2, q3 - 1, m3, n3, h3});
    const int y_hi0 = std::min({h2, q1, m1 + 1, m2, n2, n1 + 1, h1 + 1});
    const int z_lo = q3;
    const int z_hi0 = std::min({h3, q1 + 1, q2, m1 + 2, m2 + 1, m3, n1 + 2, n2 + 1, n3, h1 + 2,
                                h2 + 1});

    Rational sum(0);
    for (int x = x_lo; x <= x_hi; ++x) {
        for (int y = y_lo; y <= y_hi0; ++y) {
            for (int z = z_lo; z <= z_hi0; ++z) {
                BigInt num = BigInt(x - y + 1) * (x - z + 2) * (y - z + 1);
                num *= f(x - h3 + 1) * f(q1 - y) * f(q1 - z + 1) * f(q2 - z);
                num *= f(x - n2) * f(x - n3 + 1) * f(y - n3) * f(y - h3);
                num *= f(m1 - x) * f(m1 - y + 1) * f(m1 - z + 2);
                num *= f(m2 - y) * f(m2 - z + 1) * f(m3 - z) * f(x - h2);

                BigInt den = f(h2 - y) * f(h2 - z + 1) * f(h3 - z) * f(h1 - z + 2) * f(h1 - y + 1);
                den *= f(x - q1) * f(x - q2 + 1) * f(x - q3 + 2);
                den *= f(y - q2) * f(y - q3 + 1) * f(z - q3);
                den *= f(n1 - x) * f(n1 - y + 1) * f(n1 - z + 2);
                den *= f(n2 - y) * f(n2 - z + 1) * f(n3 - z);
                den *= f(x - m2) * f(x - m3 + 1) * f(y - m3) * f(h1 - x);

                Rational term = make_rational(num, den);
                if ((x + y + z - q1 - q2 - q3) % 2 != 0) term = -term;
                sum += term;
            }
        }
    }
    return sum;
}

Rational f2_kernel(const KernelArgs2& a) {
    const int h1 = a.h[0], h2 = a.h[1], h3 = a.h[2];
    const int m1 = a.m[0], m2 = a.m[1], m3 = a.m[2];
    const int q1 = a.q[0], q2 = a.q[1];
    const int n1 = a.n[0], n2 = a.n[1];

    const int x_lo = std::max({n2, h2, h3 - 1, q1, q2 - 1, m2, m3 - 1});
    const int x_hi = std::min({m1, n1, h1});
    const int y_lo = std::max({h3, q2, m3});
    const int y_hi = std::min({q1, m1 + 1, m2, n2, n1 + 1, h1 + 1, h2});

    Rational sum(0);
    for (int x = x_lo; x <= x_hi; ++x) {
        for (int y = y_lo; y <= y_hi; ++y) {
            BigInt num = BigInt(x - y + 1);
            num *= f(x - n2) * f(m1 - x) * f(x - h2) * f(x - h3 + 1);
            num *= f(q1 - y) * f(m1 - y + 1) * f(m2 - y) * f(y - h3);

            BigInt den = f(x - q1) * f(x - q2 + 1) * f(n1 - x) * f(x - m2) * f(x - m3 + 1) *
                         f(h1 - x);
            den *= f(y - q2) * f(n2 - y) * f(n1 - y + 1) * f(y - m3) * f(h1 - y + 1) * f(h2 - y);

            Rational term = make_rational(num, den);
            if ((x + y - q1 - q2) % 2 != 0) term = -term;
            sum += term;
        }
    }
    return sum;
}

Rational f_kernel(int sym_total, int top, int mu2p, int p, std::array<int, 2> target2,
                  std::array<int, 2> sub2) {
    (void)top;
    (void)mu2p;
    const int g1 = target2[0], g2 = target2[1];
    const int c1 = sub2[0], c2 = sub2[1];

    const int t_lo = std::max({0, p - c1, g2 + p - c1 - c2});
    const int t_hi = std::min({g1 + g2 - c1 - c2 + p, sym_total - c1 - c2 + p, p - c2});

    Rational sum(0);
    for (int t = t_lo; t <= t_hi; ++t) {
        BigInt num = f(c1 - p + t) * f(g1 + g2 - c1 - c2 + p - t);
        BigInt den = f(t) * f(sym_total - c1 - c2 + p - t) * f(p - c2 - t) *
                     f(c1 + c2 - p - g2 + t);
        Rational term = make_rational(num, den);
        if (t % 2 != 0) term = -term;
        sum += term;
    }
    return sum;
}

}  // namespace su3rwc
