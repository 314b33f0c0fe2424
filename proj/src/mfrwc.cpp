#include "su3rwc/mfrwc.hpp"

#include <map>
#include <tuple>

#include "su3rwc/factorial.hpp"
#include "su3rwc/kernels.hpp"

namespace su3rwc {

namespace {

const BigInt& f(long n) { return factorial(n); }

bool strip3(const Partition3& outer, const Partition3& inner) {
    return outer.m1 >= inner.m1 && inner.m1 >= outer.m2 && outer.m2 >= inner.m2 &&
           inner.m2 >= outer.m3 && outer.m3 >= inner.m3 && inner.m3 >= 0;
}

SurdSum compute(const Partition3& A, const U2Label& rhoA, int s, int r, const Partition3& M,
                const U2Label& rhoM) {
    // normalize to a two-row left factor
    const int shift = A.m3;
    const int a1 = A.m1 - shift, a2 = A.m2 - shift;
    const int m1 = M.m1 - shift, m2 = M.m2 - shift, m3 = M.m3 - shift;
    const int q1 = rhoA.q1 - shift, q2 = rhoA.q2 - shift;
    const int p1 = rhoM.q1 - shift, p2 = rhoM.q2 - shift;

    // selection rules
    if (s < 0 || r < 0 || r > s) return SurdSum();
    if (m3 < 0 || q2 < 0 || p2 < 0) return SurdSum();
    if (M.box_count() != A.box_count() + s) return SurdSum();
    if (rhoM.box_count() != rhoA.box_count() + r) return SurdSum();
    Partition3 a3{a1, a2, 0};
    Partition3 m3r{m1, m2, m3};
    if (!a3.valid() || !m3r.valid()) return SurdSum();
    if (!strip3(m3r, a3)) return SurdSum();
    if (!U2Label{q1, q2}.inside(a3)) return SurdSum();
    if (!U2Label{p1, p2}.inside(m3r)) return SurdSum();
    // U(2)-level horizontal strip for the symmetric coupling
    if (!(p1 >= q1 && q1 >= p2 && p2 >= q2)) return SurdSum();

    BigInt num = BigInt(m1 - m2 + 1) * (m1 - m3 + 2) * (m2 - m3 + 1) * (q1 - q2 + 1);
    num *= f(a1 - m2) * f(a1 - m3 + 1) * f(a1 - q1) * f(a1 - q2 + 1);
    num *= f(a2 - m3) * f(a2 - q2) * f(s - r);
    num *= f(p1 - m2) * f(p1 - m3 + 1) * f(p1 - q1) * f(p1 - q2 + 1);
    num *= f(p2 - m3) * f(p2 - q2);

    BigInt den = f(m1 - a1) * f(m1 - a2 + 1) * f(m1 - p1) * f(m1 - p2 + 1);
    den *= f(m2 - a2) * f(m2 - p2);
    den *= f(m1 + 2) * f(m2 + 1) * f(m3);
    den *= f(q1 - a2) * f(q1 - p2) * f(q1 + 1) * f(q2);

    KernelArgs2 args{{a1, a2, 0}, {m1, m2, m3}, {q1, q2}, {p1, p2}};
    Rational sum = f2_kernel(args);
    if (sum == 0) return SurdSum();

    SurdSum out = SurdSum::sqrt_of(make_rational(num, den));
    out.scale(sum);
    return out;
}

}  // namespace

SurdSum mf_rwc(const Partition3& A, const U2Label& rhoA, int s, int r, const Partition3& M,
               const U2Label& rhoM) {
    thread_local std::map<std::tuple<Partition3, U2Label, int, int, Partition3, U2Label>, SurdSum>
        memo;
    auto key = std::make_tuple(A, rhoA, s, r, M, rhoM);
    auto it = memo.find(key);
    if (it != memo.end()) return it->second;
    SurdSum value = compute(A, rhoA, s, r, M, rhoM);
    memo.emplace(std::move(key), value);
    return value;
}

}  // namespace su3rwc
