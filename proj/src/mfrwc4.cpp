#include "su3rwc/mfrwc4.hpp"

#include <map>
#include <tuple>

#include "su3rwc/factorial.hpp"
#include "su3rwc/kernels.hpp"

namespace su3rwc {

namespace {

const BigInt& f(long n) { return factorial(n); }

bool interleave43(const Partition4& outer, const Partition3& inner) {
    return outer.m1 >= inner.m1 && inner.m1 >= outer.m2 && outer.m2 >= inner.m2 &&
           inner.m2 >= outer.m3 && outer.m3 >= inner.m3 && inner.m3 >= outer.m4;
}

bool strip4(const Partition4& outer, const Partition4& inner) {
    return outer.m1 >= inner.m1 && inner.m1 >= outer.m2 && outer.m2 >= inner.m2 &&
           inner.m2 >= outer.m3 && outer.m3 >= inner.m3 && inner.m3 >= outer.m4 &&
           outer.m4 >= inner.m4 && inner.m4 >= 0;
}

bool strip3(const Partition3& outer, const Partition3& inner) {
    return outer.m1 >= inner.m1 && inner.m1 >= outer.m2 && outer.m2 >= inner.m2 &&
           inner.m2 >= outer.m3 && outer.m3 >= inner.m3 && inner.m3 >= 0;
}

SurdSum compute(Partition4 A, Partition3 rowA, int s, int r, Partition4 M, Partition3 rowM) {
    // normalize the fourth row away
    const int shift = A.m4;
    A = {A.m1 - shift, A.m2 - shift, A.m3 - shift, 0};
    M = {M.m1 - shift, M.m2 - shift, M.m3 - shift, M.m4 - shift};
    rowA = {rowA.m1 - shift, rowA.m2 - shift, rowA.m3 - shift};
    rowM = {rowM.m1 - shift, rowM.m2 - shift, rowM.m3 - shift};

    if (s < 0 || r < 0 || r > s) return SurdSum();
    if (!A.valid() || !M.valid() || M.m4 < 0 || !rowA.valid() || !rowM.valid() || rowA.m3 < 0 ||
        rowM.m3 < 0)
        return SurdSum();
    if (M.box_count() != A.box_count() + s) return SurdSum();
    if (rowM.box_count() != rowA.box_count() + r) return SurdSum();
    if (!strip4(M, A)) return SurdSum();
    if (!interleave43(A, rowA) || !interleave43(M, rowM)) return SurdSum();
    if (!strip3(rowM, rowA)) return SurdSum();

    const int A1 = A.m1, A2 = A.m2, A3 = A.m3;
    const int q1 = rowA.m1, q2 = rowA.m2, q3 = rowA.m3;
    const int m1 = M.m1, m2 = M.m2, m3 = M.m3, m4 = M.m4;
    const int p1 = rowM.m1, p2 = rowM.m2, p3 = rowM.m3;
    if (m4 != 0) return SurdSum();  // callers only need M4 = [m1 m2 m3 0]

    BigInt num = BigInt(m1 - m2 + 1) * (m1 - m3 + 2) * (m1 + 3) * (m2 - m3 + 1) * (m2 + 2) *
                 (m3 + 1);
    num *= BigInt(q1 - q2 + 1) * (q1 - q2 + 1) * (q1 - q3 + 2) * (q1 - q3 + 2) *
           (q2 - q3 + 1) * (q2 - q3 + 1);
    num *= f(A1 - m2) * f(A1 - m3 + 1) * f(A1 + 2) * f(A2 - m3) * f(A2 + 1) * f(A3);
    num *= f(A1 - q1) * f(A1 - q2 + 1) * f(A1 - q3 + 2) * f(A2 - q2) * f(A2 - q3 + 1) *
           f(A3 - q3);
    num *= f(p1 - m2) * f(p1 - m3 + 1) * f(p1 + 2) * f(p2 - m3) * f(p2 + 1) * f(p3);
    num *= f(p1 - q1) * f(p1 - q2 + 1) * f(p1 - q3 + 2) * f(p2 - q2) * f(p2 - q3 + 1) *
           f(p3 - q3);
    num *= f(s - r);

    BigInt den = f(m1 - A1) * f(m1 - A2 + 1) * f(m1 - A3 + 2) * f(m1 + 3);
    den *= f(m2 - A2) * f(m2 - A3 + 1) * f(m2 + 2) * f(m3 - A3) * f(m3 + 1);
    den *= f(q1 - A2) * f(q1 - A3 + 1) * f(q1 + 2) * f(q2 - A3) * f(q2 + 1) * f(q3);
    den *= f(m1 - p1) * f(m1 - p2 + 1) * f(m1 - p3 + 2) * f(m2 - p2) * f(m2 - p3 + 1) *
           f(m3 - p3);
    den *= f(q1 - p2 + 1) * f(q1 - p3 + 2) * f(q2 - p3 + 1);


    KernelArgs3 args{{A1, A2, A3}, {q1, q2, q3}, {m1, m2, m3}, {p1, p2, p3}};
    Rational sum = f3_kernel(args);
    if (sum == 0) return SurdSum();

    SurdSum out = SurdSum::sqrt_of(make_rational(num, den));
    out.scale(sum);
    return out;
}

}  // namespace

SurdSum mf_rwc4(const Partition4& A, const Partition3& rowA, int s, int r, const Partition4& M,
                const Partition3& rowM) {
    thread_local std::map<std::tuple<Partition4, Partition3, int, int, Partition4, Partition3>,
                          SurdSum>
        memo;
    auto key = std::make_tuple(A, rowA, s, r, M, rowM);
    auto it = memo.find(key);
    if (it != memo.end()) return it->second;
    SurdSum value = compute(A, rowA, s, r, M, rowM);
    memo.emplace(std::move(key), value);
    return value;
}

}  // namespace su3rwc
