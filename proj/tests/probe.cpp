#include <cmath>
#include <iostream>
#include "su3rwc/gt_oracle.hpp"
#include "su3rwc/mfrwc4.hpp"
#include "su3rwc/rep_theory.hpp"
using namespace su3rwc;
int main() {
    std::vector<Partition4> lefts = {{1, 0, 0, 0}, {1, 1, 0, 0}, {2, 1, 0, 0},
                                     {2, 1, 1, 0}, {2, 2, 1, 0}, {3, 2, 1, 0}};
    int checked = 0, magfail = 0, signfail = 0;
    for (const auto& A : lefts)
        for (int s = 0; s <= 3; ++s) {
            if (A.box_count() + s > 8) continue;
            for (int d1 = 0; d1 <= s; ++d1)
                for (int d2 = 0; d2 + d1 <= s; ++d2)
                    for (int d3 = 0; d1 + d2 + d3 <= s; ++d3) {
                        Partition4 M{A.m1 + d1, A.m2 + d2, A.m3 + d3,
                                     A.m4 + s - d1 - d2 - d3};
                        if (!M.valid() || M.m4 != 0) continue;
                        if (!(M.m1 >= A.m1 && A.m1 >= M.m2 && M.m2 >= A.m2 && A.m2 >= M.m3 &&
                              M.m3 >= A.m3 && A.m3 >= M.m4))
                            continue;
                        int flip = 0;
                        for (int a1 = A.m2; a1 <= A.m1; ++a1)
                            for (int a2 = A.m3; a2 <= std::min(A.m2, a1); ++a2)
                                for (int a3 = A.m4; a3 <= std::min(A.m3, a2); ++a3)
                                    for (int p1 = M.m2; p1 <= M.m1; ++p1)
                                        for (int p2 = M.m3; p2 <= std::min(M.m2, p1); ++p2)
                                            for (int p3 = M.m4; p3 <= std::min(M.m3, p2); ++p3) {
                                                Partition3 rA{a1, a2, a3}, rM{p1, p2, p3};
                                                int r = rM.box_count() - rA.box_count();
                                                if (r < 0 || r > s) continue;
                                                auto tr = oracle::mf_rwc4_oracle(A, rA, s, r, M,
                                                                                 rM);
                                                if (!tr) continue;
                                                SurdSum eng = mf_rwc4(A, rA, s, r, M, rM);
                                                double ev = eng.to_double();
                                                double ov = tr->get_d();
                                                if (std::abs(ov) < 1e-30 &&
                                                    std::abs(ev) < 1e-30)
                                                    continue;
                                                ++checked;
                                                if (std::abs(std::abs(ev) - std::abs(ov)) >
                                                    1e-25 * (1 + std::abs(ov))) {
                                                    ++magfail;
                                                    if (magfail < 12)
                                                        std::cout << "MAG A=[" << A.m1 << A.m2
                                                                  << A.m3 << "] rA=" << to_string(rA)
                                                                  << " s=" << s << " r=" << r
                                                                  << " M=[" << M.m1 << M.m2 << M.m3
                                                                  << "] rM=" << to_string(rM)
                                                                  << " eng=" << ev << " orc=" << ov
                                                                  << std::endl;
                                                    continue;
                                                }
                                                int es = ev > 0 ? 1 : -1;
                                                int os = ov > 0 ? 1 : -1;
                                                if (flip == 0) flip = es * os;
                                                if (es * os != flip) ++signfail;
                                            }
                        oracle::clear_u4_oracle_cache();
                    }
        }
    std::cout << "checked=" << checked << " magnitude-fail=" << magfail
              << " sign-fail=" << signfail << std::endl;
    return 0;
}
