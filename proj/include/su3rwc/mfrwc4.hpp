#pragma once

#include <array>

#include "su3rwc/labels.hpp"
#include "su3rwc/surd.hpp"

namespace su3rwc {

// Four-row partition for the complementary-chain level.
struct Partition4 {
    int m1 = 0, m2 = 0, m3 = 0, m4 = 0;

    auto operator<=>(const Partition4&) const = default;
    bool valid() const { return m1 >= m2 && m2 >= m3 && m3 >= m4 && m4 >= 0; }
    int box_count() const { return m1 + m2 + m3 + m4; }
};

// Multiplicity-free reduced coefficient one level up:
// <A4 rowA; (s,0,0,0) [r,0,0] | M4 rowM> with three-row subgroup labels.
SurdSum mf_rwc4(const Partition4& A, const Partition3& rowA, int s, int r, const Partition4& M,
                const Partition3& rowM);

}  // namespace su3rwc
