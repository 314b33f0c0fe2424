#pragma once

#include <array>

#include "su3rwc/rational.hpp"

namespace su3rwc {

// Triple-sum kernel arguments: two three-row parent labels (h, q) against the
// target pair (m, n).
struct KernelArgs3 {
    std::array<int, 3> h;
    std::array<int, 3> q;
    std::array<int, 3> m;
    std::array<int, 3> n;
    auto operator<=>(const KernelArgs3&) const = default;
};

// Double-sum kernel arguments: three-row labels (h, m) and two-row labels
// (q, n).
struct KernelArgs2 {
    std::array<int, 3> h;
    std::array<int, 3> m;
    std::array<int, 2> q;
    std::array<int, 2> n;
    auto operator<=>(const KernelArgs2&) const = default;
};

// Exact triple sum over the integer lattice x >= y >= z on which every
// factorial argument is nonnegative; an empty lattice gives 0.
Rational f3_kernel(const KernelArgs3& a);

// Exact double sum, same nonnegativity rule.
Rational f2_kernel(const KernelArgs2& a);

// Exact single sum over t for the symmetric-split reduction; `sym_total` is
// lambda2'+mu2', `top` = m12'+m22'-p, `target2` = [lambda2+mu2, mu2] and
// `sub2` = [m12', m22'].
Rational f_kernel(int sym_total, int top, int mu2p, int p, std::array<int, 2> target2,
                  std::array<int, 2> sub2);

}  // namespace su3rwc
