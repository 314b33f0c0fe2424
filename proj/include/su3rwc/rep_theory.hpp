#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "su3rwc/labels.hpp"

namespace su3rwc {

inline long dim_su3(const Su3Irrep& w) { return w.dimension(); }
long dim_u3(const Partition3& p);

// Outer multiplicity index range of `target` in left x right, or empty when
// the irrep does not occur. Throws std::domain_error when the box counts do
// not match.
std::optional<std::pair<int, int>> multiplicity_range(const Su3Irrep& left, const Su3Irrep& right,
                                                      const Partition3& target);

// Independent brute-force oracle: counts Littlewood-Richardson skew tableaux
// of shape target/left with content [lambda2+mu2, mu2] (row-weak,
// column-strict, lattice word). Returns 0 on box-count mismatch.
int lr_multiplicity(const Su3Irrep& left, const Su3Irrep& right, const Partition3& target);

struct ProductTerm {
    Partition3 target;
    int multiplicity;
};

// All targets with nonempty multiplicity range, ordered by partition.
std::vector<ProductTerm> decompose_product(const Su3Irrep& left, const Su3Irrep& right);

// All [q1, q2] with m1 >= q1 >= m2 >= q2 >= m3.
std::vector<U2Label> u2_sublabels(const Partition3& parent);

// Validated coupling; empty when the target does not occur.
std::optional<Coupling> make_coupling(const Su3Irrep& left, const Su3Irrep& right,
                                      const Partition3& target);
// Throwing variant for call sites that require a nonempty coupling.
Coupling require_coupling(const Su3Irrep& left, const Su3Irrep& right, const Partition3& target);

}  // namespace su3rwc
