#pragma once

#include "su3rwc/labels.hpp"
#include "su3rwc/surd.hpp"

namespace su3rwc {

// Multiplicity-free reduced coefficient <A rhoA; (s,0) [r,0] | M rhoM> for a
// general three-row A (shift-normalized internally) coupled with a symmetric
// irrep. Selection-rule violations give 0. The value is a single square-root
// prefactor times the exact f2 double sum.
SurdSum mf_rwc(const Partition3& A, const U2Label& rhoA, int s, int r, const Partition3& M,
               const U2Label& rhoM);

}  // namespace su3rwc
