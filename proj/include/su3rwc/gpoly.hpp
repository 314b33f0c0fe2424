#pragma once

#include <vector>

#include "su3rwc/labels.hpp"
#include "su3rwc/surd.hpp"

namespace su3rwc {

// All intermediate labels (k1, k2) whose derived partition
// [lambda-k1-k2, mu1+k1, k2] is a valid partition reachable from the left
// factor by a horizontal strip and reaching the target by a horizontal strip.
std::vector<BarLabel> k_ranges(const Coupling& c);

bool bar_valid(const Coupling& c, const BarLabel& bar);

// Recoupling contraction G([bar], eta): single square-root prefactor times an
// exact rational triple sum with the f3 kernel innermost. Throws
// std::domain_error for eta outside the coupling range or an invalid bar.
SurdSum g_eta(const Coupling& c, const BarLabel& bar, int eta);

// Merged single-formula form of the same contraction; retained as an
// independent cross-check (exact agreement is tested on mu2 = 0 couplings).
SurdSum g_eta_merged(const Coupling& c, const BarLabel& bar, int eta);

// Recoupling contraction G([bar], rho1 rho2 rho). Labels that violate
// betweenness against their parents are a domain error; weight or triangle
// selection-rule failures give 0.
SurdSum g_rho(const Coupling& c, const BarLabel& bar, const RhoTriple& rho);

// Subirrep label triples with betweenness, additive U(1) weight and the
// SU(2) triangle condition; the index set of every RWC table.
std::vector<RhoTriple> valid_rho_triples(const Coupling& c);

}  // namespace su3rwc
