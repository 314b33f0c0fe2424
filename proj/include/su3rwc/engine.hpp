#pragma once

#include <vector>

#include "su3rwc/gpoly.hpp"
#include "su3rwc/labels.hpp"
#include "su3rwc/surd.hpp"

namespace su3rwc {

// Gram matrix of the multiplicity vectors, entries[i][j] = (eta_i, eta_j).
struct GramMatrix {
    Coupling coupling;
    std::vector<std::vector<SurdSum>> entries;

    int size() const { return static_cast<int>(entries.size()); }
};

// Canonical special coefficients, entries[j][k] = <eta~_j / eta_k> with
// entries[j][k] = 0 for j > k and a strictly positive diagonal; the unique
// factor with M^T M = Gram.
struct SpecialRwcMatrix {
    Coupling coupling;
    std::vector<std::vector<SurdSum>> entries;

    int size() const { return static_cast<int>(entries.size()); }
};

// Full table of reduced coefficients: values[j][r] belongs to multiplicity
// index eta_min + j and rho triple rhos[r].
struct RwcTable {
    Coupling coupling;
    std::vector<RhoTriple> rhos;
    std::vector<std::vector<SurdSum>> values;

    int multiplicity() const { return static_cast<int>(values.size()); }
    const SurdSum& at(int eta, const RhoTriple& rho) const;
};

GramMatrix build_gram(const Coupling& c);

SpecialRwcMatrix special_rwc(const GramMatrix& gram);
SpecialRwcMatrix special_rwc(const Coupling& c);

RwcTable rwc_table(const Coupling& c);

// Direct single-bar construction, defined for mu2 == 0 couplings only.
RwcTable mf_table_direct(const Coupling& c);

// Recoupling coefficients R_eta([bar]) solving the triangular system against
// the special matrix; rows indexed by eta, columns by k_ranges(c).
std::vector<std::vector<SurdSum>> racah_su3_matrix(const Coupling& c);
SurdSum racah_su3(const Coupling& c, const BarLabel& bar, int eta);

// Exchange data relating left x right to right x left.
int exchange_phase_mf(const Coupling& c);
std::vector<std::vector<SurdSum>> exchange_z_matrix(const Coupling& c);

}  // namespace su3rwc
