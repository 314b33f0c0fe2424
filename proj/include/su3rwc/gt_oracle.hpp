#pragma once

#include <gmpxx.h>

#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "su3rwc/engine.hpp"
#include "su3rwc/labels.hpp"

// Floating-point oracle over Gelfand-Tsetlin bases. Deliberately disjoint
// from the exact engine: high-precision floats, generator matrix elements
// from the standard pattern formulas, multiplicity spaces by linear algebra.

namespace su3rwc::oracle {

using Real = mpf_class;

struct GtPattern {
    int m13, m23, m33;  // top row
    int m12, m22;       // middle row
    int m11;            // bottom row

    bool valid() const {
        return m13 >= m12 && m12 >= m23 && m23 >= m22 && m22 >= m33 && m12 >= m11 && m11 >= m22;
    }
    U2Label u2() const { return {m12, m22}; }
    // U(3) weight (w1, w2, w3)
    std::array<int, 3> weight() const {
        return {m11, m12 + m22 - m11, m13 + m23 + m33 - m12 - m22};
    }
};

class GtBasis {
  public:
    explicit GtBasis(const Partition3& irrep);

    const Partition3& irrep() const { return irrep_; }
    int dim() const { return static_cast<int>(patterns_.size()); }
    const GtPattern& pattern(int i) const { return patterns_[static_cast<std::size_t>(i)]; }
    int index_of(const GtPattern& p) const;

  private:
    Partition3 irrep_;
    std::vector<GtPattern> patterns_;
    std::map<std::array<int, 3>, int> index_;
};

// Sparse one-step action: list of (target index, amplitude) per basis state.
struct SparseAction {
    std::vector<std::vector<std::pair<int, Real>>> rows;
};

// E_{l,l+1} (raising, level l in {1,2}) and E_{l+1,l} (lowering) in the GT
// basis of `irrep`, entries at precision `prec`.
SparseAction gt_raising(const GtBasis& basis, int level, mp_bitcnt_t prec);
SparseAction gt_lowering(const GtBasis& basis, int level, mp_bitcnt_t prec);

using Matrix = std::vector<std::vector<Real>>;

struct GeneratorMatrices {
    Matrix e12, e23, e13;
    Matrix e21, e32, e31;
    std::vector<std::array<int, 3>> weights;  // diagonal of the Cartan part
};

GeneratorMatrices gt_generator_matrices(const Partition3& irrep, mp_bitcnt_t prec = 256);

// Orthonormal basis of the highest-weight multiplicity space of `target`
// inside left x right, expressed over the product-basis pairs returned in
// `pair_index`. Dimension must match the Littlewood-Richardson count.
struct MultiplicitySpace {
    std::vector<std::pair<int, int>> pairs;  // (left index, right index) of the weight space
    std::vector<std::vector<Real>> basis;    // orthonormal rows
};

MultiplicitySpace highest_weight_multiplicity_space(const Partition3& left,
                                                    const Partition3& right,
                                                    const Partition3& target,
                                                    mp_bitcnt_t prec = 256);

struct OracleReport {
    bool pass = false;
    double max_residual = 0.0;
    std::string detail;
};

// Checks that every eta row of the exact table, floated and coupled into the
// product space, (a) lies in the multiplicity space, (b) forms an orthonormal
// family, and (c) spans it (projector comparison), all within tol.
OracleReport oracle_projector_check(const RwcTable& table, double tol,
                                    mp_bitcnt_t prec = 256);

// Full floating reconstruction of a multiplicity-free table from first
// principles (highest weight + lowering); the overall sign is arbitrary.
struct OracleMfTable {
    std::vector<RhoTriple> rhos;
    std::vector<Real> values;
};

OracleMfTable mf_table_oracle(const Coupling& c, mp_bitcnt_t prec = 256);

// Nearest rational with small denominator; empty when no denominator below
// the bound reproduces x to the stated tolerance.
std::optional<Rational> reconstruct_rational(const Real& x, double tol = 1e-30,
                                             unsigned long max_den = 100000000UL);

}  // namespace su3rwc::oracle

// Four-row Gelfand-Tsetlin machinery for the complementary chain; used to
// validate the four-row reduced coefficients.
#include "su3rwc/mfrwc4.hpp"

namespace su3rwc::oracle {

// Truth value of <A rowA; (s,0,0,0) [r,0,0] | M rowM> up to the global sign
// of the coupled family; empty when no subpattern completion has a nonzero
// divisor.
std::optional<Real> mf_rwc4_oracle(const Partition4& A, const Partition3& rowA, int s, int r,
                                   const Partition4& M, const Partition3& rowM,
                                   mp_bitcnt_t prec = 256);

// Clears the per-coupling state cache (the builder is memory-hungry).
void clear_u4_oracle_cache();

// Gram matrix of the special complementary-chain vectors, from first
// principles (floating).
std::vector<std::vector<Real>> u4_gram_oracle(const Coupling& c, mp_bitcnt_t prec = 256);

}  // namespace su3rwc::oracle
