#include "su3rwc/gt_oracle.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <stdexcept>

#include "su3rwc/rep_theory.hpp"
#include "su3rwc/su2.hpp"

namespace su3rwc::oracle {

namespace {

Real make_real(mp_bitcnt_t prec, long v = 0) {
    Real r(0, prec);
    r = v;
    return r;
}

Real sqrt_rational(const Rational& q, mp_bitcnt_t prec) {
    if (sgn(q) < 0) throw std::logic_error("oracle: sqrt of negative rational");
    Real x(0, prec);
    mpf_set_q(x.get_mpf_t(), q.get_mpq_t());
    Real out(0, prec);
    mpf_sqrt(out.get_mpf_t(), x.get_mpf_t());
    return out;
}

Real rational_to_real(const Rational& q, mp_bitcnt_t prec) {
    Real x(0, prec);
    mpf_set_q(x.get_mpf_t(), q.get_mpq_t());
    return x;
}

// pattern entry m(i, l), 1-based as in the standard pattern calculus
int entry(const GtPattern& p, int i, int l) {
    if (l == 3) return i == 1 ? p.m13 : (i == 2 ? p.m23 : p.m33);
    if (l == 2) return i == 1 ? p.m12 : p.m22;
    return p.m11;
}

GtPattern shifted(const GtPattern& p, int k, int l, int delta) {
    GtPattern q = p;
    if (l == 1) {
        q.m11 += delta;
    } else if (k == 1) {
        q.m12 += delta;
    } else {
        q.m22 += delta;
    }
    return q;
}

// <M - e_{k,l} | E_{l+1,l} | M>, as a nonnegative rational under one root.
Rational lowering_sq(const GtPattern& p, int k, int l) {
    Rational num(1), den(1);
    for (int i = 1; i <= l + 1; ++i) num *= Rational(entry(p, i, l + 1) - entry(p, k, l) + k - i + 1);
    for (int i = 1; i <= l - 1; ++i) num *= Rational(entry(p, i, l - 1) - entry(p, k, l) + k - i);
    for (int i = 1; i <= l; ++i) {
        if (i == k) continue;
        den *= Rational(entry(p, i, l) - entry(p, k, l) + k - i + 1);
        den *= Rational(entry(p, i, l) - entry(p, k, l) + k - i);
    }
    return -num / den;
}

// <M + e_{k,l} | E_{l,l+1} | M>
Rational raising_sq(const GtPattern& p, int k, int l) {
    Rational num(1), den(1);
    for (int i = 1; i <= l + 1; ++i) num *= Rational(entry(p, i, l + 1) - entry(p, k, l) + k - i);
    for (int i = 1; i <= l - 1; ++i) num *= Rational(entry(p, i, l - 1) - entry(p, k, l) + k - i - 1);
    for (int i = 1; i <= l; ++i) {
        if (i == k) continue;
        den *= Rational(entry(p, i, l) - entry(p, k, l) + k - i);
        den *= Rational(entry(p, i, l) - entry(p, k, l) + k - i - 1);
    }
    return -num / den;
}

}  // namespace

GtBasis::GtBasis(const Partition3& irrep) : irrep_(irrep) {
    if (!irrep.valid()) throw std::domain_error("GtBasis: invalid partition");
    for (int m12 = irrep.m2; m12 <= irrep.m1; ++m12)
        for (int m22 = irrep.m3; m22 <= irrep.m2; ++m22)
            for (int m11 = m22; m11 <= m12; ++m11)
                patterns_.push_back({irrep.m1, irrep.m2, irrep.m3, m12, m22, m11});
    for (int i = 0; i < dim(); ++i) {
        const GtPattern& p = patterns_[static_cast<std::size_t>(i)];
        index_.emplace(std::array<int, 3>{p.m12, p.m22, p.m11}, i);
    }
}

int GtBasis::index_of(const GtPattern& p) const {
    auto it = index_.find({p.m12, p.m22, p.m11});
    if (it == index_.end()) throw std::domain_error("GtBasis: pattern not in basis");
    return it->second;
}

SparseAction gt_raising(const GtBasis& basis, int level, mp_bitcnt_t prec) {
    SparseAction out;
    out.rows.assign(static_cast<std::size_t>(basis.dim()), {});
    for (int i = 0; i < basis.dim(); ++i) {
        const GtPattern& p = basis.pattern(i);
        for (int k = 1; k <= level; ++k) {
            GtPattern q = shifted(p, k, level, +1);
            if (!q.valid()) continue;
            out.rows[static_cast<std::size_t>(i)].push_back(
                {basis.index_of(q), sqrt_rational(raising_sq(p, k, level), prec)});
        }
    }
    return out;
}

SparseAction gt_lowering(const GtBasis& basis, int level, mp_bitcnt_t prec) {
    SparseAction out;
    out.rows.assign(static_cast<std::size_t>(basis.dim()), {});
    for (int i = 0; i < basis.dim(); ++i) {
        const GtPattern& p = basis.pattern(i);
        for (int k = 1; k <= level; ++k) {
            GtPattern q = shifted(p, k, level, -1);
            if (!q.valid()) continue;
            out.rows[static_cast<std::size_t>(i)].push_back(
                {basis.index_of(q), sqrt_rational(lowering_sq(p, k, level), prec)});
        }
    }
    return out;
}

namespace {

Matrix dense_from_sparse(const SparseAction& a, int dim, mp_bitcnt_t prec) {
    Matrix m(static_cast<std::size_t>(dim),
             std::vector<Real>(static_cast<std::size_t>(dim), make_real(prec)));
    for (int src = 0; src < dim; ++src)
        for (const auto& [dst, amp] : a.rows[static_cast<std::size_t>(src)])
            m[static_cast<std::size_t>(dst)][static_cast<std::size_t>(src)] += amp;
    return m;
}

Matrix commutator(const Matrix& a, const Matrix& b, mp_bitcnt_t prec) {
    const std::size_t n = a.size();
    Matrix out(n, std::vector<Real>(n, make_real(prec)));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k < n; ++k) {
            for (std::size_t j = 0; j < n; ++j)
                out[i][j] += a[i][k] * b[k][j] - b[i][k] * a[k][j];
        }
    return out;
}

}  // namespace

GeneratorMatrices gt_generator_matrices(const Partition3& irrep, mp_bitcnt_t prec) {
    GtBasis basis(irrep);
    GeneratorMatrices g;
    g.e12 = dense_from_sparse(gt_raising(basis, 1, prec), basis.dim(), prec);
    g.e23 = dense_from_sparse(gt_raising(basis, 2, prec), basis.dim(), prec);
    g.e21 = dense_from_sparse(gt_lowering(basis, 1, prec), basis.dim(), prec);
    g.e32 = dense_from_sparse(gt_lowering(basis, 2, prec), basis.dim(), prec);
    g.e13 = commutator(g.e12, g.e23, prec);
    g.e31 = commutator(g.e32, g.e21, prec);
    g.weights.reserve(static_cast<std::size_t>(basis.dim()));
    for (int i = 0; i < basis.dim(); ++i) g.weights.push_back(basis.pattern(i).weight());
    return g;
}

namespace {

// Coupled-space helper shared by the multiplicity-space and lowering code.
struct ProductSpace {
    GtBasis a;
    GtBasis b;
    mp_bitcnt_t prec;
    SparseAction raise_a1, raise_a2, lower_a1, lower_a2;
    SparseAction raise_b1, raise_b2, lower_b1, lower_b2;

    ProductSpace(const Partition3& left, const Partition3& right, mp_bitcnt_t prec_bits)
        : a(left),
          b(right),
          prec(prec_bits),
          raise_a1(gt_raising(a, 1, prec_bits)),
          raise_a2(gt_raising(a, 2, prec_bits)),
          lower_a1(gt_lowering(a, 1, prec_bits)),
          lower_a2(gt_lowering(a, 2, prec_bits)),
          raise_b1(gt_raising(b, 1, prec_bits)),
          raise_b2(gt_raising(b, 2, prec_bits)),
          lower_b1(gt_lowering(b, 1, prec_bits)),
          lower_b2(gt_lowering(b, 2, prec_bits)) {}

    std::array<int, 3> weight_of(int ia, int ib) const {
        auto wa = a.pattern(ia).weight();
        auto wb = b.pattern(ib).weight();
        return {wa[0] + wb[0], wa[1] + wb[1], wa[2] + wb[2]};
    }

    std::vector<std::pair<int, int>> weight_pairs(const std::array<int, 3>& w) const {
        std::vector<std::pair<int, int>> out;
        for (int ia = 0; ia < a.dim(); ++ia)
            for (int ib = 0; ib < b.dim(); ++ib)
                if (weight_of(ia, ib) == w) out.emplace_back(ia, ib);
        return out;
    }
};

// Gaussian-elimination kernel of a rows x cols matrix; columns index the
// unknowns. Returns an orthonormal kernel basis (modified Gram-Schmidt).
std::vector<std::vector<Real>> kernel_basis(Matrix m, int cols, mp_bitcnt_t prec) {
    const int rows = static_cast<int>(m.size());
    Real eps = make_real(prec, 1);
    mpf_div_2exp(eps.get_mpf_t(), eps.get_mpf_t(), prec / 2);

    std::vector<int> pivot_col;
    int r = 0;
    for (int c = 0; c < cols && r < rows; ++c) {
        int best = -1;
        Real best_abs = make_real(prec);
        for (int i = r; i < rows; ++i) {
            Real v = abs(m[static_cast<std::size_t>(i)][static_cast<std::size_t>(c)]);
            if (v > best_abs) {
                best_abs = v;
                best = i;
            }
        }
        if (best < 0 || best_abs < eps) continue;
        std::swap(m[static_cast<std::size_t>(r)], m[static_cast<std::size_t>(best)]);
        for (int i = 0; i < rows; ++i) {
            if (i == r) continue;
            Real factor = m[static_cast<std::size_t>(i)][static_cast<std::size_t>(c)] /
                          m[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)];
            if (sgn(factor) == 0) continue;
            for (int j = c; j < cols; ++j)
                m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] -=
                    factor * m[static_cast<std::size_t>(r)][static_cast<std::size_t>(j)];
        }
        pivot_col.push_back(c);
        ++r;
    }

    std::vector<bool> is_pivot(static_cast<std::size_t>(cols), false);
    for (int c : pivot_col) is_pivot[static_cast<std::size_t>(c)] = true;
    std::vector<std::vector<Real>> basis;
    for (int free = 0; free < cols; ++free) {
        if (is_pivot[static_cast<std::size_t>(free)]) continue;
        std::vector<Real> v(static_cast<std::size_t>(cols), make_real(prec));
        v[static_cast<std::size_t>(free)] = make_real(prec, 1);
        for (int i = static_cast<int>(pivot_col.size()) - 1; i >= 0; --i) {
            int c = pivot_col[static_cast<std::size_t>(i)];
            Real sum = make_real(prec);
            for (int j = c + 1; j < cols; ++j)
                sum += m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] *
                       v[static_cast<std::size_t>(j)];
            v[static_cast<std::size_t>(c)] =
                -sum / m[static_cast<std::size_t>(i)][static_cast<std::size_t>(c)];
        }
        basis.push_back(std::move(v));
    }

    // modified Gram-Schmidt with one re-orthogonalization pass
    std::vector<std::vector<Real>> ortho;
    for (auto& v : basis) {
        for (int pass = 0; pass < 2; ++pass) {
            for (const auto& u : ortho) {
                Real dot = make_real(prec);
                for (std::size_t j = 0; j < v.size(); ++j) dot += u[j] * v[j];
                for (std::size_t j = 0; j < v.size(); ++j) v[j] -= dot * u[j];
            }
        }
        Real norm2 = make_real(prec);
        for (const Real& x : v) norm2 += x * x;
        if (norm2 < eps) continue;
        Real norm(0, prec);
        mpf_sqrt(norm.get_mpf_t(), norm2.get_mpf_t());
        for (Real& x : v) x /= norm;
        ortho.push_back(std::move(v));
    }
    return ortho;
}

}  // namespace

MultiplicitySpace highest_weight_multiplicity_space(const Partition3& left,
                                                    const Partition3& right,
                                                    const Partition3& target,
                                                    mp_bitcnt_t prec) {
    ProductSpace ps(left, right, prec);
    MultiplicitySpace out;
    if (target.box_count() != left.box_count() + right.box_count()) return out;
    out.pairs = ps.weight_pairs({target.m1, target.m2, target.m3});
    if (out.pairs.empty()) return out;

    std::map<std::pair<int, int>, int> pair_index;
    for (std::size_t i = 0; i < out.pairs.size(); ++i)
        pair_index.emplace(out.pairs[i], static_cast<int>(i));

    // stack the two raising operators: rows = image states, cols = weight pairs
    std::map<std::pair<int, std::pair<int, int>>, int> image_index;
    std::vector<std::vector<std::pair<int, Real>>> columns(out.pairs.size());
    int n_rows = 0;
    for (std::size_t ci = 0; ci < out.pairs.size(); ++ci) {
        auto [ia, ib] = out.pairs[ci];
        for (int level = 1; level <= 2; ++level) {
            const SparseAction& ra = level == 1 ? ps.raise_a1 : ps.raise_a2;
            const SparseAction& rb = level == 1 ? ps.raise_b1 : ps.raise_b2;
            for (const auto& [ja, amp] : ra.rows[static_cast<std::size_t>(ia)]) {
                auto key = std::make_pair(level, std::make_pair(ja, ib));
                auto [it, inserted] = image_index.emplace(key, n_rows);
                if (inserted) ++n_rows;
                columns[ci].push_back({it->second, amp});
            }
            for (const auto& [jb, amp] : rb.rows[static_cast<std::size_t>(ib)]) {
                auto key = std::make_pair(level, std::make_pair(ia, jb));
                auto [it, inserted] = image_index.emplace(key, n_rows);
                if (inserted) ++n_rows;
                columns[ci].push_back({it->second, amp});
            }
        }
    }
    Matrix m(static_cast<std::size_t>(n_rows),
             std::vector<Real>(out.pairs.size(), make_real(prec)));
    for (std::size_t ci = 0; ci < out.pairs.size(); ++ci)
        for (const auto& [row, amp] : columns[ci])
            m[static_cast<std::size_t>(row)][ci] += amp;

    out.basis = kernel_basis(std::move(m), static_cast<int>(out.pairs.size()), prec);

    int expected = lr_multiplicity(to_irrep(Partition3{left.m1 - left.m3, left.m2 - left.m3, 0}),
                                   to_irrep(Partition3{right.m1 - right.m3, right.m2 - right.m3, 0}),
                                   Partition3{target.m1 - left.m3 - right.m3,
                                              target.m2 - left.m3 - right.m3,
                                              target.m3 - left.m3 - right.m3});
    if (static_cast<int>(out.basis.size()) != expected)
        throw std::logic_error("oracle: multiplicity-space dimension " +
                               std::to_string(out.basis.size()) + " disagrees with LR count " +
                               std::to_string(expected));
    return out;
}

namespace {

// Coupled highest-weight vector of `table` row eta over the weight pairs.
std::vector<Real> coupled_hw_vector(const RwcTable& table, int eta,
                                    const MultiplicitySpace& space, const ProductSpace& ps,
                                    mp_bitcnt_t prec) {
    const Partition3& m = table.coupling.target;
    const U2Label rho_hw{m.m1, m.m2};
    const int tj = rho_hw.twice_spin();
    std::vector<Real> v(space.pairs.size(), make_real(prec));
    for (std::size_t i = 0; i < space.pairs.size(); ++i) {
        auto [ia, ib] = space.pairs[i];
        const GtPattern& pa = ps.a.pattern(ia);
        const GtPattern& pb = ps.b.pattern(ib);
        RhoTriple rho{pa.u2(), pb.u2(), rho_hw};
        auto it = std::find(table.rhos.begin(), table.rhos.end(), rho);
        if (it == table.rhos.end()) continue;
        const SurdSum& rwc =
            table.values[static_cast<std::size_t>(eta - table.coupling.eta_min)]
                        [static_cast<std::size_t>(it - table.rhos.begin())];
        if (rwc.is_zero()) continue;
        int tj1 = pa.u2().twice_spin();
        int tj2 = pb.u2().twice_spin();
        int tm1 = 2 * pa.m11 - pa.u2().box_count();
        int tm2 = 2 * pb.m11 - pb.u2().box_count();
        SurdSum cg = su2_cg(tj1, tm1, tj2, tm2, tj, tj);
        if (cg.is_zero()) continue;
        v[i] = (rwc * cg).to_mpf(prec);
    }
    return v;
}

}  // namespace

OracleReport oracle_projector_check(const RwcTable& table, double tol, mp_bitcnt_t prec) {
    OracleReport report;
    const Coupling& c = table.coupling;
    ProductSpace ps(to_partition(c.left), to_partition(c.right), prec);
    MultiplicitySpace space =
        highest_weight_multiplicity_space(to_partition(c.left), to_partition(c.right), c.target,
                                          prec);
    const int m = c.multiplicity();
    if (static_cast<int>(space.basis.size()) != m) {
        report.detail = "multiplicity mismatch";
        return report;
    }
    const std::size_t n = space.pairs.size();

    std::vector<std::vector<Real>> engine(static_cast<std::size_t>(m));
    Real max_resid = make_real(prec);
    for (int eta = 0; eta < m; ++eta) {
        engine[static_cast<std::size_t>(eta)] =
            coupled_hw_vector(table, c.eta_min + eta, space, ps, prec);
        // (a) membership: residual after projecting onto the oracle space
        std::vector<Real> resid = engine[static_cast<std::size_t>(eta)];
        for (const auto& u : space.basis) {
            Real dot = make_real(prec);
            for (std::size_t j = 0; j < n; ++j) dot += u[j] * resid[j];
            for (std::size_t j = 0; j < n; ++j) resid[j] -= dot * u[j];
        }
        Real rn = make_real(prec);
        for (const Real& x : resid) rn += x * x;
        if (rn > max_resid) max_resid = rn;
    }
    // (b) orthonormality of the engine family
    for (int i = 0; i < m; ++i)
        for (int j = i; j < m; ++j) {
            Real dot = make_real(prec);
            for (std::size_t t = 0; t < n; ++t)
                dot += engine[static_cast<std::size_t>(i)][t] * engine[static_cast<std::size_t>(j)][t];
            Real target = make_real(prec, i == j ? 1 : 0);
            Real diff = abs(dot - target);
            if (diff * diff > max_resid) max_resid = diff * diff;
        }
    // (c) projector comparison
    for (std::size_t s = 0; s < n; ++s)
        for (std::size_t t = s; t < n; ++t) {
            Real p_oracle = make_real(prec);
            for (const auto& u : space.basis) p_oracle += u[s] * u[t];
            Real p_engine = make_real(prec);
            for (const auto& v : engine) p_engine += v[s] * v[t];
            Real diff = abs(p_oracle - p_engine);
            if (diff * diff > max_resid) max_resid = diff * diff;
        }

    Real root(0, prec);
    mpf_sqrt(root.get_mpf_t(), max_resid.get_mpf_t());
    report.max_residual = root.get_d();
    report.pass = report.max_residual <= tol;
    if (!report.pass) report.detail = "residual above tolerance";
    return report;
}

namespace {

struct TargetStateBuilder {
    const Coupling& c;
    ProductSpace& ps;
    GtBasis target_basis;
    mp_bitcnt_t prec;
    // coupled vector per target pattern, over all product pairs (dense by
    // pair index = ia * dim_b + ib)
    std::vector<std::vector<Real>> psi;
    SparseAction target_lower1, target_lower2;

    TargetStateBuilder(const Coupling& coupling, ProductSpace& space, mp_bitcnt_t prec_bits)
        : c(coupling),
          ps(space),
          target_basis(coupling.target),
          prec(prec_bits),
          target_lower1(gt_lowering(target_basis, 1, prec_bits)),
          target_lower2(gt_lowering(target_basis, 2, prec_bits)) {}

    int flat(int ia, int ib) const { return ia * ps.b.dim() + ib; }

    // apply the coupled lowering operator to a dense product-space vector
    std::vector<Real> lower(const std::vector<Real>& v, int level) {
        std::vector<Real> out(v.size(), make_real(prec));
        const SparseAction& la = level == 1 ? ps.lower_a1 : ps.lower_a2;
        const SparseAction& lb = level == 1 ? ps.lower_b1 : ps.lower_b2;
        for (int ia = 0; ia < ps.a.dim(); ++ia)
            for (int ib = 0; ib < ps.b.dim(); ++ib) {
                const Real& amp = v[static_cast<std::size_t>(flat(ia, ib))];
                if (sgn(amp) == 0) continue;
                for (const auto& [ja, c1] : la.rows[static_cast<std::size_t>(ia)])
                    out[static_cast<std::size_t>(flat(ja, ib))] += amp * c1;
                for (const auto& [jb, c2] : lb.rows[static_cast<std::size_t>(ib)])
                    out[static_cast<std::size_t>(flat(ia, jb))] += amp * c2;
            }
        return out;
    }

    // build all coupled target states from the (unique) highest-weight vector
    void build() {
        MultiplicitySpace space = highest_weight_multiplicity_space(
            to_partition(c.left), to_partition(c.right), c.target, prec);
        if (space.basis.size() != 1)
            throw std::domain_error("oracle mf table: coupling is not multiplicity-free");
        psi.assign(static_cast<std::size_t>(target_basis.dim()),
                   std::vector<Real>(static_cast<std::size_t>(ps.a.dim() * ps.b.dim()),
                                     make_real(prec)));
        // seed: the highest-weight pattern
        int hw_index = target_basis.index_of(
            {c.target.m1, c.target.m2, c.target.m3, c.target.m1, c.target.m2, c.target.m1});
        for (std::size_t j = 0; j < space.pairs.size(); ++j) {
            auto [ia, ib] = space.pairs[j];
            psi[static_cast<std::size_t>(hw_index)][static_cast<std::size_t>(flat(ia, ib))] =
                space.basis[0][j];
        }

        // group target patterns by weight; descending (w1, w1+w2) order makes
        // every lowering parent precede its children
        std::map<std::pair<int, int>, std::vector<int>> groups;
        for (int i = 0; i < target_basis.dim(); ++i) {
            auto w = target_basis.pattern(i).weight();
            groups[{-w[0], -(w[0] + w[1])}].push_back(i);
        }
        std::vector<bool> built(static_cast<std::size_t>(target_basis.dim()), false);
        built[static_cast<std::size_t>(hw_index)] = true;
        const std::size_t nflat = static_cast<std::size_t>(ps.a.dim() * ps.b.dim());

        for (const auto& [wkey, members] : groups) {
            std::vector<int> todo;
            for (int i : members)
                if (!built[static_cast<std::size_t>(i)]) todo.push_back(i);
            if (todo.empty()) continue;
            // equations: for every built parent and level whose lowering hits
            // this group, E- psi(parent) = sum_child c(parent->child) psi(child)
            struct Eq {
                std::vector<Real> coeff;
                std::vector<Real> rhs;
            };
            std::vector<Eq> eqs;
            for (int pi = 0; pi < target_basis.dim(); ++pi) {
                if (!built[static_cast<std::size_t>(pi)]) continue;
                for (int level = 1; level <= 2; ++level) {
                    const SparseAction& tl = level == 1 ? target_lower1 : target_lower2;
                    bool hits = false;
                    for (const auto& [ti, amp] : tl.rows[static_cast<std::size_t>(pi)])
                        for (int t : todo) hits |= (ti == t);
                    if (!hits) continue;
                    Eq eq;
                    eq.coeff.assign(todo.size(), make_real(prec));
                    eq.rhs = lower(psi[static_cast<std::size_t>(pi)], level);
                    for (const auto& [ti, amp] : tl.rows[static_cast<std::size_t>(pi)]) {
                        bool in_group = false;
                        for (std::size_t t = 0; t < todo.size(); ++t)
                            if (todo[t] == ti) {
                                eq.coeff[t] += amp;
                                in_group = true;
                            }
                        if (!in_group) {
                            if (!built[static_cast<std::size_t>(ti)])
                                throw std::logic_error("oracle mf table: unbuilt out-of-group child");
                            for (std::size_t t = 0; t < nflat; ++t)
                                eq.rhs[t] -= amp * psi[static_cast<std::size_t>(ti)][t];
                        }
                    }
                    eqs.push_back(std::move(eq));
                }
            }
            const std::size_t g = todo.size();
            if (eqs.size() < g) throw std::logic_error("oracle mf table: underdetermined weight group");
            // normal equations N X = R with N = A^T A (g x g), R = A^T rhs
            Matrix n_mat(g, std::vector<Real>(g, make_real(prec)));
            std::vector<std::vector<Real>> r_mat(g, std::vector<Real>(nflat, make_real(prec)));
            for (const Eq& eq : eqs)
                for (std::size_t i = 0; i < g; ++i) {
                    if (sgn(eq.coeff[i]) == 0) continue;
                    for (std::size_t j = 0; j < g; ++j) n_mat[i][j] += eq.coeff[i] * eq.coeff[j];
                    for (std::size_t t = 0; t < nflat; ++t)
                        r_mat[i][t] += eq.coeff[i] * eq.rhs[t];
                }
            // Gaussian elimination with partial pivoting on [N | R]
            for (std::size_t col = 0; col < g; ++col) {
                std::size_t piv = col;
                for (std::size_t i = col + 1; i < g; ++i)
                    if (abs(n_mat[i][col]) > abs(n_mat[piv][col])) piv = i;
                std::swap(n_mat[col], n_mat[piv]);
                std::swap(r_mat[col], r_mat[piv]);
                if (sgn(n_mat[col][col]) == 0)
                    throw std::logic_error("oracle mf table: singular weight-group system");
                for (std::size_t i = 0; i < g; ++i) {
                    if (i == col) continue;
                    Real factor = n_mat[i][col] / n_mat[col][col];
                    if (sgn(factor) == 0) continue;
                    for (std::size_t j = 0; j < g; ++j) n_mat[i][j] -= factor * n_mat[col][j];
                    for (std::size_t t = 0; t < nflat; ++t) r_mat[i][t] -= factor * r_mat[col][t];
                }
            }
            for (std::size_t i = 0; i < g; ++i) {
                std::vector<Real>& dst = psi[static_cast<std::size_t>(todo[i])];
                for (std::size_t t = 0; t < nflat; ++t) dst[t] = r_mat[i][t] / n_mat[i][i];
                built[static_cast<std::size_t>(todo[i])] = true;
            }
        }
    }
};

}  // namespace

OracleMfTable mf_table_oracle(const Coupling& c, mp_bitcnt_t prec) {
    ProductSpace ps(to_partition(c.left), to_partition(c.right), prec);
    TargetStateBuilder builder(c, ps, prec);
    builder.build();

    OracleMfTable out;
    out.rhos = valid_rho_triples(c);
    out.values.reserve(out.rhos.size());
    for (const RhoTriple& rho : out.rhos) {
        // target pattern with U(2) row rho.rho at its top magnetic state
        GtPattern pt{c.target.m1, c.target.m2, c.target.m3, rho.rho.q1, rho.rho.q2, rho.rho.q1};
        const std::vector<Real>& vec = builder.psi[static_cast<std::size_t>(
            builder.target_basis.index_of(pt))];
        // least-squares extraction over the internal magnetic splits
        Real num = make_real(prec), den = make_real(prec);
        int tj = rho.rho.twice_spin();
        int tm = 2 * rho.rho.q1 - rho.rho.box_count();
        for (int ia = 0; ia < ps.a.dim(); ++ia) {
            const GtPattern& pa = ps.a.pattern(ia);
            if (!(pa.u2() == rho.rho1)) continue;
            for (int ib = 0; ib < ps.b.dim(); ++ib) {
                const GtPattern& pb = ps.b.pattern(ib);
                if (!(pb.u2() == rho.rho2)) continue;
                int tm1 = 2 * pa.m11 - pa.u2().box_count();
                int tm2 = 2 * pb.m11 - pb.u2().box_count();
                SurdSum cg = su2_cg(rho.rho1.twice_spin(), tm1, rho.rho2.twice_spin(), tm2, tj, tm);
                if (cg.is_zero()) continue;
                Real cgr = cg.to_mpf(prec);
                num += cgr * vec[static_cast<std::size_t>(builder.flat(ia, ib))];
                den += cgr * cgr;
            }
        }
        out.values.push_back(sgn(den) == 0 ? make_real(prec) : Real(num / den));
    }
    return out;
}

std::optional<Rational> reconstruct_rational(const Real& x, double tol, unsigned long max_den) {
    // continued-fraction expansion
    mpq_class best;
    mpf_class val = x;
    std::vector<BigInt> terms;
    mpq_class p0(0), q0(1), p1(1), q1(0);
    mpf_class cur = val;
    for (int iter = 0; iter < 64; ++iter) {
        mpf_class fl;
        mpf_floor(fl.get_mpf_t(), cur.get_mpf_t());
        BigInt a(0);
        mpz_set_f(a.get_mpz_t(), fl.get_mpf_t());
        mpq_class p2 = Rational(a) * p1 + p0;
        mpq_class q2 = Rational(a) * q1 + q0;
        p0 = p1;
        q0 = q1;
        p1 = p2;
        q1 = q2;
        if (q1 != 0) {
            mpq_class cand = p1 / q1;
            mpf_class approx(0, x.get_prec());
            mpf_set_q(approx.get_mpf_t(), cand.get_mpq_t());
            mpf_class err = abs(approx - val);
            if (err < mpf_class(tol)) {
                cand.canonicalize();
                if (cand.get_den() <= max_den) return Rational(cand);
                return std::nullopt;
            }
        }
        mpf_class rem = cur - fl;
        if (sgn(rem) == 0) break;
        cur = 1 / rem;
    }
    return std::nullopt;
}

}  // namespace su3rwc::oracle
