// Four-row Gelfand-Tsetlin oracle used to validate the complementary-chain
// reduced coefficients. Mirrors the three-row machinery in gt_oracle.cpp.
#include <algorithm>
#include <map>
#include <memory>
#include <optional>
#include <stdexcept>
#include <tuple>

#include "su3rwc/gt_oracle.hpp"
#include "su3rwc/mfrwc.hpp"
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
    if (sgn(q) < 0) throw std::logic_error("u4 oracle: sqrt of negative rational");
    Real x(0, prec);
    mpf_set_q(x.get_mpf_t(), q.get_mpq_t());
    Real out(0, prec);
    mpf_sqrt(out.get_mpf_t(), x.get_mpf_t());
    return out;
}

// rows: l = 4 is the top row, l = 1 the bottom entry
struct Gt4 {
    std::array<int, 10> e;  // m14 m24 m34 m44 | m13 m23 m33 | m12 m22 | m11

    int get(int i, int l) const {
        static const int base[5] = {0, 9, 7, 4, 0};
        return e[static_cast<std::size_t>(base[l] + i - 1)];
    }
    void set(int i, int l, int v) {
        static const int base[5] = {0, 9, 7, 4, 0};
        e[static_cast<std::size_t>(base[l] + i - 1)] = v;
    }
    bool valid() const {
        for (int l = 3; l >= 1; --l)
            for (int i = 1; i <= l; ++i)
                if (!(get(i, l + 1) >= get(i, l) && get(i, l) >= get(i + 1, l + 1))) return false;
        return true;
    }
    std::array<int, 4> weight() const {
        int s1 = get(1, 1);
        int s2 = get(1, 2) + get(2, 2);
        int s3 = get(1, 3) + get(2, 3) + get(3, 3);
        int s4 = get(1, 4) + get(2, 4) + get(3, 4) + get(4, 4);
        return {s1, s2 - s1, s3 - s2, s4 - s3};
    }
    Partition3 u3row() const { return {get(1, 3), get(2, 3), get(3, 3)}; }
    U2Label u2row() const { return {get(1, 2), get(2, 2)}; }
    auto operator<=>(const Gt4&) const = default;
};

class Gt4Basis {
  public:
    explicit Gt4Basis(const Partition4& irrep) {
        Gt4 p{};
        p.set(1, 4, irrep.m1);
        p.set(2, 4, irrep.m2);
        p.set(3, 4, irrep.m3);
        p.set(4, 4, irrep.m4);
        for (int m13 = irrep.m2; m13 <= irrep.m1; ++m13)
            for (int m23 = irrep.m3; m23 <= irrep.m2; ++m23)
                for (int m33 = irrep.m4; m33 <= irrep.m3; ++m33)
                    for (int m12 = m23; m12 <= m13; ++m12)
                        for (int m22 = m33; m22 <= m23; ++m22)
                            for (int m11 = m22; m11 <= m12; ++m11) {
                                Gt4 q = p;
                                q.set(1, 3, m13);
                                q.set(2, 3, m23);
                                q.set(3, 3, m33);
                                q.set(1, 2, m12);
                                q.set(2, 2, m22);
                                q.set(1, 1, m11);
                                patterns_.push_back(q);
                            }
        for (std::size_t i = 0; i < patterns_.size(); ++i) index_.emplace(patterns_[i], (int)i);
    }
    int dim() const { return static_cast<int>(patterns_.size()); }
    const Gt4& pattern(int i) const { return patterns_[static_cast<std::size_t>(i)]; }
    int index_of(const Gt4& p) const {
        auto it = index_.find(p);
        if (it == index_.end()) throw std::logic_error("u4 oracle: pattern not in basis");
        return it->second;
    }

  private:
    std::vector<Gt4> patterns_;
    std::map<Gt4, int> index_;
};

Rational lowering_sq4(const Gt4& p, int k, int l) {
    Rational num(1), den(1);
    for (int i = 1; i <= l + 1; ++i) num *= Rational(p.get(i, l + 1) - p.get(k, l) + k - i + 1);
    for (int i = 1; i <= l - 1; ++i) num *= Rational(p.get(i, l - 1) - p.get(k, l) + k - i);
    for (int i = 1; i <= l; ++i) {
        if (i == k) continue;
        den *= Rational(p.get(i, l) - p.get(k, l) + k - i + 1);
        den *= Rational(p.get(i, l) - p.get(k, l) + k - i);
    }
    return -num / den;
}

Rational raising_sq4(const Gt4& p, int k, int l) {
    Rational num(1), den(1);
    for (int i = 1; i <= l + 1; ++i) num *= Rational(p.get(i, l + 1) - p.get(k, l) + k - i);
    for (int i = 1; i <= l - 1; ++i) num *= Rational(p.get(i, l - 1) - p.get(k, l) + k - i - 1);
    for (int i = 1; i <= l; ++i) {
        if (i == k) continue;
        den *= Rational(p.get(i, l) - p.get(k, l) + k - i);
        den *= Rational(p.get(i, l) - p.get(k, l) + k - i - 1);
    }
    return -num / den;
}

struct Sparse4 {
    std::vector<std::vector<std::pair<int, Real>>> rows;
};

Sparse4 step4(const Gt4Basis& basis, int level, bool lowering, mp_bitcnt_t prec) {
    Sparse4 out;
    out.rows.assign(static_cast<std::size_t>(basis.dim()), {});
    for (int i = 0; i < basis.dim(); ++i) {
        const Gt4& p = basis.pattern(i);
        for (int k = 1; k <= level; ++k) {
            Gt4 q = p;
            q.set(k, level, p.get(k, level) + (lowering ? -1 : +1));
            if (!q.valid()) continue;
            Rational amp2 = lowering ? lowering_sq4(p, k, level) : raising_sq4(p, k, level);
            out.rows[static_cast<std::size_t>(i)].push_back(
                {basis.index_of(q), sqrt_rational(amp2, prec)});
        }
    }
    return out;
}

struct U4Coupling {
    Gt4Basis a, b, m;
    mp_bitcnt_t prec;
    std::vector<Sparse4> lower_a, lower_b, raise_a, raise_b, lower_m;
    // coupled vector per (multiplicity copy, target pattern) over product pairs
    std::vector<std::vector<Real>> psi;
    int mult = 0;

    std::size_t pat_index(int xi, int pat) const {
        return static_cast<std::size_t>(xi) * static_cast<std::size_t>(m.dim()) +
               static_cast<std::size_t>(pat);
    }

    U4Coupling(const Partition4& A, const Partition4& S, const Partition4& M, mp_bitcnt_t p)
        : a(A), b(S), m(M), prec(p) {
        for (int l = 1; l <= 3; ++l) {
            lower_a.push_back(step4(a, l, true, prec));
            lower_b.push_back(step4(b, l, true, prec));
            raise_a.push_back(step4(a, l, false, prec));
            raise_b.push_back(step4(b, l, false, prec));
            lower_m.push_back(step4(m, l, true, prec));
        }
        build();
    }

    int flat(int ia, int ib) const { return ia * b.dim() + ib; }

    std::vector<Real> lower(const std::vector<Real>& v, int level) {
        std::vector<Real> out(v.size(), make_real(prec));
        const Sparse4& la = lower_a[static_cast<std::size_t>(level - 1)];
        const Sparse4& lb = lower_b[static_cast<std::size_t>(level - 1)];
        for (int ia = 0; ia < a.dim(); ++ia)
            for (int ib = 0; ib < b.dim(); ++ib) {
                const Real& amp = v[static_cast<std::size_t>(flat(ia, ib))];
                if (sgn(amp) == 0) continue;
                for (const auto& [ja, c1] : la.rows[static_cast<std::size_t>(ia)])
                    out[static_cast<std::size_t>(flat(ja, ib))] += amp * c1;
                for (const auto& [jb, c2] : lb.rows[static_cast<std::size_t>(ib)])
                    out[static_cast<std::size_t>(flat(ia, jb))] += amp * c2;
            }
        return out;
    }

    void build() {
        // highest-weight vector: weight pairs + kernel of the three raising ops
        const Gt4& hwm = m.pattern(m.index_of([&] {
            Gt4 hw{};
            const auto& top = m.pattern(0);
            for (int i = 1; i <= 4; ++i) hw.set(i, 4, top.get(i, 4));
            for (int l = 3; l >= 1; --l)
                for (int i = 1; i <= l; ++i) hw.set(i, l, hw.get(i, l + 1));
            return hw;
        }()));
        auto wt = hwm.weight();
        std::vector<std::pair<int, int>> pairs;
        for (int ia = 0; ia < a.dim(); ++ia)
            for (int ib = 0; ib < b.dim(); ++ib) {
                auto wa = a.pattern(ia).weight();
                auto wb = b.pattern(ib).weight();
                bool ok = true;
                for (int t = 0; t < 4; ++t) ok &= (wa[t] + wb[t] == wt[t]);
                if (ok) pairs.emplace_back(ia, ib);
            }
        std::map<std::pair<int, int>, int> pindex;
        for (std::size_t i = 0; i < pairs.size(); ++i) pindex.emplace(pairs[i], (int)i);

        // stacked raising matrix
        std::map<std::tuple<int, int, int>, int> image;
        std::vector<std::vector<std::pair<int, Real>>> cols(pairs.size());
        int nrows = 0;
        for (std::size_t ci = 0; ci < pairs.size(); ++ci) {
            auto [ia, ib] = pairs[ci];
            for (int level = 1; level <= 3; ++level) {
                for (const auto& [ja, amp] : raise_a[static_cast<std::size_t>(level - 1)]
                                                 .rows[static_cast<std::size_t>(ia)]) {
                    auto [it, ins] = image.emplace(std::make_tuple(level, ja, ib), nrows);
                    if (ins) ++nrows;
                    cols[ci].push_back({it->second, amp});
                }
                for (const auto& [jb, amp] : raise_b[static_cast<std::size_t>(level - 1)]
                                                 .rows[static_cast<std::size_t>(ib)]) {
                    auto [it, ins] = image.emplace(std::make_tuple(level, ia, jb), nrows);
                    if (ins) ++nrows;
                    cols[ci].push_back({it->second, amp});
                }
            }
        }
        // dense elimination for the kernel (expected 1-dimensional)
        std::vector<std::vector<Real>> mat(static_cast<std::size_t>(nrows),
                                           std::vector<Real>(pairs.size(), make_real(prec)));
        for (std::size_t ci = 0; ci < pairs.size(); ++ci)
            for (const auto& [row, amp] : cols[ci]) mat[static_cast<std::size_t>(row)][ci] += amp;

        Real eps = make_real(prec, 1);
        mpf_div_2exp(eps.get_mpf_t(), eps.get_mpf_t(), prec / 2);
        std::vector<int> pivot_col;
        int r = 0;
        const int ncols = static_cast<int>(pairs.size());
        for (int c = 0; c < ncols && r < nrows; ++c) {
            int best = -1;
            Real best_abs = make_real(prec);
            for (int i = r; i < nrows; ++i) {
                Real v = abs(mat[static_cast<std::size_t>(i)][static_cast<std::size_t>(c)]);
                if (v > best_abs) {
                    best_abs = v;
                    best = i;
                }
            }
            if (best < 0 || best_abs < eps) continue;
            std::swap(mat[static_cast<std::size_t>(r)], mat[static_cast<std::size_t>(best)]);
            for (int i = 0; i < nrows; ++i) {
                if (i == r) continue;
                Real factor = mat[static_cast<std::size_t>(i)][static_cast<std::size_t>(c)] /
                              mat[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)];
                if (sgn(factor) == 0) continue;
                for (int j = c; j < ncols; ++j)
                    mat[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] -=
                        factor * mat[static_cast<std::size_t>(r)][static_cast<std::size_t>(j)];
            }
            pivot_col.push_back(c);
            ++r;
        }
        std::vector<bool> is_pivot(static_cast<std::size_t>(ncols), false);
        for (int c : pivot_col) is_pivot[static_cast<std::size_t>(c)] = true;
        std::vector<std::vector<Real>> kernel;
        for (int free = 0; free < ncols; ++free) {
            if (is_pivot[static_cast<std::size_t>(free)]) continue;
            std::vector<Real> v(static_cast<std::size_t>(ncols), make_real(prec));
            v[static_cast<std::size_t>(free)] = make_real(prec, 1);
            for (int i = static_cast<int>(pivot_col.size()) - 1; i >= 0; --i) {
                int c = pivot_col[static_cast<std::size_t>(i)];
                Real sum = make_real(prec);
                for (int j = c + 1; j < ncols; ++j)
                    sum += mat[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] *
                           v[static_cast<std::size_t>(j)];
                v[static_cast<std::size_t>(c)] =
                    -sum / mat[static_cast<std::size_t>(i)][static_cast<std::size_t>(c)];
            }
            kernel.push_back(std::move(v));
        }
        if (kernel.empty()) throw std::logic_error("u4 oracle: empty multiplicity space");
        // modified Gram-Schmidt
        for (std::size_t ki = 0; ki < kernel.size(); ++ki) {
            for (int pass = 0; pass < 2; ++pass)
                for (std::size_t kj = 0; kj < ki; ++kj) {
                    Real dot = make_real(prec);
                    for (std::size_t t = 0; t < kernel[ki].size(); ++t)
                        dot += kernel[kj][t] * kernel[ki][t];
                    for (std::size_t t = 0; t < kernel[ki].size(); ++t)
                        kernel[ki][t] -= dot * kernel[kj][t];
                }
            Real norm2 = make_real(prec);
            for (const Real& x : kernel[ki]) norm2 += x * x;
            Real norm(0, prec);
            mpf_sqrt(norm.get_mpf_t(), norm2.get_mpf_t());
            for (Real& x : kernel[ki]) x /= norm;
        }
        mult = static_cast<int>(kernel.size());

        const std::size_t nflat = static_cast<std::size_t>(a.dim() * b.dim());
        psi.assign(static_cast<std::size_t>(mult) * static_cast<std::size_t>(m.dim()), {});
        int hw_index = m.index_of(hwm);
        for (int xi = 0; xi < mult; ++xi) {
            psi[pat_index(xi, hw_index)].assign(nflat, make_real(prec));
            for (std::size_t i = 0; i < pairs.size(); ++i)
                psi[pat_index(xi, hw_index)]
                   [static_cast<std::size_t>(flat(pairs[i].first, pairs[i].second))] =
                    kernel[static_cast<std::size_t>(xi)][i];
        }

        // weight groups in an order where parents precede children
        std::map<std::array<int, 3>, std::vector<int>> groups;
        for (int i = 0; i < m.dim(); ++i) {
            auto w = m.pattern(i).weight();
            groups[{-w[0], -(w[0] + w[1]), -(w[0] + w[1] + w[2])}].push_back(i);
        }
        for (int xi = 0; xi < mult; ++xi) {
        std::vector<bool> built(static_cast<std::size_t>(m.dim()), false);
        built[static_cast<std::size_t>(hw_index)] = true;

        for (const auto& [wkey, members] : groups) {
            std::vector<int> todo;
            for (int i : members)
                if (!built[static_cast<std::size_t>(i)]) todo.push_back(i);
            if (todo.empty()) continue;
            struct Eq {
                std::vector<Real> coeff;
                std::vector<Real> rhs;
            };
            std::vector<Eq> eqs;
            for (int pi = 0; pi < m.dim(); ++pi) {
                if (!built[static_cast<std::size_t>(pi)]) continue;
                for (int level = 1; level <= 3; ++level) {
                    const Sparse4& tl = lower_m[static_cast<std::size_t>(level - 1)];
                    bool hits = false;
                    for (const auto& [ti, amp] : tl.rows[static_cast<std::size_t>(pi)])
                        for (int t : todo) hits |= (ti == t);
                    if (!hits) continue;
                    Eq eq;
                    eq.coeff.assign(todo.size(), make_real(prec));
                    eq.rhs = lower(psi[pat_index(xi, pi)], level);
                    for (const auto& [ti, amp] : tl.rows[static_cast<std::size_t>(pi)]) {
                        bool in_group = false;
                        for (std::size_t t = 0; t < todo.size(); ++t)
                            if (todo[t] == ti) {
                                eq.coeff[t] += amp;
                                in_group = true;
                            }
                        if (!in_group) {
                            if (!built[static_cast<std::size_t>(ti)])
                                throw std::logic_error("u4 oracle: unbuilt out-of-group child");
                            for (std::size_t t = 0; t < nflat; ++t)
                                eq.rhs[t] -= amp * psi[pat_index(xi, ti)][t];
                        }
                    }
                    eqs.push_back(std::move(eq));
                }
            }
            const std::size_t g = todo.size();
            if (eqs.size() < g) throw std::logic_error("u4 oracle: underdetermined group");
            std::vector<std::vector<Real>> n_mat(g, std::vector<Real>(g, make_real(prec)));
            std::vector<std::vector<Real>> r_mat(g, std::vector<Real>(nflat, make_real(prec)));
            for (const Eq& eq : eqs)
                for (std::size_t i = 0; i < g; ++i) {
                    if (sgn(eq.coeff[i]) == 0) continue;
                    for (std::size_t j = 0; j < g; ++j) n_mat[i][j] += eq.coeff[i] * eq.coeff[j];
                    for (std::size_t t = 0; t < nflat; ++t) r_mat[i][t] += eq.coeff[i] * eq.rhs[t];
                }
            for (std::size_t col = 0; col < g; ++col) {
                std::size_t piv = col;
                for (std::size_t i = col + 1; i < g; ++i)
                    if (abs(n_mat[i][col]) > abs(n_mat[piv][col])) piv = i;
                std::swap(n_mat[col], n_mat[piv]);
                std::swap(r_mat[col], r_mat[piv]);
                if (sgn(n_mat[col][col]) == 0)
                    throw std::logic_error("u4 oracle: singular group system");
                for (std::size_t i = 0; i < g; ++i) {
                    if (i == col) continue;
                    Real factor = n_mat[i][col] / n_mat[col][col];
                    if (sgn(factor) == 0) continue;
                    for (std::size_t j = 0; j < g; ++j) n_mat[i][j] -= factor * n_mat[col][j];
                    for (std::size_t t = 0; t < nflat; ++t) r_mat[i][t] -= factor * r_mat[col][t];
                }
            }
            for (std::size_t i = 0; i < g; ++i) {
                psi[pat_index(xi, todo[i])].assign(nflat, make_real(prec));
                for (std::size_t t = 0; t < nflat; ++t)
                    psi[pat_index(xi, todo[i])][t] = r_mat[i][t] / n_mat[i][i];
                built[static_cast<std::size_t>(todo[i])] = true;
            }
        }
        }
    }
};

std::map<std::tuple<Partition4, Partition4, Partition4>, std::unique_ptr<U4Coupling>>& cache() {
    static std::map<std::tuple<Partition4, Partition4, Partition4>, std::unique_ptr<U4Coupling>> c;
    return c;
}

}  // namespace

void clear_u4_oracle_cache() { cache().clear(); }

std::optional<Real> mf_rwc4_oracle(const Partition4& A, const Partition3& rowA, int s, int r,
                                   const Partition4& M, const Partition3& rowM,
                                   mp_bitcnt_t prec) {
    const Partition4 S{s, 0, 0, 0};
    auto key = std::make_tuple(A, S, M);
    auto it = cache().find(key);
    if (it == cache().end())
        it = cache().emplace(key, std::make_unique<U4Coupling>(A, S, M, prec)).first;
    U4Coupling& uc = *it->second;

    // A-side pattern: rowA with its highest completion; S-side: [r,0,0] highest
    Gt4 pa{};
    pa.set(1, 4, A.m1);
    pa.set(2, 4, A.m2);
    pa.set(3, 4, A.m3);
    pa.set(4, 4, A.m4);
    pa.set(1, 3, rowA.m1);
    pa.set(2, 3, rowA.m2);
    pa.set(3, 3, rowA.m3);
    pa.set(1, 2, rowA.m1);
    pa.set(2, 2, rowA.m2);
    pa.set(1, 1, rowA.m1);
    if (!pa.valid()) return std::nullopt;
    Gt4 ps{};
    ps.set(1, 4, s);
    ps.set(1, 3, r);
    ps.set(1, 2, r);
    ps.set(1, 1, r);
    if (!ps.valid()) return std::nullopt;
    int ia = uc.a.index_of(pa);
    int ib = uc.b.index_of(ps);

    // target pattern and the exact U(3)-level divisor
    const U2Label alpha{rowA.m1, rowA.m2};
    const int ta = alpha.twice_spin();
    const int ma = ta;  // highest internal state
    for (const U2Label& sigma : u2_sublabels(rowM)) {
        if (sigma.box_count() != alpha.box_count() + r) continue;
        SurdSum rwc3 = mf_rwc(rowA, alpha, r, r, rowM, sigma);
        if (rwc3.is_zero()) continue;
        SurdSum cg = su2_cg(ta, ma, r, r, sigma.twice_spin(), ta + r);
        if (cg.is_zero()) continue;
        const int sigma11 = (sigma.box_count() + (ta + r)) / 2;
        if (sigma11 < sigma.q2 || sigma11 > sigma.q1) continue;
        Gt4 pm{};
        pm.set(1, 4, M.m1);
        pm.set(2, 4, M.m2);
        pm.set(3, 4, M.m3);
        pm.set(4, 4, M.m4);
        pm.set(1, 3, rowM.m1);
        pm.set(2, 3, rowM.m2);
        pm.set(3, 3, rowM.m3);
        pm.set(1, 2, sigma.q1);
        pm.set(2, 2, sigma.q2);
        pm.set(1, 1, sigma11);
        if (!pm.valid()) continue;
        if (uc.mult != 1) return std::nullopt;
        const std::vector<Real>& vec = uc.psi[uc.pat_index(0, uc.m.index_of(pm))];
        Real overlap = vec[static_cast<std::size_t>(uc.flat(ia, ib))];
        Real divisor = (rwc3 * cg).to_mpf(prec);
        return overlap / divisor;
    }
    return std::nullopt;
}

std::vector<std::vector<Real>> u4_gram_oracle(const Coupling& c, mp_bitcnt_t prec) {
    const int l1 = c.left.lambda, u1 = c.left.mu;
    const int T = c.right.lambda + c.right.mu;
    const Partition4 A{l1 + u1, u1, 0, 0};
    const Partition4 B{T, c.right.mu, 0, 0};
    const Partition4 M{c.target.m1, c.target.m2, c.target.m3, 0};
    U4Coupling uc(A, B, M, prec);
    const int m = c.multiplicity();
    if (uc.mult != m) throw std::logic_error("u4 oracle: multiplicity mismatch");

    const U2Label alpha{l1 + u1, u1};
    const Partition3 row_a{l1 + u1, u1, 0};

    std::vector<std::vector<Real>> t(static_cast<std::size_t>(m));
    for (int eta = c.eta_min; eta <= c.eta_max; ++eta) {
        const Partition3 nrow = c.eta_row(eta);
        bool found = false;
        for (const U2Label& xa : u2_sublabels(row_a)) {
            if (found) break;
            for (int rb = 0; rb <= T && !found; ++rb) {
                for (const U2Label& sigma : u2_sublabels(nrow)) {
                    if (found) break;
                    if (sigma.box_count() != xa.box_count() + rb) continue;
                    SurdSum rwc3 = mf_rwc(row_a, xa, T, rb, nrow, sigma);
                    if (rwc3.is_zero()) continue;
                    for (int m11a = xa.q2; m11a <= xa.q1 && !found; ++m11a) {
                        for (int m11b = 0; m11b <= rb && !found; ++m11b) {
                    const int tma = 2 * m11a - xa.box_count();
                    const int tmb = 2 * m11b - rb;
                    SurdSum cg = su2_cg(xa.twice_spin(), tma, rb, tmb, sigma.twice_spin(),
                                        tma + tmb);
                    if (cg.is_zero()) continue;
                    const int sigma11 = (sigma.box_count() + tma + tmb) / 2;
                    if (sigma11 < sigma.q2 || sigma11 > sigma.q1) continue;
                    Gt4 pa{};
                    pa.set(1, 4, A.m1);
                    pa.set(2, 4, A.m2);
                    pa.set(1, 3, l1 + u1);
                    pa.set(2, 3, u1);
                    pa.set(1, 2, xa.q1);
                    pa.set(2, 2, xa.q2);
                    pa.set(1, 1, m11a);
                    Gt4 pb{};
                    pb.set(1, 4, T);
                    pb.set(2, 4, c.right.mu);
                    pb.set(1, 3, T);
                    pb.set(1, 2, rb);
                    pb.set(1, 1, m11b);
                    if (!pa.valid() || !pb.valid()) continue;
                    Gt4 pm{};
                    pm.set(1, 4, M.m1);
                    pm.set(2, 4, M.m2);
                    pm.set(3, 4, M.m3);
                    pm.set(1, 3, nrow.m1);
                    pm.set(2, 3, nrow.m2);
                    pm.set(3, 3, nrow.m3);
                    pm.set(1, 2, sigma.q1);
                    pm.set(2, 2, sigma.q2);
                    pm.set(1, 1, sigma11);
                    if (!pm.valid()) continue;
                    Real divisor = (rwc3 * cg).to_mpf(prec);
                    const int ia = uc.a.index_of(pa);
                    const int ib = uc.b.index_of(pb);
                    std::vector<Real>& te = t[static_cast<std::size_t>(eta - c.eta_min)];
                    te.clear();
                    for (int xi = 0; xi < m; ++xi)
                        te.push_back(uc.psi[uc.pat_index(xi, uc.m.index_of(pm))]
                                           [static_cast<std::size_t>(uc.flat(ia, ib))] /
                                     divisor);
                    found = true;
                        }
                    }
                }
            }
        }
        if (!found) throw std::logic_error("u4 oracle: no divisor completion for eta row");
    }
    std::vector<std::vector<Real>> gram(static_cast<std::size_t>(m),
                                        std::vector<Real>(static_cast<std::size_t>(m),
                                                          make_real(prec)));
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j)
            for (int xi = 0; xi < m; ++xi)
                gram[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] +=
                    t[static_cast<std::size_t>(i)][static_cast<std::size_t>(xi)] *
                    t[static_cast<std::size_t>(j)][static_cast<std::size_t>(xi)];
    return gram;
}

}  // namespace su3rwc::oracle
