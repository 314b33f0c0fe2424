#include "su3rwc/gpoly.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <tuple>

#include "su3rwc/factorial.hpp"
#include "su3rwc/kernels.hpp"
#include "su3rwc/mfrwc.hpp"
#include "su3rwc/mfrwc4.hpp"
#include "su3rwc/rep_theory.hpp"
#include "su3rwc/su2.hpp"

namespace su3rwc {

namespace {

const BigInt& f(long n) { return factorial(n); }

// target/inner must be a horizontal strip: rows interleave.
bool horizontal_strip(const Partition3& outer, const Partition3& inner) {
    return outer.m1 >= inner.m1 && inner.m1 >= outer.m2 && outer.m2 >= inner.m2 &&
           inner.m2 >= outer.m3 && outer.m3 >= inner.m3 && inner.m3 >= 0;
}

SurdSum racah_memoized(const U2Label& a, const U2Label& b, const U2Label& e, const U2Label& c,
                       const U2Label& f_, const U2Label& d) {
    thread_local std::map<std::array<int, 6>, SurdSum> memo;
    std::array<int, 6> key{a.twice_spin(), b.twice_spin(), e.twice_spin(),
                           c.twice_spin(), f_.twice_spin(), d.twice_spin()};
    auto it = memo.find(key);
    if (it != memo.end()) return it->second;
    SurdSum value = su2_racah_unitary(a, b, e, c, f_, d);
    memo.emplace(key, value);
    return value;
}

}  // namespace

// Unitary recoupling coefficient for A' x (x,0,0) x (y,0,0) with both
// association orders meeting in `nrow`: <((A' x)mid y) N | (A' (x y)stretched) N>.
// Evaluated at a fixed subgroup label of N through the reduced coefficients
// and the SU(2) recoupling, like every contraction in this module.
SurdSum su3_racah_symmetric(const Partition3& aprime, int x, const Partition3& nrow, int y,
                            const Partition3& mid) {
    thread_local std::map<std::tuple<Partition3, int, Partition3, int, Partition3>, SurdSum> memo;
    auto key = std::make_tuple(aprime, x, nrow, y, mid);
    auto it = memo.find(key);
    if (it != memo.end()) return it->second;

    const Partition3 stretched{x + y, 0, 0};
    SurdSum value;
    for (const U2Label& rho_n : u2_sublabels(nrow)) {
        SurdSum sum;
        for (const U2Label& a : u2_sublabels(aprime)) {
            for (int b1 = 0; b1 <= x; ++b1) {
                const int mid_boxes = a.box_count() + b1;
                for (const U2Label& m : u2_sublabels(mid)) {
                    if (m.box_count() != mid_boxes) continue;
                    const int g1 = rho_n.box_count() - mid_boxes;
                    if (g1 < 0 || g1 > y) continue;
                    SurdSum t1 = mf_rwc(aprime, a, x, b1, mid, m);
                    if (t1.is_zero()) continue;
                    SurdSum t2 = mf_rwc(mid, m, y, g1, nrow, rho_n);
                    if (t2.is_zero()) continue;
                    SurdSum t3 = mf_rwc({x, 0, 0}, {b1, 0}, y, g1, stretched, {b1 + g1, 0});
                    if (t3.is_zero()) continue;
                    SurdSum t4 = mf_rwc(aprime, a, x + y, b1 + g1, nrow, rho_n);
                    if (t4.is_zero()) continue;
                    SurdSum u = su2_racah_unitary(a, U2Label{b1, 0}, m, rho_n,
                                                  U2Label{b1 + g1, 0}, U2Label{g1, 0});
                    if (u.is_zero()) continue;
                    sum += t1 * t2 * t3 * t4 * u;
                }
            }
        }
        if (!sum.is_zero()) {
            value = sum;
            break;
        }
    }
    memo.emplace(std::move(key), value);
    return value;
}

bool bar_valid(const Coupling& c, const BarLabel& bar) {
    if (bar.bar != bar_partition(c, bar.k1, bar.k2)) return false;
    if (!bar.bar.valid()) return false;
    if (!horizontal_strip(bar.bar, to_partition(c.left))) return false;
    return horizontal_strip(c.target, bar.bar);
}

std::vector<BarLabel> k_ranges(const Coupling& c) {
    std::vector<BarLabel> out;
    for (int k1 = 0; k1 <= c.left.lambda; ++k1) {
        for (int k2 = 0; k2 <= c.left.mu; ++k2) {
            BarLabel bar{k1, k2, bar_partition(c, k1, k2)};
            if (bar_valid(c, bar)) out.push_back(bar);
        }
    }
    return out;
}

// Contraction over the complementary-chain split, mirroring g_rho one level
// up: three multiplicity-free coefficients summed over the intermediate
// subgroup row, normalized by the frozen-row coefficient.
SurdSum g_eta(const Coupling& c, const BarLabel& bar, int eta) {
    if (eta < c.eta_min || eta > c.eta_max)
        throw std::domain_error("g_eta: eta outside multiplicity range");
    if (!bar_valid(c, bar)) throw std::domain_error("g_eta: invalid bar label");

    const int u2 = c.right.mu;
    const int big = c.right.lambda + c.right.mu;
    const Partition4 a4{c.left.lambda + c.left.mu, c.left.mu, 0, 0};
    const Partition3 row_a{c.left.lambda + c.left.mu, c.left.mu, 0};
    const Partition4 bar4{bar.bar.m1, bar.bar.m2, bar.bar.m3, 0};
    const Partition4 m4{c.target.m1, c.target.m2, c.target.m3, 0};
    const Partition3 nrow = c.eta_row(eta);
    const Partition4 right4{big, u2, 0, 0};
    const Partition4 right_sym{big, 0, 0, 0};

    SurdSum sum;
    for (int p = 0; p <= u2; ++p) {
        const int mid_boxes = nrow.box_count() - p;
        const int cgap = mid_boxes - row_a.box_count();
        if (cgap < 0 || cgap > big) continue;
        SurdSum t3 = mf_rwc4(right_sym, {big - p, 0, 0}, u2, p, right4, {big, 0, 0});
        if (t3.is_zero()) continue;
        for (int mid1 = bar.bar.m2; mid1 <= bar.bar.m1; ++mid1) {
            for (int mid2 = bar.bar.m3; mid2 <= std::min(bar.bar.m2, mid1); ++mid2) {
                const int mid3 = mid_boxes - mid1 - mid2;
                if (mid3 < 0 || mid3 > std::min(bar.bar.m3, mid2)) continue;
                Partition3 mid{mid1, mid2, mid3};
                SurdSum t1 = mf_rwc4(a4, row_a, big, cgap, bar4, mid);
                if (t1.is_zero()) continue;
                SurdSum t2 = mf_rwc4(bar4, mid, u2, p, m4, nrow);
                if (t2.is_zero()) continue;
                SurdSum u = su3_racah_symmetric(row_a, cgap, nrow, p, mid);
                if (u.is_zero()) continue;
                sum += t1 * t2 * t3 * u;
            }
        }
    }
    return sum;
}

// Merged single-formula evaluation of the same contraction, kept as an
// independent cross-check of g_eta on mu2 = 0 couplings.
SurdSum g_eta_merged(const Coupling& c, const BarLabel& bar, int eta) {
    if (eta < c.eta_min || eta > c.eta_max)
        throw std::domain_error("g_eta: eta outside multiplicity range");
    if (!bar_valid(c, bar)) throw std::domain_error("g_eta: invalid bar label");
    const int l1 = c.left.lambda, u1 = c.left.mu;
    const int l2 = c.right.lambda, u2 = c.right.mu;
    const int m1 = c.target.m1, m2 = c.target.m2, m3 = c.target.m3;
    const int lam = c.lambda_total();
    const int k1 = bar.k1, k2 = bar.k2;
    const Partition3 nrow = c.eta_row(eta);

    BigInt pnum = f(m3 - u2 + eta) * f(m3 - u2 + eta) * f(m2 - eta + 1) * f(m2 - eta + 1);
    pnum *= f(m1 + 2);
    pnum *= f(lam - u1 - 2 * k1 - k2 + 1) * f(lam - k1 - 2 * k2 + 2);
    pnum *= f(lam - k1 - k2 - l1 - u1) * f(lam - k1 - k2 - u1 + 1);
    pnum *= BigInt(m1 - m2 + 1) * (m1 - m3 + 2) * (m2 - m3 + 1);
    pnum *= f(lam - k1 - k2 - m2) * f(lam - k1 - k2 - m3 + 1) * f(lam - k1 - k2 + 2);
    pnum *= f(u1 + k1 - m3) * f(u1 + k1 + 1) * f(k1) * f(k2);
    pnum *= BigInt(l2 + 1) * f(u2) * f(m2 - m3 - eta) * f(m1 - l1 - u1) * f(m1 - u1 + 1) *
            f(m2 - u1 - eta);

    BigInt pden = f(l2 + u2) * f(l2 + u2) * f(u1 + u2 - m3 - eta) * BigInt(l2 + u2 + 1);
    pden *= f(u1 + k1 - k2);
    pden *= f(l1 - k1) * f(l1 + u1 - k2 + 1) * f(u1 - k2) * f(u2 - eta) * f(l1 + u1 - m2 + eta) *
            f(l1 + u1 + u2 - m3 - eta + 1);
    pden *= f(m1 - lam + k1 + k2) * f(m1 - u1 - k1 + 1) * f(m1 - k2 + 2) * f(m2 - u1 - k1) *
            f(m2 + 1) * f(m3) * f(m3 - k2);
    pden *= f(m1 - m2 + eta + 1) * f(m1 - m3 + u2 - eta + 2) * f(eta) *
            f(m2 - m3 + u2 - eta + 1);

    Rational sum(0);
    for (int p = 0; p <= u2; ++p) {
        for (int m23 = 0; m23 <= std::min(l1, k1); ++m23) {
            for (int m33 = 0; m33 <= std::min(u1, k2); ++m33) {
                Partition3 mid{lam - p - m23 - m33, u1 + m23, m33};
                if (!mid.valid()) continue;
                // betweenness inside the bar irrep and horizontal strips
                // against the left factor and the eta row
                if (!(bar.bar.m1 >= mid.m1 && mid.m1 >= bar.bar.m2 && bar.bar.m3 >= mid.m3))
                    continue;
                if (!horizontal_strip(mid, to_partition(c.left))) continue;
                if (!horizontal_strip(nrow, mid)) continue;

                BigInt tnum = f(p) * f(l1 - m23) * f(l1 + u1 - m33 + 1) * f(u1 - m33) *
                              f(l2 + u2 - p);
                tnum *= BigInt(mid.m1 - mid.m2 + 1) * (mid.m1 - mid.m3 + 2) *
                        (mid.m2 - mid.m3 + 1);
                BigInt tden = f(mid.m1 - l1 - u1) * f(mid.m1 - u1 + 1) * f(m23);
                tden *= f(mid.m1 + 2) * f(u1 + m23 + 1) * f(m33);

                KernelArgs3 args{{bar.bar.m1, bar.bar.m2, bar.bar.m3},
                                 {mid.m1, mid.m2, mid.m3},
                                 {m1, m2, m3},
                                 {nrow.m1, nrow.m2, nrow.m3}};
                Rational term = make_rational(tnum, tden) * f3_kernel(args);
                sum += (p % 2 == 0) ? term : -term;
            }
        }
    }
    SurdSum out = SurdSum::sqrt_of(make_rational(pnum, pden));
    out.scale(sum);
    return out;
}

std::vector<RhoTriple> valid_rho_triples(const Coupling& c) {
    std::vector<RhoTriple> out;
    const Partition3 left = to_partition(c.left);
    const Partition3 right = to_partition(c.right);
    for (const U2Label& r1 : u2_sublabels(left)) {
        for (const U2Label& r2 : u2_sublabels(right)) {
            for (const U2Label& r : u2_sublabels(c.target)) {
                if (r1.box_count() + r2.box_count() != r.box_count()) continue;
                if (!su2_triangle(r1.twice_spin(), r2.twice_spin(), r.twice_spin())) continue;
                out.push_back({r1, r2, r});
            }
        }
    }
    return out;
}

// Recoupling contraction over the split of the right factor into its two
// symmetric constituents: three multiplicity-free coefficients and one
// unitary SU(2) Racah coefficient per term.
SurdSum g_rho(const Coupling& c, const BarLabel& bar, const RhoTriple& rho) {
    if (!bar_valid(c, bar)) throw std::domain_error("g_rho: invalid bar label");
    if (!rho.rho1.inside(to_partition(c.left)) || !rho.rho2.inside(to_partition(c.right)) ||
        !rho.rho.inside(c.target))
        throw std::domain_error("g_rho: rho label violates betweenness");
    if (rho.rho1.box_count() + rho.rho2.box_count() != rho.rho.box_count()) return SurdSum();
    if (!su2_triangle(rho.rho1.twice_spin(), rho.rho2.twice_spin(), rho.rho.twice_spin()))
        return SurdSum();

    const Partition3 left = to_partition(c.left);
    const int big = c.right.lambda + c.right.mu;  // lambda2 + mu2
    const int small = c.right.mu;                 // mu2
    const Partition3 right = {big, small, 0};

    SurdSum sum;
    for (int p = 0; p <= small; ++p) {
        const int qbar_boxes = rho.rho.box_count() - p;
        const int cgap = qbar_boxes - rho.rho1.box_count();
        if (cgap < 0 || cgap > big) continue;
        for (int q = bar.bar.m3; q <= bar.bar.m2; ++q) {
            const int w = qbar_boxes - q;
            if (w < q) continue;
            U2Label qbar{w, q};
            if (!qbar.inside(bar.bar)) continue;

            SurdSum t1 = mf_rwc(left, rho.rho1, big, cgap, bar.bar, qbar);
            if (t1.is_zero()) continue;
            SurdSum t2 = mf_rwc(bar.bar, qbar, small, p, c.target, rho.rho);
            if (t2.is_zero()) continue;
            SurdSum t3 = mf_rwc({big, 0, 0}, {cgap, 0}, small, p, right, rho.rho2);
            if (t3.is_zero()) continue;
            SurdSum u = racah_memoized(rho.rho1, U2Label{cgap, 0}, qbar, rho.rho, rho.rho2,
                                       U2Label{p, 0});
            if (u.is_zero()) continue;
            sum += t1 * t2 * t3 * u;
        }
    }
    return sum;
}

}  // namespace su3rwc
