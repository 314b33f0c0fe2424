#include "su3rwc/engine.hpp"

#include <algorithm>
#include <stdexcept>

#include "su3rwc/rep_theory.hpp"

namespace su3rwc {

const SurdSum& RwcTable::at(int eta, const RhoTriple& rho) const {
    if (eta < coupling.eta_min || eta > coupling.eta_max)
        throw std::domain_error("rwc table: eta outside multiplicity range");
    auto it = std::find(rhos.begin(), rhos.end(), rho);
    if (it == rhos.end()) throw std::domain_error("rwc table: unknown rho triple");
    return values[static_cast<std::size_t>(eta - coupling.eta_min)]
                 [static_cast<std::size_t>(it - rhos.begin())];
}

namespace {

// g_eta values for every bar and eta: geta[b][k] = G(bar_b, eta_min + k).
std::vector<std::vector<SurdSum>> g_eta_matrix(const Coupling& c,
                                               const std::vector<BarLabel>& bars) {
    std::vector<std::vector<SurdSum>> geta(bars.size());
    for (std::size_t b = 0; b < bars.size(); ++b) {
        geta[b].reserve(static_cast<std::size_t>(c.multiplicity()));
        for (int eta = c.eta_min; eta <= c.eta_max; ++eta)
            geta[b].push_back(g_eta(c, bars[b], eta));
    }
    return geta;
}

GramMatrix gram_from(const Coupling& c, const std::vector<std::vector<SurdSum>>& geta) {
    const int m = c.multiplicity();
    GramMatrix gram{c, std::vector<std::vector<SurdSum>>(
                           static_cast<std::size_t>(m),
                           std::vector<SurdSum>(static_cast<std::size_t>(m)))};
    for (int i = 0; i < m; ++i) {
        for (int j = i; j < m; ++j) {
            SurdSum sum;
            for (std::size_t b = 0; b < geta.size(); ++b)
                sum += geta[b][static_cast<std::size_t>(i)] * geta[b][static_cast<std::size_t>(j)];
            gram.entries[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = sum;
            gram.entries[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)] = sum;
        }
    }
    return gram;
}

}  // namespace

GramMatrix build_gram(const Coupling& c) {
    std::vector<BarLabel> bars = k_ranges(c);
    return gram_from(c, g_eta_matrix(c, bars));
}

SpecialRwcMatrix special_rwc(const GramMatrix& gram) {
    const int m = gram.size();
    SpecialRwcMatrix out{gram.coupling,
                         std::vector<std::vector<SurdSum>>(
                             static_cast<std::size_t>(m),
                             std::vector<SurdSum>(static_cast<std::size_t>(m)))};
    auto& M = out.entries;
    for (int k = 0; k < m; ++k) {
        SurdSum resid = gram.entries[static_cast<std::size_t>(k)][static_cast<std::size_t>(k)];
        for (int j = 0; j < k; ++j)
            resid -= M[static_cast<std::size_t>(j)][static_cast<std::size_t>(k)] *
                     M[static_cast<std::size_t>(j)][static_cast<std::size_t>(k)];
        auto rational = resid.as_rational();
        if (!rational)
            throw std::logic_error("special_rwc: irrational diagonal residual at k=" +
                                   std::to_string(k) + " for coupling " +
                                   to_string(gram.coupling.left) + " x " +
                                   to_string(gram.coupling.right) + " -> " +
                                   to_string(gram.coupling.target));
        if (sgn(*rational) <= 0)
            throw std::logic_error("special_rwc: nonpositive diagonal residual at k=" +
                                   std::to_string(k) + " for coupling " +
                                   to_string(gram.coupling.left) + " x " +
                                   to_string(gram.coupling.right) + " -> " +
                                   to_string(gram.coupling.target) +
                                   "; the Gram entries are inconsistent");
        M[static_cast<std::size_t>(k)][static_cast<std::size_t>(k)] = SurdSum::sqrt_of(*rational);
        for (int l = k + 1; l < m; ++l) {
            SurdSum value = gram.entries[static_cast<std::size_t>(k)][static_cast<std::size_t>(l)];
            for (int j = 0; j < k; ++j)
                value -= M[static_cast<std::size_t>(j)][static_cast<std::size_t>(k)] *
                         M[static_cast<std::size_t>(j)][static_cast<std::size_t>(l)];
            M[static_cast<std::size_t>(k)][static_cast<std::size_t>(l)] =
                value.div_single(M[static_cast<std::size_t>(k)][static_cast<std::size_t>(k)]);
        }
    }
    return out;
}

SpecialRwcMatrix special_rwc(const Coupling& c) { return special_rwc(build_gram(c)); }

RwcTable rwc_table(const Coupling& c) {
    const int m = c.multiplicity();
    std::vector<BarLabel> bars = k_ranges(c);
    std::vector<std::vector<SurdSum>> geta = g_eta_matrix(c, bars);
    SpecialRwcMatrix special = special_rwc(gram_from(c, geta));
    const auto& M = special.entries;

    RwcTable table{c, valid_rho_triples(c), {}};
    table.values.assign(static_cast<std::size_t>(m),
                        std::vector<SurdSum>(table.rhos.size()));
    for (std::size_t r = 0; r < table.rhos.size(); ++r) {
        // mixed overlaps (eta_k; rho) = sum over bars of G(bar,eta) G(bar,rho)
        std::vector<SurdSum> grho(bars.size());
        for (std::size_t b = 0; b < bars.size(); ++b) grho[b] = g_rho(c, bars[b], table.rhos[r]);
        for (int k = 0; k < m; ++k) {
            SurdSum value;
            for (std::size_t b = 0; b < bars.size(); ++b)
                value += geta[b][static_cast<std::size_t>(k)] * grho[b];
            for (int j = 0; j < k; ++j)
                value -= table.values[static_cast<std::size_t>(j)][r] *
                         M[static_cast<std::size_t>(j)][static_cast<std::size_t>(k)];
            table.values[static_cast<std::size_t>(k)][r] =
                value.div_single(M[static_cast<std::size_t>(k)][static_cast<std::size_t>(k)]);
        }
    }
    return table;
}

RwcTable mf_table_direct(const Coupling& c) {
    if (c.right.mu != 0)
        throw std::domain_error("mf_table_direct: defined for mu2 == 0 couplings only");
    // With a symmetric right factor the only contributing bar equals the
    // target itself.
    BarLabel star{c.target.m2 - c.left.mu, c.target.m3, c.target};
    if (!bar_valid(c, star)) throw std::logic_error("mf_table_direct: target bar is invalid");
    SurdSum norm = g_eta(c, star, 0);
    auto rational = norm.as_rational();
    if (!rational || sgn(*rational) == 0)
        throw std::logic_error("mf_table_direct: degenerate normalization");
    int sign = sgn(*rational);

    RwcTable table{c, valid_rho_triples(c), {}};
    table.values.assign(1, std::vector<SurdSum>(table.rhos.size()));
    for (std::size_t r = 0; r < table.rhos.size(); ++r) {
        SurdSum value = g_rho(c, star, table.rhos[r]);
        if (sign < 0) value = -value;
        table.values[0][r] = value;
    }
    return table;
}

std::vector<std::vector<SurdSum>> racah_su3_matrix(const Coupling& c) {
    const int m = c.multiplicity();
    std::vector<BarLabel> bars = k_ranges(c);
    std::vector<std::vector<SurdSum>> geta = g_eta_matrix(c, bars);
    SpecialRwcMatrix special = special_rwc(gram_from(c, geta));
    const auto& M = special.entries;

    std::vector<std::vector<SurdSum>> racah(static_cast<std::size_t>(m),
                                            std::vector<SurdSum>(bars.size()));
    for (std::size_t b = 0; b < bars.size(); ++b) {
        for (int k = 0; k < m; ++k) {
            SurdSum value = geta[b][static_cast<std::size_t>(k)];
            for (int j = 0; j < k; ++j)
                value -= racah[static_cast<std::size_t>(j)][b] *
                         M[static_cast<std::size_t>(j)][static_cast<std::size_t>(k)];
            racah[static_cast<std::size_t>(k)][b] =
                value.div_single(M[static_cast<std::size_t>(k)][static_cast<std::size_t>(k)]);
        }
    }
    return racah;
}

SurdSum racah_su3(const Coupling& c, const BarLabel& bar, int eta) {
    if (eta < c.eta_min || eta > c.eta_max)
        throw std::domain_error("racah_su3: eta outside multiplicity range");
    std::vector<BarLabel> bars = k_ranges(c);
    auto it = std::find(bars.begin(), bars.end(), bar);
    if (it == bars.end()) throw std::domain_error("racah_su3: invalid bar label");
    auto matrix = racah_su3_matrix(c);
    return matrix[static_cast<std::size_t>(eta - c.eta_min)]
                 [static_cast<std::size_t>(it - bars.begin())];
}

namespace {

Coupling swapped(const Coupling& c) { return require_coupling(c.right, c.left, c.target); }

}  // namespace

std::vector<std::vector<SurdSum>> exchange_z_matrix(const Coupling& c) {
    RwcTable lr = rwc_table(c);
    RwcTable rl = rwc_table(swapped(c));
    const int m = c.multiplicity();

    // Fix the target label carried by the most rho pairs, then contract the
    // two tables over (rho1, rho2) at that label.
    std::vector<U2Label> labels;
    for (const auto& rho : lr.rhos)
        if (std::find(labels.begin(), labels.end(), rho.rho) == labels.end())
            labels.push_back(rho.rho);
    U2Label best = labels.front();
    std::size_t best_count = 0;
    for (const auto& label : labels) {
        std::size_t count = 0;
        for (const auto& rho : lr.rhos) count += rho.rho == label;
        if (count > best_count) {
            best = label;
            best_count = count;
        }
    }

    std::vector<std::vector<SurdSum>> z(static_cast<std::size_t>(m),
                                        std::vector<SurdSum>(static_cast<std::size_t>(m)));
    for (std::size_t r = 0; r < lr.rhos.size(); ++r) {
        if (!(lr.rhos[r].rho == best)) continue;
        RhoTriple mirrored{lr.rhos[r].rho2, lr.rhos[r].rho1, lr.rhos[r].rho};
        for (int eta = 0; eta < m; ++eta) {
            for (int etap = 0; etap < m; ++etap) {
                z[static_cast<std::size_t>(eta)][static_cast<std::size_t>(etap)] +=
                    rl.at(rl.coupling.eta_min + eta, mirrored) *
                    lr.values[static_cast<std::size_t>(etap)][r];
            }
        }
    }
    return z;
}

int exchange_phase_mf(const Coupling& c) {
    if (c.multiplicity() != 1)
        throw std::domain_error(
            "exchange_phase_mf: coupling has outer multiplicity; use exchange_z_matrix");
    auto z = exchange_z_matrix(c);
    auto value = z[0][0].as_rational();
    if (!value || (*value != 1 && *value != -1))
        throw std::logic_error("exchange_phase_mf: exchange overlap is not a sign");
    return sgn(*value);
}

}  // namespace su3rwc
