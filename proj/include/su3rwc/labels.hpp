#pragma once

#include <array>
#include <compare>
#include <stdexcept>
#include <string>

namespace su3rwc {

// SU(3) irrep in (lambda, mu) form; equivalently the two-row partition
// [lambda+mu, mu, 0].
struct Su3Irrep {
    int lambda = 0;
    int mu = 0;

    auto operator<=>(const Su3Irrep&) const = default;
    int box_count() const { return lambda + 2 * mu; }
    long dimension() const {
        return static_cast<long>(lambda + 1) * (mu + 1) * (lambda + mu + 2) / 2;
    }
};

// Three-row U(3) partition [m1 >= m2 >= m3 >= 0].
struct Partition3 {
    int m1 = 0;
    int m2 = 0;
    int m3 = 0;

    auto operator<=>(const Partition3&) const = default;
    bool valid() const { return m1 >= m2 && m2 >= m3 && m3 >= 0; }
    int box_count() const { return m1 + m2 + m3; }
    int row(int i) const { return i == 0 ? m1 : (i == 1 ? m2 : m3); }
};

inline Partition3 to_partition(const Su3Irrep& w) { return {w.lambda + w.mu, w.mu, 0}; }

// (lambda, mu) of the shifted two-row partition; requires m3 == 0 after an
// explicit shift by the caller.
inline Su3Irrep to_irrep(const Partition3& p) {
    if (p.m3 != 0) throw std::domain_error("partition with m3 != 0 is not an SU(3) (lambda,mu) label");
    return {p.m1 - p.m2, p.m2};
}

// Two-row Gelfand row [q1 >= q2] labelling a U(2) subirrep.
struct U2Label {
    int q1 = 0;
    int q2 = 0;

    auto operator<=>(const U2Label&) const = default;
    int box_count() const { return q1 + q2; }
    int twice_spin() const { return q1 - q2; }
    bool inside(const Partition3& parent) const {
        return parent.m1 >= q1 && q1 >= parent.m2 && parent.m2 >= q2 && q2 >= parent.m3;
    }
};

// A nonempty tensor coupling with its multiplicity index range
// eta_min..eta_max.
struct Coupling {
    Su3Irrep left;
    Su3Irrep right;
    Partition3 target;
    int eta_min = 0;
    int eta_max = 0;

    auto operator<=>(const Coupling&) const = default;
    int multiplicity() const { return eta_max - eta_min + 1; }
    int lambda_total() const { return left.lambda + left.mu + right.lambda + right.mu; }
    // U(3) row of the complementary-chain subirrep attached to eta.
    Partition3 eta_row(int eta) const {
        return {target.m1, target.m2 - eta, target.m3 - right.mu + eta};
    }
};

// Intermediate label (k1, k2) with its derived partition
// [lambda_total - k1 - k2, mu1 + k1, k2].
struct BarLabel {
    int k1 = 0;
    int k2 = 0;
    Partition3 bar;

    auto operator<=>(const BarLabel&) const = default;
};

inline Partition3 bar_partition(const Coupling& c, int k1, int k2) {
    return {c.lambda_total() - k1 - k2, c.left.mu + k1, k2};
}

// Subirrep labels (rho1, rho2, rho) of the two factors and the target.
struct RhoTriple {
    U2Label rho1;
    U2Label rho2;
    U2Label rho;

    auto operator<=>(const RhoTriple&) const = default;
};

inline std::string to_string(const Su3Irrep& w) {
    return std::to_string(w.lambda) + "," + std::to_string(w.mu);
}
inline std::string to_string(const Partition3& p) {
    return std::to_string(p.m1) + "," + std::to_string(p.m2) + "," + std::to_string(p.m3);
}
inline std::string to_string(const U2Label& q) {
    return "[" + std::to_string(q.q1) + "," + std::to_string(q.q2) + "]";
}

}  // namespace su3rwc
