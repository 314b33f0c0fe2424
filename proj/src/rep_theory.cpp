#include "su3rwc/rep_theory.hpp"

#include <algorithm>
#include <stdexcept>

namespace su3rwc {

long dim_u3(const Partition3& p) {
    return static_cast<long>(p.m1 - p.m2 + 1) * (p.m1 - p.m3 + 2) * (p.m2 - p.m3 + 1) / 2;
}

std::optional<std::pair<int, int>> multiplicity_range(const Su3Irrep& left, const Su3Irrep& right,
                                                      const Partition3& target) {
    if (!target.valid()) throw std::domain_error("target is not a weakly decreasing partition");
    if (target.box_count() != left.box_count() + right.box_count())
        throw std::domain_error("coupling box-count mismatch: " + to_string(left) + " x " +
                                to_string(right) + " -> " + to_string(target));
    const int l1 = left.lambda, u1 = left.mu, l2 = right.lambda, u2 = right.mu;
    const int m1 = target.m1, m2 = target.m2, m3 = target.m3;
    int eta_max = std::min({m1 - l1 - u1, u2, m2 - u1, l2 + u2 - m3, u1 + u2 - m3, m2 - m3});
    int eta_min = std::max({0, u2 - m3, m2 - l1 - u1});
    if (eta_min > eta_max) return std::nullopt;
    return std::make_pair(eta_min, eta_max);
}

namespace {

// Cell-by-cell filler for skew LR tableaux with two-letter content. Rows are
// filled right-to-left so the reverse reading word grows one letter at a time
// and the lattice condition can be enforced online.
struct LrCounter {
    int nu[3];     // inner shape
    int outer[3];  // outer shape
    int need1, need2;
    int grid[3][32] = {};

    int count() { return fill(0, 0, 0, 0); }

    // `off` counts cells already filled in this row, starting from the right
    // end; `placed1`/`placed2` track the content used so far.
    int fill(int row, int off, int placed1, int placed2) {
        if (row == 3) return (placed1 == need1 && placed2 == need2) ? 1 : 0;
        int width = outer[row] - nu[row];
        if (off == width) return fill(row + 1, 0, placed1, placed2);
        int col = outer[row] - 1 - off;  // 0-based column of this cell
        int total = 0;
        for (int v = 1; v <= 2; ++v) {
            if (v == 1 && placed1 == need1) continue;
            if (v == 2 && placed2 == need2) continue;
            // lattice word: after placing, #2s must not exceed #1s
            if (v == 2 && placed2 + 1 > placed1) continue;
            // row weak increase against the cell to the right
            if (col + 1 < outer[row] && grid[row][col + 1] < v) continue;
            // column strict against the cell above, when that cell is filled
            if (row > 0 && col < outer[row - 1] && col >= nu[row - 1] && grid[row - 1][col] >= v)
                continue;
            grid[row][col] = v;
            total += fill(row, off + 1, placed1 + (v == 1), placed2 + (v == 2));
            grid[row][col] = 0;
        }
        return total;
    }
};

}  // namespace

int lr_multiplicity(const Su3Irrep& left, const Su3Irrep& right, const Partition3& target) {
    if (!target.valid()) return 0;
    if (target.box_count() != left.box_count() + right.box_count()) return 0;
    if (target.m1 >= 32) throw std::domain_error("lr_multiplicity: partition too large");
    Partition3 nu = to_partition(left);
    if (target.m1 < nu.m1 || target.m2 < nu.m2 || target.m3 < nu.m3) return 0;
    LrCounter c{};
    c.nu[0] = nu.m1;
    c.nu[1] = nu.m2;
    c.nu[2] = nu.m3;
    c.outer[0] = target.m1;
    c.outer[1] = target.m2;
    c.outer[2] = target.m3;
    c.need1 = right.lambda + right.mu;
    c.need2 = right.mu;
    return c.count();
}

std::vector<ProductTerm> decompose_product(const Su3Irrep& left, const Su3Irrep& right) {
    std::vector<ProductTerm> out;
    const int boxes = left.box_count() + right.box_count();
    for (int m1 = (boxes + 2) / 3; m1 <= boxes; ++m1) {
        for (int m2 = std::max(0, boxes - m1 - m1); m2 <= std::min(m1, boxes - m1); ++m2) {
            int m3 = boxes - m1 - m2;
            if (m3 < 0 || m3 > m2) continue;
            Partition3 target{m1, m2, m3};
            auto range = multiplicity_range(left, right, target);
            if (range) out.push_back({target, range->second - range->first + 1});
        }
    }
    std::sort(out.begin(), out.end(),
              [](const ProductTerm& a, const ProductTerm& b) { return a.target < b.target; });
    return out;
}

std::vector<U2Label> u2_sublabels(const Partition3& parent) {
    std::vector<U2Label> out;
    for (int q1 = parent.m2; q1 <= parent.m1; ++q1)
        for (int q2 = parent.m3; q2 <= parent.m2; ++q2) out.push_back({q1, q2});
    return out;
}

std::optional<Coupling> make_coupling(const Su3Irrep& left, const Su3Irrep& right,
                                      const Partition3& target) {
    auto range = multiplicity_range(left, right, target);
    if (!range) return std::nullopt;
    return Coupling{left, right, target, range->first, range->second};
}

Coupling require_coupling(const Su3Irrep& left, const Su3Irrep& right, const Partition3& target) {
    auto c = make_coupling(left, right, target);
    if (!c)
        throw std::domain_error("empty coupling: " + to_string(left) + " x " + to_string(right) +
                                " -> " + to_string(target));
    return *c;
}

}  // namespace su3rwc
