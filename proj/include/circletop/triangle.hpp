#pragma once

#include "circletop/bigint.hpp"

#include <optional>
#include <string>
#include <vector>

namespace circletop {

/// The counting families handled by this library.
///
///   P   ordered parenthesizations (Catalan triangle)
///   C   nested non-intersecting circles (order of factors irrelevant)
///   KC  like C with k distinct hollow shapes
///   M   one circle marked
///   Mv  one circle marked and empty
///   X   exactly one pair of circles intersecting in two points
///   Xt  exactly one pair of circles touching in one point
///   X2  any number of pairwise intersections, each circle in at most one
///   X3  pairwise and triple intersections admitted
enum class FamilyId { P, C, KC, M, Mv, X, Xt, X2, X3 };

std::string family_name(FamilyId f);
std::optional<FamilyId> family_from_name(const std::string& name);

/// First row a published table of the family starts at (X tables begin at
/// N = 2, the touching table at N = 1).
int family_first_row(FamilyId f);

/// Counting table of one family: cell(N, f) for 1 <= f <= N <= maxN plus
/// row totals, with rowTotal(0) anchoring the recurrences (1 for the
/// multiset families, 0 for the X pair families).
class Triangle {
public:
    Triangle(FamilyId family, int max_n, int k = 1);

    FamilyId family() const { return family_; }
    int shape_count() const { return k_; }
    int max_n() const { return max_n_; }

    const Int& cell(int n, int f) const;
    const Int& row_total(int n) const; // 0 <= n <= maxN

    void set_cell(int n, int f, Int v);
    void set_row_total(int n, Int v);

    /// Recomputes row_total(n) as the sum of the row's cells.
    void total_row(int n);

private:
    FamilyId family_;
    int k_;
    int max_n_;
    std::vector<std::vector<Int>> cells_;  // cells_[n] holds f = 1..n
    std::vector<Int> totals_;              // totals_[n], n = 0..maxN
};

} // namespace circletop
