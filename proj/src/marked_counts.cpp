#include "circletop/marked_counts.hpp"

#include "circletop/nested_counts.hpp"
#include "row_fill.hpp"

namespace circletop {

Triangle m_triangle(int max_n) {
    const Triangle c = c_triangle(max_n);
    Triangle t(FamilyId::M, max_n);
    t.set_row_total(0, 1);
    for (int n = 1; n <= max_n; ++n) {
        // At N = 1 only the bare mark exists; the "wrap a marked set in a
        // circle" branch needs a mark inside, so it starts at N = 2.
        Int col1 = c.row_total(n - 1);
        if (n >= 2)
            col1 += t.row_total(n - 1);
        t.set_cell(n, 1, std::move(col1));
        detail::fill_pinned_factor_row(t, c, n);
        t.total_row(n);
    }
    return t;
}

Series m_series_identity(int max_n) {
    const Series c = c_series_via_euler(max_n);
    Series zc(max_n);
    for (int n = 1; n <= max_n; ++n)
        zc.set_coeff(n, c.coeff(n - 1));

    // 1/(1 - zC) as a geometric sum; zC has valuation 1, so max_n terms
    // suffice at this order.
    Series geo = Series::one(max_n);
    Series power = Series::one(max_n);
    for (int i = 1; i <= max_n; ++i) {
        power = power * zc;
        geo = geo + power;
    }

    Series m = Series::one(max_n) + zc * c * geo;
    return m;
}

Triangle mv_triangle(int max_n) {
    const Triangle c = c_triangle(max_n);
    Triangle t(FamilyId::Mv, max_n);
    t.set_row_total(0, 1);
    for (int n = 1; n <= max_n; ++n) {
        t.set_cell(n, 1, t.row_total(n - 1));
        detail::fill_pinned_factor_row(t, c, n);
        t.total_row(n);
    }
    return t;
}

} // namespace circletop
