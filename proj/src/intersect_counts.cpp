#include "circletop/intersect_counts.hpp"

#include "circletop/nested_counts.hpp"
#include "row_fill.hpp"

namespace circletop {

namespace {

Series geometric_reciprocal(const Series& zc) {
    // 1/(1 - zC); zC has valuation 1, so order-many terms suffice.
    const int order = zc.order();
    Series geo = Series::one(order);
    Series power = Series::one(order);
    for (int i = 1; i <= order; ++i) {
        power = power * zc;
        geo = geo + power;
    }
    return geo;
}

Series shifted_by_one(const Series& c) {
    Series zc(c.order());
    for (int n = 1; n <= c.order(); ++n)
        zc.set_coeff(n, c.coeff(n - 1));
    return zc;
}

Series pair_interior_identity(const Series& interior, int max_n) {
    // 1 + z^2 * interior * C / (1 - zC)
    const Series c = c_series_via_euler(max_n);
    const Series geo = geometric_reciprocal(shifted_by_one(c));
    Series num = interior * c * geo;
    Series out = Series::one(max_n);
    for (int n = 2; n <= max_n; ++n)
        out.set_coeff(n, num.coeff(n - 2));
    return out;
}

Triangle pair_family_triangle(FamilyId fam, int max_n, const Series& interior) {
    const Triangle c = c_triangle(max_n);
    Triangle t(fam, max_n);
    t.set_row_total(0, 0);
    for (int n = 1; n <= max_n; ++n) {
        Int col1 = t.row_total(n - 1);
        if (n >= 2)
            col1 += interior.coeff(n - 2);
        t.set_cell(n, 1, std::move(col1));
        detail::fill_pinned_factor_row(t, c, n);
        t.total_row(n);
    }
    return t;
}

struct X2Result {
    Triangle triangle;
    Series series;
};

X2Result x2_bootstrap(int max_n) {
    Triangle t(FamilyId::X2, max_n);
    t.set_row_total(0, 1);
    Series x2(max_n);
    x2.set_coeff(0, 1);
    for (int n = 1; n <= max_n; ++n) {
        // Dbar at index n-2 only reads X2 coefficients up to n-2, all final.
        Int col1 = t.row_total(n - 1);
        if (n >= 2) {
            const Series d_bar = x2 * pair_multiset(x2);
            col1 += d_bar.coeff(n - 2);
        }
        t.set_cell(n, 1, std::move(col1));
        detail::fill_multiset_row(t, n);
        t.total_row(n);
        x2.set_coeff(n, t.row_total(n));
    }
    return {std::move(t), std::move(x2)};
}

struct X3Result {
    Triangle triangle;
    Series series;
};

// Content series for the triple-intersection compounds, all in terms of
// the (partially filled) X3 series.  Each coefficient at index m depends
// only on X3 coefficients up to m, which makes the bootstrap well-founded.
struct TripleInteriors {
    Series d2, d31, d33, d34, d36;
};

TripleInteriors triple_interiors(const Series& x) {
    const Series x_sq = x * x;
    const CycleIndex c2 = CycleIndex::cyclic2();
    const CycleIndex s3 = CycleIndex::symmetric3();
    TripleInteriors r{
        x * cycle_index_apply(c2, x),                          // lens free, crescents paired
        x * cycle_index_apply(s3, x_sq),                       // center free, six outer regions under S3
        x * cycle_index_apply(c2, x_sq),                       // middle free, end pairs mirrored
        x * (cycle_index_apply(c2, x_sq) * cycle_index_apply(c2, x)), // C2 x C2 direct product
        x.pow(5),                                              // no symmetry, five free regions
    };
    return r;
}

X3Result x3_bootstrap(int max_n) {
    Triangle t(FamilyId::X3, max_n);
    t.set_row_total(0, 1);
    Series x3(max_n);
    x3.set_coeff(0, 1);
    for (int n = 1; n <= max_n; ++n) {
        Int col1 = t.row_total(n - 1);
        if (n >= 2) {
            const TripleInteriors ti = triple_interiors(x3);
            col1 += ti.d2.coeff(n - 2);
            if (n >= 3)
                col1 += 2 * ti.d31.coeff(n - 3) + ti.d33.coeff(n - 3) +
                        2 * ti.d34.coeff(n - 3) + ti.d36.coeff(n - 3);
        }
        t.set_cell(n, 1, std::move(col1));
        detail::fill_multiset_row(t, n);
        t.total_row(n);
        x3.set_coeff(n, t.row_total(n));
    }
    return {std::move(t), std::move(x3)};
}

void check_anchor(const IntSeq& s, const char* name) {
    if (s.empty() || s[0] != 1)
        throw ExactnessError(std::string("auxiliary sequence ") + name + " lost its anchor value 1");
}

} // namespace

Series d_hat_series(int max_n) {
    return pair_multiset(c_series_via_euler(max_n));
}

Series d_series(int max_n) {
    const Series c = c_series_via_euler(max_n);
    return c * pair_multiset(c);
}

Triangle x_triangle(int max_n) {
    return pair_family_triangle(FamilyId::X, max_n, d_series(max_n));
}

Series x_series_identity(int max_n) {
    return pair_interior_identity(d_series(max_n), max_n);
}

Triangle xt_triangle(int max_n) {
    return pair_family_triangle(FamilyId::Xt, max_n, d_hat_series(max_n));
}

Series xt_series_identity(int max_n) {
    return pair_interior_identity(d_hat_series(max_n), max_n);
}

Triangle x2_triangle(int max_n) {
    return x2_bootstrap(max_n).triangle;
}

Triangle x3_triangle(int max_n) {
    return x3_bootstrap(max_n).triangle;
}

IntersectBundle intersect_bundle(int max_n) {
    const Series d_hat = d_hat_series(max_n);
    const Series d = d_series(max_n);

    X2Result x2 = x2_bootstrap(max_n);
    const Series d_tilde = pair_multiset(x2.series);
    const Series d_bar = x2.series * d_tilde;

    X3Result x3 = x3_bootstrap(max_n);
    const TripleInteriors ti = triple_interiors(x3.series);

    DFamily seqs{
        d.coeffs(),       d_hat.coeffs(), d_bar.coeffs(), d_tilde.coeffs(), ti.d2.coeffs(),
        ti.d31.coeffs(),  ti.d33.coeffs(), ti.d34.coeffs(), ti.d36.coeffs(),
    };
    check_anchor(seqs.d, "D");
    check_anchor(seqs.d_hat, "Dhat");
    check_anchor(seqs.d_bar, "Dbar");
    check_anchor(seqs.d_tilde, "Dtilde");
    check_anchor(seqs.d2, "2D");
    check_anchor(seqs.d31, "3.1D");
    check_anchor(seqs.d33, "3.3D");
    check_anchor(seqs.d34, "3.4D");
    check_anchor(seqs.d36, "3.6D");

    return IntersectBundle{
        x_triangle(max_n),
        xt_triangle(max_n),
        std::move(x2.triangle),
        std::move(x3.triangle),
        std::move(seqs),
    };
}

} // namespace circletop
