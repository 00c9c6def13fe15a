#include "circletop/nested_counts.hpp"

#include "circletop/partitions.hpp"
#include "row_fill.hpp"

namespace circletop {

Triangle catalan_triangle(int max_n) {
    Triangle t(FamilyId::P, max_n);
    t.set_row_total(0, 1);
    for (int n = 1; n <= max_n; ++n) {
        t.set_cell(n, 1, t.row_total(n - 1));
        // A word of f factors is a one-factor block followed by a word of
        // f-1 factors, so the per-f counts convolve.
        for (int f = 2; f <= n; ++f) {
            Int sum = 0;
            for (int first = 1; first <= n - f + 1; ++first)
                sum += t.cell(first, 1) * t.cell(n - first, f - 1);
            t.set_cell(n, f, std::move(sum));
        }
        t.total_row(n);
    }
    return t;
}

Triangle c_triangle(int max_n) {
    return kc_triangle(1, max_n);
}

Triangle kc_triangle(int k, int max_n) {
    if (k < 1)
        throw ContractViolation("shape count k must be >= 1");
    Triangle t(k == 1 ? FamilyId::C : FamilyId::KC, max_n, k);
    t.set_row_total(0, 1);
    for (int n = 1; n <= max_n; ++n) {
        t.set_cell(n, 1, Int(k) * t.row_total(n - 1));
        detail::fill_multiset_row(t, n);
        t.total_row(n);
    }
    return t;
}

Series c_series_via_euler(int max_n) {
    // Fixed point: the transform input a_n = |C_{n-1}| is known once the
    // output coefficient n-1 is known, so both sequences grow in lockstep.
    if (max_n < 0)
        throw ContractViolation("order must be >= 0");
    std::vector<Int> totals{Int(1)};
    IntSeq a(static_cast<std::size_t>(max_n) + 1, Int(0));
    std::vector<Int> c(static_cast<std::size_t>(max_n) + 1, Int(0));
    for (int n = 1; n <= max_n; ++n) {
        a[n] = totals[n - 1];
        Int cn = 0;
        for (int d = 1; d <= n; ++d)
            if (n % d == 0)
                cn += Int(d) * a[d];
        c[n] = std::move(cn);
        Int acc = c[n];
        for (int kk = 1; kk < n; ++kk)
            acc += c[kk] * totals[n - kk];
        Int q = acc / n;
        if (q * n != acc)
            throw ExactnessError("C fixed point divisibility failed at n = " + std::to_string(n));
        totals.push_back(std::move(q));
    }
    return Series::from_coeffs(std::move(totals));
}

IntSeq envelope(int max_i) {
    if (max_i < 0)
        throw ContractViolation("envelope index must be >= 0");
    const Series c = c_series_via_euler(max_i);
    IntSeq a(static_cast<std::size_t>(max_i) + 1, Int(0));
    for (int n = 1; n <= max_i; ++n)
        a[n] = c.coeff(n);
    const Series e = euler_transform(a, max_i);
    return e.coeffs();
}

} // namespace circletop
