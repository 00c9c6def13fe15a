#include "circletop/verify.hpp"

#include "circletop/expressions.hpp"
#include "circletop/intersect_counts.hpp"
#include "circletop/marked_counts.hpp"
#include "circletop/nested_counts.hpp"
#include "circletop/partitions.hpp"
#include "circletop/series.hpp"

#include <algorithm>
#include <sstream>

namespace circletop {

namespace {

std::string int_str(const Int& v) {
    return v.str();
}

struct Recorder {
    SuiteResult result;

    explicit Recorder(std::string name) { result.name = std::move(name); }

    void check(bool ok, const std::string& detail_on_fail) {
        ++result.checks;
        if (!ok && result.pass) {
            result.pass = false;
            result.detail = detail_on_fail;
        }
    }

    void check_eq(const Int& got, const Int& want, const std::string& where) {
        check(got == want, where + ", expected " + int_str(want) + ", got " + int_str(got));
    }
};

int capped(int reference, int cap) {
    return cap > 0 ? std::min(reference, cap) : reference;
}

} // namespace

SuiteResult compare_triangle(std::string suite, const Triangle& got, const GoldenTable& want,
                             int max_n_cap) {
    Recorder r(std::move(suite));
    const std::string fam = family_name(want.family) + (want.k > 1 ? std::to_string(want.k) : "");
    const int hi = std::min(capped(want.max_n, max_n_cap), got.max_n());
    for (int n = want.first_n; n <= hi; ++n) {
        r.check_eq(got.row_total(n), want.total(n), "(" + fam + ", N=" + std::to_string(n) + ", total");
        for (int f = 1; f <= n; ++f)
            r.check_eq(got.cell(n, f), want.cell(n, f),
                       "(" + fam + ", N=" + std::to_string(n) + ", f=" + std::to_string(f));
    }
    if (!r.result.detail.empty())
        r.result.detail += ")";
    return r.result;
}

namespace {

SuiteResult sequences_suite(int cap) {
    Recorder r("sequences");
    const IntersectBundle b = intersect_bundle(capped(12, std::max(cap, 2)));
    const struct {
        const char* name;
        const IntSeq* got;
    } pairs[] = {
        {"D", &b.seqs.d},
        {"Dhat", &b.seqs.d_hat},
        {"Dbar", &b.seqs.d_bar},
        {"Dtilde", &b.seqs.d_tilde},
    };
    for (const auto& [name, got] : pairs) {
        const std::vector<Int>& want = golden_sequence(name);
        const int hi = std::min(capped(static_cast<int>(want.size()) - 1, cap),
                                static_cast<int>(got->size()) - 1);
        for (int n = 0; n <= hi; ++n)
            r.check_eq((*got)[n], want[n], std::string(name) + "[" + std::to_string(n) + "]");
    }
    const std::vector<Int>& env_want = golden_sequence("envelope");
    const int env_hi = capped(static_cast<int>(env_want.size()) - 1, cap);
    const IntSeq env = envelope(env_hi);
    for (int i = 0; i <= env_hi; ++i)
        r.check_eq(env[i], env_want[i], "envelope[" + std::to_string(i) + "]");
    return r.result;
}

SuiteResult gf_identities_suite(int cap) {
    Recorder r("gf-identities");
    const int order = capped(12, cap);

    const Triangle m = m_triangle(std::max(order, 1));
    const Series ms = m_series_identity(order);
    for (int n = 0; n <= order; ++n)
        r.check_eq(ms.coeff(n), m.row_total(n), "M(z)[" + std::to_string(n) + "]");

    const Triangle x = x_triangle(std::max(order, 2));
    const Series xs = x_series_identity(order);
    for (int n = 2; n <= order; ++n)
        r.check_eq(xs.coeff(n), x.row_total(n), "X(z)[" + std::to_string(n) + "]");

    const Triangle xt = xt_triangle(std::max(order, 2));
    const Series xts = xt_series_identity(order);
    for (int n = 2; n <= order; ++n)
        r.check_eq(xts.coeff(n), xt.row_total(n), "Xt(z)[" + std::to_string(n) + "]");

    const Series c = c_series_via_euler(order);
    const Series dhat = pair_multiset(c);
    const Series d = d_series(order);
    const Series dhat_direct = d_hat_series(order);
    for (int n = 0; n <= order; ++n) {
        r.check_eq(dhat_direct.coeff(n), dhat.coeff(n), "Dhat halves [" + std::to_string(n) + "]");
        r.check_eq(d.coeff(n), (c * dhat).coeff(n), "D=C*Dhat [" + std::to_string(n) + "]");
    }

    const Triangle x2 = x2_triangle(std::max(order, 1));
    Series x2s(order);
    for (int n = 0; n <= order; ++n)
        x2s.set_coeff(n, x2.row_total(n));
    const Series dtilde = pair_multiset(x2s);
    const IntersectBundle b = intersect_bundle(order);
    for (int n = 0; n <= order; ++n)
        r.check_eq(dtilde.coeff(n), b.seqs.d_tilde[n], "Dtilde halves [" + std::to_string(n) + "]");
    return r.result;
}

SuiteResult euler_suite(int cap) {
    Recorder r("euler-transform");
    const int order = std::max(capped(11, cap), 1);
    std::vector<Triangle> tris;
    tris.push_back(c_triangle(order));
    tris.push_back(kc_triangle(2, order));
    tris.push_back(kc_triangle(3, order));
    tris.push_back(x2_triangle(order));
    tris.push_back(x3_triangle(order));
    for (const Triangle& t : tris) {
        IntSeq col1(static_cast<std::size_t>(order) + 1, Int(0));
        for (int n = 1; n <= order; ++n)
            col1[n] = t.cell(n, 1);
        const Series b = euler_transform(col1, order);
        const std::string fam =
            family_name(t.family) + (t.shape_count() > 1 ? std::to_string(t.shape_count()) : "");
        for (int n = 0; n <= order; ++n)
            r.check_eq(b.coeff(n), t.row_total(n), fam + " euler[" + std::to_string(n) + "]");
    }
    return r.result;
}

SuiteResult structural_suite(int cap) {
    Recorder r("structural-identities");
    const int hi = std::max(capped(11, cap), 3);

    const Triangle m = m_triangle(hi);
    for (int n = 1; n <= hi; ++n)
        r.check_eq(m.cell(n, n), 1, "M(N=" + std::to_string(n) + ",f=N)");

    const Triangle x = x_triangle(hi);
    for (int n = 2; n <= hi; ++n) {
        r.check_eq(x.cell(n, n), 0, "X(N=" + std::to_string(n) + ",f=N)");
        r.check_eq(x.cell(n, n - 1), 1, "X(N=" + std::to_string(n) + ",f=N-1)");
    }

    // The all-singletons diagonal of the k-shape triangles is a multiset
    // of N shapes from k kinds.  (For one shape the same binomial also
    // covers the f = N-1 diagonal.)
    for (int k = 1; k <= 3; ++k) {
        const Triangle t = kc_triangle(k, hi);
        for (int n = 1; n <= hi; ++n)
            r.check_eq(t.cell(n, n), binomial(n + k - 1, k - 1),
                       "kC" + std::to_string(k) + "(N=" + std::to_string(n) + ",f=N)");
    }
    const Triangle c = c_triangle(hi);
    for (int n = 2; n <= hi; ++n)
        r.check_eq(c.cell(n, n - 1), 1, "C(N=" + std::to_string(n) + ",f=N-1)");

    const Triangle mv = mv_triangle(hi);
    for (int n = 2; n <= hi; ++n) {
        r.check_eq(mv.cell(n, 1), mv.row_total(n - 1), "Mv col1(N=" + std::to_string(n) + ")");
        r.check_eq(mv.cell(n, 1), mv.cell(n, 2), "Mv col1=col2 (N=" + std::to_string(n) + ")");
    }

    const Triangle x2 = x2_triangle(3);
    const Triangle x3 = x3_triangle(3);
    r.check_eq(x3.cell(3, 1) - x2.cell(3, 1), 6, "X3-X2 new topologies at N=3");
    return r.result;
}

SuiteResult oracle_suite(FamilyId fam, const Triangle& tri, int hi) {
    Recorder r("oracle-" + family_name(fam));
    for (int n = 1; n <= hi; ++n) {
        const Enumeration en = enumerate_family(fam, n);
        r.check_eq(Int(en.exprs.size()), tri.row_total(n),
                   "(" + family_name(fam) + ", N=" + std::to_string(n) + ", total");
        const std::vector<Int> hist = factor_histogram(en);
        for (int f = 1; f <= n; ++f)
            r.check_eq(hist[f - 1], tri.cell(n, f),
                       "(" + family_name(fam) + ", N=" + std::to_string(n) + ", f=" +
                           std::to_string(f));
    }
    if (!r.result.detail.empty())
        r.result.detail += ")";
    return r.result;
}

SuiteResult clusters_suite(int cap) {
    Recorder r("flip-clusters");
    const std::vector<Int>& want = golden_sequence("clusters");
    const int hi = std::min(capped(8, cap), static_cast<int>(want.size()) - 1);
    for (int n = 0; n <= hi; ++n)
        r.check_eq(Int(flip_clusters(n).size()), want[n], "clusters[" + std::to_string(n) + "]");
    return r.result;
}

SuiteResult codecs_suite(int cap) {
    Recorder r("codecs");
    const std::pair<const char*, long> binary_worked[] = {
        {"()", 2},      {"()()", 10},   {"(())", 12},   {"()()()", 42},
        {"()(())", 44}, {"(())()", 50}, {"(()())", 52}, {"((()))", 56},
    };
    for (const auto& [text, value] : binary_worked) {
        const BinaryCode code = encode_binary(std::string_view(text));
        r.check_eq(code.value, value, std::string("binary ") + text);
        r.check(code.value % 2 == 0, std::string("binary parity ") + text);
    }
    const std::pair<const char*, const char*> base4_worked[] = {
        {"[[]]", "3322"},
        {"([[()]]())", "1331022100"},
        {"[]", "32"},
    };
    for (const auto& [text, digits] : base4_worked)
        r.check(encode_base4(std::string_view(text)) == digits, std::string("base4 ") + text);

    const int hi = capped(7, cap);
    for (int n = 0; n <= hi; ++n)
        for (const Expr& e : enumerate_family(FamilyId::C, n).exprs)
            r.check(decode_binary(encode_binary(e).bits) == e,
                    "binary round trip at N=" + std::to_string(n));
    for (int n = 1; n <= hi; ++n)
        for (const Expr& e : enumerate_family(FamilyId::M, n).exprs)
            r.check(decode_base4(encode_base4(e)) == e,
                    "base-4 round trip at N=" + std::to_string(n));
    return r.result;
}

} // namespace

std::vector<SuiteResult> run_verification(int max_n) {
    std::vector<SuiteResult> out;
    const int cap = max_n;

    auto table_depth = [cap](const GoldenTable& g) {
        return std::max(capped(g.max_n, cap), std::max(g.first_n, 1));
    };

    {
        const GoldenTable& g = golden_table(FamilyId::P);
        out.push_back(compare_triangle("table-P", catalan_triangle(table_depth(g)), g, cap));
    }
    {
        const GoldenTable& g = golden_table(FamilyId::C);
        out.push_back(compare_triangle("table-C", c_triangle(table_depth(g)), g, cap));
    }
    for (int k = 2; k <= 3; ++k) {
        const GoldenTable& g = golden_table(FamilyId::KC, k);
        out.push_back(compare_triangle("table-kC" + std::to_string(k),
                                       kc_triangle(k, table_depth(g)), g, cap));
    }
    {
        const GoldenTable& g = golden_table(FamilyId::M);
        out.push_back(compare_triangle("table-M", m_triangle(table_depth(g)), g, cap));
    }
    {
        const GoldenTable& g = golden_table(FamilyId::Mv);
        out.push_back(compare_triangle("table-Mv", mv_triangle(table_depth(g)), g, cap));
    }
    {
        const GoldenTable& g = golden_table(FamilyId::X);
        out.push_back(compare_triangle("table-X", x_triangle(table_depth(g)), g, cap));
    }
    {
        const GoldenTable& g = golden_table(FamilyId::Xt);
        out.push_back(compare_triangle("table-Xt", xt_triangle(table_depth(g)), g, cap));
    }
    {
        const GoldenTable& g = golden_table(FamilyId::X2);
        out.push_back(compare_triangle("table-X2", x2_triangle(table_depth(g)), g, cap));
    }
    {
        const GoldenTable& g = golden_table(FamilyId::X3);
        out.push_back(compare_triangle("table-X3", x3_triangle(table_depth(g)), g, cap));
    }

    out.push_back(sequences_suite(cap));
    out.push_back(gf_identities_suite(cap));
    out.push_back(euler_suite(cap));
    out.push_back(structural_suite(cap));

    {
        const int hi7 = capped(7, cap);
        const int hi6 = capped(6, cap);
        out.push_back(oracle_suite(FamilyId::C, c_triangle(std::max(hi7, 1)), hi7));
        out.push_back(oracle_suite(FamilyId::M, m_triangle(std::max(hi7, 1)), hi7));
        out.push_back(oracle_suite(FamilyId::Mv, mv_triangle(std::max(hi7, 1)), hi7));
        out.push_back(oracle_suite(FamilyId::X, x_triangle(std::max(hi7, 2)), hi7));
        out.push_back(oracle_suite(FamilyId::Xt, xt_triangle(std::max(hi7, 2)), hi7));
        out.push_back(oracle_suite(FamilyId::X2, x2_triangle(std::max(hi7, 1)), hi7));
        out.push_back(oracle_suite(FamilyId::X3, x3_triangle(std::max(hi6, 1)), hi6));
    }

    out.push_back(clusters_suite(cap));
    out.push_back(codecs_suite(cap));
    return out;
}

} // namespace circletop
