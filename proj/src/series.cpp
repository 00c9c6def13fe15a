#include "circletop/series.hpp"

#include <utility>

namespace circletop {

Series::Series(int order) {
    if (order < 0)
        throw ContractViolation("series order must be >= 0");
    coeffs_.assign(static_cast<std::size_t>(order) + 1, Int(0));
}

Series Series::one(int order) {
    Series s(order);
    s.coeffs_[0] = 1;
    return s;
}

Series Series::from_coeffs(std::vector<Int> coeffs) {
    if (coeffs.empty())
        throw ContractViolation("series needs at least the constant coefficient");
    Series s(0);
    s.coeffs_ = std::move(coeffs);
    return s;
}

const Int& Series::coeff(int n) const {
    if (n < 0 || n > order())
        throw ContractViolation("series coefficient index out of range");
    return coeffs_[static_cast<std::size_t>(n)];
}

void Series::set_coeff(int n, Int v) {
    if (n < 0 || n > order())
        throw ContractViolation("series coefficient index out of range");
    coeffs_[static_cast<std::size_t>(n)] = std::move(v);
}

static void require_same_order(const Series& a, const Series& b) {
    if (a.order() != b.order())
        throw ContractViolation("series order mismatch");
}

Series Series::operator+(const Series& rhs) const {
    require_same_order(*this, rhs);
    Series out(order());
    for (int n = 0; n <= order(); ++n)
        out.coeffs_[n] = coeffs_[n] + rhs.coeffs_[n];
    return out;
}

Series Series::operator*(const Series& rhs) const {
    require_same_order(*this, rhs);
    Series out(order());
    for (int i = 0; i <= order(); ++i) {
        if (coeffs_[i] == 0)
            continue;
        for (int j = 0; i + j <= order(); ++j) {
            if (rhs.coeffs_[j] == 0)
                continue;
            out.coeffs_[i + j] += coeffs_[i] * rhs.coeffs_[j];
        }
    }
    return out;
}

Series Series::substituted(int j) const {
    if (j < 1)
        throw ContractViolation("substitution power must be >= 1");
    Series out(order());
    for (int n = 0; static_cast<long long>(n) * j <= order(); ++n)
        out.coeffs_[static_cast<std::size_t>(n) * j] = coeffs_[n];
    return out;
}

Series Series::pow(unsigned e) const {
    Series acc = Series::one(order());
    for (unsigned i = 0; i < e; ++i)
        acc = acc * *this;
    return acc;
}

Series Series::divided_exact(const Int& d) const {
    if (d == 0)
        throw ContractViolation("division by zero");
    Series out(order());
    for (int n = 0; n <= order(); ++n) {
        Int q = coeffs_[n] / d;
        if (q * d != coeffs_[n])
            throw ExactnessError("inexact coefficient division at degree " + std::to_string(n));
        out.coeffs_[n] = q;
    }
    return out;
}

CycleIndex::CycleIndex(Int group_order, std::vector<Term> terms)
    : group_order_(std::move(group_order)), terms_(std::move(terms)) {
    if (group_order_ <= 0)
        throw ContractViolation("cycle index group order must be positive");
    Int coeff_sum = 0;
    bool first = true;
    for (const Term& t : terms_) {
        coeff_sum += t.coeff;
        int deg = 0;
        for (const auto& [j, e] : t.mono) {
            if (j < 1 || e < 0)
                throw ContractViolation("cycle index monomial must map j >= 1 to e >= 0");
            deg += j * e;
        }
        if (first) {
            degree_ = deg;
            first = false;
        } else if (deg != degree_) {
            throw ContractViolation("cycle index terms have inconsistent degree");
        }
    }
    if (coeff_sum != group_order_)
        throw ContractViolation("cycle index coefficients must sum to the group order");
}

CycleIndex CycleIndex::trivial() {
    return CycleIndex(1, {Term{1, {{1, 1}}}});
}

CycleIndex CycleIndex::cyclic2() {
    return CycleIndex(2, {Term{1, {{1, 2}}}, Term{1, {{2, 1}}}});
}

CycleIndex CycleIndex::symmetric3() {
    return CycleIndex(6, {Term{1, {{1, 3}}}, Term{3, {{1, 1}, {2, 1}}}, Term{2, {{3, 1}}}});
}

Series euler_transform(const IntSeq& a, int order) {
    if (order < 0)
        throw ContractViolation("euler transform order must be >= 0");
    if (order >= 1 && a.size() < static_cast<std::size_t>(order) + 1)
        throw ContractViolation("euler transform input must cover indices 1..order");

    // c_n = sum over divisors d of n of d * a_d
    std::vector<Int> c(static_cast<std::size_t>(order) + 1, Int(0));
    for (int d = 1; d <= order; ++d) {
        if (a[d] == 0)
            continue;
        for (int n = d; n <= order; n += d)
            c[n] += Int(d) * a[d];
    }

    Series b(order);
    b.set_coeff(0, 1);
    for (int n = 1; n <= order; ++n) {
        Int acc = c[n];
        for (int k = 1; k < n; ++k)
            acc += c[k] * b.coeff(n - k);
        Int q = acc / n;
        if (q * n != acc)
            throw ExactnessError("euler transform divisibility failed at n = " + std::to_string(n));
        b.set_coeff(n, std::move(q));
    }
    return b;
}

Series cycle_index_substitute(const CycleIndex& z, const std::map<int, Series>& arg_for) {
    if (arg_for.empty())
        throw ContractViolation("cycle index substitution needs at least one argument series");
    const int order = arg_for.begin()->second.order();
    for (const auto& [j, s] : arg_for) {
        (void)j;
        if (s.order() != order)
            throw ContractViolation("cycle index argument series must share one order");
    }

    Series sum(order);
    for (const CycleIndex::Term& t : z.terms()) {
        Series prod = Series::one(order);
        for (const auto& [j, e] : t.mono) {
            auto it = arg_for.find(j);
            if (it == arg_for.end())
                throw ContractViolation("cycle index argument missing for t_" + std::to_string(j));
            for (int rep = 0; rep < e; ++rep)
                prod = prod * it->second;
        }
        Series scaled(order);
        for (int n = 0; n <= order; ++n)
            scaled.set_coeff(n, t.coeff * prod.coeff(n));
        sum = sum + scaled;
    }
    return sum.divided_exact(z.group_order());
}

Series cycle_index_apply(const CycleIndex& z, const Series& f) {
    std::map<int, Series> args;
    for (const CycleIndex::Term& t : z.terms())
        for (const auto& [j, e] : t.mono)
            if (e > 0 && !args.contains(j))
                args.emplace(j, f.substituted(j));
    if (args.empty())
        args.emplace(1, f);
    return cycle_index_substitute(z, args);
}

Series pair_multiset(const Series& f) {
    return cycle_index_apply(CycleIndex::cyclic2(), f);
}

} // namespace circletop
