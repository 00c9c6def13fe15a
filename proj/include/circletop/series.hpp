#pragma once

#include "circletop/bigint.hpp"

#include <map>
#include <vector>

namespace circletop {

/// Integer sequence, values indexed from n = 0.
using IntSeq = std::vector<Int>;

/// Truncated formal power series with exact integer coefficients.
///
/// The truncation order is fixed at construction and binary operations
/// require both operands to share it; nothing ever extends or shrinks a
/// series silently.
class Series {
public:
    /// Zero series of the given order (order >= 0).
    explicit Series(int order);

    /// The multiplicative unit 1 + 0z + ... at the given order.
    static Series one(int order);

    /// Takes ownership of the coefficient vector; order = size - 1.
    static Series from_coeffs(std::vector<Int> coeffs);

    int order() const { return static_cast<int>(coeffs_.size()) - 1; }
    const Int& coeff(int n) const;
    const Int& operator[](int n) const { return coeff(n); }
    void set_coeff(int n, Int v);

    Series operator+(const Series& rhs) const;
    Series operator*(const Series& rhs) const;

    /// z -> z^j substitution: coefficient of z^(j*n) is this->coeff(n),
    /// all other coefficients zero.  Truncated at the original order.
    Series substituted(int j) const;

    Series pow(unsigned e) const;

    /// Coefficient-wise division; throws ExactnessError on any remainder.
    Series divided_exact(const Int& d) const;

    bool operator==(const Series&) const = default;

    const std::vector<Int>& coeffs() const { return coeffs_; }

private:
    std::vector<Int> coeffs_;
};

/// Cycle index of a finite permutation group, stored exactly as integer
/// numerator terms over one shared group-order denominator.  A monomial
/// maps the indeterminate index j to its exponent e_j; every term must
/// satisfy the same total degree sum(j * e_j).
class CycleIndex {
public:
    using Monomial = std::map<int, int>;
    struct Term {
        Int coeff;
        Monomial mono;
    };

    CycleIndex(Int group_order, std::vector<Term> terms);

    static CycleIndex trivial();    // t_1
    static CycleIndex cyclic2();    // (t_1^2 + t_2) / 2
    static CycleIndex symmetric3(); // (t_1^3 + 3 t_1 t_2 + 2 t_3) / 6

    const Int& group_order() const { return group_order_; }
    const std::vector<Term>& terms() const { return terms_; }
    int degree() const { return degree_; }

private:
    Int group_order_;
    std::vector<Term> terms_;
    int degree_ = 0;
};

/// Euler transform of the sequence a_1, a_2, ... (a[0] is ignored; the
/// vector must cover indices 1..order).  Returns the series with
/// b_0 = 1 and n*b_n = c_n + sum_{k=1}^{n-1} c_k b_{n-k} where
/// c_n = sum_{d|n} d*a_d.  Counts multisets of structures: the result is
/// the coefficient list of prod_n (1 - z^n)^(-a_n).
Series euler_transform(const IntSeq& a, int order);

/// Substitute t_j -> arg_for.at(j) in the cycle index and divide by the
/// group order.  All argument series must share one order, and the
/// division must be exact (ExactnessError otherwise).
Series cycle_index_substitute(const CycleIndex& z, const std::map<int, Series>& arg_for);

/// The common special case t_j -> f(z^j).
Series cycle_index_apply(const CycleIndex& z, const Series& f);

/// Unordered pairs of f-objects: (f(z)^2 + f(z^2)) / 2, i.e. the
/// C2 cycle index applied to f.
Series pair_multiset(const Series& f);

} // namespace circletop
