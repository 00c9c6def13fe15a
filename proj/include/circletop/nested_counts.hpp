#pragma once

#include "circletop/series.hpp"
#include "circletop/triangle.hpp"

namespace circletop {

/// Catalan triangle: ordered parenthesizations of N pairs split by factor
/// count.  cell(N,1) = rowTotal(N-1), cell(N,f) by the composition
/// convolution; row totals are the Catalan numbers.
Triangle catalan_triangle(int max_n);

/// Commutative circles: cell(N,1) = rowTotal(N-1); cell(N,f) sums the
/// multiset-composition product over partitions of N into exactly f parts.
Triangle c_triangle(int max_n);

/// k-shape generalization: cell(N,1) = k * rowTotal(N-1), same multiset
/// machinery.  k = 1 reproduces c_triangle exactly.
Triangle kc_triangle(int k, int max_n);

/// The C row totals obtained independently of the triangle, by running the
/// Euler-transform fixed point degree by degree (each new coefficient of
/// the transform input is the previous row total).
Series c_series_via_euler(int max_n);

/// Stabilized diagonal values |C_N^(N-i)| for i = 0..max_i: the Euler
/// transform of the row-total sequence |C_1|, |C_2|, ...
IntSeq envelope(int max_i);

} // namespace circletop
