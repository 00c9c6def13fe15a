#pragma once

#include "circletop/series.hpp"
#include "circletop/triangle.hpp"

namespace circletop {

/// The auxiliary sequences feeding the intersecting-family recurrences:
/// each D_N counts the ways of populating the inner regions of one
/// intersecting compound with N circles of the stated content type.
/// All are anchored at value 1 for N = 0.
struct DFamily {
    IntSeq d;       // pair, three regions, plain C content
    IntSeq d_hat;   // pair, two crescent regions only, plain C content
    IntSeq d_bar;   // pair, three regions, X2 content
    IntSeq d_tilde; // pair, two crescent regions, X2 content
    IntSeq d2;      // pair, three regions, X3 content
    IntSeq d31;     // triple kind 1 (full overlap spot), X3 content
    IntSeq d33;     // triple kind 3 (linear chain), X3 content
    IntSeq d34;     // triple kind 4 (compressed chain), X3 content
    IntSeq d36;     // triple kind 6 (asymmetric bundle), X3 content
};

/// Crescent pair counts: pair_multiset of the C series,
/// (C(z)^2 + C(z^2)) / 2.
Series d_hat_series(int max_n);

/// Full pair-interior counts: D(z) = C(z) * Dhat(z) (the lens region is
/// free C content, so the split is a plain convolution).
Series d_series(int max_n);

/// One intersecting pair.  cell(N,1) = rowTotal(N-1) + D_{N-2} with row
/// totals 0 at N = 0, 1; cell(N,f>=2) pins the factor holding the pair and
/// fills the rest from the C triangle; cell(N,N) = 0.
Triangle x_triangle(int max_n);

/// X(z) = 1 + z^2 D(z) C(z) / (1 - z C(z)).  Matches the triangle row
/// totals for n >= 2; the constant term 1 is a quirk of the closed form
/// (no 0-circle set contains a pair) and is not compared.
Series x_series_identity(int max_n);

/// One touching pair: the lens stays empty, so Dhat replaces D.
Triangle xt_triangle(int max_n);

/// Xt(z) = 1 + z^2 Dhat(z) C(z) / (1 - z C(z)), same n >= 2 proviso.
Series xt_series_identity(int max_n);

/// Any number of disjoint intersecting pairs, nested recursively.
/// Bootstrapped degree by degree jointly with Dbar = X2 * Dtilde and
/// Dtilde = pair_multiset(X2); factor counts use the multiset rule over
/// this family's own column 1.
Triangle x2_triangle(int max_n);

/// Pair and triple intersections.  Same bootstrap with the five triple
/// content series; the two symmetry-equivalent triple topologies
/// (kinds 1/2 and 4/5) enter the column-1 recurrence with weight 2.
Triangle x3_triangle(int max_n);

/// Everything the intersecting families produce, computed in one pass.
struct IntersectBundle {
    Triangle x, xt, x2, x3;
    DFamily seqs;
};

IntersectBundle intersect_bundle(int max_n);

} // namespace circletop
