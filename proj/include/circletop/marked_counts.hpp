#pragma once

#include "circletop/series.hpp"
#include "circletop/triangle.hpp"

namespace circletop {

/// Circle sets with one marked circle.  cell(1,1) = 1 (the bare mark);
/// cell(N,1) = |C_{N-1}| + |M_{N-1}| for N >= 2 (wrap an unmarked set in
/// the mark, or wrap a marked set in a plain circle); cell(N,f>=2) pins
/// the marked factor and fills the rest from the C triangle.
Triangle m_triangle(int max_n);

/// The M row totals by the closed generating-function identity
/// M(z) = 1 + z C(z)^2 / (1 - z C(z)), evaluated with truncated series
/// arithmetic (the reciprocal expanded as a geometric sum).
Series m_series_identity(int max_n);

/// The subset of M where the marked circle is empty.  cell(N,1) equals the
/// previous row total of this same triangle; cell(N,f>=2) as in M.
Triangle mv_triangle(int max_n);

} // namespace circletop
