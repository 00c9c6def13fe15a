#pragma once

#include "circletop/expressions.hpp"
#include "circletop/series.hpp"
#include "circletop/triangle.hpp"

#include <optional>
#include <string>
#include <vector>

namespace circletop {

enum class OutputFormat { csv, tsv, json, bfile };

std::optional<OutputFormat> format_from_name(const std::string& name);

/// Rows "N<sep>total<sep>cells..." from the family's first published row;
/// bfile renders "N total" pairs; json one object per row.  All integers
/// in full decimal.
std::string render_table(const Triangle& t, OutputFormat fmt);

/// Values indexed from first_index.  csv/tsv render one delimited line,
/// bfile renders "n value" lines.
std::string render_sequence(const std::string& name, const IntSeq& values, int first_index,
                            OutputFormat fmt);

/// One expression per line, factor count first, sorted by canonical key.
/// bfile is not meaningful here and is refused.
std::string render_enumeration(const Enumeration& en, OutputFormat fmt);

/// One flip cluster per line: index, size, members.
std::string render_clusters(int n, const std::vector<std::vector<Expr>>& clusters,
                            OutputFormat fmt);

} // namespace circletop
