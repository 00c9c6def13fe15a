#pragma once

#include "circletop/bigint.hpp"
#include "circletop/triangle.hpp"

#include <map>
#include <string>
#include <vector>

namespace circletop {

/// One reference table parsed from the bundled data files.
struct GoldenTable {
    FamilyId family = FamilyId::C;
    int k = 1;
    int first_n = 1;
    int max_n = 0;
    std::map<int, std::vector<Int>> rows; // n -> total, c1 .. cn

    const Int& total(int n) const;
    const Int& cell(int n, int f) const;
};

/// Reference table of a family (k selects the shape count for KC).
const GoldenTable& golden_table(FamilyId family, int k = 1);

/// Named reference sequence prefix (D, Dhat, Dbar, Dtilde, envelope,
/// clusters), indexed from 0.
const std::vector<Int>& golden_sequence(const std::string& name);

} // namespace circletop
