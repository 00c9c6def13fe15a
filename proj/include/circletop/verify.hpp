#pragma once

#include "circletop/golden.hpp"
#include "circletop/triangle.hpp"

#include <string>
#include <vector>

namespace circletop {

struct SuiteResult {
    std::string name;
    bool pass = true;
    long checks = 0;
    std::string detail; // first divergence, empty when passing
};

/// Compares a computed triangle against a reference table row by row.
/// The first divergent value is reported as (family, N, f, expected, got),
/// f = 0 standing for the row total.  max_n_cap <= 0 compares every
/// reference row.
SuiteResult compare_triangle(std::string suite, const Triangle& got, const GoldenTable& want,
                             int max_n_cap = 0);

/// Runs the full verification battery: the ten reference tables, the
/// auxiliary sequence prefixes, the generating-function identities, the
/// Euler-transform consistency checks, the structural identities, the
/// per-family brute-force oracles, flip clustering, and the codecs.
/// max_n <= 0 runs everything at full reference depth; a positive value
/// caps each suite.  Suite order and names are fixed.
std::vector<SuiteResult> run_verification(int max_n = 0);

} // namespace circletop
