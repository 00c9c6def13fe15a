#include "circletop/triangle.hpp"

namespace circletop {

std::string family_name(FamilyId f) {
    switch (f) {
    case FamilyId::P: return "P";
    case FamilyId::C: return "C";
    case FamilyId::KC: return "kC";
    case FamilyId::M: return "M";
    case FamilyId::Mv: return "Mv";
    case FamilyId::X: return "X";
    case FamilyId::Xt: return "Xt";
    case FamilyId::X2: return "X2";
    case FamilyId::X3: return "X3";
    }
    return "?";
}

std::optional<FamilyId> family_from_name(const std::string& name) {
    if (name == "P") return FamilyId::P;
    if (name == "C") return FamilyId::C;
    if (name == "kC" || name == "KC") return FamilyId::KC;
    if (name == "M") return FamilyId::M;
    if (name == "Mv" || name == "MV") return FamilyId::Mv;
    if (name == "X") return FamilyId::X;
    if (name == "Xt" || name == "XT") return FamilyId::Xt;
    if (name == "X2" || name == "2X") return FamilyId::X2;
    if (name == "X3" || name == "3X") return FamilyId::X3;
    return std::nullopt;
}

int family_first_row(FamilyId f) {
    switch (f) {
    case FamilyId::X: return 2;
    default: return 1;
    }
}

Triangle::Triangle(FamilyId family, int max_n, int k)
    : family_(family), k_(k), max_n_(max_n) {
    if (max_n < 1)
        throw ContractViolation("triangle needs max_n >= 1");
    if (k < 1)
        throw ContractViolation("shape count must be >= 1");
    cells_.resize(static_cast<std::size_t>(max_n) + 1);
    for (int n = 1; n <= max_n; ++n)
        cells_[n].assign(static_cast<std::size_t>(n), Int(0));
    totals_.assign(static_cast<std::size_t>(max_n) + 1, Int(0));
}

const Int& Triangle::cell(int n, int f) const {
    if (n < 1 || n > max_n_ || f < 1 || f > n)
        throw ContractViolation("triangle cell (" + std::to_string(n) + "," + std::to_string(f) +
                                ") out of range");
    return cells_[n][static_cast<std::size_t>(f) - 1];
}

const Int& Triangle::row_total(int n) const {
    if (n < 0 || n > max_n_)
        throw ContractViolation("triangle row " + std::to_string(n) + " out of range");
    return totals_[n];
}

void Triangle::set_cell(int n, int f, Int v) {
    if (n < 1 || n > max_n_ || f < 1 || f > n)
        throw ContractViolation("triangle cell out of range");
    cells_[n][static_cast<std::size_t>(f) - 1] = std::move(v);
}

void Triangle::set_row_total(int n, Int v) {
    if (n < 0 || n > max_n_)
        throw ContractViolation("triangle row out of range");
    totals_[n] = std::move(v);
}

void Triangle::total_row(int n) {
    Int sum = 0;
    for (int f = 1; f <= n; ++f)
        sum += cell(n, f);
    set_row_total(n, std::move(sum));
}

} // namespace circletop
