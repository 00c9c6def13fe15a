#include "circletop/golden.hpp"

#include <sstream>

namespace circletop::golden_data {
extern const char* const table_p;
extern const char* const table_c;
extern const char* const table_c2;
extern const char* const table_c3;
extern const char* const table_m;
extern const char* const table_mv;
extern const char* const table_x;
extern const char* const table_xt;
extern const char* const table_x2;
extern const char* const table_x3;
extern const char* const sequences;
} // namespace circletop::golden_data

namespace circletop {

const Int& GoldenTable::total(int n) const {
    auto it = rows.find(n);
    if (it == rows.end())
        throw ContractViolation("golden table has no row " + std::to_string(n));
    return it->second[0];
}

const Int& GoldenTable::cell(int n, int f) const {
    auto it = rows.find(n);
    if (it == rows.end() || f < 1 || f > n)
        throw ContractViolation("golden table has no cell (" + std::to_string(n) + "," +
                                std::to_string(f) + ")");
    return it->second[static_cast<std::size_t>(f)];
}

namespace {

GoldenTable parse_table(FamilyId family, int k, const char* text) {
    GoldenTable t;
    t.family = family;
    t.k = k;
    std::istringstream in(text);
    std::string line;
    bool first = true;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#')
            continue;
        std::istringstream row(line);
        int n = 0;
        row >> n;
        std::vector<Int> values;
        std::string word;
        while (row >> word)
            values.emplace_back(word);
        if (static_cast<int>(values.size()) != n + 1)
            throw ContractViolation("golden row " + std::to_string(n) +
                                    " has the wrong cell count");
        if (first) {
            t.first_n = n;
            first = false;
        }
        t.max_n = n;
        t.rows.emplace(n, std::move(values));
    }
    return t;
}

std::map<std::string, std::vector<Int>> parse_sequences(const char* text) {
    std::map<std::string, std::vector<Int>> out;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#')
            continue;
        std::istringstream row(line);
        std::string name;
        row >> name;
        std::vector<Int> values;
        std::string word;
        while (row >> word)
            values.emplace_back(word);
        out.emplace(std::move(name), std::move(values));
    }
    return out;
}

} // namespace

const GoldenTable& golden_table(FamilyId family, int k) {
    static const GoldenTable p = parse_table(FamilyId::P, 1, golden_data::table_p);
    static const GoldenTable c = parse_table(FamilyId::C, 1, golden_data::table_c);
    static const GoldenTable c2 = parse_table(FamilyId::KC, 2, golden_data::table_c2);
    static const GoldenTable c3 = parse_table(FamilyId::KC, 3, golden_data::table_c3);
    static const GoldenTable m = parse_table(FamilyId::M, 1, golden_data::table_m);
    static const GoldenTable mv = parse_table(FamilyId::Mv, 1, golden_data::table_mv);
    static const GoldenTable x = parse_table(FamilyId::X, 1, golden_data::table_x);
    static const GoldenTable xt = parse_table(FamilyId::Xt, 1, golden_data::table_xt);
    static const GoldenTable x2 = parse_table(FamilyId::X2, 1, golden_data::table_x2);
    static const GoldenTable x3 = parse_table(FamilyId::X3, 1, golden_data::table_x3);

    switch (family) {
    case FamilyId::P: return p;
    case FamilyId::C: return c;
    case FamilyId::KC:
        if (k == 2) return c2;
        if (k == 3) return c3;
        throw ContractViolation("reference tables cover k = 2 and 3 only");
    case FamilyId::M: return m;
    case FamilyId::Mv: return mv;
    case FamilyId::X: return x;
    case FamilyId::Xt: return xt;
    case FamilyId::X2: return x2;
    case FamilyId::X3: return x3;
    }
    throw ContractViolation("unknown family");
}

const std::vector<Int>& golden_sequence(const std::string& name) {
    static const auto all = parse_sequences(golden_data::sequences);
    auto it = all.find(name);
    if (it == all.end())
        throw ContractViolation("no reference sequence named " + name);
    return it->second;
}

} // namespace circletop
