#include "circletop/expressions.hpp"

#include <algorithm>
#include <optional>
#include <set>
#include <utility>

namespace circletop {

bool Node::operator==(const Node& o) const {
    return kind == o.kind && regions == o.regions;
}

int region_count(NodeKind k) {
    switch (k) {
    case NodeKind::circle:
    case NodeKind::marked: return 1;
    case NodeKind::pair: return 3;
    case NodeKind::triple1:
    case NodeKind::triple2: return 7;
    case NodeKind::triple3: return 5;
    case NodeKind::triple4:
    case NodeKind::triple5: return 7;
    case NodeKind::triple6: return 5;
    }
    return 0;
}

int own_circle_count(NodeKind k) {
    switch (k) {
    case NodeKind::circle:
    case NodeKind::marked: return 1;
    case NodeKind::pair: return 2;
    default: return 3;
    }
}

int circle_count(const Node& n) {
    int total = own_circle_count(n.kind);
    for (const Forest& f : n.regions)
        for (const Node& child : f)
            total += circle_count(child);
    return total;
}

int circle_count(const Expr& e) {
    int total = 0;
    for (const Node& n : e.factors)
        total += circle_count(n);
    return total;
}

// Key tokens.  The separator must sort below every kind tag so that a
// region that is a proper prefix of another compares smaller, matching
// plain key comparison of the regions themselves.
namespace {

constexpr std::int16_t KEY_END = 0;
constexpr std::int16_t KEY_SEP = 1;

std::int16_t kind_tag(NodeKind k) { return static_cast<std::int16_t>(2 + static_cast<int>(k)); }

void append_key(const Node& n, Key& out);

void append_key(const Forest& f, Key& out) {
    for (const Node& n : f)
        append_key(n, out);
}

void append_key(const Node& n, Key& out) {
    out.push_back(kind_tag(n.kind));
    for (std::size_t i = 0; i < n.regions.size(); ++i) {
        if (i > 0)
            out.push_back(KEY_SEP);
        append_key(n.regions[i], out);
    }
    out.push_back(KEY_END);
}

// Symmetry groups as slot permutations; an image places regions[i] at
// slot perm[i].  Slot layouts are the ones documented in the header.
using PermList = std::vector<std::vector<int>>;

const PermList& symmetry_perms(NodeKind k) {
    static const PermList identity1{{0}};
    static const PermList pair_swap{{0, 1, 2}, {2, 1, 0}};
    // (r1, r12, r2, r23, r3, r13, center): the six outer slots are in
    // cyclic order around the diagram, so rotations shift by two and
    // reflections fix one slot of each type.
    static const PermList s3_on_7{
        {0, 1, 2, 3, 4, 5, 6}, {2, 3, 4, 5, 0, 1, 6}, {4, 5, 0, 1, 2, 3, 6},
        {2, 1, 0, 5, 4, 3, 6}, {4, 3, 2, 1, 0, 5, 6}, {0, 5, 4, 3, 2, 1, 6},
    };
    // (r1, r12, r2, r23, r3): end-to-end mirror.
    static const PermList mirror5{{0, 1, 2, 3, 4}, {4, 3, 2, 1, 0}};
    // (r1, r12, r123, r23, r3, upper, lower): left-right and up-down
    // mirrors act independently.
    static const PermList c2c2_on_7{
        {0, 1, 2, 3, 4, 5, 6},
        {4, 3, 2, 1, 0, 5, 6},
        {0, 1, 2, 3, 4, 6, 5},
        {4, 3, 2, 1, 0, 6, 5},
    };
    static const PermList trivial5{{0, 1, 2, 3, 4}};

    switch (k) {
    case NodeKind::circle:
    case NodeKind::marked: return identity1;
    case NodeKind::pair: return pair_swap;
    case NodeKind::triple1:
    case NodeKind::triple2: return s3_on_7;
    case NodeKind::triple3: return mirror5;
    case NodeKind::triple4:
    case NodeKind::triple5: return c2c2_on_7;
    case NodeKind::triple6: return trivial5;
    }
    return identity1;
}

// Minimum image under the node's symmetry group.  Regions must already be
// canonical; the key-minimal image is the canonical representative.
Node group_minimize(Node n) {
    const PermList& perms = symmetry_perms(n.kind);
    if (perms.size() <= 1)
        return n;
    Node best = n;
    Key best_key = key_of(best);
    for (std::size_t p = 1; p < perms.size(); ++p) {
        Node image;
        image.kind = n.kind;
        image.regions.resize(n.regions.size());
        for (std::size_t i = 0; i < n.regions.size(); ++i)
            image.regions[perms[p][i]] = n.regions[i];
        Key k = key_of(image);
        if (k < best_key) {
            best_key = std::move(k);
            best = std::move(image);
        }
    }
    return best;
}

void sort_forest(Forest& f) {
    std::vector<std::pair<Key, Node>> keyed;
    keyed.reserve(f.size());
    for (Node& n : f)
        keyed.emplace_back(key_of(n), std::move(n));
    std::sort(keyed.begin(), keyed.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    f.clear();
    for (auto& [k, n] : keyed)
        f.push_back(std::move(n));
}

} // namespace

Key key_of(const Node& n) {
    Key out;
    append_key(n, out);
    return out;
}

Key key_of(const Forest& f) {
    Key out;
    append_key(f, out);
    return out;
}

Node canonical_node(Node n) {
    if (static_cast<int>(n.regions.size()) != region_count(n.kind))
        throw ContractViolation("node has the wrong number of regions");
    for (Forest& f : n.regions) {
        for (Node& child : f)
            child = canonical_node(std::move(child));
        sort_forest(f);
    }
    return group_minimize(std::move(n));
}

Expr canonicalize(Expr e) {
    for (Node& n : e.factors)
        n = canonical_node(std::move(n));
    sort_forest(e.factors);
    return e;
}

namespace {

void serialize_node(const Node& n, std::string& out);

void serialize_forest(const Forest& f, std::string& out) {
    for (const Node& n : f)
        serialize_node(n, out);
}

void serialize_node(const Node& n, std::string& out) {
    switch (n.kind) {
    case NodeKind::circle:
        out += '(';
        serialize_forest(n.regions[0], out);
        out += ')';
        return;
    case NodeKind::marked:
        out += '[';
        serialize_forest(n.regions[0], out);
        out += ']';
        return;
    case NodeKind::pair:
        out += '[';
        serialize_forest(n.regions[0], out);
        out += '[';
        serialize_forest(n.regions[1], out);
        out += ']';
        serialize_forest(n.regions[2], out);
        out += ']';
        return;
    default: {
        const char digit =
            static_cast<char>('1' + static_cast<int>(n.kind) - static_cast<int>(NodeKind::triple1));
        out += '<';
        out += digit;
        out += '|';
        for (std::size_t i = 0; i < n.regions.size(); ++i) {
            if (i > 0)
                out += '|';
            serialize_forest(n.regions[i], out);
        }
        out += '|';
        out += digit;
        out += '>';
        return;
    }
    }
}

} // namespace

std::string serialize(const Node& n) {
    std::string out;
    serialize_node(n, out);
    return out;
}

std::string serialize(const Expr& e) {
    std::string out;
    serialize_forest(e.factors, out);
    return out;
}

bool validate_tokens(std::string_view s) {
    std::vector<char> want;
    for (char c : s) {
        switch (c) {
        case '(': want.push_back(')'); break;
        case '[': want.push_back(']'); break;
        case ')':
        case ']':
            if (want.empty() || want.back() != c)
                return false;
            want.pop_back();
            break;
        default:
            return false;
        }
    }
    return want.empty();
}

namespace {

struct TokenParser {
    std::string_view s;
    bool bracket_is_mark = true;
    std::vector<int> match;

    TokenParser(std::string_view text, FamilyId family) : s(text) {
        switch (family) {
        case FamilyId::P:
        case FamilyId::C:
        case FamilyId::M:
        case FamilyId::Mv: bracket_is_mark = true; break;
        case FamilyId::X:
        case FamilyId::Xt:
        case FamilyId::X2:
        case FamilyId::X3: bracket_is_mark = false; break;
        case FamilyId::KC:
            throw ContractViolation("the k-shape family has no single serialized alphabet");
        }
        match.assign(s.size(), -1);
        std::vector<int> stack;
        for (int i = 0; i < static_cast<int>(s.size()); ++i) {
            const char c = s[i];
            if (c == '(' || c == '[') {
                stack.push_back(i);
            } else if (c == ')' || c == ']') {
                if (stack.empty())
                    throw ParseError("unmatched closer at position " + std::to_string(i));
                const int open = stack.back();
                stack.pop_back();
                if ((c == ')') != (s[open] == '('))
                    throw ParseError("mismatched token types at position " + std::to_string(i));
                match[open] = i;
            } else {
                throw ParseError(std::string("unexpected character '") + c + "'");
            }
        }
        if (!stack.empty())
            throw ParseError("unmatched opener at position " + std::to_string(stack.back()));
    }

    Forest forest(int lo, int hi) {
        Forest out;
        int i = lo;
        while (i < hi) {
            const int m = match[i];
            if (m < 0 || m >= hi)
                throw ParseError("segment is not a sequence of complete groups at position " +
                                 std::to_string(i));
            if (s[i] == '(') {
                Node n;
                n.kind = NodeKind::circle;
                n.regions.push_back(forest(i + 1, m));
                out.push_back(std::move(n));
            } else if (bracket_is_mark) {
                Node n;
                n.kind = NodeKind::marked;
                n.regions.push_back(forest(i + 1, m));
                out.push_back(std::move(n));
            } else {
                out.push_back(pair_node(i, m));
            }
            i = m + 1;
        }
        return out;
    }

    std::optional<Forest> try_forest(int lo, int hi) {
        try {
            return forest(lo, hi);
        } catch (const ParseError&) {
            return std::nullopt;
        }
    }

    // A pair compound [reg3[reg2]reg1]: exactly one top-level bracket
    // group of the content can serve as the structural inner bracket.
    Node pair_node(int lo, int hi) {
        std::vector<std::pair<int, int>> groups;
        for (int i = lo + 1; i < hi; i = match[i] + 1) {
            if (match[i] < 0)
                throw ParseError("segment is not a sequence of complete groups at position " +
                                 std::to_string(i));
            if (s[i] == '[')
                groups.emplace_back(i, match[i]);
        }
        std::optional<Node> found;
        for (const auto& [a, b] : groups) {
            auto reg3 = try_forest(lo + 1, a);
            if (!reg3)
                continue;
            auto reg2 = try_forest(a + 1, b);
            if (!reg2)
                continue;
            auto reg1 = try_forest(b + 1, hi);
            if (!reg1)
                continue;
            if (found)
                throw ParseError("ambiguous pair compound at position " + std::to_string(lo));
            Node n;
            n.kind = NodeKind::pair;
            n.regions = {std::move(*reg3), std::move(*reg2), std::move(*reg1)};
            found = std::move(n);
        }
        if (!found)
            throw ParseError("no valid pair compound at position " + std::to_string(lo));
        return std::move(*found);
    }
};

} // namespace

Expr parse_raw(std::string_view s, FamilyId family) {
    TokenParser p(s, family);
    return Expr{p.forest(0, static_cast<int>(s.size()))};
}

Expr parse(std::string_view s, FamilyId family) {
    return canonicalize(parse_raw(s, family));
}

namespace {

void require_kinds(const Forest& f, bool allow_mark, const char* what) {
    for (const Node& n : f) {
        const bool ok =
            n.kind == NodeKind::circle || (allow_mark && n.kind == NodeKind::marked);
        if (!ok)
            throw ContractViolation(std::string(what) + " does not cover intersection nodes");
        for (const Forest& r : n.regions)
            require_kinds(r, allow_mark, what);
    }
}

} // namespace

BinaryCode encode_binary(std::string_view circles) {
    if (!validate_tokens(circles))
        throw ContractViolation("not a well-formed token string");
    BinaryCode out;
    out.value = 0;
    out.bits.reserve(circles.size());
    for (char c : circles) {
        if (c == '(') {
            out.bits += '1';
            out.value = out.value * 2 + 1;
        } else if (c == ')') {
            out.bits += '0';
            out.value = out.value * 2;
        } else {
            throw ContractViolation("binary code is defined for plain circles only");
        }
    }
    return out;
}

BinaryCode encode_binary(const Expr& e) {
    require_kinds(e.factors, false, "the binary code");
    return encode_binary(serialize(e));
}

Expr decode_binary(std::string_view bits) {
    std::string parens;
    parens.reserve(bits.size());
    for (char c : bits) {
        if (c == '1')
            parens += '(';
        else if (c == '0')
            parens += ')';
        else
            throw ParseError("binary code digits must be 0 or 1");
    }
    return parse(parens, FamilyId::C);
}

std::string encode_base4(std::string_view expr) {
    if (!validate_tokens(expr))
        throw ContractViolation("not a well-formed token string");
    std::string out;
    out.reserve(expr.size());
    for (char c : expr) {
        switch (c) {
        case ')': out += '0'; break;
        case '(': out += '1'; break;
        case ']': out += '2'; break;
        case '[': out += '3'; break;
        default: throw ContractViolation("base-4 code is defined for circles and one mark");
        }
    }
    return out;
}

std::string encode_base4(const Expr& e) {
    require_kinds(e.factors, true, "the base-4 code");
    return encode_base4(serialize(e));
}

Expr decode_base4(std::string_view digits) {
    std::string tokens;
    tokens.reserve(digits.size());
    for (char c : digits) {
        switch (c) {
        case '0': tokens += ')'; break;
        case '1': tokens += '('; break;
        case '2': tokens += ']'; break;
        case '3': tokens += '['; break;
        default: throw ParseError("base-4 code digits must be 0..3");
        }
    }
    return parse(tokens, FamilyId::M);
}

// ------------------------- enumeration -------------------------

namespace {

struct KeyedForest {
    Forest forest;
    Key key;
};

void sort_keyed(std::vector<KeyedForest>& v) {
    std::sort(v.begin(), v.end(), [](const KeyedForest& a, const KeyedForest& b) {
        return a.key < b.key;
    });
}

// Enumerates one closed species: every node kind in `kinds` may appear
// anywhere, regions are forests of the same species.
class SpeciesEngine {
public:
    SpeciesEngine(std::vector<NodeKind> kinds, int max_n) : kinds_(std::move(kinds)) {
        forests_.push_back({KeyedForest{{}, {}}});
        trees_.emplace_back();
        for (int w = 1; w <= max_n; ++w) {
            trees_.push_back(make_trees(w));
            forests_.push_back(make_forests(w));
        }
    }

    const std::vector<KeyedForest>& forests(int w) const { return forests_[w]; }
    const std::vector<Node>& trees(int w) const { return trees_[w]; }

private:
    std::vector<NodeKind> kinds_;
    std::vector<std::vector<Node>> trees_;
    std::vector<std::vector<KeyedForest>> forests_;

    void emit_pairs(int m, std::vector<Node>& out) const {
        // (reg3, reg2, reg1) with key(reg3) <= key(reg1).  The key order
        // does not follow the weight split, so every (a, b) composition is
        // visited and the key filter keeps each unordered pair once.
        for (int w2 = 0; w2 <= m; ++w2) {
            for (const KeyedForest& lens : forests_[w2]) {
                for (int a = 0; a <= m - w2; ++a) {
                    const int b = m - w2 - a;
                    for (const KeyedForest& left : forests_[a]) {
                        for (const KeyedForest& right : forests_[b]) {
                            if (left.key > right.key)
                                continue;
                            Node n;
                            n.kind = NodeKind::pair;
                            n.regions = {left.forest, lens.forest, right.forest};
                            out.push_back(std::move(n));
                        }
                    }
                }
            }
        }
    }

    void emit_triples(NodeKind kind, int m, std::vector<Node>& out) const {
        const int slots = region_count(kind);
        std::set<Key> seen;
        std::vector<const Forest*> chosen(slots);
        fill_slots(kind, m, 0, slots, chosen, seen, out);
    }

    void fill_slots(NodeKind kind, int rem, int slot, int slots,
                    std::vector<const Forest*>& chosen, std::set<Key>& seen,
                    std::vector<Node>& out) const {
        if (slot == slots) {
            if (rem != 0)
                return;
            Node n;
            n.kind = kind;
            n.regions.reserve(slots);
            for (const Forest* f : chosen)
                n.regions.push_back(*f);
            n = group_minimize(std::move(n));
            Key k = key_of(n);
            if (seen.insert(std::move(k)).second)
                out.push_back(std::move(n));
            return;
        }
        for (int w = (slot == slots - 1 ? rem : 0); w <= rem; ++w) {
            for (const KeyedForest& kf : forests_[w]) {
                chosen[slot] = &kf.forest;
                fill_slots(kind, rem - w, slot + 1, slots, chosen, seen, out);
            }
        }
    }

    std::vector<Node> make_trees(int w) const {
        std::vector<Node> out;
        for (NodeKind kind : kinds_) {
            const int m = w - own_circle_count(kind);
            if (m < 0)
                continue;
            switch (kind) {
            case NodeKind::circle:
            case NodeKind::marked:
                for (const KeyedForest& kf : forests_[m]) {
                    Node n;
                    n.kind = kind;
                    n.regions.push_back(kf.forest);
                    out.push_back(std::move(n));
                }
                break;
            case NodeKind::pair:
                emit_pairs(m, out);
                break;
            default:
                emit_triples(kind, m, out);
                break;
            }
        }
        std::sort(out.begin(), out.end(),
                  [](const Node& a, const Node& b) { return key_of(a) < key_of(b); });
        return out;
    }

    std::vector<KeyedForest> make_forests(int w) const {
        // Multisets as non-decreasing runs over the key-sorted tree list.
        std::vector<const Node*> flat;
        std::vector<int> weights;
        for (int tw = 1; tw <= w; ++tw)
            for (const Node& t : trees_[tw]) {
                flat.push_back(&t);
                weights.push_back(tw);
            }
        std::vector<std::size_t> order(flat.size());
        for (std::size_t i = 0; i < order.size(); ++i)
            order[i] = i;
        std::vector<Key> keys(flat.size());
        for (std::size_t i = 0; i < flat.size(); ++i)
            keys[i] = key_of(*flat[i]);
        std::sort(order.begin(), order.end(),
                  [&](std::size_t a, std::size_t b) { return keys[a] < keys[b]; });

        std::vector<KeyedForest> out;
        Forest acc;
        auto rec = [&](auto&& self, int rem, std::size_t start) -> void {
            if (rem == 0) {
                out.push_back(KeyedForest{acc, key_of(acc)});
                return;
            }
            for (std::size_t i = start; i < order.size(); ++i) {
                const std::size_t idx = order[i];
                if (weights[idx] > rem)
                    continue;
                acc.push_back(*flat[idx]);
                self(self, rem - weights[idx], i);
                acc.pop_back();
            }
        };
        rec(rec, w, 0);
        sort_keyed(out);
        return out;
    }
};

// Families with one distinguished object (the mark or the single
// intersecting pair): a forest holds exactly one special tree, all other
// content is plain circles.
class SpecialEngine {
public:
    SpecialEngine(FamilyId fam, int max_n) : fam_(fam), base_({NodeKind::circle}, max_n) {
        strees_.emplace_back();
        sforests_.emplace_back(); // no 0-circle expression carries the object
        for (int w = 1; w <= max_n; ++w) {
            strees_.push_back(make_special_trees(w));
            sforests_.push_back(make_special_forests(w));
        }
    }

    const std::vector<KeyedForest>& forests(int w) const { return sforests_[w]; }

private:
    FamilyId fam_;
    SpeciesEngine base_;
    std::vector<std::vector<Node>> strees_;
    std::vector<std::vector<KeyedForest>> sforests_;

    std::vector<Node> make_special_trees(int w) {
        std::vector<Node> out;
        if (fam_ == FamilyId::M || fam_ == FamilyId::Mv) {
            const bool void_mark = fam_ == FamilyId::Mv;
            if (!void_mark || w == 1) {
                for (const KeyedForest& kf : base_.forests(w - 1)) {
                    if (void_mark && !kf.forest.empty())
                        continue;
                    Node n;
                    n.kind = NodeKind::marked;
                    n.regions.push_back(kf.forest);
                    out.push_back(std::move(n));
                }
            }
        } else {
            // The single intersecting pair; its regions hold plain C
            // content, and the touching variant keeps the lens empty.
            const bool touching = fam_ == FamilyId::Xt;
            const int m = w - 2;
            if (m >= 0) {
                for (int w2 = 0; w2 <= (touching ? 0 : m); ++w2) {
                    for (const KeyedForest& lens : base_.forests(w2)) {
                        for (int a = 0; a <= m - w2; ++a) {
                            const int b = m - w2 - a;
                            for (const KeyedForest& left : base_.forests(a)) {
                                for (const KeyedForest& right : base_.forests(b)) {
                                    if (left.key > right.key)
                                        continue;
                                    Node n;
                                    n.kind = NodeKind::pair;
                                    n.regions = {left.forest, lens.forest, right.forest};
                                    out.push_back(std::move(n));
                                }
                            }
                        }
                    }
                }
            }
        }
        for (const KeyedForest& kf : sforests_[w - 1]) {
            Node n;
            n.kind = NodeKind::circle;
            n.regions.push_back(kf.forest);
            out.push_back(std::move(n));
        }
        return out;
    }

    std::vector<KeyedForest> make_special_forests(int w) {
        std::vector<KeyedForest> out;
        for (int sw = 1; sw <= w; ++sw) {
            for (const Node& t : strees_[sw]) {
                const Key tk = key_of(t);
                for (const KeyedForest& kf : base_.forests(w - sw)) {
                    Forest f = kf.forest;
                    auto pos = std::find_if(f.begin(), f.end(), [&](const Node& n) {
                        return tk < key_of(n);
                    });
                    f.insert(pos, t);
                    Key k = key_of(f);
                    out.push_back(KeyedForest{std::move(f), std::move(k)});
                }
            }
        }
        sort_keyed(out);
        return out;
    }
};

} // namespace

int enumeration_budget(FamilyId family) {
    switch (family) {
    case FamilyId::C: return 9;
    case FamilyId::M:
    case FamilyId::Mv:
    case FamilyId::X:
    case FamilyId::Xt:
    case FamilyId::X2: return 8;
    case FamilyId::X3: return 6;
    default: return 0;
    }
}

Enumeration enumerate_family(FamilyId family, int n) {
    if (family == FamilyId::P || family == FamilyId::KC)
        throw ContractViolation("enumeration covers the unordered single-alphabet families only");
    if (n < 0)
        throw ContractViolation("circle count must be nonnegative");
    const int budget = enumeration_budget(family);
    if (n > budget)
        throw BudgetExceeded("family " + family_name(family) + " enumeration is limited to n <= " +
                             std::to_string(budget));

    Enumeration result;
    result.family = family;
    result.n = n;

    auto collect = [&result](const std::vector<KeyedForest>& fs) {
        result.exprs.reserve(fs.size());
        for (const KeyedForest& kf : fs)
            result.exprs.push_back(Expr{kf.forest});
    };

    switch (family) {
    case FamilyId::C:
        collect(SpeciesEngine({NodeKind::circle}, n).forests(n));
        break;
    case FamilyId::X2:
        collect(SpeciesEngine({NodeKind::circle, NodeKind::pair}, n).forests(n));
        break;
    case FamilyId::X3:
        collect(SpeciesEngine({NodeKind::circle, NodeKind::pair, NodeKind::triple1,
                               NodeKind::triple2, NodeKind::triple3, NodeKind::triple4,
                               NodeKind::triple5, NodeKind::triple6},
                              n)
                    .forests(n));
        break;
    default:
        if (n >= 1)
            collect(SpecialEngine(family, n).forests(n));
        break;
    }
    return result;
}

std::vector<Int> factor_histogram(const Enumeration& en) {
    std::vector<Int> hist(static_cast<std::size_t>(std::max(en.n, 0)), Int(0));
    if (en.n == 0)
        return hist;
    for (const Expr& e : en.exprs) {
        const int f = e.factor_count();
        if (f < 1 || f > en.n)
            throw ContractViolation("enumerated expression has an impossible factor count");
        ++hist[f - 1];
    }
    return hist;
}

Expr flip(const Expr& e, int factor_index) {
    if (factor_index < 0 || factor_index >= e.factor_count())
        throw ContractViolation("flip factor index out of range");
    const Node& chosen = e.factors[factor_index];
    if (chosen.kind != NodeKind::circle)
        throw ContractViolation("flip needs a plain circle factor");

    Node wrap;
    wrap.kind = NodeKind::circle;
    wrap.regions.emplace_back();
    for (int i = 0; i < e.factor_count(); ++i)
        if (i != factor_index)
            wrap.regions[0].push_back(e.factors[i]);

    Expr out;
    out.factors = chosen.regions[0];
    out.factors.push_back(std::move(wrap));
    return canonicalize(std::move(out));
}

std::vector<std::vector<Expr>> flip_clusters(int n) {
    if (n > flip_cluster_budget)
        throw BudgetExceeded("flip clustering is limited to n <= " +
                             std::to_string(flip_cluster_budget));
    const Enumeration en = enumerate_family(FamilyId::C, n);
    const std::size_t count = en.exprs.size();
    std::vector<Key> keys(count);
    for (std::size_t i = 0; i < count; ++i)
        keys[i] = key_of(en.exprs[i].factors);

    std::vector<std::size_t> parent(count);
    for (std::size_t i = 0; i < count; ++i)
        parent[i] = i;
    auto find = [&parent](std::size_t v) {
        while (parent[v] != v) {
            parent[v] = parent[parent[v]];
            v = parent[v];
        }
        return v;
    };
    auto unite = [&](std::size_t a, std::size_t b) {
        a = find(a);
        b = find(b);
        if (a != b)
            parent[b] = a;
    };

    for (std::size_t i = 0; i < count; ++i) {
        for (int f = 0; f < en.exprs[i].factor_count(); ++f) {
            const Expr image = flip(en.exprs[i], f);
            const Key k = key_of(image.factors);
            const auto it = std::lower_bound(keys.begin(), keys.end(), k);
            if (it == keys.end() || *it != k)
                throw ContractViolation("flip image left the enumerated family");
            unite(i, static_cast<std::size_t>(it - keys.begin()));
        }
    }

    std::vector<std::vector<Expr>> clusters;
    std::vector<long> cluster_of(count, -1);
    for (std::size_t i = 0; i < count; ++i) {
        const std::size_t root = find(i);
        if (cluster_of[root] < 0) {
            cluster_of[root] = static_cast<long>(clusters.size());
            clusters.emplace_back();
        }
        clusters[cluster_of[root]].push_back(en.exprs[i]);
    }
    return clusters;
}

} // namespace circletop
