#pragma once

#include "circletop/bigint.hpp"
#include "circletop/triangle.hpp"

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace circletop {

/// Malformed or ambiguous serialized expression.
class ParseError : public std::runtime_error {
public:
    explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

/// Node kinds of the expression tree, in canonical rank order.
enum class NodeKind : std::uint8_t {
    circle = 0,  // plain circle, one child forest
    marked = 1,  // the marked circle, one child forest
    pair = 2,    // two intersecting circles; regions (reg3, reg2, reg1)
    triple1 = 3, // full-overlap spot; (r1, r12, r2, r23, r3, r13, center)
    triple2 = 4, // torn spot (center uncovered); same slots as triple1
    triple3 = 5, // linear chain; (r1, r12, r2, r23, r3)
    triple4 = 6, // compressed chain; (r1, r12, r123, r23, r3, upper, lower)
    triple5 = 7, // shrunk-center chain; same slots as triple4
    triple6 = 8, // asymmetric bundle; (r1, r12, r123, r23, r2)
};

struct Node;

/// Unordered multiset of sibling nodes, stored sorted by canonical key.
using Forest = std::vector<Node>;

struct Node {
    NodeKind kind = NodeKind::circle;
    std::vector<Forest> regions;

    bool operator==(const Node&) const;
};

/// A whole expression: the top-level forest.  Its size is the factor
/// count f; the empty forest is the 0-circle expression.
struct Expr {
    Forest factors;

    bool operator==(const Expr&) const = default;
    int factor_count() const { return static_cast<int>(factors.size()); }
};

int region_count(NodeKind k);
int own_circle_count(NodeKind k); // circles the node itself contributes
int circle_count(const Node& n);
int circle_count(const Expr& e);

/// Canonical ordering key: a kind-tagged token stream with children
/// pre-sorted, compared lexicographically.  Kind rank is the NodeKind
/// order (circle < marked < pair < triple1 < ... < triple6).
using Key = std::vector<std::int16_t>;
Key key_of(const Node& n);
Key key_of(const Forest& f);

/// Recursively sorts every forest by key and reduces pair/triple nodes to
/// the minimum image under their symmetry group.  Idempotent.
Node canonical_node(Node n);
Expr canonicalize(Expr e);

/// ASCII forms: circles "(...)", the marked circle "[...]", the pair
/// compound "[reg3[reg2]reg1]" (family context disambiguates the two
/// bracket meanings), and triple compounds "<k|regions...|k>" with the
/// kind digit k -- the triple syntax is this library's own convention.
std::string serialize(const Node& n);
std::string serialize(const Expr& e);

/// Token-level well-formedness of a ()[] string: balanced, type-matched,
/// and prefix-dominant.  Any other character fails.
bool validate_tokens(std::string_view s);

/// Parses a ()[] string.  For families C/M/Mv a bracket is the marked
/// circle; for the X families it is a pair compound.  parse_raw keeps the
/// written factor order; parse canonicalizes.
Expr parse_raw(std::string_view s, FamilyId family);
Expr parse(std::string_view s, FamilyId family);

/// Binary code of a circles-only expression: ( -> 1, ) -> 0, most
/// significant bit first.  Nonempty codes are always even.
struct BinaryCode {
    std::string bits;
    Int value;
};
BinaryCode encode_binary(std::string_view circles);
BinaryCode encode_binary(const Expr& e);
Expr decode_binary(std::string_view bits);

/// Base-4 code of a circles+mark expression: ) ( ] [ -> 0 1 2 3.
std::string encode_base4(std::string_view expr);
std::string encode_base4(const Expr& e);
Expr decode_base4(std::string_view digits);

/// Exhaustive enumeration of the canonical expressions of one family with
/// exactly n circles, sorted by canonical key.
struct Enumeration {
    FamilyId family;
    int n = 0;
    std::vector<Expr> exprs;
};

/// Largest n enumerate_family accepts for the family; beyond it the call
/// refuses with BudgetExceeded.
int enumeration_budget(FamilyId family);

Enumeration enumerate_family(FamilyId family, int n);

/// Counts by factor count: entry f-1 holds the number of enumerated
/// expressions with f factors, f = 1..n.
std::vector<Int> factor_histogram(const Enumeration& en);

/// Sphere-embedding move on a plain-circle expression: choose factor B
/// (a circle), wrap all other factors A in a new circle and release B's
/// children: A.(B) -> (A).B, canonicalized.
Expr flip(const Expr& e, int factor_index);

inline constexpr int flip_cluster_budget = 9;

/// Partition of the n-circle plain expressions into classes mutually
/// reachable by flips; the class count equals the number of sphere
/// topologies.
std::vector<std::vector<Expr>> flip_clusters(int n);

} // namespace circletop
