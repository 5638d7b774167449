#ifndef PAFP_CLASSIFY_HPP
#define PAFP_CLASSIFY_HPP

#include "pafp/core.hpp"

#include <optional>
#include <string_view>
#include <vector>

namespace pafp {

/// Mutual position of two endpoint-distinct pairs {u,v}, {x,y} with u<v, x<y, u<x.
enum class PairRelation {
    Disjoint,  // u < v < x < y
    Nested,    // u < x < y < v
    Halving,   // u < x < v < y
};

enum class StructureClass {
    Disjoint,
    Nested,
    Halving,
    WellParenthesized,
    Ordered,
    Overlapping,
    General,
};

struct Classification {
    StructureClass kind = StructureClass::Disjoint;
    bool has_disjoint = false;
    bool has_nested = false;
    bool has_halving = false;
};

std::string_view to_string(PairRelation relation);
std::string_view to_string(StructureClass cls);
std::optional<StructureClass> parse_structure_class(std::string_view name);

/// Throws Error(SharedEndpoint) when the two pairs share a vertex.
PairRelation relate(ForbiddenPair a, ForbiddenPair b);

/// Exact flag match; no pairs or a single pair reports Disjoint.
StructureClass class_from_flags(bool has_disjoint, bool has_nested, bool has_halving);

/// O(k^2) over all couples. Requires endpoint-distinct pairs.
Classification classify_instance(const Instance& instance);

bool has_shared_endpoints(const Instance& instance);

struct SplitResult {
    Instance instance;
    std::vector<int> head;    // old vertex -> first vertex of its replacement path
    std::vector<int> tail;    // old vertex -> last vertex of its replacement path
    std::vector<int> origin;  // new vertex -> old vertex
};

/// Replaces every vertex carrying r > 1 pair ends by a path of r vertices and
/// hands each pair end its own path vertex, in ascending order of the partner.
/// In-edges enter the head, out-edges leave the tail, the source becomes the
/// head of the old source and the target the tail of the old target.
SplitResult split_shared_vertices(const Instance& instance);

}  // namespace pafp

#endif
