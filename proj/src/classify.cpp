#include "pafp/classify.hpp"

#include <algorithm>

namespace pafp {

std::string_view to_string(PairRelation relation)
{
    switch (relation) {
    case PairRelation::Disjoint: return "disjoint";
    case PairRelation::Nested: return "nested";
    case PairRelation::Halving: return "halving";
    }
    return "?";
}

std::string_view to_string(StructureClass cls)
{
    switch (cls) {
    case StructureClass::Disjoint: return "disjoint";
    case StructureClass::Nested: return "nested";
    case StructureClass::Halving: return "halving";
    case StructureClass::WellParenthesized: return "well-parenthesized";
    case StructureClass::Ordered: return "ordered";
    case StructureClass::Overlapping: return "overlapping";
    case StructureClass::General: return "general";
    }
    return "?";
}

std::optional<StructureClass> parse_structure_class(std::string_view name)
{
    for (auto cls : {StructureClass::Disjoint, StructureClass::Nested, StructureClass::Halving,
                     StructureClass::WellParenthesized, StructureClass::Ordered,
                     StructureClass::Overlapping, StructureClass::General})
        if (to_string(cls) == name)
            return cls;
    if (name == "wp")
        return StructureClass::WellParenthesized;
    return std::nullopt;
}

PairRelation relate(ForbiddenPair a, ForbiddenPair b)
{
    if (a.left > a.right)
        std::swap(a.left, a.right);
    if (b.left > b.right)
        std::swap(b.left, b.right);
    if (a.left == b.left || a.left == b.right || a.right == b.left || a.right == b.right ||
        a.left == a.right || b.left == b.right)
        throw Error(ErrorCode::SharedEndpoint,
                    "pairs {" + std::to_string(a.left) + "," + std::to_string(a.right) + "} and {" +
                        std::to_string(b.left) + "," + std::to_string(b.right) +
                        "} share an endpoint");
    if (b.left < a.left)
        std::swap(a, b);
    if (a.right < b.left)
        return PairRelation::Disjoint;
    if (b.right < a.right)
        return PairRelation::Nested;
    return PairRelation::Halving;
}

StructureClass class_from_flags(bool d, bool n, bool h)
{
    if (d && n && h)
        return StructureClass::General;
    if (n && h)
        return StructureClass::Overlapping;
    if (d && h)
        return StructureClass::Ordered;
    if (d && n)
        return StructureClass::WellParenthesized;
    if (h)
        return StructureClass::Halving;
    if (n)
        return StructureClass::Nested;
    return StructureClass::Disjoint;
}

bool has_shared_endpoints(const Instance& instance)
{
    std::vector<char> seen(instance.n, 0);
    for (const auto& p : instance.pairs) {
        if (p.left == p.right || seen[p.left] || seen[p.right])
            return true;
        seen[p.left] = seen[p.right] = 1;
    }
    return false;
}

Classification classify_instance(const Instance& instance)
{
    if (has_shared_endpoints(instance))
        throw Error(ErrorCode::SharedEndpoint,
                    "instance has vertices in several forbidden pairs; split them first");
    Classification c;
    const auto& ps = instance.pairs;
    for (std::size_t i = 0; i < ps.size(); ++i) {
        for (std::size_t j = i + 1; j < ps.size(); ++j) {
            switch (relate(ps[i], ps[j])) {
            case PairRelation::Disjoint: c.has_disjoint = true; break;
            case PairRelation::Nested: c.has_nested = true; break;
            case PairRelation::Halving: c.has_halving = true; break;
            }
        }
        if (c.has_disjoint && c.has_nested && c.has_halving)
            break;
    }
    c.kind = class_from_flags(c.has_disjoint, c.has_nested, c.has_halving);
    return c;
}

SplitResult split_shared_vertices(const Instance& instance)
{
    const int n = instance.n;
    // pair ends per vertex as (partner, pair index)
    std::vector<std::vector<std::pair<int, int>>> ends(n);
    for (int i = 0; i < static_cast<int>(instance.pairs.size()); ++i) {
        const auto& p = instance.pairs[i];
        ends[p.left].push_back({p.right, i});
        ends[p.right].push_back({p.left, i});
    }
    for (auto& e : ends)
        std::sort(e.begin(), e.end());

    SplitResult r;
    r.head.resize(n);
    r.tail.resize(n);
    int next = 0;
    for (int v = 0; v < n; ++v) {
        const int copies = std::max<int>(1, static_cast<int>(ends[v].size()));
        r.head[v] = next;
        r.tail[v] = next + copies - 1;
        for (int c = 0; c < copies; ++c)
            r.origin.push_back(v);
        next += copies;
    }

    std::vector<Edge> edges;
    edges.reserve(instance.edges.size() + (next - n));
    for (const auto& e : instance.edges)
        edges.push_back({r.tail[e.from], r.head[e.to]});
    for (int v = 0; v < n; ++v)
        for (int c = r.head[v]; c < r.tail[v]; ++c)
            edges.push_back({c, c + 1});

    // slot of pair i at vertex v: its rank among v's ends by partner position
    std::vector<ForbiddenPair> pairs(instance.pairs.size());
    std::vector<std::array<int, 2>> slot(instance.pairs.size(), {-1, -1});
    for (int v = 0; v < n; ++v) {
        for (int k = 0; k < static_cast<int>(ends[v].size()); ++k) {
            const int i = ends[v][k].second;
            const auto& p = instance.pairs[i];
            slot[i][v == p.left ? 0 : 1] = r.head[v] + k;
        }
    }
    for (std::size_t i = 0; i < pairs.size(); ++i)
        pairs[i] = {slot[i][0], slot[i][1]};

    r.instance = make_instance(next, std::move(edges), std::move(pairs), r.head[instance.source],
                               r.tail[instance.target]);
    return r;
}

}  // namespace pafp
