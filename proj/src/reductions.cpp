#include "pafp/reductions.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <sstream>

namespace pafp {

// ---------------------------------------------------------------------------
// halving -> nested

namespace {

void require_halving(const Instance& instance)
{
    if (has_shared_endpoints(instance))
        throw Error(ErrorCode::SharedEndpoint, "halving reduction needs endpoint-distinct pairs");
    const auto c = classify_instance(instance);
    const bool ok = c.kind == StructureClass::Halving ||
                    (c.kind == StructureClass::Disjoint && instance.pairs.size() <= 1);
    if (!ok)
        throw Error(ErrorCode::WrongClass, "halving reduction does not apply: instance is " +
                                               std::string(to_string(c.kind)));
}

int last_left(const Instance& instance)
{
    int b = -1;
    for (const auto& p : instance.pairs)
        b = std::max(b, p.left);
    return b;
}

}  // namespace

Instance reduce_halving_to_nested(const Instance& instance, int k)
{
    require_halving(instance);
    const int count = static_cast<int>(instance.pairs.size());
    if (k < 1 || k > count)
        throw Error(ErrorCode::NoSuchPair,
                    "pair index " + std::to_string(k) + " outside 1.." + std::to_string(count));
    const int n = instance.n;
    const int b = last_left(instance);
    if (instance.source > b || instance.target <= b)
        throw Error(ErrorCode::WrongClass,
                    "source must lie in the first part and target in the second part");

    const int xk = instance.pairs[k - 1].left;  // pairs are sorted by left member
    const auto map = [&](int v) { return v <= b ? v : b + 1 + (n - 1 - v); };
    const int t = map(instance.target);
    const int t_new = n;

    std::vector<Edge> edges;
    for (const auto& e : instance.edges) {
        if (e.to <= b) {
            edges.push_back(e);
        } else if (e.from > b) {
            edges.push_back({map(e.to), map(e.from)});
        } else if (e.from == xk) {
            edges.push_back({xk, t});
            edges.push_back({map(e.to), t_new});
        }
    }
    std::vector<ForbiddenPair> pairs;
    for (const auto& p : instance.pairs)
        pairs.push_back({p.left, map(p.right)});
    return make_instance(n + 1, std::move(edges), std::move(pairs), instance.source, t_new);
}

int nested_to_halving_vertex(const Instance& halving, int reduced_vertex)
{
    const int b = last_left(halving);
    const int n = halving.n;
    if (reduced_vertex == n)
        return -1;
    if (reduced_vertex <= b)
        return reduced_vertex;
    return n - 1 - (reduced_vertex - b - 1);
}

// ---------------------------------------------------------------------------
// gadgets

std::string to_string(const VertexTag& tag)
{
    std::ostringstream os;
    if (tag.origin >= 0) {
        os << "split(" << tag.origin << "," << tag.step << ") ";
    }
    switch (tag.kind) {
    case TagKind::Source: os << "source"; break;
    case TagKind::Target: os << "target"; break;
    case TagKind::Chain: os << "chain(" << tag.a << ")"; break;
    case TagKind::Var: os << "var(" << tag.a << "," << (tag.b ? "pos" : "neg") << ")"; break;
    case TagKind::Lit: os << "lit(" << tag.a << "," << tag.b << ")"; break;
    }
    if (tag.block >= 0)
        os << " block(" << tag.block << ")";
    if (tag.isolated)
        os << " isolated";
    return os.str();
}

Gadget sat3_to_overlapping(const Formula3Sat& formula)
{
    if (const auto errors = validate(formula); !errors.empty())
        throw Error(ErrorCode::Semantic, errors.front());
    const int m = formula.num_vars;
    const int clauses = static_cast<int>(formula.clauses.size());

    Gadget g;
    auto add = [&](VertexTag tag) {
        g.tags.push_back(tag);
        return static_cast<int>(g.tags.size()) - 1;
    };
    std::vector<Edge> edges;
    std::vector<int> t_vertex(m + 1), f_vertex(m + 1);

    int chain = 0;
    int prev = add({TagKind::Chain, chain++});
    const int s = prev;
    for (int k = 1; k <= m; ++k) {
        t_vertex[k] = add({TagKind::Var, k, 1});
        f_vertex[k] = add({TagKind::Var, k, 0});
        const int next = add({TagKind::Chain, chain++});
        for (int x : {t_vertex[k], f_vertex[k]}) {
            edges.push_back({prev, x});
            edges.push_back({x, next});
        }
        prev = next;
    }
    std::vector<ForbiddenPair> pairs;
    for (int i = 1; i <= clauses; ++i) {
        int lits[3];
        for (int j = 1; j <= 3; ++j)
            lits[j - 1] = add({TagKind::Lit, i, j});
        const int next = add({TagKind::Chain, chain++});
        for (int j = 0; j < 3; ++j) {
            edges.push_back({prev, lits[j]});
            edges.push_back({lits[j], next});
            const auto& lit = formula.clauses[i - 1][j];
            // the literal's vertex conflicts with the opposite value of its variable
            pairs.push_back({lit.negated ? t_vertex[lit.var] : f_vertex[lit.var], lits[j]});
        }
        prev = next;
    }
    g.instance = make_instance(static_cast<int>(g.tags.size()), std::move(edges), std::move(pairs),
                               s, prev);
    return g;
}

std::vector<int> zip_blocks(const std::vector<int>& g1, const std::vector<int>& g2,
                            const std::vector<int>& g3)
{
    if (g1.size() != g2.size() || g1.size() != g3.size())
        throw Error(ErrorCode::LengthMismatch, "zipped blocks must have equal length");
    std::vector<int> out;
    out.reserve(3 * g1.size());
    for (std::size_t i = 0; i < g1.size(); ++i) {
        out.push_back(g1[i]);
        out.push_back(g2[i]);
        out.push_back(g3[i]);
    }
    return out;
}

namespace {

struct OrderedLayout {
    std::vector<BlockDescriptor> blocks;
    std::vector<VertexTag> tags;
    int source = 0;
    int target = 0;
};

// Local slot order inside a block: plain blocks list not-x_k before x_k,
// literal blocks x_k before not-x_k.
bool slot_is_positive(BlockDescriptor::Kind kind, int slot)
{
    const bool first = slot % 2 == 0;
    return kind == BlockDescriptor::Kind::Literal ? first : !first;
}

OrderedLayout layout_ordered(const Formula3Sat& formula)
{
    if (const auto errors = validate(formula); !errors.empty())
        throw Error(ErrorCode::Semantic, errors.front());
    if (formula.clauses.empty())
        throw Error(ErrorCode::Semantic, "ordered gadget needs at least one clause");
    const int m = formula.num_vars;
    const int clauses = static_cast<int>(formula.clauses.size());

    OrderedLayout L;
    L.tags.push_back({TagKind::Source});
    L.source = 0;

    auto make_block = [&](BlockDescriptor::Kind kind, Literal lit) {
        BlockDescriptor d;
        d.kind = kind;
        d.literal = lit;
        d.num_vars = m;
        d.positive.assign(m, -1);
        d.negative.assign(m, -1);
        return d;
    };
    auto place = [&](BlockDescriptor& d, int slot, int block_index) {
        const int vertex = static_cast<int>(L.tags.size());
        const int k = slot / 2 + 1;
        const bool pos = slot_is_positive(d.kind, slot);
        (pos ? d.positive : d.negative)[k - 1] = vertex;
        VertexTag tag{TagKind::Var, k, pos ? 1 : 0, block_index};
        if (d.kind == BlockDescriptor::Kind::Literal && k == d.literal.var &&
            pos == d.literal.negated) {
            tag.isolated = true;
            d.isolated = vertex;
        }
        L.tags.push_back(tag);
    };
    auto add_plain = [&]() {
        auto d = make_block(BlockDescriptor::Kind::Plain, {});
        const int index = static_cast<int>(L.blocks.size());
        for (int slot = 0; slot < 2 * m; ++slot)
            place(d, slot, index);
        L.blocks.push_back(std::move(d));
    };

    add_plain();
    for (int i = 0; i < clauses; ++i) {
        const int first = static_cast<int>(L.blocks.size());
        std::vector<BlockDescriptor> three;
        std::vector<int> seq[3];
        for (int j = 0; j < 3; ++j) {
            three.push_back(make_block(BlockDescriptor::Kind::Literal, formula.clauses[i][j]));
            for (int slot = 0; slot < 2 * m; ++slot)
                seq[j].push_back(j * 2 * m + slot);
        }
        for (int token : zip_blocks(seq[0], seq[1], seq[2]))
            place(three[token / (2 * m)], token % (2 * m), first + token / (2 * m));
        for (auto& d : three)
            L.blocks.push_back(std::move(d));
        add_plain();
    }
    L.target = static_cast<int>(L.tags.size());
    L.tags.push_back({TagKind::Target});
    return L;
}

std::vector<int> layer(const BlockDescriptor& d, int k)
{
    std::vector<int> out;
    for (int v : {d.negative[k - 1], d.positive[k - 1]})
        if (v != d.isolated)
            out.push_back(v);
    return out;
}

}  // namespace

std::vector<BlockDescriptor> ordered_gadget_blocks(const Formula3Sat& formula)
{
    return layout_ordered(formula).blocks;
}

Gadget sat3_to_ordered(const Formula3Sat& formula)
{
    const auto L = layout_ordered(formula);
    const int m = formula.num_vars;
    const int clauses = static_cast<int>(formula.clauses.size());
    const auto plain = [&](int i) -> const BlockDescriptor& { return L.blocks[4 * i]; };
    const auto literal = [&](int i, int j) -> const BlockDescriptor& {
        return L.blocks[4 * (i - 1) + 1 + j];
    };

    std::vector<Edge> edges;
    auto connect = [&](const std::vector<int>& from, const std::vector<int>& to) {
        for (int a : from)
            for (int b : to)
                edges.push_back({a, b});
    };
    for (const auto& d : L.blocks)
        for (int k = 1; k < m; ++k)
            connect(layer(d, k), layer(d, k + 1));
    connect({L.source}, layer(plain(0), 1));
    for (int i = 1; i <= clauses; ++i) {
        for (int j = 0; j < 3; ++j) {
            connect(layer(plain(i - 1), m), layer(literal(i, j), 1));
            connect(layer(literal(i, j), m), layer(plain(i), 1));
        }
    }
    connect(layer(plain(clauses), m), {L.target});

    std::vector<ForbiddenPair> pairs;
    for (int i = 1; i <= clauses; ++i) {
        for (int j = 0; j < 3; ++j) {
            const auto& d = literal(i, j);
            for (int k = 0; k < m; ++k) {
                pairs.push_back({plain(i - 1).negative[k], d.positive[k]});
                pairs.push_back({d.positive[k], plain(i).negative[k]});
                pairs.push_back({plain(i - 1).positive[k], d.negative[k]});
                pairs.push_back({d.negative[k], plain(i).positive[k]});
            }
        }
    }
    const auto raw = make_instance(static_cast<int>(L.tags.size()), std::move(edges),
                                   std::move(pairs), L.source, L.target);
    const auto split = split_shared_vertices(raw);

    Gadget g;
    g.instance = split.instance;
    g.tags.reserve(split.origin.size());
    for (int v = 0; v < static_cast<int>(split.origin.size()); ++v) {
        const int o = split.origin[v];
        VertexTag tag = L.tags[o];
        if (split.tail[o] > split.head[o]) {
            tag.origin = o;
            tag.step = v - split.head[o];
        }
        g.tags.push_back(tag);
    }
    return g;
}

std::vector<bool> decode_assignment(const Gadget& gadget, const Path& path, int num_vars)
{
    std::vector<bool> assignment(num_vars, false);
    for (int v : path) {
        const auto& tag = gadget.tags.at(v);
        if (tag.kind == TagKind::Var && tag.block <= 0 && tag.a >= 1 && tag.a <= num_vars)
            assignment[tag.a - 1] = tag.b == 1;
    }
    return assignment;
}

// ---------------------------------------------------------------------------
// random instances

int min_pairs_for_class(StructureClass cls)
{
    switch (cls) {
    case StructureClass::Disjoint: return 0;
    case StructureClass::Nested:
    case StructureClass::Halving: return 2;
    default: return 3;
    }
}

namespace {

// Random bracket word over k pairs; returns the position of each token's
// partner, matching closers LIFO (no halving) or FIFO (no nesting).
std::vector<ForbiddenPair> bracket_pairs(int k, bool fifo, const std::vector<int>& pos,
                                         std::mt19937_64& rng)
{
    std::vector<ForbiddenPair> out;
    std::vector<int> open;  // token indices
    std::size_t head = 0;
    int opened = 0;
    std::bernoulli_distribution coin(0.5);
    for (int token = 0; token < 2 * k; ++token) {
        const bool can_open = opened < k;
        const bool can_close = open.size() > head;
        if (can_open && (!can_close || coin(rng))) {
            open.push_back(token);
            ++opened;
        } else if (fifo) {
            out.push_back({pos[open[head++]], pos[token]});
        } else {
            out.push_back({pos[open.back()], pos[token]});
            open.pop_back();
        }
    }
    return out;
}

}  // namespace

Instance gen_random(const GenOptions& o)
{
    const int k = o.pairs;
    if (k < 0 || 2 * k > o.n || k < min_pairs_for_class(o.cls) || o.n < 2)
        throw Error(ErrorCode::Infeasible, "cannot place " + std::to_string(k) + " " +
                                               std::string(to_string(o.cls)) + " pairs on " +
                                               std::to_string(o.n) + " vertices");
    std::mt19937_64 rng(o.seed);

    std::vector<int> pos(o.n);
    std::iota(pos.begin(), pos.end(), 0);
    std::shuffle(pos.begin(), pos.end(), rng);
    pos.resize(2 * k);
    std::sort(pos.begin(), pos.end());

    std::vector<ForbiddenPair> pairs;
    bool placed = false;
    for (int attempt = 0; attempt < 2000 && !placed; ++attempt) {
        pairs.clear();
        switch (o.cls) {
        case StructureClass::Disjoint:
            for (int i = 0; i < k; ++i)
                pairs.push_back({pos[2 * i], pos[2 * i + 1]});
            break;
        case StructureClass::Nested:
            for (int i = 0; i < k; ++i)
                pairs.push_back({pos[i], pos[2 * k - 1 - i]});
            break;
        case StructureClass::Halving:
            for (int i = 0; i < k; ++i)
                pairs.push_back({pos[i], pos[k + i]});
            break;
        case StructureClass::WellParenthesized:
            pairs = bracket_pairs(k, false, pos, rng);
            break;
        case StructureClass::Ordered:
            pairs = bracket_pairs(k, true, pos, rng);
            break;
        case StructureClass::Overlapping: {
            std::vector<int> rights(pos.begin() + k, pos.end());
            std::shuffle(rights.begin(), rights.end(), rng);
            for (int i = 0; i < k; ++i)
                pairs.push_back({pos[i], rights[i]});
            break;
        }
        case StructureClass::General: {
            auto p = pos;
            std::shuffle(p.begin(), p.end(), rng);
            for (int i = 0; i < k; ++i)
                pairs.push_back({std::min(p[2 * i], p[2 * i + 1]), std::max(p[2 * i], p[2 * i + 1])});
            break;
        }
        }
        const auto probe = make_instance(o.n, {}, pairs, 0, o.n - 1);
        placed = classify_instance(probe).kind == o.cls;
    }
    if (!placed)
        throw Error(ErrorCode::Infeasible, "no " + std::string(to_string(o.cls)) +
                                               " pair layout found for k=" + std::to_string(k));

    std::vector<Edge> edges;
    std::bernoulli_distribution pick(std::clamp(o.edge_density, 0.0, 1.0));
    for (int u = 0; u < o.n; ++u) {
        for (int v = u + 1; v < o.n; ++v) {
            if ((o.backbone && v == u + 1) || pick(rng))
                edges.push_back({u, v});
        }
    }
    return make_instance(o.n, std::move(edges), std::move(pairs), 0, o.n - 1);
}

}  // namespace pafp
