#ifndef PAFP_REDUCTIONS_HPP
#define PAFP_REDUCTIONS_HPP

#include "pafp/classify.hpp"
#include "pafp/core.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace pafp {

// ---------------------------------------------------------------------------
// halving -> nested

/// Instance k (1-based) of the halving-to-nested family. The first part is
/// every vertex up to the last left member x_K, the second part the rest.
/// Crossing edges are removed, second-part edges reversed, the second part
/// laid out in reverse after the first, a new terminal t' appended, and for
/// each crossing edge (x_k, y) the edges (x_k, t) and (y, t') are added.
/// Source stays, target becomes t'.
Instance reduce_halving_to_nested(const Instance& instance, int k);

/// Maps a vertex of a reduced instance back to the halving instance.
/// Returns -1 for the new terminal.
int nested_to_halving_vertex(const Instance& halving, int reduced_vertex);

// ---------------------------------------------------------------------------
// 3-SAT gadgets

enum class TagKind { Source, Target, Chain, Var, Lit };

/// What a gadget vertex stands for. Split copies keep the tag of the vertex
/// they were cut from and record that vertex and their step along the path.
struct VertexTag {
    TagKind kind = TagKind::Chain;
    int a = 0;              // chain index | variable k | clause i
    int b = 0;              // polarity (1 = positive) | literal slot j
    int block = -1;         // ordered gadget: block index, B blocks even
    bool isolated = false;  // the unusable vertex of a literal block
    int origin = -1;        // pre-split vertex, -1 when not split
    int step = -1;
};

/// "chain(i)", "var(k,pos)", "lit(i,j)", "split(orig,step)", ...
std::string to_string(const VertexTag& tag);

struct Gadget {
    Instance instance;
    std::vector<VertexTag> tags;  // one per vertex
};

/// Variable stage k: T_k, F_k between chain nodes; clause stage i: three
/// literal vertices between chain nodes. Pairs tie each literal occurrence to
/// the variable vertex of the opposite value.
Gadget sat3_to_overlapping(const Formula3Sat& formula);

/// Literal-consistency blocks; the output is already split and nesting-free.
Gadget sat3_to_ordered(const Formula3Sat& formula);

struct BlockDescriptor {
    enum class Kind { Plain, Literal } kind = Kind::Plain;
    Literal literal;            // Literal blocks only
    int num_vars = 0;
    std::vector<int> positive;  // vertex of x_k, index k-1
    std::vector<int> negative;  // vertex of not x_k
    int isolated = -1;          // Literal blocks only
};

/// Block layout of the ordered gadget before splitting, in layout order
/// (B^0, three literal blocks of clause 1, B^1, ...).
std::vector<BlockDescriptor> ordered_gadget_blocks(const Formula3Sat& formula);

/// Round-robin interleaving g1[0], g2[0], g3[0], g1[1], ...
/// Throws Error(LengthMismatch) unless the three sequences have equal length.
std::vector<int> zip_blocks(const std::vector<int>& g1, const std::vector<int>& g2,
                            const std::vector<int>& g3);

/// Reads the truth assignment a gadget path commits to. Overlapping gadget:
/// the variable vertices on the path; ordered gadget: the first block.
std::vector<bool> decode_assignment(const Gadget& gadget, const Path& path, int num_vars);

// ---------------------------------------------------------------------------
// random instances

struct GenOptions {
    StructureClass cls = StructureClass::WellParenthesized;
    int n = 16;
    int pairs = 3;
    double edge_density = 0.2;
    std::uint64_t seed = 1;
    bool backbone = true;  // chain edges i -> i+1
};

/// Endpoint-distinct pairs whose flag triple matches `cls` exactly; source 0,
/// target n-1. Deterministic per seed. Throws Error(Infeasible).
Instance gen_random(const GenOptions& options);

/// Minimum pair count for which `cls` can be produced flag-exactly.
int min_pairs_for_class(StructureClass cls);

}  // namespace pafp

#endif
