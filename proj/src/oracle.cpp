#include "pafp/dp_solvers.hpp"

#include "stopwatch.hpp"

#include <unordered_set>

namespace pafp {

namespace {

using Word = std::uint64_t;

struct StateHash {
    std::size_t operator()(const std::vector<Word>& key) const noexcept
    {
        std::size_t h = 0x9e3779b97f4a7c15ull;
        for (Word w : key) {
            h ^= w + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
        }
        return h;
    }
};

class Search {
public:
    Search(const Instance& instance, const OracleOptions& options)
        : inst_(instance), options_(options), adj_(adjacency(instance)),
          words_((instance.pairs.size() + 63) / 64), ends_(instance.n),
          alive_(instance.n, std::vector<Word>(words_, 0)),
          opens_(instance.n, std::vector<Word>(words_, 0)), to_target_(instance.n, 0)
    {
        for (int i = 0; i < static_cast<int>(instance.pairs.size()); ++i) {
            const auto& p = instance.pairs[i];
            ends_[p.left].push_back({i, p.right});
            ends_[p.right].push_back({i, p.left});
            opens_[p.left][i >> 6] |= Word{1} << (i & 63);
            for (int v = 0; v < p.right; ++v)
                alive_[v][i >> 6] |= Word{1} << (i & 63);
        }
        to_target_[instance.target] = 1;
        for (int v = instance.target; v >= 0; --v)
            if (to_target_[v])
                for (int w : adj_.in[v])
                    to_target_[w] = 1;
    }

    std::optional<Path> run()
    {
        std::vector<Word> mask(words_, 0);
        const int s = inst_.source;
        if (!enter(s, mask))
            return std::nullopt;
        path_.push_back(s);
        if (dfs(s, mask))
            return path_;
        return std::nullopt;
    }

    std::size_t states() const noexcept { return dead_.size(); }

private:
    // Updates mask for stepping onto v; false on conflict.
    bool enter(int v, std::vector<Word>& mask) const
    {
        for (const auto& [i, partner] : ends_[v])
            if (partner < v && ((mask[i >> 6] >> (i & 63)) & 1u))
                return false;
        for (std::size_t w = 0; w < words_; ++w)
            mask[w] = (mask[w] | opens_[v][w]) & alive_[v][w];
        return true;
    }

    bool dfs(int v, const std::vector<Word>& mask)
    {
        if (v == inst_.target)
            return true;
        std::vector<Word> key;
        for (int w : adj_.out[v]) {
            if (!to_target_[w])
                continue;
            std::vector<Word> next = mask;
            if (!enter(w, next))
                continue;
            key = next;
            key.push_back(static_cast<Word>(w));
            if (dead_.contains(key))
                continue;
            path_.push_back(w);
            if (dfs(w, next))
                return true;
            path_.pop_back();
            if (dead_.size() >= options_.max_states)
                throw Error(ErrorCode::BudgetExceeded,
                            "oracle state budget exhausted (" + std::to_string(options_.max_states) +
                                " states)");
            dead_.insert(std::move(key));
        }
        return false;
    }

    const Instance& inst_;
    const OracleOptions& options_;
    Adjacency adj_;
    std::size_t words_;
    std::vector<std::vector<std::pair<int, int>>> ends_;
    std::vector<std::vector<Word>> alive_;  // pairs whose right member lies after v
    std::vector<std::vector<Word>> opens_;  // pairs whose left member is v
    std::vector<char> to_target_;
    std::unordered_set<std::vector<Word>, StateHash> dead_;
    Path path_;
};

}  // namespace

SolveResult brute_force_solve(const Instance& instance, const OracleOptions& options)
{
    if (instance.pairs.size() > options.max_pairs)
        throw Error(ErrorCode::BudgetExceeded,
                    "oracle limited to " + std::to_string(options.max_pairs) + " pairs, got " +
                        std::to_string(instance.pairs.size()));
    Stopwatch sw;
    Search search(instance, options);
    SolveResult r;
    r.path = search.run();
    r.found = r.path.has_value();
    r.stats.solver = "oracle";
    r.stats.route = "brute-force";
    r.stats.cells = search.states();
    r.stats.elapsed_ms = sw.elapsed_ms();
    return r;
}

}  // namespace pafp
