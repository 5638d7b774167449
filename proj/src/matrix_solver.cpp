#include "pafp/matrix_solver.hpp"

#include "stopwatch.hpp"

#include <algorithm>
#include <array>
#include <cstring>
#include <span>
#include <bit>
#include <random>
#include <stdexcept>
#include <string>

namespace pafp {

namespace {

class Builder {
public:
    Builder(const Instance& instance, const MatrixOptions& options, MatrixStats& stats)
        : n_(instance.n), base_(options.base_span), options_(options), stats_(stats),
          rng_(options.check_seed)
    {
        auto& p = props_;
        for (auto* m : {&p.A, &p.J, &p.P, &p.P_after, &p.P_before, &p.mu_jump, &p.mu_alpha,
                        &p.mu_beta, &j_defined_, &p_t_, &alpha_t_, &beta_t_})
            *m = BitMatrix(n_, n_);
        p.pair_end = pair_ends(instance);
        for (const auto& e : instance.edges)
            p.A.set(e.from, e.to);

        // Row u of j_defined_ marks the columns v whose pair starts after u.
        right_of_.assign(n_, -1);
        pair_cols_.assign(p.A.words_per_row(), 0);
        for (int v = 0; v < n_; ++v) {
            if (const int q = p.pair_end[v]; q >= 0) {
                right_of_[q] = v;
                pair_cols_[v >> 6] |= BitMatrix::Word{1} << (v & 63);
            }
        }
        for (int u = n_ - 2; u >= 0; --u) {
            auto dst = j_defined_.row(u);
            auto src = j_defined_.row(u + 1);
            std::copy(src.begin(), src.end(), dst.begin());
            if (right_of_[u + 1] >= 0)
                j_defined_.set(u, right_of_[u + 1]);
        }
    }

    InsideProperties run() &&
    {
        if (n_ > 0)
            compute(0, n_);
        return std::move(props_);
    }

private:
    using Word = BitMatrix::Word;

    // All cells of the triangle [l, m).
    void compute(int l, int m)
    {
        if (m - l <= base_) {
            base_triangle(l, m);
            return;
        }
        const int mid = l + (m - l) / 2;
        compute(l, mid);
        compute(mid, m);
        ++stats_.combine_steps;
        complete(l, mid, mid, m);
        if (options_.check_invariants)
            check_cross_cells(l, mid, m);
    }

    // Cells of rows [r0, r1) x cols [c0, c1) with r1 <= c0. Both adjoining
    // triangles are final and the accumulators already hold every split
    // point in the gap [r1, c0).
    void complete(int r0, int r1, int c0, int c1)
    {
        if (r1 - r0 <= base_ && c1 - c0 <= base_) {
            base_rectangle(r0, r1, c0, c1);
            return;
        }
        if (r1 - r0 >= c1 - c0) {
            const int rk = r0 + (r1 - r0) / 2;
            complete(rk, r1, c0, c1);
            add_products(r0, rk, rk, r1, c0, c1);
            complete(r0, rk, c0, c1);
        } else {
            const int ck = c0 + (c1 - c0) / 2;
            complete(r0, r1, c0, ck);
            add_products(r0, r1, c0, ck, ck, c1);
            complete(r0, r1, ck, c1);
        }
    }

    void add_products(int r0, int r1, int k0, int k1, int c0, int c1)
    {
        auto& p = props_;
        accumulate_product(p.mu_jump, p.A, p.P_after, r0, r1, k0, k1, c0, c1);
        // A and J are sparse against a dense P, so these two go column-wise
        // into transposed accumulators that finish_row gathers back.
        accumulate_product_columns(alpha_t_, p_t_, p.A, r0, r1, k0, k1, c0, c1);
        accumulate_product_columns(beta_t_, p_t_, p.J, r0, r1, k0, k1, c0, c1);
        stats_.product_calls += 3;
    }

    template <typename Fn>
    static void for_each_bit(const Word* row, int from, int to, Fn&& fn)
    {
        if (from >= to)
            return;
        const auto wr = word_range(from, to);
        for (int x = wr.w0; x <= wr.w1; ++x) {
            Word bits = row[x] & wr.mask(x);
            while (bits) {
                fn((x << 6) + std::countr_zero(bits));
                bits &= bits - 1;
            }
        }
    }

    // mu_jump[u] gets P_after[w] for every edge (u, w) with w in [from, to).
    void jump_from(int u, int from, int to, const WordRange& cols)
    {
        auto& p = props_;
        Word* mj = p.mu_jump.row(u).data();
        for_each_bit(p.A.row(u).data(), from, to,
                     [&](int w) { or_words(mj, p.P_after.row(w).data(), cols); });
    }

    // Finishes row u on [c0, c1). J needs no cell of its own row; P is closed
    // left to right, each new cell pushing its A and J rows into the
    // accumulators of the cells after it.
    void finish_row(int u, int c0, int c1, bool gather, bool transpose)
    {
        auto& p = props_;
        const auto cols = word_range(c0, c1);
        const Word* a = p.A.row(u).data();
        const Word* jd = j_defined_.row(u).data();
        Word* j = p.J.row(u).data();
        Word* pr = p.P.row(u).data();
        Word* ma = p.mu_alpha.row(u).data();
        Word* mb = p.mu_beta.row(u).data();
        Word* pa = p.P_after.row(u).data();
        Word* pb = p.P_before.row(u).data();
        const int zero = right_of_[u];

        // Product contributions arrive transposed; beta only matters where J
        // is defined.
        const int uw = u >> 6, ub = u & 63;
        if (gather) {
            for (int v = c0; v < c1; ++v)
                ma[v >> 6] |= ((alpha_t_.row(v)[uw] >> ub) & 1) << (v & 63);
            for (int x = cols.w0; x <= cols.w1; ++x) {
                for (Word bits = jd[x] & cols.mask(x); bits; bits &= bits - 1) {
                    const int v = (x << 6) + std::countr_zero(bits);
                    mb[x] |= ((beta_t_.row(v)[uw] >> ub) & 1) << (v & 63);
                }
            }
        }
        for (int x = cols.w0; x <= cols.w1; ++x)
            j[x] |= (a[x] | p.mu_jump.row(u)[x]) & jd[x] & cols.mask(x);
        for (int x = cols.w0; x <= cols.w1; ++x) {
            Word mask = cols.mask(x);
            if (zero >= 0 && (zero >> 6) == x)
                mask &= ~(Word{1} << (zero & 63));
            Word done = 0;
            while (true) {
                const Word safe = (((a[x] | ma[x]) & ~jd[x]) | ((j[x] | mb[x]) & jd[x])) & mask;
                Word fresh = safe & ~done;
                if (!fresh)
                    break;
                done |= fresh;
                // a cell only feeds cells to its right, so a whole batch can
                // be pushed before re-reading the word
                for (; fresh; fresh &= fresh - 1) {
                    const int w = (x << 6) + std::countr_zero(fresh);
                    const Word* aw = p.A.row(w).data();
                    const Word* jw = p.J.row(w).data();
                    if (x == cols.w1) {
                        ma[x] |= aw[x] & cols.m1;
                        mb[x] |= jw[x] & cols.m1;
                    } else {
                        const WordRange rest{x, cols.w1, ~Word{0}, cols.m1};
                        or_words(ma, aw, rest);
                        or_words(mb, jw, rest);
                    }
                }
            }
            pr[x] |= done;
            if (transpose) {
                for (Word bits = done; bits; bits &= bits - 1)
                    p_t_.row((x << 6) + std::countr_zero(bits))[uw] |= Word{1} << ub;
            }
            pa[x] |= done & pair_cols_[x] & ~jd[x];
            pb[x] |= done & jd[x];
        }
        stats_.base_cells += static_cast<std::uint64_t>(c1 - c0);
    }

    void base_triangle(int l, int m)
    {
        // no product ever reaches a cell inside a base triangle
        const bool tiled = m - l <= 64;
        for (int u = m - 2; u >= l; --u) {
            const auto cols = word_range(u + 1, m);
            jump_from(u, u + 1, m, cols);
            finish_row(u, u + 1, m, false, !tiled);
        }
        if (tiled)
            scatter_tile(props_.P, p_t_, l, m, l, m);
    }

    void base_rectangle(int r0, int r1, int c0, int c1)
    {
        auto& p = props_;
        const auto cols = word_range(c0, c1);
        const bool tiled = r1 - r0 <= 64 && c1 - c0 <= 64;
        if (tiled) {
            gather_tile(alpha_t_, p.mu_alpha, r0, r1, c0, c1);
            gather_tile(beta_t_, p.mu_beta, r0, r1, c0, c1);
        }
        for (int u = r1 - 1; u >= r0; --u) {
            Word* ma = p.mu_alpha.row(u).data();
            Word* mb = p.mu_beta.row(u).data();
            for_each_bit(p.P.row(u).data(), u + 1, r1, [&](int w) {
                or_words(ma, p.A.row(w).data(), cols);
                or_words(mb, p.J.row(w).data(), cols);
            });
            jump_from(u, u + 1, r1, cols);
            jump_from(u, c0, c1, cols);
            finish_row(u, c0, c1, !tiled, !tiled);
        }
        if (tiled)
            scatter_tile(p.P, p_t_, r0, r1, c0, c1);
    }

    // transposed[c0..c1)[r0..r1) |= src[r0..r1)[c0..c1), one 64 x 64 tile.
    static void scatter_tile(const BitMatrix& src, BitMatrix& transposed, int r0, int r1, int c0,
                             int c1)
    {
        Word tile[64] = {};
        const Word keep = low_mask(c1 - c0);
        for (int i = 0; i < r1 - r0; ++i)
            tile[i] = extract64(src.row(r0 + i), c0) & keep;
        transpose64(tile);
        const int w = r0 >> 6, b = r0 & 63;
        for (int j = 0; j < c1 - c0; ++j) {
            if (!tile[j])
                continue;
            auto row = transposed.row(c0 + j);
            row[w] |= tile[j] << b;
            if (b && static_cast<std::size_t>(w + 1) < row.size())
                row[w + 1] |= tile[j] >> (64 - b);
        }
    }

    // dst[r0..r1)[c0..c1) |= transposed[c0..c1)[r0..r1), one 64 x 64 tile.
    static void gather_tile(const BitMatrix& transposed, BitMatrix& dst, int r0, int r1, int c0,
                            int c1)
    {
        Word tile[64] = {};
        for (int j = 0; j < c1 - c0; ++j)
            tile[j] = extract64(transposed.row(c0 + j), r0);
        transpose64(tile);
        const int w = c0 >> 6, b = c0 & 63;
        const Word keep = low_mask(c1 - c0);
        for (int i = 0; i < r1 - r0; ++i) {
            const Word bits = tile[i] & keep;
            if (!bits)
                continue;
            auto row = dst.row(r0 + i);
            row[w] |= bits << b;
            if (b && static_cast<std::size_t>(w + 1) < row.size())
                row[w + 1] |= bits >> (64 - b);
        }
    }

    void check_cross_cells(int l, int mid, int m)
    {
        const auto& p = props_;
        std::uniform_int_distribution<int> row(l, mid - 1), col(mid, m - 1);
        for (int i = 0; i < 3; ++i) {
            const int u = row(rng_), v = col(rng_);
            bool jump = false, alpha = false, beta = false;
            for (int w = u + 1; w < v; ++w) {
                jump = jump || (p.A.get(u, w) && p.P_after.get(w, v));
                alpha = alpha || (p.P.get(u, w) && p.A.get(w, v));
                beta = beta || (p.P.get(u, w) && p.J.get(w, v));
            }
            ++stats_.invariant_checks;
            if (jump != p.mu_jump.get(u, v) || alpha != p.mu_alpha.get(u, v) ||
                beta != p.mu_beta.get(u, v))
                throw std::logic_error("accumulator incomplete at cell (" + std::to_string(u) +
                                       "," + std::to_string(v) + ") after combining [" +
                                       std::to_string(l) + "," + std::to_string(mid) + "," +
                                       std::to_string(m) + ")");
        }
    }

    int n_;
    int base_;
    BitMatrix j_defined_;
    BitMatrix p_t_;      // P transposed
    BitMatrix alpha_t_;  // product part of mu_alpha, transposed
    BitMatrix beta_t_;   // product part of mu_beta, transposed
    std::vector<int> right_of_;              // right member of the pair starting at u
    std::vector<BitMatrix::Word> pair_cols_; // columns that end a pair
    const MatrixOptions& options_;
    MatrixStats& stats_;
    std::mt19937_64 rng_;
    InsideProperties props_;
};

}  // namespace

InsideProperties matrix_build_properties(const Instance& instance, const MatrixOptions& options,
                                         MatrixStats* stats)
{
    require_class(instance,
                  {StructureClass::Disjoint, StructureClass::Nested, StructureClass::WellParenthesized},
                  "matrix solver");
    if (options.base_span < 2)
        throw std::invalid_argument("base_span must be at least 2");
    MatrixStats local;
    return Builder(instance, options, stats ? *stats : local).run();
}

DpTables to_dp_tables(const InsideProperties& props)
{
    const int n = props.P.rows();
    DpTables t;
    t.n = n;
    t.P = BoolTable(n, 0);
    t.J = BoolTable(n, 0);
    t.pair_end = props.pair_end;
    // spread[b] holds the eight bits of b as eight 0/1 bytes
    static const auto spread = [] {
        std::array<std::uint64_t, 256> out{};
        for (int b = 0; b < 256; ++b)
            for (int i = 0; i < 8; ++i)
                out[b] |= static_cast<std::uint64_t>((b >> i) & 1) << (8 * i);
        return out;
    }();
    auto expand = [&](std::span<const BitMatrix::Word> row, std::uint8_t* out) {
        for (int c = 0; c < n; c += 8) {
            const auto byte = (row[c >> 6] >> (c & 63)) & 0xff;
            const std::uint64_t bytes = spread[byte];
            std::memcpy(out + c, &bytes, static_cast<std::size_t>(std::min(8, n - c)));
        }
    };
    for (int u = 0; u < n; ++u) {
        expand(props.P.row(u), &t.P(u, 0));
        expand(props.J.row(u), &t.J(u, 0));
        t.P(u, u) = 1;
    }
    return t;
}

DpTables matrix_build(const Instance& instance, int base_span)
{
    MatrixOptions options;
    options.base_span = base_span;
    return to_dp_tables(matrix_build_properties(instance, options));
}

SolveResult solve_matrix(const Instance& instance, int base_span)
{
    Stopwatch sw;
    const auto tables = matrix_build(instance, base_span);
    SolveResult r;
    r.path = reconstruct_path(instance, tables, instance.source, instance.target);
    r.found = r.path.has_value();
    r.stats.solver = "matrix";
    r.stats.route = "matrix";
    r.stats.cells = static_cast<std::uint64_t>(instance.n) * (instance.n + 1) / 2;
    r.stats.elapsed_ms = sw.elapsed_ms();
    return r;
}

}  // namespace pafp
