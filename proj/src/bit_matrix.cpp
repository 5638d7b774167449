#include "pafp/bit_matrix.hpp"

#include "pafp/core.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <string>

namespace pafp {

namespace {

using Word = BitMatrix::Word;

}  // namespace

BitMatrix::BitMatrix(int rows, int cols)
    : rows_(rows), cols_(cols), stride_((cols + kWordBits - 1) / kWordBits),
      data_(static_cast<std::size_t>(rows) * stride_, 0)
{
}

BitMatrix BitMatrix::identity(int n)
{
    BitMatrix m(n, n);
    for (int i = 0; i < n; ++i)
        m.set(i, i);
    return m;
}

void BitMatrix::or_row_range(int dst_row, const BitMatrix& src, int src_row, int c0,
                             int c1) noexcept
{
    if (c0 >= c1)
        return;
    or_words(row(dst_row).data(), src.row(src_row).data(), word_range(c0, c1));
}

bool BitMatrix::any_in_range(int r, int c0, int c1) const noexcept
{
    if (c0 >= c1)
        return false;
    const auto wr = word_range(c0, c1);
    const Word* d = row(r).data();
    if (wr.w0 == wr.w1)
        return (d[wr.w0] & wr.m0) != 0;
    if (d[wr.w0] & wr.m0)
        return true;
    for (int w = wr.w0 + 1; w < wr.w1; ++w)
        if (d[w])
            return true;
    return (d[wr.w1] & wr.m1) != 0;
}

std::size_t BitMatrix::count() const noexcept
{
    std::size_t c = 0;
    for (Word w : data_)
        c += static_cast<std::size_t>(std::popcount(w));
    return c;
}

void BitMatrix::clear() noexcept { std::fill(data_.begin(), data_.end(), Word{0}); }

namespace {

// Eight bits of `row` starting at bit k (bits past the row end read as zero).
inline unsigned extract8(const Word* row, int k, int last_word)
{
    const int w = k >> 6, b = k & 63;
    Word v = row[w] >> b;
    if (b > 56 && w < last_word)
        v |= row[w + 1] << (64 - b);
    return static_cast<unsigned>(v & 0xff);
}

}  // namespace

void accumulate_product(BitMatrix& z, const BitMatrix& x, const BitMatrix& y, int r0, int r1,
                        int k0, int k1, int c0, int c1)
{
    if (r0 >= r1 || k0 >= k1 || c0 >= c1)
        return;
    const auto cols = word_range(c0, c1);
    const int span = cols.w1 - cols.w0 + 1;
    const int rows = r1 - r0;
    const int x_last = x.words_per_row() - 1;

    // Inner indices whose Y segment is empty contribute nothing.
    thread_local std::vector<unsigned char> live;
    live.assign(static_cast<std::size_t>(k1 - k0), 0);
    bool any = false;
    for (int k = k0; k < k1; ++k)
        any |= (live[k - k0] = y.any_in_range(k, c0, c1));
    if (!any)
        return;

    // Sparse X: walk its set bits a word at a time.
    std::size_t x_bits = 0;
    const auto inner = word_range(k0, k1);
    for (int i = r0; i < r1; ++i)
        for (int w = inner.w0; w <= inner.w1; ++w)
            x_bits += std::popcount(x.row(i)[w] & inner.mask(w));
    const std::size_t groups = (k1 - k0 + 7) / 8;
    if (x_bits * span < groups * (256 * span + rows * (span + 4))) {
        for (int i = r0; i < r1; ++i) {
            const Word* xr = x.row(i).data();
            Word* zr = z.row(i).data();
            for (int w = inner.w0; w <= inner.w1; ++w) {
                Word bits = xr[w] & inner.mask(w);
                while (bits) {
                    const int k = (w << 6) + std::countr_zero(bits);
                    bits &= bits - 1;
                    if (live[k - k0])
                        or_words(zr, y.row(k).data(), cols);
                }
            }
        }
        return;
    }

    thread_local std::vector<Word> table;
    for (int g0 = k0; g0 < k1; g0 += 8) {
        const int width = std::min(8, k1 - g0);
        unsigned alive = 0;
        for (int b = 0; b < width; ++b)
            alive |= static_cast<unsigned>(live[g0 + b - k0]) << b;
        if (!alive)
            continue;

        if (rows * std::popcount(alive) <= 2 * (256 + rows)) {
            for (int i = r0; i < r1; ++i) {
                unsigned bits = extract8(x.row(i).data(), g0, x_last) & alive;
                Word* zr = z.row(i).data();
                while (bits) {
                    or_words(zr, y.row(g0 + std::countr_zero(bits)).data(), cols);
                    bits &= bits - 1;
                }
            }
            continue;
        }

        // table[mask] = OR of the Y rows g0+b over the bits b of mask
        table.assign(static_cast<std::size_t>(256) * span, 0);
        for (unsigned mask = 1; mask < (1u << width); ++mask) {
            const int low = std::countr_zero(mask);
            Word* dst = table.data() + static_cast<std::size_t>(mask) * span;
            const Word* prev = table.data() + static_cast<std::size_t>(mask & (mask - 1)) * span;
            const Word* yr = y.row(g0 + low).data() + cols.w0;
            for (int w = 0; w < span; ++w)
                dst[w] = prev[w] | (yr[w] & cols.mask(cols.w0 + w));
        }
        for (int i = r0; i < r1; ++i) {
            const unsigned bits = extract8(x.row(i).data(), g0, x_last) & alive;
            if (!bits)
                continue;
            const Word* src = table.data() + static_cast<std::size_t>(bits) * span;
            Word* zr = z.row(i).data() + cols.w0;
            for (int w = 0; w < span; ++w)
                zr[w] |= src[w];
        }
    }
}

void accumulate_product_columns(BitMatrix& zt, const BitMatrix& xt, const BitMatrix& y, int r0,
                                int r1, int k0, int k1, int c0, int c1)
{
    if (r0 >= r1 || k0 >= k1 || c0 >= c1)
        return;
    const auto rows = word_range(r0, r1);
    const auto cols = word_range(c0, c1);
    for (int k = k0; k < k1; ++k) {
        const Word* yr = y.row(k).data();
        const Word* xr = xt.row(k).data();
        for (int w = cols.w0; w <= cols.w1; ++w) {
            Word bits = yr[w] & cols.mask(w);
            while (bits) {
                const int c = (w << 6) + std::countr_zero(bits);
                bits &= bits - 1;
                or_words(zt.row(c).data(), xr, rows);
            }
        }
    }
}

namespace {

BitMatrix matmul_four_russians(const BitMatrix& x, const BitMatrix& y)
{
    constexpr int kGroup = 8;
    const int stride = y.words_per_row();
    BitMatrix z(x.rows(), y.cols());
    std::vector<Word> table(static_cast<std::size_t>(1 << kGroup) * stride);
    for (int g0 = 0; g0 < x.cols(); g0 += kGroup) {
        const int width = std::min(kGroup, x.cols() - g0);
        // table[mask] = OR of Y rows g0+b for every bit b of mask, built incrementally
        std::fill(table.begin(), table.begin() + stride, Word{0});
        for (int mask = 1; mask < (1 << width); ++mask) {
            const int low = std::countr_zero(static_cast<unsigned>(mask));
            const Word* prev = table.data() + static_cast<std::size_t>(mask & (mask - 1)) * stride;
            const Word* yr = y.row(g0 + low).data();
            Word* dst = table.data() + static_cast<std::size_t>(mask) * stride;
            for (int w = 0; w < stride; ++w)
                dst[w] = prev[w] | yr[w];
        }
        for (int i = 0; i < x.rows(); ++i) {
            const Word* xr = x.row(i).data();
            const int word = g0 >> 6, shift = g0 & 63;
            const int mask = static_cast<int>((xr[word] >> shift) & low_mask(width));
            if (!mask)
                continue;
            const Word* src = table.data() + static_cast<std::size_t>(mask) * stride;
            Word* zr = z.row(i).data();
            for (int w = 0; w < stride; ++w)
                zr[w] |= src[w];
        }
    }
    return z;
}

}  // namespace

BitMatrix bool_matmul(const BitMatrix& x, const BitMatrix& y, MatmulKernel kernel)
{
    if (x.cols() != y.rows())
        throw Error(ErrorCode::DimensionMismatch,
                    "inner dimensions differ: " + std::to_string(x.cols()) + " vs " +
                        std::to_string(y.rows()));
    if (kernel == MatmulKernel::FourRussians)
        return matmul_four_russians(x, y);
    BitMatrix z(x.rows(), y.cols());
    accumulate_product(z, x, y, 0, x.rows(), 0, x.cols(), 0, y.cols());
    return z;
}

}  // namespace pafp
