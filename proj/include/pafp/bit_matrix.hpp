#ifndef PAFP_BIT_MATRIX_HPP
#define PAFP_BIT_MATRIX_HPP

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace pafp {

/// Row-packed boolean matrix, 64 columns per word. Bits past `cols()` in the
/// last word of each row are kept zero.
class BitMatrix {
public:
    using Word = std::uint64_t;
    static constexpr int kWordBits = 64;

    BitMatrix() = default;
    BitMatrix(int rows, int cols);

    static BitMatrix identity(int n);

    int rows() const noexcept { return rows_; }
    int cols() const noexcept { return cols_; }
    int words_per_row() const noexcept { return stride_; }

    bool get(int r, int c) const noexcept
    {
        return (data_[static_cast<std::size_t>(r) * stride_ + (c >> 6)] >> (c & 63)) & 1u;
    }
    void set(int r, int c, bool value = true) noexcept
    {
        Word& w = data_[static_cast<std::size_t>(r) * stride_ + (c >> 6)];
        const Word bit = Word{1} << (c & 63);
        w = value ? (w | bit) : (w & ~bit);
    }

    std::span<Word> row(int r) noexcept
    {
        return {data_.data() + static_cast<std::size_t>(r) * stride_,
                static_cast<std::size_t>(stride_)};
    }
    std::span<const Word> row(int r) const noexcept
    {
        return {data_.data() + static_cast<std::size_t>(r) * stride_,
                static_cast<std::size_t>(stride_)};
    }

    /// this[dst_row][c0..c1) |= src[src_row][c0..c1)
    void or_row_range(int dst_row, const BitMatrix& src, int src_row, int c0, int c1) noexcept;

    /// True if any bit of row r in [c0, c1) is set.
    bool any_in_range(int r, int c0, int c1) const noexcept;

    std::size_t count() const noexcept;
    void clear() noexcept;

    bool operator==(const BitMatrix&) const = default;

private:
    int rows_ = 0;
    int cols_ = 0;
    int stride_ = 0;
    std::vector<Word> data_;
};

/// Inclusive word span of the column range [c0, c1) with masks for the first
/// and last word (equal when the span is one word).
struct WordRange {
    int w0 = 0;
    int w1 = 0;
    BitMatrix::Word m0 = 0;
    BitMatrix::Word m1 = 0;

    BitMatrix::Word mask(int w) const noexcept
    {
        return (w == w0 ? m0 : ~BitMatrix::Word{0}) & (w == w1 ? m1 : ~BitMatrix::Word{0});
    }
};

constexpr BitMatrix::Word low_mask(int bits) noexcept
{
    return bits >= 64 ? ~BitMatrix::Word{0} : ((BitMatrix::Word{1} << bits) - 1);
}

inline WordRange word_range(int c0, int c1) noexcept
{
    WordRange r;
    r.w0 = c0 >> 6;
    r.w1 = (c1 - 1) >> 6;
    r.m0 = ~low_mask(c0 & 63);
    r.m1 = low_mask(((c1 - 1) & 63) + 1);
    if (r.w0 == r.w1) {
        r.m0 &= r.m1;
        r.m1 = r.m0;
    }
    return r;
}

inline void or_words(BitMatrix::Word* dst, const BitMatrix::Word* src, const WordRange& r) noexcept
{
    if (r.w0 == r.w1) {
        dst[r.w0] |= src[r.w0] & r.m0;
        return;
    }
    dst[r.w0] |= src[r.w0] & r.m0;
    for (int w = r.w0 + 1; w < r.w1; ++w)
        dst[w] |= src[w];
    dst[r.w1] |= src[r.w1] & r.m1;
}

/// In-place transpose of a 64 x 64 bit tile: bit j of a[i] moves to bit i of a[j].
inline void transpose64(BitMatrix::Word* a) noexcept
{
    BitMatrix::Word m = 0x00000000FFFFFFFFull;
    for (int j = 32; j; j >>= 1, m ^= m << j) {
        for (int k = 0; k < 64; k = ((k | j) + 1) & ~j) {
            const BitMatrix::Word t = ((a[k] >> j) ^ a[k | j]) & m;
            a[k] ^= t << j;
            a[k | j] ^= t;
        }
    }
}

/// 64 bits of a row starting at bit `from`; bits past the row read as zero.
inline BitMatrix::Word extract64(std::span<const BitMatrix::Word> row, int from) noexcept
{
    const std::size_t w = static_cast<std::size_t>(from >> 6);
    const int b = from & 63;
    BitMatrix::Word v = row[w] >> b;
    if (b && w + 1 < row.size())
        v |= row[w + 1] << (64 - b);
    return v;
}

enum class MatmulKernel {
    WordParallel,  // OR the Y row for every set bit of X
    FourRussians,  // 8-bit lookup tables over groups of Y rows
};

/// Z[i][j] = OR_k X[i][k] AND Y[k][j]. Throws Error(DimensionMismatch).
BitMatrix bool_matmul(const BitMatrix& x, const BitMatrix& y,
                      MatmulKernel kernel = MatmulKernel::WordParallel);

/// Z[rows][cols] |= X[rows][inner] * Y[inner][cols] on half-open index
/// ranges of the given square-indexed matrices.
void accumulate_product(BitMatrix& z, const BitMatrix& x, const BitMatrix& y, int r0, int r1,
                        int k0, int k1, int c0, int c1);

/// Same product kept transposed: Zt[cols][rows] |= (X[rows][inner] *
/// Y[inner][cols])^T, given Xt = X^T. Cost follows the set bits of Y, which
/// suits a dense X against a sparse Y.
void accumulate_product_columns(BitMatrix& zt, const BitMatrix& xt, const BitMatrix& y, int r0,
                                int r1, int k0, int k1, int c0, int c1);

}  // namespace pafp

#endif
