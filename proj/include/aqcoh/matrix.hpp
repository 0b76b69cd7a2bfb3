#pragma once

#include "aqcoh/integer.hpp"

#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace aqc {

/// Dense row-major matrix of exact integers. Zero-sized dimensions are legal.
class IntMatrix {
public:
    IntMatrix() = default;
    IntMatrix(std::size_t rows, std::size_t cols);
    IntMatrix(std::size_t rows, std::size_t cols, std::vector<Integer> entries);
    IntMatrix(std::initializer_list<std::initializer_list<Integer>> rows);

    static IntMatrix identity(std::size_t n);
    static IntMatrix diagonal(std::span<const Integer> entries);
    static IntMatrix from_columns(std::size_t rows, const std::vector<IntVector>& columns);

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }

    Integer& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const Integer& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
    std::span<const Integer> entries() const noexcept { return {data_.data(), data_.size()}; }

    IntVector row(std::size_t r) const;
    IntVector column(std::size_t c) const;
    void set_column(std::size_t c, std::span<const Integer> values);

    IntVector apply(std::span<const Integer> x) const;
    IntMatrix transposed() const;
    bool is_zero() const;

    IntMatrix hconcat(const IntMatrix& right) const;
    IntMatrix vconcat(const IntMatrix& below) const;
    IntMatrix select_rows(std::span<const std::size_t> indices) const;
    IntMatrix select_cols(std::span<const std::size_t> indices) const;
    IntMatrix row_range(std::size_t begin, std::size_t end) const;
    IntMatrix col_range(std::size_t begin, std::size_t end) const;

    // Elementary operations used by the normal-form reductions.
    void swap_rows(std::size_t a, std::size_t b);
    void swap_cols(std::size_t a, std::size_t b);
    /// row[dst] += factor * row[src]
    void add_row_multiple(std::size_t dst, std::size_t src, const Integer& factor);
    /// col[dst] += factor * col[src]
    void add_col_multiple(std::size_t dst, std::size_t src, const Integer& factor);
    void negate_row(std::size_t r);
    void negate_col(std::size_t c);

    std::string to_string() const;

    friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Integer> data_;
};

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
IntMatrix operator+(const IntMatrix& a, const IntMatrix& b);
IntMatrix operator-(const IntMatrix& a, const IntMatrix& b);
IntMatrix operator-(const IntMatrix& a);
IntMatrix block_diagonal(const std::vector<IntMatrix>& blocks);

} // namespace aqc
