#include "aqcoh/matrix.hpp"

#include <sstream>
#include <stdexcept>
#include <utility>

namespace aqc {

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols, std::vector<Integer> entries)
    : rows_(rows), cols_(cols), data_(std::move(entries)) {
    if (data_.size() != rows * cols)
        throw std::invalid_argument("IntMatrix: entry count does not match dimensions");
}

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<Integer>> rows) {
    rows_ = rows.size();
    cols_ = rows_ == 0 ? 0 : rows.begin()->size();
    data_.reserve(rows_ * cols_);
    for (const auto& r : rows) {
        if (r.size() != cols_)
            throw std::invalid_argument("IntMatrix: ragged initializer");
        data_.insert(data_.end(), r.begin(), r.end());
    }
}

IntMatrix IntMatrix::identity(std::size_t n) {
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        m(i, i) = 1;
    return m;
}

IntMatrix IntMatrix::diagonal(std::span<const Integer> entries) {
    IntMatrix m(entries.size(), entries.size());
    for (std::size_t i = 0; i < entries.size(); ++i)
        m(i, i) = entries[i];
    return m;
}

IntMatrix IntMatrix::from_columns(std::size_t rows, const std::vector<IntVector>& columns) {
    IntMatrix m(rows, columns.size());
    for (std::size_t c = 0; c < columns.size(); ++c)
        m.set_column(c, columns[c]);
    return m;
}

IntVector IntMatrix::row(std::size_t r) const {
    return IntVector(data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
                     data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
}

IntVector IntMatrix::column(std::size_t c) const {
    IntVector out(rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        out[r] = (*this)(r, c);
    return out;
}

void IntMatrix::set_column(std::size_t c, std::span<const Integer> values) {
    if (values.size() != rows_)
        throw std::invalid_argument("IntMatrix::set_column: length mismatch");
    for (std::size_t r = 0; r < rows_; ++r)
        (*this)(r, c) = values[r];
}

IntVector IntMatrix::apply(std::span<const Integer> x) const {
    if (x.size() != cols_)
        throw std::invalid_argument("IntMatrix::apply: length mismatch");
    IntVector out(rows_);
    for (std::size_t r = 0; r < rows_; ++r) {
        Integer acc;
        for (std::size_t c = 0; c < cols_; ++c) {
            const Integer& a = (*this)(r, c);
            if (!a.is_zero() && !x[c].is_zero())
                acc += a * x[c];
        }
        out[r] = std::move(acc);
    }
    return out;
}

IntMatrix IntMatrix::transposed() const {
    IntMatrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c)
            t(c, r) = (*this)(r, c);
    return t;
}

bool IntMatrix::is_zero() const {
    for (const auto& x : data_)
        if (!x.is_zero())
            return false;
    return true;
}

IntMatrix IntMatrix::hconcat(const IntMatrix& right) const {
    if (right.rows_ != rows_)
        throw std::invalid_argument("IntMatrix::hconcat: row mismatch");
    IntMatrix m(rows_, cols_ + right.cols_);
    for (std::size_t r = 0; r < rows_; ++r) {
        for (std::size_t c = 0; c < cols_; ++c)
            m(r, c) = (*this)(r, c);
        for (std::size_t c = 0; c < right.cols_; ++c)
            m(r, cols_ + c) = right(r, c);
    }
    return m;
}

IntMatrix IntMatrix::vconcat(const IntMatrix& below) const {
    if (below.cols_ != cols_)
        throw std::invalid_argument("IntMatrix::vconcat: column mismatch");
    IntMatrix m(rows_ + below.rows_, cols_);
    for (std::size_t i = 0; i < data_.size(); ++i)
        m.data_[i] = data_[i];
    for (std::size_t i = 0; i < below.data_.size(); ++i)
        m.data_[data_.size() + i] = below.data_[i];
    return m;
}

IntMatrix IntMatrix::select_rows(std::span<const std::size_t> indices) const {
    IntMatrix m(indices.size(), cols_);
    for (std::size_t i = 0; i < indices.size(); ++i)
        for (std::size_t c = 0; c < cols_; ++c)
            m(i, c) = (*this)(indices[i], c);
    return m;
}

IntMatrix IntMatrix::select_cols(std::span<const std::size_t> indices) const {
    IntMatrix m(rows_, indices.size());
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t i = 0; i < indices.size(); ++i)
            m(r, i) = (*this)(r, indices[i]);
    return m;
}

IntMatrix IntMatrix::row_range(std::size_t begin, std::size_t end) const {
    IntMatrix m(end - begin, cols_);
    for (std::size_t r = begin; r < end; ++r)
        for (std::size_t c = 0; c < cols_; ++c)
            m(r - begin, c) = (*this)(r, c);
    return m;
}

IntMatrix IntMatrix::col_range(std::size_t begin, std::size_t end) const {
    IntMatrix m(rows_, end - begin);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = begin; c < end; ++c)
            m(r, c - begin) = (*this)(r, c);
    return m;
}

void IntMatrix::swap_rows(std::size_t a, std::size_t b) {
    if (a == b)
        return;
    for (std::size_t c = 0; c < cols_; ++c)
        std::swap((*this)(a, c), (*this)(b, c));
}

void IntMatrix::swap_cols(std::size_t a, std::size_t b) {
    if (a == b)
        return;
    for (std::size_t r = 0; r < rows_; ++r)
        std::swap((*this)(r, a), (*this)(r, b));
}

void IntMatrix::add_row_multiple(std::size_t dst, std::size_t src, const Integer& factor) {
    if (factor.is_zero())
        return;
    for (std::size_t c = 0; c < cols_; ++c) {
        const Integer& s = (*this)(src, c);
        if (!s.is_zero())
            (*this)(dst, c) += factor * s;
    }
}

void IntMatrix::add_col_multiple(std::size_t dst, std::size_t src, const Integer& factor) {
    if (factor.is_zero())
        return;
    for (std::size_t r = 0; r < rows_; ++r) {
        const Integer& s = (*this)(r, src);
        if (!s.is_zero())
            (*this)(r, dst) += factor * s;
    }
}

void IntMatrix::negate_row(std::size_t r) {
    for (std::size_t c = 0; c < cols_; ++c)
        (*this)(r, c) = -(*this)(r, c);
}

void IntMatrix::negate_col(std::size_t c) {
    for (std::size_t r = 0; r < rows_; ++r)
        (*this)(r, c) = -(*this)(r, c);
}

std::string IntMatrix::to_string() const {
    std::ostringstream os;
    os << '[';
    for (std::size_t r = 0; r < rows_; ++r) {
        os << (r ? ",[" : "[");
        for (std::size_t c = 0; c < cols_; ++c)
            os << (c ? "," : "") << (*this)(r, c);
        os << ']';
    }
    os << ']';
    return os.str();
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
    if (a.cols() != b.rows())
        throw std::invalid_argument("IntMatrix product: dimension mismatch");
    IntMatrix m(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k) {
            const Integer& aik = a(i, k);
            if (aik.is_zero())
                continue;
            for (std::size_t j = 0; j < b.cols(); ++j)
                if (!b(k, j).is_zero())
                    m(i, j) += aik * b(k, j);
        }
    return m;
}

IntMatrix operator+(const IntMatrix& a, const IntMatrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols())
        throw std::invalid_argument("IntMatrix sum: dimension mismatch");
    IntMatrix m(a.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j)
            m(i, j) = a(i, j) + b(i, j);
    return m;
}

IntMatrix operator-(const IntMatrix& a, const IntMatrix& b) { return a + (-b); }

IntMatrix operator-(const IntMatrix& a) {
    IntMatrix m(a.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j)
            m(i, j) = -a(i, j);
    return m;
}

IntMatrix block_diagonal(const std::vector<IntMatrix>& blocks) {
    std::size_t rows = 0, cols = 0;
    for (const auto& b : blocks) {
        rows += b.rows();
        cols += b.cols();
    }
    IntMatrix m(rows, cols);
    std::size_t r0 = 0, c0 = 0;
    for (const auto& b : blocks) {
        for (std::size_t i = 0; i < b.rows(); ++i)
            for (std::size_t j = 0; j < b.cols(); ++j)
                m(r0 + i, c0 + j) = b(i, j);
        r0 += b.rows();
        c0 += b.cols();
    }
    return m;
}

} // namespace aqc
