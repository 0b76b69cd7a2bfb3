#include "aqcoh/smith.hpp"

#include <boost/container/small_vector.hpp>

#include <algorithm>
#include <cstdint>
#include <type_traits>
#include <stdexcept>

namespace aqc {

IntVector SmithDecomposition::diagonal() const {
    const std::size_t k = std::min(D.rows(), D.cols());
    IntVector d(k);
    for (std::size_t i = 0; i < k; ++i)
        d[i] = D(i, i);
    return d;
}

namespace {

/// Scalar operations for the reduction. The int64 version reports overflow
/// by throwing, after which the whole reduction is redone exactly.
struct Overflow {};

struct Native {
    using T = std::int64_t;
    static bool zero(T x) { return x == 0; }
    static bool less_abs(T a, T b) {
        const auto mag = [](T v) { return v < 0 ? std::uint64_t(0) - std::uint64_t(v) : std::uint64_t(v); };
        return mag(a) < mag(b);
    }
    static T neg(T x) {
        if (x == INT64_MIN)
            throw Overflow{};
        return -x;
    }
    static T quot(T a, T b) {
        if (a == INT64_MIN && b == -1)
            throw Overflow{};
        return a / b;
    }
    static bool divides(T d, T x) { return d == -1 || x % d == 0; }
    static void add_mul(T& dst, T f, T src) {
        T p;
        if (__builtin_mul_overflow(f, src, &p) || __builtin_add_overflow(dst, p, &dst))
            throw Overflow{};
    }
    static Integer out(T x) { return Integer(x); }
};

struct Exact {
    using T = Integer;
    static bool zero(const T& x) { return x.is_zero(); }
    static bool less_abs(const T& a, const T& b) { return abs_less(a, b); }
    static T neg(const T& x) { return -x; }
    static T quot(const T& a, const T& b) { return a / b; }
    static bool divides(const T& d, const T& x) { return (x % d).is_zero(); }
    static void add_mul(T& dst, const T& f, const T& src) { dst += f * src; }
    static Integer out(const T& x) { return x; }
};

template <class S>
struct Dense {
    using T = typename S::T;
    std::size_t rows = 0, cols = 0;
    boost::container::small_vector<T, 16> a;

    Dense(std::size_t r, std::size_t c) : rows(r), cols(c), a(r * c, T(0)) {}
    static Dense identity(std::size_t n) {
        Dense m(n, n);
        for (std::size_t i = 0; i < n; ++i)
            m(i, i) = T(1);
        return m;
    }
    T& operator()(std::size_t r, std::size_t c) { return a[r * cols + c]; }
    const T& operator()(std::size_t r, std::size_t c) const { return a[r * cols + c]; }

    void swap_rows(std::size_t x, std::size_t y) {
        for (std::size_t c = 0; c < cols; ++c)
            std::swap((*this)(x, c), (*this)(y, c));
    }
    void swap_cols(std::size_t x, std::size_t y) {
        for (std::size_t r = 0; r < rows; ++r)
            std::swap((*this)(r, x), (*this)(r, y));
    }
    void add_row(std::size_t dst, std::size_t src, const T& f) {
        for (std::size_t c = 0; c < cols; ++c)
            if (!S::zero((*this)(src, c)))
                S::add_mul((*this)(dst, c), f, (*this)(src, c));
    }
    void add_col(std::size_t dst, std::size_t src, const T& f) {
        for (std::size_t r = 0; r < rows; ++r)
            if (!S::zero((*this)(r, src)))
                S::add_mul((*this)(r, dst), f, (*this)(r, src));
    }
    void negate_row(std::size_t r) {
        for (std::size_t c = 0; c < cols; ++c)
            (*this)(r, c) = S::neg((*this)(r, c));
    }
    void negate_col(std::size_t c) {
        for (std::size_t r = 0; r < rows; ++r)
            (*this)(r, c) = S::neg((*this)(r, c));
    }
    IntMatrix release() const {
        IntMatrix m(rows, cols);
        for (std::size_t r = 0; r < rows; ++r)
            for (std::size_t c = 0; c < cols; ++c)
                m(r, c) = S::out((*this)(r, c));
        return m;
    }
};

// Row operations on D are mirrored on U; the inverse is tracked by the
// corresponding column operations so that Uinv * U stays the identity.
template <class S>
struct Reducer {
    using T = typename S::T;
    Dense<S> D, U, V;
    std::optional<Dense<S>> Uinv;

    void swap_rows(std::size_t a, std::size_t b) {
        if (a == b)
            return;
        D.swap_rows(a, b);
        U.swap_rows(a, b);
        if (Uinv)
            Uinv->swap_cols(a, b);
    }
    void swap_cols(std::size_t a, std::size_t b) {
        if (a == b)
            return;
        D.swap_cols(a, b);
        V.swap_cols(a, b);
    }
    void add_row(std::size_t dst, std::size_t src, const T& f) {
        D.add_row(dst, src, f);
        U.add_row(dst, src, f);
        if (Uinv)
            Uinv->add_col(src, dst, S::neg(f));
    }
    void add_col(std::size_t dst, std::size_t src, const T& f) {
        D.add_col(dst, src, f);
        V.add_col(dst, src, f);
    }
    void negate_row(std::size_t r) {
        D.negate_row(r);
        U.negate_row(r);
        if (Uinv)
            Uinv->negate_col(r);
    }
};

template <class S>
SmithDecomposition reduce(const IntMatrix& A, bool track_left_inverse) {
    using T = typename S::T;
    const std::size_t m = A.rows();
    const std::size_t n = A.cols();
    Dense<S> start(m, n);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            if constexpr (std::is_same_v<T, Integer>) {
                start(i, j) = A(i, j);
            } else {
                const auto v = A(i, j).to_int64();
                if (!v)
                    throw Overflow{};
                start(i, j) = *v;
            }
        }
    Reducer<S> red{std::move(start), Dense<S>::identity(m), Dense<S>::identity(n), std::nullopt};
    if (track_left_inverse)
        red.Uinv = Dense<S>::identity(m);
    Dense<S>& D = red.D;

    std::size_t t = 0;
    const std::size_t k = std::min(m, n);
    while (t < k) {
        std::size_t pi = m, pj = n;
        for (std::size_t i = t; i < m; ++i)
            for (std::size_t j = t; j < n; ++j) {
                const T& x = D(i, j);
                if (S::zero(x))
                    continue;
                if (pi == m || S::less_abs(x, D(pi, pj))) {
                    pi = i;
                    pj = j;
                }
            }
        if (pi == m)
            break;
        red.swap_rows(t, pi);
        red.swap_cols(t, pj);

        bool clean = true;
        for (std::size_t i = t + 1; i < m; ++i) {
            if (S::zero(D(i, t)))
                continue;
            const T q = S::quot(D(i, t), D(t, t));
            red.add_row(i, t, S::neg(q));
            if (!S::zero(D(i, t)))
                clean = false;
        }
        for (std::size_t j = t + 1; j < n; ++j) {
            if (S::zero(D(t, j)))
                continue;
            const T q = S::quot(D(t, j), D(t, t));
            red.add_col(j, t, S::neg(q));
            if (!S::zero(D(t, j)))
                clean = false;
        }
        if (!clean)
            continue;

        // divisibility: fold an offending row into row t and reduce again
        bool divides = true;
        for (std::size_t i = t + 1; i < m && divides; ++i)
            for (std::size_t j = t + 1; j < n; ++j)
                if (!S::divides(D(t, t), D(i, j))) {
                    red.add_row(t, i, T(1));
                    divides = false;
                    break;
                }
        if (!divides)
            continue;

        if (D(t, t) < T(0))
            red.negate_row(t);
        ++t;
    }

    std::optional<IntMatrix> uinv;
    if (red.Uinv)
        uinv = red.Uinv->release();
    return SmithDecomposition{red.U.release(), red.D.release(), red.V.release(), std::move(uinv), t};
}

} // namespace

SmithDecomposition smith_normal_form(const IntMatrix& A, bool track_left_inverse) {
    try {
        return reduce<Native>(A, track_left_inverse);
    } catch (const Overflow&) {
        return reduce<Exact>(A, track_left_inverse);
    }
}

std::optional<IntVector> solve(const IntMatrix& A, std::span<const Integer> b) {
    if (b.size() != A.rows())
        throw std::invalid_argument("solve: right-hand side has wrong length");
    const SmithDecomposition s = smith_normal_form(A);
    const IntVector ub = s.U.apply(b);
    IntVector y(A.cols());
    for (std::size_t i = 0; i < ub.size(); ++i) {
        if (i < s.rank) {
            const Integer& d = s.D(i, i);
            if (!(ub[i] % d).is_zero())
                return std::nullopt;
            y[i] = ub[i] / d;
        } else if (!ub[i].is_zero()) {
            return std::nullopt;
        }
    }
    return s.V.apply(y);
}

IntMatrix integer_kernel(const IntMatrix& A) {
    const SmithDecomposition s = smith_normal_form(A);
    return s.V.col_range(s.rank, A.cols());
}

Integer determinant(const IntMatrix& A) {
    if (A.rows() != A.cols())
        throw std::invalid_argument("determinant: matrix is not square");
    const std::size_t n = A.rows();
    if (n == 0)
        return 1;
    // Bareiss elimination
    IntMatrix M = A;
    Integer sign = 1;
    Integer prev = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (M(k, k).is_zero()) {
            std::size_t swap = k + 1;
            while (swap < n && M(swap, k).is_zero())
                ++swap;
            if (swap == n)
                return 0;
            M.swap_rows(k, swap);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j)
                M(i, j) = (M(i, j) * M(k, k) - M(i, k) * M(k, j)) / prev;
        prev = M(k, k);
    }
    return sign * M(n - 1, n - 1);
}

} // namespace aqc
