#pragma once

#include "dinv/rational.hpp"

#include <cstddef>
#include <initializer_list>
#include <stdexcept>
#include <vector>

namespace dinv {

// Dense row-major matrix over an exact scalar ring (Rat or Int).
template <class T>
class Mat {
public:
    Mat() = default;
    Mat(int rows, int cols) : rows_(rows), cols_(cols), e_(size_t(rows) * cols, T(0))
    {
        if (rows < 0 || cols < 0)
            throw std::invalid_argument("negative matrix dimension");
    }
    Mat(int rows, int cols, std::initializer_list<T> entries) : Mat(rows, cols)
    {
        if (int(entries.size()) != rows * cols)
            throw std::invalid_argument("entry count does not match shape");
        size_t k = 0;
        for (const T& v : entries)
            e_[k++] = v;
    }

    static Mat zero(int rows, int cols) { return Mat(rows, cols); }
    static Mat identity(int n)
    {
        Mat m(n, n);
        for (int i = 0; i < n; ++i)
            m(i, i) = T(1);
        return m;
    }

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    T& operator()(int i, int j) { return e_[size_t(i) * cols_ + j]; }
    const T& operator()(int i, int j) const { return e_[size_t(i) * cols_ + j]; }

    bool operator==(const Mat& o) const
    {
        return rows_ == o.rows_ && cols_ == o.cols_ && e_ == o.e_;
    }
    bool operator!=(const Mat& o) const { return !(*this == o); }

    bool is_zero() const
    {
        for (const T& v : e_)
            if (v != 0)
                return false;
        return true;
    }
    bool is_identity() const
    {
        if (rows_ != cols_)
            return false;
        for (int i = 0; i < rows_; ++i)
            for (int j = 0; j < cols_; ++j)
                if ((*this)(i, j) != (i == j ? 1 : 0))
                    return false;
        return true;
    }

    Mat operator+(const Mat& o) const
    {
        check_same_shape(o);
        Mat r(rows_, cols_);
        for (size_t k = 0; k < e_.size(); ++k)
            r.e_[k] = e_[k] + o.e_[k];
        return r;
    }
    Mat operator-(const Mat& o) const
    {
        check_same_shape(o);
        Mat r(rows_, cols_);
        for (size_t k = 0; k < e_.size(); ++k)
            r.e_[k] = e_[k] - o.e_[k];
        return r;
    }
    Mat operator-() const
    {
        Mat r(rows_, cols_);
        for (size_t k = 0; k < e_.size(); ++k)
            r.e_[k] = -e_[k];
        return r;
    }
    Mat& operator+=(const Mat& o)
    {
        check_same_shape(o);
        for (size_t k = 0; k < e_.size(); ++k)
            e_[k] += o.e_[k];
        return *this;
    }
    Mat& operator-=(const Mat& o)
    {
        check_same_shape(o);
        for (size_t k = 0; k < e_.size(); ++k)
            e_[k] -= o.e_[k];
        return *this;
    }

    Mat operator*(const Mat& o) const
    {
        if (cols_ != o.rows_)
            throw std::invalid_argument("matrix product shape mismatch");
        Mat r(rows_, o.cols_);
        for (int i = 0; i < rows_; ++i)
            for (int k = 0; k < cols_; ++k) {
                const T& a = (*this)(i, k);
                if (a == 0)
                    continue;
                for (int j = 0; j < o.cols_; ++j)
                    r(i, j) += a * o(k, j);
            }
        return r;
    }

    Mat operator*(const T& s) const
    {
        Mat r(rows_, cols_);
        for (size_t k = 0; k < e_.size(); ++k)
            r.e_[k] = e_[k] * s;
        return r;
    }

    Mat transpose() const
    {
        Mat r(cols_, rows_);
        for (int i = 0; i < rows_; ++i)
            for (int j = 0; j < cols_; ++j)
                r(j, i) = (*this)(i, j);
        return r;
    }

    // Copies `src` into this matrix with top-left corner at (i0, j0).
    void set_block(int i0, int j0, const Mat& src)
    {
        if (i0 < 0 || j0 < 0 || i0 + src.rows_ > rows_ || j0 + src.cols_ > cols_)
            throw std::invalid_argument("block out of range");
        for (int i = 0; i < src.rows_; ++i)
            for (int j = 0; j < src.cols_; ++j)
                (*this)(i0 + i, j0 + j) = src(i, j);
    }
    Mat block(int i0, int j0, int rows, int cols) const
    {
        if (i0 < 0 || j0 < 0 || i0 + rows > rows_ || j0 + cols > cols_)
            throw std::invalid_argument("block out of range");
        Mat r(rows, cols);
        for (int i = 0; i < rows; ++i)
            for (int j = 0; j < cols; ++j)
                r(i, j) = (*this)(i0 + i, j0 + j);
        return r;
    }

    void add_block(int i0, int j0, const Mat& src)
    {
        if (i0 < 0 || j0 < 0 || i0 + src.rows_ > rows_ || j0 + src.cols_ > cols_)
            throw std::invalid_argument("block out of range");
        for (int i = 0; i < src.rows_; ++i)
            for (int j = 0; j < src.cols_; ++j)
                (*this)(i0 + i, j0 + j) += src(i, j);
    }

    void swap_rows(int i, int j)
    {
        for (int k = 0; k < cols_; ++k)
            std::swap((*this)(i, k), (*this)(j, k));
    }

    Mat column(int j) const { return block(0, j, rows_, 1); }

private:
    void check_same_shape(const Mat& o) const
    {
        if (rows_ != o.rows_ || cols_ != o.cols_)
            throw std::invalid_argument("matrix shape mismatch");
    }

    int rows_ = 0;
    int cols_ = 0;
    std::vector<T> e_;
};

using QMat = Mat<Rat>;
using ZMat = Mat<Int>;

inline std::string mat_str(const QMat& m)
{
    std::string s = "[";
    for (int i = 0; i < m.rows(); ++i) {
        s += i ? "; " : "";
        for (int j = 0; j < m.cols(); ++j)
            s += (j ? " " : "") + rat_str(m(i, j));
    }
    return s + "]";
}

// Kronecker product; row-major vec convention, vec(AXB) = (A (x) B^T) vec(X).
template <class T>
Mat<T> kron(const Mat<T>& a, const Mat<T>& b)
{
    Mat<T> r(a.rows() * b.rows(), a.cols() * b.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j) {
            if (a(i, j) == 0)
                continue;
            for (int k = 0; k < b.rows(); ++k)
                for (int l = 0; l < b.cols(); ++l)
                    r(i * b.rows() + k, j * b.cols() + l) = a(i, j) * b(k, l);
        }
    return r;
}

inline QMat to_rational(const ZMat& m)
{
    QMat r(m.rows(), m.cols());
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j)
            r(i, j) = Rat(m(i, j));
    return r;
}

} // namespace dinv
