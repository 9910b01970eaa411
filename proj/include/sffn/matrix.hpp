#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <vector>

namespace sffn {

/// Dense row-major matrix of 64-bit floats. The universal numeric carrier.
class Matrix {
  public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols);
    Matrix(std::initializer_list<std::initializer_list<double>> rows);

    static Matrix zeros(std::size_t rows, std::size_t cols);
    static Matrix identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    std::size_t size() const { return data_.size(); }

    double &operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    double operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    double *data() { return data_.data(); }
    const double *data() const { return data_.data(); }
    double *row(std::size_t i) { return data_.data() + i * cols_; }
    const double *row(std::size_t i) const { return data_.data() + i * cols_; }

    bool same_shape(const Matrix &other) const {
        return rows_ == other.rows_ && cols_ == other.cols_;
    }

    Matrix &operator+=(const Matrix &other);
    Matrix &operator-=(const Matrix &other);
    Matrix &operator*=(double s);

    /// Rows [begin, end) as a new (end-begin) x cols matrix.
    Matrix row_slice(std::size_t begin, std::size_t end) const;
    /// Copy `block` into rows [begin, begin + block.rows()).
    void set_row_slice(std::size_t begin, const Matrix &block);

    bool all_finite() const;

  private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<double> data_;
};

Matrix operator+(Matrix a, const Matrix &b);
Matrix operator-(Matrix a, const Matrix &b);
Matrix operator*(double s, Matrix a);

/// C[i,j] = sum_k A[i,k] * B[k,j], accumulated over k in ascending order.
Matrix matmul(const Matrix &a, const Matrix &b);
Matrix transpose(const Matrix &a);

double frobenius_norm(const Matrix &a);
double max_abs(const Matrix &a);
double max_abs_diff(const Matrix &a, const Matrix &b);

/// xorshift64* generator. Identical seed gives a bit-identical sample stream.
class Rng {
  public:
    explicit Rng(std::uint64_t seed);

    std::uint64_t next_u64();
    /// Uniform on [0, 1), 53-bit resolution.
    double next_uniform();
    /// Standard normal via Box-Muller, cosine branch only: exactly two raw
    /// u64 draws per sample.
    double next_gaussian();

    /// Deterministic derivation of an independent stream seed.
    static std::uint64_t derive(std::uint64_t seed, std::uint64_t stream);

  private:
    std::uint64_t state_;
};

/// Matrix with i.i.d. normal(0, std^2) entries.
Matrix gaussian(Rng &rng, std::size_t rows, std::size_t cols, double std_dev);

} // namespace sffn
