#pragma once

#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

#include "fdes/degree.hpp"

namespace fdes {

enum class Semantics { MaxMin, MaxProduct };

const char* to_string(Semantics s);

/// A possibility distribution over crisp states. Entries need not sum to 1.
using StateVector = std::vector<Degree>;

/// Dense row-major matrix of degrees. Event matrices are square; entry (i,j)
/// is the possibility of moving from crisp state i to crisp state j.
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols);
    Matrix(std::initializer_list<std::initializer_list<Degree>> rows);

    /// Throws ShapeError if the rows are ragged.
    static Matrix from_rows(const std::vector<std::vector<Degree>>& rows);
    static Matrix identity(std::size_t n);

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    bool square() const noexcept { return rows_ == cols_; }

    const Degree& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
    Degree& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }

    std::vector<Degree> row(std::size_t i) const;
    const std::vector<Degree>& data() const noexcept { return data_; }

    friend bool operator==(const Matrix&, const Matrix&) = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Degree> data_;
};

using EventMatrix = Matrix;

StateVector maxmin_apply(const StateVector& v, const Matrix& m);
StateVector maxprod_apply(const StateVector& v, const Matrix& m);
StateVector apply(const StateVector& v, const Matrix& m, Semantics s);

Matrix maxmin_matmul(const Matrix& a, const Matrix& b);
Matrix maxprod_matmul(const Matrix& a, const Matrix& b);
Matrix matmul(const Matrix& a, const Matrix& b, Semantics s);

/// Kronecker product; pair (i,j) lands at index i*|b| + j.
StateVector tensor(const StateVector& a, const StateVector& b);
Matrix tensor(const Matrix& a, const Matrix& b);

/// Largest entry; zero for an empty vector.
Degree max_element(const StateVector& v);

/// max_i min(v[i], q[i]) or max_i v[i]*q[i].
Degree inner_sup(const StateVector& v, const StateVector& q, Semantics s);

/// "[0.4 0.8]"
std::string format_vector(const StateVector& v);

} // namespace fdes
