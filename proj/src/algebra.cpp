#include "fdes/algebra.hpp"

#include <algorithm>

#include "fdes/errors.hpp"

namespace fdes {

const char* to_string(Semantics s)
{
    return s == Semantics::MaxMin ? "max-min" : "max-product";
}

Matrix::Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

Matrix::Matrix(std::initializer_list<std::initializer_list<Degree>> rows)
{
    std::vector<std::vector<Degree>> tmp;
    for (const auto& r : rows)
        tmp.emplace_back(r);
    *this = from_rows(tmp);
}

Matrix Matrix::from_rows(const std::vector<std::vector<Degree>>& rows)
{
    Matrix m(rows.size(), rows.empty() ? 0 : rows.front().size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != m.cols_)
            throw ShapeError("row " + std::to_string(i) + " has " + std::to_string(rows[i].size())
                             + " entries, expected " + std::to_string(m.cols_));
        std::copy(rows[i].begin(), rows[i].end(), m.data_.begin() + static_cast<std::ptrdiff_t>(i * m.cols_));
    }
    return m;
}

Matrix Matrix::identity(std::size_t n)
{
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        m(i, i) = Degree::one();
    return m;
}

std::vector<Degree> Matrix::row(std::size_t i) const
{
    const auto first = data_.begin() + static_cast<std::ptrdiff_t>(i * cols_);
    return {first, first + static_cast<std::ptrdiff_t>(cols_)};
}

namespace {

template <typename Op>
StateVector apply_with(const StateVector& v, const Matrix& m, Op op)
{
    if (v.size() != m.rows())
        throw DimensionError(v.size(), m.rows());
    StateVector out(m.cols());
    for (std::size_t l = 0; l < v.size(); ++l) {
        if (v[l].is_zero())
            continue;
        for (std::size_t j = 0; j < m.cols(); ++j) {
            Degree c = op(v[l], m(l, j));
            if (out[j] < c)
                out[j] = std::move(c);
        }
    }
    return out;
}

template <typename Op>
Matrix matmul_with(const Matrix& a, const Matrix& b, Op op)
{
    if (a.cols() != b.rows())
        throw DimensionError(a.cols(), b.rows());
    Matrix out(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t l = 0; l < a.cols(); ++l) {
            if (a(i, l).is_zero())
                continue;
            for (std::size_t j = 0; j < b.cols(); ++j) {
                Degree c = op(a(i, l), b(l, j));
                if (out(i, j) < c)
                    out(i, j) = std::move(c);
            }
        }
    return out;
}

struct MinOp {
    Degree operator()(const Degree& x, const Degree& y) const { return std::min(x, y); }
};

struct ProductOp {
    Degree operator()(const Degree& x, const Degree& y) const { return x * y; }
};

} // namespace

StateVector maxmin_apply(const StateVector& v, const Matrix& m) { return apply_with(v, m, MinOp{}); }
StateVector maxprod_apply(const StateVector& v, const Matrix& m) { return apply_with(v, m, ProductOp{}); }

StateVector apply(const StateVector& v, const Matrix& m, Semantics s)
{
    return s == Semantics::MaxMin ? maxmin_apply(v, m) : maxprod_apply(v, m);
}

Matrix maxmin_matmul(const Matrix& a, const Matrix& b) { return matmul_with(a, b, MinOp{}); }
Matrix maxprod_matmul(const Matrix& a, const Matrix& b) { return matmul_with(a, b, ProductOp{}); }

Matrix matmul(const Matrix& a, const Matrix& b, Semantics s)
{
    return s == Semantics::MaxMin ? maxmin_matmul(a, b) : maxprod_matmul(a, b);
}

StateVector tensor(const StateVector& a, const StateVector& b)
{
    StateVector out;
    out.reserve(a.size() * b.size());
    for (const auto& x : a)
        for (const auto& y : b)
            out.push_back(x * y);
    return out;
}

Matrix tensor(const Matrix& a, const Matrix& b)
{
    Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) {
            if (a(i, j).is_zero())
                continue;
            for (std::size_t k = 0; k < b.rows(); ++k)
                for (std::size_t l = 0; l < b.cols(); ++l)
                    out(i * b.rows() + k, j * b.cols() + l) = a(i, j) * b(k, l);
        }
    return out;
}

Degree max_element(const StateVector& v)
{
    Degree best;
    for (const auto& x : v)
        if (best < x)
            best = x;
    return best;
}

Degree inner_sup(const StateVector& v, const StateVector& q, Semantics s)
{
    if (v.size() != q.size())
        throw DimensionError(v.size(), q.size());
    Degree best;
    for (std::size_t i = 0; i < v.size(); ++i) {
        Degree c = s == Semantics::MaxMin ? std::min(v[i], q[i]) : v[i] * q[i];
        if (best < c)
            best = std::move(c);
    }
    return best;
}

std::string format_vector(const StateVector& v)
{
    std::string out = "[";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i != 0)
            out += ' ';
        out += v[i].to_string();
    }
    return out + "]";
}

} // namespace fdes
