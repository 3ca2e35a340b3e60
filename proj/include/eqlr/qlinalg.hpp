#pragma once
//
// Exact sparse linear algebra over Q: row echelon forms, kernels, ranks
// and linear solves. All results are exact; there is no tolerance anywhere.
//

#include "rational.hpp"

#include <cstddef>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace eqlr {

using Vector = std::vector<Rational>;
using SparseVector = std::map<std::size_t, Rational>;

struct DimensionError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

inline SparseVector to_sparse(const Vector& v) {
    SparseVector s;
    for (std::size_t i = 0; i < v.size(); ++i)
        if (!v[i].is_zero())
            s.emplace(i, v[i]);
    return s;
}

inline Vector to_dense(const SparseVector& s, std::size_t n) {
    Vector v(n);
    for (const auto& [i, q] : s) {
        if (i >= n)
            throw DimensionError("to_dense: index out of range");
        v[i] = q;
    }
    return v;
}

/// y += a * x
inline void axpy(SparseVector& y, const Rational& a, const SparseVector& x) {
    if (a.is_zero())
        return;
    for (const auto& [i, q] : x) {
        auto [it, inserted] = y.try_emplace(i, a * q);
        if (!inserted) {
            it->second += a * q;
            if (it->second.is_zero())
                y.erase(it);
        }
    }
}

inline bool is_zero_vector(const Vector& v) {
    for (const auto& q : v)
        if (!q.is_zero())
            return false;
    return true;
}

class QMatrix {
public:
    QMatrix() = default;
    QMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows) {}

    static QMatrix identity(std::size_t n) {
        QMatrix m(n, n);
        for (std::size_t i = 0; i < n; ++i)
            m.set(i, i, 1);
        return m;
    }

    static QMatrix from_rows(const std::vector<Vector>& rows, std::size_t cols) {
        QMatrix m(rows.size(), cols);
        for (std::size_t r = 0; r < rows.size(); ++r) {
            if (rows[r].size() != cols)
                throw DimensionError("QMatrix::from_rows: ragged rows");
            for (std::size_t c = 0; c < cols; ++c)
                m.set(r, c, rows[r][c]);
        }
        return m;
    }

    /// Builds the matrix whose columns are the given vectors.
    static QMatrix from_columns(const std::vector<Vector>& columns, std::size_t rows) {
        QMatrix m(rows, columns.size());
        for (std::size_t c = 0; c < columns.size(); ++c) {
            if (columns[c].size() != rows)
                throw DimensionError("QMatrix::from_columns: ragged columns");
            for (std::size_t r = 0; r < rows; ++r)
                m.set(r, c, columns[c][r]);
        }
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    void set(std::size_t r, std::size_t c, const Rational& v) {
        check(r, c);
        if (v.is_zero())
            data_[r].erase(c);
        else
            data_[r][c] = v;
    }

    void add(std::size_t r, std::size_t c, const Rational& v) {
        check(r, c);
        if (v.is_zero())
            return;
        auto [it, inserted] = data_[r].try_emplace(c, v);
        if (!inserted) {
            it->second += v;
            if (it->second.is_zero())
                data_[r].erase(it);
        }
    }

    Rational at(std::size_t r, std::size_t c) const {
        check(r, c);
        auto it = data_[r].find(c);
        return it == data_[r].end() ? Rational{} : it->second;
    }

    const SparseVector& row(std::size_t r) const { return data_.at(r); }

    std::size_t nonzeros() const {
        std::size_t n = 0;
        for (const auto& r : data_)
            n += r.size();
        return n;
    }

    Vector apply(const Vector& x) const {
        if (x.size() != cols_)
            throw DimensionError("QMatrix::apply: length mismatch");
        Vector y(rows_);
        for (std::size_t r = 0; r < rows_; ++r)
            for (const auto& [c, q] : data_[r])
                y[r] += q * x[c];
        return y;
    }

private:
    void check(std::size_t r, std::size_t c) const {
        if (r >= rows_ || c >= cols_)
            throw DimensionError("QMatrix: index (" + std::to_string(r) + "," + std::to_string(c) +
                                 ") out of bounds");
    }

    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<SparseVector> data_;
};

/// Incrementally maintained row echelon form. Each stored row has leading
/// coefficient 1 at its pivot column, and pivots are pairwise distinct.
class EchelonBasis {
public:
    explicit EchelonBasis(std::size_t dim = 0) : dim_(dim) {}

    std::size_t dimension() const { return dim_; }
    std::size_t rank() const { return rows_.size(); }
    const std::map<std::size_t, SparseVector>& rows() const { return rows_; }

    /// Residue of v modulo the current span; zero iff v lies in the span.
    SparseVector reduce(SparseVector v) const {
        auto it = v.begin();
        while (it != v.end()) {
            auto pivot = rows_.find(it->first);
            if (pivot == rows_.end()) {
                ++it;
                continue;
            }
            std::size_t col = it->first;
            Rational a = -it->second;
            axpy(v, a, pivot->second);
            it = v.upper_bound(col);
        }
        return v;
    }

    bool contains(const SparseVector& v) const { return reduce(v).empty(); }

    /// Inserts v; returns true when v was independent of the span.
    bool insert(const SparseVector& v) {
        SparseVector r = reduce(v);
        if (r.empty())
            return false;
        Rational lead = r.begin()->second.inverse();
        for (auto& [c, q] : r)
            q *= lead;
        rows_.emplace(r.begin()->first, std::move(r));
        return true;
    }

    /// Brings the rows into reduced row echelon form (pivot columns cleared
    /// in every other row).
    void make_reduced() {
        for (auto p = rows_.rbegin(); p != rows_.rend(); ++p) {
            std::size_t col = p->first;
            for (auto& [other, row] : rows_) {
                if (other >= col)
                    break;
                auto hit = row.find(col);
                if (hit != row.end()) {
                    Rational a = -hit->second;
                    axpy(row, a, p->second);
                }
            }
        }
    }

private:
    std::size_t dim_;
    std::map<std::size_t, SparseVector> rows_;
};

inline EchelonBasis row_echelon(const QMatrix& m) {
    EchelonBasis e(m.cols());
    for (std::size_t r = 0; r < m.rows(); ++r)
        e.insert(m.row(r));
    return e;
}

inline std::size_t rank(const QMatrix& m) { return row_echelon(m).rank(); }

/// Basis of the right null space { v : M v = 0 }.
inline std::vector<Vector> kernel_basis(const QMatrix& m) {
    EchelonBasis e = row_echelon(m);
    e.make_reduced();
    std::vector<Vector> basis;
    for (std::size_t free = 0; free < m.cols(); ++free) {
        if (e.rows().count(free))
            continue;
        Vector v(m.cols());
        v[free] = 1;
        for (const auto& [pivot, row] : e.rows()) {
            auto hit = row.find(free);
            if (hit != row.end())
                v[pivot] = -hit->second;
        }
        basis.push_back(std::move(v));
    }
    return basis;
}

/// Some x with M x = b, or nullopt when the system is inconsistent.
inline std::optional<Vector> solve(const QMatrix& m, const Vector& b) {
    if (b.size() != m.rows())
        throw DimensionError("solve: right-hand side has length " + std::to_string(b.size()) +
                             ", matrix has " + std::to_string(m.rows()) + " rows");
    const std::size_t aug = m.cols();
    EchelonBasis e(aug + 1);
    for (std::size_t r = 0; r < m.rows(); ++r) {
        SparseVector row = m.row(r);
        if (!b[r].is_zero())
            row.emplace(aug, b[r]);
        e.insert(row);
    }
    if (e.rows().count(aug))
        return std::nullopt;
    e.make_reduced();
    Vector x(m.cols());
    for (const auto& [pivot, row] : e.rows()) {
        auto hit = row.find(aug);
        if (hit != row.end())
            x[pivot] = hit->second;
    }
    return x;
}

} // namespace eqlr
