#pragma once

/**
 * @file cyc_matrix.hpp
 * @brief Dense matrices over Q(eta).
 *
 * Storage is row-major. The canonical serialization (entries joined by a
 * space, rows joined by ';') is used as a hash key for group elements, so
 * two equal matrices always serialize to the same bytes.
 */

#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "cyc8.hpp"
#include "error.hpp"

namespace z4cent {

class CycMatrix {
public:
    CycMatrix() = default;
    CycMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), entries_(rows * cols) {}
    CycMatrix(std::size_t rows, std::size_t cols, std::vector<Cyc8> entries)
        : rows_(rows), cols_(cols), entries_(std::move(entries)) {
        if (entries_.size() != rows_ * cols_) {
            throw DimensionMismatch("entry count does not match " + std::to_string(rows_) + "x" +
                                    std::to_string(cols_));
        }
    }
    CycMatrix(std::initializer_list<std::initializer_list<Cyc8>> rows) {
        rows_ = rows.size();
        cols_ = rows_ == 0 ? 0 : rows.begin()->size();
        entries_.reserve(rows_ * cols_);
        for (const auto& row : rows) {
            if (row.size() != cols_) throw DimensionMismatch("ragged matrix literal");
            entries_.insert(entries_.end(), row.begin(), row.end());
        }
    }

    static CycMatrix identity(std::size_t n) {
        CycMatrix m(n, n);
        for (std::size_t k = 0; k < n; ++k) m(k, k) = 1;
        return m;
    }

    static CycMatrix diagonal(std::span<const Cyc8> diag) {
        CycMatrix m(diag.size(), diag.size());
        for (std::size_t k = 0; k < diag.size(); ++k) m(k, k) = diag[k];
        return m;
    }
    static CycMatrix diagonal(std::initializer_list<Cyc8> diag) {
        return diagonal(std::span<const Cyc8>(diag.begin(), diag.size()));
    }

    [[nodiscard]] std::size_t rows() const { return rows_; }
    [[nodiscard]] std::size_t cols() const { return cols_; }
    [[nodiscard]] bool is_square() const { return rows_ == cols_; }
    [[nodiscard]] std::span<const Cyc8> entries() const { return entries_; }

    Cyc8& operator()(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
    const Cyc8& operator()(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }

    friend bool operator==(const CycMatrix& a, const CycMatrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.entries_ == b.entries_;
    }

    CycMatrix operator-() const {
        CycMatrix r = *this;
        for (auto& e : r.entries_) e = -e;
        return r;
    }

    friend CycMatrix operator+(const CycMatrix& a, const CycMatrix& b) {
        a.require_same_shape(b);
        CycMatrix r = a;
        for (std::size_t k = 0; k < r.entries_.size(); ++k) r.entries_[k] += b.entries_[k];
        return r;
    }
    friend CycMatrix operator-(const CycMatrix& a, const CycMatrix& b) {
        a.require_same_shape(b);
        CycMatrix r = a;
        for (std::size_t k = 0; k < r.entries_.size(); ++k) r.entries_[k] -= b.entries_[k];
        return r;
    }

    friend CycMatrix operator*(const Cyc8& s, const CycMatrix& m) {
        CycMatrix r = m;
        for (auto& e : r.entries_) e = s * e;
        return r;
    }

    // Zero entries of the left factor are skipped; representation matrices
    // are mostly diagonal or sparse.
    friend CycMatrix operator*(const CycMatrix& a, const CycMatrix& b) {
        if (a.cols_ != b.rows_) {
            throw DimensionMismatch("cannot multiply " + a.shape() + " by " + b.shape());
        }
        CycMatrix r(a.rows_, b.cols_);
        for (std::size_t i = 0; i < a.rows_; ++i) {
            for (std::size_t k = 0; k < a.cols_; ++k) {
                const Cyc8& aik = a(i, k);
                if (aik.is_zero()) continue;
                for (std::size_t j = 0; j < b.cols_; ++j) {
                    const Cyc8& bkj = b(k, j);
                    if (bkj.is_zero()) continue;
                    r(i, j) += aik * bkj;
                }
            }
        }
        return r;
    }

    [[nodiscard]] CycMatrix pow(long e) const {
        require_square("pow");
        if (e < 0) return inverse().pow(-e);
        CycMatrix result = identity(rows_);
        CycMatrix base = *this;
        while (e > 0) {
            if (e & 1) result = result * base;
            e >>= 1;
            if (e > 0) base = base * base;
        }
        return result;
    }

    [[nodiscard]] CycMatrix transpose() const {
        CycMatrix r(cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) r(j, i) = (*this)(i, j);
        return r;
    }

    [[nodiscard]] CycMatrix conj() const {
        CycMatrix r = *this;
        for (auto& e : r.entries_) e = e.conj();
        return r;
    }

    [[nodiscard]] CycMatrix conj_transpose() const { return conj().transpose(); }

    [[nodiscard]] Cyc8 trace() const {
        require_square("trace");
        Cyc8 t;
        for (std::size_t k = 0; k < rows_; ++k) t += (*this)(k, k);
        return t;
    }

    /// True when the matrix is lambda * I for some lambda.
    [[nodiscard]] bool is_scalar() const {
        if (!is_square()) return false;
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) {
                if (i == j ? (*this)(i, j) != (*this)(0, 0) : !(*this)(i, j).is_zero()) return false;
            }
        return true;
    }

    [[nodiscard]] bool is_identity() const { return is_square() && is_scalar() && (rows_ == 0 || (*this)(0, 0) == 1); }

    /// Kronecker product; entry ((i,k),(j,l)) lands at (i*b.rows + k, j*b.cols + l).
    [[nodiscard]] CycMatrix kron(const CycMatrix& b) const {
        CycMatrix r(rows_ * b.rows_, cols_ * b.cols_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) {
                const Cyc8& aij = (*this)(i, j);
                if (aij.is_zero()) continue;
                for (std::size_t k = 0; k < b.rows_; ++k)
                    for (std::size_t l = 0; l < b.cols_; ++l) {
                        const Cyc8& bkl = b(k, l);
                        if (bkl.is_zero()) continue;
                        r(i * b.rows_ + k, j * b.cols_ + l) = aij * bkl;
                    }
            }
        return r;
    }

    /// Exact inverse by Gauss-Jordan elimination over the field.
    [[nodiscard]] CycMatrix inverse() const {
        require_square("inverse");
        const std::size_t n = rows_;
        CycMatrix work = *this;
        CycMatrix inv = identity(n);
        for (std::size_t col = 0; col < n; ++col) {
            std::size_t pivot = col;
            while (pivot < n && work(pivot, col).is_zero()) ++pivot;
            if (pivot == n) throw SingularMatrix();
            if (pivot != col) {
                work.swap_rows(pivot, col);
                inv.swap_rows(pivot, col);
            }
            const Cyc8 scale = work(col, col).inverse();
            work.scale_row(col, scale);
            inv.scale_row(col, scale);
            for (std::size_t r = 0; r < n; ++r) {
                if (r == col || work(r, col).is_zero()) continue;
                const Cyc8 factor = work(r, col);
                work.add_row_multiple(r, col, -factor);
                inv.add_row_multiple(r, col, -factor);
            }
        }
        return inv;
    }

    /// Exact determinant by Gaussian elimination.
    [[nodiscard]] Cyc8 det() const {
        require_square("det");
        const std::size_t n = rows_;
        CycMatrix work = *this;
        Cyc8 result(1);
        for (std::size_t col = 0; col < n; ++col) {
            std::size_t pivot = col;
            while (pivot < n && work(pivot, col).is_zero()) ++pivot;
            if (pivot == n) return Cyc8();
            if (pivot != col) {
                work.swap_rows(pivot, col);
                result = -result;
            }
            const Cyc8& p = work(col, col);
            result = result * p;
            const Cyc8 pinv = p.inverse();
            for (std::size_t r = col + 1; r < n; ++r) {
                if (work(r, col).is_zero()) continue;
                const Cyc8 factor = work(r, col) * pinv;
                work.add_row_multiple(r, col, -factor);
            }
        }
        return result;
    }

    /// Rank by row reduction.
    [[nodiscard]] std::size_t rank() const {
        CycMatrix work = *this;
        std::size_t rank = 0;
        for (std::size_t col = 0; col < cols_ && rank < rows_; ++col) {
            std::size_t pivot = rank;
            while (pivot < rows_ && work(pivot, col).is_zero()) ++pivot;
            if (pivot == rows_) continue;
            work.swap_rows(pivot, rank);
            const Cyc8 pinv = work(rank, col).inverse();
            for (std::size_t r = rank + 1; r < rows_; ++r) {
                if (work(r, col).is_zero()) continue;
                const Cyc8 factor = work(r, col) * pinv;
                work.add_row_multiple(r, rank, -factor);
            }
            ++rank;
        }
        return rank;
    }

    /// Canonical serialization: entries separated by ' ', rows by ';'.
    [[nodiscard]] std::string serialize() const {
        std::string out;
        for (std::size_t i = 0; i < rows_; ++i) {
            if (i) out += ';';
            for (std::size_t j = 0; j < cols_; ++j) {
                if (j) out += ' ';
                out += (*this)(i, j).to_string();
            }
        }
        return out;
    }

    [[nodiscard]] std::string shape() const { return std::to_string(rows_) + "x" + std::to_string(cols_); }

private:
    void require_square(const char* op) const {
        if (!is_square()) throw DimensionMismatch(std::string(op) + " needs a square matrix, got " + shape());
    }
    void require_same_shape(const CycMatrix& b) const {
        if (rows_ != b.rows_ || cols_ != b.cols_) throw DimensionMismatch(shape() + " vs " + b.shape());
    }
    void swap_rows(std::size_t a, std::size_t b) {
        for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(a, j), (*this)(b, j));
    }
    void scale_row(std::size_t r, const Cyc8& s) {
        for (std::size_t j = 0; j < cols_; ++j) (*this)(r, j) = s * (*this)(r, j);
    }
    // row[target] += s * row[source]
    void add_row_multiple(std::size_t target, std::size_t source, const Cyc8& s) {
        for (std::size_t j = 0; j < cols_; ++j) {
            if ((*this)(source, j).is_zero()) continue;
            (*this)(target, j) += s * (*this)(source, j);
        }
    }

    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Cyc8> entries_;
};

}  // namespace z4cent
