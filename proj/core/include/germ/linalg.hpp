#pragma once

#include <optional>
#include <vector>

#include "germ/rational.hpp"

namespace germ {

/// Dense matrix over Rational with exact Gauss-Jordan elimination. Pivots
/// are chosen first-nonzero in column order; with exact arithmetic pivot
/// magnitude is irrelevant, and the fixed choice keeps every derived object
/// (ranks, kernels, witnesses) deterministic.
class QMatrix {
public:
    QMatrix() = default;
    QMatrix(int rows, int cols) : rows_(rows), cols_(cols), a_(static_cast<std::size_t>(rows) * cols) {}

    static QMatrix identity(int n);
    static QMatrix from_rows(const std::vector<std::vector<Rational>>& rows);

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    Rational& at(int r, int c) { return a_[static_cast<std::size_t>(r) * cols_ + c]; }
    const Rational& at(int r, int c) const { return a_[static_cast<std::size_t>(r) * cols_ + c]; }

    friend bool operator==(const QMatrix&, const QMatrix&) = default;

    /// In-place reduced row echelon form; returns the pivot column indices.
    std::vector<int> rref();

    int rank() const;

    /// Any exact solution of (*this) x = rhs, or nullopt when inconsistent.
    std::optional<std::vector<Rational>> solve(const std::vector<Rational>& rhs) const;

    /// Canonical kernel basis (one vector per free column of the RREF).
    std::vector<std::vector<Rational>> kernel_basis() const;

    /// True when v lies in the span of this matrix's rows.
    bool in_row_span(const std::vector<Rational>& v) const;

    std::vector<Rational> multiply(const std::vector<Rational>& v) const;

private:
    int rows_ = 0;
    int cols_ = 0;
    std::vector<Rational> a_;
};

}  // namespace germ
