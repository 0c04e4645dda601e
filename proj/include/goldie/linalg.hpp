#pragma once

/*
 * Dense exact linear algebra over a FieldSpec.  Everything downstream
 * (annihilator bases, ideal-membership solves, kernel checks) reduces to
 * row reduction of small matrices, so plain Gauss-Jordan with exact
 * division is all that is needed.  Pivoting picks the first nonzero
 * entry, which keeps results deterministic.
 */

#include <optional>
#include <vector>

#include "scalars.hpp"

namespace goldie {

class FMatrix {
public:
    FMatrix(const FieldSpec& f, std::size_t rows, std::size_t cols)
        : field_(f), rows_(rows), cols_(cols),
          a_(rows * cols, FieldValue::zero(f)) {}

    const FieldSpec& field() const { return field_; }
    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    FieldValue& at(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
    const FieldValue& at(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

    /** In-place reduced row echelon form; returns the pivot columns. */
    std::vector<std::size_t> rref() {
        std::vector<std::size_t> pivots;
        std::size_t row = 0;
        for (std::size_t col = 0; col < cols_ && row < rows_; ++col) {
            std::size_t piv = row;
            while (piv < rows_ && at(piv, col).is_zero()) ++piv;
            if (piv == rows_) continue;
            swap_rows_(piv, row);
            const FieldValue inv = at(row, col).inverse();
            for (std::size_t j = col; j < cols_; ++j) at(row, j) = at(row, j) * inv;
            for (std::size_t i = 0; i < rows_; ++i) {
                if (i == row || at(i, col).is_zero()) continue;
                const FieldValue f = at(i, col);
                for (std::size_t j = col; j < cols_; ++j)
                    at(i, j) = at(i, j) - f * at(row, j);
            }
            pivots.push_back(col);
            ++row;
        }
        return pivots;
    }

    std::size_t rank() const {
        FMatrix m = *this;
        return m.rref().size();
    }

    /**
     * Basis of the right nullspace { x : A x = 0 }, one vector per free
     * column, in ascending free-column order (deterministic).
     */
    std::vector<std::vector<FieldValue>> nullspace() const {
        FMatrix m = *this;
        const auto pivots = m.rref();
        std::vector<bool> is_pivot(cols_, false);
        for (auto p : pivots) is_pivot[p] = true;

        std::vector<std::vector<FieldValue>> basis;
        for (std::size_t free = 0; free < cols_; ++free) {
            if (is_pivot[free]) continue;
            std::vector<FieldValue> x(cols_, FieldValue::zero(field_));
            x[free] = FieldValue::one(field_);
            for (std::size_t r = 0; r < pivots.size(); ++r)
                x[pivots[r]] = -m.at(r, free);
            basis.push_back(std::move(x));
        }
        return basis;
    }

    /** One solution of A x = b, if any (minimal support via free vars = 0). */
    std::optional<std::vector<FieldValue>> solve(const std::vector<FieldValue>& b) const {
        FMatrix aug(field_, rows_, cols_ + 1);
        for (std::size_t i = 0; i < rows_; ++i) {
            for (std::size_t j = 0; j < cols_; ++j) aug.at(i, j) = at(i, j);
            aug.at(i, cols_) = b[i];
        }
        const auto pivots = aug.rref();
        if (!pivots.empty() && pivots.back() == cols_) return std::nullopt;  // row [0..0 | 1]
        std::vector<FieldValue> x(cols_, FieldValue::zero(field_));
        for (std::size_t r = 0; r < pivots.size(); ++r)
            x[pivots[r]] = aug.at(r, cols_);
        return x;
    }

private:
    void swap_rows_(std::size_t i, std::size_t j) {
        if (i == j) return;
        for (std::size_t c = 0; c < cols_; ++c) std::swap(at(i, c), at(j, c));
    }

    FieldSpec field_;
    std::size_t rows_, cols_;
    std::vector<FieldValue> a_;
};

} // namespace goldie
