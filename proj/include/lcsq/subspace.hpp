#pragma once

#include "lcsq/sparse_vector.hpp"

#include <cstdint>
#include <stdexcept>
#include <vector>

namespace lcsq {

// A linear subspace of one graded piece, stored as a reduced row-echelon
// basis. Pivots are the first nonzero column of each row; rows are kept
// sorted by pivot, pivot coefficients are 1, and no row has a nonzero entry
// in another row's pivot column. This makes membership testing a reduction
// to zero and makes bases canonical, which golden-file tests rely on.
template <class Scalar>
class BasicSubspace {
public:
    explicit BasicSubspace(uint32_t ambient_dim) : ambient_dim_(ambient_dim) {}

    uint32_t ambient_dim() const { return ambient_dim_; }
    size_t rank() const { return rows_.size(); }
    const std::vector<BasicSparseVector<Scalar>>& rows() const { return rows_; }
    const std::vector<uint32_t>& pivot_cols() const { return pivot_cols_; }

    // Reduces v against the stored rows. The result has no support on any
    // pivot column.
    BasicSparseVector<Scalar> reduce(BasicSparseVector<Scalar> v) const {
        check_fits(v);
        for (size_t r = 0; r < rows_.size(); ++r) {
            if (v.empty() || v.max_col() < pivot_cols_[r]) break;
            if (const Scalar* c = v.coef(pivot_cols_[r]))
                v.axpy(-*c, rows_[r]);
        }
        return v;
    }

    bool contains(const BasicSparseVector<Scalar>& v) const {
        return reduce(v).empty();
    }

    // Inserts v into the span; returns true iff the rank grew.
    bool insert(BasicSparseVector<Scalar> v) {
        v = reduce(std::move(v));
        if (v.empty()) return false;
        Scalar inv = Scalar(1) / v.leading_coef();
        v.scale(inv);
        uint32_t pivot = v.leading_col();
        // restore reducedness of the existing rows
        for (auto& row : rows_) {
            if (const Scalar* c = row.coef(pivot)) row.axpy(-*c, v);
        }
        auto pos = std::lower_bound(pivot_cols_.begin(), pivot_cols_.end(), pivot);
        size_t idx = static_cast<size_t>(pos - pivot_cols_.begin());
        pivot_cols_.insert(pos, pivot);
        rows_.insert(rows_.begin() + idx, std::move(v));
        return true;
    }

    // True iff other is contained in this subspace.
    bool contains_subspace(const BasicSubspace& other) const {
        for (const auto& row : other.rows_)
            if (!contains(row)) return false;
        return true;
    }

private:
    uint32_t ambient_dim_ = 0;
    std::vector<BasicSparseVector<Scalar>> rows_;
    std::vector<uint32_t> pivot_cols_;

    void check_fits(const BasicSparseVector<Scalar>& v) const {
        if (!v.empty() && v.max_col() >= ambient_dim_)
            throw std::out_of_range("subspace: column index " +
                                    std::to_string(v.max_col()) +
                                    " outside ambient dimension " +
                                    std::to_string(ambient_dim_));
    }
};

using GradedSubspace = BasicSubspace<Rational>;

template <class Scalar>
BasicSubspace<Scalar>
subspace_span(const std::vector<BasicSparseVector<Scalar>>& vectors,
              uint32_t ambient_dim) {
    BasicSubspace<Scalar> s(ambient_dim);
    for (const auto& v : vectors) s.insert(v);
    return s;
}

} // namespace lcsq
