#pragma once

// Exact linear algebra over Q.
//
// A TruncatedSubspace is a subspace of Q^ambient stored as its unique reduced
// row echelon basis (pivots 1, pivot columns ascending, zeros above and below
// every pivot).  Since the representation is canonical, subspace equality is
// row-by-row equality and needs no further reduction.
//
// Spans are built by incremental insertion: each incoming row is reduced
// against the rows already in echelon form, then back-eliminates them.  On
// the structured, mostly sparse rows this library produces that is far
// cheaper than a full Gaussian pass, and coefficient growth stays tame.

#include "verma/rational.hpp"

#include <cstddef>
#include <stdexcept>
#include <utility>
#include <vector>

namespace verma {

using RatVector = std::vector<Rational>;

class TruncatedSubspace {
  public:
    TruncatedSubspace() = default;
    explicit TruncatedSubspace(std::size_t ambient) : ambient_(ambient) {}

    static TruncatedSubspace span(std::size_t ambient, const std::vector<RatVector>& rows) {
        TruncatedSubspace s(ambient);
        for (const RatVector& r : rows) s.insert(r);
        return s;
    }

    std::size_t ambient_dim() const { return ambient_; }
    std::size_t dim() const { return rows_.size(); }
    const std::vector<RatVector>& basis() const { return rows_; }
    const std::vector<std::size_t>& pivots() const { return pivots_; }

    // Adds one vector to the span; returns true when it enlarged the space.
    bool insert(RatVector v) {
        if (v.size() != ambient_) throw std::invalid_argument("TruncatedSubspace: row length mismatch");
        reduce_in_place(v);
        std::size_t p = first_nonzero(v);
        if (p == ambient_) return false;
        if (v[p] != 1) {
            Rational inv = 1 / v[p];
            for (std::size_t j = p; j < ambient_; ++j)
                if (!is_zero(v[j])) v[j] *= inv;
        }
        // Clear column p in the existing rows, then keep pivots ascending.
        for (std::size_t k = 0; k < rows_.size(); ++k) {
            const Rational& c = rows_[k][p];
            if (!is_zero(c)) axpy(rows_[k], -c, v, p);
        }
        std::size_t pos = 0;
        while (pos < pivots_.size() && pivots_[pos] < p) ++pos;
        rows_.insert(rows_.begin() + static_cast<std::ptrdiff_t>(pos), std::move(v));
        pivots_.insert(pivots_.begin() + static_cast<std::ptrdiff_t>(pos), p);
        return true;
    }

    // Residual of v after eliminating all pivot coordinates.
    RatVector reduce(RatVector v) const {
        if (v.size() != ambient_) throw std::invalid_argument("TruncatedSubspace: row length mismatch");
        reduce_in_place(v);
        return v;
    }

    bool contains(const RatVector& v) const {
        RatVector r = reduce(v);
        return first_nonzero(r) == r.size();
    }

    friend bool operator==(const TruncatedSubspace& a, const TruncatedSubspace& b) {
        return a.ambient_ == b.ambient_ && a.rows_ == b.rows_;
    }
    friend bool operator!=(const TruncatedSubspace& a, const TruncatedSubspace& b) { return !(a == b); }

  private:
    static std::size_t first_nonzero(const RatVector& v) {
        std::size_t j = 0;
        while (j < v.size() && is_zero(v[j])) ++j;
        return j;
    }

    // y += c * x, skipping the known-zero prefix of x.
    static void axpy(RatVector& y, const Rational& c, const RatVector& x, std::size_t from) {
        for (std::size_t j = from; j < x.size(); ++j)
            if (!is_zero(x[j])) y[j] += c * x[j];
    }

    void reduce_in_place(RatVector& v) const {
        for (std::size_t k = 0; k < rows_.size(); ++k) {
            const Rational& c = v[pivots_[k]];
            if (!is_zero(c)) axpy(v, -c, rows_[k], pivots_[k]);
        }
    }

    std::size_t ambient_ = 0;
    std::vector<RatVector> rows_;     // reduced row echelon basis
    std::vector<std::size_t> pivots_; // pivot column of each row, ascending
};

// Kernel of the linear map Q^r -> Q^c sending basis vector i to rows[i].
// All rows must share the length c; the result lives in Q^r.
inline TruncatedSubspace kernel(const std::vector<RatVector>& rows) {
    const std::size_t r = rows.size();
    std::size_t c = r ? rows[0].size() : 0;
    for (const RatVector& row : rows)
        if (row.size() != c) throw std::invalid_argument("kernel: ragged rows");

    // Row-reduce the transpose (c x r); its null space in Q^r is the kernel.
    TruncatedSubspace t(r);
    for (std::size_t j = 0; j < c; ++j) {
        RatVector col(r);
        for (std::size_t i = 0; i < r; ++i) col[i] = rows[i][j];
        t.insert(std::move(col));
    }
    // Standard free-column construction, then one more reduction pass for
    // canonical form (the raw free-column vectors need not be reduced rows).
    std::vector<bool> is_pivot(r, false);
    for (std::size_t p : t.pivots()) is_pivot[p] = true;
    TruncatedSubspace ker(r);
    for (std::size_t f = 0; f < r; ++f) {
        if (is_pivot[f]) continue;
        RatVector v(r);
        v[f] = 1;
        for (std::size_t k = 0; k < t.dim(); ++k) v[t.pivots()[k]] = -t.basis()[k][f];
        ker.insert(std::move(v));
    }
    return ker;
}

inline TruncatedSubspace sum(const TruncatedSubspace& a, const TruncatedSubspace& b) {
    if (a.ambient_dim() != b.ambient_dim()) throw std::invalid_argument("sum: ambient mismatch");
    TruncatedSubspace s = a;
    for (const RatVector& row : b.basis()) s.insert(row);
    return s;
}

inline TruncatedSubspace intersect(const TruncatedSubspace& a, const TruncatedSubspace& b) {
    if (a.ambient_dim() != b.ambient_dim()) throw std::invalid_argument("intersect: ambient mismatch");
    // (u, v) lies in the left kernel of the stacked basis rows exactly when
    // sum u_i a_i = -sum v_j b_j, and that common value runs over exactly
    // the intersection.
    std::vector<RatVector> stacked;
    stacked.reserve(a.dim() + b.dim());
    for (const RatVector& row : a.basis()) stacked.push_back(row);
    for (const RatVector& row : b.basis()) stacked.push_back(row);
    TruncatedSubspace rel = kernel(stacked);
    TruncatedSubspace out(a.ambient_dim());
    for (const RatVector& uv : rel.basis()) {
        RatVector w(a.ambient_dim());
        for (std::size_t i = 0; i < a.dim(); ++i)
            if (!is_zero(uv[i]))
                for (std::size_t j = 0; j < a.ambient_dim(); ++j) w[j] += uv[i] * a.basis()[i][j];
        out.insert(std::move(w));
    }
    return out;
}

} // namespace verma
