#include "qsu2/linalg.hpp"

#include <algorithm>

namespace qsu2 {

Vec EchelonBasis::reduce(Vec v) const {
    for (size_t r = 0; r < rows_.size(); ++r) {
        const MuScalar& c = v[pivots_[r]];
        if (c.is_zero()) continue;
        MuScalar f = c;  // pivot of row r is 1
        for (size_t j = 0; j < ncols_; ++j)
            if (!rows_[r][j].is_zero()) v[j] -= f * rows_[r][j];
    }
    return v;
}

bool EchelonBasis::add(Vec v) {
    v = reduce(std::move(v));
    size_t p = ncols_;
    for (size_t j = 0; j < ncols_; ++j)
        if (!v[j].is_zero()) {
            p = j;
            break;
        }
    if (p == ncols_) return false;
    MuScalar inv = v[p].inv();
    for (auto& x : v) x *= inv;
    // back-substitute into existing rows to stay fully reduced
    for (size_t r = 0; r < rows_.size(); ++r) {
        MuScalar c = rows_[r][p];
        if (c.is_zero()) continue;
        for (size_t j = 0; j < ncols_; ++j)
            if (!v[j].is_zero()) rows_[r][j] -= c * v[j];
    }
    rows_.push_back(std::move(v));
    pivots_.push_back(p);
    return true;
}

bool EchelonBasis::contains(Vec v) const {
    v = reduce(std::move(v));
    for (auto& x : v)
        if (!x.is_zero()) return false;
    return true;
}

std::vector<size_t> EchelonBasis::free_columns() const {
    std::vector<bool> used(ncols_, false);
    for (size_t p : pivots_) used[p] = true;
    std::vector<size_t> f;
    for (size_t j = 0; j < ncols_; ++j)
        if (!used[j]) f.push_back(j);
    return f;
}

void ExpressSolver::add(const Vec& v) {
    if (v.size() != ncols_) throw Error("ExpressSolver: size mismatch");
    if (basis_.ncols() == 0) basis_ = EchelonBasis(ncols_ + nvec_ + 64);
    // rows carry (v | bookkeeping); grow bookkeeping lazily by rebuilding
    // when capacity is exceeded.
    if (ncols_ + nvec_ + 1 > basis_.ncols()) {
        EchelonBasis wider(ncols_ + 2 * nvec_ + 64);
        for (auto row : basis_.rows()) {
            row.resize(wider.ncols());
            wider.add(std::move(row));
        }
        basis_ = std::move(wider);
    }
    Vec row(basis_.ncols());
    std::copy(v.begin(), v.end(), row.begin());
    row[ncols_ + nvec_] = MuScalar(1);
    basis_.add(std::move(row));
    ++nvec_;
}

std::optional<Vec> ExpressSolver::express(const Vec& b) const {
    if (b.size() != ncols_) throw Error("ExpressSolver: size mismatch");
    if (nvec_ == 0) {
        for (auto& x : b)
            if (!x.is_zero()) return std::nullopt;
        return Vec();
    }
    Vec row(basis_.ncols());
    std::copy(b.begin(), b.end(), row.begin());
    row = basis_.reduce(std::move(row));
    for (size_t j = 0; j < ncols_; ++j)
        if (!row[j].is_zero()) return std::nullopt;
    // residual bookkeeping c satisfies  b + sum_i c_i v_i = 0
    Vec coords(nvec_);
    for (size_t i = 0; i < nvec_; ++i) coords[i] = -row[ncols_ + i];
    return coords;
}

Mat nullspace(const Mat& rows, size_t ncols) {
    EchelonBasis eb(ncols);
    for (auto& r : rows) eb.add(r);
    Mat out;
    for (size_t f : eb.free_columns()) {
        Vec v(ncols);
        v[f] = MuScalar(1);
        // solve pivot entries: v_p = -row_p[f]
        for (size_t r = 0; r < eb.rank(); ++r) v[eb.pivots()[r]] = -eb.rows()[r][f];
        out.push_back(std::move(v));
    }
    return out;
}

Vec solve_unique(const Mat& a, const Vec& b) {
    size_t n = a.empty() ? 0 : a[0].size();
    ExpressSolver es(a.size());
    // columns of A as vectors over the rows
    for (size_t j = 0; j < n; ++j) {
        Vec col(a.size());
        for (size_t i = 0; i < a.size(); ++i) col[i] = a[i][j];
        es.add(col);
    }
    auto x = es.express(b);
    if (!x) throw SolveError("linear system has no solution");
    if (es.rank() != n) throw SolveError("linear system is singular");
    return *x;
}

}  // namespace qsu2
