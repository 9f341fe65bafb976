#include "rtrop/qlinalg.hpp"

#include <stdexcept>

namespace rtrop {

std::vector<std::size_t> row_reduce(RatMatrix& m) {
    std::vector<std::size_t> pivots;
    if (m.empty()) return pivots;
    const std::size_t cols = m.front().size();
    std::size_t row = 0;
    for (std::size_t col = 0; col < cols && row < m.size(); ++col) {
        std::size_t pick = row;
        while (pick < m.size() && m[pick][col] == 0) ++pick;
        if (pick == m.size()) continue;
        std::swap(m[row], m[pick]);
        Rat inv = 1 / m[row][col];
        for (auto& x : m[row]) x *= inv;
        for (std::size_t r = 0; r < m.size(); ++r) {
            if (r == row || m[r][col] == 0) continue;
            Rat factor = m[r][col];
            for (std::size_t c = col; c < cols; ++c) m[r][c] -= factor * m[row][c];
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

std::size_t rank(RatMatrix m) { return row_reduce(m).size(); }

Rat determinant(RatMatrix m) {
    const std::size_t n = m.size();
    Rat det = 1;
    for (std::size_t col = 0; col < n; ++col) {
        if (m[col].size() != n) throw std::invalid_argument("determinant of a non-square matrix");
        std::size_t pick = col;
        while (pick < n && m[pick][col] == 0) ++pick;
        if (pick == n) return 0;
        if (pick != col) {
            std::swap(m[pick], m[col]);
            det = -det;
        }
        det *= m[col][col];
        for (std::size_t r = col + 1; r < n; ++r) {
            if (m[r][col] == 0) continue;
            Rat factor = m[r][col] / m[col][col];
            for (std::size_t c = col; c < n; ++c) m[r][c] -= factor * m[col][c];
        }
    }
    return det;
}

std::optional<RatVector> solve(const RatMatrix& a, const RatVector& b) {
    const std::size_t cols = a.empty() ? 0 : a.front().size();
    RatMatrix aug = a;
    for (std::size_t i = 0; i < aug.size(); ++i) aug[i].push_back(b[i]);
    auto pivots = row_reduce(aug);
    if (!pivots.empty() && pivots.back() == cols) return std::nullopt;
    RatVector x(cols, Rat(0));
    for (std::size_t i = 0; i < pivots.size(); ++i) x[pivots[i]] = aug[i][cols];
    return x;
}

std::vector<RatVector> nullspace(const RatMatrix& a, std::size_t columns) {
    RatMatrix m = a;
    auto pivots = row_reduce(m);
    std::vector<bool> is_pivot(columns, false);
    for (auto p : pivots) is_pivot[p] = true;
    std::vector<RatVector> basis;
    for (std::size_t free = 0; free < columns; ++free) {
        if (is_pivot[free]) continue;
        RatVector v(columns, Rat(0));
        v[free] = 1;
        for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -m[i][free];
        basis.push_back(std::move(v));
    }
    return basis;
}

RatVector to_rat(const std::vector<long>& v) {
    RatVector out;
    out.reserve(v.size());
    for (long x : v) out.emplace_back(x);
    return out;
}

namespace {

RatMatrix differences(const std::vector<std::vector<long>>& points) {
    RatMatrix m;
    for (std::size_t i = 1; i < points.size(); ++i) {
        RatVector row;
        for (std::size_t j = 0; j < points[i].size(); ++j) row.emplace_back(points[i][j] - points[0][j]);
        m.push_back(std::move(row));
    }
    return m;
}

RatMatrix rows(const std::vector<std::vector<long>>& points) {
    RatMatrix m;
    for (const auto& p : points) m.push_back(to_rat(p));
    return m;
}

}  // namespace

long affine_dimension(const std::vector<std::vector<long>>& points) {
    if (points.empty()) return -1;
    return static_cast<long>(rank(differences(points)));
}

bool in_affine_span(const std::vector<std::vector<long>>& points, const std::vector<long>& q) {
    if (points.empty()) return false;
    auto extended = points;
    extended.push_back(q);
    return affine_dimension(extended) == affine_dimension(points);
}

long linear_dimension(const std::vector<std::vector<long>>& points) {
    return points.empty() ? 0 : static_cast<long>(rank(rows(points)));
}

bool in_linear_span(const std::vector<std::vector<long>>& points, const std::vector<long>& q) {
    auto extended = points;
    extended.push_back(q);
    return linear_dimension(extended) == linear_dimension(points);
}

}  // namespace rtrop
