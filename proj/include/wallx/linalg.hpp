#pragma once

#include <vector>

#include "wallx/base.hpp"

namespace wallx {

// Dense rational matrix, rows x cols.
struct Mat {
    int rows = 0, cols = 0;
    std::vector<Rat> a;

    Mat() = default;
    Mat(int r, int c) : rows(r), cols(c), a((size_t)r * c, Rat(0)) {}

    Rat& at(int r, int c) { return a[(size_t)r * cols + c]; }
    const Rat& at(int r, int c) const { return a[(size_t)r * cols + c]; }

    bool is_zero() const {
        for (const auto& x : a)
            if (x != 0) return false;
        return true;
    }

    friend Mat operator*(const Mat& x, const Mat& y) {
        if (x.cols != y.rows) fail("BadShape", "matrix product shape mismatch");
        Mat r(x.rows, y.cols);
        for (int i = 0; i < x.rows; ++i)
            for (int k = 0; k < x.cols; ++k) {
                const Rat& v = x.at(i, k);
                if (v == 0) continue;
                for (int j = 0; j < y.cols; ++j)
                    if (y.at(k, j) != 0) r.at(i, j) += v * y.at(k, j);
            }
        return r;
    }
    friend Mat operator+(Mat x, const Mat& y) {
        if (x.rows != y.rows || x.cols != y.cols) fail("BadShape", "matrix sum shape mismatch");
        for (size_t i = 0; i < x.a.size(); ++i) x.a[i] += y.a[i];
        return x;
    }
    friend Mat operator-(Mat x, const Mat& y) {
        if (x.rows != y.rows || x.cols != y.cols) fail("BadShape", "matrix diff shape mismatch");
        for (size_t i = 0; i < x.a.size(); ++i) x.a[i] -= y.a[i];
        return x;
    }
    friend bool operator==(const Mat& x, const Mat& y) {
        return x.rows == y.rows && x.cols == y.cols && x.a == y.a;
    }

    static Mat identity(int n) {
        Mat m(n, n);
        for (int i = 0; i < n; ++i) m.at(i, i) = 1;
        return m;
    }
};

inline int rank(Mat m) {
    int r = 0;
    for (int c = 0; c < m.cols && r < m.rows; ++c) {
        int piv = -1;
        for (int i = r; i < m.rows; ++i)
            if (m.at(i, c) != 0) {
                piv = i;
                break;
            }
        if (piv < 0) continue;
        if (piv != r)
            for (int j = c; j < m.cols; ++j) std::swap(m.at(piv, j), m.at(r, j));
        const Rat inv = Rat(1) / m.at(r, c);
        for (int j = c; j < m.cols; ++j) m.at(r, j) *= inv;
        for (int i = 0; i < m.rows; ++i) {
            if (i == r || m.at(i, c) == 0) continue;
            const Rat f = m.at(i, c);
            for (int j = c; j < m.cols; ++j) m.at(i, j) -= f * m.at(r, j);
        }
        ++r;
    }
    return r;
}

// Basis of the right nullspace.
inline std::vector<std::vector<Rat>> nullspace(Mat m) {
    std::vector<int> pivot_of_row;
    int r = 0;
    for (int c = 0; c < m.cols && r < m.rows; ++c) {
        int piv = -1;
        for (int i = r; i < m.rows; ++i)
            if (m.at(i, c) != 0) {
                piv = i;
                break;
            }
        if (piv < 0) continue;
        if (piv != r)
            for (int j = 0; j < m.cols; ++j) std::swap(m.at(piv, j), m.at(r, j));
        const Rat inv = Rat(1) / m.at(r, c);
        for (int j = 0; j < m.cols; ++j) m.at(r, j) *= inv;
        for (int i = 0; i < m.rows; ++i) {
            if (i == r || m.at(i, c) == 0) continue;
            const Rat f = m.at(i, c);
            for (int j = 0; j < m.cols; ++j) m.at(i, j) -= f * m.at(r, j);
        }
        pivot_of_row.push_back(c);
        ++r;
    }
    std::vector<bool> is_pivot(m.cols, false);
    for (int c : pivot_of_row) is_pivot[c] = true;
    std::vector<std::vector<Rat>> basis;
    for (int c = 0; c < m.cols; ++c) {
        if (is_pivot[c]) continue;
        std::vector<Rat> v(m.cols, Rat(0));
        v[c] = 1;
        for (int i = 0; i < (int)pivot_of_row.size(); ++i) v[pivot_of_row[i]] = -m.at(i, c);
        basis.push_back(std::move(v));
    }
    return basis;
}

// Is v in the column span of m?
inline bool in_column_span(const Mat& m, const std::vector<Rat>& v) {
    if ((int)v.size() != m.rows) fail("BadShape", "vector length mismatch");
    Mat aug(m.rows, m.cols + 1);
    for (int i = 0; i < m.rows; ++i) {
        for (int j = 0; j < m.cols; ++j) aug.at(i, j) = m.at(i, j);
        aug.at(i, m.cols) = v[i];
    }
    return rank(aug) == rank(m);
}

}  // namespace wallx
