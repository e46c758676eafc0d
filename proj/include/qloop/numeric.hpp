#pragma once

#include <algorithm>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "qloop/rat.hpp"

namespace qloop {

// Sparse matrix over exact rationals, used by the point-evaluation checks
// (Yang-Baxter and RLL). Column-major, rows sorted within each column.
class SparseQMatrix {
public:
    SparseQMatrix() = default;

    SparseQMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(cols) {}

    static SparseQMatrix identity(std::size_t n) {
        SparseQMatrix m(n, n);
        for (std::size_t j = 0; j < n; ++j) m.data_[j].push_back({j, Rat(1)});
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    void add(std::size_t row, std::size_t col, const Rat& value) {
        if (value == 0) return;
        auto& column = data_.at(col);
        auto it = std::lower_bound(column.begin(), column.end(), row,
                                   [](const auto& e, std::size_t r) { return e.first < r; });
        if (it != column.end() && it->first == row) {
            it->second += value;
            if (it->second == 0) column.erase(it);
        } else {
            column.insert(it, {row, value});
        }
    }

    Rat entry(std::size_t row, std::size_t col) const {
        for (const auto& [r, v] : data_.at(col))
            if (r == row) return v;
        return Rat(0);
    }

    const std::vector<std::pair<std::size_t, Rat>>& column(std::size_t col) const {
        return data_.at(col);
    }

    friend SparseQMatrix operator*(const SparseQMatrix& a, const SparseQMatrix& b) {
        if (a.cols_ != b.rows_) throw std::domain_error("SparseQMatrix: dimension mismatch");
        SparseQMatrix out(a.rows_, b.cols_);
        std::vector<Rat> dense(a.rows_, Rat(0));
        std::vector<std::size_t> touched;
        for (std::size_t j = 0; j < b.cols_; ++j) {
            for (const auto& [k, bv] : b.data_[j]) {
                for (const auto& [r, av] : a.data_[k]) {
                    if (dense[r] == 0) touched.push_back(r);
                    dense[r] += av * bv;
                }
            }
            std::sort(touched.begin(), touched.end());
            for (std::size_t r : touched) {
                if (dense[r] != 0) out.data_[j].push_back({r, dense[r]});
                dense[r] = 0;
            }
            touched.clear();
        }
        return out;
    }

    friend SparseQMatrix operator-(const SparseQMatrix& a, const SparseQMatrix& b) {
        if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
            throw std::domain_error("SparseQMatrix: shape mismatch");
        SparseQMatrix out = a;
        for (std::size_t j = 0; j < b.cols_; ++j)
            for (const auto& [r, v] : b.data_[j]) out.add(r, j, -v);
        return out;
    }

    bool is_zero() const {
        for (const auto& c : data_)
            if (!c.empty()) return false;
        return true;
    }

    // Kronecker product; index convention (i1, i2) -> i1 * b.rows + i2.
    friend SparseQMatrix kron(const SparseQMatrix& a, const SparseQMatrix& b) {
        SparseQMatrix out(a.rows_ * b.rows_, a.cols_ * b.cols_);
        for (std::size_t ja = 0; ja < a.cols_; ++ja) {
            for (const auto& [ra, va] : a.data_[ja]) {
                for (std::size_t jb = 0; jb < b.cols_; ++jb) {
                    for (const auto& [rb, vb] : b.data_[jb])
                        out.add(ra * b.rows_ + rb, ja * b.cols_ + jb, va * vb);
                }
            }
        }
        return out;
    }

    // First nonzero entry among columns accepted by the filter.
    template <typename ColFilter>
    std::optional<std::string> nonzero_witness(ColFilter&& keep) const {
        for (std::size_t j = 0; j < cols_; ++j) {
            if (!keep(j)) continue;
            if (!data_[j].empty())
                return "entry(" + std::to_string(data_[j][0].first) + "," + std::to_string(j) +
                       ") = " + rat_str(data_[j][0].second);
        }
        return std::nullopt;
    }

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<std::vector<std::pair<std::size_t, Rat>>> data_;
};

}  // namespace qloop
