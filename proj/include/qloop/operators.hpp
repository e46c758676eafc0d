#pragma once

#include <algorithm>
#include <functional>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "qloop/basis.hpp"
#include "qloop/numeric.hpp"
#include "qloop/zeta.hpp"

namespace qloop {

// Sparse vector over ZPoly, indexed by basis ordinals.
using SparseVec = std::vector<std::pair<std::size_t, ZPoly>>;

// Sparse exact matrix acting on a degree-truncated basis. Entries carry
// Scalar coefficients times zeta-monomials. Two a-priori degree bounds are
// tracked for the safe-domain bookkeeping: shift_max, the largest net
// degree change of the (full-space) operator, and peak = max_raise, the
// largest intermediate excursion above the starting degree along any
// evaluation path. For a product A*B (B first) the excursion is
// max(peak_B, shift_B + peak_A) and shifts add; the generator words used
// here are degree-homogeneous, which makes these bounds exact enough to
// certify truncated computations: results are column-exact whenever
// degree(column) + max_raise <= truncation cap.
class GradedOperator {
public:
    GradedOperator() = default;

    GradedOperator(BasisPtr domain, BasisPtr codomain)
        : domain_(std::move(domain)),
          codomain_(std::move(codomain)),
          cols_(domain_->size()) {}

    explicit GradedOperator(BasisPtr basis) : GradedOperator(basis, basis) {}

    static GradedOperator identity(const BasisPtr& basis) {
        GradedOperator op(basis);
        for (std::size_t j = 0; j < basis->size(); ++j) op.cols_[j].push_back({j, ZPoly::one()});
        return op;
    }

    static GradedOperator diagonal(const BasisPtr& basis,
                                   const std::function<ZPoly(std::size_t)>& entry) {
        GradedOperator op(basis);
        for (std::size_t j = 0; j < basis->size(); ++j) {
            ZPoly v = entry(j);
            if (!v.is_zero()) op.cols_[j].push_back({j, std::move(v)});
        }
        return op;
    }

    const BasisPtr& domain() const { return domain_; }
    const BasisPtr& codomain() const { return codomain_; }

    long max_raise() const { return peak_; }

    long shift_max() const { return shift_max_; }

    // Declares the a-priori net degree shift (may be negative).
    void set_max_raise(long net_shift) {
        shift_max_ = net_shift;
        peak_ = std::max(0L, net_shift);
    }

    void set_degree_bounds(long shift, long peak) {
        shift_max_ = shift;
        peak_ = peak;
    }

    // Sets the bounds from the actual entries (exact for generator matrices
    // whose raising entries survive the truncation).
    void compute_max_raise_from_entries() {
        long r = 0;
        for (std::size_t j = 0; j < cols_.size(); ++j)
            for (const auto& [row, v] : cols_[j]) {
                (void)v;
                r = std::max(r, codomain_->degree(row) - domain_->degree(j));
            }
        set_max_raise(r);
    }

    void add_entry(std::size_t row, std::size_t col, const ZPoly& value) {
        if (value.is_zero()) return;
        auto& column = cols_.at(col);
        auto it = std::lower_bound(column.begin(), column.end(), row,
                                   [](const auto& e, std::size_t r) { return e.first < r; });
        if (it != column.end() && it->first == row) {
            it->second += value;
            if (it->second.is_zero()) column.erase(it);
        } else {
            column.insert(it, {row, value});
        }
    }

    ZPoly entry(std::size_t row, std::size_t col) const {
        for (const auto& [r, v] : cols_.at(col))
            if (r == row) return v;
        return ZPoly();
    }

    const std::vector<std::pair<std::size_t, ZPoly>>& column(std::size_t col) const {
        return cols_.at(col);
    }

    bool is_zero() const {
        for (const auto& c : cols_)
            if (!c.empty()) return false;
        return true;
    }

    std::size_t nnz() const {
        std::size_t n = 0;
        for (const auto& c : cols_) n += c.size();
        return n;
    }

    friend GradedOperator operator+(const GradedOperator& a, const GradedOperator& b) {
        check_same_shape(a, b);
        GradedOperator out = a;
        for (std::size_t j = 0; j < b.cols_.size(); ++j)
            for (const auto& [row, v] : b.cols_[j]) out.add_entry(row, j, v);
        out.shift_max_ = std::max(a.shift_max_, b.shift_max_);
        out.peak_ = std::max(a.peak_, b.peak_);
        return out;
    }

    friend GradedOperator operator-(const GradedOperator& a, const GradedOperator& b) {
        check_same_shape(a, b);
        GradedOperator out = a;
        for (std::size_t j = 0; j < b.cols_.size(); ++j)
            for (const auto& [row, v] : b.cols_[j]) out.add_entry(row, j, -v);
        out.shift_max_ = std::max(a.shift_max_, b.shift_max_);
        out.peak_ = std::max(a.peak_, b.peak_);
        return out;
    }

    friend GradedOperator operator-(const GradedOperator& a) {
        GradedOperator out = a;
        for (auto& col : out.cols_)
            for (auto& e : col) e.second = -e.second;
        return out;
    }

    // Composition: (a*b) applies b first. max_raise bounds compose additively.
    friend GradedOperator operator*(const GradedOperator& a, const GradedOperator& b) {
        if (a.domain_->name() != b.codomain_->name())
            throw std::domain_error("GradedOperator: dimension mismatch in product (" +
                                    a.domain_->name() + " vs " + b.codomain_->name() + ")");
        GradedOperator out(b.domain_, a.codomain_);
        for (std::size_t j = 0; j < b.cols_.size(); ++j) {
            for (const auto& [k, bv] : b.cols_[j]) {
                for (const auto& [r, av] : a.cols_.at(k)) out.add_entry(r, j, av * bv);
            }
        }
        out.shift_max_ = a.shift_max_ + b.shift_max_;
        out.peak_ = std::max(b.peak_, b.shift_max_ + a.peak_);
        return out;
    }

    friend GradedOperator operator*(const ZPoly& c, const GradedOperator& a) {
        GradedOperator out(a.domain_, a.codomain_);
        if (c.is_zero()) return out;
        out.shift_max_ = a.shift_max_;
        out.peak_ = a.peak_;
        for (std::size_t j = 0; j < a.cols_.size(); ++j)
            for (const auto& [row, v] : a.cols_[j]) out.add_entry(row, j, c * v);
        return out;
    }

    friend GradedOperator operator*(const Scalar& c, const GradedOperator& a) {
        return ZPoly(c) * a;
    }

    friend bool operator==(const GradedOperator& a, const GradedOperator& b) {
        return a.cols_ == b.cols_;
    }

    friend bool operator!=(const GradedOperator& a, const GradedOperator& b) { return !(a == b); }

    SparseVec apply(const SparseVec& vec) const {
        std::vector<ZPoly> dense(codomain_->size());
        for (const auto& [j, c] : vec)
            for (const auto& [row, v] : cols_.at(j)) dense[row] += v * c;
        SparseVec out;
        for (std::size_t i = 0; i < dense.size(); ++i)
            if (!dense[i].is_zero()) out.push_back({i, dense[i]});
        return out;
    }

    // Inverse of a diagonal operator (entrywise); every diagonal entry must
    // be a nonzero single monomial.
    GradedOperator diagonal_inverse() const {
        GradedOperator out(domain_, codomain_);
        for (std::size_t j = 0; j < cols_.size(); ++j) {
            if (cols_[j].size() != 1 || cols_[j][0].first != j)
                throw std::domain_error("GradedOperator: not diagonal");
            const auto& [z, s] = cols_[j][0].second.single();
            ZetaMono zi;
            for (const auto& [slot, e] : z.terms()) zi = zi * ZetaMono::power(slot, -e);
            out.cols_[j].push_back({j, ZPoly(s.inverse(), zi)});
        }
        return out;
    }

    // First nonzero entry on a column with degree <= max_col_degree, as a
    // witness string; nullopt when the restriction is zero.
    std::optional<std::string> nonzero_witness(long max_col_degree) const {
        for (std::size_t j = 0; j < cols_.size(); ++j) {
            if (domain_->degree(j) > max_col_degree) continue;
            if (cols_[j].empty()) continue;
            const auto& [row, v] = cols_[j][0];
            std::ostringstream os;
            os << "<" << codomain_->label(row) << "| . |" << domain_->label(j)
               << "> = " << v.str();
            return os.str();
        }
        return std::nullopt;
    }

    bool is_zero_on_columns(long max_col_degree) const {
        return !nonzero_witness(max_col_degree).has_value();
    }

    // Exact numeric evaluation at t = t_value and the given spectral values.
    SparseQMatrix eval_numeric(const Rat& t_value, const std::vector<Rat>& slot_values) const {
        SparseQMatrix out(codomain_->size(), domain_->size());
        for (std::size_t j = 0; j < cols_.size(); ++j)
            for (const auto& [row, v] : cols_[j]) out.add(row, j, v.eval(t_value, slot_values));
        return out;
    }

    template <typename F>
    void for_each_entry(F&& f) const {
        for (std::size_t j = 0; j < cols_.size(); ++j)
            for (const auto& [row, v] : cols_[j]) f(row, j, v);
    }

private:
    static void check_same_shape(const GradedOperator& a, const GradedOperator& b) {
        if (a.domain_->name() != b.domain_->name() || a.codomain_->name() != b.codomain_->name())
            throw std::domain_error("GradedOperator: shape mismatch");
    }

    BasisPtr domain_;
    BasisPtr codomain_;
    std::vector<std::vector<std::pair<std::size_t, ZPoly>>> cols_;
    long shift_max_ = 0;
    long peak_ = 0;
};

}  // namespace qloop
