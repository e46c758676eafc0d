#pragma once

#include <map>
#include <memory>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace qloop {

// Indexed family of labeled basis states with a truncation degree. Degrees
// drive the safe-domain bookkeeping: an operator product is column-exact on
// states whose degree leaves room for every intermediate raise.
class Basis {
public:
    virtual ~Basis() = default;
    virtual std::size_t size() const = 0;
    virtual long degree(std::size_t idx) const = 0;
    virtual std::string label(std::size_t idx) const = 0;
    virtual std::string name() const = 0;
};

using BasisPtr = std::shared_ptr<const Basis>;

namespace detail {

// All k-tuples of non-negative integers with sum <= cap, lexicographic.
inline std::vector<std::vector<long>> bounded_tuples(std::size_t k, long cap) {
    std::vector<std::vector<long>> out;
    std::vector<long> cur(k, 0);
    // Lexicographic enumeration by recursion on positions.
    struct Rec {
        std::vector<std::vector<long>>& out;
        std::vector<long>& cur;
        std::size_t k;
        long cap;
        void go(std::size_t pos, long used) {
            if (pos == k) {
                out.push_back(cur);
                return;
            }
            for (long v = 0; v <= cap - used; ++v) {
                cur[pos] = v;
                go(pos + 1, used + v);
            }
            cur[pos] = 0;
        }
    } rec{out, cur, k, cap};
    rec.go(0, 0);
    return out;
}

inline std::string tuple_str(const std::vector<long>& m) {
    std::ostringstream os;
    os << "(";
    for (std::size_t i = 0; i < m.size(); ++i) {
        if (i) os << ",";
        os << m[i];
    }
    os << ")";
    return os.str();
}

}  // namespace detail

// Basis shared by the tuple-indexed modules: states labeled by tuples of
// non-negative integers with total degree <= N.
class TupleBasis : public Basis {
public:
    TupleBasis(std::size_t tuple_len, long cap, std::string name_prefix)
        : cap_(cap), name_(std::move(name_prefix)) {
        tuples_ = detail::bounded_tuples(tuple_len, cap);
        for (std::size_t i = 0; i < tuples_.size(); ++i) index_[tuples_[i]] = i;
    }

    std::size_t size() const override { return tuples_.size(); }

    long degree(std::size_t idx) const override {
        const auto& m = tuples_.at(idx);
        return std::accumulate(m.begin(), m.end(), 0L);
    }

    std::string label(std::size_t idx) const override {
        return "v" + detail::tuple_str(tuples_.at(idx));
    }

    std::string name() const override { return name_; }

    long cap() const { return cap_; }

    const std::vector<long>& tuple(std::size_t idx) const { return tuples_.at(idx); }

    // Index of a tuple; npos when absent (out of truncation).
    static constexpr std::size_t npos = static_cast<std::size_t>(-1);

    std::size_t index_of(const std::vector<long>& m) const {
        auto it = index_.find(m);
        return it == index_.end() ? npos : it->second;
    }

private:
    long cap_;
    std::string name_;
    std::vector<std::vector<long>> tuples_;
    std::map<std::vector<long>, std::size_t> index_;
};

// Verma-module basis: tuples m = (m_ij) over the positions (i,j) in Lambda_l
// arranged lexicographically, with total degree <= N.
class MTupleBasis : public TupleBasis {
public:
    MTupleBasis(int l, long N)
        : TupleBasis(static_cast<std::size_t>(l) * (l + 1) / 2, N,
                     "verma(l=" + std::to_string(l) + ",N=" + std::to_string(N) + ")"),
          l_(l) {
        for (int i = 1; i <= l; ++i)
            for (int j = i + 1; j <= l + 1; ++j) positions_.push_back({i, j});
    }

    int l() const { return l_; }

    // Position of the pair (i, j) inside the tuple.
    std::size_t slot(int i, int j) const {
        for (std::size_t k = 0; k < positions_.size(); ++k)
            if (positions_[k].first == i && positions_[k].second == j) return k;
        throw std::out_of_range("MTupleBasis: bad pair (" + std::to_string(i) + "," +
                                std::to_string(j) + ")");
    }

    const std::vector<std::pair<int, int>>& positions() const { return positions_; }

private:
    int l_;
    std::vector<std::pair<int, int>> positions_;
};

// Fock-space basis for the l-fold oscillator algebra: tuples (m_1..m_l),
// total degree <= N. The tag only affects labels (v^(a) vs vbar^(a)).
class FockBasis : public TupleBasis {
public:
    enum class Tag { Plain, Theta, ThetaBar };

    FockBasis(int l, long N, Tag tag = Tag::Plain, int a = 0)
        : TupleBasis(static_cast<std::size_t>(l), N,
                     "fock(l=" + std::to_string(l) + ",N=" + std::to_string(N) + tag_str(tag, a) +
                         ")"),
          l_(l),
          tag_(tag),
          a_(a) {}

    int l() const { return l_; }

    std::string label(std::size_t idx) const override {
        std::string head = tag_ == Tag::ThetaBar ? "vbar" : "v";
        if (tag_ != Tag::Plain) head += "^(" + std::to_string(a_) + ")";
        return head + detail::tuple_str(tuple(idx));
    }

private:
    static std::string tag_str(Tag tag, int a) {
        switch (tag) {
            case Tag::Plain:
                return "";
            case Tag::Theta:
                return ",theta" + std::to_string(a);
            case Tag::ThetaBar:
                return ",thetabar" + std::to_string(a);
        }
        return "";
    }

    int l_;
    Tag tag_;
    int a_;
};

// Basis u_1..u_{l+1} of the vector representation; no truncation (degree 0).
class VectorBasis : public Basis {
public:
    explicit VectorBasis(int l) : dim_(static_cast<std::size_t>(l) + 1) {}

    std::size_t size() const override { return dim_; }
    long degree(std::size_t) const override { return 0; }

    std::string label(std::size_t idx) const override { return "u" + std::to_string(idx + 1); }

    std::string name() const override { return "vector(dim=" + std::to_string(dim_) + ")"; }

private:
    std::size_t dim_;
};

// Tensor product of bases; index is mixed-radix with the LAST factor fastest,
// and the degree of a product state is the sum of the factor degrees.
class TensorBasis : public Basis {
public:
    explicit TensorBasis(std::vector<BasisPtr> factors) : factors_(std::move(factors)) {
        if (factors_.empty()) throw std::invalid_argument("TensorBasis: no factors");
        size_ = 1;
        for (const auto& f : factors_) size_ *= f->size();
    }

    std::size_t size() const override { return size_; }

    long degree(std::size_t idx) const override {
        long d = 0;
        for (std::size_t k = factors_.size(); k-- > 0;) {
            const auto& f = factors_[k];
            d += f->degree(idx % f->size());
            idx /= f->size();
        }
        return d;
    }

    std::string label(std::size_t idx) const override {
        auto parts = split(idx);
        std::string out;
        for (std::size_t k = 0; k < factors_.size(); ++k) {
            if (k) out += " (x) ";
            out += factors_[k]->label(parts[k]);
        }
        return out;
    }

    std::string name() const override {
        std::string out = "tensor[";
        for (std::size_t k = 0; k < factors_.size(); ++k) {
            if (k) out += ",";
            out += factors_[k]->name();
        }
        return out + "]";
    }

    std::size_t factor_count() const { return factors_.size(); }
    const BasisPtr& factor(std::size_t k) const { return factors_.at(k); }

    std::vector<std::size_t> split(std::size_t idx) const {
        std::vector<std::size_t> parts(factors_.size());
        for (std::size_t k = factors_.size(); k-- > 0;) {
            parts[k] = idx % factors_[k]->size();
            idx /= factors_[k]->size();
        }
        return parts;
    }

    std::size_t fuse(const std::vector<std::size_t>& parts) const {
        std::size_t idx = 0;
        for (std::size_t k = 0; k < factors_.size(); ++k) idx = idx * factors_[k]->size() + parts[k];
        return idx;
    }

private:
    std::vector<BasisPtr> factors_;
    std::size_t size_;
};

}  // namespace qloop
