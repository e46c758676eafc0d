#include "qloop/rootvec.hpp"

#include <stdexcept>

namespace qloop {

namespace {

enum WordTag : int { TagGen = 0, TagRealPlus = 1, TagRealMinus = 2, TagImagPrime = 3 };

std::vector<long> add_roots(const std::vector<long>& a, const std::vector<long>& b) {
    std::vector<long> out(a.size());
    for (std::size_t k = 0; k < a.size(); ++k) out[k] = a[k] + b[k];
    return out;
}

}  // namespace

std::string CommWord::str() const {
    switch (kind) {
        case Kind::Gen:
            return "e" + std::to_string(gen_index);
        case Kind::QComm:
            return "[" + left->str() + ", " + right->str() + "]_q";
        case Kind::Scaled:
            return "(" + factor.str() + ")*" + inner->str();
    }
    return "?";
}

RootVectorBuilder::RootVectorBuilder(int l) : l_(l), cm_(cartan_matrices(l)) {
    if (l < 1) throw std::invalid_argument("RootVectorBuilder: l must be >= 1");
}

long RootVectorBuilder::pairing_of(const std::vector<long>& r1, const std::vector<long>& r2) const {
    long acc = 0;
    for (int i = 0; i <= l_; ++i)
        for (int j = 0; j <= l_; ++j)
            acc += r1[static_cast<std::size_t>(i)] *
                   cm_.a_ext[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] *
                   r2[static_cast<std::size_t>(j)];
    return acc;
}

WordPtr RootVectorBuilder::gen(int i) const {
    if (i < 0 || i > l_) throw std::out_of_range("RootVectorBuilder: generator index");
    auto w = std::make_shared<CommWord>();
    w->kind = CommWord::Kind::Gen;
    w->gen_index = i;
    w->root.assign(static_cast<std::size_t>(l_) + 1, 0);
    w->root[static_cast<std::size_t>(i)] = 1;
    return w;
}

WordPtr RootVectorBuilder::qcomm(const WordPtr& a, const WordPtr& b) const {
    auto w = std::make_shared<CommWord>();
    w->kind = CommWord::Kind::QComm;
    w->left = a;
    w->right = b;
    w->pairing = pairing_of(a->root, b->root);
    w->root = add_roots(a->root, b->root);
    return w;
}

WordPtr RootVectorBuilder::scaled(const Scalar& c, const WordPtr& w) const {
    auto out = std::make_shared<CommWord>();
    out->kind = CommWord::Kind::Scaled;
    out->factor = c;
    out->inner = w;
    out->root = w->root;
    return out;
}

WordPtr RootVectorBuilder::real_plus(int i, int j, long n) {
    if (!(1 <= i && i < j && j <= l_ + 1) || n < 0)
        throw std::out_of_range("real_plus: bad root alpha[" + std::to_string(i) + "," +
                                std::to_string(j) + "]");
    auto key = std::make_tuple(TagRealPlus, i, j, n);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    WordPtr w;
    if (n == 0) {
        if (j == i + 1) {
            w = gen(i);
        } else {
            w = qcomm(real_plus(i, i + 1, 0), real_plus(i + 1, j, 0));
        }
    } else {
        // e_{gamma + n delta} = [2]_q^-1 [e_{gamma + (n-1) delta}, e'_{delta, gamma}]_q
        w = scaled(qnum(2).inverse(),
                   qcomm(real_plus(i, j, n - 1), imag_prime_gamma(1, i, j)));
    }
    memo_[key] = w;
    return w;
}

WordPtr RootVectorBuilder::real_minus(int i, int j, long n) {
    if (!(1 <= i && i < j && j <= l_ + 1) || n < 0)
        throw std::out_of_range("real_minus: bad root delta-alpha[" + std::to_string(i) + "," +
                                std::to_string(j) + "]");
    auto key = std::make_tuple(TagRealMinus, i, j, n);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    WordPtr w;
    if (n == 0) {
        if (i == 1 && j == l_ + 1) {
            w = gen(0);  // e_{delta - theta} = e_0
        } else if (i > 1) {
            w = qcomm(real_plus(i - 1, i, 0), real_minus(i - 1, j, 0));
        } else {
            w = qcomm(real_plus(j, j + 1, 0), real_minus(1, j + 1, 0));
        }
    } else {
        // e_{(delta-gamma) + n delta} =
        //   [2]_q^-1 [e'_{delta, gamma}, e_{(delta-gamma) + (n-1) delta}]_q
        w = scaled(qnum(2).inverse(),
                   qcomm(imag_prime_gamma(1, i, j), real_minus(i, j, n - 1)));
    }
    memo_[key] = w;
    return w;
}

WordPtr RootVectorBuilder::real_minus_alt(int i, int j) {
    if (!(1 <= i && i < j && j <= l_ + 1))
        throw std::out_of_range("real_minus_alt: bad root");
    if (i == 1 && j == l_ + 1) return gen(0);
    // Subtract first from the left block alpha_1..alpha_{i-1}, then from the
    // right block alpha_j..alpha_l; the canonical build does the opposite.
    WordPtr w = gen(0);
    // w currently represents delta - alpha_{1, l+1}; peel left indices.
    int cur_i = 1, cur_j = l_ + 1;
    while (cur_i < i) {
        w = qcomm(real_plus(cur_i, cur_i + 1, 0), w);
        ++cur_i;
    }
    while (cur_j > j) {
        w = qcomm(real_plus(cur_j - 1, cur_j, 0), w);
        --cur_j;
    }
    return w;
}

WordPtr RootVectorBuilder::imag_prime(long n, int i) {
    if (i < 1 || i > l_) throw std::out_of_range("imag_prime: color out of range");
    return imag_prime_gamma(n, i, i + 1);
}

WordPtr RootVectorBuilder::imag_prime_gamma(long n, int i, int j) {
    if (n < 1) throw std::invalid_argument("imag_prime: n must be >= 1");
    auto key = std::make_tuple(TagImagPrime, i, j, n);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    // e'_{n delta, gamma} = [e_{gamma + (n-1) delta}, e_{delta - gamma}]_q
    WordPtr w = qcomm(real_plus(i, j, n - 1), real_minus(i, j, 0));
    memo_[key] = w;
    return w;
}

GradedOperator eval_word(const std::vector<GradedOperator>& e_ops, const WordPtr& word,
                         std::map<const CommWord*, GradedOperator>* cache) {
    if (cache) {
        if (auto it = cache->find(word.get()); it != cache->end()) return it->second;
    }
    GradedOperator out;
    switch (word->kind) {
        case CommWord::Kind::Gen:
            out = e_ops.at(static_cast<std::size_t>(word->gen_index));
            break;
        case CommWord::Kind::QComm: {
            GradedOperator a = eval_word(e_ops, word->left, cache);
            GradedOperator b = eval_word(e_ops, word->right, cache);
            out = a * b - Scalar::qpow(-word->pairing) * (b * a);
            break;
        }
        case CommWord::Kind::Scaled:
            out = word->factor * eval_word(e_ops, word->inner, cache);
            break;
    }
    if (cache) cache->emplace(word.get(), out);
    return out;
}

}  // namespace qloop
