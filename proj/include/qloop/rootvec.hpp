#pragma once

#include <map>
#include <memory>
#include <string>
#include <tuple>
#include <vector>

#include "qloop/cartan.hpp"
#include "qloop/operators.hpp"

namespace qloop {

// q-commutator expression tree over the Borel generators e_0..e_l. Each node
// carries the multiplicities of its affine root over alpha_0..alpha_l; the
// pairing stored on a QComm node is (left.root | right.root).
struct CommWord {
    enum class Kind { Gen, QComm, Scaled };

    Kind kind;
    int gen_index = -1;                        // Gen
    std::shared_ptr<const CommWord> left;      // QComm
    std::shared_ptr<const CommWord> right;     // QComm
    long pairing = 0;                          // QComm
    Scalar factor;                             // Scaled
    std::shared_ptr<const CommWord> inner;     // Scaled
    std::vector<long> root;                    // multiplicities over alpha_0..alpha_l

    std::string str() const;
};

using WordPtr = std::shared_ptr<const CommWord>;

// Builds affine root vectors following the Khoroshkin-Tolstoy recursion in
// the normal order fixed by cartan::normal_order_cmp. Words are memoized;
// rebuilt words are structurally identical.
class RootVectorBuilder {
public:
    explicit RootVectorBuilder(int l);

    int l() const { return l_; }

    // e_{alpha_{ij} + n delta}; for n = 0 the nested simple-root word.
    WordPtr real_plus(int i, int j, long n);

    // e_{(delta - alpha_{ij}) + n delta}; base case e_{delta - theta} = e_0.
    WordPtr real_minus(int i, int j, long n);

    // e'_{n delta, alpha_i}, i in I.
    WordPtr imag_prime(long n, int i);

    // e'_{n delta, alpha_{ij}} for a general positive root gamma = alpha_{ij}.
    WordPtr imag_prime_gamma(long n, int i, int j);

    // Alternative bracketing of e_{delta - alpha_{ij}}: subtract the right
    // block before the left one. Used only to test order independence.
    WordPtr real_minus_alt(int i, int j);

    // [a, b]_q with the pairing computed from the node roots.
    WordPtr qcomm(const WordPtr& a, const WordPtr& b) const;

    WordPtr gen(int i) const;

private:
    WordPtr scaled(const Scalar& c, const WordPtr& w) const;

    long pairing_of(const std::vector<long>& r1, const std::vector<long>& r2) const;

    int l_;
    CartanMatrices cm_;
    std::map<std::tuple<int, int, int, long>, WordPtr> memo_;
};

// Interprets a word under a representation supplying operators for each
// generator e_i, i = 0..l. QComm(a, b, p) evaluates to A*B - q^-p * B*A.
// The cache is keyed by node identity; memoized and fresh builds agree.
GradedOperator eval_word(const std::vector<GradedOperator>& e_ops, const WordPtr& word,
                         std::map<const CommWord*, GradedOperator>* cache = nullptr);

}  // namespace qloop
