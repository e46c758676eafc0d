#include "doctest.h"
#include "qloop/loop_reps.hpp"
#include "qloop/rootvec.hpp"

using namespace qloop;

TEST_CASE("simple and composite real-plus words") {
    RootVectorBuilder b(2);
    // e_{alpha_i} = e_i
    auto w1 = b.real_plus(1, 2, 0);
    CHECK(w1->kind == CommWord::Kind::Gen);
    CHECK(w1->gen_index == 1);
    // e_{alpha_13} = [e_1, e_2]_q with pairing (alpha_1 | alpha_2) = -1
    auto w13 = b.real_plus(1, 3, 0);
    REQUIRE(w13->kind == CommWord::Kind::QComm);
    CHECK(w13->left->gen_index == 1);
    CHECK(w13->right->gen_index == 2);
    CHECK(w13->pairing == -1);
    CHECK(w13->str() == "[e1, e2]_q");
}

TEST_CASE("real-minus base cases and nested forms") {
    RootVectorBuilder b(2);
    CHECK(b.real_minus(1, 3, 0)->gen_index == 0);  // e_{delta - theta} = e_0
    // l = 2: e_{delta - alpha_1} = [e_2, e_0]_q, e_{delta - alpha_2} = [e_1, e_0]_q
    auto d1 = b.real_minus(1, 2, 0);
    REQUIRE(d1->kind == CommWord::Kind::QComm);
    CHECK(d1->left->gen_index == 2);
    CHECK(d1->right->gen_index == 0);
    auto d2 = b.real_minus(2, 3, 0);
    REQUIRE(d2->kind == CommWord::Kind::QComm);
    CHECK(d2->left->gen_index == 1);
    CHECK(d2->right->gen_index == 0);
}

TEST_CASE("imaginary-prime words") {
    // l = 1: e'_{d, alpha_1} = [e_1, e_0]_q with pairing -2
    RootVectorBuilder b1(1);
    auto w = b1.imag_prime(1, 1);
    REQUIRE(w->kind == CommWord::Kind::QComm);
    CHECK(w->left->gen_index == 1);
    CHECK(w->right->gen_index == 0);
    CHECK(w->pairing == -2);
    // Any l: e'_{d, alpha_i} = [e_{alpha_i}, e_{delta - alpha_i}]_q
    RootVectorBuilder b3(3);
    for (int i = 1; i <= 3; ++i) {
        auto p = b3.imag_prime(1, i);
        CHECK(p->left == b3.real_plus(i, i + 1, 0));
        CHECK(p->right == b3.real_minus(i, i + 1, 0));
        // n = 2: [e_{alpha_i + delta}, e_{delta - alpha_i}]_q
        auto p2 = b3.imag_prime(2, i);
        CHECK(p2->left == b3.real_plus(i, i + 1, 1));
        CHECK(p2->right == b3.real_minus(i, i + 1, 0));
    }
}

TEST_CASE("higher real roots use the [2]_q^-1 iteration") {
    RootVectorBuilder b(2);
    auto w = b.real_plus(1, 2, 1);
    REQUIRE(w->kind == CommWord::Kind::Scaled);
    CHECK(w->factor == qnum(2).inverse());
    REQUIRE(w->inner->kind == CommWord::Kind::QComm);
    CHECK(w->inner->left == b.real_plus(1, 2, 0));
    CHECK(w->inner->right == b.imag_prime(1, 1));
}

TEST_CASE("root labels track generator multiplicities") {
    const int l = 3;
    RootVectorBuilder b(l);
    for (int i = 1; i <= l; ++i)
        for (int j = i + 1; j <= l + 1; ++j)
            for (long n = 0; n <= 2; ++n) {
                CHECK(b.real_plus(i, j, n)->root ==
                      AffineRoot::real_plus(i, j, n).multiplicities(l));
                CHECK(b.real_minus(i, j, n)->root ==
                      AffineRoot::real_minus(i, j, n).multiplicities(l));
            }
    for (int i = 1; i <= l; ++i)
        for (long n = 1; n <= 3; ++n)
            CHECK(b.imag_prime(n, i)->root == AffineRoot::imag(n, i).multiplicities(l));
}

TEST_CASE("eval_word basics") {
    RankConfig rc(2);
    GeneratorMap map = osc_rep(rc, 2, OscKind::Theta, 4);
    RootVectorBuilder b(2);
    // Leaf evaluation.
    CHECK(eval_word(map.e, b.gen(1)) == map.gen_e(1));
    // Degenerate commutator [x, x]_q with pairing 2: (1 - q^-2) x^2.
    auto xx = b.qcomm(b.gen(1), b.gen(1));
    CHECK(xx->pairing == 2);
    GradedOperator expected =
        (Scalar(Rat(1)) - Scalar::qpow(-2)) * (map.gen_e(1) * map.gen_e(1));
    CHECK(eval_word(map.e, xx) == expected);
}

TEST_CASE("memoized and fresh builders evaluate identically") {
    RankConfig rc(2);
    GeneratorMap map = osc_rep(rc, 1, OscKind::Theta, 4);
    RootVectorBuilder memo(2);
    std::map<const CommWord*, GradedOperator> cache;
    auto w1 = memo.imag_prime(2, 1);
    auto w2 = memo.imag_prime(2, 1);
    CHECK(w1 == w2);
    RootVectorBuilder fresh(2);
    auto w3 = fresh.imag_prime(2, 1);
    CHECK(eval_word(map.e, w1, &cache) == eval_word(map.e, w3));
}

TEST_CASE("alternative bracketing gives the same operator") {
    // Order independence of the delta - alpha_{ij} build, checked under the
    // theta_a representations for l <= 3.
    for (int l = 2; l <= 3; ++l) {
        RankConfig rc(l);
        RootVectorBuilder b(l);
        for (int a = 1; a <= l + 1; ++a) {
            GeneratorMap map = osc_rep(rc, a, OscKind::Theta, 3);
            for (int i = 1; i <= l; ++i)
                for (int j = i + 1; j <= l + 1; ++j) {
                    GradedOperator canonical = eval_word(map.e, b.real_minus(i, j, 0));
                    GradedOperator alt = eval_word(map.e, b.real_minus_alt(i, j));
                    CHECK(canonical == alt);
                }
        }
    }
}
