#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <map>
#include <random>
#include <set>

#include "weylmod/errors.hpp"
#include "weylmod/weyl.hpp"

#include "util.hpp"

using namespace weylmod;

namespace {

Word random_word(std::mt19937& rng, int n, int len) {
    std::uniform_int_distribution<int> letter(1, n);
    Word w(static_cast<size_t>(len));
    for (int k = 0; k < len; ++k) w[static_cast<size_t>(k)] = letter(rng);
    return w;
}

// Every word over {1..n} of length at most max_len, shortest first.
std::vector<Word> all_words(int n, int max_len) {
    std::vector<Word> out{{}};
    size_t layer_begin = 0;
    for (int k = 0; k < max_len; ++k) {
        size_t layer_end = out.size();
        for (size_t t = layer_begin; t < layer_end; ++t) {
            for (int i = 1; i <= n; ++i) {
                Word v = out[t];
                v.push_back(i);
                out.push_back(std::move(v));
            }
        }
        layer_begin = layer_end;
    }
    return out;
}

} // namespace

TEST_SUITE("reflection matrices") {

TEST_CASE("generator columns realize the simple reflections") {
    CartanData a2 = fixtures::a2();
    WeylElement s1 = WeylElement::generator(a2, 1);
    CHECK(s1.column(1) == std::vector<long long>{-1, 0});
    CHECK(s1.column(2) == std::vector<long long>{1, 1});
    CHECK((s1 * s1).is_identity());
}

TEST_CASE("braid relation holds in the matrix group") {
    CartanData a2 = fixtures::a2();
    CHECK(element_of({1, 2, 1}, a2) == element_of({2, 1, 2}, a2));
    CHECK(element_of({1, 2, 1}, a2) != element_of({1, 2}, a2));
    CHECK(element_of({}, a2).is_identity());
    CHECK(element_of({1, 1}, a2).is_identity());
}

TEST_CASE("valued commutation order") {
    // In the rank-2 group with c_12 c_21 = 2 the product s1 s2 has order 4.
    CartanData b2 = fixtures::b2_valued();
    WeylElement p = element_of({1, 2}, b2);
    WeylElement q = p * p;
    CHECK(!q.is_identity());
    CHECK((q * q).is_identity());
}

TEST_CASE("letters are range-checked") {
    CHECK_THROWS_AS(element_of({1, 3}, fixtures::a2()), InputError);
    CHECK_THROWS_AS(WeylElement::generator(fixtures::a2(), 0), InputError);
}

TEST_CASE("root sign classifies and rejects") {
    CHECK(root_sign({1, 0, 2}) == 1);
    CHECK(root_sign({0, -1, 0}) == -1);
    CHECK_THROWS_AS(root_sign({1, -1}), InternalError);
    CHECK_THROWS_AS(root_sign({0, 0}), InternalError);
}

} // TEST_SUITE("reflection matrices")

TEST_SUITE("reduced words") {

TEST_CASE("examples over the four-vertex bipartite quiver") {
    CartanData q = fixtures::k22();
    CHECK(is_reduced({2, 3, 2}, q).reduced);
    CHECK_FALSE(is_reduced({2, 3, 1, 2, 1}, q).reduced);
    CHECK(is_reduced({}, q).reduced);
    CHECK_FALSE(is_reduced({1, 1}, q).reduced);
}

TEST_CASE("prefix roots are reported in order") {
    ReducedCheck rc = is_reduced({1, 2}, fixtures::a2());
    REQUIRE(rc.reduced);
    REQUIRE(rc.roots.size() == 2);
    CHECK(rc.roots[0] == std::vector<long long>{1, 0});
    CHECK(rc.roots[1] == std::vector<long long>{1, 1});
}

TEST_CASE("a reduced word has as many distinct positive roots as letters") {
    CartanData q = fixtures::k22();
    std::mt19937 rng(4242);
    for (int trial = 0; trial < 200; ++trial) {
        Word w = random_word(rng, 4, 1 + trial % 8);
        ReducedCheck rc = is_reduced(w, q);
        REQUIRE(rc.roots.size() == w.size());
        if (rc.reduced) {
            std::set<std::vector<long long>> distinct(rc.roots.begin(), rc.roots.end());
            CHECK(distinct.size() == w.size());
            for (const auto& beta : rc.roots) CHECK(root_sign(beta) == 1);
        }
    }
}

} // TEST_SUITE("reduced words")

TEST_SUITE("leftmost words") {

TEST_CASE("search canonicalizes the worked example") {
    CartanData q = fixtures::k22();
    CHECK(leftmost_bfs({2, 3, 1, 2, 1}, q) == Word{2, 3, 2});
    CHECK(leftmost_bfs({3, 2, 3}, q) == Word{2, 3, 2});
    CHECK(leftmost_bfs({1, 1}, q) == Word{});
}

TEST_CASE("rank-2 classes") {
    CHECK(leftmost_bfs({2, 1, 2}, fixtures::a2()) == Word{1, 2, 1});
    // No finite braid relation: every reduced word is alone in its class.
    CHECK(leftmost_bfs({2, 1, 2, 1}, fixtures::kronecker()) == Word{2, 1, 2, 1});
}

TEST_CASE("greedy scan agrees with the search on short words") {
    for (const CartanData& q : {fixtures::a3(), fixtures::k22()}) {
        for (const Word& w : all_words(q.rank(), 5)) {
            CAPTURE(format_word(w));
            CHECK(leftmost_greedy(w, q) == leftmost_bfs(w, q));
        }
    }
}

TEST_CASE("canonical words are reduced fixed points") {
    CartanData q = fixtures::k22();
    std::mt19937 rng(555);
    for (int trial = 0; trial < 100; ++trial) {
        Word w = random_word(rng, 4, 7);
        Word canon = leftmost_bfs(w, q);
        CHECK(is_reduced(canon, q).reduced);
        CHECK(leftmost_bfs(canon, q) == canon);
        CHECK(element_of(canon, q) == element_of(w, q));
        CHECK(word_compare(canon, w) <= 0);
    }
}

TEST_CASE("node cap turns into a resource error") {
    // Cap of 1 cannot hold the class of a word with at least one neighbor.
    CHECK_THROWS_AS(leftmost_bfs({2, 3, 2, 1}, fixtures::k22(), 1), ResourceError);
}

TEST_CASE("memoizing cache") {
    LeftmostCache cache(fixtures::a2());
    CHECK(cache.leftmost({2, 1, 2}) == Word{1, 2, 1});
    CHECK(cache.leftmost({1, 2, 1}) == Word{1, 2, 1});
    CHECK(cache.is_leftmost({1, 2, 1}));
    CHECK_FALSE(cache.is_leftmost({2, 1, 2}));
    CHECK_FALSE(cache.is_leftmost({1, 1}));
    CHECK(cache.is_leftmost({}));
}

} // TEST_SUITE("leftmost words")

TEST_SUITE("exchange test") {

TEST_CASE("worked examples") {
    CartanData q = fixtures::k22();
    CHECK(exchange_test({2}, 1, 3, {}, q));
    CHECK_FALSE(exchange_test({}, 2, 3, {}, q));
}

TEST_CASE("matches the direct comparison on random instances") {
    std::mt19937 rng(20240812);
    for (const CartanData& q : {fixtures::k22(), fixtures::a3()}) {
        CoxeterMatrix cox = build_coxeter_matrix(q);
        int n = q.rank();
        std::uniform_int_distribution<int> letter(1, n);
        for (int trial = 0; trial < 300; ++trial) {
            int i = letter(rng), j = letter(rng);
            if (i == j || !cox.is_finite(i, j)) continue;
            Word u = random_word(rng, n, trial % 5);
            Word v = random_word(rng, n, (trial / 5) % 5);
            int m = cox.order(i, j);
            Word w1 = u, w2 = u;
            Word a = alternating_word(i, j, m), b = alternating_word(j, i, m);
            w1.insert(w1.end(), a.begin(), a.end());
            w2.insert(w2.end(), b.begin(), b.end());
            w1.insert(w1.end(), v.begin(), v.end());
            w2.insert(w2.end(), v.begin(), v.end());
            INFO("u=", format_word(u), " i=", i, " j=", j, " v=", format_word(v));
            CHECK(exchange_test(u, i, j, v, q) == (word_compare(w2, w1) < 0));
        }
    }
}

TEST_CASE("rejects infinite dihedral pairs and bad letters") {
    CHECK_THROWS_AS(exchange_test({}, 1, 2, {}, fixtures::kronecker()), InputError);
    CHECK_THROWS_AS(exchange_test({}, 1, 1, {}, fixtures::a2()), InputError);
    CHECK_THROWS_AS(exchange_test({9}, 1, 2, {}, fixtures::a2()), InputError);
}

} // TEST_SUITE("exchange test")

TEST_SUITE("group enumeration") {

TEST_CASE("small finite groups come out complete") {
    WeylEnumeration a2 = enumerate_weyl(fixtures::a2());
    CHECK(a2.complete);
    CHECK(a2.elements.size() == 6);
    CHECK(a2.max_length == 3);

    WeylEnumeration a3 = enumerate_weyl(fixtures::a3());
    CHECK(a3.complete);
    CHECK(a3.elements.size() == 24);
    CHECK(a3.max_length == 6);

    WeylEnumeration b2 = enumerate_weyl(fixtures::b2_valued());
    CHECK(b2.complete);
    CHECK(b2.elements.size() == 8);
    CHECK(b2.max_length == 4);
}

TEST_CASE("every element carries one of its shortest words") {
    WeylEnumeration a3 = enumerate_weyl(fixtures::a3());
    std::map<size_t, int> by_length;
    for (const auto& [e, w] : a3.elements) {
        CHECK(element_of(w, fixtures::a3()) == e);
        CHECK(is_reduced(w, fixtures::a3()).reduced);
        ++by_length[w.size()];
    }
    // Length distribution of the symmetric group on four letters.
    std::map<size_t, int> expected{{0, 1}, {1, 3}, {2, 5}, {3, 6}, {4, 5}, {5, 3}, {6, 1}};
    CHECK(by_length == expected);
}

TEST_CASE("infinite groups stop at the cap") {
    WeylEnumeration k = enumerate_weyl(fixtures::kronecker(), 50);
    CHECK_FALSE(k.complete);
    CHECK(k.elements.size() == 50);
}

} // TEST_SUITE("group enumeration")
