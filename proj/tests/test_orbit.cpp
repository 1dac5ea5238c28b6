#include "polyspec/orbit.hpp"

#include <array>
#include <cmath>
#include <cstdint>
#include <set>
#include <vector>

#include "doctest.h"
#include "polyspec/errors.hpp"

using namespace polyspec;

namespace {

RationalMatrix int_matrix_2x2(long long a, long long b, long long c, long long d) {
    RationalMatrix m;
    m.n = 2;
    m.a = {Rational(a), Rational(b), Rational(c), Rational(d)};
    return m;
}

GroupElement sl2z_s() { return make_sln(int_matrix_2x2(0, -1, 1, 0)); }
GroupElement sl2z_t() { return make_sln(int_matrix_2x2(1, 1, 0, 1)); }

// Independent ball count for integer generators: plain int64 arithmetic,
// ordered-set dedup on the raw entries, level-by-level expansion. Shares no
// code path with enumerate_ball, which works over rationals with hashed
// canonical keys. Also asserts the entries stay bounded, which is what makes
// the int64 arithmetic sound.
std::size_t int_ball_count(const std::vector<std::array<std::int64_t, 4>>& gens, int max_len,
                          std::int64_t entry_bound) {
    std::set<std::array<std::int64_t, 4>> seen;
    std::vector<std::array<std::int64_t, 4>> frontier;
    const std::array<std::int64_t, 4> id{1, 0, 0, 1};
    seen.insert(id);
    frontier.push_back(id);
    for (int len = 1; len <= max_len; ++len) {
        std::vector<std::array<std::int64_t, 4>> next;
        for (const auto& m : frontier)
            for (const auto& g : gens) {
                const std::array<std::int64_t, 4> p{
                    m[0] * g[0] + m[1] * g[2], m[0] * g[1] + m[1] * g[3],
                    m[2] * g[0] + m[3] * g[2], m[2] * g[1] + m[3] * g[3]};
                for (std::int64_t e : p) REQUIRE(std::abs(e) <= entry_bound);
                if (seen.insert(p).second) next.push_back(p);
            }
        frontier = std::move(next);
    }
    return seen.size();
}

}  // namespace

TEST_CASE("float generators fall back to freely reduced words with a warning") {
    Eigen::MatrixXd d(2, 2);
    d.setZero();
    d(0, 0) = std::exp(1.0);
    d(1, 1) = std::exp(-1.0);
    OrbitData data = enumerate_ball({make_sln(d)}, true, 5);
    CHECK(data.warning.has_value());
    CHECK(!data.exact);
    REQUIRE(data.samples.size() == 11);  // powers -5..5
    CHECK(data.samples[0].word.empty());
    for (const auto& s : data.samples) {
        const int k = s.word_length();
        CHECK(s.mu_plus(0) == doctest::Approx(static_cast<double>(k)).epsilon(1e-9));
        CHECK(s.mu_plus(1) == doctest::Approx(static_cast<double>(-k)).epsilon(1e-9));
    }
}

TEST_CASE("exact dedup collapses torsion that free reduction misses") {
    // S has order 4, so the cyclic ball saturates at {1, S, S^2, S^3}
    OrbitData data = enumerate_ball({sl2z_s()}, true, 4);
    CHECK(data.exact);
    CHECK(data.samples.size() == 4);
}

TEST_CASE("diagonal rational generator reproduces the cyclic ball exactly") {
    RationalMatrix m = RationalMatrix::identity(2);
    m.at(0, 0) = Rational(2);
    m.at(1, 1) = Rational(1, 2);
    OrbitData data = enumerate_ball({make_sln(m)}, true, 5);
    CHECK(data.exact);
    CHECK(!data.warning.has_value());
    REQUIRE(data.samples.size() == 11);
    for (const auto& s : data.samples)
        CHECK(s.mu_plus(0) ==
              doctest::Approx(s.word_length() * std::log(2.0)).epsilon(1e-12));
}

TEST_CASE("two commuting cyclic factors fill the max-metric ball") {
    // generating set = all nonidentity pairs drawn from {a^{\pm 1}, 1} x {b^{\pm 1}, 1},
    // so the word ball of radius L is the grid max(|i|, |j|) <= L
    RationalMatrix a = RationalMatrix::identity(2);
    a.at(0, 0) = Rational(2);
    a.at(1, 1) = Rational(1, 2);
    RationalMatrix b = RationalMatrix::identity(2);
    b.at(0, 0) = Rational(3);
    b.at(1, 1) = Rational(1, 3);
    RationalMatrix id2 = RationalMatrix::identity(2);

    std::vector<GroupElement> gens = {
        make_product_sl2(std::vector<RationalMatrix>{a, id2}),
        make_product_sl2(std::vector<RationalMatrix>{id2, b}),
        make_product_sl2(std::vector<RationalMatrix>{a, b}),
        make_product_sl2(std::vector<RationalMatrix>{a, exact_inverse(b)})};
    OrbitData data = enumerate_ball(gens, true, 4);
    CHECK(data.exact);
    CHECK(data.samples.size() == 81);  // (2*4+1)^2 word pairs
    for (const auto& s : data.samples) {
        CHECK(s.mu_plus(0) <= 4.0 * std::log(2.0) + 1e-9);
        CHECK(s.mu_plus(1) <= 4.0 * std::log(3.0) + 1e-9);
    }
}

TEST_CASE("ball count matches the integer-arithmetic oracle") {
    OrbitData data = enumerate_ball({sl2z_s(), sl2z_t()}, true, 6);
    const std::size_t oracle = int_ball_count(
        {{0, -1, 1, 0}, {1, 1, 0, 1}, {0, 1, -1, 0}, {1, -1, 0, 1}}, 6, 1'000'000);
    CHECK(data.samples.size() == oracle);
}

TEST_CASE("enumeration is deterministic") {
    auto run = [] { return enumerate_ball({sl2z_s(), sl2z_t()}, true, 5); };
    OrbitData a = run();
    OrbitData b = run();
    REQUIRE(a.samples.size() == b.samples.size());
    for (std::size_t i = 0; i < a.samples.size(); ++i) {
        CHECK(a.samples[i].word == b.samples[i].word);
        CHECK((a.samples[i].mu_plus - b.samples[i].mu_plus).norm() == 0.0);
    }
    // sorted by word length, ties in word order
    for (std::size_t i = 1; i < a.samples.size(); ++i) {
        const auto& prev = a.samples[i - 1];
        const auto& cur = a.samples[i];
        CHECK((prev.word_length() < cur.word_length() ||
               (prev.word_length() == cur.word_length() && prev.word <= cur.word)));
    }
}

TEST_CASE("samples carry dominant projections") {
    OrbitData data = enumerate_ball({sl2z_s(), sl2z_t()}, true, 5);
    for (const auto& s : data.samples) {
        CHECK(s.mu_plus(0) >= s.mu_plus(1));
        CHECK(s.mu_plus.sum() == doctest::Approx(0.0).epsilon(1e-9));
    }
}

TEST_CASE("the element cap raises a resource error") {
    CHECK_THROWS_AS(enumerate_ball({sl2z_s(), sl2z_t()}, true, 6, 50), ResourceError);
}

TEST_CASE("mixed or malformed generator lists are rejected") {
    CHECK_THROWS_AS(enumerate_ball({}, true, 3), ParameterError);
    CHECK_THROWS_AS(enumerate_ball({sl2z_s()}, true, 0), ParameterError);

    Eigen::Matrix2d r;
    r << 0.0, -1.0, 1.0, 0.0;
    CHECK_THROWS_AS(enumerate_ball({sl2z_s(), make_product_sl2({r})}, true, 3), ParameterError);
}
