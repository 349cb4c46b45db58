#include <numeric>
#include <random>
#include <vector>

#include "doctest.h"
#include "functors.hpp"
#include "test_util.hpp"

using namespace dp;

namespace {

IntMatrix from_rows(const std::vector<std::vector<std::int64_t>>& rows) {
    IntMatrix m(rows.size(), rows.empty() ? 0 : rows[0].size());
    for (std::size_t r = 0; r < rows.size(); ++r)
        for (std::size_t c = 0; c < rows[r].size(); ++c) m.at(r, c) = rows[r][c];
    return m;
}

// closed forms for the three quadratic functors on an arbitrary map g
IntMatrix sym2_oracle(const IntMatrix& g) {
    PolynomialFunctor f{Family::Sym, 2};
    auto src = functor_basis(f, static_cast<std::int64_t>(g.cols()));
    auto tgt = functor_basis(f, static_cast<std::int64_t>(g.rows()));
    IntMatrix out(tgt.size(), src.size());
    for (std::size_t col = 0; col < src.size(); ++col) {
        auto p = static_cast<std::size_t>(src[col][0]), q = static_cast<std::size_t>(src[col][1]);
        for (std::size_t row = 0; row < tgt.size(); ++row) {
            auto i = static_cast<std::size_t>(tgt[row][0]), j = static_cast<std::size_t>(tgt[row][1]);
            // x_p x_q -> (sum_i g_ip x_i)(sum_j g_jq x_j), coefficient on x_i x_j
            if (i == j)
                out.at(row, col) = g.at(i, p) * g.at(i, q);
            else
                out.at(row, col) = g.at(i, p) * g.at(j, q) + g.at(i, q) * g.at(j, p);
        }
    }
    return out;
}

IntMatrix ext2_oracle(const IntMatrix& g) {
    PolynomialFunctor f{Family::Ext, 2};
    auto src = functor_basis(f, static_cast<std::int64_t>(g.cols()));
    auto tgt = functor_basis(f, static_cast<std::int64_t>(g.rows()));
    IntMatrix out(tgt.size(), src.size());
    for (std::size_t col = 0; col < src.size(); ++col) {
        auto p = static_cast<std::size_t>(src[col][0]), q = static_cast<std::size_t>(src[col][1]);
        for (std::size_t row = 0; row < tgt.size(); ++row) {
            auto i = static_cast<std::size_t>(tgt[row][0]), j = static_cast<std::size_t>(tgt[row][1]);
            out.at(row, col) = g.at(i, p) * g.at(j, q) - g.at(i, q) * g.at(j, p);
        }
    }
    return out;
}

IntMatrix tensor2_oracle(const IntMatrix& g) {
    // Kronecker square
    std::size_t r = g.rows(), c = g.cols();
    IntMatrix out(r * r, c * c);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < r; ++j)
            for (std::size_t p = 0; p < c; ++p)
                for (std::size_t q = 0; q < c; ++q)
                    out.at(i * r + j, p * c + q) = g.at(i, p) * g.at(j, q);
    return out;
}

}  // namespace

TEST_CASE("functor spec parsing") {
    PolynomialFunctor f = parse_functor("sym:2");
    CHECK(f.family == Family::Sym);
    CHECK(f.degree == 2);
    CHECK(parse_functor("ext:3").family == Family::Ext);
    CHECK(parse_functor("tensor:1").family == Family::Tensor);
    CHECK(functor_name(parse_functor("sym:4")) == "sym:4");
    CHECK_THROWS_AS(parse_functor("sym"), validation_error);
    CHECK_THROWS_AS(parse_functor("sym:0"), validation_error);
    CHECK_THROWS_AS(parse_functor("sym:-1"), validation_error);
    CHECK_THROWS_AS(parse_functor("wedge:2"), validation_error);
    CHECK_THROWS_AS(parse_functor("sym:two"), validation_error);
}

TEST_CASE("basis enumeration: sizes, order, ranking") {
    for (int d = 1; d <= 4; ++d)
        for (std::int64_t m = 0; m <= 5; ++m)
            for (Family fam : {Family::Sym, Family::Ext, Family::Tensor}) {
                PolynomialFunctor f{fam, d};
                auto basis = functor_basis(f, m);
                CHECK(static_cast<std::int64_t>(basis.size()) == functor_rank(f, m));
                for (std::size_t j = 0; j < basis.size(); ++j) {
                    CHECK(monomial_index(f, m, basis[j]) == static_cast<std::int64_t>(j));
                    if (j) CHECK(basis[j - 1] < basis[j]);
                    for (std::size_t t = 1; t < basis[j].size(); ++t) {
                        if (fam == Family::Sym) CHECK(basis[j][t - 1] <= basis[j][t]);
                        if (fam == Family::Ext) CHECK(basis[j][t - 1] < basis[j][t]);
                    }
                }
            }
    CHECK(functor_rank({Family::Sym, 3}, 4) == 20);
    CHECK(functor_rank({Family::Ext, 3}, 4) == 4);
    CHECK(functor_rank({Family::Tensor, 3}, 4) == 64);
    CHECK(functor_rank({Family::Ext, 5}, 3) == 0);
}

TEST_CASE("degree-one functors are the identity construction") {
    std::mt19937 rng(11);
    IntMatrix g = dptest::random_matrix(rng, 3, 4, 6);
    for (Family fam : {Family::Sym, Family::Ext, Family::Tensor})
        CHECK(apply_functor({fam, 1}, g) == g);
}

TEST_CASE("quadratic functors against closed forms") {
    std::mt19937 rng(271828);
    for (int trial = 0; trial < 20; ++trial) {
        std::size_t r = rng() % 4, c = rng() % 4;
        IntMatrix g = dptest::random_matrix(rng, r, c, 5);
        CHECK(apply_functor({Family::Sym, 2}, g) == sym2_oracle(g));
        CHECK(apply_functor({Family::Ext, 2}, g) == ext2_oracle(g));
        CHECK(apply_functor({Family::Tensor, 2}, g) == tensor2_oracle(g));
    }
}

TEST_CASE("pinned quadratic values") {
    IntMatrix g = from_rows({{1, 2}, {3, 4}});
    // basis x0^2, x0x1, x1^2
    CHECK(apply_functor({Family::Sym, 2}, g) ==
          from_rows({{1, 2, 4}, {6, 10, 16}, {9, 12, 16}}));
    CHECK(apply_functor({Family::Ext, 2}, g) == from_rows({{-2}}));
    IntMatrix id1 = IntMatrix::identity(1);
    CHECK(apply_functor({Family::Sym, 3}, id1) == id1);
}

TEST_CASE("functoriality: F(g h) = F(g) F(h)") {
    std::mt19937 rng(5);
    for (int trial = 0; trial < 10; ++trial)
        for (Family fam : {Family::Sym, Family::Ext, Family::Tensor})
            for (int d = 1; d <= 3; ++d) {
                PolynomialFunctor f{fam, d};
                std::size_t a = 1 + rng() % 3, b = 1 + rng() % 3, c = 1 + rng() % 3;
                IntMatrix g = dptest::random_matrix(rng, a, b, 3);
                IntMatrix h = dptest::random_matrix(rng, b, c, 3);
                CHECK(apply_functor(f, g * h) == apply_functor(f, g) * apply_functor(f, h));
                CHECK(apply_functor(f, IntMatrix::identity(a)) ==
                      IntMatrix::identity(static_cast<std::size_t>(
                          functor_rank(f, static_cast<std::int64_t>(a)))));
            }
}

TEST_CASE("column selection agrees with full application") {
    std::mt19937 rng(9);
    PolynomialFunctor f{Family::Sym, 3};
    IntMatrix g = dptest::random_matrix(rng, 3, 3, 4);
    auto basis = functor_basis(f, 3);
    IntMatrix full = apply_functor(f, g);
    std::vector<std::vector<std::int64_t>> picked = {basis[7], basis[0], basis[3]};
    IntMatrix part = apply_functor_on(f, g, picked);
    REQUIRE(part.cols() == 3);
    for (std::size_t r = 0; r < part.rows(); ++r) {
        CHECK(part.at(r, 0) == full.at(r, 7));
        CHECK(part.at(r, 1) == full.at(r, 0));
        CHECK(part.at(r, 2) == full.at(r, 3));
    }
}

TEST_CASE("deviation: symmetry and degree bound") {
    std::mt19937 rng(1234);
    for (Family fam : {Family::Sym, Family::Ext, Family::Tensor})
        for (int d = 1; d <= 3; ++d) {
            PolynomialFunctor f{fam, d};
            std::size_t a = 2, b = 3;
            std::vector<IntMatrix> maps;
            for (int j = 0; j < d + 1; ++j) maps.push_back(dptest::random_matrix(rng, b, a, 3));

            // single map: plain application
            CHECK(deviation(f, {maps[0]}) == apply_functor(f, maps[0]));

            // order of the arguments is irrelevant
            std::vector<IntMatrix> two = {maps[0], maps[1]};
            std::vector<IntMatrix> swapped = {maps[1], maps[0]};
            CHECK(deviation(f, two) == deviation(f, swapped));

            // a degree-d functor has vanishing (d+1)-st deviation
            CHECK(deviation(f, maps).is_zero());

            // plugging in a zero map kills the deviation
            std::vector<IntMatrix> with_zero = {maps[0], IntMatrix(b, a)};
            CHECK(deviation(f, with_zero).is_zero());
        }
}

TEST_CASE("second deviation of the tensor square") {
    std::mt19937 rng(55);
    IntMatrix g = dptest::random_matrix(rng, 2, 2, 4);
    IntMatrix h = dptest::random_matrix(rng, 2, 2, 4);
    // T^2(g+h) - T^2(g) - T^2(h) = g (x) h + h (x) g
    auto kron = [](const IntMatrix& x, const IntMatrix& y) {
        IntMatrix out(x.rows() * y.rows(), x.cols() * y.cols());
        for (std::size_t i = 0; i < x.rows(); ++i)
            for (std::size_t j = 0; j < y.rows(); ++j)
                for (std::size_t p = 0; p < x.cols(); ++p)
                    for (std::size_t q = 0; q < y.cols(); ++q)
                        out.at(i * y.rows() + j, p * y.cols() + q) = x.at(i, p) * y.at(j, q);
        return out;
    };
    CHECK(deviation({Family::Tensor, 2}, {g, h}) == kron(g, h) + kron(h, g));
}

TEST_CASE("summand ranks satisfy inclusion-exclusion") {
    for (Family fam : {Family::Sym, Family::Ext, Family::Tensor})
        for (int d = 1; d <= 3; ++d) {
            PolynomialFunctor f{fam, d};
            std::vector<std::int64_t> slot_ranks = {2, 1, 3};
            for (int mask = 1; mask < 8; ++mask) {
                std::vector<int> alpha;
                for (int j = 0; j < 3; ++j)
                    if (mask & (1 << j)) alpha.push_back(j);
                if (static_cast<int>(alpha.size()) > d) continue;

                std::vector<std::int64_t> selected;
                for (int j : alpha) selected.push_back(slot_ranks[static_cast<std::size_t>(j)]);
                std::int64_t expect = 0;
                // alternating sum of F over the sub-sums of the selected slots
                for (int sub = 0; sub < (1 << alpha.size()); ++sub) {
                    std::int64_t total = 0;
                    int bits = 0;
                    for (std::size_t j = 0; j < alpha.size(); ++j)
                        if (sub & (1 << j)) {
                            total += selected[j];
                            ++bits;
                        }
                    std::int64_t sign =
                        ((static_cast<int>(alpha.size()) - bits) % 2 == 0) ? 1 : -1;
                    expect += sign * functor_rank(f, total);
                }
                CHECK(cross_effect_rank(f, selected) == expect);
                CHECK(cross_effect(f, slot_ranks, alpha).rank == expect);
            }
        }
}

TEST_CASE("summands tile F of the direct sum") {
    for (Family fam : {Family::Sym, Family::Ext, Family::Tensor})
        for (int d = 1; d <= 3; ++d) {
            PolynomialFunctor f{fam, d};
            std::vector<std::int64_t> slot_ranks = {1, 2, 2};
            std::int64_t ambient = functor_rank(f, 5);
            auto parts = decompose(f, slot_ranks);

            std::int64_t total = 0;
            std::vector<bool> seen(static_cast<std::size_t>(ambient), false);
            IntMatrix sum(static_cast<std::size_t>(ambient), static_cast<std::size_t>(ambient));
            for (const auto& ce : parts) {
                total += ce.rank;
                CHECK(ce.rank == static_cast<std::int64_t>(ce.ambient_indices.size()));
                CHECK(ce.rank == static_cast<std::int64_t>(ce.tuples.size()));
                for (std::int64_t ix : ce.ambient_indices) {
                    CHECK(!seen[static_cast<std::size_t>(ix)]);
                    seen[static_cast<std::size_t>(ix)] = true;
                }
                IntMatrix e = embedding_matrix(ce, ambient);
                sum = sum + e * e.transposed();
            }
            CHECK(total == ambient);
            CHECK(sum == IntMatrix::identity(static_cast<std::size_t>(ambient)));
        }
}

TEST_CASE("induced blocks assemble to F of the whole map") {
    std::mt19937 rng(31337);
    for (Family fam : {Family::Sym, Family::Ext, Family::Tensor})
        for (int d = 1; d <= 2; ++d) {
            PolynomialFunctor f{fam, d};
            std::vector<std::int64_t> src_ranks = {2, 1};
            std::vector<std::int64_t> tgt_ranks = {1, 2};
            IntMatrix g = dptest::random_matrix(rng, 3, 3, 3);
            IntMatrix full = apply_functor(f, g);
            std::int64_t ambient = functor_rank(f, 3);
            for (const auto& src : decompose(f, src_ranks))
                for (const auto& tgt : decompose(f, tgt_ranks)) {
                    IntMatrix block =
                        induced_map(f, g, src_ranks, src.alpha, tgt_ranks, tgt.alpha);
                    IntMatrix es = embedding_matrix(src, ambient);
                    IntMatrix et = embedding_matrix(tgt, ambient);
                    CHECK(block == et.transposed() * full * es);
                }
        }
}

TEST_CASE("cross effect of the tensor square splits off the mixed part") {
    // T^2(A (+) B) = T^2(A) (+) T^2(B) (+) (A(x)B (+) B(x)A)
    PolynomialFunctor f{Family::Tensor, 2};
    CHECK(cross_effect_rank(f, {2, 3}) == 2 * 2 * 3);
    PolynomialFunctor s{Family::Sym, 2};
    CHECK(cross_effect_rank(s, {2, 3}) == 2 * 3);
    PolynomialFunctor e{Family::Ext, 2};
    CHECK(cross_effect_rank(e, {2, 3}) == 2 * 3);
    // third cross effect of a quadratic functor vanishes
    CHECK(cross_effect_rank(s, {1, 1, 1}) == 0);
    CHECK(cross_effect_rank(e, {2, 2, 2}) == 0);
    CHECK(cross_effect_rank(f, {1, 1, 1}) == 0);
}
