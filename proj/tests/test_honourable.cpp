#include <algorithm>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "doctest.h"
#include "honourable.hpp"
#include "ints.hpp"

using namespace dp;

namespace {

TriangleFamily make(int n, std::vector<SetP> sets) {
    std::sort(sets.begin(), sets.end(),
              [](const SetP& a, const SetP& b) { return family_set_compare(a, b) < 0; });
    TriangleFamily t;
    t.n = n;
    t.sets = std::move(sets);
    return t;
}

// all subsets of {0..n-1} (the empty one last), sorted by the set order
std::vector<SetP> powerset(int n) {
    std::vector<SetP> out;
    for (int mask = 0; mask < (1 << n); ++mask) {
        SetP x;
        for (int j = 0; j < n; ++j)
            if (mask & (1 << j)) x.push_back(j);
        out.push_back(x);
    }
    std::sort(out.begin(), out.end(),
              [](const SetP& a, const SetP& b) { return family_set_compare(a, b) < 0; });
    return out;
}

// definition check: removing x does not change the union
bool superfluous_by_definition(const TriangleFamily& t, std::size_t r) {
    std::set<int> whole, rest;
    for (std::size_t q = 0; q < t.sets.size(); ++q)
        for (int i : t.sets[q]) {
            whole.insert(i);
            if (q != r) rest.insert(i);
        }
    return whole == rest;
}

bool any_superfluous_by_definition(const TriangleFamily& t) {
    for (std::size_t r = 0; r < t.sets.size(); ++r)
        if (superfluous_by_definition(t, r)) return true;
    return false;
}

std::vector<TriangleFamily> brute_force_families(int n, const std::vector<SetP>& universe) {
    std::vector<TriangleFamily> out;
    int u = static_cast<int>(universe.size());
    for (int mask = 1; mask < (1 << u); ++mask) {
        TriangleFamily t;
        t.n = n;
        for (int j = 0; j < u; ++j)
            if (mask & (1 << j)) t.sets.push_back(universe[static_cast<std::size_t>(j)]);
        out.push_back(t);
    }
    std::sort(out.begin(), out.end(), [](const TriangleFamily& a, const TriangleFamily& b) {
        return family_compare(a, b) < 0;
    });
    return out;
}

}  // namespace

TEST_CASE("set order: larger cardinality first, empty set last") {
    auto ps = powerset(3);
    std::vector<SetP> expect = {{0, 1, 2}, {0, 1}, {0, 2}, {1, 2}, {0}, {1}, {2}, {}};
    CHECK(ps == expect);
    for (std::size_t a = 0; a < ps.size(); ++a)
        for (std::size_t b = 0; b < ps.size(); ++b) {
            int c = family_set_compare(ps[a], ps[b]);
            CHECK((a < b ? c < 0 : a > b ? c > 0 : c == 0));
        }
}

TEST_CASE("underlining scan on the worked cases") {
    {
        TriangleFamily t = make(4, {{0}, {0, 3}, {0, 1}});
        CHECK(family_str(t) == "{{0,1},{0,3},{0}}");
        auto scan = find_superfluous(t);
        CHECK(scan.superfluous_index == 2);
        CHECK(family_str(t, &scan.underlined) == "{{0_,1},{0_,3},{0_}}");
    }
    {
        TriangleFamily t = make(4, {{0, 1}, {1, 2}, {2, 3}});
        auto scan = find_superfluous(t);
        CHECK(scan.superfluous_index == 1);
        CHECK(family_str(t, &scan.underlined) == "{{0,1_},{1_,2_},{2_,3}}");
    }
    {
        TriangleFamily t = make(4, {{0, 1, 2}, {1, 3}});
        auto scan = find_superfluous(t);
        CHECK(scan.superfluous_index == -1);
        CHECK(family_str(t, &scan.underlined) == "{{0,1_,2},{1_,3}}");
    }
    {
        TriangleFamily t = make(4, {{0, 1}, {1, 2}, {1}, {2}, {3}});
        auto scan = find_superfluous(t);
        CHECK(scan.superfluous_index == 2);
        CHECK(family_str(t, &scan.underlined) == "{{0,1_},{1_,2},{1_},{2},{3}}");
    }
    {
        // the empty set is superfluous outright
        TriangleFamily t = make(3, {{0, 1, 2}, {}});
        CHECK(find_superfluous(t).superfluous_index == 1);
    }
}

TEST_CASE("scan agrees with the removal definition") {
    // exhaustive over every family, empty member included
    for (int n = 1; n <= 3; ++n) {
        auto universe = powerset(n);
        for (const TriangleFamily& t : brute_force_families(n, universe)) {
            auto scan = find_superfluous(t);
            CHECK((scan.superfluous_index >= 0) == any_superfluous_by_definition(t));
            if (scan.superfluous_index >= 0)
                CHECK(superfluous_by_definition(t,
                                                static_cast<std::size_t>(scan.superfluous_index)));
        }
    }
    // randomized families for larger n
    std::mt19937 rng(424242);
    for (int trial = 0; trial < 4000; ++trial) {
        int n = 4 + static_cast<int>(rng() % 2);
        auto universe = powerset(n);
        TriangleFamily t;
        t.n = n;
        for (const SetP& x : universe)
            if (rng() % 4 == 0) t.sets.push_back(x);
        if (t.sets.empty()) continue;
        auto scan = find_superfluous(t);
        CHECK((scan.superfluous_index >= 0) == any_superfluous_by_definition(t));
        if (scan.superfluous_index >= 0)
            CHECK(superfluous_by_definition(t, static_cast<std::size_t>(scan.superfluous_index)));
    }
}

TEST_CASE("inductive list for n = 1 and n = 2") {
    auto one = enumerate_families(1, default_start(1));
    REQUIRE(one.size() == 1);
    CHECK(family_str(one[0].family) == "{{0}}");
    CHECK(one[0].honourable);

    auto two = enumerate_families(2, default_start(2));
    REQUIRE(two.size() == 4);
    CHECK(family_str(two[0].family) == "{{0,1}}");
    CHECK(family_str(two[1].family) == "{{0}}");
    CHECK(family_str(two[2].family) == "{{0},{1}}");
    CHECK(family_str(two[3].family) == "{{1}}");
    CHECK(two[0].honourable);
    CHECK(!two[1].honourable);
    CHECK(two[2].honourable);
    CHECK(!two[3].honourable);
}

TEST_CASE("inductive list for n = 3 with underline states") {
    auto list = enumerate_families(3, default_start(3));
    REQUIRE(list.size() == 17);
    std::vector<std::string> plain = {
        "{{0,1,2}}",     "{{0,1}}",     "{{0,1},{0,2}}", "{{0,1},{1,2}}", "{{0,1},{2}}",
        "{{0,2}}",       "{{0,2},{1,2}}", "{{0,2},{1}}", "{{1,2}}",       "{{1,2},{0}}",
        "{{0}}",         "{{0},{1}}",   "{{0},{1},{2}}", "{{0},{2}}",     "{{1}}",
        "{{1},{2}}",     "{{2}}"};
    std::vector<int> honourable_ordinals = {1, 3, 4, 5, 7, 8, 10, 13};
    for (std::size_t j = 0; j < list.size(); ++j) {
        CHECK(family_str(list[j].family) == plain[j]);
        bool expect_hon =
            std::find(honourable_ordinals.begin(), honourable_ordinals.end(),
                      static_cast<int>(j) + 1) != honourable_ordinals.end();
        CHECK(list[j].honourable == expect_hon);
    }
    CHECK(family_str(list[2].family, &list[2].underlined) == "{{0_,1},{0_,2}}");
    CHECK(family_str(list[3].family, &list[3].underlined) == "{{0,1_},{1_,2}}");
    CHECK(family_str(list[6].family, &list[6].underlined) == "{{0,2_},{1,2_}}");
    CHECK(family_str(list[4].family, &list[4].underlined) == "{{0,1},{2}}");
}

TEST_CASE("the list is exactly the superfluous-free families, in order") {
    for (int n = 1; n <= 4; ++n) {
        std::vector<SetP> nonempty;
        for (const SetP& x : powerset(n))
            if (!x.empty()) nonempty.push_back(x);
        for (const SetP& start : {default_start(n), SetP{0, 1}}) {
            if (static_cast<int>(start.size()) > n) continue;
            std::vector<TriangleFamily> expect;
            for (const TriangleFamily& t : brute_force_families(n, nonempty)) {
                if (any_superfluous_by_definition(t)) continue;
                if (family_set_compare(t.sets.front(), start) < 0) continue;
                expect.push_back(t);
            }
            auto list = enumerate_families(n, start);
            REQUIRE(list.size() == expect.size());
            for (std::size_t j = 0; j < list.size(); ++j) {
                CHECK(list[j].family == expect[j]);
                CHECK(list[j].honourable == is_honourable(expect[j]));
            }
        }
    }
}

TEST_CASE("minimal honourable families for n = 4 starting at {0,1}") {
    auto got = enumerate_minimal_honourable(4, {0, 1});
    std::vector<std::string> expect = {
        "{{0,1},{0,2},{0,3}}", "{{0,1},{0,2},{3}}", "{{0,1},{0,3},{2}}", "{{0,1},{1,2},{1,3}}",
        "{{0,1},{1,2},{3}}",   "{{0,1},{1,3},{2}}", "{{0,1},{2,3}}",     "{{0,1},{2},{3}}",
        "{{0,2},{0,3},{1}}",   "{{0,2},{1,2},{2,3}}", "{{0,2},{1,2},{3}}", "{{0,2},{1,3}}",
        "{{0,2},{2,3},{1}}",   "{{0,2},{1},{3}}",   "{{0,3},{1,2}}",     "{{0,3},{1,3},{2,3}}",
        "{{0,3},{1,3},{2}}",   "{{0,3},{2,3},{1}}", "{{0,3},{1},{2}}",   "{{1,2},{1,3},{0}}",
        "{{1,2},{2,3},{0}}",   "{{1,2},{0},{3}}",   "{{1,3},{2,3},{0}}", "{{1,3},{0},{2}}",
        "{{2,3},{0},{1}}",     "{{0},{1},{2},{3}}"};
    REQUIRE(got.size() == expect.size());
    for (std::size_t j = 0; j < got.size(); ++j) CHECK(family_str(got[j]) == expect[j]);
}

TEST_CASE("augmented families within the size bounds") {
    {
        auto minimal = enumerate_minimal_honourable(2, default_start(2));
        auto all = complete_with_nonminimal(minimal, 2, 2, 2);
        REQUIRE(all.size() == 5);
        CHECK(family_str(all[0]) == "{{0,1}}");
        CHECK(family_str(all[1]) == "{{0,1},{0}}");
        CHECK(family_str(all[2]) == "{{0,1},{1}}");
        CHECK(family_str(all[3]) == "{{0,1},{}}");
        CHECK(family_str(all[4]) == "{{0},{1}}");
    }
    {
        auto minimal = enumerate_minimal_honourable(3, {0, 1});
        auto all = complete_with_nonminimal(minimal, 3, 2, 2);
        std::vector<std::string> expect = {"{{0,1},{0,2}}", "{{0,1},{1,2}}", "{{0,1},{2}}",
                                           "{{0,2},{1,2}}", "{{0,2},{1}}",   "{{1,2},{0}}"};
        REQUIRE(all.size() == expect.size());
        for (std::size_t j = 0; j < all.size(); ++j) CHECK(family_str(all[j]) == expect[j]);
    }
    {
        auto minimal = enumerate_minimal_honourable(4, {0, 1});
        auto all = complete_with_nonminimal(minimal, 4, 2, 2);
        std::vector<std::string> expect = {"{{0,1},{2,3}}", "{{0,2},{1,3}}", "{{0,3},{1,2}}"};
        REQUIRE(all.size() == expect.size());
        for (std::size_t j = 0; j < all.size(); ++j) CHECK(family_str(all[j]) == expect[j]);
    }
}

TEST_CASE("augmented families match a brute-force filter") {
    for (int n = 1; n <= 3; ++n)
        for (int max_sets : {1, 2, 3})
            for (int max_card : {1, 2, 3}) {
                int top = std::min(n, max_card);
                if (top < 1) continue;
                auto minimal = enumerate_minimal_honourable(n, default_start(top));
                auto got = complete_with_nonminimal(minimal, n, max_sets, max_card);

                std::vector<TriangleFamily> expect;
                for (const TriangleFamily& t : brute_force_families(n, powerset(n))) {
                    if (!is_honourable(t)) continue;
                    if (static_cast<int>(t.sets.size()) > max_sets) continue;
                    if (std::any_of(t.sets.begin(), t.sets.end(), [&](const SetP& x) {
                            return static_cast<int>(x.size()) > max_card;
                        }))
                        continue;
                    expect.push_back(t);
                }
                REQUIRE(got.size() == expect.size());
                for (std::size_t j = 0; j < got.size(); ++j) CHECK(got[j] == expect[j]);
            }
}

TEST_CASE("families with prescribed cardinality counts") {
    {
        auto w = honourable_existence(4, {0, 0, 2, 0, 0});
        REQUIRE(w.has_value());
        CHECK(is_honourable(*w));
        CHECK(w->sets.size() == 2);
        for (const SetP& x : w->sets) CHECK(x.size() == 2);
    }
    {
        // covering weight falls short
        CHECK(!honourable_existence(4, {1, 3, 0, 0, 0}).has_value());
        CHECK(!honourable_existence(3, {1, 0, 0, 0}).has_value());
    }
    CHECK_THROWS_AS(honourable_existence(3, {0, 0, 0}), validation_error);
    CHECK_THROWS_AS(honourable_existence(3, {0, 4, 0, 0}), validation_error);
    CHECK_THROWS_AS(honourable_existence(3, {0, -1, 0, 0}), validation_error);

    std::mt19937 rng(777);
    for (int trial = 0; trial < 400; ++trial) {
        int n = 1 + static_cast<int>(rng() % 6);
        std::vector<std::int64_t> a(static_cast<std::size_t>(n) + 1, 0);
        std::int64_t weight = 0;
        for (int k = 0; k <= n; ++k) {
            a[static_cast<std::size_t>(k)] =
                static_cast<std::int64_t>(rng()) % (binomial(n, k) + 1);
            weight += k * a[static_cast<std::size_t>(k)];
        }
        auto w = honourable_existence(n, a);
        if (weight < n) {
            CHECK(!w.has_value());
            continue;
        }
        REQUIRE(w.has_value());
        CHECK(is_honourable(*w));
        std::vector<std::int64_t> counts(static_cast<std::size_t>(n) + 1, 0);
        std::set<SetP> distinct;
        for (const SetP& x : w->sets) {
            counts[x.size()] += 1;
            distinct.insert(x);
        }
        CHECK(counts == a);
        CHECK(distinct.size() == w->sets.size());
    }
}
