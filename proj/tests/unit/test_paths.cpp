#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>
#include <tuple>
#include <vector>

#include "dqchar/paths.hpp"
#include "dqchar/qchar.hpp"
#include "dqchar/weights.hpp"

using namespace dqchar;

namespace {

// independent route: raw sign-vector products filtered by the family
// constraints, never using for_each_path
std::set<std::vector<int>> brute_force_family(const PathFamily& fam) {
    const int n = fam.rank;
    std::set<std::vector<int>> members;
    if (fam.is_spin()) {
        for (unsigned mask = 0; mask < (1u << (n - 1)); ++mask) {
            std::vector<int> h{n - 1 + fam.shift};
            for (int b = 0; b < n - 1; ++b) h.push_back(h.back() + ((mask >> b & 1) ? 1 : -1));
            members.insert(h);
        }
        return members;
    }
    const int off = fam.rank - fam.node - 1;
    std::vector<std::vector<int>> lefts, rights;
    for (unsigned mask = 0; mask < (1u << (n - 1)); ++mask) {
        std::vector<int> h{n - 1 + fam.shift - off};
        for (int b = 0; b < n - 1; ++b) h.push_back(h.back() + ((mask >> b & 1) ? 1 : -1));
        lefts.push_back(h);
        std::vector<int> rev{n - 1 + fam.shift + off};  // read from x = N inward
        for (int b = 0; b < n - 1; ++b) rev.push_back(rev.back() + ((mask >> b & 1) ? 1 : -1));
        rights.push_back({rev.rbegin(), rev.rend()});
    }
    for (const auto& lh : lefts)
        for (const auto& rh : rights) {
            if (lh[n - 1] < rh[0]) continue;
            std::vector<int> h = lh;
            h.insert(h.end(), rh.begin(), rh.end());
            members.insert(h);
        }
    return members;
}

std::set<std::vector<int>> height_set(const std::vector<Path>& paths) {
    std::set<std::vector<int>> out;
    for (const auto& p : paths) out.insert(p.heights());
    return out;
}

}  // namespace

TEST_CASE("family validation") {
    CHECK_NOTHROW(family(4, 3, 0));
    CHECK_NOTHROW(family(10, 6, 1));
    CHECK_THROWS_AS(family(4, 2, 0), std::invalid_argument);
    CHECK_THROWS_AS(family(4, 0, 1), std::invalid_argument);
    CHECK_THROWS_AS(family(4, 4, 1), std::invalid_argument);  // node n has no family
    CHECK_THROWS_AS(family(3, 1, 0), std::invalid_argument);
}

TEST_CASE("enumeration counts and order") {
    CHECK(enumerate(family(4, 3, 0)).size() == 8);
    CHECK(enumerate(family(4, 1, 0)).size() == 7);  // closed form agrees with brute force
    CHECK(enumerate(family(4, 2, 1)).size() == 22);
    CHECK(enumerate(family(10, 9, 0)).size() == 512);

    for (int n = 4; n <= 7; ++n)
        for (int i = 1; i <= n - 1; ++i) {
            int k = default_shift(n, i);
            std::vector<Path> paths = enumerate(family(n, i, k));
            CHECK(Int(static_cast<long>(paths.size())) == path_count_formula(n, i));
            CHECK(height_set(paths) == brute_force_family(family(n, i, k)));
            CHECK(std::is_sorted(paths.begin(), paths.end(),
                                 [](const Path& a, const Path& b) { return a < b; }));
            CHECK(paths.size() == height_set(paths).size());  // no duplicates
        }
}

TEST_CASE("translation is a height bijection") {
    for (int n : {4, 5}) {
        for (int i = 1; i <= n - 1; ++i) {
            int k = default_shift(n, i);
            std::vector<Path> base = enumerate(family(n, i, k));
            std::vector<Path> moved = enumerate(family(n, i, k + 2));
            REQUIRE(base.size() == moved.size());
            for (std::size_t t = 0; t < base.size(); ++t) {
                std::vector<int> shifted = base[t].heights();
                for (int& v : shifted) v += 2;
                CHECK(shifted == moved[t].heights());
            }
        }
    }
}

TEST_CASE("corners") {
    SUBCASE("spin examples") {
        Path top(family(4, 3, 0), {3, 2, 1, 0});
        CornerSets cs = corners(top);
        REQUIRE(cs.upper.size() == 1);
        CHECK(cs.upper[0].x == 3);
        CHECK(cs.upper[0].y == 0);
        CHECK(cs.lower.empty());

        Path p(family(4, 3, 0), {3, 2, 1, 2});
        cs = corners(p);
        REQUIRE(cs.upper.size() == 1);
        CHECK(cs.upper[0].x == 2);
        CHECK(cs.upper[0].y == 1);
        REQUIRE(cs.lower.size() == 1);
        CHECK(cs.lower[0].x == 3);
        CHECK(cs.lower[0].y == 2);
    }

    SUBCASE("glued highest path: straight pass is not a corner") {
        Path top(family(4, 2, 1), {3, 2, 1, 2, 2, 3, 4, 5});
        CornerSets cs = corners(top);
        REQUIRE(cs.upper.size() == 1);
        CHECK(cs.upper[0].x == 2);
        CHECK(cs.upper[0].y == 1);
        CHECK(cs.lower.empty());
    }

    SUBCASE("no point is both an upper and a lower corner") {
        for (int n : {4, 5}) {
            for (int i = 1; i <= n - 1; ++i) {
                for (const Path& p : enumerate(family(n, i, default_shift(n, i)))) {
                    CornerSets cs = corners(p);
                    std::set<std::tuple<int, int, bool>> uppers;
                    for (const auto& c : cs.upper) uppers.insert({c.x, c.y, c.right_copy});
                    for (const auto& c : cs.lower)
                        CHECK_FALSE(uppers.count({c.x, c.y, c.right_copy}));
                }
            }
        }
    }
}

TEST_CASE("highest and lowest paths") {
    CHECK(highest_path(family(4, 3, 0)).heights() == std::vector<int>{3, 2, 1, 0});
    CHECK(highest_path(family(4, 2, 1)).heights() ==
          std::vector<int>{3, 2, 1, 2, 2, 3, 4, 5});
    CHECK(lowest_path(family(4, 1, 0)).heights() ==
          std::vector<int>{1, 2, 3, 4, 4, 5, 6, 5});

    for (int n : {4, 5, 6}) {
        for (int i = 1; i <= n - 1; ++i) {
            PathFamily fam = family(n, i, default_shift(n, i));
            Path top = highest_path(fam), bottom = lowest_path(fam);
            CHECK(corners(top).lower.empty());
            CHECK(corners(bottom).upper.empty());
            CHECK(lowering_moves(bottom).empty());
            CHECK(raising_moves(top).empty());
            // uniqueness of the extreme paths
            int no_lower = 0, no_upper = 0;
            for (const Path& p : enumerate(fam)) {
                if (corners(p).lower.empty()) ++no_lower;
                if (corners(p).upper.empty()) ++no_upper;
            }
            CHECK(no_lower == 1);
            CHECK(no_upper == 1);
        }
    }
}

TEST_CASE("moves") {
    SUBCASE("spin endpoint move") {
        Path p(family(4, 3, 0), {3, 2, 1, 0});
        REQUIRE(can_lower(p, {3, 1}));
        CHECK(lower_move(p, {3, 1}).heights() == std::vector<int>{3, 2, 1, 2});
    }

    SUBCASE("interior move on the glued highest path") {
        Path p = highest_path(family(4, 2, 1));
        REQUIRE(can_lower(p, {2, 2}));
        Path q = lower_move(p, {2, 2});
        CHECK(q.heights() == std::vector<int>{3, 2, 3, 2, 2, 3, 4, 5});
        CHECK(weight(q) ==
              LaurentPolynomial(LaurentMonomial::parse("Y[1,2] Y[2,3]^-1 Y[3,2] Y[4,2]")));
    }

    SUBCASE("axis peak lowers the left copy, then the right copy") {
        Path peak(family(4, 1, 0), {1, 2, 3, 2, 2, 3, 4, 5});
        REQUIRE(can_lower(peak, {3, 3}));
        Path vertical = lower_move(peak, {3, 3});
        CHECK(vertical.heights() == std::vector<int>{1, 2, 3, 4, 2, 3, 4, 5});
        REQUIRE(can_lower(vertical, {3, 3}));
        Path valley = lower_move(vertical, {3, 3});
        CHECK(valley.heights() == std::vector<int>{1, 2, 3, 4, 4, 3, 4, 5});
        CHECK(raise_move(valley, {3, 3}) == vertical);
        CHECK(raise_move(vertical, {3, 3}) == peak);
    }

    SUBCASE("raise after lower is the identity, exhaustively") {
        for (int n : {4, 5}) {
            for (int i = 1; i <= n - 1; ++i) {
                for (const Path& p : enumerate(family(n, i, default_shift(n, i)))) {
                    for (MovePoint at : lowering_moves(p)) {
                        Path q = lower_move(p, at);
                        REQUIRE(can_raise(q, at));
                        CHECK(raise_move(q, at) == p);
                        // lowering strictly descends in the pointwise order
                        bool strictly = false;
                        for (std::size_t t = 0; t < q.heights().size(); ++t) {
                            CHECK(q.heights()[t] >= p.heights()[t]);
                            strictly = strictly || q.heights()[t] > p.heights()[t];
                        }
                        CHECK(strictly);
                    }
                    for (MovePoint at : raising_moves(p))
                        CHECK(lower_move(raise_move(p, at), at) == p);
                }
            }
        }
    }
}

TEST_CASE("lattice structure") {
    std::mt19937 rng(31);
    for (int n : {4, 5}) {
        for (int i = 1; i <= n - 1; ++i) {
            PathFamily fam = family(n, i, default_shift(n, i));
            std::vector<Path> all = enumerate(fam);
            Path top = highest_path(fam), bottom = lowest_path(fam);
            std::uniform_int_distribution<std::size_t> pick(0, all.size() - 1);
            for (int trial = 0; trial < 40; ++trial) {
                const Path &p = all[pick(rng)], &q = all[pick(rng)];
                CHECK(join(p, p) == p);
                CHECK(meet(p, p) == p);
                CHECK(join(p, q) == join(q, p));
                CHECK(meet(p, join(p, q)) == p);
                CHECK(join(p, meet(p, q)) == p);
                CHECK(join(p, top) == top);
                CHECK(meet(p, bottom) == bottom);
            }
        }
    }
    CHECK_THROWS_AS(join(highest_path(family(4, 1, 0)), highest_path(family(4, 3, 0))),
                    std::invalid_argument);
}

TEST_CASE("move closure equals enumeration") {
    for (int n : {4, 5}) {
        for (int i = 1; i <= n - 1; ++i) {
            PathFamily fam = family(n, i, default_shift(n, i));
            std::vector<Path> direct = enumerate(fam);
            std::vector<Path> closure = enumerate_by_moves(fam);
            CHECK(closure.size() == direct.size());
            CHECK(height_set(closure) == height_set(direct));
        }
    }
}
