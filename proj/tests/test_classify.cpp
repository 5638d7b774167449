#include "doctest.h"

#include "pafp/classify.hpp"
#include "pafp/dp_solvers.hpp"
#include "support/oracle.hpp"

#include <algorithm>
#include <numeric>

using namespace pafp;

namespace {

Instance with_pairs(int n, std::vector<ForbiddenPair> pairs)
{
    return make_instance(n, {{0, n - 1}}, std::move(pairs), 0, n - 1);
}

}  // namespace

TEST_SUITE("classify") {

TEST_CASE("relate: figure examples")
{
    CHECK(relate({1, 2}, {3, 4}) == PairRelation::Disjoint);
    CHECK(relate({0, 4}, {1, 3}) == PairRelation::Nested);
    CHECK(relate({0, 4}, {2, 5}) == PairRelation::Halving);
}

TEST_CASE("relate: symmetric, total on all orderings of four points")
{
    std::array<int, 4> v{0, 1, 2, 3};
    do {
        const ForbiddenPair a{std::min(v[0], v[1]), std::max(v[0], v[1])};
        const ForbiddenPair b{std::min(v[2], v[3]), std::max(v[2], v[3])};
        const auto r = relate(a, b);
        CHECK(r == relate(b, a));
        const auto [first, second] = a.left < b.left ? std::pair{a, b} : std::pair{b, a};
        const int matches = (first.right < second.left) + (second.right < first.right) +
                            (second.left < first.right && first.right < second.right);
        CHECK(matches == 1);
    } while (std::next_permutation(v.begin(), v.end()));
}

TEST_CASE("relate: shared endpoint is an error")
{
    CHECK_THROWS_AS(relate({0, 2}, {2, 3}), Error);
    try {
        relate({0, 2}, {0, 3});
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::SharedEndpoint);
    }
}

TEST_CASE("classify_instance examples")
{
    CHECK(classify_instance(with_pairs(7, {{0, 4}, {1, 3}, {2, 5}})).kind == StructureClass::Overlapping);
    CHECK(classify_instance(with_pairs(5, {{1, 2}, {3, 4}})).kind == StructureClass::Disjoint);
    CHECK(classify_instance(with_pairs(4, {{0, 2}, {1, 3}})).kind == StructureClass::Halving);
    CHECK(classify_instance(with_pairs(4, {})).kind == StructureClass::Disjoint);
    CHECK(classify_instance(with_pairs(4, {{1, 2}})).kind == StructureClass::Disjoint);
    CHECK_THROWS_AS(classify_instance(with_pairs(4, {{0, 2}, {2, 3}})), Error);
}

TEST_CASE("flag mapping is exact")
{
    using S = StructureClass;
    CHECK(class_from_flags(false, false, false) == S::Disjoint);
    CHECK(class_from_flags(true, false, false) == S::Disjoint);
    CHECK(class_from_flags(false, true, false) == S::Nested);
    CHECK(class_from_flags(false, false, true) == S::Halving);
    CHECK(class_from_flags(true, true, false) == S::WellParenthesized);
    CHECK(class_from_flags(true, false, true) == S::Ordered);
    CHECK(class_from_flags(false, true, true) == S::Overlapping);
    CHECK(class_from_flags(true, true, true) == S::General);
}

TEST_CASE("class names round trip")
{
    for (auto c : {StructureClass::Disjoint, StructureClass::Nested, StructureClass::Halving,
                   StructureClass::WellParenthesized, StructureClass::Ordered,
                   StructureClass::Overlapping, StructureClass::General})
        CHECK(parse_structure_class(to_string(c)) == c);
    CHECK_FALSE(parse_structure_class("bogus"));
}

TEST_CASE("ordered and overlapping endpoint orders")
{
    std::mt19937_64 rng(5);
    for (int i = 0; i < 200; ++i) {
        const auto o = testing::random_class_instance(rng, StructureClass::Ordered, 8, 30, 8);
        for (std::size_t j = 1; j < o.pairs.size(); ++j) {
            CHECK(o.pairs[j - 1].left < o.pairs[j].left);
            CHECK(o.pairs[j - 1].right < o.pairs[j].right);
        }
        const auto v = testing::random_class_instance(rng, StructureClass::Overlapping, 8, 30, 8);
        int max_left = -1, min_right = v.n;
        for (const auto& p : v.pairs) {
            max_left = std::max(max_left, p.left);
            min_right = std::min(min_right, p.right);
        }
        CHECK(max_left < min_right);
    }
}

TEST_CASE("split: identity without shared endpoints")
{
    const auto inst = make_instance(6, {{0, 1}, {1, 2}, {2, 5}}, {{1, 3}, {2, 4}}, 0, 5);
    const auto s = split_shared_vertices(inst);
    CHECK(s.instance == inst);
    std::vector<int> id(6);
    std::iota(id.begin(), id.end(), 0);
    CHECK(s.origin == id);
}

TEST_CASE("split: shared vertex becomes a path, ends in partner order")
{
    // v=1 in {1,3} and {1,2}
    const auto inst = make_instance(4, {{0, 1}, {1, 2}, {1, 3}, {2, 3}}, {{1, 3}, {1, 2}}, 0, 3);
    const auto s = split_shared_vertices(inst);
    CHECK(s.instance.n == 5);
    CHECK(s.head[1] == 1);
    CHECK(s.tail[1] == 2);
    CHECK_FALSE(has_shared_endpoints(s.instance));
    // partner 2 comes first, so it gets the head
    CHECK(s.instance.pairs == std::vector<ForbiddenPair>{{1, 3}, {2, 4}});
    CHECK(std::find(s.instance.edges.begin(), s.instance.edges.end(), Edge{1, 2}) !=
          s.instance.edges.end());
}

TEST_CASE("split: preserves answers and relations of distinct couples")
{
    std::mt19937_64 rng(17);
    for (int i = 0; i < 500; ++i) {
        const int n = std::uniform_int_distribution<int>(2, 15)(rng);
        const auto inst = testing::random_shared_instance(rng, n, 8, 3, 0.25);
        const auto s = split_shared_vertices(inst);
        CHECK(validate(s.instance).empty());
        CHECK_FALSE(has_shared_endpoints(s.instance));
        CHECK(brute_force_solve(inst).found == brute_force_solve(s.instance).found);
        if (!has_shared_endpoints(inst))
            CHECK(s.instance == inst);
    }
}

}
