#include <doctest.h>

#include <variant>

#include "steinhaus/search.hpp"

using namespace steinhaus;
using namespace steinhaus::search;

namespace {

bool contains(const std::vector<CandidateRecord>& list, long long a, long long b,
              long long c) {
    for (const auto& r : list)
        if (r.a == a && r.b == b && r.c == c) return true;
    return false;
}

}  // namespace

TEST_CASE("search reproduces the paper's form and rejects diag(1,1,3)") {
    auto records = search_diagonal_ternary(12, 20);
    CHECK(contains(records, 2, 6, 11));
    CHECK_FALSE(contains(records, 1, 1, 3));
    for (const auto& r : records) {
        CHECK(r.proven == (r.a == 2 && r.b == 6 && r.c == 11));
        CHECK(!sos::exact_sqrt(r.a * r.b * r.c).has_value());
        CHECK(r.a <= r.b);
        CHECK(r.b <= r.c);
    }
}

TEST_CASE("max_coeff 1 leaves only the identity, which is excluded") {
    CHECK(search_diagonal_ternary(1, 5).empty());
}

TEST_CASE("output is sorted and identical for any worker count") {
    auto r1 = search_diagonal_ternary(8, 10, 1);
    auto r4 = search_diagonal_ternary(8, 10, 4);
    REQUIRE(r1.size() == r4.size());
    for (size_t i = 0; i < r1.size(); ++i) {
        CHECK(r1[i].a == r4[i].a);
        CHECK(r1[i].b == r4[i].b);
        CHECK(r1[i].c == r4[i].c);
        CHECK(r1[i].proven == r4[i].proven);
        if (i > 0)
            CHECK(std::tuple(r1[i - 1].a, r1[i - 1].b, r1[i - 1].c) <
                  std::tuple(r1[i].a, r1[i].b, r1[i].c));
    }
}

TEST_CASE("every emitted candidate re-passes an independent re-scan") {
    for (const auto& r : search_diagonal_ternary(6, 10)) {
        auto verdict = qualify::check_form_range(forms::diagonal_form({r.a, r.b, r.c}),
                                                 r.box_radius);
        CHECK(std::holds_alternative<qualify::Qualifies>(verdict));
    }
}

TEST_CASE("a larger radius can only shrink the candidate list") {
    auto small = search_diagonal_ternary(8, 6);
    auto large = search_diagonal_ternary(8, 14);
    for (const auto& r : large) CHECK(contains(small, r.a, r.b, r.c));
    CHECK(large.size() <= small.size());
}
