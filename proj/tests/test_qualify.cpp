#include <doctest.h>

#include <cmath>
#include <variant>

#include "steinhaus/qualify.hpp"

using namespace steinhaus;
using namespace steinhaus::qualify;

TEST_CASE("check_form_range on the paper's ternary form") {
    auto verdict = check_form_range(forms::builtin_form(3), 15);
    auto* q = std::get_if<Qualifies>(&verdict);
    REQUIRE(q != nullptr);
    CHECK(q->box_radius == 15);
    CHECK(q->determinant == Rational(132));
}

TEST_CASE("check_form_range reports the scan-order-first counterexample") {
    auto form = forms::diagonal_form({1, 1, 3});
    auto verdict = check_form_range(form, 5);
    auto* ce = std::get_if<ValueCounterexample>(&verdict);
    REQUIRE(ce != nullptr);
    CHECK(ce->x == std::vector<long long>{0, 1, 3});
    CHECK(ce->value == 28);
    REQUIRE(ce->obstruction.has_value());
    CHECK(ce->obstruction->nu == 1);
    CHECK(ce->obstruction->k == 0);

    // Soundness: the emitted counterexample re-verifies independently.
    CHECK(forms::evaluate(form, ce->x) == ce->value);
    CHECK_FALSE(sos::is_sum_of_d_squares(ce->value, form.dim()));
}

TEST_CASE("square determinant is detected before any scan") {
    auto verdict = check_form_range(forms::diagonal_form({1, 1, 1}), 10);
    auto* sq = std::get_if<SquareDeterminant>(&verdict);
    REQUIRE(sq != nullptr);
    CHECK(sq->root == 1);
}

TEST_CASE("verdicts are identical for any worker count") {
    for (auto diag : {std::vector<long long>{1, 1, 3}, std::vector<long long>{2, 11, 6},
                      std::vector<long long>{1, 2, 5}}) {
        auto form = forms::diagonal_form(diag);
        auto v1 = check_form_range(form, 8, 1);
        auto v4 = check_form_range(form, 8, 4);
        REQUIRE(v1.index() == v4.index());
        if (auto* ce = std::get_if<ValueCounterexample>(&v1)) {
            auto& other = std::get<ValueCounterexample>(v4);
            CHECK(ce->x == other.x);
            CHECK(ce->value == other.value);
        }
    }
}

TEST_CASE("builtin forms qualify in dimensions 3 through 6") {
    for (int d = 3; d <= 6; ++d) {
        auto verdict = check_form_range(forms::builtin_form(d), 10);
        CHECK(std::holds_alternative<Qualifies>(verdict));
    }
}

TEST_CASE("tiling_level") {
    auto b4 = tiling_level(forms::builtin_form(4));
    CHECK(b4.det_b == Rational(5, 16));
    CHECK_FALSE(b4.integer_level.has_value());

    auto identity = tiling_level(forms::diagonal_form({1, 1, 1}));
    REQUIRE(identity.integer_level.has_value());
    CHECK(*identity.integer_level == 1);

    auto one_d = tiling_level(forms::make_form({{8}}));
    CHECK(one_d.det_b == Rational(4));
    REQUIRE(one_d.integer_level.has_value());
    CHECK(*one_d.integer_level == 2);
}

TEST_CASE("tiling level is absent exactly when the determinant root is") {
    for (auto diag : {std::vector<long long>{2, 11, 6}, std::vector<long long>{1, 4, 9},
                      std::vector<long long>{2, 2, 1}, std::vector<long long>{3, 3, 1}}) {
        auto form = forms::diagonal_form(diag);
        auto level = tiling_level(form);
        CHECK(level.integer_level.has_value() ==
              forms::integer_square_root(forms::determinant(form)).has_value());
    }
}

TEST_CASE("verify_ternary_theorem") {
    auto r20 = verify_ternary_theorem(20);
    CHECK(r20.passed);
    CHECK(r20.counterexamples.empty());
    // Canonical half-box of the 41^3 full box.
    CHECK(r20.checked_count == (41LL * 41 * 41 - 1) / 2 + 1);

    auto r0 = verify_ternary_theorem(0);
    CHECK(r0.passed);
    CHECK(r0.checked_count == 1);
}

TEST_CASE("the same scan rejects diag(1,1,3)") {
    auto report = scan_form(forms::diagonal_form({1, 1, 3}), 5);
    CHECK_FALSE(report.passed);
    REQUIRE(!report.counterexamples.empty());
    CHECK(report.counterexamples.front().x == std::vector<long long>{0, 1, 3});
    CHECK(report.counterexamples.front().value == 28);
    CHECK(report.checked_count == (11LL * 11 * 11 - 1) / 2 + 1);
}

TEST_CASE("scan reports are identical for any worker count") {
    auto r1 = scan_form(forms::diagonal_form({1, 1, 3}), 6, 1);
    auto r3 = scan_form(forms::diagonal_form({1, 1, 3}), 6, 3);
    CHECK(r1.checked_count == r3.checked_count);
    REQUIRE(r1.counterexamples.size() == r3.counterexamples.size());
    for (size_t i = 0; i < r1.counterexamples.size(); ++i) {
        CHECK(r1.counterexamples[i].x == r3.counterexamples[i].x);
        CHECK(r1.counterexamples[i].value == r3.counterexamples[i].value);
    }
}

TEST_CASE("all six residue claims hold by complete enumeration") {
    auto claims = verify_residue_claims();
    REQUIRE(claims.size() == 6);
    for (const auto& claim : claims) {
        INFO(claim.claim_id);
        CHECK(claim.holds);
        CHECK_FALSE(claim.counterexample.has_value());
    }
    CHECK(claims[0].claim_id == "squares-mod-8");
    CHECK(claims[1].claim_id == "q3-never-7-mod-8");
    CHECK(claims[2].claim_id == "xi2-plus-xi-mod-8");
    CHECK(claims[3].claim_id == "case2-sum-never-5-mod-8");
    CHECK(claims[4].claim_id == "case3-lhs-odd");
    CHECK(claims[5].claim_id == "q3-parity-matches-y");
}

TEST_CASE("cholesky_basis") {
    auto identity = cholesky_basis(forms::diagonal_form({1, 1, 1}), 1e-12);
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            CHECK(identity[i][j] == doctest::Approx(i == j ? 1.0 : 0.0).epsilon(1e-14));

    auto diag = cholesky_basis(forms::diagonal_form({2, 11, 6}), 1e-12);
    CHECK(diag[0][0] == doctest::Approx(std::sqrt(2.0)).epsilon(1e-14));
    CHECK(diag[1][1] == doctest::Approx(std::sqrt(11.0)).epsilon(1e-14));
    CHECK(diag[2][2] == doctest::Approx(std::sqrt(6.0)).epsilon(1e-14));

    CHECK_NOTHROW(cholesky_basis(forms::builtin_form(4), 1e-12));

    // sqrt(2)^2 misses 2 by ~4.4e-16 in double arithmetic.
    CHECK_THROWS_AS(cholesky_basis(forms::diagonal_form({2, 11, 6}), 1e-300), FormError);
}
