#include <doctest.h>

#include <functional>
#include <random>
#include <vector>

#include "steinhaus/forms.hpp"

using namespace steinhaus;
using namespace steinhaus::forms;

namespace {

QuadForm b4() { return builtin_form(4); }

FormErrorKind kind_of(const std::function<void()>& fn) {
    try {
        fn();
    } catch (const FormError& e) {
        return e.kind();
    }
    FAIL("expected a FormError");
    return FormErrorKind::NotSquare;
}

}  // namespace

TEST_CASE("make_form accepts the paper's forms") {
    CHECK_NOTHROW(make_form({{4, 0, 0}, {0, 22, 0}, {0, 0, 12}}));
    CHECK_NOTHROW(make_form({{2, 1, 1, 1}, {1, 2, 1, 1}, {1, 1, 2, 1}, {1, 1, 1, 2}}));
}

TEST_CASE("make_form names the violated invariant") {
    CHECK(kind_of([] { make_form({{2, 3}, {3, 2}}); }) ==
          FormErrorKind::NotPositiveDefinite);
    CHECK(kind_of([] { make_form({{1, 0}, {0, 2}}); }) == FormErrorKind::OddDiagonal);
    CHECK(kind_of([] { make_form({{2, 1}, {0, 2}}); }) == FormErrorKind::NotSymmetric);
    CHECK(kind_of([] { make_form({{2, 0, 0}, {0, 2, 0}}); }) == FormErrorKind::NotSquare);
    CHECK(kind_of([] { make_form({{0, 0}, {0, 2}}); }) ==
          FormErrorKind::NotPositiveDefinite);
}

TEST_CASE("evaluate") {
    auto q3 = diagonal_form({2, 11, 6});
    CHECK(evaluate(q3, {1, 1, 1}) == 19);
    CHECK(evaluate(q3, {0, 0, 0}) == 0);
    CHECK(evaluate(b4(), {1, 1, 1, 1}) == 10);
    CHECK(kind_of([&] { evaluate(q3, {1, 1}); }) == FormErrorKind::DimensionMismatch);
}

TEST_CASE("determinant exact values") {
    CHECK(determinant(b4()) == Rational(5, 16));
    CHECK(determinant(diagonal_form({2, 11, 6})) == Rational(132));
    CHECK(determinant(diagonal_form({1, 1, 1})) == Rational(1));
}

TEST_CASE("integer_square_root") {
    CHECK_FALSE(integer_square_root(Rational(132)).has_value());
    auto r9 = integer_square_root(Rational(9));
    REQUIRE(r9.has_value());
    CHECK(*r9 == 3);
    CHECK_FALSE(integer_square_root(Rational(5, 16)).has_value());
    auto r0 = integer_square_root(Rational(0));
    REQUIRE(r0.has_value());
    CHECK(*r0 == 0);
    CHECK_FALSE(integer_square_root(Rational(4, 9)).has_value());  // 2/3 not integral
}

TEST_CASE("characteristic polynomial") {
    SUBCASE("B4 has eigenvalues 1/2 (x3) and 5/2") {
        auto poly = characteristic_polynomial(b4());
        std::vector<Rational> expected{Rational(5, 16), Rational(-2), Rational(9, 2),
                                       Rational(-4), Rational(1)};
        CHECK(poly.coefficients == expected);
        CHECK(poly.evaluate(Rational(1, 2)) == 0);
        CHECK(poly.evaluate(Rational(5, 2)) == 0);
    }
    SUBCASE("identity 2x2") {
        auto poly = characteristic_polynomial(diagonal_form({1, 1}));
        CHECK(poly.coefficients ==
              std::vector<Rational>{Rational(1), Rational(-2), Rational(1)});
    }
    SUBCASE("diagonal forms vanish exactly at their diagonal entries") {
        auto poly = characteristic_polynomial(diagonal_form({2, 11, 6}));
        CHECK(poly.coefficients == std::vector<Rational>{Rational(-132), Rational(100),
                                                         Rational(-19), Rational(1)});
        for (long long ev : {2, 11, 6}) CHECK(poly.evaluate(Rational(ev)) == 0);
    }
}

TEST_CASE("extend_with_identity") {
    auto padded = extend_with_identity(b4(), 5);
    CHECK(padded.dim() == 5);
    CHECK(determinant(padded) == Rational(5, 16));

    auto same = extend_with_identity(b4(), 4);
    CHECK(same.twice_gram_data() == b4().twice_gram_data());

    auto diag = extend_with_identity(diagonal_form({2, 11, 6}), 4);
    CHECK(diag.twice_gram_data() == diagonal_form({2, 11, 6, 1}).twice_gram_data());
    CHECK(determinant(diag) == Rational(132));

    CHECK(kind_of([&] { extend_with_identity(b4(), 3); }) == FormErrorKind::InvalidTarget);
}

TEST_CASE("builtin_form") {
    CHECK(builtin_form(3).twice_gram_data() == diagonal_form({2, 11, 6}).twice_gram_data());
    CHECK(builtin_form(4).twice_gram_data() ==
          make_form({{2, 1, 1, 1}, {1, 2, 1, 1}, {1, 1, 2, 1}, {1, 1, 1, 2}})
              .twice_gram_data());
    CHECK(determinant(builtin_form(6)) == Rational(5, 16));
    CHECK(kind_of([] { builtin_form(2); }) == FormErrorKind::UnsupportedDimension);
}

TEST_CASE("is_proven_form") {
    CHECK(is_proven_form(diagonal_form({2, 11, 6})));
    CHECK(is_proven_form(diagonal_form({6, 2, 11})));
    CHECK(is_proven_form(builtin_form(4)));
    CHECK(is_proven_form(builtin_form(7)));
    CHECK_FALSE(is_proven_form(diagonal_form({1, 2, 3})));
    CHECK_FALSE(is_proven_form(diagonal_form({1, 1})));
}

TEST_CASE("random valid forms are positive definite in practice") {
    std::mt19937_64 rng(2026);
    auto rand_in = [&](int lo, int hi) {
        return lo + static_cast<int>(rng() % static_cast<unsigned>(hi - lo + 1));
    };
    int built = 0;
    while (built < 1000) {
        int d = rand_in(1, 5);
        // G = 2 A^T A is symmetric with even diagonal, and positive definite
        // when A is nonsingular.
        std::vector<std::vector<long long>> a(d, std::vector<long long>(d));
        for (auto& row : a)
            for (auto& v : row) v = rand_in(-3, 3);
        std::vector<std::vector<long long>> g(d, std::vector<long long>(d, 0));
        for (int i = 0; i < d; ++i)
            for (int j = 0; j < d; ++j)
                for (int k = 0; k < d; ++k) g[i][j] += 2 * a[k][i] * a[k][j];
        try {
            auto form = make_form(g);
            ++built;
            for (int trial = 0; trial < 5; ++trial) {
                std::vector<long long> x(d);
                bool zero = true;
                for (auto& v : x) {
                    v = rand_in(-10, 10);
                    zero = zero && v == 0;
                }
                long long value = evaluate(form, x);
                if (zero) CHECK(value == 0);
                else CHECK(value > 0);
            }
            if (form.is_diagonal()) {
                Rational prod = 1;
                for (auto v : form.diagonal()) prod *= v;
                CHECK(determinant(form) == prod);
            }
            int extra = rand_in(0, 2);
            CHECK(determinant(extend_with_identity(form, d + extra)) == determinant(form));
        } catch (const FormError& e) {
            // Singular A: not positive definite, rejected as it should be.
            CHECK(e.kind() == FormErrorKind::NotPositiveDefinite);
        }
    }
}

TEST_CASE("determinant of diagonal forms is the product of the diagonal") {
    CHECK(determinant(diagonal_form({3, 5, 7, 2})) == Rational(210));
    CHECK(determinant(diagonal_form({1})) == Rational(1));
}
