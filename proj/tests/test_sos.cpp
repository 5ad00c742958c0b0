#include <doctest.h>

#include <algorithm>
#include <vector>

#include "steinhaus/sos.hpp"

using namespace steinhaus::sos;

namespace {

// Independent oracle: the lexicographically smallest non-decreasing d-tuple
// with square-sum n, by full enumeration. Kept separate from the library
// search paths on purpose.
bool oracle_smallest(long long n, int d, std::vector<long long>& tuple,
                     long long lo = 0) {
    if (d == 0) return n == 0;
    for (long long a = lo; a * a * d <= n; ++a) {
        tuple.push_back(a);
        if (oracle_smallest(n - a * a, d - 1, tuple, a)) return true;
        tuple.pop_back();
    }
    return false;
}

long long square_sum(const std::vector<long long>& terms) {
    long long s = 0;
    for (auto t : terms) s += t * t;
    return s;
}

}  // namespace

TEST_CASE("four_power_obstruction on the paper's instances") {
    auto o7 = four_power_obstruction(7);
    REQUIRE(o7.has_value());
    CHECK(o7->nu == 0);
    CHECK(o7->k == 0);

    CHECK_FALSE(four_power_obstruction(0).has_value());

    auto o28 = four_power_obstruction(28);
    REQUIRE(o28.has_value());
    CHECK(o28->nu == 1);
    CHECK(o28->k == 0);
    CHECK(o28->value() == 28);

    CHECK_FALSE(four_power_obstruction(19).has_value());
}

TEST_CASE("decompose_two_squares canonical witnesses") {
    auto w0 = decompose_two_squares(0);
    REQUIRE(w0.has_value());
    CHECK(w0->terms == std::vector<long long>{0, 0});

    auto w25 = decompose_two_squares(25);
    REQUIRE(w25.has_value());
    CHECK(w25->terms == std::vector<long long>{0, 5});  // precedes (3,4)

    CHECK_FALSE(decompose_two_squares(3).has_value());
}

TEST_CASE("decompose_three_squares canonical witnesses") {
    CHECK_FALSE(decompose_three_squares(7).has_value());

    auto w19 = decompose_three_squares(19);
    REQUIRE(w19.has_value());
    CHECK(w19->terms == std::vector<long long>{1, 3, 3});

    auto w0 = decompose_three_squares(0);
    REQUIRE(w0.has_value());
    CHECK(w0->terms == std::vector<long long>{0, 0, 0});
}

TEST_CASE("decompose_four_squares canonical witnesses") {
    CHECK(decompose_four_squares(7).terms == std::vector<long long>{1, 1, 1, 2});
    CHECK(decompose_four_squares(0).terms == std::vector<long long>{0, 0, 0, 0});
    CHECK(decompose_four_squares(10).terms == std::vector<long long>{0, 0, 1, 3});
}

TEST_CASE("is_sum_of_d_squares paper values") {
    CHECK_FALSE(is_sum_of_d_squares(7, 3));
    CHECK(is_sum_of_d_squares(7, 4));
    CHECK(is_sum_of_d_squares(5, 2));
    CHECK(is_sum_of_d_squares(0, 1));
    CHECK_FALSE(is_sum_of_d_squares(3, 2));
}

TEST_CASE("witnesses match the enumeration oracle for small n") {
    for (long long n = 0; n <= 300; ++n) {
        for (int d = 2; d <= 4; ++d) {
            std::vector<long long> expected;
            bool exists = oracle_smallest(n, d, expected);
            std::optional<SquaresWitness> got;
            if (d == 2) got = decompose_two_squares(n);
            else if (d == 3) got = decompose_three_squares(n);
            else got = decompose_four_squares(n);
            REQUIRE(got.has_value() == exists);
            if (exists) {
                CHECK(got->terms == expected);
                CHECK(square_sum(got->terms) == n);
            }
        }
    }
}

TEST_CASE("cross-oracle equivalence and witness validity up to 20000") {
    for (long long n = 0; n <= 20000; ++n) {
        bool obstructed = four_power_obstruction(n).has_value();
        auto witness = decompose_three_squares(n);
        CHECK(witness.has_value() != obstructed);
        if (witness) {
            CHECK(square_sum(witness->terms) == n);
            CHECK(std::is_sorted(witness->terms.begin(), witness->terms.end()));
        }
    }
}

TEST_CASE("monotone in d: padding with zero preserves membership") {
    for (long long n : {0, 1, 3, 7, 12, 28, 48, 112, 240, 9999}) {
        for (int d = 1; d <= 5; ++d) {
            if (is_sum_of_d_squares(n, d)) CHECK(is_sum_of_d_squares(n, d + 1));
        }
    }
}

TEST_CASE("obstruction reconstructs the queried value") {
    for (long long n = 1; n <= 5000; ++n) {
        if (auto o = four_power_obstruction(n)) CHECK(o->value() == n);
    }
}
