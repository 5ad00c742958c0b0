#pragma once

#include <optional>
#include <vector>

namespace steinhaus::sos {

/// Certificate that n is a sum of squares; terms are non-decreasing and the
/// tuple is the lexicographically smallest such witness.
struct SquaresWitness {
    long long n;
    std::vector<long long> terms;

    bool operator==(const SquaresWitness&) const = default;
};

/// Witness of the Legendre exclusion n = 4^nu * (8k+7).
struct FourPowerObstruction {
    int nu;
    long long k;

    bool operator==(const FourPowerObstruction&) const = default;
    long long value() const;
};

long long isqrt(long long n);
std::optional<long long> exact_sqrt(long long n);

/// (nu,k) with n = 4^nu * (8k+7), or nothing. Strips factors of 4, then
/// tests the residue mod 8.
std::optional<FourPowerObstruction> four_power_obstruction(long long n);

/// Smallest non-decreasing (a,b) with a^2+b^2 = n, by O(sqrt n) enumeration.
std::optional<SquaresWitness> decompose_two_squares(long long n);

/// Smallest non-decreasing (a,b,c) with a^2+b^2+c^2 = n, by brute force.
/// Deliberately does not consult four_power_obstruction: the two routes are
/// kept independent so they can cross-check each other.
std::optional<SquaresWitness> decompose_three_squares(long long n);

/// Smallest non-decreasing quadruple; always succeeds (Lagrange). Iterates
/// the smallest term upward and completes with the three-square search,
/// using the Legendre characterization only to skip hopeless remainders.
SquaresWitness decompose_four_squares(long long n);

/// Membership test for "n is a sum of d integer squares". d=3 goes through
/// the Legendre characterization; d>=4 is always true.
bool is_sum_of_d_squares(long long n, int d);

}  // namespace steinhaus::sos
