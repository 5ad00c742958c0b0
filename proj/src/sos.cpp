#include "steinhaus/sos.hpp"

#include <cmath>
#include <stdexcept>

namespace steinhaus::sos {

long long FourPowerObstruction::value() const {
    long long v = 8 * k + 7;
    for (int i = 0; i < nu; ++i) v *= 4;
    return v;
}

long long isqrt(long long n) {
    if (n < 0) throw std::domain_error("isqrt of negative number");
    if (n == 0) return 0;
    long long r = static_cast<long long>(std::sqrt(static_cast<double>(n)));
    while (r > 0 && r * r > n) --r;
    while ((r + 1) * (r + 1) <= n) ++r;
    return r;
}

std::optional<long long> exact_sqrt(long long n) {
    if (n < 0) return std::nullopt;
    long long r = isqrt(n);
    if (r * r == n) return r;
    return std::nullopt;
}

std::optional<FourPowerObstruction> four_power_obstruction(long long n) {
    if (n < 0) throw std::domain_error("four_power_obstruction: n must be >= 0");
    if (n == 0) return std::nullopt;
    int nu = 0;
    while (n % 4 == 0) {
        n /= 4;
        ++nu;
    }
    if (n % 8 != 7) return std::nullopt;
    return FourPowerObstruction{nu, (n - 7) / 8};
}

std::optional<SquaresWitness> decompose_two_squares(long long n) {
    if (n < 0) throw std::domain_error("decompose_two_squares: n must be >= 0");
    for (long long a = 0; 2 * a * a <= n; ++a) {
        if (auto b = exact_sqrt(n - a * a)) return SquaresWitness{n, {a, *b}};
    }
    return std::nullopt;
}

namespace {

// Smallest non-decreasing (b,c) with b >= lo and b^2 + c^2 = n.
std::optional<std::pair<long long, long long>> two_squares_from(long long n, long long lo) {
    for (long long b = lo; 2 * b * b <= n; ++b) {
        long long rem = n - b * b;
        if (auto c = exact_sqrt(rem); c && *c >= b) return std::make_pair(b, *c);
    }
    return std::nullopt;
}

std::optional<std::vector<long long>> three_squares_from(long long n, long long lo) {
    for (long long a = lo; 3 * a * a <= n; ++a) {
        if (auto bc = two_squares_from(n - a * a, a))
            return std::vector<long long>{a, bc->first, bc->second};
    }
    return std::nullopt;
}

}  // namespace

std::optional<SquaresWitness> decompose_three_squares(long long n) {
    if (n < 0) throw std::domain_error("decompose_three_squares: n must be >= 0");
    if (auto terms = three_squares_from(n, 0)) return SquaresWitness{n, *terms};
    return std::nullopt;
}

SquaresWitness decompose_four_squares(long long n) {
    if (n < 0) throw std::domain_error("decompose_four_squares: n must be >= 0");
    for (long long a = 0; 4 * a * a <= n; ++a) {
        long long rem = n - a * a;
        // Legendre fast-path: skip remainders with no three-square witness
        // at all before searching for one with terms >= a.
        if (four_power_obstruction(rem)) continue;
        if (auto terms = three_squares_from(rem, a))
            return SquaresWitness{n, {a, (*terms)[0], (*terms)[1], (*terms)[2]}};
    }
    // Unreachable for n >= 0 by Lagrange's theorem.
    throw std::logic_error("decompose_four_squares: no witness found for n = " +
                           std::to_string(n));
}

bool is_sum_of_d_squares(long long n, int d) {
    if (n < 0) throw std::domain_error("is_sum_of_d_squares: n must be >= 0");
    if (d < 1) throw std::domain_error("is_sum_of_d_squares: d must be >= 1");
    switch (d) {
        case 1: return exact_sqrt(n).has_value();
        case 2: return decompose_two_squares(n).has_value();
        case 3: return !four_power_obstruction(n).has_value();
        default: return true;  // Lagrange
    }
}

}  // namespace steinhaus::sos
