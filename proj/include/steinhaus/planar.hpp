#pragma once

#include <array>
#include <optional>
#include <vector>

#include "steinhaus/forms.hpp"

namespace steinhaus::planar {

/// 2x2 integer matrix with columns (a,b) and (c,d).
struct IntMatrix2 {
    long long a, b, c, d;

    bool operator==(const IntMatrix2&) const = default;
    long long det() const { return a * d - b * c; }
};

/// Symmetric Gram matrix entries of a 2x2 matrix: (e11 e12; e12 e22).
struct Gram2 {
    long long e11, e12, e22;

    bool operator==(const Gram2&) const = default;
    long long det() const { return e11 * e22 - e12 * e12; }
};

/// x(t) = alpha*t + gamma, y(t) = beta*t + delta.
struct LinearSosPair {
    long long alpha, beta, gamma, delta;

    bool operator==(const LinearSosPair&) const = default;
    auto operator<=>(const LinearSosPair&) const = default;
};

/// f(t) = c2*t^2 + c1*t + c0.
struct QuadPoly {
    long long c2, c1, c0;

    bool operator==(const QuadPoly&) const = default;
};

struct PythagoreanTriple {
    long long p, q, r;  // p^2 + q^2 = r^2, r > 0
};

/// Signed permutation applied after the rotation in gram_equivalent.
struct SignedPerm {
    bool swap_rows = false;
    bool negate_first = false;
    bool negate_second = false;
};

Gram2 gram_of(const IntMatrix2& m);

/// Given gram_of(m1) == gram_of(m2), checks (det m1)^2 == (det m2)^2 and
/// cross-checks both sides against the common Gram determinant. Throws
/// FormError(PremiseViolated) naming the first Gram entry that differs.
bool verify_det_identity(const IntMatrix2& m1, const IntMatrix2& m2);

/// All integer solutions of (alpha*t+gamma)^2 + (beta*t+delta)^2 = f(t), one
/// lexicographically smallest representative per symmetry orbit (joint sign
/// flips of (alpha,gamma) and of (beta,delta), and swapping the two linear
/// forms), sorted. Empty when no decomposition exists.
std::vector<LinearSosPair> find_linear_sos(const QuadPoly& f);

struct BinaryFormReport {
    long long t_bound;
    bool premise_holds;                       // Q(t,1) and Q(1,t) sums of two squares, |t| <= t_bound
    std::optional<long long> failure_t;       // first t violating the premise
    std::optional<long long> failure_value;
    Rational det_b;
    std::optional<BigInt> det_root;           // present iff det B is an integer square
    QuadPoly poly;                            // f(t) = Q(t,1)
    std::vector<LinearSosPair> decompositions;
};

/// Reports the sampled premise, the determinant-square test and the linear
/// two-square decompositions of Q(t,1). Reports only; asserts nothing.
BinaryFormReport check_binary_form(const forms::QuadForm& form, long long t_bound);

/// R*m for the rational rotation R = (p/r, -q/r; q/r, p/r) composed with the
/// requested signed permutation, when all four entries are integral. The
/// result has the same Gram matrix as m exactly.
std::optional<IntMatrix2> gram_equivalent(const IntMatrix2& m,
                                          const PythagoreanTriple& rot,
                                          const SignedPerm& perm = {});

}  // namespace steinhaus::planar
