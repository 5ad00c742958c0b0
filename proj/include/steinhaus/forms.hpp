#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace steinhaus {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

enum class FormErrorKind {
    NotSquare,
    NotSymmetric,
    OddDiagonal,
    NotPositiveDefinite,
    DimensionMismatch,
    InvalidTarget,
    UnsupportedDimension,
    Overflow,
    ToleranceNotMet,
    PremiseViolated,
};

class FormError : public std::runtime_error {
public:
    FormError(FormErrorKind kind, const std::string& what)
        : std::runtime_error(what), kind_(kind) {}
    FormErrorKind kind() const { return kind_; }

private:
    FormErrorKind kind_;
};

const char* form_error_name(FormErrorKind kind);

namespace forms {

/// Exact monic characteristic polynomial; coefficients[i] multiplies lambda^i,
/// coefficients[dim] == 1.
struct CharPoly {
    std::vector<Rational> coefficients;

    int degree() const { return static_cast<int>(coefficients.size()) - 1; }
    Rational evaluate(const Rational& lambda) const;
};

/// Integer-valued positive-definite quadratic form Q(x) = <Bx,x>, stored as
/// the all-integer matrix G = 2B (symmetric, even diagonal, B positive
/// definite). Immutable after construction.
class QuadForm {
public:
    int dim() const { return dim_; }
    long long twice_gram(int i, int j) const { return g_[i * dim_ + j]; }
    const std::vector<long long>& twice_gram_data() const { return g_; }

    bool is_diagonal() const;
    /// B-diagonal entries (G_ii / 2); only meaningful for diagonal forms.
    std::vector<long long> diagonal() const;

    friend QuadForm make_form(const std::vector<std::vector<long long>>& twice_gram);

private:
    QuadForm(int dim, std::vector<long long> g) : dim_(dim), g_(std::move(g)) {}
    int dim_;
    std::vector<long long> g_;  // row-major G = 2B
};

/// Validates symmetry, even diagonal (integer-valuedness on Z^d) and positive
/// definiteness (exact leading principal minors). Throws FormError naming the
/// violated invariant.
QuadForm make_form(const std::vector<std::vector<long long>>& twice_gram);

/// Q(x) = <Gx,x>/2 in checked 64-bit arithmetic; throws FormError(Overflow)
/// instead of wrapping.
long long evaluate(const QuadForm& form, const std::vector<long long>& x);

/// det(B) = det(G) / 2^d, exact, via fraction-free (Bareiss) elimination.
Rational determinant(const QuadForm& form);

/// m such that q = m^2 for integer m >= 0, if any.
std::optional<BigInt> integer_square_root(const Rational& q);

/// Characteristic polynomial of B = G/2 in exact rational arithmetic
/// (Faddeev-LeVerrier).
CharPoly characteristic_polynomial(const QuadForm& form);

/// Block form: original in the upper-left corner, identity (in B) elsewhere.
/// Determinant is unchanged.
QuadForm extend_with_identity(const QuadForm& form, int d_target);

/// d=3: diag(2,11,6); d=4: the 4x4 form with 1 on the B-diagonal and 1/2
/// elsewhere; d>4: the d=4 form padded with the identity.
QuadForm builtin_form(int d);

/// True for the forms the paper proves qualify: any diagonal arrangement of
/// {2,6,11} and the builtin d>=4 forms.
bool is_proven_form(const QuadForm& form);

QuadForm diagonal_form(const std::vector<long long>& b_diagonal);

}  // namespace forms
}  // namespace steinhaus
