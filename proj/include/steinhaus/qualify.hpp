#pragma once

#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "steinhaus/forms.hpp"
#include "steinhaus/sos.hpp"

namespace steinhaus::qualify {

struct Qualifies {
    long long box_radius;
    Rational determinant;
};

struct ValueCounterexample {
    std::vector<long long> x;
    long long value;
    std::optional<sos::FourPowerObstruction> obstruction;
};

struct SquareDeterminant {
    BigInt root;
};

/// Outcome of the qualification check. The determinant-square test runs
/// first; a Qualifies verdict certifies the hypothesis only up to the
/// scanned box.
using FormVerdict = std::variant<Qualifies, ValueCounterexample, SquareDeterminant>;

struct TilingLevel {
    Rational det_b;
    std::optional<BigInt> integer_level;  // m iff det_b = m^2
};

struct ResidueClaim {
    std::string claim_id;
    int modulus;
    std::string description;
    bool holds;
    std::optional<std::vector<long long>> counterexample;
};

struct VerificationReport {
    std::string name;
    std::vector<std::pair<std::string, std::string>> parameters;
    long long checked_count = 0;
    std::vector<ValueCounterexample> counterexamples;
    bool passed = false;
};

/// Scans the canonical half-box (first nonzero coordinate positive) of the
/// given radius in scan order: each coordinate runs 0, 1, -1, 2, -2, ...
/// Returns SquareDeterminant if det B is an integer square (checked before
/// any scanning), the scan-order-first ValueCounterexample otherwise, else
/// Qualifies. Deterministic for any worker count.
FormVerdict check_form_range(const forms::QuadForm& form, long long box_radius,
                             int jobs = 1);

TilingLevel tiling_level(const forms::QuadForm& form);

/// Full half-box scan recording every value that fails the d-squares test.
VerificationReport scan_form(const forms::QuadForm& form, long long box_radius,
                             int jobs = 1);

/// Exhaustive check that 2x^2 + 11y^2 + 6z^2 avoids 4^nu(8k+7) on the
/// half-box of the given radius.
VerificationReport verify_ternary_theorem(long long box_radius, int jobs = 1);

/// The six finite modular facts the descent proof rests on, each settled by
/// complete residue enumeration.
std::vector<ResidueClaim> verify_residue_claims();

/// Lower-triangular real A with A^T A = B up to max-entry error tol; numeric
/// export only, throws FormError(ToleranceNotMet) if the bound fails.
std::vector<std::vector<double>> cholesky_basis(const forms::QuadForm& form,
                                                double tol);

}  // namespace steinhaus::qualify
