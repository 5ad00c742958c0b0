#include "steinhaus/qualify.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <mutex>
#include <sstream>
#include <thread>

namespace steinhaus::qualify {
namespace {

using forms::QuadForm;

// Scan order for one coordinate after a nonzero prefix: 0, 1, -1, 2, -2, ...
long long signed_value(long long t) {
    if (t == 0) return 0;
    return (t % 2 == 1) ? (t + 1) / 2 : -(t / 2);
}

// Visits the subtree of the canonical half-box rooted at a fixed first
// coordinate, in scan order. The half-box keeps exactly the points whose
// first nonzero coordinate is positive: while the prefix is all zero the
// next coordinate runs 0..r, afterwards it runs the full signed sequence.
// The visitor returns false to stop the subtree scan.
template <typename Visitor>
bool visit_subtree(const QuadForm& form, long long radius, std::vector<long long>& x,
                   int pos, bool zero_prefix, long long& position, Visitor&& visit) {
    const int d = form.dim();
    if (pos == d) {
        long long value = forms::evaluate(form, x);
        return visit(x, value, position++);
    }
    if (zero_prefix) {
        for (long long v = 0; v <= radius; ++v) {
            x[pos] = v;
            if (!visit_subtree(form, radius, x, pos + 1, v == 0, position, visit))
                return false;
        }
    } else {
        for (long long t = 0; t <= 2 * radius; ++t) {
            x[pos] = signed_value(t);
            if (!visit_subtree(form, radius, x, pos + 1, false, position, visit))
                return false;
        }
    }
    return true;
}

struct SubtreeScan {
    long long checked = 0;
    std::vector<std::pair<long long, ValueCounterexample>> failures;  // (position, ce)
};

// Scans the x1 = first subtree; collects every value failing the d-squares
// membership test, up to max_failures (0 = first failure stops the scan,
// -1 = unlimited).
SubtreeScan scan_one_subtree(const QuadForm& form, long long radius, long long first,
                             long long max_failures) {
    const int d = form.dim();
    SubtreeScan result;
    std::vector<long long> x(d);
    x[0] = first;
    long long position = 0;
    visit_subtree(form, radius, x, 1, first == 0, position,
                  [&](const std::vector<long long>& point, long long value, long long pos) {
                      ++result.checked;
                      if (!sos::is_sum_of_d_squares(value, d)) {
                          result.failures.emplace_back(
                              pos, ValueCounterexample{point, value,
                                                       sos::four_power_obstruction(value)});
                          if (max_failures == 0) return false;
                          if (max_failures > 0 &&
                              static_cast<long long>(result.failures.size()) >= max_failures)
                              return false;
                      }
                      return true;
                  });
    return result;
}

// Runs all x1-subtrees (x1 = 0..radius) across `jobs` workers; subtree i is
// handled by worker i % jobs, so the merge by subtree index is bit-identical
// for any worker count.
std::vector<SubtreeScan> scan_all_subtrees(const QuadForm& form, long long radius,
                                           int jobs, long long max_failures) {
    const long long subtrees = radius + 1;
    std::vector<SubtreeScan> results(subtrees);
    jobs = std::max(1, jobs);
    if (jobs == 1 || subtrees == 1) {
        for (long long i = 0; i < subtrees; ++i)
            results[i] = scan_one_subtree(form, radius, i, max_failures);
        return results;
    }
    std::vector<std::thread> workers;
    std::exception_ptr error;
    std::mutex error_mutex;
    for (int w = 0; w < jobs; ++w) {
        workers.emplace_back([&, w]() {
            try {
                for (long long i = w; i < subtrees; i += jobs)
                    results[i] = scan_one_subtree(form, radius, i, max_failures);
            } catch (...) {
                std::lock_guard lock(error_mutex);
                if (!error) error = std::current_exception();
            }
        });
    }
    for (auto& t : workers) t.join();
    if (error) std::rethrow_exception(error);
    return results;
}

}  // namespace

FormVerdict check_form_range(const QuadForm& form, long long box_radius, int jobs) {
    Rational det = forms::determinant(form);
    if (auto root = forms::integer_square_root(det)) return SquareDeterminant{*root};

    // Every non-negative integer is a sum of four squares, so for d >= 4 the
    // value scan cannot produce a counterexample.
    if (form.dim() >= 4) return Qualifies{box_radius, det};

    auto results = scan_all_subtrees(form, box_radius, jobs, 0);
    for (const auto& subtree : results)
        if (!subtree.failures.empty()) return subtree.failures.front().second;
    return Qualifies{box_radius, det};
}

TilingLevel tiling_level(const QuadForm& form) {
    Rational det = forms::determinant(form);
    return TilingLevel{det, forms::integer_square_root(det)};
}

VerificationReport scan_form(const QuadForm& form, long long box_radius, int jobs) {
    VerificationReport report;
    report.name = "half-box-scan";
    report.parameters = {{"radius", std::to_string(box_radius)},
                         {"dimension", std::to_string(form.dim())}};
    if (form.dim() >= 4) {
        // No value in dimension >= 4 can fail the d-squares test; count the
        // half-box size without enumerating it.
        BigInt full = 1;
        for (int i = 0; i < form.dim(); ++i) full *= 2 * box_radius + 1;
        BigInt half = (full - 1) / 2 + 1;
        report.checked_count = half.convert_to<long long>();
        report.passed = true;
        return report;
    }
    auto results = scan_all_subtrees(form, box_radius, jobs, -1);
    for (const auto& subtree : results) {
        report.checked_count += subtree.checked;
        for (const auto& [pos, ce] : subtree.failures) report.counterexamples.push_back(ce);
    }
    report.passed = report.counterexamples.empty();
    return report;
}

VerificationReport verify_ternary_theorem(long long box_radius, int jobs) {
    auto report = scan_form(forms::builtin_form(3), box_radius, jobs);
    report.name = "ternary-theorem";
    report.parameters = {{"form", "2,11,6"}, {"radius", std::to_string(box_radius)}};
    return report;
}

std::vector<ResidueClaim> verify_residue_claims() {
    std::vector<ResidueClaim> claims;

    auto record = [&](std::string id, int modulus, std::string description, bool holds,
                      std::optional<std::vector<long long>> counterexample) {
        claims.push_back({std::move(id), modulus, std::move(description), holds,
                          std::move(counterexample)});
    };

    // (1) The quadratic residues mod 8 are exactly {0, 1, 4}.
    {
        bool seen[8] = {};
        for (long long xi = 0; xi < 8; ++xi) seen[(xi * xi) % 8] = true;
        bool holds = true;
        std::optional<std::vector<long long>> ce;
        for (int r = 0; r < 8; ++r) {
            bool expected = (r == 0 || r == 1 || r == 4);
            if (seen[r] != expected) {
                holds = false;
                ce = std::vector<long long>{r};
                break;
            }
        }
        record("squares-mod-8", 8, "{xi^2 mod 8} = {0,1,4}", holds, ce);
    }

    // (2) 2x^2 + 11y^2 + 6z^2 is never 7 mod 8.
    {
        bool holds = true;
        std::optional<std::vector<long long>> ce;
        for (long long x = 0; x < 8 && holds; ++x)
            for (long long y = 0; y < 8 && holds; ++y)
                for (long long z = 0; z < 8 && holds; ++z)
                    if ((2 * x * x + 11 * y * y + 6 * z * z) % 8 == 7) {
                        holds = false;
                        ce = std::vector<long long>{x, y, z};
                    }
        record("q3-never-7-mod-8", 8, "2x^2+11y^2+6z^2 mod 8 != 7 on (Z/8)^3", holds, ce);
    }

    // (3) xi^2 + xi mod 8 lands in {0, 2, 4, 6}.
    {
        bool holds = true;
        std::optional<std::vector<long long>> ce;
        for (long long xi = 0; xi < 8; ++xi) {
            long long r = (xi * xi + xi) % 8;
            if (r != 0 && r != 2 && r != 4 && r != 6) {
                holds = false;
                ce = std::vector<long long>{xi};
                break;
            }
        }
        record("xi2-plus-xi-mod-8", 8, "{xi^2+xi mod 8} subset of {0,2,4,6}", holds, ce);
    }

    // (4) 2a + 11b + 6c mod 8 != 5 for a,c in {0,2,4,6} and b in {0,1,4}
    // (a,c range over xi^2+xi residues, b over quadratic residues).
    {
        const long long ac[] = {0, 2, 4, 6};
        const long long bs[] = {0, 1, 4};
        bool holds = true;
        std::optional<std::vector<long long>> ce;
        for (long long a : ac)
            for (long long b : bs)
                for (long long c : ac)
                    if (holds && (2 * a + 11 * b + 6 * c) % 8 == 5) {
                        holds = false;
                        ce = std::vector<long long>{a, b, c};
                    }
        record("case2-sum-never-5-mod-8", 8,
               "2a+11b+6c mod 8 != 5 for a,c in {0,2,4,6}, b in {0,1,4}", holds, ce);
    }

    // (5) x(x+1) + 22y^2 + 3z(z+1) + 1 is odd for all residues mod 2.
    {
        bool holds = true;
        std::optional<std::vector<long long>> ce;
        for (long long x = 0; x < 2; ++x)
            for (long long y = 0; y < 2; ++y)
                for (long long z = 0; z < 2; ++z)
                    if (holds && (x * (x + 1) + 22 * y * y + 3 * z * (z + 1) + 1) % 2 != 1) {
                        holds = false;
                        ce = std::vector<long long>{x, y, z};
                    }
        record("case3-lhs-odd", 2, "x(x+1)+22y^2+3z(z+1)+1 is odd", holds, ce);
    }

    // (6) 2x^2 + 11y^2 + 6z^2 has the parity of y.
    {
        bool holds = true;
        std::optional<std::vector<long long>> ce;
        for (long long x = 0; x < 2; ++x)
            for (long long y = 0; y < 2; ++y)
                for (long long z = 0; z < 2; ++z)
                    if (holds && (2 * x * x + 11 * y * y + 6 * z * z) % 2 != y) {
                        holds = false;
                        ce = std::vector<long long>{x, y, z};
                    }
        record("q3-parity-matches-y", 2, "2x^2+11y^2+6z^2 = y mod 2", holds, ce);
    }

    return claims;
}

std::vector<std::vector<double>> cholesky_basis(const forms::QuadForm& form, double tol) {
    if (tol <= 0)
        throw FormError(FormErrorKind::InvalidTarget, "tolerance must be positive");
    const int n = form.dim();
    std::vector<std::vector<double>> b(n, std::vector<double>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) b[i][j] = form.twice_gram(i, j) / 2.0;

    std::vector<std::vector<double>> a(n, std::vector<double>(n, 0.0));
    for (int j = 0; j < n; ++j) {
        double diag = b[j][j];
        for (int k = 0; k < j; ++k) diag -= a[j][k] * a[j][k];
        if (diag <= 0.0)
            throw FormError(FormErrorKind::ToleranceNotMet,
                            "floating Cholesky lost positive definiteness");
        a[j][j] = std::sqrt(diag);
        for (int i = j + 1; i < n; ++i) {
            double s = b[i][j];
            for (int k = 0; k < j; ++k) s -= a[i][k] * a[j][k];
            a[i][j] = s / a[j][j];
        }
    }

    double residual = 0.0;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            double s = 0.0;
            for (int k = 0; k < n; ++k) s += a[i][k] * a[j][k];
            residual = std::max(residual, std::abs(s - b[i][j]));
        }
    if (residual > tol) {
        std::ostringstream msg;
        msg << "ToleranceNotMet: residual " << residual << " exceeds " << tol;
        throw FormError(FormErrorKind::ToleranceNotMet, msg.str());
    }
    return a;
}

}  // namespace qualify
