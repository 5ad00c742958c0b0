#include "steinhaus/forms.hpp"

#include <algorithm>
#include <sstream>

namespace steinhaus {

const char* form_error_name(FormErrorKind kind) {
    switch (kind) {
        case FormErrorKind::NotSquare: return "NotSquare";
        case FormErrorKind::NotSymmetric: return "NotSymmetric";
        case FormErrorKind::OddDiagonal: return "OddDiagonal";
        case FormErrorKind::NotPositiveDefinite: return "NotPositiveDefinite";
        case FormErrorKind::DimensionMismatch: return "DimensionMismatch";
        case FormErrorKind::InvalidTarget: return "InvalidTarget";
        case FormErrorKind::UnsupportedDimension: return "UnsupportedDimension";
        case FormErrorKind::Overflow: return "Overflow";
        case FormErrorKind::ToleranceNotMet: return "ToleranceNotMet";
        case FormErrorKind::PremiseViolated: return "PremiseViolated";
    }
    return "Unknown";
}

namespace forms {
namespace {

// Leading principal minors of an integer matrix, exact, by Bareiss
// fraction-free elimination. minors[k] = det of the (k+1)x(k+1) corner.
std::vector<BigInt> leading_principal_minors(const std::vector<long long>& m, int n) {
    std::vector<BigInt> a(m.begin(), m.end());
    std::vector<BigInt> minors(n);
    BigInt prev = 1;
    for (int k = 0; k < n; ++k) {
        if (k > 0) {
            const BigInt& pivot = a[(k - 1) * n + (k - 1)];
            if (pivot == 0) {
                // Zero pivot: a leading minor vanished. Fall back to
                // expansion for the remaining minors.
                for (int j = k; j < n; ++j) {
                    // Plain cofactor-free route: recompute minor j by a
                    // fresh Bareiss run on the (j+1)x(j+1) corner with row
                    // swaps tracked.
                    int s = j + 1;
                    std::vector<BigInt> c(s * s);
                    for (int r = 0; r < s; ++r)
                        for (int q = 0; q < s; ++q) c[r * s + q] = m[r * n + q];
                    int sign = 1;
                    BigInt denom = 1;
                    bool singular = false;
                    for (int p = 0; p < s - 1 && !singular; ++p) {
                        if (c[p * s + p] == 0) {
                            int swap = -1;
                            for (int r = p + 1; r < s; ++r)
                                if (c[r * s + p] != 0) { swap = r; break; }
                            if (swap < 0) { singular = true; break; }
                            for (int q = 0; q < s; ++q)
                                std::swap(c[p * s + q], c[swap * s + q]);
                            sign = -sign;
                        }
                        for (int r = p + 1; r < s; ++r)
                            for (int q = p + 1; q < s; ++q) {
                                c[r * s + q] = (c[p * s + p] * c[r * s + q] -
                                                c[r * s + p] * c[p * s + q]) / denom;
                            }
                        denom = c[p * s + p];
                    }
                    minors[j] = singular ? BigInt(0) : BigInt(sign) * c[(s - 1) * s + (s - 1)];
                }
                return minors;
            }
            for (int i = k; i < n; ++i)
                for (int j = k; j < n; ++j) {
                    a[i * n + j] = (a[(k - 1) * n + (k - 1)] * a[i * n + j] -
                                    a[i * n + (k - 1)] * a[(k - 1) * n + j]) / prev;
                }
            prev = a[(k - 1) * n + (k - 1)];
        }
        minors[k] = a[k * n + k];
    }
    return minors;
}

}  // namespace

Rational CharPoly::evaluate(const Rational& lambda) const {
    Rational acc = 0;
    for (auto it = coefficients.rbegin(); it != coefficients.rend(); ++it)
        acc = acc * lambda + *it;
    return acc;
}

bool QuadForm::is_diagonal() const {
    for (int i = 0; i < dim_; ++i)
        for (int j = 0; j < dim_; ++j)
            if (i != j && g_[i * dim_ + j] != 0) return false;
    return true;
}

std::vector<long long> QuadForm::diagonal() const {
    std::vector<long long> d(dim_);
    for (int i = 0; i < dim_; ++i) d[i] = g_[i * dim_ + i] / 2;
    return d;
}

QuadForm make_form(const std::vector<std::vector<long long>>& twice_gram) {
    const int n = static_cast<int>(twice_gram.size());
    if (n == 0) throw FormError(FormErrorKind::NotSquare, "empty matrix");
    for (const auto& row : twice_gram)
        if (static_cast<int>(row.size()) != n)
            throw FormError(FormErrorKind::NotSquare,
                            "matrix rows must all have length " + std::to_string(n));

    std::vector<long long> g(n * n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) g[i * n + j] = twice_gram[i][j];

    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (g[i * n + j] != g[j * n + i]) {
                std::ostringstream msg;
                msg << "NotSymmetric: G[" << i << "][" << j << "] = " << g[i * n + j]
                    << " but G[" << j << "][" << i << "] = " << g[j * n + i];
                throw FormError(FormErrorKind::NotSymmetric, msg.str());
            }
    for (int i = 0; i < n; ++i)
        if (g[i * n + i] % 2 != 0) {
            std::ostringstream msg;
            msg << "OddDiagonal: G[" << i << "][" << i << "] = " << g[i * n + i]
                << " makes B[" << i << "][" << i << "] non-integral in Q";
            throw FormError(FormErrorKind::OddDiagonal, msg.str());
        }

    auto minors = leading_principal_minors(g, n);
    for (int k = 0; k < n; ++k)
        if (minors[k] <= 0) {
            std::ostringstream msg;
            msg << "NotPositiveDefinite: leading principal minor of order "
                << (k + 1) << " is " << minors[k];
            throw FormError(FormErrorKind::NotPositiveDefinite, msg.str());
        }

    return QuadForm(n, std::move(g));
}

namespace {

long long checked_add(long long a, long long b) {
    long long r;
    if (__builtin_add_overflow(a, b, &r))
        throw FormError(FormErrorKind::Overflow, "integer overflow in form evaluation");
    return r;
}

long long checked_mul(long long a, long long b) {
    long long r;
    if (__builtin_mul_overflow(a, b, &r))
        throw FormError(FormErrorKind::Overflow, "integer overflow in form evaluation");
    return r;
}

}  // namespace

long long evaluate(const QuadForm& form, const std::vector<long long>& x) {
    const int n = form.dim();
    if (static_cast<int>(x.size()) != n)
        throw FormError(FormErrorKind::DimensionMismatch,
                        "vector length " + std::to_string(x.size()) +
                            " does not match form dimension " + std::to_string(n));
    long long acc = 0;
    for (int i = 0; i < n; ++i) {
        long long row = 0;
        for (int j = 0; j < n; ++j)
            row = checked_add(row, checked_mul(form.twice_gram(i, j), x[j]));
        acc = checked_add(acc, checked_mul(row, x[i]));
    }
    return acc / 2;  // <Gx,x> is even for integral G with even diagonal
}

Rational determinant(const QuadForm& form) {
    const int n = form.dim();
    auto minors = leading_principal_minors(form.twice_gram_data(), n);
    BigInt denom = BigInt(1) << n;  // det B = det G / 2^d
    return Rational(minors[n - 1], denom);
}

std::optional<BigInt> integer_square_root(const Rational& q) {
    if (boost::multiprecision::denominator(q) != 1) return std::nullopt;
    BigInt n = boost::multiprecision::numerator(q);
    if (n < 0) return std::nullopt;
    BigInt r = boost::multiprecision::sqrt(n);
    if (r * r == n) return r;
    return std::nullopt;
}

CharPoly characteristic_polynomial(const QuadForm& form) {
    const int n = form.dim();
    std::vector<Rational> b(n * n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) b[i * n + j] = Rational(form.twice_gram(i, j), 2);

    // Faddeev-LeVerrier: c[n] = 1; M <- B*M + c[n-k+1]*I; c[n-k] = -tr(B*M)/k.
    std::vector<Rational> c(n + 1);
    c[n] = 1;
    std::vector<Rational> m(n * n, Rational(0));
    for (int k = 1; k <= n; ++k) {
        // m <- b * m + c[n-k+1] * I
        std::vector<Rational> next(n * n, Rational(0));
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                Rational s = 0;
                for (int l = 0; l < n; ++l) s += b[i * n + l] * m[l * n + j];
                next[i * n + j] = s;
            }
        for (int i = 0; i < n; ++i) next[i * n + i] += c[n - k + 1];
        m = std::move(next);

        Rational trace = 0;
        for (int i = 0; i < n; ++i)
            for (int l = 0; l < n; ++l) trace += b[i * n + l] * m[l * n + i];
        c[n - k] = -trace / k;
    }
    return CharPoly{std::move(c)};
}

QuadForm extend_with_identity(const QuadForm& form, int d_target) {
    const int n = form.dim();
    if (d_target < n)
        throw FormError(FormErrorKind::InvalidTarget,
                        "target dimension " + std::to_string(d_target) +
                            " is smaller than form dimension " + std::to_string(n));
    std::vector<std::vector<long long>> g(d_target, std::vector<long long>(d_target, 0));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) g[i][j] = form.twice_gram(i, j);
    for (int i = n; i < d_target; ++i) g[i][i] = 2;
    return make_form(g);
}

QuadForm diagonal_form(const std::vector<long long>& b_diagonal) {
    const int n = static_cast<int>(b_diagonal.size());
    std::vector<std::vector<long long>> g(n, std::vector<long long>(n, 0));
    for (int i = 0; i < n; ++i) g[i][i] = 2 * b_diagonal[i];
    return make_form(g);
}

QuadForm builtin_form(int d) {
    if (d < 3)
        throw FormError(FormErrorKind::UnsupportedDimension,
                        "no builtin form below dimension 3");
    if (d == 3) return diagonal_form({2, 11, 6});
    std::vector<std::vector<long long>> g(4, std::vector<long long>(4, 1));
    for (int i = 0; i < 4; ++i) g[i][i] = 2;
    QuadForm b4 = make_form(g);
    if (d == 4) return b4;
    return extend_with_identity(b4, d);
}

bool is_proven_form(const QuadForm& form) {
    if (form.dim() == 3 && form.is_diagonal()) {
        auto diag = form.diagonal();
        std::sort(diag.begin(), diag.end());
        return diag == std::vector<long long>{2, 6, 11};
    }
    if (form.dim() >= 4)
        return form.twice_gram_data() == builtin_form(form.dim()).twice_gram_data();
    return false;
}

}  // namespace forms
}  // namespace steinhaus
