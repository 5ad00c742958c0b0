#include "steinhaus/planar.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "steinhaus/sos.hpp"

namespace steinhaus::planar {

Gram2 gram_of(const IntMatrix2& m) {
    return Gram2{m.a * m.a + m.b * m.b, m.a * m.c + m.b * m.d, m.c * m.c + m.d * m.d};
}

bool verify_det_identity(const IntMatrix2& m1, const IntMatrix2& m2) {
    Gram2 g1 = gram_of(m1);
    Gram2 g2 = gram_of(m2);
    if (g1 != g2) {
        std::ostringstream msg;
        msg << "PremiseViolated: ";
        if (g1.e11 != g2.e11)
            msg << "a^2+b^2 differs (" << g1.e11 << " vs " << g2.e11 << ")";
        else if (g1.e12 != g2.e12)
            msg << "ac+bd differs (" << g1.e12 << " vs " << g2.e12 << ")";
        else
            msg << "c^2+d^2 differs (" << g1.e22 << " vs " << g2.e22 << ")";
        throw FormError(FormErrorKind::PremiseViolated, msg.str());
    }
    long long d1 = m1.det();
    long long d2 = m2.det();
    bool equal = d1 * d1 == d2 * d2;
    // Independent route: the Gram determinant equals the squared matrix
    // determinant on each side.
    bool cross = (g1.det() == d1 * d1) && (g2.det() == d2 * d2);
    return equal && cross;
}

namespace {

// All (u,v) in Z^2 with u^2 + v^2 = n, signs and order included.
std::vector<std::pair<long long, long long>> two_square_reps(long long n) {
    std::vector<std::pair<long long, long long>> reps;
    long long r = sos::isqrt(n);
    for (long long u = -r; u <= r; ++u) {
        if (auto v = sos::exact_sqrt(n - u * u)) {
            reps.emplace_back(u, *v);
            if (*v != 0) reps.emplace_back(u, -*v);
        }
    }
    return reps;
}

std::array<long long, 4> as_tuple(const LinearSosPair& p) {
    return {p.alpha, p.beta, p.gamma, p.delta};
}

// Lexicographically smallest element of the 8-element symmetry orbit.
LinearSosPair canonical(const LinearSosPair& p) {
    LinearSosPair best = p;
    for (int negag = 0; negag < 2; ++negag)
        for (int negbd = 0; negbd < 2; ++negbd)
            for (int swap = 0; swap < 2; ++swap) {
                LinearSosPair q = p;
                if (negag) { q.alpha = -q.alpha; q.gamma = -q.gamma; }
                if (negbd) { q.beta = -q.beta; q.delta = -q.delta; }
                if (swap) {
                    std::swap(q.alpha, q.beta);
                    std::swap(q.gamma, q.delta);
                }
                if (as_tuple(q) < as_tuple(best)) best = q;
            }
    return best;
}

}  // namespace

std::vector<LinearSosPair> find_linear_sos(const QuadPoly& f) {
    if (f.c2 < 0 || f.c0 < 0)
        throw FormError(FormErrorKind::PremiseViolated,
                        "find_linear_sos requires c2 >= 0 and c0 >= 0");
    std::set<LinearSosPair> found;
    for (const auto& [alpha, beta] : two_square_reps(f.c2))
        for (const auto& [gamma, delta] : two_square_reps(f.c0))
            if (2 * (alpha * gamma + beta * delta) == f.c1)
                found.insert(canonical(LinearSosPair{alpha, beta, gamma, delta}));
    return {found.begin(), found.end()};
}

BinaryFormReport check_binary_form(const forms::QuadForm& form, long long t_bound) {
    if (form.dim() != 2)
        throw FormError(FormErrorKind::DimensionMismatch,
                        "check_binary_form requires a 2-dimensional form");
    BinaryFormReport report;
    report.t_bound = t_bound;
    // f(t) = Q(t,1): integral coefficients since the B-diagonal is integral.
    report.poly = QuadPoly{form.twice_gram(0, 0) / 2, form.twice_gram(0, 1),
                           form.twice_gram(1, 1) / 2};

    report.premise_holds = true;
    for (long long t = -t_bound; t <= t_bound && report.premise_holds; ++t) {
        for (auto value : {forms::evaluate(form, {t, 1}), forms::evaluate(form, {1, t})}) {
            if (!sos::is_sum_of_d_squares(value, 2)) {
                report.premise_holds = false;
                report.failure_t = t;
                report.failure_value = value;
                break;
            }
        }
    }

    report.det_b = forms::determinant(form);
    report.det_root = forms::integer_square_root(report.det_b);
    report.decompositions = find_linear_sos(report.poly);
    return report;
}

std::optional<IntMatrix2> gram_equivalent(const IntMatrix2& m, const PythagoreanTriple& rot,
                                          const SignedPerm& perm) {
    if (rot.r <= 0 || rot.p * rot.p + rot.q * rot.q != rot.r * rot.r)
        throw FormError(FormErrorKind::PremiseViolated,
                        "gram_equivalent requires p^2 + q^2 = r^2 with r > 0");
    // r * (R * m) for R = (p/r, -q/r; q/r, p/r).
    long long na = rot.p * m.a - rot.q * m.b;
    long long nb = rot.q * m.a + rot.p * m.b;
    long long nc = rot.p * m.c - rot.q * m.d;
    long long nd = rot.q * m.c + rot.p * m.d;
    if (na % rot.r || nb % rot.r || nc % rot.r || nd % rot.r) return std::nullopt;
    IntMatrix2 out{na / rot.r, nb / rot.r, nc / rot.r, nd / rot.r};
    if (perm.swap_rows) {
        std::swap(out.a, out.b);
        std::swap(out.c, out.d);
    }
    if (perm.negate_first) { out.a = -out.a; out.c = -out.c; }
    if (perm.negate_second) { out.b = -out.b; out.d = -out.d; }
    return out;
}

}  // namespace steinhaus::planar
