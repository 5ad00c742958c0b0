#include "steinhaus/search.hpp"

#include <algorithm>
#include <mutex>
#include <stdexcept>
#include <thread>

namespace steinhaus::search {
namespace {

constexpr long long kQuickRejectRadius = 5;

struct Triple {
    long long a, b, c;
};

std::optional<CandidateRecord> try_candidate(const Triple& t, long long box_radius) {
    auto form = forms::diagonal_form({t.a, t.b, t.c});
    // Cheap prepass: most failing forms hit an obstructed value near the
    // origin.
    if (box_radius > kQuickRejectRadius) {
        auto quick = qualify::check_form_range(form, kQuickRejectRadius);
        if (std::holds_alternative<qualify::ValueCounterexample>(quick)) return std::nullopt;
    }
    auto verdict = qualify::check_form_range(form, box_radius);
    auto* q = std::get_if<qualify::Qualifies>(&verdict);
    if (!q) return std::nullopt;
    bool proven = (t.a == 2 && t.b == 6 && t.c == 11);
    return CandidateRecord{t.a, t.b, t.c, *q, box_radius, proven};
}

}  // namespace

std::vector<CandidateRecord> search_diagonal_ternary(long long max_coeff,
                                                     long long box_radius, int jobs) {
    if (max_coeff < 1) throw std::invalid_argument("max_coeff must be >= 1");
    if (box_radius < 1) throw std::invalid_argument("box_radius must be >= 1");

    std::vector<Triple> triples;
    for (long long a = 1; a <= max_coeff; ++a)
        for (long long b = a; b <= max_coeff; ++b)
            for (long long c = b; c <= max_coeff; ++c)
                if (!sos::exact_sqrt(a * b * c)) triples.push_back({a, b, c});

    std::vector<std::optional<CandidateRecord>> slots(triples.size());
    jobs = std::max(1, jobs);
    if (jobs == 1) {
        for (size_t i = 0; i < triples.size(); ++i)
            slots[i] = try_candidate(triples[i], box_radius);
    } else {
        std::vector<std::thread> workers;
        std::exception_ptr error;
        std::mutex error_mutex;
        for (int w = 0; w < jobs; ++w) {
            workers.emplace_back([&, w]() {
                try {
                    for (size_t i = w; i < triples.size(); i += jobs)
                        slots[i] = try_candidate(triples[i], box_radius);
                } catch (...) {
                    std::lock_guard lock(error_mutex);
                    if (!error) error = std::current_exception();
                }
            });
        }
        for (auto& t : workers) t.join();
        if (error) std::rethrow_exception(error);
    }

    std::vector<CandidateRecord> out;
    for (const auto& slot : slots)
        if (slot) out.push_back(*slot);
    // Already sorted: the triple enumeration is lexicographic.
    return out;
}

}  // namespace steinhaus::search
