#pragma once

#include <vector>

#include "steinhaus/qualify.hpp"

namespace steinhaus::search {

struct CandidateRecord {
    long long a, b, c;  // a <= b <= c
    qualify::Qualifies verdict;
    long long box_radius;
    bool proven;  // true only for (2,6,11)
};

/// Enumerates diagonal ternary forms diag(a,b,c), 1 <= a <= b <= c <=
/// max_coeff with abc not a perfect square, and returns those whose half-box
/// scan of the given radius finds no value outside the three-square range.
/// A radius-5 quick-reject scan runs before the full one. Output is sorted
/// lexicographically and identical for any worker count.
std::vector<CandidateRecord> search_diagonal_ternary(long long max_coeff,
                                                     long long box_radius,
                                                     int jobs = 1);

}  // namespace steinhaus::search
