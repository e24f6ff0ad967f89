#include "sullivan/fh_enum.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

namespace sullivan {

bool degree_sequence_less(const DegreeSequence& a, const DegreeSequence& b) {
    if (a.even_degrees.size() != b.even_degrees.size())
        return a.even_degrees.size() < b.even_degrees.size();
    if (a.even_degrees != b.even_degrees) return a.even_degrees < b.even_degrees;
    return a.odd_degrees < b.odd_degrees;
}

static bool ascending(const std::vector<int>& v) {
    return std::is_sorted(v.begin(), v.end());
}

bool satisfies_degree_constraints(const DegreeSequence& s) {
    if (!ascending(s.even_degrees) || !ascending(s.odd_degrees)) return false;
    for (int d : s.even_degrees)
        if (d < 2 || d % 2 != 0) return false;
    for (int d : s.odd_degrees)
        if (d < 3 || d % 2 == 0) return false;
    const size_t n = s.even_degrees.size();
    if (s.odd_degrees.size() < n) return false;
    const size_t p = s.odd_degrees.size() - n;
    long sum_even = std::accumulate(s.even_degrees.begin(), s.even_degrees.end(), 0L);
    long sum_odd = std::accumulate(s.odd_degrees.begin(), s.odd_degrees.end(), 0L);
    if (sum_odd - (sum_even - static_cast<long>(n)) != s.fd) return false;
    if (sum_even > s.fd) return false;
    if (sum_odd > 2L * s.fd - 1) return false;
    for (size_t i = 0; i < n; ++i)
        if (s.odd_degrees[p + i] < 2 * s.even_degrees[i] - 1) return false;
    return true;
}

namespace {

void odd_parts_rec(int remaining, int min_part, int max_part,
                   std::vector<int>& parts, std::vector<std::vector<int>>& out) {
    if (remaining == 0) {
        out.push_back(parts);
        return;
    }
    for (int d = min_part; d <= std::min(remaining, max_part); d += 2) {
        parts.push_back(d);
        odd_parts_rec(remaining - d, d, max_part, parts, out);
        parts.pop_back();
    }
}

void even_parts_rec(int budget, int min_part, std::vector<int>& parts, int fd,
                    std::vector<DegreeSequence>& out) {
    // Current even multiset: derive the forced odd sum and enumerate odds.
    {
        long sum_even = std::accumulate(parts.begin(), parts.end(), 0L);
        long odd_sum = fd + sum_even - static_cast<long>(parts.size());
        if (odd_sum >= 0 && odd_sum <= 2L * fd - 1) {
            std::vector<std::vector<int>> odd_choices;
            if (odd_sum == 0) {
                odd_choices.push_back({});
            } else {
                std::vector<int> scratch;
                odd_parts_rec(static_cast<int>(odd_sum), 3, 2 * fd - 1, scratch, odd_choices);
            }
            for (auto& odds : odd_choices) {
                DegreeSequence s{parts, std::move(odds), fd};
                if (satisfies_degree_constraints(s)) out.push_back(std::move(s));
            }
        }
    }
    for (int d = min_part; d <= budget; d += 2) {
        parts.push_back(d);
        even_parts_rec(budget - d, d, parts, fd, out);
        parts.pop_back();
    }
}

}  // namespace

std::vector<DegreeSequence> enumerate_fh(int fd) {
    if (fd < 2) throw std::invalid_argument("formal dimension must be >= 2");
    std::vector<DegreeSequence> out;
    std::vector<int> evens;
    even_parts_rec(fd, 2, evens, fd, out);
    std::sort(out.begin(), out.end(), degree_sequence_less);
    return out;
}

AuditResult audit_against_reference(int fd, const std::vector<DegreeSequence>& reference) {
    for (const auto& s : reference) {
        if (s.fd != fd)
            throw std::invalid_argument("reference row has fd " + std::to_string(s.fd) +
                                        ", expected " + std::to_string(fd));
        if (!ascending(s.even_degrees) || !ascending(s.odd_degrees))
            throw std::invalid_argument("reference row is not ascending");
        for (int d : s.even_degrees)
            if (d < 2 || d % 2 != 0) throw std::invalid_argument("even part has wrong parity or bound");
        for (int d : s.odd_degrees)
            if (d < 3 || d % 2 == 0) throw std::invalid_argument("odd part has wrong parity or bound");
    }
    std::vector<DegreeSequence> enumerated = enumerate_fh(fd);
    std::vector<DegreeSequence> ref = reference;
    std::sort(ref.begin(), ref.end(), degree_sequence_less);
    ref.erase(std::unique(ref.begin(), ref.end()), ref.end());

    AuditResult r;
    std::set_difference(ref.begin(), ref.end(), enumerated.begin(), enumerated.end(),
                        std::back_inserter(r.missing_from_enumeration), degree_sequence_less);
    std::set_difference(enumerated.begin(), enumerated.end(), ref.begin(), ref.end(),
                        std::back_inserter(r.extra_in_enumeration), degree_sequence_less);
    return r;
}

}  // namespace sullivan
