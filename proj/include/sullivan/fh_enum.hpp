#pragma once

#include <vector>

namespace sullivan {

// A candidate generator degree pattern for a given formal dimension:
// ascending multisets of even and odd generator degrees.
struct DegreeSequence {
    std::vector<int> even_degrees;
    std::vector<int> odd_degrees;
    int fd = 0;

    bool operator==(const DegreeSequence& o) const {
        return fd == o.fd && even_degrees == o.even_degrees && odd_degrees == o.odd_degrees;
    }
};

// Canonical listing order: by even-part count, then lexicographically.
bool degree_sequence_less(const DegreeSequence& a, const DegreeSequence& b);

// The elliptic degree constraints for formal dimension fd:
//   evens even >= 2 ascending, odds odd >= 3 ascending,
//   |odd| >= |even|,
//   sum(odd) - sum(even - 1) == fd,
//   sum(even) <= fd,
//   sum(odd) <= 2*fd - 1,
//   the k largest odd degrees dominate: odd[p+i] >= 2*even[i] - 1.
// The last line pairs each even degree with one odd degree; pairing the top
// |even| odd degrees in ascending order is the weakest assignment, so a
// sequence passes iff some assignment works.
bool satisfies_degree_constraints(const DegreeSequence& s);

// Exhaustive, duplicate-free enumeration of every sequence admissible for
// the given formal dimension, in canonical order. Throws for fd < 2.
std::vector<DegreeSequence> enumerate_fh(int fd);

struct AuditResult {
    std::vector<DegreeSequence> missing_from_enumeration;
    std::vector<DegreeSequence> extra_in_enumeration;
};

// Set difference in both directions between enumerate_fh(fd) and a
// reference listing. Malformed reference rows (non-ascending, wrong
// parity, wrong fd) are rejected.
AuditResult audit_against_reference(int fd, const std::vector<DegreeSequence>& reference);

}  // namespace sullivan
