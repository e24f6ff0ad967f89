#pragma once

#include <span>
#include <vector>

#include "sullivan/linalg.hpp"
#include "sullivan/model.hpp"

namespace sullivan {

struct CohomologySlice {
    int degree = 0;
    int dim_cocycles = 0;
    int dim_coboundaries = 0;
    int betti = 0;
    // Cocycles completing the coboundary space, earliest-first against the
    // canonical monomial basis; exactly betti many.
    std::vector<Element> representatives;
};

struct CohomologyReport {
    std::vector<CohomologySlice> slices;  // degrees 0..window
    int window = 0;
    long chi_c = 0;
    int fd_observed = 0;
    long total_dim = 0;
    long even_dim = 0;
    long odd_dim = 0;
    bool duality_ok = false;
    int fd_predicted = 0;
    // True when the window extends past fd_predicted and every Betti number
    // strictly above it vanishes. Evidence, not a proof of ellipticity.
    bool ellipticity_evidence = false;

    const CohomologySlice& slice(int k) const;
};

CohomologySlice cohomology_slice(const Model& m, int k,
                                 linalg::Exec exec = linalg::Exec::Serial);

// All slices 0..up_to plus the aggregate invariants. Slices are independent
// and may be computed in parallel; assembly order is fixed.
CohomologyReport betti_table(const Model& m, int up_to,
                             linalg::Exec exec = linalg::Exec::Parallel);

// Coordinates of a cocycle's class in the representative basis of its
// degree. Throws if the element is not a homogeneous cocycle or its degree
// exceeds the window.
std::vector<Rat> class_coordinates(const Model& m, const CohomologyReport& report,
                                   const Element& cocycle);

// Cup product on classes: coordinates at degree j and k to coordinates at
// degree j+k.
std::vector<Rat> cup_class(const Model& m, const CohomologyReport& report,
                           int deg_a, std::span<const Rat> coords_a,
                           int deg_b, std::span<const Rat> coords_b);

struct LefschetzResult {
    bool pass = false;
    int first_failing_k = -1;
};

// Verifies that cup with w^k maps H^(half_dim-k) isomorphically onto
// H^(half_dim+k) for k = 0..half_dim. Requires fd_observed == 2*half_dim.
LefschetzResult lefschetz_check(const Model& m, const CohomologyReport& report,
                                const Element& w, int half_dim);

// Betti profile of a cosymplectic space: b_k = b_(2n+1-k) and
// b_0 <= b_1 <= ... <= b_n. Expects exactly 2n+2 entries.
bool cosymplectic_profile(std::span<const long> betti, int n);

}  // namespace sullivan
