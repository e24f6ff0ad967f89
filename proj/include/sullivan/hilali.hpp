#pragma once

#include <optional>
#include <string>
#include <vector>

#include "sullivan/cohomology.hpp"
#include "sullivan/model.hpp"

namespace sullivan {

enum class Verdict { Pass, Fail, Unknown, NotApplicable };
const char* to_string(Verdict v);

struct TheoremResult {
    std::string tag;
    Verdict verdict = Verdict::NotApplicable;
    std::string note;
};

struct HilaliVerdict {
    std::string model_name;
    int dim_v = 0;
    long dim_h = 0;
    bool holds = false;
    long margin = 0;
    ModelInvariants invariants;
    Classification classification;
    std::vector<TheoremResult> theorems;
    bool ellipticity_evidence = false;
};

// Full conjecture check: dim V against the total cohomology dimension over
// the window (default: fd_predicted plus the largest generator degree),
// with every applicable sufficient-condition predicate attached.
HilaliVerdict check_hilali(const Model& m, std::optional<int> window = std::nullopt);
HilaliVerdict check_hilali(const Model& m, const CohomologyReport& report);

// P(n,p) = n^2 - n - 3p + 4 and the case split it supports: p = 0 (pure),
// p = 1 (always), p >= 2 needs (2n-1)^2 >= 12p - 15.
struct TrinomialResult {
    long value = 0;
    bool satisfied = false;
    struct A1Case {
        bool applicable = false;  // p in {0, 1, 2}
        bool passes = false;
        std::string branch;
    } a1;
};
TrinomialResult trinomial_condition(long n, long p);

// One stage of the connecting-map tower of an odd-generated model:
// delta_i multiplies the cohomology of the first i-1 generators by the
// class of d(y_i).
struct OddTowerStage {
    int stage = 0;  // 1-based
    Element alpha;  // cocycle d(y_i) over the prefix algebra
    std::vector<Rat> alpha_coords;
    int ker_dim = 0;
    int im_dim = 0;
    bool condition_ok = false;   // ker > im
    bool c1_factorable = false;  // alpha = g1*g2 with g1^2 = 0 found
};

struct OddTowerResult {
    std::vector<OddTowerStage> stages;
    bool all_ok = false;
};

OddTowerResult odd_tower_check(const Model& m);

struct TowerIdentity {
    long dim_h_total = 0;
    long twice_ker = 0;
    bool equal = false;
};

// dim H of the first `stage` generators against twice the kernel dimension
// of the top connecting map.
TowerIdentity tower_dimension_identity(const Model& m, int stage);

struct ToralRankInterval {
    int lower = 0;
    int upper = 0;
    bool exact = false;
};

struct ToralRankResult {
    ToralRankInterval interval;
    Verdict codim_le_6 = Verdict::Unknown;  // fd - rk0 <= 6 over the interval
    std::optional<Int> dim_h_lower_claim;   // 2^rk0 when the rank is exact
};

ToralRankResult toral_rank_interval(const Model& m);

struct NotACocycle : std::invalid_argument {
    NotACocycle(size_t index, const std::string& what)
        : std::invalid_argument(what), element_index(index) {}
    size_t element_index;
};

// Rank of the span of the classes of the given cocycles, degree by degree.
long independent_in_cohomology(const Model& m, const std::vector<Element>& elements);

}  // namespace sullivan
