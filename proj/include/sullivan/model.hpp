#pragma once

#include <string>
#include <vector>

#include "sullivan/algebra.hpp"

namespace sullivan {

// A free graded-commutative algebra with a degree +1 differential given on
// generators. Generators must be listed in triangular order: d(g_i) may
// only involve g_0..g_{i-1}.
class Model {
public:
    Model(Algebra alg, std::vector<Element> differentials, std::string name = "");

    const Algebra& algebra() const { return alg_; }
    const std::string& name() const { return name_; }
    const Element& differential(size_t i) const;
    const std::vector<Element>& differentials() const { return diffs_; }
    size_t generator_count() const { return alg_.size(); }

private:
    Algebra alg_;
    std::vector<Element> diffs_;
    std::string name_;
};

struct Violation {
    enum class Kind { Degree, Minimality, Triangularity, DSquared };
    Kind kind;
    int generator;  // index of the offending generator
    std::string message;
};

struct ValidationReport {
    std::vector<Violation> violations;
    bool ok() const { return violations.empty(); }
};

// Collects every violation rather than failing on the first: degree
// homogeneity (|g|+1), word length >= 2, triangularity, and d(d(g)) = 0.
ValidationReport validate_model(const Model& m);

// Derivation extension of d to arbitrary elements (Leibniz rule with the
// Koszul sign of the skipped prefix).
Element apply_differential(const Model& m, const Element& e);

struct Classification {
    bool minimal = false;
    bool pure = false;
    bool hyperelliptic = false;
    bool odd_generated = false;
};

// pure: d vanishes on even generators and d(odd) lies in the even
// subalgebra. hyperelliptic: d vanishes on even generators and every
// monomial of d(odd) has a positive even part.
Classification classify_model(const Model& m);

struct ModelInvariants {
    int n = 0;           // number of even generators
    int p = 0;           // odd count minus even count
    int chi_pi = 0;      // even count minus odd count
    int dim_v = 0;
    int dim_v_even = 0;
    int dim_v_odd = 0;
    int fd_predicted = 0;  // sum |y| - sum (|x|-1)
    bool degree_bounds_ok = false;  // the elliptic degree inequalities
};

ModelInvariants model_invariants(const Model& m);

}  // namespace sullivan
