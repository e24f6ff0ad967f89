#pragma once

#include <map>
#include <memory>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "sullivan/rational.hpp"

namespace sullivan {

// A generator of the free graded-commutative algebra. Even degree means a
// polynomial variable, odd degree an exterior one (square zero).
struct Generator {
    std::string name;
    int index = 0;
    int degree = 0;

    bool odd() const { return degree % 2 != 0; }
};

// Immutable ordered generator list, shared by value between models and
// elements so that "same algebra" checks are cheap.
class Algebra {
public:
    Algebra();  // the empty algebra (ground field only)
    explicit Algebra(std::vector<Generator> gens);

    // Convenience: builds generators with contiguous indices from
    // (name, degree) pairs in the given order.
    static Algebra of(std::initializer_list<std::pair<const char*, int>> gens);

    size_t size() const { return gens_->size(); }
    const Generator& gen(size_t i) const;
    const std::vector<Generator>& generators() const { return *gens_; }
    // Index lookup by name; -1 if absent.
    int find(std::string_view name) const;
    int max_degree() const;

    bool same_as(const Algebra& other) const;

private:
    std::shared_ptr<const std::vector<Generator>> gens_;
};

// Exponent vector over the generator list, always in normal form: factors
// implicitly ordered by generator index, reordering signs carried by the
// coefficient of the enclosing element. Total degree is cached.
struct Monomial {
    std::vector<int> exps;
    int degree = 0;

    int word_length() const;
    bool operator==(const Monomial& o) const { return exps == o.exps; }
};

Monomial make_monomial(const Algebra& alg, std::vector<int> exps);

// Canonical term order: by total degree, then lexicographically by exponent
// vector with the earlier generator dominating (x1^2 before x1*x2 before
// x2^2). Serialization and basis enumeration both use this order.
struct MonoLess {
    bool operator()(const Monomial& a, const Monomial& b) const;
};

struct SignedMonomial {
    int sign = 0;  // -1, 0, +1; 0 means the product vanished in the algebra
    Monomial mono;
};

// Sorts a raw factor word into normal form. The sign is (-1)^t where t is
// the number of transpositions of odd factors; any odd generator appearing
// with total exponent >= 2 gives sign 0.
SignedMonomial normal_form(const Algebra& alg,
                           std::span<const std::pair<int, int>> factors);

// Finite Q-linear combination of normal-form monomials. Zero coefficients
// are never stored.
class Element {
public:
    using TermMap = std::map<Monomial, Rat, MonoLess>;

    Element();  // zero over the empty algebra
    explicit Element(Algebra alg);
    static Element zero(const Algebra& alg) { return Element(alg); }
    static Element term(const Algebra& alg, Monomial m, Rat coeff);
    static Element generator(const Algebra& alg, int index);
    static Element one(const Algebra& alg);

    const Algebra& algebra() const { return alg_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    size_t term_count() const { return terms_.size(); }

    // True if every monomial has the same total degree; a zero element is
    // homogeneous of any degree. Reports that degree when requested.
    bool homogeneous(int* degree_out = nullptr) const;
    int top_degree() const;  // -1 for zero

    void add_term(const Monomial& m, const Rat& c);  // accumulates, prunes zeros

    Element operator-() const;
    Element operator+(const Element& o) const;
    Element operator-(const Element& o) const;
    Element operator*(const Element& o) const;
    Element operator*(const Rat& c) const;

    bool operator==(const Element& o) const;

private:
    Algebra alg_;
    TermMap terms_;
};

// a + c*b, pruning cancelled terms.
Element add_scaled(const Element& a, const Rat& c, const Element& b);

// All normal-form monomials of total degree k, in canonical order,
// enumerated by bounded counting over exponent vectors.
std::vector<Monomial> basis_of_degree(const Algebra& alg, int k);

}  // namespace sullivan
