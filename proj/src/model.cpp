#include "sullivan/model.hpp"

#include <algorithm>
#include <stdexcept>

#include "sullivan/fh_enum.hpp"

namespace sullivan {

Model::Model(Algebra alg, std::vector<Element> differentials, std::string name)
    : alg_(std::move(alg)), diffs_(std::move(differentials)), name_(std::move(name)) {
    if (diffs_.size() != alg_.size())
        throw std::invalid_argument("one differential per generator required");
    for (const auto& d : diffs_)
        if (!d.algebra().same_as(alg_))
            throw std::invalid_argument("differential lives over a different generator list");
}

const Element& Model::differential(size_t i) const {
    if (i >= diffs_.size()) throw std::out_of_range("generator index out of range");
    return diffs_[i];
}

ValidationReport validate_model(const Model& m) {
    ValidationReport report;
    const Algebra& alg = m.algebra();
    for (size_t i = 0; i < alg.size(); ++i) {
        const Generator& g = alg.gen(i);
        const Element& dg = m.differential(i);
        for (const auto& [mono, coeff] : dg.terms()) {
            if (mono.degree != g.degree + 1) {
                report.violations.push_back({Violation::Kind::Degree, g.index,
                                             "d(" + g.name + ") has a term of degree " +
                                                 std::to_string(mono.degree) + ", expected " +
                                                 std::to_string(g.degree + 1)});
                break;
            }
        }
        for (const auto& [mono, coeff] : dg.terms()) {
            if (mono.word_length() < 2) {
                report.violations.push_back({Violation::Kind::Minimality, g.index,
                                             "d(" + g.name + ") has a linear term"});
                break;
            }
        }
        bool triangular = true;
        for (const auto& [mono, coeff] : dg.terms())
            for (size_t j = i; j < alg.size() && triangular; ++j)
                if (mono.exps[j] != 0) triangular = false;
        if (!triangular)
            report.violations.push_back({Violation::Kind::Triangularity, g.index,
                                         "d(" + g.name + ") involves generators of index >= " +
                                             std::to_string(i)});
        if (!apply_differential(m, dg).is_zero())
            report.violations.push_back({Violation::Kind::DSquared, g.index,
                                         "d(d(" + g.name + ")) != 0"});
    }
    return report;
}

Element apply_differential(const Model& m, const Element& e) {
    const Algebra& alg = m.algebra();
    if (!e.algebra().same_as(alg))
        throw std::invalid_argument("element lives over a different generator list");
    Element out(alg);
    for (const auto& [mono, coeff] : e.terms()) {
        int prefix_degree = 0;
        for (size_t j = 0; j < alg.size(); ++j) {
            const int a = mono.exps[j];
            if (a == 0) continue;
            const Generator& g = alg.gen(j);
            const Element& dg = m.differential(j);
            if (!dg.is_zero()) {
                // Split the monomial as prefix * g^a * suffix and replace one
                // g factor by d(g); the crossing of the prefix gives the sign.
                std::vector<int> prefix(alg.size(), 0), rest(alg.size(), 0);
                for (size_t t = 0; t < j; ++t) prefix[t] = mono.exps[t];
                for (size_t t = j; t < alg.size(); ++t) rest[t] = mono.exps[t];
                rest[j] = a - 1;
                Element term = Element::term(alg, make_monomial(alg, std::move(prefix)), Rat(1));
                term = term * dg;
                term = term * Element::term(alg, make_monomial(alg, std::move(rest)), Rat(1));
                Rat c = coeff * Rat(a);
                if (prefix_degree % 2 != 0) c = -c;
                out = add_scaled(out, c, term);
            }
            prefix_degree += a * g.degree;
        }
    }
    return out;
}

Classification classify_model(const Model& m) {
    const Algebra& alg = m.algebra();
    Classification c;
    c.minimal = validate_model(m).ok();
    c.odd_generated = true;
    bool even_closed = true;  // d = 0 on all even generators
    bool odd_into_even = true;  // d(odd) inside the even subalgebra
    bool odd_mixed_ok = true;   // every monomial of d(odd) has a positive even part
    for (size_t i = 0; i < alg.size(); ++i) {
        const Generator& g = alg.gen(i);
        const Element& dg = m.differential(i);
        if (!g.odd()) {
            c.odd_generated = false;
            if (!dg.is_zero()) even_closed = false;
            continue;
        }
        for (const auto& [mono, coeff] : dg.terms()) {
            bool has_even = false, has_odd = false;
            for (size_t j = 0; j < alg.size(); ++j) {
                if (mono.exps[j] == 0) continue;
                (alg.gen(j).odd() ? has_odd : has_even) = true;
            }
            if (has_odd) odd_into_even = false;
            if (!has_even) odd_mixed_ok = false;
        }
    }
    c.pure = even_closed && odd_into_even;
    c.hyperelliptic = even_closed && odd_mixed_ok;
    return c;
}

ModelInvariants model_invariants(const Model& m) {
    const Algebra& alg = m.algebra();
    ModelInvariants inv;
    DegreeSequence seq;
    long odd_sum = 0, even_excess = 0;
    for (const auto& g : alg.generators()) {
        if (g.odd()) {
            ++inv.dim_v_odd;
            odd_sum += g.degree;
            seq.odd_degrees.push_back(g.degree);
        } else {
            ++inv.dim_v_even;
            even_excess += g.degree - 1;
            seq.even_degrees.push_back(g.degree);
        }
    }
    inv.n = inv.dim_v_even;
    inv.dim_v = inv.dim_v_even + inv.dim_v_odd;
    inv.p = inv.dim_v_odd - inv.dim_v_even;
    inv.chi_pi = -inv.p;
    inv.fd_predicted = static_cast<int>(odd_sum - even_excess);
    std::sort(seq.even_degrees.begin(), seq.even_degrees.end());
    std::sort(seq.odd_degrees.begin(), seq.odd_degrees.end());
    seq.fd = inv.fd_predicted;
    inv.degree_bounds_ok = satisfies_degree_constraints(seq);
    return inv;
}

}  // namespace sullivan
