#include "sullivan/algebra.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace sullivan {

Algebra::Algebra() : gens_(std::make_shared<const std::vector<Generator>>()) {}

Algebra::Algebra(std::vector<Generator> gens) {
    std::set<std::string> names;
    for (size_t i = 0; i < gens.size(); ++i) {
        if (gens[i].index != static_cast<int>(i))
            throw std::invalid_argument("generator indices must be contiguous from 0");
        if (gens[i].degree < 1)
            throw std::invalid_argument("generator degree must be >= 1: " + gens[i].name);
        if (!names.insert(gens[i].name).second)
            throw std::invalid_argument("duplicate generator name: " + gens[i].name);
    }
    gens_ = std::make_shared<const std::vector<Generator>>(std::move(gens));
}

Algebra Algebra::of(std::initializer_list<std::pair<const char*, int>> gens) {
    std::vector<Generator> v;
    int i = 0;
    for (const auto& [name, deg] : gens) v.push_back({name, i++, deg});
    return Algebra(std::move(v));
}

const Generator& Algebra::gen(size_t i) const {
    if (i >= gens_->size()) throw std::out_of_range("generator index out of range");
    return (*gens_)[i];
}

int Algebra::find(std::string_view name) const {
    for (const auto& g : *gens_)
        if (g.name == name) return g.index;
    return -1;
}

int Algebra::max_degree() const {
    int m = 0;
    for (const auto& g : *gens_) m = std::max(m, g.degree);
    return m;
}

bool Algebra::same_as(const Algebra& other) const {
    if (gens_ == other.gens_) return true;
    if (gens_->size() != other.gens_->size()) return false;
    for (size_t i = 0; i < gens_->size(); ++i) {
        const Generator& a = (*gens_)[i];
        const Generator& b = (*other.gens_)[i];
        if (a.name != b.name || a.degree != b.degree) return false;
    }
    return true;
}

int Monomial::word_length() const {
    int n = 0;
    for (int e : exps) n += e;
    return n;
}

Monomial make_monomial(const Algebra& alg, std::vector<int> exps) {
    if (exps.size() != alg.size())
        throw std::invalid_argument("exponent vector length does not match generator count");
    Monomial m;
    m.degree = 0;
    for (size_t i = 0; i < exps.size(); ++i) {
        if (exps[i] < 0) throw std::invalid_argument("negative exponent");
        if (alg.gen(i).odd() && exps[i] > 1)
            throw std::invalid_argument("odd generator squared: " + alg.gen(i).name);
        m.degree += exps[i] * alg.gen(i).degree;
    }
    m.exps = std::move(exps);
    return m;
}

bool MonoLess::operator()(const Monomial& a, const Monomial& b) const {
    if (a.degree != b.degree) return a.degree < b.degree;
    // Same degree: earlier-generator-heavy monomials first.
    return std::lexicographical_compare(b.exps.begin(), b.exps.end(),
                                        a.exps.begin(), a.exps.end());
}

SignedMonomial normal_form(const Algebra& alg,
                           std::span<const std::pair<int, int>> factors) {
    std::vector<int> exps(alg.size(), 0);
    std::vector<int> odd_word;  // odd-generator indices in written order
    for (const auto& [idx, exp] : factors) {
        if (idx < 0 || static_cast<size_t>(idx) >= alg.size())
            throw std::out_of_range("unknown generator index in factor list");
        if (exp < 0) throw std::invalid_argument("negative exponent in factor list");
        if (exp == 0) continue;
        if (alg.gen(idx).odd()) {
            if (exp >= 2 || exps[idx] + exp >= 2) return {0, {}};
            for (int r = 0; r < exp; ++r) odd_word.push_back(idx);
        }
        exps[idx] += exp;
    }
    // Inversions among odd factors = transpositions needed to sort the word.
    long inversions = 0;
    for (size_t i = 0; i < odd_word.size(); ++i)
        for (size_t j = i + 1; j < odd_word.size(); ++j)
            if (odd_word[i] > odd_word[j]) ++inversions;
    int sign = (inversions % 2 == 0) ? 1 : -1;
    return {sign, make_monomial(alg, std::move(exps))};
}

Element::Element() = default;

Element::Element(Algebra alg) : alg_(std::move(alg)) {}

Element Element::term(const Algebra& alg, Monomial m, Rat coeff) {
    Element e(alg);
    e.add_term(m, coeff);
    return e;
}

Element Element::generator(const Algebra& alg, int index) {
    std::vector<int> exps(alg.size(), 0);
    exps.at(index) = 1;
    return term(alg, make_monomial(alg, std::move(exps)), Rat(1));
}

Element Element::one(const Algebra& alg) {
    return term(alg, make_monomial(alg, std::vector<int>(alg.size(), 0)), Rat(1));
}

bool Element::homogeneous(int* degree_out) const {
    int deg = terms_.empty() ? 0 : terms_.begin()->first.degree;
    for (const auto& [m, c] : terms_)
        if (m.degree != deg) return false;
    if (degree_out) *degree_out = deg;
    return true;
}

int Element::top_degree() const {
    if (terms_.empty()) return -1;
    return terms_.rbegin()->first.degree;
}

void Element::add_term(const Monomial& m, const Rat& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

static void require_same_algebra(const Element& a, const Element& b) {
    if (!a.algebra().same_as(b.algebra()))
        throw std::invalid_argument("elements live over different generator lists");
}

Element Element::operator-() const { return *this * Rat(-1); }

Element Element::operator+(const Element& o) const {
    return add_scaled(*this, Rat(1), o);
}

Element Element::operator-(const Element& o) const {
    return add_scaled(*this, Rat(-1), o);
}

Element Element::operator*(const Rat& c) const {
    Element out(alg_);
    if (c == 0) return out;
    for (const auto& [m, coeff] : terms_) out.add_term(m, coeff * c);
    return out;
}

Element Element::operator*(const Element& o) const {
    require_same_algebra(*this, o);
    const auto& gens = alg_.generators();
    Element out(alg_);
    for (const auto& [ma, ca] : terms_) {
        for (const auto& [mb, cb] : o.terms_) {
            // Koszul sign of merging two sorted words: each odd factor of mb
            // crosses the odd factors of ma with larger index.
            long crossings = 0;
            bool dead = false;
            std::vector<int> exps(gens.size());
            long odd_above = 0;  // odd factors of ma with index > j, built right to left
            for (int j = static_cast<int>(gens.size()) - 1; j >= 0; --j) {
                exps[j] = ma.exps[j] + mb.exps[j];
                if (gens[j].odd()) {
                    if (exps[j] >= 2) { dead = true; break; }
                    if (mb.exps[j]) crossings += odd_above;
                    if (ma.exps[j]) ++odd_above;
                }
            }
            if (dead) continue;
            Rat c = ca * cb;
            if (crossings % 2 != 0) c = -c;
            Monomial m;
            m.exps = std::move(exps);
            m.degree = ma.degree + mb.degree;
            out.add_term(m, c);
        }
    }
    return out;
}

bool Element::operator==(const Element& o) const {
    return alg_.same_as(o.alg_) && terms_ == o.terms_;
}

Element add_scaled(const Element& a, const Rat& c, const Element& b) {
    require_same_algebra(a, b);
    Element out = a;
    for (const auto& [m, coeff] : b.terms()) out.add_term(m, coeff * c);
    return out;
}

namespace {

void enumerate_rec(const Algebra& alg, size_t i, int remaining,
                   std::vector<int>& exps, std::vector<Monomial>& out) {
    if (i == alg.size()) {
        if (remaining == 0) {
            Monomial m;
            m.exps = exps;
            for (size_t j = 0; j < exps.size(); ++j)
                m.degree += exps[j] * alg.gen(j).degree;
            out.push_back(std::move(m));
        }
        return;
    }
    const Generator& g = alg.gen(i);
    int cap = remaining / g.degree;
    if (g.odd()) cap = std::min(cap, 1);
    // Descending exponent keeps the output in canonical order.
    for (int e = cap; e >= 0; --e) {
        exps[i] = e;
        enumerate_rec(alg, i + 1, remaining - e * g.degree, exps, out);
    }
    exps[i] = 0;
}

}  // namespace

std::vector<Monomial> basis_of_degree(const Algebra& alg, int k) {
    if (k < 0) throw std::invalid_argument("degree must be non-negative");
    std::vector<Monomial> out;
    std::vector<int> exps(alg.size(), 0);
    enumerate_rec(alg, 0, k, exps, out);
    return out;
}

}  // namespace sullivan
