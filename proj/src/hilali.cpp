#include "sullivan/hilali.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

namespace sullivan {

const char* to_string(Verdict v) {
    switch (v) {
        case Verdict::Pass: return "pass";
        case Verdict::Fail: return "fail";
        case Verdict::Unknown: return "unknown";
        case Verdict::NotApplicable: return "n/a";
    }
    return "?";
}

TrinomialResult trinomial_condition(long n, long p) {
    if (n < 0 || p < 0) throw std::invalid_argument("n and p must be non-negative");
    TrinomialResult r;
    r.value = n * n - n - 3 * p + 4;
    if (p == 0) {
        r.satisfied = true;
    } else if (p == 1) {
        r.satisfied = true;
    } else {
        r.satisfied = (2 * n - 1) >= 0 && (2 * n - 1) * (2 * n - 1) >= 12 * p - 15;
    }
    if (p <= 2) {
        r.a1.applicable = true;
        r.a1.passes = true;
        if (p == 0) {
            r.a1.branch = "pure";
        } else if (p == 1) {
            r.a1.branch = "P(n,1) >= 0";
        } else if (n >= 2) {
            r.a1.branch = "P(n,2) >= 0";
        } else {
            r.a1.branch = "dim H >= 2 + 2n";
        }
    }
    return r;
}

namespace {

// Restriction of the model to its first `count` generators. Triangularity
// makes the truncated differentials well-defined.
Model prefix_model(const Model& m, size_t count) {
    const Algebra& alg = m.algebra();
    std::vector<Generator> gens;
    for (size_t i = 0; i < count; ++i) gens.push_back(alg.gen(i));
    Algebra sub(std::move(gens));
    std::vector<Element> diffs;
    for (size_t i = 0; i < count; ++i) {
        Element d(sub);
        for (const auto& [mono, coeff] : m.differential(i).terms()) {
            for (size_t j = count; j < alg.size(); ++j)
                if (mono.exps[j] != 0)
                    throw std::invalid_argument("model is not triangular");
            std::vector<int> exps(mono.exps.begin(), mono.exps.begin() + static_cast<long>(count));
            d.add_term(make_monomial(sub, std::move(exps)), coeff);
        }
        diffs.push_back(std::move(d));
    }
    return Model(std::move(sub), std::move(diffs), m.name());
}

long total_degree_of(const Algebra& alg) {
    long t = 0;
    for (const auto& g : alg.generators()) t += g.degree;
    return t;
}

// Representative basis of the full cohomology of a finite odd-generated
// algebra, with the coordinate offset of each degree block.
struct TotalCohomology {
    CohomologyReport report;
    std::vector<std::pair<int, int>> classes;  // (degree, index within slice)
    std::vector<int> offset_of_degree;
    int total = 0;

    std::vector<Rat> class_vector(const Model& m, const Element& cocycle) const {
        std::vector<Rat> v(static_cast<size_t>(total), Rat(0));
        if (cocycle.is_zero()) return v;
        int deg = 0;
        cocycle.homogeneous(&deg);
        auto coords = class_coordinates(m, report, cocycle);
        int off = offset_of_degree[static_cast<size_t>(deg)];
        for (size_t i = 0; i < coords.size(); ++i) v[static_cast<size_t>(off) + i] = coords[i];
        return v;
    }
};

TotalCohomology total_cohomology(const Model& m) {
    TotalCohomology t;
    int top = static_cast<int>(total_degree_of(m.algebra()));
    t.report = betti_table(m, std::max(1, top));
    t.offset_of_degree.assign(static_cast<size_t>(t.report.window) + 1, 0);
    for (int k = 0; k <= t.report.window; ++k) {
        t.offset_of_degree[static_cast<size_t>(k)] = t.total;
        const auto& s = t.report.slice(k);
        for (int i = 0; i < s.betti; ++i) t.classes.emplace_back(k, i);
        t.total += s.betti;
    }
    return t;
}

bool proportional(const std::vector<Rat>& target, const std::vector<Rat>& v) {
    // target = c * v for some rational c, c != 0
    Rat c(0);
    for (size_t i = 0; i < v.size(); ++i) {
        if (v[i] == 0) {
            if (target[i] != 0) return false;
        } else {
            Rat ci = target[i] / v[i];
            if (c == 0) c = ci;
            else if (ci != c) return false;
        }
    }
    return c != 0;
}

}  // namespace

OddTowerResult odd_tower_check(const Model& m) {
    const Algebra& alg = m.algebra();
    for (const auto& g : alg.generators())
        if (!g.odd()) throw std::invalid_argument("model is not odd-generated: " + g.name);

    OddTowerResult result;
    result.all_ok = true;
    for (size_t i = 1; i <= alg.size(); ++i) {
        Model sub = prefix_model(m, i - 1);
        TotalCohomology prev = total_cohomology(sub);

        OddTowerStage stage;
        stage.stage = static_cast<int>(i);

        // alpha_i = [d(y_i)] lives in the cohomology of the previous stage.
        Element alpha(sub.algebra());
        for (const auto& [mono, coeff] : m.differential(i - 1).terms()) {
            std::vector<int> exps(mono.exps.begin(), mono.exps.begin() + static_cast<long>(i - 1));
            alpha.add_term(make_monomial(sub.algebra(), std::move(exps)), coeff);
        }
        stage.alpha = alpha;
        stage.alpha_coords = prev.class_vector(sub, alpha);

        // Matrix of multiplication by alpha on the whole of H(previous).
        linalg::MatQ delta(prev.total, prev.total);
        for (int c = 0; c < prev.total; ++c) {
            auto [deg, idx] = prev.classes[static_cast<size_t>(c)];
            const Element& rep = prev.report.slice(deg).representatives[static_cast<size_t>(idx)];
            Element img = alpha * rep;
            auto v = prev.class_vector(sub, img);
            for (int r = 0; r < prev.total; ++r) delta.at(r, c) = v[static_cast<size_t>(r)];
        }
        stage.im_dim = linalg::rank(delta);
        stage.ker_dim = prev.total - stage.im_dim;
        stage.condition_ok = stage.ker_dim > stage.im_dim;

        // Corollary witness: alpha = g1*g2 with g1, g2 positive-degree
        // classes and g1^2 = 0, searched over representative pairs up to a
        // scalar.
        int alpha_deg = 0;
        alpha.homogeneous(&alpha_deg);
        bool has_alpha = std::any_of(stage.alpha_coords.begin(), stage.alpha_coords.end(),
                                     [](const Rat& q) { return q != 0; });
        if (has_alpha) {
            for (int d1 = 1; d1 < alpha_deg && !stage.c1_factorable; ++d1) {
                int d2 = alpha_deg - d1;
                if (d2 < 1 || d1 > prev.report.window || d2 > prev.report.window) continue;
                for (const Element& g1 : prev.report.slice(d1).representatives) {
                    if (stage.c1_factorable) break;
                    Element sq = g1 * g1;
                    if (!sq.is_zero()) {
                        auto sq_cls = prev.class_vector(sub, sq);
                        if (std::any_of(sq_cls.begin(), sq_cls.end(),
                                        [](const Rat& q) { return q != 0; }))
                            continue;
                    }
                    for (const Element& g2 : prev.report.slice(d2).representatives) {
                        auto prod = prev.class_vector(sub, g1 * g2);
                        if (proportional(stage.alpha_coords, prod)) {
                            stage.c1_factorable = true;
                            break;
                        }
                    }
                }
            }
        }

        result.all_ok = result.all_ok && stage.condition_ok;
        result.stages.push_back(std::move(stage));
    }
    return result;
}

TowerIdentity tower_dimension_identity(const Model& m, int stage) {
    if (stage < 1 || static_cast<size_t>(stage) > m.algebra().size())
        throw std::invalid_argument("stage out of range");
    OddTowerResult tower = odd_tower_check(prefix_model(m, static_cast<size_t>(stage)));
    TotalCohomology full = total_cohomology(prefix_model(m, static_cast<size_t>(stage)));
    TowerIdentity id;
    id.dim_h_total = full.total;
    id.twice_ker = 2L * tower.stages.back().ker_dim;
    id.equal = id.dim_h_total == id.twice_ker;
    return id;
}

ToralRankResult toral_rank_interval(const Model& m) {
    ModelInvariants inv = model_invariants(m);
    if (inv.p < 0) throw std::invalid_argument("chi_pi must be <= 0");
    Classification cls = classify_model(m);
    ToralRankResult r;
    if (cls.pure) {
        r.interval = {inv.p, inv.p, true};
    } else {
        r.interval = {0, std::max(inv.p - 1, 0), false};
    }
    const int codim_worst = inv.fd_predicted - r.interval.lower;
    const int codim_best = inv.fd_predicted - r.interval.upper;
    if (codim_worst <= 6)
        r.codim_le_6 = Verdict::Pass;
    else if (codim_best > 6)
        r.codim_le_6 = Verdict::Fail;
    else
        r.codim_le_6 = Verdict::Unknown;
    if (r.interval.exact && cls.hyperelliptic) {
        Int claim = 1;
        mpz_mul_2exp(claim.get_mpz_t(), claim.get_mpz_t(), static_cast<mp_bitcnt_t>(r.interval.lower));
        r.dim_h_lower_claim = claim;
    }
    return r;
}

long independent_in_cohomology(const Model& m, const std::vector<Element>& elements) {
    const Algebra& alg = m.algebra();
    std::map<int, std::vector<const Element*>> by_degree;
    for (size_t i = 0; i < elements.size(); ++i) {
        const Element& e = elements[i];
        int deg = 0;
        if (!e.algebra().same_as(alg))
            throw std::invalid_argument("element lives over a different generator list");
        if (!e.homogeneous(&deg))
            throw NotACocycle(i, "element " + std::to_string(i) + " is not homogeneous");
        if (!apply_differential(m, e).is_zero())
            throw NotACocycle(i, "element " + std::to_string(i) + " is not a cocycle");
        if (!e.is_zero()) by_degree[deg].push_back(&e);
    }
    long rank_total = 0;
    for (const auto& [deg, elems] : by_degree) {
        auto basis = basis_of_degree(alg, deg);
        std::map<Monomial, int, MonoLess> idx;
        for (size_t i = 0; i < basis.size(); ++i) idx.emplace(basis[i], static_cast<int>(i));
        linalg::RankAccumulator acc(static_cast<int>(basis.size()));
        if (deg > 0) {
            for (const auto& mono : basis_of_degree(alg, deg - 1)) {
                Element img = apply_differential(m, Element::term(alg, mono, Rat(1)));
                std::vector<Rat> v(basis.size(), Rat(0));
                for (const auto& [mm, cc] : img.terms()) v[static_cast<size_t>(idx.at(mm))] = cc;
                acc.add(std::move(v));
            }
        }
        int added = 0;
        for (const Element* e : elems) {
            std::vector<Rat> v(basis.size(), Rat(0));
            for (const auto& [mm, cc] : e->terms()) v[static_cast<size_t>(idx.at(mm))] = cc;
            if (acc.add(std::move(v))) ++added;
        }
        rank_total += added;
    }
    return rank_total;
}

HilaliVerdict check_hilali(const Model& m, const CohomologyReport& report) {
    HilaliVerdict v;
    v.model_name = m.name();
    v.invariants = model_invariants(m);
    v.classification = classify_model(m);
    v.dim_v = v.invariants.dim_v;
    v.dim_h = report.total_dim;
    v.holds = v.dim_v <= v.dim_h;
    v.margin = v.dim_h - v.dim_v;
    v.ellipticity_evidence = report.ellipticity_evidence;

    const long n = v.invariants.n;
    const long p = v.invariants.p;

    TheoremResult fh{"degree_bounds", v.invariants.degree_bounds_ok ? Verdict::Pass : Verdict::Fail,
                     "elliptic degree inequalities on the generator degrees"};
    v.theorems.push_back(fh);

    {
        bool euler_ok = report.chi_c >= 0 && v.invariants.chi_pi <= 0 &&
                        ((v.invariants.chi_pi < 0) == (report.chi_c == 0));
        if (euler_ok && report.chi_c == 0 && report.total_dim != 2 * report.even_dim)
            euler_ok = false;
        v.theorems.push_back({"euler_characteristics", euler_ok ? Verdict::Pass : Verdict::Fail,
                              "chi_c >= 0, chi_pi <= 0, chi_pi < 0 iff chi_c = 0"});
    }

    if (v.classification.hyperelliptic && p >= 0) {
        TrinomialResult tr = trinomial_condition(n, p);
        v.theorems.push_back({"hyperelliptic_trinomial",
                              tr.satisfied ? Verdict::Pass : Verdict::Fail,
                              "P(n,p) = " + std::to_string(tr.value)});
        v.theorems.push_back({"chi_pi_small",
                              tr.a1.applicable ? Verdict::Pass : Verdict::Fail,
                              tr.a1.applicable ? tr.a1.branch : "chi_pi < -2"});
    } else {
        v.theorems.push_back({"hyperelliptic_trinomial", Verdict::NotApplicable, "not hyperelliptic"});
        v.theorems.push_back({"chi_pi_small", Verdict::NotApplicable, "not hyperelliptic"});
    }

    v.theorems.push_back({"formal_dim_le_10",
                          report.fd_observed <= 10 ? Verdict::Pass : Verdict::Fail,
                          "fd = " + std::to_string(report.fd_observed)});

    if (v.classification.odd_generated) {
        OddTowerResult tower = odd_tower_check(m);
        v.theorems.push_back({"odd_tower", tower.all_ok ? Verdict::Pass : Verdict::Fail,
                              "ker > im at every stage"});
    } else {
        v.theorems.push_back({"odd_tower", Verdict::NotApplicable, "has even generators"});
    }

    if (p >= 0) {
        ToralRankResult toral = toral_rank_interval(m);
        std::string note = "rk0 in [" + std::to_string(toral.interval.lower) + ", " +
                           std::to_string(toral.interval.upper) + "]";
        v.theorems.push_back({"codim_le_6", toral.codim_le_6, note});
    } else {
        v.theorems.push_back({"codim_le_6", Verdict::NotApplicable, "chi_pi > 0"});
    }

    return v;
}

HilaliVerdict check_hilali(const Model& m, std::optional<int> window) {
    ValidationReport vr = validate_model(m);
    if (!vr.ok())
        throw std::invalid_argument("model fails validation: " + vr.violations.front().message);
    ModelInvariants inv = model_invariants(m);
    int w = window.value_or(std::max(1, inv.fd_predicted + m.algebra().max_degree()));
    if (w < 1) throw std::invalid_argument("cohomology window must be positive");
    return check_hilali(m, betti_table(m, w));
}

}  // namespace sullivan
