#include "sullivan/cohomology.hpp"

#include <map>
#include <stdexcept>

namespace sullivan {

namespace {

using linalg::Exec;
using linalg::MatQ;

using MonoIndex = std::map<Monomial, int, MonoLess>;

MonoIndex index_of(const std::vector<Monomial>& basis) {
    MonoIndex idx;
    for (size_t i = 0; i < basis.size(); ++i) idx.emplace(basis[i], static_cast<int>(i));
    return idx;
}

std::vector<Rat> coords_of(const Element& e, const MonoIndex& idx) {
    std::vector<Rat> v(idx.size(), Rat(0));
    for (const auto& [mono, coeff] : e.terms()) {
        auto it = idx.find(mono);
        if (it == idx.end())
            throw std::logic_error("monomial outside the expected graded piece");
        v[it->second] = coeff;
    }
    return v;
}

// Matrix of d from degree k to degree k+1 over the canonical bases;
// column j holds the image of the j-th basis monomial.
struct DifferentialMatrix {
    std::vector<Monomial> domain;
    MonoIndex target_index;
    MatQ mat;
};

DifferentialMatrix differential_matrix(const Model& m, int k) {
    DifferentialMatrix d;
    d.domain = basis_of_degree(m.algebra(), k);
    d.target_index = index_of(basis_of_degree(m.algebra(), k + 1));
    d.mat = MatQ(static_cast<int>(d.target_index.size()), static_cast<int>(d.domain.size()));
    for (size_t j = 0; j < d.domain.size(); ++j) {
        Element img = apply_differential(m, Element::term(m.algebra(), d.domain[j], Rat(1)));
        for (const auto& [mono, coeff] : img.terms()) {
            auto it = d.target_index.find(mono);
            if (it == d.target_index.end())
                throw std::logic_error("differential left the expected graded piece");
            d.mat.at(it->second, static_cast<int>(j)) = coeff;
        }
    }
    return d;
}

Element element_from_coords(const Algebra& alg, const std::vector<Monomial>& basis,
                            std::span<const Rat> v) {
    Element e(alg);
    for (size_t i = 0; i < basis.size(); ++i)
        if (v[i] != 0) e.add_term(basis[i], v[i]);
    return e;
}

std::vector<Rat> column_of(const MatQ& m, int c) {
    std::vector<Rat> v(m.rows);
    for (int r = 0; r < m.rows; ++r) v[r] = m.at(r, c);
    return v;
}

CohomologySlice make_slice(const Model& m, int k, const DifferentialMatrix& into,
                           const DifferentialMatrix& out, Exec exec) {
    CohomologySlice s;
    s.degree = k;
    const int dim_k = static_cast<int>(out.domain.size());
    auto kernel = linalg::kernel_basis(out.mat, exec);
    s.dim_cocycles = static_cast<int>(kernel.size());
    s.dim_coboundaries = (k == 0) ? 0 : linalg::rank(into.mat, exec);
    s.betti = s.dim_cocycles - s.dim_coboundaries;

    linalg::RankAccumulator acc(dim_k);
    if (k > 0)
        for (int c = 0; c < into.mat.cols; ++c) acc.add(column_of(into.mat, c));
    if (acc.rank() != s.dim_coboundaries)
        throw std::logic_error("coboundary rank mismatch between elimination paths");
    for (const auto& v : kernel) {
        if (acc.add(v))
            s.representatives.push_back(element_from_coords(m.algebra(), out.domain, v));
    }
    if (static_cast<int>(s.representatives.size()) != s.betti)
        throw std::logic_error("representative count does not match Betti number");
    return s;
}

}  // namespace

const CohomologySlice& CohomologyReport::slice(int k) const {
    if (k < 0 || k > window) throw std::out_of_range("degree outside the computed window");
    return slices[static_cast<size_t>(k)];
}

CohomologySlice cohomology_slice(const Model& m, int k, Exec exec) {
    if (k < 0) throw std::invalid_argument("degree must be non-negative");
    DifferentialMatrix into;  // d: k-1 -> k
    if (k > 0) into = differential_matrix(m, k - 1);
    DifferentialMatrix out = differential_matrix(m, k);
    return make_slice(m, k, into, out, exec);
}

CohomologyReport betti_table(const Model& m, int up_to, Exec exec) {
    if (up_to < 1) throw std::invalid_argument("cohomology window must be positive");
    CohomologyReport rep;
    rep.window = up_to;
    rep.fd_predicted = model_invariants(m).fd_predicted;
    rep.slices.resize(static_cast<size_t>(up_to) + 1);

    std::vector<DifferentialMatrix> dmat(static_cast<size_t>(up_to) + 1);
#pragma omp parallel for schedule(dynamic) if (exec == Exec::Parallel)
    for (int k = 0; k <= up_to; ++k) dmat[static_cast<size_t>(k)] = differential_matrix(m, k);

#pragma omp parallel for schedule(dynamic) if (exec == Exec::Parallel)
    for (int k = 0; k <= up_to; ++k) {
        const DifferentialMatrix empty;
        const DifferentialMatrix& into = (k == 0) ? empty : dmat[static_cast<size_t>(k - 1)];
        rep.slices[static_cast<size_t>(k)] = make_slice(m, k, into, dmat[static_cast<size_t>(k)], Exec::Serial);
    }

    for (int k = 0; k <= up_to; ++k) {
        const auto& s = rep.slices[static_cast<size_t>(k)];
        rep.total_dim += s.betti;
        if (k % 2 == 0) {
            rep.even_dim += s.betti;
            rep.chi_c += s.betti;
        } else {
            rep.odd_dim += s.betti;
            rep.chi_c -= s.betti;
        }
        if (s.betti > 0) rep.fd_observed = k;
    }
    rep.duality_ok = true;
    for (int k = 0; k <= up_to; ++k) {
        const int b = rep.slices[static_cast<size_t>(k)].betti;
        if (k > rep.fd_observed) {
            if (b != 0) rep.duality_ok = false;
        } else if (b != rep.slices[static_cast<size_t>(rep.fd_observed - k)].betti) {
            rep.duality_ok = false;
        }
    }
    rep.ellipticity_evidence = up_to > rep.fd_predicted && rep.fd_predicted >= 0;
    for (int k = rep.fd_predicted + 1; k <= up_to && rep.ellipticity_evidence; ++k)
        if (rep.slices[static_cast<size_t>(k)].betti != 0) rep.ellipticity_evidence = false;
    return rep;
}

std::vector<Rat> class_coordinates(const Model& m, const CohomologyReport& report,
                                   const Element& cocycle) {
    int deg = 0;
    if (!cocycle.homogeneous(&deg))
        throw std::invalid_argument("class coordinates need a homogeneous element");
    if (cocycle.is_zero()) deg = 0;
    if (deg > report.window)
        throw std::out_of_range("degree exceeds the computed window");
    if (!apply_differential(m, cocycle).is_zero())
        throw std::invalid_argument("element is not a cocycle");

    const CohomologySlice& s = report.slice(deg);
    const int r = s.betti;
    if (cocycle.is_zero()) return std::vector<Rat>(static_cast<size_t>(r), Rat(0));

    auto basis = basis_of_degree(m.algebra(), deg);
    auto idx = index_of(basis);
    const int dim = static_cast<int>(basis.size());

    // Solve [representatives | coboundaries] x = cocycle; the representative
    // block of x is the class.
    std::vector<std::vector<Rat>> cols;
    for (const auto& rep : s.representatives) cols.push_back(coords_of(rep, idx));
    if (deg > 0) {
        DifferentialMatrix into = differential_matrix(m, deg - 1);
        linalg::RankAccumulator acc(dim);
        for (int c = 0; c < into.mat.cols; ++c) {
            auto v = column_of(into.mat, c);
            if (acc.add(v)) cols.push_back(std::move(v));
        }
    }
    MatQ A(dim, static_cast<int>(cols.size()));
    for (int c = 0; c < A.cols; ++c)
        for (int rrow = 0; rrow < dim; ++rrow) A.at(rrow, c) = cols[static_cast<size_t>(c)][static_cast<size_t>(rrow)];
    auto x = linalg::solve(A, coords_of(cocycle, idx));
    if (!x) throw std::logic_error("cocycle does not reduce against the slice basis");
    return std::vector<Rat>(x->begin(), x->begin() + r);
}

std::vector<Rat> cup_class(const Model& m, const CohomologyReport& report,
                           int deg_a, std::span<const Rat> coords_a,
                           int deg_b, std::span<const Rat> coords_b) {
    if (deg_a + deg_b > report.window)
        throw std::out_of_range("cup product degree exceeds the computed window");
    const CohomologySlice& sa = report.slice(deg_a);
    const CohomologySlice& sb = report.slice(deg_b);
    if (coords_a.size() != sa.representatives.size() ||
        coords_b.size() != sb.representatives.size())
        throw std::invalid_argument("class coordinate length does not match Betti number");
    Element a(m.algebra()), b(m.algebra());
    for (size_t i = 0; i < coords_a.size(); ++i)
        a = add_scaled(a, coords_a[i], sa.representatives[i]);
    for (size_t i = 0; i < coords_b.size(); ++i)
        b = add_scaled(b, coords_b[i], sb.representatives[i]);
    Element prod = a * b;
    if (prod.is_zero())
        return std::vector<Rat>(report.slice(deg_a + deg_b).representatives.size(), Rat(0));
    return class_coordinates(m, report, prod);
}

LefschetzResult lefschetz_check(const Model& m, const CohomologyReport& report,
                                const Element& w, int half_dim) {
    if (report.fd_observed % 2 != 0)
        throw std::invalid_argument("observed formal dimension is odd");
    if (report.fd_observed != 2 * half_dim)
        throw std::invalid_argument("half dimension does not match the observed formal dimension");
    int wdeg = 0;
    if (!w.homogeneous(&wdeg) || (!w.is_zero() && wdeg != 2))
        throw std::invalid_argument("w must be a homogeneous class of degree 2");

    Element power = Element::one(m.algebra());
    for (int k = 0; k <= half_dim; ++k) {
        const CohomologySlice& lo = report.slice(half_dim - k);
        const CohomologySlice& hi = report.slice(half_dim + k);
        bool ok = lo.betti == hi.betti;
        if (ok && lo.betti > 0) {
            MatQ map(hi.betti, lo.betti);
            for (int j = 0; j < lo.betti; ++j) {
                Element img = power * lo.representatives[static_cast<size_t>(j)];
                auto cls = img.is_zero()
                               ? std::vector<Rat>(static_cast<size_t>(hi.betti), Rat(0))
                               : class_coordinates(m, report, img);
                for (int i = 0; i < hi.betti; ++i) map.at(i, j) = cls[static_cast<size_t>(i)];
            }
            ok = linalg::rank(map) == lo.betti;
        }
        if (!ok) return {false, k};
        power = power * w;
    }
    return {true, -1};
}

bool cosymplectic_profile(std::span<const long> betti, int n) {
    if (n < 0 || betti.size() != static_cast<size_t>(2 * n + 2))
        throw std::invalid_argument("betti sequence must have length 2n+2");
    for (int k = 0; k <= 2 * n + 1; ++k)
        if (betti[static_cast<size_t>(k)] != betti[static_cast<size_t>(2 * n + 1 - k)]) return false;
    for (int k = 0; k < n; ++k)
        if (betti[static_cast<size_t>(k)] > betti[static_cast<size_t>(k + 1)]) return false;
    return true;
}

}  // namespace sullivan
