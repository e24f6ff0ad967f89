#include "sullivan/linalg.hpp"

#include <stdexcept>

namespace sullivan::linalg {

MatZ clear_denominators(const MatQ& m) {
    MatZ out(m.rows, m.cols);
    for (int r = 0; r < m.rows; ++r) {
        Int lcm = 1;
        for (int c = 0; c < m.cols; ++c) {
            const Int& den = m.at(r, c).get_den();
            mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), den.get_mpz_t());
        }
        for (int c = 0; c < m.cols; ++c) {
            const Rat& q = m.at(r, c);
            out.at(r, c) = q.get_num() * (lcm / q.get_den());
        }
    }
    return out;
}

EchelonZ bareiss_echelon(MatZ m, Exec exec) {
    EchelonZ e;
    int pr = 0;  // next pivot row
    Int prev = 1;
    for (int c = 0; c < m.cols && pr < m.rows; ++c) {
        int pivot = -1;
        for (int r = pr; r < m.rows; ++r) {
            if (m.at(r, c) != 0) { pivot = r; break; }
        }
        if (pivot < 0) continue;
        if (pivot != pr) {
            for (int j = c; j < m.cols; ++j) std::swap(m.at(pr, j), m.at(pivot, j));
        }
        const bool wide = static_cast<long>(m.rows - pr - 1) * (m.cols - c) > 2048;
        const bool par = exec == Exec::Parallel && wide;
#pragma omp parallel for schedule(static) if (par)
        for (int r = pr + 1; r < m.rows; ++r) {
            for (int j = c + 1; j < m.cols; ++j) {
                Int t = m.at(pr, c) * m.at(r, j) - m.at(r, c) * m.at(pr, j);
                mpz_divexact(m.at(r, j).get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
            }
            m.at(r, c) = 0;
        }
        prev = m.at(pr, c);
        e.pivot_cols.push_back(c);
        ++pr;
    }
    e.rank = pr;
    e.m = std::move(m);
    return e;
}

int rank(const MatQ& m, Exec exec) {
    if (m.rows == 0 || m.cols == 0) return 0;
    return bareiss_echelon(clear_denominators(m), exec).rank;
}

std::vector<std::vector<Rat>> kernel_basis(const MatQ& m, Exec exec) {
    std::vector<std::vector<Rat>> basis;
    if (m.cols == 0) return basis;
    EchelonZ e = bareiss_echelon(clear_denominators(m), exec);
    std::vector<bool> is_pivot(m.cols, false);
    for (int c : e.pivot_cols) is_pivot[c] = true;
    for (int f = 0; f < m.cols; ++f) {
        if (is_pivot[f]) continue;
        std::vector<Rat> v(m.cols, Rat(0));
        v[f] = 1;
        // Back-substitute pivot coordinates from the echelon rows.
        for (int k = e.rank - 1; k >= 0; --k) {
            int p = e.pivot_cols[k];
            if (p > f) continue;
            Rat s(0);
            for (int j = p + 1; j <= f; ++j) {
                if (v[j] != 0 && e.m.at(k, j) != 0) s += Rat(e.m.at(k, j)) * v[j];
            }
            v[p] = -s / Rat(e.m.at(k, p));
        }
        // Primitive integer form: positive at the free coordinate.
        Int lcm = 1;
        for (const Rat& q : v)
            mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), q.get_den().get_mpz_t());
        Int gcd = 0;
        std::vector<Int> w(m.cols);
        for (int j = 0; j < m.cols; ++j) {
            w[j] = v[j].get_num() * (lcm / v[j].get_den());
            mpz_gcd(gcd.get_mpz_t(), gcd.get_mpz_t(), w[j].get_mpz_t());
        }
        if (gcd == 0) gcd = 1;
        for (int j = 0; j < m.cols; ++j) v[j] = Rat(w[j] / gcd);
        basis.push_back(std::move(v));
    }
    return basis;
}

std::optional<std::vector<Rat>> solve(const MatQ& A, const std::vector<Rat>& b) {
    if (static_cast<int>(b.size()) != A.rows)
        throw std::invalid_argument("rhs length does not match row count");
    MatQ m(A.rows, A.cols + 1);
    for (int r = 0; r < A.rows; ++r) {
        for (int c = 0; c < A.cols; ++c) m.at(r, c) = A.at(r, c);
        m.at(r, A.cols) = b[r];
    }
    std::vector<int> pivot_cols;
    int pr = 0;
    for (int c = 0; c < A.cols && pr < m.rows; ++c) {
        int pivot = -1;
        for (int r = pr; r < m.rows; ++r)
            if (m.at(r, c) != 0) { pivot = r; break; }
        if (pivot < 0) continue;
        if (pivot != pr)
            for (int j = c; j <= A.cols; ++j) std::swap(m.at(pr, j), m.at(pivot, j));
        for (int r = pr + 1; r < m.rows; ++r) {
            if (m.at(r, c) == 0) continue;
            Rat f = m.at(r, c) / m.at(pr, c);
            m.at(r, c) = 0;
            for (int j = c + 1; j <= A.cols; ++j) m.at(r, j) -= f * m.at(pr, j);
        }
        pivot_cols.push_back(c);
        ++pr;
    }
    for (int r = pr; r < m.rows; ++r)
        if (m.at(r, A.cols) != 0) return std::nullopt;
    std::vector<Rat> x(A.cols, Rat(0));
    for (int k = pr - 1; k >= 0; --k) {
        int p = pivot_cols[k];
        Rat s = m.at(k, A.cols);
        for (int j = p + 1; j < A.cols; ++j)
            if (x[j] != 0) s -= m.at(k, j) * x[j];
        x[p] = s / m.at(k, p);
    }
    return x;
}

bool RankAccumulator::add(std::vector<Rat> v) {
    if (static_cast<int>(v.size()) != dim_)
        throw std::invalid_argument("vector length does not match accumulator dimension");
    for (const auto& [p, row] : rows_) {
        if (v[p] == 0) continue;
        Rat f = v[p];
        for (int j = 0; j < dim_; ++j)
            if (row[j] != 0) v[j] -= f * row[j];
    }
    int pivot = -1;
    for (int j = 0; j < dim_; ++j)
        if (v[j] != 0) { pivot = j; break; }
    if (pivot < 0) return false;
    Rat inv = v[pivot];
    for (int j = pivot; j < dim_; ++j)
        if (v[j] != 0) v[j] /= inv;
    // Keep stored rows clear of the new pivot so one reduction pass stays
    // sufficient for every later vector.
    for (auto& [p, row] : rows_) {
        if (row[pivot] == 0) continue;
        Rat f = row[pivot];
        for (int j = 0; j < dim_; ++j)
            if (v[j] != 0) row[j] -= f * v[j];
    }
    rows_.emplace_back(pivot, std::move(v));
    return true;
}

}  // namespace sullivan::linalg
