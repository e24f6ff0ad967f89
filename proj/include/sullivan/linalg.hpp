#pragma once

#include <optional>
#include <vector>

#include "sullivan/rational.hpp"

namespace sullivan::linalg {

// Every routine is exact; Parallel only changes how row updates are
// scheduled, never the resulting entries.
enum class Exec { Serial, Parallel };

struct MatQ {
    int rows = 0;
    int cols = 0;
    std::vector<Rat> a;  // row-major

    MatQ() = default;
    MatQ(int r, int c) : rows(r), cols(c), a(static_cast<size_t>(r) * c, Rat(0)) {}
    Rat& at(int r, int c) { return a[static_cast<size_t>(r) * cols + c]; }
    const Rat& at(int r, int c) const { return a[static_cast<size_t>(r) * cols + c]; }
};

struct MatZ {
    int rows = 0;
    int cols = 0;
    std::vector<Int> a;

    MatZ() = default;
    MatZ(int r, int c) : rows(r), cols(c), a(static_cast<size_t>(r) * c, Int(0)) {}
    Int& at(int r, int c) { return a[static_cast<size_t>(r) * cols + c]; }
    const Int& at(int r, int c) const { return a[static_cast<size_t>(r) * cols + c]; }
};

// Row-wise denominator clearing; preserves both rank and kernel.
MatZ clear_denominators(const MatQ& m);

// Fraction-free (Bareiss) row echelon form with column pivoting. Entries of
// the echelon form are minors of the input, so all divisions are exact.
struct EchelonZ {
    MatZ m;
    std::vector<int> pivot_cols;  // pivot of row k sits at pivot_cols[k]
    int rank = 0;
};
EchelonZ bareiss_echelon(MatZ m, Exec exec = Exec::Serial);

int rank(const MatQ& m, Exec exec = Exec::Serial);

// Nullspace basis, one primitive integer vector per free column, in
// ascending free-column order.
std::vector<std::vector<Rat>> kernel_basis(const MatQ& m, Exec exec = Exec::Serial);

// Any exact solution of A x = b (free variables set to 0), or nullopt when
// the system is inconsistent.
std::optional<std::vector<Rat>> solve(const MatQ& A, const std::vector<Rat>& b);

// Incremental independence tracker: feeds vectors one at a time and reports
// whether each one enlarged the span.
class RankAccumulator {
public:
    explicit RankAccumulator(int dim) : dim_(dim) {}
    bool add(std::vector<Rat> v);
    int rank() const { return static_cast<int>(rows_.size()); }
    int dim() const { return dim_; }

private:
    int dim_;
    std::vector<std::pair<int, std::vector<Rat>>> rows_;  // (pivot, pivot-normalized row)
};

}  // namespace sullivan::linalg
