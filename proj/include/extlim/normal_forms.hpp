#pragma once
#include <optional>
#include <vector>

#include "extlim/int_matrix.hpp"

namespace extlim {

/// Canonical basis of a sublattice of Z^N. Columns are in column-style
/// Hermite normal form: pivot rows strictly increase left to right, each
/// pivot (the topmost nonzero entry of its column) is positive, and every
/// other entry in a pivot row is reduced into [0, pivot). Two matrices span
/// the same column lattice iff their Hermite bases are identical.
struct HermiteBasis {
    IntMatrix basis;

    std::size_t ambient_rank() const { return basis.rows(); }
    std::size_t rank() const { return basis.cols(); }
};

/// D = U * M * V with U, V unimodular and D diagonal, diagonal entries
/// nonnegative and each dividing the next.
struct SmithDecomposition {
    IntMatrix U;
    IntMatrix D;
    IntMatrix V;

    std::size_t diagonal_length() const;
    Int diagonal(std::size_t i) const { return D(i, i); }
    std::size_t rank() const;
};

/// Column echelonization M * T = E with T unimodular; pivot_rows lists the
/// pivot row of each of the rank(M) leading columns of E, and the trailing
/// columns of E are zero.
struct ColumnEchelon {
    IntMatrix echelon;
    IntMatrix transform;
    std::vector<std::size_t> pivot_rows;

    std::size_t rank() const { return pivot_rows.size(); }
};

ColumnEchelon column_echelon(const IntMatrix& m);

HermiteBasis hnf(const IntMatrix& m);
SmithDecomposition snf(const IntMatrix& m);

/// Basis of { x : M x = 0 }, canonical.
HermiteBasis kernel_basis(const IntMatrix& m);

/// Canonical particular solution of M x = b over Z via Hermite
/// back-substitution, or nullopt when none exists.
std::optional<std::vector<Int>> solve(const IntMatrix& m, const std::vector<Int>& b);

/// Canonical basis of colspan(m1) ∩ colspan(m2); requires equal row counts.
HermiteBasis image_intersection(const IntMatrix& m1, const IntMatrix& m2);

/// Reusable solver: echelonizes once, then answers M x = b queries by
/// back-substitution.
class EchelonSolver {
  public:
    explicit EchelonSolver(const IntMatrix& m) : rows_(m.rows()), e_(column_echelon(m)) {}
    std::optional<std::vector<Int>> solve(const std::vector<Int>& b) const;

  private:
    std::size_t rows_;
    ColumnEchelon e_;
};

/// Back-substitution against a matrix already in Hermite form (independent
/// echelon columns); coordinates are unique when they exist.
std::optional<std::vector<Int>> solve_hermite(const IntMatrix& hermite, const std::vector<Int>& b);

bool in_column_span(const IntMatrix& m, const std::vector<Int>& v);
bool lattice_equal(const IntMatrix& a, const IntMatrix& b);
/// colspan(a) ⊆ colspan(b)
bool lattice_contained(const IntMatrix& a, const IntMatrix& b);

/// Reduce v modulo colspan(basis of a Hermite basis); unique representative
/// with the pivot-row coordinates in [0, pivot).
std::vector<Int> reduce_mod_lattice(const HermiteBasis& h, std::vector<Int> v);

/// Integer inverse of a unimodular matrix.
IntMatrix unimodular_inverse(const IntMatrix& u);

}  // namespace extlim
