#pragma once
#include "extlim/group.hpp"

namespace extlim {

/// Object of the category of free extensions H ↪ F ↠ A: an ambient free
/// group F = Z^N, the sublattice H given by its Hermite basis, and a fixed
/// projection onto a reference copy of A so that different presentations of
/// the same A can be compared over the identity of A.
class FreePresentation {
  public:
    FreePresentation(std::size_t ambient_rank, IntMatrix inclusion, FgAbGroup base,
                     IntMatrix projection);

    std::size_t ambient_rank() const { return ambient_; }
    /// N × h Hermite basis of H ⊆ Z^N.
    const IntMatrix& inclusion() const { return inclusion_; }
    std::size_t sub_rank() const { return inclusion_.cols(); }
    /// The reference copy of A (canonical invariant-factor presentation).
    const FgAbGroup& base() const { return base_; }
    /// base.generators × N matrix of F ↠ A.
    const IntMatrix& projection() const { return projection_; }
    /// Z^N / H presented on the ambient generators.
    FgAbGroup quotient() const { return FgAbGroup(ambient_, inclusion_); }

    bool same_base(const FreePresentation& other) const {
        return base_.same_presentation(other.base_);
    }

  private:
    std::size_t ambient_;
    IntMatrix inclusion_;
    FgAbGroup base_;
    IntMatrix projection_;
};

}  // namespace extlim
