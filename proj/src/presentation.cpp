#include "extlim/presentation.hpp"

#include "extlim/error.hpp"

namespace extlim {

FreePresentation::FreePresentation(std::size_t ambient_rank, IntMatrix inclusion,
                                   FgAbGroup base, IntMatrix projection)
    : ambient_(ambient_rank),
      inclusion_(hnf(inclusion).basis),
      base_(std::move(base)),
      projection_(std::move(projection)) {
    if (inclusion_.rows() != ambient_)
        throw InputError("presentation: inclusion must live in Z^N");
    if (projection_.rows() != base_.generators() || projection_.cols() != ambient_)
        throw InputError("presentation: projection shape mismatch");
    // H must be exactly the kernel of F ↠ A
    const IntMatrix& rel = base_.relation_basis().basis;
    HermiteBasis pairs = kernel_basis(hstack(projection_, -rel));
    IntMatrix proj_kernel = hnf(pairs.basis.first_rows(ambient_)).basis;
    if (proj_kernel != inclusion_)
        throw InputError("presentation: inclusion is not the kernel of the projection");
}

}  // namespace extlim
