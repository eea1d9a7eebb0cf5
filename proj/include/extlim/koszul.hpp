#pragma once
#include "extlim/chain_complex.hpp"
#include "extlim/presentation.hpp"

namespace extlim {

/// Koszul complex with Λ^k(H) ⊗ SP^{n-k}(F) in degree k; its homology gives
/// the derived functors of SP^n. Component bases use product order with the
/// Λ index major and the SP index minor.
ChainComplexZ koszul_sp(const FreePresentation& p, std::size_t n);

/// Koszul complex with Γ_k(H) ⊗ Λ^{n-k}(F) in degree k; its homology gives
/// the derived functors of Λ^n.
ChainComplexZ koszul_lambda(const FreePresentation& p, std::size_t n);

FgAbGroup derived_sp(const FreePresentation& p, std::size_t n, std::size_t i);
FgAbGroup derived_lambda(const FreePresentation& p, std::size_t n, std::size_t i);

struct KernelRealization {
    FgAbGroup group;
    AbHom inclusion;  // into the degree-n quotient term
};

/// L_{n-1}SP^n(A) as the kernel of Λ^n(F)/Λ^n(H) → (Λ^{n-1}(F)/Λ^{n-1}(H)) ⊗ F,
/// the map descending from the f = id Koszul differential.
KernelRealization top_derived_sp_via_kernel(const FreePresentation& p, std::size_t n);

/// L_{n-1}Λ^n(A) as the kernel of Γ_n(F)/Γ_n(H) → (Γ_{n-1}(F)/Γ_{n-1}(H)) ⊗ F.
KernelRealization top_derived_lambda_via_kernel(const FreePresentation& p, std::size_t n);

}  // namespace extlim
