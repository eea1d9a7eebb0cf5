#include "extlim/koszul.hpp"

#include "extlim/error.hpp"
#include "extlim/poly_functors.hpp"

namespace extlim {

namespace {

/// κ_{k}: Λ^k(H) ⊗ SP^{n-k}(F) → Λ^{k-1}(H) ⊗ SP^{n-k+1}(F)
/// p_1∧…∧p_k ⊗ q ↦ Σ_i (-1)^{k-i} p_1∧…∧p̂_i∧…∧p_k ⊗ f(p_i)·q
IntMatrix sp_differential(const IntMatrix& incl, std::size_t n, std::size_t k) {
    const std::size_t h = incl.cols(), N = incl.rows();
    BasisIndexer lam_src(FunctorKind::Ext, h, k);
    BasisIndexer sp_src(FunctorKind::Sym, N, n - k);
    BasisIndexer lam_dst(FunctorKind::Ext, h, k - 1);
    BasisIndexer sp_dst(FunctorKind::Sym, N, n - k + 1);
    IntMatrix d(lam_dst.size() * sp_dst.size(), lam_src.size() * sp_src.size());
    for (std::size_t ls = 0; ls < lam_src.size(); ++ls) {
        const auto& wedge = lam_src.tuple(ls);
        for (std::size_t i = 0; i < k; ++i) {
            Int sign = ((k - 1 - i) % 2 == 0) ? 1 : -1;
            std::vector<unsigned> reduced;
            for (std::size_t l = 0; l < k; ++l)
                if (l != i) reduced.push_back(wedge[l]);
            std::size_t lrow = lam_dst.position(reduced);
            for (std::size_t ss = 0; ss < sp_src.size(); ++ss) {
                std::vector<unsigned> expo = sp_src.tuple(ss);
                std::size_t col = ls * sp_src.size() + ss;
                for (std::size_t m = 0; m < N; ++m) {
                    if (incl(m, wedge[i]) == 0) continue;
                    ++expo[m];
                    std::size_t row = lrow * sp_dst.size() + sp_dst.position(expo);
                    --expo[m];
                    d(row, col) += sign * incl(m, wedge[i]);
                }
            }
        }
    }
    return d;
}

/// κ^{k}: Γ_k(H) ⊗ Λ^{n-k}(F) → Γ_{k-1}(H) ⊗ Λ^{n-k+1}(F)
/// γ-monomial ⊗ ω ↦ Σ_j (exponent of p_j lowered) ⊗ f(p_j) ∧ ω
IntMatrix lambda_differential(const IntMatrix& incl, std::size_t n, std::size_t k) {
    const std::size_t h = incl.cols(), N = incl.rows();
    BasisIndexer gam_src(FunctorKind::Gamma, h, k);
    BasisIndexer ext_src(FunctorKind::Ext, N, n - k);
    BasisIndexer gam_dst(FunctorKind::Gamma, h, k - 1);
    BasisIndexer ext_dst(FunctorKind::Ext, N, n - k + 1);
    IntMatrix d(gam_dst.size() * ext_dst.size(), gam_src.size() * ext_src.size());
    for (std::size_t gs = 0; gs < gam_src.size(); ++gs) {
        std::vector<unsigned> expo = gam_src.tuple(gs);
        for (std::size_t j = 0; j < h; ++j) {
            if (expo[j] == 0) continue;
            --expo[j];
            std::size_t grow = gam_dst.position(expo);
            ++expo[j];
            for (std::size_t es = 0; es < ext_src.size(); ++es) {
                const auto& wedge = ext_src.tuple(es);
                std::size_t col = gs * ext_src.size() + es;
                for (std::size_t m = 0; m < N; ++m) {
                    if (incl(m, j) == 0) continue;
                    // wedge f(p_j)'s m-th component on the left of the sorted wedge
                    bool repeated = false;
                    std::size_t before = 0;
                    for (unsigned w : wedge) {
                        if (w == m) { repeated = true; break; }
                        if (w < m) ++before;
                    }
                    if (repeated) continue;
                    std::vector<unsigned> extended = wedge;
                    extended.insert(extended.begin() + before, static_cast<unsigned>(m));
                    Int sign = (before % 2 == 0) ? 1 : -1;
                    std::size_t row = grow * ext_dst.size() + ext_dst.position(extended);
                    d(row, col) += sign * incl(m, j);
                }
            }
        }
    }
    return d;
}

ChainComplexZ build_koszul(const IntMatrix& incl, std::size_t n, bool sp_side) {
    const std::size_t h = incl.cols(), N = incl.rows();
    std::vector<std::size_t> ranks(n + 1);
    for (std::size_t k = 0; k <= n; ++k) {
        if (sp_side)
            ranks[k] = BasisIndexer(FunctorKind::Ext, h, k).size() *
                       BasisIndexer(FunctorKind::Sym, N, n - k).size();
        else
            ranks[k] = BasisIndexer(FunctorKind::Gamma, h, k).size() *
                       BasisIndexer(FunctorKind::Ext, N, n - k).size();
    }
    std::vector<IntMatrix> diffs;
    for (std::size_t k = 1; k <= n; ++k)
        diffs.push_back(sp_side ? sp_differential(incl, n, k)
                                : lambda_differential(incl, n, k));
    return ChainComplexZ(std::move(ranks), std::move(diffs));
}

}  // namespace

ChainComplexZ koszul_sp(const FreePresentation& p, std::size_t n) {
    if (n < 1) throw InputError("koszul_sp: n must be at least 1");
    return build_koszul(p.inclusion(), n, true);
}

ChainComplexZ koszul_lambda(const FreePresentation& p, std::size_t n) {
    if (n < 1) throw InputError("koszul_lambda: n must be at least 1");
    return build_koszul(p.inclusion(), n, false);
}

FgAbGroup derived_sp(const FreePresentation& p, std::size_t n, std::size_t i) {
    if (i > n) throw InputError("derived_sp: degree out of range");
    return homology_at(koszul_sp(p, n), i);
}

FgAbGroup derived_lambda(const FreePresentation& p, std::size_t n, std::size_t i) {
    if (i > n) throw InputError("derived_lambda: degree out of range");
    return homology_at(koszul_lambda(p, n), i);
}

namespace {

/// Kernel of (functor^n(F)/functor^n(H)) → (functor^{n-1}(F)/functor^{n-1}(H)) ⊗ F
/// where the map is the f = id Koszul differential on the middle row.
KernelRealization kernel_realization(const FreePresentation& p, std::size_t n, bool sp_side) {
    const std::size_t N = p.ambient_rank();
    FunctorKind kind = sp_side ? FunctorKind::Ext : FunctorKind::Gamma;
    IntMatrix rel_top = kind_map(kind, p.inclusion(), n);
    IntMatrix rel_next = kind_map(kind, p.inclusion(), n - 1);
    FgAbGroup top(rel_top.rows(), rel_top);
    FgAbGroup next(rel_next.rows() * N, kronecker(rel_next, IntMatrix::identity(N)));
    IntMatrix mid = sp_side ? sp_differential(IntMatrix::identity(N), n, n)
                            : lambda_differential(IntMatrix::identity(N), n, n);
    if (sp_side) {
        // reindex the SP^1(F) minor factor from exponent-lex order to the
        // natural order of the F basis used by the kron-presented target
        BasisIndexer sp1(FunctorKind::Sym, N, 1);
        IntMatrix perm(mid.rows(), mid.rows());
        for (std::size_t l = 0; l * N < mid.rows(); ++l)
            for (std::size_t s = 0; s < N; ++s) {
                const auto& e = sp1.tuple(s);
                std::size_t m = 0;
                while (e[m] == 0) ++m;
                perm(l * N + m, l * N + s) = 1;
            }
        mid = perm * mid;
    }
    AbHom descent(top, next, mid);
    Subgroup k = kernel(descent);
    return KernelRealization{k.group, k.inclusion};
}

}  // namespace

KernelRealization top_derived_sp_via_kernel(const FreePresentation& p, std::size_t n) {
    if (n < 2) throw InputError("top_derived_sp_via_kernel: n must be at least 2");
    return kernel_realization(p, n, true);
}

KernelRealization top_derived_lambda_via_kernel(const FreePresentation& p, std::size_t n) {
    if (n < 2) throw InputError("top_derived_lambda_via_kernel: n must be at least 2");
    return kernel_realization(p, n, false);
}

}  // namespace extlim
