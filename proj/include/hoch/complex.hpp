#pragma once

#include "hoch/word.hpp"
#include "hoch/linalg.hpp"

namespace hoch {

// Hochschild complex of A with coefficients in the bimodule M, normalized.
// Suspended-sign convention (certified by the d^2/B^2/adjointness tests):
//   D(m[a_1..a_n]) = d0 + d1 with Shat_i = |m| + sum_{j<=i}(|a_j|-1),
//   d0 = (d_M m)[a..] - sum_i (-1)^{Shat_{i-1}} m[..d a_i..]
//   d1 = (-1)^{|m|}(m a_1)[a_2..] + sum_i (-1)^{Shat_i} m[..a_i a_{i+1}..]
//        - (-1)^{(|a_n|-1) Shat_{n-1}} (a_n m)[a_1..a_{n-1}]
struct HochschildCtx {
    const DgAlgebra& A;
    const Bimodule& M;

    int sh_mod(int m) const { return M.degree[m]; }
    int sh_let(int l) const { return A.degree[l] - 1; }
};

Chain chain_differential(const HochschildCtx& ctx, const Chain& c);

// Connes operator (M = A only):
// B(a_0[a_1..a_n]) = sum_{i=0..n} (-1)^{L_i R_i} 1[a_{i+1}..a_n, a_0, a_1..a_i]
// with L_i, R_i the suspended block degrees; weight rises by one.
Chain connes_B(const DgAlgebra& a, const Chain& c, int cutoff);

// Cochain differential (raises arity by 1, plus internal part), derived from
// the two-sided bar resolution; adjoint to chain_differential for M = A^vee.
Cochain cochain_differential(const HochschildCtx& ctx, const Cochain& f);

// B^vee(phi) = (-1)^{|phi|} phi o B; lowers arity by one.
Cochain connes_B_dual(const DgAlgebra& a, const Bimodule& dual, const Cochain& f, int cutoff);

// Evaluation pairing C^n(A,A^vee) x C_n(A,A) -> k:
// <f, a_0[lams]> = (-1)^{|a_0|(|f|+1)} f(lams)(a_0), extended bilinearly.
Scalar eval_pairing(const HochschildCtx& dual_ctx, const Cochain& f, const Chain& c);

std::vector<BarWord> enumerate_words(const HochschildCtx& ctx, int total_degree, int cutoff);
std::vector<BarWord> words_of_weight(const HochschildCtx& ctx, int weight);
std::vector<CoWord> cowords_of_arity(const HochschildCtx& ctx, int arity);

// Basis-indexed block of the chain complex plus its homology.
struct ComplexBlock {
    std::vector<BarWord> basis;        // ambient basis (the "middle" block)
    Subquotient sq;
};

SparseVec chain_to_vec(const Chain& c, const std::map<BarWord, int>& index, const Field& f);
Chain vec_to_chain(const SparseVec& v, const std::vector<BarWord>& basis);
SparseVec cochain_to_vec(const Cochain& c, const std::map<CoWord, int>& index, const Field& f);
Cochain vec_to_cochain(const SparseVec& v, const std::vector<CoWord>& basis);

// Homology of the weight-graded piece C_{w+1} -> C_w -> C_{w-1}.
// Requires d_A = 0 so that the complex splits by weight.
ComplexBlock weight_homology(const HochschildCtx& ctx, int weight);

// Same on the reduced complex Abar (x) T(s Abar); the open-Frobenius chain
// products are chain maps there, so their class-level structure lives here.
ComplexBlock reduced_weight_homology(const HochschildCtx& ctx, int weight);

// Cochain-side block at fixed arity (again d_A = 0).
struct CoComplexBlock {
    std::vector<CoWord> basis;
    Subquotient sq;
};
CoComplexBlock arity_cohomology(const HochschildCtx& ctx, int arity);

struct HHEntry {
    int degree = 0;
    int dim = 0;
    bool stabilized = false;
    ComplexBlock block;
};

struct HHTable {
    std::vector<HHEntry> entries;  // ascending degree
};

// Homology per total degree at the given weight cutoff, with stabilization
// flag (dims unchanged at cutoff-1). Throws CompositionNotZero upward.
HHTable hh_table(const HochschildCtx& ctx, int degree_lo, int degree_hi, int cutoff);

struct HHCoEntry {
    int degree = 0;
    int dim = 0;
    bool stabilized = false;
    std::vector<CoWord> basis;
    Subquotient sq;
};
struct HHCoTable {
    std::vector<HHCoEntry> entries;
};
HHCoTable hh_cotable(const HochschildCtx& ctx, int degree_lo, int degree_hi, int cutoff);

}  // namespace hoch
