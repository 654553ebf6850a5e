#pragma once

#include "hoch/calculus.hpp"

namespace hoch {

// Open-Frobenius operations on Hochschild chains of A, plus every homotopy
// paired with the chain-level identity it witnesses. All ops need coproduct
// data; ops that rotate through the Connes operator take weight headroom.
struct FrobCtx {
    const DgAlgebra& A;
    const FrobeniusData& F;
    int cutoff = 16;  // weight headroom guard for B-shaped outputs

    const SparseVec unit_vec() const { return SparseVec::unit(A.unit, Scalar::one(A.field)); }
};

// Koszul sign of reordering homogeneous symbols: target[t] indexes degs.
int reorder_sign(const std::vector<int>& degs, const std::vector<int>& target);

// coproduct theta: splits a word through delta(a_0)
TensorChain theta(const FrobCtx& fx, const Chain& c);

// cocommutativity homotopy h (delta(1) insertions across a cyclic gap)
TensorChain cocom_h(const FrobCtx& fx, const Chain& c);

// cobracket S = h - tau h
TensorChain cobracket_S(const FrobCtx& fx, const Chain& c);

// co-Leibniz homotopy H: two delta(1) insertions, three output factors
TensorChain coleibniz_H(const FrobCtx& fx, const Chain& c);

// the two pieces of theta B (split by where a_0 lands); part is 1 or 2
TensorChain theta_B_part(const FrobCtx& fx, const Chain& c, int part);

// homotopy between h and (theta B)_2 - (B x id) theta
TensorChain compat_H(const FrobCtx& fx, const Chain& c);

// graded swap on 2-tensors
TensorChain tau_swap(const DgAlgebra& a, const Bimodule& m, const TensorChain& t);

// the dot product on chains (strictly associative)
Chain dot(const FrobCtx& fx, const Chain& x, const Chain& y);

// x o y insertion product and the loop bracket {x,y} = x o y -+ y o x
Chain circ_chain(const FrobCtx& fx, const Chain& x, const Chain& y);
Chain loop_bracket(const FrobCtx& fx, const Chain& x, const Chain& y);

// B(x . y) split by rotation position (part 1: within y / at (ab)''; part 2:
// within x / at the module); B_1 + B_2 = B o dot holds by construction
Chain B_split(const FrobCtx& fx, const Chain& x, const Chain& y, int part);

// commutativity homotopy for dot
Chain homotopy_H1(const FrobCtx& fx, const Chain& x, const Chain& y);
// homotopy for x o y ~ B_1(x,y) - x . By
Chain homotopy_H2(const FrobCtx& fx, const Chain& x, const Chain& y);
// homotopy for (y . z) o x ~ (y o x) . z - y . (z o x)
Chain homotopy_H3(const FrobCtx& fx, const Chain& x, const Chain& y, const Chain& z);

// Cohen-Godin degree-zero product: zero unless x has no letters
Chain cg_star(const FrobCtx& fx, const Chain& x, const Chain& y);

// star product on A^vee-valued cochains: (f * g)(w) = mu (f x g) theta(w)
Cochain star_cochain(const FrobCtx& fx, const Bimodule& dual, const Cochain& f, const Cochain& g);

// apply a chain operator to one tensor factor with the Koszul prefix
TensorChain apply_to_factor(const DgAlgebra& a, const Bimodule& m, const TensorChain& t, int idx, int op_degree,
                            const std::function<Chain(const Chain&)>& op);

// Chain-level identity suite for the homotopies (criterion: exact equality).
Report frobenius_homotopy_suite(const FrobCtx& fx, int max_weight);

// Class-level corollaries: BV structure of (HH_*, dot, B) in the shifted
// grading and the coBV structure of (HH^*(A,A^vee), star, B^vee).
Report hh_bv_suite(ClassCtx& cc, const FrobeniusData& fd, int max_weight);

}  // namespace hoch
