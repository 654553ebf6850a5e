#pragma once

#include <memory>
#include "hoch/complex.hpp"

namespace hoch {

// Operations on Hochschild cochains with coefficients in A (Gerstenhaber side)
// and their action on chains and on A^vee-valued cochains.

// (x u y)(a_1..a_{m+n}) = (-1)^{|y| sum_{i<=m}(|a_i|+1)} x(a_1..a_m) y(..)
Cochain cup(const DgAlgebra& a, const Cochain& x, const Cochain& y);

// single-slot insertion x o_j y, j in [0, arity(x)); the plugged value is
// projected to Abar (normalized complex)
Cochain circle_j(const DgAlgebra& a, const Cochain& x, const Cochain& y, int j);
Cochain circle(const DgAlgebra& a, const Cochain& x, const Cochain& y);

// [x,y] = x o y - (-1)^{(|x|+1)(|y|+1)} y o x  (defined on homogeneous pieces)
Cochain gerstenhaber_bracket(const DgAlgebra& a, const Cochain& x, const Cochain& y);

// i_f(a_0[a_1..a_n]) = (-1)^{|f| sum_{i<=k}(|a_i|+1)} (a_0 f(a_1..a_k))[rest]
Chain cap_chain(const DgAlgebra& a, const Cochain& f, const Chain& c);

// i_f(phi) = (-1)^{|f||phi|} phi o i_f on A^vee-valued cochains
Cochain cap_dual(const DgAlgebra& a, const Bimodule& dual, const Cochain& f, const Cochain& phi);

// L_f = [B, i_f] = B i_f - (-1)^{|f|} i_f B
Chain lie_derivative(const DgAlgebra& a, const Cochain& f, const Chain& c, int cutoff);

// Build an A^vee-valued cochain from its functional values on the given words.
Cochain cochain_from_functional(const HochschildCtx& dual_ctx, const std::vector<BarWord>& support,
                                const std::function<Scalar(const BarWord&)>& fn);

// Lazily cached homology bases of one algebra: chain side by weight,
// cochain sides (values in A and in A^vee) by arity. Requires d_A = 0.
class ClassCtx {
public:
    explicit ClassCtx(const DgAlgebra& a);
    ClassCtx(const ClassCtx&) = delete;

    const DgAlgebra& A;
    Bimodule MA;
    Bimodule MD;

    HochschildCtx ctxA() const { return HochschildCtx{A, MA}; }
    HochschildCtx ctxD() const { return HochschildCtx{A, MD}; }

    const ComplexBlock& chain_block(int weight);
    const CoComplexBlock& e_block(int arity);   // HH^*(A,A)
    const CoComplexBlock& d_block(int arity);   // HH^*(A,A^vee)

    // class representatives as chains/cochains
    std::vector<Chain> chain_classes(int weight);
    std::vector<Cochain> e_classes(int arity);
    std::vector<Cochain> d_classes(int arity);

private:
    std::map<int, ComplexBlock> chain_;
    std::map<int, CoComplexBlock> e_;
    std::map<int, CoComplexBlock> d_;
};

// class coordinates of a chain in the weight-w block (throws if not a cycle)
std::vector<Scalar> class_of_chain(ClassCtx& cc, int weight, const Chain& c);
std::vector<Scalar> class_of_e_cochain(ClassCtx& cc, int arity, const Cochain& f);
std::vector<Scalar> class_of_d_cochain(ClassCtx& cc, int arity, const Cochain& f);
bool chains_homologous(ClassCtx& cc, int weight, const Chain& x, const Chain& y);
bool e_cochains_cohomologous(ClassCtx& cc, int arity, const Cochain& x, const Cochain& y);
bool d_cochains_cohomologous(ClassCtx& cc, int arity, const Cochain& x, const Cochain& y);

// Gerstenhaber suite (Theorem 2): cup assoc / graded-commutativity at class
// level, bracket antisymmetry, Leibniz, Jacobi, plus the chain-level homotopy
// for cup commutativity witnessed by the circle product.
Report gerstenhaber_suite(ClassCtx& cc, int max_arity);

// Calculus relations at class level: Lf = -(-1)^{|f|}[i_f,B], i_{[f,g]} =
// [L_f,i_g], i_{f u g} = i_f i_g, L_{[f,g]} = [L_f,L_g]; the L_{fg} relation
// is reported as skipped.
Report calculus_suite(ClassCtx& cc, int max_arity, int max_weight);

struct NotQuasiIso : std::runtime_error {
    explicit NotQuasiIso(const std::string& w) : std::runtime_error(w) {}
};
struct NotBimoduleMap : std::runtime_error {
    explicit NotBimoduleMap(const std::string& w) : std::runtime_error(w) {}
};

// m: A -> A^vee[d] as a matrix (column j = image of e_j in the dual basis).
struct TransferData {
    SparseMatrix m_map;
    int d_shift = 0;
};

TransferData transfer_from_counit(const DgAlgebra& a, const FrobeniusData& fd);
void validate_transfer(const DgAlgebra& a, const TransferData& t);

// The induced isomorphism D^{-1} = (postcompose with m) on arity-k classes,
// Delta = D B^vee D^{-1}, all as matrices on HH^k(A,A) class bases.
class Transfer {
public:
    Transfer(ClassCtx& cc, TransferData t);

    // matrix of Delta: HH^k(A,A) -> HH^{k-1}(A,A) in class bases
    SparseMatrix delta_matrix(int arity);
    // apply Delta to a cocycle, returning class coordinates at arity-1
    std::vector<Scalar> delta_class(int arity, const Cochain& f);

    ClassCtx& cc;
    TransferData data;

private:
    std::map<int, SparseMatrix> dmat_;       // postcompose-with-m on classes
    std::map<int, SparseMatrix> delta_;
    const SparseMatrix& postcompose_matrix(int arity);
};

// BV checks for (HH^*(A,A), cup, Delta): Delta^2 = 0, Delta(1) = 0, the
// deviation identity and the 7-term relation on class tuples.
Report bv_suite(ClassCtx& cc, Transfer& tr, int max_arity);

// DPD condition for a cocycle psi in C^*(A,A^vee): (a) - cap [psi] restricted
// to H^*(A) is an isomorphism, (b) B^vee[psi] = 0 in HH.
Report dpd_check(ClassCtx& cc, const Cochain& psi);

}  // namespace hoch
