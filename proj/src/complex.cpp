#include "hoch/complex.hpp"

#include <algorithm>
#include <functional>

namespace hoch {

static void add_modslot(Chain& out, const Scalar& coeff, const SparseVec& mod, const std::vector<int>& letters) {
    for (const auto& [mi, mc] : mod.entries()) {
        BarWord w;
        w.module = mi;
        w.letters = letters;
        out.add(w, coeff * mc);
    }
}

static void add_letslot(Chain& out, const DgAlgebra& a, const Scalar& coeff, int mod,
                        const std::vector<int>& letters, std::size_t pos, const SparseVec& slot) {
    for (const auto& [li, lc] : slot.entries()) {
        if (li == a.unit) continue;
        BarWord w;
        w.module = mod;
        w.letters = letters;
        w.letters[pos] = li;
        out.add(w, coeff * lc);
    }
}

static void add_letmerge(Chain& out, const DgAlgebra& a, const Scalar& coeff, int mod,
                         const std::vector<int>& letters, std::size_t pos, const SparseVec& merged) {
    // letters with positions pos, pos+1 replaced by the merged slot
    std::vector<int> ls;
    ls.reserve(letters.size() - 1);
    ls.insert(ls.end(), letters.begin(), letters.begin() + static_cast<long>(pos));
    ls.push_back(-1);
    ls.insert(ls.end(), letters.begin() + static_cast<long>(pos) + 2, letters.end());
    for (const auto& [li, lc] : merged.entries()) {
        if (li == a.unit) continue;
        BarWord w;
        w.module = mod;
        w.letters = ls;
        w.letters[pos] = li;
        out.add(w, coeff * lc);
    }
}

Chain chain_differential(const HochschildCtx& ctx, const Chain& c) {
    const DgAlgebra& A = ctx.A;
    const Bimodule& M = ctx.M;
    const Field& f = A.field;
    Chain out;
    for (const auto& [w, coeff] : c.terms) {
        const int n = w.weight();
        const Scalar one = Scalar::one(f);

        // d0: module differential
        if (!M.diff.col(w.module).empty()) add_modslot(out, coeff, M.diff.col(w.module), w.letters);

        // d0: letter differentials, sign -(-1)^{Shat_{i-1}}
        int pre = ctx.sh_mod(w.module);
        for (int p = 0; p < n; ++p) {
            const SparseVec& da = A.diff.col(w.letters[p]);
            if (!da.empty()) add_letslot(out, A, coeff * Scalar::from_int(f, -ksign(pre)), w.module, w.letters, p, A.abar(da));
            pre += ctx.sh_let(w.letters[p]);
        }

        if (n == 0) continue;

        // d1 first term: (-1)^{|m|} (m a_1)[a_2..]
        {
            std::vector<int> rest(w.letters.begin() + 1, w.letters.end());
            SparseVec ma = M.ract(SparseVec::unit(w.module, one), SparseVec::unit(w.letters[0], one));
            add_modslot(out, coeff * Scalar::from_int(f, ksign(ctx.sh_mod(w.module))), ma, rest);
        }

        // d1 middle merges: (-1)^{Shat_i}
        pre = ctx.sh_mod(w.module);
        for (int p = 0; p + 1 < n; ++p) {
            pre += ctx.sh_let(w.letters[p]);
            SparseVec merged = A.abar(A.mul(w.letters[p], w.letters[p + 1]));
            if (!merged.empty()) add_letmerge(out, A, coeff * Scalar::from_int(f, ksign(pre)), w.module, w.letters, p, merged);
        }

        // d1 wrap: -(-1)^{shat(a_n) * Shat_{n-1}} (a_n m)[a_1..a_{n-1}]
        {
            int shn = ctx.sh_let(w.letters[n - 1]);
            int prefix = ctx.sh_mod(w.module);
            for (int p = 0; p + 1 < n; ++p) prefix += ctx.sh_let(w.letters[p]);
            std::vector<int> rest(w.letters.begin(), w.letters.end() - 1);
            SparseVec am = M.lact(SparseVec::unit(w.letters[n - 1], one), SparseVec::unit(w.module, one));
            add_modslot(out, coeff * Scalar::from_int(f, -ksign(shn * prefix)), am, rest);
        }
    }
    return out;
}

Chain connes_B(const DgAlgebra& a, const Chain& c, int cutoff) {
    const Field& f = a.field;
    Chain out;
    for (const auto& [w, coeff] : c.terms) {
        const int n = w.weight();
        if (n + 1 > cutoff) throw CutoffExceeded("connes_B: weight " + std::to_string(n) + " at cutoff " + std::to_string(cutoff));
        if (w.module == a.unit) continue;  // every rotation carries a unit letter
        // suspended degrees with a_0 moved into letter position
        std::vector<int> sh(n + 1);
        sh[0] = a.degree[w.module] - 1;
        for (int j = 1; j <= n; ++j) sh[j] = a.degree[w.letters[j - 1]] - 1;
        int total = 0;
        for (int v : sh) total += v;
        int left = sh[0];
        for (int i = 0; i <= n; ++i) {
            if (i > 0) left += sh[i];
            int right = total - left;
            BarWord o;
            o.module = a.unit;
            o.letters.reserve(n + 1);
            for (int j = i + 1; j <= n; ++j) o.letters.push_back(w.letters[j - 1]);
            o.letters.push_back(w.module);
            for (int j = 1; j <= i; ++j) o.letters.push_back(w.letters[j - 1]);
            out.add(o, coeff * Scalar::from_int(f, ksign(left * right)));
        }
    }
    return out;
}

Cochain cochain_differential(const HochschildCtx& ctx, const Cochain& fc) {
    const DgAlgebra& A = ctx.A;
    const Bimodule& M = ctx.M;
    const Field& F = A.field;
    const Scalar one = Scalar::one(F);
    Cochain out;

    for (const auto& [cw, coeff] : fc.terms) {
        const int m = cw.arity();
        const int fdeg = coword_degree(A, M, cw);

        // Sign convention pinned jointly by: d^2 = 0 over graded fixtures with
        // nonzero differential, the Gerstenhaber homotopy identity on the
        // A-valued side, and adjointness to the chain differential under
        // <f, a_0[lams]> = (-1)^{|a_0|(|f|+1)} f(lams)(a_0):
        //   P(Df, w) = (-1)^{|f|} P(f, Dw).

        // internal: d_M on the value
        for (const auto& [v2, c2] : M.diff.col(cw.value).entries()) {
            CoWord o{cw.letters, v2};
            out.add(o, coeff * c2);
        }
        // internal letters: +(-1)^{|f| + eps_{i-1}} f(..d a_i..)
        for (int p = 0; p < m; ++p) {
            for (int b = 0; b < A.dim(); ++b) {
                if (b == A.unit) continue;
                Scalar db = A.diff.at(cw.letters[p], b);
                if (db.is_zero()) continue;
                CoWord o = cw;
                o.letters[p] = b;
                int eps = 0;
                for (int j = 0; j < p; ++j) eps += ctx.sh_let(o.letters[j]);
                out.add(o, coeff * db * Scalar::from_int(F, ksign(fdeg + eps)));
            }
        }

        // external first: +(-1)^{|f|(1+|b|)} b . f(rest)
        for (int b = 0; b < A.dim(); ++b) {
            if (b == A.unit) continue;
            SparseVec bv = M.lact(SparseVec::unit(b, one), SparseVec::unit(cw.value, one));
            if (bv.empty()) continue;
            CoWord o;
            o.letters.reserve(m + 1);
            o.letters.push_back(b);
            o.letters.insert(o.letters.end(), cw.letters.begin(), cw.letters.end());
            Scalar s = coeff * Scalar::from_int(F, ksign(fdeg * (1 + A.degree[b])));
            for (const auto& [v2, c2] : bv.entries()) out.add(CoWord{o.letters, v2}, s * c2);
        }

        // external middles: +(-1)^{|f| + eps_i} f(.. b1 b2 ..)
        for (int p = 0; p < m; ++p) {
            for (int b1 = 0; b1 < A.dim(); ++b1) {
                if (b1 == A.unit) continue;
                for (int b2 = 0; b2 < A.dim(); ++b2) {
                    if (b2 == A.unit) continue;
                    Scalar pc = A.mul(b1, b2).get(cw.letters[p], F);
                    if (pc.is_zero()) continue;
                    CoWord o;
                    o.letters.reserve(m + 1);
                    o.letters.insert(o.letters.end(), cw.letters.begin(), cw.letters.begin() + p);
                    o.letters.push_back(b1);
                    o.letters.push_back(b2);
                    o.letters.insert(o.letters.end(), cw.letters.begin() + p + 1, cw.letters.end());
                    int eps = 0;
                    for (int j = 0; j <= p; ++j) eps += ctx.sh_let(o.letters[j]);
                    out.add(CoWord{o.letters, cw.value}, coeff * pc * Scalar::from_int(F, ksign(fdeg + eps)));
                }
            }
        }

        // external last: -(-1)^{|f| + eps_excl} f(..) . b
        for (int b = 0; b < A.dim(); ++b) {
            if (b == A.unit) continue;
            SparseVec vb = M.ract(SparseVec::unit(cw.value, one), SparseVec::unit(b, one));
            if (vb.empty()) continue;
            CoWord o;
            o.letters = cw.letters;
            o.letters.push_back(b);
            int eps = 0;
            for (int l : cw.letters) eps += ctx.sh_let(l);
            Scalar s = coeff * Scalar::from_int(F, -ksign(fdeg + eps));
            for (const auto& [v2, c2] : vb.entries()) out.add(CoWord{o.letters, v2}, s * c2);
        }
    }
    return out;
}

Cochain connes_B_dual(const DgAlgebra& a, const Bimodule& dual, const Cochain& fc, int cutoff) {
    const Field& F = a.field;
    Cochain out;
    for (const auto& [cw, coeff] : fc.terms) {
        const int k = cw.arity();
        if (k > cutoff) throw CutoffExceeded("connes_B_dual: arity " + std::to_string(k) + " at cutoff " + std::to_string(cutoff));
        if (cw.value != a.unit) continue;  // B lands in unit-module-slot words
        const int fdeg = coword_degree(a, dual, cw);
        // un-rotate: input word (a_0 = lambda_p, mu) contributing 1[lambda]
        for (int p = 0; p < k; ++p) {
            BarWord in;
            in.module = cw.letters[p];
            for (int j = p + 1; j < k; ++j) in.letters.push_back(cw.letters[j]);
            for (int j = 0; j < p; ++j) in.letters.push_back(cw.letters[j]);
            // B-sign of that term, recomputed on the input word
            const int n = in.weight();
            std::vector<int> sh(n + 1);
            sh[0] = a.degree[in.module] - 1;
            for (int j = 1; j <= n; ++j) sh[j] = a.degree[in.letters[j - 1]] - 1;
            int total = 0;
            for (int v : sh) total += v;
            // rotation index i placing a_0 at output position p
            int i = n - p;
            int left = sh[0];
            for (int j = 1; j <= i; ++j) left += sh[j];
            int right = total - left;
            // functional value at the input word, converted to a table entry
            CoWord o{in.letters, in.module};
            int outdeg = coword_degree(a, dual, o);
            out.add(o, coeff * Scalar::from_int(F, ksign(left * right + fdeg + a.degree[in.module] * (outdeg + 1))));
        }
    }
    return out;
}

Scalar eval_pairing(const HochschildCtx& dual_ctx, const Cochain& f, const Chain& c) {
    const DgAlgebra& A = dual_ctx.A;
    Scalar acc = Scalar::zero(A.field);
    for (const auto& [w, cc] : c.terms) {
        for (const auto& [cw, fc] : f.terms) {
            if (cw.letters != w.letters || cw.value != w.module) continue;
            int fdeg = coword_degree(A, dual_ctx.M, cw);
            acc += cc * fc * Scalar::from_int(A.field, ksign(A.degree[w.module] * (fdeg + 1)));
        }
    }
    return acc;
}

std::vector<BarWord> words_of_weight(const HochschildCtx& ctx, int weight) {
    std::vector<BarWord> out;
    std::vector<int> letters(weight);
    std::function<void(int)> rec = [&](int pos) {
        if (pos == weight) {
            for (int m = 0; m < ctx.M.dim(); ++m) out.push_back(BarWord{m, letters});
            return;
        }
        for (int l = 0; l < ctx.A.dim(); ++l) {
            if (l == ctx.A.unit) continue;
            letters[pos] = l;
            rec(pos + 1);
        }
    };
    rec(0);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<BarWord> enumerate_words(const HochschildCtx& ctx, int total_degree, int cutoff) {
    std::vector<BarWord> out;
    for (int w = 0; w <= cutoff; ++w)
        for (const auto& word : words_of_weight(ctx, w))
            if (word_degree(ctx.A, ctx.M, word) == total_degree) out.push_back(word);
    return out;
}

std::vector<CoWord> cowords_of_arity(const HochschildCtx& ctx, int arity) {
    std::vector<CoWord> out;
    std::vector<int> letters(arity);
    std::function<void(int)> rec = [&](int pos) {
        if (pos == arity) {
            for (int v = 0; v < ctx.M.dim(); ++v) out.push_back(CoWord{letters, v});
            return;
        }
        for (int l = 0; l < ctx.A.dim(); ++l) {
            if (l == ctx.A.unit) continue;
            letters[pos] = l;
            rec(pos + 1);
        }
    };
    rec(0);
    std::sort(out.begin(), out.end());
    return out;
}

SparseVec chain_to_vec(const Chain& c, const std::map<BarWord, int>& index, const Field& f) {
    (void)f;
    SparseVec v;
    for (const auto& [w, s] : c.terms) {
        auto it = index.find(w);
        if (it == index.end()) throw std::logic_error("chain_to_vec: word outside basis");
        v.add(it->second, s);
    }
    return v;
}

Chain vec_to_chain(const SparseVec& v, const std::vector<BarWord>& basis) {
    Chain c;
    for (const auto& [i, s] : v.entries()) c.add(basis[i], s);
    return c;
}

SparseVec cochain_to_vec(const Cochain& c, const std::map<CoWord, int>& index, const Field& f) {
    (void)f;
    SparseVec v;
    for (const auto& [w, s] : c.terms) {
        auto it = index.find(w);
        if (it == index.end()) throw std::logic_error("cochain_to_vec: coword outside basis");
        v.add(it->second, s);
    }
    return v;
}

Cochain vec_to_cochain(const SparseVec& v, const std::vector<CoWord>& basis) {
    Cochain c;
    for (const auto& [i, s] : v.entries()) c.add(basis[i], s);
    return c;
}

static SparseMatrix chain_diff_matrix(const HochschildCtx& ctx, const std::vector<BarWord>& dom,
                                      const std::map<BarWord, int>& cod_index, int cod_size) {
    SparseMatrix m(cod_size, static_cast<int>(dom.size()), ctx.A.field);
    for (std::size_t j = 0; j < dom.size(); ++j) {
        Chain c;
        c.add(dom[j], Scalar::one(ctx.A.field));
        Chain dc = chain_differential(ctx, c);
        for (const auto& [w, s] : dc.terms) {
            auto it = cod_index.find(w);
            if (it == cod_index.end()) throw std::logic_error("chain differential left the expected block");
            m.add(it->second, static_cast<int>(j), s);
        }
    }
    return m;
}

ComplexBlock weight_homology(const HochschildCtx& ctx, int weight) {
    if (!ctx.A.diff.is_zero() || !ctx.M.diff.is_zero())
        throw std::logic_error("weight_homology requires vanishing differentials");
    ComplexBlock out;
    out.basis = words_of_weight(ctx, weight);
    std::map<BarWord, int> index;
    for (std::size_t i = 0; i < out.basis.size(); ++i) index[out.basis[i]] = static_cast<int>(i);

    auto up = words_of_weight(ctx, weight + 1);
    SparseMatrix d_in = chain_diff_matrix(ctx, up, index, static_cast<int>(out.basis.size()));

    SparseMatrix d_out;
    if (weight == 0) {
        d_out = SparseMatrix::zero(0, static_cast<int>(out.basis.size()), ctx.A.field);
    } else {
        auto down = words_of_weight(ctx, weight - 1);
        std::map<BarWord, int> dindex;
        for (std::size_t i = 0; i < down.size(); ++i) dindex[down[i]] = static_cast<int>(i);
        d_out = chain_diff_matrix(ctx, out.basis, dindex, static_cast<int>(down.size()));
    }
    out.sq = homology(d_in, d_out);
    return out;
}

ComplexBlock reduced_weight_homology(const HochschildCtx& ctx, int weight) {
    if (!ctx.A.diff.is_zero() || !ctx.M.diff.is_zero())
        throw std::logic_error("reduced_weight_homology requires vanishing differentials");
    const DgAlgebra& A = ctx.A;
    ComplexBlock out;
    for (const auto& w : words_of_weight(ctx, weight))
        if (w.module != A.unit) out.basis.push_back(w);
    std::map<BarWord, int> index;
    for (std::size_t i = 0; i < out.basis.size(); ++i) index[out.basis[i]] = static_cast<int>(i);

    std::vector<BarWord> up, down;
    for (const auto& w : words_of_weight(ctx, weight + 1))
        if (w.module != A.unit) up.push_back(w);
    if (weight > 0)
        for (const auto& w : words_of_weight(ctx, weight - 1))
            if (w.module != A.unit) down.push_back(w);

    SparseMatrix d_in(static_cast<int>(out.basis.size()), static_cast<int>(up.size()), A.field);
    for (std::size_t j = 0; j < up.size(); ++j) {
        Chain c;
        c.add(up[j], Scalar::one(A.field));
        for (const auto& [w, s] : chain_differential(ctx, c).terms) {
            auto it = index.find(w);
            if (it == index.end()) throw std::logic_error("reduced complex is not closed under D");
            d_in.add(it->second, static_cast<int>(j), s);
        }
    }
    std::map<BarWord, int> dindex;
    for (std::size_t i = 0; i < down.size(); ++i) dindex[down[i]] = static_cast<int>(i);
    SparseMatrix d_out(static_cast<int>(down.size()), static_cast<int>(out.basis.size()), A.field);
    for (std::size_t j = 0; j < out.basis.size(); ++j) {
        Chain c;
        c.add(out.basis[j], Scalar::one(A.field));
        for (const auto& [w, s] : chain_differential(ctx, c).terms) d_out.add(dindex.at(w), static_cast<int>(j), s);
    }
    out.sq = homology(d_in, d_out);
    return out;
}

static SparseMatrix cochain_diff_matrix(const HochschildCtx& ctx, const std::vector<CoWord>& dom,
                                        const std::map<CoWord, int>& cod_index, int cod_size) {
    SparseMatrix m(cod_size, static_cast<int>(dom.size()), ctx.A.field);
    for (std::size_t j = 0; j < dom.size(); ++j) {
        Cochain c;
        c.add(dom[j], Scalar::one(ctx.A.field));
        Cochain dc = cochain_differential(ctx, c);
        for (const auto& [w, s] : dc.terms) {
            auto it = cod_index.find(w);
            if (it == cod_index.end()) throw std::logic_error("cochain differential left the expected block");
            m.add(it->second, static_cast<int>(j), s);
        }
    }
    return m;
}

CoComplexBlock arity_cohomology(const HochschildCtx& ctx, int arity) {
    if (!ctx.A.diff.is_zero() || !ctx.M.diff.is_zero())
        throw std::logic_error("arity_cohomology requires vanishing differentials");
    CoComplexBlock out;
    out.basis = cowords_of_arity(ctx, arity);
    std::map<CoWord, int> index;
    for (std::size_t i = 0; i < out.basis.size(); ++i) index[out.basis[i]] = static_cast<int>(i);

    SparseMatrix d_in(static_cast<int>(out.basis.size()), 0, ctx.A.field);
    if (arity > 0) {
        auto down = cowords_of_arity(ctx, arity - 1);
        d_in = cochain_diff_matrix(ctx, down, index, static_cast<int>(out.basis.size()));
    }
    auto up = cowords_of_arity(ctx, arity + 1);
    std::map<CoWord, int> upindex;
    for (std::size_t i = 0; i < up.size(); ++i) upindex[up[i]] = static_cast<int>(i);
    SparseMatrix d_out = cochain_diff_matrix(ctx, out.basis, upindex, static_cast<int>(up.size()));
    out.sq = homology(d_in, d_out);
    return out;
}

// chain-side table entry at one level (= minus the total degree)
static std::pair<int, ComplexBlock> hh_entry_at(const HochschildCtx& ctx, int level, int cutoff) {
    ComplexBlock blk;
    blk.basis = enumerate_words(ctx, -level, cutoff);
    std::map<BarWord, int> index;
    for (std::size_t i = 0; i < blk.basis.size(); ++i) index[blk.basis[i]] = static_cast<int>(i);
    auto below = enumerate_words(ctx, -level - 1, cutoff);  // D raises degree: sources of boundaries
    SparseMatrix d_in = chain_diff_matrix(ctx, below, index, static_cast<int>(blk.basis.size()));
    auto above = enumerate_words(ctx, -level + 1, cutoff);
    std::map<BarWord, int> aindex;
    for (std::size_t i = 0; i < above.size(); ++i) aindex[above[i]] = static_cast<int>(i);
    SparseMatrix d_out = chain_diff_matrix(ctx, blk.basis, aindex, static_cast<int>(above.size()));
    blk.sq = homology(d_in, d_out);
    return {blk.sq.dim, std::move(blk)};
}

static bool concentrated_in_degree_zero(const HochschildCtx& ctx) {
    for (int d : ctx.A.degree)
        if (d != 0) return false;
    for (int d : ctx.M.degree)
        if (d != 0) return false;
    return ctx.A.diff.is_zero() && ctx.M.diff.is_zero();
}

HHTable hh_table(const HochschildCtx& ctx, int degree_lo, int degree_hi, int cutoff) {
    if (cutoff < 1) throw std::invalid_argument("hh_table: cutoff must be >= 1");
    // degree-0-concentrated coefficients pin level n to weight n, so the
    // entries with incoming differentials inside the cutoff are exact
    const bool pinned = concentrated_in_degree_zero(ctx);
    HHTable t;
    for (int lv = degree_lo; lv <= degree_hi; ++lv) {
        auto [dim, blk] = hh_entry_at(ctx, lv, cutoff);
        HHEntry e;
        e.degree = lv;
        e.dim = dim;
        e.block = std::move(blk);
        if (pinned) {
            e.stabilized = (lv + 1 <= cutoff);
        } else {
            auto [dim_prev, blk_prev] = hh_entry_at(ctx, lv, cutoff - 1);
            e.stabilized = (dim_prev == dim);
        }
        t.entries.push_back(std::move(e));
    }
    return t;
}

static std::pair<int, std::pair<std::vector<CoWord>, Subquotient>> hh_coentry_at(const HochschildCtx& ctx, int level, int cutoff) {
    std::vector<CoWord> basis;
    for (int k = 0; k <= cutoff; ++k)
        for (const auto& w : cowords_of_arity(ctx, k))
            if (coword_degree(ctx.A, ctx.M, w) == level) basis.push_back(w);
    std::map<CoWord, int> index;
    for (std::size_t i = 0; i < basis.size(); ++i) index[basis[i]] = static_cast<int>(i);

    std::vector<CoWord> below, above;
    for (int k = 0; k <= cutoff; ++k)
        for (const auto& w : cowords_of_arity(ctx, k)) {
            int d = coword_degree(ctx.A, ctx.M, w);
            if (d == level - 1) below.push_back(w);
            if (d == level + 1) above.push_back(w);
        }
    // cochain differential raises arity; drop targets beyond the cutoff
    auto mat_between = [&](const std::vector<CoWord>& dom, const std::map<CoWord, int>& cod, int cod_n) {
        SparseMatrix m(cod_n, static_cast<int>(dom.size()), ctx.A.field);
        for (std::size_t j = 0; j < dom.size(); ++j) {
            Cochain c;
            c.add(dom[j], Scalar::one(ctx.A.field));
            for (const auto& [w, s] : cochain_differential(ctx, c).terms) {
                if (w.arity() > cutoff) continue;
                auto it = cod.find(w);
                if (it == cod.end()) throw std::logic_error("cochain differential left the degree block");
                m.add(it->second, static_cast<int>(j), s);
            }
        }
        return m;
    };
    SparseMatrix d_in = mat_between(below, index, static_cast<int>(basis.size()));
    std::map<CoWord, int> aindex;
    for (std::size_t i = 0; i < above.size(); ++i) aindex[above[i]] = static_cast<int>(i);
    SparseMatrix d_out = mat_between(basis, aindex, static_cast<int>(above.size()));
    Subquotient sq = homology(d_in, d_out);
    int dim = sq.dim;
    return {dim, {std::move(basis), std::move(sq)}};
}

HHCoTable hh_cotable(const HochschildCtx& ctx, int degree_lo, int degree_hi, int cutoff) {
    if (cutoff < 1) throw std::invalid_argument("hh_cotable: cutoff must be >= 1");
    const bool pinned = concentrated_in_degree_zero(ctx);
    HHCoTable t;
    for (int lv = degree_lo; lv <= degree_hi; ++lv) {
        auto [dim, bs] = hh_coentry_at(ctx, lv, cutoff);
        HHCoEntry e;
        e.degree = lv;
        e.dim = dim;
        if (pinned) {
            e.stabilized = (lv + 1 <= cutoff);
        } else {
            auto [dim_prev, bs_prev] = hh_coentry_at(ctx, lv, cutoff - 1);
            e.stabilized = (dim_prev == dim);
        }
        e.basis = std::move(bs.first);
        e.sq = std::move(bs.second);
        t.entries.push_back(std::move(e));
    }
    return t;
}

}  // namespace hoch
