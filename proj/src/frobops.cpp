#include "hoch/frobops.hpp"

#include <functional>
#include <set>

namespace hoch {

int reorder_sign(const std::vector<int>& degs, const std::vector<int>& target) {
    int e = 0;
    for (std::size_t t1 = 0; t1 < target.size(); ++t1)
        for (std::size_t t2 = t1 + 1; t2 < target.size(); ++t2)
            if (target[t1] > target[t2]) e += degs[target[t1]] * degs[target[t2]];
    return ksign(e);
}

namespace {

int shat_sum_letters(const DgAlgebra& a, const std::vector<int>& letters) {
    int s = 0;
    for (int l : letters) s += a.degree[l] - 1;
    return s;
}

int word_shat_deg(const DgAlgebra& a, const BarWord& w) {
    return a.degree[w.module] + shat_sum_letters(a, w.letters);
}

// B-terms of a single word with their rotation index (library convention)
void b_terms(const DgAlgebra& a, const BarWord& w, const Scalar& coeff,
             const std::function<void(int, const BarWord&, const Scalar&)>& emit) {
    const int n = w.weight();
    if (w.module == a.unit) return;
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
        for (int j = i + 1; j <= n; ++j) o.letters.push_back(w.letters[j - 1]);
        o.letters.push_back(w.module);
        for (int j = 1; j <= i; ++j) o.letters.push_back(w.letters[j - 1]);
        emit(i, o, coeff * Scalar::from_int(a.field, ksign(left * right)));
    }
}

}  // namespace

TensorChain theta(const FrobCtx& fx, const Chain& c) {
    const DgAlgebra& A = fx.A;
    const Field& F = A.field;
    TensorChain out;
    for (const auto& [w, coeff] : c.terms) {
        const int n = w.weight();
        for (const auto& [jk, cd] : fx.F.cop[w.module]) {
            int dk = A.degree[jk.second];
            int prefix = 0;
            for (int i = 0; i <= n; ++i) {
                if (i > 0) prefix += A.degree[w.letters[i - 1]] - 1;
                TensorWord t;
                t.factors.resize(2);
                t.factors[0].module = jk.first;
                t.factors[0].letters.assign(w.letters.begin(), w.letters.begin() + i);
                t.factors[1].module = jk.second;
                t.factors[1].letters.assign(w.letters.begin() + i, w.letters.end());
                out.add(t, coeff * cd * Scalar::from_int(F, ksign(dk * prefix)));
            }
        }
    }
    return out;
}

TensorChain cocom_h(const FrobCtx& fx, const Chain& c) {
    const DgAlgebra& A = fx.A;
    const Field& F = A.field;
    TensorChain out;
    for (const auto& [w, coeff] : c.terms) {
        const int n = w.weight();
        if (n + 1 > fx.cutoff) throw CutoffExceeded("cocom_h");
        for (const auto& [uv, cd] : fx.F.cop[A.unit]) {
            int u = uv.first, v = uv.second;
            if (v == A.unit) continue;  // v lands as a letter
            // source: [u(M), v(letter), a0(M), letters...]
            std::vector<int> degs;
            degs.push_back(A.degree[u]);
            degs.push_back(A.degree[v] - 1);
            degs.push_back(A.degree[w.module]);
            for (int l : w.letters) degs.push_back(A.degree[l] - 1);
            for (int i = 0; i <= n; ++i) {
                for (int j = i + 1; j <= n + 1; ++j) {
                    // factor1: a0[a_1..a_i, v, a_j..a_n]; factor2: u[a_{i+1}..a_{j-1}]
                    std::vector<int> target;
                    target.push_back(2);
                    for (int p = 1; p <= i; ++p) target.push_back(2 + p);
                    target.push_back(1);
                    for (int p = j; p <= n; ++p) target.push_back(2 + p);
                    target.push_back(0);
                    for (int p = i + 1; p <= j - 1; ++p) target.push_back(2 + p);
                    TensorWord t;
                    t.factors.resize(2);
                    t.factors[0].module = w.module;
                    for (int p = 1; p <= i; ++p) t.factors[0].letters.push_back(w.letters[p - 1]);
                    t.factors[0].letters.push_back(v);
                    for (int p = j; p <= n; ++p) t.factors[0].letters.push_back(w.letters[p - 1]);
                    t.factors[1].module = u;
                    for (int p = i + 1; p <= j - 1; ++p) t.factors[1].letters.push_back(w.letters[p - 1]);
                    out.add(t, coeff * cd * Scalar::from_int(F, reorder_sign(degs, target)));
                }
            }
        }
    }
    return out;
}

TensorChain tau_swap(const DgAlgebra& a, const Bimodule& m, const TensorChain& t) {
    (void)m;
    TensorChain out;
    for (const auto& [tw, c] : t.terms) {
        if (tw.factors.size() != 2) throw std::logic_error("tau_swap: need 2 factors");
        int e = word_shat_deg(a, tw.factors[0]) * word_shat_deg(a, tw.factors[1]);
        TensorWord o;
        o.factors = {tw.factors[1], tw.factors[0]};
        out.add(o, c * Scalar::from_int(a.field, ksign(e)));
    }
    return out;
}

TensorChain cobracket_S(const FrobCtx& fx, const Chain& c) {
    TensorChain h = cocom_h(fx, c);
    TensorChain out = h;
    Bimodule ma = as_bimodule(fx.A);
    out.add_scaled(tau_swap(fx.A, ma, h), Scalar::from_int(fx.A.field, -1));
    return out;
}

TensorChain coleibniz_H(const FrobCtx& fx, const Chain& c) {
    const DgAlgebra& A = fx.A;
    const Field& F = A.field;
    TensorChain out;
    for (const auto& [w, coeff] : c.terms) {
        const int n = w.weight();
        if (n + 2 > fx.cutoff) throw CutoffExceeded("coleibniz_H");
        for (const auto& [uv1, cd1] : fx.F.cop[A.unit]) {
            int u1 = uv1.first, v1 = uv1.second;
            if (u1 == A.unit) continue;  // u1 lands as a letter in the main word
            for (const auto& [uv2, cd2] : fx.F.cop[A.unit]) {
                int u2 = uv2.first, v2 = uv2.second;
                if (u2 == A.unit) continue;
                // source: [u1(letter), v1(M), u2(letter), v2(M), a0(M), letters...]
                std::vector<int> degs = {A.degree[u1] - 1, A.degree[v1], A.degree[u2] - 1, A.degree[v2],
                                         A.degree[w.module]};
                for (int l : w.letters) degs.push_back(A.degree[l] - 1);
                for (int l = 0; l <= n; ++l)
                    for (int i = l + 1; i <= n + 1; ++i)
                        for (int j = i; j <= n + 1; ++j)
                            for (int k = j + 1; k <= n + 1; ++k) {
                                // factor1: v1[a_{l+1}..a_{i-1}], factor2: v2[a_j..a_{k-1}],
                                // factor3: a0[a_1..a_l, u1, a_i..a_{j-1}, u2, a_k..a_n]
                                std::vector<int> target;
                                target.push_back(1);
                                for (int p = l + 1; p <= i - 1; ++p) target.push_back(4 + p);
                                target.push_back(3);
                                for (int p = j; p <= k - 1; ++p) target.push_back(4 + p);
                                target.push_back(4);
                                for (int p = 1; p <= l; ++p) target.push_back(4 + p);
                                target.push_back(0);
                                for (int p = i; p <= j - 1; ++p) target.push_back(4 + p);
                                target.push_back(2);
                                for (int p = k; p <= n; ++p) target.push_back(4 + p);
                                TensorWord t;
                                t.factors.resize(3);
                                t.factors[0].module = v1;
                                for (int p = l + 1; p <= i - 1; ++p) t.factors[0].letters.push_back(w.letters[p - 1]);
                                t.factors[1].module = v2;
                                for (int p = j; p <= k - 1; ++p) t.factors[1].letters.push_back(w.letters[p - 1]);
                                t.factors[2].module = w.module;
                                for (int p = 1; p <= l; ++p) t.factors[2].letters.push_back(w.letters[p - 1]);
                                t.factors[2].letters.push_back(u1);
                                for (int p = i; p <= j - 1; ++p) t.factors[2].letters.push_back(w.letters[p - 1]);
                                t.factors[2].letters.push_back(u2);
                                for (int p = k; p <= n; ++p) t.factors[2].letters.push_back(w.letters[p - 1]);
                                out.add(t, coeff * cd1 * cd2 * Scalar::from_int(F, reorder_sign(degs, target)));
                            }
            }
        }
    }
    return out;
}

TensorChain theta_B_part(const FrobCtx& fx, const Chain& c, int part) {
    const DgAlgebra& A = fx.A;
    const Field& F = A.field;
    TensorChain out;
    for (const auto& [w, coeff] : c.terms) {
        const int n = w.weight();
        if (n + 1 > fx.cutoff) throw CutoffExceeded("theta_B_part");
        b_terms(A, w, coeff, [&](int i, const BarWord& rot, const Scalar& bc) {
            int a0_pos = n - i;  // 0-based position of the old module in rot
            for (const auto& [uv, cd] : fx.F.cop[A.unit]) {
                int dv = A.degree[uv.second];
                int prefix = 0;
                for (int s = 0; s <= n + 1; ++s) {
                    if (s > 0) prefix += A.degree[rot.letters[s - 1]] - 1;
                    int this_part = (a0_pos < s) ? 2 : 1;
                    if (this_part != part) continue;
                    TensorWord t;
                    t.factors.resize(2);
                    t.factors[0].module = uv.first;
                    t.factors[0].letters.assign(rot.letters.begin(), rot.letters.begin() + s);
                    t.factors[1].module = uv.second;
                    t.factors[1].letters.assign(rot.letters.begin() + s, rot.letters.end());
                    out.add(t, bc * cd * Scalar::from_int(F, ksign(dv * prefix)));
                }
            }
        });
    }
    return out;
}

TensorChain compat_H(const FrobCtx& fx, const Chain& c) {
    const DgAlgebra& A = fx.A;
    const Field& F = A.field;
    TensorChain out;
    for (const auto& [w, coeff] : c.terms) {
        const int n = w.weight();
        if (n + 2 > fx.cutoff) throw CutoffExceeded("compat_H");
        if (w.module == A.unit) continue;  // the module becomes a letter
        for (const auto& [uv, cd] : fx.F.cop[A.unit]) {
            int u = uv.first, v = uv.second;
            if (u == A.unit) continue;
            // source: [u(letter), v(M), a0(letter), letters...]
            std::vector<int> degs = {A.degree[u] - 1, A.degree[v], A.degree[w.module] - 1};
            for (int l : w.letters) degs.push_back(A.degree[l] - 1);
            for (int k = 0; k <= n; ++k)
                for (int j = k + 1; j <= n; ++j)
                    for (int i = j; i <= n; ++i) {
                        // factor1: 1[a_i..a_n, a0, a_1..a_k, u, a_j..a_{i-1}]
                        // factor2: v[a_{k+1}..a_{j-1}]
                        std::vector<int> target;
                        for (int p = i; p <= n; ++p) target.push_back(2 + p);
                        target.push_back(2);
                        for (int p = 1; p <= k; ++p) target.push_back(2 + p);
                        target.push_back(0);
                        for (int p = j; p <= i - 1; ++p) target.push_back(2 + p);
                        target.push_back(1);
                        for (int p = k + 1; p <= j - 1; ++p) target.push_back(2 + p);
                        TensorWord t;
                        t.factors.resize(2);
                        t.factors[0].module = A.unit;
                        for (int p = i; p <= n; ++p) t.factors[0].letters.push_back(w.letters[p - 1]);
                        t.factors[0].letters.push_back(w.module);
                        for (int p = 1; p <= k; ++p) t.factors[0].letters.push_back(w.letters[p - 1]);
                        t.factors[0].letters.push_back(u);
                        for (int p = j; p <= i - 1; ++p) t.factors[0].letters.push_back(w.letters[p - 1]);
                        t.factors[1].module = v;
                        for (int p = k + 1; p <= j - 1; ++p) t.factors[1].letters.push_back(w.letters[p - 1]);
                        out.add(t, coeff * cd * Scalar::from_int(F, reorder_sign(degs, target)));
                    }
        }
    }
    return out;
}

// expansion of x . y: emits (word, letter-count of x, sign)
static void dot_terms(const FrobCtx& fx, const BarWord& wx, const BarWord& wy, const Scalar& coeff,
                      const std::function<void(const BarWord&, int, const Scalar&)>& emit) {
    const DgAlgebra& A = fx.A;
    const Field& F = A.field;
    const int p = wx.weight();
    int eps_a = shat_sum_letters(A, wx.letters);
    int s_move = A.degree[wy.module] * eps_a;
    SparseVec prod = A.mul(wx.module, wy.module);
    for (const auto& [e, cm] : prod.entries()) {
        for (const auto& [jk, cd] : fx.F.cop[e]) {
            if (jk.second == A.unit) continue;  // (ab)'' is a letter
            int s2 = (A.degree[jk.second] - 1) * eps_a;
            BarWord o;
            o.module = jk.first;
            o.letters = wx.letters;
            o.letters.push_back(jk.second);
            o.letters.insert(o.letters.end(), wy.letters.begin(), wy.letters.end());
            emit(o, p, coeff * cm * cd * Scalar::from_int(F, ksign(s_move + s2)));
        }
    }
}

Chain dot(const FrobCtx& fx, const Chain& x, const Chain& y) {
    Chain out;
    for (const auto& [wx, cx] : x.terms)
        for (const auto& [wy, cy] : y.terms) {
            if (wx.weight() + wy.weight() + 1 > fx.cutoff) throw CutoffExceeded("dot");
            dot_terms(fx, wx, wy, cx * cy, [&](const BarWord& w, int, const Scalar& s) { out.add(w, s); });
        }
    return out;
}

Chain B_split(const FrobCtx& fx, const Chain& x, const Chain& y, int part) {
    const DgAlgebra& A = fx.A;
    Chain out;
    for (const auto& [wx, cx] : x.terms)
        for (const auto& [wy, cy] : y.terms) {
            if (wx.weight() + wy.weight() + 2 > fx.cutoff) throw CutoffExceeded("B_split");
            dot_terms(fx, wx, wy, cx * cy, [&](const BarWord& w, int ppos, const Scalar& s) {
                b_terms(A, w, s, [&](int i, const BarWord& rot, const Scalar& bs) {
                    int this_part = (i >= ppos + 1) ? 1 : 2;
                    if (this_part == part) out.add(rot, bs);
                });
            });
        }
    return out;
}

Chain circ_chain(const FrobCtx& fx, const Chain& x, const Chain& y) {
    const DgAlgebra& A = fx.A;
    const Field& F = A.field;
    Chain out;
    for (const auto& [wx, cx] : x.terms)
        for (const auto& [wy, cy] : y.terms) {
            if (wx.weight() + wy.weight() + 2 > fx.cutoff) throw CutoffExceeded("circ_chain");
            const int n = wx.weight(), m = wy.weight();
            for (const auto& [jk, cd] : fx.F.cop[wx.module]) {
                if (jk.first == A.unit || jk.second == A.unit) continue;
                // source: [a0'(letter), a0''(letter), x-letters, b0(M), y-letters]
                std::vector<int> degs = {A.degree[jk.first] - 1, A.degree[jk.second] - 1};
                for (int l : wx.letters) degs.push_back(A.degree[l] - 1);
                degs.push_back(A.degree[wy.module]);
                for (int l : wy.letters) degs.push_back(A.degree[l] - 1);
                for (int i = 0; i <= m; ++i) {
                    std::vector<int> target;
                    target.push_back(2 + n);
                    for (int q = 1; q <= i; ++q) target.push_back(2 + n + q);
                    target.push_back(0);
                    for (int q = 1; q <= n; ++q) target.push_back(1 + q);
                    target.push_back(1);
                    for (int q = i + 1; q <= m; ++q) target.push_back(2 + n + q);
                    BarWord o;
                    o.module = wy.module;
                    for (int q = 1; q <= i; ++q) o.letters.push_back(wy.letters[q - 1]);
                    o.letters.push_back(jk.first);
                    for (int q = 1; q <= n; ++q) o.letters.push_back(wx.letters[q - 1]);
                    o.letters.push_back(jk.second);
                    for (int q = i + 1; q <= m; ++q) o.letters.push_back(wy.letters[q - 1]);
                    out.add(o, cx * cy * cd * Scalar::from_int(F, reorder_sign(degs, target)));
                }
            }
        }
    return out;
}

Chain loop_bracket(const FrobCtx& fx, const Chain& x, const Chain& y) {
    const DgAlgebra& A = fx.A;
    Chain out = circ_chain(fx, x, y);
    std::map<int, Chain> xs, ys;
    for (const auto& [w, c] : x.terms) xs[word_shat_deg(A, w)].add(w, c);
    for (const auto& [w, c] : y.terms) ys[word_shat_deg(A, w)].add(w, c);
    for (const auto& [dx, px] : xs)
        for (const auto& [dy, py] : ys)
            out.add_scaled(circ_chain(fx, py, px), Scalar::from_int(A.field, -ksign(dx * dy)));
    return out;
}

Chain homotopy_H1(const FrobCtx& fx, const Chain& x, const Chain& y) {
    const DgAlgebra& A = fx.A;
    const Field& F = A.field;
    Chain out;
    for (const auto& [wx, cx] : x.terms)
        for (const auto& [wy, cy] : y.terms) {
            if (wx.weight() + wy.weight() + 2 > fx.cutoff) throw CutoffExceeded("homotopy_H1");
            const int n = wx.weight(), m = wy.weight();
            int eps_a = shat_sum_letters(A, wx.letters);
            int s_move = A.degree[wy.module] * eps_a;
            SparseVec prod = A.mul(wx.module, wy.module);
            for (const auto& [e, cm] : prod.entries()) {
                for (const auto& [jk, cd] : fx.F.cop[e]) {
                    if (jk.first == A.unit || jk.second == A.unit) continue;
                    // source after merge at front: [(ab)'(letter), (ab)''(letter), x-letters, y-letters]
                    std::vector<int> degs = {A.degree[jk.first] - 1, A.degree[jk.second] - 1};
                    for (int l : wx.letters) degs.push_back(A.degree[l] - 1);
                    for (int l : wy.letters) degs.push_back(A.degree[l] - 1);
                    for (int i = 0; i <= n; ++i) {
                        // 1[a_{i+1}..a_n, (ab)', b_1..b_m, (ab)'', a_1..a_i]
                        std::vector<int> target;
                        for (int q = i + 1; q <= n; ++q) target.push_back(1 + q);
                        target.push_back(0);
                        for (int q = 1; q <= m; ++q) target.push_back(1 + n + q);
                        target.push_back(1);
                        for (int q = 1; q <= i; ++q) target.push_back(1 + q);
                        BarWord o;
                        o.module = A.unit;
                        for (int q = i + 1; q <= n; ++q) o.letters.push_back(wx.letters[q - 1]);
                        o.letters.push_back(jk.first);
                        for (int q = 1; q <= m; ++q) o.letters.push_back(wy.letters[q - 1]);
                        o.letters.push_back(jk.second);
                        for (int q = 1; q <= i; ++q) o.letters.push_back(wx.letters[q - 1]);
                        out.add(o, cx * cy * cm * cd * Scalar::from_int(F, ksign(s_move) * reorder_sign(degs, target)));
                    }
                }
            }
        }
    return out;
}

Chain homotopy_H2(const FrobCtx& fx, const Chain& x, const Chain& y) {
    const DgAlgebra& A = fx.A;
    const Field& F = A.field;
    Chain out;
    for (const auto& [wx, cx] : x.terms)
        for (const auto& [wy, cy] : y.terms) {
            if (wx.weight() + wy.weight() + 3 > fx.cutoff) throw CutoffExceeded("homotopy_H2");
            if (wy.module == A.unit) continue;  // b0 becomes a letter
            const int n = wx.weight(), m = wy.weight();
            for (const auto& [jk, cd] : fx.F.cop[wx.module]) {
                if (jk.first == A.unit || jk.second == A.unit) continue;
                // source: [a0'(letter), a0''(letter), x-letters, b0(letter), y-letters]
                std::vector<int> degs = {A.degree[jk.first] - 1, A.degree[jk.second] - 1};
                for (int l : wx.letters) degs.push_back(A.degree[l] - 1);
                degs.push_back(A.degree[wy.module] - 1);
                for (int l : wy.letters) degs.push_back(A.degree[l] - 1);
                for (int j = 0; j <= m; ++j)
                    for (int i = j; i <= m; ++i) {
                        // 1[b_{j+1}..b_i, a0', a_1..a_n, a0'', b_{i+1}..b_m, b0, b_1..b_j]
                        std::vector<int> target;
                        for (int q = j + 1; q <= i; ++q) target.push_back(2 + n + q);
                        target.push_back(0);
                        for (int q = 1; q <= n; ++q) target.push_back(1 + q);
                        target.push_back(1);
                        for (int q = i + 1; q <= m; ++q) target.push_back(2 + n + q);
                        target.push_back(2 + n);
                        for (int q = 1; q <= j; ++q) target.push_back(2 + n + q);
                        BarWord o;
                        o.module = A.unit;
                        for (int q = j + 1; q <= i; ++q) o.letters.push_back(wy.letters[q - 1]);
                        o.letters.push_back(jk.first);
                        for (int q = 1; q <= n; ++q) o.letters.push_back(wx.letters[q - 1]);
                        o.letters.push_back(jk.second);
                        for (int q = i + 1; q <= m; ++q) o.letters.push_back(wy.letters[q - 1]);
                        o.letters.push_back(wy.module);
                        for (int q = 1; q <= j; ++q) o.letters.push_back(wy.letters[q - 1]);
                        out.add(o, cx * cy * cd * Scalar::from_int(F, reorder_sign(degs, target)));
                    }
            }
        }
    return out;
}

Chain homotopy_H3(const FrobCtx& fx, const Chain& x, const Chain& y, const Chain& z) {
    const DgAlgebra& A = fx.A;
    const Field& F = A.field;
    Chain out;
    for (const auto& [wx, cx] : x.terms)
        for (const auto& [wy, cy] : y.terms)
            for (const auto& [wz, cz] : z.terms) {
                if (wx.weight() + wy.weight() + wz.weight() + 4 > fx.cutoff) throw CutoffExceeded("homotopy_H3");
                const int p = wx.weight(), nb = wy.weight(), mc = wz.weight();
                for (const auto& [b12, cb] : fx.F.cop[wy.module]) {
                    if (b12.first == A.unit || b12.second == A.unit) continue;
                    for (const auto& [c12, ccp] : fx.F.cop[wz.module]) {
                        if (c12.first == A.unit || c12.second == A.unit) continue;
                        // source: [a0(M), x-letters, b0'(l), b0''(l), y-letters, c0'(l), c0''(l), z-letters]
                        std::vector<int> degs;
                        degs.push_back(A.degree[wx.module]);
                        for (int l : wx.letters) degs.push_back(A.degree[l] - 1);
                        degs.push_back(A.degree[b12.first] - 1);
                        degs.push_back(A.degree[b12.second] - 1);
                        for (int l : wy.letters) degs.push_back(A.degree[l] - 1);
                        degs.push_back(A.degree[c12.first] - 1);
                        degs.push_back(A.degree[c12.second] - 1);
                        for (int l : wz.letters) degs.push_back(A.degree[l] - 1);
                        const int by0 = 1 + p, cz0 = 1 + p + 2 + nb;
                        for (int i = 0; i <= p; ++i)
                            for (int j = i; j <= p; ++j) {
                                // a0[a_1..a_i, b0', y.., b0'', a_{i+1}..a_j, c0', z.., c0'', a_{j+1}..a_p]
                                std::vector<int> target;
                                target.push_back(0);
                                for (int q = 1; q <= i; ++q) target.push_back(q);
                                target.push_back(by0);
                                for (int q = 1; q <= nb; ++q) target.push_back(by0 + 1 + q);
                                target.push_back(by0 + 1);
                                for (int q = i + 1; q <= j; ++q) target.push_back(q);
                                target.push_back(cz0);
                                for (int q = 1; q <= mc; ++q) target.push_back(cz0 + 1 + q);
                                target.push_back(cz0 + 1);
                                for (int q = j + 1; q <= p; ++q) target.push_back(q);
                                BarWord o;
                                o.module = wx.module;
                                for (int q = 1; q <= i; ++q) o.letters.push_back(wx.letters[q - 1]);
                                o.letters.push_back(b12.first);
                                for (int q = 1; q <= nb; ++q) o.letters.push_back(wy.letters[q - 1]);
                                o.letters.push_back(b12.second);
                                for (int q = i + 1; q <= j; ++q) o.letters.push_back(wx.letters[q - 1]);
                                o.letters.push_back(c12.first);
                                for (int q = 1; q <= mc; ++q) o.letters.push_back(wz.letters[q - 1]);
                                o.letters.push_back(c12.second);
                                for (int q = j + 1; q <= p; ++q) o.letters.push_back(wx.letters[q - 1]);
                                out.add(o, cx * cy * cz * cb * ccp * Scalar::from_int(F, reorder_sign(degs, target)));
                            }
                    }
                }
            }
    return out;
}

Chain cg_star(const FrobCtx& fx, const Chain& x, const Chain& y) {
    const DgAlgebra& A = fx.A;
    Chain out;
    for (const auto& [wx, cx] : x.terms) {
        if (wx.weight() >= 1) continue;  // zero on positive weight
        for (const auto& [jk, cd] : fx.F.cop[wx.module]) {
            for (const auto& [wy, cy] : y.terms) {
                SparseVec mod = A.mul(A.mul(jk.first, jk.second), SparseVec::unit(wy.module, Scalar::one(A.field)));
                for (const auto& [v, cm] : mod.entries()) {
                    BarWord o;
                    o.module = v;
                    o.letters = wy.letters;
                    out.add(o, cx * cy * cd * cm);
                }
            }
        }
    }
    return out;
}

Cochain star_cochain(const FrobCtx& fx, const Bimodule& dual, const Cochain& f, const Cochain& g) {
    const DgAlgebra& A = fx.A;
    const Field& F = A.field;
    HochschildCtx dctx{A, dual};
    std::set<int> kfs, kgs;
    for (const auto& [w, c] : f.terms) kfs.insert(w.arity());
    for (const auto& [w, c] : g.terms) kgs.insert(w.arity());
    std::vector<BarWord> support;
    for (int kf : kfs)
        for (int kg : kgs)
            for (const auto& w : words_of_weight(dctx, kf + kg)) support.push_back(w);
    std::sort(support.begin(), support.end());
    support.erase(std::unique(support.begin(), support.end()), support.end());

    std::map<int, Cochain> gs;
    for (const auto& [w, c] : g.terms) gs[coword_degree(A, dual, w)].add(w, c);

    return cochain_from_functional(dctx, support, [&](const BarWord& w) {
        Chain cw;
        cw.add(w, Scalar::one(F));
        TensorChain th = theta(fx, cw);
        Scalar acc = Scalar::zero(F);
        for (const auto& [tw, tc] : th.terms) {
            Chain t1, t2;
            t1.add(tw.factors[0], Scalar::one(F));
            t2.add(tw.factors[1], Scalar::one(F));
            int sh1 = word_shat_deg(A, tw.factors[0]);
            Scalar v1 = eval_pairing(dctx, f, t1);
            if (v1.is_zero()) continue;
            for (const auto& [dg, gpart] : gs) {
                Scalar v2 = eval_pairing(dctx, gpart, t2);
                acc += tc * v1 * v2 * Scalar::from_int(F, ksign(dg * sh1));
            }
        }
        return acc;
    });
}

TensorChain apply_to_factor(const DgAlgebra& a, const Bimodule& m, const TensorChain& t, int idx, int op_degree,
                            const std::function<Chain(const Chain&)>& op) {
    (void)m;
    TensorChain out;
    for (const auto& [tw, c] : t.terms) {
        int prefix = 0;
        for (int i = 0; i < idx; ++i) prefix += word_shat_deg(a, tw.factors[i]);
        Chain fc;
        fc.add(tw.factors[idx], Scalar::one(a.field));
        Chain img = op(fc);
        for (const auto& [w2, c2] : img.terms) {
            TensorWord o = tw;
            o.factors[idx] = w2;
            out.add(o, c * c2 * Scalar::from_int(a.field, ksign(op_degree * prefix)));
        }
    }
    return out;
}

// ---------------------------------------------------------------------------
// identity suites

namespace {

std::vector<TensorWord> tensor_words_of_weight(const HochschildCtx& ctx, int factors, int total) {
    std::vector<TensorWord> out;
    std::function<void(int, int, TensorWord&)> rec = [&](int idx, int left, TensorWord& acc) {
        if (idx == factors - 1) {
            for (const auto& w : words_of_weight(ctx, left)) {
                acc.factors.push_back(w);
                out.push_back(acc);
                acc.factors.pop_back();
            }
            return;
        }
        for (int take = 0; take <= left; ++take)
            for (const auto& w : words_of_weight(ctx, take)) {
                acc.factors.push_back(w);
                rec(idx + 1, left - take, acc);
                acc.factors.pop_back();
            }
    };
    TensorWord acc;
    rec(0, total, acc);
    std::sort(out.begin(), out.end());
    return out;
}

// Find H with D_T(H(u)) - H(D u) = T(u) for all basis words up to
// max_weight, solving the whole coupled system jointly with exact
// elimination. Existence of H is the machine witness for an
// "is homotopic to" statement.
bool solve_homotopy(const DgAlgebra& A, int factors, int deltaW,
                    const std::function<TensorChain(const Chain&)>& T, int max_weight) {
    Bimodule MA = as_bimodule(A);
    HochschildCtx ctx{A, MA};
    const Field& F = A.field;
    auto D = [&](const Chain& c) { return chain_differential(ctx, c); };
    std::map<int, std::vector<TensorWord>> tw_by_weight;
    for (int w = 0; w <= max_weight + deltaW; ++w) tw_by_weight[w] = tensor_words_of_weight(ctx, factors, w);

    std::vector<BarWord> inputs;
    std::map<BarWord, int> input_base;
    int nvar = 0;
    for (int w = 0; w <= max_weight; ++w)
        for (const auto& u : words_of_weight(ctx, w)) {
            inputs.push_back(u);
            input_base[u] = nvar;
            nvar += static_cast<int>(tw_by_weight[w + deltaW].size());
        }

    std::vector<SparseVec> rows;
    std::vector<Scalar> rhs_vals;
    for (const auto& u : inputs) {
        const int w = u.weight();
        Chain c;
        c.add(u, Scalar::one(F));
        std::map<TensorWord, SparseVec> eq;
        const auto& src = tw_by_weight[w + deltaW];
        for (std::size_t j = 0; j < src.size(); ++j) {
            TensorChain tc;
            tc.add(src[j], Scalar::one(F));
            TensorChain img;
            for (int i = 0; i < factors; ++i) img.add(apply_to_factor(A, MA, tc, i, 1, D));
            for (const auto& [tw, sc] : img.terms) eq[tw].add(input_base[u] + static_cast<int>(j), sc);
        }
        for (const auto& [dw, sc] : D(c).terms) {
            const auto& src2 = tw_by_weight[dw.weight() + deltaW];
            for (std::size_t j = 0; j < src2.size(); ++j) eq[src2[j]].add(input_base[dw] + static_cast<int>(j), -sc);
        }
        TensorChain t = T(c);
        std::set<TensorWord> all;
        for (const auto& [tw, sc] : eq) all.insert(tw);
        for (const auto& [tw, sc] : t.terms) all.insert(tw);
        for (const auto& tw : all) {
            rows.push_back(eq.count(tw) ? eq[tw] : SparseVec());
            auto it = t.terms.find(tw);
            rhs_vals.push_back(it != t.terms.end() ? it->second : Scalar::zero(F));
        }
    }
    SparseMatrix M(static_cast<int>(rows.size()), nvar, F);
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (const auto& [j, v] : rows[i].entries()) M.add(static_cast<int>(i), j, v);
    ColumnSolver cs(F);
    for (int j = 0; j < nvar; ++j) cs.insert(M.col(j));
    SparseVec b;
    for (std::size_t i = 0; i < rhs_vals.size(); ++i) b.add(static_cast<int>(i), rhs_vals[i]);
    return cs.solve(b).has_value();
}

// Weaker but wider check: the operator combination sends every homology
// class to zero (its value on each cycle representative is a boundary in
// the tensor complex).
bool operator_kills_homology(const DgAlgebra& A, int factors, int deltaT,
                             const std::function<TensorChain(const Chain&)>& T, int max_weight) {
    Bimodule MA = as_bimodule(A);
    HochschildCtx ctx{A, MA};
    const Field& F = A.field;
    auto D = [&](const Chain& c) { return chain_differential(ctx, c); };
    for (int w = 0; w <= max_weight; ++w) {
        int wout = w + deltaT;
        auto basis = tensor_words_of_weight(ctx, factors, wout);
        auto up = tensor_words_of_weight(ctx, factors, wout + 1);
        std::map<TensorWord, int> index;
        for (std::size_t i = 0; i < basis.size(); ++i) index[basis[i]] = static_cast<int>(i);
        SparseMatrix d_in(static_cast<int>(basis.size()), static_cast<int>(up.size()), F);
        for (std::size_t j = 0; j < up.size(); ++j) {
            TensorChain tc;
            tc.add(up[j], Scalar::one(F));
            TensorChain img;
            for (int i = 0; i < factors; ++i) img.add(apply_to_factor(A, MA, tc, i, 1, D));
            for (const auto& [tw, sc] : img.terms) d_in.add(index.at(tw), static_cast<int>(j), sc);
        }
        ColumnSolver boundaries(F);
        for (int j = 0; j < d_in.cols(); ++j) boundaries.insert(d_in.col(j));
        // cycles of the chain complex at weight w
        ComplexBlock blk = weight_homology(ctx, w);
        for (const auto& z : blk.sq.cycle_basis) {
            TensorChain img = T(vec_to_chain(z, blk.basis));
            SparseVec v;
            for (const auto& [tw, sc] : img.terms) v.add(index.at(tw), sc);
            if (!boundaries.in_span(v)) return false;
        }
    }
    return true;
}

int wshd(const DgAlgebra& a, const BarWord& w) {
    int s = a.degree[w.module];
    for (int l : w.letters) s += a.degree[l] - 1;
    return s;
}

TensorChain tau_swap_shifted(const DgAlgebra& a, const TensorChain& t, int m) {
    TensorChain out;
    for (const auto& [tw, c] : t.terms) {
        int e = (wshd(a, tw.factors[0]) + m) * (wshd(a, tw.factors[1]) + m);
        TensorWord o;
        o.factors = {tw.factors[1], tw.factors[0]};
        out.add(o, c * Scalar::from_int(a.field, ksign(e)));
    }
    return out;
}

}  // namespace

Report frobenius_homotopy_suite(const FrobCtx& fx, int max_weight) {
    const DgAlgebra& A = fx.A;
    const Field& F = A.field;
    const int mfr = fx.F.degree;
    Bimodule MA = as_bimodule(A);
    HochschildCtx ctx{A, MA};
    Report rep;
    rep.title = "frobenius-homotopies";
    auto D = [&](const Chain& c) { return chain_differential(ctx, c); };
    auto DT2 = [&](const TensorChain& t) {
        TensorChain o = apply_to_factor(A, MA, t, 0, 1, D);
        o.add(apply_to_factor(A, MA, t, 1, 1, D));
        return o;
    };

    // theta coassociativity: (theta x id) theta = (id x theta) theta
    {
        bool ok = true;
        std::string w;
        for (int wgt = 0; wgt <= max_weight && ok; ++wgt)
            for (const auto& bw : words_of_weight(ctx, wgt)) {
                Chain c;
                c.add(bw, Scalar::one(F));
                TensorChain th = theta(fx, c);
                TensorChain lhs, rhs;
                for (const auto& [tw, tc] : th.terms) {
                    Chain f0;
                    f0.add(tw.factors[0], Scalar::one(F));
                    for (const auto& [qw, qc] : theta(fx, f0).terms) {
                        TensorWord o;
                        o.factors = {qw.factors[0], qw.factors[1], tw.factors[1]};
                        lhs.add(o, tc * qc);
                    }
                    Chain f1;
                    f1.add(tw.factors[1], Scalar::one(F));
                    for (const auto& [qw, qc] : theta(fx, f1).terms) {
                        TensorWord o;
                        o.factors = {tw.factors[0], qw.factors[0], qw.factors[1]};
                        rhs.add(o, tc * qc);
                    }
                }
                lhs.add_scaled(rhs, Scalar::from_int(F, -1));
                if (!lhs.is_zero()) { ok = false; w = word_str(A, MA, bw); }
            }
        rep.add("theta_coassociative", ok, w);
    }

    // h witnesses cocommutativity: h D + D_T h + theta - tau_m theta = 0
    {
        bool ok = true;
        std::string w;
        for (int wgt = 0; wgt <= max_weight && ok; ++wgt)
            for (const auto& bw : words_of_weight(ctx, wgt)) {
                Chain c;
                c.add(bw, Scalar::one(F));
                TensorChain acc = cocom_h(fx, D(c));
                acc.add(DT2(cocom_h(fx, c)));
                acc.add(theta(fx, c));
                acc.add_scaled(tau_swap_shifted(A, theta(fx, c), mfr), Scalar::from_int(F, -1));
                if (!acc.is_zero()) { ok = false; w = word_str(A, MA, bw); }
            }
        rep.add("h_cocommutativity_identity", ok, w);
    }

    // (theta B)_1 + (theta B)_2 = theta B
    {
        bool ok = true;
        std::string w;
        for (int wgt = 0; wgt <= max_weight && ok; ++wgt)
            for (const auto& bw : words_of_weight(ctx, wgt)) {
                Chain c;
                c.add(bw, Scalar::one(F));
                TensorChain acc = theta_B_part(fx, c, 1);
                acc.add(theta_B_part(fx, c, 2));
                acc.add_scaled(theta(fx, connes_B(A, c, fx.cutoff)), Scalar::from_int(F, -1));
                if (!acc.is_zero()) { ok = false; w = word_str(A, MA, bw); }
            }
        rep.add("theta_B_splitting", ok, w);
    }

    // co-Leibniz: [D,H] = (id x tau)(tau h x id) theta + (id x tau h) theta
    //                       - (theta x id) tau h   (exact homotopy found by
    // joint elimination; the wider weight range checks classes)
    {
        auto T = [&](const Chain& c) {
            TensorChain th = theta(fx, c);
            TensorChain p2;
            for (const auto& [tw, tc] : th.terms) {
                Chain f0;
                f0.add(tw.factors[0], Scalar::one(F));
                for (const auto& [hw, hc] : tau_swap(A, MA, cocom_h(fx, f0)).terms) {
                    TensorWord o;
                    o.factors = {hw.factors[0], hw.factors[1], tw.factors[1]};
                    p2.add(o, tc * hc);
                }
            }
            TensorChain p2s;
            for (const auto& [tw, tc] : p2.terms) {
                int e = wshd(A, tw.factors[1]) * wshd(A, tw.factors[2]);
                TensorWord o;
                o.factors = {tw.factors[0], tw.factors[2], tw.factors[1]};
                p2s.add(o, tc * Scalar::from_int(F, ksign(e)));
            }
            TensorChain p3;
            for (const auto& [tw, tc] : th.terms) {
                Chain f1;
                f1.add(tw.factors[1], Scalar::one(F));
                int prefix = wshd(A, tw.factors[0]);
                for (const auto& [hw, hc] : tau_swap(A, MA, cocom_h(fx, f1)).terms) {
                    TensorWord o;
                    o.factors = {tw.factors[0], hw.factors[0], hw.factors[1]};
                    p3.add(o, tc * hc * Scalar::from_int(F, ksign((mfr - 1) * prefix)));
                }
            }
            TensorChain p4;
            for (const auto& [tw, tc] : tau_swap(A, MA, cocom_h(fx, c)).terms) {
                Chain f0;
                f0.add(tw.factors[0], Scalar::one(F));
                for (const auto& [qw, qc] : theta(fx, f0).terms) {
                    TensorWord o;
                    o.factors = {qw.factors[0], qw.factors[1], tw.factors[1]};
                    p4.add(o, tc * qc);
                }
            }
            TensorChain out = p2s;
            out.add(p3);
            out.add_scaled(p4, Scalar::from_int(F, -1));
            return out;
        };
        bool witness = solve_homotopy(A, 3, 2, T, std::min(max_weight, 2));
        rep.add("coleibniz_homotopy_witness", witness, witness ? "" : "no homotopy found");
        bool classes = operator_kills_homology(A, 3, 1, T, std::min(max_weight, 3));
        rep.add("coleibniz_vanishes_on_classes", classes);
    }

    // compatibility of B and S: [D,H] = h + (theta B)_2 - (B x id) theta
    {
        auto T = [&](const Chain& c) {
            TensorChain out = cocom_h(fx, c);
            out.add(theta_B_part(fx, c, 2));
            out.add_scaled(apply_to_factor(A, MA, theta(fx, c), 0, -1,
                                           [&](const Chain& q) { return connes_B(A, q, fx.cutoff); }),
                           Scalar::from_int(F, -1));
            return out;
        };
        bool witness = solve_homotopy(A, 2, 2, T, std::min(max_weight, 3));
        rep.add("compat_B_S_homotopy_witness", witness, witness ? "" : "no homotopy found");
        bool classes = operator_kills_homology(A, 2, 1, T, std::min(max_weight, 4));
        rep.add("compat_B_S_vanishes_on_classes", classes);
    }

    // reduced word pairs for the dot-family identities
    auto reduced_words = [&](int wgt) {
        std::vector<BarWord> out;
        for (const auto& w : words_of_weight(ctx, wgt))
            if (w.module != A.unit) out.push_back(w);
        return out;
    };

    bool assoc = true, chainmap = true, h1ok = true, h2ok = true, h3ok = true, leib = true, bsplit = true;
    std::string w_assoc, w_cm, w_h1, w_h2, w_h3, w_leib, w_bs;
    for (int w1 = 0; w1 <= max_weight - 1; ++w1)
        for (int w2 = 0; w1 + w2 <= max_weight - 1; ++w2) {
            for (const auto& bx : reduced_words(w1))
                for (const auto& by : reduced_words(w2)) {
                    Chain x, y;
                    x.add(bx, Scalar::one(F));
                    y.add(by, Scalar::one(F));
                    int sx = wshd(A, bx), sy = wshd(A, by);

                    // chain map on the reduced complex
                    Chain cm = D(dot(fx, x, y));
                    cm.add(dot(fx, D(x), y));
                    cm.add_scaled(dot(fx, x, D(y)), Scalar::from_int(F, ksign(sx)));
                    if (!cm.is_zero()) { chainmap = false; w_cm = word_str(A, MA, bx) + "," + word_str(A, MA, by); }

                    // H1: commutativity witness
                    Chain a = D(homotopy_H1(fx, x, y));
                    a.add_scaled(homotopy_H1(fx, D(x), y), Scalar::from_int(F, -1));
                    a.add_scaled(homotopy_H1(fx, x, D(y)), Scalar::from_int(F, -ksign(sx)));
                    a.add_scaled(dot(fx, x, y), Scalar::from_int(F, -1));
                    a.add_scaled(dot(fx, y, x), Scalar::from_int(F, -ksign(sx * sy)));
                    if (!a.is_zero()) { h1ok = false; w_h1 = word_str(A, MA, bx) + "," + word_str(A, MA, by); }

                    // H2: x o y ~ B_1(x,y) - x . By
                    Chain b = D(homotopy_H2(fx, x, y));
                    b.add_scaled(homotopy_H2(fx, D(x), y), Scalar::from_int(F, -1));
                    b.add_scaled(homotopy_H2(fx, x, D(y)), Scalar::from_int(F, ksign(sx)));
                    b.add_scaled(circ_chain(fx, x, y), Scalar::from_int(F, ksign(sx)));
                    b.add_scaled(B_split(fx, x, y, 1), Scalar::from_int(F, -ksign(sx)));
                    b.add_scaled(dot(fx, x, connes_B(A, y, fx.cutoff)), Scalar::from_int(F, -ksign(mfr)));
                    if (!b.is_zero()) { h2ok = false; w_h2 = word_str(A, MA, bx) + "," + word_str(A, MA, by); }

                    // B split recomposition
                    Chain bs = B_split(fx, x, y, 1);
                    bs.add(B_split(fx, x, y, 2));
                    bs.add_scaled(connes_B(A, dot(fx, x, y), fx.cutoff), Scalar::from_int(F, -1));
                    if (!bs.is_zero()) { bsplit = false; w_bs = word_str(A, MA, bx) + "," + word_str(A, MA, by); }

                    for (int w3 = 0; w1 + w2 + w3 <= max_weight - 1; ++w3)
                        for (const auto& bz : reduced_words(w3)) {
                            Chain z;
                            z.add(bz, Scalar::one(F));
                            int sz = wshd(A, bz);
                            // strict associativity
                            Chain as = dot(fx, dot(fx, x, y), z);
                            as.add_scaled(dot(fx, x, dot(fx, y, z)), Scalar::from_int(F, -1));
                            if (!as.is_zero()) { assoc = false; w_assoc = "triple"; }
                            // strict circ Leibniz
                            Chain cl = circ_chain(fx, x, dot(fx, y, z));
                            cl.add_scaled(dot(fx, circ_chain(fx, x, y), z), Scalar::from_int(F, -ksign(sx)));
                            cl.add_scaled(dot(fx, y, circ_chain(fx, x, z)), Scalar::from_int(F, -ksign(sx + sx * sy)));
                            if (!cl.is_zero()) { leib = false; w_leib = "triple"; }
                            // H3
                            Chain h3 = D(homotopy_H3(fx, x, y, z));
                            h3.add_scaled(homotopy_H3(fx, D(x), y, z), Scalar::from_int(F, -1));
                            h3.add_scaled(homotopy_H3(fx, x, D(y), z), Scalar::from_int(F, -ksign(sx)));
                            h3.add_scaled(homotopy_H3(fx, x, y, D(z)), Scalar::from_int(F, -ksign(sx + sy)));
                            h3.add_scaled(circ_chain(fx, dot(fx, y, z), x), Scalar::from_int(F, ksign(sx * (sy + sz))));
                            h3.add_scaled(dot(fx, circ_chain(fx, y, x), z), Scalar::from_int(F, -ksign(sx * sy)));
                            h3.add_scaled(dot(fx, y, circ_chain(fx, z, x)), Scalar::from_int(F, -ksign(sx * (sy + sz))));
                            if (!h3.is_zero()) { h3ok = false; w_h3 = "triple"; }
                        }
                }
        }
    rep.add("dot_strictly_associative", assoc, w_assoc);
    rep.add("dot_chain_map_reduced", chainmap, w_cm);
    rep.add("H1_commutativity_witness", h1ok, w_h1);
    rep.add("H2_circ_witness", h2ok, w_h2);
    rep.add("H3_leibniz_witness", h3ok, w_h3);
    rep.add("circ_leibniz_strict", leib, w_leib);
    rep.add("B_split_recomposition", bsplit, w_bs);
    return rep;
}


Report hh_bv_suite(ClassCtx& cc, const FrobeniusData& fd, int max_weight) {
    const DgAlgebra& A = cc.A;
    const Field& F = A.field;
    Bimodule MA = as_bimodule(A);
    HochschildCtx ctx{A, MA};
    FrobCtx fx{A, fd, 2 * max_weight + 8};
    const int mfr = fd.degree;
    Report rep;
    rep.title = "hh-bv";

    // reduced classes by weight, with suspended degrees
    struct RC {
        Chain rep;
        int w, sh;
    };
    std::vector<RC> classes;
    std::map<int, ComplexBlock> red;
    for (int w = 0; w <= max_weight; ++w) {
        red[w] = reduced_weight_homology(ctx, w);
        for (const auto& r : red[w].sq.class_reps) {
            Chain c = vec_to_chain(r, red[w].basis);
            int sh = c.terms.empty() ? 0 : wshd(A, c.terms.begin()->first);
            classes.push_back({c, w, sh});
        }
    }
    // lazy boundary-span testers per weight (no homology assembly needed)
    std::map<int, std::pair<std::map<BarWord, int>, ColumnSolver>> btest;
    auto is_boundary_full = [&](int w, const Chain& c) {
        auto it = btest.find(w);
        if (it == btest.end()) {
            std::map<BarWord, int> index;
            auto basis = words_of_weight(ctx, w);
            for (std::size_t i = 0; i < basis.size(); ++i) index[basis[i]] = static_cast<int>(i);
            ColumnSolver cs(F);
            for (const auto& u : words_of_weight(ctx, w + 1)) {
                Chain cu;
                cu.add(u, Scalar::one(F));
                SparseVec col;
                for (const auto& [bw, sc] : chain_differential(ctx, cu).terms) col.add(index.at(bw), sc);
                cs.insert(col);
            }
            it = btest.emplace(w, std::make_pair(std::move(index), std::move(cs))).first;
        }
        SparseVec v;
        for (const auto& [bw, sc] : c.terms) v.add(it->second.first.at(bw), sc);
        return it->second.second.in_span(v);
    };
    const int topw = 3 * max_weight + 4;
    auto B = [&](const Chain& c) { return connes_B(A, c, fx.cutoff); };

    // bracket deviation on classes:
    // x o y - (-1)^{sx sy} y o x - B(x.y) - Bx.y - (-1)^{sx+m} x.By ~ 0
    bool dev = true;
    std::string wdev;
    for (const auto& X : classes)
        for (const auto& Y : classes) {
            Chain combo = circ_chain(fx, X.rep, Y.rep);
            combo.add_scaled(circ_chain(fx, Y.rep, X.rep), Scalar::from_int(F, -ksign(X.sh * Y.sh)));
            combo.add_scaled(B(dot(fx, X.rep, Y.rep)), Scalar::from_int(F, -1));
            combo.add_scaled(dot(fx, B(X.rep), Y.rep), Scalar::from_int(F, -1));
            combo.add_scaled(dot(fx, X.rep, B(Y.rep)), Scalar::from_int(F, -ksign(X.sh + mfr)));
            if (!is_boundary_full(X.w + Y.w + 2, combo)) {
                dev = false;
                wdev = "weights " + std::to_string(X.w) + "," + std::to_string(Y.w);
            }
        }
    rep.add("loop_bracket_is_B_deviation", dev, wdev);

    // seven term for (HH_*, dot, B) on class triples
    bool seven = true;
    std::string w7;
    for (const auto& X : classes)
        for (const auto& Y : classes)
            for (const auto& Z : classes) {
                if (X.w + Y.w + Z.w > max_weight + 1) continue;
                if (X.w + Y.w + Z.w + 3 > topw - 1) continue;
                Chain xy = dot(fx, X.rep, Y.rep), yz = dot(fx, Y.rep, Z.rep), xz = dot(fx, X.rep, Z.rep);
                Chain combo = B(dot(fx, xy, Z.rep));
                combo.add(dot(fx, B(xy), Z.rep));
                combo.add_scaled(dot(fx, X.rep, B(yz)), Scalar::from_int(F, -1));
                combo.add(dot(fx, Y.rep, B(xz)));
                combo.add(dot(fx, B(X.rep), yz));
                combo.add_scaled(dot(fx, dot(fx, X.rep, B(Y.rep)), Z.rep), Scalar::from_int(F, ksign(X.sh)));
                combo.add_scaled(dot(fx, xy, B(Z.rep)), Scalar::from_int(F, -1));
                if (!is_boundary_full(X.w + Y.w + Z.w + 3, combo)) {
                    seven = false;
                    w7 = "weights " + std::to_string(X.w) + "," + std::to_string(Y.w) + "," + std::to_string(Z.w);
                }
            }
    rep.add("seven_term_dot_B", seven, w7);

    // coBV relation for (HH^*(A,A^vee), star, B^vee) on class triples
    bool cobv = true;
    std::string wc;
    {
        Bimodule MD = dualize(A);
        struct CF {
            Cochain f;
            int k, d;
        };
        std::vector<CF> dcls;
        for (int k = 0; k <= std::min(max_weight, 2); ++k)
            for (const auto& f : cc.d_classes(k)) {
                int d = 0;
                bool have = false;
                for (const auto& [w, c] : f.terms)
                    if (!have) { d = coword_degree(A, MD, w); have = true; }
                dcls.push_back({f, k, d});
            }
        auto bvee_cls = [&](int arity, const Cochain& f) {
            if (arity == 0) return Cochain{};
            Cochain img = connes_B_dual(A, MD, f, fx.cutoff);
            auto coords = class_of_d_cochain(cc, arity - 1, img);
            auto reps = cc.d_classes(arity - 1);
            Cochain out;
            for (std::size_t i = 0; i < coords.size(); ++i) out.add_scaled(reps[i], coords[i]);
            return out;
        };
        for (const auto& X : dcls)
            for (const auto& Y : dcls)
                for (const auto& Z : dcls) {
                    int ka = X.k + Y.k + Z.k;
                    if (ka - 1 < 0 || ka > 4) continue;
                    Cochain fg = star_cochain(fx, MD, X.f, Y.f);
                    Cochain gh = star_cochain(fx, MD, Y.f, Z.f);
                    Cochain fh = star_cochain(fx, MD, X.f, Z.f);
                    Cochain fgh = star_cochain(fx, MD, fg, Z.f);
                    auto lhs = class_of_d_cochain(cc, ka - 1, bvee_cls(ka, fgh));
                    std::vector<std::pair<Cochain, int>> terms = {
                        {star_cochain(fx, MD, bvee_cls(X.k + Y.k, fg), Z.f), Z.d},
                        {star_cochain(fx, MD, X.f, bvee_cls(Y.k + Z.k, gh)), X.d * Y.d + mfr},
                        {star_cochain(fx, MD, Y.f, bvee_cls(X.k + Z.k, fh)), mfr * (X.d + Y.d)},
                        {star_cochain(fx, MD, star_cochain(fx, MD, bvee_cls(X.k, X.f), Y.f), Z.f), X.d + Z.d},
                        {star_cochain(fx, MD, star_cochain(fx, MD, X.f, bvee_cls(Y.k, Y.f)), Z.f), 1 + X.d + Z.d},
                        {star_cochain(fx, MD, fg, bvee_cls(Z.k, Z.f)), Z.d}};
                    std::vector<Scalar> rhs(lhs.size(), Scalar::zero(F));
                    for (const auto& [t, e] : terms) {
                        auto coords = class_of_d_cochain(cc, ka - 1, t);
                        for (std::size_t i = 0; i < coords.size(); ++i)
                            rhs[i] += coords[i] * Scalar::from_int(F, ksign(e));
                    }
                    for (std::size_t i = 0; i < lhs.size(); ++i)
                        if (!(lhs[i] == rhs[i])) {
                            cobv = false;
                            wc = "arities " + std::to_string(X.k) + "," + std::to_string(Y.k) + "," + std::to_string(Z.k);
                        }
                }
    }
    rep.add("cobv_star_Bvee", cobv, wc);
    return rep;
}

}  // namespace hoch
