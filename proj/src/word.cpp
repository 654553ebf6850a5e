#include "hoch/word.hpp"

#include <functional>
#include <sstream>

namespace hoch {

SparseVec Cochain::evaluate(const std::vector<int>& letters, const Field& f) const {
    (void)f;
    SparseVec out;
    for (const auto& [w, c] : terms)
        if (w.letters == letters) out.add(w.value, c);
    return out;
}

void add_word_expanded(Chain& out, const DgAlgebra& a, const Scalar& coeff,
                       const SparseVec& module_slot, const std::vector<SparseVec>& letter_slots) {
    if (coeff.is_zero()) return;
    const int n = static_cast<int>(letter_slots.size());
    std::vector<int> chosen(n, -1);
    std::function<void(int, const Scalar&)> rec = [&](int pos, const Scalar& acc) {
        if (acc.is_zero()) return;
        if (pos == n) {
            for (const auto& [mi, mc] : module_slot.entries()) {
                BarWord w;
                w.module = mi;
                w.letters = chosen;
                out.add(w, acc * mc);
            }
            return;
        }
        for (const auto& [li, lc] : letter_slots[pos].entries()) {
            if (li == a.unit) continue;  // normalized: unit letters annihilate
            chosen[pos] = li;
            rec(pos + 1, acc * lc);
        }
        chosen[pos] = -1;
    };
    rec(0, coeff);
}

void add_tensor_expanded(TensorChain& out, const DgAlgebra& a, const Scalar& coeff,
                         const std::vector<WordPattern>& factors) {
    if (coeff.is_zero()) return;
    std::vector<Chain> expanded(factors.size());
    for (std::size_t i = 0; i < factors.size(); ++i)
        add_word_expanded(expanded[i], a, Scalar::one(a.field), factors[i].module_slot, factors[i].letter_slots);
    TensorWord tw;
    tw.factors.resize(factors.size());
    std::function<void(std::size_t, const Scalar&)> rec = [&](std::size_t pos, const Scalar& acc) {
        if (acc.is_zero()) return;
        if (pos == factors.size()) {
            out.add(tw, acc);
            return;
        }
        for (const auto& [w, c] : expanded[pos].terms) {
            tw.factors[pos] = w;
            rec(pos + 1, acc * c);
        }
    };
    rec(0, coeff);
}

std::string word_str(const DgAlgebra& a, const Bimodule& m, const BarWord& w) {
    std::ostringstream os;
    os << m.names[w.module] << "[";
    for (std::size_t i = 0; i < w.letters.size(); ++i) os << (i ? "|" : "") << a.names[w.letters[i]];
    os << "]";
    return os.str();
}

std::string chain_str(const DgAlgebra& a, const Bimodule& m, const Chain& c) {
    if (c.terms.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [w, s] : c.terms) {
        os << (first ? "" : " + ") << s.str() << "*" << word_str(a, m, w);
        first = false;
    }
    return os.str();
}

}  // namespace hoch
