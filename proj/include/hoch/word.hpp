#pragma once

#include <compare>
#include <map>
#include <vector>
#include "hoch/algebra.hpp"

namespace hoch {

struct CutoffExceeded : std::runtime_error {
    explicit CutoffExceeded(const std::string& w) : std::runtime_error(w) {}
};

// Normalized bar word m (x) [a_1|...|a_n]: module basis index plus letters in
// the non-unit part of the basis. Ordering: weight, then module, then letters.
struct BarWord {
    int module = 0;
    std::vector<int> letters;

    int weight() const { return static_cast<int>(letters.size()); }

    friend bool operator<(const BarWord& a, const BarWord& b) {
        if (a.letters.size() != b.letters.size()) return a.letters.size() < b.letters.size();
        if (a.module != b.module) return a.module < b.module;
        return a.letters < b.letters;
    }
    friend bool operator==(const BarWord& a, const BarWord& b) {
        return a.module == b.module && a.letters == b.letters;
    }
};

// suspended degrees: module slot carries |m|, letters carry |a|-1
inline int shat_letter(const DgAlgebra& a, int idx) { return a.degree[idx] - 1; }

inline int word_degree(const DgAlgebra& a, const Bimodule& m, const BarWord& w) {
    int d = m.degree[w.module];
    for (int l : w.letters) d += shat_letter(a, l);
    return d;
}

inline int word_shat(const DgAlgebra& a, const Bimodule& m, const BarWord& w) { return word_degree(a, m, w); }

struct Chain {
    std::map<BarWord, Scalar> terms;

    bool is_zero() const { return terms.empty(); }
    void add(const BarWord& w, const Scalar& c) {
        if (c.is_zero()) return;
        auto it = terms.find(w);
        if (it == terms.end()) terms.emplace(w, c);
        else {
            it->second += c;
            if (it->second.is_zero()) terms.erase(it);
        }
    }
    void add(const Chain& o) {
        for (const auto& [w, c] : o.terms) add(w, c);
    }
    void add_scaled(const Chain& o, const Scalar& s) {
        for (const auto& [w, c] : o.terms) add(w, c * s);
    }
    Chain scaled(const Scalar& s) const {
        Chain out;
        for (const auto& [w, c] : terms) out.add(w, c * s);
        return out;
    }
    int max_weight() const {
        int mw = 0;
        for (const auto& [w, c] : terms) mw = std::max(mw, w.weight());
        return mw;
    }
    friend bool operator==(const Chain& a, const Chain& b) { return a.terms == b.terms; }
};

struct TensorWord {
    std::vector<BarWord> factors;
    friend auto operator<=>(const TensorWord& a, const TensorWord& b) = default;
};

struct TensorChain {
    std::map<TensorWord, Scalar> terms;

    bool is_zero() const { return terms.empty(); }
    void add(const TensorWord& w, const Scalar& c) {
        if (c.is_zero()) return;
        auto it = terms.find(w);
        if (it == terms.end()) terms.emplace(w, c);
        else {
            it->second += c;
            if (it->second.is_zero()) terms.erase(it);
        }
    }
    void add(const TensorChain& o) {
        for (const auto& [w, c] : o.terms) add(w, c);
    }
    void add_scaled(const TensorChain& o, const Scalar& s) {
        for (const auto& [w, c] : o.terms) add(w, c * s);
    }
    friend bool operator==(const TensorChain& a, const TensorChain& b) { return a.terms == b.terms; }
};

// Cochain basis element: letter tuple over Abar plus a value basis index in M.
struct CoWord {
    std::vector<int> letters;
    int value = 0;

    int arity() const { return static_cast<int>(letters.size()); }
    friend bool operator<(const CoWord& a, const CoWord& b) {
        if (a.letters.size() != b.letters.size()) return a.letters.size() < b.letters.size();
        if (a.letters != b.letters) return a.letters < b.letters;
        return a.value < b.value;
    }
    friend bool operator==(const CoWord& a, const CoWord& b) = default;
};

// cochain degree of a basis cochain: |value| - sum of suspended letter degrees
inline int coword_degree(const DgAlgebra& a, const Bimodule& m, const CoWord& w) {
    int d = m.degree[w.value];
    for (int l : w.letters) d -= shat_letter(a, l);
    return d;
}

struct Cochain {
    std::map<CoWord, Scalar> terms;

    bool is_zero() const { return terms.empty(); }
    void add(const CoWord& w, const Scalar& c) {
        if (c.is_zero()) return;
        auto it = terms.find(w);
        if (it == terms.end()) terms.emplace(w, c);
        else {
            it->second += c;
            if (it->second.is_zero()) terms.erase(it);
        }
    }
    void add(const Cochain& o) {
        for (const auto& [w, c] : o.terms) add(w, c);
    }
    void add_scaled(const Cochain& o, const Scalar& s) {
        for (const auto& [w, c] : o.terms) add(w, c * s);
    }
    Cochain scaled(const Scalar& s) const {
        Cochain out;
        for (const auto& [w, c] : terms) out.add(w, c * s);
        return out;
    }
    // f(a_1..a_n) as a sparse value over M's basis
    SparseVec evaluate(const std::vector<int>& letters, const Field& f) const;
    int max_arity() const {
        int m = 0;
        for (const auto& [w, c] : terms) m = std::max(m, w.arity());
        return m;
    }
    friend bool operator==(const Cochain& a, const Cochain& b) { return a.terms == b.terms; }
};

// Multilinear word builder: module slot and letter slots given as sparse
// combinations; letter slots are projected to Abar (unit coordinate dropped),
// which implements the normalized complex.
void add_word_expanded(Chain& out, const DgAlgebra& a, const Scalar& coeff,
                       const SparseVec& module_slot, const std::vector<SparseVec>& letter_slots);

// Same, building one factor of a tensor word; expansion across factors is the
// caller's job via the helper below.
struct WordPattern {
    SparseVec module_slot;
    std::vector<SparseVec> letter_slots;
};
void add_tensor_expanded(TensorChain& out, const DgAlgebra& a, const Scalar& coeff,
                         const std::vector<WordPattern>& factors);

std::string word_str(const DgAlgebra& a, const Bimodule& m, const BarWord& w);
std::string chain_str(const DgAlgebra& a, const Bimodule& m, const Chain& c);

}  // namespace hoch
