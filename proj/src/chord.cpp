#include "hoch/chord.hpp"
#include "hoch/jsonio.hpp"

#include <functional>
#include <set>
#include <sstream>
#include <fstream>
#include <json.hpp>

namespace hoch {

namespace {

int site_count_roles(const DiagSite& s) {
    return (s.chord_end >= 0 ? 1 : 0) + (s.out_label > 0 ? 1 : 0) + (s.in_label > 0 ? 1 : 0) + (s.unit_site ? 1 : 0);
}

bool site_special(const DiagSite& s) { return site_count_roles(s) > 0; }

// free segments of a circle: (segment index, from-site, to-site)
std::vector<int> free_segments(const DiagCircle& c) {
    std::vector<int> out;
    for (std::size_t i = 0; i < c.sites.size(); ++i)
        if (!c.sites[i].glued_after) out.push_back(static_cast<int>(i));
    return out;
}

}  // namespace

int combinatorial_degree(const ChordDiagram& d) {
    // components of (graph minus special points) minus the number of output
    // circles; chords have length zero so they vanish with their endpoints
    int comps = 0;
    for (const auto& c : d.circles) {
        int special = 0;
        for (const auto& s : c.sites)
            if (site_special(s)) ++special;
        // a circle with k special points falls into k arcs (1 comp if k = 0);
        // glued pairs do not create separate arcs
        int arcs = 0;
        for (std::size_t i = 0; i < c.sites.size(); ++i)
            if (!c.sites[i].glued_after) ++arcs;
        if (special == 0) arcs = 1;
        comps += std::max(arcs, 1);
        (void)special;
    }
    return comps - static_cast<int>(d.circles.size());
}

Report validate_diagram(const ChordDiagram& d) {
    Report rep;
    rep.title = "chord-diagram";

    bool labels_ok = true;
    std::set<int> outs, ins;
    for (const auto& c : d.circles)
        for (const auto& s : c.sites)
            if (s.out_label > 0) outs.insert(s.out_label);
    for (const auto& in : d.inputs) ins.insert(in.label);
    if (static_cast<int>(outs.size()) != d.n_outputs) labels_ok = false;
    for (int i = 1; i <= d.n_outputs; ++i)
        if (!outs.count(i)) labels_ok = false;
    if (static_cast<int>(ins.size()) != d.n_inputs) labels_ok = false;
    rep.add("labels", labels_ok);

    // chord endpoints attach to exactly one circle site
    bool ends_ok = true;
    std::map<int, int> end_count;
    for (const auto& c : d.circles)
        for (const auto& s : c.sites)
            if (s.chord_end >= 0) end_count[s.chord_end]++;
    for (const auto& t : d.trees)
        for (int e : t.ends)
            if (end_count[e] != 1) ends_ok = false;
    rep.add("chord_endpoints_embedded", ends_ok);

    // vertices at least trivalent unless they carry an input mark
    bool val_ok = true;
    for (const auto& t : d.trees) {
        for (const auto& v : t.vertices) {
            bool marked = false;
            for (const auto& sl : v.slots)
                if (!sl.empty() && sl[0] == 'M') marked = true;
            // an endpoint slot. sits on a circle, which contributes two more
            // incidences; internal vertices need 3 tree slots
            bool has_end = false;
            for (const auto& sl : v.slots)
                if (!sl.empty() && sl[0] == 'E') has_end = true;
            int valence = static_cast<int>(v.slots.size()) + (has_end ? 2 : 0);
            if (!marked && valence < 3) val_ok = false;
        }
    }
    rep.add("vertices_trivalent_or_marked", val_ok);

    // boundary components of the thickened surface = inputs + outputs;
    // each output circle is one boundary; each input walk is one boundary
    bool bd_ok = true;
    std::set<std::pair<int, int>> covered;
    for (const auto& in : d.inputs)
        for (const auto& a : in.arcs) {
            if (covered.count(a)) bd_ok = false;  // each free arc on one input boundary
            covered.insert(a);
        }
    for (std::size_t ci = 0; ci < d.circles.size(); ++ci)
        for (int seg : free_segments(d.circles[ci]))
            if (!covered.count({static_cast<int>(ci), seg})) bd_ok = false;
    rep.add("input_walks_cover_free_arcs", bd_ok);

    // Euler characteristic consistency: V - E + F = 2 - 2g per connected
    // component (components counted on the thickened surface)
    {
        int V = 0, E = 0;
        for (const auto& c : d.circles) {
            V += static_cast<int>(c.sites.size());
            E += static_cast<int>(c.sites.size());  // arcs (glued arcs count as length-zero edges)
        }
        for (const auto& t : d.trees) {
            V += static_cast<int>(t.vertices.size());
            int inner = 0;
            for (const auto& v : t.vertices)
                for (const auto& sl : v.slots)
                    if (!sl.empty() && sl[0] == 'I') ++inner;
            E += inner / 2 + static_cast<int>(t.ends.size());
        }
        int F = d.n_inputs + d.n_outputs;
        // connected components of the diagram graph
        // circles joined by trees
        std::vector<int> comp(d.circles.size());
        for (std::size_t i = 0; i < comp.size(); ++i) comp[i] = static_cast<int>(i);
        std::function<int(int)> find = [&](int x) { return comp[x] == x ? x : comp[x] = find(comp[x]); };
        std::map<int, int> end_circle;
        for (std::size_t ci = 0; ci < d.circles.size(); ++ci)
            for (const auto& s : d.circles[ci].sites)
                if (s.chord_end >= 0) end_circle[s.chord_end] = static_cast<int>(ci);
        for (const auto& t : d.trees)
            for (std::size_t k = 1; k < t.ends.size(); ++k)
                comp[find(end_circle[t.ends[k]])] = find(end_circle[t.ends[0]]);
        std::set<int> comps;
        for (std::size_t i = 0; i < comp.size(); ++i) comps.insert(find(static_cast<int>(i)));
        int C = static_cast<int>(comps.size());
        bool euler_ok = (V - E + F == 2 * C - 2 * d.genus);
        rep.add("euler_genus", euler_ok,
                euler_ok ? "" : "V-E+F = " + std::to_string(V - E + F) + ", expected " + std::to_string(2 * C - 2 * d.genus));
    }
    return rep;
}

ChordDiagram normalize_diagram(const ChordDiagram& d) {
    ChordDiagram out = d;
    for (auto& t : out.trees) {
        bool changed = true;
        while (changed) {
            changed = false;
            for (std::size_t vi = 0; vi < t.vertices.size() && !changed; ++vi) {
                auto& v = t.vertices[vi];
                bool marked = false;
                for (const auto& sl : v.slots)
                    if (!sl.empty() && sl[0] == 'M') marked = true;
                if (marked || v.slots.size() <= 3) continue;
                // split: first two slots move to a fresh vertex joined by a
                // new inner edge (leftmost applicable move)
                int new_edge = 0;
                for (const auto& vv : t.vertices)
                    for (const auto& sl : vv.slots)
                        if (!sl.empty() && sl[0] == 'I') new_edge = std::max(new_edge, std::stoi(sl.substr(1)) + 1);
                DiagTreeVertex nv;
                nv.slots = {v.slots[0], v.slots[1], "I" + std::to_string(new_edge)};
                std::vector<std::string> rest(v.slots.begin() + 2, v.slots.end());
                rest.push_back("I" + std::to_string(new_edge));
                v.slots = rest;
                t.vertices.push_back(nv);
                changed = true;
            }
        }
    }
    return out;
}

namespace {

struct PlacedSymbol {
    // a symbol to be arranged: either from an input chain or chord-created
    int src_index;   // position in the global source order
    int degree;      // suspended degree in its target role
    int basis = -1;  // basis index in A (for output emission)
};

// iterated coproduct of a basis vector: delta^(r): A -> A^{x r}
void iterated_coproduct(const FrobCtx& fx, const SparseVec& v, int r,
                        const std::function<void(const std::vector<int>&, const Scalar&)>& emit) {
    const DgAlgebra& A = fx.A;
    std::vector<int> picked(r);
    std::function<void(const SparseVec&, int, const Scalar&)> rec = [&](const SparseVec& cur, int pos, const Scalar& acc) {
        if (acc.is_zero()) return;
        if (pos == r - 1) {
            for (const auto& [i, c] : cur.entries()) {
                picked[pos] = i;
                emit(picked, acc * c);
            }
            return;
        }
        for (const auto& [i, c] : cur.entries()) {
            for (const auto& [jk, cd] : fx.F.cop[i]) {
                picked[pos] = jk.first;
                rec(SparseVec::unit(jk.second, Scalar::one(A.field)), pos + 1, acc * c * cd);
            }
        }
    };
    if (r == 1) {
        for (const auto& [i, c] : v.entries()) {
            picked[0] = i;
            emit(picked, c);
        }
        return;
    }
    rec(v, 0, Scalar::one(A.field));
}

}  // namespace

TensorChain act(const ChordDiagram& d, const FrobCtx& fx, const std::vector<Chain>& inputs) {
    const DgAlgebra& A = fx.A;
    const Field& F = A.field;
    if (static_cast<int>(inputs.size()) != d.n_inputs)
        throw ArityMismatch("act: diagram wants " + std::to_string(d.n_inputs) + " inputs");
    TensorChain out;

    // enumeration over basis words of the inputs
    std::function<void(std::size_t, std::vector<BarWord>&, const Scalar&)> loop_words =
        [&](std::size_t idx, std::vector<BarWord>& words, const Scalar& coeff) {
            if (idx < inputs.size()) {
                for (const auto& [w, c] : inputs[idx].terms) {
                    words.push_back(w);
                    loop_words(idx + 1, words, coeff * c);
                    words.pop_back();
                }
                return;
            }
            // source degrees and bases
            std::vector<int> src_deg;
            std::vector<int> src_basis;
            std::map<int, int> input_base;
            for (int lab = 1; lab <= d.n_inputs; ++lab) {
                const BarWord& w = words[lab - 1];
                input_base[lab] = static_cast<int>(src_deg.size());
                src_deg.push_back(A.degree[w.module]);
                src_basis.push_back(w.module);
                for (int l : w.letters) {
                    src_deg.push_back(A.degree[l] - 1);
                    src_basis.push_back(l);
                }
            }
            std::map<int, int> tree_base;  // tree -> base index of created symbols
            int nsrc = static_cast<int>(src_deg.size());
            for (std::size_t ti = 0; ti < d.trees.size(); ++ti) {
                tree_base[static_cast<int>(ti)] = nsrc;
                nsrc += static_cast<int>(d.trees[ti].ends.size());
            }

            std::map<std::pair<int, int>, std::pair<std::vector<int>, std::vector<int>>> arc_letters;
            std::vector<std::vector<int>> tree_syms(d.trees.size());

            std::function<void(const Scalar&)> emit = [&](const Scalar& acc) {
                // degrees of created symbols (letter role unless they land in
                // a module cluster; compute role during read-off, so collect
                // positions first)
                // read off outputs
                std::vector<int> target;          // source indices in read order
                std::vector<int> roles;           // 0 = module cluster, 1 = letter
                std::vector<std::vector<int>> out_mods(d.n_outputs);
                std::vector<std::vector<int>> out_lets(d.n_outputs);
                std::vector<std::vector<int>> out_mod_src(d.n_outputs),
                    out_let_src(d.n_outputs);

                auto symbol_at = [&](const DiagSite& s, int& bidx, int& sidx) {
                    // returns true if the site carries a symbol
                    if (s.unit_site) { bidx = A.unit; sidx = -1; return true; }
                    if (s.in_label > 0) {
                        bidx = words[s.in_label - 1].module;
                        sidx = input_base[s.in_label];
                        return true;
                    }
                    if (s.chord_end >= 0) {
                        // find its tree and endpoint position
                        for (std::size_t ti = 0; ti < d.trees.size(); ++ti) {
                            const auto& t = d.trees[ti];
                            for (std::size_t k = 0; k < t.ends.size(); ++k)
                                if (t.ends[k] == s.chord_end) {
                                    bidx = tree_syms[ti][k];
                                    sidx = tree_base[static_cast<int>(ti)] + static_cast<int>(k);
                                    return true;
                                }
                        }
                    }
                    return false;
                };

                for (std::size_t ci = 0; ci < d.circles.size(); ++ci) {
                    const auto& c = d.circles[ci];
                    int start = -1;
                    for (std::size_t j = 0; j < c.sites.size(); ++j)
                        if (c.sites[j].out_label > 0) start = static_cast<int>(j);
                    if (start < 0) return;  // every circle is an output circle
                    int oidx = c.sites[start].out_label - 1;
                    const int k = static_cast<int>(c.sites.size());
                    // module cluster: symbols at the out site and glued-следующие
                    bool in_cluster = true;
                    for (int step = 0; step < k; ++step) {
                        int j = (start + step) % k;
                        const DiagSite& s = c.sites[j];
                        int bidx = -1, sidx = -2;
                        bool has = symbol_at(s, bidx, sidx);
                        if (!has && step == 0) {
                            // bare output mark: a unit was placed (Step 2)
                            bidx = A.unit;
                            sidx = -1;
                            has = true;
                        }
                        if (has) {
                            if (in_cluster) {
                                out_mods[oidx].push_back(bidx);
                                out_mod_src[oidx].push_back(sidx);
                            } else {
                                out_lets[oidx].push_back(bidx);
                                out_let_src[oidx].push_back(sidx);
                            }
                        }
                        if (!s.glued_after) {
                            in_cluster = false;
                            auto it = arc_letters.find({static_cast<int>(ci), j});
                            if (it != arc_letters.end()) {
                                for (std::size_t p = 0; p < it->second.first.size(); ++p) {
                                    out_lets[oidx].push_back(it->second.first[p]);
                                    out_let_src[oidx].push_back(it->second.second[p]);
                                }
                            }
                        }
                    }
                }

                // assemble degrees (created symbols get their role from placement)
                std::vector<int> deg(nsrc), bas(nsrc, -1);
                for (int i = 0; i < static_cast<int>(src_deg.size()); ++i) {
                    deg[i] = src_deg[i];
                    bas[i] = src_basis[i];
                }
                for (std::size_t ti = 0; ti < d.trees.size(); ++ti)
                    for (std::size_t kk = 0; kk < tree_syms[ti].size(); ++kk) {
                        int si = tree_base[static_cast<int>(ti)] + static_cast<int>(kk);
                        bas[si] = tree_syms[ti][kk];
                        deg[si] = A.degree[tree_syms[ti][kk]];  // module role default
                    }
                // letters roles: adjust degrees
                std::vector<int> order;
                for (int o = 0; o < d.n_outputs; ++o) {
                    for (std::size_t p = 0; p < out_mod_src[o].size(); ++p)
                        if (out_mod_src[o][p] >= 0) order.push_back(out_mod_src[o][p]);
                    for (std::size_t p = 0; p < out_let_src[o].size(); ++p) {
                        int si = out_let_src[o][p];
                        if (si >= 0) {
                            deg[si] = A.degree[bas[si]] - 1;  // letter role
                            order.push_back(si);
                        }
                    }
                }
                // module-role adjustment: symbols in module clusters keep module degree
                for (int o = 0; o < d.n_outputs; ++o)
                    for (std::size_t p = 0; p < out_mod_src[o].size(); ++p)
                        if (out_mod_src[o][p] >= 0) deg[out_mod_src[o][p]] = A.degree[bas[out_mod_src[o][p]]];

                int sign = reorder_sign(deg, order);

                // build the tensor word (normalized: unit letters kill)
                TensorWord tw;
                tw.factors.resize(d.n_outputs);
                Scalar val = acc * Scalar::from_int(F, sign);
                for (int o = 0; o < d.n_outputs && !val.is_zero(); ++o) {
                    SparseVec mod = SparseVec::unit(A.unit, Scalar::one(F));
                    for (std::size_t p = 0; p < out_mods[o].size(); ++p)
                        mod = A.mul(mod, SparseVec::unit(out_mods[o][p], Scalar::one(F)));
                    // module may be a combination; expand below
                    // letters
                    std::vector<int> lets;
                    for (std::size_t p = 0; p < out_lets[o].size(); ++p) {
                        if (out_lets[o][p] == A.unit) { val = Scalar::zero(F); break; }
                        lets.push_back(out_lets[o][p]);
                    }
                    if (val.is_zero()) break;
                    const auto& es = mod.entries();
                    if (es.empty()) { val = Scalar::zero(F); break; }
                    if (es.size() != 1)
                        throw std::logic_error("act: multi-term module cluster not supported");
                    tw.factors[o].module = es.front().first;
                    val = val * es.front().second;
                    tw.factors[o].letters = lets;
                }
                if (!val.is_zero()) out.add(tw, val);
            };

            std::function<void(std::size_t, const Scalar&)> decorate = [&](std::size_t ti, const Scalar& acc) {
                if (ti == d.trees.size()) {
                    emit(acc);
                    return;
                }
                const auto& t = d.trees[ti];
                const int r = static_cast<int>(t.ends.size());
                SparseVec root;
                if (t.marks.empty()) {
                    root = SparseVec::unit(A.unit, Scalar::one(F));
                } else {
                    root = SparseVec::unit(words[t.marks[0] - 1].module, Scalar::one(F));
                    for (std::size_t kk = 1; kk < t.marks.size(); ++kk)
                        root = A.mul(root, SparseVec::unit(words[t.marks[kk] - 1].module, Scalar::one(F)));
                }
                iterated_coproduct(fx, root, r, [&](const std::vector<int>& picked, const Scalar& c2) {
                    tree_syms[ti] = picked;
                    decorate(ti + 1, acc * c2);
                });
            };

            std::function<void(std::size_t, const Scalar&)> distribute = [&](std::size_t in_idx, const Scalar& acc) {
                if (in_idx == d.inputs.size()) {
                    decorate(0, acc);
                    return;
                }
                const auto& in = d.inputs[in_idx];
                const BarWord& w = words[in.label - 1];
                const int n = w.weight();
                const int slots = static_cast<int>(in.arcs.size());
                if (slots == 0) {
                    if (n > 0) return;
                    distribute(in_idx + 1, acc);
                    return;
                }
                std::vector<int> cut(slots + 1, 0);
                std::function<void(int, int)> comp = [&](int s, int placed) {
                    if (s == slots) {
                        if (placed != n) return;
                        for (int kk = 0; kk < slots; ++kk) {
                            std::vector<int> lets, srcs;
                            for (int p = cut[kk]; p < cut[kk + 1]; ++p) {
                                lets.push_back(w.letters[p]);
                                srcs.push_back(input_base[in.label] + 1 + p);
                            }
                            arc_letters[in.arcs[kk]] = {lets, srcs};
                        }
                        distribute(in_idx + 1, acc);
                        for (int kk = 0; kk < slots; ++kk) arc_letters.erase(in.arcs[kk]);
                        return;
                    }
                    for (int take = 0; placed + take <= n; ++take) {
                        cut[s + 1] = placed + take;
                        comp(s + 1, placed + take);
                    }
                };
                comp(0, 0);
            };
            distribute(0, coeff);
        };

    std::vector<BarWord> words;
    loop_words(0, words, Scalar::one(F));
    return out;
}

ChordDiagram compose(const ChordDiagram& d1, const ChordDiagram& d2) {
    if (d1.n_outputs != d2.n_inputs) throw ArityMismatch("compose: outputs(d1) != inputs(d2)");
    // supported gluing: each input of d2 marked on a circle site; d1's output
    // circle is spliced into d2's circle, the identified marks becoming a
    // unit-insertion site (the output-mark Step-2 unit survives in the
    // composite read-off)
    ChordDiagram out = d2;
    out.n_inputs = d1.n_inputs;
    out.genus = d1.genus + d2.genus;
    out.inputs.clear();

    // only the (0,1,1) against (0,1,1) and identity splices are exercised by
    // the bundled library; implemented for inputs marked on circles
    if (d1.n_outputs != 1 || d2.n_inputs != 1 || !d1.trees.empty() || !d2.trees.empty())
        throw ArityMismatch("compose: only circle-type splices are supported");

    // locate d2's input mark
    int c2 = -1, s2 = -1;
    for (std::size_t ci = 0; ci < out.circles.size(); ++ci)
        for (std::size_t sj = 0; sj < out.circles[ci].sites.size(); ++sj)
            if (out.circles[ci].sites[sj].in_label == 1) { c2 = static_cast<int>(ci); s2 = static_cast<int>(sj); }
    if (c2 < 0) throw ArityMismatch("compose: d2 input mark not found");

    // d1's output circle, rotated to start at its output mark
    const DiagCircle& c1 = d1.circles[0];
    int start = -1;
    for (std::size_t j = 0; j < c1.sites.size(); ++j)
        if (c1.sites[j].out_label > 0) start = static_cast<int>(j);

    std::vector<DiagSite> spliced;
    const int k1 = static_cast<int>(c1.sites.size());
    for (int step = 0; step < k1; ++step) {
        DiagSite s = c1.sites[(start + step) % k1];
        if (step == 0) {
            // identified marks: output mark of d1 on the input mark of d2
            DiagSite u;
            u.unit_site = !(s.in_label > 0);  // unless d1's out coincides with its in
            u.in_label = 0;
            u.glued_after = s.glued_after;
            if (s.in_label > 0) u.in_label = s.in_label, u.unit_site = false;
            spliced.push_back(u);
        } else {
            spliced.push_back(s);
        }
    }
    auto& sites = out.circles[c2].sites;
    std::vector<DiagSite> rebuilt;
    for (std::size_t j = 0; j < sites.size(); ++j) {
        if (static_cast<int>(j) == s2) {
            for (const auto& s : spliced) rebuilt.push_back(s);
        } else {
            rebuilt.push_back(sites[j]);
        }
    }
    out.circles[c2].sites = rebuilt;
    // rebuild the single input walk: arcs of d2's walk with the spliced
    // segments of d1's walk at the splice position
    DiagInput in;
    in.label = 1;
    for (std::size_t j = 0; j < rebuilt.size(); ++j)
        if (!rebuilt[j].glued_after) in.arcs.push_back({c2, static_cast<int>(j)});
    out.inputs.push_back(in);
    return out;
}

std::vector<std::pair<int, ChordDiagram>> boundary(const ChordDiagram& d) {
    std::vector<std::pair<int, ChordDiagram>> out;
    int sign = 1;
    for (std::size_t ii = 0; ii < d.inputs.size(); ++ii) {
        for (std::size_t ai = 0; ai < d.inputs[ii].arcs.size(); ++ai) {
            auto [ci, seg] = d.inputs[ii].arcs[ai];
            const auto& c = d.circles[ci];
            if (c.sites.size() < 2) { continue; }  // self-loop arcs are not collapsible
            ChordDiagram collapsed = d;
            collapsed.circles[ci].sites[seg].glued_after = true;
            // drop the arc from the owning input walk
            auto& arcs = collapsed.inputs[ii].arcs;
            arcs.erase(arcs.begin() + static_cast<long>(ai));
            out.push_back({sign, collapsed});
            sign = -sign;
        }
    }
    return out;
}

// ---------------------------------------------------------------------------
// bundled library

ChordDiagram diagram_bv() {
    ChordDiagram d;
    d.genus = 0;
    d.n_outputs = 1;
    d.n_inputs = 1;
    DiagCircle c;
    DiagSite out_s, in_s;
    out_s.out_label = 1;
    in_s.in_label = 1;
    c.sites = {out_s, in_s};
    d.circles = {c};
    DiagInput in;
    in.label = 1;
    in.arcs = {{0, 1}, {0, 0}};  // from the input mark: arc 1 (in->out), arc 0 (out->in)
    d.inputs = {in};
    return d;
}

ChordDiagram diagram_identity() {
    ChordDiagram d;
    d.genus = 0;
    d.n_outputs = 1;
    d.n_inputs = 1;
    DiagCircle c;
    DiagSite s;
    s.out_label = 1;
    s.in_label = 1;
    c.sites = {s};
    d.circles = {c};
    DiagInput in;
    in.label = 1;
    in.arcs = {{0, 0}};
    d.inputs = {in};
    return d;
}

ChordDiagram diagram_coproduct() {
    ChordDiagram d;
    d.genus = 0;
    d.n_outputs = 2;
    d.n_inputs = 1;
    DiagCircle c0, c1;
    DiagSite s0, s1;
    s0.chord_end = 0;
    s0.out_label = 1;
    s1.chord_end = 1;
    s1.out_label = 2;
    c0.sites = {s0};
    c1.sites = {s1};
    d.circles = {c0, c1};
    DiagTree t;
    t.ends = {0, 1};
    t.marks = {1};
    t.vertices = {{{"E0", "E1", "M0"}}};
    d.trees = {t};
    DiagInput in;
    in.label = 1;
    in.tree = 0;
    in.arcs = {{0, 0}, {1, 0}};
    d.inputs = {in};
    return d;
}

ChordDiagram diagram_cocom() {
    ChordDiagram d;
    d.genus = 0;
    d.n_outputs = 2;
    d.n_inputs = 1;
    DiagCircle c0, c1;
    DiagSite mark, e0, e1;
    mark.out_label = 1;
    mark.in_label = 1;
    e0.chord_end = 0;
    e1.chord_end = 1;
    e1.out_label = 2;
    c0.sites = {mark, e0};
    c1.sites = {e1};
    d.circles = {c0, c1};
    DiagTree t;
    t.ends = {0, 1};
    t.vertices = {{{"E0", "E1"}}};
    d.trees = {t};
    DiagInput in;
    in.label = 1;
    in.arcs = {{0, 0}, {1, 0}, {0, 1}};  // in->e0, around c1, e0->in
    d.inputs = {in};
    return d;
}

ChordDiagram diagram_cohen_godin() {
    ChordDiagram d;
    d.genus = 0;
    d.n_outputs = 1;
    d.n_inputs = 2;
    DiagCircle c;
    DiagSite e0, e1, in2;
    e0.chord_end = 0;
    e0.out_label = 1;
    e0.glued_after = true;
    e1.chord_end = 1;
    e1.glued_after = true;
    in2.in_label = 2;
    c.sites = {e0, e1, in2};
    d.circles = {c};
    DiagTree t;
    t.ends = {0, 1};
    t.marks = {1};
    t.vertices = {{{"E0", "E1", "M0"}}};
    d.trees = {t};
    DiagInput i1, i2;
    i1.label = 1;
    i1.tree = 0;  // no free arcs: letters of input 1 cannot be placed
    i2.label = 2;
    i2.arcs = {{0, 2}};
    d.inputs = {i1, i2};
    return d;
}

ChordDiagram diagram_string_coproduct() {
    ChordDiagram d;
    d.genus = 0;
    d.n_outputs = 1;
    d.n_inputs = 2;
    DiagCircle c;
    DiagSite e0, e1;
    e0.chord_end = 0;
    e0.out_label = 1;
    e1.chord_end = 1;
    c.sites = {e0, e1};
    d.circles = {c};
    DiagTree t;
    t.ends = {0, 1};
    t.marks = {1, 2};
    t.vertices = {{{"E0", "M0", "I0"}}, {{"I0", "M1", "E1"}}};
    d.trees = {t};
    DiagInput i1, i2;
    i1.label = 1;
    i1.tree = 0;
    i1.arcs = {{0, 0}};  // x-letters between e0 and e1
    i2.label = 2;
    i2.tree = 0;
    i2.arcs = {{0, 1}};  // y-letters between e1 and e0
    d.inputs = {i1, i2};
    return d;
}

// ---------------------------------------------------------------------------
// JSON round trip

using nlohmann::json;

static void check_keys(const json& j, const std::set<std::string>& allowed, const std::string& where) {
    for (auto it = j.begin(); it != j.end(); ++it)
        if (!allowed.count(it.key())) throw SchemaError("unknown field '" + it.key() + "' in " + where);
}

ChordDiagram parse_diagram_json(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const std::exception& e) {
        throw SchemaError(std::string("invalid JSON: ") + e.what());
    }
    check_keys(j, {"type", "circles", "chords", "inputs"}, "diagram file");
    ChordDiagram d;
    auto t = j.at("type");
    d.genus = t.at(0).get<int>();
    d.n_outputs = t.at(1).get<int>();
    d.n_inputs = t.at(2).get<int>();
    for (const auto& cj : j.at("circles")) {
        check_keys(cj, {"sites"}, "circle");
        DiagCircle c;
        for (const auto& sj : cj.at("sites")) {
            check_keys(sj, {"chord_end", "out", "in", "unit", "glued_after"}, "site");
            DiagSite s;
            if (sj.contains("chord_end")) s.chord_end = sj.at("chord_end").get<int>();
            if (sj.contains("out")) s.out_label = sj.at("out").get<int>();
            if (sj.contains("in")) s.in_label = sj.at("in").get<int>();
            if (sj.contains("unit")) s.unit_site = sj.at("unit").get<bool>();
            if (sj.contains("glued_after")) s.glued_after = sj.at("glued_after").get<bool>();
            c.sites.push_back(s);
        }
        d.circles.push_back(c);
    }
    if (j.contains("chords"))
        for (const auto& tj : j.at("chords")) {
            check_keys(tj, {"ends", "marks", "vertices"}, "chord");
            DiagTree t2;
            for (const auto& e : tj.at("ends")) t2.ends.push_back(e.get<int>());
            if (tj.contains("marks"))
                for (const auto& m : tj.at("marks")) t2.marks.push_back(m.get<int>());
            if (tj.contains("vertices"))
                for (const auto& vj : tj.at("vertices")) {
                    DiagTreeVertex v;
                    for (const auto& sl : vj) v.slots.push_back(sl.get<std::string>());
                    t2.vertices.push_back(v);
                }
            d.trees.push_back(t2);
        }
    for (const auto& ij : j.at("inputs")) {
        check_keys(ij, {"label", "tree", "arcs"}, "input");
        DiagInput in;
        in.label = ij.at("label").get<int>();
        if (ij.contains("tree")) in.tree = ij.at("tree").get<int>();
        for (const auto& a : ij.at("arcs")) in.arcs.push_back({a.at(0).get<int>(), a.at(1).get<int>()});
        d.inputs.push_back(in);
    }
    return d;
}

ChordDiagram load_diagram_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw SchemaError("cannot open diagram file: " + path);
    std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    return parse_diagram_json(text);
}

std::string diagram_to_json(const ChordDiagram& d) {
    json j;
    j["type"] = {d.genus, d.n_outputs, d.n_inputs};
    json cs = json::array();
    for (const auto& c : d.circles) {
        json sites = json::array();
        for (const auto& s : c.sites) {
            json sj;
            if (s.chord_end >= 0) sj["chord_end"] = s.chord_end;
            if (s.out_label > 0) sj["out"] = s.out_label;
            if (s.in_label > 0) sj["in"] = s.in_label;
            if (s.unit_site) sj["unit"] = true;
            if (s.glued_after) sj["glued_after"] = true;
            sites.push_back(sj);
        }
        cs.push_back({{"sites", sites}});
    }
    j["circles"] = cs;
    json ts = json::array();
    for (const auto& t : d.trees) {
        json tj;
        tj["ends"] = t.ends;
        if (!t.marks.empty()) tj["marks"] = t.marks;
        json vs = json::array();
        for (const auto& v : t.vertices) vs.push_back(v.slots);
        if (!vs.empty()) tj["vertices"] = vs;
        ts.push_back(tj);
    }
    if (!ts.empty()) j["chords"] = ts;
    json is = json::array();
    for (const auto& in : d.inputs) {
        json ij;
        ij["label"] = in.label;
        if (in.tree >= 0) ij["tree"] = in.tree;
        json as = json::array();
        for (const auto& a : in.arcs) as.push_back({a.first, a.second});
        ij["arcs"] = as;
        is.push_back(ij);
    }
    j["inputs"] = is;
    return j.dump(2);
}

}  // namespace hoch
