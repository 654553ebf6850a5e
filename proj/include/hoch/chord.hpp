#pragma once

#include "hoch/frobops.hpp"

namespace hoch {

struct ArityMismatch : std::runtime_error {
    explicit ArityMismatch(const std::string& w) : std::runtime_error(w) {}
};
struct CounitRequired : std::runtime_error {
    explicit CounitRequired(const std::string& w) : std::runtime_error(w) {}
};

// Sullivan chord diagrams, stored as output circles with typed sites plus
// chord trees; the input circles are recorded explicitly as the arcs their
// boundary walks traverse. A site may carry several roles at once (marked
// points and chord endpoints can coincide); consecutive sites may be glued
// (zero-length arc between them).
struct DiagSite {
    int chord_end = -1;   // endpoint id, or -1
    int out_label = 0;    // output index (1-based), or 0
    int in_label = 0;     // input mark (1-based), or 0
    bool unit_site = false;  // forced unit insertion (appears in composites)
    bool glued_after = false;  // no free arc between this site and the next
};

struct DiagCircle {
    std::vector<DiagSite> sites;  // cyclic, in orientation order
};

// chord tree: endpoints in planar cyclic order; marks = input labels rooted
// on the tree in multiplication order; vertices give the internal shape
struct DiagTreeVertex {
    std::vector<std::string> slots;  // cyclic: "E<k>" endpoint, "I<k>" inner edge, "M<k>" mark
};
struct DiagTree {
    std::vector<int> ends;    // endpoint ids in cyclic order
    std::vector<int> marks;   // input labels (1-based) in multiplication order
    std::vector<DiagTreeVertex> vertices;
};

struct DiagInput {
    int label = 0;
    int tree = -1;  // rooted on this chord tree (mark), or -1 when on a circle
    // free arcs traversed by this input's boundary walk, in order; an arc is
    // (circle, segment) where segment k lies between sites k and k+1
    std::vector<std::pair<int, int>> arcs;
};

struct ChordDiagram {
    int genus = 0;
    int n_outputs = 0;
    int n_inputs = 0;
    std::vector<DiagCircle> circles;
    std::vector<DiagTree> trees;
    std::vector<DiagInput> inputs;
};

Report validate_diagram(const ChordDiagram& d);
int combinatorial_degree(const ChordDiagram& d);

// slide moves until every unmarked vertex is trivalent and no input mark
// sits on a chord endpoint; deterministic order
ChordDiagram normalize_diagram(const ChordDiagram& d);

// Steps 1-5 action on m input chains
TensorChain act(const ChordDiagram& d, const FrobCtx& fx, const std::vector<Chain>& inputs);

// PROP composition: outputs of d1 glued to inputs of d2 (labelwise)
ChordDiagram compose(const ChordDiagram& d1, const ChordDiagram& d2);

// signed formal sum over collapsible input arcs
std::vector<std::pair<int, ChordDiagram>> boundary(const ChordDiagram& d);

// diagram file schema (strict)
ChordDiagram parse_diagram_json(const std::string& text);
ChordDiagram load_diagram_file(const std::string& path);
std::string diagram_to_json(const ChordDiagram& d);

// the five bundled diagrams
ChordDiagram diagram_bv();
ChordDiagram diagram_coproduct();
ChordDiagram diagram_cocom();
ChordDiagram diagram_cohen_godin();
ChordDiagram diagram_string_coproduct();
// identity (0,1,1) diagram: input and output marks coincide
ChordDiagram diagram_identity();

// act of every bundled diagram against its independent formula, the
// chain-map equation act(boundary d) = [D, act(d)], and B-squared composition
Report chord_library_suite(const FrobCtx& fx, int max_weight);

}  // namespace hoch
