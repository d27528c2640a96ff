#ifndef FL_REPRESENT_HPP
#define FL_REPRESENT_HPP

#include <optional>
#include <string>
#include <vector>

#include "fl/frame.hpp"
#include "fl/lattice.hpp"

namespace fl {

// Frame whose states are pairs of lattice elements, with (a,b) open to (c,d)
// iff c is not below b, plus the canonical embedding f(a) = {(x,y) | x <= a}.
struct PairFrame {
    Frame frame;
    std::vector<std::pair<int, int>> pairs;  // sorted, duplicates collapsed
    std::vector<Prop> embed;                 // embed[a] for each lattice element
};

// Frame of (filter, ideal) pairs; states store the principal generators.
struct FilterIdealFrame {
    Frame frame;
    std::vector<std::pair<int, int>> states;  // (f, i): filter = up f, ideal = down i
    std::vector<Prop> embed;                  // embed[a] = {(F,I) | a in F}
};

struct TwoRelationFrame {
    PairFrame base;
    Frame second;  // the sub-relation interpreting negation
};

bool is_join_dense(const BoundedLattice &L, const std::vector<int> &V);
bool is_meet_dense(const BoundedLattice &L, const std::vector<int> &Lambda);

// Separating-set conditions for a pair set over L.
bool separating(const BoundedLattice &L, const std::vector<std::pair<int, int>> &pairs);

PairFrame make_pair_frame(const BoundedLattice &L, std::vector<std::pair<int, int>> pairs);

// Representation of (L, ~) by the part of the theorem matching the stated
// class (Pre, Proto, Ultraweak or Weak). V must be join-dense, Lambda
// meet-dense; both default to all of L.
PairFrame frame_from_negation(const BoundedLattice &L, const NegationOp &neg, NegClass cls,
                              const std::vector<int> &V = {}, const std::vector<int> &Lambda = {});

// Representation of (L, ~) for merely antitone ~, via the negation relative
// to a distinguished fixpoint (returned alongside the frame).
struct AntitoneFrame {
    PairFrame pf;
    Prop fix;
};
AntitoneFrame frame_from_antitone(const BoundedLattice &L, const NegationOp &neg,
                                  const std::vector<int> &Lambda = {});

PairFrame frame_from_preconditional(const BoundedLattice &L, const ImplicationOp &imp);
TwoRelationFrame two_relation(const BoundedLattice &L, const ImplicationOp &imp,
                              const NegationOp &neg);

// Parts 1..5: preimplication, protoimplication, ultraweak pseudoimplication,
// weak pseudoimplication, relative pseudocomplementation.
PairFrame frame_from_preimplication(const BoundedLattice &L, const ImplicationOp &imp, int part,
                                    const std::vector<int> &V = {},
                                    const std::vector<int> &Lambda = {});

FilterIdealFrame filter_ideal(const BoundedLattice &L, const NegationOp &neg);
FilterIdealFrame filter_ideal(const BoundedLattice &L, const ImplicationOp &imp,
                              bool disjoint = false);

// How the expansion operations are interpreted on the frame side.
struct VerifySpec {
    const NegationOp *neg = nullptr;  // f(~a) == neg-side of frame
    enum class NegStyle { Plain, Relative, SecondRelation } neg_style = NegStyle::Plain;
    Prop relative_fix = 0;            // for Relative
    const Frame *second = nullptr;    // for SecondRelation
    const ImplicationOp *imp = nullptr;
    enum class ImpStyle { Arrow, DoubleArrow } imp_style = ImpStyle::Arrow;
};

struct EmbeddingReport {
    bool embedding_ok = true;
    bool iso_ok = true;
    size_t fixpoint_count = 0;
    std::vector<std::string> violations;
    bool ok(bool need_iso) const { return embedding_ok && (!need_iso || iso_ok); }
};

EmbeddingReport verify_embedding(const BoundedLattice &L, const std::vector<Prop> &embed,
                                 const Frame &frame, const VerifySpec &spec);
EmbeddingReport verify_iso(const BoundedLattice &L, const std::vector<Prop> &embed,
                           const Frame &frame, const VerifySpec &spec);

}  // namespace fl

#endif
