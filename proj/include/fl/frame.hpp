#ifndef FL_FRAME_HPP
#define FL_FRAME_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "fl/formula.hpp"
#include "fl/lattice.hpp"

namespace fl {

// A set of states as a bitmask over 0..size-1.
using Prop = uint64_t;

// Relational frame (X, <|) with rel[x] = {y | x <| y}, read "x is open to y".
struct Frame {
    int size = 0;
    std::vector<uint64_t> rel;    // rel[x] bit y: x <| y
    std::vector<uint64_t> preds;  // preds[x] bit y: y <| x (derived)
    std::vector<std::string> labels;

    static Frame make(int size, const std::vector<std::pair<int, int>> &open_pairs,
                      bool reflexive = false);
    void finish();  // recomputes preds from rel
    uint64_t universe() const { return size == 64 ? ~0ULL : ((1ULL << size) - 1); }
    bool open_to(int x, int y) const { return (rel[x] >> y) & 1; }

    std::string label(int x) const {
        return x < static_cast<int>(labels.size()) ? labels[x] : std::to_string(x);
    }
};

Prop closure(const Frame &F, Prop A);
Prop neg_prop(const Frame &F, Prop A);                 // ~A = {x | no y <| x is in A}
Prop imp_prop(const Frame &F, Prop A, Prop B);         // A -> B (the arrow on fixpoints)
Prop cond_prop(const Frame &F, Prop A, Prop B);        // A ->> B = A -> (A & B)
Prop neg_rel_prop(const Frame &F, Prop A, Prop Fix);   // negation relative to a fixpoint
bool is_fixpoint(const Frame &F, Prop A);

bool absurd(const Frame &F, int x);
Prop absurd_states(const Frame &F);

bool pre_refines(const Frame &F, int x, int y);
bool post_refines(const Frame &F, int x, int y);
bool refines(const Frame &F, int x, int y);
bool compossible_with(const Frame &F, int x, int y);

enum class FrameCondition {
    Reflexive,
    Symmetric,
    Pseudosymmetric,
    StronglyPseudosymmetric,
    WeaklyCompossible,
    Compossible,
    Corr4b,
    RightPreInterpolation,
    LeftPreInterpolation,
    LeftPostExtendability,
    ImpCorr0b,
};

bool frame_condition(const Frame &F, FrameCondition which);
std::optional<FrameCondition> frame_condition_from_string(const std::string &s);
const char *to_string(FrameCondition c);

// All closure fixpoints via next-closure, in ascending bitmask order.
std::vector<Prop> fixpoints(const Frame &F);
// Brute-force oracle, only sensible for small frames.
std::vector<Prop> fixpoints_naive(const Frame &F);

// The complete lattice of fixpoints, with the negation the frame induces.
struct FixpointLattice {
    BoundedLattice L;
    std::vector<Prop> elements;  // elements[i] is the fixpoint for lattice index i
    NegationOp neg;              // ~ acting on fixpoint indices
    int index_of(Prop A) const;
};
FixpointLattice fixpoint_lattice(const Frame &F);

// ---------- models and forcing ----------

struct RelationalModel {
    Frame frame;
    std::map<std::string, Prop> valuation;  // atom -> fixpoint
    // optional first-order part
    int domain_size = 0;
    std::map<std::pair<std::string, std::vector<int>>, Prop> pred_valuation;
};

using Assignment = std::map<std::string, int>;

bool force(const RelationalModel &M, int x, const Formula &f);
bool force(const RelationalModel &M, int x, const Formula &f, const Assignment &g);
Prop extension(const RelationalModel &M, const Formula &f);
Prop extension(const RelationalModel &M, const Formula &f, const Assignment &g);

// ---------- correspondence sweeps ----------

struct CorrespondenceReport {
    long long frames_checked = 0;
    std::vector<std::string> violations;  // expected empty
    bool ok() const { return violations.empty(); }
};

// which: "corr1".."corr4" (negation axioms) or "impcorr1".."impcorr4"
// (implication axioms). Checks (a) <=> (b) on every frame with at most
// max_size states.
CorrespondenceReport correspondence_test(const std::string &which, int max_size, int jobs = 1);

}  // namespace fl

#endif
