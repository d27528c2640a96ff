#ifndef FL_DECIDE_HPP
#define FL_DECIDE_HPP

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "fl/fitch.hpp"
#include "fl/formula.hpp"
#include "fl/frame.hpp"
#include "fl/lattice.hpp"

namespace fl {

// Restricted two-sided sequent: |gamma| <= 2, at most one succedent,
// |gamma| + |delta| <= 2.
struct Sequent {
    std::vector<Formula> gamma;  // multiset, size <= 2
    std::optional<Formula> delta;
};

std::string to_string(const Sequent &s);

// phi |- psi in the propositional logic selected by the calculus.
bool decide(const Formula &phi, const Formula &psi, Calculus calc);

// For the saturation-based calculi, every derivable restricted sequent over
// the subformula universe of the query (the whole saturation closure).
std::vector<Sequent> saturate_sequents(const Formula &phi, const Formula &psi, Calculus calc);

// The saturation closure printed one sequent per line, sorted.
std::vector<std::string> decide_trace(const Formula &phi, const Formula &psi, Calculus calc);

enum class CountermodelKind { AlgebraKind, FrameKind };

struct AlgebraWitness {
    Algebra algebra;
    Valuation valuation;
};
struct FrameWitness {
    RelationalModel model;
    int state;
};
using Witness = std::variant<AlgebraWitness, FrameWitness>;

// Bounded refutation search. For algebras: weak pseudocomplemented lattices up
// to max_size with some valuation where phi's value is not below psi's. For
// frames: pseudosymmetric reflexive models up to max_size with a state forcing
// phi but not psi. Returns the smallest witness in a deterministic order;
// absence is not a derivability verdict.
std::optional<Witness> countermodel(const Formula &phi, const Formula &psi, int max_size,
                                    CountermodelKind kind);

// (top |- phi|psi) implies (top |- phi or top |- psi), evaluated for this pair.
bool disjunction_property_check(const Formula &phi, const Formula &psi);

}  // namespace fl

#endif
