#ifndef FL_FITCH_HPP
#define FL_FITCH_HPP

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "fl/formula.hpp"

namespace fl {

enum class Rule : uint8_t {
    Hyp,
    AndI,
    AndE,
    OrI,
    OrE,
    NegI,
    NegE,
    Reit,
    RAA,
    ForallI,
    ForallE,
    ExistsI,
    ExistsE,
};

const char *to_string(Rule r);
std::optional<Rule> rule_from_string(const std::string &s);

struct Justification {
    Rule rule = Rule::Hyp;
    std::vector<int> cites;  // entry indices within the current node
};

// A proof is a sequence whose entries are justified formulas or nested
// proofs; the first entry is always the assumption.
struct ProofNode {
    struct Entry {
        bool is_line = true;
        Formula formula;                  // when is_line
        Justification just;               // when is_line
        std::shared_ptr<ProofNode> sub;   // when !is_line
    };
    std::vector<Entry> entries;

    static ProofNode::Entry line(Formula f, Justification j) {
        return Entry{true, std::move(f), std::move(j), nullptr};
    }
    static ProofNode::Entry subproof(ProofNode p) {
        return Entry{false, {}, {}, std::make_shared<ProofNode>(std::move(p))};
    }
};

// F = intro/elim rules only; O adds reductio; J adds reiteration; C adds both.
enum class Calculus : uint8_t { F, O, J, C };

struct LogicMode {
    Calculus calc = Calculus::F;
    bool first_order = false;

    bool allows_reit() const { return calc == Calculus::J || calc == Calculus::C; }
    bool allows_raa() const { return calc == Calculus::O || calc == Calculus::C; }
};

std::optional<Calculus> calculus_from_string(const std::string &s);
const char *to_string(Calculus c);

struct ProofError {
    std::vector<int> path;  // entry indices from the root
    std::string message;
};

struct CheckResult {
    bool ok = true;
    ProofError error;
};

CheckResult check_proof(const ProofNode &p, const LogicMode &mode);

Formula assumption(const ProofNode &p);
// Last entry if it is a formula; nullopt for a partial proof ending in a subproof.
std::optional<Formula> conclusion(const ProofNode &p);

// Proof constructions. Inputs must check under F with matching
// assumptions/conclusions; the results check under F.
ProofNode glue(const ProofNode &p1, const ProofNode &p2);
ProofNode pair_proof(const ProofNode &p1, const ProofNode &p2);
ProofNode cases_proof(const Formula &disj, const ProofNode &p1, const ProofNode &p2);
ProofNode contrapose(const ProofNode &p);
ProofNode dni(const Formula &phi);

}  // namespace fl

#endif
