#ifndef FL_LATTICE_HPP
#define FL_LATTICE_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "fl/formula.hpp"

namespace fl {

// Finite bounded lattice on elements 0..n-1. leq is the full order table;
// meet/join are total tables; bottom/top are element indices.
struct BoundedLattice {
    int n = 0;
    std::vector<uint64_t> leq_rows;  // leq_rows[a] bit b set iff a <= b
    std::vector<uint8_t> meet, join; // n*n tables
    int bottom = 0, top = 0;

    bool leq(int a, int b) const { return (leq_rows[a] >> b) & 1; }
    int mt(int a, int b) const { return meet[a * n + b]; }
    int jn(int a, int b) const { return join[a * n + b]; }

    // Builds tables from an order relation; returns nullopt if not a bounded lattice.
    static std::optional<BoundedLattice> from_leq(int n, const std::vector<uint64_t> &leq_rows);

    // Exhaustive sanity check of the lattice laws (absorption etc.).
    bool laws_hold() const;

    std::vector<int> join_irreducibles() const;
    std::vector<int> meet_irreducibles() const;

    // Relative pseudocomplement table a->b = max{c | a & c <= b}, if it exists everywhere.
    std::optional<std::vector<uint8_t>> heyting_implication() const;
    // The pseudocomplementation, if every element has one.
    std::optional<std::vector<uint8_t>> pseudocomplementation() const;

    bool distributive() const;
};

struct NegationOp {
    std::vector<uint8_t> table;  // element -> element
    int operator()(int a) const { return table[a]; }
};

struct ImplicationOp {
    int n = 0;
    std::vector<uint8_t> table;  // n*n, row-major
    int operator()(int a, int b) const { return table[a * n + b]; }
};

enum class NegClass { Pre, Proto, Ultraweak, Weak, Pseudo, Ortho };
enum class ImpClass {
    Preconditional,
    Preimplication,
    Protoimplication,
    UltraweakPseudoimplication,
    WeakPseudoimplication,
    RelativePseudocomplementation,
};

const char *to_string(NegClass c);
const char *to_string(ImpClass c);
std::optional<NegClass> neg_class_from_string(const std::string &s);

std::set<NegClass> classify_negation(const BoundedLattice &L, const NegationOp &neg);
std::set<ImpClass> classify_implication(const BoundedLattice &L, const ImplicationOp &imp);

// Elementary negation properties (the rows of the classification table).
bool neg_antitone(const BoundedLattice &L, const NegationOp &neg);
bool neg_semicomplementation(const BoundedLattice &L, const NegationOp &neg);
bool neg_dni(const BoundedLattice &L, const NegationOp &neg);  // a <= ~~a
bool neg_dne(const BoundedLattice &L, const NegationOp &neg);  // ~~a <= a

// A lattice expansion used by evaluation; imp optional.
struct Algebra {
    BoundedLattice L;
    NegationOp neg;
    std::optional<ImplicationOp> imp;
};

using Valuation = std::map<std::string, int>;

int evaluate(const Formula &f, const Valuation &theta, const Algebra &A);

// theta~(phi) <= theta~(psi) for every valuation into A (at most 4 distinct atoms).
bool holds(const Formula &phi, const Formula &psi, const Algebra &A);

// Any bounded lattice carries this weak pseudocomplementation.
NegationOp trivial_weak_pc(const BoundedLattice &L);

}  // namespace fl

#endif
