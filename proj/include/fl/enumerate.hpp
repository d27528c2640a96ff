#ifndef FL_ENUMERATE_HPP
#define FL_ENUMERATE_HPP

#include <cstdint>
#include <vector>

#include "fl/lattice.hpp"

namespace fl {

// One representative per isomorphism class, in canonical order.
std::vector<BoundedLattice> enumerate_lattices(int n);

// One representative per isomorphism class of pairs (L, ~) with ~ in the class.
std::vector<std::pair<BoundedLattice, NegationOp>> enumerate_expansions(int n, NegClass cls);

// Lattice automorphisms as permutations of 0..n-1.
std::vector<std::vector<int>> automorphisms(const BoundedLattice &L);

struct CensusRow {
    std::vector<long long> weak, lattices, pseudocomplemented, distributive, ortho;
};

// Counts for sizes 2..max_n (index 0 = size 2).
CensusRow census(int max_n);

}  // namespace fl

#endif
