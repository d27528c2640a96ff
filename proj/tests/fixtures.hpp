#ifndef FL_TEST_FIXTURES_HPP
#define FL_TEST_FIXTURES_HPP

#include <stdexcept>

#include "fl/frame.hpp"
#include "fl/lattice.hpp"

namespace fixtures {

// N5: 0 < y < x < 1 and 0 < z < 1, z incomparable with x,y.
// Elements: 0=0, 1=y, 2=x, 3=z, 4=1.
inline fl::BoundedLattice n5() {
    std::vector<uint64_t> rows(5, 0);
    auto le = [&](int a, int b) { rows[a] |= 1ULL << b; };
    for (int a = 0; a < 5; a++) {
        le(a, a);
        le(0, a);
        le(a, 4);
    }
    le(1, 2);
    auto L = fl::BoundedLattice::from_leq(5, rows);
    if (!L) throw std::logic_error("bad N5 fixture");
    return *L;
}

inline fl::NegationOp n5_pseudo() {  // ~y = z, ~x = z, ~z = x
    return fl::NegationOp{{4, 3, 3, 2, 0}};
}
inline fl::NegationOp n5_weak() {  // ~x = 0, ~y = z, ~z = y
    return fl::NegationOp{{4, 3, 0, 1, 0}};
}
inline fl::NegationOp n5_proto() {  // ~y = z, ~x = 0, ~z = x
    return fl::NegationOp{{4, 3, 0, 2, 0}};
}

// Benzene ring: 0 < a < l < 1 and 0 < b < r < 1.
// Elements: 0=0, 1=a, 2=b, 3=l, 4=r, 5=1.
inline fl::BoundedLattice o6() {
    std::vector<uint64_t> rows(6, 0);
    auto le = [&](int a, int b) { rows[a] |= 1ULL << b; };
    for (int a = 0; a < 6; a++) {
        le(a, a);
        le(0, a);
        le(a, 5);
    }
    le(1, 3);
    le(2, 4);
    auto L = fl::BoundedLattice::from_leq(6, rows);
    if (!L) throw std::logic_error("bad O6 fixture");
    return *L;
}

inline fl::NegationOp o6_ortho() {  // ~l = b, ~b = l, ~r = a, ~a = r
    return fl::NegationOp{{5, 4, 3, 2, 1, 0}};
}
inline fl::NegationOp o6_pseudo() {  // ~a = r, ~b = l, ~l = r, ~r = l
    return fl::NegationOp{{5, 4, 3, 4, 3, 0}};
}

// Reflexive worked-example frames (loops made explicit here).
// States x=0, y=1, z=2, w=3 unless noted.

// pseudosymmetric but not strongly pseudosymmetric; represents fixtures::n5
// with its pseudocomplementation
inline fl::Frame n5_frame_left() {
    return fl::Frame::make(
        4, {{0, 1}, {1, 0}, {2, 1}, {1, 3}, {3, 1}, {2, 3}, {3, 2}}, true);
}

// strongly pseudosymmetric, not symmetric; the frame of the distributivity
// counterexample model
inline fl::Frame n5_frame_middle() {
    return fl::Frame::make(
        4, {{0, 1}, {1, 0}, {1, 2}, {1, 3}, {3, 1}, {2, 3}, {3, 2}}, true);
}

// not pseudosymmetric; represents fixtures::n5 with its protocomplementation.
// States x=0, y=1, z=2.
inline fl::Frame n5_frame_right() { return fl::Frame::make(3, {{1, 0}, {2, 1}}, true); }

// symmetric; represents fixtures::o6 with its orthocomplementation
inline fl::Frame o6_frame_left() {
    return fl::Frame::make(4, {{0, 1}, {1, 0}, {1, 3}, {3, 1}, {3, 2}, {2, 3}}, true);
}

// strongly pseudosymmetric, not symmetric; represents fixtures::o6 with its
// pseudocomplementation. States x=0, y=1, v=2, u=3, z=4, w=5.
inline fl::Frame o6_frame_right() {
    return fl::Frame::make(6,
                           {{0, 1}, {1, 0}, {1, 2}, {2, 1}, {2, 3}, {3, 2}, {0, 3}, {3, 0},
                            {4, 5}, {5, 4}, {3, 5}, {5, 3}, {2, 4}, {4, 2}, {1, 3}, {3, 1},
                            {2, 5}, {5, 2}, {0, 2}, {4, 3}},
                           true);
}

// the distributivity countermodel: valuation on n5_frame_middle
inline fl::RelationalModel distributivity_model() {
    fl::RelationalModel M;
    M.frame = n5_frame_middle();
    M.valuation["p"] = 0b0011;  // {x, y}
    M.valuation["q"] = 0b0001;  // {x}
    M.valuation["r"] = 0b1100;  // {w, z}
    return M;
}

inline fl::ImplicationOp default_preimplication(const fl::BoundedLattice &L) {
    fl::ImplicationOp imp;
    imp.n = L.n;
    imp.table.assign(L.n * L.n, 0);
    for (int a = 0; a < L.n; a++)
        for (int b = 0; b < L.n; b++)
            imp.table[a * L.n + b] = static_cast<uint8_t>(L.leq(a, b) ? L.top : b);
    return imp;
}

inline fl::ImplicationOp default_preconditional(const fl::BoundedLattice &L) {
    fl::ImplicationOp imp;
    imp.n = L.n;
    imp.table.assign(L.n * L.n, 0);
    for (int a = 0; a < L.n; a++)
        for (int b = 0; b < L.n; b++)
            imp.table[a * L.n + b] = static_cast<uint8_t>(L.leq(a, b) ? L.top : L.mt(a, b));
    return imp;
}

inline fl::ImplicationOp heyting(const fl::BoundedLattice &L) {
    auto t = L.heyting_implication();
    if (!t) throw std::logic_error("lattice is not relatively pseudocomplemented");
    return fl::ImplicationOp{L.n, *t};
}

inline fl::ImplicationOp ortho_arrow(const fl::BoundedLattice &L, const fl::NegationOp &neg) {
    fl::ImplicationOp imp;
    imp.n = L.n;
    imp.table.assign(L.n * L.n, 0);
    for (int a = 0; a < L.n; a++)
        for (int b = 0; b < L.n; b++)
            imp.table[a * L.n + b] = static_cast<uint8_t>(neg(L.mt(a, neg(b))));
    return imp;
}

// three-element chain 0 < h < 1 with the fixed-point negation on the middle
inline fl::BoundedLattice chain3() {
    std::vector<uint64_t> rows = {0b111, 0b110, 0b100};
    return *fl::BoundedLattice::from_leq(3, rows);
}
inline fl::NegationOp kleene_neg() { return fl::NegationOp{{2, 1, 0}}; }

// the four-element Boolean lattice 0,a,b,1 (a,b incomparable)
inline fl::BoundedLattice diamond() {
    std::vector<uint64_t> rows = {0b1111, 0b1010, 0b1100, 0b1000};
    return *fl::BoundedLattice::from_leq(4, rows);
}

}  // namespace fixtures

#endif
