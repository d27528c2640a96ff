#include "fl/lattice.hpp"

#include <algorithm>
#include <stdexcept>

namespace fl {

std::optional<BoundedLattice> BoundedLattice::from_leq(int n, const std::vector<uint64_t> &rows) {
    if (n < 1 || n > 64) return std::nullopt;
    BoundedLattice L;
    L.n = n;
    L.leq_rows = rows;
    // partial order
    for (int a = 0; a < n; a++) {
        if (!L.leq(a, a)) return std::nullopt;
        for (int b = 0; b < n; b++) {
            if (L.leq(a, b) && L.leq(b, a) && a != b) return std::nullopt;
            if (!L.leq(a, b)) continue;
            for (int c = 0; c < n; c++)
                if (L.leq(b, c) && !L.leq(a, c)) return std::nullopt;
        }
    }
    // bottom / top
    int bot = -1, top = -1;
    for (int a = 0; a < n; a++) {
        if (rows[a] == ((n == 64) ? ~0ULL : ((1ULL << n) - 1))) bot = a;
        bool istop = true;
        for (int b = 0; b < n; b++) istop &= L.leq(b, a);
        if (istop) top = a;
    }
    if (bot < 0 || top < 0) return std::nullopt;
    L.bottom = bot;
    L.top = top;
    // meets and joins must exist
    L.meet.assign(n * n, 0);
    L.join.assign(n * n, 0);
    for (int a = 0; a < n; a++)
        for (int b = 0; b < n; b++) {
            int m = -1, j = -1;
            for (int c = 0; c < n; c++) {
                if (L.leq(c, a) && L.leq(c, b)) {
                    if (m == -1 || L.leq(m, c)) {
                        if (m != -1 && !L.leq(m, c)) return std::nullopt;
                        m = c;
                    }
                }
            }
            // verify m is the greatest lower bound
            if (m == -1) return std::nullopt;
            for (int c = 0; c < n; c++)
                if (L.leq(c, a) && L.leq(c, b) && !L.leq(c, m)) return std::nullopt;
            for (int c = 0; c < n; c++) {
                if (L.leq(a, c) && L.leq(b, c)) {
                    if (j == -1 || L.leq(c, j)) j = c;
                }
            }
            if (j == -1) return std::nullopt;
            for (int c = 0; c < n; c++)
                if (L.leq(a, c) && L.leq(b, c) && !L.leq(j, c)) return std::nullopt;
            L.meet[a * n + b] = static_cast<uint8_t>(m);
            L.join[a * n + b] = static_cast<uint8_t>(j);
        }
    return L;
}

bool BoundedLattice::laws_hold() const {
    for (int a = 0; a < n; a++) {
        if (mt(a, a) != a || jn(a, a) != a) return false;
        if (!leq(bottom, a) || !leq(a, top)) return false;
        for (int b = 0; b < n; b++) {
            if (mt(a, b) != mt(b, a) || jn(a, b) != jn(b, a)) return false;
            if (mt(a, jn(a, b)) != a || jn(a, mt(a, b)) != a) return false;
            for (int c = 0; c < n; c++) {
                if (mt(mt(a, b), c) != mt(a, mt(b, c))) return false;
                if (jn(jn(a, b), c) != jn(a, jn(b, c))) return false;
            }
        }
    }
    return true;
}

std::vector<int> BoundedLattice::join_irreducibles() const {
    std::vector<int> out;
    for (int a = 0; a < n; a++) {
        if (a == bottom) continue;
        bool irr = true;
        for (int b = 0; b < n && irr; b++)
            for (int c = 0; c < n && irr; c++)
                if (b != a && c != a && jn(b, c) == a) irr = false;
        if (irr) out.push_back(a);
    }
    return out;
}

std::vector<int> BoundedLattice::meet_irreducibles() const {
    std::vector<int> out;
    for (int a = 0; a < n; a++) {
        if (a == top) continue;
        bool irr = true;
        for (int b = 0; b < n && irr; b++)
            for (int c = 0; c < n && irr; c++)
                if (b != a && c != a && mt(b, c) == a) irr = false;
        if (irr) out.push_back(a);
    }
    return out;
}

std::optional<std::vector<uint8_t>> BoundedLattice::heyting_implication() const {
    std::vector<uint8_t> t(n * n);
    for (int a = 0; a < n; a++)
        for (int b = 0; b < n; b++) {
            int best = -1;
            for (int c = 0; c < n; c++)
                if (leq(mt(a, c), b) && (best == -1 || leq(best, c))) best = c;
            if (best == -1) return std::nullopt;
            for (int c = 0; c < n; c++)
                if (leq(mt(a, c), b) && !leq(c, best)) return std::nullopt;
            t[a * n + b] = static_cast<uint8_t>(best);
        }
    return t;
}

std::optional<std::vector<uint8_t>> BoundedLattice::pseudocomplementation() const {
    std::vector<uint8_t> t(n);
    for (int a = 0; a < n; a++) {
        int best = -1;
        for (int c = 0; c < n; c++)
            if (mt(a, c) == bottom && (best == -1 || leq(best, c))) best = c;
        if (best == -1) return std::nullopt;
        for (int c = 0; c < n; c++)
            if (mt(a, c) == bottom && !leq(c, best)) return std::nullopt;
        t[a] = static_cast<uint8_t>(best);
    }
    return t;
}

bool BoundedLattice::distributive() const {
    for (int a = 0; a < n; a++)
        for (int b = 0; b < n; b++)
            for (int c = 0; c < n; c++)
                if (mt(a, jn(b, c)) != jn(mt(a, b), mt(a, c))) return false;
    return true;
}

// ---------- negation classes ----------

bool neg_antitone(const BoundedLattice &L, const NegationOp &neg) {
    for (int a = 0; a < L.n; a++)
        for (int b = 0; b < L.n; b++)
            if (L.leq(a, b) && !L.leq(neg(b), neg(a))) return false;
    return true;
}
bool neg_semicomplementation(const BoundedLattice &L, const NegationOp &neg) {
    for (int a = 0; a < L.n; a++)
        if (L.mt(a, neg(a)) != L.bottom) return false;
    return true;
}
bool neg_dni(const BoundedLattice &L, const NegationOp &neg) {
    for (int a = 0; a < L.n; a++)
        if (!L.leq(a, neg(neg(a)))) return false;
    return true;
}
bool neg_dne(const BoundedLattice &L, const NegationOp &neg) {
    for (int a = 0; a < L.n; a++)
        if (!L.leq(neg(neg(a)), a)) return false;
    return true;
}

std::set<NegClass> classify_negation(const BoundedLattice &L, const NegationOp &neg) {
    bool anti = neg_antitone(L, neg);
    bool n1 = neg(L.top) == L.bottom;
    bool n0 = neg(L.bottom) == L.top;
    bool semi = neg_semicomplementation(L, neg);
    bool dni = neg_dni(L, neg);
    bool dne = neg_dne(L, neg);
    bool pseudo_row = true;
    for (int a = 0; a < L.n && pseudo_row; a++)
        for (int b = 0; b < L.n && pseudo_row; b++)
            if (L.mt(a, b) == L.bottom && !L.leq(b, neg(a))) pseudo_row = false;

    std::set<NegClass> out;
    if (anti && n1) out.insert(NegClass::Pre);
    if (anti && semi && n0) out.insert(NegClass::Proto);
    if (anti && dni && n1) out.insert(NegClass::Ultraweak);
    if (anti && semi && dni) out.insert(NegClass::Weak);
    if (semi && pseudo_row) out.insert(NegClass::Pseudo);
    if (anti && semi && dni && dne) out.insert(NegClass::Ortho);
    return out;
}

const char *to_string(NegClass c) {
    switch (c) {
        case NegClass::Pre: return "pre";
        case NegClass::Proto: return "proto";
        case NegClass::Ultraweak: return "ultraweak";
        case NegClass::Weak: return "weak";
        case NegClass::Pseudo: return "pseudo";
        case NegClass::Ortho: return "ortho";
    }
    return "?";
}

std::optional<NegClass> neg_class_from_string(const std::string &s) {
    if (s == "pre") return NegClass::Pre;
    if (s == "proto") return NegClass::Proto;
    if (s == "ultraweak") return NegClass::Ultraweak;
    if (s == "weak") return NegClass::Weak;
    if (s == "pseudo") return NegClass::Pseudo;
    if (s == "ortho") return NegClass::Ortho;
    return std::nullopt;
}

const char *to_string(ImpClass c) {
    switch (c) {
        case ImpClass::Preconditional: return "preconditional";
        case ImpClass::Preimplication: return "preimplication";
        case ImpClass::Protoimplication: return "protoimplication";
        case ImpClass::UltraweakPseudoimplication: return "ultraweak-pseudoimplication";
        case ImpClass::WeakPseudoimplication: return "weak-pseudoimplication";
        case ImpClass::RelativePseudocomplementation: return "relative-pseudocomplementation";
    }
    return "?";
}

std::set<ImpClass> classify_implication(const BoundedLattice &L, const ImplicationOp &imp) {
    const int n = L.n, one = L.top, zero = L.bottom;
    (void)zero;
    auto I = [&](int a, int b) { return imp(a, b); };

    bool precond = true;
    for (int a = 0; a < n && precond; a++) {
        if (!L.leq(I(one, a), a)) precond = false;
        for (int b = 0; b < n && precond; b++) {
            if (!L.leq(L.mt(a, b), I(a, b))) precond = false;
            if (!L.leq(I(a, b), I(a, L.mt(a, b)))) precond = false;
            for (int c = 0; c < n && precond; c++) {
                if (L.leq(b, a) && !L.leq(I(a, I(b, c)), I(b, c))) precond = false;
            }
            if (precond)
                for (int c = 0; c < n && precond; c++)
                    if (L.leq(b, c) && !L.leq(I(a, b), I(a, c))) precond = false;
        }
    }

    bool preimp = true;
    for (int a = 0; a < n && preimp; a++) {
        if (I(one, a) != a) preimp = false;
        for (int b = 0; b < n && preimp; b++) {
            if (!L.leq(I(a, I(a, b)), I(a, b))) preimp = false;
            for (int c = 0; c < n && preimp; c++) {
                if (L.leq(a, b) && !L.leq(I(b, c), I(a, c))) preimp = false;
                if (L.leq(a, b) && !L.leq(I(c, a), I(c, b))) preimp = false;
            }
        }
    }

    bool proto_extra = true, dni_extra = true, relpc_extra = true;
    for (int a = 0; a < n; a++)
        for (int b = 0; b < n; b++) {
            if (I(b, b) != one) proto_extra = false;
            if (!L.leq(L.mt(a, I(a, b)), b)) proto_extra = false;
            if (!L.leq(a, I(I(a, b), b))) dni_extra = false;
            for (int c = 0; c < n; c++)
                if (L.leq(L.mt(a, c), b) && !L.leq(a, I(c, b))) relpc_extra = false;
        }

    std::set<ImpClass> out;
    if (precond) out.insert(ImpClass::Preconditional);
    if (preimp) out.insert(ImpClass::Preimplication);
    if (preimp && proto_extra) out.insert(ImpClass::Protoimplication);
    if (preimp && dni_extra) out.insert(ImpClass::UltraweakPseudoimplication);
    if (preimp && proto_extra && dni_extra) out.insert(ImpClass::WeakPseudoimplication);
    if (preimp && proto_extra && relpc_extra) out.insert(ImpClass::RelativePseudocomplementation);
    return out;
}

// ---------- evaluation ----------

int evaluate(const Formula &f, const Valuation &theta, const Algebra &A) {
    switch (f.kind()) {
        case FKind::Atom: {
            auto it = theta.find(f.name());
            if (it == theta.end()) {
                if (f.name() == "p0") return A.L.bottom;  // reserved bot/top atom
                throw std::invalid_argument("no value for atom " + f.name());
            }
            return it->second;
        }
        case FKind::Neg: return A.neg(evaluate(f.body(), theta, A));
        case FKind::And: return A.L.mt(evaluate(f.left(), theta, A), evaluate(f.right(), theta, A));
        case FKind::Or: return A.L.jn(evaluate(f.left(), theta, A), evaluate(f.right(), theta, A));
        case FKind::Imp:
            if (!A.imp) throw std::invalid_argument("algebra has no implication operation");
            return (*A.imp)(evaluate(f.left(), theta, A), evaluate(f.right(), theta, A));
        default: throw std::invalid_argument("evaluate requires a propositional formula");
    }
}

bool holds(const Formula &phi, const Formula &psi, const Algebra &A) {
    std::set<std::string> names = atom_names(phi);
    for (auto &s : atom_names(psi)) names.insert(s);
    names.erase("p0");  // reserved atom is pinned to bottom by evaluate
    std::vector<std::string> atoms(names.begin(), names.end());
    if (atoms.size() > 4) throw std::invalid_argument("holds: more than 4 distinct atoms");
    size_t count = 1;
    for (size_t i = 0; i < atoms.size(); i++) count *= A.L.n;
    for (size_t idx = 0; idx < count; idx++) {
        Valuation theta;
        size_t t = idx;
        for (auto &a : atoms) {
            theta[a] = static_cast<int>(t % A.L.n);
            t /= A.L.n;
        }
        if (!A.L.leq(evaluate(phi, theta, A), evaluate(psi, theta, A))) return false;
    }
    return true;
}

NegationOp trivial_weak_pc(const BoundedLattice &L) {
    NegationOp neg;
    neg.table.assign(L.n, static_cast<uint8_t>(L.bottom));
    neg.table[L.bottom] = static_cast<uint8_t>(L.top);
    return neg;
}

}  // namespace fl
