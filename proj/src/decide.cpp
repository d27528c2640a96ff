#include "fl/decide.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <map>
#include <set>
#include <unordered_map>
#include <unordered_set>

#include "fl/enumerate.hpp"
#include "fl/translate.hpp"

namespace fl {

namespace {

// ---------- forward saturation for the base calculus ----------
//
// Sequents over a universe U of at most 1022 formulas, encoded in 32 bits:
// antecedent as an ordered pair of indices (or none), succedent index (or
// none). The rules are the classical ones surviving the size restriction:
// axioms, weakening into free slots, contraction, the left/right conjunction
// and disjunction rules, and the two negation rules that move a formula
// across the arrow.

struct Saturator {
    std::vector<Formula> U;
    std::unordered_map<Formula, int, FormulaHash> index;
    // per formula: conjunctions/disjunctions it appears in, and its negation
    struct Occ {
        int compound;  // index of the conjunction/disjunction
        int other;     // index of the other component
        bool left;     // occurs as the left component
    };
    std::vector<std::vector<Occ>> in_conj, in_disj;
    std::vector<int> neg_of;    // index of ~u if present, else -1

    std::unordered_set<uint32_t> seen;
    std::deque<uint32_t> work;

    uint32_t encode(int g1, int g2, int d) const {
        if (g1 > g2) std::swap(g1, g2);
        return (static_cast<uint32_t>(g1 + 1) << 20) | (static_cast<uint32_t>(g2 + 1) << 10) |
               static_cast<uint32_t>(d + 1);
    }
    static void decode(uint32_t s, int &g1, int &g2, int &d) {
        g1 = static_cast<int>(s >> 20) - 1;
        g2 = static_cast<int>((s >> 10) & 0x3ff) - 1;
        d = static_cast<int>(s & 0x3ff) - 1;
    }

    void add(int g1, int g2, int d) {
        uint32_t s = encode(g1, g2, d);
        if (seen.insert(s).second) work.push_back(s);
    }
    bool has(int g1, int g2, int d) const { return seen.count(encode(g1, g2, d)) != 0; }

    void build_universe(const Formula &phi, const Formula &psi) {
        std::set<Formula> all;
        for (auto &f : subformulas(phi)) all.insert(f);
        for (auto &f : subformulas(psi)) all.insert(f);
        U.assign(all.begin(), all.end());
        if (U.size() > 1000) throw std::invalid_argument("formula too large for the decider");
        for (size_t i = 0; i < U.size(); i++) index[U[i]] = static_cast<int>(i);
        in_conj.assign(U.size(), {});
        in_disj.assign(U.size(), {});
        neg_of.assign(U.size(), -1);
        for (size_t i = 0; i < U.size(); i++) {
            const Formula &f = U[i];
            if (f.kind() == FKind::And || f.kind() == FKind::Or) {
                int l = index.at(f.left()), r = index.at(f.right());
                auto &tab = f.kind() == FKind::And ? in_conj : in_disj;
                tab[l].push_back({static_cast<int>(i), r, true});
                tab[r].push_back({static_cast<int>(i), l, false});
            } else if (f.kind() == FKind::Neg) {
                neg_of[index.at(f.body())] = static_cast<int>(i);
            }
        }
    }

    void saturate() {
        for (size_t i = 0; i < U.size(); i++) add(static_cast<int>(i), -1, static_cast<int>(i));
        while (!work.empty()) {
            uint32_t s = work.front();
            work.pop_front();
            int g1, g2, d;
            decode(s, g1, g2, d);
            process(g1, g2, d);
        }
    }

    void process(int g1, int g2, int d) {
        const int n = static_cast<int>(U.size());
        int gcount = (g1 >= 0) + (g2 >= 0);
        int total = gcount + (d >= 0);

        // weakening into free slots
        if (total < 2) {
            for (int u = 0; u < n; u++) {
                if (gcount == 0)
                    add(u, -1, d);
                else
                    add(g1 >= 0 ? g1 : g2, u, d);
            }
            if (d < 0 && gcount <= 1)
                for (int u = 0; u < n; u++) add(g1 >= 0 ? g1 : g2, -1, u);
        }
        // contraction
        if (g1 >= 0 && g1 == g2) add(g1, -1, d);

        // left rules on each antecedent slot
        for (int slot = 0; slot < 2; slot++) {
            int phi = slot == 0 ? g1 : g2;
            int other = slot == 0 ? g2 : g1;
            if (phi < 0) continue;
            for (const auto &occ : in_conj[phi]) add(occ.compound, other, d);  // conjunction left
            for (const auto &occ : in_disj[phi]) {  // disjunction left needs the other case
                if (has(occ.other, other, d)) add(occ.compound, other, d);
            }
            if (d < 0 && neg_of[phi] >= 0) add(other, -1, neg_of[phi]);  // negation right
        }

        if (d >= 0) {
            // disjunction right
            for (const auto &occ : in_disj[d]) add(g1, g2, occ.compound);
            // conjunction right: both premises share the single antecedent
            if (gcount <= 1) {
                for (const auto &occ : in_conj[d])
                    if (has(g1 >= 0 ? g1 : g2, -1, occ.other)) add(g1, g2, occ.compound);
            }
            // negation left
            if (gcount <= 1 && neg_of[d] >= 0) add(g1 >= 0 ? g1 : g2, neg_of[d], -1);
        }
    }

};

bool decide_f(const Formula &phi, const Formula &psi) {
    Saturator sat;
    sat.build_universe(phi, psi);
    sat.saturate();
    return sat.has(sat.index.at(phi), -1, sat.index.at(psi));
}

// ---------- single-succedent backward search with loop checking ----------
//
// Complete for the {&,|,~} fragment of intuitionistic logic; negated
// antecedents persist, so goals can recur and the search cuts loops on the
// current branch. Failures that depended on a cut are not cached.

struct IntSearch {
    std::vector<Formula> U;
    std::unordered_map<Formula, int, FormulaHash> index;
    std::vector<int> kind;  // FKind as int
    std::vector<int> lidx, ridx;

    struct Key {
        uint64_t gamma;
        int delta;  // -1 = absurdity goal
        bool operator==(const Key &o) const { return gamma == o.gamma && delta == o.delta; }
    };
    struct KeyHash {
        size_t operator()(const Key &k) const {
            return std::hash<uint64_t>{}(k.gamma * 1315423911ULL + k.delta + 7);
        }
    };
    std::unordered_map<Key, bool, KeyHash> memo;
    std::unordered_set<Key, KeyHash> on_stack;

    void build(const Formula &phi, const Formula &psi) {
        std::set<Formula> all;
        for (auto &f : subformulas(phi)) all.insert(f);
        for (auto &f : subformulas(psi)) all.insert(f);
        U.assign(all.begin(), all.end());
        if (U.size() > 64) throw std::invalid_argument("formula too large for the decider");
        for (size_t i = 0; i < U.size(); i++) index[U[i]] = static_cast<int>(i);
        kind.resize(U.size());
        lidx.assign(U.size(), -1);
        ridx.assign(U.size(), -1);
        for (size_t i = 0; i < U.size(); i++) {
            kind[i] = static_cast<int>(U[i].kind());
            if (U[i].kind() == FKind::And || U[i].kind() == FKind::Or) {
                lidx[i] = index.at(U[i].left());
                ridx[i] = index.at(U[i].right());
            } else if (U[i].kind() == FKind::Neg) {
                lidx[i] = index.at(U[i].body());
            }
        }
    }

    // returns (provable, depended_on_loop_cut)
    std::pair<bool, bool> prove(uint64_t gamma, int delta) {
        // decompose conjunctions on the left eagerly, consuming them
        bool changed = true;
        while (changed) {
            changed = false;
            for (size_t i = 0; i < U.size(); i++) {
                if (!((gamma >> i) & 1) || kind[i] != static_cast<int>(FKind::And)) continue;
                gamma = (gamma & ~(1ULL << i)) | (1ULL << lidx[i]) | (1ULL << ridx[i]);
                changed = true;
            }
        }
        if (delta >= 0 && ((gamma >> delta) & 1)) return {true, false};

        Key key{gamma, delta};
        if (auto it = memo.find(key); it != memo.end()) return {it->second, false};
        if (on_stack.count(key)) return {false, true};
        on_stack.insert(key);
        bool dep = false;
        bool ok = attempt(gamma, delta, dep);
        on_stack.erase(key);
        if (ok || !dep) memo[key] = ok;
        return {ok, dep && !ok};
    }

    bool attempt(uint64_t gamma, int delta, bool &dep) {
        // left disjunction: split on the first disjunction present
        for (size_t i = 0; i < U.size(); i++) {
            if (!((gamma >> i) & 1) || kind[i] != static_cast<int>(FKind::Or)) continue;
            uint64_t rest = gamma & ~(1ULL << i);
            auto [ok1, d1] = prove(rest | (1ULL << lidx[i]), delta);
            dep |= d1;
            if (!ok1) return false;
            auto [ok2, d2] = prove(rest | (1ULL << ridx[i]), delta);
            dep |= d2;
            return ok2;
        }
        // right rules
        if (delta >= 0) {
            if (kind[delta] == static_cast<int>(FKind::And)) {
                auto [ok1, d1] = prove(gamma, lidx[delta]);
                dep |= d1;
                if (!ok1) return false;
                auto [ok2, d2] = prove(gamma, ridx[delta]);
                dep |= d2;
                return ok2;
            }
            if (kind[delta] == static_cast<int>(FKind::Neg)) {
                auto [ok, d] = prove(gamma | (1ULL << lidx[delta]), -1);
                dep |= d;
                return ok;
            }
            if (kind[delta] == static_cast<int>(FKind::Or)) {
                auto [ok1, d1] = prove(gamma, lidx[delta]);
                dep |= d1;
                if (ok1) return true;
                auto [ok2, d2] = prove(gamma, ridx[delta]);
                dep |= d2;
                if (ok2) return true;
            }
        }
        // left negation: from ~a in gamma and gamma => a conclude anything
        for (size_t i = 0; i < U.size(); i++) {
            if (!((gamma >> i) & 1) || kind[i] != static_cast<int>(FKind::Neg)) continue;
            auto [ok, d] = prove(gamma, lidx[i]);
            dep |= d;
            if (ok) return true;
        }
        return false;
    }
};

bool decide_j(const Formula &phi, const Formula &psi) {
    IntSearch s;
    s.build(phi, psi);
    return s.prove(1ULL << s.index.at(phi), s.index.at(psi)).first;
}

bool decide_c(const Formula &phi, const Formula &psi) {
    std::set<std::string> names = atom_names(phi);
    for (auto &a : atom_names(psi)) names.insert(a);
    std::vector<std::string> atoms(names.begin(), names.end());
    if (atoms.size() > 20) throw std::invalid_argument("formula too large for the decider");
    std::function<bool(const Formula &, uint32_t)> eval = [&](const Formula &f,
                                                              uint32_t bits) -> bool {
        switch (f.kind()) {
            case FKind::Atom: {
                auto it = std::lower_bound(atoms.begin(), atoms.end(), f.name());
                return (bits >> (it - atoms.begin())) & 1;
            }
            case FKind::Neg: return !eval(f.body(), bits);
            case FKind::And: return eval(f.left(), bits) && eval(f.right(), bits);
            case FKind::Or: return eval(f.left(), bits) || eval(f.right(), bits);
            default: throw std::invalid_argument("decide requires a propositional formula");
        }
    };
    for (uint32_t bits = 0; bits < (1u << atoms.size()); bits++)
        if (eval(phi, bits) && !eval(psi, bits)) return false;
    return true;
}

void require_propositional(const Formula &f) {
    if (!f.is_propositional() || f.contains_imp())
        throw std::invalid_argument("decide requires a propositional {~,&,|} formula");
}

}  // namespace

bool decide(const Formula &phi, const Formula &psi, Calculus calc) {
    require_propositional(phi);
    require_propositional(psi);
    switch (calc) {
        case Calculus::F: return decide_f(phi, psi);
        case Calculus::O:
            // the double-negation embedding into the base logic is exact, and
            // unlike the restricted sequent rules it covers the whole language
            return decide_f(g_translate(phi), g_translate(psi));
        case Calculus::J: return decide_j(phi, psi);
        case Calculus::C: return decide_c(phi, psi);
    }
    return false;
}

std::string to_string(const Sequent &s) {
    std::string out;
    for (size_t i = 0; i < s.gamma.size(); i++) out += (i ? ", " : "") + print(s.gamma[i]);
    out += " => ";
    if (s.delta) out += print(*s.delta);
    return out;
}

std::vector<Sequent> saturate_sequents(const Formula &phi, const Formula &psi, Calculus calc) {
    require_propositional(phi);
    require_propositional(psi);
    Formula a = phi, b = psi;
    if (calc == Calculus::O) {
        a = g_translate(phi);
        b = g_translate(psi);
    } else if (calc != Calculus::F) {
        return {};
    }
    Saturator sat;
    sat.build_universe(a, b);
    sat.saturate();
    std::vector<Sequent> out;
    for (uint32_t enc : sat.seen) {
        int g1, g2, d;
        Saturator::decode(enc, g1, g2, d);
        Sequent s;
        if (g1 >= 0) s.gamma.push_back(sat.U[g1]);
        if (g2 >= 0) s.gamma.push_back(sat.U[g2]);
        if (d >= 0) s.delta = sat.U[d];
        out.push_back(std::move(s));
    }
    return out;
}

std::vector<std::string> decide_trace(const Formula &phi, const Formula &psi, Calculus calc) {
    std::vector<std::string> out;
    for (auto &s : saturate_sequents(phi, psi, calc)) out.push_back(to_string(s));
    std::sort(out.begin(), out.end());
    return out;
}

// ---------- countermodel search ----------

namespace {

std::optional<Witness> algebra_countermodel(const Formula &phi, const Formula &psi, int max_size) {
    std::set<std::string> names = atom_names(phi);
    for (auto &a : atom_names(psi)) names.insert(a);
    names.erase("p0");
    std::vector<std::string> atoms(names.begin(), names.end());
    if (atoms.size() > 4) throw std::invalid_argument("countermodel: more than 4 atoms");
    for (int n = 1; n <= max_size; n++) {
        for (auto &[L, neg] : enumerate_expansions(n, NegClass::Weak)) {
            Algebra A{L, neg, std::nullopt};
            size_t count = 1;
            for (size_t i = 0; i < atoms.size(); i++) count *= n;
            for (size_t idx = 0; idx < count; idx++) {
                Valuation theta;
                size_t t = idx;
                for (auto &a : atoms) {
                    theta[a] = static_cast<int>(t % n);
                    t /= n;
                }
                if (!L.leq(evaluate(phi, theta, A), evaluate(psi, theta, A)))
                    return Witness{AlgebraWitness{A, theta}};
            }
        }
    }
    return std::nullopt;
}

std::optional<Witness> frame_countermodel(const Formula &phi, const Formula &psi, int max_size) {
    std::set<std::string> names = atom_names(phi);
    for (auto &a : atom_names(psi)) names.insert(a);
    names.erase("p0");
    std::vector<std::string> atoms(names.begin(), names.end());
    if (atoms.size() > 3) throw std::invalid_argument("frame countermodel: more than 3 atoms");
    for (int n = 1; n <= max_size; n++) {
        const int offdiag = n * n - n;
        for (uint64_t bits = 0; bits < (1ULL << offdiag); bits++) {
            Frame F;
            F.size = n;
            F.rel.assign(n, 0);
            int k = 0;
            for (int x = 0; x < n; x++) {
                F.rel[x] |= 1ULL << x;  // reflexive
                for (int y = 0; y < n; y++) {
                    if (x == y) continue;
                    if ((bits >> k) & 1) F.rel[x] |= 1ULL << y;
                    k++;
                }
            }
            F.finish();
            if (!frame_condition(F, FrameCondition::Pseudosymmetric)) continue;
            auto fix = fixpoints(F);
            size_t count = 1;
            for (size_t i = 0; i < atoms.size(); i++) count *= fix.size();
            for (size_t idx = 0; idx < count; idx++) {
                RelationalModel M;
                M.frame = F;
                size_t t = idx;
                for (auto &a : atoms) {
                    M.valuation[a] = fix[t % fix.size()];
                    t /= fix.size();
                }
                Prop pe = extension(M, phi), qe = extension(M, psi);
                if (pe & ~qe) {
                    int state = 0;
                    while (!((pe & ~qe) >> state & 1)) state++;
                    return Witness{FrameWitness{M, state}};
                }
            }
        }
    }
    return std::nullopt;
}

}  // namespace

std::optional<Witness> countermodel(const Formula &phi, const Formula &psi, int max_size,
                                    CountermodelKind kind) {
    require_propositional(phi);
    require_propositional(psi);
    if (kind == CountermodelKind::AlgebraKind) return algebra_countermodel(phi, psi, max_size);
    return frame_countermodel(phi, psi, max_size);
}

bool disjunction_property_check(const Formula &phi, const Formula &psi) {
    Formula top = Formula::top();
    if (!decide(top, Formula::disj(phi, psi), Calculus::F)) return true;
    return decide(top, phi, Calculus::F) || decide(top, psi, Calculus::F);
}

}  // namespace fl
