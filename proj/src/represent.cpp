#include "fl/represent.hpp"

#include <algorithm>
#include <stdexcept>

namespace fl {

bool is_join_dense(const BoundedLattice &L, const std::vector<int> &V) {
    for (int a = 0; a < L.n; a++) {
        int j = L.bottom;
        for (int v : V)
            if (L.leq(v, a)) j = L.jn(j, v);
        if (j != a) return false;
    }
    return true;
}

bool is_meet_dense(const BoundedLattice &L, const std::vector<int> &Lambda) {
    for (int a = 0; a < L.n; a++) {
        int m = L.top;
        for (int l : Lambda)
            if (L.leq(a, l)) m = L.mt(m, l);
        if (m != a) return false;
    }
    return true;
}

bool separating(const BoundedLattice &L, const std::vector<std::pair<int, int>> &pairs) {
    // relation on pairs: (a,b) open to (c,d) iff c not<= b
    auto open = [&](size_t x, size_t y) { return !L.leq(pairs[y].first, pairs[x].second); };
    for (int a = 0; a < L.n; a++)
        for (int b = 0; b < L.n; b++) {
            if (L.leq(a, b)) continue;
            bool found = false;
            for (auto &[c, d] : pairs)
                if (L.leq(c, a) && !L.leq(c, b)) {
                    found = true;
                    break;
                }
            if (!found) return false;
        }
    for (int b = 0; b < L.n; b++)
        for (size_t x = 0; x < pairs.size(); x++) {
            if (L.leq(pairs[x].first, b)) continue;
            bool found = false;
            for (size_t y = 0; y < pairs.size() && !found; y++) {
                if (!open(y, x)) continue;
                bool all = true;
                for (size_t z = 0; z < pairs.size() && all; z++)
                    if (open(y, z) && L.leq(pairs[z].first, b)) all = false;
                if (all) found = true;
            }
            if (!found) return false;
        }
    return true;
}

PairFrame make_pair_frame(const BoundedLattice &L, std::vector<std::pair<int, int>> pairs) {
    std::sort(pairs.begin(), pairs.end());
    pairs.erase(std::unique(pairs.begin(), pairs.end()), pairs.end());
    if (pairs.size() > 63) throw std::invalid_argument("pair frame too large");
    PairFrame out;
    out.pairs = pairs;
    out.frame.size = static_cast<int>(pairs.size());
    out.frame.rel.assign(pairs.size(), 0);
    for (size_t x = 0; x < pairs.size(); x++) {
        for (size_t y = 0; y < pairs.size(); y++)
            if (!L.leq(pairs[y].first, pairs[x].second)) out.frame.rel[x] |= 1ULL << y;
        out.frame.labels.push_back("(" + std::to_string(pairs[x].first) + "," +
                                   std::to_string(pairs[x].second) + ")");
    }
    out.frame.finish();
    out.embed.assign(L.n, 0);
    for (int a = 0; a < L.n; a++)
        for (size_t x = 0; x < pairs.size(); x++)
            if (L.leq(pairs[x].first, a)) out.embed[a] |= 1ULL << x;
    return out;
}

namespace {

std::vector<int> all_elements(const BoundedLattice &L) {
    std::vector<int> out(L.n);
    for (int i = 0; i < L.n; i++) out[i] = i;
    return out;
}

void check_dense(const BoundedLattice &L, const std::vector<int> &V,
                 const std::vector<int> &Lambda) {
    if (!is_join_dense(L, V)) throw std::invalid_argument("V is not join-dense");
    if (!is_meet_dense(L, Lambda)) throw std::invalid_argument("Lambda is not meet-dense");
}

}  // namespace

PairFrame frame_from_negation(const BoundedLattice &L, const NegationOp &neg, NegClass cls,
                              const std::vector<int> &Vin, const std::vector<int> &LambdaIn) {
    auto classes = classify_negation(L, neg);
    if (!classes.count(cls))
        throw std::invalid_argument(std::string("negation is not a ") + to_string(cls) +
                                    " complementation");
    std::vector<int> V = Vin.empty() ? all_elements(L) : Vin;
    std::vector<int> Lambda = LambdaIn.empty() ? all_elements(L) : LambdaIn;
    check_dense(L, V, Lambda);
    std::vector<std::pair<int, int>> pairs;
    switch (cls) {
        case NegClass::Pre:
            for (int a = 0; a < L.n; a++) pairs.push_back({a, neg(a)});
            for (int b : Lambda) pairs.push_back({L.top, b});
            break;
        case NegClass::Proto:
            for (int a = 0; a < L.n; a++)
                if (a != L.bottom) pairs.push_back({a, neg(a)});
            for (int b : Lambda)
                if (b != L.top) pairs.push_back({L.top, b});
            break;
        case NegClass::Ultraweak:
            for (int a : V) pairs.push_back({a, neg(a)});
            for (int b : Lambda) pairs.push_back({L.top, b});
            break;
        case NegClass::Weak:
            for (int a : V)
                if (a != L.bottom) pairs.push_back({a, neg(a)});
            for (int b : Lambda)
                if (b != L.top) pairs.push_back({L.top, b});
            break;
        default:
            throw std::invalid_argument("frame_from_negation covers pre/proto/ultraweak/weak");
    }
    return make_pair_frame(L, std::move(pairs));
}

AntitoneFrame frame_from_antitone(const BoundedLattice &L, const NegationOp &neg,
                                  const std::vector<int> &LambdaIn) {
    if (!neg_antitone(L, neg)) throw std::invalid_argument("negation is not antitone");
    std::vector<int> Lambda = LambdaIn.empty() ? all_elements(L) : LambdaIn;
    if (!is_meet_dense(L, Lambda)) throw std::invalid_argument("Lambda is not meet-dense");
    std::vector<std::pair<int, int>> pairs;
    for (int a = 0; a < L.n; a++) pairs.push_back({a, neg(a)});
    for (int b : Lambda) pairs.push_back({L.top, b});
    AntitoneFrame out{make_pair_frame(L, std::move(pairs)), 0};
    int n1 = neg(L.top);
    std::pair<int, int> seed{n1, neg(n1)};
    Prop seed_bit = 0;
    for (size_t x = 0; x < out.pf.pairs.size(); x++)
        if (out.pf.pairs[x] == seed) seed_bit |= 1ULL << x;
    out.fix = closure(out.pf.frame, seed_bit);
    return out;
}

PairFrame frame_from_preconditional(const BoundedLattice &L, const ImplicationOp &imp) {
    if (!classify_implication(L, imp).count(ImpClass::Preconditional))
        throw std::invalid_argument("operation is not a preconditional");
    std::vector<std::pair<int, int>> pairs;
    for (int x = 0; x < L.n; x++)
        for (int y = 0; y < L.n; y++) pairs.push_back({x, imp(x, y)});
    return make_pair_frame(L, std::move(pairs));
}

TwoRelationFrame two_relation(const BoundedLattice &L, const ImplicationOp &imp,
                              const NegationOp &neg) {
    if (!neg_antitone(L, neg)) throw std::invalid_argument("negation is not antitone");
    for (int a = 0; a < L.n; a++)
        if (!L.leq(imp(a, L.bottom), neg(a)))
            throw std::invalid_argument("need a->0 <= ~a for the two-relation frame");
    TwoRelationFrame out;
    out.base = frame_from_preconditional(L, imp);
    const auto &pairs = out.base.pairs;
    out.second.size = out.base.frame.size;
    out.second.rel.assign(pairs.size(), 0);
    for (size_t xp = 0; xp < pairs.size(); xp++) {
        for (size_t x = 0; x < pairs.size(); x++) {
            if (!out.base.frame.open_to(static_cast<int>(xp), static_cast<int>(x))) continue;
            bool ok = true;
            for (int a = 0; a < L.n && ok; a++)
                if (L.leq(pairs[x].first, neg(a)) && L.leq(pairs[xp].first, a)) ok = false;
            if (ok) out.second.rel[xp] |= 1ULL << x;
        }
    }
    out.second.finish();
    return out;
}

PairFrame frame_from_preimplication(const BoundedLattice &L, const ImplicationOp &imp, int part,
                                    const std::vector<int> &Vin,
                                    const std::vector<int> &LambdaIn) {
    auto classes = classify_implication(L, imp);
    static const ImpClass required[5] = {
        ImpClass::Preimplication, ImpClass::Protoimplication,
        ImpClass::UltraweakPseudoimplication, ImpClass::WeakPseudoimplication,
        ImpClass::RelativePseudocomplementation};
    if (part < 1 || part > 5) throw std::invalid_argument("part must be 1..5");
    if (!classes.count(required[part - 1]))
        throw std::invalid_argument(std::string("operation is not a ") +
                                    to_string(required[part - 1]));
    std::vector<int> V = Vin.empty() ? all_elements(L) : Vin;
    std::vector<int> Lambda = LambdaIn.empty() ? all_elements(L) : LambdaIn;
    check_dense(L, V, Lambda);
    std::vector<std::pair<int, int>> pairs;
    switch (part) {
        case 1:
            for (int a = 0; a < L.n; a++)
                for (int b = 0; b < L.n; b++) pairs.push_back({a, imp(a, b)});
            break;
        case 2:
            for (int a = 0; a < L.n; a++)
                for (int b = 0; b < L.n; b++)
                    if (!L.leq(a, b)) pairs.push_back({a, imp(a, b)});
            break;
        case 3:
            for (int a : V)
                for (int b = 0; b < L.n; b++) pairs.push_back({a, imp(a, b)});
            for (int b : Lambda) pairs.push_back({L.top, imp(L.top, b)});
            break;
        case 4:
            for (int a : V)
                for (int b = 0; b < L.n; b++)
                    if (!L.leq(a, b)) pairs.push_back({a, imp(a, b)});
            break;
        case 5:
            for (int a : V)
                for (int b : Lambda)
                    if (!L.leq(a, b)) pairs.push_back({a, imp(a, b)});
            break;
    }
    return make_pair_frame(L, std::move(pairs));
}

// ---------- filter-ideal frames ----------
//
// In a finite lattice every filter/ideal is principal, so states are stored
// as their generators (f, i): filter = up-set of f, ideal = down-set of i.

FilterIdealFrame filter_ideal(const BoundedLattice &L, const NegationOp &neg) {
    if (!classify_negation(L, neg).count(NegClass::Proto))
        throw std::invalid_argument("filter-ideal frame needs a protocomplementation");
    FilterIdealFrame out;
    for (int f = 0; f < L.n; f++)
        for (int i = 0; i < L.n; i++)
            if (!L.leq(f, i) && L.leq(neg(f), i)) out.states.push_back({f, i});
    std::sort(out.states.begin(), out.states.end());
    if (out.states.size() > 63) throw std::invalid_argument("filter-ideal frame too large");
    out.frame.size = static_cast<int>(out.states.size());
    out.frame.rel.assign(out.states.size(), 0);
    for (size_t x = 0; x < out.states.size(); x++) {
        for (size_t y = 0; y < out.states.size(); y++)
            // ideal of x misses the filter of y
            if (!L.leq(out.states[y].first, out.states[x].second)) out.frame.rel[x] |= 1ULL << y;
        out.frame.labels.push_back("(up " + std::to_string(out.states[x].first) + ", down " +
                                   std::to_string(out.states[x].second) + ")");
    }
    out.frame.finish();
    out.embed.assign(L.n, 0);
    for (int a = 0; a < L.n; a++)
        for (size_t x = 0; x < out.states.size(); x++)
            if (L.leq(out.states[x].first, a)) out.embed[a] |= 1ULL << x;
    return out;
}

FilterIdealFrame filter_ideal(const BoundedLattice &L, const ImplicationOp &imp, bool disjoint) {
    if (!classify_implication(L, imp).count(ImpClass::Preimplication))
        throw std::invalid_argument("filter-ideal frame needs a preimplication");
    FilterIdealFrame out;
    for (int f = 0; f < L.n; f++)
        for (int i = 0; i < L.n; i++) {
            if (!L.leq(imp(f, i), i)) continue;
            if (disjoint && L.leq(f, i)) continue;
            out.states.push_back({f, i});
        }
    std::sort(out.states.begin(), out.states.end());
    if (out.states.size() > 63) throw std::invalid_argument("filter-ideal frame too large");
    out.frame.size = static_cast<int>(out.states.size());
    out.frame.rel.assign(out.states.size(), 0);
    for (size_t x = 0; x < out.states.size(); x++)
        for (size_t y = 0; y < out.states.size(); y++)
            if (!L.leq(out.states[y].first, out.states[x].second)) out.frame.rel[x] |= 1ULL << y;
    out.frame.finish();
    out.embed.assign(L.n, 0);
    for (int a = 0; a < L.n; a++)
        for (size_t x = 0; x < out.states.size(); x++)
            if (L.leq(out.states[x].first, a)) out.embed[a] |= 1ULL << x;
    return out;
}

// ---------- verification ----------

EmbeddingReport verify_embedding(const BoundedLattice &L, const std::vector<Prop> &embed,
                                 const Frame &frame, const VerifySpec &spec) {
    EmbeddingReport rep;
    auto complain = [&](const std::string &msg) {
        rep.embedding_ok = false;
        rep.violations.push_back(msg);
    };
    auto fix = fixpoints(frame);
    rep.fixpoint_count = fix.size();
    auto is_fix = [&](Prop A) { return std::binary_search(fix.begin(), fix.end(), A); };

    for (int a = 0; a < L.n; a++)
        if (!is_fix(embed[a]))
            complain("image of element " + std::to_string(a) + " is not a fixpoint");
    for (int a = 0; a < L.n; a++)
        for (int b = 0; b < L.n; b++) {
            if (a < b && embed[a] == embed[b]) complain("embedding is not injective");
            if (embed[L.mt(a, b)] != (embed[a] & embed[b]))
                complain("meet not preserved at (" + std::to_string(a) + "," + std::to_string(b) +
                         ")");
            if (embed[L.jn(a, b)] != closure(frame, embed[a] | embed[b]))
                complain("join not preserved at (" + std::to_string(a) + "," + std::to_string(b) +
                         ")");
        }
    if (embed[L.bottom] != closure(frame, 0)) complain("bottom not preserved");
    if (embed[L.top] != frame.universe()) complain("top not preserved");

    if (spec.neg) {
        for (int a = 0; a < L.n; a++) {
            Prop want = 0;
            switch (spec.neg_style) {
                case VerifySpec::NegStyle::Plain: want = neg_prop(frame, embed[a]); break;
                case VerifySpec::NegStyle::Relative:
                    want = neg_rel_prop(frame, embed[a], spec.relative_fix);
                    break;
                case VerifySpec::NegStyle::SecondRelation:
                    want = neg_prop(*spec.second, embed[a]);
                    break;
            }
            if (embed[(*spec.neg)(a)] != want)
                complain("negation not preserved at " + std::to_string(a));
        }
    }
    if (spec.imp) {
        for (int a = 0; a < L.n; a++)
            for (int b = 0; b < L.n; b++) {
                Prop want = spec.imp_style == VerifySpec::ImpStyle::Arrow
                                ? imp_prop(frame, embed[a], embed[b])
                                : cond_prop(frame, embed[a], embed[b]);
                if (embed[(*spec.imp)(a, b)] != want)
                    complain("implication not preserved at (" + std::to_string(a) + "," +
                             std::to_string(b) + ")");
            }
    }
    return rep;
}

EmbeddingReport verify_iso(const BoundedLattice &L, const std::vector<Prop> &embed,
                           const Frame &frame, const VerifySpec &spec) {
    EmbeddingReport rep = verify_embedding(L, embed, frame, spec);
    if (rep.fixpoint_count != static_cast<size_t>(L.n)) {
        rep.iso_ok = false;
        rep.violations.push_back("fixpoint count " + std::to_string(rep.fixpoint_count) +
                                 " differs from lattice size " + std::to_string(L.n));
    }
    return rep;
}

}  // namespace fl
