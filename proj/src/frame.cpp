#include "fl/frame.hpp"

#include <algorithm>
#include <future>
#include <stdexcept>
#include <thread>

namespace fl {

Frame Frame::make(int size, const std::vector<std::pair<int, int>> &open_pairs, bool reflexive) {
    Frame F;
    F.size = size;
    F.rel.assign(size, 0);
    if (reflexive)
        for (int x = 0; x < size; x++) F.rel[x] |= 1ULL << x;
    for (auto &[x, y] : open_pairs) F.rel[x] |= 1ULL << y;
    F.finish();
    return F;
}

void Frame::finish() {
    preds.assign(size, 0);
    for (int x = 0; x < size; x++)
        for (int y = 0; y < size; y++)
            if ((rel[x] >> y) & 1) preds[y] |= 1ULL << x;
}

// c(A) = {x | every x' <| x is open to some member of A}
Prop closure(const Frame &F, Prop A) {
    uint64_t sees = 0;  // states open to some member of A
    for (int s = 0; s < F.size; s++)
        if (F.rel[s] & A) sees |= 1ULL << s;
    Prop out = 0;
    for (int x = 0; x < F.size; x++)
        if ((F.preds[x] & ~sees) == 0) out |= 1ULL << x;
    return out;
}

Prop neg_prop(const Frame &F, Prop A) {
    Prop out = 0;
    for (int x = 0; x < F.size; x++)
        if ((F.preds[x] & A) == 0) out |= 1ULL << x;
    return out;
}

Prop imp_prop(const Frame &F, Prop A, Prop B) {
    uint64_t seesB = 0;
    for (int s = 0; s < F.size; s++)
        if (F.rel[s] & B) seesB |= 1ULL << s;
    Prop out = 0;
    for (int x = 0; x < F.size; x++)
        if ((F.preds[x] & A & ~seesB) == 0) out |= 1ULL << x;
    return out;
}

Prop cond_prop(const Frame &F, Prop A, Prop B) { return imp_prop(F, A, A & B); }

Prop neg_rel_prop(const Frame &F, Prop A, Prop Fix) { return imp_prop(F, A, Fix); }

bool is_fixpoint(const Frame &F, Prop A) { return closure(F, A) == A; }

bool absurd(const Frame &F, int x) { return F.preds[x] == 0; }

Prop absurd_states(const Frame &F) {
    Prop out = 0;
    for (int x = 0; x < F.size; x++)
        if (F.preds[x] == 0) out |= 1ULL << x;
    return out;
}

bool pre_refines(const Frame &F, int x, int y) { return (F.preds[x] & ~F.preds[y]) == 0; }
bool post_refines(const Frame &F, int x, int y) { return (F.rel[x] & ~F.rel[y]) == 0; }
bool refines(const Frame &F, int x, int y) { return pre_refines(F, x, y) && post_refines(F, x, y); }

bool compossible_with(const Frame &F, int x, int y) {
    for (int w = 0; w < F.size; w++)
        if (!absurd(F, w) && refines(F, w, x) && pre_refines(F, w, y)) return true;
    return false;
}

bool frame_condition(const Frame &F, FrameCondition which) {
    const int n = F.size;
    switch (which) {
        case FrameCondition::Reflexive:
            for (int x = 0; x < n; x++)
                if (!F.open_to(x, x)) return false;
            return true;
        case FrameCondition::Symmetric:
            for (int x = 0; x < n; x++)
                for (int y = 0; y < n; y++)
                    if (F.open_to(x, y) != F.open_to(y, x)) return false;
            return true;
        case FrameCondition::Pseudosymmetric:
            // every y <| x admits a z <| y pre-refining x
            for (int x = 0; x < n; x++)
                for (int y = 0; y < n; y++) {
                    if (!F.open_to(y, x)) continue;
                    bool found = false;
                    for (int z = 0; z < n && !found; z++)
                        if (F.open_to(z, y) && pre_refines(F, z, x)) found = true;
                    if (!found) return false;
                }
            return true;
        case FrameCondition::StronglyPseudosymmetric:
            for (int x = 0; x < n; x++)
                for (int y = 0; y < n; y++) {
                    if (!F.open_to(y, x)) continue;
                    bool found = false;
                    for (int z = 0; z < n && !found; z++)
                        if (F.open_to(z, y) && pre_refines(F, z, x) && pre_refines(F, x, z))
                            found = true;
                    if (!found) return false;
                }
            return true;
        case FrameCondition::WeaklyCompossible:
            for (int x = 0; x < n; x++)
                for (int y = 0; y < n; y++) {
                    if (!F.open_to(y, x)) continue;
                    bool found = false;
                    for (int z = 0; z < n && !found; z++)
                        if (!absurd(F, z) && pre_refines(F, z, y) && pre_refines(F, z, x))
                            found = true;
                    if (!found) return false;
                }
            return true;
        case FrameCondition::Compossible:
            for (int x = 0; x < n; x++)
                for (int y = 0; y < n; y++)
                    if (F.open_to(x, y) && !compossible_with(F, x, y)) return false;
            return true;
        case FrameCondition::Corr4b:
            // every y <| x admits y' <| x with: z <| y' implies y <| z
            for (int x = 0; x < n; x++)
                for (int y = 0; y < n; y++) {
                    if (!F.open_to(y, x)) continue;
                    bool found = false;
                    for (int yp = 0; yp < n && !found; yp++) {
                        if (!F.open_to(yp, x)) continue;
                        if ((F.preds[yp] & ~F.rel[y]) == 0) found = true;
                    }
                    if (!found) return false;
                }
            return true;
        case FrameCondition::RightPreInterpolation:
            for (int x = 0; x < n; x++)
                for (int y = 0; y < n; y++) {
                    if (!F.open_to(y, x)) continue;
                    bool found = false;
                    for (int z = 0; z < n && !found; z++)
                        if (F.open_to(z, x) && post_refines(F, z, y) && pre_refines(F, z, x))
                            found = true;
                    if (!found) return false;
                }
            return true;
        case FrameCondition::LeftPreInterpolation:
            for (int x = 0; x < n; x++)
                for (int y = 0; y < n; y++) {
                    if (!F.open_to(y, x)) continue;
                    bool found = false;
                    for (int z = 0; z < n && !found; z++)
                        if (F.open_to(z, y) && post_refines(F, z, y) && pre_refines(F, z, x))
                            found = true;
                    if (!found) return false;
                }
            return true;
        case FrameCondition::LeftPostExtendability:
            for (int x = 0; x < n; x++)
                for (int y = 0; y < n; y++) {
                    if (!F.open_to(y, x)) continue;
                    bool found = false;
                    for (int z = 0; z < n && !found; z++)
                        if (F.open_to(y, z) && pre_refines(F, z, y) && pre_refines(F, z, x))
                            found = true;
                    if (!found) return false;
                }
            return true;
        case FrameCondition::ImpCorr0b:
            // every y <| x admits z |> y that pre-refines y
            for (int x = 0; x < n; x++)
                for (int y = 0; y < n; y++) {
                    if (!F.open_to(y, x)) continue;
                    bool found = false;
                    for (int z = 0; z < n && !found; z++)
                        if (F.open_to(y, z) && pre_refines(F, z, y)) found = true;
                    if (!found) return false;
                }
            return true;
    }
    return false;
}

const char *to_string(FrameCondition c) {
    switch (c) {
        case FrameCondition::Reflexive: return "reflexive";
        case FrameCondition::Symmetric: return "symmetric";
        case FrameCondition::Pseudosymmetric: return "pseudosymmetric";
        case FrameCondition::StronglyPseudosymmetric: return "strongly_pseudosymmetric";
        case FrameCondition::WeaklyCompossible: return "weakly_compossible";
        case FrameCondition::Compossible: return "compossible";
        case FrameCondition::Corr4b: return "corr4b";
        case FrameCondition::RightPreInterpolation: return "right_pre_interpolation";
        case FrameCondition::LeftPreInterpolation: return "left_pre_interpolation";
        case FrameCondition::LeftPostExtendability: return "left_post_extendability";
        case FrameCondition::ImpCorr0b: return "imp_corr0b";
    }
    return "?";
}

std::optional<FrameCondition> frame_condition_from_string(const std::string &s) {
    for (auto c : {FrameCondition::Reflexive, FrameCondition::Symmetric,
                   FrameCondition::Pseudosymmetric, FrameCondition::StronglyPseudosymmetric,
                   FrameCondition::WeaklyCompossible, FrameCondition::Compossible,
                   FrameCondition::Corr4b, FrameCondition::RightPreInterpolation,
                   FrameCondition::LeftPreInterpolation, FrameCondition::LeftPostExtendability,
                   FrameCondition::ImpCorr0b})
        if (s == to_string(c)) return c;
    return std::nullopt;
}

// ---------- fixpoint enumeration (next-closure, lectic order) ----------

std::vector<Prop> fixpoints(const Frame &F) {
    const int n = F.size;
    if (n > 63) throw std::invalid_argument("frame too large for fixpoint enumeration");
    std::vector<Prop> out;
    Prop A = closure(F, 0);
    out.push_back(A);
    const Prop full = F.universe();
    while (A != full) {
        Prop next = 0;
        bool found = false;
        for (int i = n - 1; i >= 0; i--) {
            if ((A >> i) & 1) continue;
            Prop below = (1ULL << i) - 1;
            Prop B = closure(F, (A & below) | (1ULL << i));
            // lectic successor: B must add nothing under bit i
            if ((B & below & ~A) == 0) {
                next = B;
                found = true;
                break;
            }
        }
        if (!found) break;  // defensive: full set is always a fixpoint
        A = next;
        out.push_back(A);
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Prop> fixpoints_naive(const Frame &F) {
    if (F.size > 20) throw std::invalid_argument("naive fixpoint filter is for small frames");
    std::vector<Prop> out;
    for (Prop A = 0; A <= F.universe(); A++) {
        if (closure(F, A) == A) out.push_back(A);
        if (A == F.universe()) break;
    }
    return out;
}

int FixpointLattice::index_of(Prop A) const {
    auto it = std::lower_bound(elements.begin(), elements.end(), A);
    if (it == elements.end() || *it != A) return -1;
    return static_cast<int>(it - elements.begin());
}

FixpointLattice fixpoint_lattice(const Frame &F) {
    FixpointLattice out;
    out.elements = fixpoints(F);
    int m = static_cast<int>(out.elements.size());
    if (m > 64) throw std::invalid_argument("fixpoint lattice too large to tabulate");
    std::vector<uint64_t> rows(m, 0);
    for (int i = 0; i < m; i++)
        for (int j = 0; j < m; j++)
            if ((out.elements[i] & ~out.elements[j]) == 0) rows[i] |= 1ULL << j;
    auto L = BoundedLattice::from_leq(m, rows);
    if (!L) throw std::logic_error("fixpoints do not form a lattice");
    // meets/joins from the frame, cross-checked against the order tables
    for (int i = 0; i < m; i++)
        for (int j = 0; j < m; j++) {
            int mi = out.index_of(out.elements[i] & out.elements[j]);
            int ji = out.index_of(closure(F, out.elements[i] | out.elements[j]));
            if (mi != L->mt(i, j) || ji != L->jn(i, j))
                throw std::logic_error("fixpoint meet/join mismatch");
        }
    out.L = *L;
    out.neg.table.resize(m);
    for (int i = 0; i < m; i++) {
        int k = out.index_of(neg_prop(F, out.elements[i]));
        if (k < 0) throw std::logic_error("negation left the fixpoint lattice");
        out.neg.table[i] = static_cast<uint8_t>(k);
    }
    return out;
}

// ---------- forcing ----------

static Prop pred_ext(const RelationalModel &M, const Formula &f, const Assignment &g) {
    std::vector<int> tuple;
    for (auto &v : f.args()) {
        auto it = g.find(v);
        if (it == g.end()) throw std::invalid_argument("assignment misses variable " + v);
        tuple.push_back(it->second);
    }
    auto it = M.pred_valuation.find({f.name(), tuple});
    if (it == M.pred_valuation.end())
        throw std::invalid_argument("uninterpreted predicate " + f.name());
    return it->second;
}

Prop extension(const RelationalModel &M, const Formula &f, const Assignment &g) {
    const Frame &F = M.frame;
    switch (f.kind()) {
        case FKind::Atom: {
            auto it = M.valuation.find(f.name());
            if (it == M.valuation.end()) {
                // the reserved atom of the bot/top abbreviations reads as the
                // least proposition unless a model interprets it explicitly
                if (f.name() == "p0") return closure(F, 0);
                throw std::invalid_argument("uninterpreted atom " + f.name());
            }
            return it->second;
        }
        case FKind::Pred: return pred_ext(M, f, g);
        case FKind::Neg: return neg_prop(F, extension(M, f.body(), g));
        case FKind::And: return extension(M, f.left(), g) & extension(M, f.right(), g);
        case FKind::Or:
            return closure(F, extension(M, f.left(), g) | extension(M, f.right(), g));
        case FKind::Imp: return imp_prop(F, extension(M, f.left(), g), extension(M, f.right(), g));
        case FKind::Forall: {
            Prop out = F.universe();
            for (int d = 0; d < M.domain_size; d++) {
                Assignment h = g;
                h[f.var()] = d;
                out &= extension(M, f.body(), h);
            }
            return out;
        }
        case FKind::Exists: {
            Prop u = 0;
            for (int d = 0; d < M.domain_size; d++) {
                Assignment h = g;
                h[f.var()] = d;
                u |= extension(M, f.body(), h);
            }
            return closure(F, u);
        }
    }
    return 0;
}

Prop extension(const RelationalModel &M, const Formula &f) { return extension(M, f, {}); }

bool force(const RelationalModel &M, int x, const Formula &f, const Assignment &g) {
    return (extension(M, f, g) >> x) & 1;
}
bool force(const RelationalModel &M, int x, const Formula &f) { return force(M, x, f, {}); }

// ---------- correspondence sweeps ----------

namespace {

// (a)-side checks, quantified over fixpoints of one frame
bool corr_a_holds(const Frame &F, int part, const std::vector<Prop> &fix) {
    Prop zero = absurd_states(F);
    Prop one = F.universe();
    switch (part) {
        case 1:
            for (Prop A : fix)
                if ((A & neg_prop(F, A)) != zero) return false;
            return true;
        case 2:
            for (Prop A : fix)
                if ((A & ~neg_prop(F, neg_prop(F, A))) != 0) return false;
            return true;
        case 3:
            for (Prop A : fix)
                for (Prop B : fix)
                    if ((A & B) == zero && (A & ~neg_prop(F, B)) != 0) return false;
            return true;
        case 4:
            for (Prop A : fix)
                if ((neg_prop(F, neg_prop(F, A)) & ~A) != 0) return false;
            return true;
        case 11:  // impcorr1: B -> B = 1
            for (Prop B : fix)
                if (imp_prop(F, B, B) != one) return false;
            return true;
        case 12:  // impcorr2: A & (A -> B) <= B
            for (Prop A : fix)
                for (Prop B : fix)
                    if ((A & imp_prop(F, A, B) & ~B) != 0) return false;
            return true;
        case 13:  // impcorr3: A <= (A -> B) -> B
            for (Prop A : fix)
                for (Prop B : fix)
                    if ((A & ~imp_prop(F, imp_prop(F, A, B), B)) != 0) return false;
            return true;
        case 14:  // impcorr4: A & C <= B implies A <= C -> B
            for (Prop A : fix)
                for (Prop C : fix)
                    for (Prop B : fix)
                        if ((A & C & ~B) == 0 && (A & ~imp_prop(F, C, B)) != 0) return false;
            return true;
    }
    throw std::invalid_argument("unknown correspondence part");
}

bool corr_b_holds(const Frame &F, int part) {
    switch (part) {
        case 1: {
            for (int x = 0; x < F.size; x++) {
                if (absurd(F, x)) continue;
                bool found = false;
                for (int z = 0; z < F.size && !found; z++)
                    if (F.open_to(z, x) && pre_refines(F, z, x)) found = true;
                if (!found) return false;
            }
            return true;
        }
        case 2: return frame_condition(F, FrameCondition::Pseudosymmetric);
        case 3: return frame_condition(F, FrameCondition::WeaklyCompossible);
        case 4: return frame_condition(F, FrameCondition::Corr4b);
        case 11: return frame_condition(F, FrameCondition::ImpCorr0b);
        case 12: return frame_condition(F, FrameCondition::RightPreInterpolation);
        case 13: return frame_condition(F, FrameCondition::LeftPreInterpolation);
        case 14: return frame_condition(F, FrameCondition::LeftPostExtendability);
    }
    throw std::invalid_argument("unknown correspondence part");
}

int part_code(const std::string &which) {
    if (which == "corr1") return 1;
    if (which == "corr2") return 2;
    if (which == "corr3") return 3;
    if (which == "corr4") return 4;
    if (which == "impcorr1") return 11;
    if (which == "impcorr2") return 12;
    if (which == "impcorr3") return 13;
    if (which == "impcorr4") return 14;
    throw std::invalid_argument("unknown correspondence name: " + which);
}

}  // namespace

CorrespondenceReport correspondence_test(const std::string &which, int max_size, int jobs) {
    if (max_size > 5) throw std::invalid_argument("correspondence_test: max_size over 5");
    const int part = part_code(which);
    CorrespondenceReport rep;
    for (int n = 1; n <= max_size; n++) {
        const uint64_t total = 1ULL << (n * n);
        const int workers = std::max(1, jobs);
        std::vector<std::future<std::pair<long long, std::vector<std::string>>>> futs;
        uint64_t chunk = (total + workers - 1) / workers;
        for (int w = 0; w < workers; w++) {
            uint64_t lo = w * chunk, hi = std::min(total, lo + chunk);
            futs.push_back(std::async(std::launch::async, [n, part, lo, hi] {
                std::vector<std::string> viol;
                long long count = 0;
                for (uint64_t bits = lo; bits < hi; bits++) {
                    Frame F;
                    F.size = n;
                    F.rel.assign(n, 0);
                    for (int x = 0; x < n; x++)
                        for (int y = 0; y < n; y++)
                            if ((bits >> (x * n + y)) & 1) F.rel[x] |= 1ULL << y;
                    F.finish();
                    count++;
                    auto fix = fixpoints(F);
                    bool a = corr_a_holds(F, part, fix);
                    bool b = corr_b_holds(F, part);
                    if (a != b)
                        viol.push_back("size " + std::to_string(n) + " rel bits " +
                                       std::to_string(bits) + ": (a)=" + std::to_string(a) +
                                       " (b)=" + std::to_string(b));
                }
                return std::make_pair(count, viol);
            }));
        }
        for (auto &f : futs) {
            auto [count, viol] = f.get();
            rep.frames_checked += count;
            rep.violations.insert(rep.violations.end(), viol.begin(), viol.end());
        }
    }
    return rep;
}

}  // namespace fl
