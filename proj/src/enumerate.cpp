#include "fl/enumerate.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>

namespace fl {

namespace {

// Canonical key: the lexicographically least leq bit matrix over all
// relabelings that keep bottom = 0 and top = n-1. Any lattice isomorphism
// fixes bottom and top, so permuting the middle elements suffices.
std::vector<uint64_t> canonical_leq(const BoundedLattice &L) {
    const int n = L.n;
    std::vector<int> mid(std::max(0, n - 2));
    std::iota(mid.begin(), mid.end(), 1);
    std::vector<uint64_t> best;
    std::vector<int> perm(n);
    do {
        perm[0] = 0;
        if (n > 1) perm[n - 1] = n - 1;
        for (int i = 0; i < n - 2; i++) perm[i + 1] = mid[i];
        // relabeled[perm[a]][perm[b]] = leq(a,b)
        std::vector<uint64_t> rows(n, 0);
        for (int a = 0; a < n; a++)
            for (int b = 0; b < n; b++)
                if (L.leq(a, b)) rows[perm[a]] |= 1ULL << perm[b];
        if (best.empty() || rows < best) best = rows;
    } while (std::next_permutation(mid.begin(), mid.end()));
    return best;
}


}  // namespace

std::vector<BoundedLattice> enumerate_lattices(int n) {
    if (n < 1 || n > 10) throw std::invalid_argument("enumerate_lattices: size out of range");
    std::vector<BoundedLattice> out;
    if (n == 1) {
        auto L = BoundedLattice::from_leq(1, {1ULL});
        out.push_back(*L);
        return out;
    }
    const int k = n - 2;  // middle elements 1..n-2
    // strict-order candidate bits among middle elements, upper triangle only:
    // every poset admits a linear extension, so restricting i < j loses no
    // isomorphism class.
    std::vector<std::pair<int, int>> slots;
    for (int i = 1; i <= k; i++)
        for (int j = i + 1; j <= k; j++) slots.push_back({i, j});
    std::set<std::vector<uint64_t>> seen;
    std::vector<std::pair<std::vector<uint64_t>, BoundedLattice>> found;
    const uint64_t full = (n == 64) ? ~0ULL : ((1ULL << n) - 1);
    for (uint64_t mask = 0; mask < (1ULL << slots.size()); mask++) {
        std::vector<uint64_t> rows(n, 0);
        for (int a = 0; a < n; a++) rows[a] |= 1ULL << a;
        rows[0] = full;                           // bottom below everything
        for (int a = 0; a < n; a++) rows[a] |= 1ULL << (n - 1);  // top above everything
        for (size_t s = 0; s < slots.size(); s++)
            if ((mask >> s) & 1) rows[slots[s].first] |= 1ULL << slots[s].second;
        // transitivity among middles
        bool transitive = true;
        for (int a = 1; a <= k && transitive; a++)
            for (int b = a + 1; b <= k && transitive; b++) {
                if (!((rows[a] >> b) & 1)) continue;
                for (int c = b + 1; c <= k; c++)
                    if (((rows[b] >> c) & 1) && !((rows[a] >> c) & 1)) {
                        transitive = false;
                        break;
                    }
            }
        if (!transitive) continue;
        auto L = BoundedLattice::from_leq(n, rows);
        if (!L) continue;
        auto key = canonical_leq(*L);
        if (seen.insert(key).second) found.push_back({key, *L});
    }
    std::sort(found.begin(), found.end(),
              [](const auto &a, const auto &b) { return a.first < b.first; });
    for (auto &f : found) {
        // emit the canonical labeling itself
        auto L = BoundedLattice::from_leq(n, f.first);
        out.push_back(*L);
    }
    return out;
}

std::vector<std::vector<int>> automorphisms(const BoundedLattice &L) {
    const int n = L.n;
    std::vector<std::vector<int>> out;
    std::vector<int> mid(std::max(0, n - 2));
    std::iota(mid.begin(), mid.end(), 1);
    do {
        std::vector<int> perm(n);
        perm[0] = 0;
        if (n > 1) perm[n - 1] = n - 1;
        for (int i = 0; i < n - 2; i++) perm[i + 1] = mid[i];
        bool ok = true;
        for (int a = 0; a < n && ok; a++)
            for (int b = 0; b < n && ok; b++)
                if (L.leq(a, b) != L.leq(perm[a], perm[b])) ok = false;
        if (ok) out.push_back(perm);
    } while (std::next_permutation(mid.begin(), mid.end()));
    return out;
}

namespace {

// Depth-first enumeration of negation tables in the class, with antitonicity
// pruned during assignment.
void enumerate_negations(const BoundedLattice &L, NegClass cls,
                         std::vector<std::vector<uint8_t>> &out) {
    const int n = L.n;
    bool need_semi = cls == NegClass::Proto || cls == NegClass::Weak ||
                     cls == NegClass::Pseudo || cls == NegClass::Ortho;
    std::vector<uint8_t> t(n, 0);
    std::vector<std::vector<int>> candidates(n);
    for (int a = 0; a < n; a++)
        for (int c = 0; c < n; c++)
            if (!need_semi || L.mt(a, c) == L.bottom) candidates[a].push_back(c);

    std::function<void(int)> go = [&](int a) {
        if (a == n) {
            NegationOp neg{t};
            auto classes = classify_negation(L, neg);
            if (classes.count(cls)) out.push_back(t);
            return;
        }
        for (int c : candidates[a]) {
            bool ok = true;
            for (int b = 0; b < a && ok; b++) {
                if (L.leq(a, b) && !L.leq(t[b], c)) ok = false;
                if (L.leq(b, a) && !L.leq(c, t[b])) ok = false;
            }
            if (!ok) continue;
            t[a] = static_cast<uint8_t>(c);
            go(a + 1);
        }
    };
    go(0);
}

}  // namespace

std::vector<std::pair<BoundedLattice, NegationOp>> enumerate_expansions(int n, NegClass cls) {
    std::vector<std::pair<BoundedLattice, NegationOp>> out;
    for (auto &L : enumerate_lattices(n)) {
        std::vector<std::vector<uint8_t>> tables;
        enumerate_negations(L, cls, tables);
        if (tables.empty()) continue;
        auto auts = automorphisms(L);
        std::set<std::vector<uint8_t>> reps;
        for (auto &t : tables) {
            std::vector<uint8_t> best = t;
            for (auto &sigma : auts) {
                std::vector<int> inv(L.n);
                for (int i = 0; i < L.n; i++) inv[sigma[i]] = i;
                std::vector<uint8_t> u(L.n);
                for (int a = 0; a < L.n; a++) u[a] = static_cast<uint8_t>(sigma[t[inv[a]]]);
                if (u < best) best = u;
            }
            reps.insert(best);
        }
        for (auto &t : reps) out.push_back({L, NegationOp{t}});
    }
    return out;
}

CensusRow census(int max_n) {
    CensusRow row;
    for (int n = 2; n <= max_n; n++) {
        auto lats = enumerate_lattices(n);
        long long nlat = static_cast<long long>(lats.size());
        long long npseudo = 0, ndist = 0;
        for (auto &L : lats) {
            if (L.pseudocomplementation()) npseudo++;
            if (L.distributive()) ndist++;
        }
        row.lattices.push_back(nlat);
        row.pseudocomplemented.push_back(npseudo);
        row.distributive.push_back(ndist);
        row.weak.push_back(static_cast<long long>(enumerate_expansions(n, NegClass::Weak).size()));
        row.ortho.push_back(static_cast<long long>(enumerate_expansions(n, NegClass::Ortho).size()));
    }
    return row;
}

}  // namespace fl
