#include "fl/fitch.hpp"

#include <functional>
#include <unordered_set>

namespace fl {

const char *to_string(Rule r) {
    switch (r) {
        case Rule::Hyp: return "hyp";
        case Rule::AndI: return "andi";
        case Rule::AndE: return "ande";
        case Rule::OrI: return "ori";
        case Rule::OrE: return "ore";
        case Rule::NegI: return "negi";
        case Rule::NegE: return "nege";
        case Rule::Reit: return "reit";
        case Rule::RAA: return "raa";
        case Rule::ForallI: return "foralli";
        case Rule::ForallE: return "foralle";
        case Rule::ExistsI: return "existsi";
        case Rule::ExistsE: return "existse";
    }
    return "?";
}

std::optional<Rule> rule_from_string(const std::string &s) {
    for (auto r : {Rule::Hyp, Rule::AndI, Rule::AndE, Rule::OrI, Rule::OrE, Rule::NegI, Rule::NegE,
                   Rule::Reit, Rule::RAA, Rule::ForallI, Rule::ForallE, Rule::ExistsI,
                   Rule::ExistsE})
        if (s == to_string(r)) return r;
    return std::nullopt;
}

const char *to_string(Calculus c) {
    switch (c) {
        case Calculus::F: return "F";
        case Calculus::O: return "O";
        case Calculus::J: return "J";
        case Calculus::C: return "C";
    }
    return "?";
}

std::optional<Calculus> calculus_from_string(const std::string &s) {
    if (s == "F") return Calculus::F;
    if (s == "O") return Calculus::O;
    if (s == "J") return Calculus::J;
    if (s == "C") return Calculus::C;
    return std::nullopt;
}

Formula assumption(const ProofNode &p) { return p.entries.at(0).formula; }

std::optional<Formula> conclusion(const ProofNode &p) {
    if (p.entries.empty() || !p.entries.back().is_line) return std::nullopt;
    return p.entries.back().formula;
}

namespace {

struct Checker {
    const LogicMode &mode;
    CheckResult result;

    bool fail(std::vector<int> path, int idx, const std::string &msg) {
        path.push_back(idx);
        result.ok = false;
        result.error = {std::move(path), msg};
        return false;
    }

    // If u is substituted for v in body, does target result? Infers u.
    static bool matches_substitution(const Formula &body, const std::string &v,
                                     const Formula &target) {
        if (!free_vars(body).count(v)) return body == target;
        for (auto &u : free_vars(target)) {
            if (!substitutable(body, v, u)) continue;
            if (substitute(body, v, u) == target) return true;
        }
        // also u = v itself (identity substitution)
        return substitute(body, v, v) == target;
    }

    bool check_node(const ProofNode &node, const std::vector<Formula> &reiterables,
                    const std::vector<int> &path) {
        if (node.entries.empty()) return fail(path, 0, "empty proof node");
        if (!node.entries[0].is_line || node.entries[0].just.rule != Rule::Hyp)
            return fail(path, 0, "first entry must be the hypothesis");

        std::vector<Formula> formulas_so_far;  // grows as we scan; feeds nested reiterables
        for (size_t idx = 0; idx < node.entries.size(); idx++) {
            const auto &e = node.entries[idx];
            if (!e.is_line) {
                std::vector<Formula> inner = reiterables;
                inner.insert(inner.end(), formulas_so_far.begin(), formulas_so_far.end());
                std::vector<int> sub_path = path;
                sub_path.push_back(static_cast<int>(idx));
                if (!check_node(*e.sub, inner, sub_path)) return false;
                continue;
            }
            if (!check_line(node, static_cast<int>(idx), reiterables, path)) return false;
            formulas_so_far.push_back(e.formula);
        }
        return true;
    }

    // cited index must be a formula entry strictly before `before`
    const Formula *cited_formula(const ProofNode &node, int cite, int before) {
        if (cite < 0 || cite >= before) return nullptr;
        const auto &e = node.entries[cite];
        if (!e.is_line) return nullptr;
        return &e.formula;
    }

    const ProofNode *cited_subproof(const ProofNode &node, int cite, int before) {
        if (cite < 0 || cite >= before) return nullptr;
        const auto &e = node.entries[cite];
        if (e.is_line) return nullptr;
        return e.sub.get();
    }

    bool check_line(const ProofNode &node, int idx, const std::vector<Formula> &reiterables,
                    const std::vector<int> &path) {
        const auto &e = node.entries[idx];
        const Formula &f = e.formula;
        const auto &cites = e.just.cites;
        auto arity = [&](size_t k, const char *what) {
            if (cites.size() != k) {
                fail(path, idx, std::string(what) + ": expected " + std::to_string(k) +
                                    " citations, got " + std::to_string(cites.size()));
                return false;
            }
            return true;
        };

        switch (e.just.rule) {
            case Rule::Hyp:
                if (idx != 0) return fail(path, idx, "hypothesis only allowed as the first entry");
                return true;

            case Rule::AndI: {
                if (!arity(2, "andi")) return false;
                auto *a = cited_formula(node, cites[0], idx);
                auto *b = cited_formula(node, cites[1], idx);
                if (!a || !b) return fail(path, idx, "andi: citations must be earlier formulas");
                if (f.kind() != FKind::And || f.left() != *a || f.right() != *b)
                    return fail(path, idx, "andi: formula is not the conjunction of the citations");
                return true;
            }
            case Rule::AndE: {
                if (!arity(1, "ande")) return false;
                auto *a = cited_formula(node, cites[0], idx);
                if (!a || a->kind() != FKind::And)
                    return fail(path, idx, "ande: citation must be an earlier conjunction");
                if (f != a->left() && f != a->right())
                    return fail(path, idx, "ande: formula is not a conjunct of the citation");
                return true;
            }
            case Rule::OrI: {
                if (!arity(1, "ori")) return false;
                auto *a = cited_formula(node, cites[0], idx);
                if (!a) return fail(path, idx, "ori: citation must be an earlier formula");
                if (f.kind() != FKind::Or || (f.left() != *a && f.right() != *a))
                    return fail(path, idx, "ori: formula is not a disjunction with the citation");
                return true;
            }
            case Rule::OrE: {
                if (!arity(3, "ore")) return false;
                auto *d = cited_formula(node, cites[0], idx);
                if (!d || d->kind() != FKind::Or)
                    return fail(path, idx, "ore: first citation must be an earlier disjunction");
                if (cites[1] != idx - 2 || cites[2] != idx - 1)
                    return fail(path, idx,
                                "ore: case subproofs must immediately precede the conclusion");
                auto *s1 = cited_subproof(node, cites[1], idx);
                auto *s2 = cited_subproof(node, cites[2], idx);
                if (!s1 || !s2) return fail(path, idx, "ore: citations 2 and 3 must be subproofs");
                auto c1 = conclusion(*s1), c2 = conclusion(*s2);
                if (assumption(*s1) != d->left() || assumption(*s2) != d->right())
                    return fail(path, idx, "ore: case assumptions do not match the disjuncts");
                if (!c1 || !c2 || *c1 != f || *c2 != f)
                    return fail(path, idx, "ore: both cases must end with the conclusion");
                return true;
            }
            case Rule::NegI: {
                if (!arity(2, "negi")) return false;
                auto *psi = cited_formula(node, cites[0], idx);
                if (!psi)
                    return fail(path, idx,
                                "negi: first citation must be a formula of this node before the "
                                "subproof");
                if (cites[1] != idx - 1)
                    return fail(path, idx, "negi: subproof must immediately precede the conclusion");
                auto *s = cited_subproof(node, cites[1], idx);
                if (!s) return fail(path, idx, "negi: second citation must be a subproof");
                if (cites[0] >= cites[1])
                    return fail(path, idx, "negi: cited formula must occur before the subproof");
                auto c = conclusion(*s);
                if (!c || *c != Formula::neg(*psi))
                    return fail(path, idx,
                                "negi: subproof must end with the negation of the cited formula");
                if (f != Formula::neg(assumption(*s)))
                    return fail(path, idx,
                                "negi: formula must be the negation of the subproof assumption");
                return true;
            }
            case Rule::NegE: {
                if (!arity(2, "nege")) return false;
                auto *a = cited_formula(node, cites[0], idx);
                auto *b = cited_formula(node, cites[1], idx);
                if (!a || !b) return fail(path, idx, "nege: citations must be earlier formulas");
                if (*b != Formula::neg(*a))
                    return fail(path, idx,
                                "nege: second citation must be the negation of the first");
                return true;  // any formula may be concluded
            }
            case Rule::Reit: {
                if (!mode.allows_reit())
                    return fail(path, idx, std::string("reit not available in logic ") +
                                               to_string(mode.calc));
                for (auto &r : reiterables)
                    if (r == f) return true;
                return fail(path, idx, "reit: formula is not a reiterable from an enclosing proof");
            }
            case Rule::RAA: {
                if (!mode.allows_raa())
                    return fail(path, idx, std::string("raa not available in logic ") +
                                               to_string(mode.calc));
                if (!arity(2, "raa")) return false;
                auto *psi = cited_formula(node, cites[0], idx);
                if (!psi) return fail(path, idx, "raa: first citation must be an earlier formula");
                if (cites[1] != idx - 1)
                    return fail(path, idx, "raa: subproof must immediately precede the conclusion");
                auto *s = cited_subproof(node, cites[1], idx);
                if (!s) return fail(path, idx, "raa: second citation must be a subproof");
                if (cites[0] >= cites[1])
                    return fail(path, idx, "raa: cited formula must occur before the subproof");
                auto c = conclusion(*s);
                if (!c || *c != Formula::neg(*psi))
                    return fail(path, idx,
                                "raa: subproof must end with the negation of the cited formula");
                if (assumption(*s) != Formula::neg(f))
                    return fail(path, idx,
                                "raa: subproof must assume the negation of the conclusion");
                return true;
            }
            case Rule::ForallI: {
                if (!mode.first_order) return fail(path, idx, "foralli requires first-order mode");
                if (!arity(1, "foralli")) return false;
                auto *a = cited_formula(node, cites[0], idx);
                if (!a) return fail(path, idx, "foralli: citation must be an earlier formula");
                if (f.kind() != FKind::Forall || f.body() != *a)
                    return fail(path, idx, "foralli: formula must universally quantify the citation");
                const std::string &v = f.var();
                if (free_vars(assumption(node)).count(v))
                    return fail(path, idx, "foralli: variable occurs free in the hypothesis");
                if (mode.allows_reit())
                    for (auto &r : reiterables)
                        if (free_vars(r).count(v))
                            return fail(path, idx,
                                        "foralli: variable occurs free in a reiterable formula");
                return true;
            }
            case Rule::ForallE: {
                if (!mode.first_order) return fail(path, idx, "foralle requires first-order mode");
                if (!arity(1, "foralle")) return false;
                auto *a = cited_formula(node, cites[0], idx);
                if (!a || a->kind() != FKind::Forall)
                    return fail(path, idx, "foralle: citation must be a universal formula");
                if (!matches_substitution(a->body(), a->var(), f))
                    return fail(path, idx,
                                "foralle: formula is not a legal instance of the citation");
                return true;
            }
            case Rule::ExistsI: {
                if (!mode.first_order) return fail(path, idx, "existsi requires first-order mode");
                if (!arity(1, "existsi")) return false;
                auto *a = cited_formula(node, cites[0], idx);
                if (!a) return fail(path, idx, "existsi: citation must be an earlier formula");
                if (f.kind() != FKind::Exists)
                    return fail(path, idx, "existsi: formula must be existential");
                if (!matches_substitution(f.body(), f.var(), *a))
                    return fail(path, idx,
                                "existsi: citation is not a legal instance of the formula body");
                return true;
            }
            case Rule::ExistsE: {
                if (!mode.first_order) return fail(path, idx, "existse requires first-order mode");
                if (!arity(2, "existse")) return false;
                auto *a = cited_formula(node, cites[0], idx);
                if (!a || a->kind() != FKind::Exists)
                    return fail(path, idx, "existse: first citation must be an existential formula");
                if (cites[1] != idx - 1)
                    return fail(path, idx,
                                "existse: subproof must immediately precede the conclusion");
                auto *s = cited_subproof(node, cites[1], idx);
                if (!s) return fail(path, idx, "existse: second citation must be a subproof");
                if (assumption(*s) != a->body())
                    return fail(path, idx,
                                "existse: subproof must assume the body of the existential");
                auto c = conclusion(*s);
                if (!c || *c != f)
                    return fail(path, idx, "existse: subproof must end with the conclusion");
                if (free_vars(f).count(a->var()))
                    return fail(path, idx,
                                "existse: quantified variable occurs free in the conclusion");
                return true;
            }
        }
        return fail(path, idx, "unknown rule");
    }
};

}  // namespace

CheckResult check_proof(const ProofNode &p, const LogicMode &mode) {
    Checker c{mode, {}};
    c.check_node(p, {}, {});
    return c.result;
}

// ---------- constructions ----------

namespace {

// appends p2's entries (minus its hypothesis) onto out; citations into p2's
// body shift uniformly, while citations of p2's assumption are re-pointed to
// the entry of out that carries the same formula (the tail for glue, the
// shared hypothesis for pair)
void append_body(ProofNode &out, const ProofNode &p2, int assumption_target) {
    int delta = static_cast<int>(out.entries.size()) - 1;
    for (size_t i = 1; i < p2.entries.size(); i++) {
        const auto &e = p2.entries[i];
        if (e.is_line) {
            Justification j = e.just;
            for (auto &c : j.cites) c = c == 0 ? assumption_target : c + delta;
            out.entries.push_back(ProofNode::line(e.formula, std::move(j)));
        } else {
            out.entries.push_back(ProofNode::Entry{false, {}, {}, e.sub});
        }
    }
}

}  // namespace

ProofNode glue(const ProofNode &p1, const ProofNode &p2) {
    auto c1 = conclusion(p1);
    if (!c1 || *c1 != assumption(p2))
        throw std::invalid_argument("glue: conclusion of the first proof must be the assumption "
                                    "of the second");
    ProofNode out = p1;
    append_body(out, p2, static_cast<int>(p1.entries.size()) - 1);
    return out;
}

ProofNode pair_proof(const ProofNode &p1, const ProofNode &p2) {
    if (assumption(p1) != assumption(p2))
        throw std::invalid_argument("pair: proofs must share an assumption");
    auto c1 = conclusion(p1), c2 = conclusion(p2);
    if (!c1 || !c2) throw std::invalid_argument("pair: both proofs must end with formulas");
    ProofNode out = p1;
    int i1 = static_cast<int>(out.entries.size()) - 1;
    append_body(out, p2, 0);
    int i2 = static_cast<int>(out.entries.size()) - 1;
    out.entries.push_back(
        ProofNode::line(Formula::conj(*c1, *c2), {Rule::AndI, {i1, i2}}));
    return out;
}

ProofNode cases_proof(const Formula &disj, const ProofNode &p1, const ProofNode &p2) {
    if (disj.kind() != FKind::Or) throw std::invalid_argument("cases: not a disjunction");
    auto c1 = conclusion(p1), c2 = conclusion(p2);
    if (!c1 || !c2 || *c1 != *c2)
        throw std::invalid_argument("cases: both proofs must end with the same formula");
    if (assumption(p1) != disj.left() || assumption(p2) != disj.right())
        throw std::invalid_argument("cases: assumptions must match the disjuncts");
    ProofNode out;
    out.entries.push_back(ProofNode::line(disj, {Rule::Hyp, {}}));
    out.entries.push_back(ProofNode::subproof(p1));
    out.entries.push_back(ProofNode::subproof(p2));
    out.entries.push_back(ProofNode::line(*c1, {Rule::OrE, {0, 1, 2}}));
    return out;
}

ProofNode dni(const Formula &phi) {
    ProofNode inner;
    inner.entries.push_back(ProofNode::line(Formula::neg(phi), {Rule::Hyp, {}}));
    ProofNode out;
    out.entries.push_back(ProofNode::line(phi, {Rule::Hyp, {}}));
    out.entries.push_back(ProofNode::subproof(inner));
    out.entries.push_back(ProofNode::line(Formula::neg(Formula::neg(phi)), {Rule::NegI, {0, 1}}));
    return out;
}

ProofNode contrapose(const ProofNode &p) {
    auto c = conclusion(p);
    if (!c) throw std::invalid_argument("contrapose: proof must end with a formula");
    Formula phi = assumption(p), psi = *c;
    // inner: from phi reach psi, then derive ~~psi against the outer hypothesis ~psi
    ProofNode inner = p;
    int psi_idx = static_cast<int>(inner.entries.size()) - 1;
    ProofNode unit;
    unit.entries.push_back(ProofNode::line(Formula::neg(psi), {Rule::Hyp, {}}));
    inner.entries.push_back(ProofNode::subproof(unit));
    inner.entries.push_back(ProofNode::line(Formula::neg(Formula::neg(psi)),
                                            {Rule::NegI, {psi_idx, psi_idx + 1}}));
    ProofNode out;
    out.entries.push_back(ProofNode::line(Formula::neg(psi), {Rule::Hyp, {}}));
    out.entries.push_back(ProofNode::subproof(inner));
    out.entries.push_back(ProofNode::line(Formula::neg(phi), {Rule::NegI, {0, 1}}));
    return out;
}

}  // namespace fl
