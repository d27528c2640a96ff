#include <fstream>
#include <sstream>

#include "doctest.h"
#include "fixtures.hpp"
#include "fl/enumerate.hpp"
#include "fl/fitch.hpp"
#include "fl/prooftext.hpp"

using namespace fl;

namespace {

std::string slurp(const std::string &rel) {
    std::ifstream in(std::string(TEST_DATA_DIR) + "/" + rel);
    REQUIRE(in.good());
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

ProofNode load(const std::string &name) { return parse_proof_text(slurp("proofs/" + name)); }

const LogicMode kF{Calculus::F, false};
const LogicMode kO{Calculus::O, false};
const LogicMode kJ{Calculus::J, false};
const LogicMode kC{Calculus::C, false};

}  // namespace

TEST_CASE("the double negation introduction proof checks in the base logic") {
    auto p = load("dni.fitch");
    CHECK(check_proof(p, kF).ok);
    CHECK(conclusion(p) == parse("~~p"));
    CHECK(assumption(p) == parse("p"));
}

TEST_CASE("one-formula proofs are proofs, partial proofs have no conclusion") {
    ProofNode unit;
    unit.entries.push_back(ProofNode::line(parse("p & q"), {Rule::Hyp, {}}));
    CHECK(check_proof(unit, kF).ok);
    CHECK(conclusion(unit) == parse("p & q"));

    ProofNode partial;
    partial.entries.push_back(ProofNode::line(parse("p"), {Rule::Hyp, {}}));
    ProofNode sub;
    sub.entries.push_back(ProofNode::line(parse("q"), {Rule::Hyp, {}}));
    partial.entries.push_back(ProofNode::subproof(sub));
    CHECK(check_proof(partial, kF).ok);
    CHECK_FALSE(conclusion(partial).has_value());
}

TEST_CASE("reiteration splits the logics") {
    auto fig = load("distributivity_reiteration.fitch");
    auto under_f = check_proof(fig, kF);
    CHECK_FALSE(under_f.ok);
    // the first reiteration is entry 1 of the first subproof (entry 5 of the root)
    CHECK(under_f.error.path == std::vector<int>{5, 1});
    CHECK(under_f.error.message.find("reit") != std::string::npos);
    CHECK(check_proof(fig, kJ).ok);
    CHECK(check_proof(fig, kC).ok);
    CHECK_FALSE(check_proof(fig, kO).ok);
}

TEST_CASE("the pseudocomplementation pattern needs reiteration") {
    auto fig = load("pseudocomplementation_reiteration.fitch");
    CHECK(check_proof(fig, kJ).ok);
    CHECK(conclusion(fig) == parse("~p"));
    auto under_f = check_proof(fig, kF);
    CHECK_FALSE(under_f.ok);
    CHECK(under_f.error.path == std::vector<int>{1, 1});
}

TEST_CASE("the contraposition proof checks in the base logic") {
    auto p = load("contraposition.fitch");
    CHECK(check_proof(p, kF).ok);
    CHECK(conclusion(p) == parse("~(p & q)"));
}

TEST_CASE("reductio is orthologic-only") {
    auto p = load("raa_dne.fitch");
    CHECK(check_proof(p, kO).ok);
    CHECK(check_proof(p, kC).ok);
    CHECK(conclusion(p) == parse("p"));
    auto under_f = check_proof(p, kF);
    CHECK_FALSE(under_f.ok);
    CHECK(under_f.error.message.find("raa") != std::string::npos);
    CHECK_FALSE(check_proof(p, kJ).ok);
}

TEST_CASE("negation introduction cannot reach across an intervening assumption") {
    // shape: <p, <q, <r, ..., ~p>, ~r>> where the cited formula lives two
    // levels up; the inner citation can only name entries of its own node
    ProofNode innermost;
    innermost.entries.push_back(ProofNode::line(parse("r"), {Rule::Hyp, {}}));
    ProofNode holder;  // derive ~p inside from r and the distant p -- impossible;
    holder.entries.push_back(ProofNode::line(parse("q"), {Rule::Hyp, {}}));
    holder.entries.push_back(ProofNode::subproof(innermost));
    holder.entries.push_back(ProofNode::line(parse("~r"), {Rule::NegI, {0, 1}}));
    ProofNode root;
    root.entries.push_back(ProofNode::line(parse("p"), {Rule::Hyp, {}}));
    root.entries.push_back(ProofNode::subproof(holder));
    auto res = check_proof(root, kF);
    CHECK_FALSE(res.ok);  // subproof ends with r, not ~q
    CHECK(res.error.path == std::vector<int>{1, 2});
}

TEST_CASE("negation introduction may cite any earlier formula of the node") {
    // <p, q&p, q, <~q, ~q is its own unit>, ~~q> with the citation pointing at
    // entry 2, not the entry immediately before the subproof
    ProofNode unit;
    unit.entries.push_back(ProofNode::line(parse("~q"), {Rule::Hyp, {}}));
    ProofNode root;
    root.entries.push_back(ProofNode::line(parse("q & p"), {Rule::Hyp, {}}));
    root.entries.push_back(ProofNode::line(parse("q"), {Rule::AndE, {0}}));
    root.entries.push_back(ProofNode::line(parse("p"), {Rule::AndE, {0}}));
    root.entries.push_back(ProofNode::subproof(unit));
    root.entries.push_back(ProofNode::line(parse("~~q"), {Rule::NegI, {1, 3}}));
    CHECK(check_proof(root, kF).ok);
}

TEST_CASE("disjunction elimination requires the cases in final position") {
    ProofNode c1, c2;
    c1.entries.push_back(ProofNode::line(parse("p"), {Rule::Hyp, {}}));
    c1.entries.push_back(ProofNode::line(parse("p | q"), {Rule::OrI, {0}}));
    c2.entries.push_back(ProofNode::line(parse("q"), {Rule::Hyp, {}}));
    c2.entries.push_back(ProofNode::line(parse("p | q"), {Rule::OrI, {0}}));

    ProofNode good;
    good.entries.push_back(ProofNode::line(parse("p | q"), {Rule::Hyp, {}}));
    good.entries.push_back(ProofNode::subproof(c1));
    good.entries.push_back(ProofNode::subproof(c2));
    good.entries.push_back(ProofNode::line(parse("p | q"), {Rule::OrE, {0, 1, 2}}));
    CHECK(check_proof(good, kF).ok);

    ProofNode bad;  // an interloping line between the cases and the conclusion
    bad.entries.push_back(ProofNode::line(parse("p | q"), {Rule::Hyp, {}}));
    bad.entries.push_back(ProofNode::subproof(c1));
    bad.entries.push_back(ProofNode::subproof(c2));
    bad.entries.push_back(ProofNode::line(parse("(p | q) | r"), {Rule::OrI, {0}}));
    bad.entries.push_back(ProofNode::line(parse("p | q"), {Rule::OrE, {0, 1, 2}}));
    auto res = check_proof(bad, kF);
    CHECK_FALSE(res.ok);
    CHECK(res.error.message.find("immediately precede") != std::string::npos);
}

TEST_CASE("explosion and simple rules") {
    ProofNode p;
    p.entries.push_back(ProofNode::line(parse("p & ~p"), {Rule::Hyp, {}}));
    p.entries.push_back(ProofNode::line(parse("p"), {Rule::AndE, {0}}));
    p.entries.push_back(ProofNode::line(parse("~p"), {Rule::AndE, {0}}));
    p.entries.push_back(ProofNode::line(parse("q"), {Rule::NegE, {1, 2}}));
    CHECK(check_proof(p, kF).ok);
}

TEST_CASE("justification mistakes are located") {
    ProofNode p;
    p.entries.push_back(ProofNode::line(parse("p"), {Rule::Hyp, {}}));
    p.entries.push_back(ProofNode::line(parse("p & q"), {Rule::AndI, {0, 0}}));
    auto res = check_proof(p, kF);
    CHECK_FALSE(res.ok);
    CHECK(res.error.path == std::vector<int>{1});

    ProofNode fwd;
    fwd.entries.push_back(ProofNode::line(parse("p"), {Rule::Hyp, {}}));
    fwd.entries.push_back(ProofNode::line(parse("q"), {Rule::AndE, {2}}));
    fwd.entries.push_back(ProofNode::line(parse("q & q"), {Rule::AndI, {1, 1}}));
    CHECK_FALSE(check_proof(fwd, kF).ok);  // forward citation

    ProofNode hyp_later;
    hyp_later.entries.push_back(ProofNode::line(parse("p"), {Rule::Hyp, {}}));
    hyp_later.entries.push_back(ProofNode::line(parse("q"), {Rule::Hyp, {}}));
    CHECK_FALSE(check_proof(hyp_later, kF).ok);
}

TEST_CASE("proof constructions check and compose") {
    auto to_q = [] {  // p & q |- q
        ProofNode p;
        p.entries.push_back(ProofNode::line(parse("p & q"), {Rule::Hyp, {}}));
        p.entries.push_back(ProofNode::line(parse("q"), {Rule::AndE, {0}}));
        return p;
    }();
    auto to_qq = [] {  // q |- q | q
        ProofNode p;
        p.entries.push_back(ProofNode::line(parse("q"), {Rule::Hyp, {}}));
        p.entries.push_back(ProofNode::line(parse("q | q"), {Rule::OrI, {0}}));
        return p;
    }();

    SUBCASE("glue") {
        auto g = glue(to_q, to_qq);
        CHECK(check_proof(g, kF).ok);
        CHECK(assumption(g) == parse("p & q"));
        CHECK(conclusion(g) == parse("q | q"));
        CHECK_THROWS(glue(to_qq, to_q));
    }
    SUBCASE("pairing") {
        auto pr = pair_proof(to_q, to_q);
        CHECK(check_proof(pr, kF).ok);
        CHECK(conclusion(pr) == parse("q & q"));
    }
    SUBCASE("cases") {
        ProofNode left;  // p |- p | q
        left.entries.push_back(ProofNode::line(parse("p"), {Rule::Hyp, {}}));
        left.entries.push_back(ProofNode::line(parse("p | q"), {Rule::OrI, {0}}));
        ProofNode right;  // q |- p | q
        right.entries.push_back(ProofNode::line(parse("q"), {Rule::Hyp, {}}));
        right.entries.push_back(ProofNode::line(parse("p | q"), {Rule::OrI, {0}}));
        auto c = cases_proof(parse("p | q"), left, right);
        CHECK(check_proof(c, kF).ok);
        CHECK(conclusion(c) == parse("p | q"));
    }
    SUBCASE("double negation introduction construction") {
        auto d = dni(parse("p"));
        CHECK(check_proof(d, kF).ok);
        CHECK(conclusion(d) == parse("~~p"));
    }
    SUBCASE("contraposition construction") {
        auto c = contrapose(to_q);
        CHECK(check_proof(c, kF).ok);
        CHECK(assumption(c) == parse("~q"));
        CHECK(conclusion(c) == parse("~(p & q)"));
        auto cc = contrapose(c);
        CHECK(check_proof(cc, kF).ok);
        CHECK(conclusion(cc) == parse("~~q"));
    }
}

TEST_CASE("propositional proofs accepted in the base logic pass in every extension") {
    std::vector<ProofNode> corpus = {load("dni.fitch"), load("contraposition.fitch"),
                                     dni(parse("q | r")), contrapose(dni(parse("p")))};
    for (auto &p : corpus) {
        REQUIRE(check_proof(p, kF).ok);
        CHECK(check_proof(p, kO).ok);
        CHECK(check_proof(p, kJ).ok);
        CHECK(check_proof(p, kC).ok);
    }
}

TEST_CASE("accepted proofs are sound for the algebraic semantics") {
    std::vector<ProofNode> corpus = {load("dni.fitch"), load("contraposition.fitch"),
                                     dni(parse("p & q")), contrapose(dni(parse("p")))};
    for (auto &proof : corpus) {
        REQUIRE(check_proof(proof, kF).ok);
        Formula phi = assumption(proof);
        Formula psi = *conclusion(proof);
        for (int n = 1; n <= 5; n++)
            for (auto &[L, neg] : enumerate_expansions(n, NegClass::Weak))
                CHECK(holds(phi, psi, Algebra{L, neg, std::nullopt}));
    }
}

TEST_CASE("proof text round trip") {
    for (auto name : {"dni.fitch", "distributivity_reiteration.fitch", "contraposition.fitch",
                      "raa_dne.fitch"}) {
        auto p = load(name);
        auto q = parse_proof_text(print_proof_text(p));
        CHECK(print_proof_text(q) == print_proof_text(p));
    }
}

TEST_CASE("text format rejects citations across blocks") {
    // the inner line cites a line buried in a sibling subproof
    std::string bad =
        "p ; hyp\n"
        "  q ; hyp\n"
        "  q | p ; ori 2\n"
        "q | p ; ori 3\n";
    CHECK_THROWS(parse_proof_text(bad));
}
