#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

#include "CLI11.hpp"
#include "json.hpp"

#include "fl/decide.hpp"
#include "fl/enumerate.hpp"
#include "fl/fitch.hpp"
#include "fl/formula.hpp"
#include "fl/frame.hpp"
#include "fl/jsonio.hpp"
#include "fl/prooftext.hpp"
#include "fl/represent.hpp"
#include "fl/translate.hpp"

using nlohmann::json;
using namespace fl;

namespace {

constexpr int kYes = 0, kNo = 1, kUsage = 2;

std::string slurp(const std::string &path) {
    std::ifstream in(path);
    if (!in.good()) throw std::runtime_error("cannot read " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

Profile profile_by_name(const std::string &name) {
    if (name == "prop") return Profile::propositional();
    if (name == "imp") return Profile::with_imp();
    if (name == "fo") return Profile::first_order();
    if (name == "full") return Profile::full();
    throw std::runtime_error("unknown profile " + name);
}

json formula_ast(const Formula &f) {
    json j;
    switch (f.kind()) {
        case FKind::Atom: return json{{"atom", f.name()}};
        case FKind::Pred: return json{{"pred", f.name()}, {"args", f.args()}};
        case FKind::Neg: return json{{"neg", formula_ast(f.body())}};
        case FKind::And: return json{{"and", {formula_ast(f.left()), formula_ast(f.right())}}};
        case FKind::Or: return json{{"or", {formula_ast(f.left()), formula_ast(f.right())}}};
        case FKind::Imp: return json{{"imp", {formula_ast(f.left()), formula_ast(f.right())}}};
        case FKind::Forall: return json{{"forall", f.var()}, {"body", formula_ast(f.body())}};
        case FKind::Exists: return json{{"exists", f.var()}, {"body", formula_ast(f.body())}};
    }
    return j;
}

std::vector<int> states_of(Prop p, int n) {
    std::vector<int> out;
    for (int i = 0; i < n; i++)
        if ((p >> i) & 1) out.push_back(i);
    return out;
}

std::string show_states(Prop p, const Frame &F) {
    std::string out = "{";
    bool first = true;
    for (int i = 0; i < F.size; i++)
        if ((p >> i) & 1) {
            if (!first) out += ", ";
            out += F.label(i);
            first = false;
        }
    return out + "}";
}

int run_reproduce_counts(int max_n, bool as_json) {
    auto row = census(max_n);
    if (as_json) {
        json j;
        j["sizes"] = json::array();
        for (int n = 2; n <= max_n; n++) j["sizes"].push_back(n);
        j["lattices with weak pseudocomp."] = row.weak;
        j["lattices"] = row.lattices;
        j["pseudocomplemented lattices"] = row.pseudocomplemented;
        j["distributive lattices"] = row.distributive;
        j["ortholattices"] = row.ortho;
        std::cout << j.dump(2) << "\n";
        return kYes;
    }
    auto print_row = [&](const char *name, const std::vector<long long> &v) {
        std::cout << name;
        for (int i = static_cast<int>(std::string(name).size()); i < 34; i++) std::cout << ' ';
        for (auto x : v) {
            std::string s = std::to_string(x);
            for (int i = static_cast<int>(s.size()); i < 7; i++) std::cout << ' ';
            std::cout << s;
        }
        std::cout << "\n";
    };
    std::cout << "class / f(n)                      ";
    for (int n = 2; n <= max_n; n++) {
        std::string s = "f(" + std::to_string(n) + ")";
        for (int i = static_cast<int>(s.size()); i < 7; i++) std::cout << ' ';
        std::cout << s;
    }
    std::cout << "\n";
    print_row("lattices with weak pseudocomp.", row.weak);
    print_row("lattices", row.lattices);
    print_row("pseudocomplemented lattices", row.pseudocomplemented);
    print_row("distributive lattices", row.distributive);
    print_row("ortholattices", row.ortho);
    return kYes;
}

int run_reproduce_verdicts(const std::string &dir) {
    namespace fs = std::filesystem;
    std::vector<fs::path> files;
    for (auto &e : fs::directory_iterator(dir))
        if (e.path().extension() == ".txt") files.push_back(e.path());
    std::sort(files.begin(), files.end());
    if (files.empty()) throw std::runtime_error("no .txt corpus files in " + dir);
    int mismatches = 0, total = 0;
    for (auto &path : files) {
        std::istringstream in(slurp(path.string()));
        std::string line;
        while (std::getline(in, line)) {
            if (line.empty() || line[0] == '#') continue;
            auto colon = line.find(':');
            auto stile = line.find("|-");
            auto last = line.rfind(':');
            if (colon == std::string::npos || stile == std::string::npos || last <= stile)
                throw std::runtime_error("bad corpus line: " + line);
            auto calc = calculus_from_string(line.substr(0, colon));
            if (!calc) throw std::runtime_error("bad logic in: " + line);
            Formula phi = parse(line.substr(colon + 1, stile - colon - 1));
            Formula psi = parse(line.substr(stile + 2, last - stile - 2));
            bool expect = line.substr(last + 1).find("yes") != std::string::npos;
            bool got = decide(phi, psi, *calc);
            total++;
            bool ok = got == expect;
            if (!ok) mismatches++;
            std::cout << (ok ? "PASS " : "FAIL ") << to_string(*calc) << ": " << print(phi)
                      << " |- " << print(psi) << " : expected " << (expect ? "yes" : "no")
                      << ", got " << (got ? "yes" : "no") << "\n";
        }
    }
    std::cout << total - mismatches << "/" << total << " verdicts match\n";
    return mismatches == 0 ? kYes : kNo;
}

}  // namespace

int main(int argc, char **argv) {
    CLI::App app{"fundamental logic toolkit"};
    app.require_subcommand(1);
    bool as_json = false;
    app.add_flag("--json", as_json, "structured output");

    // parse
    auto *cmd_parse = app.add_subcommand("parse", "parse a formula and reprint it");
    std::string parse_profile = "full", parse_text;
    cmd_parse->add_option("--profile", parse_profile, "prop|imp|fo|full");
    cmd_parse->add_option("formula", parse_text)->required();

    // check-proof
    auto *cmd_check = app.add_subcommand("check-proof", "check a Fitch-style proof file");
    std::string check_logic = "F", check_file;
    bool check_fo = false;
    cmd_check->add_option("--logic", check_logic, "F|O|J|C");
    cmd_check->add_flag("--first-order", check_fo, "enable quantifier rules");
    cmd_check->add_option("file", check_file)->required();

    // decide
    auto *cmd_decide = app.add_subcommand("decide", "decide derivability");
    std::string decide_logic = "F", decide_phi, decide_psi;
    bool decide_show_trace = false;
    cmd_decide->add_option("--logic", decide_logic, "F|O|J|C");
    cmd_decide->add_flag("--trace", decide_show_trace, "dump the saturated sequent set");
    cmd_decide->add_option("phi", decide_phi)->required();
    cmd_decide->add_option("psi", decide_psi)->required();

    // countermodel
    auto *cmd_cm = app.add_subcommand("countermodel", "bounded refutation search");
    std::string cm_kind = "algebra", cm_phi, cm_psi;
    int cm_max = 5;
    cmd_cm->add_option("--kind", cm_kind, "algebra|frame");
    cmd_cm->add_option("--max-size", cm_max, "search bound");
    cmd_cm->add_option("phi", cm_phi)->required();
    cmd_cm->add_option("psi", cm_psi)->required();

    // enumerate
    auto *cmd_enum = app.add_subcommand("enumerate", "enumerate lattices or expansions");
    std::string enum_class = "weak";
    int enum_size = 4;
    bool enum_count_only = false;
    cmd_enum->add_option("--class", enum_class,
                         "lattice|distributive|pseudocomplemented|pre|proto|ultraweak|weak|pseudo|ortho");
    cmd_enum->add_option("--size", enum_size)->required();
    cmd_enum->add_flag("--count-only", enum_count_only);

    // fixpoints
    auto *cmd_fix = app.add_subcommand("fixpoints", "list the closure fixpoints of a frame");
    std::string fix_file;
    cmd_fix->add_option("--frame", fix_file)->required();

    // model-check
    auto *cmd_mc = app.add_subcommand("model-check", "evaluate a formula at a state");
    std::string mc_file, mc_formula;
    int mc_state = 0;
    cmd_mc->add_option("--model", mc_file)->required();
    cmd_mc->add_option("--state", mc_state)->required();
    cmd_mc->add_option("formula", mc_formula)->required();

    // check-frame
    auto *cmd_cf = app.add_subcommand("check-frame", "test a frame condition");
    std::string cf_file, cf_cond;
    cmd_cf->add_option("--frame", cf_file)->required();
    cmd_cf->add_option("--condition", cf_cond)->required();

    // represent
    auto *cmd_rep = app.add_subcommand("represent", "build a frame representing an algebra");
    std::string rep_construction, rep_algebra, rep_dense = "all";
    cmd_rep->add_option("--construction", rep_construction,
                        "negthm1..4|antitone|combimp|combimpneg|impthm1..5|"
                        "filter-ideal-neg|filter-ideal-imp")
        ->required();
    cmd_rep->add_option("--algebra", rep_algebra)->required();
    cmd_rep->add_option("--dense", rep_dense, "all|irreducible");

    // classify
    auto *cmd_class = app.add_subcommand("classify", "classify an algebra's operations");
    std::string class_algebra;
    cmd_class->add_option("--algebra", class_algebra)->required();

    // translate
    auto *cmd_tr = app.add_subcommand("translate", "apply a syntactic translation");
    std::string tr_which, tr_formula;
    cmd_tr->add_option("--which", tr_which, "g|t|m")->required();
    cmd_tr->add_option("formula", tr_formula)->required();

    // correspond
    auto *cmd_corr = app.add_subcommand("correspond", "frame-condition correspondence sweep");
    std::string corr_which = "all";
    int corr_max = 4, corr_jobs = 0;
    cmd_corr->add_option("--which", corr_which, "corr1..4|impcorr1..4|all");
    cmd_corr->add_option("--max-size", corr_max);
    cmd_corr->add_option("--jobs", corr_jobs, "worker count (0 = hardware)");

    // reproduce
    auto *cmd_repro = app.add_subcommand("reproduce", "rebuild published tables and verdicts");
    std::string repro_what, repro_corpus = "corpus";
    int repro_max = 7;
    cmd_repro->add_option("what", repro_what, "figure-counts|verdicts")->required();
    cmd_repro->add_option("--max", repro_max, "largest size for figure-counts");
    cmd_repro->add_option("--corpus", repro_corpus, "directory of golden verdict files");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        app.exit(e);
        return kUsage;
    }

    try {
        if (*cmd_parse) {
            Formula f = parse(parse_text, profile_by_name(parse_profile));
            if (as_json)
                std::cout << json{{"formula", print(f)}, {"ast", formula_ast(f)}}.dump(2) << "\n";
            else
                std::cout << print(f) << "\n";
            return kYes;
        }

        if (*cmd_check) {
            auto calc = calculus_from_string(check_logic);
            if (!calc) throw std::runtime_error("unknown logic " + check_logic);
            LogicMode mode{*calc, check_fo};
            Profile prof = check_fo ? Profile::first_order() : Profile::propositional();
            ProofNode proof = parse_proof_text(slurp(check_file), prof);
            auto res = check_proof(proof, mode);
            if (res.ok) {
                auto c = conclusion(proof);
                if (as_json)
                    std::cout << json{{"ok", true},
                                      {"assumption", print(assumption(proof))},
                                      {"conclusion", c ? print(*c) : ""}}.dump(2)
                              << "\n";
                else
                    std::cout << "ok: " << print(assumption(proof)) << " |- "
                              << (c ? print(*c) : "(partial proof)") << "\n";
                return kYes;
            }
            std::string where;
            for (int i : res.error.path) where += "/" + std::to_string(i);
            if (as_json)
                std::cout << json{{"ok", false}, {"path", res.error.path},
                                  {"message", res.error.message}}.dump(2)
                          << "\n";
            else
                std::cout << "proof error at entry " << where << ": " << res.error.message << "\n";
            return kNo;
        }

        if (*cmd_decide) {
            auto calc = calculus_from_string(decide_logic);
            if (!calc) throw std::runtime_error("unknown logic " + decide_logic);
            Formula phi = parse(decide_phi), psi = parse(decide_psi);
            bool yes = decide(phi, psi, *calc);
            if (decide_show_trace)
                for (auto &line : decide_trace(phi, psi, *calc)) std::cout << line << "\n";
            if (as_json)
                std::cout << json{{"derivable", yes}}.dump() << "\n";
            else
                std::cout << (yes ? "derivable" : "not derivable") << "\n";
            return yes ? kYes : kNo;
        }

        if (*cmd_cm) {
            Formula phi = parse(cm_phi), psi = parse(cm_psi);
            auto kind = cm_kind == "frame" ? CountermodelKind::FrameKind
                                           : CountermodelKind::AlgebraKind;
            if (cm_kind != "frame" && cm_kind != "algebra")
                throw std::runtime_error("unknown kind " + cm_kind);
            auto w = countermodel(phi, psi, cm_max, kind);
            if (!w) {
                std::cout << (as_json ? "null\n" : "no countermodel within the bound\n");
                return kNo;
            }
            if (auto *aw = std::get_if<AlgebraWitness>(&*w)) {
                json j;
                j["kind"] = "algebra";
                j["algebra"] = json::parse(algebra_to_json(aw->algebra));
                j["valuation"] = aw->valuation;
                std::cout << j.dump(2) << "\n";
            } else {
                auto &fw = std::get<FrameWitness>(*w);
                json j;
                j["kind"] = "frame";
                j["model"] = json::parse(model_to_json(fw.model));
                j["state"] = fw.state;
                std::cout << j.dump(2) << "\n";
            }
            return kYes;
        }

        if (*cmd_enum) {
            bool lattice_class = enum_class == "lattice" || enum_class == "distributive" ||
                                 enum_class == "pseudocomplemented";
            if (lattice_class) {
                long long count = 0;
                for (auto &L : enumerate_lattices(enum_size)) {
                    if (enum_class == "distributive" && !L.distributive()) continue;
                    if (enum_class == "pseudocomplemented" && !L.pseudocomplementation()) continue;
                    count++;
                    if (!enum_count_only)
                        std::cout << algebra_to_json(Algebra{L, {}, std::nullopt}) << "\n";
                }
                if (enum_count_only) std::cout << count << "\n";
                return kYes;
            }
            auto cls = neg_class_from_string(enum_class);
            if (!cls) throw std::runtime_error("unknown class " + enum_class);
            auto all = enumerate_expansions(enum_size, *cls);
            if (enum_count_only)
                std::cout << all.size() << "\n";
            else
                for (auto &[L, neg] : all)
                    std::cout << algebra_to_json(Algebra{L, neg, std::nullopt}) << "\n";
            return kYes;
        }

        if (*cmd_fix) {
            Frame F = frame_from_json(slurp(fix_file));
            auto fix = fixpoints(F);
            if (as_json) {
                json out = json::array();
                for (Prop p : fix) out.push_back(states_of(p, F.size));
                std::cout << out.dump(2) << "\n";
            } else {
                for (Prop p : fix) std::cout << show_states(p, F) << "\n";
                std::cout << fix.size() << " fixpoints\n";
            }
            return kYes;
        }

        if (*cmd_mc) {
            RelationalModel M = model_from_json(slurp(mc_file));
            Profile prof = M.domain_size > 0 ? Profile::first_order() : Profile::propositional();
            Formula f = parse(mc_formula, prof);
            if (mc_state < 0 || mc_state >= M.frame.size)
                throw std::runtime_error("state out of range");
            bool yes = force(M, mc_state, f);
            std::cout << (yes ? "forced" : "not forced") << "\n";
            return yes ? kYes : kNo;
        }

        if (*cmd_cf) {
            Frame F = frame_from_json(slurp(cf_file));
            auto cond = frame_condition_from_string(cf_cond);
            if (!cond) throw std::runtime_error("unknown condition " + cf_cond);
            bool yes = frame_condition(F, *cond);
            std::cout << cf_cond << ": " << (yes ? "holds" : "fails") << "\n";
            return yes ? kYes : kNo;
        }

        if (*cmd_rep) {
            Algebra A = algebra_from_json(slurp(rep_algebra));
            std::vector<int> V, Lam;
            if (rep_dense == "irreducible") {
                V = A.L.join_irreducibles();
                Lam = A.L.meet_irreducibles();
            } else if (rep_dense != "all") {
                throw std::runtime_error("--dense must be all or irreducible");
            }
            const std::string &c = rep_construction;
            PairFrame pf;
            VerifySpec spec;
            Frame second;  // keep alive for the two-relation case
            Prop rel_fix = 0;
            bool expect_iso = true;
            const Frame *frame = nullptr;
            const std::vector<Prop> *embed = nullptr;
            std::vector<std::pair<int, int>> pairs;
            FilterIdealFrame fi;
            if (c == "negthm1" || c == "negthm2" || c == "negthm3" || c == "negthm4") {
                NegClass cls = c == "negthm1"   ? NegClass::Pre
                               : c == "negthm2" ? NegClass::Proto
                               : c == "negthm3" ? NegClass::Ultraweak
                                                : NegClass::Weak;
                pf = frame_from_negation(A.L, A.neg, cls, V, Lam);
                spec.neg = &A.neg;
                frame = &pf.frame;
                embed = &pf.embed;
                pairs = pf.pairs;
            } else if (c == "antitone") {
                auto af = frame_from_antitone(A.L, A.neg, Lam);
                pf = af.pf;
                rel_fix = af.fix;
                spec.neg = &A.neg;
                spec.neg_style = VerifySpec::NegStyle::Relative;
                spec.relative_fix = rel_fix;
                frame = &pf.frame;
                embed = &pf.embed;
                pairs = pf.pairs;
            } else if (c == "combimp") {
                if (!A.imp) throw std::runtime_error("algebra has no implication");
                pf = frame_from_preconditional(A.L, *A.imp);
                spec.imp = &*A.imp;
                spec.imp_style = VerifySpec::ImpStyle::DoubleArrow;
                frame = &pf.frame;
                embed = &pf.embed;
                pairs = pf.pairs;
            } else if (c == "combimpneg") {
                if (!A.imp) throw std::runtime_error("algebra has no implication");
                auto tr = two_relation(A.L, *A.imp, A.neg);
                pf = tr.base;
                second = tr.second;
                spec.imp = &*A.imp;
                spec.imp_style = VerifySpec::ImpStyle::DoubleArrow;
                spec.neg = &A.neg;
                spec.neg_style = VerifySpec::NegStyle::SecondRelation;
                spec.second = &second;
                frame = &pf.frame;
                embed = &pf.embed;
                pairs = pf.pairs;
            } else if (c.rfind("impthm", 0) == 0 && c.size() == 7) {
                if (!A.imp) throw std::runtime_error("algebra has no implication");
                int part = c[6] - '0';
                pf = frame_from_preimplication(A.L, *A.imp, part, V, Lam);
                spec.imp = &*A.imp;
                frame = &pf.frame;
                embed = &pf.embed;
                pairs = pf.pairs;
            } else if (c == "filter-ideal-neg") {
                fi = filter_ideal(A.L, A.neg);
                spec.neg = &A.neg;
                frame = &fi.frame;
                embed = &fi.embed;
                pairs = fi.states;
                expect_iso = false;
            } else if (c == "filter-ideal-imp") {
                if (!A.imp) throw std::runtime_error("algebra has no implication");
                fi = filter_ideal(A.L, *A.imp);
                spec.imp = &*A.imp;
                frame = &fi.frame;
                embed = &fi.embed;
                pairs = fi.states;
                expect_iso = false;
            } else {
                throw std::runtime_error("unknown construction " + c);
            }
            auto rep = expect_iso ? verify_iso(A.L, *embed, *frame, spec)
                                  : verify_embedding(A.L, *embed, *frame, spec);
            json out;
            out["frame"] = json::parse(frame_to_json(*frame));
            json jp = json::array();
            for (auto &[a, b] : pairs) jp.push_back({a, b});
            out["pairs"] = jp;
            json emb = json::object();
            for (int a = 0; a < A.L.n; a++)
                emb[std::to_string(a)] = states_of((*embed)[a], frame->size);
            out["embedding"] = emb;
            if (spec.neg_style == VerifySpec::NegStyle::Relative)
                out["relative_fixpoint"] = states_of(rel_fix, frame->size);
            if (spec.neg_style == VerifySpec::NegStyle::SecondRelation)
                out["second_relation"] = json::parse(frame_to_json(second));
            out["verified"] = rep.embedding_ok;
            if (expect_iso) out["iso"] = rep.iso_ok;
            if (!rep.violations.empty()) out["violations"] = rep.violations;
            std::cout << out.dump(2) << "\n";
            return rep.ok(expect_iso) ? kYes : kNo;
        }

        if (*cmd_class) {
            Algebra A = algebra_from_json(slurp(class_algebra));
            json out;
            std::vector<std::string> neg_classes;
            for (auto c : classify_negation(A.L, A.neg)) neg_classes.push_back(to_string(c));
            out["negation"] = neg_classes;
            if (A.imp) {
                std::vector<std::string> imp_classes;
                for (auto c : classify_implication(A.L, *A.imp))
                    imp_classes.push_back(to_string(c));
                out["implication"] = imp_classes;
            }
            if (as_json) {
                std::cout << out.dump(2) << "\n";
            } else {
                std::cout << "negation:";
                for (auto &c : neg_classes) std::cout << " " << c;
                std::cout << "\n";
                if (A.imp) {
                    std::cout << "implication:";
                    for (auto c : classify_implication(A.L, *A.imp))
                        std::cout << " " << to_string(c);
                    std::cout << "\n";
                }
            }
            return kYes;
        }

        if (*cmd_tr) {
            if (tr_which == "g") {
                std::cout << print(g_translate(parse(tr_formula, Profile::first_order()))) << "\n";
            } else if (tr_which == "t") {
                std::cout << print_modal(t_translate(parse(tr_formula))) << "\n";
            } else if (tr_which == "m") {
                std::cout << print_modal(m_translate(parse(tr_formula))) << "\n";
            } else {
                throw std::runtime_error("unknown translation " + tr_which);
            }
            return kYes;
        }

        if (*cmd_corr) {
            int jobs = corr_jobs > 0 ? corr_jobs
                                     : static_cast<int>(std::thread::hardware_concurrency());
            if (jobs < 1) jobs = 1;
            std::vector<std::string> which;
            if (corr_which == "all")
                which = {"corr1",    "corr2",    "corr3",    "corr4",
                         "impcorr1", "impcorr2", "impcorr3", "impcorr4"};
            else
                which = {corr_which};
            bool all_ok = true;
            for (auto &w : which) {
                auto rep = correspondence_test(w, corr_max, jobs);
                std::cout << w << ": " << (rep.ok() ? "no violations" : "VIOLATIONS") << " over "
                          << rep.frames_checked << " frames\n";
                for (auto &v : rep.violations) std::cout << "  " << v << "\n";
                all_ok = all_ok && rep.ok();
            }
            return all_ok ? kYes : kNo;
        }

        if (*cmd_repro) {
            if (repro_what == "figure-counts") return run_reproduce_counts(repro_max, as_json);
            if (repro_what == "verdicts") return run_reproduce_verdicts(repro_corpus);
            throw std::runtime_error("unknown reproduction target " + repro_what);
        }
    } catch (const std::exception &e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    }
    return kUsage;
}
