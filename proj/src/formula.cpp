#include "fl/formula.hpp"

#include <algorithm>
#include <cctype>
#include <cstring>
#include <functional>
#include <sstream>
#include <unordered_set>

namespace fl {

struct Formula::Node {
    FKind kind;
    std::string name;
    std::vector<std::string> args;
    Formula lhs, rhs;
    size_t hash;
};

static size_t hash_combine(size_t seed, size_t v) {
    return seed ^ (v + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2));
}

static std::shared_ptr<const Formula::Node> make_node(FKind k, std::string name,
                                                      std::vector<std::string> args, Formula l,
                                                      Formula r) {
    auto n = std::make_shared<Formula::Node>();
    n->kind = k;
    n->name = std::move(name);
    n->args = std::move(args);
    n->lhs = l;
    n->rhs = r;
    size_t h = static_cast<size_t>(k) * 1315423911ULL;
    h = hash_combine(h, std::hash<std::string>{}(n->name));
    for (auto &a : n->args) h = hash_combine(h, std::hash<std::string>{}(a));
    if (l.valid()) h = hash_combine(h, l.hash());
    if (r.valid()) h = hash_combine(h, r.hash());
    n->hash = h;
    return n;
}

Formula Formula::atom(const std::string &name) {
    return Formula(make_node(FKind::Atom, name, {}, {}, {}));
}
Formula Formula::pred(const std::string &name, std::vector<std::string> args) {
    return Formula(make_node(FKind::Pred, name, std::move(args), {}, {}));
}
Formula Formula::neg(Formula b) { return Formula(make_node(FKind::Neg, "", {}, b, {})); }
Formula Formula::conj(Formula a, Formula b) { return Formula(make_node(FKind::And, "", {}, a, b)); }
Formula Formula::disj(Formula a, Formula b) { return Formula(make_node(FKind::Or, "", {}, a, b)); }
Formula Formula::imp(Formula a, Formula b) { return Formula(make_node(FKind::Imp, "", {}, a, b)); }
Formula Formula::forall(const std::string &v, Formula b) {
    return Formula(make_node(FKind::Forall, v, {}, b, {}));
}
Formula Formula::exists(const std::string &v, Formula b) {
    return Formula(make_node(FKind::Exists, v, {}, b, {}));
}
Formula Formula::bot() {
    Formula p0 = atom("p0");
    return conj(p0, neg(p0));
}
Formula Formula::top() { return neg(bot()); }

FKind Formula::kind() const { return n_->kind; }
const std::string &Formula::name() const { return n_->name; }
const std::vector<std::string> &Formula::args() const { return n_->args; }
Formula Formula::left() const { return n_->lhs; }
Formula Formula::right() const { return n_->rhs; }
size_t Formula::hash() const { return n_ ? n_->hash : 0; }

bool Formula::operator==(const Formula &o) const {
    if (n_ == o.n_) return true;
    if (!n_ || !o.n_) return false;
    if (n_->hash != o.n_->hash || n_->kind != o.n_->kind) return false;
    if (n_->name != o.n_->name || n_->args != o.n_->args) return false;
    return n_->lhs == o.n_->lhs && n_->rhs == o.n_->rhs;
}

int Formula::compare(const Formula &a, const Formula &b) {
    if (a.n_ == b.n_) return 0;
    if (!a.n_) return -1;
    if (!b.n_) return 1;
    if (a.n_->kind != b.n_->kind) return a.n_->kind < b.n_->kind ? -1 : 1;
    if (int c = a.n_->name.compare(b.n_->name)) return c < 0 ? -1 : 1;
    if (a.n_->args != b.n_->args) return a.n_->args < b.n_->args ? -1 : 1;
    if (int c = compare(a.n_->lhs, b.n_->lhs)) return c;
    return compare(a.n_->rhs, b.n_->rhs);
}

size_t Formula::size() const {
    if (!n_) return 0;
    return 1 + n_->lhs.size() + n_->rhs.size();
}

bool Formula::is_propositional() const {
    if (!n_) return true;
    switch (n_->kind) {
        case FKind::Pred:
        case FKind::Forall:
        case FKind::Exists: return false;
        default: return n_->lhs.is_propositional() && n_->rhs.is_propositional();
    }
}

bool Formula::contains_imp() const {
    if (!n_) return false;
    if (n_->kind == FKind::Imp) return true;
    return n_->lhs.contains_imp() || n_->rhs.contains_imp();
}

// ---------- parser ----------

namespace {

struct Parser {
    const std::string &s;
    size_t pos = 0;
    Profile profile;

    void skip_ws() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) pos++;
    }
    bool eat(const char *tok) {
        skip_ws();
        size_t len = std::strlen(tok);
        if (s.compare(pos, len, tok) == 0) {
            pos += len;
            return true;
        }
        return false;
    }
    char peek() {
        skip_ws();
        return pos < s.size() ? s[pos] : '\0';
    }
    [[noreturn]] void fail(const std::string &msg) { throw ParseError(msg, pos); }

    static bool ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
    static bool ident_char(char c) {
        return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '\'';
    }

    std::string ident() {
        skip_ws();
        if (pos >= s.size() || !ident_start(s[pos])) fail("expected identifier");
        size_t start = pos;
        while (pos < s.size() && ident_char(s[pos])) pos++;
        return s.substr(start, pos - start);
    }

    Formula formula() {
        Formula left = or_level();
        skip_ws();
        if (s.compare(pos, 2, "->") == 0) {
            if (!profile.imp) fail("'->' requires the implication profile");
            pos += 2;
            Formula right = formula();  // right-associative
            return Formula::imp(left, right);
        }
        return left;
    }

    Formula or_level() {
        Formula f = and_level();
        while (true) {
            skip_ws();
            if (pos < s.size() && s[pos] == '|') {
                pos++;
                f = Formula::disj(f, and_level());
            } else
                break;
        }
        return f;
    }

    Formula and_level() {
        Formula f = neg_level();
        while (true) {
            skip_ws();
            if (pos < s.size() && s[pos] == '&') {
                pos++;
                f = Formula::conj(f, neg_level());
            } else
                break;
        }
        return f;
    }

    Formula neg_level() {
        skip_ws();
        if (pos < s.size() && s[pos] == '~') {
            pos++;
            return Formula::neg(neg_level());
        }
        return atom_level();
    }

    Formula atom_level() {
        skip_ws();
        if (pos >= s.size()) fail("unexpected end of input");
        if (s[pos] == '(') {
            pos++;
            Formula f = formula();
            if (!eat(")")) fail("expected ')'");
            return f;
        }
        std::string id = ident();
        if (id == "bot") return Formula::bot();
        if (id == "top") return Formula::top();
        if (id == "forall" || id == "exists") {
            if (!profile.quantifiers) fail("quantifiers require the first-order profile");
            std::string v = ident();
            Formula b = neg_level();
            return id == "forall" ? Formula::forall(v, b) : Formula::exists(v, b);
        }
        if (id == "p0") fail("'p0' is reserved (used by the bot/top abbreviations)");
        skip_ws();
        if (pos < s.size() && s[pos] == '(') {
            if (!profile.quantifiers) fail("predicate atoms require the first-order profile");
            pos++;
            std::vector<std::string> args;
            args.push_back(ident());
            while (eat(",")) args.push_back(ident());
            if (!eat(")")) fail("expected ')' after predicate arguments");
            return Formula::pred(id, std::move(args));
        }
        return Formula::atom(id);
    }
};

// precedence levels: 0 formula(->), 1 or, 2 and, 3 neg, 4 atom
void print_rec(const Formula &f, int level, std::string &out) {
    // bot/top abbreviations round-trip through the parser
    static const Formula kBot = Formula::bot();
    static const Formula kTop = Formula::top();
    if (f == kBot) {
        out += "bot";
        return;
    }
    if (f == kTop) {
        out += "top";
        return;
    }
    auto paren = [&](int mylevel, auto &&body) {
        bool need = mylevel < level;
        if (need) out += '(';
        body();
        if (need) out += ')';
    };
    switch (f.kind()) {
        case FKind::Atom: out += f.name(); break;
        case FKind::Pred: {
            out += f.name();
            out += '(';
            for (size_t i = 0; i < f.args().size(); i++) {
                if (i) out += ", ";
                out += f.args()[i];
            }
            out += ')';
            break;
        }
        case FKind::Neg:
            out += '~';
            print_rec(f.body(), 3, out);
            break;
        case FKind::And:
            paren(2, [&] {
                print_rec(f.left(), 2, out);
                out += " & ";
                print_rec(f.right(), 3, out);
            });
            break;
        case FKind::Or:
            paren(1, [&] {
                print_rec(f.left(), 1, out);
                out += " | ";
                print_rec(f.right(), 2, out);
            });
            break;
        case FKind::Imp:
            paren(0, [&] {
                print_rec(f.left(), 1, out);
                out += " -> ";
                print_rec(f.right(), 0, out);
            });
            break;
        case FKind::Forall:
        case FKind::Exists:
            out += (f.kind() == FKind::Forall ? "forall " : "exists ");
            out += f.var();
            out += ' ';
            print_rec(f.body(), 3, out);
            break;
    }
}

}  // namespace

Formula parse(const std::string &text, const Profile &profile) {
    Parser p{text, 0, profile};
    Formula f = p.formula();
    p.skip_ws();
    if (p.pos != text.size()) p.fail("trailing input");
    return f;
}

std::string print(const Formula &f) {
    std::string out;
    print_rec(f, 0, out);
    return out;
}

// ---------- variables and substitution ----------

static void free_vars_rec(const Formula &f, std::set<std::string> &bound,
                          std::set<std::string> &out) {
    switch (f.kind()) {
        case FKind::Atom: break;
        case FKind::Pred:
            for (auto &a : f.args())
                if (!bound.count(a)) out.insert(a);
            break;
        case FKind::Neg: free_vars_rec(f.body(), bound, out); break;
        case FKind::And:
        case FKind::Or:
        case FKind::Imp:
            free_vars_rec(f.left(), bound, out);
            free_vars_rec(f.right(), bound, out);
            break;
        case FKind::Forall:
        case FKind::Exists: {
            bool fresh = bound.insert(f.var()).second;
            free_vars_rec(f.body(), bound, out);
            if (fresh) bound.erase(f.var());
            break;
        }
    }
}

std::set<std::string> free_vars(const Formula &f) {
    std::set<std::string> bound, out;
    free_vars_rec(f, bound, out);
    return out;
}

// true iff no free occurrence of v in f lies within the scope of a quantifier binding u
bool substitutable(const Formula &f, const std::string &v, const std::string &u) {
    switch (f.kind()) {
        case FKind::Atom:
        case FKind::Pred: return true;
        case FKind::Neg: return substitutable(f.body(), v, u);
        case FKind::And:
        case FKind::Or:
        case FKind::Imp:
            return substitutable(f.left(), v, u) && substitutable(f.right(), v, u);
        case FKind::Forall:
        case FKind::Exists:
            if (f.var() == v) return true;  // no free v below
            if (!free_vars(f).count(v)) return true;
            if (f.var() == u) return false;  // capture
            return substitutable(f.body(), v, u);
    }
    return true;
}

Formula substitute(const Formula &f, const std::string &v, const std::string &u) {
    if (!substitutable(f, v, u)) throw std::invalid_argument("substitution would capture " + u);
    std::function<Formula(const Formula &)> go = [&](const Formula &g) -> Formula {
        switch (g.kind()) {
            case FKind::Atom: return g;
            case FKind::Pred: {
                std::vector<std::string> args = g.args();
                for (auto &a : args)
                    if (a == v) a = u;
                return Formula::pred(g.name(), std::move(args));
            }
            case FKind::Neg: return Formula::neg(go(g.body()));
            case FKind::And: return Formula::conj(go(g.left()), go(g.right()));
            case FKind::Or: return Formula::disj(go(g.left()), go(g.right()));
            case FKind::Imp: return Formula::imp(go(g.left()), go(g.right()));
            case FKind::Forall:
            case FKind::Exists: {
                if (g.var() == v) return g;  // v bound here
                Formula b = go(g.body());
                return g.kind() == FKind::Forall ? Formula::forall(g.var(), b)
                                                 : Formula::exists(g.var(), b);
            }
        }
        return g;
    };
    return go(f);
}

std::vector<Formula> subformulas(const Formula &f) {
    std::vector<Formula> out;
    std::unordered_set<Formula, FormulaHash> seen;
    std::function<void(const Formula &)> go = [&](const Formula &g) {
        if (!g.valid() || !seen.insert(g).second) return;
        out.push_back(g);
        go(g.left());
        go(g.right());
    };
    go(f);
    std::sort(out.begin(), out.end());
    return out;
}

std::set<std::string> atom_names(const Formula &f) {
    std::set<std::string> out;
    std::function<void(const Formula &)> go = [&](const Formula &g) {
        if (!g.valid()) return;
        if (g.kind() == FKind::Atom || g.kind() == FKind::Pred) out.insert(g.name());
        go(g.left());
        go(g.right());
    };
    go(f);
    return out;
}

}  // namespace fl
