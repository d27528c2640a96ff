#include "fl/translate.hpp"

#include <stdexcept>

namespace fl {

struct ModalFormula::Node {
    MKind kind;
    std::string name;
    ModalFormula lhs, rhs;
};

namespace {
std::shared_ptr<const ModalFormula::Node> mk_node(MKind k, std::string name, ModalFormula l,
                                                  ModalFormula r);
}

ModalFormula ModalFormula::atom(const std::string &name) {
    return ModalFormula(mk_node(MKind::Atom, name, {}, {}));
}
ModalFormula ModalFormula::neg(ModalFormula a) { return ModalFormula(mk_node(MKind::Neg, "", a, {})); }
ModalFormula ModalFormula::conj(ModalFormula a, ModalFormula b) {
    return ModalFormula(mk_node(MKind::And, "", a, b));
}
ModalFormula ModalFormula::disj(ModalFormula a, ModalFormula b) {
    return ModalFormula(mk_node(MKind::Or, "", a, b));
}
ModalFormula ModalFormula::imp(ModalFormula a, ModalFormula b) {
    return ModalFormula(mk_node(MKind::Imp, "", a, b));
}
ModalFormula ModalFormula::all_past(ModalFormula a) {
    return ModalFormula(mk_node(MKind::AllPast, "", a, {}));
}
ModalFormula ModalFormula::some_past(ModalFormula a) {
    return ModalFormula(mk_node(MKind::SomePast, "", a, {}));
}
ModalFormula ModalFormula::some_future(ModalFormula a) {
    return ModalFormula(mk_node(MKind::SomeFuture, "", a, {}));
}
ModalFormula ModalFormula::box(ModalFormula a) { return ModalFormula(mk_node(MKind::Box, "", a, {})); }
ModalFormula ModalFormula::dia(ModalFormula a) { return ModalFormula(mk_node(MKind::Dia, "", a, {})); }

namespace {
std::shared_ptr<const ModalFormula::Node> mk_node(MKind k, std::string name, ModalFormula l,
                                                  ModalFormula r) {
    auto n = std::make_shared<ModalFormula::Node>();
    n->kind = k;
    n->name = std::move(name);
    n->lhs = l;
    n->rhs = r;
    return n;
}
}  // namespace

MKind ModalFormula::kind() const { return n_->kind; }
const std::string &ModalFormula::name() const { return n_->name; }
ModalFormula ModalFormula::left() const { return n_->lhs; }
ModalFormula ModalFormula::right() const { return n_->rhs; }

bool ModalFormula::operator==(const ModalFormula &o) const {
    if (n_ == o.n_) return true;
    if (!n_ || !o.n_) return false;
    if (n_->kind != o.n_->kind || n_->name != o.n_->name) return false;
    return n_->lhs == o.n_->lhs && n_->rhs == o.n_->rhs;
}

// precedence: 0 ->, 1 |, 2 &, 3 prefix/atom
static void print_modal_rec(const ModalFormula &f, int level, std::string &out) {
    auto paren = [&](int mylevel, auto &&body) {
        bool need = mylevel < level;
        if (need) out += '(';
        body();
        if (need) out += ')';
    };
    switch (f.kind()) {
        case MKind::Atom: out += f.name(); break;
        case MKind::Neg:
            out += '~';
            print_modal_rec(f.left(), 3, out);
            break;
        case MKind::AllPast:
            out += "H ";
            print_modal_rec(f.left(), 3, out);
            break;
        case MKind::SomePast:
            out += "P ";
            print_modal_rec(f.left(), 3, out);
            break;
        case MKind::SomeFuture:
            out += "F ";
            print_modal_rec(f.left(), 3, out);
            break;
        case MKind::Box:
            out += "[]";
            print_modal_rec(f.left(), 3, out);
            break;
        case MKind::Dia:
            out += "<>";
            print_modal_rec(f.left(), 3, out);
            break;
        case MKind::And:
            paren(2, [&] {
                print_modal_rec(f.left(), 2, out);
                out += " & ";
                print_modal_rec(f.right(), 3, out);
            });
            break;
        case MKind::Or:
            paren(1, [&] {
                print_modal_rec(f.left(), 1, out);
                out += " | ";
                print_modal_rec(f.right(), 2, out);
            });
            break;
        case MKind::Imp:
            paren(0, [&] {
                print_modal_rec(f.left(), 1, out);
                out += " -> ";
                print_modal_rec(f.right(), 0, out);
            });
            break;
    }
}

std::string print_modal(const ModalFormula &f) {
    std::string out;
    print_modal_rec(f, 0, out);
    return out;
}

// ---------- translations ----------

Formula g_translate(const Formula &f) {
    switch (f.kind()) {
        case FKind::Atom:
        case FKind::Pred: return Formula::neg(Formula::neg(f));
        case FKind::Neg: return Formula::neg(g_translate(f.body()));
        case FKind::And: return Formula::conj(g_translate(f.left()), g_translate(f.right()));
        case FKind::Or:
            // g(a | b) = g(~(~a & ~b)), unfolded
            return Formula::neg(Formula::conj(Formula::neg(g_translate(f.left())),
                                              Formula::neg(g_translate(f.right()))));
        case FKind::Forall: return Formula::forall(f.var(), g_translate(f.body()));
        case FKind::Exists:
            return Formula::neg(Formula::forall(f.var(), Formula::neg(g_translate(f.body()))));
        case FKind::Imp: throw std::invalid_argument("g translation is not defined for ->");
    }
    return f;
}

ModalFormula t_translate(const Formula &f) {
    switch (f.kind()) {
        case FKind::Atom:
            return ModalFormula::all_past(ModalFormula::some_future(ModalFormula::atom(f.name())));
        case FKind::Neg: return ModalFormula::all_past(ModalFormula::neg(t_translate(f.body())));
        case FKind::And: return ModalFormula::conj(t_translate(f.left()), t_translate(f.right()));
        case FKind::Or:
            return ModalFormula::all_past(ModalFormula::some_future(
                ModalFormula::disj(t_translate(f.left()), t_translate(f.right()))));
        default: throw std::invalid_argument("t translation is defined on the {~,&,|} language");
    }
}

ModalFormula m_translate(const Formula &f) {
    switch (f.kind()) {
        case FKind::Atom: return ModalFormula::atom(f.name());
        case FKind::Neg: return ModalFormula::box(ModalFormula::neg(m_translate(f.body())));
        case FKind::And: return ModalFormula::conj(m_translate(f.left()), m_translate(f.right()));
        default: throw std::invalid_argument("m translation is defined on the {&,~} fragment");
    }
}

// ---------- classical evaluation ----------

Prop modal_extension(const RelationalModel &M, const ModalFormula &f, ModalEvalMode mode) {
    const Frame &F = M.frame;
    auto sym = [&](int x) { return F.rel[x] | F.preds[x]; };
    switch (f.kind()) {
        case MKind::Atom: {
            auto it = M.valuation.find(f.name());
            if (it == M.valuation.end())
                throw std::invalid_argument("uninterpreted atom " + f.name());
            return it->second;
        }
        case MKind::Neg: return F.universe() & ~modal_extension(M, f.left(), mode);
        case MKind::And:
            return modal_extension(M, f.left(), mode) & modal_extension(M, f.right(), mode);
        case MKind::Or:
            return modal_extension(M, f.left(), mode) | modal_extension(M, f.right(), mode);
        case MKind::Imp:
            return (F.universe() & ~modal_extension(M, f.left(), mode)) |
                   modal_extension(M, f.right(), mode);
        case MKind::AllPast: {
            Prop e = modal_extension(M, f.left(), mode);
            Prop out = 0;
            for (int x = 0; x < F.size; x++)
                if ((F.preds[x] & ~e) == 0) out |= 1ULL << x;
            return out;
        }
        case MKind::SomePast: {
            Prop e = modal_extension(M, f.left(), mode);
            Prop out = 0;
            for (int x = 0; x < F.size; x++)
                if (F.preds[x] & e) out |= 1ULL << x;
            return out;
        }
        case MKind::SomeFuture: {
            Prop e = modal_extension(M, f.left(), mode);
            Prop out = 0;
            for (int x = 0; x < F.size; x++)
                if (F.rel[x] & e) out |= 1ULL << x;
            return out;
        }
        case MKind::Box: {
            if (mode != ModalEvalMode::BoxOverSymmetricClosure)
                throw std::invalid_argument("box requires the symmetric-closure mode");
            Prop e = modal_extension(M, f.left(), mode);
            Prop out = 0;
            for (int x = 0; x < F.size; x++)
                if ((sym(x) & ~e) == 0) out |= 1ULL << x;
            return out;
        }
        case MKind::Dia: {
            if (mode != ModalEvalMode::BoxOverSymmetricClosure)
                throw std::invalid_argument("diamond requires the symmetric-closure mode");
            Prop e = modal_extension(M, f.left(), mode);
            Prop out = 0;
            for (int x = 0; x < F.size; x++)
                if (sym(x) & e) out |= 1ULL << x;
            return out;
        }
    }
    return 0;
}

bool modal_eval(const RelationalModel &M, int x, const ModalFormula &f, ModalEvalMode mode) {
    return (modal_extension(M, f, mode) >> x) & 1;
}

}  // namespace fl
