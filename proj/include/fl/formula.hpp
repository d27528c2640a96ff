#ifndef FL_FORMULA_HPP
#define FL_FORMULA_HPP

#include <cstdint>
#include <memory>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace fl {

enum class FKind : uint8_t { Atom, Pred, Neg, And, Or, Imp, Forall, Exists };

// Which connectives the surface language admits. The core language is
// {~, &, |}; `imp` unlocks "->", `quantifiers` unlocks forall/exists and
// predicate atoms.
struct Profile {
    bool imp = false;
    bool quantifiers = false;

    static Profile propositional() { return {false, false}; }
    static Profile with_imp() { return {true, false}; }
    static Profile first_order() { return {false, true}; }
    static Profile full() { return {true, true}; }
};

// Immutable formula value with structural equality and hashing.
// Cheap to copy (shared node), safe to share across threads.
class Formula {
  public:
    Formula() = default;

    static Formula atom(const std::string &name);
    static Formula pred(const std::string &name, std::vector<std::string> args);
    static Formula neg(Formula body);
    static Formula conj(Formula lhs, Formula rhs);
    static Formula disj(Formula lhs, Formula rhs);
    static Formula imp(Formula lhs, Formula rhs);
    static Formula forall(const std::string &var, Formula body);
    static Formula exists(const std::string &var, Formula body);

    // bot := (p0 & ~p0), top := ~bot, with the reserved atom p0.
    static Formula bot();
    static Formula top();

    bool valid() const { return n_ != nullptr; }
    FKind kind() const;
    const std::string &name() const;                // Atom/Pred name, quantifier variable
    const std::vector<std::string> &args() const;   // Pred arguments
    Formula left() const;                           // first child (body for Neg/quantifiers)
    Formula right() const;                          // second child
    Formula body() const { return left(); }
    const std::string &var() const { return name(); }

    size_t hash() const;
    bool operator==(const Formula &o) const;
    bool operator!=(const Formula &o) const { return !(*this == o); }

    // Total order, used wherever deterministic iteration matters.
    static int compare(const Formula &a, const Formula &b);
    bool operator<(const Formula &o) const { return compare(*this, o) < 0; }

    size_t size() const;  // node count
    bool is_propositional() const;
    bool contains_imp() const;

    struct Node;

  private:
    std::shared_ptr<const Node> n_;
    explicit Formula(std::shared_ptr<const Node> n) : n_(std::move(n)) {}
};

struct FormulaHash {
    size_t operator()(const Formula &f) const { return f.hash(); }
};

struct ParseError : std::runtime_error {
    size_t offset;
    ParseError(const std::string &msg, size_t off)
        : std::runtime_error(msg + " (at offset " + std::to_string(off) + ")"), offset(off) {}
};

Formula parse(const std::string &text, const Profile &profile = Profile::full());
std::string print(const Formula &f);

std::set<std::string> free_vars(const Formula &f);
bool substitutable(const Formula &f, const std::string &v, const std::string &u);
Formula substitute(const Formula &f, const std::string &v, const std::string &u);

// All subformulas including f itself, in deterministic order.
std::vector<Formula> subformulas(const Formula &f);

// Collects proposition/predicate atom names.
std::set<std::string> atom_names(const Formula &f);

}  // namespace fl

template <> struct std::hash<fl::Formula> {
    size_t operator()(const fl::Formula &f) const { return f.hash(); }
};

#endif
