#ifndef FL_TRANSLATE_HPP
#define FL_TRANSLATE_HPP

#include <memory>
#include <string>

#include "fl/formula.hpp"
#include "fl/frame.hpp"

namespace fl {

enum class MKind : uint8_t { Atom, Neg, And, Or, Imp, AllPast, SomePast, SomeFuture, Box, Dia };

// Classical modal/tense formula. Tense operators quantify along the frame
// relation (AllPast/SomePast over openers, SomeFuture over states open to);
// Box/Dia use the symmetric closure.
class ModalFormula {
  public:
    ModalFormula() = default;
    static ModalFormula atom(const std::string &name);
    static ModalFormula neg(ModalFormula a);
    static ModalFormula conj(ModalFormula a, ModalFormula b);
    static ModalFormula disj(ModalFormula a, ModalFormula b);
    static ModalFormula imp(ModalFormula a, ModalFormula b);
    static ModalFormula all_past(ModalFormula a);     // H
    static ModalFormula some_past(ModalFormula a);    // P
    static ModalFormula some_future(ModalFormula a);  // F
    static ModalFormula box(ModalFormula a);
    static ModalFormula dia(ModalFormula a);

    MKind kind() const;
    const std::string &name() const;
    ModalFormula left() const;
    ModalFormula right() const;
    bool valid() const { return n_ != nullptr; }
    bool operator==(const ModalFormula &o) const;

    struct Node;

  private:
    std::shared_ptr<const Node> n_;
    explicit ModalFormula(std::shared_ptr<const Node> n) : n_(std::move(n)) {}
};

std::string print_modal(const ModalFormula &f);

// Double-negation embedding into the base logic.
Formula g_translate(const Formula &f);
// Tense translation; defined for the {~,&,|} language (plus quantifier-free atoms).
ModalFormula t_translate(const Formula &f);
// Box translation of the {&,~} fragment; throws on | or ->.
ModalFormula m_translate(const Formula &f);

enum class ModalEvalMode { Tense, BoxOverSymmetricClosure };

// Classical two-valued evaluation; atom valuations need not be fixpoints.
bool modal_eval(const RelationalModel &M, int x, const ModalFormula &f, ModalEvalMode mode);
Prop modal_extension(const RelationalModel &M, const ModalFormula &f, ModalEvalMode mode);

}  // namespace fl

#endif
