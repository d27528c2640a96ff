#ifndef FL_PROOFTEXT_HPP
#define FL_PROOFTEXT_HPP

#include <string>

#include "fl/fitch.hpp"

namespace fl {

// Text proof format: one entry per line, `<formula> ; <rule> [cited line numbers]`,
// indentation depth = subproof nesting, first line of each block justified `hyp`.
// Line numbers are global and 1-based; a subproof is cited by its first line.
// '#' starts a comment.
ProofNode parse_proof_text(const std::string &text, const Profile &profile = Profile::full());
std::string print_proof_text(const ProofNode &p);

}  // namespace fl

#endif
