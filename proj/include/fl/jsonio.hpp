#ifndef FL_JSONIO_HPP
#define FL_JSONIO_HPP

#include <string>

#include "fl/frame.hpp"
#include "fl/lattice.hpp"

namespace fl {

// Algebra interchange: {"n": int, "leq": [n*n bits row-major],
//                       "neg": [n]?, "imp": [n*n row-major]?}
std::string algebra_to_json(const Algebra &A);
Algebra algebra_from_json(const std::string &text);

// Frame interchange: {"size": int, "rel": [size*size bits, rel[x][y] = x open to y],
//                     "labels": [..]?}
// Models add {"valuation": {"p": [state indices]}} and optionally
// {"domain": int, "predicates": {"P": {"d1,d2": [state indices]}}}.
std::string frame_to_json(const Frame &F);
Frame frame_from_json(const std::string &text);
std::string model_to_json(const RelationalModel &M);
RelationalModel model_from_json(const std::string &text);

}  // namespace fl

#endif
