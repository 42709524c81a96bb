#pragma once

// Structure files:
//
//   structure {
//     domain = {d0, d1, d2}.
//     const 0 = d0.
//     func s = {d0->d1, d1->d2, d2->d2}.
//     pred male = {(d0): true, (d1): false, (d2): unknown}.
//     pred female = total false except {(d1)}.
//   }
//
// Unlisted predicate entries are unknown, except under `total V except`,
// where they take value V. A tuple listed without a value is true.
// Predicates of the vocabulary that the file does not mention are all-unknown.

#include <string>
#include <string_view>

#include "idl/structure.hpp"

namespace idl {

Structure parse_structure(std::string_view text, const Vocabulary& vocabulary);
std::string render_structure(const Structure& s);

/// `{p(d0), q}`: the atoms with the given value, in canonical order.
std::string render_atoms(const Structure& s, TruthValue value, const std::set<std::string>* only = nullptr);

}  // namespace idl
