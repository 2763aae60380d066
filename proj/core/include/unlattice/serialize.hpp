#ifndef UNLATTICE_SERIALIZE_HPP
#define UNLATTICE_SERIALIZE_HPP

#include <string>
#include <string_view>

#include "unlattice/element.hpp"

namespace unlattice {

// Canonical text forms, rationals always written as p/q:
//   step [t0,...,tk] [v1,...,vk]
//   pl [s0,...,sm] [w0,...,wm]
//   seq [x1,...,xL] zero | seq [...] const c | seq [...] affine a b
//   sum {id: step [...] [...]; id: step [...] [...]}
std::string to_text(const Element& e);
std::string to_text(const Region& r);

/// Throws Error(ParseError) on malformed input; element invariants are re-checked.
Element parse_element(std::string_view text);
/// "[a,b)" pieces separated by ' U ', e.g. "[0/1,1/2) U [3/4,1/1)".
Region parse_region(std::string_view text);

}  // namespace unlattice

#endif  // UNLATTICE_SERIALIZE_HPP
