#pragma once

#include <string>
#include <variant>

#include "json.hpp"

#include "egpkit/conform.hpp"
#include "egpkit/hopf.hpp"
#include "egpkit/invariants.hpp"

namespace egp {

using Json = nlohmann::json;

// JSON documents. Rationals are strings ("p" or "p/q"), infinity is "inf",
// subsets are sorted label lists. A submodfn lists only its finite nonempty
// sets. Parse errors are ValidationErrors naming the JSON path.
Json to_json(const SubmodFn& z);
Json to_json(const Preorder& p);
Json to_json(const RationalPoly& p);
Json to_json(const FaceLattice& l);
Json to_json(const FormalSum& s);

SubmodFn submodfn_from_json(const Json& j);
Preorder preorder_from_json(const Json& j);
RationalPoly polynomial_from_json(const Json& j);
FaceLattice facelattice_from_json(const Json& j);
FormalSum formalsum_from_json(const Json& j);

using Document = std::variant<SubmodFn, Preorder, RationalPoly, FaceLattice, FormalSum>;
Document parse_document(const Json& j);
Document parse_document_text(const std::string& text);
Json to_json(const Document& d);
std::string kind_of(const Json& j);

// Human-readable renderings used by the CLI's text format.
std::string to_text(const SubmodFn& z);
std::string to_text(const FaceLattice& l);
std::string to_text(const RationalPoly& p);  // plus the binomial basis line
std::string binomial_text(const RationalPoly& p);  // "6*C(k,3)"

}  // namespace egp
