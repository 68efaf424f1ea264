#pragma once

#include <iosfwd>
#include <optional>
#include <string>

#include <json.hpp>

#include "mgw/codes.hpp"
#include "mgw/resolution.hpp"
#include "mgw/wei.hpp"

namespace mgw {

using json = nlohmann::json;

/// Matroid descriptor:
///   {"type":"circuits","n":N,"circuits":[[1,2],...]}
///   {"type":"uniform","r":R,"n":N}
///   {"type":"linear","p":P,"role":"parity_check"|"generator","matrix":[[...],...]}
///   {"type":"dual","of":<descriptor>}
Matroid matroid_from_json(const json& descriptor);

/// Code file: a role line ("generator" or "parity_check") followed by the
/// matrix text format.
LinearCode read_code(std::istream& in);
void write_code(std::ostream& out, const LinearCode& code);

struct LoadedInput {
  Matroid matroid;
  /// Set when the input was a code file or a linear descriptor.
  std::optional<LinearCode> code;
};

/// A file whose first non-blank character is '{' is a JSON descriptor;
/// anything else is read as a code file. Throws InputError.
LoadedInput load_input(const std::string& path);
LoadedInput parse_input(const std::string& text);

json subset_json(SubsetMask s);
json chain_json(const Chain& chain);

json to_json(const WeightReport& report);
json to_json(const WeiReport& report);
json to_json(const BettiDiagram& diagram);
json to_json(const AxiomReport& report);
json to_json(const ResolutionShape& shape);
/// {"levels":[[subset arrays]...]}
json ladder_json(const CycleLadder& ladder);

std::string weights_table(const WeightReport& report);
std::string wei_table(const WeiReport& report, const char* name);
/// Rows are homological indices i, columns degrees j. Values when present,
/// '*' for a nonzero entry of unknown value, '.' for zero.
std::string betti_table(const BettiDiagram& diagram);

}  // namespace mgw
