#pragma once

// JSON input documents and report serialization.
//
// Input document (all indices 0-based, scalars as integers in the bit
// convention of field.hpp, matrices as lists of rows):
//
//   field           {"k": 2, "modulus": 7}; modulus is an integer or a list of
//                   bits, constant term first; absent field means GF(2)
//   dim             N
//   bracket         [{"i": 0, "j": 1, "value": [..N..]}, ...] with i < j
//   square          N rows, row a = e_a^[2]
//   derivation      N x N matrix, column a = D e_a (absent: zero)
//   catalog         a catalog name, instead of dim/bracket/square; a
//                   derivation given next to it overrides the zero one
//   representation  {"dim", "rho": [N matrices], "eta"}, or "trivial" / "adjoint"
//   deformation     {"order", "terms": [{"mu": [[a, b, [..N..]], ...] with a < b,
//                   "sigma": N rows, "D": matrix}, ...]}; with order terms
//                   the base term is inferred
//   extension       {"g", "h", "cocycle", "cocycle2", "section"}; g and h are
//                   inline algebra documents or paths relative to the input
//                   file, cocycles are cochains, section an (N+H) x N matrix
//
// Cochain: {"degree", "phi": [[[i0, i1, ...], m, s], ...],
//           "omega": [[a, [j0, ...], m, s], ...]}.  A ResLD cochain adds
// "low": the (degree-1) star2 part, zero when absent.

#include <cstddef>
#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"
#include "reslie/algebra.hpp"
#include "reslie/cochain.hpp"
#include "reslie/deformation.hpp"
#include "reslie/extension.hpp"

namespace reslie::io {

using json = nlohmann::ordered_json;

/// Schema violation at a JSON pointer inside a named source.
class SchemaError : public std::runtime_error {
 public:
  SchemaError(std::string path, const std::string& message)
      : std::runtime_error(path + ": " + message), path_(std::move(path)) {}
  const std::string& path() const { return path_; }

 private:
  std::string path_;
};

struct ExtensionDocument {
  ResLieDerPair g;
  ResLieDerPair h;
  PairCochain cocycle;
  std::optional<PairCochain> cocycle2;
  std::optional<Matrix> section;
};

struct InputDocument {
  Field field;
  std::optional<ResLieDerPair> pair;
  std::optional<RestrictedRepresentation> representation;
  bool adjoint_representation = false;  // "adjoint": built once the pair is known valid
  std::optional<TruncatedDeformation> deformation;
  std::optional<ExtensionDocument> extension;
  /// Raw bytes of every file read, in reading order.
  std::vector<std::string> sources;
};

/// Reads and parses a document; throws SchemaError.
InputDocument parse_input(const std::filesystem::path& path);
/// Parses an already loaded document; `base` resolves file references.
InputDocument parse_document(const json& doc, const std::string& source_name, const std::filesystem::path& base);

/// Hex SHA-256 over the concatenated sources.
std::string digest(const std::vector<std::string>& sources);

json to_json(const Matrix& m);
json vec_json(const Vec& v);
json to_json(const ValidationReport& r);
json pair_json(const ResLieDerPair& p);
json rep_json(const RestrictedRepresentation& r);
json cochain_json(const CochainShape& shape, const Cochain& c);
json pair_cochain_json(const ComplexContext& ctx, const PairCochain& c);
json deformation_json(const TruncatedDeformation& d);

Cochain parse_cochain(const json& j, const CochainShape& shape, const Field& f, const std::string& path);

}  // namespace reslie::io
