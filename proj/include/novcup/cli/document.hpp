#pragma once

// Line-oriented input documents. One statement per line, '#' starts a comment:
//
//   novcup-input 1
//   name <text>
//   field <Q | p | p^m>
//   vertices <n>
//   facet <v0> <v1> ...          all faces are added
//   simplex <v0> <v1> ...        added as is (validate reports missing faces)
//   xi <u> <v> <value>           value on the oriented edge u -> v
//   class <name> <u> <v> <value>
//   bundle <name> power <a> <s>  the rank-1 bundle a^(s xi)
//   bundle <name> root <n> <s>   same with a a root of unity of order n
//   bundle <name> matrix <rank>  transports default to the identity
//   transport <name> <u> <v> <entries, row-major>
//   cut <v> ...                  vertices spanning the cut
//   option generic <E1> <E2>     pair of xi-generic bundles for generic mode

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "novcup/corpus/corpus.hpp"

namespace novcup {

class DocumentError : public std::runtime_error {
 public:
  DocumentError(std::size_t line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line(line) {}
  std::size_t line;
};

struct EdgeValue {
  std::uint32_t u = 0, v = 0;
  long value = 0;
  std::size_t line = 0;
};

struct BundleDecl {
  enum class Kind { power, root, matrix };
  std::string name;
  Kind kind = Kind::power;
  std::string param;  // a (power), n (root)
  int exponent = 1;
  std::size_t rank = 1;
  struct Transport {
    std::uint32_t u = 0, v = 0;
    std::vector<std::string> entries;
    std::size_t line = 0;
  };
  std::vector<Transport> transports;
  std::size_t line = 0;
};

struct InputDocument {
  std::string name;
  std::string field = "Q";
  std::uint32_t vertices = 0;
  std::vector<Simplex> facets, simplices;
  std::vector<EdgeValue> xi;
  std::vector<std::pair<std::string, std::vector<EdgeValue>>> classes;
  std::vector<BundleDecl> bundles;
  std::vector<std::uint32_t> cut;
  std::optional<std::pair<std::string, std::string>> generic;
};

/// Throws DocumentError with the offending line.
InputDocument parse_document(std::string_view text);

/// The input document of a corpus space, listing maximal simplices as facets.
std::string emit_document(const NamedSpace& s);

struct LoadedInput {
  std::string name;
  const FieldSpec* field = nullptr;
  SimplicialComplex x;
  IntegralCocycle xi;
  std::vector<std::pair<std::string, IntegralCocycle>> classes;
  std::vector<FlatBundle> bundles;
  std::vector<std::uint32_t> cut;
  std::optional<std::pair<std::string, std::string>> generic;

  const FlatBundle* bundle(const std::string& n) const;
};

/// Builds the objects over the given field. Structural problems that refer to
/// a line throw DocumentError; bundles without the requested root throw
/// CorpusError. Cocycle and flatness defects are left to validate().
LoadedInput load(const InputDocument& doc, const FieldSpec& field);

/// 64-bit FNV-1a, printed as 16 hex digits.
std::string fnv1a_digest(std::string_view bytes);

}  // namespace novcup
