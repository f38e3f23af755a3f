#pragma once

// JSON spec files for every structure the tool checks, and JSON reports.
//
// Header fields: format_version, kind, instance ("finset" | "matmod"), and for
// matmod field ("Q" | "F_p") with modulus for prime fields. Objects are sizes
// (or label arrays for labeled sets); morphisms carry source, target and a
// value table or a row list of scalar strings ("n" or "p/q", canonical).
// Emission sorts keys, so emit(parse(emit(x))) == emit(x) byte for byte.

#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>

#include <json.hpp>

#include "templ/internal.hpp"
#include "templ/nerve.hpp"
#include "templ/precat.hpp"
#include "templ/templicial.hpp"

namespace templ::io {

using Json = nlohmann::json;

inline constexpr int kFormatVersion = 1;
inline constexpr const char* kToolVersion = "templ 1.0.0";

/// Malformed or inconsistent input; `path` is a JSON pointer into the document.
struct SpecError : std::runtime_error {
  SpecError(std::string path, const std::string& message);
  std::string path;
};

enum class SpecKind { enriched_category, finite_category, templicial, based_colax, simplicial, precategory };

std::string to_string(SpecKind k);

using SpecValue =
    std::variant<nerve::EnrichedCategory, TruncatedTemplicial, BasedColax, TruncatedSimplicial, precat::PrecatData>;

struct SpecFile {
  SpecKind kind = SpecKind::templicial;
  SpecValue value;
};

SpecFile make_spec(const nerve::EnrichedCategory& c);
SpecFile make_spec(const TruncatedTemplicial& x);
SpecFile make_spec(const BasedColax& x);
SpecFile make_spec(const TruncatedSimplicial& x);
SpecFile make_spec(const precat::PrecatData& p);

Json to_json(const SpecFile& spec);
/// Throws SpecError with the offending path.
SpecFile from_json(const Json& j);

/// Pretty-printed, sorted keys, trailing newline.
std::string emit(const SpecFile& spec);
/// Throws SpecError (syntax errors report line and column).
SpecFile parse(std::string_view text);

Json morphism_json(const vcat::Morphism& f);
Json templicial_morphism_json(const TemplicialMorphism& m);
Json based_morphism_json(const BasedColaxMorphism& m);

/// Per law: name, instances checked, pass flag, and failures with their indices.
Json report_json(const Report& r);

/// Lowercase hex SHA-256.
std::string sha256_hex(std::string_view data);

}  // namespace templ::io
