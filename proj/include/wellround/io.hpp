#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "json.hpp"
#include "wellround/general.hpp"
#include "wellround/lattice.hpp"
#include "wellround/sublattice.hpp"

namespace wellround {

using Json = nlohmann::ordered_json;

/// Rational values become "p/q" strings, others {"rat", "irr", "D"}.
Json scalar_to_json(const Scalar& s);
/// Accepts the two forms above, plain integers, and scalar expressions
/// such as "1+2*sqrt(2)".
Scalar scalar_from_json(const Json& j);

Json gram_to_json(const GramForm& g);
/// {"a", "b", "c"}, [[a, b], [b, c]], or {"t", "n"} (trace and norm of tau
/// for the lattice <1, tau>).
GramForm gram_from_json(const Json& j);

/// JSON parse that also tolerates bare object keys ({t: "sqrt2"}).
Json parse_lenient_json(const std::string& text);

/// Preset name ("square", "hexagonal", "hex"), "diag(a, c)" with optional
/// ";D=n" suffix, or any JSON accepted by gram_from_json.
GramForm parse_lattice_spec(const std::string& text);

/// RFC-4180 field quoting.
std::string csv_field(const std::string& s);
void write_csv_row(std::ostream& os, const std::vector<std::string>& fields);

std::vector<std::string> census_columns();
std::vector<std::string> census_row(const CensusReport& r, std::int64_t n);
void write_census_csv(std::ostream& os, const CensusReport& r);
Json census_to_json(const CensusReport& r);

Json frame_to_json(const ReflectionFrame& f);

}  // namespace wellround
