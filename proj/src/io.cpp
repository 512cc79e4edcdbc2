#include "wellround/io.hpp"

#include <cctype>
#include <ostream>
#include <string_view>

namespace wellround {

namespace {

Rational parse_rational(const std::string& text) {
  const Scalar s = parse_scalar(text);
  if (!s.is_rational()) throw Error(ErrorKind::Parse, "expected a rational number, got '" + text + "'");
  return s.rat();
}

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\n\r");
  if (b == std::string::npos) return "";
  return s.substr(b, s.find_last_not_of(" \t\n\r") - b + 1);
}

std::string lower(std::string s) {
  for (char& ch : s) ch = static_cast<char>(std::tolower(static_cast<unsigned char>(ch)));
  return s;
}

}  // namespace

Json scalar_to_json(const Scalar& s) {
  if (s.is_rational()) return s.rat().get_str();
  Json j;
  j["rat"] = s.rat().get_str();
  j["irr"] = s.irr().get_str();
  j["D"] = s.radicand();
  return j;
}

Scalar scalar_from_json(const Json& j) {
  if (j.is_string()) return parse_scalar(j.get<std::string>());
  if (j.is_number_integer()) return Scalar(Rational(Integer(std::to_string(j.get<std::int64_t>()))));
  if (j.is_object()) {
    if (!j.contains("rat") || !j.contains("irr") || !j.contains("D")) {
      throw Error(ErrorKind::Parse, "scalar object needs rat, irr and D");
    }
    const auto text = [](const Json& v) { return v.is_string() ? v.get<std::string>() : v.dump(); };
    if (!j["D"].is_number_integer()) throw Error(ErrorKind::Parse, "D must be an integer");
    const Rational irr = parse_rational(text(j["irr"]));
    const std::int64_t d = j["D"].get<std::int64_t>();
    if (sgn(irr) == 0) return Scalar(parse_rational(text(j["rat"])));
    return Scalar(parse_rational(text(j["rat"])), irr, d);
  }
  throw Error(ErrorKind::Parse, "cannot read a scalar from " + j.dump() + "; floats are not accepted");
}

Json gram_to_json(const GramForm& g) {
  Json j;
  j["a"] = scalar_to_json(g.a);
  j["b"] = scalar_to_json(g.b);
  j["c"] = scalar_to_json(g.c);
  return j;
}

GramForm gram_from_json(const Json& j) {
  GramForm g;
  if (j.is_array()) {
    if (j.size() != 2 || !j[0].is_array() || !j[1].is_array() || j[0].size() != 2 || j[1].size() != 2) {
      throw Error(ErrorKind::Parse, "Gram matrix must be 2x2");
    }
    g = {scalar_from_json(j[0][0]), scalar_from_json(j[0][1]), scalar_from_json(j[1][1])};
    if (!(scalar_from_json(j[1][0]) == g.b)) throw Error(ErrorKind::Parse, "Gram matrix must be symmetric");
  } else if (j.is_object() && j.contains("t") && j.contains("n")) {
    g = gram_from_trace_norm(scalar_from_json(j["t"]), scalar_from_json(j["n"]));
  } else if (j.is_object() && j.contains("a") && j.contains("b") && j.contains("c")) {
    g = {scalar_from_json(j["a"]), scalar_from_json(j["b"]), scalar_from_json(j["c"])};
  } else {
    throw Error(ErrorKind::Parse, "unrecognised lattice description " + j.dump());
  }
  g.require_positive_definite();
  return g;
}

Json parse_lenient_json(const std::string& text) {
  std::string out;
  out.reserve(text.size() + 16);
  bool in_string = false;
  for (std::size_t i = 0; i < text.size(); ++i) {
    const char ch = text[i];
    if (in_string) {
      out += ch;
      if (ch == '\\' && i + 1 < text.size()) {
        out += text[++i];
      } else if (ch == '"') {
        in_string = false;
      }
      continue;
    }
    if (ch == '"') {
      in_string = true;
      out += ch;
      continue;
    }
    if (std::isspace(static_cast<unsigned char>(ch)) || std::string_view("{}[],:").find(ch) != std::string_view::npos) {
      out += ch;
      continue;
    }
    // bare token: key, number, literal, or an unquoted scalar such as 3/2
    std::size_t e = i;
    while (e < text.size() && !std::isspace(static_cast<unsigned char>(text[e])) &&
           std::string_view("{}[],:\"").find(text[e]) == std::string_view::npos) {
      ++e;
    }
    std::size_t k = e;
    while (k < text.size() && std::isspace(static_cast<unsigned char>(text[k]))) ++k;
    const std::string word = text.substr(i, e - i);
    const bool key = k < text.size() && text[k] == ':';
    const bool literal = word == "true" || word == "false" || word == "null" ||
                         word.find_first_not_of("+-0123456789.eE") == std::string::npos;
    out += key || !literal ? '"' + word + '"' : word;
    i = e - 1;
  }
  try {
    return Json::parse(out);
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::Parse, std::string("invalid JSON: ") + e.what());
  }
}

GramForm parse_lattice_spec(const std::string& raw) {
  const std::string text = trim(raw);
  const std::string name = lower(text);
  if (name == "square") return presets::square();
  if (name == "hexagonal" || name == "hex") return presets::hexagonal();
  if (name.rfind("diag(", 0) == 0) {
    if (text.back() != ')') throw Error(ErrorKind::Parse, "diag(...) is missing ')'");
    std::string body = text.substr(5, text.size() - 6);
    std::int64_t declared = 0;
    if (const auto semi = body.find(';'); semi != std::string::npos) {
      const std::string tag = trim(body.substr(semi + 1));
      if (tag.size() < 3 || (tag[0] != 'D' && tag[0] != 'd') || tag[1] != '=') {
        throw Error(ErrorKind::Parse, "expected ';D=n' in '" + text + "'");
      }
      declared = std::stoll(tag.substr(2));
      body = body.substr(0, semi);
    }
    const auto comma = body.find(',');
    if (comma == std::string::npos) throw Error(ErrorKind::Parse, "diag needs two entries");
    const Scalar a = parse_scalar(body.substr(0, comma));
    const Scalar c = parse_scalar(body.substr(comma + 1));
    for (const Scalar* s : {&a, &c}) {
      if (declared != 0 && !s->is_rational() && s->radicand() != declared) {
        throw Error(ErrorKind::Parse, "entry " + s->to_string() + " does not lie in Q(sqrt " + std::to_string(declared) + ")");
      }
    }
    GramForm g = presets::diag(a, c);
    g.require_positive_definite();
    return g;
  }
  return gram_from_json(parse_lenient_json(text));
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\r\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"') out += '"';
    out += ch;
  }
  return out + '"';
}

void write_csv_row(std::ostream& os, const std::vector<std::string>& fields) {
  for (std::size_t i = 0; i < fields.size(); ++i) {
    if (i) os << ',';
    os << csv_field(fields[i]);
  }
  os << "\r\n";
}

std::vector<std::string> census_columns() {
  std::vector<std::string> cols{"n", "total"};
  for (LatticeType t : kAllLatticeTypes) cols.emplace_back(to_string(t));
  cols.emplace_back("well_rounded");
  return cols;
}

std::vector<std::string> census_row(const CensusReport& r, std::int64_t n) {
  std::vector<std::string> row{std::to_string(n), std::to_string(r.total(n))};
  for (LatticeType t : kAllLatticeTypes) row.push_back(std::to_string(r.by_type(n, t)));
  row.push_back(std::to_string(r.well_rounded(n)));
  return row;
}

void write_census_csv(std::ostream& os, const CensusReport& r) {
  write_csv_row(os, census_columns());
  for (std::int64_t n = 1; n <= r.max_index(); ++n) write_csv_row(os, census_row(r, n));
}

Json census_to_json(const CensusReport& r) {
  Json rows = Json::array();
  for (std::int64_t n = 1; n <= r.max_index(); ++n) {
    Json row;
    row["n"] = n;
    row["total"] = r.total(n);
    for (LatticeType t : kAllLatticeTypes) row[to_string(t)] = r.by_type(n, t);
    row["well_rounded"] = r.well_rounded(n);
    rows.push_back(row);
  }
  return rows;
}

Json frame_to_json(const ReflectionFrame& f) {
  Json j;
  j["w"] = f.w;
  j["z"] = f.z;
  j["sigma"] = f.sigma;
  j["kappa_sq"] = scalar_to_json(f.kappa_sq);
  j["parity"] = to_string(f.parity);
  return j;
}

}  // namespace wellround
