#include "skewswitch/matrix_io.hpp"

#include <cctype>
#include <fstream>
#include <limits>
#include <sstream>

namespace skewswitch::io {

namespace {

using json = Json;

AltMatrix parse_json(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("malformed JSON: ") + e.what());
  }
  if (!doc.is_object()) throw ParseError("matrix document must be a JSON object");
  for (const char* key : {"modulus", "size", "entries"}) {
    if (!doc.contains(key)) throw ParseError(std::string("missing field \"") + key + "\"");
  }
  if (!doc["modulus"].is_number_integer()) throw ParseError("\"modulus\" must be an integer");
  if (!doc["size"].is_number_integer()) throw ParseError("\"size\" must be an integer");
  const long modulus = doc["modulus"].get<long>();
  const long size = doc["size"].get<long>();
  if (modulus < 2 || modulus > AltMatrix::kMaxModulus) {
    throw ParseError("\"modulus\" must lie in [2, " + std::to_string(AltMatrix::kMaxModulus) + "]");
  }
  if (size < 1 || size > AltMatrix::kMaxSize) {
    throw ParseError("\"size\" must lie in [1, " + std::to_string(AltMatrix::kMaxSize) + "]");
  }
  const json& entries = doc["entries"];
  if (!entries.is_array() || entries.size() != static_cast<std::size_t>(size)) {
    throw ParseError("\"entries\" must be an array of " + std::to_string(size) + " rows");
  }
  std::vector<std::vector<long>> raw;
  for (std::size_t i = 0; i < entries.size(); ++i) {
    const json& row = entries[i];
    if (!row.is_array() || row.size() != static_cast<std::size_t>(size)) {
      throw ParseError("row " + std::to_string(i + 1) + " must have " + std::to_string(size) +
                       " entries");
    }
    std::vector<long> values;
    for (std::size_t j = 0; j < row.size(); ++j) {
      if (!row[j].is_number_integer()) {
        throw ParseError("entry (" + std::to_string(i + 1) + "," + std::to_string(j + 1) +
                         ") is not an integer");
      }
      values.push_back(row[j].get<long>());
    }
    raw.push_back(std::move(values));
  }
  return AltMatrix::make(static_cast<int>(modulus), static_cast<int>(size), raw);
}

AltMatrix parse_text(std::string_view text) {
  std::istringstream in{std::string(text)};
  long modulus = 0, size = 0;
  if (!(in >> modulus >> size)) throw ParseError("text matrix must start with \"l n\"");
  if (modulus < 2 || modulus > AltMatrix::kMaxModulus) {
    throw ParseError("modulus must lie in [2, " + std::to_string(AltMatrix::kMaxModulus) + "]");
  }
  if (size < 1 || size > AltMatrix::kMaxSize) {
    throw ParseError("size must lie in [1, " + std::to_string(AltMatrix::kMaxSize) + "]");
  }
  std::vector<std::vector<long>> raw(static_cast<std::size_t>(size),
                                     std::vector<long>(static_cast<std::size_t>(size)));
  for (long i = 0; i < size; ++i) {
    for (long j = 0; j < size; ++j) {
      if (!(in >> raw[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)])) {
        throw ParseError("entry (" + std::to_string(i + 1) + "," + std::to_string(j + 1) +
                         ") is missing or not an integer");
      }
    }
  }
  std::string extra;
  if (in >> extra) throw ParseError("unexpected trailing data: \"" + extra + "\"");
  return AltMatrix::make(static_cast<int>(modulus), static_cast<int>(size), raw);
}

}  // namespace

AltMatrix parse_matrix(std::string_view text) {
  for (char c : text) {
    if (std::isspace(static_cast<unsigned char>(c))) continue;
    return c == '{' ? parse_json(text) : parse_text(text);
  }
  throw ParseError("empty matrix file");
}

AltMatrix load_matrix(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path.string());
  std::stringstream buffer;
  buffer << in.rdbuf();
  try {
    return parse_matrix(buffer.str());
  } catch (const ValidationError& e) {
    throw ValidationError(e.row(), e.col(), path.string() + ": " + e.what());
  } catch (const ParseError& e) {
    throw ParseError(path.string() + ": " + e.what());
  }
}

json matrix_to_json(const AltMatrix& m) {
  return json{{"modulus", m.modulus()}, {"size", m.size()}, {"entries", m.rows()}};
}

std::string matrix_to_text(const AltMatrix& m) {
  std::ostringstream out;
  out << m.modulus() << ' ' << m.size() << '\n';
  for (const auto& row : m.rows()) {
    for (std::size_t j = 0; j < row.size(); ++j) out << (j ? " " : "") << row[j];
    out << '\n';
  }
  return out.str();
}

json permutation_to_json(const Permutation& sigma) {
  json out = json::array();
  for (int x : sigma) out.push_back(x + 1);
  return out;
}

Permutation permutation_from_json(const json& j) {
  Permutation sigma;
  for (const auto& x : j) sigma.push_back(x.get<int>() - 1);
  return sigma;
}

json exponents_to_json(const SwitchExponents& a) { return json(a.values()); }

json facets_to_json(const SimplicialComplex& delta) {
  json out = json::array();
  for (const auto& f : delta.facets()) {
    json face = json::array();
    for (int v : f) face.push_back(v + 1);
    out.push_back(std::move(face));
  }
  return out;
}

namespace {

bool is_flat(const json& j) {
  for (const auto& x : j) {
    if (x.is_structured()) return false;
  }
  return true;
}

void format_into(const json& j, int depth, std::string& out) {
  const std::string pad(static_cast<std::size_t>(depth + 1) * 2, ' ');
  const std::string close(static_cast<std::size_t>(depth) * 2, ' ');
  if (j.is_array() && (j.empty() || is_flat(j))) {
    out += "[";
    for (std::size_t k = 0; k < j.size(); ++k) out += (k ? ", " : "") + j[k].dump();
    out += "]";
    return;
  }
  if (j.is_array()) {
    out += "[\n";
    for (std::size_t k = 0; k < j.size(); ++k) {
      out += pad;
      format_into(j[k], depth + 1, out);
      out += k + 1 < j.size() ? ",\n" : "\n";
    }
    out += close + "]";
    return;
  }
  if (j.is_object() && !j.empty()) {
    out += "{\n";
    std::size_t k = 0;
    for (const auto& [key, value] : j.items()) {
      out += pad + json(key).dump() + ": ";
      format_into(value, depth + 1, out);
      out += ++k < j.size() ? ",\n" : "\n";
    }
    out += close + "}";
    return;
  }
  out += j.dump();
}

}  // namespace

std::string format_document(const json& doc) {
  std::string out;
  format_into(doc, 0, out);
  out += '\n';
  return out;
}

json bigint_to_json(const modlinalg::BigInt& value) {
  if (sgn(value) >= 0 && mpz_sizeinbase(value.get_mpz_t(), 2) <= 64) {
    return json(std::stoull(value.get_str()));
  }
  return json(value.get_str());
}

std::string to_dot(const AltMatrix& m) {
  const int l = m.modulus();
  std::ostringstream out;
  const bool undirected = l == 2;
  out << (undirected ? "graph" : "digraph") << " M {\n";
  for (int v = 0; v < m.size(); ++v) out << "  " << v + 1 << ";\n";
  for (int i = 0; i < m.size(); ++i) {
    for (int j = i + 1; j < m.size(); ++j) {
      const int x = m.at(i, j);
      if (x == 0) continue;
      if (undirected) {
        out << "  " << i + 1 << " -- " << j + 1 << ";\n";
        continue;
      }
      int from = i, to = j, label = x;
      if (l - x < x) {
        std::swap(from, to);
        label = l - x;
      }
      out << "  " << from + 1 << " -> " << to + 1;
      if (label != 1) out << " [label=\"" << label << "\"]";
      out << ";\n";
    }
  }
  out << "}\n";
  return out.str();
}

}  // namespace skewswitch::io
