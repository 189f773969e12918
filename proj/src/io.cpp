#include "unicomm/io.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <sstream>

namespace unicomm {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

[[noreturn]] void parse_error(const std::string& what) { throw Error(ErrorCode::ParseError, what); }

std::uint64_t parse_unsigned(std::string_view s, const char* what) {
  s = trim(s);
  std::uint64_t v = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (s.empty() || ec != std::errc{} || ptr != s.data() + s.size()) {
    parse_error(std::string("bad ") + what + ": '" + std::string(s) + "'");
  }
  return v;
}

BigInt parse_integer(std::string_view s) {
  s = trim(s);
  std::string_view digits = s;
  if (!digits.empty() && (digits.front() == '-' || digits.front() == '+')) digits.remove_prefix(1);
  if (digits.empty() || !std::all_of(digits.begin(), digits.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); })) {
    parse_error("bad integer: '" + std::string(s) + "'");
  }
  const std::string text(digits);
  BigInt v(text);
  return !s.empty() && s.front() == '-' ? BigInt(-v) : v;
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= s.size(); ++i) {
    if (i == s.size() || s[i] == sep) {
      out.push_back(s.substr(start, i - start));
      start = i + 1;
    }
  }
  return out;
}

// Whitespace-separated tokens, keeping a parenthesised group together.
std::vector<std::string> tokenize(std::string_view line) {
  std::vector<std::string> out;
  std::string cur;
  int depth = 0;
  for (char c : line) {
    if (c == '(') ++depth;
    if (c == ')') --depth;
    if (std::isspace(static_cast<unsigned char>(c))) {
      if (depth > 0) continue;
      if (!cur.empty()) out.push_back(std::move(cur));
      cur.clear();
      continue;
    }
    cur += c;
  }
  if (depth != 0) parse_error("unbalanced parentheses in '" + std::string(line) + "'");
  if (!cur.empty()) out.push_back(std::move(cur));
  return out;
}

Element reduce_integer(Field field, const BigInt& v) {
  if (!field.is_finite()) return field.from_rational(Rational(v));
  BigInt r = v % field.characteristic();
  if (r < 0) r += field.characteristic();
  return field.from_int(r.convert_to<long long>());
}

}  // namespace

Field parse_field(std::string_view text) {
  const std::string_view s = trim(text);
  if (s == "Q") return Field::rationals();
  if (s.size() < 5 || s.substr(0, 3) != "GF(" || s.back() != ')') parse_error("bad field spec: '" + std::string(s) + "'");
  const std::string_view inner = s.substr(3, s.size() - 4);
  const auto semi = inner.find(';');
  const std::uint64_t q = parse_unsigned(inner.substr(0, semi), "field size");
  if (q < 2) parse_error("field size must be at least 2");
  if (q > kMaxFieldSize) throw Error(ErrorCode::FieldTooLarge, "field larger than 2^20 elements");
  if (semi == std::string_view::npos) return Field::galois(q);

  std::vector<std::uint32_t> modulus;
  for (auto part : split(inner.substr(semi + 1), ',')) {
    modulus.push_back(static_cast<std::uint32_t>(parse_unsigned(part, "modulus coefficient")));
  }
  if (modulus.size() < 2) parse_error("modulus needs degree at least 1");
  const unsigned k = static_cast<unsigned>(modulus.size() - 1);
  // q must be p^k; recover p from the k-th root.
  std::uint32_t p = 2;
  for (; p <= q; ++p) {
    std::uint64_t t = 1;
    for (unsigned i = 0; i < k && t <= q; ++i) t *= p;
    if (t >= q) {
      if (t != q) throw Error(ErrorCode::NotPrime, std::to_string(q) + " is not a " + std::to_string(k) + "-th prime power");
      break;
    }
  }
  return Field::extension(p, k, modulus);
}

Element parse_element(Field field, std::string_view token) {
  const std::string_view s = trim(token);
  if (s.empty()) parse_error("empty element token");
  if (s.front() == '(') {
    if (field.kind() != FieldKind::extension || s.back() != ')') parse_error("bad element token: '" + std::string(s) + "'");
    const auto parts = split(s.substr(1, s.size() - 2), ',');
    if (parts.size() != field.degree()) {
      parse_error("expected " + std::to_string(field.degree()) + " coefficients in '" + std::string(s) + "'");
    }
    std::vector<std::uint32_t> coeffs;
    for (auto part : parts) {
      BigInt c = parse_integer(part) % field.characteristic();
      if (c < 0) c += field.characteristic();
      coeffs.push_back(c.convert_to<std::uint32_t>());
    }
    return field.from_coefficients(coeffs);
  }
  const auto slash = s.find('/');
  if (slash != std::string_view::npos) {
    if (field.is_finite()) parse_error("fractions are only valid over Q: '" + std::string(s) + "'");
    const BigInt num = parse_integer(s.substr(0, slash));
    const BigInt den = parse_integer(s.substr(slash + 1));
    if (den == 0) throw Error(ErrorCode::DivisionByZero, "zero denominator in '" + std::string(s) + "'");
    return field.from_rational(Rational(num, den));
  }
  return reduce_integer(field, parse_integer(s));
}

Matrix parse_matrix_file(std::string_view text) {
  std::vector<std::string> lines;
  std::istringstream in{std::string(text)};
  std::string line;
  while (std::getline(in, line)) {
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    if (!trim(line).empty()) lines.emplace_back(trim(line));
  }
  if (lines.size() < 2) parse_error("matrix file needs a field line and a dimension line");
  const Field field = parse_field(lines[0]);
  const std::uint64_t n = parse_unsigned(lines[1], "dimension");
  if (n == 0) parse_error("dimension must be at least 1");
  if (lines.size() != n + 2) {
    parse_error("expected " + std::to_string(n) + " matrix rows, found " + std::to_string(lines.size() - 2));
  }
  Matrix m(field, n);
  for (std::size_t i = 0; i < n; ++i) {
    const auto tokens = tokenize(lines[i + 2]);
    if (tokens.size() != n) {
      parse_error("row " + std::to_string(i + 1) + " has " + std::to_string(tokens.size()) + " entries, expected " +
                  std::to_string(n));
    }
    for (std::size_t j = 0; j < n; ++j) m(i, j) = parse_element(field, tokens[j]);
  }
  return m;
}

std::string format_matrix_file(const Matrix& m) {
  std::string out = m.field().to_string() + "\n" + std::to_string(m.size()) + "\n";
  for (std::size_t i = 0; i < m.size(); ++i) {
    for (std::size_t j = 0; j < m.size(); ++j) {
      if (j) out += " ";
      out += m(i, j).to_string();
    }
    out += "\n";
  }
  return out;
}

nlohmann::ordered_json matrix_to_json(const Matrix& m) {
  auto rows = nlohmann::ordered_json::array();
  for (std::size_t i = 0; i < m.size(); ++i) {
    auto row = nlohmann::ordered_json::array();
    for (std::size_t j = 0; j < m.size(); ++j) row.push_back(m(i, j).to_string());
    rows.push_back(std::move(row));
  }
  return rows;
}

Matrix matrix_from_json(Field field, std::size_t n, const nlohmann::json& rows) {
  if (!rows.is_array() || rows.size() != n) parse_error("matrix must be an array of " + std::to_string(n) + " rows");
  Matrix m(field, n);
  for (std::size_t i = 0; i < n; ++i) {
    const auto& row = rows[i];
    if (!row.is_array() || row.size() != n) parse_error("matrix row must have " + std::to_string(n) + " entries");
    for (std::size_t j = 0; j < n; ++j) {
      if (row[j].is_string()) {
        m(i, j) = parse_element(field, row[j].get<std::string>());
      } else if (row[j].is_number_integer()) {
        m(i, j) = parse_element(field, std::to_string(row[j].get<long long>()));
      } else {
        parse_error("matrix entries must be strings or integers");
      }
    }
  }
  return m;
}

nlohmann::ordered_json certificate_to_json(const Factorization& f) {
  nlohmann::ordered_json j;
  j["field"] = f.field().to_string();
  j["n"] = f.dimension();
  j["target"] = matrix_to_json(f.target);
  auto pairs = nlohmann::ordered_json::array();
  for (const auto& p : f.pairs) {
    nlohmann::ordered_json pair;
    pair["x"] = matrix_to_json(p.x);
    pair["y"] = matrix_to_json(p.y);
    pairs.push_back(std::move(pair));
  }
  j["pairs"] = std::move(pairs);
  j["route"] = f.route;
  return j;
}

Factorization certificate_from_json(const nlohmann::json& j) {
  try {
    if (!j.is_object()) parse_error("certificate must be a JSON object");
    for (const char* key : {"field", "n", "target", "pairs", "route"}) {
      if (!j.contains(key)) parse_error(std::string("certificate is missing '") + key + "'");
    }
    const Field field = parse_field(j.at("field").get<std::string>());
    const auto n = j.at("n").get<std::size_t>();
    if (n == 0) parse_error("n must be at least 1");
    Factorization f{matrix_from_json(field, n, j.at("target")), {}, {}};
    if (!j.at("pairs").is_array()) parse_error("'pairs' must be an array");
    for (const auto& p : j.at("pairs")) {
      if (!p.is_object() || !p.contains("x") || !p.contains("y")) parse_error("each pair needs 'x' and 'y'");
      f.pairs.push_back({matrix_from_json(field, n, p.at("x")), matrix_from_json(field, n, p.at("y"))});
    }
    f.route = j.at("route").get<std::vector<std::string>>();
    return f;
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::ParseError, std::string("malformed certificate: ") + e.what());
  }
}

std::string dump_certificate(const Factorization& f) { return certificate_to_json(f).dump(2) + "\n"; }

Factorization parse_certificate(std::string_view text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::ParseError, std::string("invalid JSON: ") + e.what());
  }
  return certificate_from_json(j);
}

}  // namespace unicomm
