#pragma once

#include <string>
#include <string_view>

#include <json.hpp>

#include "unicomm/certificate.hpp"

namespace unicomm {

/// `GF(7)`, `GF(9)`, `GF(9;1,0,1)` or `Q`. Throws ParseError or a field error.
Field parse_field(std::string_view text);

/// Decimal residue, `(c0,...,c_{k-1})`, `a/b` or `a`. Plain integers are
/// accepted in every field and mapped through Z -> F.
Element parse_element(Field field, std::string_view token);

/// Matrix file: field spec line, dimension line, then n rows of n tokens.
/// Text after `#` is ignored.
Matrix parse_matrix_file(std::string_view text);
std::string format_matrix_file(const Matrix& m);

nlohmann::ordered_json matrix_to_json(const Matrix& m);
Matrix matrix_from_json(Field field, std::size_t n, const nlohmann::json& rows);

/// {field, n, target, pairs: [{x, y}], route}. Keys are emitted in that order.
nlohmann::ordered_json certificate_to_json(const Factorization& f);
Factorization certificate_from_json(const nlohmann::json& j);

/// Pretty-printed certificate with a trailing newline.
std::string dump_certificate(const Factorization& f);
Factorization parse_certificate(std::string_view text);

}  // namespace unicomm
