#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <variant>

#include "leibniz/algebra.hpp"

namespace leibniz {

using AnyAlgebra = std::variant<Algebra<Rationals>, Algebra<GaloisField>>;

inline constexpr int kFormatVersion = 1;

FieldDescriptor field_of(const AnyAlgebra& L);
std::size_t dim_of(const AnyAlgebra& L);

/// {format_version, field, dim, basis_names, table}; table[i][j] holds the coordinates
/// of [b_i, b_j] in the field's scalar encoding.
template <ExactField F>
json algebra_to_json(const Algebra<F>& L);
json algebra_to_json(const AnyAlgebra& L);

/// Throws ParseError (structure) or FieldParseError (scalars); with Checked::yes also
/// NotLeibniz.
AnyAlgebra algebra_from_json(const json& doc, Checked checked = Checked::yes);
AnyAlgebra parse_algebra(std::string_view text, Checked checked = Checked::yes);

/// Normalized text: sorted keys, two-space indentation, trailing newline.
std::string serialize_algebra(const AnyAlgebra& L);

std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& content);
AnyAlgebra read_algebra_file(const std::string& path, Checked checked = Checked::yes);

/// Reinterprets the structure constants over another field: Q into GF(p) (denominators
/// prime to p), GF(p) into GF(p^k). Throws Usage for any other pair.
AnyAlgebra change_field(const AnyAlgebra& L, const FieldDescriptor& target);

/// 64-bit FNV-1a, as 16 lowercase hex digits.
std::string fnv1a_hex(std::string_view bytes);

} // namespace leibniz
