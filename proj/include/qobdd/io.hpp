#pragma once

#include <cstddef>
#include <string>

#include "qobdd/classical.hpp"
#include "qobdd/program.hpp"

namespace qobdd {

// Both document kinds share the same line-oriented envelope: a "format: 1"
// version line, a "kind:" line, header fields, then position blocks. Blank
// lines and lines starting with '#' are ignored on input and never produced
// on output. Matrix rows hold "re im" pairs, one column after the other, so
// a width-w row carries exactly 2w decimal numbers printed with 17
// significant digits; parse(serialize(p)) reproduces every double bit-exactly.
//
// Ordering entries are written 1-based, state indices (accepting sets,
// transition targets) 0-based. name and comment are optional single-line
// fields.
enum class DocumentKind {
    kKQobdd,
    kDetObdd,
};

// Documents larger than these bounds are rejected with GuardError before any
// matrix storage is allocated.
inline constexpr std::size_t kParseWidthGuard = 4096;
inline constexpr std::size_t kParseVariableGuard = 100000;
inline constexpr std::size_t kParseLayerGuard = 64;

// %.*g rendering; digits 17 recovers the exact double under strtod.
std::string format_significant(double value, int digits);

// Reads just far enough to classify the document. ParseError when the
// version or kind line is missing or unknown.
DocumentKind peek_document_kind(const std::string& text);

// Structural parse only; the result may violate semantic invariants, which
// validate() then reports one finding at a time. ParseError carries the
// 1-based line of the offending input.
KQobddProgram parse_program_unvalidated(const std::string& text);

// parse + validate; throws ValidationError listing every finding.
KQobddProgram parse_program(const std::string& text, Tolerance tol = {});

// Canonical form: fixed field order, sorted accepting set, 17-digit floats,
// newline-terminated. Newlines inside name/comment are replaced by spaces.
std::string serialize_program(const KQobddProgram& p);

DetObdd parse_det_obdd_unvalidated(const std::string& text);
DetObdd parse_det_obdd(const std::string& text);
std::string serialize_det_obdd(const DetObdd& d);

// ParseError("cannot open file ...") when the path is unreadable.
std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& text);

}  // namespace qobdd
