#include "qobdd/io.hpp"

#include <algorithm>
#include <array>
#include <cerrno>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <utility>
#include <vector>

#include "qobdd/errors.hpp"

namespace qobdd {

namespace {

struct Line {
    std::string text;
    int number;
};

// Content lines only: trailing whitespace stripped, blanks and '#' comments
// dropped, original 1-based numbers kept for diagnostics.
std::vector<Line> content_lines(const std::string& text) {
    std::vector<Line> lines;
    std::size_t start = 0;
    int number = 0;
    while (start <= text.size()) {
        std::size_t end = text.find('\n', start);
        if (end == std::string::npos) end = text.size();
        ++number;
        std::string line = text.substr(start, end - start);
        while (!line.empty() && (line.back() == '\r' || line.back() == ' ' || line.back() == '\t'))
            line.pop_back();
        std::size_t first = line.find_first_not_of(" \t");
        if (first != std::string::npos && line[first] != '#')
            lines.push_back({line.substr(first), number});
        if (end == text.size()) break;
        start = end + 1;
    }
    return lines;
}

class Cursor {
public:
    explicit Cursor(std::vector<Line> lines) : lines_(std::move(lines)) {}

    bool done() const { return pos_ >= lines_.size(); }

    const Line& peek() const {
        if (done()) throw ParseError("unexpected end of document", last_number());
        return lines_[pos_];
    }

    Line next() {
        const Line& line = peek();
        ++pos_;
        return line;
    }

    int last_number() const { return lines_.empty() ? 0 : lines_.back().number; }

private:
    std::vector<Line> lines_;
    std::size_t pos_ = 0;
};

// "key: value" or "key:"; false when the line carries no colon (matrix rows).
bool split_key(const std::string& text, std::string& key, std::string& value) {
    std::size_t colon = text.find(':');
    if (colon == std::string::npos) return false;
    key = text.substr(0, colon);
    if (key.find(' ') != std::string::npos || key.find('\t') != std::string::npos) return false;
    std::size_t value_start = colon + 1;
    if (value_start < text.size() && text[value_start] == ' ') ++value_start;
    value = text.substr(value_start);
    return true;
}

std::vector<std::string> tokens_of(const std::string& value) {
    std::vector<std::string> tokens;
    std::istringstream in(value);
    std::string token;
    while (in >> token) tokens.push_back(token);
    return tokens;
}

double parse_double_token(const std::string& token, int line) {
    errno = 0;
    char* end = nullptr;
    double v = std::strtod(token.c_str(), &end);
    if (end != token.c_str() + token.size() || token.empty())
        throw ParseError("not a number: '" + token + "'", line);
    if (errno == ERANGE && (v == HUGE_VAL || v == -HUGE_VAL))
        throw ParseError("number out of range: '" + token + "'", line);
    return v;
}

std::size_t parse_index_token(const std::string& token, int line) {
    if (token.empty() || token[0] == '-' || token[0] == '+')
        throw ParseError("not a non-negative integer: '" + token + "'", line);
    errno = 0;
    char* end = nullptr;
    unsigned long long v = std::strtoull(token.c_str(), &end, 10);
    if (end != token.c_str() + token.size() || errno == ERANGE)
        throw ParseError("not a non-negative integer: '" + token + "'", line);
    return static_cast<std::size_t>(v);
}

// Next line must be "key: ..."; returns its value and line number.
std::pair<std::string, int> expect_field(Cursor& cursor, const std::string& key) {
    const Line line = cursor.next();
    std::string got_key, value;
    if (!split_key(line.text, got_key, value) || got_key != key)
        throw ParseError("expected field '" + key + "'", line.number);
    return {value, line.number};
}

std::size_t expect_count_field(Cursor& cursor, const std::string& key) {
    auto [value, number] = expect_field(cursor, key);
    auto tokens = tokens_of(value);
    if (tokens.size() != 1) throw ParseError("field '" + key + "' takes one integer", number);
    return parse_index_token(tokens[0], number);
}

// "layer: 3" / "position: 2" markers must match the expected 1-based index.
void expect_marker(Cursor& cursor, const std::string& key, std::size_t index) {
    if (cursor.done())
        throw ParseError("expected '" + key + ": " + std::to_string(index) + "'",
                         cursor.last_number());
    const Line line = cursor.next();
    std::string got_key, value;
    if (!split_key(line.text, got_key, value) || got_key != key ||
        tokens_of(value) != std::vector<std::string>{std::to_string(index)})
        throw ParseError("expected '" + key + ": " + std::to_string(index) + "'", line.number);
}

struct Header {
    std::string name;
    std::string comment;
    std::size_t n = 0;
    std::size_t k = 1;
    std::size_t width = 0;
    VariableOrdering ordering;
    std::vector<std::size_t> accepting;
};

// Common front matter up to (not including) the first body marker. with_k
// selects the kqobdd field set.
Header parse_header(Cursor& cursor, const std::string& kind, bool with_k,
                    const std::string& body_marker) {
    {
        auto [value, number] = expect_field(cursor, "format");
        if (value != "1") throw ParseError("unsupported format '" + value + "'", number);
    }
    {
        auto [value, number] = expect_field(cursor, "kind");
        if (value != kind) throw ParseError("expected kind '" + kind + "', got '" + value + "'",
                                            number);
    }

    Header h;
    bool have_n = false, have_k = false, have_width = false;
    bool have_ordering = false, have_accepting = false;
    bool have_name = false, have_comment = false;
    int ordering_line = 0;

    while (!cursor.done()) {
        std::string key, value;
        if (!split_key(cursor.peek().text, key, value))
            throw ParseError("expected a header field", cursor.peek().number);
        if (key == body_marker) break;
        const Line line = cursor.next();

        auto claim = [&](bool& flag) {
            if (flag) throw ParseError("duplicate field '" + key + "'", line.number);
            flag = true;
        };
        if (key == "name") {
            claim(have_name);
            h.name = value;
        } else if (key == "comment") {
            claim(have_comment);
            h.comment = value;
        } else if (key == "n") {
            claim(have_n);
            auto tokens = tokens_of(value);
            if (tokens.size() != 1) throw ParseError("field 'n' takes one integer", line.number);
            h.n = parse_index_token(tokens[0], line.number);
        } else if (key == "k" && with_k) {
            claim(have_k);
            auto tokens = tokens_of(value);
            if (tokens.size() != 1) throw ParseError("field 'k' takes one integer", line.number);
            h.k = parse_index_token(tokens[0], line.number);
        } else if (key == "width") {
            claim(have_width);
            auto tokens = tokens_of(value);
            if (tokens.size() != 1)
                throw ParseError("field 'width' takes one integer", line.number);
            h.width = parse_index_token(tokens[0], line.number);
        } else if (key == "ordering") {
            claim(have_ordering);
            ordering_line = line.number;
            for (const auto& token : tokens_of(value)) {
                std::size_t v = parse_index_token(token, line.number);
                if (v == 0) throw ParseError("ordering entries are 1-based", line.number);
                h.ordering.sigma.push_back(v - 1);
            }
        } else if (key == "accepting") {
            claim(have_accepting);
            for (const auto& token : tokens_of(value))
                h.accepting.push_back(parse_index_token(token, line.number));
        } else {
            throw ParseError("unknown field '" + key + "'", line.number);
        }
    }

    auto require = [&](bool flag, const char* name) {
        if (!flag) throw ParseError(std::string("missing field '") + name + "'",
                                    cursor.last_number());
    };
    require(have_n, "n");
    if (with_k) require(have_k, "k");
    require(have_width, "width");
    require(have_ordering, "ordering");
    require(have_accepting, "accepting");

    if (h.width > kParseWidthGuard)
        throw GuardError("width " + std::to_string(h.width) + " exceeds the parse guard " +
                         std::to_string(kParseWidthGuard));
    if (h.n > kParseVariableGuard)
        throw GuardError("n " + std::to_string(h.n) + " exceeds the parse guard " +
                         std::to_string(kParseVariableGuard));
    if (h.k > kParseLayerGuard)
        throw GuardError("k " + std::to_string(h.k) + " exceeds the parse guard " +
                         std::to_string(kParseLayerGuard));
    if (h.ordering.sigma.size() != h.n)
        throw ParseError("ordering has " + std::to_string(h.ordering.sigma.size()) +
                             " entries, expected " + std::to_string(h.n),
                         ordering_line);
    std::sort(h.accepting.begin(), h.accepting.end());
    h.accepting.erase(std::unique(h.accepting.begin(), h.accepting.end()), h.accepting.end());
    return h;
}

void parse_matrix_block(Cursor& cursor, const std::string& key, ComplexMatrix& m) {
    auto [value, number] = expect_field(cursor, key);
    if (!value.empty()) throw ParseError("field '" + key + "' takes no value on its line", number);
    for (std::size_t r = 0; r < m.rows(); ++r) {
        if (cursor.done())
            throw ParseError("missing matrix row " + std::to_string(r + 1) + " of '" + key + "'",
                             cursor.last_number());
        const Line line = cursor.next();
        auto tokens = tokens_of(line.text);
        if (tokens.size() != 2 * m.cols())
            throw ParseError("matrix row has " + std::to_string(tokens.size()) +
                                 " values, expected " + std::to_string(2 * m.cols()),
                             line.number);
        for (std::size_t c = 0; c < m.cols(); ++c) {
            double re = parse_double_token(tokens[2 * c], line.number);
            double im = parse_double_token(tokens[2 * c + 1], line.number);
            m.at(r, c) = ComplexScalar(re, im);
        }
    }
}

void expect_exhausted(Cursor& cursor) {
    if (!cursor.done())
        throw ParseError("unexpected content after document", cursor.peek().number);
}

void append_indices(std::string& out, const std::vector<std::size_t>& indices, std::size_t shift) {
    for (std::size_t v : indices) {
        out += ' ';
        out += std::to_string(v + shift);
    }
    out += '\n';
}

std::string single_line(const std::string& text) {
    std::string out = text;
    for (char& c : out)
        if (c == '\n' || c == '\r') c = ' ';
    return out;
}

void append_header(std::string& out, const std::string& kind, const std::string& name,
                   const std::string& comment) {
    out += "format: 1\n";
    out += "kind: " + kind + "\n";
    if (!name.empty()) out += "name: " + single_line(name) + "\n";
    if (!comment.empty()) out += "comment: " + single_line(comment) + "\n";
}

}  // namespace

std::string format_significant(double value, int digits) {
    char buffer[64];
    std::snprintf(buffer, sizeof buffer, "%.*g", digits, value);
    return buffer;
}

DocumentKind peek_document_kind(const std::string& text) {
    Cursor cursor(content_lines(text));
    auto [format_value, format_line] = expect_field(cursor, "format");
    if (format_value != "1")
        throw ParseError("unsupported format '" + format_value + "'", format_line);
    auto [kind_value, kind_line] = expect_field(cursor, "kind");
    if (kind_value == "kqobdd") return DocumentKind::kKQobdd;
    if (kind_value == "detobdd") return DocumentKind::kDetObdd;
    throw ParseError("unknown kind '" + kind_value + "'", kind_line);
}

KQobddProgram parse_program_unvalidated(const std::string& text) {
    Cursor cursor(content_lines(text));
    Header h = parse_header(cursor, "kqobdd", /*with_k=*/true, "layer");

    KQobddProgram p;
    p.n = h.n;
    p.k = h.k;
    p.width = h.width;
    p.ordering = std::move(h.ordering);
    p.accepting = std::move(h.accepting);
    p.name = std::move(h.name);
    p.comment = std::move(h.comment);
    p.pairs.reserve(p.k * p.n);

    for (std::size_t layer = 1; layer <= p.k; ++layer) {
        expect_marker(cursor, "layer", layer);
        for (std::size_t position = 1; position <= p.n; ++position) {
            expect_marker(cursor, "position", position);
            TransformationPair pair{ComplexMatrix(p.width, p.width),
                                    ComplexMatrix(p.width, p.width)};
            parse_matrix_block(cursor, "t0", pair.t0);
            parse_matrix_block(cursor, "t1", pair.t1);
            p.pairs.push_back(std::move(pair));
        }
    }
    expect_exhausted(cursor);
    return p;
}

KQobddProgram parse_program(const std::string& text, Tolerance tol) {
    KQobddProgram p = parse_program_unvalidated(text);
    auto findings = validate(p, tol);
    if (!findings.empty()) {
        std::string message = "invalid program";
        for (const auto& finding : findings) message += "\n  " + finding;
        throw ValidationError(message);
    }
    return p;
}

std::string serialize_program(const KQobddProgram& p) {
    std::string out;
    append_header(out, "kqobdd", p.name, p.comment);
    out += "n: " + std::to_string(p.n) + "\n";
    out += "k: " + std::to_string(p.k) + "\n";
    out += "width: " + std::to_string(p.width) + "\n";
    out += "ordering:";
    append_indices(out, p.ordering.sigma, 1);

    std::vector<std::size_t> accepting = p.accepting;
    std::sort(accepting.begin(), accepting.end());
    accepting.erase(std::unique(accepting.begin(), accepting.end()), accepting.end());
    out += "accepting:";
    append_indices(out, accepting, 0);

    for (std::size_t layer = 0; layer < p.k; ++layer) {
        out += "layer: " + std::to_string(layer + 1) + "\n";
        for (std::size_t position = 0; position < p.n; ++position) {
            out += "position: " + std::to_string(position + 1) + "\n";
            for (const char* key : {"t0", "t1"}) {
                const ComplexMatrix& m =
                    key[1] == '0' ? p.pair_at(layer, position).t0 : p.pair_at(layer, position).t1;
                out += key;
                out += ":\n";
                for (std::size_t r = 0; r < m.rows(); ++r) {
                    for (std::size_t c = 0; c < m.cols(); ++c) {
                        if (c > 0) out += ' ';
                        out += format_significant(m.at(r, c).real(), 17);
                        out += ' ';
                        out += format_significant(m.at(r, c).imag(), 17);
                    }
                    out += '\n';
                }
            }
        }
    }
    return out;
}

DetObdd parse_det_obdd_unvalidated(const std::string& text) {
    Cursor cursor(content_lines(text));
    Header h = parse_header(cursor, "detobdd", /*with_k=*/false, "position");

    DetObdd d;
    d.n = h.n;
    d.width = h.width;
    d.ordering = std::move(h.ordering);
    d.accepting = std::move(h.accepting);
    d.name = std::move(h.name);
    d.comment = std::move(h.comment);
    d.delta.reserve(d.n);

    for (std::size_t position = 1; position <= d.n; ++position) {
        expect_marker(cursor, "position", position);
        std::array<std::vector<std::size_t>, 2> row;
        for (int bit = 0; bit <= 1; ++bit) {
            auto [value, number] = expect_field(cursor, bit ? "d1" : "d0");
            auto tokens = tokens_of(value);
            if (tokens.size() != d.width)
                throw ParseError("transition row has " + std::to_string(tokens.size()) +
                                     " entries, expected " + std::to_string(d.width),
                                 number);
            row[bit].reserve(d.width);
            for (const auto& token : tokens)
                row[bit].push_back(parse_index_token(token, number));
        }
        d.delta.push_back(std::move(row));
    }
    expect_exhausted(cursor);
    return d;
}

DetObdd parse_det_obdd(const std::string& text) {
    DetObdd d = parse_det_obdd_unvalidated(text);
    auto findings = validate(d);
    if (!findings.empty()) {
        std::string message = "invalid automaton";
        for (const auto& finding : findings) message += "\n  " + finding;
        throw ValidationError(message);
    }
    return d;
}

std::string serialize_det_obdd(const DetObdd& d) {
    std::string out;
    append_header(out, "detobdd", d.name, d.comment);
    out += "n: " + std::to_string(d.n) + "\n";
    out += "width: " + std::to_string(d.width) + "\n";
    out += "ordering:";
    append_indices(out, d.ordering.sigma, 1);

    std::vector<std::size_t> accepting = d.accepting;
    std::sort(accepting.begin(), accepting.end());
    accepting.erase(std::unique(accepting.begin(), accepting.end()), accepting.end());
    out += "accepting:";
    append_indices(out, accepting, 0);

    for (std::size_t position = 0; position < d.n; ++position) {
        out += "position: " + std::to_string(position + 1) + "\n";
        for (int bit = 0; bit <= 1; ++bit) {
            out += bit ? "d1:" : "d0:";
            append_indices(out, d.delta[position][bit], 0);
        }
    }
    return out;
}

std::string read_text_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot open file '" + path + "'");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    if (in.bad()) throw ParseError("cannot read file '" + path + "'");
    return buffer.str();
}

void write_text_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot open file '" + path + "' for writing");
    out << text;
    out.flush();
    if (!out) throw std::runtime_error("cannot write file '" + path + "'");
}

}  // namespace qobdd
