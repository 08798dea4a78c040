#include "bracekit/io.hpp"

#include "bracekit/error.hpp"

#include <fstream>
#include <sstream>

namespace bracekit::io {

namespace {

// significant lines: comments stripped, trimmed, non-empty
std::vector<std::string> lines_of(const std::string& text) {
    std::vector<std::string> out;
    std::istringstream is(text);
    std::string line;
    while (std::getline(is, line)) {
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        const auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos) continue;
        const auto last = line.find_last_not_of(" \t\r");
        out.push_back(line.substr(first, last - first + 1));
    }
    return out;
}

[[noreturn]] void bad(const std::string& what) { throw Error("BadFormat", what); }

std::size_t parse_count(const std::vector<std::string>& lines, std::size_t idx,
                        const std::string& keyword) {
    if (idx >= lines.size()) bad("missing '" + keyword + "' line");
    std::istringstream is(lines[idx]);
    std::string word;
    std::size_t value = 0;
    if (!(is >> word >> value) || word != keyword)
        bad("expected '" + keyword + " N', got '" + lines[idx] + "'");
    return value;
}

void expect_header(const std::vector<std::string>& lines, const std::string& kind) {
    if (lines.empty() || lines[0] != kind) bad("file must start with '" + kind + "'");
}

std::vector<Elem> parse_row(const std::string& line, std::size_t n) {
    std::istringstream is(line);
    std::vector<Elem> row;
    long v;
    while (is >> v) {
        if (v < 0 || v >= static_cast<long>(n)) bad("element index out of range in '" + line + "'");
        row.push_back(static_cast<Elem>(v));
    }
    if (row.size() != n) bad("row '" + line + "' does not have " + std::to_string(n) + " entries");
    return row;
}

std::vector<std::vector<Elem>> parse_table(const std::vector<std::string>& lines, std::size_t& idx,
                                           std::size_t n) {
    std::vector<std::vector<Elem>> rows;
    for (std::size_t r = 0; r < n; ++r) {
        if (idx >= lines.size()) bad("table truncated");
        rows.push_back(parse_row(lines[idx++], n));
    }
    return rows;
}

// "c i j k p/q" or "t i j k p/q"
void parse_tensor_line(const std::string& line, std::size_t dim, char tag, bool antisymmetric,
                       BilinearMap& tensor) {
    std::istringstream is(line);
    std::string word;
    long i, j, k;
    std::string value;
    if (!(is >> word >> i >> j >> k >> value) || word.size() != 1 || word[0] != tag)
        bad("expected '" + std::string(1, tag) + " i j k p/q', got '" + line + "'");
    if (i < 1 || j < 1 || k < 1 || i > static_cast<long>(dim) || j > static_cast<long>(dim) ||
        k > static_cast<long>(dim))
        bad("index out of range in '" + line + "' (indices are 1-based)");
    if (antisymmetric && i >= j) bad("bracket lines need i < j: '" + line + "'");
    const Rational q = parse_rational(value);
    tensor.coeff(i - 1, j - 1, k - 1) = q;
    if (antisymmetric) tensor.coeff(j - 1, i - 1, k - 1) = -q;
}

// law block: optional 'let name = expr' lines, then 'law:' and dim expressions
GroupLaw parse_law_block(const std::vector<std::string>& lines, std::size_t& idx, std::size_t dim) {
    std::map<std::string, ExprPtr> lets;
    while (idx < lines.size() && lines[idx].rfind("let ", 0) == 0) {
        const std::string& line = lines[idx];
        const auto eq = line.find('=');
        if (eq == std::string::npos) bad("let line needs '=': '" + line + "'");
        std::string name = line.substr(4, eq - 4);
        name.erase(0, name.find_first_not_of(" \t"));
        name.erase(name.find_last_not_of(" \t") + 1);
        if (name.empty()) bad("let line needs a name: '" + line + "'");
        lets[name] = parse_expression(line.substr(eq + 1), dim, lets, idx + 1);
        ++idx;
    }
    if (idx >= lines.size() || lines[idx] != "law:") bad("expected 'law:' line");
    ++idx;
    std::vector<ExprPtr> comps;
    for (std::size_t c = 0; c < dim; ++c) {
        if (idx >= lines.size()) bad("law block truncated");
        comps.push_back(parse_expression(lines[idx], dim, lets, idx + 1));
        ++idx;
    }
    return GroupLaw(dim, std::move(comps));
}

}  // namespace

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error("Io", "cannot open '" + path + "'");
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error("Io", "cannot write '" + path + "'");
    out << content;
}

std::string detect_kind(const std::string& text) {
    const auto lines = lines_of(text);
    if (lines.empty()) bad("empty file");
    std::istringstream is(lines[0]);
    std::string word;
    is >> word;
    return word;
}

FiniteGroup read_group(const std::string& text) {
    const auto lines = lines_of(text);
    expect_header(lines, "group");
    const std::size_t n = parse_count(lines, 1, "order");
    std::size_t idx = 2;
    return FiniteGroup::check_group(parse_table(lines, idx, n));
}

FiniteSkewBrace read_brace(const std::string& text) {
    const auto lines = lines_of(text);
    expect_header(lines, "brace");
    const std::size_t n = parse_count(lines, 1, "order");
    std::size_t idx = 2;
    if (idx >= lines.size() || lines[idx] != "dot:") bad("expected 'dot:' line");
    ++idx;
    auto dot_rows = parse_table(lines, idx, n);
    if (idx >= lines.size() || lines[idx] != "circ:") bad("expected 'circ:' line");
    ++idx;
    auto circ_rows = parse_table(lines, idx, n);
    return FiniteSkewBrace::verify_brace(FiniteGroup::check_group(dot_rows),
                                         FiniteGroup::check_group(circ_rows));
}

LieAlgebra read_liealg(const std::string& text) {
    const auto lines = lines_of(text);
    expect_header(lines, "liealg");
    const std::size_t dim = parse_count(lines, 1, "dim");
    BilinearMap tensor = BilinearMap::zero(dim);
    for (std::size_t idx = 2; idx < lines.size(); ++idx)
        parse_tensor_line(lines[idx], dim, 'c', true, tensor);
    return LieAlgebra(std::move(tensor));
}

PostLieAlgebra read_postlie(const std::string& text) {
    const auto lines = lines_of(text);
    expect_header(lines, "postlie");
    const std::size_t dim = parse_count(lines, 1, "dim");
    BilinearMap bracket = BilinearMap::zero(dim);
    BilinearMap triangle = BilinearMap::zero(dim);
    for (std::size_t idx = 2; idx < lines.size(); ++idx) {
        if (lines[idx][0] == 'c')
            parse_tensor_line(lines[idx], dim, 'c', true, bracket);
        else if (lines[idx][0] == 't')
            parse_tensor_line(lines[idx], dim, 't', false, triangle);
        else
            bad("expected a 'c' or 't' line, got '" + lines[idx] + "'");
    }
    return PostLieAlgebra(LieAlgebra(std::move(bracket)), std::move(triangle));
}

GroupLaw read_grouplaw(const std::string& text) {
    const auto lines = lines_of(text);
    expect_header(lines, "grouplaw");
    const std::size_t dim = parse_count(lines, 1, "dim");
    std::size_t idx = 2;
    GroupLaw law = parse_law_block(lines, idx, dim);
    if (idx != lines.size()) bad("trailing content after the law block");
    return law;
}

std::pair<GroupLaw, GroupLaw> read_bracelaw(const std::string& text) {
    const auto lines = lines_of(text);
    expect_header(lines, "bracelaw");
    const std::size_t dim = parse_count(lines, 1, "dim");
    std::size_t idx = 2;
    if (idx >= lines.size() || lines[idx] != "dot:") bad("expected 'dot:' line");
    ++idx;
    GroupLaw dot = parse_law_block(lines, idx, dim);
    if (idx >= lines.size() || lines[idx] != "circ:") bad("expected 'circ:' line");
    ++idx;
    GroupLaw circ = parse_law_block(lines, idx, dim);
    if (idx != lines.size()) bad("trailing content after the circ block");
    return {std::move(dot), std::move(circ)};
}

namespace {

void append_table(std::ostringstream& os, const FiniteGroup& g) {
    for (std::size_t r = 0; r < g.order(); ++r) {
        for (std::size_t c = 0; c < g.order(); ++c) {
            if (c) os << ' ';
            os << g.mul(static_cast<Elem>(r), static_cast<Elem>(c));
        }
        os << '\n';
    }
}

}  // namespace

std::string write_group(const FiniteGroup& g) {
    std::ostringstream os;
    os << "group\norder " << g.order() << '\n';
    append_table(os, g);
    return os.str();
}

std::string write_brace(const FiniteSkewBrace& b) {
    std::ostringstream os;
    os << "brace\norder " << b.order() << "\ndot:\n";
    append_table(os, b.dot());
    os << "circ:\n";
    append_table(os, b.circ());
    return os.str();
}

std::string write_liealg(const LieAlgebra& L) {
    std::ostringstream os;
    os << "liealg\ndim " << L.dim() << '\n';
    for (std::size_t i = 0; i < L.dim(); ++i)
        for (std::size_t j = i + 1; j < L.dim(); ++j)
            for (std::size_t k = 0; k < L.dim(); ++k)
                if (L.c(i, j, k) != 0)
                    os << "c " << i + 1 << ' ' << j + 1 << ' ' << k + 1 << ' '
                       << to_string(L.c(i, j, k)) << '\n';
    return os.str();
}

std::string write_postlie(const LieAlgebra& dot, const BilinearMap& triangle) {
    std::ostringstream os;
    os << "postlie\ndim " << dot.dim() << '\n';
    for (std::size_t i = 0; i < dot.dim(); ++i)
        for (std::size_t j = i + 1; j < dot.dim(); ++j)
            for (std::size_t k = 0; k < dot.dim(); ++k)
                if (dot.c(i, j, k) != 0)
                    os << "c " << i + 1 << ' ' << j + 1 << ' ' << k + 1 << ' '
                       << to_string(dot.c(i, j, k)) << '\n';
    for (std::size_t i = 0; i < triangle.dim(); ++i)
        for (std::size_t j = 0; j < triangle.dim(); ++j)
            for (std::size_t k = 0; k < triangle.dim(); ++k)
                if (triangle.coeff(i, j, k) != 0)
                    os << "t " << i + 1 << ' ' << j + 1 << ' ' << k + 1 << ' '
                       << to_string(triangle.coeff(i, j, k)) << '\n';
    return os.str();
}

}  // namespace bracekit::io
