#include "quandlekit/io.hpp"

#include <cctype>
#include <charconv>
#include <fstream>

namespace quandlekit {

namespace {

constexpr int kMaxOrder = 4096;

struct Token {
    std::string text;
    int line;
    int column;
};

bool is_space(char c) { return std::isspace(static_cast<unsigned char>(c)) != 0; }

std::vector<Token> split_line(const std::string& line, int lineno) {
    std::vector<Token> out;
    std::size_t i = 0;
    while (i < line.size()) {
        if (is_space(line[i])) {
            ++i;
            continue;
        }
        const std::size_t start = i;
        while (i < line.size() && !is_space(line[i])) ++i;
        out.push_back({line.substr(start, i - start), lineno, static_cast<int>(start) + 1});
    }
    return out;
}

int parse_int(const Token& tok) {
    int value = 0;
    const char* first = tok.text.data();
    const char* last = first + tok.text.size();
    const auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc{} || ptr != last)
        throw ParseError("'" + tok.text + "' is not an integer", tok.line, tok.column);
    return value;
}

// Reads lines, dropping a trailing '\r' so CRLF files parse the same.
bool next_line(std::istream& in, std::string& line) {
    if (!std::getline(in, line)) return false;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    return true;
}

void reject_trailing_content(std::istream& in, int lineno) {
    std::string line;
    while (next_line(in, line)) {
        ++lineno;
        const auto tokens = split_line(line, lineno);
        if (!tokens.empty())
            throw ParseError("unexpected content after document", tokens.front().line,
                             tokens.front().column);
    }
}

}  // namespace

ParseError::ParseError(const std::string& what, int line, int column)
    : std::runtime_error("line " + std::to_string(line) + ", column " + std::to_string(column) +
                         ": " + what),
      line_(line),
      column_(column) {}

Table read_matrix(std::istream& in) {
    std::string line;
    int lineno = 0;

    // Order line: skip leading blank lines, then exactly one integer.
    std::vector<Token> tokens;
    while (tokens.empty()) {
        if (!next_line(in, line)) throw ParseError("expected order", lineno + 1, 1);
        ++lineno;
        tokens = split_line(line, lineno);
    }
    if (tokens.size() != 1)
        throw ParseError("expected a single order token", tokens[1].line, tokens[1].column);
    const int n = parse_int(tokens[0]);
    if (n < 1) throw ParseError("order must be positive", tokens[0].line, tokens[0].column);
    if (n > kMaxOrder)
        throw ParseError("order " + std::to_string(n) + " exceeds reader limit " +
                             std::to_string(kMaxOrder),
                         tokens[0].line, tokens[0].column);

    Table t(n, 0);
    for (int i = 1; i <= n; ++i) {
        if (!next_line(in, line))
            throw ParseError("expected " + std::to_string(n) + " rows, got " +
                                 std::to_string(i - 1),
                             lineno + 1, 1);
        ++lineno;
        const auto row = split_line(line, lineno);
        if (row.size() != static_cast<std::size_t>(n))
            throw ParseError("row " + std::to_string(i) + " has " + std::to_string(row.size()) +
                                 " entries, expected " + std::to_string(n),
                             lineno, row.empty() ? 1 : row.front().column);
        for (int j = 1; j <= n; ++j) {
            const Token& tok = row[static_cast<std::size_t>(j - 1)];
            const int v = parse_int(tok);
            if (v < 1 || v > n)
                throw ParseError("entry " + std::to_string(v) + " outside 1.." +
                                     std::to_string(n),
                                 tok.line, tok.column);
            t.at(i, j) = v;
        }
    }
    reject_trailing_content(in, lineno);
    return t;
}

Table read_matrix_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path.string());
    return read_matrix(in);
}

std::string format_matrix(const Table& t) {
    std::string out = std::to_string(t.order()) + "\n";
    for (int i = 1; i <= t.order(); ++i) {
        for (int j = 1; j <= t.order(); ++j) {
            if (j > 1) out += ' ';
            out += std::to_string(t.at(i, j));
        }
        out += '\n';
    }
    return out;
}

void write_matrix_file(const std::filesystem::path& path, const Table& t) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open " + path.string() + " for writing");
    out << format_matrix(t);
    if (!out) throw std::runtime_error("write failed for " + path.string());
}

std::vector<int> read_vector(std::istream& in) {
    std::string line;
    int lineno = 0;
    std::vector<Token> tokens;
    while (tokens.empty()) {
        if (!next_line(in, line)) throw ParseError("expected a permutation line", lineno + 1, 1);
        ++lineno;
        tokens = split_line(line, lineno);
    }
    const int n = static_cast<int>(tokens.size());
    std::vector<int> out;
    out.reserve(tokens.size());
    for (const Token& tok : tokens) {
        const int v = parse_int(tok);
        if (v < 1 || v > n)
            throw ParseError("entry " + std::to_string(v) + " outside 1.." + std::to_string(n),
                             tok.line, tok.column);
        out.push_back(v);
    }
    reject_trailing_content(in, lineno);
    return out;
}

std::vector<int> read_vector_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path.string());
    return read_vector(in);
}

std::string format_vector(const std::vector<int>& v) {
    std::string out;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i > 0) out += ' ';
        out += std::to_string(v[i]);
    }
    out += '\n';
    return out;
}

void write_vector_file(const std::filesystem::path& path, const std::vector<int>& v) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open " + path.string() + " for writing");
    out << format_vector(v);
    if (!out) throw std::runtime_error("write failed for " + path.string());
}

}  // namespace quandlekit
