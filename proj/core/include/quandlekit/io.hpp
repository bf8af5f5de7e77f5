#pragma once

#include <filesystem>
#include <istream>
#include <stdexcept>
#include <string>
#include <vector>

#include "quandlekit/types.hpp"

namespace quandlekit {

// Structural failure while reading a document: bad shape, bad token, or a
// token outside the range its format promises.  Positions are 1-based.
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& what, int line, int column);
    int line() const noexcept { return line_; }
    int column() const noexcept { return column_; }

private:
    int line_;
    int column_;
};

// Matrix document: first line the order n, then exactly n lines of exactly
// n whitespace-separated integers in {1..n}.  Trailing blank lines are
// tolerated; anything else is a ParseError.  Orders above 4096 are refused
// at parse time as a resource guard.
Table read_matrix(std::istream& in);
Table read_matrix_file(const std::filesystem::path& path);
std::string format_matrix(const Table& t);
void write_matrix_file(const std::filesystem::path& path, const Table& t);

// Permutation document: a single line of n integers, the images of 1..n in
// order.  Entries must lie in {1..n}; bijectivity is the caller's check.
std::vector<int> read_vector(std::istream& in);
std::vector<int> read_vector_file(const std::filesystem::path& path);
std::string format_vector(const std::vector<int>& v);
void write_vector_file(const std::filesystem::path& path, const std::vector<int>& v);

}  // namespace quandlekit
