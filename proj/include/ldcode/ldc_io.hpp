#pragma once

// The .ldc text format: '#' comment lines, then a line holding n, then one
// n-character bitstring per codeword with coordinate 1 leftmost.

#include "ldcode/code.hpp"

#include <filesystem>
#include <string>
#include <string_view>

namespace ldcode {

class ParseError : public Error {
public:
    ParseError(const std::string& what, std::size_t line);
    /// 1-based line number, 0 when the error is not tied to a line.
    [[nodiscard]] std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

/// Blank lines are ignored. Rejects bad lengths or characters, duplicate
/// codewords and empty codes.
Code parse_ldc(std::string_view text);
Code read_ldc(const std::filesystem::path& path);

/// Codewords in ascending index order, after optional '#' comment lines.
std::string format_ldc(const Code& code, std::string_view comment = {});
void write_ldc(const std::filesystem::path& path, const Code& code, std::string_view comment = {});

}  // namespace ldcode
