#include "ldcode/ldc_io.hpp"

#include <charconv>
#include <fstream>
#include <optional>
#include <set>
#include <sstream>

namespace ldcode {

namespace {

std::string_view trim(std::string_view s)
{
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string_view::npos)
        return {};
    const auto last = s.find_last_not_of(" \t\r");
    return s.substr(first, last - first + 1);
}

std::string located(const std::string& what, std::size_t line)
{
    return line == 0 ? what : "line " + std::to_string(line) + ": " + what;
}

}  // namespace

ParseError::ParseError(const std::string& what, std::size_t line) : Error(located(what, line)), line_(line) {}

Code parse_ldc(std::string_view text)
{
    std::optional<int> n;
    std::set<WordIndex> seen;
    std::vector<WordIndex> words;
    std::size_t line_no = 0;
    while (!text.empty()) {
        const auto eol = text.find('\n');
        const std::string_view raw = text.substr(0, eol);
        text = eol == std::string_view::npos ? std::string_view{} : text.substr(eol + 1);
        ++line_no;
        const std::string_view line = trim(raw);
        if (line.empty() || line.front() == '#')
            continue;
        if (!n) {
            int value = 0;
            const auto [ptr, ec] = std::from_chars(line.data(), line.data() + line.size(), value);
            if (ec != std::errc{} || ptr != line.data() + line.size())
                throw ParseError("expected the dimension n, got '" + std::string(line) + "'", line_no);
            if (value < 1 || value > kMaxDimension)
                throw ParseError("dimension " + std::to_string(value) + " is outside 1.." +
                                     std::to_string(kMaxDimension),
                                 line_no);
            n = value;
            continue;
        }
        if (line.size() != static_cast<std::size_t>(*n))
            throw ParseError("expected " + std::to_string(*n) + " bits, got " + std::to_string(line.size()), line_no);
        WordIndex w = 0;
        try {
            w = parse_bitstring(line);
        } catch (const std::invalid_argument&) {
            throw ParseError("bitstring '" + std::string(line) + "' has characters other than 0 and 1", line_no);
        }
        if (!seen.insert(w).second)
            throw ParseError("duplicate codeword " + std::string(line), line_no);
        words.push_back(w);
    }
    if (!n)
        throw ParseError("missing dimension line", 0);
    if (words.empty())
        throw ParseError("code has no codewords", 0);
    return Code::from_words(Dimension(*n), words);
}

Code read_ldc(const std::filesystem::path& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw ParseError("cannot open " + path.string(), 0);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse_ldc(buffer.str());
}

std::string format_ldc(const Code& code, std::string_view comment)
{
    std::string out;
    while (!comment.empty()) {
        const auto eol = comment.find('\n');
        out += "# ";
        out += comment.substr(0, eol);
        out += '\n';
        comment = eol == std::string_view::npos ? std::string_view{} : comment.substr(eol + 1);
    }
    out += std::to_string(code.n()) + '\n';
    for (WordIndex w : code.words())
        out += bitstring(w, code.n()) + '\n';
    return out;
}

void write_ldc(const std::filesystem::path& path, const Code& code, std::string_view comment)
{
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw Error("cannot write " + path.string());
    out << format_ldc(code, comment);
    if (!out)
        throw Error("failed writing " + path.string());
}

}  // namespace ldcode
