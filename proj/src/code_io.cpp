#include "invaut/code_io.hpp"

#include <fstream>
#include <sstream>

#include "invaut/error.hpp"

namespace invaut {

namespace {

std::string_view trim(std::string_view s) {
    const auto is_space = [](char c) { return c == ' ' || c == '\t' || c == '\r' || c == '\n'; };
    while (!s.empty() && is_space(s.front())) s.remove_prefix(1);
    while (!s.empty() && is_space(s.back())) s.remove_suffix(1);
    return s;
}

}  // namespace

LinearCode parse_code(std::string_view text) {
    std::vector<Word> rows;
    std::size_t line_no = 0;
    while (!text.empty()) {
        const auto eol = text.find('\n');
        auto line = text.substr(0, eol);
        text = eol == std::string_view::npos ? std::string_view{} : text.substr(eol + 1);
        ++line_no;

        line = trim(line);
        if (line.empty() || line.front() == '#') continue;
        Word w;
        try {
            w = Word::from_string(line);
        } catch (const InvalidInput& e) {
            throw InvalidInput("line " + std::to_string(line_no) + ": " + e.what());
        }
        if (!rows.empty() && w.size() != rows.front().size()) {
            throw InvalidInput("line " + std::to_string(line_no) + ": row length " + std::to_string(w.size()) +
                               " differs from " + std::to_string(rows.front().size()));
        }
        rows.push_back(std::move(w));
    }
    if (rows.empty()) throw InvalidInput("code file has no rows, so its length is unknown");
    return rref(rows);
}

LinearCode read_code_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InvalidInput("cannot open " + path.string());
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_code(buf.str());
}

void write_code(std::ostream& out, const LinearCode& code, const std::string& comment) {
    if (!comment.empty()) out << "# " << comment << '\n';
    for (const auto& row : code.generators()) out << row.to_string() << '\n';
}

}  // namespace invaut
