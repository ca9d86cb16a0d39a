// SPDX-FileCopyrightText: © 2026 The mereoscan Authors
//
// SPDX-License-Identifier: Apache-2.0

// Line-oriented import/include recognisers. These are not parsers for the
// languages: they find dependency statements and nothing else.

#include <algorithm>
#include <regex>

#include "mereoscan/depgraph/extract.hpp"

namespace mereoscan::depgraph {

namespace {

bool valid_utf8(std::string_view s) {
    std::size_t i = 0;
    while (i < s.size()) {
        auto c = static_cast<unsigned char>(s[i]);
        std::size_t len = c < 0x80 ? 1 : (c >> 5) == 0x6 ? 2 : (c >> 4) == 0xE ? 3
                                     : (c >> 3) == 0x1E ? 4 : 0;
        if (len == 0 || i + len > s.size()) return false;
        for (std::size_t k = 1; k < len; ++k) {
            if ((static_cast<unsigned char>(s[i + k]) >> 6) != 0x2) return false;
        }
        i += len;
    }
    return true;
}

std::vector<std::string_view> split_lines(std::string_view text) {
    std::vector<std::string_view> lines;
    std::size_t start = 0;
    while (start < text.size()) {
        auto end = text.find('\n', start);
        if (end == std::string_view::npos) end = text.size();
        auto line = text.substr(start, end - start);
        if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
        lines.push_back(line);
        start = end + 1;
    }
    return lines;
}

std::string trim(std::string_view s) {
    auto b = s.find_first_not_of(" \t");
    if (b == std::string_view::npos) return {};
    auto e = s.find_last_not_of(" \t");
    return std::string(s.substr(b, e - b + 1));
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::size_t start = 0;
    while (true) {
        auto end = s.find(sep, start);
        out.push_back(trim(std::string_view(s).substr(
            start, end == std::string::npos ? std::string::npos : end - start)));
        if (end == std::string::npos) break;
        start = end + 1;
    }
    return out;
}

// Python lexer state carried across lines: inside a triple-quoted string
// (and which delimiter closes it), or inside an open parenthesis.
struct PyState {
    std::string open_triple;
};

// Returns the code portion of a physical line with string literals blanked
// out and comments removed.
std::string python_code(std::string_view line, PyState& st) {
    std::string code;
    std::size_t i = 0;
    while (i < line.size()) {
        if (!st.open_triple.empty()) {
            auto close = line.find(st.open_triple, i);
            if (close == std::string_view::npos) return code;
            i = close + 3;
            st.open_triple.clear();
            code += " ";
            continue;
        }
        char c = line[i];
        if (c == '#') break;
        if (c == '"' || c == '\'') {
            if (line.substr(i, 3) == std::string(3, c)) {
                st.open_triple = std::string(3, c);
                i += 3;
                continue;
            }
            // Single-line literal; skip to the matching quote.
            std::size_t j = i + 1;
            while (j < line.size() && line[j] != c) {
                if (line[j] == '\\') ++j;
                ++j;
            }
            i = j + 1;
            code += " \"\" ";
            continue;
        }
        code += c;
        ++i;
    }
    return code;
}

const std::regex& dotted_name() {
    static const std::regex re(R"(^([A-Za-z_]\w*(?:\s*\.\s*[A-Za-z_]\w*)*)(?:\s+as\s+[A-Za-z_]\w*)?$)");
    return re;
}

std::string strip_spaces(std::string s) {
    s.erase(std::remove_if(s.begin(), s.end(), [](char c) { return c == ' ' || c == '\t'; }),
            s.end());
    return s;
}

}  // namespace

std::string_view to_string(Grammar g) noexcept {
    return g == Grammar::Python ? "python" : "c";
}

std::optional<Grammar> parse_grammar(std::string_view s) noexcept {
    if (s == "python") return Grammar::Python;
    if (s == "c") return Grammar::C;
    return std::nullopt;
}

ParseOutcome parse_python_imports(std::string_view text) {
    ParseOutcome out;
    if (text.find('\0') != std::string_view::npos) {
        out.error = "binary content";
        return out;
    }
    if (!valid_utf8(text)) {
        out.error = "not valid UTF-8";
        return out;
    }
    static const std::regex import_re(R"(^import\s+(.+)$)");
    static const std::regex from_re(
        R"(^from\s+(\.*)\s*([A-Za-z_]\w*(?:\s*\.\s*[A-Za-z_]\w*)*)?\s+import\s*(.*)$)");
    static const std::regex name_re(R"(^(\*|[A-Za-z_]\w*)(?:\s+as\s+[A-Za-z_]\w*)?$)");

    PyState st;
    auto lines = split_lines(text);
    // Pending `from X import (` awaiting its closing parenthesis.
    ImportStatement* open_paren = nullptr;
    for (std::size_t ln = 0; ln < lines.size(); ++ln) {
        const std::string code = python_code(lines[ln], st);
        const std::size_t line_no = ln + 1;
        if (open_paren != nullptr) {
            std::string rest = code;
            bool closed = false;
            if (auto p = rest.find(')'); p != std::string::npos) {
                rest = rest.substr(0, p);
                closed = true;
            }
            for (const auto& n : split(rest, ',')) {
                if (n.empty()) continue;
                std::smatch m;
                if (!std::regex_match(n, m, name_re)) {
                    out.error = "line " + std::to_string(line_no) + ": malformed import name '" + n + "'";
                    out.statements.clear();
                    return out;
                }
                open_paren->names.push_back(m[1]);
            }
            if (closed) open_paren = nullptr;
            continue;
        }
        for (const auto& stmt : split(code, ';')) {
            std::smatch m;
            if (std::regex_match(stmt, m, import_re)) {
                for (const auto& item : split(m[1], ',')) {
                    std::smatch im;
                    if (!std::regex_match(item, im, dotted_name())) {
                        out.error = "line " + std::to_string(line_no) + ": malformed import '" + stmt + "'";
                        out.statements.clear();
                        return out;
                    }
                    out.statements.push_back(
                        {line_no, Mechanism::Import, strip_spaces(im[1]), {}, false});
                }
            } else if (std::regex_match(stmt, m, from_re)) {
                std::string module = std::string(m[1]) + strip_spaces(m[2]);
                std::string names = m[3];
                if (module.empty() || trim(names).empty()) {
                    out.error = "line " + std::to_string(line_no) + ": malformed import '" + stmt + "'";
                    out.statements.clear();
                    return out;
                }
                ImportStatement s{line_no, Mechanism::Import, module, {}, false};
                bool paren = false;
                names = trim(names);
                if (!names.empty() && names.front() == '(') {
                    names.erase(0, 1);
                    if (auto p = names.find(')'); p != std::string::npos) {
                        names = names.substr(0, p);
                    } else {
                        paren = true;
                    }
                }
                for (const auto& n : split(names, ',')) {
                    if (n.empty() || n == "\\") continue;
                    std::smatch nm;
                    if (!std::regex_match(n, nm, name_re)) {
                        out.error = "line " + std::to_string(line_no) + ": malformed import name '" + n + "'";
                        out.statements.clear();
                        return out;
                    }
                    s.names.push_back(nm[1]);
                }
                out.statements.push_back(std::move(s));
                if (paren) open_paren = &out.statements.back();
            } else if (stmt == "import" ||
                       (stmt.rfind("from ", 0) == 0 && stmt.find("import") != std::string::npos)) {
                out.error = "line " + std::to_string(line_no) + ": malformed import '" + stmt + "'";
                out.statements.clear();
                return out;
            }
        }
    }
    return out;
}

ParseOutcome parse_c_includes(std::string_view text) {
    ParseOutcome out;
    if (text.find('\0') != std::string_view::npos) {
        out.error = "binary content";
        return out;
    }
    static const std::regex include_re(R"re(^\s*#\s*include\s*(?:<([^>]+)>|"([^"]+)"))re");
    bool in_block = false;
    auto lines = split_lines(text);
    for (std::size_t ln = 0; ln < lines.size(); ++ln) {
        // Drop comments, leaving string literals intact.
        std::string code;
        std::string_view line = lines[ln];
        char in_string = 0;
        for (std::size_t i = 0; i < line.size(); ++i) {
            if (in_block) {
                if (line.substr(i, 2) == "*/") {
                    in_block = false;
                    ++i;
                }
                continue;
            }
            char c = line[i];
            if (in_string) {
                code += c;
                if (c == '\\' && i + 1 < line.size()) code += line[++i];
                else if (c == in_string) in_string = 0;
                continue;
            }
            if (line.substr(i, 2) == "//") break;
            if (line.substr(i, 2) == "/*") {
                in_block = true;
                ++i;
                code += ' ';
                continue;
            }
            if (c == '"' || c == '\'') in_string = c;
            code += c;
        }
        std::smatch m;
        if (std::regex_search(code, m, include_re)) {
            const bool angle = m[1].matched;
            out.statements.push_back({ln + 1, Mechanism::Include,
                                      angle ? std::string(m[1]) : std::string(m[2]),
                                      {}, angle});
        }
    }
    return out;
}

}  // namespace mereoscan::depgraph
