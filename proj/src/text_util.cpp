#include "artgraph/text_util.hpp"

#include <algorithm>
#include <cstdio>

namespace artgraph::text {

namespace {

bool is_space(char c)
{
    return static_cast<unsigned char>(c) <= 0x20 || c == 0x7f;
}

}  // namespace

std::string_view trim(std::string_view s)
{
    while (!s.empty() && is_space(s.front()))
        s.remove_prefix(1);
    while (!s.empty() && is_space(s.back()))
        s.remove_suffix(1);
    return s;
}

std::string normalize_ws(std::string_view s)
{
    std::string out;
    out.reserve(s.size());
    bool pending = false;
    for (char c : s) {
        if (is_space(c)) {
            pending = !out.empty();
            continue;
        }
        if (pending)
            out += ' ';
        pending = false;
        out += c;
    }
    return out;
}

std::vector<std::string> split_lines(std::string_view s)
{
    std::vector<std::string> lines;
    std::size_t start = 0;
    while (start <= s.size()) {
        auto nl = s.find('\n', start);
        if (nl == std::string_view::npos) {
            if (start < s.size())
                lines.emplace_back(s.substr(start));
            break;
        }
        lines.emplace_back(s.substr(start, nl - start));
        start = nl + 1;
    }
    return lines;
}

bool is_ident_start(char c)
{
    return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || c == '_';
}

bool is_ident_char(char c)
{
    return is_ident_start(c) || (c >= '0' && c <= '9');
}

bool is_identifier(std::string_view s)
{
    if (s.empty() || !is_ident_start(s.front()))
        return false;
    return std::all_of(s.begin(), s.end(), is_ident_char);
}

bool starts_with_word(std::string_view s, std::string_view word)
{
    if (!s.starts_with(word))
        return false;
    return s.size() == word.size() || !is_ident_char(s[word.size()]);
}

std::string sanitize_utf8(std::string_view bytes)
{
    static constexpr std::string_view kReplacement = "\xEF\xBF\xBD";
    std::string out;
    out.reserve(bytes.size());
    std::size_t i = 0;
    while (i < bytes.size()) {
        auto b = static_cast<unsigned char>(bytes[i]);
        std::size_t len = 0;
        std::uint32_t min_cp = 0;
        if (b < 0x80) {
            out += static_cast<char>(b);
            ++i;
            continue;
        }
        if ((b & 0xE0) == 0xC0) {
            len = 2;
            min_cp = 0x80;
        } else if ((b & 0xF0) == 0xE0) {
            len = 3;
            min_cp = 0x800;
        } else if ((b & 0xF8) == 0xF0) {
            len = 4;
            min_cp = 0x10000;
        }
        bool ok = len != 0 && i + len <= bytes.size();
        std::uint32_t cp = ok ? (b & (0x7F >> len)) : 0;
        for (std::size_t k = 1; ok && k < len; ++k) {
            auto cb = static_cast<unsigned char>(bytes[i + k]);
            if ((cb & 0xC0) != 0x80)
                ok = false;
            else
                cp = (cp << 6) | (cb & 0x3F);
        }
        if (ok && (cp < min_cp || cp > 0x10FFFF || (cp >= 0xD800 && cp <= 0xDFFF)))
            ok = false;
        if (ok) {
            out.append(bytes.substr(i, len));
            i += len;
        } else {
            out += kReplacement;
            ++i;
        }
    }
    return out;
}

LineIndex::LineIndex(std::string_view text)
{
    starts_.push_back(0);
    for (std::size_t i = 0; i < text.size(); ++i) {
        if (text[i] == '\n')
            starts_.push_back(i + 1);
    }
}

int LineIndex::line_of(std::size_t offset) const
{
    auto it = std::upper_bound(starts_.begin(), starts_.end(), offset);
    return static_cast<int>(it - starts_.begin());
}

int LineIndex::column_of(std::size_t offset) const
{
    int line = line_of(offset);
    return static_cast<int>(offset - starts_[static_cast<std::size_t>(line - 1)]) + 1;
}

std::size_t LineIndex::line_start(int line) const
{
    if (line < 1)
        return 0;
    auto idx = std::min(static_cast<std::size_t>(line - 1), starts_.size() - 1);
    return starts_[idx];
}

std::string indentation_at(std::string_view text, std::size_t offset)
{
    offset = std::min(offset, text.size());
    std::size_t start = offset == 0 ? std::string_view::npos : text.rfind('\n', offset - 1);
    start = start == std::string_view::npos ? 0 : start + 1;
    std::size_t end = start;
    while (end < text.size() && (text[end] == ' ' || text[end] == '\t'))
        ++end;
    return std::string(text.substr(start, end - start));
}

std::string join(const std::vector<std::string>& parts, std::string_view sep)
{
    std::string out;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (i)
            out += sep;
        out += parts[i];
    }
    return out;
}

std::uint64_t fnv1a64(std::string_view bytes)
{
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (char c : bytes) {
        h ^= static_cast<unsigned char>(c);
        h *= 0x100000001b3ULL;
    }
    return h;
}

std::string hex64(std::uint64_t v)
{
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(v));
    return buf;
}

std::string replace_word(std::string_view s, std::string_view from, std::string_view to)
{
    std::string out;
    out.reserve(s.size());
    std::size_t i = 0;
    while (i < s.size()) {
        char c = s[i];
        if (c == '"' || c == '\'') {
            std::size_t j = i + 1;
            while (j < s.size() && s[j] != c) {
                if (s[j] == '\\')
                    ++j;
                ++j;
            }
            j = std::min(j + 1, s.size());
            out.append(s.substr(i, j - i));
            i = j;
            continue;
        }
        if (c >= '0' && c <= '9') {
            std::size_t j = i;
            while (j < s.size() && (is_ident_char(s[j]) || s[j] == '.'))
                ++j;
            out.append(s.substr(i, j - i));
            i = j;
            continue;
        }
        if (is_ident_start(c)) {
            std::size_t j = i;
            while (j < s.size() && is_ident_char(s[j]))
                ++j;
            auto word = s.substr(i, j - i);
            bool member = i > 0 && s[i - 1] == '.';
            if (word == from && !member)
                out += to;
            else
                out += word;
            i = j;
            continue;
        }
        out += c;
        ++i;
    }
    return out;
}

}  // namespace artgraph::text
