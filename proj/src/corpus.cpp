#include "artgraph/corpus.hpp"

#include <algorithm>
#include <array>
#include <fstream>
#include <set>
#include <sstream>
#include <string_view>
#include <system_error>

#include "artgraph/text_util.hpp"

namespace fs = std::filesystem;

namespace artgraph::corpus {

namespace {

std::vector<std::string> components(const std::string& rel)
{
    std::vector<std::string> parts;
    std::size_t start = 0;
    while (start <= rel.size()) {
        auto slash = rel.find('/', start);
        if (slash == std::string::npos) {
            parts.push_back(rel.substr(start));
            break;
        }
        parts.push_back(rel.substr(start, slash - start));
        start = slash + 1;
    }
    return parts;
}

}  // namespace

std::string read_file(const fs::path& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw CorpusError("cannot open " + path.string());
    std::ostringstream buf;
    buf << in.rdbuf();
    if (in.bad())
        throw CorpusError("read failure on " + path.string());
    return text::sanitize_utf8(buf.str());
}

void write_file(const fs::path& path, const std::string& content)
{
    if (path.has_parent_path()) {
        std::error_code ec;
        fs::create_directories(path.parent_path(), ec);
        if (ec)
            throw CorpusError("cannot create " + path.parent_path().string() + ": " + ec.message());
    }
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out)
        throw CorpusError("cannot write " + path.string());
    out << content;
    if (!out)
        throw CorpusError("write failure on " + path.string());
}

std::vector<ProgramArtifact> scan_corpus(const fs::path& root, Language language, Diagnostics* diag)
{
    std::error_code ec;
    if (!fs::is_directory(root, ec))
        throw CorpusError("corpus root does not exist or is not a directory: " + root.string());

    const auto ext = extension_of(language);
    std::vector<std::string> rels;
    fs::recursive_directory_iterator it(root, fs::directory_options::skip_permission_denied, ec);
    if (ec)
        throw CorpusError("cannot walk " + root.string() + ": " + ec.message());
    for (const fs::recursive_directory_iterator end; it != end; it.increment(ec)) {
        if (ec) {
            if (diag)
                diag->warn("unreadable-dir", ec.message());
            ec.clear();
            continue;
        }
        if (!it->is_regular_file(ec) || it->path().extension() != ext)
            continue;
        rels.push_back(it->path().lexically_relative(root).generic_string());
    }
    std::sort(rels.begin(), rels.end());

    std::vector<ProgramArtifact> out;
    out.reserve(rels.size());
    for (const auto& rel : rels) {
        ProgramArtifact a;
        a.path = rel;
        a.language = language;
        auto parts = components(rel);
        parts.pop_back();
        for (const auto& dir : parts) {
            if (auto c = category_from_name(dir))
                a.category = c;
            if (auto v = variant_from_name(dir))
                a.variant = v;
        }
        try {
            a.source = read_file(root / rel);
        } catch (const CorpusError& e) {
            if (diag)
                diag->warn("unreadable-file", e.what(), 0, rel);
            continue;
        }
        out.push_back(std::move(a));
    }
    return out;
}

fs::path mirror_path(const fs::path& /*src_root*/, const fs::path& dst_root,
                     const std::string& artifact_path, const std::string& new_extension)
{
    fs::path rel(artifact_path);
    rel.replace_extension(new_extension);
    return dst_root / rel;
}

std::string base_program_key(const ProgramArtifact& artifact)
{
    auto parts = components(artifact.path);
    std::string key;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        bool last = i + 1 == parts.size();
        if (!last && variant_from_name(parts[i]))
            continue;
        if (!key.empty())
            key += '/';
        key += last ? fs::path(parts[i]).stem().string() : parts[i];
    }
    return key;
}

std::string sanitize_class_name(const std::string& stem)
{
    static const std::set<std::string_view> kReserved{
        "abstract", "as",      "base",     "bool",      "boolean",  "break",     "byte",
        "case",     "catch",   "char",     "class",     "const",    "continue",  "default",
        "do",       "double",  "else",     "enum",      "extends",  "false",     "final",
        "finally",  "float",   "for",      "goto",      "if",       "import",    "in",
        "int",      "is",      "long",     "namespace", "new",      "null",      "object",
        "package",  "private", "public",   "return",    "short",    "static",    "string",
        "struct",   "super",   "switch",   "this",      "throw",    "true",      "try",
        "using",    "var",     "void",     "volatile",  "while",
    };
    std::string out;
    for (char c : stem)
        out += text::is_ident_char(c) ? c : '_';
    if (out.empty() || (out[0] >= '0' && out[0] <= '9'))
        out.insert(out.begin(), '_');
    if (kReserved.contains(out))
        out += '_';
    return out;
}

}  // namespace artgraph::corpus
