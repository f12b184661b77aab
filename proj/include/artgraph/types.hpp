#pragma once

#include <optional>
#include <string>
#include <string_view>

namespace artgraph {

enum class Language { C, Java, CSharp, Dafny };

/// Dataset family of a base program.
enum class Category { Basic, Famous, Mirror, Unique };

/// Which variant of a base program an instance belongs to.
enum class Variant { Correct, Obvious, Subtle };

std::string_view to_string(Language lang);
std::string_view to_string(Category cat);
std::string_view to_string(Variant var);

/// File extension including the dot, e.g. ".java".
std::string_view extension_of(Language lang);

std::optional<Language> language_from_name(std::string_view name);
std::optional<Language> language_from_extension(std::string_view ext);
std::optional<Category> category_from_name(std::string_view name);
std::optional<Variant> variant_from_name(std::string_view name);

}  // namespace artgraph
