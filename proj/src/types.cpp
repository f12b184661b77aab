#include "artgraph/types.hpp"

#include <array>
#include <utility>

namespace artgraph {

namespace {

constexpr std::array<std::pair<Language, std::string_view>, 4> kLanguageNames{{
    {Language::C, "c"},
    {Language::Java, "java"},
    {Language::CSharp, "csharp"},
    {Language::Dafny, "dafny"},
}};

constexpr std::array<std::pair<Language, std::string_view>, 4> kExtensions{{
    {Language::C, ".c"},
    {Language::Java, ".java"},
    {Language::CSharp, ".cs"},
    {Language::Dafny, ".dfy"},
}};

constexpr std::array<std::pair<Category, std::string_view>, 4> kCategoryNames{{
    {Category::Basic, "basic"},
    {Category::Famous, "famous"},
    {Category::Mirror, "mirror"},
    {Category::Unique, "unique"},
}};

constexpr std::array<std::pair<Variant, std::string_view>, 3> kVariantNames{{
    {Variant::Correct, "correct"},
    {Variant::Obvious, "obvious"},
    {Variant::Subtle, "subtle"},
}};

template <typename E, std::size_t N>
std::string_view lookup(const std::array<std::pair<E, std::string_view>, N>& table, E value)
{
    for (const auto& [e, name] : table) {
        if (e == value)
            return name;
    }
    return {};
}

template <typename E, std::size_t N>
std::optional<E> reverse_lookup(const std::array<std::pair<E, std::string_view>, N>& table,
                                std::string_view name)
{
    for (const auto& [e, n] : table) {
        if (n == name)
            return e;
    }
    return std::nullopt;
}

}  // namespace

std::string_view to_string(Language lang) { return lookup(kLanguageNames, lang); }
std::string_view to_string(Category cat) { return lookup(kCategoryNames, cat); }
std::string_view to_string(Variant var) { return lookup(kVariantNames, var); }
std::string_view extension_of(Language lang) { return lookup(kExtensions, lang); }

std::optional<Language> language_from_name(std::string_view name)
{
    return reverse_lookup(kLanguageNames, name);
}

std::optional<Language> language_from_extension(std::string_view ext)
{
    return reverse_lookup(kExtensions, ext);
}

std::optional<Category> category_from_name(std::string_view name)
{
    return reverse_lookup(kCategoryNames, name);
}

std::optional<Variant> variant_from_name(std::string_view name)
{
    return reverse_lookup(kVariantNames, name);
}

}  // namespace artgraph
