#include "mstd/integer_set.hpp"
#include "mstd/error.hpp"

#include <algorithm>
#include <cassert>
#include <cctype>
#include <charconv>

namespace mstd {

auto IntegerSet::from_sorted_unique(std::vector<Element> elements) -> IntegerSet
{
    assert(std::adjacent_find(elements.begin(), elements.end(),
                [] (Element a, Element b) { return a >= b; }) == elements.end());
    return IntegerSet{ std::move(elements) };
}

auto IntegerSet::span() const noexcept -> std::optional<std::uint64_t>
{
    if (_elements.empty())
        return std::nullopt;
    return static_cast<std::uint64_t>(max()) - static_cast<std::uint64_t>(min());
}

auto IntegerSet::contains(Element value) const -> bool
{
    return std::binary_search(_elements.begin(), _elements.end(), value);
}

auto make_set(std::span<const Element> raw) -> MadeSet
{
    std::vector<Element> values(raw.begin(), raw.end());
    std::sort(values.begin(), values.end());
    auto last = std::unique(values.begin(), values.end());
    auto dropped = static_cast<std::size_t>(values.end() - last);
    values.erase(last, values.end());
    return { IntegerSet::from_sorted_unique(std::move(values)), dropped };
}

namespace {
    auto is_space(char c) -> bool
    {
        return std::isspace(static_cast<unsigned char>(c)) != 0;
    }

    auto trim(std::string_view s) -> std::string_view
    {
        while (! s.empty() && is_space(s.front()))
            s.remove_prefix(1);
        while (! s.empty() && is_space(s.back()))
            s.remove_suffix(1);
        return s;
    }
}

auto parse_set_text(std::string_view text) -> std::vector<Element>
{
    auto body = trim(text);
    if (! body.empty() && body.front() == '{') {
        if (body.back() != '}')
            throw ParseError{ "set text: opening '{' without closing '}'" };
        body = trim(body.substr(1, body.size() - 2));
    }
    else if (! body.empty() && body.back() == '}')
        throw ParseError{ "set text: closing '}' without opening '{'" };

    std::vector<Element> result;
    if (body.empty())
        return result;

    std::size_t field = 0;
    while (true) {
        auto comma = body.find(',');
        auto token = trim(body.substr(0, comma));
        ++field;
        if (token.empty())
            throw ParseError{ "set text: empty entry at position " + std::to_string(field) };

        Element value = 0;
        auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
        if (ec == std::errc::result_out_of_range)
            throw ParseError{ "set text: value '" + std::string{ token } + "' is outside the signed 64-bit range" };
        if (ec != std::errc{} || ptr != token.data() + token.size())
            throw ParseError{ "set text: '" + std::string{ token } + "' is not a decimal integer" };
        result.push_back(value);

        if (comma == std::string_view::npos)
            break;
        body.remove_prefix(comma + 1);
    }
    return result;
}

auto format_set(std::span<const Element> elements) -> std::string
{
    std::string out = "{";
    for (std::size_t i = 0 ; i < elements.size() ; ++i) {
        if (i != 0)
            out += ", ";
        out += std::to_string(elements[i]);
    }
    out += "}";
    return out;
}

auto format_set(const IntegerSet & set) -> std::string
{
    return format_set(set.elements());
}

} // namespace mstd
