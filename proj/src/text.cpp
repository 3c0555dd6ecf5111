#include "demazure/text.hpp"

#include <cctype>
#include <charconv>
#include <stdexcept>

namespace demazure {

namespace {

bool is_separator(char c) { return c == ',' || std::isspace(static_cast<unsigned char>(c)); }

std::string_view strip_brackets(std::string_view text) {
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
    if (text.size() >= 2 && text.front() == '[' && text.back() == ']') {
        text = text.substr(1, text.size() - 2);
    }
    return text;
}

std::string without_brackets(std::string_view text) {
    std::string out;
    for (char c : text) {
        if (c != '[' && c != ']') out.push_back(c);
    }
    return out;
}

void split_whitespace(std::string_view text, std::vector<std::string_view>& out) {
    std::size_t i = 0;
    while (i < text.size()) {
        while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
        std::size_t j = i;
        while (j < text.size() && !std::isspace(static_cast<unsigned char>(text[j]))) ++j;
        if (j > i) out.push_back(text.substr(i, j - i));
        i = j;
    }
}

// Commas separate exactly one value each; whitespace runs are free.
std::vector<std::string_view> tokens(std::string_view text) {
    std::vector<std::string_view> out;
    if (text.find(',') == std::string_view::npos) {
        split_whitespace(text, out);
        return out;
    }
    std::size_t start = 0;
    while (true) {
        const auto comma = text.find(',', start);
        const auto field = text.substr(start, comma == std::string_view::npos ? text.npos : comma - start);
        const auto before = out.size();
        split_whitespace(field, out);
        if (out.size() == before) throw std::invalid_argument("empty field in list '" + std::string(text) + "'");
        if (comma == std::string_view::npos) break;
        start = comma + 1;
    }
    return out;
}

int to_int(std::string_view token) {
    int value = 0;
    const char* first = token.data();
    const char* last = token.data() + token.size();
    if (first != last && *first == '+') ++first;
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc() || ptr != last || first == last) {
        throw std::invalid_argument("not an integer: '" + std::string(token) + "'");
    }
    return value;
}

bool has_separator(std::string_view text) {
    for (char c : text) {
        if (is_separator(c)) return true;
    }
    return false;
}

std::string join_word(std::span<const int> word, bool compact, int left_mark, int right_mark) {
    std::string out;
    for (std::size_t k = 0; k < word.size(); ++k) {
        if (!compact && k > 0) out.push_back(' ');
        const bool mark = word[k] == left_mark || word[k] == right_mark;
        if (mark) out.push_back('[');
        out += std::to_string(word[k]);
        if (mark) out.push_back(']');
    }
    return out;
}

std::string join_signed(std::span<const int> word, int left_mark, int right_mark) {
    std::string out = "[";
    for (std::size_t k = 0; k < word.size(); ++k) {
        if (k > 0) out.push_back(',');
        const bool mark = word[k] == left_mark || word[k] == right_mark;
        if (mark) out.push_back('[');
        out += std::to_string(word[k]);
        if (mark) out.push_back(']');
    }
    out.push_back(']');
    return out;
}

} // namespace

std::vector<int> parse_int_list(std::string_view text) {
    std::vector<int> out;
    for (auto token : tokens(strip_brackets(text))) out.push_back(to_int(token));
    return out;
}

Permutation parse_permutation(std::string_view text) {
    const auto body = strip_brackets(text);
    if (body.empty()) {
        throw std::invalid_argument("empty permutation");
    }
    if (has_separator(body)) {
        return Permutation(parse_int_list(body));
    }
    if (body.size() > 9) {
        throw std::invalid_argument("compact digit form only allowed for n <= 9; use separators");
    }
    std::vector<int> entries;
    for (char c : body) {
        if (!std::isdigit(static_cast<unsigned char>(c))) {
            throw std::invalid_argument("unexpected character '" + std::string(1, c) +
                                        "' in permutation");
        }
        entries.push_back(c - '0');
    }
    return Permutation(std::move(entries));
}

SignedPermutation parse_signed(std::string_view text) {
    auto values = parse_int_list(text);
    if (values.empty()) {
        throw std::invalid_argument("empty signed permutation");
    }
    return SignedPermutation(std::move(values));
}

std::string format_permutation(const Permutation& w) {
    return join_word(w.entries(), w.rank() <= 9, 0, 0);
}

std::string format_signed(const SignedPermutation& w) { return join_signed(w.entries(), 0, 0); }

std::string format_list(std::span<const int> values) { return join_signed(values, 0, 0); }

std::vector<std::string> render_trace(const HopTrace& trace) {
    const auto steps = trace.steps();
    const auto swaps = trace.swaps();
    const bool compact = trace.start().rank() <= 9;
    std::vector<std::string> lines;
    for (std::size_t k = 0; k < steps.size(); ++k) {
        const bool pending = k < swaps.size();
        lines.push_back(join_word(steps[k].entries(), compact, pending ? trace.tracked() : 0,
                                  pending ? swaps[k].target : 0));
    }
    return lines;
}

std::vector<std::string> render_trace_b(const HopTrace& trace) {
    const auto steps = trace.steps();
    const auto swaps = trace.swaps();
    const int n = trace.start().rank() / 2;
    std::vector<std::string> lines;
    for (std::size_t k = 0; k < steps.size(); ++k) {
        std::vector<int> word;
        for (int x : steps[k].entries()) word.push_back(signed_value(x, n));
        const bool pending = k < swaps.size();
        lines.push_back(join_signed(word, pending ? signed_value(trace.tracked(), n) : 0,
                                    pending ? signed_value(swaps[k].target, n) : 0));
    }
    return lines;
}

Permutation parse_trace_line(std::string_view line) {
    return parse_permutation(without_brackets(line));
}

Permutation parse_trace_line_b(std::string_view line) {
    const auto values = parse_int_list(without_brackets(line));
    if (values.empty() || values.size() % 2 != 0) {
        throw std::invalid_argument("unfolded word must have even length");
    }
    const int n = static_cast<int>(values.size()) / 2;
    std::vector<int> embedded;
    for (int v : values) embedded.push_back(embed_value(v, n));
    return Permutation(std::move(embedded));
}

} // namespace demazure
