#include "qfray/tableau.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

namespace qfray {

Word parse_word(std::string_view text)
{
    Word word;
    std::size_t i = 0;
    auto is_sep = [](char c) { return c == ',' || std::isspace(static_cast<unsigned char>(c)); };
    while (i < text.size()) {
        if (is_sep(text[i])) {
            ++i;
            continue;
        }
        std::size_t j = i;
        while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j])))
            ++j;
        if (j == i)
            throw std::invalid_argument("malformed letter near '" + std::string(text.substr(i)) + "'");
        int value = std::stoi(std::string(text.substr(i, j - i)));
        if (value < 1)
            throw std::invalid_argument("letter values start at 1");
        bool primed = false;
        if (j < text.size() && text[j] == '\'') {
            primed = true;
            ++j;
        }
        if (j < text.size() && !is_sep(text[j]))
            throw std::invalid_argument("malformed letter near '" + std::string(text.substr(i)) + "'");
        word.push_back({value, primed});
        i = j;
    }
    return word;
}

std::string word_to_string(const Word& word)
{
    std::string out;
    for (const Letter& l : word) {
        if (!out.empty())
            out += ' ';
        out += l.str();
    }
    return out;
}

ShiftedTableau::ShiftedTableau(ShiftedSkewShape shape, std::vector<Letter> entries)
    : shape_(std::move(shape)), entries_(std::move(entries))
{
    if (entries_.size() != shape_.cells().size())
        throw std::invalid_argument("tableau entries do not cover the shape");
}

Letter ShiftedTableau::at(Cell c) const
{
    auto cells = shape_.cells();
    auto it = std::lower_bound(cells.begin(), cells.end(), c);
    if (it == cells.end() || *it != c)
        throw std::out_of_range("cell outside the tableau shape");
    return entries_[static_cast<std::size_t>(it - cells.begin())];
}

bool is_semistandard(const ShiftedTableau& t)
{
    const auto& shape = t.shape();
    for (const Cell& c : shape.cells()) {
        Letter x = t.at(c);
        Cell right{c.row, c.col + 1};
        if (shape.contains(right)) {
            Letter y = t.at(right);
            if (y < x || (y == x && x.primed))
                return false;
        }
        Cell down{c.row + 1, c.col};
        if (shape.contains(down)) {
            Letter y = t.at(down);
            if (y < x || (y == x && !x.primed))
                return false;
        }
    }
    return true;
}

Word reading_word(const ShiftedTableau& t)
{
    auto cells = t.shape().cells();
    auto entries = t.entries();
    Word word;
    word.reserve(cells.size());
    std::size_t end = cells.size();
    while (end > 0) {
        std::size_t begin = end;
        while (begin > 0 && cells[begin - 1].row == cells[end - 1].row)
            --begin;
        for (std::size_t i = begin; i < end; ++i)
            word.push_back(entries[i]);
        end = begin;
    }
    return word;
}

bool is_canonical(const ShiftedTableau& t)
{
    std::vector<char> seen;
    for (const Letter& l : reading_word(t)) {
        auto v = static_cast<std::size_t>(l.value);
        if (seen.size() <= v)
            seen.resize(v + 1, 0);
        if (!seen[v]) {
            if (l.primed)
                return false;
            seen[v] = 1;
        }
    }
    return true;
}

ContentVector content_of_word(const Word& word)
{
    ContentVector out;
    for (const Letter& l : word) {
        auto v = static_cast<std::size_t>(l.value);
        if (out.size() < v)
            out.resize(v, 0);
        ++out[v - 1];
    }
    return out;
}

ContentVector content(const ShiftedTableau& t)
{
    return content_of_word(Word(t.entries().begin(), t.entries().end()));
}

namespace {

std::string render_rows(const ShiftedSkewShape& shape, const std::vector<std::string>& tokens)
{
    std::string out;
    auto cells = shape.cells();
    for (int r = 1; r <= shape.row_count(); ++r) {
        std::string line;
        int col = 1;
        for (std::size_t i = 0; i < cells.size(); ++i) {
            if (cells[i].row != r)
                continue;
            line.append(static_cast<std::size_t>(3 * (cells[i].col - col)), ' ');
            std::string tok = tokens[i];
            tok.resize(3, ' ');
            line += tok;
            col = cells[i].col + 1;
        }
        while (!line.empty() && line.back() == ' ')
            line.pop_back();
        out += line;
        out += '\n';
    }
    return out;
}

} // namespace

std::string render(const ShiftedTableau& t)
{
    std::vector<std::string> tokens;
    for (const Letter& l : t.entries())
        tokens.push_back(l.str());
    return render_rows(t.shape(), tokens);
}

std::string render_labels(const ShiftedSkewShape& shape, std::span<const int> labels)
{
    std::vector<std::string> tokens;
    for (int v : labels)
        tokens.push_back(std::to_string(v));
    return render_rows(shape, tokens);
}

ReadingLayout::ReadingLayout(const ShiftedSkewShape& shape)
{
    auto shape_cells = shape.cells();
    std::vector<std::size_t> order(shape_cells.size());
    for (std::size_t i = 0; i < order.size(); ++i)
        order[i] = i;
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return shape_cells[a].row > shape_cells[b].row; });
    for (std::size_t i : order) {
        cells.push_back(shape_cells[i]);
        shape_index.push_back(static_cast<int>(i));
        top_row.push_back(shape_cells[i].row == 1);
    }
    auto find = [&](Cell c) {
        for (std::size_t i = 0; i < cells.size(); ++i)
            if (cells[i] == c)
                return static_cast<int>(i);
        return -1;
    };
    for (const Cell& c : cells) {
        left.push_back(find({c.row, c.col - 1}));
        below.push_back(find({c.row + 1, c.col}));
    }
}

std::pair<int, int> ReadingLayout::allowed_codes(std::size_t p, std::span<const int> codes, int max_code) const
{
    int lo = 1, hi = max_code;
    if (int l = left[p]; l >= 0) {
        int c = codes[static_cast<std::size_t>(l)];
        lo = c % 2 == 1 ? c + 1 : c; // primed letters may not repeat in a row
    }
    if (int b = below[p]; b >= 0) {
        int c = codes[static_cast<std::size_t>(b)];
        hi = std::min(hi, c % 2 == 1 ? c : c - 1); // unprimed letters may not repeat in a column
    }
    return {lo, hi};
}

namespace {

struct FillingSearch {
    const ReadingLayout& layout;
    ShiftedTableau tableau;
    std::vector<int> codes;
    std::vector<int> remaining; // by value, index 0 unused
    std::vector<char> seen;
    bool canonical;
    int max_code;
    const TableauVisitor& visit;
    bool stopped = false;

    void run(std::size_t p)
    {
        if (stopped)
            return;
        if (p == layout.size()) {
            auto& entries = tableau.mutable_entries();
            for (std::size_t i = 0; i < p; ++i)
                entries[static_cast<std::size_t>(layout.shape_index[i])] = Letter::from_code(codes[i]);
            if (!visit(tableau))
                stopped = true;
            return;
        }
        auto [lo, hi] = layout.allowed_codes(p, codes, max_code);
        for (int code = lo; code <= hi && !stopped; ++code) {
            auto v = static_cast<std::size_t>((code + 1) / 2);
            bool primed = code % 2 == 1;
            if (!remaining.empty() && remaining[v] == 0)
                continue;
            bool first = !seen[v];
            if (canonical && first && primed)
                continue;
            codes[p] = code;
            if (!remaining.empty())
                --remaining[v];
            seen[v] = 1;
            run(p + 1);
            if (first)
                seen[v] = 0;
            if (!remaining.empty())
                ++remaining[v];
        }
    }
};

} // namespace

void enumerate_fillings(const ShiftedSkewShape& shape, const ContentVector& content, bool require_canonical,
                        const TableauVisitor& visit)
{
    int total = 0;
    for (int m : content) {
        if (m < 0)
            throw std::invalid_argument("content entries must be nonnegative");
        total += m;
    }
    if (total != shape.size())
        throw std::invalid_argument("content does not sum to the shape size");
    ReadingLayout layout(shape);
    int values = static_cast<int>(content.size());
    FillingSearch search{layout,
                         ShiftedTableau(shape, std::vector<Letter>(layout.size())),
                         std::vector<int>(layout.size(), 0),
                         std::vector<int>(static_cast<std::size_t>(values + 1), 0),
                         std::vector<char>(static_cast<std::size_t>(values + 2), 0),
                         require_canonical,
                         2 * values,
                         visit};
    for (int v = 1; v <= values; ++v)
        search.remaining[static_cast<std::size_t>(v)] = content[static_cast<std::size_t>(v - 1)];
    search.run(0);
}

void enumerate_shssyt(const ShiftedSkewShape& shape, int max_value, const TableauVisitor& visit)
{
    if (max_value < 1)
        throw std::invalid_argument("max_value must be at least 1");
    ReadingLayout layout(shape);
    FillingSearch search{layout,
                         ShiftedTableau(shape, std::vector<Letter>(layout.size())),
                         std::vector<int>(layout.size(), 0),
                         {},
                         std::vector<char>(static_cast<std::size_t>(max_value + 2), 0),
                         false,
                         2 * max_value,
                         visit};
    search.run(0);
}

} // namespace qfray
