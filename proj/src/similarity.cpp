#include "simvote/similarity.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <numeric>
#include <sstream>

#include "simvote/error.hpp"
#include "simvote/format.hpp"

namespace simvote {

namespace {

std::string_view trim(std::string_view s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string_view::npos) return {};
    const auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

std::vector<std::string_view> split_cells(std::string_view line) {
    std::vector<std::string_view> cells;
    std::size_t start = 0;
    while (true) {
        const auto comma = line.find(',', start);
        cells.push_back(trim(line.substr(start, comma == std::string_view::npos ? comma : comma - start)));
        if (comma == std::string_view::npos) break;
        start = comma + 1;
    }
    return cells;
}

std::string cell_name(const std::string& row, const std::string& col) {
    return "s(" + row + "," + col + ")";
}

}  // namespace

SimilarityMatrix::SimilarityMatrix(Domain domain, std::vector<double> values)
    : domain_(std::move(domain)), values_(std::move(values)) {
    const std::size_t n = domain_.size();
    if (n == 0) throw Error(ErrorKind::MalformedInput, "similarity matrix needs at least one label");
    if (values_.size() != n * n)
        throw Error(ErrorKind::MalformedInput, "expected " + std::to_string(n * n) + " values, got " +
                                                   std::to_string(values_.size()));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            const double v = (*this)(i, j);
            if (!(v >= 0.0 && v <= 1.0))
                throw Error(ErrorKind::ValueOutOfRange, cell_name(domain_.label(i), domain_.label(j)) + "=" +
                                                            format_decimal(v) + " is outside [0,1]");
        }
    }
    for (std::size_t i = 0; i < n; ++i) {
        if (std::abs((*this)(i, i) - 1.0) > kAlphaTolerance)
            throw Error(ErrorKind::NotReflexive, cell_name(domain_.label(i), domain_.label(i)) + "=" +
                                                     format_decimal((*this)(i, i)) + ", expected 1.0");
    }
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < i; ++j) {
            if (std::abs((*this)(i, j) - (*this)(j, i)) > kAlphaTolerance)
                throw Error(ErrorKind::NotSymmetric,
                            "(" + domain_.label(i) + ", " + domain_.label(j) + "): " +
                                cell_name(domain_.label(i), domain_.label(j)) + "=" + format_decimal((*this)(i, j)) +
                                " but " + cell_name(domain_.label(j), domain_.label(i)) + "=" +
                                format_decimal((*this)(j, i)));
        }
    }
}

SimilarityMatrix parse_similarity_matrix(std::istream& in) {
    std::vector<std::string> labels;
    std::vector<double> values;
    bool have_header = false;
    std::size_t row = 0;
    std::size_t line_no = 0;
    std::string line;
    while (std::getline(in, line)) {
        ++line_no;
        const std::string_view content = trim(line);
        if (content.empty() || content.front() == '#') continue;
        const auto cells = split_cells(content);
        const std::string where = "line " + std::to_string(line_no) + ": ";
        if (!have_header) {
            if (!cells.front().empty())
                throw Error(ErrorKind::MalformedInput, where + "header must start with an empty cell");
            for (std::size_t c = 1; c < cells.size(); ++c) labels.emplace_back(cells[c]);
            if (labels.empty()) throw Error(ErrorKind::MalformedInput, where + "header lists no labels");
            for (const auto& l : labels) {
                try {
                    validate_label(l);
                } catch (const Error& e) {
                    throw Error(e.kind(), where + e.what());
                }
            }
            // Surface duplicates before any row parsing.
            Domain check(labels);
            values.reserve(labels.size() * labels.size());
            have_header = true;
            continue;
        }
        const std::size_t n = labels.size();
        if (row >= n) throw Error(ErrorKind::MalformedInput, where + "more rows than labels");
        if (cells.size() != n + 1)
            throw Error(ErrorKind::MalformedInput, where + "expected " + std::to_string(n + 1) + " cells, got " +
                                                       std::to_string(cells.size()));
        if (cells.front() != labels[row])
            throw Error(ErrorKind::MalformedInput, where + "row label '" + std::string(cells.front()) +
                                                       "' does not match header label '" + labels[row] + "'");
        for (std::size_t c = 1; c <= n; ++c) {
            const std::string_view cell = cells[c];
            double v = 0.0;
            const auto [end, ec] = std::from_chars(cell.data(), cell.data() + cell.size(), v);
            if (cell.empty() || ec != std::errc{} || end != cell.data() + cell.size())
                throw Error(ErrorKind::MalformedInput, where + cell_name(labels[row], labels[c - 1]) + ": '" +
                                                           std::string(cell) + "' is not a decimal");
            if (!(v >= 0.0 && v <= 1.0))
                throw Error(ErrorKind::ValueOutOfRange, where + cell_name(labels[row], labels[c - 1]) + "=" +
                                                            std::string(cell) + " is outside [0,1]");
            values.push_back(v);
        }
        ++row;
    }
    if (!have_header) throw Error(ErrorKind::MalformedInput, "no header row");
    if (row != labels.size())
        throw Error(ErrorKind::MalformedInput,
                    "expected " + std::to_string(labels.size()) + " rows, got " + std::to_string(row));
    return SimilarityMatrix(Domain(std::move(labels)), std::move(values));
}

SimilarityMatrix parse_similarity_matrix(const std::string& text) {
    std::istringstream in(text);
    return parse_similarity_matrix(in);
}

std::string serialize_similarity_matrix(const SimilarityMatrix& m) {
    std::string out;
    for (const auto& l : m.domain().labels()) out += "," + l;
    out += "\n";
    for (std::size_t i = 0; i < m.size(); ++i) {
        out += m.domain().label(i);
        for (std::size_t j = 0; j < m.size(); ++j) out += "," + format_alpha(m(i, j));
        out += "\n";
    }
    return out;
}

TransitivityReport check_max_min_transitivity(const SimilarityMatrix& m) {
    TransitivityReport report;
    const std::size_t n = m.size();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k)
                if (m(i, k) < std::min(m(i, j), m(j, k)) - kAlphaTolerance)
                    report.violations.push_back({i, j, k, m(i, k), m(i, j), m(j, k)});
    return report;
}

std::string describe(const SimilarityMatrix& m, const TransitivityViolation& v) {
    const auto& d = m.domain();
    return "(" + d.label(v.i) + ", " + d.label(v.j) + ", " + d.label(v.k) + "): " +
           cell_name(d.label(v.i), d.label(v.k)) + "=" + format_alpha(v.ik) + " < min(" +
           cell_name(d.label(v.i), d.label(v.j)) + "=" + format_alpha(v.ij) + ", " +
           cell_name(d.label(v.j), d.label(v.k)) + "=" + format_alpha(v.jk) + ")";
}

std::vector<double> distinct_levels(const SimilarityMatrix& m) {
    std::vector<double> sorted = m.values();
    std::sort(sorted.begin(), sorted.end());
    std::vector<double> levels;
    for (double v : sorted)
        if (levels.empty() || v - levels.back() > kAlphaTolerance) levels.push_back(v);
    // Reflexivity guarantees a value within tolerance of 1.0 is last; pin it.
    levels.back() = 1.0;
    return levels;
}

Partition alpha_cut(const SimilarityMatrix& m, double alpha) {
    const std::size_t n = m.size();
    const double threshold = alpha - kAlphaTolerance;
    std::vector<std::size_t> component(n, n);
    Partition classes;
    std::vector<std::size_t> stack;
    for (std::size_t seed = 0; seed < n; ++seed) {
        if (component[seed] != n) continue;
        const std::size_t id = classes.size();
        LabelSet members(n);
        component[seed] = id;
        stack.push_back(seed);
        while (!stack.empty()) {
            const std::size_t x = stack.back();
            stack.pop_back();
            members.insert(x);
            for (std::size_t y = 0; y < n; ++y) {
                if (component[y] == n && m(x, y) >= threshold) {
                    component[y] = id;
                    stack.push_back(y);
                }
            }
        }
        const auto list = members.members();
        for (std::size_t a = 0; a < list.size(); ++a) {
            for (std::size_t b = a + 1; b < list.size(); ++b) {
                if (m(list[a], list[b]) < threshold)
                    throw Error(ErrorKind::NotTransitive,
                                "alpha-cut at " + format_alpha(alpha) + " links " + m.domain().label(list[a]) +
                                    " and " + m.domain().label(list[b]) + " through other labels but s(" +
                                    m.domain().label(list[a]) + "," + m.domain().label(list[b]) +
                                    ")=" + format_alpha(m(list[a], list[b])));
            }
        }
        classes.push_back(std::move(members));
    }
    return classes;
}

}  // namespace simvote
