#include "simvote/records_io.hpp"

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

}  // namespace

std::vector<FuzzyRecord> parse_records(std::istream& in) {
    std::vector<FuzzyRecord> records;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        std::string_view content = trim(line);
        if (content.empty() || content.front() == '#') continue;

        FuzzyRecord r;
        r.line = line_no;
        const auto colon = content.find(':');
        if (colon != std::string_view::npos && colon < content.find(',')) {
            const auto id = trim(content.substr(0, colon));
            if (id.empty()) throw Error(ErrorKind::MalformedInput, "line " + std::to_string(line_no) + ": empty id");
            r.id = std::string(id);
            content = trim(content.substr(colon + 1));
        } else {
            r.id = std::to_string(line_no);
        }
        if (!content.empty()) {
            std::size_t start = 0;
            while (true) {
                const auto comma = content.find(',', start);
                const auto cell = trim(content.substr(start, comma == std::string_view::npos ? comma : comma - start));
                if (cell.empty())
                    throw Error(ErrorKind::MalformedInput, "line " + std::to_string(line_no) + ": empty label");
                r.values.emplace_back(cell);
                if (comma == std::string_view::npos) break;
                start = comma + 1;
            }
        }
        records.push_back(std::move(r));
    }
    return records;
}

std::vector<FuzzyRecord> parse_records(const std::string& text) {
    std::istringstream in(text);
    return parse_records(in);
}

void write_records(std::ostream& out, std::span<const FuzzyRecord> records) {
    for (const auto& r : records) {
        if (r.id) out << *r.id << ": ";
        for (std::size_t i = 0; i < r.values.size(); ++i) out << (i ? ", " : "") << r.values[i];
        out << '\n';
    }
}

void write_distribution_csv(std::ostream& out, const Domain& domain, std::span<const BatchItem> items) {
    out << "record_id,label,weight\n";
    for (const auto& item : items) {
        if (const auto* skipped = std::get_if<Skipped>(&item.outcome)) {
            out << item.id << ",SKIPPED," << skipped->label << '\n';
            continue;
        }
        for (const auto& v : std::get<VoteDistribution>(item.outcome).votes)
            out << item.id << ',' << domain.label(v.label) << ',' << format_decimal(v.weight) << '\n';
    }
}

std::string format_trace(const Domain& domain, std::span<const TraceEvent> events) {
    std::string out = "OUTPUT\tCOMMENTS\n";
    for (const auto& e : events)
        out += domain.format_set(e.subset) + " " + format_alpha(e.alpha) + "\t" +
               (e.updated ? "STORED, UPDATED" : "STORED") + "\n";
    return out;
}

}  // namespace simvote
