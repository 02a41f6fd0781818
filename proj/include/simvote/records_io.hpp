#pragma once

#include <istream>
#include <ostream>
#include <span>
#include <string>
#include <vector>

#include "simvote/defuzzifier.hpp"
#include "simvote/domain.hpp"

namespace simvote {

/// Records file: one record per line, "id: a, b, c" or just "a, b, c".
/// '#' comment lines and blank lines are skipped. A missing id becomes the
/// 1-based line number. Throws MalformedInput on empty label cells.
std::vector<FuzzyRecord> parse_records(std::istream& in);
std::vector<FuzzyRecord> parse_records(const std::string& text);

void write_records(std::ostream& out, std::span<const FuzzyRecord> records);

/// CSV "record_id,label,weight"; skipped records become "id,SKIPPED,label".
void write_distribution_csv(std::ostream& out, const Domain& domain, std::span<const BatchItem> items);

/// Traversal trace in the OUTPUT/COMMENTS layout: one "{subset} alpha" line
/// per visited node, annotated STORED or "STORED, UPDATED".
std::string format_trace(const Domain& domain, std::span<const TraceEvent> events);

}  // namespace simvote
