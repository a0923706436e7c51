#pragma once

#include <filesystem>
#include <iosfwd>
#include <string_view>

#include "mism/harness.hpp"

namespace mism {

enum class ReportFormat { Csv, Json };

/// Throws Error(InvalidArgument) for anything but "csv" or "json".
ReportFormat parse_report_format(std::string_view name);

/// CSV: `id,tp,fp,tn,fn,weak_label,<metrics...>` followed by `__mean__` and
/// `__median__` rows.  Undefined scores are empty fields.
/// JSON: {config, records, aggregates, errors}; undefined scores are null.
void write_report(const EvalReport& report, ReportFormat format, std::ostream& out);
void emit_report(const EvalReport& report, ReportFormat format,
                 const std::filesystem::path& path);

EvalReport read_report_json(std::istream& in);

}  // namespace mism
