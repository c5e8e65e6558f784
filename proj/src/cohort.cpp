#include "icurisk/cohort.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <set>
#include <sstream>

#include "icurisk/csv.hpp"
#include "icurisk/errors.hpp"
#include "icurisk/stats.hpp"
#include "icurisk/table.hpp"

namespace icurisk {

std::string to_string(FeatureKind kind) {
    switch (kind) {
        case FeatureKind::numeric: return "numeric";
        case FeatureKind::binary: return "binary";
        case FeatureKind::categorical: return "categorical";
    }
    return "numeric";
}

std::string to_string(DomainTag tag) {
    switch (tag) {
        case DomainTag::chartevents: return "chartevents";
        case DomainTag::labevents: return "labevents";
        case DomainTag::procedureevents: return "procedureevents";
        case DomainTag::comorbidities: return "comorbidities";
        case DomainTag::admission_demographics: return "admission_demographics";
    }
    return "chartevents";
}

FeatureKind feature_kind_from_string(const std::string& s) {
    if (s == "numeric") return FeatureKind::numeric;
    if (s == "binary") return FeatureKind::binary;
    if (s == "categorical") return FeatureKind::categorical;
    throw ConfigError("unknown feature kind: " + s);
}

DomainTag domain_tag_from_string(const std::string& s) {
    if (s == "chartevents") return DomainTag::chartevents;
    if (s == "labevents") return DomainTag::labevents;
    if (s == "procedureevents") return DomainTag::procedureevents;
    if (s == "comorbidities") return DomainTag::comorbidities;
    if (s == "admission_demographics") return DomainTag::admission_demographics;
    throw ConfigError("unknown domain tag: " + s);
}

nlohmann::json schema_to_json(const std::vector<FeatureSpec>& schema) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& f : schema) {
        arr.push_back({{"name", f.name},
                       {"kind", to_string(f.kind)},
                       {"domain_tag", to_string(f.domain_tag)},
                       {"unit", f.unit}});
    }
    return arr;
}

std::vector<FeatureSpec> schema_from_json(const nlohmann::json& j) {
    std::vector<FeatureSpec> schema;
    std::set<std::string> seen;
    for (const auto& item : j) {
        FeatureSpec f;
        f.name = item.at("name").get<std::string>();
        f.kind = feature_kind_from_string(item.at("kind").get<std::string>());
        f.domain_tag = domain_tag_from_string(item.at("domain_tag").get<std::string>());
        f.unit = item.value("unit", "");
        if (!seen.insert(f.name).second)
            throw ConfigError("duplicate feature name in schema: " + f.name);
        schema.push_back(std::move(f));
    }
    return schema;
}

std::size_t CohortFrame::feature_index(const std::string& name) const {
    auto idx = find_feature(name);
    if (!idx) throw DataError("unknown feature: " + name);
    return *idx;
}

std::optional<std::size_t> CohortFrame::find_feature(const std::string& name) const {
    for (std::size_t j = 0; j < schema.size(); ++j) {
        if (schema[j].name == name) return j;
    }
    return std::nullopt;
}

double CohortFrame::missing_fraction(std::size_t feature) const {
    if (n_rows == 0) return 0.0;
    std::size_t c = 0;
    for (auto m : missing[feature]) c += m;
    return static_cast<double>(c) / static_cast<double>(n_rows);
}

bool CohortFrame::is_constant(std::size_t feature) const {
    bool seen = false;
    double first = 0.0;
    for (std::size_t i = 0; i < n_rows; ++i) {
        if (missing[feature][i]) continue;
        if (!seen) {
            first = columns[feature][i];
            seen = true;
        } else if (columns[feature][i] != first) {
            return false;
        }
    }
    return seen;
}

std::vector<double> CohortFrame::non_missing_values(std::size_t feature) const {
    std::vector<double> vals;
    vals.reserve(n_rows);
    for (std::size_t i = 0; i < n_rows; ++i) {
        if (!missing[feature][i]) vals.push_back(columns[feature][i]);
    }
    return vals;
}

CohortFrame CohortFrame::select_rows(const std::vector<std::size_t>& rows) const {
    CohortFrame out;
    out.schema = schema;
    out.levels = levels;
    out.n_rows = rows.size();
    out.columns.assign(schema.size(), {});
    out.missing.assign(schema.size(), {});
    for (std::size_t j = 0; j < schema.size(); ++j) {
        out.columns[j].reserve(rows.size());
        out.missing[j].reserve(rows.size());
        for (std::size_t i : rows) {
            out.columns[j].push_back(columns[j][i]);
            out.missing[j].push_back(missing[j][i]);
        }
    }
    out.outcome.reserve(rows.size());
    out.row_ids.reserve(rows.size());
    for (std::size_t i : rows) {
        out.outcome.push_back(outcome[i]);
        out.row_ids.push_back(row_ids[i]);
        if (!partition.empty()) out.partition.push_back(partition[i]);
    }
    return out;
}

CohortFrame CohortFrame::drop_features(const std::vector<std::string>& names) const {
    std::set<std::string> drop(names.begin(), names.end());
    CohortFrame out;
    out.n_rows = n_rows;
    out.outcome = outcome;
    out.row_ids = row_ids;
    out.partition = partition;
    for (std::size_t j = 0; j < schema.size(); ++j) {
        if (drop.count(schema[j].name)) continue;
        out.schema.push_back(schema[j]);
        out.columns.push_back(columns[j]);
        out.levels.push_back(levels[j]);
        out.missing.push_back(missing[j]);
    }
    return out;
}

void CohortFrame::check_invariants() const {
    if (columns.size() != schema.size() || missing.size() != schema.size() ||
        levels.size() != schema.size())
        throw DataError("frame arrays out of sync with schema");
    for (std::size_t j = 0; j < schema.size(); ++j) {
        if (columns[j].size() != n_rows || missing[j].size() != n_rows)
            throw DataError("column length mismatch for feature " + schema[j].name);
        if (schema[j].kind == FeatureKind::binary) {
            for (std::size_t i = 0; i < n_rows; ++i) {
                if (!missing[j][i] && columns[j][i] != 0.0 && columns[j][i] != 1.0)
                    throw DataError("binary feature " + schema[j].name +
                                    " holds a non {0,1} value at row " + row_ids[i]);
            }
        }
    }
    if (outcome.size() != n_rows || row_ids.size() != n_rows)
        throw DataError("outcome/row_id length mismatch");
    for (int y : outcome) {
        if (y != 0 && y != 1) throw DataError("outcome outside {0,1}");
    }
    if (!partition.empty() && partition.size() != n_rows)
        throw DataError("partition length mismatch");
}

namespace {

bool parse_double_cell(const std::string& cell, double& out) {
    const char* begin = cell.data();
    const char* end = begin + cell.size();
    auto res = std::from_chars(begin, end, out);
    return res.ec == std::errc() && res.ptr == end;
}

} // namespace

LoadResult load_csv(const std::string& path, const std::vector<FeatureSpec>& schema,
                    const std::string& outcome_column, const LoadOptions& opts) {
    {
        std::set<std::string> seen;
        for (const auto& f : schema) {
            if (!seen.insert(f.name).second)
                throw ConfigError("duplicate feature name in schema: " + f.name);
        }
    }

    const csv::Table table = csv::read_file(path);
    std::map<std::string, std::size_t> col_of;
    for (std::size_t c = 0; c < table.header.size(); ++c) col_of[table.header[c]] = c;

    LoadResult result;
    CohortFrame& frame = result.frame;
    frame.schema = schema;
    frame.n_rows = table.rows.size();
    frame.columns.assign(schema.size(), std::vector<double>(frame.n_rows, 0.0));
    frame.levels.assign(schema.size(), {});
    frame.missing.assign(schema.size(), std::vector<std::uint8_t>(frame.n_rows, 0));
    frame.outcome.assign(frame.n_rows, 0);

    std::vector<std::size_t> feature_col(schema.size());
    for (std::size_t j = 0; j < schema.size(); ++j) {
        auto it = col_of.find(schema[j].name);
        if (it == col_of.end())
            throw DataError("schema column missing from CSV header: " + schema[j].name);
        feature_col[j] = it->second;
    }
    auto outcome_it = col_of.find(outcome_column);
    if (outcome_it == col_of.end())
        throw DataError("outcome column missing from CSV header: " + outcome_column);
    const std::size_t outcome_col = outcome_it->second;

    std::optional<std::size_t> row_id_col;
    if (auto it = col_of.find(opts.row_id_column); it != col_of.end()) row_id_col = it->second;

    {
        std::set<std::string> used;
        for (const auto& f : schema) used.insert(f.name);
        used.insert(outcome_column);
        used.insert(opts.row_id_column);
        for (const auto& name : table.header) {
            if (!used.count(name))
                result.warnings.push_back("ignored extra column: " + name);
        }
    }

    auto is_missing_cell = [&](const std::string& cell) {
        return std::find(opts.missing_sentinels.begin(), opts.missing_sentinels.end(),
                         cell) != opts.missing_sentinels.end();
    };

    std::vector<std::map<std::string, std::size_t>> level_of(schema.size());
    for (std::size_t i = 0; i < frame.n_rows; ++i) {
        const auto& row = table.rows[i];
        if (row.size() != table.header.size())
            throw DataError("row " + std::to_string(i + 1) + " has " +
                            std::to_string(row.size()) + " fields, header has " +
                            std::to_string(table.header.size()));
        frame.row_ids.push_back(row_id_col ? row[*row_id_col] : std::to_string(i + 1));

        const std::string& ycell = row[outcome_col];
        if (is_missing_cell(ycell))
            throw DataError("missing outcome at row " + std::to_string(i + 1));
        if (ycell == "0" || ycell == "1") {
            frame.outcome[i] = ycell == "1" ? 1 : 0;
        } else {
            double y;
            if (!parse_double_cell(ycell, y) || (y != 0.0 && y != 1.0))
                throw DataError("outcome not in {0,1} at row " + std::to_string(i + 1) +
                                ": \"" + ycell + "\"");
            frame.outcome[i] = static_cast<int>(y);
        }

        for (std::size_t j = 0; j < schema.size(); ++j) {
            const std::string& cell = row[feature_col[j]];
            if (is_missing_cell(cell)) {
                frame.missing[j][i] = 1;
                continue;
            }
            if (schema[j].kind == FeatureKind::categorical) {
                auto [it2, inserted] =
                    level_of[j].try_emplace(cell, frame.levels[j].size());
                if (inserted) frame.levels[j].push_back(cell);
                frame.columns[j][i] = static_cast<double>(it2->second);
            } else {
                double v;
                if (!parse_double_cell(cell, v))
                    throw DataError("cannot parse numeric cell at (row " +
                                    std::to_string(i + 1) + ", \"" + schema[j].name +
                                    "\"): \"" + cell + "\"");
                if (schema[j].kind == FeatureKind::binary && v != 0.0 && v != 1.0)
                    throw DataError("binary feature \"" + schema[j].name +
                                    "\" not in {0,1} at row " + std::to_string(i + 1));
                frame.columns[j][i] = v;
            }
        }
    }
    frame.check_invariants();
    return result;
}

void write_csv(const std::string& path, const CohortFrame& frame,
               const std::string& outcome_column) {
    csv::Table table;
    table.header.push_back("row_id");
    for (const auto& f : frame.schema) table.header.push_back(f.name);
    table.header.push_back(outcome_column);
    table.rows.reserve(frame.n_rows);
    for (std::size_t i = 0; i < frame.n_rows; ++i) {
        std::vector<std::string> row;
        row.reserve(frame.schema.size() + 2);
        row.push_back(frame.row_ids[i]);
        for (std::size_t j = 0; j < frame.schema.size(); ++j) {
            if (frame.missing[j][i]) {
                row.push_back("");
            } else if (frame.schema[j].kind == FeatureKind::categorical) {
                row.push_back(frame.levels[j][static_cast<std::size_t>(frame.columns[j][i])]);
            } else {
                row.push_back(csv::format_double(frame.columns[j][i]));
            }
        }
        row.push_back(std::to_string(frame.outcome[i]));
        table.rows.push_back(std::move(row));
    }
    csv::write_file(path, table);
}

ValidationReport validate(const CohortFrame& frame) {
    ValidationReport report;
    report.n_rows = frame.n_rows;
    for (std::size_t j = 0; j < frame.schema.size(); ++j) {
        ValidationReport::FeatureCheck check;
        check.name = frame.schema[j].name;
        check.missing_fraction = frame.missing_fraction(j);
        check.constant = frame.is_constant(j);
        check.n_non_missing = frame.non_missing_values(j).size();
        report.features.push_back(std::move(check));
    }
    for (int y : frame.outcome) report.outcome_counts[y]++;
    return report;
}

nlohmann::json ValidationReport::to_json() const {
    nlohmann::json j;
    j["n_rows"] = n_rows;
    nlohmann::json feats = nlohmann::json::array();
    for (const auto& f : features) {
        feats.push_back({{"name", f.name},
                         {"missing_fraction", f.missing_fraction},
                         {"constant", f.constant},
                         {"n_non_missing", f.n_non_missing}});
    }
    j["features"] = feats;
    nlohmann::json counts;
    for (const auto& [label, count] : outcome_counts)
        counts[std::to_string(label)] = count;
    j["outcome_counts"] = counts;
    return j;
}

std::string ValidationReport::render_text() const {
    std::vector<std::vector<std::string>> rows;
    for (const auto& f : features) {
        rows.push_back({f.name, table::format_fixed(f.missing_fraction, 3),
                        f.constant ? "yes" : "no", std::to_string(f.n_non_missing)});
    }
    std::ostringstream os;
    os << "Rows: " << n_rows << "\n";
    os << "Outcome counts:";
    for (const auto& [label, count] : outcome_counts)
        os << " " << label << ":" << count;
    os << "\n\n";
    os << table::render({"Feature", "Missing", "Constant", "Non-missing"}, rows);
    return os.str();
}

std::vector<GroupSummary> summarize_by_group(const CohortFrame& frame, Grouping grouping) {
    std::vector<std::string> labels;
    std::vector<int> group_of(frame.n_rows, -1);
    if (grouping == Grouping::by_outcome) {
        labels = {"Survival", "Non-Survival"};
        for (std::size_t i = 0; i < frame.n_rows; ++i) group_of[i] = frame.outcome[i];
    } else {
        if (frame.partition.size() != frame.n_rows)
            throw ComputeError("summarize_by_group(by_partition): no partition assigned");
        labels = {"Training Set", "Test Set"};
        for (std::size_t i = 0; i < frame.n_rows; ++i) group_of[i] = frame.partition[i];
    }

    std::vector<GroupSummary> out;
    for (std::size_t g = 0; g < labels.size(); ++g) {
        GroupSummary summary;
        summary.group_label = labels[g];
        for (std::size_t i = 0; i < frame.n_rows; ++i)
            if (group_of[i] == static_cast<int>(g)) summary.n++;
        if (summary.n == 0)
            throw ComputeError("empty group: " + labels[g]);

        for (std::size_t j = 0; j < frame.schema.size(); ++j) {
            if (frame.schema[j].kind == FeatureKind::categorical) continue;
            std::vector<double> vals;
            for (std::size_t i = 0; i < frame.n_rows; ++i) {
                if (group_of[i] == static_cast<int>(g) && !frame.missing[j][i])
                    vals.push_back(frame.columns[j][i]);
            }
            GroupSummary::FeatureSummary fs;
            fs.name = frame.schema[j].name;
            fs.is_binary = frame.schema[j].kind == FeatureKind::binary;
            fs.n_non_missing = vals.size();
            if (!vals.empty()) {
                fs.mean = stats::mean(vals);
                fs.sd = vals.size() > 1 ? stats::sample_sd(vals) : 0.0;
                fs.degenerate = vals.size() == 1;
                if (fs.is_binary) fs.prevalence = fs.mean;
            }
            summary.features.push_back(std::move(fs));
        }
        out.push_back(std::move(summary));
    }
    return out;
}

nlohmann::json group_summaries_to_json(const std::vector<GroupSummary>& groups) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& g : groups) {
        nlohmann::json jg;
        jg["group"] = g.group_label;
        jg["n"] = g.n;
        nlohmann::json feats = nlohmann::json::array();
        for (const auto& f : g.features) {
            nlohmann::json jf = {{"name", f.name},
                                 {"mean", f.mean},
                                 {"sd", f.sd},
                                 {"n_non_missing", f.n_non_missing},
                                 {"degenerate", f.degenerate}};
            if (f.is_binary) jf["prevalence"] = f.prevalence;
            feats.push_back(std::move(jf));
        }
        jg["features"] = feats;
        arr.push_back(std::move(jg));
    }
    return arr;
}

std::string render_group_table(const CohortFrame& frame,
                               const std::vector<GroupSummary>& groups) {
    std::vector<std::string> header = {"Feature", "Unit"};
    for (const auto& g : groups)
        header.push_back(g.group_label + " (n=" + std::to_string(g.n) + ")");
    std::vector<std::vector<std::string>> rows;
    for (std::size_t j = 0; j < frame.schema.size(); ++j) {
        if (frame.schema[j].kind == FeatureKind::categorical) continue;
        std::vector<std::string> row = {frame.schema[j].name, frame.schema[j].unit};
        for (const auto& g : groups) {
            const auto& f = g.features[rows.size()];
            row.push_back(table::format_mean_sd(f.mean, f.sd));
        }
        rows.push_back(std::move(row));
    }
    return table::render(header, rows);
}

} // namespace icurisk
