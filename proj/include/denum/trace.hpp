#pragma once

#include <functional>
#include <string>
#include <utility>
#include <vector>

namespace denum {

/// Pipeline stages, in execution order.
enum class Stage {
    normalize,
    gcd_reduce,
    split,
    unit_transform,
    euclid_step,
    base_case,
    mu_select,
    eval_term,
    sum,
};

const char* stage_name(Stage s); // "normalize", "gcd-reduce", ...
Stage stage_from_name(const std::string& name);

/// One structured trace record: a stage plus key=value fields. All values
/// are exact decimal strings (integers, rationals "p/q", or comma-joined
/// exponent triples); none contain spaces, so a record is one
/// space-separated line.
struct TraceRecord {
    Stage stage;
    std::vector<std::pair<std::string, std::string>> fields;

    void add(std::string key, std::string value) {
        fields.emplace_back(std::move(key), std::move(value));
    }
    /// First value for a key; throws internal_error if absent.
    const std::string& get(const std::string& key) const;
    bool has(const std::string& key) const;
};

using TraceSink = std::function<void(const TraceRecord&)>;

std::string format_record(const TraceRecord& rec);       // one line, no '\n'
TraceRecord parse_record(const std::string& line);       // inverse of format_record

} // namespace denum
