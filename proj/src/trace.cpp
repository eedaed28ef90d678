#include "denum/trace.hpp"

#include "denum/errors.hpp"

namespace denum {

namespace {

constexpr const char* kStageNames[] = {
    "normalize", "gcd-reduce", "split",     "unit-transform", "euclid-step",
    "base-case", "mu-select",  "eval-term", "sum",
};

} // namespace

const char* stage_name(Stage s) {
    return kStageNames[static_cast<int>(s)];
}

Stage stage_from_name(const std::string& name) {
    for (int i = 0; i <= static_cast<int>(Stage::sum); ++i)
        if (name == kStageNames[i])
            return static_cast<Stage>(i);
    throw invalid_input("unknown trace stage: '" + name + "'");
}

const std::string& TraceRecord::get(const std::string& key) const {
    for (const auto& [k, v] : fields)
        if (k == key)
            return v;
    throw internal_error("trace record has no field '" + key + "'");
}

bool TraceRecord::has(const std::string& key) const {
    for (const auto& [k, v] : fields)
        if (k == key)
            return true;
    return false;
}

std::string format_record(const TraceRecord& rec) {
    std::string line = "stage=";
    line += stage_name(rec.stage);
    for (const auto& [k, v] : rec.fields) {
        line += ' ';
        line += k;
        line += '=';
        line += v;
    }
    return line;
}

TraceRecord parse_record(const std::string& line) {
    TraceRecord rec{Stage::normalize, {}};
    bool have_stage = false;
    std::size_t pos = 0;
    while (pos < line.size()) {
        std::size_t end = line.find(' ', pos);
        if (end == std::string::npos)
            end = line.size();
        if (end > pos) {
            const std::string token = line.substr(pos, end - pos);
            const std::size_t eq = token.find('=');
            if (eq == std::string::npos)
                throw invalid_input("malformed trace token: '" + token + "'");
            std::string key = token.substr(0, eq);
            std::string value = token.substr(eq + 1);
            if (key == "stage") {
                rec.stage = stage_from_name(value);
                have_stage = true;
            } else {
                rec.add(std::move(key), std::move(value));
            }
        }
        pos = end + 1;
    }
    if (!have_stage)
        throw invalid_input("trace record without stage: '" + line + "'");
    return rec;
}

} // namespace denum
