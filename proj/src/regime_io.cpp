// Regime documents: key/value records and comma-separated tables.
//
// Key/value:
//   name = Original
//   ambient_note = ...
//   point_id = 1
//   m_dot_kg_s = 1532.70
//   p_MPa = 6.110
//   T_C = 276.7
//   h_kJ_kg = 2768.9
//   point_id = 2
//   ...
//
// Comma-separated: `key,value` header rows, then a column row starting with
// `point_id`, then one row per point. Lines starting with '#' are comments.

#include <algorithm>
#include <charconv>
#include <fstream>
#include <map>
#include <sstream>

#include <fmt/format.h>

#include "turbex/errors.hpp"
#include "turbex/plant_model.hpp"

namespace turbex {

namespace {

std::string_view trim(std::string_view s) {
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string_view::npos) return {};
    const auto last = s.find_last_not_of(" \t\r");
    return s.substr(first, last - first + 1);
}

std::vector<std::string_view> split_lines(std::string_view doc) {
    std::vector<std::string_view> lines;
    std::size_t start = 0;
    while (start <= doc.size()) {
        const auto end = doc.find('\n', start);
        if (end == std::string_view::npos) {
            if (start < doc.size()) lines.push_back(doc.substr(start));
            break;
        }
        lines.push_back(doc.substr(start, end - start));
        start = end + 1;
    }
    return lines;
}

bool is_content(std::string_view line) {
    const auto t = trim(line);
    return !t.empty() && t.front() != '#';
}

// Fields in canonical units after conversion, with their declared decimals.
enum class Field { PointId, MassFlow, Pressure, Temperature, Enthalpy };

struct ColumnSpec {
    Field field;
    double scale = 1.0;   // canonical = raw * scale + offset
    double offset = 0.0;
    int extra_decimals = 0;  // decimals gained by the scale
};

ColumnSpec column_spec(std::string_view key, int line) {
    const std::string k(key);
    if (k == "point_id") return {Field::PointId};
    const auto underscore = k.find('_');
    const std::string base = k.substr(0, underscore);
    const std::string unit = underscore == std::string::npos ? "" : k.substr(underscore + 1);
    auto unknown_unit = [&](const char* field) {
        return SchemaError(field, line, fmt::format("line {}: unknown unit '{}' for field '{}'", line, unit, field));
    };
    if (base == "p") {
        if (unit == "MPa") return {Field::Pressure};
        if (unit == "bar") return {Field::Pressure, 0.1, 0.0, 1};
        if (unit == "kPa") return {Field::Pressure, 0.001, 0.0, 3};
        throw unknown_unit("p");
    }
    if (base == "T") {
        if (unit == "C") return {Field::Temperature};
        if (unit == "K") return {Field::Temperature, 1.0, -273.15, 0};
        throw unknown_unit("T");
    }
    if (base == "h") {
        if (unit == "kJ_kg") return {Field::Enthalpy};
        throw unknown_unit("h");
    }
    if (k.rfind("m_dot", 0) == 0) {
        if (k == "m_dot_kg_s") return {Field::MassFlow};
        throw SchemaError("m_dot", line,
                          fmt::format("line {}: unknown unit '{}' for field 'm_dot'", line, k.substr(5)));
    }
    throw SchemaError(k, line, fmt::format("line {}: unknown field '{}'", line, k));
}

const char* field_name(Field f) {
    switch (f) {
        case Field::PointId: return "point_id";
        case Field::MassFlow: return "m_dot";
        case Field::Pressure: return "p";
        case Field::Temperature: return "T";
        case Field::Enthalpy: return "h";
    }
    return "?";
}

struct Number {
    double value;
    int decimals;  // -1 when written in exponent form
};

Number parse_number(std::string_view token, std::string_view field, int line) {
    const auto t = trim(token);
    double value = 0.0;
    const char* begin = t.data();
    const char* end = t.data() + t.size();
    const auto [ptr, ec] = std::from_chars(begin, end, value);
    if (t.empty() || ec != std::errc() || ptr != end) {
        throw SchemaError(std::string(field), line,
                          fmt::format("line {}: non-numeric value '{}' for field '{}'", line, t, field));
    }
    int decimals = 0;
    if (t.find_first_of("eE") != std::string_view::npos) {
        decimals = -1;
    } else if (const auto dot = t.find('.'); dot != std::string_view::npos) {
        decimals = static_cast<int>(t.size() - dot - 1);
    }
    return {value, decimals};
}

// Applies a unit conversion and re-rounds at the declared precision so the
// canonical value is the nearest double to its decimal representation.
Number convert(Number raw, const ColumnSpec& spec) {
    if (spec.scale == 1.0 && spec.offset == 0.0) return raw;
    const double canonical = raw.value * spec.scale + spec.offset;
    if (raw.decimals < 0) return {canonical, -1};
    const int decimals = raw.decimals + spec.extra_decimals;
    const std::string text = fmt::format("{:.{}f}", canonical, decimals);
    double rounded = canonical;
    std::from_chars(text.data(), text.data() + text.size(), rounded);
    return {rounded, decimals};
}

struct PendingStream {
    StreamState state;
    int line = 0;
    bool has_m = false, has_p = false, has_T = false, has_h = false;
};

void assign(PendingStream& s, const ColumnSpec& spec, std::string_view token, int line) {
    if (spec.field == Field::PointId) return;
    const Number n = convert(parse_number(token, field_name(spec.field), line), spec);
    switch (spec.field) {
        case Field::MassFlow: s.state.m_dot = n.value; s.state.decimals.m_dot = n.decimals; s.has_m = true; break;
        case Field::Pressure: s.state.p = n.value; s.state.decimals.p = n.decimals; s.has_p = true; break;
        case Field::Temperature: s.state.T_C = n.value; s.state.decimals.T = n.decimals; s.has_T = true; break;
        case Field::Enthalpy: s.state.h = n.value; s.state.decimals.h = n.decimals; s.has_h = true; break;
        case Field::PointId: break;
    }
}

int parse_point_id(std::string_view token, int line) {
    const auto t = trim(token);
    int id = 0;
    const auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), id);
    if (t.empty() || ec != std::errc() || ptr != t.data() + t.size()) {
        throw SchemaError("point_id", line, fmt::format("line {}: non-numeric value '{}' for field 'point_id'", line, t));
    }
    return id;
}

struct Header {
    std::string name;
    std::string ambient_note;
    std::string provenance;
};

void set_header(Header& header, std::string_view key, std::string_view value, int line) {
    if (key == "name") header.name = std::string(value);
    else if (key == "ambient_note") header.ambient_note = std::string(value);
    else if (key == "provenance") header.provenance = std::string(value);
    else throw SchemaError(std::string(key), line, fmt::format("line {}: unknown header field '{}'", line, key));
}

OperatingRegime finish(Header header, std::vector<PendingStream> pending) {
    if (header.name.empty()) throw SchemaError("name", 0, "missing header field 'name'");
    std::vector<StreamState> streams;
    for (const PendingStream& p : pending) {
        const char* missing = !p.has_m ? "m_dot" : !p.has_p ? "p" : !p.has_T ? "T" : !p.has_h ? "h" : nullptr;
        if (missing) {
            throw SchemaError(missing, p.line,
                              fmt::format("line {}: missing field '{}' for operating point {}", p.line, missing,
                                          p.state.point_id));
        }
        streams.push_back(p.state);
    }
    std::map<int, int> first_line;
    for (const PendingStream& p : pending) {
        if (!first_line.emplace(p.state.point_id, p.line).second) {
            throw SchemaError("point_id", p.line,
                              fmt::format("line {}: duplicate operating point {}", p.line, p.state.point_id));
        }
    }
    return OperatingRegime(std::move(header.name), std::move(streams), std::move(header.provenance),
                           std::move(header.ambient_note));
}

OperatingRegime load_key_value(std::string_view doc) {
    Header header;
    std::vector<PendingStream> pending;
    const auto lines = split_lines(doc);
    for (std::size_t i = 0; i < lines.size(); ++i) {
        const int line = static_cast<int>(i + 1);
        if (!is_content(lines[i])) continue;
        const auto text = trim(lines[i]);
        const auto eq = text.find('=');
        if (eq == std::string_view::npos) {
            throw SchemaError("", line, fmt::format("line {}: expected 'key = value'", line));
        }
        const auto key = trim(text.substr(0, eq));
        const auto value = trim(text.substr(eq + 1));
        if (key == "name" || key == "ambient_note" || key == "provenance") {
            set_header(header, key, value, line);
            continue;
        }
        const ColumnSpec spec = column_spec(key, line);
        if (spec.field == Field::PointId) {
            PendingStream s;
            s.state.point_id = parse_point_id(value, line);
            s.line = line;
            pending.push_back(s);
            continue;
        }
        if (pending.empty()) {
            throw SchemaError(std::string(key), line, fmt::format("line {}: field '{}' before any point_id", line, key));
        }
        assign(pending.back(), spec, value, line);
    }
    return finish(std::move(header), std::move(pending));
}

std::vector<std::string_view> split_commas(std::string_view line) {
    std::vector<std::string_view> cells;
    std::size_t start = 0;
    while (true) {
        const auto comma = line.find(',', start);
        cells.push_back(trim(line.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start)));
        if (comma == std::string_view::npos) break;
        start = comma + 1;
    }
    return cells;
}

OperatingRegime load_csv(std::string_view doc) {
    Header header;
    std::vector<PendingStream> pending;
    std::vector<ColumnSpec> columns;
    const auto lines = split_lines(doc);
    for (std::size_t i = 0; i < lines.size(); ++i) {
        const int line = static_cast<int>(i + 1);
        if (!is_content(lines[i])) continue;
        const auto text = trim(lines[i]);
        if (columns.empty()) {
            const auto comma = text.find(',');
            const auto key = trim(text.substr(0, comma));
            if (key == "point_id") {
                for (std::string_view cell : split_commas(text)) columns.push_back(column_spec(cell, line));
                for (Field f : {Field::MassFlow, Field::Pressure, Field::Temperature, Field::Enthalpy}) {
                    const bool present = std::any_of(columns.begin(), columns.end(),
                                                     [f](const ColumnSpec& c) { return c.field == f; });
                    if (!present) {
                        throw SchemaError(field_name(f), line,
                                          fmt::format("line {}: missing column '{}'", line, field_name(f)));
                    }
                }
                continue;
            }
            const auto value = comma == std::string_view::npos ? std::string_view{} : trim(text.substr(comma + 1));
            set_header(header, key, value, line);
            continue;
        }
        const auto cells = split_commas(text);
        if (cells.size() != columns.size()) {
            throw SchemaError("", line,
                              fmt::format("line {}: expected {} columns, found {}", line, columns.size(), cells.size()));
        }
        PendingStream s;
        s.line = line;
        for (std::size_t c = 0; c < cells.size(); ++c) {
            if (columns[c].field == Field::PointId) s.state.point_id = parse_point_id(cells[c], line);
            else assign(s, columns[c], cells[c], line);
        }
        pending.push_back(s);
    }
    if (columns.empty()) throw SchemaError("point_id", 0, "missing column header row starting with 'point_id'");
    return finish(std::move(header), std::move(pending));
}

std::string format_value(double value, int decimals) {
    if (decimals < 0) return fmt::format("{:.16e}", value);  // exponent form marks the value as exact
    return fmt::format("{:.{}f}", value, decimals);
}

std::string_view single_line(const std::string& s) {
    const auto nl = s.find('\n');
    return nl == std::string::npos ? std::string_view(s) : std::string_view(s).substr(0, nl);
}

}  // namespace

OperatingRegime load_regime(std::string_view document, std::optional<RegimeFormat> format) {
    if (!format) {
        format = RegimeFormat::Csv;
        for (std::string_view line : split_lines(document)) {
            if (!is_content(line)) continue;
            if (line.find('=') != std::string_view::npos) format = RegimeFormat::KeyValue;
            break;
        }
    }
    return *format == RegimeFormat::KeyValue ? load_key_value(document) : load_csv(document);
}

OperatingRegime load_regime_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error(fmt::format("cannot read regime file '{}'", path));
    std::ostringstream buffer;
    buffer << in.rdbuf();
    std::optional<RegimeFormat> format;
    if (path.size() >= 4 && path.compare(path.size() - 4, 4, ".csv") == 0) format = RegimeFormat::Csv;
    return load_regime(buffer.str(), format);
}

std::string serialize_regime(const OperatingRegime& regime, RegimeFormat format) {
    std::string out;
    if (format == RegimeFormat::KeyValue) {
        out += fmt::format("name = {}\n", single_line(regime.name()));
        if (!regime.ambient_note().empty()) out += fmt::format("ambient_note = {}\n", single_line(regime.ambient_note()));
        if (!regime.provenance().empty()) out += fmt::format("provenance = {}\n", single_line(regime.provenance()));
        for (const StreamState& s : regime.streams()) {
            out += fmt::format("\npoint_id = {}\nm_dot_kg_s = {}\np_MPa = {}\nT_C = {}\nh_kJ_kg = {}\n", s.point_id,
                               format_value(s.m_dot, s.decimals.m_dot), format_value(s.p, s.decimals.p),
                               format_value(s.T_C, s.decimals.T), format_value(s.h, s.decimals.h));
        }
        return out;
    }
    out += fmt::format("name,{}\n", single_line(regime.name()));
    if (!regime.ambient_note().empty()) out += fmt::format("ambient_note,{}\n", single_line(regime.ambient_note()));
    if (!regime.provenance().empty()) out += fmt::format("provenance,{}\n", single_line(regime.provenance()));
    out += "point_id,m_dot_kg_s,p_MPa,T_C,h_kJ_kg\n";
    for (const StreamState& s : regime.streams()) {
        out += fmt::format("{},{},{},{},{}\n", s.point_id, format_value(s.m_dot, s.decimals.m_dot),
                           format_value(s.p, s.decimals.p), format_value(s.T_C, s.decimals.T),
                           format_value(s.h, s.decimals.h));
    }
    return out;
}

}  // namespace turbex
