#include "mss/io.hpp"

#include <cctype>
#include <charconv>
#include <fstream>
#include <sstream>

#include "mss/errors.hpp"

namespace mss {

namespace {

[[noreturn]] void fail(std::string_view origin, std::size_t line, const std::string& what) {
    throw input_format_error(std::string(origin) + ": line " + std::to_string(line) + ": " + what);
}

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) {
        s.remove_prefix(1);
    }
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) {
        s.remove_suffix(1);
    }
    return s;
}

std::int64_t parse_int(std::string_view token, std::string_view origin, std::size_t line,
                       bool allow_negative) {
    token = trim(token);
    if (token.empty()) {
        fail(origin, line, "empty number");
    }
    std::int64_t value = 0;
    const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc{} || ptr != token.data() + token.size()) {
        fail(origin, line, "malformed integer '" + std::string(token) + "'");
    }
    if (!allow_negative && value < 0) {
        fail(origin, line, "negative value '" + std::string(token) + "' not allowed here");
    }
    return value;
}

std::vector<std::string_view> split(std::string_view s, char sep) {
    std::vector<std::string_view> parts;
    std::size_t start = 0;
    while (true) {
        const std::size_t at = s.find(sep, start);
        if (at == std::string_view::npos) {
            parts.push_back(s.substr(start));
            return parts;
        }
        parts.push_back(s.substr(start, at - start));
        start = at + 1;
    }
}

bool skippable(std::string_view line) {
    const auto t = trim(line);
    return t.empty() || t.front() == '#';
}

template <typename Fn>
void for_each_line(std::string_view content, Fn&& fn) {
    std::size_t line_no = 0;
    std::size_t start = 0;
    while (start <= content.size()) {
        const std::size_t end = content.find('\n', start);
        const std::string_view line = end == std::string_view::npos
                                          ? content.substr(start)
                                          : content.substr(start, end - start);
        ++line_no;
        fn(line, line_no);
        if (end == std::string_view::npos) {
            break;
        }
        start = end + 1;
    }
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw input_format_error(path + ": cannot open");
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    return std::move(buf).str();
}

}  // namespace

std::vector<symbol> parse_text(std::string_view content, std::string_view origin) {
    std::vector<symbol> values;
    for_each_line(content, [&](std::string_view line, std::size_t line_no) {
        if (skippable(line)) {
            return;
        }
        std::size_t pos = 0;
        while (pos < line.size()) {
            while (pos < line.size() && std::isspace(static_cast<unsigned char>(line[pos]))) {
                ++pos;
            }
            if (pos >= line.size()) {
                break;
            }
            std::size_t end = pos;
            while (end < line.size() && !std::isspace(static_cast<unsigned char>(line[end]))) {
                ++end;
            }
            values.push_back(parse_int(line.substr(pos, end - pos), origin, line_no, false));
            pos = end;
        }
    });
    return values;
}

std::vector<pattern_position> parse_pattern(std::string_view content, std::string_view origin) {
    std::vector<pattern_position> positions;
    for_each_line(content, [&](std::string_view line, std::size_t line_no) {
        if (skippable(line)) {
            return;
        }
        const std::string_view body = trim(line);
        std::string_view members_part = body;
        std::optional<std::int64_t> bound;
        if (const std::size_t at = body.find('@'); at != std::string_view::npos) {
            if (body.find('@', at + 1) != std::string_view::npos) {
                fail(origin, line_no, "more than one '@' bound marker");
            }
            members_part = body.substr(0, at);
            bound = parse_int(body.substr(at + 1), origin, line_no, false);
        }
        std::vector<symbol> members;
        for (const auto part : split(members_part, ',')) {
            members.push_back(parse_int(part, origin, line_no, false));
        }
        try {
            positions.push_back({character_class(std::move(members)), bound});
        } catch (const error& e) {
            fail(origin, line_no, e.what());
        }
    });
    if (positions.empty()) {
        throw input_format_error(std::string(origin) + ": no pattern positions");
    }
    return positions;
}

assignment_table parse_assignment_table(std::string_view content, std::string_view origin) {
    assignment_table table;
    for_each_line(content, [&](std::string_view line, std::size_t line_no) {
        if (skippable(line)) {
            return;
        }
        const auto parts = split(trim(line), ',');
        if (parts.size() != 3) {
            fail(origin, line_no, "expected 'char,class_index,score'");
        }
        const symbol c = parse_int(parts[0], origin, line_no, false);
        const std::int64_t idx = parse_int(parts[1], origin, line_no, false);
        const std::int64_t value = parse_int(parts[2], origin, line_no, true);
        try {
            table.insert(c, static_cast<std::size_t>(idx), value);
        } catch (const error& e) {
            fail(origin, line_no, e.what());
        }
    });
    return table;
}

std::vector<symbol> load_text_file(const std::string& path) {
    return parse_text(read_file(path), path);
}

std::vector<pattern_position> load_pattern_file(const std::string& path) {
    return parse_pattern(read_file(path), path);
}

assignment_table load_assignment_table_file(const std::string& path) {
    return parse_assignment_table(read_file(path), path);
}

std::string format_pattern(std::span<const pattern_position> positions) {
    std::string out;
    for (const auto& pos : positions) {
        const auto& members = pos.cls.members();
        for (std::size_t i = 0; i < members.size(); ++i) {
            if (i > 0) {
                out += ',';
            }
            out += std::to_string(members[i]);
        }
        if (pos.local_bound) {
            out += '@';
            out += std::to_string(*pos.local_bound);
        }
        out += '\n';
    }
    return out;
}

void write_text_file(const std::string& path, std::span<const symbol> values) {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw input_format_error(path + ": cannot open for writing");
    }
    for (const symbol v : values) {
        out << v << '\n';
    }
    if (!out.flush()) {
        throw input_format_error(path + ": write failed");
    }
}

void write_pattern_file(const std::string& path, std::span<const pattern_position> positions) {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw input_format_error(path + ": cannot open for writing");
    }
    out << format_pattern(positions);
    if (!out.flush()) {
        throw input_format_error(path + ": write failed");
    }
}

}  // namespace mss
