#include "matchmanip/profile_io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>
#include <vector>

namespace matchmanip {

namespace {

struct Line {
    int number;
    std::vector<int> values;
};

[[noreturn]] void fail(int line, const std::string& what) {
    throw ValidationError("line " + std::to_string(line) + ": " + what);
}

std::vector<Line> tokenize(std::string_view text) {
    std::vector<Line> lines;
    int number = 0;
    size_t pos = 0;
    while (pos <= text.size()) {
        size_t end = text.find('\n', pos);
        if (end == std::string_view::npos) end = text.size();
        std::string_view raw = text.substr(pos, end - pos);
        ++number;
        pos = end + 1;
        if (auto hash = raw.find('#'); hash != std::string_view::npos) raw = raw.substr(0, hash);

        Line line{number, {}};
        size_t i = 0;
        while (i < raw.size()) {
            while (i < raw.size() && (raw[i] == ' ' || raw[i] == '\t' || raw[i] == '\r')) ++i;
            if (i >= raw.size()) break;
            size_t j = i;
            while (j < raw.size() && raw[j] != ' ' && raw[j] != '\t' && raw[j] != '\r') ++j;
            std::string_view tok = raw.substr(i, j - i);
            int v = 0;
            auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
            if (ec != std::errc{} || ptr != tok.data() + tok.size())
                fail(number, "expected an integer, found '" + std::string(tok) + "'");
            line.values.push_back(v);
            i = j;
        }
        if (!line.values.empty()) lines.push_back(std::move(line));
        if (end == text.size()) break;
    }
    return lines;
}

PreferenceList to_list(const Line& line, int n, const char* owner, int idx) {
    const std::string who = std::string(owner) + std::to_string(idx + 1);
    if (static_cast<int>(line.values.size()) != n)
        fail(line.number, "list of " + who + " has " + std::to_string(line.values.size()) + " entries, expected " +
                              std::to_string(n));
    PreferenceList list;
    std::vector<char> seen(static_cast<size_t>(n), 0);
    for (int v : line.values) {
        if (v < 1 || v > n) fail(line.number, "list of " + who + " has out-of-range index " + std::to_string(v));
        if (seen[static_cast<size_t>(v - 1)])
            fail(line.number, "list of " + who + " repeats index " + std::to_string(v) + " (ties are not allowed)");
        seen[static_cast<size_t>(v - 1)] = 1;
        list.push_back(v - 1);
    }
    return list;
}

}  // namespace

Profile parse_profile(std::string_view text) {
    auto lines = tokenize(text);
    if (lines.empty()) throw ValidationError("line 1: empty profile");
    const Line& header = lines.front();
    if (header.values.size() != 1 || header.values[0] < 1) fail(header.number, "expected a positive size n");
    const int n = header.values[0];
    if (static_cast<int>(lines.size()) != 2 * n + 1) {
        const int at = static_cast<int>(lines.size()) > 2 * n + 1 ? lines[static_cast<size_t>(2 * n + 1)].number
                                                                  : lines.back().number;
        fail(at, "expected " + std::to_string(2 * n) + " preference lists, found " +
                     std::to_string(lines.size() - 1));
    }
    std::vector<PreferenceList> men, women;
    for (int i = 0; i < n; ++i) men.push_back(to_list(lines[static_cast<size_t>(1 + i)], n, "m", i));
    for (int i = 0; i < n; ++i) women.push_back(to_list(lines[static_cast<size_t>(1 + n + i)], n, "w", i));
    return Profile(std::move(men), std::move(women));
}

Profile read_profile_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open profile file " + path.string());
    std::stringstream ss;
    ss << in.rdbuf();
    try {
        return parse_profile(ss.str());
    } catch (const ValidationError& e) {
        throw ValidationError(path.string() + ": " + e.what());
    }
}

std::string format_profile(const Profile& profile) {
    std::string out = std::to_string(profile.size()) + "\n";
    auto emit = [&](std::span<const int> list) {
        for (size_t i = 0; i < list.size(); ++i) {
            if (i) out += ' ';
            out += std::to_string(list[i] + 1);
        }
        out += '\n';
    };
    for (int m = 0; m < profile.size(); ++m) emit(profile.man_list(m));
    for (int w = 0; w < profile.size(); ++w) emit(profile.woman_list(w));
    return out;
}

std::string format_list(Side owner_side, std::span<const int> list) {
    const Side other = opposite(owner_side);
    std::string out;
    for (size_t i = 0; i < list.size(); ++i) {
        if (i) out += ' ';
        out += AgentId{other, list[i]}.label();
    }
    return out;
}

PreferenceList parse_list(Side owner_side, std::string_view text) {
    PreferenceList list;
    std::istringstream in{std::string(text)};
    std::string tok;
    while (in >> tok) list.push_back(AgentId::parse(tok, opposite(owner_side)).index);
    return list;
}

nlohmann::json matching_to_json(const Matching& matching) {
    nlohmann::json pairs = nlohmann::json::array();
    for (int m = 0; m < matching.size(); ++m) pairs.push_back({m + 1, matching.wife_of(m) + 1});
    return {{"pairs", pairs}};
}

Matching matching_from_json(const nlohmann::json& j) {
    if (!j.is_object() || !j.contains("pairs") || !j["pairs"].is_array())
        throw ValidationError("matching JSON must be an object with a \"pairs\" array");
    const auto& pairs = j["pairs"];
    const int n = static_cast<int>(pairs.size());
    std::vector<int> wife(static_cast<size_t>(n), -1);
    for (const auto& p : pairs) {
        if (!p.is_array() || p.size() != 2 || !p[0].is_number_integer() || !p[1].is_number_integer())
            throw ValidationError("each pair must be [man, woman]");
        const int m = p[0].get<int>(), w = p[1].get<int>();
        if (m < 1 || m > n || w < 1 || w > n) throw ValidationError("pair index out of range");
        if (wife[static_cast<size_t>(m - 1)] != -1) throw ValidationError("man listed twice in matching");
        wife[static_cast<size_t>(m - 1)] = w - 1;
    }
    return Matching::from_wives(std::move(wife));
}

}  // namespace matchmanip
