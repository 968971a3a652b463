#pragma once

#include "curvelab/bipoly.hpp"
#include "curvelab/error.hpp"
#include "curvelab/parametric.hpp"
#include "curvelab/parse.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

namespace curvelab {

/// One corpus entry. Expected values are kept as rendered strings: integers,
/// "infinite", or a contact set such as "{3} u {n >= 5}".
struct CorpusEntry {
    std::string name;
    std::optional<BiPoly> f;
    std::vector<std::pair<Param, BiPoly>> branches;
    std::map<std::string, std::string> expected;
    std::string source;

    /// f, or the product of the branch polynomials.
    BiPoly equation() const {
        if (f) return *f;
        if (branches.empty()) fail(Errc::InvalidArgument, "corpus entry " + name + " has neither f nor branches");
        BiPoly p = BiPoly::constant(Rat(1));
        for (const auto& [g, fi] : branches) p *= fi;
        return p;
    }
};

namespace detail {

inline std::string trim(std::string s) {
    auto ws = [](unsigned char c) { return std::isspace(c); };
    s.erase(s.begin(), std::find_if_not(s.begin(), s.end(), ws));
    s.erase(std::find_if_not(s.rbegin(), s.rend(), ws).base(), s.end());
    return s;
}

/// Quoted strings in `value`, in order; `bare` receives an unquoted value.
inline std::vector<std::string> quoted(const std::string& value, std::string& bare) {
    std::vector<std::string> out;
    std::size_t k = 0;
    while ((k = value.find('"', k)) != std::string::npos) {
        std::size_t e = value.find('"', k + 1);
        if (e == std::string::npos) fail(Errc::ParseError, "unterminated string in " + value);
        out.push_back(value.substr(k + 1, e - k - 1));
        k = e + 1;
    }
    if (out.empty()) bare = value;
    return out;
}

} // namespace detail

/// Entries are blocks of `key = value` lines separated by blank lines;
/// `#` starts a comment. Keys: name, f, branch ("param" ; "poly"),
/// expect.<field>.
inline std::vector<CorpusEntry> parse_corpus(std::istream& in, const std::string& source) {
    std::vector<CorpusEntry> out;
    std::optional<CorpusEntry> cur;
    auto flush = [&] {
        if (!cur) return;
        if (cur->name.empty()) fail(Errc::ParseError, source + ": entry without a name");
        out.push_back(std::move(*cur));
        cur.reset();
    };
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::string where = source + ":" + std::to_string(lineno);
        bool in_string = false;
        for (std::size_t k = 0; k < line.size(); ++k) {
            if (line[k] == '"') in_string = !in_string;
            if (line[k] == '#' && !in_string) {
                line.erase(k);
                break;
            }
        }
        line = detail::trim(line);
        if (line.empty()) {
            flush();
            continue;
        }
        auto eq = line.find('=');
        if (eq == std::string::npos) fail(Errc::ParseError, where + ": expected key = value");
        std::string key = detail::trim(line.substr(0, eq));
        std::string bare;
        auto strs = detail::quoted(detail::trim(line.substr(eq + 1)), bare);
        bare = detail::trim(bare);
        if (!cur) {
            cur.emplace();
            cur->source = source;
        }
        auto one = [&]() -> std::string {
            if (strs.size() == 1) return strs[0];
            if (strs.empty() && !bare.empty()) return bare;
            fail(Errc::ParseError, where + ": expected one value for " + key);
        };
        try {
            if (key == "name") {
                cur->name = one();
            } else if (key == "f") {
                cur->f = parse_poly(one());
            } else if (key == "branch") {
                if (strs.size() != 2) fail(Errc::ParseError, where + ": branch needs \"param\" ; \"poly\"");
                cur->branches.emplace_back(parse_param(strs[0]), parse_poly(strs[1]));
            } else if (key.rfind("expect.", 0) == 0) {
                cur->expected[key.substr(7)] = one();
            } else {
                fail(Errc::ParseError, where + ": unknown key " + key);
            }
        } catch (const ParseError& e) {
            fail(Errc::ParseError, where + ": " + e.detail());
        }
    }
    flush();
    return out;
}

/// Every *.curve file under `dir`, entries sorted by name.
inline std::vector<CorpusEntry> load_corpus(const std::filesystem::path& dir) {
    if (!std::filesystem::is_directory(dir)) fail(Errc::InvalidArgument, "corpus directory not found: " + dir.string());
    std::vector<std::filesystem::path> files;
    for (const auto& e : std::filesystem::directory_iterator(dir))
        if (e.path().extension() == ".curve") files.push_back(e.path());
    std::sort(files.begin(), files.end());
    std::vector<CorpusEntry> all;
    for (const auto& p : files) {
        std::ifstream in(p);
        auto es = parse_corpus(in, p.filename().string());
        all.insert(all.end(), es.begin(), es.end());
    }
    std::stable_sort(all.begin(), all.end(), [](const auto& a, const auto& b) { return a.name < b.name; });
    for (std::size_t k = 1; k < all.size(); ++k)
        if (all[k].name == all[k - 1].name) fail(Errc::InvalidArgument, "duplicate corpus entry " + all[k].name);
    return all;
}

} // namespace curvelab
