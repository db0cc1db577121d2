#include "rootstab/io.hpp"

#include "rootstab/error.hpp"

#include <json.hpp>

#include <cctype>
#include <fstream>
#include <sstream>

namespace rootstab {

using json = nlohmann::ordered_json;

namespace {

void syntax_error(const std::string& text, std::size_t byte, const std::string& what) {
    std::size_t line = 1, col = 1;
    for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
        if (text[i] == '\n') {
            ++line;
            col = 1;
        } else {
            ++col;
        }
    }
    std::ostringstream os;
    os << "line " << line << ", column " << col << ": " << what;
    fail(Errc::ParseError, os.str());
}

json parse_json(const std::string& original) {
    std::string strict = relaxed_to_json(original);
    try {
        return json::parse(strict);
    } catch (const nlohmann::json::parse_error& e) {
        syntax_error(strict, e.byte > 0 ? e.byte - 1 : 0, e.what());
    }
    return {};
}

Rat rat_from_json(const json& value, const std::string& where) {
    if (value.is_string()) return parse_rat(value.get<std::string>());
    if (value.is_number_integer()) return Rat(value.get<long long>());
    fail(Errc::ParseError, where + ": rationals are integers or \"p/q\" strings");
    return {};
}

Vec vec_from_json(const json& value, const std::string& where) {
    if (!value.is_array()) fail(Errc::ParseError, where + ": expected an array");
    Vec out;
    out.reserve(value.size());
    for (const auto& item : value) out.push_back(rat_from_json(item, where));
    return out;
}

json rat_to_json(const Rat& r) {
    return json(rat_str(r));
}

json vec_to_json(const Vec& v) {
    json arr = json::array();
    for (const auto& x : v) arr.push_back(rat_to_json(x));
    return arr;
}

} // namespace

std::string relaxed_to_json(const std::string& text) {
    std::string out;
    out.reserve(text.size() + 16);
    bool in_string = false;
    for (std::size_t i = 0; i < text.size();) {
        char c = text[i];
        if (in_string) {
            out.push_back(c);
            if (c == '\\' && i + 1 < text.size()) {
                out.push_back(text[i + 1]);
                i += 2;
                continue;
            }
            if (c == '"') in_string = false;
            ++i;
            continue;
        }
        if (c == '"') {
            in_string = true;
            out.push_back(c);
            ++i;
            continue;
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::size_t j = i;
            while (j < text.size() &&
                   (std::isalnum(static_cast<unsigned char>(text[j])) || text[j] == '_'))
                ++j;
            std::size_t k = j;
            while (k < text.size() && std::isspace(static_cast<unsigned char>(text[k]))) ++k;
            std::string word = text.substr(i, j - i);
            bool keyword = word == "true" || word == "false" || word == "null";
            if (k < text.size() && text[k] == ':' && !keyword) {
                out.push_back('"');
                out.append(word);
                out.push_back('"');
            } else {
                out.append(word);
            }
            i = j;
            continue;
        }
        out.push_back(c);
        ++i;
    }
    return out;
}

RootStackConfig parse_config_text(const std::string& text) {
    json doc = parse_json(text);
    if (!doc.is_object()) fail(Errc::ParseError, "config document must be an object");

    RootStackConfig cfg;
    if (doc.contains("name")) {
        if (!doc["name"].is_string()) fail(Errc::ParseError, "name: expected a string");
        cfg.name = doc["name"].get<std::string>();
    }
    for (const char* key : {"rho", "gram", "H", "C", "n"})
        if (!doc.contains(key))
            fail(Errc::ParseError, std::string("config is missing key '") + key + "'");
    if (!doc["rho"].is_number_integer()) fail(Errc::ParseError, "rho: expected an integer");
    if (!doc["n"].is_number_integer()) fail(Errc::ParseError, "n: expected an integer");
    cfg.rho = doc["rho"].get<int>();
    cfg.n = doc["n"].get<int>();
    if (cfg.rho < 1) fail(Errc::ParseError, "rho must be positive");

    const json& gram = doc["gram"];
    if (!gram.is_array() || static_cast<int>(gram.size()) != cfg.rho)
        fail(Errc::ParseError, "gram: expected rho rows");
    for (const auto& row : gram) {
        Vec r = vec_from_json(row, "gram row");
        if (static_cast<int>(r.size()) != cfg.rho)
            fail(Errc::ParseError, "gram: row length does not match rho");
        cfg.gram.push_back(std::move(r));
    }
    cfg.H = vec_from_json(doc["H"], "H");
    cfg.C = vec_from_json(doc["C"], "C");
    if (static_cast<int>(cfg.H.size()) != cfg.rho) fail(Errc::ParseError, "H: wrong length");
    if (static_cast<int>(cfg.C.size()) != cfg.rho) fail(Errc::ParseError, "C: wrong length");
    if (doc.contains("B")) {
        cfg.B = vec_from_json(doc["B"], "B");
        if (static_cast<int>(cfg.B.size()) != cfg.rho) fail(Errc::ParseError, "B: wrong length");
    }
    return build_config(std::move(cfg));
}

RootStackConfig parse_config_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) fail(Errc::ParseError, "cannot open config file '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_config_text(buf.str());
}

ParsedClass parse_class(const RootStackConfig& cfg, const std::string& text) {
    json doc = parse_json(text);
    if (!doc.is_object()) fail(Errc::ParseError, "class document must be an object");
    for (const char* key : {"ch0", "ch1", "ch2"})
        if (!doc.contains(key))
            fail(Errc::ParseError, std::string("class is missing key '") + key + "'");

    ParsedClass out;
    out.cls.ch0 = rat_from_json(doc["ch0"], "ch0");
    out.cls.ch1.coords = vec_from_json(doc["ch1"], "ch1");
    if (static_cast<int>(out.cls.ch1.coords.size()) != cfg.rho)
        fail(Errc::ParseError, "ch1: expected rho coordinates");
    out.cls.ch1.cg = doc.contains("cg") ? rat_from_json(doc["cg"], "cg") : Rat(0);
    out.cls.ch2 = rat_from_json(doc["ch2"], "ch2");

    if (doc.contains("sectors")) {
        const json& sectors = doc["sectors"];
        if (!sectors.is_array()) fail(Errc::ParseError, "sectors: expected an array");
        std::vector<SectorPair> pairs;
        for (const auto& entry : sectors) {
            if (!entry.is_array() || entry.size() != 2)
                fail(Errc::ParseError, "sectors: entries are [r, d] pairs");
            pairs.push_back({rat_from_json(entry[0], "sector r"), rat_from_json(entry[1], "sector d")});
        }
        if (static_cast<int>(pairs.size()) != cfg.n - 1)
            fail(Errc::SectorCountMismatch, "sectors: expected n-1 pairs");
        out.sectors = std::move(pairs);
    }
    return out;
}

CRClass as_cr(const RootStackConfig& cfg, const ParsedClass& parsed) {
    if (parsed.sectors) return {parsed.cls, *parsed.sectors};
    return {parsed.cls, std::vector<SectorPair>(cfg.n - 1, SectorPair{Rat(0), Rat(0)})};
}

std::string emit_class(const RootStackConfig&, const NumClass& v) {
    json doc;
    doc["ch0"] = rat_to_json(v.ch0);
    doc["ch1"] = vec_to_json(v.ch1.coords);
    doc["cg"] = rat_to_json(v.ch1.cg);
    doc["ch2"] = rat_to_json(v.ch2);
    return doc.dump();
}

std::string emit_class(const RootStackConfig& cfg, const CRClass& v) {
    json doc = json::parse(emit_class(cfg, v.base));
    json sectors = json::array();
    for (const auto& s : v.sectors) sectors.push_back(json::array({rat_str(s.r), rat_str(s.d)}));
    doc["sectors"] = sectors;
    return doc.dump();
}

std::string emit_config(const RootStackConfig& cfg) {
    json doc;
    doc["name"] = cfg.name;
    doc["rho"] = cfg.rho;
    json gram = json::array();
    for (const auto& row : cfg.gram) gram.push_back(vec_to_json(row));
    doc["gram"] = gram;
    doc["H"] = vec_to_json(cfg.H);
    doc["C"] = vec_to_json(cfg.C);
    doc["B"] = vec_to_json(cfg.B);
    doc["n"] = cfg.n;
    return doc.dump(2);
}

} // namespace rootstab
