#include "tot/io.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"

namespace tot {

namespace {

using Json = nlohmann::ordered_json;

Json head(const Header& h) {
    Json j;
    j["command"] = h.command;
    j["seed"] = h.seed;
    j["k"] = h.k;
    if (!h.family.empty()) j["family"] = h.family;
    return j;
}

Json sep_json(const Sep& e) { return Json::array({to_list(e.a), to_list(e.b)}); }

Id sep_id(const GraphSystem& s, const nlohmann::json& j) {
    Sep e{from_list(j.at(0).get<std::vector<int>>()), from_list(j.at(1).get<std::vector<int>>())};
    auto id = s.find(e);
    if (!id) throw Error(ErrorKind::ParseError, sep_str(e) + " is not in the system");
    return *id;
}

template <class F>
auto parsed(const std::string& text, F&& f) {
    try {
        return f(nlohmann::json::parse(text));
    } catch (const nlohmann::json::exception& e) {
        throw Error(ErrorKind::ParseError, e.what());
    }
}

std::string dump(const Json& j) {
    if (!j.is_object()) return j.dump() + "\n";
    std::string out = "{\n";
    std::size_t i = 0;
    for (const auto& [key, v] : j.items()) {
        out += "  " + Json(key).dump() + ": ";
        if (v.is_array() && !v.empty()) {
            out += "[\n";
            for (std::size_t e = 0; e < v.size(); ++e) out += "    " + v[e].dump() + (e + 1 < v.size() ? ",\n" : "\n");
            out += "  ]";
        } else {
            out += v.dump();
        }
        out += ++i < j.size() ? ",\n" : "\n";
    }
    return out + "}\n";
}

}  // namespace

std::string line_format(const std::string& json_text) {
    try {
        return dump(Json::parse(json_text));
    } catch (const nlohmann::json::exception& e) {
        throw Error(ErrorKind::ParseError, e.what());
    }
}

std::string read_text(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw Error(ErrorKind::ParseError, "cannot open " + path);
    std::stringstream ss;
    ss << f.rdbuf();
    return ss.str();
}

void write_text(const std::string& path, const std::string& text) {
    std::ofstream f(path, std::ios::binary);
    if (!f) throw Error(ErrorKind::ParseError, "cannot write " + path);
    f << text;
}

std::string system_to_json(const GraphSystem& s, const Header& h) {
    Json j = head(h);
    j["members"] = Json::array();
    for (std::size_t m = 0; m < s.member_count(); ++m) j["members"].push_back(sep_json(s.elem(s.rep(static_cast<int>(m)))));
    return dump(j);
}

std::string tangles_to_json(const GraphSystem& s, const TangleSet& ts, const Header& h) {
    Json j = head(h);
    j["members"] = Json::array();
    for (std::size_t m = 0; m < s.member_count(); ++m) j["members"].push_back(sep_json(s.elem(s.rep(static_cast<int>(m)))));
    j["tangles"] = Json::array();
    for (std::size_t t = 0; t < ts.size(); ++t) {
        Json row;
        auto key = choice_key(s, ts[t]);
        std::string bits;
        for (char c : key) bits += c ? '1' : '0';
        row["choice"] = bits;
        if (t < ts.flags.size()) {
            const auto& f = ts.flags[t];
            row["consistent"] = f.consistent;
            row["profile"] = f.profile;
            row["regular"] = f.regular;
            row["f_avoiding"] = f.f_avoiding;
        }
        j["tangles"].push_back(row);
    }
    return dump(j);
}

TangleSet tangles_from_json(const GraphSystem& s, const std::string& text) {
    return parsed(text, [&](const nlohmann::json& j) {
        const auto& members = j.at("members");
        if (members.size() != s.member_count()) throw Error(ErrorKind::ParseError, "member count differs from the system");
        std::vector<Id> reps;
        for (const auto& m : members) {
            Id r = sep_id(s, m);
            if (s.rep(s.member(r)) != r) throw Error(ErrorKind::ParseError, "member not in canonical form");
            reps.push_back(r);
        }
        TangleSet ts;
        for (const auto& row : j.at("tangles")) {
            auto bits = row.at("choice").get<std::string>();
            if (bits.size() != reps.size()) throw Error(ErrorKind::ParseError, "choice length differs from member count");
            std::vector<Id> ids;
            for (std::size_t i = 0; i < reps.size(); ++i) {
                if (bits[i] != '0' && bits[i] != '1') throw Error(ErrorKind::ParseError, "choice must be 0/1");
                ids.push_back(bits[i] == '0' ? reps[i] : s.inv(reps[i]));
            }
            ts.tangles.push_back(orientation_from(s, ids));
            TangleFlags f;
            f.consistent = row.value("consistent", false);
            f.profile = row.value("profile", false);
            f.regular = row.value("regular", false);
            f.f_avoiding = row.value("f_avoiding", false);
            ts.flags.push_back(f);
        }
        return ts;
    });
}

std::string nested_to_json(const GraphSystem& s, const NestedSet& n, const Header& h,
                           const std::map<int, std::pair<int, int>>& pair_of) {
    Json j = head(h);
    j["separations"] = Json::array();
    for (int m : canonical(n)) {
        Json row;
        row["sep"] = sep_json(s.elem(s.rep(m)));
        row["order"] = s.order(s.rep(m));
        if (auto it = pair_of.find(m); it != pair_of.end()) row["pair"] = {it->second.first, it->second.second};
        j["separations"].push_back(row);
    }
    return dump(j);
}

NestedSet nested_from_json(const GraphSystem& s, const std::string& text) {
    return parsed(text, [&](const nlohmann::json& j) {
        NestedSet n;
        for (const auto& row : j.at("separations")) n.push_back(s.member(sep_id(s, row.at("sep"))));
        n = canonical(n);
        check_nested(s, n);
        return n;
    });
}

std::string stars_to_json(const GraphSystem& s, const std::vector<std::vector<Id>>& stars, const Header& h) {
    Json j = head(h);
    j["stars"] = Json::array();
    for (const auto& st : stars) {
        Json row = Json::array();
        for (Id x : st) row.push_back(sep_json(s.elem(x)));
        j["stars"].push_back(row);
    }
    return dump(j);
}

std::vector<std::vector<Id>> stars_from_json(const GraphSystem& s, const std::string& text) {
    return parsed(text, [&](const nlohmann::json& j) {
        std::vector<std::vector<Id>> out;
        for (const auto& row : j.at("stars")) {
            std::vector<Id> st;
            for (const auto& x : row) st.push_back(sep_id(s, x));
            std::sort(st.begin(), st.end());
            if (!is_star(s, st)) throw Error(ErrorKind::ParseError, "listed set is not a star");
            out.push_back(st);
        }
        return out;
    });
}

std::string td_file(const TreeDecomposition& td, const Header& h) {
    Json j = head(h);
    auto body = Json::parse(td_to_json(td));
    j["nodes"] = body["nodes"];
    j["edges"] = body["edges"];
    return dump(j);
}

}  // namespace tot
