#include "arrangis/io.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <numeric>
#include <sstream>

#include "arrangis/errors.hpp"

namespace arrangis {

Json parse_json_text(const std::string& text, const std::string& what) {
    try {
        return Json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw InputError("malformed JSON in " + what + ": " + e.what());
    }
}

namespace {

CyclotomicNumber coeff_from_json(const Json& j, unsigned order) {
    if (j.is_string()) return CyclotomicNumber::from_rational(order, Rational::parse(j.get<std::string>()));
    if (j.is_number_integer())
        return CyclotomicNumber::from_rational(order, Rational(j.get<long>()));
    if (j.is_array()) {
        std::vector<Rational> coeffs;
        for (const auto& item : j) {
            if (!item.is_string()) throw InputError("coefficient arrays hold rational strings");
            coeffs.push_back(Rational::parse(item.get<std::string>()));
        }
        if (coeffs.size() > cyclotomic_degree(order))
            throw InputError("coefficient array longer than the field degree");
        return CyclotomicNumber::from_coeffs(order, std::move(coeffs));
    }
    throw InputError("coefficient must be a rational string or an array of them");
}

Json coeff_to_json(const CyclotomicNumber& z) {
    if (z.is_rational()) return z.rational_value().to_string();
    Json arr = Json::array();
    for (const auto& c : z.coeffs()) arr.push_back(c.to_string());
    return arr;
}

}  // namespace

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InputError("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

Arrangement arrangement_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("cyclotomic_order") || !j.contains("lines"))
        throw InputError("arrangement file needs 'cyclotomic_order' and 'lines'");
    Arrangement a;
    if (!j["cyclotomic_order"].is_number_unsigned() || j["cyclotomic_order"].get<unsigned>() < 1)
        throw InputError("'cyclotomic_order' must be a positive integer");
    a.order = j["cyclotomic_order"].get<unsigned>();
    for (const auto& line : j["lines"]) {
        if (!line.contains("label") || !line.contains("coeffs") || line["coeffs"].size() != 3)
            throw InputError("each line needs a 'label' and three 'coeffs'");
        ProjectiveLine pl;
        pl.label = line["label"].get<std::string>();
        for (int i = 0; i < 3; ++i) pl.coeffs[i] = coeff_from_json(line["coeffs"][i], a.order);
        a.lines.push_back(std::move(pl));
    }
    require_valid(a);
    return a;
}

Json arrangement_to_json(const Arrangement& a) {
    Json j;
    j["cyclotomic_order"] = a.order;
    Json lines = Json::array();
    for (const auto& l : a.lines) {
        Json line;
        line["label"] = l.label;
        Json coeffs = Json::array();
        for (const auto& c : l.coeffs) coeffs.push_back(coeff_to_json(c));
        line["coeffs"] = std::move(coeffs);
        lines.push_back(std::move(line));
    }
    j["lines"] = std::move(lines);
    return j;
}

Arrangement load_arrangement(const std::string& path) {
    return arrangement_from_json(parse_json_text(read_file(path), path));
}

Character character_from_json(const Json& j, const Combinatorics& c) {
    if (!j.is_object() || !j.contains("exponents"))
        throw InputError("character file needs an 'exponents' map");
    std::map<std::string, Rational> exps;
    for (const auto& [label, value] : j["exponents"].items()) {
        if (!value.is_string()) throw InputError("exponents are rational strings");
        exps[label] = Rational::parse(value.get<std::string>());
    }
    Character xi = Character::from_exponents(c, exps);
    if (j.contains("order")) {
        const unsigned n = j["order"].get<unsigned>();
        for (const auto& v : xi.values)
            if (!v.order().fits_ulong_p() || n % v.order().get_ui() != 0)
                throw InputError("character value of order " + v.order().get_str() +
                                 " does not divide the declared order " + std::to_string(n));
    }
    return xi;
}

Json character_to_json(const Combinatorics& c, const Character& xi) {
    unsigned long n = 1;
    for (const auto& v : xi.values) n = std::lcm(n, v.order().get_ui());
    Json j;
    j["order"] = n;
    Json exps;
    for (std::size_t i = 0; i < c.lines.size(); ++i) exps[c.lines[i]] = xi.values[i].to_string();
    j["exponents"] = std::move(exps);
    return j;
}

unsigned character_order_bound(const Json& j) {
    if (j.contains("order")) return j["order"].get<unsigned>();
    throw InputError("character file has no 'order'");
}

Cycle cycle_from_string(std::string_view text, const Combinatorics& c) {
    std::vector<std::string> tokens;
    std::string tok;
    for (char ch : text) {
        if (ch == ',') {
            tokens.push_back(tok);
            tok.clear();
        } else if (!isspace(static_cast<unsigned char>(ch))) {
            tok.push_back(ch);
        }
    }
    tokens.push_back(tok);
    if (tokens.size() < 6 || tokens.size() % 2 != 0)
        throw InputError("cycle must alternate lines and points: L,P,L,P,... (even length >= 6)");
    Cycle cycle;
    const int r = static_cast<int>(tokens.size()) / 2;
    for (int i = 0; i < r; ++i) {
        const int line = c.line_index(tokens[2 * i]);
        if (line < 0) throw InputError("cycle names unknown line " + tokens[2 * i]);
        cycle.lines.push_back(line);
    }
    for (int i = 0; i < r; ++i) {
        const std::string& ptok = tokens[2 * i + 1];
        const int la = cycle.lines[i], lb = cycle.lines[(i + 1) % r];
        const int joining = c.point_through(la, lb);
        if (ptok == "*") {
            if (joining < 0)
                throw InputError("no point joins " + c.lines[la] + " and " + c.lines[lb]);
            cycle.points.push_back(joining);
            continue;
        }
        int found = -1;
        for (std::size_t p = 0; p < c.points.size(); ++p)
            if (c.point_id(static_cast<int>(p)) == ptok) found = static_cast<int>(p);
        if (found < 0) throw InputError("cycle names unknown point " + ptok);
        if (found != joining)
            throw InputError("point " + ptok + " does not join " + c.lines[la] + " and " + c.lines[lb]);
        cycle.points.push_back(found);
    }
    validate_cycle(c, cycle);
    return cycle;
}

Json cycle_to_json(const Combinatorics& c, const Cycle& cycle) {
    Json arr = Json::array();
    for (int i = 0; i < cycle.length(); ++i) {
        arr.push_back(c.lines[cycle.lines[i]]);
        arr.push_back(c.point_id(cycle.points[i]));
    }
    return arr;
}

Json combinatorics_to_json(const Combinatorics& c) {
    Json j;
    j["lines"] = c.lines;
    Json pts = Json::array();
    for (const auto& p : c.points) {
        Json members = Json::array();
        for (int l : p) members.push_back(c.lines[l]);
        pts.push_back(std::move(members));
    }
    j["points"] = std::move(pts);
    return j;
}

Combinatorics combinatorics_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("lines") || !j.contains("points"))
        throw InputError("combinatorics needs 'lines' and 'points'");
    Combinatorics c;
    for (const auto& l : j["lines"]) c.lines.push_back(l.get<std::string>());
    for (const auto& p : j["points"]) {
        std::vector<int> members;
        for (const auto& l : p) {
            const int idx = c.line_index(l.get<std::string>());
            if (idx < 0) throw InputError("point names unknown line " + l.get<std::string>());
            members.push_back(idx);
        }
        std::sort(members.begin(), members.end());
        c.points.push_back(std::move(members));
    }
    require_valid(c);
    return c;
}

Json wiring_to_json(const WiringDiagram& w) {
    Json j;
    j["strands"] = w.strands;
    j["labels"] = w.initial_labels;
    Json events = Json::array();
    for (const auto& ev : w.events) {
        if (std::holds_alternative<BraidWord>(ev)) {
            Json e;
            e["braid"] = std::get<BraidWord>(ev).letters;
            events.push_back(std::move(e));
        } else {
            const auto& s = std::get<SingularEvent>(ev);
            Json e;
            e["point"] = s.point_id;
            e["range"] = {s.lo, s.hi};
            events.push_back(std::move(e));
        }
    }
    j["events"] = std::move(events);
    return j;
}

WiringDiagram wiring_from_json(const Json& j) {
    WiringDiagram w;
    w.strands = j.at("strands").get<int>();
    for (const auto& l : j.at("labels")) w.initial_labels.push_back(l.get<std::string>());
    for (const auto& e : j.at("events")) {
        if (e.contains("braid")) {
            BraidWord b;
            b.strands = w.strands;
            for (const auto& l : e["braid"]) b.letters.push_back(l.get<int>());
            w.events.emplace_back(std::move(b));
        } else {
            SingularEvent s;
            s.point_id = e.at("point").get<std::string>();
            s.lo = e.at("range")[0].get<int>();
            s.hi = e.at("range")[1].get<int>();
            w.events.emplace_back(std::move(s));
        }
    }
    normalize_events(w);
    w.validate();
    return w;
}

Json invariant_result_to_json(const InvariantResult& r) {
    Json j;
    j["value"] = r.value.to_string();
    Json witness;
    for (const auto& [label, coeff] : r.witness.support()) witness[label] = coeff;
    j["witness"] = std::move(witness);
    j["seed"] = r.seed;
    return j;
}

Json depth_report_to_json(const DepthReport& r) {
    Json j;
    j["components"] = r.components;
    j["self_intersections"] = r.self_intersections;
    Json forest = Json::array();
    for (const auto& [from, to] : r.forest) forest.push_back({from, to});
    j["forest"] = std::move(forest);
    Json edges = Json::array();
    for (const auto& e : r.nontree) {
        Json edge;
        edge["from"] = e.from;
        edge["to"] = e.to;
        edge["value"] = e.value.to_string();
        edges.push_back(std::move(edge));
    }
    j["edges"] = std::move(edges);
    j["matrix_order"] = r.a_xi.order;
    Json matrix = Json::array();
    for (std::size_t i = 0; i < r.a_xi.size; ++i) {
        Json row = Json::array();
        for (std::size_t k = 0; k < r.a_xi.size; ++k) {
            Json entry = Json::array();
            for (const auto& c : r.a_xi.at(i, k).coeffs()) entry.push_back(c.to_string());
            row.push_back(std::move(entry));
        }
        matrix.push_back(std::move(row));
    }
    j["matrix"] = std::move(matrix);
    j["depth"] = r.depth;
    return j;
}

Json inner_cyclic_hits_to_json(const Combinatorics& c, unsigned order,
                               const std::vector<InnerCyclicHit>& hits) {
    Json j;
    j["order"] = order;
    j["count"] = hits.size();
    Json chars = Json::array();
    for (const auto& hit : hits) {
        Json h;
        Json exps;
        for (std::size_t i = 0; i < c.lines.size(); ++i) exps[c.lines[i]] = hit.xi.values[i].to_string();
        h["exponents"] = std::move(exps);
        h["cycle"] = cycle_to_json(c, hit.witness);
        chars.push_back(std::move(h));
    }
    j["characters"] = std::move(chars);
    return j;
}

}  // namespace arrangis
