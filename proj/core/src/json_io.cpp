#include "kgraph/json_io.hpp"

#include <algorithm>
#include <sstream>

namespace kgraph {

DocumentError::DocumentError(std::vector<Violation> problems)
    : InputError([&] {
          std::string msg = "malformed graph document";
          for (const auto& p : problems) msg += "\n  " + p.where + ": " + p.message;
          return msg;
      }()),
      problems_(std::move(problems)) {}

namespace {

std::string line_column(std::string_view text, std::size_t byte) {
    std::size_t line = 1, column = 1;
    for (std::size_t i = 0; i < std::min(byte, text.size()); ++i) {
        if (text[i] == '\n') {
            ++line;
            column = 1;
        } else {
            ++column;
        }
    }
    return "line " + std::to_string(line) + ", column " + std::to_string(column);
}

class FieldReader {
public:
    std::vector<Violation> problems;

    const nlohmann::json* member(const nlohmann::json& obj, const std::string& at, const std::string& key,
                                 bool required = true) {
        auto it = obj.find(key);
        if (it == obj.end()) {
            if (required) problems.push_back({"missing", at + "/" + key, "required field is missing"});
            return nullptr;
        }
        return &*it;
    }

    bool expect(const nlohmann::json& v, const std::string& at, bool ok, const char* what) {
        if (!ok) problems.push_back({"type", at, std::string("expected ") + what + ", got " + v.type_name()});
        return ok;
    }

    std::string string_at(const nlohmann::json& obj, const std::string& at, const std::string& key) {
        const auto* v = member(obj, at, key);
        if (v && expect(*v, at + "/" + key, v->is_string(), "a string")) return v->get<std::string>();
        return {};
    }

    int int_at(const nlohmann::json& obj, const std::string& at, const std::string& key) {
        const auto* v = member(obj, at, key);
        if (!v || !expect(*v, at + "/" + key, v->is_number_integer(), "an integer")) return 0;
        const auto n = v->get<std::int64_t>();
        if (n < -1'000'000 || n > 1'000'000) {
            problems.push_back({"range", at + "/" + key, "integer out of range"});
            return 0;
        }
        return static_cast<int>(n);
    }

    std::array<std::string, 2> id_pair(const nlohmann::json& obj, const std::string& at, const std::string& key) {
        std::array<std::string, 2> out;
        const auto* v = member(obj, at, key);
        if (!v || !expect(*v, at + "/" + key, v->is_array() && v->size() == 2, "an array of two edge ids")) return out;
        for (std::size_t i = 0; i < 2; ++i) {
            const auto& item = (*v)[i];
            if (expect(item, at + "/" + key + "/" + std::to_string(i), item.is_string(), "a string")) {
                out[i] = item.get<std::string>();
            }
        }
        return out;
    }
};

}  // namespace

GraphInput parse_graph_document(std::string_view text, const std::string& fallback_name) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        std::string what = e.what();
        if (auto colon = what.rfind(": "); colon != std::string::npos) what = what.substr(colon + 2);
        throw DocumentError({{"syntax", line_column(text, e.byte == 0 ? 0 : e.byte - 1), what}});
    }
    FieldReader rd;
    GraphInput out;
    out.name = fallback_name;
    if (!doc.is_object()) {
        throw DocumentError({{"type", "/", std::string("expected an object, got ") + doc.type_name()}});
    }
    if (const auto* name = rd.member(doc, "", "name", false);
        name && rd.expect(*name, "/name", name->is_string(), "a string")) {
        out.name = name->get<std::string>();
    }
    out.skeleton.rank = rd.int_at(doc, "", "k");
    if (const auto* vs = rd.member(doc, "", "vertices"); vs && rd.expect(*vs, "/vertices", vs->is_array(), "an array")) {
        for (std::size_t i = 0; i < vs->size(); ++i) {
            const auto& v = (*vs)[i];
            if (rd.expect(v, "/vertices/" + std::to_string(i), v.is_string(), "a string")) {
                out.skeleton.vertices.push_back(v.get<std::string>());
            }
        }
    }
    if (const auto* es = rd.member(doc, "", "edges"); es && rd.expect(*es, "/edges", es->is_array(), "an array")) {
        for (std::size_t i = 0; i < es->size(); ++i) {
            const auto& e = (*es)[i];
            const std::string at = "/edges/" + std::to_string(i);
            if (!rd.expect(e, at, e.is_object(), "an object")) continue;
            out.skeleton.edges.push_back(
                {rd.string_at(e, at, "id"), rd.int_at(e, at, "color"), rd.string_at(e, at, "range"),
                 rd.string_at(e, at, "source")});
        }
    }
    if (const auto* sq = rd.member(doc, "", "squares", false);
        sq && rd.expect(*sq, "/squares", sq->is_array(), "an array")) {
        for (std::size_t i = 0; i < sq->size(); ++i) {
            const auto& s = (*sq)[i];
            const std::string at = "/squares/" + std::to_string(i);
            if (!rd.expect(s, at, s.is_object(), "an object")) continue;
            out.squares.squares.push_back({rd.id_pair(s, at, "pair"), rd.id_pair(s, at, "image")});
        }
    }
    if (!rd.problems.empty()) throw DocumentError(std::move(rd.problems));
    return out;
}

Json graph_document(const GraphInput& input) {
    std::vector<std::string> vertices = input.skeleton.vertices;
    std::sort(vertices.begin(), vertices.end());
    std::vector<EdgeRecord> edges = input.skeleton.edges;
    std::sort(edges.begin(), edges.end(), [](const EdgeRecord& a, const EdgeRecord& b) { return a.id < b.id; });
    std::vector<SquareEntry> squares = input.squares.squares;
    std::sort(squares.begin(), squares.end(),
              [](const SquareEntry& a, const SquareEntry& b) { return a.pair < b.pair; });

    Json doc;
    doc["name"] = input.name;
    doc["k"] = input.skeleton.rank;
    doc["vertices"] = vertices;
    doc["edges"] = Json::array();
    for (const auto& e : edges) {
        doc["edges"].push_back({{"id", e.id}, {"color", e.color}, {"range", e.range}, {"source", e.source}});
    }
    doc["squares"] = Json::array();
    for (const auto& s : squares) doc["squares"].push_back({{"pair", s.pair}, {"image", s.image}});
    return doc;
}

std::string dump_document(const Json& doc) { return doc.dump(2) + "\n"; }

Json degree_json(const Degree& d) {
    Json out = Json::array();
    for (auto c : d.coords()) out.push_back(c);
    return out;
}

Json path_json(const KGraph& g, const Path& p) {
    Json edges = Json::array();
    for (EdgeIndex e : p.edges()) edges.push_back(g.skeleton().edge(e).id);
    return {{"range", g.skeleton().vertex_id(p.range())}, {"edges", std::move(edges)}};
}

Json vertex_set_json(const KGraph& g, const VertexSet& s) { return s.ids(g); }

Json violations_json(const ValidationReport& report) {
    Json out = Json::array();
    for (const auto& v : report.violations()) {
        out.push_back({{"kind", v.kind}, {"where", v.where}, {"message", v.message}});
    }
    return out;
}

Json witness_json(const KGraph& g, const AperiodicityWitness& w) {
    return {{"vertex", g.skeleton().vertex_id(w.vertex)}, {"m", degree_json(w.m)},
            {"n", degree_json(w.n)},                    {"lambda", path_json(g, w.lambda)},
            {"segment_m", path_json(g, w.segment_m)},   {"segment_n", path_json(g, w.segment_n)}};
}

Json tuple_json(const KGraph& g, const PeriodicityTuple& t) {
    return {{"vertex", g.skeleton().vertex_id(t.vertex)}, {"m", degree_json(t.m)},
            {"n", degree_json(t.n)},                    {"mu", path_json(g, t.mu)},
            {"alpha", path_json(g, t.alpha)},           {"nu", path_json(g, t.nu)}};
}

Json rep_element_json(const KGraph& g, const RepElement& a) {
    return {{"left", path_json(g, a.left)},
            {"right", path_json(g, a.right)},
            {"left_degree", degree_json(a.left.degree())},
            {"right_degree", degree_json(a.right.degree())},
            {"degrees_differ", a.left.degree() != a.right.degree()}};
}

Json cofinality_json(const KGraph& g, const CofinalityResult& r) {
    Json out;
    out["verdict"] = r.cofinal ? "cofinal" : "not cofinal";
    if (r.witness) out["certificate"] = vertex_set_json(g, *r.witness);
    return out;
}

namespace {

const char* verdict_name(ScanVerdict v) {
    switch (v) {
        case ScanVerdict::periodic:
            return "periodic";
        case ScanVerdict::aperiodic_up_to_bound:
            return "aperiodic up to bound";
        case ScanVerdict::inconclusive:
            return "inconclusive";
    }
    return "";
}

const char* decision_name(Decision d) {
    switch (d) {
        case Decision::periodic:
            return "periodic";
        case Decision::aperiodic:
            return "aperiodic";
        case Decision::inconclusive:
            return "inconclusive";
    }
    return "";
}

Json signed_json(const std::vector<std::int64_t>& p) { return p; }

std::string signed_text(const std::vector<std::int64_t>& p) {
    std::string out = "(";
    for (std::size_t i = 0; i < p.size(); ++i) out += (i ? "," : "") + std::to_string(p[i]);
    return out + ")";
}

}  // namespace

Json scan_json(const KGraph& g, const ScanResult& r, bool with_entries) {
    Json out;
    out["verdict"] = verdict_name(r.verdict);
    out["bound"] = r.bound;
    switch (r.verdict) {
        case ScanVerdict::periodic:
            out["summary"] = "locally periodic at " + g.skeleton().vertex_id(r.hit->vertex) + " with p = " +
                             signed_text(r.hit->p);
            break;
        case ScanVerdict::aperiodic_up_to_bound:
            out["summary"] = "aperiodic up to bound " + std::to_string(r.bound);
            break;
        case ScanVerdict::inconclusive:
            out["summary"] = "inconclusive at bound " + std::to_string(r.bound);
            break;
    }
    out["checked"] = r.entries.size();
    if (r.hit) {
        out["hit"] = {{"vertex", g.skeleton().vertex_id(r.hit->vertex)}, {"p", signed_json(r.hit->p)}};
    }
    if (r.tuple) {
        out["tuple"] = tuple_json(g, *r.tuple);
        out["rep_element"] = rep_element_json(g, RepElement::make(g.compose(r.tuple->mu, r.tuple->alpha),
                                                                  g.compose(r.tuple->nu, r.tuple->alpha)));
    }
    if (with_entries) {
        Json entries = Json::array();
        for (const ScanEntry& e : r.entries) {
            Json item{{"vertex", g.skeleton().vertex_id(e.vertex)},
                      {"p", signed_json(e.p)},
                      {"decision", decision_name(e.decision)}};
            if (e.witness) item["witness"] = witness_json(g, *e.witness);
            entries.push_back(std::move(item));
        }
        out["entries"] = std::move(entries);
    }
    return out;
}

Json simplicity_json(const SimplicityResult& r) {
    const char* tag = "";
    switch (r.verdict) {
        case SimpleVerdict::simple_up_to_bound:
            tag = "simple up to bound";
            break;
        case SimpleVerdict::not_simple_not_cofinal:
            tag = "not simple (not cofinal)";
            break;
        case SimpleVerdict::not_simple_locally_periodic:
            tag = "not simple (locally periodic)";
            break;
        case SimpleVerdict::inconclusive_at_bound:
            tag = "inconclusive at bound";
            break;
    }
    return {{"verdict", tag}, {"bound", r.bound}, {"summary", describe(r.verdict, r.bound)}};
}

Json gauge_json(const KGraph& g, const GaugeResult& r) {
    Json out;
    switch (r.verdict) {
        case GaugeVerdict::all_gauge_invariant_up_to_bound:
            out["verdict"] = "all gauge-invariant up to bound";
            break;
        case GaugeVerdict::not_all_gauge_invariant:
            out["verdict"] = "not all gauge-invariant";
            break;
        case GaugeVerdict::inconclusive_at_bound:
            out["verdict"] = "inconclusive at bound";
            break;
    }
    out["bound"] = r.bound;
    out["summary"] = describe(r.verdict, r.bound);
    if (r.offending) out["offending_set"] = vertex_set_json(g, r.rows[*r.offending].h);
    Json rows = Json::array();
    for (const QuotientRow& row : r.rows) {
        // the quotient graph names its vertices with the original ids
        KGraph q = quotient(g, row.h);
        Json item;
        item["set"] = vertex_set_json(g, row.h);
        item["quotient_vertices"] = row.quotient_vertices;
        item["scan"] = scan_json(q, row.scan, false);
        rows.push_back(std::move(item));
    }
    out["quotients"] = std::move(rows);
    return out;
}

namespace {

bool is_scalar_array(const Json& v) {
    return v.is_array() && std::all_of(v.begin(), v.end(), [](const Json& x) { return !x.is_structured(); });
}

std::string scalar_text(const Json& v) {
    if (v.is_string()) return v.get<std::string>();
    if (is_scalar_array(v)) {
        std::string out = "[";
        for (std::size_t i = 0; i < v.size(); ++i) out += (i ? ", " : "") + scalar_text(v[i]);
        return out + "]";
    }
    return v.dump();
}

void render(const Json& v, const std::string& indent, std::ostringstream& os);

void render_member(const std::string& key, const Json& v, const std::string& indent, std::ostringstream& os) {
    if (!v.is_structured() || is_scalar_array(v)) {
        os << indent << key << ": " << scalar_text(v) << "\n";
    } else if (v.empty()) {
        os << indent << key << ": " << (v.is_array() ? "[]" : "{}") << "\n";
    } else {
        os << indent << key << ":\n";
        render(v, indent + "  ", os);
    }
}

void render(const Json& v, const std::string& indent, std::ostringstream& os) {
    if (v.is_object()) {
        for (auto it = v.begin(); it != v.end(); ++it) render_member(it.key(), it.value(), indent, os);
    } else if (v.is_array()) {
        for (const Json& item : v) {
            if (item.is_object() && !item.empty()) {
                std::ostringstream inner;
                render(item, indent + "  ", inner);
                std::string text = inner.str();
                text.replace(indent.size(), 2, "- ");
                os << text;
            } else if (!item.is_structured() || is_scalar_array(item) || item.empty()) {
                os << indent << "- " << (item.is_structured() && item.empty() ? (item.is_array() ? "[]" : "{}")
                                                                             : scalar_text(item))
                   << "\n";
            } else {
                os << indent << "-\n";
                render(item, indent + "  ", os);
            }
        }
    } else {
        os << indent << scalar_text(v) << "\n";
    }
}

}  // namespace

std::string render_text(const Json& doc) {
    std::ostringstream os;
    render(doc, "", os);
    return os.str();
}

}  // namespace kgraph
