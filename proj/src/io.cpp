#include "bpl/io.hpp"

#include "bpl/error.hpp"

#include <fstream>
#include <set>
#include <sstream>

namespace bpl {

namespace {

[[noreturn]] void schema(const std::string& field, const std::string& msg) {
    throw Error(ErrorKind::Schema, "field '" + field + "': " + msg);
}

std::string sub(const std::string& path, const std::string& key) { return path.empty() ? key : path + "." + key; }
std::string idx(const std::string& path, size_t i) { return path + "[" + std::to_string(i) + "]"; }

const Json& need(const Json& j, const std::string& key, const std::string& path) {
    if (!j.is_object()) schema(path.empty() ? "<root>" : path, "expected an object");
    auto it = j.find(key);
    if (it == j.end()) schema(sub(path, key), "missing");
    return *it;
}

void allow_only(const Json& j, const std::set<std::string>& keys, const std::string& path) {
    for (auto it = j.begin(); it != j.end(); ++it)
        if (!keys.count(it.key())) schema(sub(path, it.key()), "unknown field");
}

long as_int(const Json& j, const std::string& field, long min = 0) {
    if (!j.is_number_integer()) schema(field, "expected an integer");
    const long v = j.get<long>();
    if (v < min) schema(field, "must be >= " + std::to_string(min));
    return v;
}

int get_int(const Json& j, const std::string& key, const std::string& path, long min = 0) {
    return static_cast<int>(as_int(need(j, key, path), sub(path, key), min));
}

std::string as_string(const Json& j, const std::string& field) {
    if (!j.is_string()) schema(field, "expected a string");
    return j.get<std::string>();
}

bool get_bool(const Json& j, const std::string& key, const std::string& path, bool dflt) {
    auto it = j.find(key);
    if (it == j.end()) return dflt;
    if (!it->is_boolean()) schema(sub(path, key), "expected a boolean");
    return it->get<bool>();
}

Rat as_rat(const Json& j, const std::string& field) {
    if (j.is_number_integer()) return Rat(j.get<long>());
    if (!j.is_string()) schema(field, "expected a rational as integer or \"p/q\" string");
    try {
        return parse_rat(j.get<std::string>());
    } catch (const std::exception& e) {
        schema(field, e.what());
    }
}

std::array<int, 3> triple(const Json& j, const std::string& field) {
    if (!j.is_array() || j.size() != 3) schema(field, "expected [a, b, c]");
    return {static_cast<int>(as_int(j[0], idx(field, 0))), static_cast<int>(as_int(j[1], idx(field, 1))),
            static_cast<int>(as_int(j[2], idx(field, 2)))};
}

std::vector<std::array<int, 3>> triples(const Json& j, const std::string& field) {
    if (!j.is_array()) schema(field, "expected a list of triples");
    std::vector<std::array<int, 3>> out;
    for (size_t i = 0; i < j.size(); ++i) out.push_back(triple(j[i], idx(field, i)));
    return out;
}

template <typename F>
auto with_field(const std::string& field, F&& f) {
    try {
        return f();
    } catch (const Error& e) {
        if (e.kind() == ErrorKind::Schema) schema(field, e.what());
        throw;
    }
}

Json point_json(const Point& p) { return Json::array({to_string(p.x), to_string(p.y)}); }

Point point_from(const Json& j, const std::string& field) {
    if (!j.is_array() || j.size() != 2) schema(field, "expected [x, y]");
    return {as_rat(j[0], idx(field, 0)), as_rat(j[1], idx(field, 1))};
}

Json pos_json(const LoopPos& p) { return Json{{"seg", p.seg}, {"t", to_string(p.t)}}; }

LoopPos pos_from(const Json& j, const std::string& path) {
    return {get_int(j, "seg", path), as_rat(need(j, "t", path), sub(path, "t"))};
}

Json token_json(const PlacedToken& t) {
    return Json{{"kind", kind_name(t.token.kind)}, {"traversal", t.token.traversal}, {"pos", pos_json(t.pos)},
                {"site", t.site}};
}

PlacedToken token_from(const Json& j, const std::string& path) {
    allow_only(j, {"kind", "traversal", "pos", "site"}, path);
    PlacedToken t;
    const std::string kf = sub(path, "kind");
    t.token.kind = with_field(kf, [&] { return parse_kind(as_string(need(j, "kind", path), kf)); });
    t.token.traversal = get_int(j, "traversal", path, -1);
    if (t.token.traversal != 1 && t.token.traversal != -1) schema(sub(path, "traversal"), "must be +1 or -1");
    t.pos = pos_from(need(j, "pos", path), sub(path, "pos"));
    if (j.contains("site")) t.site = as_string(j["site"], sub(path, "site"));
    return t;
}

Json tokens_json(const std::vector<PlacedToken>& ts) {
    Json a = Json::array();
    for (const auto& t : ts) a.push_back(token_json(t));
    return a;
}

std::vector<PlacedToken> tokens_from(const Json& j, const std::string& field) {
    if (!j.is_array()) schema(field, "expected a list");
    std::vector<PlacedToken> out;
    for (size_t i = 0; i < j.size(); ++i) out.push_back(token_from(j[i], idx(field, i)));
    return out;
}

int orientation_from(const Json& j, const std::string& key, const std::string& path) {
    const int o = get_int(j, key, path, -1);
    if (o != 1 && o != -1) schema(sub(path, key), "must be +1 or -1");
    return o;
}

Label label_from(const Json& j, const std::string& field) {
    return with_field(field, [&] { return parse_label(as_string(j, field)); });
}

Json sphere_json(const MatchingPath& m) {
    return Json{{"name", m.name}, {"path", to_json(m.path)}, {"label", label_name(m.label)},
                {"orientation", m.orientation}};
}

MatchingPath sphere_from(const Json& j, const std::string& path) {
    allow_only(j, {"name", "path", "label", "orientation"}, path);
    MatchingPath m;
    m.name = as_string(need(j, "name", path), sub(path, "name"));
    m.path = loop_from_json(need(j, "path", path), sub(path, "path"));
    m.label = label_from(need(j, "label", path), sub(path, "label"));
    m.orientation = orientation_from(j, "orientation", path);
    return m;
}

const char* convention_name(TransportConvention c) {
    return c == TransportConvention::ChainPattern ? "chain" : "chain-twisted";
}

TransportConvention convention_from(const std::string& s, const std::string& field) {
    if (s == "chain") return TransportConvention::ChainPattern;
    if (s == "chain-twisted") return TransportConvention::ChainPatternTwisted;
    schema(field, "unknown convention '" + s + "'");
}

FiberedLagrangian build_custom(const Json& spec) {
    allow_only(spec, {"kind", "id", "loop", "tokens", "initial", "spheres", "a3", "convention"}, "");
    FiberedLagrangian L;
    L.builder = "custom";
    L.id = spec.contains("id") ? as_string(spec["id"], "id") : "custom";
    L.loop = loop_from_json(need(spec, "loop", ""), "loop");
    validate(L.loop);
    L.tokens = tokens_from(need(spec, "tokens", ""), "tokens");
    if (spec.contains("initial")) {
        const Json& ini = spec["initial"];
        L.initial.label = label_from(need(ini, "label", "initial"), "initial.label");
        L.initial.orientation = orientation_from(ini, "orientation", "initial");
    }
    if (spec.contains("spheres")) {
        const Json& sp = spec["spheres"];
        if (!sp.is_array()) schema("spheres", "expected a list");
        for (size_t i = 0; i < sp.size(); ++i) L.spheres.push_back(sphere_from(sp[i], idx("spheres", i)));
    }
    if (spec.contains("convention"))
        L.convention = convention_from(as_string(spec["convention"], "convention"), "convention");
    L.a3 = get_bool(spec, "a3", "", false);
    const int nseg = segment_count(L.loop);
    for (size_t i = 0; i < L.tokens.size(); ++i) {
        const auto& p = L.tokens[i].pos;
        if (p.seg < 0 || p.seg >= nseg || p.t < 0 || p.t >= 1)
            schema(idx("tokens", i) + ".pos", "outside the loop");
    }
    check_embedded(L);
    if (L.a3) check_a3(L);
    return L;
}

FiberedLagrangian build_fibered(const std::string& kind, const Json& spec, bool a3) {
    BuildOptions o;
    o.a3 = a3;
    if (kind == "T" || kind == "R" || kind == "S" || kind == "KleinT") {
        allow_only(spec, {"kind", "params", "a3"}, "");
        const Json& p = need(spec, "params", "");
        if (kind == "S") {
            allow_only(p, {"n", "p", "q"}, "params");
            return build_S(get_int(p, "n", "params"), get_int(p, "p", "params"), get_int(p, "q", "params"), o);
        }
        const int k = get_int(p, "k", "params"), l = get_int(p, "l", "params"), m = get_int(p, "m", "params");
        if (kind == "R") {
            allow_only(p, {"k", "l", "m"}, "params");
            return build_R(k, l, m, o);
        }
        allow_only(p, {"k", "l", "m", "left_delta", "right_delta"}, "params");
        o.left_delta = p.contains("left_delta") ? get_int(p, "left_delta", "params", -1) : 0;
        o.right_delta = p.contains("right_delta") ? get_int(p, "right_delta", "params", -1) : 0;
        if (kind == "KleinT") {
            if ((o.left_delta + o.right_delta) % 2 == 0)
                schema("params.left_delta", "a Klein variant needs an odd total winding change");
        }
        return build_T(k, l, m, o);
    }
    if (kind == "Lambda") {
        allow_only(spec, {"kind", "pieces"}, "");
        return build_Lambda(triples(need(spec, "pieces", ""), "pieces"));
    }
    if (kind == "zeta") {
        allow_only(spec, {"kind", "g", "t1", "t2"}, "");
        return build_zeta(get_int(spec, "g", ""), triple(need(spec, "t1", ""), "t1"), triple(need(spec, "t2", ""), "t2"));
    }
    if (kind == "Xi") {
        allow_only(spec, {"kind", "g", "pieces"}, "");
        return build_Xi(get_int(spec, "g", "", 1), triples(need(spec, "pieces", ""), "pieces"));
    }
    if (kind == "custom") return build_custom(spec);
    schema("kind", "unknown construction kind '" + kind + "'");
}

}  // namespace

const char* construction_kind_name(ConstructionKind k) {
    switch (k) {
        case ConstructionKind::Fibered: return "fibered";
        case ConstructionKind::Pair: return "pair";
        case ConstructionKind::Threefold: return "threefold";
    }
    return "unknown";
}

Json parse_json_text(const std::string& text, const std::string& source) {
    try {
        return Json::parse(text);
    } catch (const Json::parse_error& e) {
        size_t line = 1, col = 1;
        for (size_t i = 0; i < e.byte && i < text.size(); ++i) {
            if (text[i] == '\n') {
                ++line;
                col = 1;
            } else {
                ++col;
            }
        }
        throw Error(ErrorKind::Schema,
                    source + ":" + std::to_string(line) + ":" + std::to_string(col) + ": invalid JSON");
    }
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error(ErrorKind::Schema, "cannot read " + path);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

void write_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error(ErrorKind::Schema, "cannot write " + path);
    out << text;
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

Construction build_from_spec(const Json& spec, bool a3) {
    if (!spec.is_object()) schema("<root>", "expected an object");
    const std::string kind = as_string(need(spec, "kind", ""), "kind");
    const bool want_a3 = a3 || get_bool(spec, "a3", "", false);
    Construction c;
    c.spec = spec;
    if (kind == "TPair") {
        allow_only(spec, {"kind", "params"}, "");
        const Json& p = need(spec, "params", "");
        allow_only(p, {"k", "l", "m", "lambda"}, "params");
        c.kind = ConstructionKind::Pair;
        c.pair = build_T_pair(get_int(p, "k", "params"), get_int(p, "l", "params"), get_int(p, "m", "params"),
                              get_int(p, "lambda", "params", 1));
        return c;
    }
    if (kind == "gamma") {
        allow_only(spec, {"kind", "n", "xi", "r", "displaced"}, "");
        const Json& xs = need(spec, "xi", "");
        if (!xs.is_object() || xs.value("kind", "") != "Xi") schema("xi", "expected a Xi spec");
        const FiberedLagrangian Xi = build_fibered("Xi", xs, false);
        std::optional<long> r;
        if (spec.contains("r")) r = as_int(spec["r"], "r", 1);
        ThreefoldLagrangian T = build_gamma(get_int(spec, "n", ""), Xi, r);
        if (get_bool(spec, "displaced", "", true)) T = with_displaced_pair(T);
        c.kind = ConstructionKind::Threefold;
        c.notes.push_back("capacity: r >= " + std::to_string(T.budget.r_prime) + ", using r = " + std::to_string(T.r));
        c.threefold = std::move(T);
        return c;
    }
    c.kind = ConstructionKind::Fibered;
    c.fibered = build_fibered(kind, spec, want_a3);
    const CapacityBound cap = min_r(*c.fibered);
    c.notes.push_back("capacity: r >= " + std::to_string(cap.refined.value_or(cap.naive)));
    return c;
}

Json to_json(const BaseLoop& loop) {
    Json v = Json::array();
    for (const auto& p : loop.vertices) v.push_back(point_json(p));
    return Json{{"vertices", v}, {"closed", loop.closed}, {"orientation", loop.orientation}};
}

BaseLoop loop_from_json(const Json& j, const std::string& field) {
    BaseLoop loop;
    const Json& v = need(j, "vertices", field);
    if (!v.is_array()) schema(sub(field, "vertices"), "expected a list of points");
    for (size_t i = 0; i < v.size(); ++i) loop.vertices.push_back(point_from(v[i], idx(sub(field, "vertices"), i)));
    loop.closed = get_bool(j, "closed", field, true);
    loop.orientation = j.contains("orientation") ? orientation_from(j, "orientation", field) : 1;
    if (loop.vertices.size() < (loop.closed ? 3u : 2u)) schema(sub(field, "vertices"), "too few vertices");
    return loop;
}

Json to_json(const FiberedLagrangian& L) {
    Json j;
    j["id"] = L.id;
    j["builder"] = L.builder;
    j["params"] = L.params;
    j["loop"] = to_json(L.loop);
    j["tokens"] = tokens_json(L.tokens);
    j["initial"] = Json{{"label", label_name(L.initial.label)}, {"orientation", L.initial.orientation}};
    Json sp = Json::array();
    for (const auto& s : L.spheres) sp.push_back(sphere_json(s));
    j["spheres"] = sp;
    Json sm = Json::array();
    for (const auto& s : L.summands) sm.push_back(to_json(s));
    j["summands"] = sm;
    Json marks = Json::array();
    for (const auto& m : L.surgery_marks)
        marks.push_back(Json{{"piece_a", m.piece_a}, {"piece_b", m.piece_b}, {"matching", m.matching}, {"at", point_json(m.at)}});
    j["surgery_marks"] = marks;
    j["first_longitude"] = L.first_longitude
                               ? Json{{"loop", to_json(L.first_longitude->loop)}, {"corners", tokens_json(L.first_longitude->corners)}}
                               : Json(nullptr);
    if (L.area_assignment) {
        Json a = Json::array();
        for (const auto& x : *L.area_assignment) a.push_back(to_string(x));
        j["area_assignment"] = a;
    } else {
        j["area_assignment"] = nullptr;
    }
    j["kappa"] = L.kappa ? Json(to_string(*L.kappa)) : Json(nullptr);
    j["a3"] = L.a3;
    j["convention"] = convention_name(L.convention);
    return j;
}

FiberedLagrangian fibered_from_json(const Json& j, const std::string& field) {
    allow_only(j, {"id", "builder", "params", "loop", "tokens", "initial", "spheres", "summands", "surgery_marks",
                   "first_longitude", "area_assignment", "kappa", "a3", "convention"},
               field);
    FiberedLagrangian L;
    L.id = as_string(need(j, "id", field), sub(field, "id"));
    L.builder = as_string(need(j, "builder", field), sub(field, "builder"));
    const Json& p = need(j, "params", field);
    if (!p.is_object()) schema(sub(field, "params"), "expected an object");
    for (auto it = p.begin(); it != p.end(); ++it)
        L.params[it.key()] = static_cast<int>(as_int(it.value(), sub(sub(field, "params"), it.key()), -1000000));
    L.loop = loop_from_json(need(j, "loop", field), sub(field, "loop"));
    L.tokens = tokens_from(need(j, "tokens", field), sub(field, "tokens"));
    const Json& ini = need(j, "initial", field);
    L.initial.label = label_from(need(ini, "label", sub(field, "initial")), sub(field, "initial.label"));
    L.initial.orientation = orientation_from(ini, "orientation", sub(field, "initial"));
    const Json& sp = need(j, "spheres", field);
    for (size_t i = 0; i < sp.size(); ++i) L.spheres.push_back(sphere_from(sp[i], idx(sub(field, "spheres"), i)));
    const Json& sm = need(j, "summands", field);
    for (size_t i = 0; i < sm.size(); ++i) L.summands.push_back(fibered_from_json(sm[i], idx(sub(field, "summands"), i)));
    const Json& marks = need(j, "surgery_marks", field);
    for (size_t i = 0; i < marks.size(); ++i) {
        const std::string f = idx(sub(field, "surgery_marks"), i);
        SurgeryMark m;
        m.piece_a = get_int(marks[i], "piece_a", f);
        m.piece_b = get_int(marks[i], "piece_b", f);
        m.matching = as_string(need(marks[i], "matching", f), sub(f, "matching"));
        m.at = point_from(need(marks[i], "at", f), sub(f, "at"));
        L.surgery_marks.push_back(m);
    }
    const Json& lon = need(j, "first_longitude", field);
    if (!lon.is_null()) {
        const std::string f = sub(field, "first_longitude");
        L.first_longitude = Longitude{loop_from_json(need(lon, "loop", f), sub(f, "loop")),
                                      tokens_from(need(lon, "corners", f), sub(f, "corners"))};
    }
    const Json& area = need(j, "area_assignment", field);
    if (!area.is_null()) {
        std::vector<Rat> a;
        for (size_t i = 0; i < area.size(); ++i) a.push_back(as_rat(area[i], idx(sub(field, "area_assignment"), i)));
        L.area_assignment = a;
    }
    const Json& kappa = need(j, "kappa", field);
    if (!kappa.is_null()) L.kappa = as_rat(kappa, sub(field, "kappa"));
    L.a3 = get_bool(j, "a3", field, false);
    L.convention = convention_from(as_string(need(j, "convention", field), sub(field, "convention")), sub(field, "convention"));
    return L;
}

Json to_json(const ThreefoldLagrangian& T) {
    Json blocks = Json::array();
    for (const auto& b : T.blocks)
        blocks.push_back(Json{{"name", b.name}, {"repeats", b.repeats}, {"placement", pos_json(b.placement)}});
    return Json{{"id", T.id},
                {"n", T.n},
                {"base3", to_json(T.base3)},
                {"blocks", blocks},
                {"fiber_piece", to_json(T.fiber_piece)},
                {"budget", Json{{"r_prime", T.budget.r_prime}, {"eta", T.budget.eta}, {"eta_tilde", T.budget.eta_tilde}}},
                {"r", T.r},
                {"displaced_pair", T.displaced_pair},
                {"displaced_base", T.displaced_base ? to_json(*T.displaced_base) : Json(nullptr)}};
}

ThreefoldLagrangian threefold_from_json(const Json& j, const std::string& field) {
    allow_only(j, {"id", "n", "base3", "blocks", "fiber_piece", "budget", "r", "displaced_pair", "displaced_base"}, field);
    ThreefoldLagrangian T;
    T.id = as_string(need(j, "id", field), sub(field, "id"));
    T.n = get_int(j, "n", field);
    T.base3 = loop_from_json(need(j, "base3", field), sub(field, "base3"));
    const Json& blocks = need(j, "blocks", field);
    for (size_t i = 0; i < blocks.size(); ++i) {
        const std::string f = idx(sub(field, "blocks"), i);
        RotationBlock b;
        b.name = as_string(need(blocks[i], "name", f), sub(f, "name"));
        b.repeats = as_int(need(blocks[i], "repeats", f), sub(f, "repeats"), std::numeric_limits<long>::min());
        b.placement = pos_from(need(blocks[i], "placement", f), sub(f, "placement"));
        T.blocks.push_back(b);
    }
    T.fiber_piece = fibered_from_json(need(j, "fiber_piece", field), sub(field, "fiber_piece"));
    const Json& bud = need(j, "budget", field);
    const std::string bf = sub(field, "budget");
    T.budget = {get_int(bud, "r_prime", bf, 1), get_int(bud, "eta", bf), get_int(bud, "eta_tilde", bf)};
    T.r = as_int(need(j, "r", field), sub(field, "r"), 1);
    T.displaced_pair = get_bool(j, "displaced_pair", field, false);
    const Json& db = need(j, "displaced_base", field);
    if (!db.is_null()) T.displaced_base = loop_from_json(db, sub(field, "displaced_base"));
    return T;
}

Json to_json(const Construction& c) {
    Json j;
    j["format"] = "bpl-construction";
    j["version"] = 1;
    j["kind"] = construction_kind_name(c.kind);
    j["spec"] = c.spec;
    j["notes"] = c.notes;
    if (c.fibered) j["fibered"] = to_json(*c.fibered);
    if (c.pair) j["pair"] = Json{{"L", to_json(c.pair->first)}, {"Lp", to_json(c.pair->second)}};
    if (c.threefold) j["threefold"] = to_json(*c.threefold);
    return j;
}

Construction construction_from_json(const Json& j) {
    if (!j.is_object()) schema("<root>", "expected an object");
    if (as_string(need(j, "format", ""), "format") != "bpl-construction") schema("format", "expected 'bpl-construction'");
    if (get_int(j, "version", "") != 1) schema("version", "unsupported version");
    allow_only(j, {"format", "version", "kind", "spec", "notes", "fibered", "pair", "threefold"}, "");
    Construction c;
    const std::string kind = as_string(need(j, "kind", ""), "kind");
    c.spec = need(j, "spec", "");
    const Json& notes = need(j, "notes", "");
    for (size_t i = 0; i < notes.size(); ++i) c.notes.push_back(as_string(notes[i], idx("notes", i)));
    if (kind == "fibered") {
        c.kind = ConstructionKind::Fibered;
        c.fibered = fibered_from_json(need(j, "fibered", ""), "fibered");
    } else if (kind == "pair") {
        c.kind = ConstructionKind::Pair;
        const Json& p = need(j, "pair", "");
        c.pair = std::make_pair(fibered_from_json(need(p, "L", "pair"), "pair.L"),
                                fibered_from_json(need(p, "Lp", "pair"), "pair.Lp"));
    } else if (kind == "threefold") {
        c.kind = ConstructionKind::Threefold;
        c.threefold = threefold_from_json(need(j, "threefold", ""), "threefold");
    } else {
        schema("kind", "unknown construction kind '" + kind + "'");
    }
    return c;
}

}  // namespace bpl
